//! The polynomial Fourier transform 𝔽 and its inverse 𝔾, in exact ratio form.

use super::spectral::{FiniteSpectralFunction, Scale, ScaledPoly};
use super::weights::{Variant, WeightTable};
use crate::daha::{ParamSet, Poly};
use crate::error::{Error, Result};
use crate::wilson::WilsonFamily;
use rug::Rational;
use std::sync::RwLock;

/// Everything needed to transform over one parameter set.
///
/// Basis element k is E(·,γ_k) for the full variant and E⁺(·,γ_{2k}) for the
/// symmetric one. All values are exact rationals; the constants ⟨1,1⟩ and
/// w₀ travel separately as a [`Scale`].
pub struct SpectralTransform {
    t: ParamSet,
    variant: Variant,
    family: WilsonFamily,
    weights: WeightTable,
    basis: RwLock<Vec<Poly>>,
}

/// Even part of a polynomial.
pub fn even_part(p: &Poly) -> Poly {
    Poly::new(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c.clone() } else { Rational::new() })
            .collect(),
    )
}

impl SpectralTransform {
    pub fn new(t: &ParamSet, variant: Variant) -> Result<Self> {
        Ok(SpectralTransform {
            t: t.clone(),
            variant,
            family: WilsonFamily::new(t)?,
            weights: WeightTable::new(t, variant)?,
            basis: RwLock::new(Vec::new()),
        })
    }

    pub fn params(&self) -> &ParamSet {
        &self.t
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn family(&self) -> &WilsonFamily {
        &self.family
    }

    pub fn weights(&self) -> &WeightTable {
        &self.weights
    }

    fn step(&self) -> usize {
        match self.variant {
            Variant::Full => 1,
            Variant::Plus => 2,
        }
    }

    pub fn basis(&self, k: usize) -> Result<Poly> {
        if let Some(p) = self.basis.read().unwrap().get(k) {
            return Ok(p.clone());
        }
        let mut cache = self.basis.write().unwrap();
        while cache.len() <= k {
            let j = cache.len();
            let p = match self.variant {
                Variant::Full => self.family.e(j)?,
                Variant::Plus => self.family.e_plus(j)?,
            };
            cache.push(p);
        }
        Ok(cache[k].clone())
    }

    /// Coefficients of p in the basis, by peeling off leading terms.
    pub fn expand(&self, p: &Poly) -> Result<Vec<Rational>> {
        if self.variant == Variant::Plus && !p.is_even() {
            return Err(Error::NotSymmetric);
        }
        let Some(deg) = p.degree() else {
            return Ok(Vec::new());
        };
        let top = deg / self.step();
        let mut rest = p.clone();
        let mut out = vec![Rational::new(); top + 1];
        for k in (0..=top).rev() {
            let b = self.basis(k)?;
            let c = rest.coeff(k * self.step()) / b.leading();
            if c != 0 {
                rest = &rest - &b.scale(&c);
                out[k] = c;
            }
        }
        debug_assert!(rest.is_zero());
        Ok(out)
    }

    /// Relative weight at basis index k.
    pub fn relative_weight(&self, k: usize) -> Result<Rational> {
        self.weights.relative(k)
    }

    /// ⟨B_k, B_k⟩/⟨1,1⟩ = w₀/w at index k.
    pub fn norm_ratio(&self, k: usize) -> Result<Rational> {
        Ok(Rational::from(1) / self.relative_weight(k)?)
    }

    /// ⟨f,g⟩/⟨1,1⟩ (resp. ⟨f,g⟩⁺/⟨1,1⟩⁺), exact.
    ///
    /// Full variant: Σ f̂_k ĝ_k ⟨B_k,B_k⟩/⟨1,1⟩ over the expansions. Symmetric
    /// variant: Δ⁺ is even, so only the even part of fg contributes and its
    /// constant basis coefficient is the answer.
    pub fn inner_ratio(&self, f: &Poly, g: &Poly) -> Result<Rational> {
        match self.variant {
            Variant::Full => {
                let fe = self.expand(f)?;
                let ge = self.expand(g)?;
                let mut acc = Rational::new();
                for (k, (a, b)) in fe.iter().zip(&ge).enumerate() {
                    if *a != 0 && *b != 0 {
                        acc += Rational::from(a * b) * self.norm_ratio(k)?;
                    }
                }
                Ok(acc)
            }
            Variant::Plus => {
                let h = even_part(&(f * g));
                Ok(self.expand(&h)?.into_iter().next().unwrap_or_default())
            }
        }
    }

    /// 𝔽p: the value at index k is ⟨p, B_k⟩, which is p̂_k ⟨B_k,B_k⟩.
    pub fn forward(&self, p: &Poly) -> Result<FiniteSpectralFunction> {
        let coeffs = self.expand(p)?;
        let mut out = FiniteSpectralFunction::zero(self.variant, Scale::INNER);
        for (k, c) in coeffs.into_iter().enumerate() {
            if c != 0 {
                out.set(k, c * self.norm_ratio(k)?);
            }
        }
        Ok(out)
    }

    /// 𝔾f = Σ_k f(k) B_k w(k).
    pub fn inverse(&self, f: &FiniteSpectralFunction) -> Result<ScaledPoly> {
        if f.variant != self.variant {
            return Err(Error::Admissibility("spectral function belongs to the other variant".into()));
        }
        let mut acc = Poly::zero();
        for (k, v) in f.iter() {
            acc = &acc + &self.basis(k)?.scale(&(Rational::from(v * &self.relative_weight(k)?)));
        }
        Ok(ScaledPoly {
            poly: acc,
            scale: f.scale.times(Scale::WEIGHT),
        })
    }

    /// [f,g] = Σ_γ f(γ) g(γ) w(γ), with the scale of the product.
    pub fn bracket(&self, f: &FiniteSpectralFunction, g: &FiniteSpectralFunction) -> Result<(Rational, Scale)> {
        let mut acc = Rational::new();
        for (k, v) in f.iter() {
            let w = g.get(k);
            if w != 0 {
                acc += Rational::from(v * &w) * self.relative_weight(k)?;
            }
        }
        Ok((acc, f.scale.times(g.scale).times(Scale::WEIGHT)))
    }
}

pub fn forward_f(t: &ParamSet, p: &Poly) -> Result<FiniteSpectralFunction> {
    SpectralTransform::new(t, Variant::Full)?.forward(p)
}

pub fn inverse_g(t: &ParamSet, f: &FiniteSpectralFunction) -> Result<ScaledPoly> {
    SpectralTransform::new(t, Variant::Full)?.inverse(f)
}

/// ⟨E(·,γ_m),E(·,γ_m)⟩/⟨1,1⟩ = w(−γ₀)/w(−γ_m).
pub fn norm_ratio(t: &ParamSet, m: usize) -> Result<Rational> {
    SpectralTransform::new(t, Variant::Full)?.norm_ratio(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norms_agree_with_orthogonality_route() {
        // ⟨B,B⟩/⟨1,1⟩ is also the constant coefficient of B² in the basis,
        // since every other basis element is orthogonal to 1.
        let t = ParamSet::canonical();
        for variant in [Variant::Full, Variant::Plus] {
            let tr = SpectralTransform::new(&t, variant).unwrap();
            for k in 0..5 {
                let b = tr.basis(k).unwrap();
                let sq = &b * &b;
                let c0 = tr.expand(&sq).unwrap()[0].clone();
                assert_eq!(c0, tr.norm_ratio(k).unwrap(), "{variant:?} k = {k}");
            }
        }
    }

    #[test]
    fn forward_of_one_and_of_p3() {
        let t = ParamSet::canonical();
        let tr = SpectralTransform::new(&t, Variant::Full).unwrap();
        let f = tr.forward(&Poly::one()).unwrap();
        assert_eq!(f, FiniteSpectralFunction::indicator(Variant::Full, 0).with_scale(Scale::INNER));
        let p3 = tr.family().p(3);
        let f3 = tr.forward(&p3).unwrap();
        assert_eq!(f3.support().collect::<Vec<_>>(), vec![3]);
        let v = tr.family().value_at_minus_x0(3);
        let norm_p3 = Rational::from(&v * &v) * tr.norm_ratio(3).unwrap();
        assert_eq!(f3.get(3), norm_p3 / v);
    }

    #[test]
    fn inverse_of_base_indicator() {
        let t = ParamSet::canonical();
        let g = inverse_g(&t, &FiniteSpectralFunction::indicator(Variant::Full, 0)).unwrap();
        assert_eq!(g.poly, Poly::one());
        assert_eq!(g.scale, Scale::WEIGHT);
    }
}
