//! The operator 𝔉 = 𝔾_{στ}∘G_{τσ}∘𝔽_τ, its kernel form, and the Wilson
//! function transform ℱ on 𝒜·G_τ.

use super::gaussian::{tau_sigma_ratio, tau_sigma_tau_ratio, GaussianSpec, Twist};
use super::integrals::{frak_pairing, wilson_pairing, wilson_pairing_plus, KernelQuad};
use crate::daha::{Action, ParamSet, Poly, PolyRep};
use crate::error::{Error, Result};
use crate::numeric::{GammaProduct, HpComplex};
use crate::transform::{full_weight_product, inner_one_product, SpectralTransform, Variant};
use rug::Rational;
use serde::Serialize;

/// How 𝔉p is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FrakMethod {
    /// 𝔾_{στ}(G_{τσ}·𝔽_τ p)
    Composition,
    /// expansion of p in E_τ and 𝔏E_τ(·,γ) = G_{τστ}(γ)E_{στ}(·,γ)
    Basis,
    /// 𝒦⟨p, 𝔈(·,λ)⟩_{𝐭^τ} by quadrature
    Integral,
}

/// Generators whose images under χ are known explicitly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ChiGenerator {
    /// z ↦ −U₀^{στ} − T₁^{στ}
    Z,
    /// Y^τ ↦ Y^{στ}
    Y,
    /// T₁^τ ↦ T₁^{στ}
    T1,
}

fn g_at_base(t: &ParamSet, twist: Twist) -> GammaProduct {
    let g = GaussianSpec::twisted(t, twist);
    let g0 = t.tau().gamma0();
    GammaProduct::constant(Rational::from(1))
        .gamma(Rational::from(&g.offset + &g0), 1)
        .gamma(Rational::from(&g.offset - &g0), 1)
}

/// The polynomial transforms over 𝐭^τ and 𝐭^{στ} used by 𝔉 and ℱ.
///
/// Exact results are polynomials in λ relative to the constant
/// K = 𝒩_τ·G_{τστ}(γ₀^τ); [`FrakTransform::constant`] evaluates it.
pub struct FrakTransform {
    t: ParamSet,
    tau: SpectralTransform,
    sigma_tau: SpectralTransform,
}

impl FrakTransform {
    pub fn new(t: &ParamSet) -> Result<Self> {
        Ok(FrakTransform {
            t: t.clone(),
            tau: SpectralTransform::new(&t.tau(), Variant::Full)?,
            sigma_tau: SpectralTransform::new(&Twist::SigmaTau.apply(t), Variant::Full)?,
        })
    }

    pub fn params(&self) -> &ParamSet {
        &self.t
    }

    /// K = ⟨1,1⟩_{𝐭^τ} w_τ(−γ₀^τ) G_{τστ}(γ₀^τ) as a Gamma product.
    pub fn constant_product(&self) -> Result<GammaProduct> {
        let tt = self.t.tau();
        Ok(inner_one_product(&tt, Variant::Full)
            .times(&full_weight_product(&tt, 0)?)
            .times(&g_at_base(&self.t, Twist::TauSigmaTau)))
    }

    /// The constant carried by the composition route,
    /// ⟨1,1⟩_{𝐭^τ} w_{στ}(−γ₀^τ) G_{τσ}(γ₀^τ), divided by K. Equal to 1.
    pub fn composition_constant_ratio(&self) -> Result<Rational> {
        let tt = self.t.tau();
        let comp = inner_one_product(&tt, Variant::Full)
            .times(&full_weight_product(&Twist::SigmaTau.apply(&self.t), 0)?)
            .times(&g_at_base(&self.t, Twist::TauSigma));
        comp.ratio_to(&self.constant_product()?)
    }

    pub fn constant(&self, prec: u32) -> Result<HpComplex> {
        self.constant_product()?.value(prec)
    }

    /// 𝔉p/K through the polynomial transform pair.
    pub fn composition(&self, p: &Poly) -> Result<Poly> {
        let mut f = self.tau.forward(p)?;
        let support: Vec<usize> = f.support().collect();
        for m in support {
            f.set(m, f.get(m) * tau_sigma_ratio(&self.t, m));
        }
        let scale = self.composition_constant_ratio()?;
        Ok(self.sigma_tau.inverse(&f)?.poly.scale(&scale))
    }

    /// 𝔉p/K through the basis expansion p = Σ c_m E_τ(·,γ_m^τ).
    pub fn basis(&self, p: &Poly) -> Result<Poly> {
        let coeffs = self.tau.expand(p)?;
        let mut acc = Poly::zero();
        for (m, c) in coeffs.into_iter().enumerate() {
            if c != 0 {
                let r = c * tau_sigma_tau_ratio(&self.t, m)?;
                acc = &acc + &self.sigma_tau.basis(m)?.scale(&r);
            }
        }
        Ok(acc)
    }

    pub fn exact(&self, p: &Poly, method: FrakMethod) -> Result<Poly> {
        match method {
            FrakMethod::Composition => self.composition(p),
            FrakMethod::Basis => self.basis(p),
            FrakMethod::Integral => Err(Error::Admissibility("the integral route has no exact form".into())),
        }
    }

    /// (𝔉p)(λ) for each p, by the chosen route.
    pub fn values(&self, polys: &[Poly], lambda: &HpComplex, method: FrakMethod, q: &KernelQuad) -> Result<Vec<HpComplex>> {
        let k = self.constant(q.prec)?;
        match method {
            FrakMethod::Integral => {
                // 𝒦 = K/2t₁
                let two_t1 = Rational::from(self.t.t1() * 2u32);
                let kk = k.scale_rational(&(Rational::from(1) / two_t1));
                let r = frak_pairing(&self.t, polys, lambda, q)?;
                Ok(r.values.iter().map(|v| v * &kk).collect())
            }
            _ => polys
                .iter()
                .map(|p| Ok(&self.exact(p, method)?.eval_hp(lambda) * &k))
                .collect(),
        }
    }

    /// X acting on the source side, over 𝐭^τ.
    fn apply_source(&self, x: ChiGenerator, p: &Poly) -> Poly {
        let rep = PolyRep::new(&self.t.tau());
        match x {
            ChiGenerator::Z => p.mul_x(),
            ChiGenerator::Y => rep.y(p),
            ChiGenerator::T1 => rep.t1(p),
        }
    }

    /// χ(X) acting on the target side, over 𝐭^{στ}.
    fn apply_target(&self, x: ChiGenerator, q: &Poly) -> Poly {
        let rep = PolyRep::new(&Twist::SigmaTau.apply(&self.t));
        match x {
            ChiGenerator::Z => -&(&rep.u0(q) + &rep.t1(q)),
            ChiGenerator::Y => rep.y(q),
            ChiGenerator::T1 => rep.t1(q),
        }
    }

    /// 𝔉(Xp) − χ(X)(𝔉p), exact and relative to K.
    pub fn chi_residual(&self, x: ChiGenerator, p: &Poly) -> Result<Poly> {
        let lhs = self.composition(&self.apply_source(x, p))?;
        let rhs = self.apply_target(x, &self.composition(p)?);
        Ok(&lhs - &rhs)
    }

    /// ℱ e_γ = factor · e^σ_γ for e_γ = G_τE_τ(·,γ_m^τ): factor = (a+b)G_{τστ}(γ)/G_{τστ}(γ₀^τ).
    pub fn calf_basis_factor(&self, m: usize) -> Result<Rational> {
        Ok(Rational::from(self.t.t1() * 2u32) * tau_sigma_tau_ratio(&self.t, m)?)
    }

    /// ℱ(p·G_τ) = q·G_{στ}; returns q, exact.
    pub fn calf_exact(&self, p: &Poly) -> Result<Poly> {
        Ok(self.basis(p)?.scale(&Rational::from(self.t.t1() * 2u32)))
    }

    pub fn tau_transform(&self) -> &SpectralTransform {
        &self.tau
    }

    pub fn sigma_tau_transform(&self) -> &SpectralTransform {
        &self.sigma_tau
    }
}

/// An element p·G of 𝒜·G_τ (or of 𝒜·G_{στ} for the dual side).
#[derive(Clone, Debug, PartialEq)]
pub struct GaussianPoly {
    pub poly: Poly,
    pub twist: Twist,
}

impl GaussianPoly {
    pub fn eval(&self, t: &ParamSet, x: &HpComplex) -> Result<HpComplex> {
        Ok(&GaussianSpec::twisted(t, self.twist).eval(x)?.value * &self.poly.eval_hp(x))
    }
}

/// (ℱf)(λ) = {f, ℰ(·,λ)}_𝐭 for f = p·G_τ, by quadrature, one value per input.
pub fn calf_transform(t: &ParamSet, polys: &[Poly], lambda: &HpComplex, q: &KernelQuad) -> Result<Vec<HpComplex>> {
    Ok(wilson_pairing(t, polys, lambda, q)?.values)
}

/// (ℱ⁺f)(λ) = {f, ℰ⁺(·,λ)}⁺_𝐭 for f = p·G_τ with even p.
pub fn symmetric_calf_plus(t: &ParamSet, polys: &[Poly], lambda: &HpComplex, q: &KernelQuad) -> Result<Vec<HpComplex>> {
    if polys.iter().any(|p| !p.is_even()) {
        return Err(Error::NotSymmetric);
    }
    Ok(wilson_pairing_plus(t, polys, lambda, q)?.values)
}

/// ℱ⁺(p·G_τ) = q·G_{στ} with q exact, from ℱ⁺(G_τE⁺_τ(·,γ_{2n}^τ)) = G_{τστ} ratio · G_{στ}E⁺_{στ}(·,γ_{2n}^τ).
pub fn calf_plus_exact(t: &ParamSet, p: &Poly) -> Result<Poly> {
    let src = SpectralTransform::new(&t.tau(), Variant::Plus)?;
    let dst = SpectralTransform::new(&Twist::SigmaTau.apply(t), Variant::Plus)?;
    let mut acc = Poly::zero();
    for (n, c) in src.expand(p)?.into_iter().enumerate() {
        if c != 0 {
            acc = &acc + &dst.basis(n)?.scale(&(c * tau_sigma_tau_ratio(t, 2 * n)?));
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_and_basis_agree() {
        let t = ParamSet::canonical();
        let fr = FrakTransform::new(&t).unwrap();
        assert_eq!(fr.composition_constant_ratio().unwrap(), Rational::from(1));
        for k in 0..6 {
            let p = Poly::monomial(k);
            assert_eq!(fr.composition(&p).unwrap(), fr.basis(&p).unwrap(), "x^{k}");
        }
        let p2 = fr.tau_transform().family().p(2);
        assert_eq!(fr.composition(&p2).unwrap(), fr.basis(&p2).unwrap());
    }

    #[test]
    fn frak_of_one_is_the_constant() {
        let t = ParamSet::canonical();
        let fr = FrakTransform::new(&t).unwrap();
        assert_eq!(fr.basis(&Poly::one()).unwrap(), Poly::one());
    }

    #[test]
    fn chi_intertwines_exactly() {
        let t = ParamSet::canonical();
        let fr = FrakTransform::new(&t).unwrap();
        for (x, p) in [
            (ChiGenerator::Y, Poly::x()),
            (ChiGenerator::T1, Poly::monomial(2)),
            (ChiGenerator::Z, Poly::one()),
            (ChiGenerator::Z, Poly::from_i64(&[1, -2, 3])),
        ] {
            assert!(fr.chi_residual(x, &p).unwrap().is_zero(), "{x:?} on {p}");
        }
    }
}
