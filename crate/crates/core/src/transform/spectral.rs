//! Finitely supported functions on the spectrum and the dual action on them.

use super::weights::{inner_one_product, Variant, WeightTable};
use crate::daha::{ParamSet, Poly};
use crate::error::{Error, Result};
use crate::numeric::HpComplex;
use rug::Rational;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// The transcendental factor ⟨1,1⟩^inner · w₀^weight attached to an exact ratio,
/// with w₀ = w(−γ₀) (or ⟨1,1⟩⁺ and w⁺(γ₀) for the symmetric variant).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Scale {
    pub inner: i32,
    pub weight: i32,
}

impl Scale {
    pub const ONE: Scale = Scale { inner: 0, weight: 0 };
    pub const INNER: Scale = Scale { inner: 1, weight: 0 };
    pub const WEIGHT: Scale = Scale { inner: 0, weight: 1 };
    /// 𝒩 = ⟨1,1⟩ w₀
    pub const NORMALIZER: Scale = Scale { inner: 1, weight: 1 };

    pub fn times(self, other: Scale) -> Scale {
        Scale {
            inner: self.inner + other.inner,
            weight: self.weight + other.weight,
        }
    }

    /// log of the factor, evaluated through log-Gamma sums.
    pub fn log_value(&self, t: &ParamSet, variant: Variant, prec: u32) -> Result<HpComplex> {
        let mut acc = HpComplex::zero(prec);
        if self.inner != 0 {
            let l = inner_one_product(t, variant).log_value(prec)?;
            acc = &acc + &l.scale_rational(&Rational::from(self.inner));
        }
        if self.weight != 0 {
            let l = WeightTable::new(t, variant)?.base_log_weight(prec)?;
            acc = &acc + &l.scale_rational(&Rational::from(self.weight));
        }
        Ok(acc)
    }

    pub fn value(&self, t: &ParamSet, variant: Variant, prec: u32) -> Result<HpComplex> {
        Ok(self.log_value(t, variant, prec)?.exp())
    }
}

impl fmt::Display for Scale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<1,1>^{} w0^{}", self.inner, self.weight)
    }
}

/// A finitely supported function on the spectrum, stored as exact ratios times a [`Scale`].
///
/// For the full variant index m is the point −γ_m ∈ Γ; reading at the label
/// +γ₀ (which lies outside Γ) returns the value at −γ₀. For the symmetric
/// variant index n is the point γ_{2n} ∈ Γ⁺.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FiniteSpectralFunction {
    pub variant: Variant,
    #[serde(serialize_with = "ser_values")]
    values: BTreeMap<usize, Rational>,
    pub scale: Scale,
}

fn ser_values<S: serde::Serializer>(v: &BTreeMap<usize, Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = s.serialize_map(Some(v.len()))?;
    for (k, q) in v {
        map.serialize_entry(k, &q.to_string())?;
    }
    map.end()
}

impl FiniteSpectralFunction {
    pub fn zero(variant: Variant, scale: Scale) -> Self {
        FiniteSpectralFunction {
            variant,
            values: BTreeMap::new(),
            scale,
        }
    }

    /// The indicator of one spectral point, with trivial scale.
    pub fn indicator(variant: Variant, index: usize) -> Self {
        let mut f = Self::zero(variant, Scale::ONE);
        f.set(index, Rational::from(1));
        f
    }

    pub fn from_values(variant: Variant, scale: Scale, values: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut f = Self::zero(variant, scale);
        for (k, v) in values {
            f.set(k, v);
        }
        f
    }

    pub fn with_scale(mut self, scale: Scale) -> Self {
        self.scale = scale;
        self
    }

    /// Sets a value; zeros are not stored, so equality ignores them.
    pub fn set(&mut self, index: usize, value: Rational) {
        if value == 0 {
            self.values.remove(&index);
        } else {
            self.values.insert(index, value);
        }
    }

    pub fn get(&self, index: usize) -> Rational {
        self.values.get(&index).cloned().unwrap_or_default()
    }

    /// Reads at a label as produced by `neg_label`; `None` is +γ₀, read at −γ₀.
    pub fn get_label(&self, label: Option<usize>) -> Rational {
        self.get(label.unwrap_or(0))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.values.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.values.iter().map(|(k, v)| (*k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn scale_by(&self, c: &Rational) -> Self {
        Self::from_values(self.variant, self.scale, self.iter().map(|(k, v)| (k, Rational::from(v * c))))
    }

    /// Pointwise difference; both sides must carry the same scale.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.scale != other.scale || self.variant != other.variant {
            return Err(Error::Admissibility(format!(
                "spectral functions with scales {} and {} cannot be subtracted",
                self.scale, other.scale
            )));
        }
        let mut out = self.clone();
        for (k, v) in other.iter() {
            out.set(k, Rational::from(&self.get(k) - v));
        }
        Ok(out)
    }
}

/// A polynomial ratio times a transcendental [`Scale`].
#[derive(Clone, Debug, PartialEq)]
pub struct ScaledPoly {
    pub poly: Poly,
    pub scale: Scale,
}

/// Index m of a point γ ∈ Γ = {−γ_m}, with +γ₀ read as −γ₀.
pub fn spectral_index(t: &ParamSet, point: &Rational) -> Result<usize> {
    let g0 = t.gamma0();
    let off = Rational::from(point - &g0);
    if off.is_integer() && off >= 0 {
        // ã + n = −γ_{2n−1}; n = 0 is the sentinel +γ₀
        let n = off.numer().to_usize().unwrap_or(usize::MAX);
        return Ok(if n == 0 { 0 } else { 2 * n - 1 });
    }
    let off = Rational::from(-point) - &g0;
    if off.is_integer() && off >= 0 {
        return Ok(2 * off.numer().to_usize().unwrap_or(usize::MAX));
    }
    Err(Error::IndexResolution(format!("{point} is not in the spectrum")))
}

/// s₁ on indices: −γ_m ↦ γ_m. The pair −γ₀ ↔ +γ₀ collapses onto index 0.
pub fn reflect_index_one(m: usize) -> usize {
    match m {
        0 => 0,
        m if m % 2 == 0 => m - 1,
        m => m + 1,
    }
}

/// s₀ on indices: −γ_m ↦ 1 + γ_m.
pub fn reflect_index_zero(m: usize) -> usize {
    if m % 2 == 0 {
        m + 1
    } else {
        m - 1
    }
}

/// Generators of the dual algebra acting on spectral functions.
#[derive(Clone, Debug, PartialEq)]
pub enum SpectralOp {
    /// T₀^σ
    T0,
    /// T₁^σ
    T1,
    /// multiplication by p(z)
    Mul(Poly),
}

/// The point −γ_m of Γ.
pub fn spectral_point_value(t: &ParamSet, m: usize) -> Rational {
    -t.gamma(m)
}

/// Applies a dual generator:
/// (T₁^σ f)(γ) = t₁ f(γ) + c₁(γ;𝐭^σ)(f(−γ) − f(γ)),
/// (T₀^σ f)(γ) = u₁ f(γ) + c₀(γ;𝐭^σ)(f(1−γ) − f(γ)),
/// (p(z) f)(γ) = p(γ) f(γ).
pub fn spectral_action(t: &ParamSet, op: &SpectralOp, f: &FiniteSpectralFunction) -> Result<FiniteSpectralFunction> {
    if f.variant != Variant::Full {
        return Err(Error::Admissibility("the dual action is defined on the full spectrum only".into()));
    }
    t.require_exact()?;
    let [ad, bd, cd, dd] = t.abcd_dual();
    let mut out = FiniteSpectralFunction::zero(Variant::Full, f.scale);
    match op {
        SpectralOp::Mul(p) => {
            for (m, v) in f.iter() {
                out.set(m, p.eval(&spectral_point_value(t, m)) * v);
            }
        }
        SpectralOp::T1 | SpectralOp::T0 => {
            let reflect: fn(usize) -> usize = if *op == SpectralOp::T1 { reflect_index_one } else { reflect_index_zero };
            let mut points: Vec<usize> = f.support().flat_map(|m| [m, reflect(m)]).collect();
            points.sort_unstable();
            points.dedup();
            for m in points {
                let g = spectral_point_value(t, m);
                let (base, coeff) = if *op == SpectralOp::T1 {
                    let num = Rational::from(&ad + &g) * Rational::from(&bd + &g);
                    (t.t1().clone(), num / Rational::from(&g * 2u32))
                } else {
                    let num = Rational::from(&cd - &g) * Rational::from(&dd - &g);
                    (t.u1().clone(), num / (Rational::from(1) - Rational::from(&g * 2u32)))
                };
                let here = f.get(m);
                let there = f.get(reflect(m));
                out.set(m, base * &here + coeff * (there - &here));
            }
        }
    }
    Ok(out)
}
