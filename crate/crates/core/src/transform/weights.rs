//! Continuous weights Δ, Δ⁺ and the discrete spectral weights w, w⁺.

use crate::daha::ParamSet;
use crate::error::{Error, Result};
use crate::numeric::{log_gamma, GammaProduct, HpComplex};
use rug::{Integer, Rational};
use serde::Serialize;
use std::sync::RwLock;

/// Which of the two weight/form families is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Δ, ⟨·,·⟩, w on Γ = {−γ_m}.
    Full,
    /// Δ⁺, ⟨·,·⟩⁺, w⁺ on Γ⁺ = {γ_{2n}}.
    Plus,
}

fn sum_log_gammas(args: &[HpComplex]) -> Result<HpComplex> {
    let mut acc = HpComplex::zero(args[0].precision_bits());
    for z in args {
        acc = &acc + &log_gamma(z)?;
    }
    Ok(acc)
}

/// Δ(x) = Γ(a+x)Γ(a+1−x)Γ(b+x)Γ(b+1−x)Γ(c±x)Γ(d±x)/(Γ(2x)Γ(1−2x)) and
/// Δ⁺(x) = Γ(a±x)Γ(b±x)Γ(c±x)Γ(d±x)/Γ(±2x).
///
/// The reciprocal Gamma pair is evaluated through the reflection formula,
/// so x = 0 is not special.
pub fn weight_delta(t: &ParamSet, x: &HpComplex, variant: Variant) -> Result<HpComplex> {
    let prec = x.precision_bits();
    let [a, b, c, d] = t.abcd();
    let one = Rational::from(1);
    let plus = |q: &Rational| x.add_rational(q);
    let minus = |q: &Rational| (-x).add_rational(q);
    let pi = HpComplex::pi(prec);
    let two_pi_x = x.scale(&pi).scale_rational(&Rational::from(2));
    let sine = two_pi_x.sin().scale(&pi.clone().recip());
    let (args, tail) = match variant {
        Variant::Full => {
            let a1 = Rational::from(&a + &one);
            let b1 = Rational::from(&b + &one);
            let args = vec![plus(&a), minus(&a1), plus(&b), minus(&b1), plus(&c), minus(&c), plus(&d), minus(&d)];
            // 1/(Γ(2x)Γ(1−2x)) = sin(2πx)/π
            (args, sine)
        }
        Variant::Plus => {
            let args = vec![plus(&a), minus(&a), plus(&b), minus(&b), plus(&c), minus(&c), plus(&d), minus(&d)];
            // 1/(Γ(2x)Γ(−2x)) = −2x sin(2πx)/π
            (args, (&sine * x).scale_rational(&Rational::from(-2)))
        }
    };
    Ok(&sum_log_gammas(&args)?.exp() * &tail)
}

fn factorial(n: usize) -> Rational {
    Rational::from(Integer::from(Integer::factorial(n as u32)))
}

fn signed(n: usize) -> Rational {
    Rational::from(if n % 2 == 0 { 1 } else { -1 })
}

/// w(−γ_m;𝐭) as a Gamma product in the dual parameters ã, b̃, c̃, d̃.
///
/// On the left half (−γ_{2n} = −(ã+n)) this is the residue of Δ(·;𝐭^σ);
/// on the right half (−γ_{2n−1} = ã+n) it is minus the residue, which is
/// the normalization that makes both weight symmetries hold.
pub fn full_weight_product(t: &ParamSet, m: usize) -> Result<GammaProduct> {
    let [ad, bd, cd, dd] = t.abcd_dual();
    let g = Rational::from(-&t.gamma(m));
    let one = Rational::from(1);
    // sin(2πγ) is written as ±sin(2π(ã+n)) so that all weights share one sine class
    let n = m.div_ceil(2);
    let sine_arg = Rational::from(&ad + n as u32) * 2u32;
    let common = |p: GammaProduct| {
        p.gamma(Rational::from(&bd + &g), 1)
            .gamma(Rational::from(&bd + &one) - &g, 1)
            .gamma(Rational::from(&cd + &g), 1)
            .gamma(Rational::from(&cd - &g), 1)
            .gamma(Rational::from(&dd + &g), 1)
            .gamma(Rational::from(&dd - &g), 1)
            .sine(sine_arg.clone(), 1)
            .pi(-1)
    };
    let p = if m % 2 == 0 {
        // Γ(ã+1−γ) (−1)^n/n!, and γ = −(ã+n) flips the sine
        GammaProduct::constant(-signed(n) / factorial(n)).gamma(Rational::from(&ad + &one) - &g, 1)
    } else {
        // Γ(ã+γ) (−1)^{n−1}/(n−1)!
        GammaProduct::constant(signed(n - 1) / factorial(n - 1)).gamma(Rational::from(&ad + &g), 1)
    };
    Ok(common(p))
}

/// w⁺(γ_{2n};𝐭) = Res_{y=γ_{2n}} Δ⁺(y;𝐭^σ) as a Gamma product.
pub fn plus_weight_product(t: &ParamSet, n: usize) -> Result<GammaProduct> {
    let [ad, bd, cd, dd] = t.abcd_dual();
    let g = t.gamma(2 * n);
    // Γ(ã−y) near y = ã+n contributes (−1)^{n+1}/n!; the reflection pair gives −2γ sin(2πγ)/π.
    let coeff = signed(n + 1) / factorial(n) * Rational::from(&g * -2i32);
    Ok(GammaProduct::constant(coeff)
        .gamma(Rational::from(&ad + &g), 1)
        .gamma(Rational::from(&bd + &g), 1)
        .gamma(Rational::from(&bd - &g), 1)
        .gamma(Rational::from(&cd + &g), 1)
        .gamma(Rational::from(&cd - &g), 1)
        .gamma(Rational::from(&dd + &g), 1)
        .gamma(Rational::from(&dd - &g), 1)
        .sine(Rational::from(&g * 2u32), 1)
        .pi(-1))
}

fn weight_product(t: &ParamSet, index: usize, variant: Variant) -> Result<GammaProduct> {
    match variant {
        Variant::Full => full_weight_product(t, index),
        Variant::Plus => plus_weight_product(t, index),
    }
}

/// ⟨1,1⟩ = Γ(a+b+1)Γ(a+c)Γ(a+d)Γ(b+c)Γ(b+d)Γ(c+d)/Γ(a+b+c+d), and
/// ⟨1,1⟩⁺ = 2⟨1,1⟩/(a+b).
pub fn inner_one_product(t: &ParamSet, variant: Variant) -> GammaProduct {
    let [a, b, c, d] = t.abcd();
    let ab = Rational::from(&a + &b);
    let (coeff, first) = match variant {
        Variant::Full => (Rational::from(1), Rational::from(&ab + 1)),
        Variant::Plus => (Rational::from(2), ab.clone()),
    };
    GammaProduct::constant(coeff)
        .gamma(first, 1)
        .gamma(Rational::from(&a + &c), 1)
        .gamma(Rational::from(&a + &d), 1)
        .gamma(Rational::from(&b + &c), 1)
        .gamma(Rational::from(&b + &d), 1)
        .gamma(Rational::from(&c + &d), 1)
        .gamma(t.abcd_sum(), -1)
}

fn check_weight_admissible(t: &ParamSet) -> Result<()> {
    t.require_exact()?;
    let two_g0 = Rational::from(&t.gamma0() * 2u32);
    if two_g0.is_integer() {
        return Err(Error::Admissibility(format!("2(t0+t1) = {two_g0} is an integer, the spectral weights vanish")));
    }
    Ok(())
}

/// w(−γ_m)/w(−γ₀) (full) or w⁺(γ_{2m})/w⁺(γ₀) (plus), exact.
pub fn relative_weight_w(t: &ParamSet, m: usize, variant: Variant) -> Result<Rational> {
    check_weight_admissible(t)?;
    let base = weight_product(t, 0, variant)?;
    weight_product(t, m, variant)?.ratio_to(&base)
}

/// Relative weights of one parameter set, memoized.
///
/// The absolute weight at the base point is kept as a log so that every
/// transform identity can be checked on exact rationals.
pub struct WeightTable {
    t: ParamSet,
    variant: Variant,
    base: GammaProduct,
    relative: RwLock<Vec<Rational>>,
}

impl WeightTable {
    pub fn new(t: &ParamSet, variant: Variant) -> Result<Self> {
        check_weight_admissible(t)?;
        Ok(WeightTable {
            t: t.clone(),
            variant,
            base: weight_product(t, 0, variant)?,
            relative: RwLock::new(vec![Rational::from(1)]),
        })
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Relative weight at index m (−γ_m for the full variant, γ_{2m} for plus).
    pub fn relative(&self, m: usize) -> Result<Rational> {
        if let Some(r) = self.relative.read().unwrap().get(m) {
            return Ok(r.clone());
        }
        let mut table = self.relative.write().unwrap();
        while table.len() <= m {
            let k = table.len();
            let r = weight_product(&self.t, k, self.variant)?.ratio_to(&self.base)?;
            if r == 0 {
                return Err(Error::DivisionByZero(format!("relative weight at index {k} vanishes")));
            }
            table.push(r);
        }
        Ok(table[m].clone())
    }

    /// log w(−γ₀) (resp. log w⁺(γ₀)).
    pub fn base_log_weight(&self, prec: u32) -> Result<HpComplex> {
        self.base.log_value(prec)
    }

    pub fn base_product(&self) -> &GammaProduct {
        &self.base
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    const PREC: u32 = 128;

    #[test]
    fn delta_symmetries() {
        let t = ParamSet::canonical();
        let x = HpComplex::imag(0.37, PREC);
        let p = weight_delta(&t, &x, Variant::Plus).unwrap();
        let pm = weight_delta(&t, &-&x, Variant::Plus).unwrap();
        assert!(p.rel_diff(&pm, 0.0) < 1e-30);
        // Δ(x) = c₁(−x)Δ⁺(x) with c₁(x) = (a+x)(b+x)/(2x)
        let [a, b, _, _] = t.abcd();
        let mx = -&x;
        let c1 = (&mx.add_rational(&a) * &mx.add_rational(&b)) / mx.scale_rational(&q(2, 1));
        let full = weight_delta(&t, &x, Variant::Full).unwrap();
        assert!(full.rel_diff(&(&c1 * &p), 0.0) < 1e-30);
    }

    #[test]
    fn delta_plus_decay_on_the_twisted_set() {
        let base = ParamSet::canonical();
        let t = base.tau();
        let [a, b, c, d] = base.abcd();
        let y = 30.0f64;
        let v = weight_delta(&t, &HpComplex::imag(y, PREC), Variant::Plus).unwrap().abs_f64();
        let power = 2.0 * (a + b + c - d).to_f64() - 1.0;
        let model = y.powf(power) * (-2.0 * std::f64::consts::PI * y).exp();
        let r = v / model;
        assert!(r > 0.0 && r.is_finite());
        // the envelope fixes the growth, not the constant; compare against y = 60
        let v2 = weight_delta(&t, &HpComplex::imag(2.0 * y, PREC), Variant::Plus).unwrap().abs_f64();
        let model2 = (2.0 * y).powf(power) * (-4.0 * std::f64::consts::PI * y).exp();
        let r2 = v2 / model2;
        assert!((r / r2) < 2.0 && (r2 / r) < 2.0, "{r} {r2}");
    }

    #[test]
    fn relative_weights_telescope() {
        let t = ParamSet::canonical();
        assert_eq!(relative_weight_w(&t, 0, Variant::Full).unwrap(), 1);
        let table = WeightTable::new(&t, Variant::Full).unwrap();
        let [ad, bd, cd, dd] = t.abcd_dual();
        // w(−γ_{2n+2})/w(−γ_{2n}) from the left-half display, γ = −(ã+n)
        for n in 0..5usize {
            let g = Rational::from(-(&ad + Rational::from(n)));
            let gn = Rational::from(&g - 1);
            let step = Rational::from(-1) / Rational::from(n as u32 + 1)
                / Rational::from(&bd + &gn)
                * (Rational::from(&bd + 1) - &g)
                / Rational::from(&cd + &gn)
                * Rational::from(&cd - &g)
                / Rational::from(&dd + &gn)
                * Rational::from(&dd - &g);
            let want = step * (Rational::from(&ad + 1) - &g);
            let got = table.relative(2 * n + 2).unwrap() / table.relative(2 * n).unwrap();
            assert_eq!(got, want, "n = {n}");
        }
    }

    /// Residue of Δ(·;𝐭^σ) at a rational point by a symmetric difference quotient.
    fn numeric_residue(t: &ParamSet, at: &Rational) -> HpComplex {
        let dual = t.sigma();
        let eps = Rational::from((1, 10i64.pow(15)));
        let up = weight_delta(&dual, &HpComplex::from_rational(&Rational::from(at + &eps), PREC), Variant::Full).unwrap();
        let down = weight_delta(&dual, &HpComplex::from_rational(&Rational::from(at - &eps), PREC), Variant::Full).unwrap();
        (&up - &down).scale_rational(&(eps / 2))
    }

    #[test]
    fn residue_oracle_for_the_first_weights() {
        let t = ParamSet::canonical();
        let base = numeric_residue(&t, &-t.gamma(0));
        let w0 = full_weight_product(&t, 0).unwrap().value(PREC).unwrap();
        assert!(base.rel_diff(&w0, 0.0) < 1e-8);
        // left half: the weight is the residue
        let r2 = &numeric_residue(&t, &-t.gamma(2)) / &base;
        let want2 = HpComplex::from_rational(&relative_weight_w(&t, 2, Variant::Full).unwrap(), PREC);
        assert!(r2.rel_diff(&want2, 0.0) < 1e-8);
        // right half: the weight is minus the residue
        let r1 = &numeric_residue(&t, &-t.gamma(1)) / &base;
        let want1 = HpComplex::from_rational(&-relative_weight_w(&t, 1, Variant::Full).unwrap(), PREC);
        assert!(r1.rel_diff(&want1, 0.0) < 1e-8, "{r1} vs {want1}");
    }

    #[test]
    fn inner_one_variants_differ_by_half_a_plus_b() {
        let t = ParamSet::canonical();
        let full = inner_one_product(&t, Variant::Full);
        let plus = inner_one_product(&t, Variant::Plus);
        assert_eq!(full.ratio_to(&plus).unwrap(), q(21, 35));
    }
}
