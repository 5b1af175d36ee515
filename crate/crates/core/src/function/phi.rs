//! The function φ_λ(x;𝐭), the kernel 𝔈 and the non-symmetric Wilson function ℰ.

use super::gaussian::{GaussianSpec, MeromorphicValue, Twist};
use crate::daha::ParamSet;
use crate::error::{Error, Result};
use crate::numeric::{gamma, hyp_pfq_unit, rgamma, HpComplex};
use rug::Rational;

fn hp(q: &Rational, prec: u32) -> HpComplex {
    HpComplex::from_rational(q, prec)
}

fn rgamma_pm(center: &Rational, z: &HpComplex) -> HpComplex {
    &rgamma(&z.add_rational(center)) * &rgamma(&(-z).add_rational(center))
}

/// φ_λ(x;𝐭) as the sum of two balanced ₄F₃(1) series:
///
/// Γ(1−a−d)/(Γ(a+b)Γ(a+c)Γ(1−d±x)Γ(1−d̃±λ)) · ₄F₃(a±x, ã±λ; a+b, a+c, a+d)
/// + Γ(a+d−1)/(Γ(1+b−d)Γ(1+c−d)Γ(a±x)Γ(ã±λ)) · ₄F₃(1−d±x, 1−d̃±λ; 1+b−d, 1+c−d, 2−a−d).
///
/// Both series have balance 1. The function is entire in x and λ.
pub fn phi_lambda(t: &ParamSet, x: &HpComplex, lambda: &HpComplex, tol: f64) -> Result<MeromorphicValue> {
    let prec = x.precision_bits().min(lambda.precision_bits());
    let [a, b, c, d] = t.abcd();
    let [ad, _, _, dd] = t.abcd_dual();
    let one = Rational::from(1);
    let ad_sum = Rational::from(&a + &d);
    if ad_sum.is_integer() {
        return Err(Error::Pole(format!("a + d = {ad_sum} is an integer")));
    }
    let dm = Rational::from(&one - &d);
    let ddm = Rational::from(&one - &dd);

    let mut value = HpComplex::zero(prec);

    let pre1 = rgamma_pm(&dm, x) * rgamma_pm(&ddm, lambda);
    if !pre1.is_zero() {
        let k = gamma(&hp(&(Rational::from(&one - &ad_sum)), prec))?
            * rgamma(&hp(&Rational::from(&a + &b), prec))
            * rgamma(&hp(&Rational::from(&a + &c), prec));
        let nums = [x.add_rational(&a), (-x).add_rational(&a), lambda.add_rational(&ad), (-lambda).add_rational(&ad)];
        let dens = [hp(&Rational::from(&a + &b), prec), hp(&Rational::from(&a + &c), prec), hp(&ad_sum, prec)];
        let s = hyp_pfq_unit(&nums, &dens, tol)?.value;
        value = &value + &(&(&k * &pre1) * &s);
    }

    let pre2 = rgamma_pm(&a, x) * rgamma_pm(&ad, lambda);
    if !pre2.is_zero() {
        let bd1 = Rational::from(&b - &d) + 1u32;
        let cd1 = Rational::from(&c - &d) + 1u32;
        let k = gamma(&hp(&(Rational::from(&ad_sum - 1u32)), prec))? * rgamma(&hp(&bd1, prec)) * rgamma(&hp(&cd1, prec));
        let nums = [x.add_rational(&dm), (-x).add_rational(&dm), lambda.add_rational(&ddm), (-lambda).add_rational(&ddm)];
        let dens = [hp(&bd1, prec), hp(&cd1, prec), hp(&(Rational::from(2u32) - &ad_sum), prec)];
        let s = hyp_pfq_unit(&nums, &dens, tol)?.value;
        value = &value + &(&(&k * &pre2) * &s);
    }
    Ok(MeromorphicValue::entire(value))
}

/// δ(x) = (a+x)(b+x)
pub fn delta_at(t: &ParamSet, x: &HpComplex) -> HpComplex {
    let [a, b, _, _] = t.abcd();
    &x.add_rational(&a) * &x.add_rational(&b)
}

/// 𝔈(x,λ) = φ_λ(x;𝐭) + δ(x)δ_σ(λ)φ_λ(x;t₀,u₀,t₁+1,u₁), entire.
pub fn kernel_e_frak(t: &ParamSet, x: &HpComplex, lambda: &HpComplex, tol: f64) -> Result<MeromorphicValue> {
    let base = phi_lambda(t, x, lambda, tol)?.value;
    let shifted = phi_lambda(&t.shift_t1(), x, lambda, tol)?.value;
    let weyl = &delta_at(t, x) * &delta_at(&t.sigma(), lambda);
    Ok(MeromorphicValue::entire(&base + &(&weyl * &shifted)))
}

/// The prefactor G_τ(x)G_{στ}(λ), with poles at x = ±(1−d+n) and λ = ±(1−d̃+n).
pub fn wilson_gaussians(t: &ParamSet, x: &HpComplex, lambda: &HpComplex) -> Result<MeromorphicValue> {
    let gx = GaussianSpec::twisted(t, Twist::Tau).eval(x)?;
    let gl = GaussianSpec::twisted(t, Twist::SigmaTau).eval(lambda)?;
    Ok(gx.times(&gl))
}

/// ℰ(x,λ) = G_τ(x)G_{στ}(λ)𝔈(x,λ).
pub fn wilson_function_e(t: &ParamSet, x: &HpComplex, lambda: &HpComplex, tol: f64) -> Result<MeromorphicValue> {
    let g = wilson_gaussians(t, x, lambda)?;
    Ok(g.times(&kernel_e_frak(t, x, lambda, tol)?))
}

/// ℰ⁺(x,λ) = G_τ(x)G_{στ}(λ)φ_λ(x), the symmetric part of ℰ in x.
pub fn wilson_function_e_plus(t: &ParamSet, x: &HpComplex, lambda: &HpComplex, tol: f64) -> Result<MeromorphicValue> {
    let g = wilson_gaussians(t, x, lambda)?;
    Ok(g.times(&phi_lambda(t, x, lambda, tol)?))
}

/// Γ(1−a−d)/(Γ(a+b)Γ(a+c)), the constant of the polynomial reduction.
pub fn reduction_constant(t: &ParamSet, prec: u32) -> Result<HpComplex> {
    let [a, b, c, d] = t.abcd();
    let one = Rational::from(1);
    Ok(gamma(&hp(&(one - Rational::from(&a + &d)), prec))?
        * rgamma(&hp(&Rational::from(&a + &b), prec))
        * rgamma(&hp(&Rational::from(&a + &c), prec)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wilson::WilsonFamily;

    const PREC: u32 = 128;
    const TOL: f64 = 1e-14;

    fn im(y: f64) -> HpComplex {
        HpComplex::imag(y, PREC)
    }

    #[test]
    fn phi_is_self_dual() {
        let t = ParamSet::canonical();
        let lhs = phi_lambda(&t, &im(0.3), &im(0.7), TOL).unwrap().value;
        let rhs = phi_lambda(&t.sigma(), &im(0.7), &im(0.3), TOL).unwrap().value;
        assert!(lhs.rel_diff(&rhs, 0.0) < 1e-10, "{lhs} vs {rhs}");
    }

    #[test]
    fn phi_reduces_to_the_constant_at_gamma0() {
        let t = ParamSet::canonical();
        let x = im(0.3);
        let g0 = hp(&t.gamma0(), PREC);
        let v = phi_lambda(&t, &x, &g0, TOL).unwrap().value;
        let g = wilson_gaussians(&t, &x, &g0).unwrap().value;
        let want = reduction_constant(&t, PREC).unwrap();
        assert!((&v * &g).rel_diff(&want, 0.0) < 1e-10);
    }

    #[test]
    fn wilson_function_reduces_to_polynomials() {
        let t = ParamSet::canonical();
        let fam = WilsonFamily::new(&t).unwrap();
        let k = reduction_constant(&t, PREC).unwrap();
        for x in [im(0.3), HpComplex::from_f64(0.2, 0.5, PREC)] {
            for m in 0..4 {
                let lambda = hp(&-t.gamma(m), PREC);
                let e = wilson_function_e(&t, &x, &lambda, TOL).unwrap().value;
                let want = &k * &fam.e(m).unwrap().eval_hp(&x);
                assert!(e.rel_diff(&want, 0.0) < 1e-10, "m = {m}: {e} vs {want}");
            }
        }
    }

    #[test]
    fn wilson_function_is_self_dual() {
        let t = ParamSet::canonical();
        let (x, l) = (im(0.3), im(0.7));
        let lhs = wilson_function_e(&t, &x, &l, TOL).unwrap().value;
        let rhs = wilson_function_e(&t.sigma(), &l, &x, TOL).unwrap().value;
        assert!(lhs.rel_diff(&rhs, 0.0) < 1e-10, "{lhs} vs {rhs}");
    }
}
