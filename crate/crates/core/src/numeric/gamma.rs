//! Log-Gamma, reciprocal Gamma and shifted factorials.

use super::hp::HpComplex;
use crate::error::{Error, Result};
use rug::{Float, Integer, Rational};
use std::sync::OnceLock;

const BERNOULLI_MAX: usize = 400;

/// Even Bernoulli numbers B_0, B_2, …, B_400 as exact rationals.
fn bernoulli_even() -> &'static [Rational] {
    static TABLE: OnceLock<Vec<Rational>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // B_m = −1/(m+1) Σ_{k<m} C(m+1,k) B_k
        let mut all: Vec<Rational> = Vec::with_capacity(BERNOULLI_MAX + 1);
        all.push(Rational::from(1));
        for m in 1..=BERNOULLI_MAX {
            if m > 1 && m % 2 == 1 {
                all.push(Rational::new());
                continue;
            }
            let mut s = Rational::new();
            let mut binom = Integer::from(1);
            for (k, bk) in all.iter().enumerate() {
                if *bk != 0 {
                    s += Rational::from(&binom * bk.numer()) / bk.denom();
                }
                binom *= (m + 1 - k) as u32;
                binom /= (k + 1) as u32;
            }
            all.push(-s / Rational::from(m as u32 + 1));
        }
        all.into_iter().step_by(2).collect()
    })
}

fn pole_error(z: &HpComplex) -> Error {
    Error::Pole(format!("Gamma has a pole at {z}"))
}

/// Returns the nonpositive integer `z` sits on, if any.
fn gamma_pole(z: &HpComplex) -> Option<i64> {
    match z.nearest_integer() {
        Some((k, d)) if k <= 0 && d.is_zero() => Some(k),
        _ => None,
    }
}

/// Principal branch of log Γ(z).
///
/// Shifts the argument upward until the Stirling series converges to the
/// working precision, then subtracts the logs of the shift factors.
pub fn log_gamma(z: &HpComplex) -> Result<HpComplex> {
    if gamma_pole(z).is_some() {
        return Err(pole_error(z));
    }
    let out_prec = z.precision_bits();
    let prec = out_prec + 16;
    let z = z.with_precision(prec);
    let radius = (prec as f64 * 0.25).max(12.0);
    let (re, im) = z.to_f64_pair();
    let target_re = (radius * radius - im * im).max(1.0).sqrt().max(1.0);
    let shift = if re < target_re {
        (target_re - re).ceil() as u64
    } else {
        0
    };

    let mut correction = HpComplex::zero(prec);
    for j in 0..shift {
        let zj = z.add_rational(&Rational::from(j));
        correction = &correction + &zj.ln();
    }
    let w = z.add_rational(&Rational::from(shift));

    let half = Rational::from((1, 2));
    let lnw = w.ln();
    let two_pi = Float::with_val(prec, HpComplex::pi(prec) * 2u32);
    let mut acc = &(&w.add_rational(&-half.clone()) * &lnw) - &w;
    let half_log_2pi = Float::with_val(prec, two_pi.ln() / 2u32);
    acc = &acc + &HpComplex::from_real(half_log_2pi);

    let winv = w.recip();
    let winv2 = winv.sqr();
    let mut power = winv.clone();
    let eps = Float::with_val(prec, Float::i_exp(1, -(prec as i32)));
    let scale = acc.abs().max(&Float::with_val(prec, 1));
    let bern = bernoulli_even();
    for k in 1..bern.len() {
        let coef = Rational::from(&bern[k] / Rational::from((2 * k) * (2 * k - 1)));
        let term = power.scale_rational(&coef);
        acc = &acc + &term;
        if term.abs() < Float::with_val(prec, &eps * &scale) {
            break;
        }
        power = &power * &winv2;
    }
    Ok((&acc - &correction).with_precision(out_prec))
}

/// Γ(z), failing at poles.
pub fn gamma(z: &HpComplex) -> Result<HpComplex> {
    Ok(log_gamma(z)?.exp())
}

/// 1/Γ(z), which is entire and vanishes at the poles of Γ.
pub fn rgamma(z: &HpComplex) -> HpComplex {
    if gamma_pole(z).is_some() {
        return HpComplex::zero(z.precision_bits());
    }
    match log_gamma(z) {
        Ok(l) => (-l).exp(),
        Err(_) => HpComplex::zero(z.precision_bits()),
    }
}

/// Shifted factorial (α)_n with exact rational input.
pub fn pochhammer(alpha: &Rational, n: usize) -> Rational {
    let mut out = Rational::from(1);
    let mut f = alpha.clone();
    for _ in 0..n {
        out *= &f;
        f += 1;
    }
    out
}

/// Shifted factorial (α)_n for a high-precision complex argument.
pub fn pochhammer_hp(alpha: &HpComplex, n: usize) -> HpComplex {
    let mut out = HpComplex::one(alpha.precision_bits());
    let mut f = alpha.clone();
    let one = Rational::from(1);
    for _ in 0..n {
        out = &out * &f;
        f = f.add_rational(&one);
    }
    out
}

/// Γ(α+k)/Γ(α) for any integer k, exact.
///
/// Equals (α)_k for k ≥ 0 and 1/(α+k)_{−k} otherwise.
pub fn gamma_shift_ratio(alpha: &Rational, k: i64) -> Result<Rational> {
    if k >= 0 {
        Ok(pochhammer(alpha, k as usize))
    } else {
        let shifted = Rational::from(alpha + k);
        let p = pochhammer(&shifted, (-k) as usize);
        if p == 0 {
            return Err(Error::Pole(format!("Gamma({shifted}) in a shift ratio")));
        }
        Ok(Rational::from(1) / p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hp(re: f64, im: f64) -> HpComplex {
        HpComplex::from_f64(re, im, 128)
    }

    #[test]
    fn bernoulli_values() {
        let b = bernoulli_even();
        assert_eq!(b[1], Rational::from((1, 6)));
        assert_eq!(b[2], Rational::from((-1, 30)));
        assert_eq!(b[6], Rational::from((691, -2730)));
    }

    #[test]
    fn log_gamma_at_one_is_zero() {
        assert!(log_gamma(&hp(1.0, 0.0)).unwrap().abs_f64() < 1e-36);
        assert!(log_gamma(&hp(2.0, 0.0)).unwrap().abs_f64() < 1e-36);
    }

    #[test]
    fn log_gamma_half_is_log_sqrt_pi() {
        let got = log_gamma(&hp(0.5, 0.0)).unwrap();
        let pi = HpComplex::pi(128);
        let want = HpComplex::from_real(Float::with_val(128, pi.ln() / 2u32));
        assert!(got.rel_diff(&want, 1e-30) < 1e-35);
    }

    #[test]
    fn recurrence_at_complex_point() {
        let z = HpComplex::from_rationals(&Rational::from((3, 7)), &Rational::from(2), 128);
        let r = (&log_gamma(&z.add_rational(&Rational::from(1))).unwrap() - &log_gamma(&z).unwrap()).exp();
        assert!(r.rel_diff(&z, 1.0) < 1e-35);
    }

    #[test]
    fn poles_are_rejected() {
        assert!(matches!(log_gamma(&hp(0.0, 0.0)), Err(Error::Pole(_))));
        assert!(matches!(log_gamma(&hp(-3.0, 0.0)), Err(Error::Pole(_))));
        assert!(rgamma(&hp(-2.0, 0.0)).is_zero());
    }

    #[test]
    fn negative_arguments_keep_sign() {
        // Γ(−1/2) = −2√π
        let g = gamma(&hp(-0.5, 0.0)).unwrap();
        let want = -2.0 * std::f64::consts::PI.sqrt();
        assert!((g.re().to_f64() - want).abs() < 1e-14);
    }

    #[test]
    fn large_imaginary_argument() {
        // |Γ(1/2 + iy)|² = π / cosh(πy)
        let y = 40.0;
        let g = gamma(&hp(0.5, y)).unwrap();
        let want = std::f64::consts::PI / (std::f64::consts::PI * y).cosh();
        assert!((g.norm_sqr().to_f64() / want - 1.0).abs() < 1e-13);
    }

    #[test]
    fn pochhammer_small_cases() {
        assert_eq!(pochhammer(&Rational::from((5, 3)), 0), 1);
        assert_eq!(pochhammer(&Rational::from(2), 3), 24);
        assert_eq!(pochhammer(&Rational::from((1, 2)), 2), Rational::from((3, 4)));
        assert_eq!(gamma_shift_ratio(&Rational::from((1, 2)), -1).unwrap(), Rational::from(-2));
    }
}
