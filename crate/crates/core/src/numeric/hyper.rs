//! Generalized hypergeometric series at unit argument.

use super::hp::HpComplex;
use crate::error::{Error, Result};
use rug::{Float, Rational};

/// Largest number of terms a non-terminating sum may use.
pub const DEFAULT_TERM_CAP: usize = 1_000_000;

/// Outcome of a series evaluation.
#[derive(Clone, Debug)]
pub struct SeriesResult {
    pub value: HpComplex,
    pub terms_used: usize,
    pub tail_bound: Float,
}

#[derive(Clone, Copy, Debug)]
pub struct SeriesOptions {
    pub tol: f64,
    pub term_cap: usize,
}

impl Default for SeriesOptions {
    fn default() -> Self {
        SeriesOptions {
            tol: 1e-10,
            term_cap: DEFAULT_TERM_CAP,
        }
    }
}

/// A parameter sitting on a nonpositive integer, up to rounding noise.
fn nonpositive_integer(z: &HpComplex) -> Option<u64> {
    let prec = z.precision_bits() as i32;
    let (re, im) = z.to_f64_pair();
    if re > 0.5 {
        return None;
    }
    let k = re.round();
    let slack = Float::with_val(z.precision_bits(), Float::i_exp(1, 24 - prec)) * (1.0 + k.abs());
    let dre = Float::with_val(z.precision_bits(), z.re() - k).abs();
    if dre <= slack && Float::with_val(53, im.abs()) <= slack {
        Some((-k) as u64)
    } else {
        None
    }
}

/// pFq(numerators; denominators; 1) in high precision.
///
/// A numerator at a nonpositive integer −n truncates the sum after n+1
/// terms. Otherwise the series is summed to N₀·2^j terms and the partial
/// sums are Richardson-extrapolated, removing the tail terms N^{−s}, N^{−s−1}, …
/// where s = Σdenominators − Σnumerators.
pub fn hyp_pfq_unit(nums: &[HpComplex], dens: &[HpComplex], tol: f64) -> Result<SeriesResult> {
    hyp_pfq_unit_with(nums, dens, SeriesOptions { tol, ..Default::default() })
}

pub fn hyp_pfq_unit_with(nums: &[HpComplex], dens: &[HpComplex], opts: SeriesOptions) -> Result<SeriesResult> {
    let prec = nums
        .iter()
        .chain(dens)
        .map(HpComplex::precision_bits)
        .min()
        .unwrap_or(super::hp::MIN_PRECISION);

    let terminate = nums.iter().filter_map(nonpositive_integer).min();
    if let Some(n) = terminate {
        if let Some(m) = dens.iter().filter_map(nonpositive_integer).min() {
            if m < n {
                return Err(Error::DegenerateDenominator(format!(
                    "denominator parameter −{m} reached before the series terminates"
                )));
            }
        }
        let mut sum = HpComplex::one(prec);
        let mut term = HpComplex::one(prec);
        for k in 0..n as usize {
            term = &term * &ratio(nums, dens, k, prec);
            sum = &sum + &term;
        }
        return Ok(SeriesResult {
            value: sum,
            terms_used: n as usize + 1,
            tail_bound: Float::new(prec),
        });
    }
    if let Some(m) = dens.iter().filter_map(nonpositive_integer).min() {
        return Err(Error::DegenerateDenominator(format!("denominator parameter −{m}")));
    }

    let mut s = HpComplex::zero(prec);
    for d in dens {
        s = &s + d;
    }
    for a in nums {
        s = &s - a;
    }
    if *s.re() <= 0 {
        return Err(Error::Divergence(format!("{s}")));
    }

    let size = nums
        .iter()
        .chain(dens)
        .map(HpComplex::abs_f64)
        .fold(1.0f64, f64::max);
    let n0 = ((2.0 * size * size).ceil() as usize).max(32);

    let two = Float::with_val(prec, 2);
    let one = Rational::from(1);
    let mut table: Vec<Vec<HpComplex>> = Vec::new();
    let mut sum = HpComplex::zero(prec);
    let mut term = HpComplex::one(prec);
    let mut k = 0usize;
    let mut next = n0;
    let mut last_diff = f64::INFINITY;
    let mut shifted = nums.to_vec();
    let mut dshifted = dens.to_vec();
    loop {
        while k < next {
            sum = &sum + &term;
            let mut num = HpComplex::one(prec);
            for a in &shifted {
                num = &num * a;
            }
            let mut den = HpComplex::from_rational(&Rational::from(k + 1), prec);
            for b in &dshifted {
                den = &den * b;
            }
            term = &term * &(&num / &den);
            for a in shifted.iter_mut() {
                *a = a.add_rational(&one);
            }
            for b in dshifted.iter_mut() {
                *b = b.add_rational(&one);
            }
            k += 1;
        }
        let mut row = vec![sum.clone()];
        if let Some(prev) = table.last() {
            for (j, p) in prev.iter().enumerate() {
                let e = s.add_rational(&Rational::from(j));
                let f = e.exp_base(&two);
                let denom = f.add_rational(&-one.clone());
                row.push(&(&(&f * &row[j]) - p) / &denom);
            }
        }
        let level = table.len();
        if level >= 2 {
            let cur = &row[level];
            let prev = &table[level - 1][level - 1];
            let diff = (cur - prev).abs_f64();
            let scale = cur.abs_f64().max(f64::MIN_POSITIVE);
            if diff <= opts.tol * scale && last_diff <= opts.tol * scale * 16.0 {
                return Ok(SeriesResult {
                    value: cur.clone(),
                    terms_used: k,
                    tail_bound: Float::with_val(prec, diff),
                });
            }
            last_diff = diff;
        }
        table.push(row);
        next = k * 2;
        if next > opts.term_cap {
            return Err(Error::ConvergenceBudget { terms: k });
        }
    }
}

fn ratio(nums: &[HpComplex], dens: &[HpComplex], k: usize, prec: u32) -> HpComplex {
    let kq = Rational::from(k);
    let mut num = HpComplex::one(prec);
    for a in nums {
        num = &num * &a.add_rational(&kq);
    }
    let mut den = HpComplex::from_rational(&Rational::from(k + 1), prec);
    for b in dens {
        den = &den * &b.add_rational(&kq);
    }
    &num / &den
}

/// Exact pFq(numerators; denominators; 1) for a terminating series.
pub fn hyp_pfq_unit_exact(nums: &[Rational], dens: &[Rational]) -> Result<Rational> {
    let n = nums
        .iter()
        .filter(|a| a.is_integer() && **a <= 0)
        .map(|a| (-a.numer().clone()).to_usize().unwrap_or(usize::MAX))
        .min()
        .ok_or(Error::NonTerminating)?;
    let mut sum = Rational::from(1);
    let mut term = Rational::from(1);
    for k in 0..n {
        let mut den = Rational::from(k + 1);
        for b in dens {
            den *= Rational::from(b + k as u64);
        }
        if den == 0 {
            return Err(Error::DegenerateDenominator(format!("denominator vanishes at term {k}")));
        }
        for a in nums {
            term *= Rational::from(a + k as u64);
        }
        term /= den;
        sum += &term;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn terminating_two_f_one() {
        let v = hyp_pfq_unit_exact(&[q(-1, 1), q(1, 3)], &[q(5, 7)]).unwrap();
        assert_eq!(v, q(8, 15));
        let hp = |r: Rational| HpComplex::from_rational(&r, 128);
        let r = hyp_pfq_unit(&[hp(q(-1, 1)), hp(q(1, 3))], &[hp(q(5, 7))], 1e-20).unwrap();
        assert!(r.value.rel_diff(&HpComplex::from_rational(&q(8, 15), 128), 1.0) < 1e-35);
        assert_eq!(r.terms_used, 2);
    }

    #[test]
    fn gauss_sum_non_terminating() {
        // 2F1(a,b;c;1) = Γ(c)Γ(c−a−b)/(Γ(c−a)Γ(c−b)); a=b=1/2, c=2 gives 4/π.
        let hp = |r: Rational| HpComplex::from_rational(&r, 160);
        let r = hyp_pfq_unit(&[hp(q(1, 2)), hp(q(1, 2))], &[hp(q(2, 1))], 1e-25).unwrap();
        let want = 4.0 / std::f64::consts::PI;
        assert!((r.value.re().to_f64() - want).abs() < 1e-15);
        let pi = HpComplex::pi(160);
        let exact = HpComplex::from_real(Float::with_val(160, 4u32 / pi));
        assert!(r.value.rel_diff(&exact, 1.0) < 1e-24);
    }

    #[test]
    fn divergent_balance_is_rejected() {
        let hp = |r: Rational| HpComplex::from_rational(&r, 128);
        let e = hyp_pfq_unit(&[hp(q(1, 2)), hp(q(1, 2))], &[hp(q(1, 1))], 1e-10).unwrap_err();
        assert!(matches!(e, Error::Divergence(_)));
    }

    #[test]
    fn non_terminating_has_no_exact_sum() {
        assert_eq!(hyp_pfq_unit_exact(&[q(1, 2)], &[q(3, 2)]), Err(Error::NonTerminating));
    }

    #[test]
    fn budget_is_enforced() {
        let hp = |r: Rational| HpComplex::from_rational(&r, 128);
        let opts = SeriesOptions { tol: 1e-30, term_cap: 100 };
        let e = hyp_pfq_unit_with(&[hp(q(1, 2)), hp(q(1, 2))], &[hp(q(11, 10))], opts);
        assert!(matches!(e, Err(Error::ConvergenceBudget { .. })));
    }
}
