//! Verification of the polynomial identities: eigen-structure, routes, evaluations,
//! duality, the character formula, the difference equation and the recurrence.

use super::family::{evaluation_at_minus_x0, nonsymmetric_wilson_rodriguez, WilsonFamily};
use super::identities::{
    apply_l_difference, apply_l_explicit, dual_variable_residuals, l_eigenvalue, recurrence_residual, symmetric_e_4f3,
    symmetric_p_from_4f3, weyl_character_residuals, DualPair,
};
use crate::daha::{Action, Sign};
use crate::error::Result;
use crate::numeric::Rational;
use crate::report::{Check, Method, SuiteOptions, VerificationReport};
use crate::transform::checks::exact_check;

type Outcome = Result<Option<String>>;

/// First index in 0..=max with a witness, or None.
fn first_failure(max: usize, mut at: impl FnMut(usize) -> Outcome) -> Outcome {
    for i in 0..=max {
        if let Some(w) = at(i)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Y p_m = γ_m p_m with γ_m from its closed form, and p_m monic of degree m.
pub fn check_eigen(fam: &WilsonFamily, max_m: usize) -> Outcome {
    let t = fam.params();
    first_failure(max_m, |m| {
        let p = fam.p(m);
        if p.degree() != Some(m) || !p.is_monic() {
            return Ok(Some(format!("p_{m} is not monic of degree {m}")));
        }
        let r = &fam.rep().y(&p) - &p.scale(&t.gamma(m));
        Ok((!r.is_zero()).then(|| format!("Y p_{m} - gamma_{m} p_{m} = {r}")))
    })
}

pub fn check_rodriguez(fam: &WilsonFamily, max_m: usize) -> Outcome {
    first_failure(max_m, |m| {
        let r = nonsymmetric_wilson_rodriguez(fam.params(), m)?;
        Ok((r != fam.p(m)).then(|| format!("routes differ at m = {m}")))
    })
}

/// T₁p_m = −p_{m+1} + b_m p_m (m odd), b_m p_m + (b_m² − t₁²)p_{m−1} (m even, m > 0), t₁p₀ (m = 0).
pub fn check_t1_action(fam: &WilsonFamily, max_m: usize) -> Outcome {
    let t1 = fam.params().t1().clone();
    first_failure(max_m, |m| {
        let p = fam.p(m);
        let b = fam.b(m)?;
        let want = if m == 0 {
            p.scale(&t1)
        } else if m % 2 == 1 {
            &p.scale(&b) - &fam.p(m + 1)
        } else {
            let k = Rational::from(&b * &b) - Rational::from(&t1 * &t1);
            &p.scale(&b) + &fam.p(m - 1).scale(&k)
        };
        Ok((fam.rep().t1(&p) != want).then(|| format!("m = {m}")))
    })
}

/// Closed form of p_m(−x₀) against substitution, and E(−x₀, γ_m) = 1.
pub fn check_evaluation(fam: &WilsonFamily, max_m: usize) -> Outcome {
    let t = fam.params();
    first_failure(max_m, |m| {
        let direct = fam.value_at_minus_x0(m);
        let closed = evaluation_at_minus_x0(t, m)?;
        if direct != closed {
            return Ok(Some(format!("m = {m}: {direct} vs {closed}")));
        }
        let e = fam.e(m)?.eval(&-t.a());
        Ok((e != 1).then(|| format!("E(-x0, gamma_{m}) = {e}")))
    })
}

/// p_{2n} and p_{2n−1} recovered from P⁺_{2n}, P⁻_{2n}.
pub fn check_symmetric_inversion(fam: &WilsonFamily, max_n: usize) -> Outcome {
    let t1 = fam.params().t1().clone();
    let two_t1 = Rational::from(&t1 * 2u32);
    first_failure(max_n, |n| {
        if n == 0 {
            return Ok(None);
        }
        let b = fam.b(2 * n)?;
        let plus = fam.symmetric_p(n, Sign::Plus)?;
        let minus = fam.symmetric_p(n, Sign::Minus)?;
        let even = (&plus.scale(&Rational::from(&b + &t1)) - &minus.scale(&Rational::from(&b - &t1))).div_scalar(&two_t1)?;
        let odd = (&minus - &plus).div_scalar(&two_t1)?;
        Ok((even != fam.p(2 * n) || odd != fam.p(2 * n - 1)).then(|| format!("n = {n}")))
    })
}

/// Y² acts on span{p_{2n}, p_{2n−1}} as γ_{2n}², P⁺ is even and P⁻/δ is even.
pub fn check_decomposition(fam: &WilsonFamily, max_n: usize) -> Outcome {
    let t = fam.params();
    let rep = fam.rep();
    first_failure(max_n, |n| {
        let g = t.gamma(2 * n);
        let g2 = Rational::from(&g * &g);
        let mut basis = vec![fam.p(2 * n)];
        if n > 0 {
            basis.push(fam.p(2 * n - 1));
        }
        for p in &basis {
            if rep.y(&rep.y(p)) != p.scale(&g2) {
                return Ok(Some(format!("Y^2 at n = {n}")));
            }
        }
        if !fam.symmetric_p(n, Sign::Plus)?.is_even() {
            return Ok(Some(format!("P+_{} is not even", 2 * n)));
        }
        if n > 0 {
            let q = fam.symmetric_p(n, Sign::Minus)?.div_exact(rep.delta())?;
            if !q.is_even() {
                return Ok(Some(format!("P-_{}/delta is not even", 2 * n)));
            }
        }
        Ok(None)
    })
}

pub fn check_duality_grid(pair: &DualPair, max: usize) -> Outcome {
    for m in 0..=max {
        for n in 0..=max {
            let (l, r) = pair.duality_sides(m, n)?;
            if l != r {
                return Ok(Some(format!("m = {m}, n = {n}: {l} vs {r}")));
            }
        }
    }
    Ok(None)
}

/// Indices with γ_m = 0 are left out: c₁^σ has its pole there.
pub fn check_dual_variable(fam: &WilsonFamily, max_m: usize) -> Outcome {
    first_failure(max_m, |m| {
        if fam.params().gamma(m) == 0 {
            return Ok(None);
        }
        let (rt, ru) = dual_variable_residuals(fam, m)?;
        Ok((!rt.is_zero() || !ru.is_zero()).then(|| format!("m = {m}")))
    })
}

pub fn check_character(fam: &WilsonFamily, shifted: &WilsonFamily, max_n: usize) -> Outcome {
    first_failure(max_n, |n| {
        if n == 0 {
            return Ok(None);
        }
        let r = weyl_character_residuals(fam, shifted, n)?;
        Ok(r.iter().position(|p| !p.is_zero()).map(|i| format!("n = {n}, identity #{i}")))
    })
}

/// L E⁺_{2n} = n(n+a+b+c+d−1)E⁺_{2n}, with L as Y² − γ₀² and from the explicit coefficients.
pub fn check_difference_equation(fam: &WilsonFamily, max_n: usize) -> Outcome {
    let t = fam.params();
    first_failure(max_n, |n| {
        let e = fam.e_plus(n)?;
        let want = e.scale(&l_eigenvalue(t, n));
        if apply_l_difference(t, &e)? != want {
            return Ok(Some(format!("Y^2 route at n = {n}")));
        }
        Ok((apply_l_explicit(t, &e)? != want).then(|| format!("explicit route at n = {n}")))
    })
}

pub fn check_recurrence_upto(fam: &WilsonFamily, max_n: usize) -> Outcome {
    first_failure(max_n, |n| Ok((!recurrence_residual(fam, n)?.is_zero()).then(|| format!("n = {n}"))))
}

/// The ₄F₃ expression times P⁺_{2n}(x₀) against P⁺_{2n}, as polynomials and at sample points.
pub fn check_4f3(fam: &WilsonFamily, max_n: usize) -> Outcome {
    let t = fam.params();
    let samples = [(0, 1), (1, 3), (-2, 5), (7, 4), (-3, 1)].map(Rational::from);
    first_failure(max_n, |n| {
        let p = fam.symmetric_p(n, Sign::Plus)?;
        if symmetric_p_from_4f3(t, n)? != p {
            return Ok(Some(format!("polynomial at n = {n}")));
        }
        let at_x0 = p.eval(&t.a());
        for x in &samples {
            if Rational::from(&symmetric_e_4f3(t, n, x)? * &at_x0) != p.eval(x) {
                return Ok(Some(format!("n = {n}, x = {x}")));
            }
        }
        Ok(None)
    })
}

/// Every polynomial identity for one family; the family may carry a test fault.
pub fn verify_family(fam: &WilsonFamily, opts: &SuiteOptions) -> VerificationReport {
    let t = fam.params();
    let k = opts.max_degree;
    let half = (k / 2).min(10);
    let small = k.min(12);
    let l = k.min(6);
    let mut checks = vec![
        exact_check("Y p_m = gamma_m p_m, p_m monic", "eigen-structure", format!("m ≤ {}", 2 * k), check_eigen(fam, 2 * k)),
        exact_check("Rodriguez route = triangular route", "Rodriguez formula", format!("m ≤ {k}"), check_rodriguez(fam, k)),
        exact_check("T_1 p_m in terms of b_m", "T_1 action", format!("m ≤ {k}"), check_t1_action(fam, k)),
        exact_check("p_m(-x_0) closed form, E(-x_0, gamma_m) = 1", "evaluation formulas", format!("m ≤ {k}"), check_evaluation(fam, k)),
        exact_check("p_2n, p_2n-1 from P+_2n, P-_2n", "symmetric polynomials", format!("n ≤ {half}"), check_symmetric_inversion(fam, half)),
        exact_check("Y^2 = gamma_2n^2 on span{p_2n, p_2n-1}", "decomposition", format!("n ≤ {half}"), check_decomposition(fam, half)),
        exact_check("T_1, U_1 in the dual variable", "dual variable action", format!("m ≤ {small}"), check_dual_variable(fam, small)),
        exact_check("L E+_2n = n(n+a+b+c+d-1) E+_2n", "difference equation", format!("n ≤ {l}"), check_difference_equation(fam, l)),
        exact_check("three-term recurrence", "recurrence", format!("n ≤ {l}"), check_recurrence_upto(fam, l)),
        exact_check("4F3 expression = P+_2n / P+_2n(x_0)", "explicit 4F3", format!("n ≤ {half}, 5 points"), check_4f3(fam, half)),
    ];

    let name = "E(-x_n, gamma_m; t) = E(-gamma_m, x_n; t^sigma)";
    checks.push(match t.sigma().require_exact() {
        Ok(()) => exact_check(name, "duality", format!("m, n ≤ {small}"), DualPair::new(t).and_then(|p| check_duality_grid(&p, small))),
        Err(e) => Check::skipped(name, "duality", Method::Exact, &format!("dual parameters not admissible: {e}")),
    });
    let name = "P-_2n = delta P+_2n-2(t_1+1) and the renormalized forms";
    let shifted = t.shift_t1();
    checks.push(match shifted.require_exact().and_then(|_| WilsonFamily::new(&shifted)) {
        Ok(sh) => exact_check(name, "character formula", format!("n ≤ {l}"), check_character(fam, &sh, l)),
        Err(e) => Check::skipped(name, "character formula", Method::Exact, &format!("shifted parameters not admissible: {e}")),
    });
    VerificationReport::new(checks)
}

pub fn verify_polynomials(t: &crate::daha::ParamSet, opts: &SuiteOptions) -> VerificationReport {
    match WilsonFamily::new(t) {
        Ok(fam) => verify_family(&fam, opts),
        Err(e) => VerificationReport::new(vec![Check::errored("Wilson family setup", "eigen-structure", Method::Exact, &e)]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::daha::ParamSet;

    #[test]
    fn canonical_family_passes_and_a_fault_is_caught() {
        let t = ParamSet::canonical();
        let opts = SuiteOptions {
            max_degree: 8,
            ..SuiteOptions::default()
        };
        let r = verify_polynomials(&t, &opts);
        assert!(r.passed(), "{r:?}");
        let faulty = WilsonFamily::new(&t).unwrap().with_gamma_fault(2, Rational::from((1, 3)));
        let r = verify_family(&faulty, &opts);
        assert!(!r.passed());
        assert!(r.checks[0].witness.as_deref().unwrap().contains("p_2"));
    }
}
