//! Exact checks of the identities satisfied by the Wilson polynomials.

use super::family::{neg_label, neg_one_minus_label, symmetric_value_at_x0, WilsonFamily};
use crate::daha::ops::{Action, Sign};
use crate::daha::{ParamSet, Poly};
use crate::error::{Error, Result};
use crate::numeric::{hyp_pfq_unit, hyp_pfq_unit_exact, pochhammer, HpComplex, SeriesResult};
use rug::Rational;

/// E⁺(x, γ_{2n}) as the terminating ₄F₃(−n, n+a+b+c+d−1, a+x, a−x; a+b, a+c, a+d; 1).
pub fn symmetric_e_4f3(t: &ParamSet, n: usize, x: &Rational) -> Result<Rational> {
    let [a, b, c, d] = t.abcd();
    let nums = [
        Rational::from(-(n as i64)),
        t.abcd_sum() + n as u64 - 1u32,
        Rational::from(&a + x),
        Rational::from(&a - x),
    ];
    let dens = [Rational::from(&a + &b), Rational::from(&a + &c), Rational::from(&a + &d)];
    hyp_pfq_unit_exact(&nums, &dens)
}

/// The same series at a high-precision point.
pub fn symmetric_e_4f3_hp(t: &ParamSet, n: usize, x: &HpComplex, tol: f64) -> Result<SeriesResult> {
    let prec = x.precision_bits();
    let [a, b, c, d] = t.abcd();
    let hp = |q: Rational| HpComplex::from_rational(&q, prec);
    let ah = hp(a.clone());
    let nums = [
        hp(Rational::from(-(n as i64))),
        hp(t.abcd_sum() + n as u64 - 1u32),
        &ah + x,
        &ah - x,
    ];
    let dens = [hp(Rational::from(&a + &b)), hp(Rational::from(&a + &c)), hp(a + d)];
    hyp_pfq_unit(&nums, &dens, tol)
}

/// The ₄F₃ sum expanded as a polynomial in x, using (a+x)_j(a−x)_j = ∏_{i<j}((a+i)² − x²).
pub fn symmetric_e_4f3_poly(t: &ParamSet, n: usize) -> Result<Poly> {
    let [a, b, c, d] = t.abcd();
    let top = t.abcd_sum() + n as u64 - 1u32;
    let mut out = Poly::zero();
    let mut pair = Poly::one();
    for j in 0..=n {
        let num = pochhammer(&Rational::from(-(n as i64)), j) * pochhammer(&top, j);
        let den = pochhammer(&Rational::from(&a + &b), j)
            * pochhammer(&Rational::from(&a + &c), j)
            * pochhammer(&Rational::from(&a + &d), j)
            * pochhammer(&Rational::from(1), j);
        if den == 0 {
            return Err(Error::DegenerateDenominator(format!("lower parameters vanish at term {j}")));
        }
        out = &out + &pair.scale(&(num / den));
        let ai = Rational::from(&a + j as u64);
        pair = &pair * &Poly::new(vec![Rational::from(&ai * &ai), Rational::new(), Rational::from(-1)]);
    }
    Ok(out)
}

/// Families over 𝐭 and 𝐭^σ, shared by the duality checks.
pub struct DualPair {
    pub base: WilsonFamily,
    pub dual: WilsonFamily,
}

impl DualPair {
    pub fn new(t: &ParamSet) -> Result<Self> {
        Ok(DualPair {
            base: WilsonFamily::new(t)?,
            dual: WilsonFamily::new(&t.sigma())?,
        })
    }

    /// E(−x_n, γ_m; 𝐭) and E(−γ_m, x_n; 𝐭^σ).
    pub fn duality_sides(&self, m: usize, n: usize) -> Result<(Rational, Rational)> {
        let t = self.base.params();
        let xn = t.sigma().gamma(n);
        let gm = t.gamma(m);
        let lhs = self.base.e(m)?.eval(&-xn);
        let rhs = self.dual.e(n)?.eval(&-gm);
        Ok((lhs, rhs))
    }
}

pub fn check_duality(t: &ParamSet, m: usize, n: usize) -> Result<bool> {
    t.sigma().require_exact()?;
    let (l, r) = DualPair::new(t)?.duality_sides(m, n)?;
    Ok(l == r)
}

/// c₁^σ(y) = (ã + y)(b̃ + y)/(2y)
fn c1_dual(t: &ParamSet, y: &Rational) -> Result<Rational> {
    let [at, bt, _, _] = t.abcd_dual();
    if *y == 0 {
        return Err(Error::Pole("c1^sigma at y = 0".into()));
    }
    Ok(Rational::from(&at + y) * Rational::from(&bt + y) / Rational::from(y * 2u32))
}

/// c₀^σ(y) = (c̃ − y)(d̃ − y)/(1 − 2y)
fn c0_dual(t: &ParamSet, y: &Rational) -> Result<Rational> {
    let [_, _, ct, dt] = t.abcd_dual();
    let den = Rational::from(1) - Rational::from(y * 2u32);
    if den == 0 {
        return Err(Error::Pole("c0^sigma at y = 1/2".into()));
    }
    Ok(Rational::from(&ct - y) * Rational::from(&dt - y) / den)
}

/// Residuals of the T₁ and U₁ actions written in the dual variable.
pub fn dual_variable_residuals(fam: &WilsonFamily, m: usize) -> Result<(Poly, Poly)> {
    let t = fam.params();
    let rep = fam.rep();
    let e = fam.e(m)?;
    let y = -t.gamma(m);
    let reflected = fam.e_label(neg_label(m))?;
    let rhs_t = &e.scale(t.t1()) + &(&reflected - &e).scale(&c1_dual(t, &y)?);
    let shifted = fam.e(neg_one_minus_label(m))?;
    let rhs_u = &e.scale(t.u1()) + &(&shifted - &e).scale(&c0_dual(t, &y)?);
    Ok((&rep.t1(&e) - &rhs_t, &rep.u1(&e) - &rhs_u))
}

pub fn check_dual_variable_action(t: &ParamSet, m: usize) -> Result<bool> {
    let fam = WilsonFamily::new(t)?;
    let (rt, ru) = dual_variable_residuals(&fam, m)?;
    Ok(rt.is_zero() && ru.is_zero())
}

/// L f = Y²f − (t₀+t₁)² f on even polynomials.
pub fn apply_l_difference(t: &ParamSet, f: &Poly) -> Result<Poly> {
    if !f.is_even() {
        return Err(Error::NotSymmetric);
    }
    let rep = crate::daha::PolyRep::new(t);
    let g0 = t.gamma0();
    Ok(&rep.y(&rep.y(f)) - &f.scale(&Rational::from(&g0 * &g0)))
}

/// L f = A(x)(f(x+1) − f(x)) + A(−x)(f(x−1) − f(x)) with
/// A(x) = (a+x)(b+x)(c+x)(d+x)/(2x(2x+1)), assembled over the common
/// denominator 2x(4x² − 1) and divided out exactly.
pub fn apply_l_explicit(t: &ParamSet, f: &Poly) -> Result<Poly> {
    if !f.is_even() {
        return Err(Error::NotSymmetric);
    }
    let p = t
        .abcd()
        .into_iter()
        .fold(Poly::one(), |acc, v| &acc * &Poly::linear(v));
    let one = Rational::from(1);
    let up = &f.shift(&one) - f;
    let down = &f.shift(&-one) - f;
    let num = &(&(&p * &Poly::from_i64(&[-1, 2])) * &up) + &(&(&p.reflect() * &Poly::from_i64(&[1, 2])) * &down);
    num.div_exact(&Poly::from_i64(&[0, -2, 0, 8]))
}

/// n(n + a+b+c+d − 1)
pub fn l_eigenvalue(t: &ParamSet, n: usize) -> Rational {
    Rational::from(n) * (t.abcd_sum() + n as u64 - 1u32)
}

/// B_n and C_n of the three-term recurrence. At n = 0 the factor s − 1 of
/// B₀ cancels (s = a+b+c+d); the remaining zero denominators are reported.
pub fn recurrence_coefficients(t: &ParamSet, n: usize) -> Result<(Rational, Rational)> {
    let [a, b, c, d] = t.abcd();
    let s = t.abcd_sum();
    let nn = n as u64;
    let shifted = |k: u64| s.clone() + k;
    let nonzero = |q: Rational, label: String| {
        if q == 0 {
            Err(Error::DegenerateDenominator(label))
        } else {
            Ok(q)
        }
    };
    let pairs = Rational::from(&a + &b) + nn;
    let pairs = pairs * (Rational::from(&a + &c) + nn) * (Rational::from(&a + &d) + nn);
    let bn = if n == 0 {
        pairs / nonzero(s.clone(), "a+b+c+d = 0".into())?
    } else {
        let den = (shifted(2 * nn) - 1u32) * shifted(2 * nn);
        (shifted(nn) - 1u32) * pairs / nonzero(den, format!("(a+b+c+d+{})(a+b+c+d+{}) = 0", 2 * nn - 1, 2 * nn))?
    };
    let cn = if n == 0 {
        Rational::new()
    } else {
        let den = (shifted(2 * nn) - 2u32) * (shifted(2 * nn) - 1u32);
        Rational::from(n)
            * (Rational::from(&b + &c) + nn - 1u32)
            * (Rational::from(&b + &d) + nn - 1u32)
            * (Rational::from(&c + &d) + nn - 1u32)
            / nonzero(den, format!("(a+b+c+d+{})(a+b+c+d+{}) = 0", 2 * nn - 2, 2 * nn - 1))?
    };
    Ok((bn, cn))
}

/// (x² − a²)E⁺_{2n} − B_n(E⁺_{2n+2} − E⁺_{2n}) − C_n(E⁺_{2n−2} − E⁺_{2n}), with E⁺_{−2} = 0.
pub fn recurrence_residual(fam: &WilsonFamily, n: usize) -> Result<Poly> {
    let t = fam.params();
    let a = t.a();
    let (bn, cn) = recurrence_coefficients(t, n)?;
    let e = fam.e_plus(n)?;
    let up = fam.e_plus(n + 1)?;
    let down = if n == 0 { Poly::zero() } else { fam.e_plus(n - 1)? };
    let lhs = &Poly::new(vec![-Rational::from(&a * &a), Rational::new(), Rational::from(1)]) * &e;
    let rhs = &(&up - &e).scale(&bn) + &(&down - &e).scale(&cn);
    Ok(&lhs - &rhs)
}

pub fn check_recurrence(t: &ParamSet, n: usize) -> Result<bool> {
    Ok(recurrence_residual(&WilsonFamily::new(t)?, n)?.is_zero())
}

/// α = 1/((a+b)(a+b+1)(a+c)(a+d))
pub fn weyl_alpha(t: &ParamSet) -> Rational {
    let [a, b, c, d] = t.abcd();
    let ab = Rational::from(&a + &b);
    let den = Rational::from(&ab * &(Rational::from(&ab + 1u32))) * Rational::from(&a + &c) * Rational::from(&a + &d);
    Rational::from(1) / den
}

/// δ_σ(y) = (ã + y)(b̃ + y)
fn delta_dual(t: &ParamSet, y: &Rational) -> Rational {
    let [at, bt, _, _] = t.abcd_dual();
    Rational::from(&at + y) * Rational::from(&bt + y)
}

/// Residuals of P⁻_{2n} = δ·P⁺_{2n−2}(shifted) and of the renormalized
/// identities E⁻(·,γ_m) = −α·δ_σ(−γ_m)·δ·E⁺(·,γ_{m−2}; shifted) for m = 2n and m = 2n − 1.
///
/// The constant carries the sign −1 for both parities, because
/// b_{2n} − t₁ = −c₁^σ(−γ_{2n}).
pub fn weyl_character_residuals(fam: &WilsonFamily, shifted: &WilsonFamily, n: usize) -> Result<[Poly; 3]> {
    if n == 0 {
        return Err(Error::Index("the character formula starts at n = 1".into()));
    }
    let t = fam.params();
    let delta = fam.rep().delta().clone();
    let monic = &fam.symmetric_p(n, Sign::Minus)? - &(&delta * &shifted.symmetric_p(n - 1, Sign::Plus)?);
    let e_shift = shifted.e_plus(n - 1)?;
    let alpha = weyl_alpha(t);
    let mut out = [monic, Poly::zero(), Poly::zero()];
    for (slot, m) in [(1, 2 * n), (2, 2 * n - 1)] {
        let k = -Rational::from(&alpha * &delta_dual(t, &-t.gamma(m)));
        let rhs = (&delta * &e_shift).scale(&k);
        out[slot] = &fam.e_projected(m, Sign::Minus)? - &rhs;
    }
    Ok(out)
}

pub fn check_weyl_character(t: &ParamSet, n: usize) -> Result<bool> {
    let sh = t.shift_t1();
    sh.require_exact()?;
    let r = weyl_character_residuals(&WilsonFamily::new(t)?, &WilsonFamily::new(&sh)?, n)?;
    Ok(r.iter().all(Poly::is_zero))
}

/// Closed-form route for P⁺_{2n}: the ₄F₃ polynomial times P⁺_{2n}(x₀).
pub fn symmetric_p_from_4f3(t: &ParamSet, n: usize) -> Result<Poly> {
    Ok(symmetric_e_4f3_poly(t, n)?.scale(&symmetric_value_at_x0(t, n)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn four_f_three_normalization_and_routes() {
        let t = ParamSet::canonical();
        assert_eq!(symmetric_e_4f3(&t, 0, &q(1, 3)).unwrap(), q(1, 1));
        for n in 0..=5 {
            assert_eq!(symmetric_e_4f3(&t, n, &t.a()).unwrap(), q(1, 1));
        }
        let fam = WilsonFamily::new(&t).unwrap();
        let e1 = fam.e_plus(1).unwrap();
        assert_eq!(symmetric_e_4f3(&t, 1, &q(0, 1)).unwrap(), e1.eval(&q(0, 1)));
        assert_eq!(symmetric_e_4f3_poly(&t, 3).unwrap(), fam.e_plus(3).unwrap());
    }

    #[test]
    fn duality_small_cases() {
        let t = ParamSet::canonical();
        assert!(check_duality(&t, 0, 0).unwrap());
        assert!(check_duality(&t, 3, 2).unwrap());
    }

    #[test]
    fn dual_variable_action_low_degrees() {
        let t = ParamSet::canonical();
        for m in 0..=3 {
            assert!(check_dual_variable_action(&t, m).unwrap(), "m = {m}");
        }
    }

    #[test]
    fn difference_operator_eigenvalues() {
        let t = ParamSet::canonical();
        let fam = WilsonFamily::new(&t).unwrap();
        assert!(apply_l_difference(&t, &Poly::one()).unwrap().is_zero());
        assert_eq!(l_eigenvalue(&t, 1), q(53, 15));
        for n in 0..=3 {
            let e = fam.e_plus(n).unwrap();
            let want = e.scale(&l_eigenvalue(&t, n));
            assert_eq!(apply_l_difference(&t, &e).unwrap(), want);
            assert_eq!(apply_l_explicit(&t, &e).unwrap(), want);
        }
        assert_eq!(apply_l_difference(&t, &Poly::x()), Err(Error::NotSymmetric));
    }

    #[test]
    fn recurrence_low_orders() {
        let t = ParamSet::canonical();
        for n in 0..=2 {
            assert!(check_recurrence(&t, n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn b_minus_t1_is_minus_dual_c1() {
        let t = ParamSet::canonical();
        let fam = WilsonFamily::new(&t).unwrap();
        for n in 1..=4 {
            let lhs = fam.b(2 * n).unwrap() - t.t1();
            assert_eq!(lhs, -c1_dual(&t, &-t.gamma(2 * n)).unwrap());
        }
        assert_eq!(fam.b(2).unwrap() - t.t1(), q(35, 68));
    }

    #[test]
    fn character_formula_low_orders() {
        let t = ParamSet::canonical();
        for n in 1..=2 {
            assert!(check_weyl_character(&t, n).unwrap(), "n = {n}");
        }
    }
}
