//! Non-symmetric, symmetric and anti-symmetric Wilson polynomials.

use crate::daha::ops::{intertwiner, Action, Node, PolyRep, Sign};
use crate::daha::{apply_c, ParamSet, Poly};
use crate::error::{Error, Result};
use crate::numeric::pochhammer;
use rug::Rational;
use serde::Serialize;
use std::sync::RwLock;

/// Degree index m together with its Y-eigenvalue γ_m and dual value x_m = γ_m^σ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralPoint {
    pub index: usize,
    #[serde(serialize_with = "ser_rational")]
    pub gamma: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub x_dual: Rational,
}

fn ser_rational<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

pub fn spectral_point(t: &ParamSet, m: usize) -> SpectralPoint {
    SpectralPoint {
        index: m,
        gamma: t.gamma(m),
        x_dual: t.sigma().gamma(m),
    }
}

/// γ_m, exact.
pub fn gamma_val(t: &ParamSet, m: usize) -> Result<Rational> {
    t.require_exact()?;
    Ok(t.gamma(m))
}

/// Index of −γ_m; `None` stands for the label −γ₀, which lies outside the spectrum.
pub fn neg_label(m: usize) -> Option<usize> {
    match m {
        0 => None,
        m if m % 2 == 0 => Some(m - 1),
        m => Some(m + 1),
    }
}

/// Index of −1 − γ_m.
pub fn neg_one_minus_label(m: usize) -> usize {
    if m % 2 == 0 {
        m + 1
    } else {
        m - 1
    }
}

struct Cache {
    /// Y x^j, one entry per monomial degree.
    columns: Vec<Poly>,
    polys: Vec<Poly>,
}

/// The family {p_m} for one parameter set, generated on demand and memoized.
pub struct WilsonFamily {
    t: ParamSet,
    rep: PolyRep,
    gamma_fault: Option<(usize, Rational)>,
    cache: RwLock<Cache>,
}

impl WilsonFamily {
    pub fn new(t: &ParamSet) -> Result<Self> {
        t.require_exact()?;
        Ok(WilsonFamily {
            t: t.clone(),
            rep: PolyRep::new(t),
            gamma_fault: None,
            cache: RwLock::new(Cache {
                columns: Vec::new(),
                polys: Vec::new(),
            }),
        })
    }

    /// Test hook: adds `offset` to the tabulated γ_m used by the eigen-solve.
    pub fn with_gamma_fault(mut self, m: usize, offset: Rational) -> Self {
        self.gamma_fault = Some((m, offset));
        self
    }

    pub fn params(&self) -> &ParamSet {
        &self.t
    }

    pub fn rep(&self) -> &PolyRep {
        &self.rep
    }

    /// The tabulated eigenvalue γ_m.
    pub fn gamma(&self, m: usize) -> Rational {
        let g = self.t.gamma(m);
        match &self.gamma_fault {
            Some((k, off)) if *k == m => g + off,
            _ => g,
        }
    }

    /// The monic eigenpolynomial p_m, by back-substitution against the
    /// triangular matrix of Y on monomials.
    pub fn p(&self, m: usize) -> Poly {
        if let Some(p) = self.cache.read().unwrap().polys.get(m) {
            return p.clone();
        }
        let mut cache = self.cache.write().unwrap();
        while cache.columns.len() <= m {
            let j = cache.columns.len();
            let col = self.rep.y(&Poly::monomial(j));
            cache.columns.push(col);
        }
        while cache.polys.len() <= m {
            let k = cache.polys.len();
            let gk = self.gamma(k);
            let mut c = vec![Rational::new(); k + 1];
            c[k] = Rational::from(1);
            for i in (0..k).rev() {
                let mut acc = Rational::new();
                for j in i + 1..=k {
                    let yij = cache.columns[j].coeff(i);
                    if yij != 0 && c[j] != 0 {
                        acc += yij * &c[j];
                    }
                }
                c[i] = acc / (Rational::from(&gk - &self.t.gamma(i)));
            }
            cache.polys.push(Poly::new(c));
        }
        cache.polys[m].clone()
    }

    /// p_m(−x₀) by direct substitution.
    pub fn value_at_minus_x0(&self, m: usize) -> Rational {
        self.p(m).eval(&-self.t.a())
    }

    /// E(·, γ_m) = p_m / p_m(−x₀).
    pub fn e(&self, m: usize) -> Result<Poly> {
        let v = self.value_at_minus_x0(m);
        if v == 0 {
            return Err(Error::ZeroEvaluation(m));
        }
        self.p(m).div_scalar(&v)
    }

    /// E at a spectral label given as `neg_label` output; `None` is the constant 1.
    pub fn e_label(&self, label: Option<usize>) -> Result<Poly> {
        match label {
            None => Ok(Poly::one()),
            Some(m) => self.e(m),
        }
    }

    /// b_m of the T₁-action, with b₀ = t₁.
    pub fn b(&self, m: usize) -> Result<Rational> {
        t1_coefficient_b(&self.t, m)
    }

    /// P±_{2n} = p_{2n} + (b_{2n} ∓ t₁) p_{2n−1}.
    pub fn symmetric_p(&self, n: usize, sign: Sign) -> Result<Poly> {
        match (n, sign) {
            (0, Sign::Plus) => return Ok(Poly::one()),
            (0, Sign::Minus) => return Err(Error::Index("the anti-symmetric family starts at n = 1".into())),
            _ => {}
        }
        let b = self.b(2 * n)?;
        let coef = match sign {
            Sign::Plus => b - self.t.t1(),
            Sign::Minus => b + self.t.t1(),
        };
        Ok(&self.p(2 * n) + &self.p(2 * n - 1).scale(&coef))
    }

    /// E⁺(·, γ_{2n}) = P⁺_{2n} / P⁺_{2n}(x₀).
    pub fn e_plus(&self, n: usize) -> Result<Poly> {
        let p = self.symmetric_p(n, Sign::Plus)?;
        let v = p.eval(&self.t.a());
        if v == 0 {
            return Err(Error::ZeroEvaluation(2 * n));
        }
        p.div_scalar(&v)
    }

    /// C± E(·, γ_m).
    pub fn e_projected(&self, m: usize, sign: Sign) -> Result<Poly> {
        apply_c(sign, &self.t, &self.e(m)?)
    }
}

pub fn nonsymmetric_wilson(t: &ParamSet, m: usize) -> Result<Poly> {
    Ok(WilsonFamily::new(t)?.p(m))
}

/// p_m from the intertwiners: (S₁S₀)ⁿ1 and S₀(S₁S₀)ⁿ1 divided by their normalizers.
pub fn nonsymmetric_wilson_rodriguez(t: &ParamSet, m: usize) -> Result<Poly> {
    t.require_exact()?;
    let rep = PolyRep::new(t);
    let mut f = Poly::one();
    for step in 0..m {
        let node = if step % 2 == 0 { Node::Zero } else { Node::One };
        f = intertwiner(&rep, node, &f);
    }
    let n = m / 2;
    let mut norm = pochhammer(&t.abcd_sum(), m);
    let negative = if m % 2 == 0 { n % 2 == 1 } else { n % 2 == 0 };
    if negative {
        norm = -norm;
    }
    if norm == 0 {
        return Err(Error::ZeroNormalizer(m));
    }
    f.div_scalar(&norm)
}

/// b_m = (γ_m + t₁ + t₀)(γ_m + t₁ − t₀)/(2γ_m) − t₁, and b₀ = t₁.
pub fn t1_coefficient_b(t: &ParamSet, m: usize) -> Result<Rational> {
    if m == 0 {
        return Ok(t.t1().clone());
    }
    let g = t.gamma(m);
    if g == 0 {
        return Err(Error::DivisionByZero(format!("gamma_{m} = 0")));
    }
    let p = Rational::from(&g + t.t1()) + t.t0();
    let q = Rational::from(&g + t.t1()) - t.t0();
    Ok(p * q / (g * 2u32) - t.t1())
}

fn checked_ratio(num: Rational, den: Rational, what: &str) -> Result<Rational> {
    if den == 0 {
        return Err(Error::DegenerateDenominator(what.into()));
    }
    Ok(num / den)
}

/// Closed form of p_m(−x₀).
pub fn evaluation_at_minus_x0(t: &ParamSet, m: usize) -> Result<Rational> {
    t.require_exact()?;
    if m == 0 {
        return Ok(Rational::from(1));
    }
    let [a, b, c, d] = t.abcd();
    let s = t.abcd_sum();
    let n = (m + 1) / 2;
    let ac = pochhammer(&Rational::from(&a + &c), n);
    let ad = pochhammer(&Rational::from(&a + &d), n);
    if m % 2 == 0 {
        let num = pochhammer(&(Rational::from(&a + &b) + 1u32), n) * ac * ad;
        let den = pochhammer(&(s + n as u64), n);
        checked_ratio(num, den, "(n+a+b+c+d)_n")
    } else {
        let num = pochhammer(&(Rational::from(&a + &b) + 1u32), n - 1) * ac * ad;
        let den = pochhammer(&(s + n as u64 - 1u32), n);
        Ok(-checked_ratio(num, den, "(n+a+b+c+d-1)_n")?)
    }
}

/// Closed form of P⁺_{2n}(x₀).
pub fn symmetric_value_at_x0(t: &ParamSet, n: usize) -> Result<Rational> {
    let [a, b, c, d] = t.abcd();
    let s = t.abcd_sum();
    let num = pochhammer(&Rational::from(&a + &b), n)
        * pochhammer(&Rational::from(&a + &c), n)
        * pochhammer(&Rational::from(&a + &d), n);
    let den = pochhammer(&(s + n as u64 - 1u32), n);
    checked_ratio(num, den, "(n+a+b+c+d-1)_n")
}

pub fn renormalized_e(t: &ParamSet, m: usize) -> Result<Poly> {
    WilsonFamily::new(t)?.e(m)
}

pub fn symmetric_p(t: &ParamSet, n: usize, sign: Sign) -> Result<Poly> {
    WilsonFamily::new(t)?.symmetric_p(n, sign)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn labels() {
        assert_eq!(neg_label(0), None);
        assert_eq!(neg_label(4), Some(3));
        assert_eq!(neg_label(3), Some(4));
        assert_eq!(neg_one_minus_label(4), 5);
        assert_eq!(neg_one_minus_label(3), 2);
        let t = ParamSet::canonical();
        for m in 1..8 {
            assert_eq!(t.gamma(neg_label(m).unwrap()), -t.gamma(m));
            assert_eq!(t.gamma(neg_one_minus_label(m)), -t.gamma(m) - 1u32);
        }
        assert_eq!(t.gamma(neg_one_minus_label(0)), -t.gamma(0) - 1u32);
    }

    #[test]
    fn first_polynomials() {
        let t = ParamSet::canonical();
        let f = WilsonFamily::new(&t).unwrap();
        assert_eq!(f.p(0), Poly::one());
        assert_eq!(f.p(1), Poly::new(vec![q(-8657, 31164), q(1, 1)]));
        let p2 = f.p(2);
        assert!((&f.rep().y(&p2) - &p2.scale(&t.gamma(2))).is_zero());
    }

    #[test]
    fn b_values() {
        let t = ParamSet::canonical();
        assert_eq!(t1_coefficient_b(&t, 0).unwrap(), q(3, 5));
        let f = WilsonFamily::new(&t).unwrap();
        let rep = f.rep();
        let b1 = f.b(1).unwrap();
        let r1 = &(&rep.t1(&f.p(1)) + &f.p(2)) - &f.p(1).scale(&b1);
        assert!(r1.is_zero());
        let b2 = f.b(2).unwrap();
        let k = Rational::from(&b2 * &b2) - Rational::from(t.t1() * t.t1());
        let r2 = &(&rep.t1(&f.p(2)) - &f.p(2).scale(&b2)) - &f.p(1).scale(&k);
        assert!(r2.is_zero());
    }

    #[test]
    fn evaluation_examples() {
        let t = ParamSet::canonical();
        assert_eq!(evaluation_at_minus_x0(&t, 0).unwrap(), q(1, 1));
        let [a, b, c, d] = t.abcd();
        let want = -(Rational::from(&a + &c) * Rational::from(&a + &d)) / t.abcd_sum();
        assert_eq!(evaluation_at_minus_x0(&t, 1).unwrap(), want);
        assert_eq!(evaluation_at_minus_x0(&t, 2).unwrap(), q(1749407, 999600));
        let f = WilsonFamily::new(&t).unwrap();
        assert_eq!(f.value_at_minus_x0(2), q(1749407, 999600));
        let _ = (b, d);
    }

    #[test]
    fn rodriguez_low_orders() {
        let t = ParamSet::canonical();
        let f = WilsonFamily::new(&t).unwrap();
        for m in 0..6 {
            assert_eq!(nonsymmetric_wilson_rodriguez(&t, m).unwrap(), f.p(m), "m = {m}");
        }
    }

    #[test]
    fn anti_symmetric_two_is_weyl_denominator() {
        let t = ParamSet::canonical();
        let p = symmetric_p(&t, 1, Sign::Minus).unwrap();
        assert_eq!(p, Poly::new(vec![q(416, 1225), q(6, 5), q(1, 1)]));
        assert!(matches!(symmetric_p(&t, 0, Sign::Minus), Err(Error::Index(_))));
        assert_eq!(symmetric_p(&t, 0, Sign::Plus).unwrap(), Poly::one());
    }

    #[test]
    fn gamma_fault_breaks_the_eigen_property() {
        let t = ParamSet::canonical();
        let f = WilsonFamily::new(&t).unwrap().with_gamma_fault(2, q(1, 3));
        let p2 = f.p(2);
        assert!(!(&f.rep().y(&p2) - &p2.scale(&f.gamma(2))).is_zero());
    }
}
