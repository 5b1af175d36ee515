//! Multiplicity functions and their involutions.

use crate::error::{Error, Result};
use rug::Rational;
use serde::Serialize;
use std::fmt;

/// The multiplicity function (t₀, u₀, t₁, u₁).
///
/// Admissibility is decided once, at construction.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParamSet {
    t0: Rational,
    u0: Rational,
    t1: Rational,
    u1: Rational,
    exact_violation: Option<String>,
    quadrature_violation: Option<String>,
}

fn half() -> Rational {
    Rational::from((1, 2))
}

/// q ∈ −½·{0, 1, 2, …}
fn in_neg_half_naturals0(q: &Rational) -> bool {
    let twice = Rational::from(q * 2u32);
    twice.is_integer() && twice <= 0
}

impl ParamSet {
    pub fn new(t0: Rational, u0: Rational, t1: Rational, u1: Rational) -> Self {
        let mut p = ParamSet {
            t0,
            u0,
            t1,
            u1,
            exact_violation: None,
            quadrature_violation: None,
        };
        p.exact_violation = p.find_exact_violation();
        p.quadrature_violation = p.exact_violation.clone().or_else(|| p.find_quadrature_violation());
        p
    }

    /// Parses four "p/q" strings.
    pub fn parse(values: &[&str]) -> Result<Self> {
        if values.len() != 4 {
            return Err(Error::Parse(format!("expected 4 parameters, got {}", values.len())));
        }
        let v: Vec<Rational> = values
            .iter()
            .map(|s| crate::numeric::parse_rational(s))
            .collect::<Result<_>>()?;
        Ok(ParamSet::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()))
    }

    /// (t₀, u₀, t₁, u₁) = (2/3, 1/5, 3/5, 1/7).
    pub fn canonical() -> Self {
        ParamSet::new(
            Rational::from((2, 3)),
            Rational::from((1, 5)),
            Rational::from((3, 5)),
            Rational::from((1, 7)),
        )
    }

    pub fn t0(&self) -> &Rational {
        &self.t0
    }
    pub fn u0(&self) -> &Rational {
        &self.u0
    }
    pub fn t1(&self) -> &Rational {
        &self.t1
    }
    pub fn u1(&self) -> &Rational {
        &self.u1
    }

    pub fn values(&self) -> [Rational; 4] {
        [self.t0.clone(), self.u0.clone(), self.t1.clone(), self.u1.clone()]
    }

    /// a = t₁ + u₁
    pub fn a(&self) -> Rational {
        Rational::from(&self.t1 + &self.u1)
    }
    /// b = t₁ − u₁
    pub fn b(&self) -> Rational {
        Rational::from(&self.t1 - &self.u1)
    }
    /// c = t₀ + u₀ + ½
    pub fn c(&self) -> Rational {
        Rational::from(&self.t0 + &self.u0) + half()
    }
    /// d = t₀ − u₀ + ½
    pub fn d(&self) -> Rational {
        Rational::from(&self.t0 - &self.u0) + half()
    }

    pub fn abcd(&self) -> [Rational; 4] {
        [self.a(), self.b(), self.c(), self.d()]
    }

    /// (ã, b̃, c̃, d̃): the Wilson parameters of the dual set.
    pub fn abcd_dual(&self) -> [Rational; 4] {
        self.sigma().abcd()
    }

    /// a + b + c + d = 2t₀ + 2t₁ + 1
    pub fn abcd_sum(&self) -> Rational {
        self.abcd().iter().fold(Rational::new(), |acc, v| acc + v)
    }

    /// t₀ + t₁, the lowest eigenvalue of Y.
    pub fn gamma0(&self) -> Rational {
        Rational::from(&self.t0 + &self.t1)
    }

    /// γ_m: t₀+t₁+n for m = 2n and −(t₀+t₁+n) for m = 2n−1.
    pub fn gamma(&self, m: usize) -> Rational {
        let n = (m + 1) / 2;
        let v = self.gamma0() + n as u64;
        if m % 2 == 0 {
            v
        } else {
            -v
        }
    }

    /// (u₁, u₀, t₁, t₀)
    pub fn sigma(&self) -> ParamSet {
        ParamSet::new(self.u1.clone(), self.u0.clone(), self.t1.clone(), self.t0.clone())
    }

    /// (u₀, t₀, t₁, u₁)
    pub fn tau(&self) -> ParamSet {
        ParamSet::new(self.u0.clone(), self.t0.clone(), self.t1.clone(), self.u1.clone())
    }

    /// (t₀, u₀, t₁ + 1, u₁)
    pub fn shift_t1(&self) -> ParamSet {
        ParamSet::new(
            self.t0.clone(),
            self.u0.clone(),
            Rational::from(&self.t1 + 1u32),
            self.u1.clone(),
        )
    }

    pub fn exact_ok(&self) -> bool {
        self.exact_violation.is_none()
    }

    pub fn quadrature_ok(&self) -> bool {
        self.quadrature_violation.is_none()
    }

    pub fn require_exact(&self) -> Result<()> {
        match &self.exact_violation {
            None => Ok(()),
            Some(v) => Err(Error::Admissibility(format!("{self}: {v}"))),
        }
    }

    pub fn require_quadrature(&self) -> Result<()> {
        match &self.quadrature_violation {
            None => Ok(()),
            Some(v) => Err(Error::Admissibility(format!("{self}: {v}"))),
        }
    }

    fn find_exact_violation(&self) -> Option<String> {
        let names = ["a", "b", "c", "d"];
        let v = self.abcd();
        for (n, q) in names.iter().zip(&v) {
            if in_neg_half_naturals0(q) {
                return Some(format!("{n} = {q} lies in −½·ℤ≥0"));
            }
        }
        for i in 0..4 {
            for j in i + 1..4 {
                let s = Rational::from(&v[i] + &v[j]);
                if s.is_integer() {
                    return Some(format!("{}+{} = {s} is an integer", names[i], names[j]));
                }
            }
        }
        let g = self.gamma0();
        if in_neg_half_naturals0(&g) && g != 0 {
            return Some(format!("t0+t1 = {g} lies in −½·ℕ"));
        }
        None
    }

    fn find_quadrature_violation(&self) -> Option<String> {
        let [a, b, c, d] = self.abcd();
        for (n, q) in [("a", &a), ("b", &b), ("c", &c)] {
            if *q <= 0 {
                return Some(format!("{n} = {q} is not positive"));
            }
        }
        if d <= 0 || d >= 1 {
            return Some(format!("d = {d} is outside (0, 1)"));
        }
        None
    }
}

impl fmt::Display for ParamSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(t0, u0, t1, u1) = ({}, {}, {}, {})", self.t0, self.u0, self.t1, self.u1)
    }
}

impl Serialize for ParamSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.values().iter().map(|q| q.to_string()).collect();
        v.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn canonical_derived_values() {
        let t = ParamSet::canonical();
        assert_eq!(t.abcd(), [q(26, 35), q(16, 35), q(41, 30), q(29, 30)]);
        assert_eq!(t.abcd_sum(), q(53, 15));
        assert_eq!(t.abcd_dual()[0], q(19, 15));
        assert!(t.exact_ok() && t.quadrature_ok());
        assert_eq!(t.gamma(0), q(19, 15));
        assert_eq!(t.gamma(1), q(-34, 15));
        assert_eq!(t.gamma(4), q(49, 15));
    }

    #[test]
    fn involutions() {
        let t = ParamSet::canonical();
        assert_eq!(t.sigma().values(), [q(1, 7), q(1, 5), q(3, 5), q(2, 3)]);
        assert_eq!(t.tau().values(), [q(1, 5), q(2, 3), q(3, 5), q(1, 7)]);
        assert_eq!(t.sigma().sigma(), t);
        assert_eq!(t.tau().tau(), t);
        let tst = t.tau().sigma().tau();
        assert_eq!(tst.values(), [q(2, 3), q(1, 7), q(3, 5), q(1, 5)]);
        assert_eq!(tst, t.sigma().tau().sigma());
    }

    #[test]
    fn admissibility_failures_name_the_condition() {
        // a + b = 2t1 = 1
        let t = ParamSet::new(q(1, 3), q(1, 5), q(1, 2), q(1, 7));
        let e = t.require_exact().unwrap_err();
        assert!(e.to_string().contains("a+b"));
        // d = 6/5 violates only the quadrature condition
        let t = ParamSet::new(q(9, 10), q(1, 5), q(3, 5), q(1, 7));
        assert!(t.exact_ok());
        assert!(!t.quadrature_ok());
    }
}
