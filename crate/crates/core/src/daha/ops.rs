//! Weyl group and difference-reflection operators on polynomials.

use super::params::ParamSet;
use super::poly::Poly;
use crate::error::{Error, Result};
use rug::Rational;

/// Simple reflections: s₀ f(x) = f(1 − x), s₁ f(x) = f(−x).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weyl {
    S0,
    S1,
}

/// Applies a word in s₀, s₁ as an operator product; the rightmost letter acts first.
pub fn apply_weyl(word: &[Weyl], p: &Poly) -> Poly {
    word.iter().rev().fold(p.clone(), |acc, s| match s {
        Weyl::S0 => acc.reflect_about_half(),
        Weyl::S1 => acc.reflect(),
    })
}

/// Index of a simple reflection or operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Node {
    Zero,
    One,
}

/// D_i p = (s_i p − p)/a_i with a₀ = 1 − 2x and a₁ = 2x.
pub fn apply_d(i: Node, p: &Poly) -> Poly {
    match i {
        // D₁ xᵏ = −x^{k−1} for odd k and 0 for even k.
        Node::One => Poly::new(
            p.coeffs()
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| if k % 2 == 1 { Rational::from(-c) } else { Rational::new() })
                .collect(),
        ),
        Node::Zero => {
            let diff = &p.reflect_about_half() - p;
            diff.div_exact(&Poly::from_i64(&[1, -2]))
                .expect("s0 p − p is divisible by 1 − 2x")
        }
    }
}

/// A representation of the generators T₀, T₁ and z on polynomials.
///
/// U₀, U₁ and Y are derived from T₀, T₁ and multiplication by x.
pub trait Action {
    fn params(&self) -> &ParamSet;
    fn t0(&self, p: &Poly) -> Poly;
    fn t1(&self, p: &Poly) -> Poly;

    fn t(&self, i: Node, p: &Poly) -> Poly {
        match i {
            Node::Zero => self.t0(p),
            Node::One => self.t1(p),
        }
    }

    /// U₀ = −T₀ − ½ + z
    fn u0(&self, p: &Poly) -> Poly {
        let half = Rational::from((1, 2));
        &(&p.mul_x() - &self.t0(p)) - &p.scale(&half)
    }

    /// U₁ = −T₁ − z
    fn u1(&self, p: &Poly) -> Poly {
        -&(&self.t1(p) + &p.mul_x())
    }

    fn u(&self, i: Node, p: &Poly) -> Poly {
        match i {
            Node::Zero => self.u0(p),
            Node::One => self.u1(p),
        }
    }

    /// Y = T₀ + T₁
    fn y(&self, p: &Poly) -> Poly {
        &self.t0(p) + &self.t1(p)
    }
}

/// The polynomial representation attached to a parameter set.
#[derive(Clone, Debug)]
pub struct PolyRep {
    t: ParamSet,
    /// (c − x)(d − x)
    q0: Poly,
    /// (a + x)(b + x)
    q1: Poly,
}

impl PolyRep {
    pub fn new(t: &ParamSet) -> Self {
        let [a, b, c, d] = t.abcd();
        let q0 = &Poly::new(vec![c, Rational::from(-1)]) * &Poly::new(vec![d, Rational::from(-1)]);
        let q1 = &Poly::linear(a) * &Poly::linear(b);
        PolyRep { t: t.clone(), q0, q1 }
    }

    /// δ(x) = (a + x)(b + x)
    pub fn delta(&self) -> &Poly {
        &self.q1
    }
}

impl Action for PolyRep {
    fn params(&self) -> &ParamSet {
        &self.t
    }

    /// T₀ = t₀ + (c − x)(d − x)·D₀
    fn t0(&self, p: &Poly) -> Poly {
        &p.scale(self.t.t0()) + &(&self.q0 * &apply_d(Node::Zero, p))
    }

    /// T₁ = t₁ + (a + x)(b + x)·D₁
    fn t1(&self, p: &Poly) -> Poly {
        &p.scale(self.t.t1()) + &(&self.q1 * &apply_d(Node::One, p))
    }
}

/// A deliberately wrong representation: T₁ with c₁ replaced by c₁ + 1.
///
/// Used to confirm that the relation checks can fail.
#[derive(Clone, Debug)]
pub struct PerturbedRep(pub PolyRep);

impl Action for PerturbedRep {
    fn params(&self) -> &ParamSet {
        self.0.params()
    }

    fn t0(&self, p: &Poly) -> Poly {
        self.0.t0(p)
    }

    fn t1(&self, p: &Poly) -> Poly {
        &self.0.t1(p) + &(&p.reflect() - p)
    }
}

pub fn apply_t(i: Node, t: &ParamSet, p: &Poly) -> Poly {
    PolyRep::new(t).t(i, p)
}

pub fn apply_u(i: Node, t: &ParamSet, p: &Poly) -> Poly {
    PolyRep::new(t).u(i, p)
}

pub fn apply_y(t: &ParamSet, p: &Poly) -> Poly {
    PolyRep::new(t).y(p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// C± = (t₁ ± T₁)/(2t₁)
pub fn apply_c(sign: Sign, t: &ParamSet, p: &Poly) -> Result<Poly> {
    if *t.t1() == 0 {
        return Err(Error::ZeroParameter("t1"));
    }
    let tp = apply_t(Node::One, t, p);
    let base = p.scale(t.t1());
    let num = match sign {
        Sign::Plus => &base + &tp,
        Sign::Minus => &base - &tp,
    };
    num.div_scalar(&Rational::from(t.t1() * 2u32))
}

/// S₀ = U₁Y − YU₁ and S₁ = T₁Y − YT₁.
pub fn apply_intertwiner(i: Node, t: &ParamSet, p: &Poly) -> Poly {
    let rep = PolyRep::new(t);
    intertwiner(&rep, i, p)
}

pub(crate) fn intertwiner<A: Action + ?Sized>(rep: &A, i: Node, p: &Poly) -> Poly {
    let yp = rep.y(p);
    match i {
        Node::Zero => &rep.u1(&yp) - &rep.y(&rep.u1(p)),
        Node::One => &rep.t1(&yp) - &rep.y(&rep.t1(p)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn weyl_words() {
        let p = Poly::from_i64(&[0, -2, 0, 1]);
        assert_eq!(apply_weyl(&[Weyl::S1], &Poly::x()), Poly::from_i64(&[0, -1]));
        assert_eq!(apply_weyl(&[Weyl::S1, Weyl::S0], &p), p.shift(&q(1, 1)));
        assert_eq!(apply_weyl(&[Weyl::S0, Weyl::S0], &p), p);
    }

    #[test]
    fn divided_differences() {
        assert_eq!(apply_d(Node::One, &Poly::monomial(3)), Poly::from_i64(&[0, 0, -1]));
        assert_eq!(apply_d(Node::One, &Poly::monomial(2)), Poly::zero());
        assert_eq!(apply_d(Node::Zero, &Poly::monomial(2)), Poly::one());
        assert_eq!(apply_d(Node::Zero, &Poly::monomial(3)), Poly::from_i64(&[1, -1, 1]));
    }

    #[test]
    fn generators_on_low_degrees() {
        let t = ParamSet::canonical();
        assert_eq!(apply_t(Node::One, &t, &Poly::one()), Poly::constant(q(3, 5)));
        assert_eq!(apply_t(Node::Zero, &t, &Poly::one()), Poly::constant(q(2, 3)));
        let want = Poly::new(vec![q(-416, 1225), q(-3, 5), q(-1, 1)]);
        assert_eq!(apply_t(Node::One, &t, &Poly::x()), want);
        assert_eq!(apply_u(Node::One, &t, &Poly::one()), Poly::new(vec![q(-3, 5), q(-1, 1)]));
        assert_eq!(apply_u(Node::Zero, &t, &Poly::one()), Poly::new(vec![q(-7, 6), q(1, 1)]));
        let u1 = apply_u(Node::One, &t, &apply_u(Node::One, &t, &Poly::one()));
        assert_eq!(u1, Poly::constant(q(1, 49)));
    }

    #[test]
    fn y_on_low_degrees() {
        let t = ParamSet::canonical();
        assert_eq!(apply_y(&t, &Poly::one()), Poly::constant(q(19, 15)));
        let [a, b, c, d] = t.abcd();
        let want = Poly::new(vec![c * d - a * b, q(-34, 15)]);
        assert_eq!(apply_y(&t, &Poly::x()), want);
        assert_eq!(apply_y(&t, &Poly::monomial(4)).leading(), q(49, 15));
    }

    #[test]
    fn idempotents_on_examples() {
        let t = ParamSet::canonical();
        assert_eq!(apply_c(Sign::Plus, &t, &Poly::one()).unwrap(), Poly::one());
        let m = apply_c(Sign::Minus, &t, &Poly::monomial(3)).unwrap();
        assert!(apply_c(Sign::Plus, &t, &m).unwrap().is_zero());
        let want = Poly::new(vec![-q(416, 1225), q(0, 1), q(-1, 1)]).scale(&q(5, 6));
        assert_eq!(apply_c(Sign::Plus, &t, &Poly::x()).unwrap(), want);
        let t0 = ParamSet::new(q(1, 3), q(1, 5), q(0, 1), q(1, 7));
        assert_eq!(apply_c(Sign::Plus, &t0, &Poly::x()), Err(Error::ZeroParameter("t1")));
    }

    #[test]
    fn intertwiners_on_one() {
        let t = ParamSet::canonical();
        assert!(apply_intertwiner(Node::One, &t, &Poly::one()).is_zero());
    }
}
