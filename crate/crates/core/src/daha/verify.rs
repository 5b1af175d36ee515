//! Exact verification of the defining relations on monomials.

use super::ops::{apply_d, Action, Node, PolyRep};
use super::params::ParamSet;
use super::poly::Poly;
use crate::error::Result;
use crate::report::{Check, VerificationReport};
use rug::Rational;

fn half() -> Rational {
    Rational::from((1, 2))
}

/// Scans x^k for k ≤ max_degree and returns the first nonzero residual.
fn scan<F: FnMut(usize) -> Poly>(max_degree: usize, mut residual: F) -> Option<(String, Poly)> {
    (0..=max_degree).find_map(|k| {
        let r = residual(k);
        (!r.is_zero()).then(|| (Poly::monomial(k).to_string(), r))
    })
}

fn record(name: &str, anchor: &str, max_degree: usize, failure: Option<(String, Poly)>) -> Check {
    let scope = format!("deg ≤ {max_degree}");
    match failure {
        None => Check::exact(name, anchor, scope, None, "0"),
        Some((w, r)) => Check::exact(name, anchor, scope, Some(w), r.to_string()),
    }
}

/// k_i(x) = t_i² − u_i² + (a_i^∨(x))² with a₀^∨ = ½ − x and a₁^∨ = x.
fn cross_coefficient(t: &ParamSet, i: Node) -> Poly {
    let (ti, ui, dual_root) = match i {
        Node::Zero => (t.t0(), t.u0(), Poly::new(vec![half(), Rational::from(-1)])),
        Node::One => (t.t1(), t.u1(), Poly::x()),
    };
    let k = Rational::from(ti * ti) - Rational::from(ui * ui);
    &Poly::constant(k) + &(&dual_root * &dual_root)
}

fn s_i(i: Node, p: &Poly) -> Poly {
    match i {
        Node::Zero => p.reflect_about_half(),
        Node::One => p.reflect(),
    }
}

/// Checks the relations of the representation attached to `t`.
pub fn verify_relations(t: &ParamSet, max_degree: usize) -> Result<VerificationReport> {
    t.require_exact()?;
    Ok(verify_action(&PolyRep::new(t), max_degree))
}

/// The same checks for an arbitrary action, so a faulty one can be exercised.
pub fn verify_action<A: Action>(rep: &A, max_degree: usize) -> VerificationReport {
    let t = rep.params().clone();
    let sq = |q: &Rational| Rational::from(q * q);
    let nodes = [Node::Zero, Node::One];

    let mut checks = Vec::new();

    checks.push(record(
        "T_i^2 = t_i^2",
        "quadratic relations",
        max_degree,
        scan(max_degree, |k| {
            let m = Poly::monomial(k);
            let r0 = &rep.t0(&rep.t0(&m)) - &m.scale(&sq(t.t0()));
            if !r0.is_zero() {
                return r0;
            }
            &rep.t1(&rep.t1(&m)) - &m.scale(&sq(t.t1()))
        }),
    ));

    checks.push(record(
        "U_i^2 = u_i^2",
        "quadratic relations",
        max_degree,
        scan(max_degree, |k| {
            let m = Poly::monomial(k);
            let r0 = &rep.u0(&rep.u0(&m)) - &m.scale(&sq(t.u0()));
            if !r0.is_zero() {
                return r0;
            }
            &rep.u1(&rep.u1(&m)) - &m.scale(&sq(t.u1()))
        }),
    ));

    checks.push(record(
        "T_0 + T_1 + U_0 + U_1 = -1/2",
        "sum relation",
        max_degree,
        scan(max_degree, |k| {
            let m = Poly::monomial(k);
            let s = &(&(&rep.t0(&m) + &rep.t1(&m)) + &rep.u0(&m)) + &rep.u1(&m);
            &s + &m.scale(&half())
        }),
    ));

    checks.push(record(
        "Y x^k = gamma_k x^k + lower terms",
        "triangularity",
        max_degree,
        scan(max_degree, |k| {
            let m = Poly::monomial(k);
            let r = &rep.y(&m) - &m.scale(&t.gamma(k));
            if r.degree().map_or(true, |d| d < k) {
                Poly::zero()
            } else {
                r
            }
        }),
    ));

    // T_i(p f) − (s_i p)·T_i f = k_i·(D_i p)·f for p = x^k and every f = x^j.
    let coeffs = [cross_coefficient(&t, Node::Zero), cross_coefficient(&t, Node::One)];
    let tf: Vec<[Poly; 2]> = (0..=max_degree)
        .map(|j| {
            let f = Poly::monomial(j);
            [rep.t0(&f), rep.t1(&f)]
        })
        .collect();
    let cross_failure = scan(max_degree, |k| {
        let p = Poly::monomial(k);
        for (idx, &i) in nodes.iter().enumerate() {
            let sp = s_i(i, &p);
            let kd = &coeffs[idx] * &apply_d(i, &p);
            for (j, tfj) in tf.iter().enumerate() {
                let f = Poly::monomial(j);
                let lhs = &rep.t(i, &(&p * &f)) - &(&sp * &tfj[idx]);
                let r = &lhs - &(&kd * &f);
                if !r.is_zero() {
                    return r;
                }
            }
        }
        Poly::zero()
    });
    checks.push(record("T_i p(z) - (s_i p)(z) T_i = k_i(z) (D_i p)(z)", "cross relations", max_degree, cross_failure));

    // T₁Y^k − (−Y)^k T₁ = (t₁² − t₀² + Y²)Y^{k−1} for odd k, 0 for even k; on every f = x^j.
    let c = sq(t.t1()) - sq(t.t0());
    let mut y_chains = Vec::new();
    let mut yt_chains = Vec::new();
    for j in 0..=max_degree {
        let f = Poly::monomial(j);
        let mut a = vec![f.clone()];
        let mut b = vec![rep.t1(&f)];
        for _ in 0..=max_degree {
            let na = rep.y(a.last().unwrap());
            let nb = rep.y(b.last().unwrap());
            a.push(na);
            b.push(nb);
        }
        y_chains.push(a);
        yt_chains.push(b);
    }
    let y_failure = scan(max_degree, |k| {
        for j in 0..=max_degree {
            let ya = &y_chains[j];
            let yb = &yt_chains[j];
            let lhs = if k % 2 == 0 {
                &rep.t1(&ya[k]) - &yb[k]
            } else {
                &rep.t1(&ya[k]) + &yb[k]
            };
            let rhs = if k % 2 == 0 {
                Poly::zero()
            } else {
                &ya[k - 1].scale(&c) + &ya[k + 1]
            };
            let r = &lhs - &rhs;
            if !r.is_zero() {
                return r;
            }
        }
        Poly::zero()
    });
    checks.push(record(
        "T_1 q(Y) - (s_1 q)(Y) T_1 = (t_1^2 - t_0^2 + Y^2)/(2Y) (q(Y) - (s_1 q)(Y))",
        "Y commutation",
        max_degree,
        y_failure,
    ));

    checks.push(record(
        "sigma images satisfy the defining relations",
        "duality isomorphism",
        max_degree,
        scan(max_degree, |k| dual_image_residual(&t, k)),
    ));

    VerificationReport::new(checks)
}

/// Residual of the relations satisfied by σ(T₀) = −(T₁^σ + z), σ(T₁) = T₁^σ,
/// σ(z) = −Y^σ, acting on x^k over the dual parameters.
fn dual_image_residual(t: &ParamSet, k: usize) -> Poly {
    let dual = PolyRep::new(&t.sigma());
    let st0 = |p: &Poly| -&(&dual.t1(p) + &p.mul_x());
    let st1 = |p: &Poly| dual.t1(p);
    let sz = |p: &Poly| -&dual.y(p);
    let su0 = |p: &Poly| &(&sz(p) - &st0(p)) - &p.scale(&half());
    let su1 = |p: &Poly| -&(&st1(p) + &sz(p));
    let m = Poly::monomial(k);
    let sq = |q: &Rational| Rational::from(q * q);
    let residuals = [
        &st0(&st0(&m)) - &m.scale(&sq(t.t0())),
        &st1(&st1(&m)) - &m.scale(&sq(t.t1())),
        &su0(&su0(&m)) - &m.scale(&sq(t.u0())),
        &su1(&su1(&m)) - &m.scale(&sq(t.u1())),
        // σ(U₁) = T₀^σ and σ(U₀) = U₀^σ
        &su1(&m) - &dual.t0(&m),
        &su0(&m) - &dual.u0(&m),
    ];
    residuals.into_iter().find(|r| !r.is_zero()).unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::daha::ops::PerturbedRep;

    #[test]
    fn canonical_relations_hold() {
        let r = verify_relations(&ParamSet::canonical(), 12).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.checks.len(), 7);
    }

    #[test]
    fn perturbed_action_fails_with_witness_x() {
        let rep = PerturbedRep(PolyRep::new(&ParamSet::canonical()));
        let r = verify_action(&rep, 6);
        assert!(!r.passed());
        let first = r.failures().next().unwrap();
        assert_eq!(first.name, "T_i^2 = t_i^2");
        assert_eq!(first.witness.as_deref(), Some("x"));
    }

    #[test]
    fn inadmissible_parameters_are_rejected() {
        let t = ParamSet::parse(&["1/3", "1/5", "1/2", "1/7"]).unwrap();
        assert!(matches!(verify_relations(&t, 4), Err(crate::Error::Admissibility(_))));
    }
}
