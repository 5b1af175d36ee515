//! The Gaussian G(x;𝐭) = Γ(d ± x) and its twisted variants.

use crate::daha::{Action, ParamSet, Poly, PolyRep};
use crate::error::{Error, Result};
use crate::numeric::{log_gamma, pochhammer, HpComplex};
use rug::Rational;
use serde::Serialize;

/// Distance below which an evaluation point counts as sitting next to a pole.
pub const NEAR_POLE: f64 = 1e-6;

/// A value of a meromorphic function together with its distance to the
/// nearest known pole.
#[derive(Clone, Debug, PartialEq)]
pub struct MeromorphicValue {
    pub value: HpComplex,
    pub near_pole: bool,
    pub pole_distance: f64,
}

impl MeromorphicValue {
    /// A value of an entire function.
    pub fn entire(value: HpComplex) -> Self {
        MeromorphicValue {
            value,
            near_pole: false,
            pole_distance: f64::INFINITY,
        }
    }

    fn with_distance(value: HpComplex, pole_distance: f64) -> Self {
        MeromorphicValue {
            value,
            near_pole: pole_distance < NEAR_POLE,
            pole_distance,
        }
    }

    /// Product of two values; the pole distance is the smaller one.
    pub fn times(&self, other: &MeromorphicValue) -> MeromorphicValue {
        Self::with_distance(&self.value * &other.value, self.pole_distance.min(other.pole_distance))
    }
}

/// The parameter sets attached to the words in σ and τ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Twist {
    /// 𝐭
    Base,
    /// 𝐭^τ = (u₀, t₀, t₁, u₁)
    Tau,
    /// 𝐭^{στ} = (u₀, u₁, t₁, t₀)
    SigmaTau,
    /// 𝐭^{τσ} = (u₁, t₀, t₁, u₀)
    TauSigma,
    /// 𝐭^{τστ} = (t₀, u₁, t₁, u₀)
    TauSigmaTau,
}

impl Twist {
    pub fn apply(self, t: &ParamSet) -> ParamSet {
        match self {
            Twist::Base => t.clone(),
            Twist::Tau => t.tau(),
            Twist::SigmaTau => t.sigma().tau(),
            Twist::TauSigma => t.tau().sigma(),
            Twist::TauSigmaTau => t.tau().sigma().tau(),
        }
    }
}

/// G(x;𝐭) = Γ(offset ± x) with offset = t₀ − u₀ + ½ = d, and its poles at
/// x = ±(offset + n), n ≥ 0.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GaussianSpec {
    pub params: ParamSet,
    #[serde(serialize_with = "ser_rational")]
    pub offset: Rational,
}

fn ser_rational<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

impl GaussianSpec {
    pub fn new(t: &ParamSet) -> Self {
        GaussianSpec {
            params: t.clone(),
            offset: t.d(),
        }
    }

    pub fn twisted(t: &ParamSet, twist: Twist) -> Self {
        Self::new(&twist.apply(t))
    }

    /// Distance from x to the pole lattice ±(offset + n).
    pub fn pole_distance(&self, x: &HpComplex) -> f64 {
        let (re, im) = x.to_f64_pair();
        let d = self.offset.to_f64();
        let one_side = |r: f64| {
            let n = (r - d).round().max(0.0);
            (r - d - n).hypot(im)
        };
        one_side(re).min(one_side(-re))
    }

    pub fn eval(&self, x: &HpComplex) -> Result<MeromorphicValue> {
        let dist = self.pole_distance(x);
        let l = &log_gamma(&x.add_rational(&self.offset))? + &log_gamma(&(-x).add_rational(&self.offset))?;
        Ok(MeromorphicValue::with_distance(l.exp(), dist))
    }

    /// 1/G(x), entire.
    pub fn recip(&self, x: &HpComplex) -> HpComplex {
        use crate::numeric::rgamma;
        &rgamma(&x.add_rational(&self.offset)) * &rgamma(&(-x).add_rational(&self.offset))
    }

    /// G(γ + n)/G(γ) for rational γ and n ≥ 0, exact:
    /// (offset+γ)_n / (offset−γ−n)_n.
    pub fn shift_ratio(&self, gamma: &Rational, n: usize) -> Result<Rational> {
        let up = pochhammer(&Rational::from(&self.offset + gamma), n);
        let down = pochhammer(&(Rational::from(&self.offset - gamma) - n as u64), n);
        if down == 0 {
            return Err(Error::Pole(format!("G at {gamma} + {n}")));
        }
        Ok(up / down)
    }
}

/// G(x;𝐭) = Γ(d ± x).
pub fn gaussian_g(t: &ParamSet, x: &HpComplex) -> Result<MeromorphicValue> {
    GaussianSpec::new(t).eval(x)
}

/// G_{τσ}(γ_m^τ)/G_{τσ}(γ_0^τ) = (−1)ⁿ(a+1−d)_n/(b+c)_n for m = 2n or 2n−1.
pub fn tau_sigma_ratio(t: &ParamSet, m: usize) -> Rational {
    let [a, b, c, d] = t.abcd();
    let n = m.div_ceil(2);
    let num = pochhammer(&(Rational::from(&a - &d) + 1u32), n);
    let den = pochhammer(&Rational::from(&b + &c), n);
    let s = if n % 2 == 0 { 1 } else { -1 };
    num / den * Rational::from(s)
}

/// G_{τστ}(γ_m^τ)/G_{τστ}(γ_0^τ) = (−1)ⁿ(b+c)_n/(a+1−d)_n, the reciprocal of [`tau_sigma_ratio`].
pub fn tau_sigma_tau_ratio(t: &ParamSet, m: usize) -> Result<Rational> {
    let r = tau_sigma_ratio(t, m);
    if r == 0 {
        return Err(Error::Pole(format!("G_tausigmatau at gamma_{m}: (a+1-d)_n vanishes")));
    }
    Ok(Rational::from(1) / r)
}

/// The same ratio computed from the Gaussian itself, exactly through shifted factorials.
pub fn gaussian_ratio_direct(t: &ParamSet, twist: Twist, m: usize) -> Result<Rational> {
    let g = GaussianSpec::twisted(t, twist);
    let tt = t.tau();
    // G is even, so the value at γ_{2n−1} = −γ_{2n} equals the value at γ_{2n}
    g.shift_ratio(&tt.gamma0(), m.div_ceil(2))
}

/// The same ratio by log-Gamma evaluation.
pub fn gaussian_ratio_numeric(t: &ParamSet, twist: Twist, m: usize, prec: u32) -> Result<HpComplex> {
    let g = GaussianSpec::twisted(t, twist);
    let tt = t.tau();
    let at = |q: &Rational| g.eval(&HpComplex::from_rational(q, prec));
    Ok(&at(&tt.gamma(m))?.value / &at(&tt.gamma0())?.value)
}

/// t₀ − c₀(x) − (x − ½ − u₀ + c₀^τ(x)) cleared of the denominator 1 − 2x.
///
/// Vanishes identically; this is the scalar identity behind G∘T₀ = U₀^τ∘G.
pub fn conjugation_residual(t: &ParamSet) -> Poly {
    let q0 = |s: &ParamSet| {
        let [_, _, c, d] = s.abcd();
        &Poly::new(vec![c, Rational::from(-1)]) * &Poly::new(vec![d, Rational::from(-1)])
    };
    let denom = Poly::from_i64(&[1, -2]);
    let half = Rational::from((1, 2));
    let lhs = &denom.scale(t.t0()) - &q0(t);
    let lin = Poly::new(vec![-(half + t.u0()), Rational::from(1)]);
    let rhs = &(&lin * &denom) + &q0(&t.tau());
    &lhs - &rhs
}

/// A scalar function evaluated pointwise, for difference-reflection operators
/// acting on non-polynomial functions.
pub type PointFn<'a> = dyn Fn(&HpComplex) -> Result<HpComplex> + 'a;

/// c₁(x) = (a+x)(b+x)/(2x)
fn c1(t: &ParamSet, x: &HpComplex) -> HpComplex {
    let [a, b, _, _] = t.abcd();
    &(&x.add_rational(&a) * &x.add_rational(&b)) / &x.scale_rational(&Rational::from(2))
}

/// c₀(x) = (c−x)(d−x)/(1−2x)
fn c0(t: &ParamSet, x: &HpComplex) -> HpComplex {
    let [_, _, c, d] = t.abcd();
    let one = Rational::from(1);
    let den = x.scale_rational(&Rational::from(-2)).add_rational(&one);
    &(&(-x).add_rational(&c) * &(-x).add_rational(&d)) / &den
}

/// (T₁f)(x) = t₁f(x) + c₁(x)(f(−x) − f(x))
///
/// At x = 0 the difference quotient is replaced by its limit −ab·f′(0),
/// with f′(0) from a central difference.
pub fn t1_at(t: &ParamSet, f: &PointFn, x: &HpComplex) -> Result<HpComplex> {
    let here = f(x)?;
    if x.is_zero() {
        let prec = x.precision_bits();
        let h = Rational::from((1, 1u64 << 40));
        let hx = HpComplex::from_rational(&h, prec);
        let slope = (&f(&hx)? - &f(&-hx.clone())?).scale_rational(&(Rational::from(1) / (h * 2u32)));
        let ab = Rational::from(&t.a() * &t.b());
        return Ok(&here.scale_rational(t.t1()) - &slope.scale_rational(&ab));
    }
    let there = f(&-x)?;
    Ok(&here.scale_rational(t.t1()) + &(&c1(t, x) * &(&there - &here)))
}

/// (T₀f)(x) = t₀f(x) + c₀(x)(f(1−x) − f(x))
pub fn t0_at(t: &ParamSet, f: &PointFn, x: &HpComplex) -> Result<HpComplex> {
    let here = f(x)?;
    let there = f(&(-x).add_rational(&Rational::from(1)))?;
    Ok(&here.scale_rational(t.t0()) + &(&c0(t, x) * &(&there - &here)))
}

/// (U₀f)(x) = −(T₀f)(x) − ½f(x) + x f(x)
pub fn u0_at(t: &ParamSet, f: &PointFn, x: &HpComplex) -> Result<HpComplex> {
    let here = f(x)?;
    let half = Rational::from((1, 2));
    Ok(&(&(&here * x) - &here.scale_rational(&half)) - &t0_at(t, f, x)?)
}

/// (Yf)(x) = (T₀f)(x) + (T₁f)(x)
pub fn y_at(t: &ParamSet, f: &PointFn, x: &HpComplex) -> Result<HpComplex> {
    Ok(&t0_at(t, f, x)? + &t1_at(t, f, x)?)
}

/// Largest relative mismatch of G·(T_i x^k) against τ(T_i)(G·x^k) over the
/// monomials k ≤ `max_degree` and the given points; τ(T₀) = U₀^τ, τ(T₁) = T₁^τ.
pub fn conjugation_mismatch(t: &ParamSet, max_degree: usize, points: &[HpComplex]) -> Result<(f64, Option<String>)> {
    let spec = GaussianSpec::new(t);
    let tt = t.tau();
    let rep = PolyRep::new(t);
    let mut worst = 0.0f64;
    let mut witness = None;
    for x in points {
        if spec.pole_distance(x) < NEAR_POLE || spec.pole_distance(&(-x).add_rational(&Rational::from(1))) < NEAR_POLE {
            return Err(Error::Pole(format!("sample point {x} sits on the Gaussian pole lattice")));
        }
        for k in 0..=max_degree {
            let mono = Poly::monomial(k);
            let g = |y: &HpComplex| -> Result<HpComplex> { Ok(&spec.eval(y)?.value * &mono.eval_hp(y)) };
            let gx = spec.eval(x)?.value;
            for (name, lhs, rhs) in [
                ("T0", &gx * &rep.t0(&mono).eval_hp(x), u0_at(&tt, &g, x)?),
                ("T1", &gx * &rep.t1(&mono).eval_hp(x), t1_at(&tt, &g, x)?),
            ] {
                let r = lhs.rel_diff(&rhs, 0.0);
                if r > worst {
                    worst = r;
                    witness = Some(format!("{name}, x^{k} at x = {x}"));
                }
            }
        }
    }
    Ok((worst, witness))
}
