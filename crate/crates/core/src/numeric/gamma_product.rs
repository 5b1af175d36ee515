//! Products of Gamma values and sines with exact bookkeeping.

use super::gamma::{gamma_shift_ratio, log_gamma};
use super::hp::HpComplex;
use crate::error::{Error, Result};
use rug::{Float, Rational};
use std::collections::BTreeMap;

/// c · π^p · Π Γ(α_i)^{e_i} · Π sin(πβ_j)^{f_j} with rational c, α_i, β_j.
///
/// Two products whose arguments agree modulo integers (with matching net
/// exponents per residue class) have an exact rational ratio.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct GammaProduct {
    pub coeff: Rational,
    pub pi_power: i32,
    pub gammas: Vec<(Rational, i32)>,
    pub sines: Vec<(Rational, i32)>,
}

fn frac(q: &Rational) -> Rational {
    let f = q.clone().floor();
    Rational::from(q - f)
}

impl GammaProduct {
    pub fn constant(c: Rational) -> Self {
        GammaProduct {
            coeff: c,
            ..Default::default()
        }
    }

    pub fn gamma(mut self, arg: Rational, exp: i32) -> Self {
        self.gammas.push((arg, exp));
        self
    }

    pub fn sine(mut self, arg: Rational, exp: i32) -> Self {
        self.sines.push((arg, exp));
        self
    }

    pub fn pi(mut self, exp: i32) -> Self {
        self.pi_power += exp;
        self
    }

    pub fn times(&self, other: &GammaProduct) -> GammaProduct {
        let mut out = self.clone();
        out.coeff *= &other.coeff;
        out.pi_power += other.pi_power;
        out.gammas.extend(other.gammas.iter().cloned());
        out.sines.extend(other.sines.iter().cloned());
        out
    }

    pub fn inverse(&self) -> Result<GammaProduct> {
        if self.coeff == 0 {
            return Err(Error::DivisionByZero("inverse of a vanishing Gamma product".into()));
        }
        Ok(GammaProduct {
            coeff: Rational::from(1) / self.coeff.clone(),
            pi_power: -self.pi_power,
            gammas: self.gammas.iter().map(|(a, e)| (a.clone(), -e)).collect(),
            sines: self.sines.iter().map(|(a, e)| (a.clone(), -e)).collect(),
        })
    }

    /// self / other as an exact rational, if the transcendental parts cancel.
    pub fn ratio_to(&self, other: &GammaProduct) -> Result<Rational> {
        if other.coeff == 0 {
            return Err(Error::DivisionByZero("ratio to a vanishing Gamma product".into()));
        }
        if self.pi_power != other.pi_power {
            return Err(Error::Admissibility("powers of π differ".into()));
        }
        let mut out = Rational::from(&self.coeff / &other.coeff);

        let mut classes: BTreeMap<Rational, Vec<(Rational, i32)>> = BTreeMap::new();
        for (a, e) in &self.gammas {
            classes.entry(frac(a)).or_default().push((a.clone(), *e));
        }
        for (a, e) in &other.gammas {
            classes.entry(frac(a)).or_default().push((a.clone(), -e));
        }
        for (class, members) in classes {
            let net: i32 = members.iter().map(|(_, e)| e).sum();
            if net != 0 {
                return Err(Error::Admissibility(format!(
                    "Gamma arguments in class {class} do not cancel"
                )));
            }
            let reference = members.iter().map(|(a, _)| a.clone()).min().unwrap();
            for (a, e) in members {
                let k = Rational::from(&a - &reference);
                let k = k.numer().to_i64().unwrap();
                let r = gamma_shift_ratio(&reference, k)?;
                if r == 0 {
                    return Err(Error::Pole(format!("Gamma({reference}) in an exact ratio")));
                }
                out *= pow(&r, e);
            }
        }

        let mut sclasses: BTreeMap<Rational, Vec<(Rational, i32)>> = BTreeMap::new();
        for (a, e) in &self.sines {
            sclasses.entry(frac(a)).or_default().push((a.clone(), *e));
        }
        for (a, e) in &other.sines {
            sclasses.entry(frac(a)).or_default().push((a.clone(), -e));
        }
        for (class, members) in sclasses {
            let net: i32 = members.iter().map(|(_, e)| e).sum();
            if net != 0 {
                return Err(Error::Admissibility(format!("sine arguments in class {class} do not cancel")));
            }
            for (a, e) in members {
                let k = Rational::from(&a - &class).numer().to_i64().unwrap();
                if (k * e as i64) % 2 != 0 {
                    out = -out;
                }
            }
        }
        Ok(out)
    }

    /// log of the value (principal branches summed factor by factor).
    pub fn log_value(&self, prec: u32) -> Result<HpComplex> {
        if self.coeff == 0 {
            return Err(Error::DivisionByZero("log of a vanishing Gamma product".into()));
        }
        let mut acc = HpComplex::from_rational(&self.coeff, prec).ln();
        if self.pi_power != 0 {
            let lp = HpComplex::pi(prec).ln() * self.pi_power;
            acc = &acc + &HpComplex::from_real(lp);
        }
        for (a, e) in &self.gammas {
            let l = log_gamma(&HpComplex::from_rational(a, prec))?;
            acc = &acc + &l.scale(&Float::with_val(prec, *e));
        }
        for (a, e) in &self.sines {
            let x = HpComplex::from_rational(a, prec).scale(&HpComplex::pi(prec));
            let s = x.sin();
            if s.is_zero() {
                return Err(Error::DivisionByZero(format!("sin(π·{a}) vanishes")));
            }
            acc = &acc + &s.ln().scale(&Float::with_val(prec, *e));
        }
        Ok(acc)
    }

    pub fn value(&self, prec: u32) -> Result<HpComplex> {
        if self.coeff == 0 {
            return Ok(HpComplex::zero(prec));
        }
        Ok(self.log_value(prec)?.exp())
    }
}

fn pow(r: &Rational, e: i32) -> Rational {
    let mut out = Rational::from(1);
    for _ in 0..e.unsigned_abs() {
        out *= r;
    }
    if e < 0 {
        Rational::from(1) / out
    } else {
        out
    }
}
