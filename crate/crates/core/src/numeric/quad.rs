//! Integrals along the imaginary axis, (1/2πi)∫_{iℝ} F(x) dx.
//!
//! The substitution y = ε·sinh(u) sends every pole on the real x-axis at
//! distance ≥ ε from the origin to the lines Im u = ±π/2, so the trapezoidal
//! rule in u converges geometrically even when poles crowd the contour.

use super::hp::HpComplex;
use crate::error::{Error, Result};
use rug::Float;

#[derive(Clone, Copy, Debug)]
pub struct QuadOptions {
    /// Exponential decay rate of |F(iy)| in |y|.
    pub decay_rate: f64,
    /// Relative tolerance against the L¹ scale of the integrand.
    pub tol: f64,
    /// Lower bound for the distance from 0 to the nearest pole of F.
    pub pole_gap: f64,
    /// Polynomial growth allowance used when choosing the truncation point.
    pub poly_allowance: f64,
    pub max_depth: u32,
    pub prec: u32,
}

impl QuadOptions {
    pub fn new(decay_rate: f64, tol: f64, prec: u32) -> Self {
        QuadOptions {
            decay_rate,
            tol,
            pole_gap: 0.5,
            poly_allowance: 12.0,
            max_depth: 9,
            prec,
        }
    }

    pub fn pole_gap(mut self, gap: f64) -> Self {
        self.pole_gap = gap;
        self
    }

    pub fn poly_allowance(mut self, p: f64) -> Self {
        self.poly_allowance = p;
        self
    }

    /// Truncation point Y_max with e^{−rate·Y}·(1+Y)^allowance < tol/10.
    pub fn y_max(&self) -> f64 {
        let base = (10.0 / self.tol).ln();
        let mut y = base / self.decay_rate;
        for _ in 0..50 {
            y = (base + self.poly_allowance * (1.0 + y).ln()) / self.decay_rate;
        }
        y.max(1.0)
    }
}

#[derive(Clone, Debug)]
pub struct QuadResult {
    pub values: Vec<HpComplex>,
    /// Approximations of (1/2π)∫|F(iy)| dy, one per component.
    pub abs_scale: Vec<f64>,
    /// Largest difference between the last two refinements, relative to the scale.
    pub error: f64,
    pub nodes: usize,
}

impl QuadResult {
    pub fn value(&self) -> &HpComplex {
        &self.values[0]
    }
}

/// Integrates a single-valued integrand.
pub fn quad_imaginary_axis<F>(mut f: F, opts: &QuadOptions) -> Result<QuadResult>
where
    F: FnMut(&HpComplex) -> Result<HpComplex>,
{
    quad_imaginary_axis_multi(|x| Ok(vec![f(x)?]), opts)
}

/// Integrates several integrands sharing the same nodes.
///
/// Every component must converge before the refinement stops.
pub fn quad_imaginary_axis_multi<F>(mut f: F, opts: &QuadOptions) -> Result<QuadResult>
where
    F: FnMut(&HpComplex) -> Result<Vec<HpComplex>>,
{
    if !(opts.decay_rate > 0.0) {
        return Err(Error::NoDecay(opts.decay_rate));
    }
    let prec = opts.prec;
    let eps = opts.pole_gap.min(1.0);
    let u_max = (opts.y_max() / eps).asinh();
    let h0 = 0.5f64;

    let mut sums: Vec<HpComplex> = Vec::new();
    let mut abs_sums: Vec<f64> = Vec::new();
    let mut nodes = 0usize;
    let mut previous: Option<Vec<HpComplex>> = None;
    let mut last_err = f64::INFINITY;

    for level in 0..=opts.max_depth {
        let h = h0 / f64::powi(2.0, level as i32);
        let kmax = (u_max / h).ceil() as i64;
        for k in -kmax..=kmax {
            if level > 0 && k % 2 == 0 {
                continue;
            }
            let u = Float::with_val(prec, k) * h;
            let sh = Float::with_val(prec, u.sinh_ref()) * eps;
            let ch = Float::with_val(prec, u.cosh_ref()) * eps;
            let x = HpComplex::new(Float::new(prec), sh);
            let vals = f(&x)?;
            if sums.is_empty() {
                sums = vec![HpComplex::zero(prec); vals.len()];
                abs_sums = vec![0.0; vals.len()];
            }
            for (i, v) in vals.iter().enumerate() {
                let wv = v.scale(&ch);
                abs_sums[i] += wv.abs_f64();
                sums[i] = &sums[i] + &wv;
            }
            nodes += 1;
        }

        let two_pi = Float::with_val(prec, HpComplex::pi(prec) * 2u32);
        let factor = Float::with_val(prec, h / two_pi);
        let estimate: Vec<HpComplex> = sums.iter().map(|s| s.scale(&factor)).collect();
        let scale: Vec<f64> = abs_sums
            .iter()
            .map(|a| a * factor.to_f64())
            .collect();

        if let Some(prev) = &previous {
            let mut err = 0.0f64;
            for i in 0..estimate.len() {
                let d = (&estimate[i] - &prev[i]).abs_f64();
                let s = scale[i].max(estimate[i].abs_f64()).max(f64::MIN_POSITIVE);
                err = err.max(d / s);
            }
            if level >= 2 && err <= opts.tol && last_err <= opts.tol.sqrt() {
                return Ok(QuadResult {
                    values: estimate,
                    abs_scale: scale,
                    error: err,
                    nodes,
                });
            }
            last_err = err;
        }
        previous = Some(estimate);
    }
    Err(Error::ToleranceNotMet {
        diff: last_err,
        tol: opts.tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::gamma::gamma;

    #[test]
    fn barnes_lemma_unit_parameters() {
        let prec = 128;
        let one = HpComplex::one(prec);
        let opts = QuadOptions::new(2.0 * std::f64::consts::PI, 1e-12, prec);
        let r = quad_imaginary_axis(
            |x| {
                let p = gamma(&(&one + x))?;
                let m = gamma(&(&one - x))?;
                Ok(&(&p * &p) * &(&m * &m))
            },
            &opts,
        )
        .unwrap();
        assert!((r.value().re().to_f64() - 1.0 / 6.0).abs() < 1e-12);
        assert!(r.value().im().to_f64().abs() < 1e-14);
    }

    #[test]
    fn odd_integrand_vanishes() {
        let opts = QuadOptions::new(1.0, 1e-10, 128);
        let r = quad_imaginary_axis(|x| Ok(x * &x.sqr().exp()), &opts).unwrap();
        assert!(r.value().abs_f64() < 1e-30);
    }

    #[test]
    fn no_decay_is_rejected() {
        let opts = QuadOptions::new(0.0, 1e-10, 128);
        let e = quad_imaginary_axis(|x| Ok(x.clone()), &opts).unwrap_err();
        assert!(matches!(e, Error::NoDecay(_)));
    }
}
