//! Quadrature of polynomials against the kernels φ_λ and 𝔈 on iℝ.

use super::gaussian::{GaussianSpec, Twist};
use super::phi::{delta_at, phi_lambda};
use crate::daha::{ParamSet, Poly};
use crate::error::{Error, Result};
use crate::numeric::{quad_imaginary_axis_multi, HpComplex, QuadOptions, QuadResult};
use crate::transform::{weight_delta, Variant};
use rug::Rational;
use std::collections::HashMap;
use std::ops::Range;

/// Precision and tolerances shared by the kernel integrals.
#[derive(Clone, Copy, Debug)]
pub struct KernelQuad {
    pub quad_tol: f64,
    pub series_tol: f64,
    pub prec: u32,
}

impl KernelQuad {
    pub fn new(quad_tol: f64, prec: u32) -> Self {
        KernelQuad {
            quad_tol,
            series_tol: (quad_tol * 1e-3).max(1e-30),
            prec,
        }
    }

    /// Options for integrands p·kernel·Δ_𝐬: the kernels grow like e^{π|y|}
    /// and Δ decays like e^{−2π|y|}, leaving decay rate π.
    pub fn options(&self, weight_params: &ParamSet, variant: Variant, max_degree: usize) -> QuadOptions {
        QuadOptions::new(std::f64::consts::PI, self.quad_tol, self.prec)
            .pole_gap(pole_gap(weight_params, variant))
            .poly_allowance(2.0 * weight_params.abcd_sum().to_f64().abs() + max_degree as f64 + 4.0)
    }
}

/// A pole of Δ(·;𝐬) on the wrong side of iℝ, with the sign of its residue
/// in (1/2πi)∫_𝒞 − (1/2πi)∫_{iℝ}.
#[derive(Clone, Debug, PartialEq)]
pub struct CrossingPole {
    pub at: Rational,
    pub sign: i32,
}

/// Start points of the decreasing and increasing pole sequences of Δ(·;𝐬)
/// (x = −e−k and x = e'+k, k ≥ 0).
fn pole_sequences(s: &ParamSet, variant: Variant) -> Vec<(Rational, Rational)> {
    let [a, b, c, d] = s.abcd();
    let up = |e: &Rational| match variant {
        Variant::Full => Rational::from(e + 1u32),
        Variant::Plus => e.clone(),
    };
    vec![
        (Rational::from(-&a), up(&a)),
        (Rational::from(-&b), up(&b)),
        (Rational::from(-&c), c.clone()),
        (Rational::from(-&d), d.clone()),
    ]
}

/// Poles that iℝ fails to separate: decreasing ones with Re x > 0 and
/// increasing ones with Re x < 0. Empty whenever a, b, c, d > 0.
pub fn crossing_poles(s: &ParamSet, variant: Variant) -> Vec<CrossingPole> {
    let mut out = Vec::new();
    for (down, up) in pole_sequences(s, variant) {
        let mut p = down;
        while p > 0 {
            out.push(CrossingPole { at: p.clone(), sign: 1 });
            p -= 1u32;
        }
        let mut p = up;
        while p < 0 {
            out.push(CrossingPole { at: p.clone(), sign: -1 });
            p += 1u32;
        }
    }
    out
}

/// Distance from iℝ to the nearest pole of Δ(·;𝐬).
pub fn pole_gap(s: &ParamSet, variant: Variant) -> f64 {
    let mut gap = 1.0f64;
    for (down, up) in pole_sequences(s, variant) {
        for (start, step) in [(down, -1.0), (up, 1.0)] {
            let x0 = start.to_f64();
            let mut x = x0;
            while (x - x0).abs() <= x0.abs() + 1.0 {
                gap = gap.min(x.abs());
                x += step;
            }
        }
    }
    gap
}

/// Conditions for the separating contour 𝒞: exact admissibility and 0 < d < 1,
/// so the Gaussians G_τ and the d-sequence of Δ stay off iℝ.
pub fn require_contour(s: &ParamSet) -> Result<()> {
    s.require_exact()?;
    let d = s.d();
    if d <= 0 || d >= 1 {
        return Err(Error::Admissibility(format!("{s}: d = {d} is outside (0, 1)")));
    }
    Ok(())
}

pub fn contour_ok(s: &ParamSet) -> bool {
    require_contour(s).is_ok()
}

/// (1/2πi)∫_𝒞 over the contour separating the pole sequences of Δ(·;𝐬): the
/// integral over iℝ corrected by the residues of the poles it misplaces.
///
/// Residues come from the symmetric limit ε(F(p+ε) − F(p−ε))/2, exact up to O(ε²).
pub fn contour_integral_multi<F>(s: &ParamSet, variant: Variant, mut f: F, opts: &QuadOptions) -> Result<QuadResult>
where
    F: FnMut(&HpComplex) -> Result<Vec<HpComplex>>,
{
    require_contour(s)?;
    let mut r = quad_imaginary_axis_multi(&mut f, opts)?;
    let n = r.values.len();
    correct_residues(&mut r, 0..n, s, variant, &mut f, opts.prec)?;
    Ok(r)
}

/// Adds the crossing-pole residues of Δ(·;𝐬) to the given components of an iℝ integral.
fn correct_residues<F>(r: &mut QuadResult, components: Range<usize>, s: &ParamSet, variant: Variant, f: &mut F, prec: u32) -> Result<()>
where
    F: FnMut(&HpComplex) -> Result<Vec<HpComplex>>,
{
    let eps = Rational::from((1, 1u64 << 40));
    let half_eps = Rational::from(&eps / 2u32);
    let at = |q: Rational| HpComplex::from_rational(&q, prec);
    for pole in crossing_poles(s, variant) {
        let right = f(&at(Rational::from(&pole.at + &eps)))?;
        let left = f(&at(Rational::from(&pole.at - &eps)))?;
        let w = Rational::from(&half_eps * pole.sign);
        for i in components.clone() {
            r.values[i] = &r.values[i] + &(&right[i] - &left[i]).scale_rational(&w);
        }
    }
    Ok(())
}

/// Pole gap for integrands f·g·Θ(·;𝐬) with f, g ∈ 𝒜·G_τ: Θ keeps the a, b, c
/// poles of Δ and G_τ² adds poles at ±(1−d+k).
fn theta_gap(s: &ParamSet, variant: Variant) -> f64 {
    let one_minus_d = (Rational::from(1) - s.d()).to_f64();
    pole_gap(s, variant).min(one_minus_d)
}

/// Memoizes an even function of x, evaluating once per pair ±x.
struct EvenCache<F> {
    f: F,
    values: HashMap<String, HpComplex>,
}

impl<F: FnMut(&HpComplex) -> Result<HpComplex>> EvenCache<F> {
    fn new(f: F) -> Self {
        EvenCache {
            f,
            values: HashMap::new(),
        }
    }

    fn get(&mut self, x: &HpComplex) -> Result<HpComplex> {
        let (key, y) = even_key(x);
        if let Some(v) = self.values.get(&key) {
            return Ok(v.clone());
        }
        let v = (self.f)(&y)?;
        self.values.insert(key, v.clone());
        Ok(v)
    }
}

/// Representative of {x, −x} and a hashable key for it.
fn even_key(x: &HpComplex) -> (String, HpComplex) {
    let flip = *x.im() < 0 || (x.im().is_zero() && *x.re() < 0);
    let y = if flip { -x.clone() } else { x.clone() };
    let key = format!("{}|{}", y.re().to_string_radix(16, None), y.im().to_string_radix(16, None));
    (key, y)
}

fn degree_of(polys: &[Poly]) -> usize {
    polys.iter().filter_map(Poly::degree).max().unwrap_or(0)
}

/// ⟨p_j, φ_λ⟩⁺ over 𝐭^τ, i.e. (1/2πi)∫ p_j(x)φ_λ(x;𝐭)Δ⁺(x;𝐭^τ)dx.
pub fn phi_pairing(t: &ParamSet, polys: &[Poly], lambda: &HpComplex, q: &KernelQuad) -> Result<QuadResult> {
    let tt = t.tau();
    let mut phi = EvenCache::new(|x: &HpComplex| Ok(phi_lambda(t, x, lambda, q.series_tol)?.value));
    let opts = q.options(&tt, Variant::Plus, degree_of(polys));
    contour_integral_multi(
        &tt,
        Variant::Plus,
        |x| {
            let k = &phi.get(x)? * &weight_delta(&tt, x, Variant::Plus)?;
            Ok(polys.iter().map(|p| &p.eval_hp(x) * &k).collect())
        },
        &opts,
    )
}

/// Both even parts of 𝔈(x,λ), cached together: φ_λ(x;𝐭) and φ_λ(x;𝐭 with t₁+1).
struct FrakKernel<'a> {
    t: &'a ParamSet,
    lambda: &'a HpComplex,
    weyl_dual: HpComplex,
    cache: HashMap<String, (HpComplex, HpComplex)>,
    tol: f64,
}

impl<'a> FrakKernel<'a> {
    fn new(t: &'a ParamSet, lambda: &'a HpComplex, tol: f64) -> Self {
        FrakKernel {
            t,
            lambda,
            weyl_dual: delta_at(&t.sigma(), lambda),
            cache: HashMap::new(),
            tol,
        }
    }

    /// 𝔈(x,λ)
    fn eval(&mut self, x: &HpComplex) -> Result<HpComplex> {
        let (key, y) = even_key(x);
        let (base, shifted) = match self.cache.get(&key) {
            Some(v) => v.clone(),
            None => {
                let b = phi_lambda(self.t, &y, self.lambda, self.tol)?.value;
                let s = phi_lambda(&self.t.shift_t1(), &y, self.lambda, self.tol)?.value;
                self.cache.insert(key, (b.clone(), s.clone()));
                (b, s)
            }
        };
        Ok(&base + &(&(&delta_at(self.t, x) * &self.weyl_dual) * &shifted))
    }
}

/// ⟨p_j, 𝔈(·,λ)⟩ over 𝐭^τ, i.e. (1/2πi)∫ p_j(x)𝔈(x,λ)Δ(x;𝐭^τ)dx.
pub fn frak_pairing(t: &ParamSet, polys: &[Poly], lambda: &HpComplex, q: &KernelQuad) -> Result<QuadResult> {
    let tt = t.tau();
    let mut kernel = FrakKernel::new(t, lambda, q.series_tol);
    let opts = q.options(&tt, Variant::Full, degree_of(polys) + 2);
    contour_integral_multi(
        &tt,
        Variant::Full,
        |x| {
            let k = &kernel.eval(x)? * &weight_delta(&tt, x, Variant::Full)?;
            Ok(polys.iter().map(|p| &p.eval_hp(x) * &k).collect())
        },
        &opts,
    )
}

/// G_τ(x)^{-1}G(x)^{-1} = sin π(d+x) sin π(d−x)/π².
pub fn theta_factor(t: &ParamSet, x: &HpComplex) -> HpComplex {
    let prec = x.precision_bits();
    let pi = HpComplex::pi(prec);
    let d = t.d();
    let s = |z: HpComplex| z.scale(&pi).sin();
    let prod = &s(x.add_rational(&d)) * &s((-x).add_rational(&d));
    prod.scale(&pi.clone().square().recip())
}

/// Θ(x) = G_τ(x)^{-1}G(x)^{-1}Δ(x), or Θ⁺ with Δ⁺.
pub fn theta(t: &ParamSet, x: &HpComplex, variant: Variant) -> Result<HpComplex> {
    Ok(&theta_factor(t, x) * &weight_delta(t, x, variant)?)
}

/// ℰ(x,λ)·Θ(x;𝐭)·G_τ(x), the part of the ℱ integrand shared by all f = p·G_τ.
struct WilsonKernel<'a> {
    t: &'a ParamSet,
    g_tau: GaussianSpec,
    g_lambda: HpComplex,
}

impl<'a> WilsonKernel<'a> {
    fn new(t: &'a ParamSet, lambda: &HpComplex) -> Result<Self> {
        Ok(WilsonKernel {
            t,
            g_tau: GaussianSpec::twisted(t, Twist::Tau),
            g_lambda: GaussianSpec::twisted(t, Twist::SigmaTau).eval(lambda)?.value,
        })
    }

    fn at(&self, x: &HpComplex, frak: &HpComplex, variant: Variant) -> Result<HpComplex> {
        let gx = self.g_tau.eval(x)?.value;
        let e = &(&gx * &self.g_lambda) * frak;
        Ok(&(&gx * &e) * &theta(self.t, x, variant)?)
    }
}

/// {f_j, ℰ(·,λ)}_𝐭 for f_j = p_j·G_τ, with the integrand f·ℰ·Θ assembled literally.
pub fn wilson_pairing(t: &ParamSet, polys: &[Poly], lambda: &HpComplex, q: &KernelQuad) -> Result<QuadResult> {
    let mut frak = FrakKernel::new(t, lambda, q.series_tol);
    let wk = WilsonKernel::new(t, lambda)?;
    let opts = q.options(t, Variant::Full, degree_of(polys) + 2).pole_gap(theta_gap(t, Variant::Full));
    contour_integral_multi(
        t,
        Variant::Full,
        |x| {
            let k = wk.at(x, &frak.eval(x)?, Variant::Full)?;
            Ok(polys.iter().map(|p| &p.eval_hp(x) * &k).collect())
        },
        &opts,
    )
}

/// ⟨p_j, 𝔈(·,λ)⟩_{𝐭^τ} and {p_j·G_τ, ℰ(·,λ)}_𝐭 from one pass over the nodes.
///
/// The two integrands share every kernel value; only their assembly differs.
pub fn kernel_pairings(t: &ParamSet, polys: &[Poly], lambda: &HpComplex, q: &KernelQuad) -> Result<(QuadResult, QuadResult)> {
    let tt = t.tau();
    require_contour(t)?;
    require_contour(&tt)?;
    let mut frak = FrakKernel::new(t, lambda, q.series_tol);
    let wk = WilsonKernel::new(t, lambda)?;
    let gap = pole_gap(&tt, Variant::Full).min(theta_gap(t, Variant::Full));
    let opts = q.options(&tt, Variant::Full, degree_of(polys) + 2).pole_gap(gap);
    let n = polys.len();
    let mut integrand = |x: &HpComplex| -> Result<Vec<HpComplex>> {
        let fr = frak.eval(x)?;
        let k1 = &fr * &weight_delta(&tt, x, Variant::Full)?;
        let k2 = wk.at(x, &fr, Variant::Full)?;
        let mut out: Vec<HpComplex> = polys.iter().map(|p| &p.eval_hp(x) * &k1).collect();
        out.extend(polys.iter().map(|p| &p.eval_hp(x) * &k2));
        Ok(out)
    };
    let mut r = quad_imaginary_axis_multi(&mut integrand, &opts)?;
    correct_residues(&mut r, 0..n, &tt, Variant::Full, &mut integrand, q.prec)?;
    correct_residues(&mut r, n..2 * n, t, Variant::Full, &mut integrand, q.prec)?;
    let split = |range: Range<usize>| QuadResult {
        values: r.values[range.clone()].to_vec(),
        abs_scale: r.abs_scale[range].to_vec(),
        error: r.error,
        nodes: r.nodes,
    };
    Ok((split(0..n), split(n..2 * n)))
}

/// {f_j, ℰ⁺(·,λ)}⁺_𝐭 = (1/4πi)∫ f_j ℰ⁺ Θ⁺ for f_j = p_j·G_τ with even p_j.
pub fn wilson_pairing_plus(t: &ParamSet, polys: &[Poly], lambda: &HpComplex, q: &KernelQuad) -> Result<QuadResult> {
    let mut phi = EvenCache::new(|x: &HpComplex| Ok(phi_lambda(t, x, lambda, q.series_tol)?.value));
    let wk = WilsonKernel::new(t, lambda)?;
    let half = Rational::from((1, 2));
    let opts = q.options(t, Variant::Plus, degree_of(polys)).pole_gap(theta_gap(t, Variant::Plus));
    contour_integral_multi(
        t,
        Variant::Plus,
        |x| {
            let k = wk.at(x, &phi.get(x)?, Variant::Plus)?.scale_rational(&half);
            Ok(polys.iter().map(|p| &p.eval_hp(x) * &k).collect())
        },
        &opts,
    )
}

/// A pointwise-evaluated function on the contour.
pub type Pointwise<'a> = Box<dyn Fn(&HpComplex) -> Result<HpComplex> + 'a>;

/// {f_j, g_j}_𝐭 (or {f_j, g_j}⁺_𝐭 with its extra ½) for pointwise-given pairs.
///
/// f·g decays like e^{−2π|y|} when both carry a factor G_τ, and Θ grows
/// at most polynomially.
pub fn theta_forms(t: &ParamSet, variant: Variant, pairs: &[(Pointwise, Pointwise)], q: &KernelQuad, degree: usize) -> Result<Vec<HpComplex>> {
    let opts = QuadOptions::new(2.0 * std::f64::consts::PI, q.quad_tol, q.prec)
        .pole_gap(theta_gap(t, variant))
        .poly_allowance(2.0 * t.abcd_sum().to_f64().abs() + degree as f64 + 4.0);
    let r = contour_integral_multi(
        t,
        variant,
        |x| {
            let th = theta(t, x, variant)?;
            pairs.iter().map(|(f, g)| Ok(&(&f(x)? * &g(x)?) * &th)).collect()
        },
        &opts,
    )?;
    let half = Rational::from((1, 2));
    Ok(r.values
        .into_iter()
        .map(|v| match variant {
            Variant::Full => v,
            Variant::Plus => v.scale_rational(&half),
        })
        .collect())
}
