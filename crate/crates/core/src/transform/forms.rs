//! The bilinear forms ⟨·,·⟩ and ⟨·,·⟩⁺, by exact expansion or by quadrature on iℝ.

use super::pair::SpectralTransform;
use super::weights::{inner_one_product, weight_delta, Variant};
use crate::daha::{ParamSet, Poly};
use crate::error::Result;
use crate::numeric::{quad_imaginary_axis_multi, HpComplex, QuadOptions, QuadResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormMethod {
    Expansion,
    Quadrature,
}

/// Quadrature settings for integrands p(x)Δ(x) with deg p ≤ `max_degree`.
///
/// |Δ(iy)| decays like e^{−2π|y|}; the nearest poles of Δ sit at ±min(a,b,c,d).
pub fn weight_quad_options(t: &ParamSet, max_degree: usize, tol: f64, prec: u32) -> QuadOptions {
    let [a, b, c, d] = t.abcd();
    let gap = [a, b, c, d].iter().map(|q| q.to_f64()).fold(f64::INFINITY, f64::min);
    let growth = 2.0 * t.abcd_sum().to_f64() + max_degree as f64 + 2.0;
    QuadOptions::new(2.0 * std::f64::consts::PI, tol, prec)
        .pole_gap(gap)
        .poly_allowance(growth.max(4.0))
}

/// (1/2πi)∫_{iℝ} p(x)Δ(x)dx for several polynomials at once.
pub fn integrate_against_weight(t: &ParamSet, variant: Variant, polys: &[Poly], opts: &QuadOptions) -> Result<QuadResult> {
    t.require_quadrature()?;
    quad_imaginary_axis_multi(
        |x| {
            let w = weight_delta(t, x, variant)?;
            Ok(polys.iter().map(|p| &p.eval_hp(x) * &w).collect())
        },
        opts,
    )
}

/// ⟨f,g⟩ (full) or ⟨f,g⟩⁺ (plus) as a number.
///
/// Expansion needs exact admissibility and multiplies the exact ratio by the
/// Gamma product for ⟨1,1⟩; quadrature integrates along iℝ.
pub fn bilinear_form(
    t: &ParamSet,
    f: &Poly,
    g: &Poly,
    method: FormMethod,
    variant: Variant,
    tol: f64,
    prec: u32,
) -> Result<HpComplex> {
    match method {
        FormMethod::Expansion => {
            let ratio = SpectralTransform::new(t, variant)?.inner_ratio(f, g)?;
            Ok(inner_one_product(t, variant).value(prec)?.scale_rational(&ratio))
        }
        FormMethod::Quadrature => {
            let fg = f * g;
            let deg = fg.degree().unwrap_or(0);
            let opts = weight_quad_options(t, deg, tol, prec);
            Ok(integrate_against_weight(t, variant, &[fg], &opts)?.value().clone())
        }
    }
}
