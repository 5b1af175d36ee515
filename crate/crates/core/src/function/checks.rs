//! Verification of the Gaussian, the Wilson function and the transforms 𝔉, ℱ, ℱ⁺.

use super::frak::{calf_plus_exact, calf_transform, symmetric_calf_plus, ChiGenerator, FrakTransform};
use super::gaussian::{
    conjugation_mismatch, conjugation_residual, gaussian_ratio_direct, gaussian_ratio_numeric, t0_at, t1_at, tau_sigma_ratio,
    tau_sigma_tau_ratio, y_at, GaussianSpec, Twist,
};
use super::integrals::{contour_ok, kernel_pairings, phi_pairing, theta_forms, KernelQuad, Pointwise};
use super::phi::{phi_lambda, reduction_constant, wilson_function_e};
use crate::daha::{ParamSet, Poly};
use crate::error::{Error, Result};
use crate::numeric::{HpComplex, Rational};
use crate::report::{Check, Method, SuiteOptions, VerificationReport};
use crate::transform::checks::{exact_check, numeric_check, random_poly, EXACT_ONLY};
use crate::transform::{bilinear_form, inner_one_product, FormMethod, SpectralTransform, Variant};
use crate::wilson::WilsonFamily;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Tolerance of the quadrature route for ℱ_σ∘ℱ.
pub const INVERSION_QUAD_TOL: f64 = 1e-6;

/// Keeps the larger of two (residual, witness) pairs.
fn worse(acc: (f64, Option<String>), r: f64, w: impl FnOnce() -> String) -> (f64, Option<String>) {
    if r > acc.0 || r.is_nan() {
        (r, Some(w()))
    } else {
        acc
    }
}

fn hp(q: &Rational, prec: u32) -> HpComplex {
    HpComplex::from_rational(q, prec)
}

fn a_plus_b(t: &ParamSet) -> Rational {
    Rational::from(t.a() + t.b())
}

/// Numeric checks integrate over 𝐭 on iℝ and over 𝐭^τ, 𝐭^σ, 𝐭^{στ} on the separating contour.
pub fn numeric_admissible(t: &ParamSet) -> bool {
    t.quadrature_ok() && [t.tau(), t.sigma(), Twist::SigmaTau.apply(t)].iter().all(contour_ok)
}

/// First violated exactness condition among 𝐭^τ and 𝐭^{στ}.
fn twisted_exact_violation(t: &ParamSet) -> Option<String> {
    [t.tau(), Twist::SigmaTau.apply(t)]
        .iter()
        .find_map(|s| s.require_exact().err().map(|e| e.to_string()))
}

// Exact checks

/// G_{τσ} and G_{τστ} ratio laws against the Gaussian itself, for γ_{2n}^τ with n ≤ max_n.
pub fn check_ratio_laws(t: &ParamSet, max_n: usize) -> Result<Option<String>> {
    for n in 0..=max_n {
        let m = 2 * n;
        let ts = tau_sigma_ratio(t, m);
        let tst = tau_sigma_tau_ratio(t, m)?;
        if gaussian_ratio_direct(t, Twist::TauSigma, m)? != ts {
            return Ok(Some(format!("G_tausigma at n = {n}")));
        }
        if gaussian_ratio_direct(t, Twist::TauSigmaTau, m)? != tst {
            return Ok(Some(format!("G_tausigmatau at n = {n}")));
        }
        if Rational::from(&ts * &tst) != 1 {
            return Ok(Some(format!("ratios not reciprocal at n = {n}")));
        }
    }
    Ok(None)
}

/// 𝔾_{στ}∘G_{τσ}∘𝔽_τ equals the basis route on x^k.
pub fn check_composition_basis(fr: &FrakTransform, max_k: usize) -> Result<Option<String>> {
    if fr.composition_constant_ratio()? != 1 {
        return Ok(Some("composition constant differs from K".into()));
    }
    for k in 0..=max_k {
        let p = Poly::monomial(k);
        if fr.composition(&p)? != fr.basis(&p)? {
            return Ok(Some(format!("x^{k}")));
        }
    }
    Ok(None)
}

/// 𝔉(Xp) = χ(X)(𝔉p) for X ∈ {z, Y^τ, T₁^τ} on x^k.
pub fn check_chi_intertwining(fr: &FrakTransform, max_k: usize) -> Result<Option<String>> {
    for k in 0..=max_k {
        let p = Poly::monomial(k);
        for x in [ChiGenerator::Z, ChiGenerator::Y, ChiGenerator::T1] {
            if !fr.chi_residual(x, &p)?.is_zero() {
                return Ok(Some(format!("X = {x:?}, p = x^{k}")));
            }
        }
    }
    Ok(None)
}

/// ℱe_γ = (a+b)·G_{τστ}(γ)/G_{τστ}(γ₀^τ)·e^σ_γ for γ = γ_m^τ, m ≤ max_m,
/// with the ratio taken from the Gaussian itself.
pub fn check_calf_basis(fr: &FrakTransform, max_m: usize) -> Result<Option<String>> {
    let t = fr.params();
    let ab = a_plus_b(t);
    for m in 0..=max_m {
        let factor = Rational::from(&ab * &gaussian_ratio_direct(t, Twist::TauSigmaTau, m)?);
        if fr.calf_basis_factor(m)? != factor {
            return Ok(Some(format!("factor at m = {m}")));
        }
        let e = fr.tau_transform().basis(m)?;
        let want = fr.sigma_tau_transform().basis(m)?.scale(&factor);
        if fr.calf_exact(&e)? != want {
            return Ok(Some(format!("image of e at m = {m}")));
        }
    }
    Ok(None)
}

/// ℱ_σ∘ℱ = (a+b)²: factor(m)·factor_σ(m) = (a+b)² for m ≤ max_m and ℱ_σℱ(x^kG_τ) = (a+b)²x^kG_τ.
pub fn check_calf_inversion(fr: &FrakTransform, dual: &FrakTransform, max_m: usize) -> Result<Option<String>> {
    let ab = a_plus_b(fr.params());
    let ab2 = Rational::from(&ab * &ab);
    for m in 0..=max_m {
        if Rational::from(fr.calf_basis_factor(m)? * dual.calf_basis_factor(m)?) != ab2 {
            return Ok(Some(format!("factor product at m = {m}")));
        }
        let p = Poly::monomial(m);
        if dual.calf_exact(&fr.calf_exact(&p)?)? != p.scale(&ab2) {
            return Ok(Some(format!("x^{m} G_tau")));
        }
    }
    Ok(None)
}

/// {ℱf, ℱg}_{𝐭^σ} = (a+b)²{f, g}_𝐭 for f = pG_τ, g = qG_τ, through
/// {pG_τ, qG_τ}_𝐭 = ⟨p,q⟩_{𝐭^τ} and ⟨1,1⟩_{𝐭^τ} = ⟨1,1⟩_{𝐭^{στ}}.
pub fn check_calf_plancherel(fr: &FrakTransform, pairs: &[(Poly, Poly)]) -> Result<Option<String>> {
    let t = fr.params();
    let ones = inner_one_product(&t.tau(), Variant::Full).ratio_to(&inner_one_product(&Twist::SigmaTau.apply(t), Variant::Full))?;
    if ones != 1 {
        return Ok(Some(format!("<1,1>_tau / <1,1>_sigmatau = {ones}")));
    }
    let ab = a_plus_b(t);
    let ab2 = Rational::from(&ab * &ab);
    for (i, (p, q)) in pairs.iter().enumerate() {
        let lhs = fr.sigma_tau_transform().inner_ratio(&fr.calf_exact(p)?, &fr.calf_exact(q)?)?;
        let rhs = Rational::from(&ab2 * &fr.tau_transform().inner_ratio(p, q)?);
        if lhs != rhs {
            return Ok(Some(format!("pair #{i}: {lhs} vs {rhs}")));
        }
    }
    Ok(None)
}

/// ℱ⁺_σ∘ℱ⁺ = id and the isometry of ℱ⁺ on even polynomials times G_τ.
pub fn check_calf_plus(t: &ParamSet, polys: &[Poly]) -> Result<Option<String>> {
    let st = Twist::SigmaTau.apply(t);
    let ones = inner_one_product(&t.tau(), Variant::Plus).ratio_to(&inner_one_product(&st, Variant::Plus))?;
    if ones != 1 {
        return Ok(Some(format!("<1,1>+_tau / <1,1>+_sigmatau = {ones}")));
    }
    let src = SpectralTransform::new(&t.tau(), Variant::Plus)?;
    let dst = SpectralTransform::new(&st, Variant::Plus)?;
    let images: Vec<Poly> = polys.iter().map(|p| calf_plus_exact(t, p)).collect::<Result<_>>()?;
    for (i, (p, q)) in polys.iter().zip(&images).enumerate() {
        if calf_plus_exact(&t.sigma(), q)? != *p {
            return Ok(Some(format!("inverse fails on #{i}")));
        }
        for (j, (p2, q2)) in polys.iter().zip(&images).enumerate() {
            if dst.inner_ratio(q, q2)? != src.inner_ratio(p, p2)? {
                return Ok(Some(format!("isometry fails on (#{i}, #{j})")));
            }
        }
    }
    Ok(None)
}

// Numeric checks

/// Log-Gamma evaluation of both Gaussian ratios against the Pochhammer laws, n ≤ max_n.
pub fn ratio_laws_numeric(t: &ParamSet, max_n: usize, prec: u32) -> Result<(f64, Option<String>)> {
    let mut acc = (0.0, None);
    for n in 0..=max_n {
        for (twist, exact) in [
            (Twist::TauSigma, tau_sigma_ratio(t, 2 * n)),
            (Twist::TauSigmaTau, tau_sigma_tau_ratio(t, 2 * n)?),
        ] {
            let r = gaussian_ratio_numeric(t, twist, 2 * n, prec)?.rel_diff(&hp(&exact, prec), 0.0);
            acc = worse(acc, r, || format!("{twist:?} at n = {n}"));
        }
    }
    Ok(acc)
}

/// φ_λ(x;𝐭) against φ_x(λ;𝐭^σ).
pub fn phi_duality(t: &ParamSet, points: &[(HpComplex, HpComplex)], tol: f64) -> Result<(f64, Option<String>)> {
    let mut acc = (0.0, None);
    for (x, l) in points {
        let lhs = phi_lambda(t, x, l, tol)?.value;
        let rhs = phi_lambda(&t.sigma(), l, x, tol)?.value;
        acc = worse(acc, lhs.rel_diff(&rhs, 0.0), || format!("x = {x}, lambda = {l}"));
    }
    Ok(acc)
}

/// max |ℰ(x,λ) − ℰ_σ(λ,x)|/(1 + |ℰ(x,λ)|) over the grid xs × lambdas.
pub fn wilson_duality(t: &ParamSet, xs: &[HpComplex], lambdas: &[HpComplex], tol: f64) -> Result<(f64, Option<String>)> {
    let mut acc = (0.0, None);
    for x in xs {
        for l in lambdas {
            let lhs = wilson_function_e(t, x, l, tol)?.value;
            let rhs = wilson_function_e(&t.sigma(), l, x, tol)?.value;
            let r = (&lhs - &rhs).abs_f64() / (1.0 + lhs.abs_f64());
            acc = worse(acc, r, || format!("x = {x}, lambda = {l}"));
        }
    }
    Ok(acc)
}

/// ℰ(x,−γ_m) against Γ(1−a−d)/(Γ(a+b)Γ(a+c))·E(x,γ_m), m ≤ max_m.
pub fn polynomial_reduction(t: &ParamSet, max_m: usize, xs: &[HpComplex], tol: f64) -> Result<(f64, Option<String>)> {
    let fam = WilsonFamily::new(t)?;
    let prec = xs.first().map_or(128, HpComplex::precision_bits);
    let k = reduction_constant(t, prec)?;
    let mut acc = (0.0, None);
    for m in 0..=max_m {
        let e = fam.e(m)?;
        let lambda = hp(&-t.gamma(m), prec);
        for x in xs {
            let lhs = wilson_function_e(t, x, &lambda, tol)?.value;
            let rhs = &k * &e.eval_hp(x);
            acc = worse(acc, lhs.rel_diff(&rhs, 0.0), || format!("m = {m}, x = {x}"));
        }
    }
    Ok(acc)
}

/// ⟨E⁺_τ(·,γ), φ_λ⟩⁺_{𝐭^τ} = 2G_{τστ}(γ)/G_{τστ}(γ₀^τ)·E⁺_{στ}(λ,γ) for γ = γ_{2n}^τ, n ≤ max_n.
pub fn symmetric_kernel_identity(t: &ParamSet, max_n: usize, lambda: &HpComplex, q: &KernelQuad) -> Result<(f64, Option<String>)> {
    let src = SpectralTransform::new(&t.tau(), Variant::Plus)?;
    let dst = SpectralTransform::new(&Twist::SigmaTau.apply(t), Variant::Plus)?;
    let polys: Vec<Poly> = (0..=max_n).map(|n| src.basis(n)).collect::<Result<_>>()?;
    let quad = phi_pairing(t, &polys, lambda, q)?;
    let two = Rational::from(2);
    let mut acc = (0.0, None);
    for (n, v) in quad.values.iter().enumerate() {
        let c = Rational::from(&two * &tau_sigma_tau_ratio(t, 2 * n)?);
        let want = dst.basis(n)?.eval_hp(lambda).scale_rational(&c);
        acc = worse(acc, v.rel_diff(&want, 0.0), || format!("n = {n}, lambda = {lambda}"));
    }
    Ok(acc)
}

/// Residuals of the two kernel identities for p = E_τ(·,γ_m^τ), m ≤ max_m:
/// ⟨p, 𝔈(·,λ)⟩_{𝐭^τ} against 2t₁·(𝔉p/K)(λ), and (ℱ pG_τ)(λ) by quadrature against its closed form.
pub fn kernel_identities(fr: &FrakTransform, max_m: usize, lambda: &HpComplex, q: &KernelQuad) -> Result<[(f64, Option<String>); 2]> {
    let t = fr.params();
    let polys: Vec<Poly> = (0..=max_m).map(|m| fr.tau_transform().basis(m)).collect::<Result<_>>()?;
    let (frak, wilson) = kernel_pairings(t, &polys, lambda, q)?;
    let g = GaussianSpec::twisted(t, Twist::SigmaTau).eval(lambda)?.value;
    let mut acc = [(0.0, None), (0.0, None)];
    for (m, p) in polys.iter().enumerate() {
        let want = fr.calf_exact(p)?.eval_hp(lambda);
        acc[0] = worse(acc[0].clone(), frak.values[m].rel_diff(&want, 0.0), || format!("m = {m}"));
        acc[1] = worse(acc[1].clone(), wilson.values[m].rel_diff(&(&g * &want), 0.0), || format!("m = {m}"));
    }
    Ok(acc)
}

/// Second step of ℱ_σ∘ℱ by quadrature: ℱ_σ applied to the closed form of ℱ(E_τ(·,γ_m^τ)G_τ),
/// compared with (a+b)²E_τ(x,γ_m^τ)G_τ(x).
pub fn calf_inversion_quadrature(fr: &FrakTransform, max_m: usize, x: &HpComplex, q: &KernelQuad) -> Result<(f64, Option<String>)> {
    let t = fr.params();
    let ab = a_plus_b(t);
    let ab2 = Rational::from(&ab * &ab);
    let sources: Vec<Poly> = (0..=max_m).map(|m| fr.tau_transform().basis(m)).collect::<Result<_>>()?;
    let images: Vec<Poly> = sources.iter().map(|p| fr.calf_exact(p)).collect::<Result<_>>()?;
    let back = calf_transform(&t.sigma(), &images, x, q)?;
    let g = GaussianSpec::twisted(t, Twist::Tau).eval(x)?.value;
    let mut acc = (0.0, None);
    for (m, (v, p)) in back.iter().zip(&sources).enumerate() {
        let want = (&g * &p.eval_hp(x)).scale_rational(&ab2);
        acc = worse(acc, v.rel_diff(&want, 0.0), || format!("m = {m}, x = {x}"));
    }
    Ok(acc)
}

/// G_τ^{-1}(Y²)_sym(G_τφ_λ)(x) against λ²φ_λ(x), with
/// (Y²)_sym f = ã²f + A(x)(f(x+1) − f(x)) + A(−x)(f(x−1) − f(x)).
pub fn l_eigen_residual(t: &ParamSet, x: &HpComplex, lambda: &HpComplex, tol: f64) -> Result<f64> {
    let g = GaussianSpec::twisted(t, Twist::Tau);
    let f = |y: &HpComplex| -> Result<HpComplex> { Ok(&g.eval(y)?.value * &phi_lambda(t, y, lambda, tol)?.value) };
    let [a, b, c, d] = t.abcd();
    let coeff = |y: &HpComplex| {
        let num = &(&y.add_rational(&a) * &y.add_rational(&b)) * &(&y.add_rational(&c) * &y.add_rational(&d));
        let two_y = y.scale_rational(&Rational::from(2));
        &num / &(&two_y * &two_y.add_rational(&Rational::from(1)))
    };
    let one = Rational::from(1);
    let f0 = f(x)?;
    let up = &f(&x.add_rational(&one))? - &f0;
    let down = &f(&x.add_rational(&-one.clone()))? - &f0;
    let g0 = hp(&t.gamma0(), x.precision_bits());
    let lhs = &(&(&coeff(x) * &up) + &(&coeff(&-x.clone()) * &down)) + &(&g0.sqr() * &f0);
    Ok(lhs.rel_diff(&(&lambda.sqr() * &f0), 0.0))
}

/// (Yℰ(·,λ))(x) + λℰ(x,λ) and (Y^σℰ(x,·))(λ) + xℰ(x,λ), relative to |λℰ| and |xℰ|.
pub fn y_eigen_residuals(t: &ParamSet, x: &HpComplex, lambda: &HpComplex, tol: f64) -> Result<(f64, f64)> {
    let in_x = |y: &HpComplex| Ok(wilson_function_e(t, y, lambda, tol)?.value);
    let in_lambda = |l: &HpComplex| Ok(wilson_function_e(t, x, l, tol)?.value);
    let e = in_x(x)?;
    let want_x = -&(lambda * &e);
    let want_l = -&(x * &e);
    let rx = y_at(t, &in_x, x)?.rel_diff(&want_x, 0.0);
    let rl = y_at(&t.sigma(), &in_lambda, lambda)?.rel_diff(&want_l, 0.0);
    Ok((rx, rl))
}

/// {T_i f, g}_𝐭 against {f, T_i g}_𝐭 for f, g ∈ {G_τ, G_τ·x}; returns the T₀ and T₁ residuals.
pub fn theta_symmetry(t: &ParamSet, q: &KernelQuad) -> Result<[(f64, Option<String>); 2]> {
    let g = GaussianSpec::twisted(t, Twist::Tau);
    let g1 = |y: &HpComplex| Ok(g.eval(y)?.value);
    let gx = |y: &HpComplex| Ok(&g.eval(y)?.value * y);
    let funcs: [(&str, &dyn Fn(&HpComplex) -> Result<HpComplex>); 2] = [("G_tau", &g1), ("x G_tau", &gx)];
    let combos = [(0, 0), (0, 1), (1, 1)];
    let mut pairs: Vec<(Pointwise, Pointwise)> = Vec::new();
    for op in 0..2 {
        for &(i, j) in &combos {
            let (f, h) = (funcs[i].1, funcs[j].1);
            let apply = move |u: &'_ dyn Fn(&HpComplex) -> Result<HpComplex>, y: &HpComplex| {
                if op == 0 {
                    t0_at(t, u, y)
                } else {
                    t1_at(t, u, y)
                }
            };
            pairs.push((Box::new(move |y| apply(f, y)), Box::new(h)));
            pairs.push((Box::new(f), Box::new(move |y| apply(h, y))));
        }
    }
    let v = theta_forms(t, Variant::Full, &pairs, q, 3)?;
    let mut acc = [(0.0, None), (0.0, None)];
    for op in 0..2 {
        for (k, &(i, j)) in combos.iter().enumerate() {
            let base = 2 * (op * combos.len() + k);
            let r = v[base].rel_diff(&v[base + 1], 0.0);
            acc[op] = worse(acc[op].clone(), r, || format!("f = {}, g = {}", funcs[i].0, funcs[j].0));
        }
    }
    Ok(acc)
}

/// {pG_τ, p'G_τ}_𝐭 by quadrature against ⟨p,p'⟩_{𝐭^τ} from its exact expansion, and
/// {ℱf, ℱg}_{𝐭^σ} against (a+b)²{f, g}_𝐭, both sides by quadrature.
pub fn plancherel_numeric(fr: &FrakTransform, pairs: &[(Poly, Poly)], q: &KernelQuad) -> Result<[(f64, Option<String>); 2]> {
    let t = fr.params();
    let g_tau = GaussianSpec::twisted(t, Twist::Tau);
    let g_st = GaussianSpec::twisted(t, Twist::SigmaTau);
    let with_g = |p: Poly, g: &GaussianSpec| -> Pointwise {
        let g = g.clone();
        Box::new(move |y| Ok(&g.eval(y)?.value * &p.eval_hp(y)))
    };
    let degree = pairs.iter().map(|(p, r)| p.degree().unwrap_or(0) + r.degree().unwrap_or(0)).max().unwrap_or(0);
    let src: Vec<(Pointwise, Pointwise)> = pairs.iter().map(|(p, r)| (with_g(p.clone(), &g_tau), with_g(r.clone(), &g_tau))).collect();
    let dst: Vec<(Pointwise, Pointwise)> = pairs
        .iter()
        .map(|(p, r)| Ok((with_g(fr.calf_exact(p)?, &g_st), with_g(fr.calf_exact(r)?, &g_st))))
        .collect::<Result<_>>()?;
    let lhs = theta_forms(t, Variant::Full, &src, q, degree)?;
    let rhs = theta_forms(&t.sigma(), Variant::Full, &dst, q, degree)?;
    let ab = a_plus_b(t);
    let ab2 = Rational::from(&ab * &ab);
    let mut acc = [(0.0, None), (0.0, None)];
    for (i, (p, r)) in pairs.iter().enumerate() {
        let inner = bilinear_form(&t.tau(), p, r, FormMethod::Expansion, Variant::Full, q.quad_tol, q.prec)?;
        acc[0] = worse(acc[0].clone(), lhs[i].rel_diff(&inner, 0.0), || format!("pair #{i}"));
        acc[1] = worse(acc[1].clone(), rhs[i].rel_diff(&lhs[i].scale_rational(&ab2), 0.0), || format!("pair #{i}"));
    }
    Ok(acc)
}

/// ℱ⁺(G_τ) = G_{στ} at λ, ℱ⁺_σ(G_{στ}) = G_τ at x, and {ℱ⁺G_τ, ℱ⁺G_τ}⁺_{𝐭^σ} = {G_τ, G_τ}⁺_𝐭.
pub fn calf_plus_numeric(t: &ParamSet, lambda: &HpComplex, x: &HpComplex, q: &KernelQuad) -> Result<[f64; 3]> {
    let one = [Poly::one()];
    let g_st = GaussianSpec::twisted(t, Twist::SigmaTau);
    let g_tau = GaussianSpec::twisted(t, Twist::Tau);
    let forward = symmetric_calf_plus(t, &one, lambda, q)?[0].rel_diff(&g_st.eval(lambda)?.value, 0.0);
    let back = symmetric_calf_plus(&t.sigma(), &one, x, q)?[0].rel_diff(&g_tau.eval(x)?.value, 0.0);
    let gaussian = |g: GaussianSpec| -> Pointwise { Box::new(move |y| Ok(g.eval(y)?.value)) };
    let lhs = theta_forms(t, Variant::Plus, &[(gaussian(g_tau.clone()), gaussian(g_tau))], q, 0)?;
    let rhs = theta_forms(&t.sigma(), Variant::Plus, &[(gaussian(g_st.clone()), gaussian(g_st))], q, 0)?;
    Ok([forward, back, rhs[0].rel_diff(&lhs[0], 0.0)])
}

// The suite

fn imag_points(ys: &[f64], prec: u32) -> Vec<HpComplex> {
    ys.iter().map(|&y| HpComplex::imag(y, prec)).collect()
}

/// Every identity of the Wilson-function module; numeric checks run when
/// [`numeric_admissible`] holds.
pub fn verify_wilson_function(t: &ParamSet, opts: &SuiteOptions) -> VerificationReport {
    if twisted_exact_violation(t).is_none() {
        if let Err(e @ Error::Admissibility(_)) = FrakTransform::new(t).and_then(|_| FrakTransform::new(&t.sigma())) {
            let reason = format!("twisted parameters not admissible: {e}");
            let skip = |(n, a): &(&str, &str), m| Check::skipped(n, a, m, &reason);
            let mut checks: Vec<Check> = EXACT_NAMES.iter().map(|c| skip(c, Method::Exact)).collect();
            checks.extend(NUMERIC_NAMES.iter().map(|c| skip(c, Method::Numeric)));
            return VerificationReport::new(checks);
        }
    }
    let mut checks = exact_checks(t, opts);
    if numeric_admissible(t) {
        checks.extend(numeric_checks(t, opts));
    } else {
        checks.extend(NUMERIC_NAMES.iter().map(|(n, a)| Check::skipped(n, a, Method::Numeric, EXACT_ONLY)));
    }
    VerificationReport::new(checks)
}

const EXACT_NAMES: [(&str, &str); 8] = [
    ("G_tausigma(gamma_2n)/G_tausigma(gamma_0) = (-1)^n (a+1-d)_n/(b+c)_n and reciprocal for G_tausigmatau", "Gaussian ratio laws"),
    ("t_0 - c_0(x) = x - 1/2 - u_0 + c_0^tau(x)", "Gaussian conjugation"),
    ("G_sigmatau o G_tausigma o F_tau = basis route", "transform composition"),
    ("frakF(X p) = chi(X)(frakF p), X in {z, Y^tau, T_1^tau}", "chi intertwining"),
    ("calF e_gamma = (a+b) G_tausigmatau ratio e^sigma_gamma", "Wilson transform on the basis"),
    ("calF_sigma o calF = (a+b)^2", "Wilson transform inversion"),
    ("{calF f, calF g}_sigma = (a+b)^2 {f, g}", "Wilson transform Plancherel"),
    ("calF+_sigma o calF+ = id, isometry", "symmetric Wilson transform"),
];

fn exact_checks(t: &ParamSet, opts: &SuiteOptions) -> Vec<Check> {
    if let Some(v) = twisted_exact_violation(t) {
        let reason = format!("twisted parameters not admissible: {v}");
        return EXACT_NAMES.iter().map(|(n, a)| Check::skipped(n, a, Method::Exact, &reason)).collect();
    }
    let (fr, dual) = match (FrakTransform::new(t), FrakTransform::new(&t.sigma())) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return vec![Check::errored("Wilson transform setup", "Wilson transform", Method::Exact, &e)],
    };
    let k = opts.max_degree.min(8);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let random: Vec<(Poly, Poly)> = (0..5).map(|_| (random_poly(&mut rng, 4), random_poly(&mut rng, 4))).collect();
    let plancherel = (|| {
        let e0 = fr.tau_transform().basis(0)?;
        let e1 = fr.tau_transform().basis(1)?;
        let mut pairs = vec![(e0.clone(), e0.clone()), (e0, e1.clone()), (e1.clone(), e1)];
        pairs.extend(random);
        check_calf_plancherel(&fr, &pairs)
    })();
    let evens = vec![Poly::one(), Poly::monomial(2), Poly::from_i64(&[2, 0, -1, 0, 5])];
    let [n0, n1, n2, n3, n4, n5, n6, n7] = EXACT_NAMES;
    let residual = conjugation_residual(t);
    vec![
        exact_check(n0.0, n0.1, format!("n ≤ {k}"), check_ratio_laws(t, k)),
        exact_check(n1.0, n1.1, "rational function".into(), Ok((!residual.is_zero()).then(|| residual.to_string()))),
        exact_check(n2.0, n2.1, format!("x^k, k ≤ {k}"), check_composition_basis(&fr, k)),
        exact_check(n3.0, n3.1, "x^k, k ≤ 3".into(), check_chi_intertwining(&fr, 3)),
        exact_check(n4.0, n4.1, format!("m ≤ {k}"), check_calf_basis(&fr, k)),
        exact_check(n5.0, n5.1, format!("m ≤ {k}"), check_calf_inversion(&fr, &dual, k)),
        exact_check(n6.0, n6.1, "basis pairs m ≤ 1, 5 random pairs deg ≤ 4".into(), plancherel),
        exact_check(n7.0, n7.1, "even polynomials deg ≤ 4".into(), check_calf_plus(t, &evens)),
    ]
}

const NUMERIC_NAMES: [(&str, &str); 19] = [
    ("Gaussian ratio laws by log-Gamma", "Gaussian ratio laws"),
    ("G (T_i x^k) = tau(T_i)(G x^k)", "Gaussian conjugation"),
    ("phi_lambda(x; t) = phi_x(lambda; t^sigma)", "Wilson function duality"),
    ("E(x, lambda) = E_sigma(lambda, x)", "Wilson function duality"),
    ("E(x, -gamma_m) = Gamma(1-a-d)/(Gamma(a+b)Gamma(a+c)) E(x, gamma_m)", "polynomial reduction"),
    ("L phi_lambda = (atilde^2 - lambda^2) phi_lambda", "eigenfunction of L"),
    ("Y E(., lambda) = -lambda E", "eigenfunction of Y"),
    ("Y^sigma E(x, .) = -x E", "eigenfunction of Y"),
    ("<E+_tau(., gamma), phi_lambda>+ = 2 G ratio E+_sigmatau(lambda, gamma)", "symmetric kernel identity"),
    ("<E_tau(., gamma), frakE(., lambda)> = 2 t_1 G ratio E_sigmatau(lambda, gamma)", "kernel identity"),
    ("calF e_gamma by quadrature", "Wilson transform on the basis"),
    ("calF_sigma o calF = (a+b)^2 (quadrature)", "Wilson transform inversion"),
    ("{T_0 f, g} = {f, T_0 g}", "Theta symmetry"),
    ("{T_1 f, g} = {f, T_1 g}", "Theta symmetry"),
    ("{p G_tau, q G_tau} = <p, q>_tau", "Wilson transform Plancherel"),
    ("{calF f, calF g}_sigma = (a+b)^2 {f, g} (quadrature)", "Wilson transform Plancherel"),
    ("calF+ G_tau = G_sigmatau", "symmetric Wilson transform"),
    ("calF+_sigma G_sigmatau = G_tau", "symmetric Wilson transform"),
    ("calF+ isometry on G_tau", "symmetric Wilson transform"),
];

fn numeric_checks(t: &ParamSet, opts: &SuiteOptions) -> Vec<Check> {
    let prec = opts.prec;
    let tol = opts.tol;
    let series_tol = (tol * 1e-3).max(1e-30);
    let q = KernelQuad::new(tol * 1e-2, prec);
    let n = NUMERIC_NAMES;
    let mut out = Vec::new();
    let push = |out: &mut Vec<Check>, i: usize, scope: &str, tol: f64, r: Result<(f64, Option<String>)>| {
        out.push(numeric_check(n[i].0, n[i].1, scope.into(), tol, r));
    };

    push(&mut out, 0, "n ≤ 8", 1e-10, ratio_laws_numeric(t, 8, prec));
    let points = [HpComplex::imag(0.3, prec), HpComplex::from_f64(0.2, 0.45, prec)];
    push(&mut out, 1, "x^k, k ≤ 4, two points", 1e-10, conjugation_mismatch(t, 4, &points));

    let x = HpComplex::imag(0.3, prec);
    let l = HpComplex::imag(0.7, prec);
    push(&mut out, 2, "(0.3i, 0.7i)", tol, phi_duality(t, &[(x.clone(), l.clone())], series_tol));
    let xs = imag_points(&[0.25, 0.6, 1.0], prec);
    let ls = imag_points(&[0.15, 0.5, 0.9], prec);
    push(&mut out, 3, "3×3 imaginary grid, |x|, |lambda| ≤ 1", tol, wilson_duality(t, &xs, &ls, series_tol));
    let rx = [HpComplex::imag(0.3, prec), HpComplex::from_f64(0.2, 0.5, prec)];
    push(&mut out, 4, "m ≤ 4, two x", tol, polynomial_reduction(t, 4, &rx, series_tol));
    let (xe, le) = (HpComplex::imag(0.5, prec), HpComplex::imag(0.9, prec));
    push(&mut out, 5, "x = 0.5i, lambda = 0.9i", tol, l_eigen_residual(t, &xe, &le, series_tol).map(|r| (r, None)));
    match y_eigen_residuals(t, &xe, &le, series_tol) {
        Ok((rx, rl)) => {
            out.push(Check::numeric(n[6].0, n[6].1, "x = 0.5i, lambda = 0.9i", rx, tol, None));
            out.push(Check::numeric(n[7].0, n[7].1, "x = 0.5i, lambda = 0.9i", rl, tol, None));
        }
        Err(e) => out.extend([6, 7].map(|i| Check::errored(n[i].0, n[i].1, Method::Numeric, &e))),
    }
    let lc = HpComplex::imag(0.6, prec);
    push(&mut out, 8, "n ≤ 2, lambda = 0.6i", tol, symmetric_kernel_identity(t, 2, &lc, &q));

    let fr = FrakTransform::new(t);
    match fr.as_ref().map_err(Clone::clone).and_then(|fr| {
        let lk = HpComplex::imag(0.4, prec);
        Ok((kernel_identities(fr, 3, &lk, &q)?, calf_inversion_quadrature(fr, 2, &HpComplex::imag(0.35, prec), &q)?))
    }) {
        Ok(([frak, wilson], back)) => {
            out.push(numeric_check(n[9].0, n[9].1, "m ≤ 3, lambda = 0.4i".into(), tol, Ok(frak)));
            out.push(numeric_check(n[10].0, n[10].1, "m ≤ 3, lambda = 0.4i".into(), tol, Ok(wilson.clone())));
            let worst = worse(back, wilson.0, || "first step".into());
            out.push(numeric_check(n[11].0, n[11].1, "m ≤ 2, lambda = 0.4i, x = 0.35i".into(), INVERSION_QUAD_TOL, Ok(worst)));
        }
        Err(e) => out.extend([9, 10, 11].map(|i| Check::errored(n[i].0, n[i].1, Method::Numeric, &e))),
    }

    match theta_symmetry(t, &q) {
        Ok([t0, t1]) => {
            out.push(numeric_check(n[12].0, n[12].1, "f, g in {G_tau, x G_tau}".into(), tol, Ok(t0)));
            out.push(numeric_check(n[13].0, n[13].1, "f, g in {G_tau, x G_tau}".into(), tol, Ok(t1)));
        }
        Err(e) => out.extend([12, 13].map(|i| Check::errored(n[i].0, n[i].1, Method::Numeric, &e))),
    }

    let pairs = vec![
        (Poly::one(), Poly::one()),
        (Poly::x(), Poly::one()),
        (Poly::x(), Poly::x()),
        (Poly::monomial(2), Poly::from_i64(&[1, 1])),
    ];
    match fr.as_ref().map_err(Clone::clone).and_then(|fr| plancherel_numeric(fr, &pairs, &q)) {
        Ok([a, b]) => {
            out.push(numeric_check(n[14].0, n[14].1, "4 pairs, deg ≤ 2".into(), tol, Ok(a)));
            out.push(numeric_check(n[15].0, n[15].1, "4 pairs, deg ≤ 2".into(), tol, Ok(b)));
        }
        Err(e) => out.extend([14, 15].map(|i| Check::errored(n[i].0, n[i].1, Method::Numeric, &e))),
    }

    match calf_plus_numeric(t, &HpComplex::imag(0.4, prec), &HpComplex::imag(0.35, prec), &q) {
        Ok(rs) => {
            for (i, r) in (16..19).zip(rs) {
                out.push(Check::numeric(n[i].0, n[i].1, "G_tau, lambda = 0.4i, x = 0.35i", r, tol, None));
            }
        }
        Err(e) => out.extend([16, 17, 18].map(|i| Check::errored(n[i].0, n[i].1, Method::Numeric, &e))),
    }
    out
}
