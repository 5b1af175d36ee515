//! Verification of the transform identities: support, inversion, intertwining,
//! weight symmetries, norms and Plancherel formulas.

use super::forms::{integrate_against_weight, weight_quad_options};
use super::pair::SpectralTransform;
use super::spectral::{
    reflect_index_one, reflect_index_zero, spectral_action, spectral_point_value, FiniteSpectralFunction, Scale,
    SpectralOp,
};
use super::weights::{full_weight_product, inner_one_product, plus_weight_product, Variant};
use crate::daha::{Action, ParamSet, Poly};
use crate::error::{Error, Result};
use crate::numeric::{HpComplex, Rational};
use crate::report::{Check, Method, SuiteOptions, VerificationReport};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub(crate) const EXACT_ONLY: &str = "exact-only mode";

/// Turns an exact comparison into a check record.
pub(crate) fn exact_check(name: &str, anchor: &str, scope: String, result: Result<Option<String>>) -> Check {
    match result {
        Ok(None) => Check::exact(name, anchor, scope, None, "0"),
        Ok(Some(w)) => Check::exact(name, anchor, scope, Some(w), "nonzero"),
        Err(e) => Check::errored(name, anchor, Method::Exact, &e),
    }
}

pub(crate) fn numeric_check(name: &str, anchor: &str, scope: String, tol: f64, result: Result<(f64, Option<String>)>) -> Check {
    match result {
        Ok((r, w)) => Check::numeric(name, anchor, scope, r, tol, w),
        Err(e) => Check::errored(name, anchor, Method::Numeric, &e),
    }
}

/// Small random polynomial with integer-over-small-denominator coefficients.
pub fn random_poly(rng: &mut impl Rng, degree: usize) -> Poly {
    Poly::new(
        (0..=degree)
            .map(|_| Rational::from((rng.gen_range(-9i64..=9), rng.gen_range(1i64..=4))))
            .collect(),
    )
}

/// 𝔽 x^k is supported on indices ≤ k.
pub fn check_support_law(tr: &SpectralTransform, max_k: usize) -> Result<Option<String>> {
    for k in 0..=max_k {
        let f = tr.forward(&Poly::monomial(k))?;
        let outside = f.support().find(|&m| m > k);
        if let Some(m) = outside {
            return Ok(Some(format!("x^{k} has weight at index {m}")));
        }
    }
    Ok(None)
}

/// 𝔾∘𝔽 = 𝒩 on x^k and 𝔽∘𝔾 = 𝒩 on indicators.
pub fn check_inversion(tr: &SpectralTransform, max_k: usize, max_index: usize) -> Result<Option<String>> {
    let step = if tr.variant() == Variant::Plus { 2 } else { 1 };
    for k in (0..=max_k).step_by(step) {
        let p = Poly::monomial(k);
        let back = tr.inverse(&tr.forward(&p)?)?;
        if back.poly != p || back.scale != Scale::NORMALIZER {
            return Ok(Some(format!("G(F x^{k}) = {} · ({})", back.poly, back.scale)));
        }
    }
    for m in 0..=max_index {
        let f = FiniteSpectralFunction::indicator(tr.variant(), m);
        let g = tr.inverse(&f)?;
        let back = tr.forward(&g.poly)?;
        let scale = g.scale.times(back.scale);
        if back.with_scale(Scale::ONE) != f || scale != Scale::NORMALIZER {
            return Ok(Some(format!("F(G 1_{m}) differs from N·1_{m}")));
        }
    }
    Ok(None)
}

/// 𝔽(Xp) = σ(X)(𝔽p) for X ∈ {Y, T₁, U₁} with σ(Y) = −z, σ(T₁) = T₁^σ, σ(U₁) = T₀^σ.
pub fn check_forward_intertwining(tr: &SpectralTransform, max_k: usize) -> Result<Option<String>> {
    let t = tr.params();
    let rep = tr.family().rep();
    let minus_z = SpectralOp::Mul(Poly::from_i64(&[0, -1]));
    for k in 0..=max_k {
        let p = Poly::monomial(k);
        let fp = tr.forward(&p)?;
        let cases: [(&str, Poly, &SpectralOp); 3] = [
            ("Y", rep.y(&p), &minus_z),
            ("T1", rep.t1(&p), &SpectralOp::T1),
            ("U1", rep.u1(&p), &SpectralOp::T0),
        ];
        for (name, xp, op) in cases {
            if tr.forward(&xp)? != spectral_action(t, op, &fp)? {
                return Ok(Some(format!("X = {name}, p = x^{k}")));
            }
        }
    }
    Ok(None)
}

/// 𝔾(Xf) = σ⁻¹(X)(𝔾f) for X ∈ {z, T₁^σ, T₀^σ}, whose preimages are −Y, T₁ and U₁.
pub fn check_inverse_intertwining(tr: &SpectralTransform, inputs: &[FiniteSpectralFunction]) -> Result<Option<String>> {
    let t = tr.params();
    let rep = tr.family().rep();
    for (i, f) in inputs.iter().enumerate() {
        let gf = tr.inverse(f)?;
        let cases: [(&str, SpectralOp, Poly); 3] = [
            ("z", SpectralOp::Mul(Poly::x()), -&rep.y(&gf.poly)),
            ("T1^sigma", SpectralOp::T1, rep.t1(&gf.poly)),
            ("T0^sigma", SpectralOp::T0, rep.u1(&gf.poly)),
        ];
        for (name, op, want) in cases {
            let got = tr.inverse(&spectral_action(t, &op, f)?)?;
            if got.poly != want || got.scale != gf.scale {
                return Ok(Some(format!("X = {name}, input #{i}")));
            }
        }
    }
    Ok(None)
}

/// The two weight identities behind the intertwining of 𝔾, for 1 ≤ m ≤ max_m.
pub fn check_weight_symmetries(tr: &SpectralTransform, max_m: usize) -> Result<Option<String>> {
    let t = tr.params();
    let [ad, bd, cd, dd] = t.abcd_dual();
    let one = Rational::from(1);
    for m in 0..=max_m {
        let g = spectral_point_value(t, m);
        let w = tr.relative_weight(m)?;
        // (c̃−γ)(d̃−γ)/(1−2γ) w(γ) = (c̃−1+γ)(d̃−1+γ)/(2γ−1) w(1−γ)
        let two_g = Rational::from(&g * 2u32);
        let lhs = Rational::from(&cd - &g) * Rational::from(&dd - &g) / (Rational::from(&one - &two_g)) * &w;
        let rhs = (Rational::from(&cd - &one) + &g) * (Rational::from(&dd - &one) + &g) / (Rational::from(&two_g - &one))
            * tr.relative_weight(reflect_index_zero(m))?;
        if lhs != rhs {
            return Ok(Some(format!("s0 identity at m = {m}")));
        }
        if m == 0 {
            continue;
        }
        // (ã+γ)(b̃+γ)/(2γ) w(γ) = (ã−γ)(b̃−γ)/(−2γ) w(−γ)
        let lhs = Rational::from(&ad + &g) * Rational::from(&bd + &g) / &two_g * &w;
        let rhs = Rational::from(&ad - &g) * Rational::from(&bd - &g) / Rational::from(-&two_g)
            * tr.relative_weight(reflect_index_one(m))?;
        if lhs != rhs {
            return Ok(Some(format!("s1 identity at m = {m}")));
        }
    }
    Ok(None)
}

/// ⟨B_k,B_k⟩/⟨1,1⟩ from the weights against the constant basis coefficient of B_k².
pub fn check_norm_ratios(tr: &SpectralTransform, max_k: usize) -> Result<Option<String>> {
    for k in 0..=max_k {
        let b = tr.basis(k)?;
        let c0 = tr.expand(&(&b * &b))?[0].clone();
        if c0 != tr.norm_ratio(k)? {
            return Ok(Some(format!("index {k}: {c0} vs {}", tr.norm_ratio(k)?)));
        }
    }
    Ok(None)
}

/// [𝔽p₁,𝔽p₂] = 𝒩⟨p₁,p₂⟩ and ⟨𝔾f₁,𝔾f₂⟩ = 𝒩[f₁,f₂] with f_i = 𝔽p_i, exact.
pub fn plancherel_exact(tr: &SpectralTransform, p1: &Poly, p2: &Poly) -> Result<Option<String>> {
    let f1 = tr.forward(p1)?;
    let f2 = tr.forward(p2)?;
    let (lhs, lscale) = tr.bracket(&f1, &f2)?;
    let rhs = tr.inner_ratio(p1, p2)?;
    let rscale = Scale::NORMALIZER.times(Scale::INNER);
    if lhs != rhs || lscale != rscale {
        return Ok(Some(format!("[F p1, F p2] = {lhs} ({lscale}) vs N<p1,p2> = {rhs} ({rscale})")));
    }
    let g1 = tr.inverse(&f1)?;
    let g2 = tr.inverse(&f2)?;
    let lhs = tr.inner_ratio(&g1.poly, &g2.poly)?;
    let lscale = g1.scale.times(g2.scale).times(Scale::INNER);
    let (b, bscale) = tr.bracket(&f1, &f2)?;
    let rscale = Scale::NORMALIZER.times(bscale);
    if lhs != b || lscale != rscale {
        return Ok(Some(format!("<G f1, G f2> = {lhs} ({lscale}) vs N[f1,f2] = {b} ({rscale})")));
    }
    Ok(None)
}

fn weight_product(t: &ParamSet, variant: Variant, k: usize) -> Result<crate::numeric::GammaProduct> {
    match variant {
        Variant::Full => full_weight_product(t, k),
        Variant::Plus => plus_weight_product(t, k),
    }
}

/// The same two Plancherel identities evaluated numerically: 𝔽 values and the
/// forms by quadrature, each weight w(γ) from its own Gamma product.
pub fn plancherel_numeric(tr: &SpectralTransform, p1: &Poly, p2: &Poly, tol: f64, prec: u32) -> Result<f64> {
    let t = tr.params();
    let variant = tr.variant();
    let top = p1.degree().unwrap_or(0).min(p2.degree().unwrap_or(0)) / if variant == Variant::Plus { 2 } else { 1 };
    let mut polys = vec![p1 * p2];
    for k in 0..=top {
        let b = tr.basis(k)?;
        polys.push(p1 * &b);
        polys.push(p2 * &b);
    }
    let deg = polys.iter().filter_map(Poly::degree).max().unwrap_or(0);
    let quad = integrate_against_weight(t, variant, &polys, &weight_quad_options(t, deg, tol * 1e-3, prec))?;
    let inner = inner_one_product(t, variant).value(prec)?;
    let w0 = weight_product(t, variant, 0)?.value(prec)?;
    let normalizer = &inner * &w0;
    let mut bracket = HpComplex::zero(prec);
    for k in 0..=top {
        let w = weight_product(t, variant, k)?.value(prec)?;
        bracket = &bracket + &(&(&quad.values[1 + 2 * k] * &quad.values[2 + 2 * k]) * &w);
    }
    let rhs = &normalizer * &quad.values[0];
    Ok(bracket.rel_diff(&rhs, 0.0))
}

fn scope_deg(k: usize) -> String {
    format!("deg ≤ {k}")
}

/// All transform identities for one variant.
pub fn verify_transform_variant(t: &ParamSet, variant: Variant, opts: &SuiteOptions) -> VerificationReport {
    let tr = match SpectralTransform::new(t, variant) {
        Ok(tr) => tr,
        Err(e) => return VerificationReport::new(vec![Check::errored("transform setup", "transform", Method::Exact, &e)]),
    };
    let plus = variant == Variant::Plus;
    let tag = |s: &str| if plus { format!("{s} (symmetric)") } else { s.to_string() };
    let k = opts.max_degree.min(12);
    let mut checks = Vec::new();

    if !plus {
        checks.push(exact_check(
            "support(F x^k) within {-gamma_0, ..., -gamma_k}",
            "support law",
            scope_deg(opts.max_degree),
            check_support_law(&tr, opts.max_degree),
        ));
    }
    checks.push(exact_check(
        &tag("G(F p) = N p and F(G f) = N f"),
        "inversion theorem",
        format!("x^k, k ≤ {k}; indicators ≤ {k}"),
        check_inversion(&tr, k, k),
    ));
    checks.push(exact_check(
        &tag("<E, E>/<1, 1> = w(-gamma_0)/w(-gamma)"),
        "quadratic norms",
        format!("index ≤ {}", k / 2),
        check_norm_ratios(&tr, k / 2),
    ));
    if !plus {
        checks.push(exact_check(
            "F(X p) = sigma(X)(F p), X in {Y, T_1, U_1}",
            "transform intertwining",
            scope_deg(3),
            check_forward_intertwining(&tr, 3),
        ));
        let inputs: Result<Vec<FiniteSpectralFunction>> = (|| {
            let mut v = vec![tr.forward(&Poly::monomial(2))?];
            v.extend((0..4).map(|m| FiniteSpectralFunction::indicator(Variant::Full, m)));
            Ok(v)
        })();
        checks.push(exact_check(
            "G(X f) = sigma^-1(X)(G f), X in {z, T_1^sigma, T_0^sigma}",
            "inverse intertwining",
            "F(x^2), indicators ≤ 3".into(),
            inputs.and_then(|v| check_inverse_intertwining(&tr, &v)),
        ));
        checks.push(exact_check(
            "weight symmetries under s_0 and s_1",
            "weight symmetry",
            format!("m ≤ {k}"),
            check_weight_symmetries(&tr, k),
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let pairs: Vec<(Poly, Poly)> = (0..10)
        .map(|_| {
            let d1 = rng.gen_range(0..=6usize);
            let d2 = rng.gen_range(0..=6usize);
            let (a, b) = (random_poly(&mut rng, d1), random_poly(&mut rng, d2));
            if plus {
                (super::pair::even_part(&a), super::pair::even_part(&b))
            } else {
                (a, b)
            }
        })
        .collect();
    let exact: Result<Option<String>> = pairs
        .iter()
        .enumerate()
        .try_fold(None, |acc, (i, (a, b))| {
            if acc.is_some() {
                return Ok(acc);
            }
            Ok(plancherel_exact(&tr, a, b)?.map(|w| format!("pair #{i}: {w}")))
        });
    checks.push(exact_check(&tag("[F p1, F p2] = N <p1, p2>"), "Plancherel formulas", "10 random pairs, deg ≤ 6".into(), exact));

    let name = tag("[F p1, F p2] = N <p1, p2> (quadrature)");
    if t.quadrature_ok() {
        let r: Result<(f64, Option<String>)> = pairs.iter().take(3).enumerate().try_fold((0.0f64, None), |(worst, w), (i, (a, b))| {
            let d = plancherel_numeric(&tr, a, b, opts.tol, opts.prec)?;
            Ok(if d > worst { (d, Some(format!("pair #{i}"))) } else { (worst, w) })
        });
        checks.push(numeric_check(&name, "Plancherel formulas", "3 random pairs, deg ≤ 6".into(), opts.tol, r));
    } else {
        checks.push(Check::skipped(&name, "Plancherel formulas", Method::Numeric, EXACT_ONLY));
    }
    VerificationReport::new(checks)
}

/// Orthogonality and norms of p_m by quadrature, and ⟨1,1⟩ against its Gamma product.
pub fn quadrature_orthogonality(t: &ParamSet, max_m: usize, tol: f64, prec: u32) -> Result<(f64, f64, f64)> {
    t.require_quadrature()?;
    let tr = SpectralTransform::new(t, Variant::Full)?;
    let fam = tr.family();
    let ps: Vec<Poly> = (0..=max_m).map(|m| fam.p(m)).collect();
    let mut products = Vec::new();
    let mut index = Vec::new();
    for i in 0..=max_m {
        for j in i..=max_m {
            products.push(&ps[i] * &ps[j]);
            index.push((i, j));
        }
    }
    let opts = weight_quad_options(t, 2 * max_m, tol * 1e-3, prec);
    let quad = integrate_against_weight(t, Variant::Full, &products, &opts)?;
    let inner = inner_one_product(t, Variant::Full).value(prec)?;
    let one_err = quad.values[0].rel_diff(&inner, 0.0);
    let diag = |i: usize| {
        let pos = index.iter().position(|&(a, b)| a == i && b == i).unwrap();
        quad.values[pos].abs_f64()
    };
    let mut off = 0.0f64;
    let mut norm = 0.0f64;
    for (pos, &(i, j)) in index.iter().enumerate() {
        let v = &quad.values[pos];
        if i != j {
            off = off.max(v.abs_f64() / (diag(i) * diag(j)).sqrt());
        } else {
            let val = fam.value_at_minus_x0(i);
            let ratio = Rational::from(&val * &val) * tr.norm_ratio(i)?;
            let want = inner.scale_rational(&ratio);
            norm = norm.max(v.rel_diff(&want, 0.0));
        }
    }
    Ok((one_err, off, norm))
}

pub fn verify_transform(t: &ParamSet, opts: &SuiteOptions) -> VerificationReport {
    let mut report = verify_transform_variant(t, Variant::Full, opts);
    report.extend(verify_transform_variant(t, Variant::Plus, opts));
    let names = [
        ("<1, 1> = Gamma product", "value of <1,1>"),
        ("<p_m, p_n> = 0 for m != n", "orthogonality"),
        ("<p_m, p_m> = <1, 1> p_m(-x_0)^2 w(-gamma_0)/w(-gamma_m)", "quadratic norms"),
    ];
    let m = opts.max_degree.min(6);
    let scope = format!("m, n ≤ {m}");
    let checks = if t.quadrature_ok() {
        match quadrature_orthogonality(t, m, opts.tol, opts.prec) {
            Ok((a, b, c)) => [a, b, c]
                .iter()
                .zip(names)
                .map(|(r, (n, an))| Check::numeric(n, an, scope.clone(), *r, opts.tol, None))
                .collect(),
            Err(e) => names.iter().map(|(n, an)| Check::errored(n, an, Method::Numeric, &e)).collect(),
        }
    } else {
        names.iter().map(|(n, an)| Check::skipped(n, an, Method::Numeric, EXACT_ONLY)).collect()
    };
    report.extend(VerificationReport::new(checks));
    report
}

/// Both Plancherel identities for one pair, exactly and (when the parameters allow it) by quadrature.
pub fn plancherel_check(t: &ParamSet, p1: &Poly, p2: &Poly, opts: &SuiteOptions) -> Result<VerificationReport> {
    let tr = SpectralTransform::new(t, Variant::Full)?;
    let mut checks = vec![exact_check(
        "[F p1, F p2] = N <p1, p2> and <G f1, G f2> = N [f1, f2]",
        "Plancherel formulas",
        "given pair".into(),
        plancherel_exact(&tr, p1, p2),
    )];
    let name = "[F p1, F p2] = N <p1, p2> (quadrature)";
    checks.push(if t.quadrature_ok() {
        numeric_check(name, "Plancherel formulas", "given pair".into(), opts.tol, plancherel_numeric(&tr, p1, p2, opts.tol, opts.prec).map(|r| (r, None)))
    } else {
        Check::skipped(name, "Plancherel formulas", Method::Numeric, EXACT_ONLY)
    });
    Ok(VerificationReport::new(checks))
}

/// Inversion, norms and Plancherel for the symmetric transform pair 𝔽⁺, 𝔾⁺.
pub fn symmetric_transform_suite(t: &ParamSet, opts: &SuiteOptions) -> VerificationReport {
    verify_transform_variant(t, Variant::Plus, opts)
}

/// Rejects polynomials that are not even before a symmetric transform.
pub fn require_even(p: &Poly) -> Result<()> {
    if p.is_even() {
        Ok(())
    } else {
        Err(Error::NotSymmetric)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_transform_suite_passes() {
        let opts = SuiteOptions {
            max_degree: 8,
            ..SuiteOptions::default()
        };
        let r = verify_transform(&ParamSet::canonical(), &opts);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn exact_only_parameters_skip_numeric_checks() {
        let t = ParamSet::parse(&["2/3", "1/5", "3/5", "4/5"]).unwrap();
        assert!(t.exact_ok() && !t.quadrature_ok());
        let opts = SuiteOptions {
            max_degree: 4,
            ..SuiteOptions::default()
        };
        let r = verify_transform(&t, &opts);
        assert!(r.passed(), "{r}");
        assert!(r.checks.iter().any(|c| c.to_string().ends_with("skipped: exact-only mode")));
    }
}
