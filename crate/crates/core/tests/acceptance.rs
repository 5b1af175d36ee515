//! Acceptance criteria, one line each. Runs as a plain binary so the lines
//! are printed whether or not the criteria pass; exits nonzero on any failure.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::process::ExitCode;
use std::time::{Duration, Instant};
use wilson_daha::daha::{verify_relations, ParamSet, Poly};
use wilson_daha::function::checks::{
    calf_inversion_quadrature, check_calf_basis, check_calf_inversion, check_calf_plancherel, kernel_identities,
    l_eigen_residual, polynomial_reduction, symmetric_kernel_identity, wilson_duality, INVERSION_QUAD_TOL,
};
use wilson_daha::function::{FrakTransform, KernelQuad};
use wilson_daha::numeric::{HpComplex, Rational};
use wilson_daha::transform::checks::{check_inversion, plancherel_exact, plancherel_numeric, quadrature_orthogonality, random_poly};
use wilson_daha::transform::{SpectralTransform, Variant};
use wilson_daha::wilson::checks::{
    check_4f3, check_difference_equation, check_duality_grid, check_eigen, check_evaluation, check_recurrence_upto,
    check_rodriguez,
};
use wilson_daha::wilson::{DualPair, WilsonFamily};
use wilson_daha::Result;

const PREC: u32 = 128;
const TOL: f64 = 1e-8;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

/// Folds exact outcomes: the first witness fails the criterion.
fn exact_all(parts: &[(&str, Result<Option<String>>)]) -> Verdict {
    for (label, r) in parts {
        match r {
            Ok(None) => {}
            Ok(Some(w)) => return verdict(false, format!("{label}: {w}")),
            Err(e) => return verdict(false, format!("{label}: error {e}")),
        }
    }
    let labels: Vec<&str> = parts.iter().map(|(l, _)| *l).collect();
    verdict(true, format!("{} exact", labels.join(", ")))
}

/// Folds numeric residuals against their bounds.
fn numeric_all(parts: Vec<(&str, Result<f64>, f64)>) -> Verdict {
    let mut pass = true;
    let mut notes = Vec::new();
    for (label, r, bound) in parts {
        match r {
            Ok(v) => {
                pass &= v <= bound;
                notes.push(format!("{label} {v:.2e} (≤ {bound:.0e})"));
            }
            Err(e) => {
                pass = false;
                notes.push(format!("{label}: error {e}"));
            }
        }
    }
    verdict(pass, notes.join(", "))
}

fn within(v: Verdict, elapsed: Duration, budget: Option<Duration>) -> Verdict {
    let secs = elapsed.as_secs_f64();
    match budget {
        Some(b) if elapsed > b => verdict(false, format!("{}; {secs:.1} s exceeds {} s", v.detail, b.as_secs())),
        Some(b) => verdict(v.pass, format!("{}; {secs:.1} s (< {} s)", v.detail, b.as_secs())),
        None => verdict(v.pass, format!("{}; {secs:.1} s", v.detail)),
    }
}

fn random_admissible(rng: &mut ChaCha8Rng, count: usize) -> Vec<ParamSet> {
    let mut out = Vec::new();
    while out.len() < count {
        let mut q = || Rational::from((rng.gen_range(-12i64..=12), rng.gen_range(1i64..=9)));
        let t = ParamSet::new(q(), q(), q(), q());
        if t.exact_ok() && t.values().iter().all(|v| *v != 0) {
            out.push(t);
        }
    }
    out
}

fn criterion_1(t: &ParamSet) -> Verdict {
    let mut sets = vec![t.clone()];
    sets.extend(random_admissible(&mut ChaCha8Rng::seed_from_u64(1), 5));
    for s in &sets {
        match verify_relations(s, 20) {
            Ok(r) if r.passed() => {}
            Ok(r) => {
                let w = r.failures().next().map(|c| c.to_string()).unwrap_or_default();
                return verdict(false, format!("{s}: {w}"));
            }
            Err(e) => return verdict(false, format!("{s}: {e}")),
        }
    }
    verdict(true, format!("all relations on monomials of degree ≤ 20 for {} parameter sets", sets.len()))
}

fn criterion_2(fam: &WilsonFamily) -> Verdict {
    exact_all(&[("Y p_m = gamma_m p_m, monic, m ≤ 40", check_eigen(fam, 40)), ("Rodriguez route, m ≤ 20", check_rodriguez(fam, 20))])
}

fn criterion_3(fam: &WilsonFamily) -> Verdict {
    let pinned = Rational::from((1749407, 999600));
    let v = exact_all(&[("closed forms at -x0, m ≤ 20", check_evaluation(fam, 20))]);
    let p2 = fam.value_at_minus_x0(2);
    verdict(v.pass && p2 == pinned, format!("{}, p_2(-x0) = {p2}", v.detail))
}

fn criterion_4(t: &ParamSet) -> Verdict {
    exact_all(&[("E(-x_n, gamma_m; t) = E(-gamma_m, x_n; t^sigma), m, n ≤ 12", DualPair::new(t).and_then(|p| check_duality_grid(&p, 12)))])
}

fn criterion_5(t: &ParamSet) -> Verdict {
    match quadrature_orthogonality(t, 6, TOL, PREC) {
        Ok((one, off, norm)) => numeric_all(vec![
            ("<1,1> vs Gamma product", Ok(one), TOL),
            ("off-diagonal m != n ≤ 6", Ok(off), TOL),
            ("diagonal ratios", Ok(norm), TOL),
        ]),
        Err(e) => verdict(false, format!("error {e}")),
    }
}

fn criterion_6(t: &ParamSet) -> Verdict {
    let full = SpectralTransform::new(t, Variant::Full).and_then(|tr| check_inversion(&tr, 12, 12));
    let plus = SpectralTransform::new(t, Variant::Plus).and_then(|tr| check_inversion(&tr, 12, 12));
    exact_all(&[("G o F = F o G = N (x^k, k ≤ 12; indicators ≤ 12)", full), ("symmetric pair", plus)])
}

fn criterion_7(t: &ParamSet) -> Verdict {
    let tr = match SpectralTransform::new(t, Variant::Full) {
        Ok(tr) => tr,
        Err(e) => return verdict(false, format!("error {e}")),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let pairs: Vec<(Poly, Poly)> = (0..10)
        .map(|_| {
            let (d1, d2) = (rng.gen_range(0..=6), rng.gen_range(0..=6));
            (random_poly(&mut rng, d1), random_poly(&mut rng, d2))
        })
        .collect();
    let exact: Result<Option<String>> = pairs.iter().enumerate().try_fold(None, |acc, (i, (a, b))| {
        Ok(acc.or(plancherel_exact(&tr, a, b)?.map(|w| format!("pair #{i}: {w}"))))
    });
    let numeric = pairs.iter().try_fold(0.0f64, |worst, (a, b)| Ok(worst.max(plancherel_numeric(&tr, a, b, TOL, PREC)?)));
    let e = exact_all(&[("[F p1, F p2] = N <p1, p2> for 10 random pairs, deg ≤ 6", exact)]);
    let n = numeric_all(vec![("quadrature", numeric, TOL)]);
    verdict(e.pass && n.pass, format!("{}, {}", e.detail, n.detail))
}

fn criterion_8(fam: &WilsonFamily) -> Verdict {
    exact_all(&[
        ("L eigenvalues n ≤ 6", check_difference_equation(fam, 6)),
        ("three-term relation n ≤ 6", check_recurrence_upto(fam, 6)),
        ("4F3 form n ≤ 10", check_4f3(fam, 10)),
    ])
}

fn criterion_9(t: &ParamSet) -> Verdict {
    let series_tol = TOL * 1e-3;
    let imag = |ys: &[f64]| ys.iter().map(|&y| HpComplex::imag(y, PREC)).collect::<Vec<_>>();
    let q = KernelQuad::new(TOL * 1e-2, PREC);
    let xs = imag(&[0.25, 0.6, 1.0]);
    let ls = imag(&[0.15, 0.5, 0.9]);
    let rx = [HpComplex::imag(0.3, PREC), HpComplex::from_f64(0.2, 0.5, PREC)];
    numeric_all(vec![
        ("duality on 3×3 grid", wilson_duality(t, &xs, &ls, series_tol).map(|r| r.0), TOL),
        ("reduction m ≤ 4", polynomial_reduction(t, 4, &rx, series_tol).map(|r| r.0), TOL),
        ("kernel integral n ≤ 2", symmetric_kernel_identity(t, 2, &HpComplex::imag(0.6, PREC), &q).map(|r| r.0), TOL),
        ("L-eigencheck", l_eigen_residual(t, &HpComplex::imag(0.5, PREC), &HpComplex::imag(0.9, PREC), series_tol), TOL),
    ])
}

fn criterion_10(t: &ParamSet) -> Verdict {
    let (fr, dual) = match (FrakTransform::new(t), FrakTransform::new(&t.sigma())) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return verdict(false, format!("error {e}")),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let pairs: Vec<(Poly, Poly)> = (0..5).map(|_| (random_poly(&mut rng, 4), random_poly(&mut rng, 4))).collect();
    let e = exact_all(&[
        ("basis images m ≤ 8", check_calf_basis(&fr, 8)),
        ("calF_sigma o calF = (a+b)^2 on m ≤ 8", check_calf_inversion(&fr, &dual, 8)),
        ("Plancherel ratios", check_calf_plancherel(&fr, &pairs)),
    ]);
    let q = KernelQuad::new(TOL * 1e-2, PREC);
    let first = kernel_identities(&fr, 2, &HpComplex::imag(0.4, PREC), &q).map(|[_, calf]| calf.0);
    let second = calf_inversion_quadrature(&fr, 2, &HpComplex::imag(0.35, PREC), &q).map(|r| r.0);
    let n = numeric_all(vec![
        ("quadrature calF, m ≤ 2", first, INVERSION_QUAD_TOL),
        ("quadrature calF_sigma, m ≤ 2", second, INVERSION_QUAD_TOL),
    ]);
    verdict(e.pass && n.pass, format!("{}, {}", e.detail, n.detail))
}

fn main() -> ExitCode {
    let t = ParamSet::canonical();
    let fam = WilsonFamily::new(&t).expect("canonical family");
    let secs = Duration::from_secs;
    let criteria: Vec<(&str, Option<Duration>, Box<dyn Fn() -> Verdict + '_>)> = vec![
        ("algebra relations", Some(secs(10)), Box::new(|| criterion_1(&t))),
        ("eigen-structure", Some(secs(30)), Box::new(|| criterion_2(&fam))),
        ("evaluation formulas", None, Box::new(|| criterion_3(&fam))),
        ("duality", None, Box::new(|| criterion_4(&t))),
        ("orthogonality and norms", Some(secs(120)), Box::new(|| criterion_5(&t))),
        ("transform inversion", None, Box::new(|| criterion_6(&t))),
        ("Plancherel", None, Box::new(|| criterion_7(&t))),
        ("difference equation and recurrence", None, Box::new(|| criterion_8(&fam))),
        ("Wilson function suite", Some(secs(300)), Box::new(|| criterion_9(&t))),
        ("non-polynomial transform", None, Box::new(|| criterion_10(&t))),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let v = within(run(), start.elapsed(), *budget);
        if !v.pass {
            failed += 1;
        }
        println!("criterion {:>2} {name}: {} ({})", i + 1, if v.pass { "PASS" } else { "FAIL" }, v.detail);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
