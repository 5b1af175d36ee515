use wilson_daha::daha::ParamSet;
use wilson_daha::report::{Method, Status, SuiteOptions};
use wilson_daha::{run_suite, Error, Fault, Suite};

fn opts(max_degree: usize) -> SuiteOptions {
    SuiteOptions {
        max_degree,
        ..SuiteOptions::default()
    }
}

/// Exactly admissible, but b = t1 - u1 < 0 rules out the quadrature routes.
fn exact_only_set() -> ParamSet {
    ParamSet::parse(&["2/3", "1/5", "1/7", "3/5"]).unwrap()
}

#[test]
fn canonical_algebra_report_lists_each_relation() {
    let r = run_suite(Suite::Algebra, &ParamSet::canonical(), &opts(20), None).unwrap();
    assert!(r.passed());
    let lines: Vec<String> = r.checks.iter().map(ToString::to_string).collect();
    assert!(lines.iter().any(|l| l == "T_i^2 = t_i^2: pass (exact, deg ≤ 20)"), "{lines:?}");
}

#[test]
fn exact_only_parameters_skip_numeric_checks() {
    let t = exact_only_set();
    assert!(t.exact_ok() && !t.quadrature_ok());
    let r = run_suite(Suite::All, &t, &opts(8), None).unwrap();
    assert!(r.passed(), "{r}");
    let numeric: Vec<_> = r.checks.iter().filter(|c| c.method == Method::Numeric).collect();
    assert!(!numeric.is_empty());
    assert!(numeric.iter().all(|c| matches!(&c.status, Status::Skipped(_))));
    assert!(numeric.iter().any(|c| c.status == Status::Skipped("exact-only mode".into())));
    assert!(r.checks.iter().any(|c| c.method == Method::Exact && c.status == Status::Pass));
}

#[test]
fn corrupted_gamma_table_fails_with_a_witness() {
    let r = run_suite(Suite::Polynomials, &ParamSet::canonical(), &opts(6), Some(Fault::Gamma)).unwrap();
    assert!(!r.passed());
    let first = r.failures().next().unwrap();
    assert!(first.witness.as_deref().unwrap().contains("p_2"), "{first}");
    // the fault only touches the polynomial family
    assert!(run_suite(Suite::Algebra, &ParamSet::canonical(), &opts(6), Some(Fault::Gamma)).unwrap().passed());
}

#[test]
fn inadmissible_parameters_are_rejected_before_any_check() {
    let t = ParamSet::parse(&["1", "1", "1", "1"]).unwrap();
    for s in [Suite::Algebra, Suite::Polynomials, Suite::All] {
        assert!(matches!(run_suite(s, &t, &opts(4), None), Err(Error::Admissibility(_))));
    }
    // 2(t0 + t1) = 2 makes the spectral weights vanish
    let t = ParamSet::parse(&["1/3", "1/5", "2/3", "1/7"]).unwrap();
    assert!(t.exact_ok());
    assert!(matches!(run_suite(Suite::Transform, &t, &opts(4), None), Err(Error::Admissibility(_))));
}

#[test]
fn suite_names_round_trip() {
    for s in [Suite::Algebra, Suite::Polynomials, Suite::Transform, Suite::WilsonFunction, Suite::All] {
        assert_eq!(s.name().parse::<Suite>().unwrap(), s);
    }
    assert!("everything".parse::<Suite>().is_err());
}

#[test]
fn reports_are_deterministic() {
    let t = ParamSet::canonical();
    let a = run_suite(Suite::Transform, &t, &opts(6), None).unwrap();
    let b = run_suite(Suite::Transform, &t, &opts(6), None).unwrap();
    assert_eq!(a.to_string(), b.to_string());
}
