use proptest::prelude::*;
use wilson_daha::daha::{verify_relations, ParamSet, Poly};
use wilson_daha::function::checks::{check_calf_inversion, check_ratio_laws};
use wilson_daha::function::FrakTransform;
use wilson_daha::numeric::{gamma, pochhammer, HpComplex, Rational};
use wilson_daha::transform::checks::plancherel_exact;
use wilson_daha::transform::{Scale, SpectralTransform, Variant};
use wilson_daha::wilson::checks::{
    check_decomposition, check_difference_equation, check_duality_grid, check_eigen, check_evaluation,
    check_recurrence_upto, check_rodriguez, check_symmetric_inversion,
};
use wilson_daha::wilson::{DualPair, WilsonFamily};
use wilson_daha::Error;

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=9).prop_map(|(p, q)| Rational::from((p, q)))
}

fn admissible() -> impl Strategy<Value = ParamSet> {
    [rational(), rational(), rational(), rational()]
        .prop_map(|[a, b, c, d]| ParamSet::new(a, b, c, d))
        .prop_filter("exactly admissible with nonzero entries", |t| t.exact_ok() && t.values().iter().all(|v| *v != 0))
}

fn poly(max_degree: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(rational(), 1..=max_degree + 1).prop_map(Poly::new)
}

fn even_poly(max_half: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(rational(), 1..=max_half + 1).prop_map(|c| {
        let mut coeffs = Vec::new();
        for (i, v) in c.into_iter().enumerate() {
            if i > 0 {
                coeffs.push(Rational::new());
            }
            coeffs.push(v);
        }
        Poly::new(coeffs)
    })
}

/// A witness fails the case; a singular coefficient at this parameter point rejects it.
fn clean(r: wilson_daha::Result<Option<String>>) -> Result<(), TestCaseError> {
    match r {
        Ok(None) => Ok(()),
        Ok(Some(w)) => Err(TestCaseError::fail(w)),
        Err(e @ (Error::Pole(_) | Error::DegenerateDenominator(_))) => Err(TestCaseError::reject(e.to_string())),
        Err(e) => Err(TestCaseError::fail(e.to_string())),
    }
}

fn transform(t: &ParamSet, variant: Variant) -> Result<SpectralTransform, TestCaseError> {
    SpectralTransform::new(t, variant).map_err(|e| TestCaseError::reject(e.to_string()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn relations_hold_for_admissible_parameters(t in admissible()) {
        let r = verify_relations(&t, 6).unwrap();
        prop_assert!(r.passed(), "{}", r);
    }

    #[test]
    fn eigenbasis_routes_and_evaluations_agree(t in admissible()) {
        let fam = WilsonFamily::new(&t).unwrap();
        clean(check_eigen(&fam, 6))?;
        clean(check_rodriguez(&fam, 4))?;
        clean(check_evaluation(&fam, 6))?;
    }

    #[test]
    fn symmetric_decomposition_and_difference_equation(t in admissible()) {
        let fam = WilsonFamily::new(&t).unwrap();
        clean(check_symmetric_inversion(&fam, 3))?;
        clean(check_decomposition(&fam, 3))?;
        clean(check_difference_equation(&fam, 3))?;
        clean(check_recurrence_upto(&fam, 3))?;
    }

    #[test]
    fn duality_swaps_degree_and_spectral_point(t in admissible()) {
        prop_assume!(t.sigma().exact_ok());
        clean(check_duality_grid(&DualPair::new(&t).unwrap(), 4))?;
    }

    #[test]
    fn inverse_undoes_forward_up_to_the_normalizer(t in admissible(), p in poly(5)) {
        let tr = transform(&t, Variant::Full)?;
        let back = tr.inverse(&tr.forward(&p).unwrap()).unwrap();
        prop_assert_eq!(back.poly, p);
        prop_assert_eq!(back.scale, Scale::NORMALIZER);
    }

    #[test]
    fn symmetric_inverse_undoes_forward(t in admissible(), p in even_poly(3)) {
        let tr = transform(&t, Variant::Plus)?;
        let back = tr.inverse(&tr.forward(&p).unwrap()).unwrap();
        prop_assert_eq!(back.poly, p);
    }

    #[test]
    fn plancherel_holds_exactly(t in admissible(), p in poly(4), q in poly(4)) {
        let tr = transform(&t, Variant::Full)?;
        clean(plancherel_exact(&tr, &p, &q))?;
    }

    #[test]
    fn wilson_transform_squares_to_a_plus_b_squared(t in admissible()) {
        let (Ok(fr), Ok(dual)) = (FrakTransform::new(&t), FrakTransform::new(&t.sigma())) else {
            return Err(TestCaseError::reject("twisted parameters not admissible"));
        };
        clean(check_ratio_laws(&t, 4))?;
        clean(check_calf_inversion(&fr, &dual, 4))?;
    }
}

proptest! {
    #[test]
    fn division_with_remainder_reconstructs(p in poly(7), d in poly(3)) {
        prop_assume!(!d.is_zero());
        let (q, r) = p.div_rem(&d).unwrap();
        prop_assert!(r.degree().unwrap_or(0) < d.degree().unwrap_or(0) || r.is_zero());
        prop_assert_eq!(&(&q * &d) + &r, p);
    }

    #[test]
    fn shifts_and_reflections_invert(p in poly(6), h in rational()) {
        prop_assert_eq!(p.shift(&h).shift(&-h.clone()), p.clone());
        prop_assert_eq!(p.reflect().reflect(), p.clone());
        prop_assert_eq!(p.reflect_about_half().reflect_about_half(), p);
    }

    #[test]
    fn rationals_round_trip_through_strings(q in rational()) {
        prop_assert_eq!(wilson_daha::numeric::parse_rational(&q.to_string()).unwrap(), q);
    }

    #[test]
    fn pochhammer_steps(a in rational(), n in 0usize..8) {
        let lhs = pochhammer(&a, n + 1);
        let rhs = pochhammer(&a, n) * Rational::from(&a + n as u32);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gamma_satisfies_its_recurrence(re in -3.7f64..3.7, im in -4.0f64..4.0) {
        let prec = 128;
        let z = HpComplex::from_f64(re, im, prec);
        prop_assume!(z.nearest_integer().is_none_or(|(k, d)| k > 0 || d > 1e-3));
        let g = gamma(&z).unwrap();
        let g1 = gamma(&z.add_rational(&Rational::from(1))).unwrap();
        prop_assert!(g1.rel_diff(&(&z * &g), 0.0) < 1e-30);
    }
}
