//! Property tests for the algebra layer and determinism guarantees of the
//! analysis pipeline.

use proptest::prelude::*;

use g2c_core::acms::{rational_unit_vector, AdaptedBasis};
use g2c_core::analysis::{analyze, fuzz, Backend, XiChoice};
use g2c_core::exterior::{KForm, Vector7};
use g2c_core::manifold::builtin;
use g2c_core::scalar::{Exact, Scalar};

fn ratio_strategy() -> impl Strategy<Value = Exact> {
    (-30i64..30, 1i64..12).prop_map(|(n, d)| Exact::ratio(n, d))
}

fn vector_strategy() -> impl Strategy<Value = Vector7<Exact>> {
    proptest::array::uniform7(ratio_strategy()).prop_map(Vector7::new)
}

fn tuple_strategy(degree: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::sample::subsequence((0..7).collect::<Vec<usize>>(), degree)
}

fn form_strategy(degree: usize) -> impl Strategy<Value = KForm<Exact>> {
    proptest::collection::vec((tuple_strategy(degree), ratio_strategy()), 1..5).prop_map(
        move |terms| {
            let mut f = KForm::zero(degree);
            for (idx, c) in terms {
                f.add_to(&idx, c);
            }
            f
        },
    )
}

fn degree_pair() -> impl Strategy<Value = (usize, usize)> {
    (0usize..=4).prop_flat_map(|a| (Just(a), 0usize..=(7 - a).min(4)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wedge_is_graded_commutative((a, b) in degree_pair().prop_flat_map(|(a, b)| (form_strategy(a), form_strategy(b)))) {
        let ab = a.wedge(&b).unwrap();
        let ba = b.wedge(&a).unwrap();
        let sign = if (a.degree() * b.degree()) % 2 == 0 {
            Exact::one()
        } else {
            -Exact::one()
        };
        prop_assert_eq!(ab, ba.scale(&sign));
    }

    #[test]
    fn eval_is_antisymmetric(form in form_strategy(3), args in proptest::array::uniform3(vector_strategy())) {
        let [x, y, z] = args;
        let original = form.eval(&[x.clone(), y.clone(), z.clone()]).unwrap();
        let swapped = form.eval(&[y, x, z]).unwrap();
        prop_assert_eq!(original, -swapped);
    }

    #[test]
    fn interior_product_squares_to_zero(form in form_strategy(3), x in vector_strategy()) {
        let once = form.interior_product(&x).unwrap();
        let twice = once.interior_product(&x).unwrap();
        prop_assert!(twice.is_zero());
    }

    #[test]
    fn hodge_is_an_involution(degree in 0usize..=7) {
        // composed with a random form of that degree
        let form = KForm::<Exact>::monomial(
            &(0..degree).collect::<Vec<_>>(),
            Exact::ratio(7, 3),
        );
        prop_assert_eq!(form.hodge_star().hodge_star(), form);
    }

    #[test]
    fn hodge_involution_on_random_forms((deg, _) in degree_pair()) {
        // spot-check with multi-term forms as well
        let mut f = KForm::<Exact>::zero(deg);
        let low: Vec<usize> = (0..deg).collect();
        f.add_to(&low, Exact::ratio(2, 5));
        if deg < 7 {
            let shifted: Vec<usize> = (0..deg).map(|i| i + (7 - deg)).collect();
            f.add_to(&shifted, Exact::ratio(-3, 4));
        }
        prop_assert_eq!(f.hodge_star().hodge_star(), f);
    }

    #[test]
    fn stereographic_fields_are_unit_with_orthonormal_bases(
        u in proptest::array::uniform6((-16i64..=16, 1i64..=16).prop_map(|(n, d)| Exact::ratio(n, d)))
    ) {
        let xi = rational_unit_vector(&u);
        prop_assert_eq!(xi.norm2(), Exact::one());
        let basis = AdaptedBasis::adapted_to(&xi);
        prop_assert!(basis.orthonormality_witness().is_none());
        prop_assert_eq!(basis.xi(), &xi);
    }
}

#[test]
fn analyze_output_is_byte_deterministic() {
    let spec = builtin("sasakian3").unwrap();
    let choice = XiChoice::Stereographic(vec![
        "1/2".into(),
        "-3".into(),
        "0".into(),
        "5/7".into(),
        "1".into(),
        "2/9".into(),
    ]);
    let a = analyze(&spec, Some(&choice), None).unwrap().to_json();
    let b = analyze(&spec, Some(&choice), None).unwrap().to_json();
    assert_eq!(a, b);
}

#[test]
fn fuzz_is_reproducible_per_seed() {
    let spec = builtin("sasakian3").unwrap();
    let a = fuzz(&spec, 10, 99).unwrap();
    let b = fuzz(&spec, 10, 99).unwrap();
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
    let c = fuzz(&spec, 10, 100).unwrap();
    assert!(c.all_passed);
}

#[test]
fn float_backend_matches_exact_verdicts() {
    let spec = builtin("sasakian3").unwrap();
    for u in [
        vec!["1", "0", "0", "0", "0", "0"],
        vec!["1/2", "1/3", "0", "2", "0", "-1/4"],
        vec!["0", "0", "5", "0", "-2/3", "1"],
    ] {
        let choice = XiChoice::Stereographic(u.iter().map(|s| s.to_string()).collect());
        let exact = analyze(&spec, Some(&choice), Some(Backend::Exact)).unwrap();
        let float = analyze(&spec, Some(&choice), Some(Backend::Float)).unwrap();
        assert!(exact.audit_passed && float.audit_passed);
        assert_eq!(
            exact.classification.named.almost_k_contact.holds(),
            float.classification.named.almost_k_contact.holds()
        );
        assert_eq!(
            exact.classification.space.trivial,
            float.classification.space.trivial
        );
        for (e, f) in exact
            .classification
            .elimination
            .classes
            .iter()
            .zip(float.classification.elimination.classes.iter())
        {
            assert_eq!(e.is_excluded(), f.is_excluded());
        }
    }
}

#[test]
fn float_tolerance_is_reported() {
    let spec = builtin("flat").unwrap();
    let report = analyze(&spec, None, Some(Backend::Float)).unwrap();
    assert_eq!(report.backend, "float");
    assert!(report.tolerance.is_some());
    assert!(report.classification.named.cosymplectic.holds());
}

#[test]
fn text_and_json_renderings_carry_identical_values() {
    let spec = builtin("sasakian3").unwrap();
    let report = analyze(&spec, None, None).unwrap();
    let text = report.render_text();
    // spot values must appear verbatim in both renderings
    assert!(text.contains("delta Phi(xi) = -2"));
    assert_eq!(report.diagnostics.delta_phi_at_xi, "-2");
    assert!(text.contains("i10 = 4"));
    assert_eq!(report.invariants.i[9], "4");
    let json = report.to_json();
    assert!(json.contains("\"delta_phi_at_xi\": \"-2\""));
}
