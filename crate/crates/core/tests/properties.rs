//! Property tests for the module invariants that are not part of the
//! acceptance gate: serialization round trips, canonical-form behaviour on
//! orbits, constraint symmetries, and the value bounds of g.

use num_traits::{Signed, ToPrimitive};
use proptest::prelude::*;

use oneq_core::boolfn::{canonical_form, BitString, Isomorphism, PartialBooleanFunction};
use oneq_core::catalog::make_f1;
use oneq_core::feasibility::{
    build_constraints, solve_feasibility, FeasibilityOutcome, WeightCertificate,
};
use oneq_core::rational::{integer, Rational};
use oneq_core::simulator::{run_algorithm1, DEFAULT_TOLERANCE};
use oneq_core::witness::{
    build_gram_witness, build_projector_float, evaluate_g, weighted_inner,
};

prop_compose! {
    fn arb_function(max_n: usize)(n in 1usize..=max_n)
        (n in Just(n),
         domain in 1u64..(1u64 << (1usize << n)),
         values in 0u64..(1u64 << (1usize << n)))
        -> PartialBooleanFunction
    {
        let entries = (0..(1u64 << n))
            .filter(|k| (domain >> k) & 1 == 1)
            .map(|k| (BitString::new(n, k).unwrap(), (values >> k) & 1 == 1));
        PartialBooleanFunction::from_entries(n, entries).expect("domain mask is nonzero")
    }
}

fn arb_iso(n: usize) -> impl Strategy<Value = Isomorphism> {
    let indices: Vec<usize> = (0..n).collect();
    (
        Just(indices).prop_shuffle(),
        0u64..(1u64 << n),
        any::<bool>(),
    )
        .prop_map(|(perm, mask, flip)| Isomorphism::new(perm, mask, flip).unwrap())
}

proptest! {
    #[test]
    fn parse_serialize_round_trip(f in arb_function(4)) {
        let text = f.serialize();
        prop_assert_eq!(PartialBooleanFunction::parse(&text).unwrap(), f);
    }

    #[test]
    fn certificate_round_trip(f in arb_function(4)) {
        if let FeasibilityOutcome::Feasible(c) = solve_feasibility(&build_constraints(&f)) {
            let parsed = WeightCertificate::parse(&c.serialize()).unwrap();
            prop_assert_eq!(parsed, c);
        }
    }

    #[test]
    fn canonical_form_is_idempotent_and_orbit_constant(
        (f, iso) in arb_function(3).prop_flat_map(|f| {
            let n = f.n();
            (Just(f), arb_iso(n))
        })
    ) {
        let canon = canonical_form(&f).unwrap();
        prop_assert_eq!(canonical_form(&canon).unwrap(), canon.clone());
        prop_assert_eq!(canonical_form(&iso.apply(&f)).unwrap(), canon.clone());
        prop_assert_eq!(canonical_form(&f.complement()).unwrap(), canon);
    }

    #[test]
    fn differing_set_is_symmetric_and_empty_on_equal(
        n in 1usize..=6, a in 0u64..64, b in 0u64..64
    ) {
        let mask = (1u64 << n) - 1;
        let x = BitString::new(n, a & mask).unwrap();
        let y = BitString::new(n, b & mask).unwrap();
        prop_assert_eq!(x.differing_set(&y).unwrap(), y.differing_set(&x).unwrap());
        prop_assert!(x.differing_set(&x).unwrap().is_empty());
        // members never include 0 and never exceed n
        for &i in x.differing_set(&y).unwrap().members() {
            prop_assert!(i >= 1 && i <= n);
        }
    }

    #[test]
    fn sign_vectors_are_injective_and_fixed_at_zero(n in 1usize..=6, a in 0u64..64, b in 0u64..64) {
        let mask = (1u64 << n) - 1;
        let x = BitString::new(n, a & mask).unwrap();
        let y = BitString::new(n, b & mask).unwrap();
        prop_assert_eq!(x.sign_vector().sign(0), 1);
        if x != y {
            prop_assert_ne!(x.sign_vector(), y.sign_vector());
        }
    }

    #[test]
    fn complement_preserves_constraints_and_decision(f in arb_function(4)) {
        let sets: Vec<_> = build_constraints(&f).sets().cloned().collect();
        let csets: Vec<_> = build_constraints(&f.complement()).sets().cloned().collect();
        prop_assert_eq!(sets, csets);
        prop_assert_eq!(
            solve_feasibility(&build_constraints(&f)).is_feasible(),
            solve_feasibility(&build_constraints(&f.complement())).is_feasible()
        );
    }

    #[test]
    fn g_stays_in_the_unit_interval(f in arb_function(4)) {
        if let FeasibilityOutcome::Feasible(c) = solve_feasibility(&build_constraints(&f)) {
            let w = build_gram_witness(&f, &c).unwrap();
            for k in 0..(1u64 << f.n()) {
                let x = BitString::new(f.n(), k).unwrap();
                let g = evaluate_g(&w, &x);
                prop_assert!(!g.is_negative());
                prop_assert!(g <= integer(1));
            }
        }
    }

    #[test]
    fn self_inner_product_is_one(f in arb_function(4)) {
        if let FeasibilityOutcome::Feasible(c) = solve_feasibility(&build_constraints(&f)) {
            for (x, _) in f.entries() {
                prop_assert_eq!(weighted_inner(&c, x, x).unwrap(), integer(1));
            }
        }
    }

    #[test]
    fn solver_output_is_reproducible(f in arb_function(3)) {
        let a = solve_feasibility(&build_constraints(&f));
        let b = solve_feasibility(&build_constraints(&f));
        match (a, b) {
            (FeasibilityOutcome::Feasible(x), FeasibilityOutcome::Feasible(y)) => {
                prop_assert_eq!(x.weights(), y.weights());
            }
            (FeasibilityOutcome::Infeasible(x), FeasibilityOutcome::Infeasible(y)) => {
                prop_assert_eq!(x.to_string(), y.to_string());
            }
            _ => prop_assert!(false, "outcomes differ between runs"),
        }
    }
}

/// The float/exact agreement contract at the largest supported simulation
/// size: every point of the 12-variable cube.
#[test]
fn float_exact_agreement_at_n12() {
    let entry = make_f1(12).unwrap();
    let w = build_gram_witness(&entry.function, &entry.certificate).unwrap();
    let p = build_projector_float(&w).unwrap();
    for k in 0..(1u64 << 12) {
        let x = BitString::new(12, k).unwrap();
        let exact = evaluate_g(&w, &x).to_f64().unwrap();
        let state = oneq_core::simulator::apply_phase_oracle(
            &oneq_core::simulator::initial_state(&entry.certificate),
            &x,
        )
        .unwrap();
        let measured = oneq_core::simulator::measure_projector(&state, &p).unwrap();
        assert!(
            (measured - exact).abs() <= 1e-9,
            "deviation at {x}: |{measured} - {exact}|"
        );
    }
    let report = run_algorithm1(&entry.function, &entry.certificate, &p, DEFAULT_TOLERANCE).unwrap();
    assert!(report.all_pass());
}

/// Exactness carrier sanity: weights coming out of the solver are stored in
/// lowest terms with positive denominators.
#[test]
fn solver_weights_are_normalized_rationals() {
    let f = PartialBooleanFunction::parse("0000 1\n1111 1\n0011 0\n1100 0").unwrap();
    let FeasibilityOutcome::Feasible(c) = solve_feasibility(&build_constraints(&f)) else {
        panic!("feasible instance");
    };
    for w in c.weights() {
        let normalized = Rational::new(w.numer().clone(), w.denom().clone());
        assert_eq!(&normalized, w);
        assert!(w.denom() > &num_bigint::BigInt::from(0));
    }
}
