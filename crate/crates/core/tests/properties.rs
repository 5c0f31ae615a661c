use proptest::prelude::*;

use qforest::oracle::{complex_to_masks, masks_to_complex, naive_f_vector};
use qforest::transforms::f_polynomial;
use qforest::{b_from_c, b_sequence, c_sequence, f_vector, h_vector, is_forest, leaf_order, realize, FVector};

fn masks() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(1u64..(1 << 8), 1..6)
}

fn fvectors() -> impl Strategy<Value = FVector> {
    prop::collection::vec(1u64..=10_000, 1..=8).prop_map(|v| FVector::new(v).unwrap())
}

proptest! {
    #[test]
    fn facet_pruning_is_idempotent(m in masks()) {
        let c = masks_to_complex(&m);
        let again = masks_to_complex(&complex_to_masks(&c));
        prop_assert_eq!(c, again);
    }

    #[test]
    fn f_vector_matches_subset_count(m in masks()) {
        let c = masks_to_complex(&m);
        let f = f_vector(&c).unwrap();
        prop_assert_eq!(f.entries(), &naive_f_vector(&c)[..]);
    }

    #[test]
    fn h_vector_boundary_terms(m in masks()) {
        let c = masks_to_complex(&m);
        let f = f_vector(&c).unwrap();
        let h = h_vector(&f).unwrap();
        prop_assert_eq!(h.entries()[0], 1);
        prop_assert_eq!(h.entries()[1], f.entries()[0] as i128 - f.dimension() as i128);
    }

    #[test]
    fn c_sums_to_one_and_b_is_its_tail(f in fvectors()) {
        let c = c_sequence(&f).unwrap();
        prop_assert_eq!(c.total(), 1);
        prop_assert_eq!(b_from_c(&c), b_sequence(&f).unwrap());
    }

    #[test]
    fn shift_round_trip(f in fvectors()) {
        let p = f_polynomial(&f);
        prop_assert_eq!(p.shifted(-1).unwrap().shifted(1).unwrap(), p);
    }

    #[test]
    fn realized_forests_are_recognized(f in prop::collection::vec(1u64..=12, 1..=4)) {
        let f = FVector::new(f).unwrap();
        if let Ok(c) = realize(&f) {
            prop_assert_eq!(f_vector(&c).unwrap(), f);
            prop_assert!(leaf_order(&c).unwrap().is_quasi_forest);
            prop_assert_eq!(is_forest(&c).unwrap().is_forest, Some(true));
        }
    }
}
