use proptest::prelude::*;

use matchnest::bijections::*;
use matchnest::enumeration::*;
use matchnest::{InversionTable, Permutation, TriangularMatrix};

fn inversion_table(max_n: usize) -> impl Strategy<Value = InversionTable> {
    (0..=max_n)
        .prop_flat_map(|n| (0..n).map(|i| 0..=i as i64).collect::<Vec<_>>())
        .prop_map(|v| InversionTable::new(&v).unwrap())
}

proptest! {
    #[test]
    fn f_round_trip(w in inversion_table(12)) {
        let m = f_inv_to_matching(&w);
        prop_assert_eq!(m.arc_statistics().lne, 0);
        prop_assert_eq!(f_matching_to_inv(&m).unwrap(), w);
    }

    #[test]
    fn fnc_round_trip(w in inversion_table(12)) {
        let m = fnc_inv_to_matching(&w);
        prop_assert_eq!(m.arc_statistics().lcr, 0);
        prop_assert_eq!(fnc_matching_to_inv(&m).unwrap(), w);
    }

    #[test]
    fn g_and_h_round_trip(w in inversion_table(10)) {
        let p = g_inv_to_poset(&w);
        prop_assert!(p.is_factorial());
        prop_assert_eq!(g_poset_to_inv(&p), w.clone());
        let m = h_poset_to_matching(&p);
        prop_assert_eq!(h_matching_to_poset(&m).unwrap(), p);
    }

    #[test]
    fn perm_round_trip(w in inversion_table(12)) {
        let pi: Permutation = inv_to_perm(&w);
        prop_assert_eq!(perm_to_inv(&pi), w);
    }

    #[test]
    fn psi_inverses_land_in_their_classes(w in inversion_table(9)) {
        let t: TriangularMatrix = psi_matching_to_matrix(&f_inv_to_matching(&w));
        let a = psi_inverse_nonneighbor_nesting(&t);
        let b = psi_inverse_nonneighbor_crossing(&t);
        let (ra, rb) = (a.arc_statistics(), b.arc_statistics());
        prop_assert!(ra.lne == 0 && ra.rne == 0);
        prop_assert!(rb.lcr == 0 && rb.rcr == 0);
        prop_assert_eq!(psi_matching_to_matrix(&a), t.clone());
        prop_assert_eq!(psi_matching_to_matrix(&b), t.clone());
        if t.is_zero_one() {
            let c = psi_inverse_zero_one(&t).unwrap();
            prop_assert_eq!(psi_matching_to_matrix(&c), t);
        }
    }
}

#[test]
fn exhaustive_round_trips() {
    for n in 0..=7 {
        for w in gen_inversion_tables(n) {
            assert_eq!(f_matching_to_inv(&f_inv_to_matching(&w)).unwrap(), w);
            assert_eq!(fnc_matching_to_inv(&fnc_inv_to_matching(&w)).unwrap(), w);
            assert_eq!(g_poset_to_inv(&g_inv_to_poset(&w)), w);
            assert_eq!(perm_to_inv(&inv_to_perm(&w)), w);
        }
    }
    for n in 0..=6 {
        for m in gen_matchings(n) {
            if let Ok(w) = f_matching_to_inv(&m) {
                assert_eq!(f_inv_to_matching(&w), m);
                assert_eq!(h_poset_to_matching(&h_matching_to_poset(&m).unwrap()), m);
            }
            if let Ok(w) = fnc_matching_to_inv(&m) {
                assert_eq!(fnc_inv_to_matching(&w), m);
            }
        }
        for t in gen_matrices(n) {
            assert_eq!(psi_matching_to_matrix(&psi_inverse_nonneighbor_nesting(&t)), t);
            assert_eq!(psi_matching_to_matrix(&psi_inverse_nonneighbor_crossing(&t)), t);
            assert_eq!(psi_inverse_zero_one(&t).is_ok(), t.is_zero_one());
        }
    }
}
