//! Exhaustive small-n properties, checked against brute-force oracles
//! written independently of the library's predicates.

use std::collections::BTreeSet;

use matchnest::bijections::*;
use matchnest::enumeration::*;
use matchnest::{Matching, Poset};

/// Classifies every arc pair from scratch: (nestings, crossings, alignments).
fn classify_pairs(m: &Matching) -> (u64, u64, u64) {
    let mut counts = (0, 0, 0);
    let arcs = m.arcs();
    for (x, a) in arcs.iter().enumerate() {
        for b in &arcs[x + 1..] {
            let (first, second) = if a.opener < b.opener { (a, b) } else { (b, a) };
            if second.closer < first.closer {
                counts.0 += 1;
            } else if second.opener < first.closer {
                counts.1 += 1;
            } else {
                counts.2 += 1;
            }
        }
    }
    counts
}

fn binom2(n: usize) -> u64 {
    (n * n.saturating_sub(1) / 2) as u64
}

#[test]
fn pair_classification_partitions_all_pairs() {
    for n in 0..=6 {
        for m in gen_matchings(n) {
            let (ne, cr, al) = classify_pairs(&m);
            let rec = m.arc_statistics();
            assert_eq!((rec.ne, rec.cr), (ne, cr), "{m}");
            assert_eq!(ne + cr + al, binom2(n));
            assert!(rec.lne <= rec.ne && rec.rne <= rec.ne && rec.lcr <= rec.cr && rec.rcr <= rec.cr);
            assert_eq!(m.count_m_left_nestings(1), rec.lne);
            assert_eq!(m.count_m_left_nestings(2 * n as u32), rec.ne);
        }
    }
}

#[test]
fn generator_sizes() {
    for n in 0..=7 {
        assert_eq!(gen_matchings(n).count() as u128, double_factorial_odd(n));
        assert_eq!(gen_permutations(n).count() as u128, factorial(n));
        assert_eq!(gen_inversion_tables(n).count() as u128, factorial(n));
        let distinct: BTreeSet<_> = gen_matchings(n.min(6)).collect();
        assert_eq!(distinct.len() as u128, double_factorial_odd(n.min(6)));
    }
}

#[test]
fn fishburn_classes_agree() {
    let fish = fishburn_numbers(6);
    for n in 0..=6 {
        let f = u64::try_from(&fish[n]).unwrap();
        let counts = [
            count_class(ObjectClass::Matchings, n, &[Predicate::NoNeighborNesting]).unwrap(),
            count_class(ObjectClass::Matchings, n, &[Predicate::NoNeighborCrossing]).unwrap(),
            gen_matrices(n).count() as u64,
            gen_ascent_sequences(n).count() as u64,
            count_class(ObjectClass::FactorialPosets, n, &[Predicate::ConditionOne]).unwrap(),
            count_class(ObjectClass::InversionTables, n, &[Predicate::DescentCorrecting]).unwrap(),
            count_class(ObjectClass::InversionTables, n, &[Predicate::AscentCorrecting]).unwrap(),
        ];
        assert!(counts.iter().all(|&c| c == f), "n = {n}: {counts:?} vs {f}");
    }
}

#[test]
fn catalan_classes_agree() {
    for n in 0..=6 {
        let c = catalan(n) as u64;
        assert_eq!(count_class(ObjectClass::Matchings, n, &[Predicate::NoNesting]).unwrap(), c);
        assert_eq!(
            count_class(ObjectClass::FactorialPosets, n, &[Predicate::DuallyFactorial]).unwrap(),
            c
        );
        assert_eq!(count_class(ObjectClass::Matrices, n, &[Predicate::NonnestingImage]).unwrap(), c);
        assert_eq!(count_class(ObjectClass::Matrices, n, &[Predicate::NoncrossingImage]).unwrap(), c);
    }
}

#[test]
fn factorial_poset_predicates() {
    for n in 0..=6 {
        for p in gen_factorial_posets(n) {
            assert!(p.is_two_plus_two_free());
            assert_eq!(p.satisfies_condition_one(), p.satisfies_condition_one_var());
            if p.satisfies_condition_one() {
                assert_eq!(p.is_dually_factorial(), p.is_three_plus_one_free(), "{:?}", p.relations());
            }
        }
    }
}

#[test]
fn ascent_correcting_readings_coincide() {
    // a_{i+1} != i+1 (1-based) and a_{i+1} != i (0-based) select the same tables
    fn zero_based(a: &[u32]) -> bool {
        (0..a.len().saturating_sub(1)).all(|i| {
            let i1 = i as u32 + 1;
            !(a[i] < a[i + 1] && a[i + 1] != i1) || a[i + 1..].contains(&i1)
        })
    }
    for n in 0..=6 {
        for w in gen_inversion_tables(n) {
            assert_eq!(w.is_ascent_correcting(), zero_based(w.entries()), "{:?}", w.entries());
        }
    }
}

#[test]
fn psi_is_onto_and_injective_on_restricted_classes() {
    for n in 0..=5 {
        let all: BTreeSet<_> = gen_matrices(n).collect();
        let images: BTreeSet<_> = gen_matchings(n).map(|m| psi_matching_to_matrix(&m)).collect();
        assert_eq!(images, all);
        for pred in [Predicate::NoNeighborNesting, Predicate::NoNeighborCrossing, Predicate::Lne0AndRcr0] {
            let class: Vec<_> = filter_class(ObjectClass::Matchings, n, &[pred]).unwrap().collect();
            let distinct: BTreeSet<_> = class
                .iter()
                .map(|o| match o {
                    Object::Matching(m) => psi_matching_to_matrix(m),
                    _ => unreachable!(),
                })
                .collect();
            assert_eq!(distinct.len(), class.len(), "{pred} at n = {n}");
        }
    }
}

#[test]
fn canonical_labeling_is_invariant_under_relabeling() {
    for n in 0..=5 {
        for p in gen_factorial_posets(n) {
            let q = canonical_labeling(&p).unwrap();
            assert!(q.satisfies_condition_one());
            for pi in gen_permutations(n) {
                let labels: Vec<usize> = pi.values().iter().map(|&v| v as usize).collect();
                let relabeled: Poset = p.relabel(&labels);
                assert_eq!(canonical_labeling(&relabeled).unwrap(), q);
            }
        }
    }
}

#[test]
fn second_order_eulerian_matches_lne_brute_force() {
    for n in 1..=6 {
        let mut by_lne = vec![0u64; n];
        for m in gen_matchings(n) {
            let arcs = m.arcs();
            let lne = arcs
                .iter()
                .flat_map(|a| arcs.iter().map(move |b| (a, b)))
                .filter(|(a, b)| b.opener == a.opener + 1 && b.closer < a.closer)
                .count();
            by_lne[lne] += 1;
        }
        let mut row = second_order_eulerian(n);
        row.reverse();
        assert_eq!(by_lne, row, "n = {n}");
    }
}
