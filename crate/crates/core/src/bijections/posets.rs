use crate::error::Result;
use crate::inversion::InversionTable;
use crate::matching::Matching;
use crate::poset::{FactorialPoset, Poset};

use super::insertion::{f_inv_to_matching, f_matching_to_inv};

/// `g(P) = (pre(1), ..., pre(n))`.
pub fn g_poset_to_inv(p: &FactorialPoset) -> InversionTable {
    InversionTable::from_vec_unchecked(p.pre_counts().to_vec())
}

/// `g^-1`: `i <_P k` exactly when `i <= a_k`.
pub fn g_inv_to_poset(w: &InversionTable) -> FactorialPoset {
    let a = w.entries();
    let poset = Poset::from_fn(w.n(), |i, k| i <= a[k - 1] as usize);
    FactorialPoset::try_from(poset).expect("g^-1 always yields a factorial poset")
}

/// `h = f o g`.
pub fn h_poset_to_matching(p: &FactorialPoset) -> Matching {
    f_inv_to_matching(&g_poset_to_inv(p))
}

/// `h^-1`: `i <_P j` iff the closer of arc `i` is left of the opener of
/// arc `j`, arcs ordered by closer.
pub fn h_matching_to_poset(m: &Matching) -> Result<FactorialPoset> {
    // rejects left-nestings with the offending pair
    f_matching_to_inv(m)?;
    let arcs = m.arcs();
    let poset = Poset::from_fn(m.n(), |i, j| arcs[i - 1].closer < arcs[j - 1].opener);
    FactorialPoset::try_from(poset)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn w(v: &[i64]) -> InversionTable {
        InversionTable::new(v).unwrap()
    }

    fn fp(n: usize, rel: &[(i64, i64)]) -> FactorialPoset {
        FactorialPoset::try_from(Poset::new(n, rel).unwrap()).unwrap()
    }

    fn m(pairs: &[(i64, i64)]) -> Matching {
        Matching::from_pairs(pairs).unwrap()
    }

    #[test]
    fn g_examples() {
        assert_eq!(g_poset_to_inv(&fp(3, &[(1, 2), (2, 3)])), w(&[0, 1, 2]));
        assert_eq!(g_poset_to_inv(&fp(3, &[])), w(&[0, 0, 0]));
        assert_eq!(g_poset_to_inv(&fp(4, &[(1, 2), (1, 4)])), w(&[0, 1, 0, 1]));
        assert_eq!(g_inv_to_poset(&w(&[0, 1, 2])), fp(3, &[(1, 2), (2, 3)]));
        assert_eq!(g_inv_to_poset(&w(&[0, 0, 1])), fp(3, &[(1, 3)]));
        assert_eq!(g_inv_to_poset(&w(&[0, 1, 0, 1])), fp(4, &[(1, 2), (1, 4)]));
    }

    #[test]
    fn h_examples() {
        assert_eq!(h_poset_to_matching(&fp(4, &[(1, 2), (1, 4)])), m(&[(1, 3), (4, 6), (2, 7), (5, 8)]));
        assert_eq!(h_poset_to_matching(&fp(3, &[])), m(&[(1, 4), (2, 5), (3, 6)]));
        assert_eq!(h_matching_to_poset(&m(&[(1, 2), (3, 4), (5, 6)])).unwrap(), fp(3, &[(1, 2), (2, 3)]));
        assert!(matches!(h_matching_to_poset(&m(&[(1, 4), (2, 3)])), Err(Error::HasLeftNesting { .. })));
        assert_eq!(h_matching_to_poset(&Matching::empty()).unwrap().n(), 0);
    }
}
