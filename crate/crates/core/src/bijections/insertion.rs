use crate::error::{Error, Result};
use crate::inversion::InversionTable;
use crate::matching::{Endpoint, Matching};

/// Index of the `k`-th closer (1-based) in `word`.
fn closer_index(word: &[Endpoint], k: usize) -> usize {
    word.iter()
        .enumerate()
        .filter(|(_, e)| matches!(e, Endpoint::Close(_)))
        .nth(k - 1)
        .map(|(idx, _)| idx)
        .expect("inversion table entry bounded by the number of closers")
}

/// Builds a matching arc by arc, each new arc closing at the right end and
/// opening at the position chosen by `place(word, a_i, i)`.
fn insert_arcs(w: &InversionTable, place: impl Fn(&[Endpoint], usize, usize) -> usize) -> Matching {
    let mut word: Vec<Endpoint> = Vec::with_capacity(2 * w.n());
    for (label, &a) in w.entries().iter().enumerate() {
        let at = place(&word, a as usize, label);
        word.insert(at, Endpoint::Open(label));
        word.push(Endpoint::Close(label));
    }
    Matching::from_word(&word)
}

/// `f`: the opener of arc `i` goes immediately left of the `(a_i + 1)`-st
/// closer, or immediately left of its own closer when `a_i = i - 1`.
pub fn f_inv_to_matching(w: &InversionTable) -> Matching {
    insert_arcs(w, |word, a, previous_arcs| {
        if a == previous_arcs {
            word.len()
        } else {
            closer_index(word, a + 1)
        }
    })
}

/// `f^-1`: `a_i` is the number of closers left of the opener of the `i`-th
/// arc (arcs ordered by closer).
pub fn f_matching_to_inv(m: &Matching) -> Result<InversionTable> {
    if let Some((outer, inner)) = m.first_left_nesting() {
        return Err(Error::HasLeftNesting { outer, inner });
    }
    Ok(closers_left_of_openers(m))
}

/// `f_nc`: the opener of arc `i` goes immediately right of the `a_i`-th
/// closer, or to the extreme left when `a_i = 0`.
pub fn fnc_inv_to_matching(w: &InversionTable) -> Matching {
    insert_arcs(w, |word, a, _| if a == 0 { 0 } else { closer_index(word, a) + 1 })
}

/// Inverse of `f_nc`. Later arcs only add closers to the right of every
/// existing opener, so the count of closers left of an opener is the value
/// it was inserted with.
pub fn fnc_matching_to_inv(m: &Matching) -> Result<InversionTable> {
    if let Some((first, second)) = m.first_left_crossing() {
        return Err(Error::HasLeftCrossing { first, second });
    }
    Ok(closers_left_of_openers(m))
}

fn closers_left_of_openers(m: &Matching) -> InversionTable {
    InversionTable::from_vec_unchecked(
        m.arcs().iter().map(|arc| m.closers_before(arc.opener) as u32).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::Arc;

    fn w(v: &[i64]) -> InversionTable {
        InversionTable::new(v).unwrap()
    }

    fn m(pairs: &[(i64, i64)]) -> Matching {
        Matching::from_pairs(pairs).unwrap()
    }

    #[test]
    fn f_worked_example() {
        assert_eq!(f_inv_to_matching(&w(&[0, 1, 0, 1])), m(&[(1, 3), (4, 6), (2, 7), (5, 8)]));
        assert_eq!(f_matching_to_inv(&m(&[(1, 3), (2, 7), (4, 6), (5, 8)])).unwrap(), w(&[0, 1, 0, 1]));
    }

    #[test]
    fn f_table_columns() {
        assert_eq!(f_inv_to_matching(&w(&[0, 0, 0])), m(&[(1, 4), (2, 5), (3, 6)]));
        assert_eq!(f_inv_to_matching(&w(&[0, 1, 2])), m(&[(1, 2), (3, 4), (5, 6)]));
        assert_eq!(f_inv_to_matching(&w(&[0, 1, 1])), m(&[(1, 2), (3, 5), (4, 6)]));
    }

    #[test]
    fn f_empty_and_errors() {
        assert_eq!(f_inv_to_matching(&w(&[])), Matching::empty());
        assert_eq!(f_matching_to_inv(&Matching::empty()).unwrap().n(), 0);
        assert_eq!(
            f_matching_to_inv(&m(&[(2, 3), (1, 4)])),
            Err(Error::HasLeftNesting { outer: Arc::new(1, 4), inner: Arc::new(2, 3) })
        );
    }

    #[test]
    fn fnc_examples() {
        // each new opener at the extreme left: fully nested
        assert_eq!(fnc_inv_to_matching(&w(&[0, 0, 0])), m(&[(3, 4), (2, 5), (1, 6)]));
        assert_eq!(fnc_inv_to_matching(&w(&[0, 1, 2])), m(&[(1, 2), (3, 4), (5, 6)]));
        assert_eq!(fnc_matching_to_inv(&m(&[(3, 4), (2, 5), (1, 6)])).unwrap(), w(&[0, 0, 0]));
        assert!(matches!(
            fnc_matching_to_inv(&m(&[(1, 3), (2, 4)])),
            Err(Error::HasLeftCrossing { .. })
        ));
    }
}
