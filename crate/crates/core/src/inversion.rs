use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A sequence `(a_1, ..., a_n)` with `0 <= a_i <= i - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<u32>")]
pub struct InversionTable(Vec<u32>);

impl InversionTable {
    pub fn new(entries: &[i64]) -> Result<Self> {
        for (i, &a) in entries.iter().enumerate() {
            if a < 0 || a > i as i64 {
                return Err(Error::EntryOutOfRange { position: i + 1, value: a, max: i });
            }
        }
        Ok(InversionTable(entries.iter().map(|&a| a as u32).collect()))
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(entries.iter().enumerate().all(|(i, &a)| a as usize <= i));
        InversionTable(entries)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&a| a as u64).sum()
    }

    pub fn distinct_entries(&self) -> usize {
        self.0.iter().collect::<BTreeSet<_>>().len()
    }

    /// 1-based access, `a(i) = a_i`.
    fn a(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    /// Some `a_l` with `l > i` equals `i`.
    fn corrected_after(&self, i: usize) -> bool {
        self.0[i..].contains(&(i as u32))
    }

    /// Every descent `a_i > a_{i+1}` is followed later by the value `i`.
    pub fn is_descent_correcting(&self) -> bool {
        (1..self.n()).all(|i| self.a(i) <= self.a(i + 1) || self.corrected_after(i))
    }

    /// Every ascent `a_i < a_{i+1}` with `a_{i+1} != i + 1` is followed later
    /// by the value `i`. Positions are 1-based.
    pub fn is_ascent_correcting(&self) -> bool {
        (1..self.n()).all(|i| {
            let qualifying = self.a(i) < self.a(i + 1) && self.a(i + 1) != i as u32 + 1;
            !qualifying || self.corrected_after(i)
        })
    }

    pub fn sequence_predicates(&self) -> SequencePredicates {
        SequencePredicates {
            descent_correcting: self.is_descent_correcting(),
            ascent_correcting: self.is_ascent_correcting(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SequencePredicates {
    pub descent_correcting: bool,
    pub ascent_correcting: bool,
}

impl TryFrom<Vec<i64>> for InversionTable {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        InversionTable::new(&v)
    }
}

impl From<InversionTable> for Vec<u32> {
    fn from(w: InversionTable) -> Self {
        w.0
    }
}

/// Ascent sequences: `x_1 = 0` and `0 <= x_i <= 1 + asc(x_1..x_{i-1})`.
pub fn is_ascent_sequence(xs: &[u32]) -> bool {
    let mut ascents = 0;
    for (i, &x) in xs.iter().enumerate() {
        if i == 0 {
            if x != 0 {
                return false;
            }
            continue;
        }
        if x > ascents + 1 {
            return false;
        }
        if xs[i - 1] < x {
            ascents += 1;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> InversionTable {
        InversionTable::new(v).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(w(&[0, 1, 0, 1]).entries(), &[0, 1, 0, 1]);
        assert_eq!(w(&[]).n(), 0);
        assert_eq!(
            InversionTable::new(&[0, 2]),
            Err(Error::EntryOutOfRange { position: 2, value: 2, max: 1 })
        );
        assert!(InversionTable::new(&[0, -1]).is_err());
        assert!(serde_json::from_str::<InversionTable>("[1]").is_err());
    }

    #[test]
    fn correcting_sequences() {
        let p = w(&[0, 1, 2]).sequence_predicates();
        assert!(p.descent_correcting && p.ascent_correcting);
        assert!(!w(&[0, 1, 0]).is_descent_correcting());
        let p = w(&[0, 0, 0]).sequence_predicates();
        assert!(p.descent_correcting && p.ascent_correcting);
        // descent at i = 2 corrected by a_4 = 2
        assert!(w(&[0, 1, 0, 2]).is_descent_correcting());
        // ascent at i = 1 (0 < 1) corrected by a_2 = 1 itself; ascent at i = 3 needs a later 3
        assert!(!w(&[0, 1, 0, 1]).is_ascent_correcting());
    }

    #[test]
    fn ascent_sequences() {
        assert!(is_ascent_sequence(&[]));
        assert!(is_ascent_sequence(&[0, 1, 0, 2]));
        assert!(!is_ascent_sequence(&[0, 2]));
        assert!(!is_ascent_sequence(&[1]));
    }
}
