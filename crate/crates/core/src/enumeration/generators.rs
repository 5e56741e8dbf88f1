use itertools::Itertools;

use crate::bijections::g_inv_to_poset;
use crate::inversion::{is_ascent_sequence, InversionTable};
use crate::matching::{Arc, Matching};
use crate::matrix::TriangularMatrix;
use crate::permutation::Permutation;
use crate::poset::{FactorialPoset, Poset};

/// Mixed-radix counter, last digit fastest, so digit vectors come out in
/// lexicographic order. No radices means a single empty vector.
#[derive(Debug, Clone)]
struct Odometer {
    radices: Vec<u32>,
    next: Option<Vec<u32>>,
}

impl Odometer {
    fn new(radices: Vec<u32>) -> Self {
        let next = radices.iter().all(|&r| r > 0).then(|| vec![0; radices.len()]);
        Odometer { radices, next }
    }
}

impl Iterator for Odometer {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let current = self.next.take()?;
        let mut digits = current.clone();
        for pos in (0..digits.len()).rev() {
            digits[pos] += 1;
            if digits[pos] < self.radices[pos] {
                self.next = Some(digits);
                break;
            }
            digits[pos] = 0;
        }
        Some(current)
    }
}

/// All matchings on `[2n]`. Step `i` pairs the smallest unused point with
/// the `c_i`-th remaining point, so the order is lexicographic in the arc
/// list sorted by opener.
pub fn gen_matchings(n: usize) -> impl Iterator<Item = Matching> + Send {
    let radices = (0..n as u32).map(|i| 2 * (n as u32 - i) - 1).collect();
    Odometer::new(radices).map(move |choices| {
        let mut free: Vec<u32> = (1..=2 * n as u32).collect();
        let mut arcs = Vec::with_capacity(n);
        for c in choices {
            let opener = free.remove(0);
            let closer = free.remove(c as usize);
            arcs.push(Arc::new(opener, closer));
        }
        Matching::from_arcs_unchecked(arcs)
    })
}

pub fn gen_inversion_tables(n: usize) -> impl Iterator<Item = InversionTable> + Send {
    Odometer::new((1..=n as u32).collect()).map(InversionTable::from_vec_unchecked)
}

/// Lexicographic.
pub fn gen_permutations(n: usize) -> impl Iterator<Item = Permutation> + Send {
    (1..=n as u32).permutations(n).map(Permutation::from_vec_unchecked)
}

/// Factorial posets as `g^-1` of the inversion tables, in table order.
pub fn gen_factorial_posets(n: usize) -> impl Iterator<Item = FactorialPoset> + Send {
    gen_inversion_tables(n).map(|w| g_inv_to_poset(&w))
}

/// Every naturally labeled poset on `[n]`: element `k` gets any down-set of
/// the poset on `[k-1]` as its predecessor set.
pub fn gen_natural_posets(n: usize) -> impl Iterator<Item = Poset> + Send {
    fn extend(pred: &mut Vec<u32>, n: usize, out: &mut Vec<Poset>) {
        let k = pred.len();
        if k == n {
            let masks = pred.clone();
            out.push(Poset::from_fn(n, |i, j| masks[j - 1] >> (i - 1) & 1 == 1));
            return;
        }
        for set in 0u32..1 << k {
            let is_down_set = (0..k).all(|j| set >> j & 1 == 0 || pred[j] & !set == 0);
            if is_down_set {
                pred.push(set);
                extend(pred, n, out);
                pred.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(n), n, &mut out);
    out.into_iter()
}

/// `T_n`, by dimension `k`, then by the row-major cell vector in
/// decreasing lexicographic order. Every weak composition of `n` into the upper cells
/// is tried and those with an empty row or column are dropped.
pub fn gen_matrices(n: usize) -> impl Iterator<Item = TriangularMatrix> + Send {
    fn fill(cells: &[(usize, usize)], at: usize, left: u32, rows: &mut Vec<Vec<u32>>, out: &mut Vec<TriangularMatrix>) {
        if at + 1 == cells.len() {
            let (i, j) = cells[at];
            rows[i][j] = left;
            let k = rows.len();
            let full = (0..k).all(|r| rows[r].iter().any(|&x| x > 0))
                && (0..k).all(|c| rows.iter().any(|row| row[c] > 0));
            if full {
                out.push(TriangularMatrix::from_rows_unchecked(rows.clone()));
            }
            return;
        }
        let (i, j) = cells[at];
        for x in 0..=left {
            rows[i][j] = x;
            fill(cells, at + 1, left - x, rows, out);
        }
        rows[i][j] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(TriangularMatrix::from_rows_unchecked(Vec::new()));
    }
    for k in 1..=n {
        let cells: Vec<(usize, usize)> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
        let mut rows = vec![vec![0; k]; k];
        let mut found = Vec::new();
        fill(&cells, 0, n as u32, &mut rows, &mut found);
        found.reverse();
        out.extend(found);
    }
    out.into_iter()
}

/// Ascent sequences of length `n`, lexicographic.
pub fn gen_ascent_sequences(n: usize) -> impl Iterator<Item = Vec<u32>> + Send {
    fn extend(seq: &mut Vec<u32>, asc: u32, n: usize, out: &mut Vec<Vec<u32>>) {
        if seq.len() == n {
            out.push(seq.clone());
            return;
        }
        let bound = if seq.is_empty() { 0 } else { asc + 1 };
        for x in 0..=bound {
            let rises = seq.last().is_some_and(|&last| x > last);
            seq.push(x);
            extend(seq, asc + rises as u32, n, out);
            seq.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(n), 0, n, &mut out);
    debug_assert!(out.iter().all(|s| is_ascent_sequence(s)));
    out.into_iter()
}
