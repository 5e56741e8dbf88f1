//! Labeled posets on `{1, ..., n}`, stored as the full strict relation.

use std::collections::BTreeSet;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPoset", into = "RawPoset")]
pub struct Poset {
    n: usize,
    // less[(i - 1) * n + (j - 1)] iff i <_P j
    less: Vec<bool>,
}

impl Poset {
    /// Builds the poset generated by `relations`. The relation is closed
    /// transitively; a pair `(i, i)` or a cycle is rejected.
    pub fn new(n: usize, relations: &[(i64, i64)]) -> Result<Self> {
        let mut less = vec![false; n * n];
        for &(i, j) in relations {
            for e in [i, j] {
                if e < 1 || e > n as i64 {
                    return Err(Error::InvalidPoset(format!("element {e} is outside 1..={n}")));
                }
            }
            if i == j {
                return Err(Error::InvalidPoset(format!("relation {i} < {i} is reflexive")));
            }
            less[(i as usize - 1) * n + (j as usize - 1)] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if less[i * n + k] {
                    for j in 0..n {
                        if less[k * n + j] {
                            less[i * n + j] = true;
                        }
                    }
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| less[i * n + i]) {
            return Err(Error::InvalidPoset(format!("element {} lies on a cycle", i + 1)));
        }
        Ok(Poset { n, less })
    }

    /// Builds a poset from a relation predicate that is already a strict
    /// order. Used by constructions that are correct by design.
    pub(crate) fn from_fn(n: usize, lt: impl Fn(usize, usize) -> bool) -> Self {
        let mut less = vec![false; n * n];
        for i in 1..=n {
            for j in 1..=n {
                less[(i - 1) * n + (j - 1)] = lt(i, j);
            }
        }
        Poset { n, less }
    }

    pub fn antichain(n: usize) -> Self {
        Poset::from_fn(n, |_, _| false)
    }

    pub fn chain(n: usize) -> Self {
        Poset::from_fn(n, |i, j| i < j)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `i <_P j`, 1-based.
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.less[(i - 1) * self.n + (j - 1)]
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.lt(i, j) || self.lt(j, i)
    }

    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in 1..=self.n {
                if self.lt(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Cover relations, for display.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.relations()
            .into_iter()
            .filter(|&(i, j)| !(1..=self.n).any(|k| self.lt(i, k) && self.lt(k, j)))
            .collect()
    }

    pub fn predecessors(&self, j: usize) -> BTreeSet<usize> {
        (1..=self.n).filter(|&i| self.lt(i, j)).collect()
    }

    pub fn successors(&self, j: usize) -> BTreeSet<usize> {
        (1..=self.n).filter(|&i| self.lt(j, i)).collect()
    }

    pub fn pre(&self, j: usize) -> usize {
        (1..=self.n).filter(|&i| self.lt(i, j)).count()
    }

    pub fn suc(&self, j: usize) -> usize {
        (1..=self.n).filter(|&i| self.lt(j, i)).count()
    }

    /// The poset in which element `x` is renamed `labels[x - 1]`.
    pub fn relabel(&self, labels: &[usize]) -> Poset {
        assert_eq!(labels.len(), self.n);
        let mut less = vec![false; self.n * self.n];
        for (i, j) in self.relations() {
            less[(labels[i - 1] - 1) * self.n + (labels[j - 1] - 1)] = true;
        }
        Poset { n: self.n, less }
    }

    pub fn is_naturally_labeled(&self) -> bool {
        self.relations().into_iter().all(|(i, j)| i < j)
    }

    /// Naturally labeled with every predecessor set an initial segment.
    pub fn is_factorial(&self) -> bool {
        self.is_naturally_labeled()
            && (1..=self.n).all(|k| {
                let p = self.pre(k);
                (1..=p).all(|i| self.lt(i, k))
            })
    }

    /// Naturally labeled with every successor set a final segment.
    pub fn is_dually_factorial(&self) -> bool {
        self.is_naturally_labeled()
            && (1..=self.n).all(|k| {
                let s = self.suc(k);
                (self.n - s + 1..=self.n).all(|i| self.lt(k, i))
            })
    }

    /// No induced subposet isomorphic to two disjoint 2-chains, by brute force.
    pub fn is_two_plus_two_free(&self) -> bool {
        let rel = self.relations();
        for &(a, b) in &rel {
            for &(c, d) in &rel {
                if [c, d].iter().any(|x| *x == a || *x == b) {
                    continue;
                }
                if !self.comparable(a, c)
                    && !self.comparable(a, d)
                    && !self.comparable(b, c)
                    && !self.comparable(b, d)
                {
                    return false;
                }
            }
        }
        true
    }

    /// The predecessor sets are totally ordered by inclusion; equivalent to
    /// being (2+2)-free.
    pub fn predecessor_sets_form_chain(&self) -> bool {
        let sets: Vec<_> = (1..=self.n).map(|j| self.predecessors(j)).collect();
        sets.iter()
            .all(|a| sets.iter().all(|b| a.is_subset(b) || b.is_subset(a)))
    }

    /// No induced 3-chain plus an incomparable point.
    pub fn is_three_plus_one_free(&self) -> bool {
        for (x, y) in self.relations() {
            for z in self.successors(y) {
                if (1..=self.n).any(|w| {
                    w != x
                        && w != y
                        && w != z
                        && !self.comparable(w, x)
                        && !self.comparable(w, y)
                        && !self.comparable(w, z)
                }) {
                    return false;
                }
            }
        }
        true
    }

    /// `pre(i) <= pre(i+1)` or `suc(i) > suc(i+1)` for every `i` in `[n-1]`.
    pub fn satisfies_condition_one(&self) -> bool {
        (1..self.n).all(|i| self.pre(i) <= self.pre(i + 1) || self.suc(i) > self.suc(i + 1))
    }

    /// `i >_P k` and `i+1 not >_P k` imply `i = pre(l)` for some `l`, with
    /// `i` ranging over `[n-1]`.
    pub fn satisfies_condition_one_var(&self) -> bool {
        let pre_values: BTreeSet<usize> = (1..=self.n).map(|l| self.pre(l)).collect();
        (1..self.n).all(|i| {
            (1..=self.n).all(|k| !(self.lt(k, i) && !self.lt(k, i + 1)) || pre_values.contains(&i))
        })
    }

    /// Number of `x` with `pre(x) > pre(x+1)` and `suc(x) = suc(x+1)`.
    pub fn rne(&self) -> usize {
        (1..self.n)
            .filter(|&x| self.pre(x) > self.pre(x + 1) && self.suc(x) == self.suc(x + 1))
            .count()
    }

    pub fn predicates(&self) -> PosetPredicates {
        PosetPredicates {
            natural: self.is_naturally_labeled(),
            factorial: self.is_factorial(),
            dually_factorial: self.is_dually_factorial(),
            two_plus_two_free: self.is_two_plus_two_free(),
            three_plus_one_free: self.is_three_plus_one_free(),
            condition_one: self.satisfies_condition_one(),
            condition_one_var: self.satisfies_condition_one_var(),
            rne_poset: self.rne(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PosetPredicates {
    pub natural: bool,
    pub factorial: bool,
    pub dually_factorial: bool,
    pub two_plus_two_free: bool,
    pub three_plus_one_free: bool,
    pub condition_one: bool,
    pub condition_one_var: bool,
    pub rne_poset: usize,
}

/// A factorial poset together with its predecessor counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Poset", into = "Poset")]
pub struct FactorialPoset {
    poset: Poset,
    pre: Vec<u32>,
}

impl FactorialPoset {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    /// `(pre(1), ..., pre(n))`.
    pub fn pre_counts(&self) -> &[u32] {
        &self.pre
    }

    pub fn into_poset(self) -> Poset {
        self.poset
    }
}

impl Deref for FactorialPoset {
    type Target = Poset;
    fn deref(&self) -> &Poset {
        &self.poset
    }
}

impl TryFrom<Poset> for FactorialPoset {
    type Error = Error;

    fn try_from(poset: Poset) -> Result<Self> {
        if !poset.is_naturally_labeled() {
            let (i, j) = poset.relations().into_iter().find(|&(i, j)| i > j).unwrap();
            return Err(Error::NotFactorial(format!("{i} <_P {j} but {i} > {j}")));
        }
        for k in 1..=poset.n() {
            let p = poset.pre(k);
            if let Some(i) = (1..=p).find(|&i| !poset.lt(i, k)) {
                return Err(Error::NotFactorial(format!(
                    "predecessor set of {k} is not {{1..{p}}} ({i} is missing)"
                )));
            }
        }
        let pre = (1..=poset.n()).map(|k| poset.pre(k) as u32).collect();
        Ok(FactorialPoset { poset, pre })
    }
}

impl From<FactorialPoset> for Poset {
    fn from(p: FactorialPoset) -> Self {
        p.poset
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct RawPoset {
    n: usize,
    less: Vec<Vec<i64>>,
}

impl TryFrom<RawPoset> for Poset {
    type Error = Error;
    fn try_from(raw: RawPoset) -> Result<Self> {
        let mut pairs = Vec::with_capacity(raw.less.len());
        for pair in &raw.less {
            match pair.as_slice() {
                [i, j] => pairs.push((*i, *j)),
                _ => return Err(Error::InvalidPoset(format!("relation {pair:?} is not a pair"))),
            }
        }
        Poset::new(raw.n, &pairs)
    }
}

impl From<Poset> for RawPoset {
    fn from(p: Poset) -> Self {
        RawPoset {
            n: p.n,
            less: p.relations().into_iter().map(|(i, j)| vec![i as i64, j as i64]).collect(),
        }
    }
}
