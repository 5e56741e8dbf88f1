//! Perfect matchings of `{1, ..., 2n}` and their nesting/crossing counts.
//!
//! Arcs are kept sorted by closer, so `arcs()[i]` is the arc usually written
//! alpha_{i+1} and "the last arc" is the one whose closer is `2n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub opener: u32,
    pub closer: u32,
}

impl Arc {
    pub fn new(opener: u32, closer: u32) -> Self {
        debug_assert!(opener < closer);
        Arc { opener, closer }
    }

    /// True if `other` lies strictly inside `self`.
    pub fn contains(&self, other: &Arc) -> bool {
        self.opener < other.opener && other.closer < self.closer
    }

    /// True if the two arcs cross, in either order.
    pub fn crosses(&self, other: &Arc) -> bool {
        let (a, b) = if self.opener < other.opener { (self, other) } else { (other, self) };
        a.opener < b.opener && b.opener < a.closer && a.closer < b.closer
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.opener, self.closer)
    }
}

/// One endpoint in the left-to-right reading of a matching.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Endpoint {
    Open(usize),
    Close(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawMatching", into = "RawMatching")]
pub struct Matching {
    arcs: Vec<Arc>,
}

impl Matching {
    pub fn empty() -> Self {
        Matching { arcs: Vec::new() }
    }

    /// Validates and canonicalizes a list of endpoint pairs. Each pair may be
    /// given in either orientation.
    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Self> {
        let n = pairs.len();
        let size = 2 * n;
        let mut seen = vec![false; size + 1];
        let mut arcs = Vec::with_capacity(n);
        for &(a, b) in pairs {
            for e in [a, b] {
                if e < 1 || e > size as i64 {
                    return Err(Error::EndpointOutOfRange { endpoint: e, max: size });
                }
                if seen[e as usize] {
                    return Err(Error::DuplicateEndpoint(e));
                }
                seen[e as usize] = true;
            }
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            arcs.push(Arc::new(lo as u32, hi as u32));
        }
        arcs.sort_by_key(|arc| arc.closer);
        Ok(Matching { arcs })
    }

    /// Like [`Matching::from_pairs`] but also checks a declared size.
    pub fn with_size(n: usize, pairs: &[(i64, i64)]) -> Result<Self> {
        if pairs.len() != n {
            return Err(Error::NotAPerfectMatching(format!(
                "declared n = {n} but {} arcs were given",
                pairs.len()
            )));
        }
        Matching::from_pairs(pairs)
    }

    /// Builds a matching from arcs already known to be valid.
    pub(crate) fn from_arcs_unchecked(mut arcs: Vec<Arc>) -> Self {
        arcs.sort_by_key(|arc| arc.closer);
        Matching { arcs }
    }

    /// Builds a matching from a left-to-right endpoint word in which every
    /// arc label occurs once as `Open` and once as `Close`, opener first.
    pub(crate) fn from_word(word: &[Endpoint]) -> Self {
        let n = word.len() / 2;
        let mut openers = vec![0u32; n];
        let mut arcs = Vec::with_capacity(n);
        for (pos, e) in word.iter().enumerate() {
            let pos = pos as u32 + 1;
            match *e {
                Endpoint::Open(label) => openers[label] = pos,
                Endpoint::Close(label) => arcs.push(Arc::new(openers[label], pos)),
            }
        }
        // closers are visited left to right, so arcs come out sorted by closer
        Matching { arcs }
    }

    pub fn n(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// `true` at position `p - 1` iff `p` is an opener.
    pub fn opener_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; 2 * self.n()];
        for arc in &self.arcs {
            mask[arc.opener as usize - 1] = true;
        }
        mask
    }

    /// Number of closers strictly left of `position`.
    pub fn closers_before(&self, position: u32) -> usize {
        self.arcs.iter().filter(|a| a.closer < position).count()
    }

    /// Every nesting/crossing count in one pass over the arc pairs.
    pub fn arc_statistics(&self) -> NestCrossRecord {
        let mut rec = NestCrossRecord::default();
        for (x, a) in self.arcs.iter().enumerate() {
            for b in &self.arcs[x + 1..] {
                let (outer, inner) = if a.opener < b.opener { (a, b) } else { (b, a) };
                if inner.closer < outer.closer {
                    rec.ne += 1;
                    if inner.opener == outer.opener + 1 {
                        rec.lne += 1;
                    }
                    if outer.closer == inner.closer + 1 {
                        rec.rne += 1;
                    }
                } else if inner.opener < outer.closer {
                    // outer.opener < inner.opener < outer.closer < inner.closer
                    rec.cr += 1;
                    if inner.opener == outer.opener + 1 {
                        rec.lcr += 1;
                    }
                    if inner.closer == outer.closer + 1 {
                        rec.rcr += 1;
                    }
                }
            }
        }
        rec
    }

    /// Nestings whose openers are at distance at most `m`. `m = 1` counts
    /// left-nestings.
    pub fn count_m_left_nestings(&self, m: u32) -> u64 {
        let mut count = 0;
        for a in &self.arcs {
            for b in &self.arcs {
                if a.contains(b) && b.opener - a.opener <= m {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn first_left_nesting(&self) -> Option<(Arc, Arc)> {
        self.pairs().find(|(a, b)| a.contains(b) && b.opener == a.opener + 1)
    }

    pub fn first_left_crossing(&self) -> Option<(Arc, Arc)> {
        self.pairs().find(|(a, b)| {
            a.opener + 1 == b.opener && b.opener < a.closer && a.closer < b.closer
        })
    }

    /// Pairs of distinct arcs, first arc by opener, in lexicographic order.
    fn pairs(&self) -> impl Iterator<Item = (Arc, Arc)> {
        let mut by_opener = self.arcs.clone();
        by_opener.sort();
        let mut out = Vec::new();
        for (x, a) in by_opener.iter().enumerate() {
            for b in &by_opener[x + 1..] {
                out.push((*a, *b));
            }
        }
        out.into_iter()
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, arc) in self.arcs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{arc}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct NestCrossRecord {
    pub ne: u64,
    pub cr: u64,
    pub lne: u64,
    pub rne: u64,
    pub lcr: u64,
    pub rcr: u64,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct RawMatching {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    arcs: Vec<Vec<i64>>,
}

impl TryFrom<RawMatching> for Matching {
    type Error = Error;

    fn try_from(raw: RawMatching) -> Result<Self> {
        let mut pairs = Vec::with_capacity(raw.arcs.len());
        for arc in &raw.arcs {
            match arc.as_slice() {
                [a, b] => pairs.push((*a, *b)),
                _ => {
                    return Err(Error::NotAPerfectMatching(format!(
                        "arc {arc:?} does not have exactly two endpoints"
                    )))
                }
            }
        }
        match raw.n {
            Some(n) => Matching::with_size(n, &pairs),
            None => Matching::from_pairs(&pairs),
        }
    }
}

impl From<Matching> for RawMatching {
    fn from(m: Matching) -> Self {
        RawMatching {
            n: Some(m.n()),
            arcs: m.arcs.iter().map(|a| vec![a.opener as i64, a.closer as i64]).collect(),
        }
    }
}
