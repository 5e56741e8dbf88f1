use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bijections::perm_to_inv;
use crate::error::{Error, Result};
use crate::matching::Matching;
use crate::permutation::Permutation;
use crate::poset::{FactorialPoset, Poset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stat {
    Comp,
    Min,
    PreN,
    Lev,
    Ip,
    RnePoset,
    Asc,
    Des,
    Inv,
    Lmin,
    Lmax,
    Rmin,
    Rmax,
    Dent,
    Last,
    P,
    Inter,
    Emb,
    Ne,
    Cr,
    Lne,
    Rne,
    Lcr,
    Rcr,
}

impl Stat {
    pub const ALL: [Stat; 24] = [
        Stat::Comp,
        Stat::Min,
        Stat::PreN,
        Stat::Lev,
        Stat::Ip,
        Stat::RnePoset,
        Stat::Asc,
        Stat::Des,
        Stat::Inv,
        Stat::Lmin,
        Stat::Lmax,
        Stat::Rmin,
        Stat::Rmax,
        Stat::Dent,
        Stat::Last,
        Stat::P,
        Stat::Inter,
        Stat::Emb,
        Stat::Ne,
        Stat::Cr,
        Stat::Lne,
        Stat::Rne,
        Stat::Lcr,
        Stat::Rcr,
    ];

    pub const POSET: [Stat; 6] = [Stat::Comp, Stat::Min, Stat::PreN, Stat::Lev, Stat::Ip, Stat::RnePoset];

    pub const PERMUTATION: [Stat; 11] = [
        Stat::Asc,
        Stat::Des,
        Stat::Inv,
        Stat::Lmin,
        Stat::Lmax,
        Stat::Rmin,
        Stat::Rmax,
        Stat::Comp,
        Stat::Dent,
        Stat::Last,
        Stat::P,
    ];

    pub const MATCHING: [Stat; 11] = [
        Stat::Comp,
        Stat::Min,
        Stat::Last,
        Stat::Inter,
        Stat::Emb,
        Stat::Ne,
        Stat::Cr,
        Stat::Lne,
        Stat::Rne,
        Stat::Lcr,
        Stat::Rcr,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Stat::Comp => "comp",
            Stat::Min => "min",
            Stat::PreN => "pre_n",
            Stat::Lev => "lev",
            Stat::Ip => "ip",
            Stat::RnePoset => "rne_poset",
            Stat::Asc => "asc",
            Stat::Des => "des",
            Stat::Inv => "inv",
            Stat::Lmin => "lmin",
            Stat::Lmax => "lmax",
            Stat::Rmin => "rmin",
            Stat::Rmax => "rmax",
            Stat::Dent => "dent",
            Stat::Last => "last",
            Stat::P => "p",
            Stat::Inter => "inter",
            Stat::Emb => "emb",
            Stat::Ne => "ne",
            Stat::Cr => "cr",
            Stat::Lne => "lne",
            Stat::Rne => "rne",
            Stat::Lcr => "lcr",
            Stat::Rcr => "rcr",
        }
    }
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Stat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Stat::ALL
            .into_iter()
            .find(|stat| stat.name() == s)
            .ok_or_else(|| Error::UnknownStatistic(s.to_string()))
    }
}

/// A statistic shifted by a constant, written `lev-1` or `des+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StatTerm {
    pub stat: Stat,
    pub offset: i64,
}

impl StatTerm {
    pub fn new(stat: Stat, offset: i64) -> Self {
        StatTerm { stat, offset }
    }
}

impl From<Stat> for StatTerm {
    fn from(stat: Stat) -> Self {
        StatTerm { stat, offset: 0 }
    }
}

impl fmt::Display for StatTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.offset {
            0 => write!(f, "{}", self.stat),
            o if o > 0 => write!(f, "{}+{o}", self.stat),
            o => write!(f, "{}{o}", self.stat),
        }
    }
}

impl FromStr for StatTerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let Some(at) = s.find(['+', '-']) else {
            return Ok(StatTerm::from(s.parse::<Stat>()?));
        };
        let stat = s[..at].trim().parse::<Stat>()?;
        let offset = s[at..]
            .trim()
            .parse::<i64>()
            .map_err(|_| Error::UnknownStatistic(s.to_string()))?;
        Ok(StatTerm { stat, offset })
    }
}

/// Statistic values for one object, keyed and serialized by name.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct StatRecord(pub BTreeMap<Stat, u64>);

impl StatRecord {
    pub fn get(&self, stat: Stat) -> Option<u64> {
        self.0.get(&stat).copied()
    }

    /// Keeps only the requested statistics.
    pub fn select(&self, stats: &[Stat]) -> Self {
        StatRecord(stats.iter().filter_map(|&s| self.get(s).map(|v| (s, v))).collect())
    }
}

fn record(stats: &[Stat], value: impl Fn(Stat) -> Option<u64>) -> StatRecord {
    StatRecord(stats.iter().map(|&s| (s, value(s).expect("statistic listed for its class"))).collect())
}

// posets

pub fn poset_stat(p: &FactorialPoset, stat: Stat) -> Option<u64> {
    let n = p.n();
    Some(match stat {
        Stat::Comp => poset_components(p) as u64,
        Stat::Min => (1..=n).filter(|&j| p.pre(j) == 0).count() as u64,
        Stat::PreN => if n == 0 { 0 } else { p.pre(n) as u64 },
        Stat::Lev => (1..=n).map(|j| p.predecessors(j)).collect::<BTreeSet<_>>().len() as u64,
        Stat::Ip => incomparable_pairs(p) as u64,
        Stat::RnePoset => p.rne() as u64,
        _ => return None,
    })
}

pub fn poset_stats(p: &FactorialPoset) -> StatRecord {
    record(&Stat::POSET, |s| poset_stat(p, s))
}

/// Number of ordinal summands. A naturally labeled poset splits after `k`
/// exactly when every element of `[k]` is below every element after it.
fn poset_components(p: &Poset) -> usize {
    let n = p.n();
    (1..=n)
        .filter(|&k| (1..=k).all(|i| (k + 1..=n).all(|j| p.lt(i, j))))
        .count()
}

fn incomparable_pairs(p: &Poset) -> usize {
    let n = p.n();
    (1..=n).map(|i| (i + 1..=n).filter(|&j| !p.comparable(i, j)).count()).sum()
}

// permutations

pub fn perm_stat(pi: &Permutation, stat: Stat) -> Option<u64> {
    let a = pi.values();
    let n = a.len();
    let adjacent = || a.windows(2);
    Some(match stat {
        Stat::Asc => adjacent().filter(|w| w[0] < w[1]).count() as u64,
        Stat::Des => adjacent().filter(|w| w[0] > w[1]).count() as u64,
        Stat::Inv => (0..n).map(|i| (i + 1..n).filter(|&j| a[i] > a[j]).count() as u64).sum(),
        Stat::Lmin => records(a.iter(), |x, best| x < best),
        Stat::Lmax => records(a.iter(), |x, best| x > best),
        Stat::Rmin => records(a.iter().rev(), |x, best| x < best),
        Stat::Rmax => records(a.iter().rev(), |x, best| x > best),
        Stat::Comp => {
            let mut max = 0;
            let mut comps = 0;
            for (i, &x) in a.iter().enumerate() {
                max = max.max(x);
                if max as usize == i + 1 {
                    comps += 1;
                }
            }
            comps
        }
        Stat::Dent => perm_to_inv(pi).distinct_entries() as u64,
        Stat::Last => if n == 0 { 0 } else { pi.position_of(n as u32) as u64 - 1 },
        Stat::P => count_pattern_p(pi),
        _ => return None,
    })
}

fn records<'a>(letters: impl Iterator<Item = &'a u32>, beats: impl Fn(u32, u32) -> bool) -> u64 {
    let mut best = None;
    let mut count = 0;
    for &x in letters {
        if best.is_none_or(|b| beats(x, b)) {
            best = Some(x);
            count += 1;
        }
    }
    count
}

pub fn perm_stats(pi: &Permutation) -> StatRecord {
    record(&Stat::PERMUTATION, |s| perm_stat(pi, s))
}

/// Occurrences of `p`: positions `i`, `j > i + 1` with
/// `a_j + 1 = a_i < a_{i+1}`.
pub fn count_pattern_p(pi: &Permutation) -> u64 {
    let a = pi.values();
    let mut count = 0;
    for i in 0..a.len().saturating_sub(1) {
        if a[i] < a[i + 1] {
            count += a[i + 2..].iter().filter(|&&x| x + 1 == a[i]).count() as u64;
        }
    }
    count
}

// matchings

pub fn matching_stat(m: &Matching, stat: Stat) -> Option<u64> {
    let arcs = m.arcs();
    let rec = || m.arc_statistics();
    Some(match stat {
        Stat::Comp => {
            let mut open = 0i64;
            let mut comps = 0;
            for is_opener in m.opener_mask() {
                open += if is_opener { 1 } else { -1 };
                if open == 0 {
                    comps += 1;
                }
            }
            comps
        }
        Stat::Min => arcs.first().map_or(0, |a| a.closer as u64 - 1),
        Stat::Last => arcs.last().map_or(0, |a| m.closers_before(a.opener) as u64),
        Stat::Inter => {
            let mask = m.opener_mask();
            (0..mask.len()).filter(|&i| mask[i] && (i == 0 || !mask[i - 1])).count() as u64
        }
        Stat::Emb => arcs
            .iter()
            .map(|k| arcs.iter().filter(|a| a.opener < k.closer && k.closer < a.closer).count() as u64)
            .sum(),
        Stat::Ne => rec().ne,
        Stat::Cr => rec().cr,
        Stat::Lne => rec().lne,
        Stat::Rne => rec().rne,
        Stat::Lcr => rec().lcr,
        Stat::Rcr => rec().rcr,
        _ => return None,
    })
}

pub fn matching_stats(m: &Matching) -> StatRecord {
    let rec = m.arc_statistics();
    let mut out = record(&Stat::MATCHING[..5], |s| matching_stat(m, s));
    out.0.extend([
        (Stat::Ne, rec.ne),
        (Stat::Cr, rec.cr),
        (Stat::Lne, rec.lne),
        (Stat::Rne, rec.rne),
        (Stat::Lcr, rec.lcr),
        (Stat::Rcr, rec.rcr),
    ]);
    out
}
