//! Named, exhaustive checks of the counting results, bijections,
//! statistic identities and conjectures.

mod checks;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::enumeration::{distribution, DistributionTable, Object};
use crate::error::{Error, Result};
use crate::statistics::StatTerm;

pub use checks::registry;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Theorem,
    Proposition,
    Corollary,
    Conjecture,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Theorem => "theorem",
            Kind::Proposition => "proposition",
            Kind::Corollary => "corollary",
            Kind::Conjecture => "conjecture",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub n_max: usize,
    pub verdict: Verdict,
    pub witness: Option<Value>,
    /// Only filled in when timings are requested, so reports stay
    /// reproducible byte for byte.
    pub elapsed_ms: Option<u64>,
    pub kind: Kind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn with_timings(mut self) -> Self {
        self.elapsed_ms = Some(self.elapsed.as_millis() as u64);
        self
    }
}

/// Why a check failed: the smallest offending object or tuple, and a
/// human-readable reason.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub witness: Value,
    pub detail: String,
}

/// `Ok` carries an optional note for the report.
pub type Outcome = std::result::Result<Option<String>, Failure>;

pub struct CheckSpec {
    pub name: &'static str,
    pub kind: Kind,
    pub default_n_max: usize,
    pub summary: &'static str,
    pub run: fn(usize) -> Outcome,
}

pub fn find_check(name: &str) -> Result<&'static CheckSpec> {
    registry().iter().find(|c| c.name == name).ok_or_else(|| Error::UnknownCheck(name.to_string()))
}

fn execute(spec: &CheckSpec, n_max: usize) -> CheckReport {
    let start = Instant::now();
    let outcome = (spec.run)(n_max);
    let elapsed = start.elapsed();
    let (verdict, witness, detail) = match outcome {
        Ok(note) => (Verdict::Pass, None, note),
        Err(f) => (Verdict::Fail, Some(f.witness), Some(f.detail)),
    };
    CheckReport { check: spec.name.to_string(), n_max, verdict, witness, elapsed_ms: None, kind: spec.kind, detail, elapsed }
}

/// Runs one check for every `n <= n_max` (the check's default when `None`).
pub fn run_check(name: &str, n_max: Option<usize>) -> Result<CheckReport> {
    let spec = find_check(name)?;
    Ok(execute(spec, n_max.unwrap_or(spec.default_n_max)))
}

/// Every registered check, in registry order.
pub fn run_all(n_max: Option<usize>) -> Vec<CheckReport> {
    registry()
        .par_iter()
        .map(|spec| execute(spec, n_max.unwrap_or(spec.default_n_max)))
        .collect()
}

/// Result of comparing the statistic tallies of several classes.
#[derive(Debug, Clone, PartialEq)]
pub struct Equidistribution {
    pub tables: Vec<DistributionTable>,
    /// Smallest tuple on which the counts disagree.
    pub witness: Option<Vec<i64>>,
}

impl Equidistribution {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

pub fn check_equidistribution<I>(classes: Vec<(I, Vec<StatTerm>)>) -> Result<Equidistribution>
where
    I: IntoIterator<Item = Object>,
{
    if classes.len() < 2 {
        return Err(Error::ArityMismatch("need at least two classes".to_string()));
    }
    let arity = classes[0].1.len();
    if let Some((_, terms)) = classes.iter().find(|(_, t)| t.len() != arity) {
        return Err(Error::ArityMismatch(format!("{} statistics against {arity}", terms.len())));
    }
    let tables = classes
        .into_iter()
        .map(|(objects, terms)| distribution(objects, &terms))
        .collect::<Result<Vec<_>>>()?;
    let mut keys: BTreeMap<&Vec<i64>, ()> = BTreeMap::new();
    for t in &tables {
        keys.extend(t.rows.keys().map(|k| (k, ())));
    }
    let witness = keys
        .into_keys()
        .find(|k| tables.iter().any(|t| t.rows.get(*k) != tables[0].rows.get(*k)))
        .cloned();
    Ok(Equidistribution { tables, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::ObjectClass;
    use crate::statistics::Stat;

    fn terms(s: &[Stat]) -> Vec<StatTerm> {
        s.iter().map(|&s| s.into()).collect()
    }

    #[test]
    fn equidistribution_examples() {
        let ok = check_equidistribution(vec![
            (ObjectClass::FactorialPosets.generate(3), terms(&[Stat::Ip])),
            (ObjectClass::Permutations.generate(3), terms(&[Stat::Inv])),
        ])
        .unwrap();
        assert!(ok.holds());

        let bad = check_equidistribution(vec![
            (ObjectClass::Permutations.generate(3), terms(&[Stat::Inv])),
            (ObjectClass::Permutations.generate(3), terms(&[Stat::Des])),
        ])
        .unwrap();
        assert_eq!(bad.witness, Some(vec![1]));

        let arity = check_equidistribution(vec![
            (ObjectClass::Permutations.generate(3), terms(&[Stat::Inv])),
            (ObjectClass::Permutations.generate(3), terms(&[Stat::Des, Stat::Asc])),
        ]);
        assert!(matches!(arity, Err(Error::ArityMismatch(_))));
    }

    #[test]
    fn unknown_check() {
        assert_eq!(run_check("nonexistent_check", None), Err(Error::UnknownCheck("nonexistent_check".into())));
    }

    #[test]
    fn registry_names_are_unique() {
        let mut names: Vec<_> = registry().iter().map(|c| c.name).collect();
        let len = names.len();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), len);
        assert!(len >= 18);
    }

    #[test]
    fn report_json_shape() {
        let r = run_check("thm_no_left_nesting_count", Some(3)).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"check":"thm_no_left_nesting_count","n_max":3,"verdict":"pass","witness":null,"elapsed_ms":null,"kind":"theorem"}"#
        );
    }
}
