use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::statistics::StatTerm;

use super::classes::Object;

/// Tally of statistic tuples over a class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistributionTable {
    pub stat_names: Vec<String>,
    pub rows: BTreeMap<Vec<i64>, u64>,
    pub total: u64,
}

impl DistributionTable {
    pub fn new(stat_names: Vec<String>) -> Self {
        DistributionTable { stat_names, rows: BTreeMap::new(), total: 0 }
    }

    pub fn add(&mut self, tuple: Vec<i64>, count: u64) {
        if count > 0 {
            *self.rows.entry(tuple).or_default() += count;
            self.total += count;
        }
    }

    pub fn arity(&self) -> usize {
        self.stat_names.len()
    }

    /// Smallest tuple whose counts differ, ignoring names.
    pub fn first_difference(&self, other: &DistributionTable) -> Option<Vec<i64>> {
        let mut keys: Vec<&Vec<i64>> = self.rows.keys().chain(other.rows.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .find(|k| self.rows.get(*k) != other.rows.get(*k))
            .cloned()
    }

    /// Equal as multisets of tuples.
    pub fn same_tally(&self, other: &DistributionTable) -> bool {
        self.rows == other.rows
    }
}

pub fn distribution(objects: impl IntoIterator<Item = Object>, terms: &[StatTerm]) -> Result<DistributionTable> {
    let mut table = DistributionTable::new(terms.iter().map(|t| t.to_string()).collect());
    for o in objects {
        let tuple = terms
            .iter()
            .map(|t| Ok(o.stat(t.stat)? as i64 + t.offset))
            .collect::<Result<Vec<i64>>>()?;
        table.add(tuple, 1);
    }
    Ok(table)
}
