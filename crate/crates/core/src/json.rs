use serde::de::DeserializeOwned;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::inversion::InversionTable;
use crate::matching::{Matching, RawMatching};
use crate::matrix::{RawMatrix, TriangularMatrix};
use crate::permutation::Permutation;
use crate::poset::{FactorialPoset, Poset, RawPoset};

/// Reading an object from JSON in two steps: the shape first, then the
/// invariants. A shape problem is `Error::Json`; a broken invariant keeps
/// its own error (`DuplicateEndpoint`, `EntryOutOfRange`, ...).
pub trait FromJson: Sized {
    fn from_json(value: &Value) -> Result<Self>;

    fn from_json_str(text: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(text)?)
    }
}

fn two_step<R, T>(value: &Value) -> Result<T>
where
    R: DeserializeOwned,
    T: TryFrom<R, Error = Error>,
{
    T::try_from(serde_json::from_value::<R>(value.clone())?)
}

impl FromJson for Matching {
    fn from_json(value: &Value) -> Result<Self> {
        two_step::<RawMatching, _>(value)
    }
}

impl FromJson for InversionTable {
    fn from_json(value: &Value) -> Result<Self> {
        two_step::<Vec<i64>, _>(value)
    }
}

impl FromJson for Permutation {
    fn from_json(value: &Value) -> Result<Self> {
        two_step::<Vec<i64>, _>(value)
    }
}

impl FromJson for TriangularMatrix {
    fn from_json(value: &Value) -> Result<Self> {
        two_step::<RawMatrix, _>(value)
    }
}

impl FromJson for Poset {
    fn from_json(value: &Value) -> Result<Self> {
        two_step::<RawPoset, _>(value)
    }
}

impl FromJson for FactorialPoset {
    fn from_json(value: &Value) -> Result<Self> {
        FactorialPoset::try_from(Poset::from_json(value)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn errors_keep_their_kind() {
        assert!(matches!(InversionTable::from_json_str("[0,2]"), Err(Error::EntryOutOfRange { .. })));
        assert!(matches!(Matching::from_json_str(r#"{"arcs":[[1,2],[2,3]]}"#), Err(Error::DuplicateEndpoint(2))));
        assert!(matches!(Permutation::from_json_str("[1,1]"), Err(Error::InvalidPermutation(_))));
        assert!(matches!(TriangularMatrix::from_json_str("[[0,1],[0,1]]"), Err(Error::ZeroRowOrColumn(_))));
        assert!(matches!(
            FactorialPoset::from_json_str(r#"{"n":3,"less":[[1,2]]}"#).map(|_| ()),
            Ok(())
        ));
        assert!(matches!(FactorialPoset::from_json_str(r#"{"n":3,"less":[[2,3]]}"#), Err(Error::NotFactorial(_))));
        assert!(matches!(Matching::from_json_str(r#"{"arcs":"x"}"#), Err(Error::Json(_))));
        assert!(matches!(Permutation::from_json_str("[1,"), Err(Error::Json(_))));
    }
}
