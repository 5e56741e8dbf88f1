use thiserror::Error;

use crate::matching::Arc;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("endpoint {0} is used more than once")]
    DuplicateEndpoint(i64),
    #[error("endpoint {endpoint} is outside [1, {max}]")]
    EndpointOutOfRange { endpoint: i64, max: usize },
    #[error("not a perfect matching: {0}")]
    NotAPerfectMatching(String),

    #[error("entry a_{position} = {value} is outside [0, {max}]")]
    EntryOutOfRange { position: usize, value: i64, max: usize },

    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix has a nonzero entry below the diagonal at ({row}, {col})")]
    NotUpperTriangular { row: usize, col: usize },
    #[error("matrix has a negative entry at ({row}, {col})")]
    NegativeEntry { row: usize, col: usize },
    #[error("matrix {0} has only zeros")]
    ZeroRowOrColumn(String),
    #[error("matrix entry ({row}, {col}) is not 0 or 1")]
    NotZeroOne { row: usize, col: usize },
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid poset: {0}")]
    InvalidPoset(String),
    #[error("poset is not factorial: {0}")]
    NotFactorial(String),
    #[error("poset contains an induced 2+2")]
    NotTwoPlusTwoFree,

    #[error("arcs {outer} and {inner} form a left-nesting")]
    HasLeftNesting { outer: Arc, inner: Arc },
    #[error("arcs {first} and {second} form a left-crossing")]
    HasLeftCrossing { first: Arc, second: Arc },

    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("predicate `{predicate}` does not apply to {class}")]
    PredicateNotApplicable { predicate: String, class: String },
    #[error("unknown statistic `{0}`")]
    UnknownStatistic(String),
    #[error("statistic `{stat}` is not defined on {class}")]
    StatisticNotApplicable { stat: String, class: String },
    #[error("unknown object class `{0}`")]
    UnknownClass(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("statistic tuples have different arities: {0}")]
    ArityMismatch(String),
    #[error("no conversion from {from} to {to}")]
    UnsupportedConversion { from: String, to: String },
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DuplicateEndpoint(_) => "DuplicateEndpoint",
            Error::EndpointOutOfRange { .. } => "EndpointOutOfRange",
            Error::NotAPerfectMatching(_) => "NotAPerfectMatching",
            Error::EntryOutOfRange { .. } => "EntryOutOfRange",
            Error::NotSquare => "NotSquare",
            Error::NotUpperTriangular { .. } => "NotUpperTriangular",
            Error::NegativeEntry { .. } => "NegativeEntry",
            Error::ZeroRowOrColumn(_) => "ZeroRowOrColumn",
            Error::NotZeroOne { .. } => "NotZeroOne",
            Error::InvalidMatrix(_) => "InvalidMatrix",
            Error::InvalidPermutation(_) => "InvalidPermutation",
            Error::InvalidPoset(_) => "InvalidPoset",
            Error::NotFactorial(_) => "NotFactorial",
            Error::NotTwoPlusTwoFree => "NotTwoPlusTwoFree",
            Error::HasLeftNesting { .. } => "HasLeftNesting",
            Error::HasLeftCrossing { .. } => "HasLeftCrossing",
            Error::UnknownPredicate(_) => "UnknownPredicate",
            Error::PredicateNotApplicable { .. } => "PredicateNotApplicable",
            Error::UnknownStatistic(_) => "UnknownStatistic",
            Error::StatisticNotApplicable { .. } => "StatisticNotApplicable",
            Error::UnknownClass(_) => "UnknownClass",
            Error::UnknownCheck(_) => "UnknownCheck",
            Error::ArityMismatch(_) => "ArityMismatch",
            Error::UnsupportedConversion { .. } => "UnsupportedConversion",
            Error::Json(_) => "Json",
            Error::Inconsistent(_) => "Inconsistent",
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
