use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("non-invertible substitution: symbol {0} occurs with a negative exponent and its binding is not a unit monomial")]
    NonInvertibleSubstitution(char),

    #[error("non-convergent truncation: infinite product factors must start at q^1 or higher")]
    NonConvergentTruncation,

    #[error("series is not invertible: constant term {0} is not a unit monomial")]
    NonInvertibleSeries(String),

    #[error("triangular number T_{0} is undefined below T_-1")]
    TriangularDomain(i64),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition {parts:?} is not a Rogers-Ramanujan partition (gap < 2)")]
    NotRogersRamanujan { parts: Vec<u32> },

    #[error("weight {kind} is not defined on {parts:?}: {reason}")]
    WeightDomain {
        kind: &'static str,
        parts: Vec<u32>,
        reason: &'static str,
    },

    #[error("invalid color symbol: {0}")]
    InvalidSymbol(String),

    #[error("no standard partition interpretation for k = {k}, i = {i} (2i = k)")]
    NoPartitionInterpretation { k: u32, i: u32 },

    #[error("invalid modulus parameters k = {k}, i = {i}: need 1 <= i <= k/2")]
    InvalidModulus { k: u32, i: u32 },

    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),

    #[error("unknown weight kind {0:?}")]
    UnknownWeightKind(String),
}

pub type Result<T> = std::result::Result<T, Error>;
