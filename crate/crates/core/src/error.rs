use thiserror::Error;

/// Errors raised while building or analysing finite rings and groups.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("invalid order {order}: {reason}")]
    InvalidOrder { order: usize, reason: &'static str },

    #[error("{what} has order {order}, above the size cap of {cap}")]
    SizeCap {
        what: String,
        order: u128,
        cap: usize,
    },

    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("subset is not a two-sided ideal: {0}")]
    NotAnIdeal(String),

    #[error("quotient by the whole ring is the zero ring")]
    TrivialQuotient,

    #[error("subset is not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("element {element} out of range for a ring of order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("unknown decomposition kind `{0}`")]
    UnknownKind(String),

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
}

pub type Result<T, E = RingError> = std::result::Result<T, E>;
