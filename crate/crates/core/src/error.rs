use thiserror::Error;

/// Errors raised by group constructions and predicates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("{what} exceeds the order bound {limit}")]
    OrderBoundExceeded { what: String, limit: usize },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("map is not a homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("homomorphism is not injective")]
    NotMonomorphism,

    #[error("group is not abelian")]
    NotAbelian,

    #[error("group is trivial")]
    TrivialGroup,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    /// A computed object contradicts a statement that should hold for it.
    #[error("counterexample: {0}")]
    Counterexample(String),

    #[error("index {index} out of range for a group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("subgroup belongs to a different group")]
    ForeignSubgroup,

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;

impl GroupError {
    pub(crate) fn order_bound(what: impl Into<String>, limit: usize) -> Self {
        GroupError::OrderBoundExceeded {
            what: what.into(),
            limit,
        }
    }
}
