use thiserror::Error;

/// Errors raised by the group engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group of order {order} too large for enumeration (bound {bound})")]
    TooLarge { order: u128, bound: u128 },

    #[error("index {index} exceeds the quotient-degree bound {bound}")]
    IndexTooLarge { index: u128, bound: u128 },

    #[error("degree {degree} exceeds the degree bound {bound}")]
    DegreeTooLarge { degree: u128, bound: u128 },

    #[error("not a homomorphism")]
    NotAHomomorphism,

    #[error("element is not a member of the group")]
    NotInGroup,

    #[error("group is not soluble")]
    NotSoluble,

    #[error("search exhausted after {evaluations} candidate evaluations (budget {budget})")]
    SearchExhausted { evaluations: u64, budget: u64 },

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, GroupError>;
