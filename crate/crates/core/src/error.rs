use thiserror::Error;

/// Errors surfaced by fallible operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("ring mismatch: expected {expected} variables, found {found}")]
    RingMismatch { expected: usize, found: usize },

    #[error("variable priority is not a permutation of 0..{0}")]
    InvalidPriority(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid graph: {0}")]
    Graph(String),

    #[error("ideal power requires exponent k >= 1")]
    ZeroPower,

    #[error("generator list is not minimal: {0}")]
    NotMinimal(String),

    #[error("Betti computation requires generators of a single degree")]
    MixedDegrees,

    #[error("monomial is not a minimal generator of the squared edge ideal")]
    NotASquareGenerator,

    #[error("exhaustive search supports at most 64 generators, got {0}; use greedy search instead")]
    TooManyGenerators(usize),
}
