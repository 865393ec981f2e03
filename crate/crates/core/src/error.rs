use thiserror::Error;

/// Errors raised by constructors and operations across the crate.
///
/// Everything here is a domain violation the caller can act on; internal
/// consistency failures (a recursion producing a non-integer where an integer
/// is forced) panic instead, since they indicate a bug rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("word letter {letter} out of range for rank {rank}")]
    LetterOutOfRange { letter: usize, rank: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("size {size} is odd; an even size is required")]
    OddSize { size: usize },

    #[error("size {size} is not a multiple of four")]
    SizeNotMultipleOfFour { size: usize },

    #[error("not a permutation of 1..={size}")]
    NotAPermutation { size: usize },

    #[error("restriction undefined: endpoints are not fixed")]
    RestrictionUndefined,

    #[error("rook arrangement is not restricted: mark in row {row} lies outside the hull")]
    UnrestrictedRook { row: usize },

    #[error("invalid skew board: {reason}")]
    InvalidBoard { reason: String },

    #[error("invalid Dellac configuration: {reason}")]
    InvalidDellac { reason: String },

    #[error("invalid fixed-point chain: {reason}")]
    InvalidChain { reason: String },

    #[error("invalid support chain: {reason}")]
    InvalidSupportChain { reason: String },

    #[error("support chain is not realizable: {reason}")]
    NotRealizable { reason: String },

    #[error("precondition violated: {reason}")]
    Precondition { reason: String },
}
