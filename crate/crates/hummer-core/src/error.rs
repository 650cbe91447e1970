//! Error types shared across the crate.

use thiserror::Error;

/// Problems constructing or parsing decks.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DeckError {
    #[error("a deck needs at least one card")]
    EmptyDeck,
    #[error("card indices are 1-based; 0 is invalid")]
    ZeroIndex,
    #[error("duplicate card index {0}")]
    DuplicateIndex(usize),
    #[error("a full deck of {len} cards must hold indices 1..={len}, found {index}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("deck does not hold indices 1..=n exactly")]
    NotCanonical,
    #[error("invalid deck text at token {token}: {message}")]
    Parse { token: usize, message: String },
    #[error("cannot split a deck of {n} cards at {top_count}; need 1 <= top_count <= n-1")]
    InvalidSplit { top_count: usize, n: usize },
}

/// Problems with signed permutations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("invalid signed permutation: {0}")]
    InvalidImages(String),
}

/// A shuffle move whose parameter does not fit the deck.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("{token}: parameter {value} must be {expected}")]
    Parity {
        token: String,
        value: usize,
        expected: &'static str,
    },
    #[error("{token}: parameter {value} out of range for a deck of {n} cards")]
    Range { token: String, value: usize, n: usize },
    #[error("{token}: needs at least {min} cards, deck has {n}")]
    DeckTooSmall {
        token: String,
        min: usize,
        n: usize,
    },
}

/// A program aborted at its first invalid move.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProgramError {
    #[error("move {position} ({token}): {source}")]
    MoveFailed {
        position: usize,
        token: String,
        #[source]
        source: MoveError,
    },
    #[error("repetition count must be at least 1")]
    ZeroCount,
}

/// Shuffle DSL parse failures, with byte offsets into the source text.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: expected {expected}")]
    Syntax { offset: usize, expected: String },
    #[error("invalid move at offset {offset}: {message}")]
    Semantic { offset: usize, message: String },
}

/// Group-lab failures.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabError {
    #[error("generator set is empty")]
    EmptyGeneratorSet,
    #[error("duplicate generator label {0}")]
    DuplicateLabel(String),
    #[error("generator {label} has length {len}, expected {expected}")]
    GeneratorLength {
        label: String,
        len: usize,
        expected: usize,
    },
    #[error("invalid generator {label}: {source}")]
    InvalidGenerator {
        label: String,
        #[source]
        source: MoveError,
    },
    #[error("unknown generator label {0}")]
    UnknownLabel(String),
    #[error("word exponents must be nonzero")]
    ZeroExponent,
    #[error("deck length {deck} does not match generator length {gens}")]
    DeckMismatch { deck: usize, gens: usize },
    #[error("target length {target} does not match generator length {gens}")]
    TargetMismatch { target: usize, gens: usize },
    #[error("group enumeration exceeded the element limit {limit}")]
    LimitExceeded { limit: usize },
    #[error("family {family} is not defined for a deck of {n} cards")]
    FamilyDeckMismatch { family: String, n: usize },
    #[error("invalid generator list: {0}")]
    GeneratorList(String),
}

/// Invariant predicates with preconditions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("deck does not have exactly one maloriented card")]
    NotSingleMaloriented,
    #[error("card {0} not present in deck")]
    CardNotFound(usize),
    #[error("red-black split needs an even deck, got {0} cards")]
    OddDeck(usize),
    #[error("red-black split needs equal color counts, got {red} red and {black} black")]
    UnbalancedColors { red: usize, black: usize },
}
