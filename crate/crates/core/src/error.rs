use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Syntax error in a term or constraint string, with a byte offset
    /// into the input.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    /// An element or point does not fit its ambient context.
    #[error("context violation: {0}")]
    ContextViolation(String),

    /// A term references a variable beyond the point's arity.
    #[error("arity mismatch: term uses variable x{var} but point has {arity} coordinates")]
    ArityMismatch { var: u32, arity: usize },

    /// An equation does not cover the ambient variable set where full
    /// coverage is required.
    #[error("universe mismatch: {0}")]
    UniverseMismatch(String),

    /// Enumerating l^n points would exceed the configured cap.
    #[error("instance too large: {points} points exceeds cap of {cap}")]
    InstanceTooLarge { points: u128, cap: u64 },

    /// A structural guard of an oracle was violated (these routines are
    /// exhaustive and only meant for small instances).
    #[error("guard violation: {0}")]
    GuardViolation(String),

    /// n > l: the decomposition theorem only covers n <= l; the opposite
    /// regime needs a different method and is out of scope here.
    #[error("unsupported regime: equation in {n} variables over a semilattice of order {l} (requires n <= l)")]
    UnsupportedRegime { n: u32, l: u32 },

    /// Irreducibility of the empty set is left undefined.
    #[error("irreducibility is undefined for the empty set")]
    EmptySetIrreducibility,

    #[error("invalid (k1, k2, n) index: ({k1}, {k2}, {n})")]
    InvalidKIndex { k1: u32, k2: u32, n: u32 },

    #[error("out of domain: {0}")]
    OutOfDomain(String),

    /// A postcondition that must hold by theorem failed; indicates a bug.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
