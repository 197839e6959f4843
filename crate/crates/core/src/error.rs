use thiserror::Error;

/// Errors raised by the library.
///
/// Variants split into two families: domain errors (bad input, caps) and
/// internal inconsistencies, which can only be produced by a bug in this
/// crate. [`Error::is_internal`] tells them apart; the CLI maps the second
/// family to a distinct exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("zero vector is not a root")]
    ZeroRoot,

    #[error("bipartition sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("not a partition: {0:?}")]
    NotAPartition(Vec<i64>),

    #[error("partition {0:?} is not in P^C (odd parts must have even multiplicity)")]
    NotTypeC(Vec<usize>),

    #[error("partition {0:?} is not of the form λ∪λ")]
    NotDoubled(Vec<usize>),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not nilpotent")]
    NotNilpotent,

    #[error("subspace is not stable under x")]
    NotStable,

    #[error("symplectic form is invalid: {0}")]
    InvalidForm(String),

    #[error("{what} = {value} exceeds the cap {cap} (config knob `{knob}`)")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
        knob: &'static str,
    },

    #[error("no adapted filtration found within closure depth {depth}")]
    NotFound { depth: usize },

    #[error("internal inconsistency: {0} adapted filtrations found, expected exactly one")]
    NotUnique(usize),

    #[error("internal inconsistency: negative multiplicity {0}")]
    NegativeMultiplicity(String),

    #[error("internal inconsistency: representative self-check failed: {0}")]
    SelfCheckFailed(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors that signal a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::NotUnique(_)
                | Error::NegativeMultiplicity(_)
                | Error::SelfCheckFailed(_)
                | Error::Internal(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
