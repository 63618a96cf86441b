use thiserror::Error;

/// Errors produced by ring construction, lattice enumeration and the CLI.
#[derive(Debug, Error)]
pub enum Error {
    /// A constructor was fed arguments that do not describe a ring.
    #[error("invalid ring construction: {0}")]
    InvalidRing(String),

    /// An element index outside `0..order`.
    #[error("element {element} out of range for ring of order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    /// A membership set that violates one of the ideal axioms.
    #[error("not an ideal of {ring}: {reason}")]
    NotAnIdeal { ring: String, reason: String },

    /// Localization was requested at a non-prime ideal.
    #[error("ideal is not prime in {ring}: {reason}")]
    NotPrime { ring: String, reason: String },

    /// Operands attached to different rings or different symbolic domains.
    #[error("mixed operands: {0}")]
    MixedOperands(String),

    /// An argument outside an operation's stated precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A configurable cap (order, lattice size, factorization bound) was hit.
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    /// A condition that is provably impossible for a valid finite ring fired;
    /// indicates corrupted operation tables or a bug.
    #[error("internal consistency violation: {0}")]
    Inconsistency(String),

    /// Malformed ring-spec, family-spec or polynomial text.
    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: usage errors 2, resource caps 3,
    /// refutations and internal inconsistencies 1.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            Error::ResourceCap(_) => 3,
            _ => 1,
        }
    }
}
