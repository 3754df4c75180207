//! Crate-wide error type.
//!
//! Every fallible operation in the crate funnels into [`Error`]. Internal
//! impossibilities (exact divisions that the algebra guarantees, parity facts)
//! are asserted instead, so an `Err` always points at a caller mistake or a
//! genuine verification failure, never at a bug the library chose to swallow.

/// Errors surfaced by constructors and operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A strand, variable, or generator index is outside its valid range.
    #[error("index {index} out of range: {context}")]
    IndexOutOfRange { index: usize, context: String },

    /// Two objects that must live on the same number of strands do not.
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    /// A diagram failed a structural requirement (involution, crossings, shape).
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    /// An enumeration was asked to exceed its configured size bound.
    #[error("enumeration bound exceeded: requested {requested}, bound {bound}")]
    BoundExceeded { requested: usize, bound: usize },

    /// Strand counts and through-strand counts must agree in parity.
    #[error("parity violation: {0}")]
    Parity(String),

    /// A word over the generator alphabet failed validation.
    #[error("invalid word: {0}")]
    InvalidWord(String),

    /// A rational function has no Laurent-series expansion bounded below.
    #[error("series expansion rejected: {0}")]
    SeriesExpansion(String),

    /// A polynomial operation required homogeneity and did not get it.
    #[error("polynomial is not homogeneous: {0}")]
    NonHomogeneous(String),

    /// An exact polynomial division left a remainder.
    #[error("exact division failed: {0}")]
    Indivisible(String),

    /// Two independently computed answers that must agree did not.
    #[error("verification failed: {0}")]
    Verification(String),

    /// Malformed serialized data.
    #[error("deserialization failed: {0}")]
    Serde(String),
}

pub type Result<T> = std::result::Result<T, Error>;
