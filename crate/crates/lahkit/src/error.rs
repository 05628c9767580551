use crate::numbers::TriangleKind;
use crate::poly::BasisTag;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A level parameter was zero; every family requires `s >= 1`.
    #[error("level must be a positive integer")]
    InvalidLevel,

    /// The requested operation is not defined for this triangle family.
    #[error("{op} is not defined for kind `{kind}`")]
    UnsupportedKind {
        op: &'static str,
        kind: TriangleKind,
    },

    /// Two factorial bases with different levels were mixed; convert through
    /// the standard basis instead.
    #[error("basis levels do not match: `{from}` vs `{to}`")]
    LevelMismatch { from: BasisTag, to: BasisTag },

    /// An operation that only makes sense on expanded polynomials received a
    /// factorial-basis polynomial.
    #[error("operation requires a standard-basis polynomial, got `{basis}`")]
    NonStandardBasis { basis: BasisTag },

    /// Division by a power of `x` left a nonzero remainder. The recurrences
    /// only ever divide exactly, so this signals an internal inconsistency.
    #[error("inexact division by x^{power}: nonzero remainder")]
    InexactDivision { power: usize },

    /// Brute-force enumeration was requested beyond the practical bound.
    #[error("enumeration of set partitions for n = {n} exceeds the bound n <= {max}")]
    EnumerationTooLarge { n: usize, max: usize },
}
