//! Exact integer arithmetic for generalized Lah and Stirling number triangles.
//!
//! The crate computes five families of number triangles, all indexed by a
//! level `s >= 1`:
//!
//! - Stirling numbers of the first and second kind with higher level,
//! - Lah numbers with higher level,
//! - Lah numbers of order `s`,
//! - `(s, r)`-Lah numbers (elements `1..=r` forced into distinct lists).
//!
//! Every value is an arbitrary-precision integer; nothing is ever truncated.
//! The [`numbers`] module evaluates the triangular recurrences with row-level
//! memoization, [`poly`] expands the associated row polynomials and converts
//! between the standard, rising-factorial and falling-factorial bases, and
//! [`oracle`] recomputes the combinatorial families by brute-force set
//! partition enumeration so the recurrences can be checked against an
//! independent count.

pub mod numbers;
pub mod oracle;
pub mod poly;

mod error;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
