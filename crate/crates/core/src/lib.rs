//! Exact verification engine for hypercontractivity-style certifications in
//! group algebras: reduced-word combinatorics, exact symbolic expansion of
//! group-word sums, square-completion certificates, integer polynomial
//! positivity, coefficient-domination scans and quantitative semigroup bounds.
//!
//! All decision procedures are exact (big-rational arithmetic, quadratic
//! extensions where square roots occur); floating point is only used for
//! reporting and numeric cross-checks.

pub mod combinatorics;
pub mod error;
pub mod groups;
pub mod poly;
pub mod rat;
pub mod sums;
pub mod certifier;
pub mod spectral;
pub mod semigroup;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
