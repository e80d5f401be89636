//! Exact polynomial arithmetic and positivity decisions: rational
//! polynomials, the integer-threshold positivity procedure, the extension
//! ring by `t = sqrt(2s-1)`, and numeric quadratic-extension scalars.

pub mod positivity;
pub mod quad;
pub mod rational;
pub mod sqrt_ext;

pub use positivity::{positivity_threshold, root_bound, verify_nonneg_from, PositivityAudit, Verdict};
pub use quad::QuadExt;
pub use rational::{binom_2s, binom_s, RationalPoly};
pub use sqrt_ext::{ext_verify_nonneg, substitute_r, RTerms, SqrtExtPoly};
