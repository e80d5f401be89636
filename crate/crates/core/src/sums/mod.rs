//! Exact symbolic expansion of group-word sums, square-completion
//! certificates and their statistical backstop.

pub mod certificate;
pub mod dominance;
pub mod epsilon;
pub mod expand;
pub mod gen;
pub mod s3;
pub mod symbolic;

pub use certificate::{check_certificate, expand_bound, AlphaTerm, BoundExpr, SquareCertificate};
pub use dominance::{random_dominance_test, DominanceReport};
pub use epsilon::{cases_for, exceptional_profiles, EpsilonCase};
pub use expand::{expand_sum, visit_tuples, Spheres};
pub use gen::{build_certificate, GeneratedCertificate};
pub use s3::{brute_force_triple_sum, check_triple_domination, triple_coefficients, TripleTerm};
pub use symbolic::{Monomial, SymbolicSum, VarId};
pub mod data;
