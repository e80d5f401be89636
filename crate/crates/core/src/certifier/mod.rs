//! Assembly of left coefficients, the regular/pathological/super-pathological
//! verification pipeline, the symbolic inequality catalog and per-q
//! certification.

pub mod coeffs;
pub mod critical;
pub mod patch;
pub mod scan;

pub use critical::{critical_for, CriticalFunction};
pub use patch::{superpathological_patch, PatchOutcome};
pub use scan::{pathological_scan, ScanOutcome};
