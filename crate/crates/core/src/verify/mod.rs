//! Verification suites. Each suite produces a [`VerificationReport`] whose
//! rows compare an expected outcome with what brute force observes.

pub mod catalog;
pub mod deltas;
pub mod lemmas;
pub mod report;
pub mod structure;
pub mod theorems;

pub use catalog::{check_inequality_catalog, inequality_catalog, ProofInequality, Sign, MIN_SLACK};
pub use deltas::{check_transformation_deltas, delta_steps, DeltaStep, DEFAULT_GRID_MAX_DEGREE};
pub use lemmas::{check_phi_grid, check_power_sum_grid};
pub use report::{fmt_value, to_csv, to_json, ReportRow, Status, VerificationReport};
pub use structure::{check_maximizer_structure, check_maximizer_structure_range};
pub use theorems::{verify_max_theorem, verify_min, verify_small_diameter};
