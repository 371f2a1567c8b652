//! Sombor-type topological indices on unicyclic graphs.
//!
//! The crate builds the extremal families, enumerates every unicyclic graph
//! of small order up to isomorphism, and checks the extremal statements about
//! them by brute force: maxima for a fixed diameter, the cycle minimum, the
//! small-diameter maximizers and the inequalities used to derive them.

pub mod canon;
pub mod cli;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod index;
pub mod verify;

pub use canon::{canonical_certificate, Certificate};
pub use construct::{build_cycle, build_u_abc, build_u_n_d, rewire, RewireSpec};
pub use enumerate::{
    enumerate_unicyclic, enumerate_unicyclic_labeled, extremal_record, Direction, ExtremalRecord,
    UnicyclicClasses,
};
pub use error::{Error, Result};
pub use graph::Graph;
pub use index::{
    closed_form, closed_form_reduced, closed_form_sombor, edge_weight, index_value, phi,
    power_pair_sum, IndexKind, Tolerance,
};
