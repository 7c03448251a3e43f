//! Position checks, hypersurface parameters, and margin harnesses for the
//! AW second main theorems.

pub mod harness;
pub mod params;
pub mod position;

pub use harness::{run_general_smt, run_hypersurface_smt, run_truncated_smt, HarnessOptions, MarginReport, MarginRow, TrendVerdict};
pub use params::{compute_smt_params, params_from_core, Certificates, SmtParams};
pub use position::{general_position_check, hypersurface_position, subgeneral_position_check, HyperplaneSet};
