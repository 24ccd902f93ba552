//! Evaluation dimension, minimal read-once programs in a fixed order, and
//! the conversions of k-pass and k-gap programs into read-once programs.

mod dim;
mod gap;
mod synth;

pub use dim::{
    eval_dim, eval_dim_with, partial_derivative_matrix, EvalDimOptions, EvalDimReport,
    PartialDerivativeMatrix, DEFAULT_SEED,
};
pub use gap::{gap_count, k_gap_check, k_gap_to_roabp, k_gap_to_roabp_in_order, k_pass_to_roabp};
pub use synth::{roabp_synthesize, roabp_width_profile, Roabp};

pub(crate) use dim::grid_points;
