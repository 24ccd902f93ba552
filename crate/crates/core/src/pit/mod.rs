//! Hitting sets and identity tests for read-k oblivious programs.
//!
//! Point files for the external generator hold one point per line: decimal
//! field elements for every variable of the program, in variable order.

mod algorithm;
mod bound;
mod hitting;

pub use algorithm::{
    product_hitting_set, read_k_pit, round_subset, Iteration, PitOptions, PitVerdict, ProductHittingSet,
};
pub use bound::{iteration_bound, iteration_bound_check, subset_floor};
pub use hitting::{
    grid_hitting_set, k_pass_hitting_set, load_points, parse_points, roabp_hitting_set, Generator, HittingSet,
    Provenance,
};
