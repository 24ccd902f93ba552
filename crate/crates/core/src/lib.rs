//! Read-k oblivious algebraic branching programs over prime fields.
//!
//! The crate is organised bottom-up:
//!
//! - [`algebra`]: `F_p`, sparse polynomials, univariate-entry layer matrices
//!   and exact linear algebra.
//! - [`abp`]: the oblivious ABP model, validation and padding to exactly k reads,
//!   evaluation, brute-force expansion, restriction and read sequences.
//! - [`evaldim`]: evaluation dimension / partial derivative matrix rank,
//!   ROABP width profiles and synthesis, and the k-pass / k-gap width
//!   collapse.
//! - [`sequences`]: read-sequence combinatorics (monotone pruning, regular
//!   interleaving, concatenation decomposition).
//! - [`pit`]: hitting sets and the white-box identity test for read-k
//!   oblivious ABPs.
//! - [`hardpoly`]: the row/column-sum family `P_n`, the matching family
//!   `Q_n`, and the finite-size lower-bound experiments.
//! - [`cli`]: the command-line surface used by the `readk` binary.
//!
//! Runnable walkthroughs of each capability live in `examples/`.

pub mod abp;
pub mod algebra;
pub mod cli;
pub mod error;
pub mod evaldim;
pub mod hardpoly;
pub mod pit;
pub mod sequences;

pub use abp::{AbpClass, ObliviousAbp};
pub use algebra::{Fe, PrimeField, SparsePoly, UniMatrix};
pub use error::{Error, Result};
pub use evaldim::{EvalDimReport, Roabp};
pub use sequences::ReadSequence;
