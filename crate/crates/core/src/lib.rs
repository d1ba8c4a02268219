//! Polynomial expansion of symmetric Boolean functions.
//!
//! A symmetric Boolean function of `n` variables is fully described by an
//! `(n + 1)`-bit [`ReducedVector`]. Read as a *carrier vector* π, bit `i` is
//! the value of the function on inputs of weight `i`. Read as a *reduced
//! Zhegalkin spectrum* γ, bit `i` says whether every degree-`i` monomial is
//! present in the algebraic normal form.
//!
//! The conversion between the two is the mod-2 binomial transform, which is
//! its own inverse. [`transform`] computes it entry by entry with the
//! bit-submask parity test from [`lucas`]; [`baseline`] carries the quadratic
//! transeunt triangle and a truth-table ANF oracle for cross-checking, and
//! [`complexity`] holds the cost model.
//!
//! The crate is `no_std` (it needs `alloc`).

#![cfg_attr(not(any(test, feature = "std")), no_std)]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

pub mod baseline;
pub mod complexity;
mod error;
pub mod eval;
pub mod lucas;
mod spec;
pub mod transform;
mod vector;

pub use crate::baseline::{anf_oracle, triangle_transform, truth_table_eval_oracle, TriangleRun};
pub use crate::error::Error;
pub use crate::eval::{anf_term_count, anf_terms, eval_carrier, eval_spectrum, AnfTermList};
pub use crate::lucas::{binom_parity, binom_parity_counted, ParityCheckCounter};
pub use crate::spec::{Assignment, FunctionSpec, IndexKind};
pub use crate::transform::{
    carrier_from_set, carrier_from_single, spectrum_from_set, spectrum_from_single,
    transform_vector, TransformResult,
};
pub use crate::vector::ReducedVector;

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
