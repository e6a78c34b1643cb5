//! Dense tensor toolkit for studying symmetric tensors over ℝ and ℂ.
//!
//! The crate provides the machinery needed to work with best rank-1
//! approximations of dense tensors and their symmetric refinements:
//!
//! * [`tensor`] — dense multiway arrays, symmetrization, inner products and
//!   the multilinear-form / polynomial evaluations attached to a tensor.
//! * [`norms`] — injective and projective norm engines with honest
//!   `exact` / `lower_bound` / `upper_bound` labelling, duality witnesses
//!   and nuclear-decomposition structure checks.
//! * [`rank1`] — best rank-1 and best decomposable-symmetric rank-1
//!   approximation with optimality certificates and span diagnostics.
//! * [`recovery`] — plane-rotation lemmas and the three-step algorithm that
//!   reconstructs a symmetric tensor from a non-symmetric best rank-1 point.
//! * [`symrank`] — symmetrization-based approximation improvement, binary
//!   form factorization over ℂ², and the border-rank diagnostics.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the command
//! line front end live in the companion `symtensor-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod linalg;
pub mod norms;
pub mod rank1;
pub mod recovery;
pub mod rng;
pub mod scalar;
pub mod symrank;
pub mod tensor;

pub use error::{Error, Result};
pub use scalar::{Field, Scalar};
pub use tensor::{DenseTensor, ElemDecomposition, ElemTerm, SymDecomposition, SymTerm};

pub use num_complex::Complex64;

/// Default absolute tolerance for equality comparisons on unit-scale data.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Largest supported tensor order; symmetrization enumerates all `d!`
/// permutations, so orders past this are rejected instead of silently
/// scaling.
pub const MAX_ORDER: usize = 8;
