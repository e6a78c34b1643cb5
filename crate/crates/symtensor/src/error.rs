//! Crate-wide error type.

use alloc::vec::Vec;
use thiserror::Error;

/// Errors produced by tensor construction and the algorithms built on top.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("shape mismatch: {0:?} vs {1:?}")]
    ShapeMismatch(Vec<usize>, Vec<usize>),
    #[error("operation requires a cubical tensor, got shape {0:?}")]
    NotCubical(Vec<usize>),
    #[error("tensor order {0} exceeds the supported maximum {max}", max = crate::MAX_ORDER)]
    OrderTooLarge(usize),
    #[error("empty factor list")]
    EmptyFactors,
    #[error("vector length {got} does not match expected dimension {want}")]
    LengthMismatch { want: usize, got: usize },
    #[error("data length {got} does not match shape product {want}")]
    DataLength { want: usize, got: usize },
    #[error("shape entries must be positive, got {0:?}")]
    EmptyAxis(Vec<usize>),
    #[error("tensor is not symmetric within tolerance {0:e}")]
    NotSymmetric(f64),
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
    #[error("vectors must be orthonormal within tolerance")]
    NotOrthonormal,
    #[error("index j={j} outside the admissible range 1..={max}")]
    IndexOutOfRange { j: usize, max: usize },
    #[error("input vectors are collinear; the rank-1 point is already symmetric")]
    CollinearInput,
    #[error("span dimension {0} contradicts the coplanarity of best rank-1 factors")]
    SpanTooLarge(usize),
    #[error("rotation angle {alpha} outside the admissible interval [{lo}, {hi}]")]
    AngleOutOfRange { alpha: f64, lo: f64, hi: f64 },
    #[error("multilinear value drifted to {value} (target {target}) during {stage}")]
    ValueDrift {
        stage: &'static str,
        value: f64,
        target: f64,
    },
    #[error("certificate optimality gap {gap:e} exceeds tolerance {tol:e}")]
    CertificateNotOptimal { gap: f64, tol: f64 },
    #[error("decomposition does not reproduce the tensor: residual {0:e}")]
    DecompositionMismatch(f64),
    #[error("projective norm certificate missing or inconsistent: {0}")]
    BadNormCertificate(&'static str),
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("root finding failed to converge")]
    RootsDiverged,
    #[error("parameter t={t} exceeds the unit-injective-norm threshold {threshold}")]
    ParameterTooLarge { t: f64, threshold: f64 },
    #[error("operation requires the {0:?} field")]
    WrongField(crate::Field),
    #[error("operation requires order d > 2, got {0}")]
    OrderTooSmall(usize),
    #[error("ambient dimension {0} too small; need at least 3")]
    AmbientTooSmall(usize),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
