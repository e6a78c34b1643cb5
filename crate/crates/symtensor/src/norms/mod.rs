//! Injective and projective tensor norm engines.
//!
//! ε is NP-hard in general, so every estimate carries an explicit
//! [`NormKind`]: `Exact` is only reported when the brute-force oracle
//! (see [`oracle`]) confirms the value within `1e−6`; otherwise the engines
//! return honest lower bounds (power iteration) or upper bounds
//! (decomposition search, flattening relaxations).

pub mod nuclear;
pub mod oracle;
pub mod power;
pub mod projective;

use alloc::vec;

use crate::error::{Error, Result};
use crate::tensor::{DenseTensor, ElemDecomposition, SymDecomposition};

pub use nuclear::{nuclear_structure_check, NuclearDecomp, NuclearStructureReport};
pub use oracle::OracleScalar;
pub use projective::{projective_lower, projective_upper, projective_upper_sym_restricted};

/// How a reported value relates to the true norm.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormKind {
    Exact,
    LowerBound,
    UpperBound,
}

/// Witness backing a norm estimate.
#[derive(Debug, Clone)]
pub enum Witness<T> {
    /// A tensor whose pairing with the input reproduces the value
    /// (rank-1 maximizer for ε, duality witness for the π lower bound).
    Tensor(DenseTensor<T>),
    /// Elementary decomposition whose projective cost is the value.
    Decomposition(ElemDecomposition<T>),
    /// Symmetric decomposition whose projective cost is the value.
    SymDecomposition(SymDecomposition<T>),
}

/// A norm value together with its certification status and witness.
#[derive(Debug, Clone)]
pub struct NormEstimate<T> {
    pub value: f64,
    pub kind: NormKind,
    pub witness: Witness<T>,
    pub iterations: usize,
    pub seed: u64,
}

/// Search configuration shared by the norm and rank-1 engines.
#[derive(Debug, Clone, Copy)]
pub struct NormCfg {
    pub restarts: usize,
    pub max_iter: usize,
    /// Stationarity tolerance for the iterative engines.
    pub tol: f64,
    pub seed: u64,
    /// Largest entry count for which the brute-force oracle runs.
    pub oracle_cutoff: usize,
}

impl Default for NormCfg {
    fn default() -> Self {
        Self {
            restarts: 32,
            max_iter: 10_000,
            tol: 1e-12,
            seed: 0,
            oracle_cutoff: 81,
        }
    }
}

impl NormCfg {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_restarts(mut self, restarts: usize) -> Self {
        self.restarts = restarts;
        self
    }
}

/// Injective norm ε(z) = sup |⟨y_1⊗…⊗y_d, z⟩| over unit vectors.
///
/// Multilinear power iteration over seeded restarts; the result is a lower
/// bound unless the oracle confirms it, in which case it is exact within
/// `1e−6`.
pub fn injective_norm<T: OracleScalar>(z: &DenseTensor<T>, cfg: &NormCfg) -> NormEstimate<T> {
    let best = power::hopm_best(z, cfg.restarts, cfg.max_iter, cfg.tol, cfg.seed);
    let mut value = best.lambda.modulus();
    let mut kind = NormKind::LowerBound;
    if let Some(reference) = oracle::injective(z, cfg.oracle_cutoff) {
        if (reference - value).abs() <= 1e-6 {
            kind = NormKind::Exact;
            value = value.max(reference);
        } else if reference > value {
            // the oracle found a better point than every restart; it is
            // still a certified value
            value = reference;
            kind = NormKind::Exact;
        }
    }
    let witness = DenseTensor::elementary(&best.vectors).expect("unit factors have valid shape");
    NormEstimate {
        value,
        kind,
        witness: Witness::Tensor(witness),
        iterations: best.iterations,
        seed: cfg.seed,
    }
}

/// Injective s-tensor norm ε_s(z) = sup |P_z(y)| over the unit sphere,
/// for symmetric `z`. Over ℝ the sign of the attained value is recoverable
/// from the witness.
pub fn injective_sym<T: OracleScalar>(
    z: &DenseTensor<T>,
    cfg: &NormCfg,
) -> Result<NormEstimate<T>> {
    if !z.is_symmetric(crate::DEFAULT_TOL) {
        return Err(Error::NotSymmetric(crate::DEFAULT_TOL));
    }
    let best = power::shopm_best(z, cfg.restarts, cfg.max_iter, cfg.tol, cfg.seed, &[]);
    let mut value = best.value.modulus();
    let mut kind = NormKind::LowerBound;
    if let Some(reference) = oracle::injective(z, cfg.oracle_cutoff) {
        if (reference - value).abs() <= 1e-6 {
            kind = NormKind::Exact;
            value = value.max(reference);
        } else if reference > value {
            value = reference;
            kind = NormKind::Exact;
        }
    }
    let d = z.order();
    let factors = vec![best.vector.clone(); d];
    let witness = DenseTensor::elementary(&factors)?;
    Ok(NormEstimate {
        value,
        kind,
        witness: Witness::Tensor(witness),
        iterations: best.iterations,
        seed: cfg.seed,
    })
}

/// Banach identity check: the symmetric engine (ε_s via `|P_z|`) and the
/// multilinear engine (ε via `|L_z|`) must agree on symmetric tensors.
#[derive(Debug, Clone, Copy)]
pub struct BanachReport {
    pub eps_s: f64,
    pub eps: f64,
    pub gap: f64,
}

/// Runs both engines on a symmetric tensor and reports the raw gap
/// `|ε − ε_s|` (no oracle mixing, so the gap genuinely compares engines).
pub fn banach_check<T: OracleScalar>(z: &DenseTensor<T>, cfg: &NormCfg) -> Result<BanachReport> {
    if !z.is_symmetric(crate::DEFAULT_TOL) {
        return Err(Error::NotSymmetric(crate::DEFAULT_TOL));
    }
    let eps = power::hopm_best(z, cfg.restarts, cfg.max_iter, cfg.tol, cfg.seed)
        .lambda
        .modulus();
    let eps_s = power::shopm_best(z, cfg.restarts, cfg.max_iter, cfg.tol, cfg.seed, &[])
        .value
        .modulus();
    Ok(BanachReport {
        eps_s,
        eps,
        gap: (eps - eps_s).abs(),
    })
}

/// Certified upper bound on ε: the minimum spectral norm over all mode
/// unfoldings (`|⟨y_1⊗…⊗y_d, z⟩| ≤ σ_max` of any flattening), sharpened
/// by the oracle when the instance is within reach.
pub fn eps_upper_certified<T: OracleScalar>(z: &DenseTensor<T>, cfg: &NormCfg) -> f64 {
    let mut best = f64::INFINITY;
    for axis in 0..z.order() {
        let unfolding = z.unfold(axis);
        let sigma = crate::linalg::spectral_norm(&unfolding);
        best = best.min(sigma);
    }
    if let Some(reference) = oracle::injective(z, cfg.oracle_cutoff) {
        best = best.min(reference + 1e-6);
    }
    best
}
