//! Projective norm bounds.
//!
//! The exact projective norm has no general algorithm, so this module
//! produces certified *bounds*:
//!
//! * [`projective_upper`] — the cheapest decomposition found among several
//!   routes (exact SVD for matrices, rank-1 structure detection, Waring
//!   ALS for symmetric tensors, general CP-ALS, entrywise expansion).
//!   Any fit residual is absorbed into the decomposition as basis terms,
//!   so the witness always sums to the input exactly and its cost *is*
//!   the reported value.
//! * [`projective_lower`] — duality: `π(z) ≥ |⟨z, u⟩| / ε_upper(u)` for
//!   every witness `u`, with `ε_upper` a certified upper bound on the
//!   injective norm of the witness.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{self, vec_norm, vec_normalize, vec_scale};
use crate::rng;
use crate::scalar::Scalar;
use crate::tensor::{DenseTensor, ElemDecomposition, ElemTerm, SymDecomposition, SymTerm};

use super::oracle::OracleScalar;
use super::power;
use super::{eps_upper_certified, NormCfg, NormEstimate, NormKind, Witness};

/// Residual small enough (relative ℓ¹) to treat an ALS fit as exact and
/// absorb the remainder into basis terms.
const FIT_SLACK: f64 = 1e-9;

// ---------------------------------------------------------------------------
// upper bound
// ---------------------------------------------------------------------------

/// Upper bound for π(z): minimizes `Σ ∏‖z_j^i‖` over the decompositions
/// found by alternating least squares with up to `r_max` terms plus the
/// structured routes; for symmetric `z` symmetric (Waring) decompositions
/// are searched as well and the smaller value wins.
pub fn projective_upper<T: OracleScalar>(
    z: &DenseTensor<T>,
    r_max: usize,
    cfg: &NormCfg,
) -> Result<NormEstimate<T>> {
    if r_max < 1 {
        return Err(Error::InvalidArgument("r_max must be at least 1"));
    }
    let mut best = basis_expansion_candidate(z);
    let mut iterations = 0usize;
    for cand in structured_candidates(z, r_max, cfg, false, &mut iterations) {
        if cand.0 < best.0 {
            best = cand;
        }
    }
    Ok(NormEstimate {
        value: best.0,
        kind: NormKind::UpperBound,
        witness: best.1,
        iterations,
        seed: cfg.seed,
    })
}

/// Upper bound for π over *symmetric* decompositions only (π_s search);
/// on symmetric tensors this can never genuinely beat the unrestricted
/// bound, which is part of the Banach consistency checks.
pub fn projective_upper_sym_restricted<T: OracleScalar>(
    z: &DenseTensor<T>,
    r_max: usize,
    cfg: &NormCfg,
) -> Result<NormEstimate<T>> {
    if r_max < 1 {
        return Err(Error::InvalidArgument("r_max must be at least 1"));
    }
    if !z.is_symmetric(crate::DEFAULT_TOL) {
        return Err(Error::NotSymmetric(crate::DEFAULT_TOL));
    }
    let mut best = sym_basis_expansion_candidate(z)?;
    let mut iterations = 0usize;
    for cand in structured_candidates(z, r_max, cfg, true, &mut iterations) {
        if cand.0 < best.0 {
            best = cand;
        }
    }
    Ok(NormEstimate {
        value: best.0,
        kind: NormKind::UpperBound,
        witness: best.1,
        iterations,
        seed: cfg.seed,
    })
}

fn structured_candidates<T: OracleScalar>(
    z: &DenseTensor<T>,
    r_max: usize,
    cfg: &NormCfg,
    symmetric_only: bool,
    iterations: &mut usize,
) -> Vec<(f64, Witness<T>)> {
    let mut out = Vec::new();
    let symmetric = z.is_symmetric(crate::DEFAULT_TOL);

    if z.order() == 2 && !symmetric_only {
        out.push(matrix_nuclear_candidate(z));
    }

    // rank-1 detection (elementary structure)
    if !symmetric_only {
        let point = power::hopm_best(z, cfg.restarts.min(8), cfg.max_iter, cfg.tol, cfg.seed);
        *iterations += point.iterations;
        let mut term_vectors = point.vectors.clone();
        // fold λ into the first factor
        term_vectors[0] = linalg::vec_scale_t(&term_vectors[0], point.lambda);
        if let Ok(dec) = ElemDecomposition::new(z.shape(), vec![ElemTerm {
            coeff: T::one(),
            vectors: term_vectors,
        }]) {
            if let Some(c) = finish_elem_candidate(z, dec) {
                out.push(c);
            }
        }
    }

    if symmetric {
        // decomposable-symmetric rank-1 detection (∨ structure)
        let d = z.order();
        let mut rng = rng::chacha(rng::sub_seed(cfg.seed, 0xb0b));
        let mut best_tuple: Option<power::TupleAscentPoint<T>> = None;
        for _r in 0..cfg.restarts.min(8).max(1) {
            let init: Vec<Vec<T>> = (0..d)
                .map(|_| rng::unit_vector(&mut rng, z.shape()[0]))
                .collect();
            let point = power::sym_tuple_ascent(z, init, cfg.max_iter.min(2000), cfg.tol);
            *iterations += point.iterations;
            if best_tuple.as_ref().map_or(true, |b| point.ratio > b.ratio) {
                best_tuple = Some(point);
            }
        }
        if let Some(point) = best_tuple {
            if let Ok(unit) = DenseTensor::sym_decomposable(&point.vectors) {
                let hs_sq = unit.hs_norm().powi(2);
                if hs_sq > 1e-30 {
                    let t = z.inner_product(&unit).unwrap().scale(1.0 / hs_sq);
                    let dec = SymDecomposition::new(
                        z.shape()[0],
                        d,
                        vec![SymTerm {
                            coeff: t,
                            vectors: point.vectors.clone(),
                        }],
                    )
                    .expect("tuple has consistent arity");
                    if let Some(c) = finish_sym_candidate(z, dec) {
                        out.push(c);
                    }
                }
            }
        }

        // Waring ALS for r = 1..r_max
        for r in 1..=r_max {
            for restart in 0..2 {
                let seed = rng::sub_seed(cfg.seed, 0xa11 ^ ((r as u64) << 8) ^ restart);
                let (dec, iters) = waring_als(z, r, seed, 400);
                *iterations += iters;
                if let Some(c) = finish_sym_candidate(z, dec) {
                    out.push(c);
                }
            }
        }
        // structured root-of-unity seeds sharpen binary-form cases
        for (dec, iters) in structured_waring_seeds(z, cfg) {
            *iterations += iters;
            if let Some(c) = finish_sym_candidate(z, dec) {
                out.push(c);
            }
        }
    }

    if !symmetric_only {
        for r in 1..=r_max {
            for restart in 0..2 {
                let seed = rng::sub_seed(cfg.seed, 0xcb ^ ((r as u64) << 8) ^ restart);
                let (dec, iters) = cp_als(z, r, seed, 400);
                *iterations += iters;
                if let Some(c) = finish_elem_candidate(z, dec) {
                    out.push(c);
                }
            }
        }
    }
    out
}

/// z = Σ_entries z[j] · e_{j_1}⊗…⊗e_{j_d}; cost is the ℓ¹ norm.
fn basis_expansion_candidate<T: Scalar>(z: &DenseTensor<T>) -> (f64, Witness<T>) {
    let mut terms = Vec::new();
    let mut idx = vec![0usize; z.order()];
    for pos in 0..z.len() {
        let c = z.data()[pos];
        if c.modulus() == 0.0 {
            continue;
        }
        z.decode(pos, &mut idx);
        let vectors: Vec<Vec<T>> = idx
            .iter()
            .zip(z.shape())
            .map(|(&i, &n)| {
                let mut v = vec![T::zero(); n];
                v[i] = T::one();
                v
            })
            .collect();
        terms.push(ElemTerm { coeff: c, vectors });
    }
    let dec = ElemDecomposition::new(z.shape(), terms).expect("basis terms well formed");
    (dec.projective_cost(), Witness::Decomposition(dec))
}

/// Symmetric variant of the entrywise expansion: grouping the basis terms
/// of a symmetric tensor by index multiset yields ∨-terms at the same ℓ¹
/// cost.
fn sym_basis_expansion_candidate<T: Scalar>(z: &DenseTensor<T>) -> Result<(f64, Witness<T>)> {
    let n = z.dim()?;
    let d = z.order();
    let mut terms = Vec::new();
    let mut idx = vec![0usize; d];
    for pos in 0..z.len() {
        z.decode(pos, &mut idx);
        // keep only the sorted representative of each index multiset
        if idx.windows(2).any(|w| w[0] > w[1]) {
            continue;
        }
        let c = z.data()[pos];
        if c.modulus() == 0.0 {
            continue;
        }
        let mult = multiset_orbit_size(&idx);
        let vectors: Vec<Vec<T>> = idx
            .iter()
            .map(|&i| {
                let mut v = vec![T::zero(); n];
                v[i] = T::one();
                v
            })
            .collect();
        terms.push(SymTerm {
            coeff: c.scale(mult as f64),
            vectors,
        });
    }
    let dec = SymDecomposition::new(n, d, terms)?;
    Ok((dec.projective_cost(), Witness::SymDecomposition(dec)))
}

fn multiset_orbit_size(sorted_idx: &[usize]) -> usize {
    let d = sorted_idx.len();
    let mut fact = vec![1usize; d + 1];
    for k in 1..=d {
        fact[k] = fact[k - 1] * k;
    }
    let mut denom = 1usize;
    let mut run = 1usize;
    for w in 1..d {
        if sorted_idx[w] == sorted_idx[w - 1] {
            run += 1;
        } else {
            denom *= fact[run];
            run = 1;
        }
    }
    denom *= fact[run];
    fact[d] / denom
}

/// Exact matrix route: π of a matrix is the sum of singular values.
fn matrix_nuclear_candidate<T: Scalar>(z: &DenseTensor<T>) -> (f64, Witness<T>) {
    let (rows, cols) = (z.shape()[0], z.shape()[1]);
    let mut columns = vec![vec![T::zero(); rows]; cols];
    for i in 0..rows {
        for j in 0..cols {
            columns[j][i] = z.entry(&[i, j]);
        }
    }
    let svd = linalg::svd_columns(&columns);
    let mut terms = Vec::new();
    for k in 0..svd.sigma.len() {
        if svd.sigma[k] <= 1e-14 * svd.sigma[0].max(1e-300) {
            continue;
        }
        // z = Σ_k σ_k · u_k ⊗ conj(v_k)
        let right: Vec<T> = svd.v[k].iter().map(|&x| x.conj()).collect();
        terms.push(ElemTerm {
            coeff: T::from_re(svd.sigma[k]),
            vectors: vec![svd.u[k].clone(), right],
        });
    }
    let dec = ElemDecomposition::new(z.shape(), terms).expect("svd terms well formed");
    match finish_elem_candidate(z, dec) {
        Some(c) => c,
        None => basis_expansion_candidate(z),
    }
}

/// Append the reconstruction residual as basis terms so the witness sums
/// to `z` exactly, then price it. Candidates whose residual is too large
/// relative to the tensor are discarded only by cost (never silently).
fn finish_elem_candidate<T: Scalar>(
    z: &DenseTensor<T>,
    dec: ElemDecomposition<T>,
) -> Option<(f64, Witness<T>)> {
    let dense = dec.densify().ok()?;
    let resid = z.sub(&dense).ok()?;
    let mut terms = dec.terms;
    let (extra, _l1) = residual_basis_terms(&resid);
    terms.extend(extra);
    let dec = ElemDecomposition::new(z.shape(), terms).ok()?;
    Some((dec.projective_cost(), Witness::Decomposition(dec)))
}

fn finish_sym_candidate<T: Scalar>(
    z: &DenseTensor<T>,
    dec: SymDecomposition<T>,
) -> Option<(f64, Witness<T>)> {
    let dense = dec.densify().ok()?;
    let resid = z.sub(&dense).ok()?;
    if !resid.is_symmetric(1e-9 * z.max_abs().max(1.0)) {
        return None;
    }
    let mut terms = dec.terms;
    let n = dec.n;
    let d = dec.d;
    // absorb the (symmetric) residual with grouped basis ∨-terms
    let mut idx = vec![0usize; d];
    for pos in 0..resid.len() {
        resid.decode(pos, &mut idx);
        if idx.windows(2).any(|w| w[0] > w[1]) {
            continue;
        }
        let c = resid.data()[pos];
        if c.modulus() == 0.0 {
            continue;
        }
        let mult = multiset_orbit_size(&idx);
        let vectors: Vec<Vec<T>> = idx
            .iter()
            .map(|&i| {
                let mut v = vec![T::zero(); n];
                v[i] = T::one();
                v
            })
            .collect();
        terms.push(SymTerm {
            coeff: c.scale(mult as f64),
            vectors,
        });
    }
    let dec = SymDecomposition::new(n, d, terms).ok()?;
    Some((dec.projective_cost(), Witness::SymDecomposition(dec)))
}

fn residual_basis_terms<T: Scalar>(resid: &DenseTensor<T>) -> (Vec<ElemTerm<T>>, f64) {
    let mut terms = Vec::new();
    let mut idx = vec![0usize; resid.order()];
    let mut l1 = 0.0;
    for pos in 0..resid.len() {
        let c = resid.data()[pos];
        if c.modulus() == 0.0 {
            continue;
        }
        resid.decode(pos, &mut idx);
        l1 += c.modulus();
        let vectors: Vec<Vec<T>> = idx
            .iter()
            .zip(resid.shape())
            .map(|(&i, &n)| {
                let mut v = vec![T::zero(); n];
                v[i] = T::one();
                v
            })
            .collect();
        terms.push(ElemTerm { coeff: c, vectors });
    }
    (terms, l1)
}

// ---------------------------------------------------------------------------
// ALS engines
// ---------------------------------------------------------------------------

/// Alternating least squares CP fit with `r` elementary terms; factors are
/// norm-balanced afterwards. Returns the decomposition and sweep count.
pub(crate) fn cp_als<T: Scalar>(
    z: &DenseTensor<T>,
    r: usize,
    seed: u64,
    max_sweeps: usize,
) -> (ElemDecomposition<T>, usize) {
    let d = z.order();
    let mut rng = rng::chacha(seed);
    let mut factors: Vec<Vec<Vec<T>>> = (0..r)
        .map(|_| {
            z.shape()
                .iter()
                .map(|&n| rng::unit_vector::<T, _>(&mut rng, n))
                .collect()
        })
        .collect();
    let scale = z.hs_norm().max(1e-300);
    let mut sweeps = 0usize;
    let mut last_resid = f64::INFINITY;
    for _ in 0..max_sweeps {
        sweeps += 1;
        for k in 0..d {
            // joint least squares for slot k of every term
            let mut gram = vec![vec![T::zero(); r]; r];
            for i in 0..r {
                for ip in 0..r {
                    let mut g = T::one();
                    for m in 0..d {
                        if m != k {
                            g = g * linalg::vec_dot(&factors[ip][m], &factors[i][m]);
                        }
                    }
                    gram[i][ip] = g;
                }
            }
            // rhs C_i[a] = ⟨z, e_a ⊗ B_i⟩ computed per term via slot contraction
            let n_k = z.shape()[k];
            let mut rhs = vec![vec![T::zero(); r]; n_k];
            for i in 0..r {
                let c = contraction_excluding(z, &factors[i], k);
                for a in 0..n_k {
                    rhs[a][i] = c[a];
                }
            }
            let mut solved = true;
            for a in 0..n_k {
                match linalg::solve_dense(&gram, &rhs[a]) {
                    Ok(x) => {
                        for i in 0..r {
                            factors[i][k][a] = x[i];
                        }
                    }
                    Err(_) => {
                        // ridge retry for degenerate configurations
                        let mut ridged = gram.clone();
                        for i in 0..r {
                            ridged[i][i] = ridged[i][i] + T::from_re(1e-10);
                        }
                        match linalg::solve_dense(&ridged, &rhs[a]) {
                            Ok(x) => {
                                for i in 0..r {
                                    factors[i][k][a] = x[i];
                                }
                            }
                            Err(_) => {
                                solved = false;
                            }
                        }
                    }
                }
            }
            if !solved {
                break;
            }
        }
        // convergence check on the residual
        let dec = factors_to_elem(z.shape(), &factors);
        let resid = z
            .sub(&dec.densify().expect("consistent shapes"))
            .expect("consistent shapes")
            .hs_norm();
        if resid <= FIT_SLACK * scale || (last_resid - resid).abs() <= 1e-14 * scale {
            break;
        }
        last_resid = resid;
    }
    let mut dec = factors_to_elem(z.shape(), &factors);
    balance_terms(&mut dec);
    (dec, sweeps)
}

/// `C[a] = ⟨z, e_a ⊗ (⊗_{m≠k} y_m)⟩`.
fn contraction_excluding<T: Scalar>(z: &DenseTensor<T>, ys: &[Vec<T>], k: usize) -> Vec<T> {
    // pairing pattern matches ⟨z, ·⟩, i.e. conjugate-on-the-right
    let mut out = vec![T::zero(); z.shape()[k]];
    let mut idx = vec![0usize; z.order()];
    for pos in 0..z.len() {
        z.decode(pos, &mut idx);
        let mut prod = z.data()[pos];
        for (m, &i) in idx.iter().enumerate() {
            if m != k {
                prod = prod * ys[m][i].conj();
            }
        }
        out[idx[k]] = out[idx[k]] + prod;
    }
    out
}

fn factors_to_elem<T: Scalar>(shape: &[usize], factors: &[Vec<Vec<T>>]) -> ElemDecomposition<T> {
    let terms = factors
        .iter()
        .map(|vs| ElemTerm {
            coeff: T::one(),
            vectors: vs.clone(),
        })
        .collect();
    ElemDecomposition::new(shape, terms).expect("factor shapes consistent")
}

/// Redistribute scalar weight evenly across the factors of each term.
fn balance_terms<T: Scalar>(dec: &mut ElemDecomposition<T>) {
    let d = dec.shape.len();
    for t in dec.terms.iter_mut() {
        let mut mag = t.coeff.modulus();
        let mut phase = t.coeff.phase();
        let mut units = Vec::with_capacity(d);
        for v in &t.vectors {
            let n = vec_norm(v);
            mag *= n;
            if n > 1e-300 {
                units.push(vec_scale(v, 1.0 / n));
            } else {
                units.push(v.clone());
            }
        }
        if mag <= 0.0 {
            continue;
        }
        let per = Float::powf(mag, 1.0 / d as f64);
        t.coeff = T::one();
        for (k, u) in units.into_iter().enumerate() {
            let mut scaled = vec_scale(&u, per);
            if k == 0 {
                scaled = linalg::vec_scale_t(&scaled, phase);
                phase = T::one();
            }
            t.vectors[k] = scaled;
        }
    }
}

/// Waring ALS: fit `z ≈ Σ_i λ_i ⊗^d v_i` with unit `v_i`; the projective
/// cost of such a decomposition is `Σ |λ_i|`.
pub(crate) fn waring_als<T: Scalar>(
    z: &DenseTensor<T>,
    r: usize,
    seed: u64,
    max_sweeps: usize,
) -> (SymDecomposition<T>, usize) {
    let n = z.shape()[0];
    let _d = z.order();
    let mut rng = rng::chacha(seed);
    let dirs: Vec<Vec<T>> = (0..r).map(|_| rng::unit_vector(&mut rng, n)).collect();
    waring_als_from(z, dirs, max_sweeps)
}

pub(crate) fn waring_als_from<T: Scalar>(
    z: &DenseTensor<T>,
    mut dirs: Vec<Vec<T>>,
    max_sweeps: usize,
) -> (SymDecomposition<T>, usize) {
    let n = z.shape()[0];
    let d = z.order();
    let r = dirs.len();
    let mut lambdas = vec![T::zero(); r];
    let scale = z.hs_norm().max(1e-300);
    let mut sweeps = 0usize;
    let mut last_resid = f64::INFINITY;
    for _ in 0..max_sweeps {
        sweeps += 1;
        // joint coefficient refit: Σ_{i'} λ_{i'} ⟨⊗v_{i'}, ⊗v_i⟩ = ⟨z, ⊗v_i⟩
        refit_coeffs(z, &dirs, &mut lambdas, d);
        // per-term direction update against its residual
        for i in 0..r {
            let mut resid = z.clone();
            for ip in 0..r {
                if ip == i {
                    continue;
                }
                let term = power_tensor(&dirs[ip], d);
                resid.axpy(-lambdas[ip], &term).expect("shapes match");
            }
            let point = power::shopm(&resid, dirs[i].clone(), 60, 1e-13);
            dirs[i] = point.vector;
        }
        refit_coeffs(z, &dirs, &mut lambdas, d);
        let mut rec: DenseTensor<T> = DenseTensor::zeros(z.shape()).expect("valid shape");
        for i in 0..r {
            rec.axpy(lambdas[i], &power_tensor(&dirs[i], d))
                .expect("shapes match");
        }
        let resid = z.sub(&rec).expect("shapes match").hs_norm();
        if resid <= FIT_SLACK * scale || (last_resid - resid).abs() <= 1e-14 * scale {
            break;
        }
        last_resid = resid;
    }
    let terms = dirs
        .iter()
        .zip(&lambdas)
        .map(|(v, &l)| SymTerm {
            coeff: l,
            vectors: vec![v.clone(); d],
        })
        .collect();
    (
        SymDecomposition::new(n, d, terms).expect("terms well formed"),
        sweeps,
    )
}

fn refit_coeffs<T: Scalar>(z: &DenseTensor<T>, dirs: &[Vec<T>], lambdas: &mut [T], d: usize) {
    let r = dirs.len();
    let mut gram = vec![vec![T::zero(); r]; r];
    let mut rhs = vec![T::zero(); r];
    for i in 0..r {
        for ip in 0..r {
            let dot = linalg::vec_dot(&dirs[ip], &dirs[i]);
            let mut p = T::one();
            for _ in 0..d {
                p = p * dot;
            }
            gram[i][ip] = p;
        }
        rhs[i] = z
            .inner_product(&power_tensor(&dirs[i], d))
            .expect("shapes match");
    }
    match linalg::solve_dense(&gram, &rhs) {
        Ok(x) => lambdas.copy_from_slice(&x),
        Err(_) => {
            let mut ridged = gram;
            for i in 0..r {
                ridged[i][i] = ridged[i][i] + T::from_re(1e-10);
            }
            if let Ok(x) = linalg::solve_dense(&ridged, &rhs) {
                lambdas.copy_from_slice(&x);
            }
        }
    }
}

fn power_tensor<T: Scalar>(v: &[T], d: usize) -> DenseTensor<T> {
    DenseTensor::elementary(&vec![v.to_vec(); d]).expect("vector power well formed")
}

/// Root-of-unity Waring seeds for tensors with a 2-dimensional column
/// space; these capture forms like v∨…∨v∨w whose optimal symmetric
/// decompositions use `d` evenly-phased directions.
fn structured_waring_seeds<T: Scalar>(
    z: &DenseTensor<T>,
    _cfg: &NormCfg,
) -> Vec<(SymDecomposition<T>, usize)> {
    let d = z.order();
    if d < 2 {
        return Vec::new();
    }
    let unfolding = z.unfold(0);
    let cols: Vec<Vec<T>> = unfolding;
    let basis = linalg::orthonormal_basis(&cols, 1e-8);
    if basis.len() != 2 {
        return Vec::new();
    }
    let (q1, q2) = (&basis[0], &basis[1]);
    let mut out = Vec::new();
    let weights: &[f64] = &[0.5, core::f64::consts::FRAC_1_SQRT_2, 1.0, 1.4142135623730951];
    for &mu in weights {
        let dirs: Vec<Vec<T>> = match T::FIELD {
            crate::Field::Complex => (0..d)
                .map(|k| {
                    let ang = 2.0 * core::f64::consts::PI * k as f64 / d as f64;
                    let (s, c) = Float::sin_cos(ang);
                    let rot = T::from_re_im(c, s).scale(mu);
                    let mut v = q1.clone();
                    linalg::vec_axpy(&mut v, rot, q2);
                    vec_normalize(&v).unwrap_or_else(|| q1.clone())
                })
                .collect(),
            crate::Field::Real => (0..d)
                .map(|k| {
                    let sign = if k % 2 == 0 { mu } else { -mu };
                    let mut v = q1.clone();
                    linalg::vec_axpy(&mut v, T::from_re(sign), q2);
                    vec_normalize(&v).unwrap_or_else(|| q1.clone())
                })
                .collect(),
        };
        out.push(waring_als_from(z, dirs, 200));
    }
    out
}

// ---------------------------------------------------------------------------
// lower bound
// ---------------------------------------------------------------------------

/// Duality lower bound: `π(z) ≥ max_u |⟨z, u⟩| / ε_upper(u)` over a pool
/// of witness candidates; the winning witness (normalized so that its
/// certified ε upper bound is 1) is stored.
pub fn projective_lower<T: OracleScalar>(z: &DenseTensor<T>, cfg: &NormCfg) -> NormEstimate<T> {
    let mut candidates: Vec<DenseTensor<T>> = Vec::new();

    // rank-1 direction witness
    let point = power::hopm_best(z, cfg.restarts.min(8), cfg.max_iter, cfg.tol, cfg.seed);
    let iterations = point.iterations;
    if let Ok(u) = DenseTensor::elementary(&point.vectors) {
        candidates.push(u.clone());
        if let Ok(su) = u.symmetrize() {
            candidates.push(su);
        }
    }

    // the tensor itself (normalized later by its ε upper bound)
    candidates.push(z.clone());
    if z.is_cubical() {
        if let Ok(sz) = z.symmetrize() {
            candidates.push(sz);
        }
    }

    // exact matrix witness Σ u_k v_k^* (a partial isometry, ε = 1)
    if z.order() == 2 {
        let (rows, cols) = (z.shape()[0], z.shape()[1]);
        let mut columns = vec![vec![T::zero(); rows]; cols];
        for i in 0..rows {
            for j in 0..cols {
                columns[j][i] = z.entry(&[i, j]);
            }
        }
        let svd = linalg::svd_columns(&columns);
        let mut w = DenseTensor::zeros(z.shape()).expect("valid shape");
        for k in 0..svd.sigma.len() {
            if svd.sigma[k] <= 1e-14 * svd.sigma[0].max(1e-300) {
                continue;
            }
            for i in 0..rows {
                for j in 0..cols {
                    let add = svd.u[k][i] * svd.v[k][j].conj();
                    *w.entry_mut(&[i, j]) = w.entry(&[i, j]) + add;
                }
            }
        }
        candidates.push(w);
    }

    let mut best_value = 0.0f64;
    let mut best_witness: Option<DenseTensor<T>> = None;
    for u in candidates {
        let eps_up = eps_upper_certified(&u, cfg);
        if eps_up <= 1e-300 {
            continue;
        }
        let pairing = z.inner_product(&u).expect("same shape").modulus();
        let value = pairing / eps_up;
        if value > best_value {
            best_value = value;
            best_witness = Some(u.scaled_re(1.0 / eps_up));
        }
    }
    let witness = best_witness.unwrap_or_else(|| z.clone());
    NormEstimate {
        value: best_value,
        kind: NormKind::LowerBound,
        witness: Witness::Tensor(witness),
        iterations,
        seed: cfg.seed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norms::NormCfg;
    use crate::rng;

    fn e(n: usize, i: usize) -> Vec<f64> {
        let mut v = vec![0.0; n];
        v[i] = 1.0;
        v
    }

    #[test]
    fn upper_of_elementary_power_is_norm_power() {
        let mut r = rng::chacha(3);
        let zv: Vec<f64> = rng::vector(&mut r, 3);
        let d = 3usize;
        let z = DenseTensor::elementary(&vec![zv.clone(); d]).unwrap();
        let want = vec_norm(&zv).powi(d as i32);
        let est = projective_upper(&z, 2, &NormCfg::default()).unwrap();
        assert!(
            (est.value - want).abs() < 1e-7 * want.max(1.0),
            "value {} want {want}",
            est.value
        );
    }

    #[test]
    fn upper_reaches_one_on_span2_vee_product() {
        // unit vectors spanning a plane: π(x_1∨…∨x_d) = 1
        let v = e(3, 0);
        let w: Vec<f64> = vec_normalize(&[0.6, 0.8, 0.0]).unwrap();
        let x3: Vec<f64> = vec_normalize(&[0.8, -0.6, 0.0]).unwrap();
        let z = DenseTensor::sym_decomposable(&[v, w, x3]).unwrap();
        let est = projective_upper(&z, 4, &NormCfg::default()).unwrap();
        assert!(est.value <= 1.0 + 1e-7, "upper {}", est.value);
        assert!(est.value >= z.hs_norm() - 1e-9);
    }

    #[test]
    fn upper_matches_matrix_nuclear_norm() {
        // e1⊗e1 + e2⊗e2 → 2
        let z = DenseTensor::from_data(&[2, 2], vec![1.0, 0.0, 0.0, 1.0]).unwrap();
        let est = projective_upper(&z, 4, &NormCfg::default()).unwrap();
        assert!((est.value - 2.0).abs() < 1e-9);
    }

    #[test]
    fn upper_witness_cost_is_the_value_and_sums_to_z() {
        let mut r = rng::chacha(5);
        let z: DenseTensor<f64> = rng::tensor(&mut r, &[2, 2, 2]);
        let est = projective_upper(&z, 3, &NormCfg::default()).unwrap();
        match &est.witness {
            Witness::Decomposition(dec) => {
                assert!((dec.projective_cost() - est.value).abs() < 1e-8);
                let resid = z.sub(&dec.densify().unwrap()).unwrap().hs_norm();
                assert!(resid < 1e-9, "resid {resid}");
            }
            Witness::SymDecomposition(dec) => {
                assert!((dec.projective_cost() - est.value).abs() < 1e-8);
                let resid = z.sub(&dec.densify().unwrap()).unwrap().hs_norm();
                assert!(resid < 1e-9, "resid {resid}");
            }
            Witness::Tensor(_) => panic!("decomposition witness expected"),
        }
    }

    #[test]
    fn rejects_zero_r_max() {
        let z: DenseTensor<f64> = DenseTensor::zeros(&[2, 2]).unwrap();
        assert!(projective_upper(&z, 0, &NormCfg::default()).is_err());
    }

    #[test]
    fn lower_of_elementary_power_is_norm_power() {
        let mut r = rng::chacha(7);
        let zv: Vec<f64> = rng::vector(&mut r, 3);
        let z = DenseTensor::elementary(&vec![zv.clone(); 3]).unwrap();
        let want = vec_norm(&zv).powi(3);
        let est = projective_lower(&z, &NormCfg::default());
        assert!(
            (est.value - want).abs() < 1e-7 * want.max(1.0),
            "lower {} want {want}",
            est.value
        );
    }

    #[test]
    fn lower_matches_matrix_duality() {
        // e1⊗e1 + e2⊗e2 (R): lower = 2 with an identity-like witness
        let z = DenseTensor::from_data(&[2, 2], vec![1.0, 0.0, 0.0, 1.0]).unwrap();
        let est = projective_lower(&z, &NormCfg::default());
        assert!((est.value - 2.0).abs() < 1e-9, "lower {}", est.value);
    }

    #[test]
    fn sandwich_lower_below_upper_on_random_tensors() {
        let mut r = rng::chacha(9);
        for _ in 0..3 {
            let z: DenseTensor<f64> = rng::tensor(&mut r, &[2, 2, 2]);
            let lo = projective_lower(&z, &NormCfg::default()).value;
            let hi = projective_upper(&z, 4, &NormCfg::default()).unwrap().value;
            assert!(lo <= hi + 1e-7, "lo {lo} hi {hi}");
        }
    }

    #[test]
    fn sym_restricted_never_beats_unrestricted() {
        let mut r = rng::chacha(11);
        for _ in 0..3 {
            let z: DenseTensor<f64> = rng::symmetric_tensor(&mut r, 2, 3);
            let unres = projective_upper(&z, 4, &NormCfg::default()).unwrap().value;
            let sym = projective_upper_sym_restricted(&z, 4, &NormCfg::default())
                .unwrap()
                .value;
            assert!(sym >= unres - 1e-8, "sym {sym} unres {unres}");
        }
    }
}
