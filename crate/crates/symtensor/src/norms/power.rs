//! Power iterations for rank-1 objectives.
//!
//! Three ascent engines share this module:
//!
//! * [`hopm`] — alternating per-slot maximization of `|⟨y_1⊗…⊗y_d, z⟩|`
//!   (each slot update is the exact unit-vector maximizer, so the value is
//!   non-decreasing);
//! * [`shopm`] — single-vector maximization of `|P_z(y)|` with an adaptive
//!   shift to keep the value monotone;
//! * [`sym_tuple_ascent`] — projected gradient ascent on the ratio
//!   `|L_z(u_1,…,u_d)|² / HS(u_1∨…∨u_d)²` that drives the best
//!   decomposable-symmetric rank-1 search.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Float;

use crate::linalg::{vec_axpy, vec_dot, vec_norm, vec_normalize};
use crate::rng;
use crate::scalar::Scalar;
use crate::tensor::{permutations, DenseTensor};

/// Result of a single power-iteration run.
#[derive(Debug, Clone)]
pub struct PowerPoint<T> {
    /// `⟨z, x_1⊗…⊗x_d⟩` at the final point (unit factors).
    pub lambda: T,
    pub vectors: Vec<Vec<T>>,
    pub iterations: usize,
}

/// `⟨y_1⊗…⊗y_d, z⟩` without materializing the elementary tensor.
pub fn elementary_pairing<T: Scalar>(z: &DenseTensor<T>, ys: &[Vec<T>]) -> T {
    let mut idx = vec![0usize; z.order()];
    let mut acc = T::zero();
    for pos in 0..z.len() {
        z.decode(pos, &mut idx);
        let mut prod = z.data()[pos].conj();
        for (k, &i) in idx.iter().enumerate() {
            prod = prod * ys[k][i];
        }
        acc = acc + prod;
    }
    acc
}

/// Contraction against all slots but `k`:
/// `A[i] = Σ_{j: j_k = i} conj(z[j]) ∏_{m≠k} y_m[j_m]`, so that
/// `⟨y_1⊗…⊗y_d, z⟩ = Σ_i y_k[i] A[i]`.
pub fn slot_contraction<T: Scalar>(z: &DenseTensor<T>, ys: &[Vec<T>], k: usize) -> Vec<T> {
    let mut out = vec![T::zero(); z.shape()[k]];
    let mut idx = vec![0usize; z.order()];
    for pos in 0..z.len() {
        z.decode(pos, &mut idx);
        let mut prod = z.data()[pos].conj();
        for (m, &i) in idx.iter().enumerate() {
            if m != k {
                prod = prod * ys[m][i];
            }
        }
        out[idx[k]] = out[idx[k]] + prod;
    }
    out
}

/// Contraction of a cubical symmetric tensor against `d−1` copies of `y`:
/// `A[i] = Σ_{j: j_1 = i} conj(z[j]) ∏_{m≥2} y[j_m]`, so `P_z(y) = Σ y[i] A[i]`.
pub fn diagonal_contraction<T: Scalar>(z: &DenseTensor<T>, y: &[T]) -> Vec<T> {
    let n = z.shape()[0];
    let mut out = vec![T::zero(); n];
    let mut idx = vec![0usize; z.order()];
    for pos in 0..z.len() {
        z.decode(pos, &mut idx);
        let mut prod = z.data()[pos].conj();
        for &i in idx.iter().skip(1) {
            prod = prod * y[i];
        }
        out[idx[0]] = out[idx[0]] + prod;
    }
    out
}

/// Alternating per-slot maximization of `|⟨y_1⊗…⊗y_d, z⟩|` from a given
/// starting tuple. Stops at stationarity `tol` or after `max_iter` sweeps.
pub fn hopm<T: Scalar>(
    z: &DenseTensor<T>,
    init: Vec<Vec<T>>,
    max_iter: usize,
    tol: f64,
) -> PowerPoint<T> {
    let d = z.order();
    let mut ys = init;
    let mut value = elementary_pairing(z, &ys).modulus();
    let mut iterations = 0;
    for _ in 0..max_iter {
        iterations += 1;
        let mut stationary = true;
        for k in 0..d {
            let a = slot_contraction(z, &ys, k);
            let norm_a = vec_norm(&a);
            if norm_a < 1e-300 {
                continue;
            }
            let target: Vec<T> = a.iter().map(|&x| x.conj().scale(1.0 / norm_a)).collect();
            // tangential residual measures stationarity of this slot
            let overlap = vec_dot(&target, &ys[k]);
            let mut tangent = target.clone();
            vec_axpy(&mut tangent, -overlap, &ys[k]);
            if vec_norm(&tangent) > tol {
                stationary = false;
            }
            ys[k] = target;
        }
        let new_value = elementary_pairing(z, &ys).modulus();
        let stalled = (new_value - value).abs() <= 1e-15 * new_value.max(1.0);
        value = new_value;
        if stationary || stalled {
            break;
        }
    }
    let lambda = elementary_pairing(z, &ys).conj();
    PowerPoint {
        lambda,
        vectors: ys,
        iterations,
    }
}

/// Best of `restarts` seeded [`hopm`] runs.
pub fn hopm_best<T: Scalar>(
    z: &DenseTensor<T>,
    restarts: usize,
    max_iter: usize,
    tol: f64,
    seed: u64,
) -> PowerPoint<T> {
    let mut best: Option<PowerPoint<T>> = None;
    let mut total = 0usize;
    for r in 0..restarts.max(1) {
        let mut rng = rng::chacha(rng::sub_seed(seed, r as u64));
        let init: Vec<Vec<T>> = z
            .shape()
            .iter()
            .map(|&n| rng::unit_vector(&mut rng, n))
            .collect();
        let run = hopm(z, init, max_iter, tol);
        total += run.iterations;
        if best
            .as_ref()
            .map_or(true, |b| run.lambda.modulus() > b.lambda.modulus())
        {
            best = Some(run);
        }
    }
    let mut out = best.expect("at least one restart");
    out.iterations = total;
    out
}

/// Outcome of symmetric power iteration.
#[derive(Debug, Clone)]
pub struct SymPowerPoint<T> {
    /// `P_z(y)` at the final unit vector.
    pub value: T,
    pub vector: Vec<T>,
    pub iterations: usize,
}

/// Maximize `|P_z(y)|` over the unit sphere from `init`. The fixed-point
/// update is safeguarded by an adaptive shift so the objective never
/// decreases.
pub fn shopm<T: Scalar>(
    z: &DenseTensor<T>,
    init: Vec<T>,
    max_iter: usize,
    tol: f64,
) -> SymPowerPoint<T> {
    let mut y = init;
    let mut p = z.poly_eval_unchecked(&y);
    let mut iterations = 0;
    let mut shift = 0.0f64;
    for _ in 0..max_iter {
        iterations += 1;
        let a = diagonal_contraction(z, &y);
        let norm_a = vec_norm(&a);
        if norm_a < 1e-300 {
            break;
        }
        let tau = p.phase();
        // ascent direction for |P|; reduces to conj(A)·sign(P) over R
        let dir: Vec<T> = a.iter().map(|&x| x.conj() * tau).collect();
        let overlap = vec_dot(&dir, &y);
        let mut tangent = dir.clone();
        vec_axpy(&mut tangent, -overlap, &y);
        if vec_norm(&tangent) <= tol * norm_a {
            break;
        }
        let mut accepted = false;
        let mut local_shift = shift;
        for _ in 0..60 {
            let mut cand = dir.clone();
            vec_axpy(&mut cand, T::from_re(local_shift * norm_a), &y);
            let Some(cand) = vec_normalize(&cand) else {
                break;
            };
            let pc = z.poly_eval_unchecked(&cand);
            if pc.modulus() + 1e-15 * p.modulus().max(1.0) >= p.modulus() {
                y = cand;
                p = pc;
                shift = local_shift * 0.5;
                accepted = true;
                break;
            }
            local_shift = if local_shift == 0.0 {
                1.0
            } else {
                local_shift * 2.0
            };
        }
        if !accepted {
            break;
        }
    }
    SymPowerPoint {
        value: p,
        vector: y,
        iterations,
    }
}

/// Best of `restarts` seeded [`shopm`] runs; optional warm starts are tried
/// in addition to the random restarts.
pub fn shopm_best<T: Scalar>(
    z: &DenseTensor<T>,
    restarts: usize,
    max_iter: usize,
    tol: f64,
    seed: u64,
    warm_starts: &[Vec<T>],
) -> SymPowerPoint<T> {
    let n = z.shape()[0];
    let mut best: Option<SymPowerPoint<T>> = None;
    let mut total = 0usize;
    let consider = |run: SymPowerPoint<T>, total: &mut usize, best: &mut Option<SymPowerPoint<T>>| {
        *total += run.iterations;
        if best
            .as_ref()
            .map_or(true, |b| run.value.modulus() > b.value.modulus())
        {
            *best = Some(run);
        }
    };
    for w in warm_starts {
        if let Some(init) = vec_normalize(w) {
            consider(shopm(z, init, max_iter, tol), &mut total, &mut best);
        }
    }
    for r in 0..restarts.max(1) {
        let mut rng = rng::chacha(rng::sub_seed(seed, 0x5ea1 ^ r as u64));
        let init = rng::unit_vector(&mut rng, n);
        consider(shopm(z, init, max_iter, tol), &mut total, &mut best);
    }
    let mut out = best.expect("at least one restart");
    out.iterations = total;
    out
}

/// Outcome of the decomposable-symmetric ratio ascent.
#[derive(Debug, Clone)]
pub struct TupleAscentPoint<T> {
    /// Final unit factors `x_1,…,x_d`.
    pub vectors: Vec<Vec<T>>,
    /// `|L_z(x_1,…,x_d)| / HS(x_1∨…∨x_d)`; equals the HS norm of the
    /// projection of `z` onto the line spanned by `x_1∨…∨x_d`.
    pub ratio: f64,
    pub iterations: usize,
}

/// `HS(u_1∨…∨u_d)² = (1/d!) Σ_η ∏_k ⟨u_k, u_{η(k)}⟩` and its gradient data.
fn sym_gram<T: Scalar>(ys: &[Vec<T>], perms: &[Vec<usize>]) -> f64 {
    let d = ys.len();
    let mut pair = vec![vec![T::zero(); d]; d];
    for a in 0..d {
        for b in 0..d {
            pair[a][b] = vec_dot(&ys[a], &ys[b]);
        }
    }
    let mut acc = T::zero();
    for perm in perms {
        let mut prod = T::one();
        for k in 0..d {
            prod = prod * pair[k][perm[k]];
        }
        acc = acc + prod;
    }
    acc.re() / perms.len() as f64
}

/// Projected gradient ascent for `f = |⟨z, ⊗u⟩|² / HS(∨u)²` over tuples of
/// unit vectors, with backtracking line search.
pub fn sym_tuple_ascent<T: Scalar>(
    z: &DenseTensor<T>,
    init: Vec<Vec<T>>,
    max_iter: usize,
    tol: f64,
) -> TupleAscentPoint<T> {
    let d = z.order();
    let perms = permutations(d).expect("order bounded by callers");
    let mut ys: Vec<Vec<T>> = init
        .into_iter()
        .map(|v| vec_normalize(&v).unwrap_or_else(|| unit_basis(v.len())))
        .collect();

    let eval = |ys: &[Vec<T>]| -> (f64, T, f64) {
        let c = elementary_pairing(z, ys);
        let den = sym_gram(ys, &perms).max(1e-300);
        (c.modulus_sq() / den, c, den)
    };
    let (mut f, mut c, mut den) = eval(&ys);
    let mut iterations = 0;
    let mut step = 0.5f64;
    for _ in 0..max_iter {
        iterations += 1;
        // gradient of f = |c|²/den w.r.t. conj(u_k)
        let mut pair = vec![vec![T::zero(); d]; d];
        for a in 0..d {
            for b in 0..d {
                pair[a][b] = vec_dot(&ys[a], &ys[b]);
            }
        }
        let mut grads: Vec<Vec<T>> = Vec::with_capacity(d);
        let mut grad_norm = 0.0f64;
        for k in 0..d {
            let b = slot_contraction(z, &ys, k);
            // c = Σ_i u_k[i] B_k[i] is holomorphic in u_k, so
            // ∂|c|²/∂conj(u_k) = conj(B_k)·c
            let g: Vec<T> = b.iter().map(|&bi| bi.conj() * c).collect();
            // ∂den/∂conj(u_k[i]) = (1/d!) Σ_η u_{η^{-1}(k)}[i] ∏_{m≠η^{-1}(k)} ⟨u_m, u_{η(m)}⟩
            let mut dden = vec![T::zero(); ys[k].len()];
            for perm in &perms {
                let src = perm.iter().position(|&t| t == k).expect("permutation");
                let mut prod = T::one();
                for m in 0..d {
                    if m != src {
                        prod = prod * pair[m][perm[m]];
                    }
                }
                vec_axpy(&mut dden, prod, &ys[src]);
            }
            let inv_fact = 1.0 / perms.len() as f64;
            let mut grad: Vec<T> = vec![T::zero(); ys[k].len()];
            for i in 0..grad.len() {
                let num = g[i].scale(den) - dden[i].scale(inv_fact).scale(c.modulus_sq());
                grad[i] = num.scale(1.0 / (den * den));
            }
            // project on the sphere tangent at u_k
            let overlap = vec_dot(&grad, &ys[k]);
            vec_axpy(&mut grad, -overlap, &ys[k]);
            grad_norm += crate::linalg::vec_norm_sq(&grad);
            grads.push(grad);
        }
        let grad_norm = Float::sqrt(grad_norm);
        if grad_norm <= tol * f.max(1.0) {
            break;
        }
        let mut accepted = false;
        let mut eta = step;
        for _ in 0..40 {
            let cand: Vec<Vec<T>> = ys
                .iter()
                .zip(&grads)
                .map(|(y, g)| {
                    let mut v = y.clone();
                    vec_axpy(&mut v, T::from_re(eta), g);
                    vec_normalize(&v).unwrap_or_else(|| y.clone())
                })
                .collect();
            let (fc, cc, dc) = eval(&cand);
            if fc > f + 1e-18 {
                ys = cand;
                f = fc;
                c = cc;
                den = dc;
                step = eta * 1.5;
                accepted = true;
                break;
            }
            eta *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    TupleAscentPoint {
        vectors: ys,
        ratio: Float::sqrt(f),
        iterations,
    }
}

fn unit_basis<T: Scalar>(n: usize) -> Vec<T> {
    let mut v = vec![T::zero(); n];
    v[0] = T::one();
    v
}
