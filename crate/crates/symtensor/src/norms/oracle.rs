//! Brute-force injective-norm oracle for tiny tensors.
//!
//! The oracle certifies global optima on instances small enough to sweep:
//!
//! * order 2 — the spectral norm is computed exactly from singular values;
//! * symmetric tensors — Banach's theorem reduces ε to a single-sphere
//!   maximization of `|P_z|`, swept over a dense grid on S^{n−1}
//!   (ℝ, n ≤ 4) or on the phase-reduced complex sphere (ℂ, n ≤ 3) and
//!   refined by symmetric power iteration;
//! * small real non-symmetric tensors with every `n_i = 2` — a product
//!   grid over circles, refined by alternating power iteration.
//!
//! `None` means the instance is out of oracle reach; callers must then
//! keep the honest `lower_bound` label.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Float;

use crate::linalg;
use crate::scalar::Scalar;
use crate::tensor::DenseTensor;

use super::power;

const REFINE_CANDIDATES: usize = 48;
const PRODUCT_GRID_BUDGET: usize = 2_000_000;

/// Certified injective norm for tensors within oracle reach.
pub fn injective(z: &DenseTensor<impl OracleScalar>, cutoff: usize) -> Option<f64> {
    OracleScalar::injective_oracle(z, cutoff)
}

/// Scalar-dispatched oracle implementation.
pub trait OracleScalar: Scalar {
    fn injective_oracle(z: &DenseTensor<Self>, cutoff: usize) -> Option<f64>;
}

impl OracleScalar for f64 {
    fn injective_oracle(z: &DenseTensor<f64>, cutoff: usize) -> Option<f64> {
        if z.len() > cutoff {
            return None;
        }
        match z.order() {
            1 => Some(linalg::vec_norm(z.data())),
            2 => Some(spectral_of_matrix(z)),
            _ => {
                if z.is_symmetric(1e-10) && z.shape()[0] <= 4 {
                    Some(symmetric_sphere_max(z, real_sphere_grid(z.shape()[0])))
                } else if z.shape().iter().all(|&n| n == 2) {
                    product_grid_max(z)
                } else {
                    None
                }
            }
        }
    }
}

impl OracleScalar for Complex64 {
    fn injective_oracle(z: &DenseTensor<Complex64>, cutoff: usize) -> Option<f64> {
        if z.len() > cutoff {
            return None;
        }
        match z.order() {
            1 => Some(linalg::vec_norm(z.data())),
            2 => Some(spectral_of_matrix(z)),
            _ => {
                if z.is_symmetric(1e-10) && z.shape()[0] <= 3 {
                    Some(symmetric_sphere_max(z, complex_sphere_grid(z.shape()[0])))
                } else {
                    None
                }
            }
        }
    }
}

fn spectral_of_matrix<T: Scalar>(z: &DenseTensor<T>) -> f64 {
    let (rows, cols) = (z.shape()[0], z.shape()[1]);
    let mut columns = vec![vec![T::zero(); rows]; cols];
    for i in 0..rows {
        for j in 0..cols {
            columns[j][i] = z.entry(&[i, j]);
        }
    }
    linalg::spectral_norm(&columns)
}

/// Grid sweep of `|P_z|` followed by power-iteration refinement of the top
/// candidates.
fn symmetric_sphere_max<T: Scalar>(z: &DenseTensor<T>, grid: Vec<Vec<T>>) -> f64 {
    let mut top: Vec<(f64, Vec<T>)> = Vec::with_capacity(REFINE_CANDIDATES + 1);
    let mut threshold = 0.0f64;
    for y in grid {
        let v = z.poly_eval_unchecked(&y).modulus();
        if v > threshold || top.len() < REFINE_CANDIDATES {
            top.push((v, y));
            top.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
            top.truncate(REFINE_CANDIDATES);
            threshold = top.last().map(|t| t.0).unwrap_or(0.0);
        }
    }
    let mut best = 0.0f64;
    for (_, y) in top {
        let refined = power::shopm(z, y, 20_000, 1e-13);
        best = best.max(refined.value.modulus());
    }
    best
}

/// Full grid on the real unit sphere S^{n-1}, n ≤ 4.
fn real_sphere_grid(n: usize) -> Vec<Vec<f64>> {
    let pi = core::f64::consts::PI;
    let mut out = Vec::new();
    match n {
        1 => out.push(vec![1.0]),
        2 => {
            let steps = 1440;
            for k in 0..steps {
                let t = pi * k as f64 / steps as f64; // antipodal pairs skipped
                out.push(vec![Float::cos(t), Float::sin(t)]);
            }
        }
        3 => {
            let (s1, s2) = (60, 120);
            for a in 0..=s1 {
                let t1 = pi * a as f64 / s1 as f64;
                let (st1, ct1) = Float::sin_cos(t1);
                for b in 0..s2 {
                    let t2 = 2.0 * pi * b as f64 / s2 as f64;
                    let (st2, ct2) = Float::sin_cos(t2);
                    out.push(vec![ct1, st1 * ct2, st1 * st2]);
                }
            }
        }
        4 => {
            let (s1, s2, s3) = (24, 24, 48);
            for a in 0..=s1 {
                let t1 = pi * a as f64 / s1 as f64;
                let (st1, ct1) = Float::sin_cos(t1);
                for b in 0..=s2 {
                    let t2 = pi * b as f64 / s2 as f64;
                    let (st2, ct2) = Float::sin_cos(t2);
                    for c in 0..s3 {
                        let t3 = 2.0 * pi * c as f64 / s3 as f64;
                        let (st3, ct3) = Float::sin_cos(t3);
                        out.push(vec![ct1, st1 * ct2, st1 * st2 * ct3, st1 * st2 * st3]);
                    }
                }
            }
        }
        _ => unreachable!("real sphere grid limited to n ≤ 4"),
    }
    out
}

/// Grid on the phase-reduced complex unit sphere (first coordinate real
/// non-negative), n ≤ 3. `|P_z|` is invariant under a global phase, so
/// this covers the sphere up to symmetry.
fn complex_sphere_grid(n: usize) -> Vec<Vec<Complex64>> {
    let pi = core::f64::consts::PI;
    let half = pi / 2.0;
    let mut out = Vec::new();
    match n {
        1 => out.push(vec![Complex64::new(1.0, 0.0)]),
        2 => {
            let (sa, sp) = (90, 180);
            for a in 0..=sa {
                let t = half * a as f64 / sa as f64;
                let (st, ct) = Float::sin_cos(t);
                for p in 0..sp {
                    let phi = 2.0 * pi * p as f64 / sp as f64;
                    let (s, c) = Float::sin_cos(phi);
                    out.push(vec![
                        Complex64::new(ct, 0.0),
                        Complex64::new(st * c, st * s),
                    ]);
                }
            }
        }
        3 => {
            let (sa, sb, sp) = (16, 16, 32);
            for a in 0..=sa {
                let t1 = half * a as f64 / sa as f64;
                let (st1, ct1) = Float::sin_cos(t1);
                for b in 0..=sb {
                    let t2 = half * b as f64 / sb as f64;
                    let (st2, ct2) = Float::sin_cos(t2);
                    for p1 in 0..sp {
                        let phi1 = 2.0 * pi * p1 as f64 / sp as f64;
                        let (s1, c1) = Float::sin_cos(phi1);
                        for p2 in 0..sp {
                            let phi2 = 2.0 * pi * p2 as f64 / sp as f64;
                            let (s2, c2) = Float::sin_cos(phi2);
                            out.push(vec![
                                Complex64::new(ct1, 0.0),
                                Complex64::new(st1 * ct2 * c1, st1 * ct2 * s1),
                                Complex64::new(st1 * st2 * c2, st1 * st2 * s2),
                            ]);
                        }
                    }
                }
            }
        }
        _ => unreachable!("complex sphere grid limited to n ≤ 3"),
    }
    out
}

/// Product grid over circles for real tensors with all `n_i = 2`, refined
/// by alternating power iteration.
fn product_grid_max(z: &DenseTensor<f64>) -> Option<f64> {
    let d = z.order();
    let pi = core::f64::consts::PI;
    // per-slot point count chosen to respect the total budget
    let mut pts = 64usize;
    while pts > 8 && pts.checked_pow(d as u32).map_or(true, |t| t > PRODUCT_GRID_BUDGET) {
        pts /= 2;
    }
    if pts.checked_pow(d as u32).map_or(true, |t| t > PRODUCT_GRID_BUDGET) {
        return None;
    }
    let circle: Vec<Vec<f64>> = (0..pts)
        .map(|k| {
            let t = pi * k as f64 / pts as f64; // antipodal quotient
            vec![Float::cos(t), Float::sin(t)]
        })
        .collect();

    let mut top: Vec<(f64, Vec<usize>)> = Vec::new();
    let mut threshold = 0.0f64;
    let total = pts.pow(d as u32);
    let mut tuple = vec![0usize; d];
    let mut ys: Vec<Vec<f64>> = vec![circle[0].clone(); d];
    for flat in 0..total {
        let mut rem = flat;
        for k in (0..d).rev() {
            tuple[k] = rem % pts;
            rem /= pts;
        }
        for k in 0..d {
            ys[k] = circle[tuple[k]].clone();
        }
        let v = power::elementary_pairing(z, &ys).abs();
        if v > threshold || top.len() < REFINE_CANDIDATES {
            top.push((v, tuple.clone()));
            top.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
            top.truncate(REFINE_CANDIDATES);
            threshold = top.last().map(|t| t.0).unwrap_or(0.0);
        }
    }
    let mut best = 0.0f64;
    for (_, tuple) in top {
        let init: Vec<Vec<f64>> = tuple.iter().map(|&k| circle[k].clone()).collect();
        let refined = power::hopm(z, init, 20_000, 1e-13);
        best = best.max(refined.lambda.abs());
    }
    Some(best)
}
