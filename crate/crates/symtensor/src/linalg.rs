//! Small dense linear algebra over ℝ and ℂ.
//!
//! Everything here operates on desk-scale data (dimensions well below 100),
//! so simple, robust kernels are used throughout: one-sided Jacobi for
//! singular values, Gaussian elimination with partial pivoting for solves,
//! and a shifted Hessenberg QR iteration for companion-matrix eigenvalues.
//!
//! Matrices are stored as a `Vec` of columns unless noted otherwise.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

// ---------------------------------------------------------------------------
// vector helpers
// ---------------------------------------------------------------------------

/// `⟨x, y⟩ = Σ x_i · conj(y_i)` (conjugates the second argument).
pub fn vec_dot<T: Scalar>(x: &[T], y: &[T]) -> T {
    debug_assert_eq!(x.len(), y.len());
    let mut acc = T::zero();
    for (&a, &b) in x.iter().zip(y) {
        acc = acc + a * b.conj();
    }
    acc
}

pub fn vec_norm_sq<T: Scalar>(x: &[T]) -> f64 {
    x.iter().map(|v| v.modulus_sq()).sum()
}

pub fn vec_norm<T: Scalar>(x: &[T]) -> f64 {
    Float::sqrt(vec_norm_sq(x))
}

pub fn vec_scale<T: Scalar>(x: &[T], s: f64) -> Vec<T> {
    x.iter().map(|&v| v.scale(s)).collect()
}

pub fn vec_scale_t<T: Scalar>(x: &[T], s: T) -> Vec<T> {
    x.iter().map(|&v| v * s).collect()
}

pub fn vec_add<T: Scalar>(x: &[T], y: &[T]) -> Vec<T> {
    x.iter().zip(y).map(|(&a, &b)| a + b).collect()
}

pub fn vec_sub<T: Scalar>(x: &[T], y: &[T]) -> Vec<T> {
    x.iter().zip(y).map(|(&a, &b)| a - b).collect()
}

/// `x += c · y` in place.
pub fn vec_axpy<T: Scalar>(x: &mut [T], c: T, y: &[T]) {
    for (a, &b) in x.iter_mut().zip(y) {
        *a = *a + c * b;
    }
}

/// Normalize to unit length; `None` for (numerically) zero vectors.
pub fn vec_normalize<T: Scalar>(x: &[T]) -> Option<Vec<T>> {
    let n = vec_norm(x);
    if n < 1e-300 {
        None
    } else {
        Some(vec_scale(x, 1.0 / n))
    }
}

// ---------------------------------------------------------------------------
// orthonormal bases
// ---------------------------------------------------------------------------

/// Orthonormal basis of the span of `vectors` (modified Gram-Schmidt with
/// norm pivoting). Directions with relative residual below `rel_tol` are
/// dropped.
pub fn orthonormal_basis<T: Scalar>(vectors: &[Vec<T>], rel_tol: f64) -> Vec<Vec<T>> {
    let mut pool: Vec<Vec<T>> = vectors.to_vec();
    let scale = pool.iter().map(|v| vec_norm(v)).fold(0.0, f64::max);
    let mut basis: Vec<Vec<T>> = Vec::new();
    if scale == 0.0 {
        return basis;
    }
    loop {
        // pivot: largest remaining residual
        let mut best = 0.0;
        let mut best_i = None;
        for (i, v) in pool.iter().enumerate() {
            let n = vec_norm(v);
            if n > best {
                best = n;
                best_i = Some(i);
            }
        }
        let Some(i) = best_i else { break };
        if best <= rel_tol * scale {
            break;
        }
        let q = vec_scale(&pool[i], 1.0 / best);
        for v in pool.iter_mut() {
            let c = vec_dot(v, &q);
            vec_axpy(v, -c, &q);
        }
        basis.push(q);
        if basis.len() == vectors[0].len() {
            break;
        }
    }
    basis
}

/// Unit vector orthogonal to every vector of `basis` (an orthonormal set)
/// in 𝕂^n, or `None` when the basis already spans the space.
pub fn unit_orthogonal_to<T: Scalar>(basis: &[Vec<T>], n: usize) -> Option<Vec<T>> {
    let mut best: Option<(f64, Vec<T>)> = None;
    for i in 0..n {
        let mut v = vec![T::zero(); n];
        v[i] = T::one();
        for q in basis {
            let c = vec_dot(&v, q);
            vec_axpy(&mut v, -c, q);
        }
        let norm = vec_norm(&v);
        if best.as_ref().map_or(true, |(b, _)| norm > *b) {
            best = Some((norm, v));
        }
    }
    let (norm, v) = best?;
    if norm < 1e-8 {
        None
    } else {
        Some(vec_scale(&v, 1.0 / norm))
    }
}

// ---------------------------------------------------------------------------
// one-sided Jacobi SVD
// ---------------------------------------------------------------------------

/// Thin SVD data for a matrix given by columns: `A = U Σ V*`.
pub struct Svd<T> {
    /// Left singular vectors (columns), one per positive singular value.
    pub u: Vec<Vec<T>>,
    /// Singular values, descending.
    pub sigma: Vec<f64>,
    /// Right singular vectors (columns of V), aligned with `sigma`.
    pub v: Vec<Vec<T>>,
}

/// One-sided Jacobi SVD on the columns of `a`.
pub fn svd_columns<T: Scalar>(a: &[Vec<T>]) -> Svd<T> {
    let k = a.len();
    if k == 0 {
        return Svd {
            u: Vec::new(),
            sigma: Vec::new(),
            v: Vec::new(),
        };
    }
    let mut cols: Vec<Vec<T>> = a.to_vec();
    // accumulated right rotations, starts as identity
    let mut v: Vec<Vec<T>> = (0..k)
        .map(|i| {
            let mut col = vec![T::zero(); k];
            col[i] = T::one();
            col
        })
        .collect();

    for _sweep in 0..60 {
        let mut off = 0.0f64;
        for p in 0..k {
            for q in (p + 1)..k {
                let app = vec_norm_sq(&cols[p]);
                let aqq = vec_norm_sq(&cols[q]);
                let apq = vec_dot(&cols[p], &cols[q]);
                let mag = apq.modulus();
                if app == 0.0 || aqq == 0.0 {
                    continue;
                }
                let rel = mag / Float::sqrt(app * aqq);
                off = off.max(rel);
                if rel <= 1e-15 {
                    continue;
                }
                // Hermitian 2x2 Gram block [[app, b],[conj(b), aqq]], b = conj(apq)
                let b = apq.conj();
                let phi = b.phase();
                let tau = (aqq - app) / (2.0 * mag);
                let t = if tau >= 0.0 {
                    1.0 / (tau + Float::sqrt(1.0 + tau * tau))
                } else {
                    -1.0 / (-tau + Float::sqrt(1.0 + tau * tau))
                };
                let c = 1.0 / Float::sqrt(1.0 + t * t);
                let s = phi.scale(t * c);
                // columns: p' = c·p − conj(s)·q ; q' = s·p + c·q
                for row in 0..cols[p].len() {
                    let xp = cols[p][row];
                    let xq = cols[q][row];
                    cols[p][row] = xp.scale(c) - s.conj() * xq;
                    cols[q][row] = s * xp + xq.scale(c);
                }
                for row in 0..k {
                    let xp = v[p][row];
                    let xq = v[q][row];
                    v[p][row] = xp.scale(c) - s.conj() * xq;
                    v[q][row] = s * xp + xq.scale(c);
                }
            }
        }
        if off <= 1e-15 {
            break;
        }
    }

    let mut order: Vec<usize> = (0..k).collect();
    let norms: Vec<f64> = cols.iter().map(|c| vec_norm(c)).collect();
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).unwrap());

    let mut u = Vec::new();
    let mut sigma = Vec::new();
    let mut vout = Vec::new();
    for &i in &order {
        sigma.push(norms[i]);
        vout.push(v[i].clone());
        if norms[i] > 1e-300 {
            u.push(vec_scale(&cols[i], 1.0 / norms[i]));
        } else {
            u.push(cols[i].clone());
        }
    }
    Svd {
        u,
        sigma,
        v: vout,
    }
}

/// Singular values (descending) of the matrix with the given columns.
pub fn singular_values<T: Scalar>(a: &[Vec<T>]) -> Vec<f64> {
    if a.is_empty() {
        return Vec::new();
    }
    // Jacobi cost scales with the number of columns; work on the short side.
    let rows = a[0].len();
    if a.len() > rows {
        let t = transpose_conj(a);
        let mut s = svd_columns(&t).sigma;
        s.truncate(rows);
        return s;
    }
    svd_columns(a).sigma
}

/// Spectral norm (largest singular value).
pub fn spectral_norm<T: Scalar>(a: &[Vec<T>]) -> f64 {
    singular_values(a).first().copied().unwrap_or(0.0)
}

/// Conjugate transpose, columns to columns.
pub fn transpose_conj<T: Scalar>(a: &[Vec<T>]) -> Vec<Vec<T>> {
    let rows = a[0].len();
    (0..rows)
        .map(|r| a.iter().map(|col| col[r].conj()).collect())
        .collect()
}

/// Numerical rank: count of singular values above `rel_tol · σ_max`.
pub fn numerical_rank(sigma: &[f64], rel_tol: f64) -> usize {
    let max = sigma.first().copied().unwrap_or(0.0);
    if max <= 0.0 {
        return 0;
    }
    sigma.iter().filter(|&&s| s > rel_tol * max).count()
}

// ---------------------------------------------------------------------------
// dense solve
// ---------------------------------------------------------------------------

/// Solve `A x = b` with `A` square, given by rows. Gaussian elimination
/// with partial pivoting.
pub fn solve_dense<T: Scalar>(a: &[Vec<T>], b: &[T]) -> Result<Vec<T>> {
    let n = a.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut m: Vec<Vec<T>> = a.to_vec();
    let mut rhs: Vec<T> = b.to_vec();
    for col in 0..n {
        let (pivot, pmag) = (col..n)
            .map(|r| (r, m[r][col].modulus()))
            .max_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
            .unwrap();
        if pmag < 1e-300 {
            return Err(Error::InvalidArgument("singular linear system"));
        }
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        let diag = m[col][col];
        for r in (col + 1)..n {
            let f = m[r][col] / diag;
            if f == T::zero() {
                continue;
            }
            for c in col..n {
                let upper = m[col][c];
                m[r][c] = m[r][c] - f * upper;
            }
            let t = rhs[col];
            rhs[r] = rhs[r] - f * t;
        }
    }
    let mut x = vec![T::zero(); n];
    for row in (0..n).rev() {
        let mut acc = rhs[row];
        for c in (row + 1)..n {
            acc = acc - m[row][c] * x[c];
        }
        x[row] = acc / m[row][row];
    }
    Ok(x)
}

// ---------------------------------------------------------------------------
// polynomial roots via companion matrix
// ---------------------------------------------------------------------------

/// Roots of `Σ_k coeffs[k] t^k` with nonzero leading coefficient, computed
/// as eigenvalues of the companion matrix (shifted Hessenberg QR), then
/// polished with a few Newton steps.
pub fn polynomial_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let mut c: Vec<Complex64> = coeffs.to_vec();
    while let Some(last) = c.last() {
        if last.modulus() == 0.0 && c.len() > 1 {
            c.pop();
        } else {
            break;
        }
    }
    if c.len() <= 1 || c.iter().all(|x| x.modulus() == 0.0) {
        return Err(Error::ZeroPolynomial);
    }
    let mut roots = Vec::new();
    // exact zero roots come from vanishing constant terms
    while c[0].modulus() == 0.0 {
        roots.push(Complex64::new(0.0, 0.0));
        c.remove(0);
        if c.len() == 1 {
            return Ok(roots);
        }
    }
    let lead = *c.last().unwrap();
    let monic: Vec<Complex64> = c.iter().map(|&x| x / lead).collect();
    let m = monic.len() - 1;

    // upper Hessenberg companion: subdiagonal ones, last column −monic[i]
    let mut h = vec![vec![Complex64::new(0.0, 0.0); m]; m];
    for i in 0..m {
        if i + 1 < m {
            h[i + 1][i] = Complex64::new(1.0, 0.0);
        }
        h[i][m - 1] = -monic[i];
    }

    let mut eig = hessenberg_eigenvalues(h)?;
    // Newton polish against the original (monic) polynomial
    for r in eig.iter_mut() {
        for _ in 0..4 {
            let (p, dp) = horner_with_derivative(&monic, *r);
            if dp.modulus() < 1e-300 {
                break;
            }
            let step = p / dp;
            *r -= step;
            if step.modulus() < 1e-15 * (1.0 + r.modulus()) {
                break;
            }
        }
    }
    roots.extend(eig);
    Ok(roots)
}

fn horner_with_derivative(monic: &[Complex64], t: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in monic.iter().rev() {
        dp = dp * t + p;
        p = p * t + c;
    }
    (p, dp)
}

/// Eigenvalues of a complex upper Hessenberg matrix by single-shift QR with
/// deflation.
fn hessenberg_eigenvalues(mut h: Vec<Vec<Complex64>>) -> Result<Vec<Complex64>> {
    let n = h.len();
    let mut eig = Vec::with_capacity(n);
    let mut hi = n;
    let mut iter_since_deflation = 0usize;
    let mut total_iters = 0usize;
    let max_total = 80 * n.max(1);

    while hi > 0 {
        if total_iters > max_total {
            return Err(Error::RootsDiverged);
        }
        // find the start of the trailing unreduced block
        let mut lo = hi - 1;
        while lo > 0 {
            let off = h[lo][lo - 1].modulus();
            let scale = h[lo - 1][lo - 1].modulus() + h[lo][lo].modulus();
            if off <= 1e-15 * scale.max(1e-300) {
                h[lo][lo - 1] = Complex64::new(0.0, 0.0);
                break;
            }
            lo -= 1;
        }
        if lo == hi - 1 {
            eig.push(h[hi - 1][hi - 1]);
            hi -= 1;
            iter_since_deflation = 0;
            continue;
        }

        // Wilkinson shift from the trailing 2x2 block
        let a = h[hi - 2][hi - 2];
        let b = h[hi - 2][hi - 1];
        let c = h[hi - 1][hi - 2];
        let d = h[hi - 1][hi - 1];
        let tr = a + d;
        let det = a * d - b * c;
        let disc = (tr * tr - det.scale(4.0)).sqrt();
        let l1 = (tr + disc).scale(0.5);
        let l2 = (tr - disc).scale(0.5);
        let mut mu = if (l1 - d).modulus() < (l2 - d).modulus() {
            l1
        } else {
            l2
        };
        if iter_since_deflation > 0 && iter_since_deflation % 12 == 0 {
            // exceptional shift to break rare cycles
            mu += Complex64::new(
                0.5 * h[hi - 1][hi - 2].modulus(),
                0.5 * h[hi - 1][hi - 1].modulus() + 0.1,
            );
        }

        // explicit QR step on the active block: H − μI = QR, H ← RQ + μI
        for i in lo..hi {
            h[i][i] -= mu;
        }
        let mut rot: Vec<(f64, Complex64)> = Vec::with_capacity(hi - lo - 1);
        for i in lo..(hi - 1) {
            let f = h[i][i];
            let g = h[i + 1][i];
            let (cc, ss) = givens(f, g);
            rot.push((cc, ss));
            for col in i..hi {
                let x = h[i][col];
                let y = h[i + 1][col];
                h[i][col] = x.scale(cc) + ss * y;
                h[i + 1][col] = -ss.conj() * x + y.scale(cc);
            }
        }
        for (idx, &(cc, ss)) in rot.iter().enumerate() {
            let i = lo + idx;
            let top = (i + 2).min(hi);
            for row in lo..top {
                let x = h[row][i];
                let y = h[row][i + 1];
                h[row][i] = x.scale(cc) + ss.conj() * y;
                h[row][i + 1] = -ss * x + y.scale(cc);
            }
        }
        for i in lo..hi {
            h[i][i] += mu;
        }
        iter_since_deflation += 1;
        total_iters += 1;
    }
    Ok(eig)
}

/// Complex Givens rotation `[[c, s],[−conj(s), c]]` (c real) zeroing `g`
/// when applied to `[f; g]`.
fn givens(f: Complex64, g: Complex64) -> (f64, Complex64) {
    let gf = f.modulus();
    let gg = g.modulus();
    if gg == 0.0 {
        return (1.0, Complex64::new(0.0, 0.0));
    }
    if gf == 0.0 {
        return (0.0, g.conj().scale(1.0 / gg));
    }
    let denom = Float::sqrt(gf * gf + gg * gg);
    let c = gf / denom;
    let s = f.scale(1.0 / gf) * g.conj().scale(1.0 / denom);
    (c, s)
}

// ---------------------------------------------------------------------------
// plane rotations
// ---------------------------------------------------------------------------

/// Rotate `x` by `angle` inside the plane spanned by the orthonormal pair
/// `(q1, q2)`, leaving the orthogonal complement untouched. Positive angles
/// rotate `q1` toward `q2`.
pub fn rotate_in_plane(x: &[f64], q1: &[f64], q2: &[f64], angle: f64) -> Vec<f64> {
    let c1 = vec_dot(x, q1);
    let c2 = vec_dot(x, q2);
    let (sin, cos) = Float::sin_cos(angle);
    let n1 = c1 * cos - c2 * sin;
    let n2 = c1 * sin + c2 * cos;
    let mut out = x.to_vec();
    vec_axpy(&mut out, n1 - c1, q1);
    vec_axpy(&mut out, n2 - c2, q2);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng;

    #[test]
    fn singular_values_of_known_matrices() {
        // [[0,1],[1,0]] → {1,1}
        let a = vec![vec![0.0, 1.0], vec![1.0, 0.0]];
        let s = singular_values(&a);
        assert!((s[0] - 1.0).abs() < 1e-12 && (s[1] - 1.0).abs() < 1e-12);
        // [[1,1],[0,0]] (columns (1,0) and (1,0)... columns [1,0],[1,0]) → {√2, 0}
        let b = vec![vec![1.0, 0.0], vec![1.0, 0.0]];
        let s = singular_values(&b);
        assert!((s[0] - 2f64.sqrt()).abs() < 1e-12);
        assert!(s[1].abs() < 1e-12);
    }

    #[test]
    fn singular_values_complex_diagonal() {
        let i = Complex64::new(0.0, 1.0);
        let z = Complex64::new(0.0, 0.0);
        let a = vec![vec![Complex64::new(1.0, 0.0), z], vec![z, i]];
        let s = singular_values(&a);
        assert!((s[0] - 1.0).abs() < 1e-12 && (s[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn svd_reconstructs_matrix() {
        let mut r = rng::chacha(7);
        let a: Vec<Vec<f64>> = (0..3).map(|_| rng::vector(&mut r, 4)).collect();
        let svd = svd_columns(&a);
        // A = U Σ V* column by column: a_j = Σ_k u_k σ_k conj(v_k[j])
        for j in 0..3 {
            let mut rec = vec![0.0; 4];
            for k in 0..3 {
                let w = svd.sigma[k] * svd.v[k][j];
                vec_axpy(&mut rec, w, &svd.u[k]);
            }
            for row in 0..4 {
                assert!((rec[row] - a[j][row]).abs() < 1e-10);
            }
        }
        // Frobenius identity
        let frob: f64 = a.iter().map(|c| vec_norm_sq(c)).sum::<f64>().sqrt();
        let sig: f64 = svd.sigma.iter().map(|s| s * s).sum::<f64>().sqrt();
        assert!((frob - sig).abs() < 1e-10);
    }

    #[test]
    fn spectral_norm_of_rank_one() {
        let mut r = rng::chacha(9);
        let u: Vec<f64> = rng::vector(&mut r, 5);
        let v: Vec<f64> = rng::vector(&mut r, 3);
        let cols: Vec<Vec<f64>> = (0..3).map(|j| vec_scale(&u, v[j])).collect();
        let s = spectral_norm(&cols);
        assert!((s - vec_norm(&u) * vec_norm(&v)).abs() < 1e-10);
    }

    #[test]
    fn rank_detection() {
        let sv = [3.0, 2.0, 1e-14];
        assert_eq!(numerical_rank(&sv, 1e-8), 2);
        assert_eq!(numerical_rank(&[0.0, 0.0], 1e-8), 0);
    }

    #[test]
    fn solve_matches_known_solution() {
        let a = vec![vec![2.0, 1.0], vec![1.0, 3.0]];
        let x = solve_dense(&a, &[5.0, 10.0]).unwrap();
        assert!((2.0 * x[0] + x[1] - 5.0).abs() < 1e-12);
        assert!((x[0] + 3.0 * x[1] - 10.0).abs() < 1e-12);
    }

    #[test]
    fn solve_complex_system() {
        let i = Complex64::new(0.0, 1.0);
        let one = Complex64::new(1.0, 0.0);
        let a = vec![vec![one, i], vec![-i, one + one]];
        let b = vec![one, i];
        let x = solve_dense(&a, &b).unwrap();
        let r0 = a[0][0] * x[0] + a[0][1] * x[1] - b[0];
        let r1 = a[1][0] * x[0] + a[1][1] * x[1] - b[1];
        assert!(r0.modulus() < 1e-12 && r1.modulus() < 1e-12);
    }

    #[test]
    fn roots_of_real_cubic() {
        // (t−1)(t−2)(t−3) = t³ −6t² +11t −6
        let c: Vec<Complex64> = [-6.0, 11.0, -6.0, 1.0]
            .iter()
            .map(|&x| Complex64::new(x, 0.0))
            .collect();
        let mut roots = polynomial_roots(&c).unwrap();
        roots.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        for (r, want) in roots.iter().zip([1.0, 2.0, 3.0]) {
            assert!((r - Complex64::new(want, 0.0)).modulus() < 1e-9, "{r}");
        }
    }

    #[test]
    fn roots_of_t2_plus_1() {
        let c: Vec<Complex64> = [1.0, 0.0, 1.0]
            .iter()
            .map(|&x| Complex64::new(x, 0.0))
            .collect();
        let mut roots = polynomial_roots(&c).unwrap();
        roots.sort_by(|a, b| a.im.partial_cmp(&b.im).unwrap());
        assert!((roots[0] - Complex64::new(0.0, -1.0)).modulus() < 1e-10);
        assert!((roots[1] - Complex64::new(0.0, 1.0)).modulus() < 1e-10);
    }

    #[test]
    fn roots_round_trip_random_polynomials() {
        let mut r = rng::chacha(13);
        for deg in 2..=7usize {
            let want: Vec<Complex64> = (0..deg)
                .map(|_| Complex64::new(rng::normal(&mut r), rng::normal(&mut r)))
                .collect();
            // expand ∏ (t − w_i)
            let mut coeffs = vec![Complex64::new(1.0, 0.0)];
            for w in &want {
                let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
                for (k, &c) in coeffs.iter().enumerate() {
                    next[k + 1] += c;
                    next[k] -= c * w;
                }
                coeffs = next;
            }
            let got = polynomial_roots(&coeffs).unwrap();
            assert_eq!(got.len(), deg);
            // match each wanted root to the closest found root
            for w in &want {
                let best = got
                    .iter()
                    .map(|g| (g - w).modulus())
                    .fold(f64::INFINITY, f64::min);
                assert!(best < 1e-7, "degree {deg}: root {w} missed by {best}");
            }
        }
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        let z = Complex64::new(0.0, 0.0);
        assert!(matches!(
            polynomial_roots(&[z, z, z]),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn rotation_preserves_norm_and_complement() {
        let mut r = rng::chacha(15);
        let q1: Vec<f64> = rng::unit_vector(&mut r, 4);
        let mut q2: Vec<f64> = rng::vector(&mut r, 4);
        let c = vec_dot(&q2, &q1);
        vec_axpy(&mut q2, -c, &q1);
        let q2 = vec_normalize(&q2).unwrap();
        let x: Vec<f64> = rng::vector(&mut r, 4);
        let y = rotate_in_plane(&x, &q1, &q2, 0.7);
        assert!((vec_norm(&x) - vec_norm(&y)).abs() < 1e-12);
        // complement component untouched
        let mut orth = x.clone();
        let c1 = vec_dot(&orth, &q1);
        vec_axpy(&mut orth, -c1, &q1);
        let c2 = vec_dot(&orth, &q2);
        vec_axpy(&mut orth, -c2, &q2);
        let mut orth_y = y.clone();
        let c1 = vec_dot(&orth_y, &q1);
        vec_axpy(&mut orth_y, -c1, &q1);
        let c2 = vec_dot(&orth_y, &q2);
        vec_axpy(&mut orth_y, -c2, &q2);
        for (a, b) in orth.iter().zip(&orth_y) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn rotation_by_theta_merges_vectors() {
        // rotating x toward y by the full angle lands on y
        let q1 = vec![1.0, 0.0, 0.0];
        let q2 = vec![0.0, 1.0, 0.0];
        let theta = 0.9f64;
        let y = vec![theta.cos(), theta.sin(), 0.0];
        let moved = rotate_in_plane(&q1, &q1, &q2, theta);
        for (a, b) in moved.iter().zip(&y) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn orthonormal_basis_and_complement() {
        let vs = vec![vec![1.0, 0.0, 0.0], vec![1.0, 1.0, 0.0]];
        let basis = orthonormal_basis(&vs, 1e-12);
        assert_eq!(basis.len(), 2);
        assert!(vec_dot(&basis[0], &basis[1]).abs() < 1e-12);
        let w = unit_orthogonal_to(&basis, 3).unwrap();
        assert!(vec_dot(&w, &basis[0]).abs() < 1e-12);
        assert!(vec_dot(&w, &basis[1]).abs() < 1e-12);
        assert!((vec_norm(&w) - 1.0).abs() < 1e-12);
    }
}
