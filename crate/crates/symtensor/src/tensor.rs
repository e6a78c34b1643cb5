//! Dense tensors over ℝ and ℂ.
//!
//! A [`DenseTensor`] is an order-`d` multiway array stored flat in
//! row-major order; it is the universal carrier for ⊗^d 𝕂^{n_i}. Tensors
//! are immutable values after construction: every operation returns a new
//! tensor and may be called concurrently on shared inputs.
//!
//! Conventions (fixed once for the whole crate):
//!
//! * `⟨x, y⟩ = Σ x_j · conj(y_j)` — the inner product conjugates the
//!   *second* argument, so on elementary tensors
//!   `⟨y_1⊗…⊗y_d, x_1⊗…⊗x_d⟩ = ∏ ⟨y_i, x_i⟩`.
//! * The multilinear form of a tensor is `L_z(y_1,…,y_d) = ⟨y_1⊗…⊗y_d, z⟩`
//!   and the polynomial of a symmetric tensor is `P_z(y) = L_z(y,…,y)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::Scalar;
use crate::MAX_ORDER;

/// All permutations of `{0, …, d−1}` (Heap's algorithm).
///
/// Rejects `d > MAX_ORDER`; `8! = 40320` is the largest group enumerated.
pub fn permutations(d: usize) -> Result<Vec<Vec<usize>>> {
    if d > MAX_ORDER {
        return Err(Error::OrderTooLarge(d));
    }
    let mut items: Vec<usize> = (0..d).collect();
    let mut out = Vec::new();
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(d, &mut items, &mut out);
    Ok(out)
}

/// Order-`d` dense tensor with row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseTensor<T> {
    shape: Vec<usize>,
    strides: Vec<usize>,
    data: Vec<T>,
}

impl<T: Scalar> DenseTensor<T> {
    /// Zero tensor of the given shape. Requires `d ≥ 1` and all `n_i ≥ 1`.
    pub fn zeros(shape: &[usize]) -> Result<Self> {
        if shape.is_empty() {
            return Err(Error::EmptyFactors);
        }
        if shape.contains(&0) {
            return Err(Error::EmptyAxis(shape.to_vec()));
        }
        let len = shape.iter().product();
        Ok(Self {
            shape: shape.to_vec(),
            strides: strides_of(shape),
            data: vec![T::zero(); len],
        })
    }

    /// Tensor from flat row-major data.
    pub fn from_data(shape: &[usize], data: Vec<T>) -> Result<Self> {
        if shape.is_empty() {
            return Err(Error::EmptyFactors);
        }
        if shape.contains(&0) {
            return Err(Error::EmptyAxis(shape.to_vec()));
        }
        let want: usize = shape.iter().product();
        if data.len() != want {
            return Err(Error::DataLength {
                want,
                got: data.len(),
            });
        }
        Ok(Self {
            shape: shape.to_vec(),
            strides: strides_of(shape),
            data,
        })
    }

    /// Elementary tensor `x_1 ⊗ … ⊗ x_d`; entry `(i_1,…,i_d)` equals
    /// `∏_k vectors[k][i_k]`.
    pub fn elementary(vectors: &[Vec<T>]) -> Result<Self> {
        if vectors.is_empty() {
            return Err(Error::EmptyFactors);
        }
        if vectors.iter().any(|v| v.is_empty()) {
            return Err(Error::EmptyAxis(vectors.iter().map(Vec::len).collect()));
        }
        let shape: Vec<usize> = vectors.iter().map(Vec::len).collect();
        let mut out = Self::zeros(&shape)?;
        let mut idx = vec![0usize; shape.len()];
        for pos in 0..out.data.len() {
            out.decode(pos, &mut idx);
            let mut prod = T::one();
            for (k, &i) in idx.iter().enumerate() {
                prod = prod * vectors[k][i];
            }
            out.data[pos] = prod;
        }
        Ok(out)
    }

    /// Decomposable symmetric tensor `x_1 ∨ … ∨ x_d = σ(x_1 ⊗ … ⊗ x_d)`.
    pub fn sym_decomposable(vectors: &[Vec<T>]) -> Result<Self> {
        let n = vectors.first().ok_or(Error::EmptyFactors)?.len();
        for v in vectors {
            if v.len() != n {
                return Err(Error::LengthMismatch {
                    want: n,
                    got: v.len(),
                });
            }
        }
        Self::elementary(vectors)?.symmetrize()
    }

    pub fn order(&self) -> usize {
        self.shape.len()
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [T] {
        &mut self.data
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn is_cubical(&self) -> bool {
        self.shape.iter().all(|&n| n == self.shape[0])
    }

    /// Axis length for cubical tensors.
    pub fn dim(&self) -> Result<usize> {
        if self.is_cubical() {
            Ok(self.shape[0])
        } else {
            Err(Error::NotCubical(self.shape.clone()))
        }
    }

    pub fn stride(&self, axis: usize) -> usize {
        self.strides[axis]
    }

    /// Entry at a multi-index.
    pub fn entry(&self, idx: &[usize]) -> T {
        self.data[self.encode(idx)]
    }

    pub fn entry_mut(&mut self, idx: &[usize]) -> &mut T {
        let pos = self.encode(idx);
        &mut self.data[pos]
    }

    fn encode(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.shape.len());
        idx.iter()
            .zip(&self.strides)
            .map(|(&i, &s)| i * s)
            .sum()
    }

    /// Decode a linear position into `idx` (reusable buffer).
    pub fn decode(&self, pos: usize, idx: &mut [usize]) {
        let mut rem = pos;
        for (k, &s) in self.strides.iter().enumerate() {
            idx[k] = rem / s;
            rem %= s;
        }
    }

    pub fn scaled(&self, s: T) -> Self {
        Self {
            shape: self.shape.clone(),
            strides: self.strides.clone(),
            data: self.data.iter().map(|&x| x * s).collect(),
        }
    }

    pub fn scaled_re(&self, s: f64) -> Self {
        Self {
            shape: self.shape.clone(),
            strides: self.strides.clone(),
            data: self.data.iter().map(|&x| x.scale(s)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Self {
            shape: self.shape.clone(),
            strides: self.strides.clone(),
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Self {
            shape: self.shape.clone(),
            strides: self.strides.clone(),
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| a - b)
                .collect(),
        })
    }

    /// `self += c · other` in place.
    pub fn axpy(&mut self, c: T, other: &Self) -> Result<()> {
        self.check_same_shape(other)?;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = *a + c * b;
        }
        Ok(())
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch(
                self.shape.clone(),
                other.shape.clone(),
            ));
        }
        Ok(())
    }

    /// `⟨self, other⟩ = Σ self_j · conj(other_j)`.
    pub fn inner_product(&self, other: &Self) -> Result<T> {
        self.check_same_shape(other)?;
        let mut acc = T::zero();
        for (&a, &b) in self.data.iter().zip(&other.data) {
            acc = acc + a * b.conj();
        }
        Ok(acc)
    }

    /// Hilbert-Schmidt (Frobenius) norm.
    pub fn hs_norm(&self) -> f64 {
        num_traits::Float::sqrt(self.data.iter().map(|x| x.modulus_sq()).sum::<f64>())
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data
            .iter()
            .map(|x| x.modulus())
            .fold(0.0, f64::max)
    }

    /// Entrywise ℓ¹ norm; dominates the projective norm of the tensor.
    pub fn l1_norm(&self) -> f64 {
        self.data.iter().map(|x| x.modulus()).sum()
    }

    /// Symmetrization `σ`: entry `(i_1,…,i_d) ↦ (1/d!) Σ_η x(i_{η(1)},…,i_{η(d)})`.
    ///
    /// Requires a cubical shape and order ≤ `MAX_ORDER`.
    pub fn symmetrize(&self) -> Result<Self> {
        if !self.is_cubical() {
            return Err(Error::NotCubical(self.shape.clone()));
        }
        let d = self.order();
        let perms = permutations(d)?;
        let inv = 1.0 / perms.len() as f64;
        let mut out = Self::zeros(&self.shape)?;
        let mut idx = vec![0usize; d];
        let mut pidx = vec![0usize; d];
        for pos in 0..out.data.len() {
            out.decode(pos, &mut idx);
            let mut acc = T::zero();
            for perm in &perms {
                for (k, &p) in perm.iter().enumerate() {
                    pidx[k] = idx[p];
                }
                acc = acc + self.entry(&pidx);
            }
            out.data[pos] = acc.scale(inv);
        }
        Ok(out)
    }

    /// True iff every transposition of indices moves no entry by more than
    /// `tol`. Non-cubical tensors are never symmetric.
    pub fn is_symmetric(&self, tol: f64) -> bool {
        if !self.is_cubical() {
            return false;
        }
        let d = self.order();
        let mut idx = vec![0usize; d];
        for a in 0..d {
            for b in (a + 1)..d {
                for pos in 0..self.data.len() {
                    self.decode(pos, &mut idx);
                    idx.swap(a, b);
                    let swapped = self.entry(&idx);
                    idx.swap(a, b);
                    if (self.data[pos] - swapped).modulus() > tol {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Multilinear form `L_z(y_1,…,y_d) = ⟨y_1⊗…⊗y_d, z⟩`.
    pub fn multilinear_eval(&self, args: &[Vec<T>]) -> Result<T> {
        if args.len() != self.order() {
            return Err(Error::LengthMismatch {
                want: self.order(),
                got: args.len(),
            });
        }
        for (k, a) in args.iter().enumerate() {
            if a.len() != self.shape[k] {
                return Err(Error::LengthMismatch {
                    want: self.shape[k],
                    got: a.len(),
                });
            }
        }
        let mut idx = vec![0usize; self.order()];
        let mut acc = T::zero();
        for pos in 0..self.data.len() {
            self.decode(pos, &mut idx);
            let mut prod = self.data[pos].conj();
            for (k, &i) in idx.iter().enumerate() {
                prod = prod * args[k][i];
            }
            acc = acc + prod;
        }
        Ok(acc)
    }

    /// Polynomial `P_z(y) = L_z(y,…,y)` of a symmetric tensor.
    ///
    /// Errors if the tensor is not symmetric within `tol`.
    pub fn poly_eval(&self, y: &[T], tol: f64) -> Result<T> {
        if !self.is_symmetric(tol) {
            return Err(Error::NotSymmetric(tol));
        }
        let args = vec![y.to_vec(); self.order()];
        self.multilinear_eval(&args)
    }

    /// Polynomial evaluation without the symmetry check; used by inner
    /// optimization loops where the input is symmetric by construction.
    pub fn poly_eval_unchecked(&self, y: &[T]) -> T {
        let mut idx = vec![0usize; self.order()];
        let mut acc = T::zero();
        for pos in 0..self.data.len() {
            self.decode(pos, &mut idx);
            let mut prod = self.data[pos].conj();
            for &i in idx.iter() {
                prod = prod * y[i];
            }
            acc = acc + prod;
        }
        acc
    }

    /// Apply a matrix `m` (given as `n×n`, row-major, acting on coordinate
    /// vectors) to every slot: the tensor of `(y_1,…,y_d) ↦ L_z(M y_1,…,M y_d)`
    /// when `m` is Hermitian.
    pub fn mode_multiply_all(&self, m: &[Vec<T>]) -> Result<Self> {
        let d = self.order();
        let mut cur = self.clone();
        for axis in 0..d {
            cur = cur.mode_multiply(axis, m)?;
        }
        Ok(cur)
    }

    /// Contract one axis with a matrix: `out[.., i, ..] = Σ_j m[i][j] x[.., j, ..]`.
    pub fn mode_multiply(&self, axis: usize, m: &[Vec<T>]) -> Result<Self> {
        let n = self.shape[axis];
        let rows = m.len();
        if m.iter().any(|r| r.len() != n) {
            return Err(Error::LengthMismatch {
                want: n,
                got: m.iter().map(Vec::len).max().unwrap_or(0),
            });
        }
        let mut new_shape = self.shape.clone();
        new_shape[axis] = rows;
        let mut out = Self::zeros(&new_shape)?;
        let mut idx = vec![0usize; self.order()];
        for pos in 0..out.data.len() {
            out.decode(pos, &mut idx);
            let i = idx[axis];
            let mut acc = T::zero();
            for j in 0..n {
                idx[axis] = j;
                acc = acc + m[i][j] * self.entry(&idx);
            }
            idx[axis] = i;
            out.data[pos] = acc;
        }
        Ok(out)
    }

    /// Mode-`k` unfolding: rows indexed by axis `k`, columns by the rest.
    pub fn unfold(&self, axis: usize) -> Vec<Vec<T>> {
        let n = self.shape[axis];
        let cols = self.len() / n;
        let mut mat = vec![vec![T::zero(); cols]; n];
        let mut idx = vec![0usize; self.order()];
        let mut col_of = vec![0usize; self.len()];
        // column index = linear index with axis k removed
        let mut col_strides = Vec::with_capacity(self.order() - 1);
        {
            let mut s = 1usize;
            for ax in (0..self.order()).rev() {
                if ax == axis {
                    continue;
                }
                col_strides.push((ax, s));
                s *= self.shape[ax];
            }
        }
        for pos in 0..self.len() {
            self.decode(pos, &mut idx);
            let mut c = 0usize;
            for &(ax, s) in &col_strides {
                c += idx[ax] * s;
            }
            col_of[pos] = c;
        }
        for pos in 0..self.len() {
            self.decode(pos, &mut idx);
            mat[idx[axis]][col_of[pos]] = self.data[pos];
        }
        mat
    }
}

fn strides_of(shape: &[usize]) -> Vec<usize> {
    let mut strides = vec![1usize; shape.len()];
    for k in (0..shape.len().saturating_sub(1)).rev() {
        strides[k] = strides[k + 1] * shape[k + 1];
    }
    strides
}

/// One elementary term `coeff · z_1 ⊗ … ⊗ z_d`.
#[derive(Debug, Clone, PartialEq)]
pub struct ElemTerm<T> {
    pub coeff: T,
    pub vectors: Vec<Vec<T>>,
}

/// Sum of elementary tensors `Σ_i λ_i · z_1^i ⊗ … ⊗ z_d^i`; the witness
/// format for projective-norm upper bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct ElemDecomposition<T> {
    pub shape: Vec<usize>,
    pub terms: Vec<ElemTerm<T>>,
}

impl<T: Scalar> ElemDecomposition<T> {
    pub fn new(shape: &[usize], terms: Vec<ElemTerm<T>>) -> Result<Self> {
        if shape.is_empty() {
            return Err(Error::EmptyFactors);
        }
        for t in &terms {
            if t.vectors.len() != shape.len() {
                return Err(Error::LengthMismatch {
                    want: shape.len(),
                    got: t.vectors.len(),
                });
            }
            for (k, v) in t.vectors.iter().enumerate() {
                if v.len() != shape[k] {
                    return Err(Error::LengthMismatch {
                        want: shape[k],
                        got: v.len(),
                    });
                }
            }
        }
        Ok(Self {
            shape: shape.to_vec(),
            terms,
        })
    }

    pub fn densify(&self) -> Result<DenseTensor<T>> {
        let mut out = DenseTensor::zeros(&self.shape)?;
        for t in &self.terms {
            let term = DenseTensor::elementary(&t.vectors)?;
            out.axpy(t.coeff, &term)?;
        }
        Ok(out)
    }

    /// `Σ_i |λ_i| ∏_j ‖z_j^i‖`.
    pub fn projective_cost(&self) -> f64 {
        self.terms
            .iter()
            .map(|t| {
                t.coeff.modulus()
                    * t.vectors
                        .iter()
                        .map(|v| linalg::vec_norm(v))
                        .product::<f64>()
            })
            .sum()
    }
}

/// One term `coeff · z_1 ∨ … ∨ z_d` of a symmetric decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct SymTerm<T> {
    pub coeff: T,
    pub vectors: Vec<Vec<T>>,
}

/// Sum of decomposable symmetric tensors `Σ_i λ_i · z_1^i ∨ … ∨ z_d^i`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymDecomposition<T> {
    pub n: usize,
    pub d: usize,
    pub terms: Vec<SymTerm<T>>,
}

impl<T: Scalar> SymDecomposition<T> {
    pub fn new(n: usize, d: usize, terms: Vec<SymTerm<T>>) -> Result<Self> {
        if n == 0 || d == 0 {
            return Err(Error::EmptyFactors);
        }
        for t in &terms {
            if t.vectors.len() != d {
                return Err(Error::LengthMismatch {
                    want: d,
                    got: t.vectors.len(),
                });
            }
            for v in &t.vectors {
                if v.len() != n {
                    return Err(Error::LengthMismatch {
                        want: n,
                        got: v.len(),
                    });
                }
            }
        }
        Ok(Self { n, d, terms })
    }

    /// Number of terms; a witnessed upper bound for rank_σ.
    pub fn rank_witness(&self) -> usize {
        self.terms.len()
    }

    /// Materialize the decomposition as a dense symmetric tensor.
    pub fn densify(&self) -> Result<DenseTensor<T>> {
        let shape = vec![self.n; self.d];
        let mut out = DenseTensor::zeros(&shape)?;
        for t in &self.terms {
            let term = DenseTensor::sym_decomposable(&t.vectors)?;
            out.axpy(t.coeff, &term)?;
        }
        Ok(out)
    }

    /// `Σ_i |λ_i| ∏_j ‖z_j^i‖` — the projective cost of the decomposition.
    pub fn projective_cost(&self) -> f64 {
        self.terms
            .iter()
            .map(|t| {
                t.coeff.modulus()
                    * t.vectors
                        .iter()
                        .map(|v| linalg::vec_norm(v))
                        .product::<f64>()
            })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{vec_norm, vec_scale};
    use crate::rng;
    use num_complex::Complex64;

    fn e(n: usize, i: usize) -> Vec<f64> {
        let mut v = vec![0.0; n];
        v[i] = 1.0;
        v
    }

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(1).unwrap().len(), 1);
        assert_eq!(permutations(3).unwrap().len(), 6);
        assert_eq!(permutations(5).unwrap().len(), 120);
        assert!(matches!(permutations(9), Err(Error::OrderTooLarge(9))));
    }

    #[test]
    fn elementary_identity_case_d1() {
        let t = DenseTensor::elementary(&[e(2, 0)]).unwrap();
        assert_eq!(t.data(), &[1.0, 0.0]);
    }

    #[test]
    fn elementary_basis_case() {
        // (e_1, e_2) in R^2: single 1 at position (0, 1)
        let t = DenseTensor::elementary(&[e(2, 0), e(2, 1)]).unwrap();
        assert_eq!(t.shape(), &[2, 2]);
        assert_eq!(t.entry(&[0, 1]), 1.0);
        assert_eq!(t.data().iter().map(|x| x.abs()).sum::<f64>(), 1.0);
    }

    #[test]
    fn elementary_matches_outer_product_oracle() {
        // random v, w in R^3 checked entrywise against a direct loop
        let mut rng = rng::chacha(11);
        let v: Vec<f64> = rng::vector(&mut rng, 3);
        let w: Vec<f64> = rng::vector(&mut rng, 3);
        let t = DenseTensor::elementary(&[v.clone(), w.clone()]).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert!((t.entry(&[i, j]) - v[i] * w[j]).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn elementary_rejects_empty() {
        assert!(matches!(
            DenseTensor::<f64>::elementary(&[]),
            Err(Error::EmptyFactors)
        ));
    }

    #[test]
    fn inner_product_on_basis_tensors() {
        let e12 = DenseTensor::elementary(&[e(2, 0), e(2, 1)]).unwrap();
        let e21 = DenseTensor::elementary(&[e(2, 1), e(2, 0)]).unwrap();
        assert_eq!(e12.inner_product(&e12).unwrap(), 1.0);
        assert_eq!(e12.inner_product(&e21).unwrap(), 0.0);
    }

    #[test]
    fn inner_product_conjugates_second_argument() {
        let i = Complex64::new(0.0, 1.0);
        let one = Complex64::new(1.0, 0.0);
        let x = DenseTensor::from_data(&[2], vec![i, Complex64::new(0.0, 0.0)]).unwrap();
        let y = DenseTensor::from_data(&[2], vec![one, Complex64::new(0.0, 0.0)]).unwrap();
        // ⟨x, y⟩ = i · conj(1) = i and ⟨y, x⟩ = 1 · conj(i) = −i
        assert_eq!(x.inner_product(&y).unwrap(), i);
        assert_eq!(y.inner_product(&x).unwrap(), -i);
    }

    #[test]
    fn mixed_elementary_vs_sym_overlap_is_inverse_binomial() {
        // ⟨(⊗^j v)⊗(⊗^{d−j} w), (∨^j v)∨(∨^{d−j} w)⟩ = 1/C(d,j); d=3, j=1 → 1/3
        let v = e(2, 0);
        let w = e(2, 1);
        let elem = DenseTensor::elementary(&[v.clone(), w.clone(), w.clone()]).unwrap();
        let symd = DenseTensor::sym_decomposable(&[v, w.clone(), w]).unwrap();
        let ip = elem.inner_product(&symd).unwrap();
        assert!((ip - 1.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn hs_norm_frozen_values() {
        let zero: DenseTensor<f64> = DenseTensor::zeros(&[2, 2]).unwrap();
        assert_eq!(zero.hs_norm(), 0.0);
        // e_1 ∨ e_2 (orthonormal, d = 2) → 1/√2
        let d2 = DenseTensor::sym_decomposable(&[e(2, 0), e(2, 1)]).unwrap();
        assert!((d2.hs_norm() - 1.0 / 2f64.sqrt()).abs() < 1e-14);
        // e_1 ∨ e_2 ∨ e_3 (orthonormal, d = 3) → 1/√6
        let d3 = DenseTensor::sym_decomposable(&[e(3, 0), e(3, 1), e(3, 2)]).unwrap();
        assert!((d3.hs_norm() - 1.0 / 6f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn symmetrize_fixes_symmetric_input() {
        let mut rng = rng::chacha(3);
        let z: DenseTensor<f64> = rng::symmetric_tensor(&mut rng, 3, 3);
        let again = z.symmetrize().unwrap();
        let diff = z.sub(&again).unwrap().max_abs();
        assert!(diff < 1e-12 * z.max_abs().max(1.0));
    }

    #[test]
    fn symmetrize_definition_at_d2() {
        let t = DenseTensor::elementary(&[e(2, 0), e(2, 1)]).unwrap();
        let s = t.symmetrize().unwrap();
        assert!((s.entry(&[0, 1]) - 0.5).abs() < 1e-15);
        assert!((s.entry(&[1, 0]) - 0.5).abs() < 1e-15);
        assert_eq!(s.entry(&[0, 0]), 0.0);
        assert_eq!(s.entry(&[1, 1]), 0.0);
    }

    #[test]
    fn symmetrize_matches_permutation_average_oracle() {
        let mut rng = rng::chacha(17);
        let x: DenseTensor<f64> = rng::tensor(&mut rng, &[3, 3, 3]);
        let s = x.symmetrize().unwrap();
        // direct loop over S_3
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let idx = [i, j, k];
                    let mut acc = 0.0;
                    for p in &perms {
                        acc += x.entry(&[idx[p[0]], idx[p[1]], idx[p[2]]]);
                    }
                    assert!((s.entry(&idx) - acc / 6.0).abs() < 1e-13);
                }
            }
        }
    }

    #[test]
    fn symmetrize_rejects_non_cubical() {
        let t: DenseTensor<f64> = DenseTensor::zeros(&[2, 3]).unwrap();
        assert!(matches!(t.symmetrize(), Err(Error::NotCubical(_))));
    }

    #[test]
    fn sym_decomposable_of_repeated_vector_is_elementary() {
        let mut rng = rng::chacha(5);
        let v: Vec<f64> = rng::vector(&mut rng, 3);
        let elem = DenseTensor::elementary(&[v.clone(), v.clone(), v.clone()]).unwrap();
        let symd = DenseTensor::sym_decomposable(&[v.clone(), v.clone(), v]).unwrap();
        assert!(elem.sub(&symd).unwrap().max_abs() < 1e-13);
    }

    #[test]
    fn is_symmetric_examples() {
        let sym = DenseTensor::sym_decomposable(&[e(2, 0), e(2, 1)]).unwrap();
        assert!(sym.is_symmetric(1e-12));
        let raw = DenseTensor::elementary(&[e(2, 0), e(2, 1)]).unwrap();
        assert!(!raw.is_symmetric(1e-12));
        let mut rng = rng::chacha(23);
        let s: DenseTensor<f64> = rng::symmetric_tensor(&mut rng, 2, 4);
        assert!(s.is_symmetric(1e-12));
    }

    #[test]
    fn multilinear_eval_on_basis() {
        let z = DenseTensor::elementary(&[e(2, 0), e(2, 1)]).unwrap();
        let val = z.multilinear_eval(&[e(2, 0), e(2, 1)]).unwrap();
        assert_eq!(val, 1.0);
    }

    #[test]
    fn multilinear_eval_complex_counterexample_point() {
        // z = e_1⊗e_1 + e_2⊗e_2 over C², args = ((1/√2, i/√2),(1/√2, −i/√2))
        let s = 1.0 / 2f64.sqrt();
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let z = DenseTensor::from_data(&[2, 2], vec![one, zero, zero, one]).unwrap();
        let a = vec![Complex64::new(s, 0.0), Complex64::new(0.0, s)];
        let b = vec![Complex64::new(s, 0.0), Complex64::new(0.0, -s)];
        let val = z.multilinear_eval(&[a, b]).unwrap();
        assert!((val.modulus() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn multilinear_eval_matches_contraction_oracle() {
        let mut rng = rng::chacha(29);
        let z: DenseTensor<f64> = rng::tensor(&mut rng, &[2, 3, 2]);
        let args: Vec<Vec<f64>> = vec![
            rng::vector(&mut rng, 2),
            rng::vector(&mut rng, 3),
            rng::vector(&mut rng, 2),
        ];
        // independent nested-loop contraction
        let mut acc = 0.0;
        for i in 0..2 {
            for j in 0..3 {
                for k in 0..2 {
                    acc += z.entry(&[i, j, k]) * args[0][i] * args[1][j] * args[2][k];
                }
            }
        }
        let val = z.multilinear_eval(&args).unwrap();
        assert!((val - acc).abs() < 1e-12);
    }

    #[test]
    fn poly_eval_examples() {
        // u = ⊗^d z → ⟨y, z⟩^d
        let mut rng = rng::chacha(31);
        let zv: Vec<f64> = rng::vector(&mut rng, 3);
        let y: Vec<f64> = rng::vector(&mut rng, 3);
        let u = DenseTensor::elementary(&[zv.clone(), zv.clone(), zv.clone()]).unwrap();
        let ip: f64 = y.iter().zip(&zv).map(|(a, b)| a * b).sum();
        let val = u.poly_eval(&y, 1e-10).unwrap();
        assert!((val - ip.powi(3)).abs() < 1e-10 * ip.powi(3).abs().max(1.0));

        // u = e_1 ∨ e_2 in R², y = (1,1) → 1
        let u2 = DenseTensor::sym_decomposable(&[e(2, 0), e(2, 1)]).unwrap();
        let val2 = u2.poly_eval(&[1.0, 1.0], 1e-10).unwrap();
        assert!((val2 - 1.0).abs() < 1e-14);

        // diagonal identity on a random symmetric tensor
        let s: DenseTensor<f64> = rng::symmetric_tensor(&mut rng, 3, 3);
        let y2: Vec<f64> = rng::vector(&mut rng, 3);
        let diag = s
            .multilinear_eval(&[y2.clone(), y2.clone(), y2.clone()])
            .unwrap();
        assert!((s.poly_eval(&y2, 1e-10).unwrap() - diag).abs() < 1e-12);
    }

    #[test]
    fn poly_eval_rejects_non_symmetric() {
        let raw = DenseTensor::elementary(&[e(2, 0), e(2, 1)]).unwrap();
        assert!(matches!(
            raw.poly_eval(&[1.0, 1.0], 1e-10),
            Err(Error::NotSymmetric(_))
        ));
    }

    #[test]
    fn symmetrization_is_orthogonal_projection() {
        // ⟨σ(x), s⟩ = ⟨x, s⟩ for symmetric s, and Pythagoras
        let mut rng = rng::chacha(41);
        let x: DenseTensor<f64> = rng::tensor(&mut rng, &[3, 3, 3]);
        let s: DenseTensor<f64> = rng::symmetric_tensor(&mut rng, 3, 3);
        let sx = x.symmetrize().unwrap();
        let lhs = sx.inner_product(&s).unwrap();
        let rhs = x.inner_product(&s).unwrap();
        assert!((lhs - rhs).abs() < 1e-12);

        let anti = x.sub(&sx).unwrap();
        let total = x.hs_norm().powi(2);
        let parts = sx.hs_norm().powi(2) + anti.hs_norm().powi(2);
        assert!((total - parts).abs() < 1e-10);
    }

    #[test]
    fn sym_inner_product_reduction() {
        // ⟨z_1∨…∨z_d, x_1∨…∨x_d⟩ = ⟨σ(z_1⊗…⊗z_d), x_1∨…∨x_d⟩
        //                        = ⟨z_1⊗…⊗z_d, x_1∨…∨x_d⟩
        let mut rng = rng::chacha(43);
        let zs: Vec<Vec<f64>> = (0..3).map(|_| rng::vector(&mut rng, 3)).collect();
        let xs: Vec<Vec<f64>> = (0..3).map(|_| rng::vector(&mut rng, 3)).collect();
        let zsym = DenseTensor::sym_decomposable(&zs).unwrap();
        let zelem = DenseTensor::elementary(&zs).unwrap();
        let xsym = DenseTensor::sym_decomposable(&xs).unwrap();
        let a = zsym.inner_product(&xsym).unwrap();
        let b = zelem.inner_product(&xsym).unwrap();
        assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn unfold_shapes_and_values() {
        let mut rng = rng::chacha(47);
        let z: DenseTensor<f64> = rng::tensor(&mut rng, &[2, 3, 4]);
        let m0 = z.unfold(0);
        assert_eq!(m0.len(), 2);
        assert_eq!(m0[0].len(), 12);
        // Frobenius norm preserved by unfolding
        let frob: f64 = m0
            .iter()
            .flat_map(|r| r.iter())
            .map(|x| x * x)
            .sum::<f64>()
            .sqrt();
        assert!((frob - z.hs_norm()).abs() < 1e-12);
    }

    #[test]
    fn sym_decomposition_densify_is_symmetric() {
        let mut rng = rng::chacha(53);
        let terms = (0..2)
            .map(|_| SymTerm {
                coeff: rng::normal(&mut rng),
                vectors: (0..3).map(|_| rng::vector(&mut rng, 3)).collect(),
            })
            .collect();
        let dec = SymDecomposition::new(3, 3, terms).unwrap();
        let dense = dec.densify().unwrap();
        assert!(dense.is_symmetric(1e-10));
    }

    #[test]
    fn sym_decomposition_projective_cost() {
        let v = vec_scale(&e(2, 0), 2.0);
        let w = e(2, 1);
        assert!((vec_norm(&v) - 2.0).abs() < 1e-15);
        let dec = SymDecomposition::new(
            2,
            2,
            vec![SymTerm {
                coeff: 3.0,
                vectors: vec![v, w],
            }],
        )
        .unwrap();
        assert!((dec.projective_cost() - 6.0).abs() < 1e-13);
    }
}
