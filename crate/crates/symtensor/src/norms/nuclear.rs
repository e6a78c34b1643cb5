//! Structure checks for nuclear (projective-norm-attaining) decompositions.
//!
//! For a symmetric tensor, any decomposition whose factor-norm products sum
//! to π(z) must have per-term factor spans of dimension 1 (ℂ) or at most 2
//! (ℝ), and there must exist a norm-one symmetric multilinear form L with
//! `L(z_1^i,…,z_d^i) = ∏‖z_j^i‖` for every term. This module classifies
//! the spans and searches for the witness form; failing to find one within
//! tolerance is reported, never treated as disproof — the search is a
//! heuristic (ε-minimization under the linear interpolation constraints).

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::Scalar;
use crate::tensor::{DenseTensor, ElemDecomposition, SymDecomposition};

use super::oracle::OracleScalar;
use super::power;
use super::{eps_upper_certified, NormCfg};

/// Decomposition formats accepted by the structure check.
#[derive(Debug, Clone)]
pub enum NuclearDecomp<T> {
    Elementary(ElemDecomposition<T>),
    Symmetric(SymDecomposition<T>),
}

impl<T: Scalar> NuclearDecomp<T> {
    fn densify(&self) -> Result<DenseTensor<T>> {
        match self {
            NuclearDecomp::Elementary(d) => d.densify(),
            NuclearDecomp::Symmetric(d) => d.densify(),
        }
    }

    fn projective_cost(&self) -> f64 {
        match self {
            NuclearDecomp::Elementary(d) => d.projective_cost(),
            NuclearDecomp::Symmetric(d) => d.projective_cost(),
        }
    }

    fn terms(&self) -> Vec<(T, &Vec<Vec<T>>)> {
        match self {
            NuclearDecomp::Elementary(d) => {
                d.terms.iter().map(|t| (t.coeff, &t.vectors)).collect()
            }
            NuclearDecomp::Symmetric(d) => {
                d.terms.iter().map(|t| (t.coeff, &t.vectors)).collect()
            }
        }
    }
}

/// Outcome of [`nuclear_structure_check`].
#[derive(Debug, Clone)]
pub struct NuclearStructureReport<T> {
    /// `dim span{z_1^i,…,z_d^i}` per term.
    pub span_dims: Vec<usize>,
    /// Indices of terms violating the field's span bound (ℂ: dim > 1,
    /// ℝ: dim > 2).
    pub flagged_terms: Vec<usize>,
    /// Best symmetric witness found, scaled to certified ε ≤ 1.
    pub witness_form: DenseTensor<T>,
    /// Certified ε upper bound of the reported witness (≈ 1).
    pub witness_eps: f64,
    /// `|L_u(z_1^i,…,z_d^i) − ∏‖z_j^i‖|` per term at the reported witness.
    pub residuals: Vec<f64>,
}

/// Validates that `decomp` reproduces `z` and matches the supplied π
/// certificate, then reports per-term span dimensions and the witness-form
/// search described by the representation theory of nuclear decompositions.
pub fn nuclear_structure_check<T: OracleScalar>(
    z: &DenseTensor<T>,
    decomp: &NuclearDecomp<T>,
    pi_certificate: Option<f64>,
    tol: f64,
    cfg: &NormCfg,
) -> Result<NuclearStructureReport<T>> {
    let dense = decomp.densify()?;
    let resid = z.sub(&dense)?.hs_norm();
    if resid > tol.max(1e-12) {
        return Err(Error::DecompositionMismatch(resid));
    }
    let Some(pi_value) = pi_certificate else {
        return Err(Error::BadNormCertificate("certificate missing"));
    };
    let cost = decomp.projective_cost();
    if (cost - pi_value).abs() > tol.max(1e-12) {
        return Err(Error::BadNormCertificate(
            "decomposition cost differs from the certified projective norm",
        ));
    }

    let terms = decomp.terms();
    let mut span_dims = Vec::with_capacity(terms.len());
    let mut flagged = Vec::new();
    for (i, (_, vectors)) in terms.iter().enumerate() {
        let sv = linalg::singular_values(vectors);
        let dim = linalg::numerical_rank(&sv, tol.max(1e-12));
        span_dims.push(dim);
        let bound = match T::FIELD {
            crate::Field::Complex => 1,
            crate::Field::Real => 2,
        };
        if dim > bound {
            flagged.push(i);
        }
    }

    let (witness, witness_eps, residuals) = witness_search(z, &terms, cfg);
    Ok(NuclearStructureReport {
        span_dims,
        flagged_terms: flagged,
        witness_form: witness,
        witness_eps,
        residuals,
    })
}

/// Linear data of the witness constraints: `⟨E_i, u⟩ = target_i` where
/// `E_i` is the elementary tensor of the (unscaled) term factors and
/// `target_i = conj(phase(c_i)) · ∏‖v_j^i‖`.
struct Constraints<T> {
    elems: Vec<DenseTensor<T>>,
    sym_elems: Vec<DenseTensor<T>>,
    targets: Vec<T>,
    masses: Vec<f64>,
    coeff_mods: Vec<f64>,
}

fn build_constraints<T: Scalar>(terms: &[(T, &Vec<Vec<T>>)]) -> Constraints<T> {
    let mut elems = Vec::new();
    let mut sym_elems = Vec::new();
    let mut targets = Vec::new();
    let mut masses = Vec::new();
    let mut coeff_mods = Vec::new();
    for (c, vectors) in terms {
        let prod: f64 = vectors.iter().map(|v| linalg::vec_norm(v)).product();
        if c.modulus() * prod <= 1e-300 {
            continue;
        }
        let elem = DenseTensor::elementary(vectors).expect("validated factors");
        let sym = elem.symmetrize().expect("cubical term");
        elems.push(elem);
        sym_elems.push(sym);
        targets.push(c.phase().conj().scale(prod));
        masses.push(prod);
        coeff_mods.push(c.modulus());
    }
    Constraints {
        elems,
        sym_elems,
        targets,
        masses,
        coeff_mods,
    }
}

/// Affine projection onto the constraint set: `u += Σ_i b_i σ(E_i)` with
/// the correction solved from the Gram system.
fn project_constraints<T: Scalar>(u: &mut DenseTensor<T>, con: &Constraints<T>) {
    let r = con.elems.len();
    if r == 0 {
        return;
    }
    let mut gram = vec![vec![T::zero(); r]; r];
    for j in 0..r {
        for i in 0..r {
            gram[j][i] = con.elems[j].inner_product(&con.sym_elems[i]).expect("shape");
        }
    }
    let gap: Vec<T> = (0..r)
        .map(|j| con.targets[j] - con.elems[j].inner_product(u).expect("shape"))
        .collect();
    let solve = |g: &Vec<Vec<T>>| linalg::solve_dense(g, &gap);
    let coeffs = match solve(&gram) {
        Ok(x) => x,
        Err(_) => {
            let mut ridged = gram.clone();
            for i in 0..r {
                ridged[i][i] = ridged[i][i] + T::from_re(1e-10);
            }
            match linalg::solve_dense(&ridged, &gap) {
                Ok(x) => x,
                Err(_) => return,
            }
        }
    };
    for (i, b) in coeffs.iter().enumerate() {
        // system solved for conj(b) because the pairing is anti-linear in u
        u.axpy(b.conj(), &con.sym_elems[i]).expect("shape");
    }
}

/// ε-minimization under the witness constraints: subgradient steps against
/// the best rank-1 direction of the current iterate, re-projected after
/// every step. Initialized at the least-HS-norm constrained solution.
fn witness_search<T: OracleScalar>(
    z: &DenseTensor<T>,
    terms: &[(T, &Vec<Vec<T>>)],
    cfg: &NormCfg,
) -> (DenseTensor<T>, f64, Vec<f64>) {
    let con = build_constraints(terms);
    let mut u = DenseTensor::zeros(z.shape()).expect("valid shape");
    project_constraints(&mut u, &con);

    let eps_of = |u: &DenseTensor<T>| -> (f64, power::PowerPoint<T>) {
        let point = power::hopm_best(u, 6, 4000, 1e-12, cfg.seed);
        let mut eps = point.lambda.modulus();
        if let Some(reference) = super::oracle::injective(u, cfg.oracle_cutoff) {
            eps = eps.max(reference);
        }
        (eps, point)
    };

    let score = |u: &DenseTensor<T>, eps: f64| -> f64 {
        // worst residual after normalizing the witness to ε = 1
        let scale = 1.0 / eps.max(1e-300);
        con.elems
            .iter()
            .zip(&con.targets)
            .zip(&con.coeff_mods)
            .map(|((e, t), cm)| {
                let val = e.inner_product(u).expect("shape").scale(scale);
                cm * (val - *t).modulus()
            })
            .fold(0.0, f64::max)
    };

    let (mut eps, mut point) = eps_of(&u);
    let mut best_u = u.clone();
    let mut best_eps = eps;
    let mut best_score = score(&u, eps);
    for _ in 0..300 {
        if eps <= 1.0 + 1e-9 {
            break;
        }
        // subgradient of ε at u: the symmetrized best rank-1 direction
        let elem = DenseTensor::elementary(&point.vectors).expect("unit factors");
        let sym = elem.symmetrize().expect("cubical");
        let h = elem.inner_product(&u).expect("shape");
        let dir_phase = h.phase().conj();
        let eta = ((eps - 1.0) * 0.8).clamp(1e-4, 1.0);
        let mut candidate = u.clone();
        candidate
            .axpy(dir_phase.scale(-eta), &sym)
            .expect("shape");
        project_constraints(&mut candidate, &con);
        let (cand_eps, cand_point) = eps_of(&candidate);
        if cand_eps < eps + 1e-12 {
            u = candidate;
            eps = cand_eps;
            point = cand_point;
            let s = score(&u, eps);
            if eps < best_eps - 1e-12 || s < best_score {
                best_u = u.clone();
                best_eps = eps;
                best_score = s;
            }
        } else {
            break;
        }
    }
    let _ = best_score;

    // normalize the reported witness by its certified ε upper bound
    let eps_cert = eps_upper_certified(&best_u, cfg).max(best_eps);
    let reported = if eps_cert > 1e-300 {
        best_u.scaled_re(1.0 / eps_cert)
    } else {
        best_u
    };
    let reported_eps = eps_upper_certified(&reported, cfg);
    let residuals: Vec<f64> = con
        .elems
        .iter()
        .zip(&con.targets)
        .zip(&con.coeff_mods)
        .map(|((e, t), cm)| {
            let val = e.inner_product(&reported).expect("shape");
            cm * (val - *t).modulus()
        })
        .collect();
    let _ = &con.masses;
    (reported, reported_eps, residuals)
}
