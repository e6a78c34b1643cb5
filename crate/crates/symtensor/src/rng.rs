//! Deterministic random sources.
//!
//! All stochastic search in this crate (power-iteration restarts, ALS
//! seeds, sampled property checks) derives from a user-supplied `u64` seed
//! through [`sub_seed`], so results are reproducible and independent of
//! restart scheduling.

use alloc::vec::Vec;

use num_traits::Float;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::Scalar;
use crate::tensor::DenseTensor;

/// Deterministic generator for a given seed.
pub fn chacha(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Derive an independent stream seed (SplitMix64 step over `base ^ stream`).
pub fn sub_seed(base: u64, stream: u64) -> u64 {
    let mut z = base ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Uniform sample in [0, 1) with 53 bits of precision.
pub fn uniform<R: RngCore>(rng: &mut R) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Standard normal sample via Box-Muller.
pub fn normal<R: RngCore>(rng: &mut R) -> f64 {
    let mut u = uniform(rng);
    if u <= f64::MIN_POSITIVE {
        u = f64::MIN_POSITIVE;
    }
    let v = uniform(rng);
    Float::sqrt(-2.0 * Float::ln(u)) * Float::cos(2.0 * core::f64::consts::PI * v)
}

/// Random vector with independent standard-normal entries.
pub fn vector<T: Scalar, R: RngCore>(rng: &mut R, n: usize) -> Vec<T> {
    (0..n).map(|_| T::standard_normal(rng)).collect()
}

/// Random unit vector (normal direction, normalized).
pub fn unit_vector<T: Scalar, R: RngCore>(rng: &mut R, n: usize) -> Vec<T> {
    loop {
        let v = vector::<T, R>(rng, n);
        let norm = crate::linalg::vec_norm(&v);
        if norm > 1e-6 {
            return crate::linalg::vec_scale(&v, 1.0 / norm);
        }
    }
}

/// Dense tensor with independent standard-normal entries.
pub fn tensor<T: Scalar, R: RngCore>(rng: &mut R, shape: &[usize]) -> DenseTensor<T> {
    let len = shape.iter().product();
    let data = (0..len).map(|_| T::standard_normal(rng)).collect();
    DenseTensor::from_data(shape, data).expect("shape/data generated consistently")
}

/// Random symmetric tensor in ⊗^d 𝕂^n (symmetrized normal tensor).
pub fn symmetric_tensor<T: Scalar, R: RngCore>(rng: &mut R, n: usize, d: usize) -> DenseTensor<T> {
    let shape = alloc::vec![n; d];
    tensor::<T, R>(rng, &shape)
        .symmetrize()
        .expect("cubical by construction")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sub_seed_streams_differ() {
        let s = 42;
        assert_ne!(sub_seed(s, 0), sub_seed(s, 1));
        assert_ne!(sub_seed(s, 1), sub_seed(s, 2));
        // stable across calls
        assert_eq!(sub_seed(s, 3), sub_seed(s, 3));
    }

    #[test]
    fn unit_vectors_have_unit_norm() {
        let mut rng = chacha(1);
        for n in 1..6 {
            let v: Vec<f64> = unit_vector(&mut rng, n);
            assert!((crate::linalg::vec_norm(&v) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn normal_moments_are_plausible() {
        let mut rng = chacha(5);
        let samples: Vec<f64> = (0..20_000).map(|_| normal(&mut rng)).collect();
        let mean = samples.iter().sum::<f64>() / samples.len() as f64;
        let var = samples.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>()
            / samples.len() as f64;
        assert!(mean.abs() < 0.05, "mean {mean}");
        assert!((var - 1.0).abs() < 0.05, "var {var}");
    }
}
