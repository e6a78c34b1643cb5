//! Scalar abstraction over the two supported fields.
//!
//! Every tensor is generic over a [`Scalar`], either `f64` (ℝ) or
//! [`Complex64`] (ℂ). The field is part of the type, so computations can
//! never mix fields; the runtime [`Field`] tag is used at serialization
//! boundaries.

use core::fmt::Debug;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{Float, One, Zero};
use rand_chacha::rand_core::RngCore;

use crate::rng;

/// Runtime tag for the scalar field of a tensor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Real,
    Complex,
}

impl core::fmt::Display for Field {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Field::Real => write!(f, "real"),
            Field::Complex => write!(f, "complex"),
        }
    }
}

/// Element of ℝ or ℂ with the operations the tensor algorithms need.
///
/// The inner-product convention of the crate conjugates the *second*
/// argument: `⟨x, y⟩ = Σ x_i · conj(y_i)`.
pub trait Scalar:
    Copy
    + Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    const FIELD: Field;

    fn conj(self) -> Self;
    fn re(self) -> f64;
    fn im(self) -> f64;
    /// Modulus |self|.
    fn modulus(self) -> f64;
    /// Squared modulus, cheaper than `modulus` and exact.
    fn modulus_sq(self) -> f64;
    fn from_re(x: f64) -> Self;
    /// Construct from real and imaginary parts; for ℝ the imaginary part
    /// must be zero (callers gate on `FIELD`).
    fn from_re_im(re: f64, im: f64) -> Self;
    /// Multiply by a real scalar.
    fn scale(self, s: f64) -> Self;
    /// `self / |self|`; returns 1 for zero input.
    fn phase(self) -> Self;
    /// Standard normal sample (each real component independently N(0,1)).
    fn standard_normal<R: RngCore>(rng: &mut R) -> Self;
}

impl Scalar for f64 {
    const FIELD: Field = Field::Real;

    #[inline]
    fn conj(self) -> Self {
        self
    }
    #[inline]
    fn re(self) -> f64 {
        self
    }
    #[inline]
    fn im(self) -> f64 {
        0.0
    }
    #[inline]
    fn modulus(self) -> f64 {
        Float::abs(self)
    }
    #[inline]
    fn modulus_sq(self) -> f64 {
        self * self
    }
    #[inline]
    fn from_re(x: f64) -> Self {
        x
    }
    #[inline]
    fn from_re_im(re: f64, im: f64) -> Self {
        debug_assert_eq!(im, 0.0, "real scalar cannot carry an imaginary part");
        re
    }
    #[inline]
    fn scale(self, s: f64) -> Self {
        self * s
    }
    #[inline]
    fn phase(self) -> Self {
        if self < 0.0 {
            -1.0
        } else {
            1.0
        }
    }
    fn standard_normal<R: RngCore>(rng: &mut R) -> Self {
        rng::normal(rng)
    }
}

impl Scalar for Complex64 {
    const FIELD: Field = Field::Complex;

    #[inline]
    fn conj(self) -> Self {
        Complex64::conj(&self)
    }
    #[inline]
    fn re(self) -> f64 {
        self.re
    }
    #[inline]
    fn im(self) -> f64 {
        self.im
    }
    #[inline]
    fn modulus(self) -> f64 {
        Float::sqrt(self.norm_sqr())
    }
    #[inline]
    fn modulus_sq(self) -> f64 {
        self.norm_sqr()
    }
    #[inline]
    fn from_re(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    #[inline]
    fn from_re_im(re: f64, im: f64) -> Self {
        Complex64::new(re, im)
    }
    #[inline]
    fn scale(self, s: f64) -> Self {
        Complex64::new(self.re * s, self.im * s)
    }
    #[inline]
    fn phase(self) -> Self {
        let m = self.modulus();
        if m == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            self.scale(1.0 / m)
        }
    }
    fn standard_normal<R: RngCore>(rng: &mut R) -> Self {
        Complex64::new(rng::normal(rng), rng::normal(rng))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn phase_of_zero_is_one() {
        assert_eq!(0.0f64.phase(), 1.0);
        assert_eq!(Complex64::zero().phase(), Complex64::one());
    }

    #[test]
    fn complex_phase_has_unit_modulus() {
        let z = Complex64::new(-3.0, 4.0);
        assert!((z.phase().modulus() - 1.0).abs() < 1e-15);
        assert!((z.phase().scale(z.modulus()) - z).modulus() < 1e-12);
    }

    #[test]
    fn normal_samples_are_deterministic_per_seed() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..32 {
            assert_eq!(f64::standard_normal(&mut a), f64::standard_normal(&mut b));
        }
    }
}
