//! Seeded random inputs for sweeps and property checks.
//!
//! Everything is driven by `ChaCha8Rng::seed_from_u64`, so a seed fixes the
//! stream on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::kinematics::{FourMomentum, MAX_MOMENTUM_RATIO};
use crate::matrix::{ComplexMatrix, C64};

/// Smallest sampled `|p|/m`.
pub const MIN_MOMENTUM_RATIO: f64 = 1e-3;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Unit vector uniform on the sphere.
pub fn random_direction<R: Rng>(rng: &mut R) -> [f64; 3] {
    let z: f64 = rng.random_range(-1.0..=1.0);
    let phi: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    let r = (1.0 - z * z).max(0.0).sqrt();
    [r * phi.cos(), r * phi.sin(), z]
}

/// On-shell momentum with uniform direction and `|p|/m` log-uniform in
/// `[1e-3, max_ratio]`.
pub fn random_momentum<R: Rng>(rng: &mut R, m: f64, max_ratio: f64) -> Result<FourMomentum> {
    if !(max_ratio.is_finite() && max_ratio > MIN_MOMENTUM_RATIO && max_ratio <= MAX_MOMENTUM_RATIO) {
        return Err(Error::OutOfRange(format!(
            "|p|/m maximum must lie in ({MIN_MOMENTUM_RATIO}, {MAX_MOMENTUM_RATIO}], got {max_ratio}"
        )));
    }
    let (lo, hi) = (MIN_MOMENTUM_RATIO.ln(), max_ratio.ln());
    let ratio = rng.random_range(lo..hi).exp();
    let n = random_direction(rng);
    FourMomentum::new(m, [m * ratio * n[0], m * ratio * n[1], m * ratio * n[2]])
}

/// `count` momenta from a fresh stream seeded with `seed`.
pub fn random_momenta(seed: u64, count: usize, m: f64, max_ratio: f64) -> Result<Vec<FourMomentum>> {
    let mut r = rng(seed);
    (0..count).map(|_| random_momentum(&mut r, m, max_ratio)).collect()
}

/// Entries with real and imaginary parts uniform in `[-1, 1)`.
pub fn random_complex_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| random_complex(rng))
}

pub fn random_spinor<R: Rng>(rng: &mut R) -> [C64; 4] {
    std::array::from_fn(|_| random_complex(rng))
}

fn random_complex<R: Rng>(rng: &mut R) -> C64 {
    C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}
