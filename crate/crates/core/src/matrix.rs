//! Small dense complex matrices and the realified form of antilinear operators.
//!
//! Every representation object in this crate is a 2×2, 4×4 or 8×8 complex
//! matrix. Storage and the heavier numerics (LU determinant, SVD) are
//! delegated to `nalgebra`; this module adds shape-checked products and the
//! handful of helpers the spinor code needs.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use nalgebra::{DMatrix, SMatrix};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Shorthand for a complex literal.
#[inline]
pub const fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Dense complex matrix.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix(DMatrix<C64>);

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self(DMatrix::zeros(rows, cols))
    }

    pub fn identity(n: usize) -> Self {
        Self(DMatrix::identity(n, n))
    }

    /// Builds a matrix from entries listed row by row.
    ///
    /// Panics if `entries.len() != rows * cols`.
    pub fn from_rows(rows: usize, cols: usize, entries: &[C64]) -> Self {
        Self(DMatrix::from_row_slice(rows, cols, entries))
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl FnMut(usize, usize) -> C64) -> Self {
        Self(DMatrix::from_fn(rows, cols, f))
    }

    pub fn diag(entries: &[C64]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { entries[i] } else { ZERO })
    }

    /// Assembles `[[a, b], [c, d]]` from four square blocks of equal size.
    pub fn block2(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self> {
        let n = a.rows();
        for blk in [a, b, c, d] {
            if blk.shape() != (n, n) {
                return Err(Error::ShapeMismatch {
                    op: "block2",
                    left: a.shape(),
                    right: blk.shape(),
                });
            }
        }
        Ok(Self::from_fn(2 * n, 2 * n, |i, j| {
            let blk = match (i < n, j < n) {
                (true, true) => a,
                (true, false) => b,
                (false, true) => c,
                (false, false) => d,
            };
            blk.0[(i % n, j % n)]
        }))
    }

    /// Extracts the square block `(bi, bj)` of side `n`.
    pub fn block(&self, bi: usize, bj: usize, n: usize) -> Self {
        Self(self.0.view((bi * n, bj * n), (n, n)).into_owned())
    }

    pub fn rows(&self) -> usize {
        self.0.nrows()
    }

    pub fn cols(&self) -> usize {
        self.0.ncols()
    }

    pub fn shape(&self) -> (usize, usize) {
        self.0.shape()
    }

    pub fn get(&self, i: usize, j: usize) -> Option<C64> {
        self.0.get((i, j)).copied()
    }

    pub fn as_nalgebra(&self) -> &DMatrix<C64> {
        &self.0
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols() != rhs.rows() {
            return Err(Error::ShapeMismatch {
                op: "mul",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(Self(&self.0 * &rhs.0))
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.same_shape("add", rhs)?;
        Ok(Self(&self.0 + &rhs.0))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.same_shape("sub", rhs)?;
        Ok(Self(&self.0 - &rhs.0))
    }

    fn same_shape(&self, op: &'static str, rhs: &Self) -> Result<()> {
        if self.shape() != rhs.shape() {
            return Err(Error::ShapeMismatch {
                op,
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(())
    }

    pub fn scale(&self, z: C64) -> Self {
        Self(&self.0 * z)
    }

    pub fn scale_re(&self, x: f64) -> Self {
        self.scale(c(x, 0.0))
    }

    pub fn conj(&self) -> Self {
        Self(self.0.map(|z| z.conj()))
    }

    pub fn transpose(&self) -> Self {
        Self(self.0.transpose())
    }

    pub fn dagger(&self) -> Self {
        Self(self.0.adjoint())
    }

    pub fn trace(&self) -> C64 {
        self.0.trace()
    }

    pub fn det(&self) -> Result<C64> {
        if !self.0.is_square() {
            return Err(Error::ShapeMismatch {
                op: "det",
                left: self.shape(),
                right: self.shape(),
            });
        }
        Ok(self.0.clone().determinant())
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.0.is_square() {
            return Err(Error::ShapeMismatch {
                op: "inverse",
                left: self.shape(),
                right: self.shape(),
            });
        }
        self.0.clone().try_inverse().map(Self).ok_or(Error::Singular)
    }

    /// `[A, B] = AB - BA`
    pub fn commutator(&self, rhs: &Self) -> Result<Self> {
        self.checked_mul(rhs)?.checked_sub(&rhs.checked_mul(self)?)
    }

    /// `{A, B} = AB + BA`
    pub fn anticommutator(&self, rhs: &Self) -> Result<Self> {
        self.checked_mul(rhs)?.checked_add(&rhs.checked_mul(self)?)
    }

    pub fn apply(&self, v: &[C64]) -> Result<Vec<C64>> {
        if v.len() != self.cols() {
            return Err(Error::ShapeMismatch {
                op: "apply",
                left: self.shape(),
                right: (v.len(), 1),
            });
        }
        Ok((0..self.rows())
            .map(|i| (0..self.cols()).map(|j| self.0[(i, j)] * v[j]).sum())
            .collect())
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise modulus of `self - rhs`.
    pub fn max_abs_diff(&self, rhs: &Self) -> Result<f64> {
        Ok(self.checked_sub(rhs)?.max_abs())
    }

    pub fn approx_eq(&self, rhs: &Self, tol: f64) -> bool {
        self.max_abs_diff(rhs).is_ok_and(|d| d <= tol)
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.max_abs() <= tol
    }

    /// Singular values in descending order.
    pub fn singular_values(&self) -> Vec<f64> {
        let mut sv: Vec<f64> = self.0.clone().singular_values().iter().copied().collect();
        sv.sort_by(|a, b| b.total_cmp(a));
        sv
    }

    /// Number of singular values below `rel_tol * max(1, σ_max)`.
    pub fn kernel_dim(&self, rel_tol: f64) -> usize {
        let sv = self.singular_values();
        let cutoff = rel_tol * sv.first().copied().unwrap_or(0.0).max(1.0);
        let rank = sv.iter().filter(|&&s| s > cutoff).count();
        self.cols() - rank
    }

    /// Orthonormal basis of the numerical null space, same cutoff as [`kernel_dim`](Self::kernel_dim).
    pub fn kernel_basis(&self, rel_tol: f64) -> Vec<Vec<C64>> {
        let n = self.cols();
        // Square up so the SVD always yields a full right-singular basis.
        let padded = if self.rows() < n {
            let mut m = DMatrix::zeros(n, n);
            m.view_mut((0, 0), self.shape()).copy_from(&self.0);
            m
        } else {
            self.0.clone()
        };
        let svd = padded.svd(false, true);
        let v_t = svd.v_t.expect("requested V^H");
        let smax = svd.singular_values.iter().copied().fold(0.0, f64::max);
        let cutoff = rel_tol * smax.max(1.0);
        svd.singular_values
            .iter()
            .enumerate()
            .filter(|(_, &s)| s <= cutoff)
            .map(|(k, _)| (0..n).map(|j| v_t[(k, j)].conj()).collect())
            .collect()
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows(), self.cols())?;
        for i in 0..self.rows() {
            write!(f, "  ")?;
            for j in 0..self.cols() {
                let z = self.0[(i, j)];
                write!(f, "{:+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, idx: (usize, usize)) -> &C64 {
        &self.0[idx]
    }
}

// The operator forms panic on non-conformable shapes, like nalgebra itself.
// Use the `checked_*` methods where shapes come from outside.

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.checked_mul(rhs).expect("non-conformable matrix product")
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.checked_add(rhs).expect("matrix sum of different shapes")
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.checked_sub(rhs).expect("matrix difference of different shapes")
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn neg(self) -> ComplexMatrix {
        ComplexMatrix(-&self.0)
    }
}

/// Euclidean norm of a complex vector.
pub fn norm(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Largest entrywise modulus of `a - b`.
pub fn max_abs_diff(a: &[C64], b: &[C64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

pub fn conj_vec(v: &[C64]) -> Vec<C64> {
    v.iter().map(|z| z.conj()).collect()
}

pub type Real8 = SMatrix<f64, 8, 8>;

/// An R-linear map on C⁴ written as an 8×8 real matrix acting on
/// `(Re ψ₁..₄, Im ψ₁..₄)`.
///
/// Any such map splits uniquely as `ψ ↦ Lψ + Aψ*` with `L`, `A` complex 4×4.
#[derive(Clone, Debug, PartialEq)]
pub struct RealLinearOp(Real8);

impl RealLinearOp {
    pub fn from_matrix(m: Real8) -> Self {
        Self(m)
    }

    pub fn matrix(&self) -> &Real8 {
        &self.0
    }

    pub fn identity() -> Self {
        Self(Real8::identity())
    }

    pub fn zero() -> Self {
        Self(Real8::zeros())
    }

    /// Multiplication by `i`, realified.
    pub fn mult_by_i() -> Self {
        let mut m = Real8::zeros();
        for k in 0..4 {
            m[(k, 4 + k)] = -1.0;
            m[(4 + k, k)] = 1.0;
        }
        Self(m)
    }

    /// Linear part `L = (M - JMJ)/2`.
    pub fn linear_part(&self) -> ComplexMatrix {
        let j = Self::mult_by_i().0;
        let l = (self.0 - j * self.0 * j) * 0.5;
        // [[Lr, -Li], [Li, Lr]]
        ComplexMatrix::from_fn(4, 4, |r, s| c(l[(r, s)], l[(4 + r, s)]))
    }

    /// Antilinear part `A = (M + JMJ)/2`.
    pub fn antilinear_part(&self) -> ComplexMatrix {
        let j = Self::mult_by_i().0;
        let a = (self.0 + j * self.0 * j) * 0.5;
        // [[Ar, Ai], [Ai, -Ar]]
        ComplexMatrix::from_fn(4, 4, |r, s| c(a[(r, s)], a[(4 + r, s)]))
    }

    pub fn apply(&self, psi: &[C64; 4]) -> [C64; 4] {
        let mut x = nalgebra::SVector::<f64, 8>::zeros();
        for k in 0..4 {
            x[k] = psi[k].re;
            x[4 + k] = psi[k].im;
        }
        let y = self.0 * x;
        std::array::from_fn(|k| c(y[k], y[4 + k]))
    }

    pub fn compose(&self, rhs: &Self) -> Self {
        Self(self.0 * rhs.0)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self(self.0 + rhs.0)
    }

    pub fn scale(&self, x: f64) -> Self {
        Self(self.0 * x)
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        (self.0 - rhs.0).amax()
    }

    pub fn max_abs(&self) -> f64 {
        self.0.amax()
    }

    /// Largest entry of `[M, J]`; zero for complex-linear maps.
    pub fn commutator_with_i(&self) -> f64 {
        let j = Self::mult_by_i().0;
        (self.0 * j - j * self.0).amax()
    }

    /// Largest entry of `{M, J}`; zero for complex-antilinear maps.
    pub fn anticommutator_with_i(&self) -> f64 {
        let j = Self::mult_by_i().0;
        (self.0 * j + j * self.0).amax()
    }

    /// Real dimension of the numerical kernel (relative cutoff as in
    /// [`ComplexMatrix::kernel_dim`]).
    pub fn kernel_dim(&self, rel_tol: f64) -> usize {
        let sv = self.0.singular_values();
        let smax = sv.iter().copied().fold(0.0, f64::max);
        let cutoff = rel_tol * smax.max(1.0);
        sv.iter().filter(|&&s| s <= cutoff).count()
    }
}

/// Realification of `ψ ↦ linear·ψ + antilinear·ψ*` for 4×4 inputs.
pub fn realify(linear: &ComplexMatrix, antilinear: &ComplexMatrix) -> Result<RealLinearOp> {
    for m in [linear, antilinear] {
        if m.shape() != (4, 4) {
            return Err(Error::ShapeMismatch {
                op: "realify",
                left: (4, 4),
                right: m.shape(),
            });
        }
    }
    let mut out = Real8::zeros();
    for r in 0..4 {
        for s in 0..4 {
            let l = linear[(r, s)];
            let a = antilinear[(r, s)];
            out[(r, s)] = l.re + a.re;
            out[(r, 4 + s)] = -l.im + a.im;
            out[(4 + r, s)] = l.im + a.im;
            out[(4 + r, 4 + s)] = l.re - a.re;
        }
    }
    Ok(RealLinearOp(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(seed: u64) -> ComplexMatrix {
        // cheap deterministic fill; proptest covers the random cases
        ComplexMatrix::from_fn(4, 4, |i, j| {
            let t = (seed as f64 + 1.0) * (i as f64 * 4.0 + j as f64 + 0.5);
            c(t.sin(), (1.7 * t).cos())
        })
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let a = ComplexMatrix::identity(2);
        let b = ComplexMatrix::identity(4);
        assert!(matches!(a.checked_mul(&b), Err(Error::ShapeMismatch { .. })));
        assert!(a.checked_add(&b).is_err());
        assert!(realify(&a, &b).is_err());
        assert!(ComplexMatrix::zeros(2, 3).det().is_err());
        assert!(a.apply(&[ONE; 3]).is_err());
    }

    #[test]
    fn block_roundtrip() {
        let a = ComplexMatrix::diag(&[ONE, I]);
        let z = ComplexMatrix::zeros(2, 2);
        let m = ComplexMatrix::block2(&a, &z, &z, &a.conj()).unwrap();
        assert_eq!(m.block(0, 0, 2), a);
        assert_eq!(m.block(1, 1, 2), a.conj());
        assert!(ComplexMatrix::block2(&a, &z, &z, &ComplexMatrix::identity(3)).is_err());
    }

    #[test]
    fn realify_identity_and_conjugation() {
        let id = ComplexMatrix::identity(4);
        let zero = ComplexMatrix::zeros(4, 4);
        assert_eq!(realify(&id, &zero).unwrap().matrix(), &Real8::identity());
        let conj = realify(&zero, &id).unwrap();
        let out = conj.apply(&[c(1.0, 2.0), ZERO, ZERO, ZERO]);
        assert_eq!(out, [c(1.0, -2.0), ZERO, ZERO, ZERO]);
    }

    #[test]
    fn split_recovers_parts() {
        let (l, a) = (sample(1), sample(2));
        let op = realify(&l, &a).unwrap();
        assert!(op.linear_part().approx_eq(&l, 1e-14));
        assert!(op.antilinear_part().approx_eq(&a, 1e-14));
    }

    #[test]
    fn kernel_of_rank_deficient_matrix() {
        let m = ComplexMatrix::diag(&[ONE, ZERO, c(2.0, 0.0), ZERO]);
        assert_eq!(m.kernel_dim(1e-12), 2);
        let basis = m.kernel_basis(1e-12);
        assert_eq!(basis.len(), 2);
        for v in basis {
            assert!(norm(&m.apply(&v).unwrap()) < 1e-14);
        }
    }
}
