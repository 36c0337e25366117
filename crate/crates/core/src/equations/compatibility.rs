//! The homogeneous system on the plane-wave coefficients `(c↑, c↓, d↑, d↓)`
//! imposed by the generalized equation.
//!
//! Two rows are linear in the coefficients. The other two are stated for the
//! daggered coefficients; they are read either after formal conjugation
//! (a 4×4 complex system) or as they stand, which makes them antilinear and
//! the whole system a real-linear map on `ℝ⁸`. Both readings are solved.

use crate::error::{Error, Result};
use crate::matrix::{realify, ComplexMatrix, C64, I, ZERO};

use super::GeneralizedParams;

/// Default relative singular-value cutoff for a nontrivial solution.
pub const DEFAULT_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeCoefficients {
    pub c_up: C64,
    pub c_down: C64,
    pub d_up: C64,
    pub d_down: C64,
}

impl ModeCoefficients {
    pub fn from_slice(v: &[C64]) -> Self {
        Self {
            c_up: v[0],
            c_down: v[1],
            d_up: v[2],
            d_down: v[3],
        }
    }

    pub fn to_array(&self) -> [C64; 4] {
        [self.c_up, self.c_down, self.d_up, self.d_down]
    }

    pub fn is_trivial(&self, tol: f64) -> bool {
        self.to_array().iter().all(|z| z.norm() <= tol)
    }
}

/// Rows 1 and 2 as written; rows 3 and 4 conjugated into undaggered form.
pub fn mode_constraint_matrix(params: &GeneralizedParams) -> ComplexMatrix {
    let bm1 = C64::new(params.b - 1.0, 0.0);
    let e1 = C64::from_polar(params.beta1, params.alpha1);
    let e2 = C64::from_polar(params.beta2, params.alpha2);
    let (e1c, e2c) = (e1.conj(), e2.conj());
    #[rustfmt::skip]
    let rows = [
        bm1,        I * e2,    ZERO,       -I * e1,
        -I * e2,    bm1,       I * e1,     ZERO,
        ZERO,       -I * e1c,  bm1,        -I * e2c,
        I * e1c,    ZERO,      I * e2c,    bm1,
    ];
    ComplexMatrix::from_rows(4, 4, &rows)
}

/// All four rows as printed: the last two act on the conjugated coefficients,
/// so the system is the real-linear map `x ↦ L x + A x*` on `ℝ⁸`.
pub fn mode_constraint_realified(params: &GeneralizedParams) -> crate::matrix::RealLinearOp {
    let bm1 = C64::new(params.b - 1.0, 0.0);
    let e1 = C64::from_polar(params.beta1, params.alpha1);
    let e2 = C64::from_polar(params.beta2, params.alpha2);
    #[rustfmt::skip]
    let linear = [
        bm1,        I * e2,    ZERO,       -I * e1,
        -I * e2,    bm1,       I * e1,     ZERO,
        ZERO,       ZERO,      ZERO,       ZERO,
        ZERO,       ZERO,      ZERO,       ZERO,
    ];
    #[rustfmt::skip]
    let anti = [
        ZERO,       ZERO,      ZERO,       ZERO,
        ZERO,       ZERO,      ZERO,       ZERO,
        ZERO,       I * e1,    bm1,        I * e2,
        -I * e1,    ZERO,      -I * e2,    bm1,
    ];
    realify(
        &ComplexMatrix::from_rows(4, 4, &linear),
        &ComplexMatrix::from_rows(4, 4, &anti),
    )
    .expect("4x4 operands")
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompatibilityReport {
    pub consistent: bool,
    /// Complex dimension of the solution space (conjugated reading).
    pub kernel_dim: usize,
    /// `|β₁² + β₂² − (b − 1)²|`
    pub constraint_gap: f64,
    /// Smallest singular value over `max(1, σ_max)`.
    pub min_singular: f64,
    /// Real dimension of the solution space (printed reading).
    pub realified_kernel_dim: usize,
    pub readings_agree: bool,
}

pub fn compatibility_solve(params: &GeneralizedParams) -> CompatibilityReport {
    compatibility_solve_with(params, DEFAULT_TOL)
}

pub fn compatibility_solve_with(params: &GeneralizedParams, tol: f64) -> CompatibilityReport {
    let system = mode_constraint_matrix(params);
    let sv = system.singular_values();
    let smax = sv[0].max(1.0);
    let kernel_dim = system.kernel_dim(tol);
    let realified_kernel_dim = mode_constraint_realified(params).kernel_dim(tol);
    CompatibilityReport {
        consistent: kernel_dim > 0,
        kernel_dim,
        constraint_gap: params.constraint_gap(),
        min_singular: sv[3] / smax,
        realified_kernel_dim,
        readings_agree: realified_kernel_dim == 2 * kernel_dim,
    }
}

/// Phase locking of the Dirac limit: `Upper` is `c↑ = −ic↓, d↑ = +id↓`,
/// `Lower` is `c↑ = +ic↓, d↑ = −id↓`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegenerationBranch {
    Upper,
    Lower,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DegenerationReport {
    pub consistent: bool,
    pub kernel: Vec<ModeCoefficients>,
    /// Largest violation of each branch's relations over the unit kernel basis.
    pub upper_deviation: f64,
    pub lower_deviation: f64,
    pub branch: Option<DegenerationBranch>,
}

/// Solves the `β₁ = 0` system and identifies which phase locking its
/// solutions obey.
pub fn dirac_degeneration(params: &GeneralizedParams, tol: f64) -> Result<DegenerationReport> {
    if params.beta1.abs() > tol {
        return Err(Error::Precondition(format!(
            "Dirac limit needs beta1 = 0, got {}",
            params.beta1
        )));
    }
    let kernel: Vec<ModeCoefficients> = mode_constraint_matrix(params)
        .kernel_basis(tol)
        .iter()
        .map(|v| ModeCoefficients::from_slice(v))
        .collect();
    let deviation = |s: f64| {
        kernel
            .iter()
            .map(|k| {
                let c = (k.c_up + I * k.c_down * s).norm();
                let d = (k.d_up - I * k.d_down * s).norm();
                c.max(d)
            })
            .fold(0.0, f64::max)
    };
    let (upper, lower) = (deviation(1.0), deviation(-1.0));
    let lock_tol = tol.sqrt();
    let branch = if kernel.is_empty() {
        None
    } else if upper <= lock_tol {
        Some(DegenerationBranch::Upper)
    } else if lower <= lock_tol {
        Some(DegenerationBranch::Lower)
    } else {
        None
    };
    Ok(DegenerationReport {
        consistent: !kernel.is_empty(),
        kernel,
        upper_deviation: upper,
        lower_deviation: lower,
        branch,
    })
}
