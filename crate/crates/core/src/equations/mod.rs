//! Momentum-space operators for the first- and second-order equations, their
//! residuals on constructed spinors, the Majorana-representation real
//! systems, dispersion spectra and the mode-coefficient compatibility system.
//!
//! Plane waves `ψ e^{−ip·x}` turn `iγ^μ∂_μ` into `p̂ = γ^μ p_μ`. Antilinear
//! terms (`𝒞𝒦`) map the `e^{−ip·x}` amplitude onto the `e^{+ip·x}` one, so a
//! coordinate-space equation containing `𝒦` is represented on the pair of
//! amplitudes `(ψ₊, ψ₋*)`; see [`operators::pair_frequencies`].

mod barut;
mod compatibility;
mod dispersion;
mod lambda;
mod majorana;
mod operators;

pub use barut::{barut_factorization_check, barut_identification, klein_gordon_residual};
pub use compatibility::{
    compatibility_solve, compatibility_solve_with, dirac_degeneration, mode_constraint_matrix, mode_constraint_realified,
    CompatibilityReport, DegenerationBranch, DegenerationReport, ModeCoefficients,
};
pub use dispersion::{
    dispersion_roots, first_order_mode_roots, generalized_dispersion_roots, DispersionResult,
    Dispersive, SpectrumRoot,
};
pub use lambda::{all_lambda_residuals, lambda_equation_residuals, lambda_equation_residuals_with};
pub use majorana::{
    generalized_real_pair, generalized_real_pair_check, kg_real_pair, majorana_decouple,
    majorana_frame, sokolik_reduction_check, to_real_pair, DecoupleReport, SokolikReport,
};
pub use operators::{
    dirac_op, first_order_op, generalized_first_order_op, kg_first_order_op, pair_frequencies,
    Frequency,
};

use crate::error::{Error, Result};

/// `(a, b, m)` of the first-order antilinear equation and its relatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquationParams {
    pub a: f64,
    pub b: f64,
    pub m: f64,
}

impl EquationParams {
    pub fn new(a: f64, b: f64, m: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::OutOfRange("a and b must be finite".into()));
        }
        if !(m.is_finite() && m > 0.0) {
            return Err(Error::OutOfRange(format!("mass must be positive, got {m}")));
        }
        Ok(Self { a, b, m })
    }

    pub(crate) fn require_nonzero_a(&self, what: &str) -> Result<()> {
        if self.a == 0.0 {
            return Err(Error::Undefined(format!("{what} needs a != 0")));
        }
        Ok(())
    }
}

/// Parameters of `[ia γ·∂/m − e^{iα₁}β₁ γ⁵𝒞𝒦 + e^{iα₂}β₂] Ψ = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralizedParams {
    pub a: f64,
    pub b: f64,
    pub alpha1: f64,
    pub alpha2: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub m: f64,
}

impl GeneralizedParams {
    pub fn new(
        a: f64,
        b: f64,
        alpha1: f64,
        alpha2: f64,
        beta1: f64,
        beta2: f64,
        m: f64,
    ) -> Result<Self> {
        if ![a, b, alpha1, alpha2, beta1, beta2].iter().all(|x| x.is_finite()) {
            return Err(Error::OutOfRange("generalized parameters must be finite".into()));
        }
        if !(m.is_finite() && m > 0.0) {
            return Err(Error::OutOfRange(format!("mass must be positive, got {m}")));
        }
        Ok(Self {
            a,
            b,
            alpha1,
            alpha2,
            beta1,
            beta2,
            m,
        })
    }

    /// `β₁² + β₂² − (b − 1)²`
    pub fn constraint_gap(&self) -> f64 {
        (self.beta1 * self.beta1 + self.beta2 * self.beta2 - (self.b - 1.0).powi(2)).abs()
    }
}
