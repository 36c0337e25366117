use crate::algebra::{charge_conjugation_matrix, gamma_set};
use crate::kinematics::FourVector;
use crate::matrix::{realify, ComplexMatrix, RealLinearOp, C64};

use super::{EquationParams, GeneralizedParams};

/// Which plane wave the operator acts on: `e^{−ip·x}` or `e^{+ip·x}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Frequency {
    Positive,
    Negative,
}

impl Frequency {
    /// Sign taken by `iγ^μ∂_μ ↦ ±p̂`.
    pub fn sign(self) -> f64 {
        match self {
            Frequency::Positive => 1.0,
            Frequency::Negative => -1.0,
        }
    }
}

/// `p̂ = γ^μ p_μ`
pub fn dirac_op(p: impl Into<FourVector>) -> ComplexMatrix {
    gamma_set().slash(p.into().components())
}

/// `a(±p̂)/m + b𝒞𝒦 − 1` on a single plane wave, realified.
pub fn first_order_op(
    p: impl Into<FourVector>,
    params: &EquationParams,
    freq: Frequency,
) -> RealLinearOp {
    let slash = dirac_op(p).scale_re(freq.sign() * params.a / params.m);
    let linear = &slash - &ComplexMatrix::identity(4);
    let anti = charge_conjugation_matrix().scale_re(params.b);
    realify(&linear, &anti).expect("4x4 operands")
}

/// `a(±p̂)/m − (b − 1)γ⁵𝒞𝒦`, the first-order form behind the Klein–Gordon reduction.
pub fn kg_first_order_op(
    p: impl Into<FourVector>,
    params: &EquationParams,
    freq: Frequency,
) -> RealLinearOp {
    let linear = dirac_op(p).scale_re(freq.sign() * params.a / params.m);
    let g5c = &gamma_set().five * &charge_conjugation_matrix();
    realify(&linear, &g5c.scale_re(-(params.b - 1.0))).expect("4x4 operands")
}

/// `a(±p̂)/m − e^{iα₁}β₁γ⁵𝒞𝒦 + e^{iα₂}β₂`, realified.
pub fn generalized_first_order_op(
    p: impl Into<FourVector>,
    params: &GeneralizedParams,
    freq: Frequency,
) -> RealLinearOp {
    let slash = dirac_op(p).scale_re(freq.sign() * params.a / params.m);
    let mass = ComplexMatrix::identity(4).scale(C64::from_polar(params.beta2, params.alpha2));
    let linear = &slash + &mass;
    let g5c = &gamma_set().five * &charge_conjugation_matrix();
    let anti = g5c.scale(-C64::from_polar(params.beta1, params.alpha1));
    realify(&linear, &anti).expect("4x4 operands")
}

/// Joins the two single-wave operators of one equation into the complex
/// 8×8 operator on `(ψ₊, ψ₋*)`, where `Ψ = ψ₊e^{−ip·x} + ψ₋e^{+ip·x}`:
///
/// ```text
/// [[L₊,  A₊ ],
///  [A₋*, L₋*]]
/// ```
///
/// with `L±`, `A±` the linear and antilinear parts of `plus`/`minus`.
pub fn pair_frequencies(plus: &RealLinearOp, minus: &RealLinearOp) -> ComplexMatrix {
    ComplexMatrix::block2(
        &plus.linear_part(),
        &plus.antilinear_part(),
        &minus.antilinear_part().conj(),
        &minus.linear_part().conj(),
    )
    .expect("4x4 blocks")
}
