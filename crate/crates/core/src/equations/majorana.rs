//! Majorana-representation real systems.
//!
//! With `U` from [`majorana_transform`](crate::algebra::majorana_transform),
//! `Uγ^μU†` is purely imaginary and `U𝒞Uᵀ = −1`, so an equation containing
//! `𝒞𝒦` becomes a pair of real equations for `Ψ^{MR} = Ψ₁ + iΨ₂`. A real field
//! `Ψ_k(x) = f_k e^{−ip·x} + c.c.` is fixed by its amplitude `f_k`, and
//!
//! ```text
//! f₁ = (Uψ₊ + U*ψ₋*)/2,    f₂ = (Uψ₊ − U*ψ₋*)/2i
//! ```
//!
//! so conjugating the paired operator of
//! [`pair_frequencies`](super::pair_frequencies) by this map yields the real
//! system in `(Ψ₁, Ψ₂)`, as an ordinary complex 8×8 matrix on `(f₁, f₂)`.

use crate::algebra::{gamma_set, majorana_transform};
use crate::error::{Error, Result};
use crate::kinematics::{FourMomentum, FourVector};
use crate::matrix::{ComplexMatrix, I};

use super::operators::{first_order_op, generalized_first_order_op, kg_first_order_op};
use super::{dirac_op, pair_frequencies, EquationParams, Frequency, GeneralizedParams};

/// `(T, T⁻¹)` with `(f₁, f₂) = T (ψ₊, ψ₋*)`.
pub fn majorana_frame() -> (ComplexMatrix, ComplexMatrix) {
    let (u, ud) = majorana_transform();
    let uc = u.conj();
    let t = ComplexMatrix::block2(&u, &uc, &u.scale(-I), &uc.scale(I))
        .expect("4x4 blocks")
        .scale_re(0.5);
    let ut = u.transpose();
    let t_inv = ComplexMatrix::block2(&ud, &ud.scale(I), &ut, &ut.scale(-I)).expect("4x4 blocks");
    (t, t_inv)
}

/// Real system on `(Ψ₁, Ψ₂)` obtained from a paired operator.
pub fn to_real_pair(paired: &ComplexMatrix) -> ComplexMatrix {
    let (t, t_inv) = majorana_frame();
    &(&t * paired) * &t_inv
}

fn mr(m: &ComplexMatrix) -> ComplexMatrix {
    let (u, ud) = majorana_transform();
    &(&u * m) * &ud
}

fn pair(a: &ComplexMatrix, b: &ComplexMatrix, c: &ComplexMatrix, d: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::block2(a, b, c, d).expect("4x4 blocks")
}

/// The Klein–Gordon-family real pair as printed, in the Majorana representation:
///
/// ```text
/// ia γ·∂/m Ψ₁ − i(b−1)γ⁵ Ψ₂ = 0
/// ia γ·∂/m Ψ₂ − i(b−1)γ⁵ Ψ₁ = 0
/// ```
pub fn kg_real_pair(p: impl Into<FourVector>, params: &EquationParams) -> ComplexMatrix {
    let kin = mr(&dirac_op(p)).scale_re(params.a / params.m);
    let off = mr(&gamma_set().five).scale(I * -(params.b - 1.0));
    pair(&kin, &off, &off, &kin)
}

/// The generalized real pair as printed (for `e^{iα₂}β₂` real):
///
/// ```text
/// [ia γ·∂/m + iβ₁ sinα₁ γ⁵ + β₂] Ψ₁ − iβ₁ cosα₁ γ⁵ Ψ₂ = 0
/// [ia γ·∂/m − iβ₁ sinα₁ γ⁵ + β₂] Ψ₂ − iβ₁ cosα₁ γ⁵ Ψ₁ = 0
/// ```
///
/// `β₂` enters as `β₂ cos α₂`, which is exact when `α₂ ∈ {0, π}`.
pub fn generalized_real_pair(p: impl Into<FourVector>, params: &GeneralizedParams) -> ComplexMatrix {
    let id = ComplexMatrix::identity(4);
    let kin = mr(&dirac_op(p)).scale_re(params.a / params.m);
    let g5 = mr(&gamma_set().five);
    let mass = id.scale_re(params.beta2 * params.alpha2.cos());
    let (s, c) = params.alpha1.sin_cos();
    let rot = g5.scale(I * (params.beta1 * s));
    let off = g5.scale(I * -(params.beta1 * c));
    pair(&(&(&kin + &rot) + &mass), &off, &off, &(&(&kin - &rot) + &mass))
}

/// Outcome of [`majorana_decouple`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecoupleReport {
    /// max deviation from the printed `(φ, χ)` set, `e^{−ip·x}` taken as positive
    pub max_deviation: f64,
    /// the same with the roles of the two plane waves exchanged
    pub max_deviation_swapped: f64,
    /// largest entry of the Majorana-frame `Im(iγ^μ)`; zero for a real kinetic term
    pub kinetic_imaginary_part: f64,
    /// largest entry of the `φ`–`χ` coupling blocks
    pub coupling: f64,
    pub samples: usize,
}

fn first_order_paired(p: FourVector, params: &EquationParams) -> ComplexMatrix {
    pair_frequencies(
        &first_order_op(p, params, Frequency::Positive),
        &first_order_op(p, params, Frequency::Negative),
    )
}

/// The printed coupled set in `(φ, χ) = (Ψ₁ + Ψ₂, Ψ₁ − Ψ₂)`:
/// `[a iγ·∂/m − 1]φ − bχ = 0`, `[a iγ·∂/m − 1]χ − bφ = 0`.
fn printed_coupled_set(p: FourVector, params: &EquationParams) -> ComplexMatrix {
    let id = ComplexMatrix::identity(4);
    let diag = &mr(&dirac_op(p)).scale_re(params.a / params.m) - &id;
    let off = id.scale_re(-params.b);
    pair(&diag, &off, &off, &diag)
}

/// Rewrites a real pair in `(Ψ₁, Ψ₂)` into `(φ, χ)` variables with rows
/// recombined the same way: `W R W⁻¹`, `W = [[1, 1], [1, −1]]`.
fn to_phi_chi(real_pair: &ComplexMatrix) -> ComplexMatrix {
    let id = ComplexMatrix::identity(4);
    let w = pair(&id, &id, &id, &id.scale_re(-1.0));
    let w_inv = w.scale_re(0.5);
    &(&w * real_pair) * &w_inv
}

/// Checks that `[a iγ·∂/m + b𝒞𝒦 − 1]Ψ = 0`, carried to the Majorana
/// representation and split into real and imaginary parts, is the printed
/// coupled set in `(φ, χ)`.
pub fn majorana_decouple(params: &EquationParams, momenta: &[FourMomentum]) -> Result<DecoupleReport> {
    params.require_nonzero_a("Majorana decoupling")?;
    let mut report = DecoupleReport {
        max_deviation: 0.0,
        max_deviation_swapped: 0.0,
        kinetic_imaginary_part: 0.0,
        coupling: 0.0,
        samples: momenta.len(),
    };
    for p in momenta {
        let v = p.vector();
        let derived = to_phi_chi(&to_real_pair(&first_order_paired(v, params)));
        report.max_deviation = report
            .max_deviation
            .max(derived.max_abs_diff(&printed_coupled_set(v, params))?);
        report.coupling = report
            .coupling
            .max(derived.block(0, 1, 4).max_abs())
            .max(derived.block(1, 0, 4).max_abs());

        // e^{+ip·x} as the reference wave is the same construction at −p
        let flipped = FourVector::new(-v.e, [-v.p[0], -v.p[1], -v.p[2]]);
        let swapped = to_phi_chi(&to_real_pair(&first_order_paired(flipped, params)));
        report.max_deviation_swapped = report
            .max_deviation_swapped
            .max(swapped.max_abs_diff(&printed_coupled_set(flipped, params))?);

        let kinetic = mr(&dirac_op(v));
        let im = kinetic.scale(I).as_nalgebra().iter().map(|z| z.im.abs()).fold(0.0, f64::max);
        report.kinetic_imaginary_part = report.kinetic_imaginary_part.max(im);
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SokolikReport {
    /// derived real pair vs the printed one
    pub pair_deviation: f64,
    /// summed rows vs `a(p̂/m + iγ⁵)` acting on `φ = Ψ₁ + Ψ₂` alone
    pub closure_deviation: f64,
    /// `R² − (a²p²/m² − (b−1)²)·1`, i.e. the Klein–Gordon operator
    pub klein_gordon_deviation: f64,
    pub samples: usize,
}

impl SokolikReport {
    pub fn max_deviation(&self) -> f64 {
        self.pair_deviation
            .max(self.closure_deviation)
            .max(self.klein_gordon_deviation)
    }
}

/// For `a = 1 − b`, checks that the real pair of
/// `[ia γ·∂/m − (b−1)γ⁵𝒞𝒦]Ψ = 0` closes on `φ = Ψ₁ + Ψ₂` as the
/// Sokolik-type equation `[iγ·∂/m + iγ⁵]φ = 0`, and that iterating the
/// pair gives the Klein–Gordon operator.
pub fn sokolik_reduction_check(
    params: &EquationParams,
    momenta: &[FourMomentum],
    tol: f64,
) -> Result<SokolikReport> {
    if (params.a - (1.0 - params.b)).abs() > tol * params.a.abs().max(1.0) {
        return Err(Error::Precondition(format!(
            "Sokolik branch needs a = 1 - b (a = {}, b = {})",
            params.a, params.b
        )));
    }
    let EquationParams { a, b, m } = *params;
    let mut report = SokolikReport {
        pair_deviation: 0.0,
        closure_deviation: 0.0,
        klein_gordon_deviation: 0.0,
        samples: momenta.len(),
    };
    let id8 = ComplexMatrix::identity(8);
    for p in momenta {
        let v = p.vector();
        let paired = pair_frequencies(
            &kg_first_order_op(v, params, Frequency::Positive),
            &kg_first_order_op(v, params, Frequency::Negative),
        );
        let derived = to_real_pair(&paired);
        report.pair_deviation = report
            .pair_deviation
            .max(derived.max_abs_diff(&kg_real_pair(v, params))?);

        let sokolik = (&mr(&dirac_op(v)).scale_re(1.0 / m) + &mr(&gamma_set().five).scale(I)).scale_re(a);
        // sum of the two equations, as coefficients of Ψ₁ and of Ψ₂
        let on_psi1 = &derived.block(0, 0, 4) + &derived.block(1, 0, 4);
        let on_psi2 = &derived.block(0, 1, 4) + &derived.block(1, 1, 4);
        report.closure_deviation = report
            .closure_deviation
            .max(on_psi1.max_abs_diff(&sokolik)?)
            .max(on_psi2.max_abs_diff(&sokolik)?);

        let kg = a * a * v.minkowski_sq() / (m * m) - (b - 1.0).powi(2);
        let squared = &derived * &derived;
        report.klein_gordon_deviation = report
            .klein_gordon_deviation
            .max(squared.max_abs_diff(&id8.scale_re(kg))?);
    }
    Ok(report)
}

/// Max deviation between the generalized equation carried to the Majorana
/// representation and the printed real pair. Needs `α₂ ∈ {0, π}`.
pub fn generalized_real_pair_check(params: &GeneralizedParams, momenta: &[FourMomentum]) -> Result<f64> {
    if params.alpha2.sin().abs() > 1e-12 {
        return Err(Error::Precondition(
            "printed real pair assumes a real e^{i alpha2} beta2".into(),
        ));
    }
    let mut worst: f64 = 0.0;
    for p in momenta {
        let v = p.vector();
        let paired = pair_frequencies(
            &generalized_first_order_op(v, params, Frequency::Positive),
            &generalized_first_order_op(v, params, Frequency::Negative),
        );
        let derived = to_real_pair(&paired);
        worst = worst.max(derived.max_abs_diff(&generalized_real_pair(v, params))?);
    }
    Ok(worst)
}
