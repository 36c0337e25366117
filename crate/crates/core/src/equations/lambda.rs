use crate::algebra::charge_conjugation_matrix;
use crate::kinematics::FourMomentum;
use crate::matrix::{norm, realify, ComplexMatrix, C64, I};
use crate::spinors::{make_lambda_with, Conjugacy, Direction, Helicity, HelicityPairing};

use super::{dirac_op, EquationParams};

/// Residual norms of the two momentum-space equations for `λ^{S}` (or `λ^{A}`):
///
/// ```text
/// ia(p̂/m) λ_↑ − (b𝒞𝒦 ∓ 1) λ_↓ = 0
/// ia(p̂/m) λ_↓ + (b𝒞𝒦 ∓ 1) λ_↑ = 0
/// ```
///
/// with `−1` for S and `+1` for A. The spinors are built in the helicity
/// basis of `p` with the default label pairing.
pub fn lambda_equation_residuals(
    p: &FourMomentum,
    params: &EquationParams,
    kind: Conjugacy,
) -> [f64; 2] {
    lambda_equation_residuals_with(p, params, kind, Direction::of(p), HelicityPairing::default())
}

pub fn lambda_equation_residuals_with(
    p: &FourMomentum,
    params: &EquationParams,
    kind: Conjugacy,
    dir: Direction,
    pairing: HelicityPairing,
) -> [f64; 2] {
    let up = make_lambda_with(Helicity::Up, kind, p, dir, pairing).components;
    let down = make_lambda_with(Helicity::Down, kind, p, dir, pairing).components;

    let kinetic = dirac_op(p).scale(I * (params.a / params.m));
    let unit = match kind {
        Conjugacy::S => -1.0,
        Conjugacy::A => 1.0,
    };
    // b𝒞𝒦 ∓ 1 goes through the realified form; it is not C-linear.
    let mass_term = realify(
        &ComplexMatrix::identity(4).scale_re(unit),
        &charge_conjugation_matrix().scale_re(params.b),
    )
    .expect("4x4 operands");

    let residual = |moving: &[C64; 4], other: &[C64; 4], sign: f64| {
        let k = kinetic.apply(moving).expect("4x4 action");
        let m = mass_term.apply(other);
        let r: Vec<C64> = (0..4).map(|i| k[i] + m[i] * sign).collect();
        norm(&r)
    };
    [residual(&up, &down, -1.0), residual(&down, &up, 1.0)]
}

/// Residuals of all four equations, S pair first.
pub fn all_lambda_residuals(p: &FourMomentum, params: &EquationParams) -> [f64; 4] {
    let [m1, m2] = lambda_equation_residuals(p, params, Conjugacy::S);
    let [m3, m4] = lambda_equation_residuals(p, params, Conjugacy::A);
    [m1, m2, m3, m4]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_parameters_vanish() {
        let p = FourMomentum::new(1.0, [0.3, 0.1, -0.4]).unwrap();
        let params = EquationParams::new(0.0, 1.0, 1.0).unwrap();
        for kind in Conjugacy::BOTH {
            // (b𝒞𝒦 − 1)λ^S = (b − 1)λ^S, (b𝒞𝒦 + 1)λ^A = (1 − b)λ^A
            for r in lambda_equation_residuals(&p, &params, kind) {
                assert!(r < 1e-15, "{r}");
            }
        }
    }
}
