use crate::error::Result;
use crate::kinematics::FourVector;
use crate::matrix::ComplexMatrix;

use super::{dirac_op, EquationParams};

/// `(α₂, κ) = (a/2m, m(1 − b²)/2a)`
pub fn barut_identification(params: &EquationParams) -> Result<(f64, f64)> {
    params.require_nonzero_a("Barut identification")?;
    let EquationParams { a, b, m } = *params;
    Ok((a / (2.0 * m), m * (1.0 - b * b) / (2.0 * a)))
}

/// Entrywise deviation between the squared coupled system
/// `(−m/2a)[(a p̂/m − 1)² − b²]` and the Barut-type symbol `p̂ − α₂p² − κ`.
pub fn barut_factorization_check(p: impl Into<FourVector>, params: &EquationParams) -> Result<f64> {
    let (alpha2, kappa) = barut_identification(params)?;
    let p = p.into();
    let EquationParams { a, b, m } = *params;
    let id = ComplexMatrix::identity(4);
    let slash = dirac_op(p);
    let first = &slash.scale_re(a / m) - &id;
    let squared = &(&first * &first) - &id.scale_re(b * b);
    let lhs = squared.scale_re(-m / (2.0 * a));
    let rhs = &slash - &id.scale_re(alpha2 * p.minkowski_sq() + kappa);
    lhs.max_abs_diff(&rhs)
}

/// `|a²∂²/m² + (b − 1)²|` on a plane wave, i.e. `|−a²p²/m² + (b − 1)²|`.
pub fn klein_gordon_residual(p2: f64, params: &EquationParams) -> f64 {
    let EquationParams { a, b, m } = *params;
    (-a * a * p2 / (m * m) + (b - 1.0).powi(2)).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::kinematics::FourMomentum;

    fn params(a: f64, b: f64, m: f64) -> EquationParams {
        EquationParams::new(a, b, m).unwrap()
    }

    #[test]
    fn identification_values() {
        assert_eq!(barut_identification(&params(1.0, 2.0, 1.0)).unwrap(), (0.5, -1.5));
        assert_eq!(barut_identification(&params(1.0, 1.0, 1.0)).unwrap(), (0.5, 0.0));
        assert_eq!(barut_identification(&params(-1.0, 0.0, 2.0)).unwrap(), (-0.25, -1.0));
        assert!(matches!(
            barut_identification(&params(0.0, 2.0, 1.0)),
            Err(Error::Undefined(_))
        ));
    }

    #[test]
    fn factorization_examples() {
        let p = FourMomentum::new(1.0, [0.0, 0.0, 0.75]).unwrap();
        assert!(barut_factorization_check(p, &params(1.0, 2.0, 1.0)).unwrap() < 1e-12);
        let rest = FourMomentum::at_rest(1.5).unwrap();
        assert_eq!(barut_factorization_check(rest, &params(3.0, 0.0, 1.5)).unwrap(), 0.0);
        assert!(barut_factorization_check(p, &params(0.0, 2.0, 1.0)).is_err());
    }

    #[test]
    fn kg_values() {
        assert_eq!(klein_gordon_residual(1.0, &params(-1.0, 2.0, 1.0)), 0.0);
        assert_eq!(klein_gordon_residual(4.0, &params(1.0, 2.0, 1.0)), 3.0);
        for p2 in [-2.0, 0.0, 7.5] {
            assert_eq!(klein_gordon_residual(p2, &params(0.0, 1.0, 1.0)), 0.0);
        }
    }
}
