//! On-shell bradyon momenta, rapidity parameters and the Weyl boosts
//! `Λ_{R,L} = exp(±σ·n φ/2)`.

use crate::algebra::{pauli, sigma_dot};
use crate::error::{Error, Result};
use crate::matrix::{c, ComplexMatrix};

/// Largest accepted `|p|/m`; beyond this `cosh φ` loses all precision.
pub const MAX_MOMENTUM_RATIO: f64 = 1e6;

/// Free contravariant 4-vector `(E, p)`, on-shell or not.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourVector {
    pub e: f64,
    pub p: [f64; 3],
}

impl FourVector {
    pub fn new(e: f64, p: [f64; 3]) -> Self {
        Self { e, p }
    }

    pub fn components(&self) -> [f64; 4] {
        [self.e, self.p[0], self.p[1], self.p[2]]
    }

    /// `p² = E² − |p|²`
    pub fn minkowski_sq(&self) -> f64 {
        self.e * self.e - dot(self.p, self.p)
    }

    /// A representative vector with the given invariant square: at rest
    /// for `s > 0`, along ẑ otherwise.
    pub fn with_square(s: f64) -> Self {
        if s > 0.0 {
            Self::new(s.sqrt(), [0.0; 3])
        } else if s < 0.0 {
            Self::new(0.0, [0.0, 0.0, (-s).sqrt()])
        } else {
            Self::new(1.0, [0.0, 0.0, 1.0])
        }
    }
}

/// On-shell massive momentum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourMomentum {
    e: f64,
    p: [f64; 3],
    m: f64,
}

impl FourMomentum {
    /// On-shell momentum with energy fixed by `E = sqrt(m² + |p|²)`.
    pub fn new(m: f64, p: [f64; 3]) -> Result<Self> {
        if !(m.is_finite() && m > 0.0) {
            return Err(Error::InvalidMomentum(format!("mass must be positive, got {m}")));
        }
        if p.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidMomentum("non-finite 3-momentum".into()));
        }
        let ratio = norm3(p) / m;
        if ratio > MAX_MOMENTUM_RATIO {
            return Err(Error::OutOfRange(format!(
                "|p|/m = {ratio:e} exceeds {MAX_MOMENTUM_RATIO:e}"
            )));
        }
        let e = (m * m + dot(p, p)).sqrt();
        Ok(Self { e, p, m })
    }

    /// Validates a given `(E, p, m)` triple against the mass shell.
    pub fn from_components(e: f64, p: [f64; 3], m: f64, tol: f64) -> Result<Self> {
        let on_shell = Self::new(m, p)?;
        if (on_shell.e - e).abs() > tol * on_shell.e.max(1.0) {
            return Err(Error::InvalidMomentum(format!(
                "E = {e} is off shell (expected {})",
                on_shell.e
            )));
        }
        Ok(on_shell)
    }

    pub fn at_rest(m: f64) -> Result<Self> {
        Self::new(m, [0.0; 3])
    }

    pub fn energy(&self) -> f64 {
        self.e
    }

    pub fn momentum(&self) -> [f64; 3] {
        self.p
    }

    pub fn mass(&self) -> f64 {
        self.m
    }

    pub fn abs_p(&self) -> f64 {
        norm3(self.p)
    }

    pub fn vector(&self) -> FourVector {
        FourVector::new(self.e, self.p)
    }

    /// Polar and azimuthal angle of `p`; `(0, 0)` at rest.
    pub fn direction_angles(&self) -> (f64, f64) {
        let n = boost_params(self).axis;
        (n[2].clamp(-1.0, 1.0).acos(), n[1].atan2(n[0]))
    }
}

impl From<FourMomentum> for FourVector {
    fn from(p: FourMomentum) -> Self {
        p.vector()
    }
}

impl From<&FourMomentum> for FourVector {
    fn from(p: &FourMomentum) -> Self {
        p.vector()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoostParams {
    pub rapidity: f64,
    pub axis: [f64; 3],
}

impl BoostParams {
    /// `m (cosh φ, sinh φ n)`
    pub fn momentum(&self, m: f64) -> FourVector {
        let s = self.rapidity.sinh();
        FourVector::new(
            m * self.rapidity.cosh(),
            [m * s * self.axis[0], m * s * self.axis[1], m * s * self.axis[2]],
        )
    }
}

/// `cosh φ = E/m`, `sinh φ = |p|/m`, `n = p/|p|` (ẑ at rest).
pub fn boost_params(p: &FourMomentum) -> BoostParams {
    let abs_p = p.abs_p();
    let axis = if abs_p == 0.0 {
        [0.0, 0.0, 1.0]
    } else {
        [p.p[0] / abs_p, p.p[1] / abs_p, p.p[2] / abs_p]
    };
    BoostParams {
        rapidity: (abs_p / p.m).asinh(),
        axis,
    }
}

fn half_angle_boost(p: &FourMomentum, sign: f64) -> ComplexMatrix {
    // cosh(φ/2) = sqrt((E+m)/2m), sinh(φ/2) n = p / sqrt(2m(E+m))
    let ch = ((p.e + p.m) / (2.0 * p.m)).sqrt();
    let k = sign / (2.0 * p.m * (p.e + p.m)).sqrt();
    let sp = sigma_dot([k * p.p[0], k * p.p[1], k * p.p[2]]);
    &pauli(0).scale(c(ch, 0.0)) + &sp
}

/// `Λ_R(p ← p̊) = exp(+σ·n φ/2)`
pub fn boost_right(p: &FourMomentum) -> ComplexMatrix {
    half_angle_boost(p, 1.0)
}

/// `Λ_L(p ← p̊) = exp(−σ·n φ/2)`
pub fn boost_left(p: &FourMomentum) -> ComplexMatrix {
    half_angle_boost(p, -1.0)
}

pub(crate) fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn norm3(a: [f64; 3]) -> f64 {
    dot(a, a).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_for_three_quarters() {
        let p = FourMomentum::new(1.0, [0.0, 0.0, 0.75]).unwrap();
        assert!((p.energy() - 1.25).abs() < 1e-15);
        let bp = boost_params(&p);
        assert!((bp.rapidity.cosh() - 1.25).abs() < 1e-15);
        assert!((bp.rapidity.sinh() - 0.75).abs() < 1e-15);
        assert_eq!(bp.axis, [0.0, 0.0, 1.0]);
    }

    #[test]
    fn params_at_rest_use_z_axis() {
        let p = FourMomentum::at_rest(3.0).unwrap();
        let bp = boost_params(&p);
        assert_eq!(bp.rapidity, 0.0);
        assert_eq!(bp.axis, [0.0, 0.0, 1.0]);
        assert!(boost_right(&p).approx_eq(&ComplexMatrix::identity(2), 0.0));
        assert!(boost_left(&p).approx_eq(&ComplexMatrix::identity(2), 0.0));
    }

    #[test]
    fn params_along_x() {
        let p = FourMomentum::new(1.0, [1.0, 0.0, 0.0]).unwrap();
        let bp = boost_params(&p);
        assert!((bp.rapidity.cosh() - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn invalid_inputs() {
        assert!(matches!(FourMomentum::new(0.0, [0.0; 3]), Err(Error::InvalidMomentum(_))));
        assert!(matches!(FourMomentum::new(-1.0, [0.0; 3]), Err(Error::InvalidMomentum(_))));
        assert!(FourMomentum::new(1.0, [f64::NAN, 0.0, 0.0]).is_err());
        assert!(matches!(FourMomentum::new(1.0, [2e6, 0.0, 0.0]), Err(Error::OutOfRange(_))));
        assert!(FourMomentum::from_components(1.3, [0.0, 0.0, 0.75], 1.0, 1e-10).is_err());
        assert!(FourMomentum::from_components(1.25, [0.0, 0.0, 0.75], 1.0, 1e-10).is_ok());
    }

    #[test]
    fn z_boost_is_diagonal() {
        let p = FourMomentum::new(1.0, [0.0, 0.0, 0.75]).unwrap();
        let r = boost_right(&p);
        let s = 2f64.sqrt();
        let expected = ComplexMatrix::diag(&[c(s, 0.0), c(1.0 / s, 0.0)]);
        assert!(r.approx_eq(&expected, 1e-15));
    }

    #[test]
    fn with_square_has_the_right_invariant() {
        for s in [-3.0, 0.0, 2.5] {
            assert!((FourVector::with_square(s).minkowski_sq() - s).abs() < 1e-15);
        }
    }
}
