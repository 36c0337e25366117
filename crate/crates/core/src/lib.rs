//! Numerical workbench for the `(1/2,0)⊕(0,1/2)` representation.
//!
//! The crate builds the representation objects (Pauli and gamma matrices,
//! the Wigner operator, Weyl boosts, Dirac and self/anti-self charge-conjugate
//! spinors) in one fixed basis, see [`algebra::CONVENTION`], and checks a
//! family of first- and second-order wave equations built from them by
//! residuals, determinant roots and kernel dimensions.
//!
//! Antilinear operators are handled by realification: a map
//! `ψ ↦ Lψ + Aψ*` on `ℂ⁴` becomes an 8×8 real matrix, [`RealLinearOp`].
//!
//! ```
//! use spinlab::equations::{dispersion_roots, EquationParams};
//!
//! let params = EquationParams::new(1.0, 2.0, 1.0).unwrap();
//! let spectrum = dispersion_roots(&params).unwrap();
//! assert_eq!(spectrum.roots.len(), 1);
//! assert!((spectrum.roots[0].p2 - 1.0).abs() < 1e-10);
//! assert_eq!(spectrum.roots[0].multiplicity, 4);
//! ```

pub mod algebra;
pub mod equations;
pub mod error;
pub mod kinematics;
pub mod matrix;
pub mod sampling;
pub mod spinors;

pub use algebra::{BasisConvention, CONVENTION};
pub use equations::{EquationParams, GeneralizedParams};
pub use error::{Error, Result};
pub use kinematics::{FourMomentum, FourVector};
pub use matrix::{realify, ComplexMatrix, RealLinearOp, C64};
pub use spinors::{Bispinor, Conjugacy, Helicity};
