//! Rest-frame helicity spinors, the Ryder–Burgard relation, and the Dirac and
//! second-type (self/anti-self charge-conjugate) 4-spinors.
//!
//! Rest spinors use the half-angle phase convention
//!
//! ```text
//! φ^{+½} = ( cos(θ/2) e^{−iφ/2},  sin(θ/2) e^{+iφ/2})
//! φ^{−½} = (−sin(θ/2) e^{−iφ/2},  cos(θ/2) e^{+iφ/2})
//! ```
//!
//! under which `Θ[φ^+]* = φ^−`, `Θ[φ^−]* = −φ^+` and `Ξ⁻¹[φ^h]* = φ^h` hold
//! identically in the angles.

use crate::algebra::{apply_charge_conjugation, gamma_set, wigner_theta};
use crate::error::{Error, Result};
use crate::kinematics::{boost_left, boost_right, FourMomentum};
use crate::matrix::{conj_vec, max_abs_diff, norm, ComplexMatrix, C64, I};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Helicity {
    Up,
    Down,
}

impl Helicity {
    pub const BOTH: [Helicity; 2] = [Helicity::Up, Helicity::Down];

    /// `h = ±½`
    pub fn value(self) -> f64 {
        match self {
            Helicity::Up => 0.5,
            Helicity::Down => -0.5,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Helicity::Up => Helicity::Down,
            Helicity::Down => Helicity::Up,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Chirality {
    Left,
    Right,
}

/// Quantization direction `n̂ = (sinθ cosφ, sinθ sinφ, cosθ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction {
    pub theta: f64,
    pub phi: f64,
}

impl Direction {
    pub const Z: Direction = Direction { theta: 0.0, phi: 0.0 };

    pub fn new(theta: f64, phi: f64) -> Self {
        Self { theta, phi }
    }

    /// Direction of the 3-momentum (ẑ at rest), i.e. the helicity basis.
    pub fn of(p: &FourMomentum) -> Self {
        let (theta, phi) = p.direction_angles();
        Self { theta, phi }
    }

    pub fn unit_vector(&self) -> [f64; 3] {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        [st * cp, st * sp, ct]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeylSpinor {
    pub components: [C64; 2],
    pub helicity: Helicity,
    pub chirality: Chirality,
    pub direction: Direction,
}

/// Unit-norm helicity eigenstate of `σ·n̂` at rest.
pub fn rest_spinor(h: Helicity, dir: Direction, chirality: Chirality) -> WeylSpinor {
    let (s, ct) = (dir.theta / 2.0).sin_cos();
    let lo = C64::from_polar(1.0, -dir.phi / 2.0);
    let hi = C64::from_polar(1.0, dir.phi / 2.0);
    let components = match h {
        Helicity::Up => [lo * ct, hi * s],
        Helicity::Down => [-lo * s, hi * ct],
    };
    WeylSpinor {
        components,
        helicity: h,
        chirality,
        direction: dir,
    }
}

/// `Ξ = diag(e^{iφ}, e^{−iφ})`
pub fn xi_matrix(phi_az: f64) -> ComplexMatrix {
    ComplexMatrix::diag(&[C64::from_polar(1.0, phi_az), C64::from_polar(1.0, -phi_az)])
}

fn mat2_apply(m: &ComplexMatrix, v: &[C64; 2]) -> [C64; 2] {
    let out = m.apply(v).expect("2x2 action");
    [out[0], out[1]]
}

fn conj2(v: &[C64; 2]) -> [C64; 2] {
    [v[0].conj(), v[1].conj()]
}

/// `Θ[φ]*`
pub fn theta_conj(v: &[C64; 2]) -> [C64; 2] {
    mat2_apply(&wigner_theta(), &conj2(v))
}

/// Real constants and phases of the generalized Ryder–Burgard relation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RbParams {
    pub a: f64,
    pub b: f64,
    pub theta1: f64,
    pub theta2: f64,
}

impl RbParams {
    pub fn new(a: f64, b: f64, theta1: f64, theta2: f64) -> Self {
        Self { a, b, theta1, theta2 }
    }

    /// `ϑ_h`, with `↑ ↦ ϑ₁` and `↓ ↦ ϑ₂`.
    pub fn theta_h(&self, h: Helicity) -> f64 {
        match h {
            Helicity::Up => self.theta1,
            Helicity::Down => self.theta2,
        }
    }
}

/// Norm of
/// `φ_L^h − a(−1)^{½−h} e^{i(ϑ₁+ϑ₂)} Θ[φ_L^{−h}]* − b e^{2iϑ_h} Ξ⁻¹[φ_L^h]*`
/// on unit rest spinors quantized along `dir`.
pub fn ryder_burgard_residual(params: &RbParams, h: Helicity, dir: Direction) -> f64 {
    let phi_h = rest_spinor(h, dir, Chirality::Left).components;
    let phi_mh = rest_spinor(h.flip(), dir, Chirality::Left).components;
    let sign = if h == Helicity::Up { 1.0 } else { -1.0 };
    let first = C64::from_polar(params.a * sign, params.theta1 + params.theta2);
    let second = C64::from_polar(params.b, 2.0 * params.theta_h(h));
    let t = theta_conj(&phi_mh);
    let xi_inv = xi_matrix(dir.phi).inverse().expect("Ξ is unitary");
    let x = mat2_apply(&xi_inv, &conj2(&phi_h));
    let r: Vec<C64> = (0..2).map(|k| phi_h[k] - first * t[k] - second * x[k]).collect();
    norm(&r)
}

/// `Λ_R(p)s` or `Λ_L(p)s` according to the chirality of `s`.
pub fn boost_weyl(s: &WeylSpinor, p: &FourMomentum) -> WeylSpinor {
    let boost = match s.chirality {
        Chirality::Right => boost_right(p),
        Chirality::Left => boost_left(p),
    };
    WeylSpinor {
        components: mat2_apply(&boost, &s.components),
        ..s.clone()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Conjugacy {
    /// self charge-conjugate, eigenvalue +1
    S,
    /// anti-self charge-conjugate, eigenvalue −1
    A,
}

impl Conjugacy {
    pub const BOTH: [Conjugacy; 2] = [Conjugacy::S, Conjugacy::A];

    /// `ζ^S = +i`, `ζ^A = −i` for both λ and ρ.
    pub fn zeta(self) -> C64 {
        match self {
            Conjugacy::S => I,
            Conjugacy::A => -I,
        }
    }

    pub fn eigenvalue(self) -> f64 {
        match self {
            Conjugacy::S => 1.0,
            Conjugacy::A => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BispinorKind {
    DiracU,
    DiracV,
    Lambda(Conjugacy),
    Rho(Conjugacy),
}

/// Which block the chiral-helicity label `η` of λ/ρ refers to.
///
/// `RightBlock` labels λ by the helicity of `ζΘφ_L*` (so `λ_↑` carries
/// `φ_L^↓`); `LeftBlock` labels it by the helicity of `φ_L`. The two choices
/// select the two sign branches of `a = ±(b − 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum HelicityPairing {
    #[default]
    RightBlock,
    LeftBlock,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Bispinor {
    pub components: [C64; 4],
    pub kind: BispinorKind,
    /// `h` for u/v, `η` for λ/ρ.
    pub helicity: Helicity,
    pub zeta: Option<C64>,
    pub momentum: FourMomentum,
}

impl Bispinor {
    pub fn upper(&self) -> [C64; 2] {
        [self.components[0], self.components[1]]
    }

    pub fn lower(&self) -> [C64; 2] {
        [self.components[2], self.components[3]]
    }
}

fn stack(upper: [C64; 2], lower: [C64; 2]) -> [C64; 4] {
    [upper[0], upper[1], lower[0], lower[1]]
}

/// Left-handed rest spinors obtained from right-handed ones through
/// `φ_L^↑ = −Θ[φ_R^↓]*` and `φ_L^↓ = +Θ[φ_R^↑]*`.
pub fn left_from_right(h: Helicity, dir: Direction) -> [C64; 2] {
    let partner = rest_spinor(h.flip(), dir, Chirality::Right).components;
    let t = theta_conj(&partner);
    match h {
        Helicity::Up => [-t[0], -t[1]],
        Helicity::Down => t,
    }
}

/// Right-handed rest spinors from left-handed ones:
/// `φ_R^↑ = −Θ[φ_L^↓]*`, `φ_R^↓ = +Θ[φ_L^↑]*`.
pub fn right_from_left(h: Helicity, dir: Direction) -> [C64; 2] {
    let partner = rest_spinor(h.flip(), dir, Chirality::Left).components;
    let t = theta_conj(&partner);
    match h {
        Helicity::Up => [-t[0], -t[1]],
        Helicity::Down => t,
    }
}

/// Dirac spinors `u_h = (φ_R(p), φ_L(p))` and `v_h = γ⁵u_h`, with the left
/// rest spinor fixed by the helicity interchange relations before boosting.
pub fn make_dirac(h: Helicity, p: &FourMomentum, dir: Direction) -> (Bispinor, Bispinor) {
    let right = rest_spinor(h, dir, Chirality::Right);
    let left = WeylSpinor {
        components: left_from_right(h, dir),
        chirality: Chirality::Left,
        ..right.clone()
    };
    let u = stack(
        boost_weyl(&right, p).components,
        boost_weyl(&left, p).components,
    );
    let g5 = gamma_set().five;
    let v = g5.apply(&u).expect("4x4 action");
    let u = Bispinor {
        components: u,
        kind: BispinorKind::DiracU,
        helicity: h,
        zeta: None,
        momentum: *p,
    };
    let v = Bispinor {
        components: [v[0], v[1], v[2], v[3]],
        kind: BispinorKind::DiracV,
        ..u.clone()
    };
    (u, v)
}

/// `λ_η = (ζ_λ Θ φ_L*(p), φ_L(p))` with the default label pairing.
pub fn make_lambda(eta: Helicity, kind: Conjugacy, p: &FourMomentum, dir: Direction) -> Bispinor {
    make_lambda_with(eta, kind, p, dir, HelicityPairing::default())
}

pub fn make_lambda_with(
    eta: Helicity,
    kind: Conjugacy,
    p: &FourMomentum,
    dir: Direction,
    pairing: HelicityPairing,
) -> Bispinor {
    let h_left = match pairing {
        HelicityPairing::RightBlock => eta.flip(),
        HelicityPairing::LeftBlock => eta,
    };
    let phi_l = boost_weyl(&rest_spinor(h_left, dir, Chirality::Left), p).components;
    let zeta = kind.zeta();
    let t = theta_conj(&phi_l);
    Bispinor {
        components: stack([zeta * t[0], zeta * t[1]], phi_l),
        kind: BispinorKind::Lambda(kind),
        helicity: eta,
        zeta: Some(zeta),
        momentum: *p,
    }
}

/// `ρ_η = (φ_R(p), (ζ_ρ Θ)* φ_R*(p))` with the default label pairing.
pub fn make_rho(eta: Helicity, kind: Conjugacy, p: &FourMomentum, dir: Direction) -> Bispinor {
    make_rho_with(eta, kind, p, dir, HelicityPairing::default())
}

pub fn make_rho_with(
    eta: Helicity,
    kind: Conjugacy,
    p: &FourMomentum,
    dir: Direction,
    pairing: HelicityPairing,
) -> Bispinor {
    let h_right = match pairing {
        HelicityPairing::RightBlock => eta,
        HelicityPairing::LeftBlock => eta.flip(),
    };
    let phi_r = boost_weyl(&rest_spinor(h_right, dir, Chirality::Right), p).components;
    let zeta = kind.zeta();
    // Θ is real, so (ζΘ)* = ζ* Θ
    let t = theta_conj(&phi_r);
    Bispinor {
        components: stack(phi_r, [zeta.conj() * t[0], zeta.conj() * t[1]]),
        kind: BispinorKind::Rho(kind),
        helicity: eta,
        zeta: Some(zeta),
        momentum: *p,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    S,
    A,
    Neither,
}

/// Compares `S^c ψ` against `±ψ` relative to `|ψ|`.
pub fn classify_conjugacy(b: &Bispinor, tol: f64) -> Result<Classification> {
    classify_components(&b.components, tol)
}

pub fn classify_components(psi: &[C64; 4], tol: f64) -> Result<Classification> {
    let scale = norm(psi);
    if scale <= tol {
        return Err(Error::Degenerate("zero spinor has no conjugacy class".into()));
    }
    let image = apply_charge_conjugation(psi);
    let minus: Vec<C64> = psi.iter().map(|z| -z).collect();
    if max_abs_diff(&image, psi) <= tol * scale {
        Ok(Classification::S)
    } else if max_abs_diff(&image, &minus) <= tol * scale {
        Ok(Classification::A)
    } else {
        Ok(Classification::Neither)
    }
}

/// Max deviation of the two interchange identities `Θ[φ^h]* = ±φ^{−h}`
/// and `Ξ⁻¹[φ^h]* = φ^h` over both helicities at `dir`.
pub fn rest_phase_identities(dir: Direction) -> f64 {
    let up = rest_spinor(Helicity::Up, dir, Chirality::Left).components;
    let down = rest_spinor(Helicity::Down, dir, Chirality::Left).components;
    let xi_inv = xi_matrix(-dir.phi);
    let neg_up = [-up[0], -up[1]];
    [
        max_abs_diff(&theta_conj(&up), &down),
        max_abs_diff(&theta_conj(&down), &neg_up),
        max_abs_diff(&mat2_apply(&xi_inv, &conj2(&up)), &up),
        max_abs_diff(&mat2_apply(&xi_inv, &conj2(&down)), &down),
    ]
    .into_iter()
    .fold(0.0, f64::max)
}

/// `σ·n̂ φ − 2h φ` residual of a rest spinor.
pub fn helicity_residual(s: &WeylSpinor) -> f64 {
    let n = s.direction.unit_vector();
    let sn = crate::algebra::sigma_dot(n);
    let lhs = mat2_apply(&sn, &s.components);
    let two_h = 2.0 * s.helicity.value();
    max_abs_diff(&lhs, &[s.components[0] * two_h, s.components[1] * two_h])
}

/// Conjugated copy of a 4-spinor, kept here so tests can read the λ blocks.
pub fn conj4(v: &[C64; 4]) -> [C64; 4] {
    let out = conj_vec(v);
    [out[0], out[1], out[2], out[3]]
}
