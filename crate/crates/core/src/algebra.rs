//! Fixed conventions and the primitive operators of the bispinor representation.
//!
//! Bispinors are stacked as `(φ_R, φ_L)`, the metric is `(+,−,−,−)` and
//! positive-frequency plane waves go as `e^{−ip·x}`. In this layout
//!
//! ```text
//! γ⁰ = [[0, 1], [1, 0]]        γⁱ = [[0, −σⁱ], [σⁱ, 0]]        γ⁵ = diag(1, 1, −1, −1)
//! ```
//!
//! so `γ^μ p_μ = [[0, E + σ·p], [E − σ·p, 0]]`, parity is literally the
//! block swap, and `v = γ⁵u` flips the sign of the left-handed block.

use crate::matrix::{c, realify, ComplexMatrix, RealLinearOp, C64, I, ONE, ZERO};

/// Minkowski metric diagonal.
pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// Convention record echoed into every report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisConvention {
    pub metric: &'static str,
    pub component_order: &'static str,
    pub gamma5: &'static str,
    pub frequency: &'static str,
    pub charge_conjugation: &'static str,
    pub wigner: &'static str,
    pub rest_spinor_phase: &'static str,
    pub normalization: &'static str,
    pub eta_label: &'static str,
    pub theta_h_map: &'static str,
}

pub const CONVENTION: BasisConvention = BasisConvention {
    metric: "(+,-,-,-)",
    component_order: "(phi_R, phi_L)",
    gamma5: "diag(1,1,-1,-1)",
    frequency: "exp(-i p.x) positive",
    charge_conjugation: "[[0, i Theta], [-i Theta, 0]] K",
    wigner: "Theta = [[0,-1],[1,0]]",
    rest_spinor_phase: "half-angle: (cos(t/2) e^{-i f/2}, sin(t/2) e^{i f/2})",
    normalization: "unit rest spinors",
    eta_label: "helicity of the right-handed block",
    theta_h_map: "up -> theta1, down -> theta2",
};

impl BasisConvention {
    /// Key/value view, in a fixed order.
    pub fn entries(&self) -> [(&'static str, &'static str); 10] {
        [
            ("metric", self.metric),
            ("component_order", self.component_order),
            ("gamma5", self.gamma5),
            ("frequency", self.frequency),
            ("charge_conjugation", self.charge_conjugation),
            ("wigner", self.wigner),
            ("rest_spinor_phase", self.rest_spinor_phase),
            ("normalization", self.normalization),
            ("eta_label", self.eta_label),
            ("theta_h_map", self.theta_h_map),
        ]
    }
}

/// Pauli matrix `σ_k`, `k ∈ {1, 2, 3}`. `k = 0` gives the 2×2 identity.
pub fn pauli(k: usize) -> ComplexMatrix {
    let e = match k {
        0 => [ONE, ZERO, ZERO, ONE],
        1 => [ZERO, ONE, ONE, ZERO],
        2 => [ZERO, -I, I, ZERO],
        3 => [ONE, ZERO, ZERO, -ONE],
        _ => panic!("pauli index {k} out of range"),
    };
    ComplexMatrix::from_rows(2, 2, &e)
}

/// `σ·a` for a real 3-vector.
pub fn sigma_dot(a: [f64; 3]) -> ComplexMatrix {
    let [x, y, z] = a;
    ComplexMatrix::from_rows(2, 2, &[c(z, 0.0), c(x, -y), c(x, y), c(-z, 0.0)])
}

/// The spin-½ Wigner operator, `(Θ)_{h,h'} = (−1)^{1/2+h} δ_{h',−h}` with rows
/// and columns ordered `(+½, −½)`.
pub fn wigner_theta() -> ComplexMatrix {
    let helicities = [0.5_f64, -0.5];
    ComplexMatrix::from_fn(2, 2, |r, s| {
        let (h, hp) = (helicities[r], helicities[s]);
        if hp == -h {
            let sign = if (0.5 + h).round() as i64 % 2 == 0 { 1.0 } else { -1.0 };
            c(sign, 0.0)
        } else {
            ZERO
        }
    })
}

/// `(γ⁰, γ¹, γ², γ³)` together with `γ⁵`.
#[derive(Debug, Clone)]
pub struct GammaSet {
    pub mu: [ComplexMatrix; 4],
    pub five: ComplexMatrix,
}

impl GammaSet {
    /// `γ^μ v_μ = γ⁰v⁰ − γ·v` for a contravariant 4-vector `v`.
    pub fn slash(&self, v: [f64; 4]) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(4, 4);
        for (mu, g) in self.mu.iter().enumerate() {
            out = &out + &g.scale_re(METRIC[mu] * v[mu]);
        }
        out
    }
}

pub fn gamma_set() -> GammaSet {
    let z = ComplexMatrix::zeros(2, 2);
    let id = pauli(0);
    let g0 = ComplexMatrix::block2(&z, &id, &id, &z).unwrap();
    let gi = |k: usize| {
        let s = pauli(k);
        ComplexMatrix::block2(&z, &(-&s), &s, &z).unwrap()
    };
    let five = ComplexMatrix::diag(&[ONE, ONE, -ONE, -ONE]);
    GammaSet {
        mu: [g0, gi(1), gi(2), gi(3)],
        five,
    }
}

/// Space inversion: the anti-diagonal block identity swapping `φ_R` and `φ_L`.
pub fn parity() -> ComplexMatrix {
    let z = ComplexMatrix::zeros(2, 2);
    let id = pauli(0);
    ComplexMatrix::block2(&z, &id, &id, &z).unwrap()
}

/// Matrix part `𝒞 = [[0, iΘ], [−iΘ, 0]]` of the charge-conjugation operator.
pub fn charge_conjugation_matrix() -> ComplexMatrix {
    let theta = wigner_theta();
    let z = ComplexMatrix::zeros(2, 2);
    ComplexMatrix::block2(&z, &theta.scale(I), &theta.scale(-I), &z).unwrap()
}

/// `S^c = 𝒞𝒦`, realified.
pub fn charge_conjugation() -> RealLinearOp {
    realify(&ComplexMatrix::zeros(4, 4), &charge_conjugation_matrix()).unwrap()
}

/// `S^c ψ = 𝒞ψ*` on a plain 4-vector.
pub fn apply_charge_conjugation(psi: &[C64; 4]) -> [C64; 4] {
    let cm = charge_conjugation_matrix();
    let conj: Vec<C64> = psi.iter().map(|z| z.conj()).collect();
    let out = cm.apply(&conj).unwrap();
    [out[0], out[1], out[2], out[3]]
}

/// The unitary `U` carrying the chiral basis into the Majorana
/// representation, and its conjugate `U†` as printed.
pub fn majorana_transform() -> (ComplexMatrix, ComplexMatrix) {
    let theta = wigner_theta();
    let id = pauli(0);
    let i_theta = theta.scale(I);
    let one_minus = &id - &i_theta;
    let one_plus = &id + &i_theta;
    let neg_one_minus = &(-&id) - &i_theta;
    let u = ComplexMatrix::block2(&one_minus, &one_plus, &neg_one_minus, &one_minus)
        .unwrap()
        .scale_re(0.5);
    let u_dagger = ComplexMatrix::block2(&one_minus, &neg_one_minus, &one_plus, &one_minus)
        .unwrap()
        .scale_re(0.5);
    (u, u_dagger)
}
