//! Dispersion spectra: zeros of `det M(p)` as a function of `s = p²`.
//!
//! Every operator here is linear in `p̂` and Lorentz covariant, so its
//! determinant is a polynomial in `s` alone. Where the real system splits
//! into two 4×4 blocks, each block determinant is a quadratic in `s`
//! recovered exactly from three samples; its roots are read off directly
//! (a perfect square yields one root of multiplicity 2) and the two blocks'
//! roots are merged. Without that split the full 8×8 determinant is fitted
//! as a quartic and solved with simultaneous (Durand–Kerner) iteration.

use nalgebra::{DMatrix, DVector};

use crate::algebra::gamma_set;
use crate::error::{Error, Result};
use crate::kinematics::FourVector;
use crate::matrix::{ComplexMatrix, C64, I};

use super::{dirac_op, generalized_first_order_op, pair_frequencies, EquationParams, Frequency, GeneralizedParams};

/// Relative discriminant below which a block quadratic counts as a perfect square.
const DOUBLE_ROOT_TOL: f64 = 1e-10;
/// Relative distance below which roots from different blocks are merged.
const MERGE_TOL: f64 = 1e-8;
/// Imaginary part (relative) below which a root counts as real.
const REAL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumRoot {
    /// `p²` in mass² units
    pub p2: f64,
    pub multiplicity: usize,
}

impl SpectrumRoot {
    /// `√p²` for non-tachyonic roots.
    pub fn mass(&self) -> Option<f64> {
        (self.p2 >= 0.0).then(|| self.p2.sqrt())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DispersionResult {
    pub roots: Vec<SpectrumRoot>,
    /// Non-real zeros of the determinant, with multiplicity.
    pub complex_roots: Vec<(C64, usize)>,
    /// Set when `p² = 0` is a root (b = 1, or β₁ = β₂ = 0).
    pub massless_degenerate: bool,
}

impl DispersionResult {
    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum::<usize>()
            + self.complex_roots.iter().map(|(_, k)| k).sum::<usize>()
    }

    /// The single real root, if the spectrum has exactly one.
    pub fn unique_root(&self) -> Option<f64> {
        match (self.roots.as_slice(), self.complex_roots.is_empty()) {
            ([r], true) => Some(r.p2),
            _ => None,
        }
    }
}

/// Operator families with a computable dispersion spectrum.
pub trait Dispersive {
    fn spectrum(&self) -> Result<DispersionResult>;
}

impl Dispersive for EquationParams {
    fn spectrum(&self) -> Result<DispersionResult> {
        kg_dispersion(self)
    }
}

impl Dispersive for GeneralizedParams {
    fn spectrum(&self) -> Result<DispersionResult> {
        generalized_dispersion_roots(self)
    }
}

/// Zeros in `p²` of the operator selected by `params`.
///
/// For [`EquationParams`] this is the real pair behind the Klein–Gordon
/// reduction, `[ia γ·∂/m − (b−1)γ⁵𝒞𝒦]Ψ = 0`, whose spectrum is the single
/// root `m²(b−1)²/a²` of multiplicity 4. For [`GeneralizedParams`] see
/// [`generalized_dispersion_roots`].
pub fn dispersion_roots<P: Dispersive>(params: &P) -> Result<DispersionResult> {
    params.spectrum()
}

fn kg_dispersion(params: &EquationParams) -> Result<DispersionResult> {
    params.require_nonzero_a("dispersion")?;
    let EquationParams { a, b, m } = *params;
    let g5 = gamma_set().five;
    let scale = sample_scale(m, (b - 1.0).powi(2) / (a * a));
    // real pair [[A, B], [B, A]] splits into A ± B
    let blocks = [1.0, -1.0].map(|sign| {
        let g5 = g5.clone();
        move |v: FourVector| &dirac_op(v).scale_re(a / m) + &g5.scale(I * (-sign * (b - 1.0)))
    });
    from_blocks(&blocks, scale)
}

/// Zeros in `p²` of the generalized equation.
///
/// For `α₂ ∈ {0, π}` the Majorana real pair splits into
/// `a p̂/m + β₂cos α₂ ± iβ₁γ⁵`, independently of `α₁`; the root is
/// `m²(β₁² + β₂²)/a²`. Other `α₂` fall back to the full paired determinant,
/// whose zeros are then generally complex.
pub fn generalized_dispersion_roots(params: &GeneralizedParams) -> Result<DispersionResult> {
    if params.a == 0.0 {
        return Err(Error::Undefined("dispersion needs a != 0".into()));
    }
    let GeneralizedParams { a, m, beta1, beta2, alpha2, .. } = *params;
    let scale = sample_scale(m, (beta1 * beta1 + beta2 * beta2) / (a * a));
    if alpha2.sin().abs() <= 1e-12 {
        let mass = beta2 * alpha2.cos();
        let g5 = gamma_set().five;
        let blocks = [1.0, -1.0].map(|sign| {
            let g5 = g5.clone();
            move |v: FourVector| {
                let kin = dirac_op(v).scale_re(a / m);
                let id = ComplexMatrix::identity(4).scale_re(mass);
                &(&kin + &id) + &g5.scale(I * (sign * beta1))
            }
        });
        from_blocks(&blocks, scale)
    } else {
        let full = move |v: FourVector| {
            pair_frequencies(
                &generalized_first_order_op(v, params, Frequency::Positive),
                &generalized_first_order_op(v, params, Frequency::Negative),
            )
        };
        from_quartic(&full, scale)
    }
}

/// Zeros in `p²` of the paired form of `[a iγ·∂/m + b𝒞𝒦 − 1]Ψ = 0`:
/// the coupled `(φ, χ)` set splits into `a p̂/m − 1 ∓ b`, giving
/// `m²(1 − b)²/a²` and `m²(1 + b)²/a²`.
pub fn first_order_mode_roots(params: &EquationParams) -> Result<DispersionResult> {
    params.require_nonzero_a("dispersion")?;
    let EquationParams { a, b, m } = *params;
    let scale = sample_scale(m, (1.0 + b.abs()).powi(2) / (a * a));
    let blocks = [1.0, -1.0].map(|sign| {
        move |v: FourVector| {
            &dirac_op(v).scale_re(a / m) - &ComplexMatrix::identity(4).scale_re(1.0 + sign * b)
        }
    });
    from_blocks(&blocks, scale)
}

fn sample_scale(m: f64, ratio: f64) -> f64 {
    m * m * ratio.max(1.0)
}

fn det_at<F: Fn(FourVector) -> ComplexMatrix>(op: &F, s: f64) -> C64 {
    op(FourVector::with_square(s)).det().expect("square operator")
}

/// Coefficients `[c₀, c₁, c₂]` of `det block(t·scale)` in `t`.
fn block_quadratic<F: Fn(FourVector) -> ComplexMatrix>(op: &F, scale: f64) -> [C64; 3] {
    let f_minus = det_at(op, -scale);
    let f_zero = det_at(op, 0.0);
    let f_plus = det_at(op, scale);
    [f_zero, (f_plus - f_minus) * 0.5, (f_plus + f_minus) * 0.5 - f_zero]
}

/// Roots (in `t`) of `c₂t² + c₁t + c₀` with multiplicities.
fn quadratic_roots([c0, c1, c2]: [C64; 3]) -> Result<Vec<(C64, usize)>> {
    let size = c0.norm().max(c1.norm()).max(c2.norm());
    if c2.norm() <= 1e-14 * size.max(f64::MIN_POSITIVE) {
        return Err(Error::Degenerate("block determinant is not quadratic in p^2".into()));
    }
    let disc = c1 * c1 - c2 * c0 * 4.0;
    if disc.norm() <= DOUBLE_ROOT_TOL * (c1.norm_sqr() + 4.0 * (c2 * c0).norm()) {
        return Ok(vec![(-c1 / (c2 * 2.0), 2)]);
    }
    // cancellation-free pair
    let sq = disc.sqrt();
    let q = if (c1.conj() * sq).re >= 0.0 {
        -(c1 + sq) * 0.5
    } else {
        -(c1 - sq) * 0.5
    };
    let r1 = q / c2;
    let r2 = if q.norm() == 0.0 { r1 } else { c0 / q };
    Ok(vec![(r1, 1), (r2, 1)])
}

fn from_blocks<F: Fn(FourVector) -> ComplexMatrix>(blocks: &[F], scale: f64) -> Result<DispersionResult> {
    let mut roots = Vec::new();
    for op in blocks {
        roots.extend(quadratic_roots(block_quadratic(op, scale))?);
    }
    Ok(assemble(roots, scale, MERGE_TOL))
}

fn from_quartic<F: Fn(FourVector) -> ComplexMatrix>(op: &F, scale: f64) -> Result<DispersionResult> {
    let ts: [f64; 5] = [-2.0, -1.0, 0.0, 1.0, 2.0];
    let vander = DMatrix::<C64>::from_fn(5, 5, |i, j| C64::new(ts[i].powi(j as i32), 0.0));
    let values = DVector::<C64>::from_iterator(5, ts.iter().map(|&t| det_at(op, t * scale)));
    let coeffs = vander.lu().solve(&values).ok_or(Error::Singular)?;
    let coeffs: Vec<C64> = coeffs.iter().copied().collect();
    if coeffs[4].norm() <= 1e-14 * coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max) {
        return Err(Error::Degenerate("determinant is not quartic in p^2".into()));
    }
    let simple = durand_kerner(&coeffs);
    // simple roots of a repeated zero scatter by about eps^(1/k)
    Ok(assemble(simple.into_iter().map(|r| (r, 1)).collect(), scale, 1e-5))
}

/// All roots of `Σ cₖ tᵏ` (ascending coefficients).
fn durand_kerner(coeffs: &[C64]) -> Vec<C64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let monic: Vec<C64> = coeffs.iter().map(|c| c / lead).collect();
    let eval = |t: C64| monic.iter().rev().fold(C64::new(0.0, 0.0), |acc, c| acc * t + c);
    let seed = C64::new(0.4, 0.9);
    let mut z: Vec<C64> = (0..n).map(|k| seed.powu(k as u32)).collect();
    for _ in 0..2000 {
        let mut shift: f64 = 0.0;
        for i in 0..n {
            let denom = (0..n)
                .filter(|&j| j != i)
                .fold(C64::new(1.0, 0.0), |acc, j| acc * (z[i] - z[j]));
            if denom.norm() == 0.0 {
                z[i] += C64::new(1e-8, 1e-8);
                continue;
            }
            let step = eval(z[i]) / denom;
            z[i] -= step;
            shift = shift.max(step.norm());
        }
        if shift < 1e-15 {
            break;
        }
    }
    z
}

/// Rescales from `t` to `p²`, merges coincident roots and separates the real ones.
fn assemble(raw: Vec<(C64, usize)>, scale: f64, merge_tol: f64) -> DispersionResult {
    let mut merged: Vec<(C64, usize)> = Vec::new();
    for (t, k) in raw {
        let root = t * scale;
        match merged.iter_mut().find(|(r, _)| (*r - root).norm() <= merge_tol * r.norm().max(scale)) {
            Some((r, n)) => {
                // multiplicity-weighted mean of a cluster
                *r = (*r * (*n as f64) + root * (k as f64)) / ((*n + k) as f64);
                *n += k;
            }
            None => merged.push((root, k)),
        }
    }
    let mut roots = Vec::new();
    let mut complex_roots = Vec::new();
    let mut massless = false;
    for (r, k) in merged {
        if r.im.abs() <= REAL_TOL * r.norm().max(scale) {
            let p2 = if r.re.abs() <= MERGE_TOL * scale { 0.0 } else { r.re };
            massless |= p2 == 0.0;
            roots.push(SpectrumRoot { p2, multiplicity: k });
        } else {
            complex_roots.push((r, k));
        }
    }
    roots.sort_by(|x, y| x.p2.total_cmp(&y.p2));
    DispersionResult {
        roots,
        complex_roots,
        massless_degenerate: massless,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_square_is_a_double_root() {
        // (t − 3)²
        let r = quadratic_roots([C64::new(9.0, 0.0), C64::new(-6.0, 0.0), C64::new(1.0, 0.0)]).unwrap();
        assert_eq!(r, vec![(C64::new(3.0, 0.0), 2)]);
    }

    #[test]
    fn distinct_roots() {
        // (t − 1)(t + 4)
        let r = quadratic_roots([C64::new(-4.0, 0.0), C64::new(3.0, 0.0), C64::new(1.0, 0.0)]).unwrap();
        let mut re: Vec<f64> = r.iter().map(|(z, _)| z.re).collect();
        re.sort_by(f64::total_cmp);
        assert!((re[0] + 4.0).abs() < 1e-15 && (re[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn durand_kerner_quartic() {
        // (t − 1)(t − 2)(t + 1)(t − 3i)
        let roots = [C64::new(1.0, 0.0), C64::new(2.0, 0.0), C64::new(-1.0, 0.0), C64::new(0.0, 3.0)];
        let mut coeffs = vec![C64::new(1.0, 0.0)];
        for r in roots {
            let mut next = vec![C64::new(0.0, 0.0); coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * r;
            }
            coeffs = next;
        }
        let found = durand_kerner(&coeffs);
        for r in roots {
            assert!(found.iter().any(|z| (z - r).norm() < 1e-10), "{r} not in {found:?}");
        }
    }

    #[test]
    fn zero_a_is_rejected() {
        let p = EquationParams::new(0.0, 2.0, 1.0).unwrap();
        assert!(matches!(dispersion_roots(&p), Err(Error::Undefined(_))));
        let g = GeneralizedParams::new(0.0, 2.0, 0.0, 0.0, 0.6, 0.8, 1.0).unwrap();
        assert!(dispersion_roots(&g).is_err());
    }
}
