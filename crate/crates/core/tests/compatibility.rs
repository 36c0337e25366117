use spinlab::equations::{
    compatibility_solve, dirac_degeneration, mode_constraint_matrix, DegenerationBranch,
    GeneralizedParams,
};
use spinlab::matrix::I;
use std::f64::consts::PI;

const ALPHA2: [f64; 5] = [0.0, PI / 4.0, PI / 2.0, 3.0 * PI / 4.0, PI];
const ALPHA1: [f64; 4] = [0.0, PI / 3.0, PI / 2.0, 1.1];

fn g(b: f64, alpha1: f64, alpha2: f64, beta1: f64, beta2: f64) -> GeneralizedParams {
    GeneralizedParams::new(1.0, b, alpha1, alpha2, beta1, beta2, 1.0).unwrap()
}

#[test]
fn consistency_region_is_the_circle_at_real_phase() {
    let mut consistent_points = 0;
    for b in [0.0, 2.0, 3.0] {
        for alpha2 in ALPHA2 {
            for i in 0..=20 {
                for j in 0..=20 {
                    let (beta1, beta2) = (0.1 * i as f64, 0.1 * j as f64);
                    // at β₂ = 0 the phase e^{iα₂} multiplies nothing
                    let real_phase = alpha2.sin().abs() < 1e-12 || beta2 == 0.0;
                    let expect = real_phase && (beta1 * beta1 + beta2 * beta2 - (b - 1.0) * (b - 1.0)).abs() < 1e-8;
                    for alpha1 in ALPHA1 {
                        let r = compatibility_solve(&g(b, alpha1, alpha2, beta1, beta2));
                        assert_eq!(r.consistent, expect, "b={b} α₂={alpha2} β=({beta1},{beta2}) α₁={alpha1}");
                        assert!(r.readings_agree);
                    }
                    consistent_points += expect as usize;
                }
            }
        }
    }
    // four circle points per real phase and per b, plus the β₂ = 0 point
    // at the three complex phases
    assert_eq!(consistent_points, 3 * (2 * 4 + 3));
}

#[test]
fn examples() {
    let r = compatibility_solve(&g(2.0, 0.9, 0.0, 0.6, 0.8));
    assert!(r.consistent && r.constraint_gap < 1e-15);
    let r = compatibility_solve(&g(2.0, 0.9, 0.0, 1.0, 1.0));
    assert!(!r.consistent && (r.constraint_gap - 1.0).abs() < 1e-15);
    assert!(!compatibility_solve(&g(2.0, 0.9, PI / 2.0, 0.6, 0.8)).consistent);
}

#[test]
fn dirac_limit_phase_locking() {
    for alpha1 in ALPHA1 {
        let upper = dirac_degeneration(&g(2.0, alpha1, 0.0, 0.0, 1.0), 1e-10).unwrap();
        assert_eq!(upper.branch, Some(DegenerationBranch::Upper));
        let lower = dirac_degeneration(&g(2.0, alpha1, PI, 0.0, 1.0), 1e-10).unwrap();
        assert_eq!(lower.branch, Some(DegenerationBranch::Lower));
        for k in upper.kernel.iter() {
            assert!((k.c_up + I * k.c_down).norm() < 1e-10);
            assert!((k.d_up - I * k.d_down).norm() < 1e-10);
        }
        for k in lower.kernel.iter() {
            assert!((k.c_up - I * k.c_down).norm() < 1e-10);
            assert!((k.d_up + I * k.d_down).norm() < 1e-10);
        }
        assert_eq!(upper.kernel.len(), 2);
        let off = dirac_degeneration(&g(2.0, alpha1, 0.0, 0.0, 0.5), 1e-10).unwrap();
        assert!(!off.consistent);
    }
}

#[test]
fn alpha1_only_rotates_the_kernel() {
    // |det| depends on α₁ only through the gauge of c vs d
    for (beta1, beta2) in [(0.6, 0.8), (1.0, 1.0), (0.3, 0.2)] {
        let dets: Vec<f64> = ALPHA1
            .iter()
            .map(|&a1| mode_constraint_matrix(&g(2.0, a1, 0.0, beta1, beta2)).det().unwrap().norm())
            .collect();
        assert!(dets.iter().all(|d| (d - dets[0]).abs() < 1e-12));
    }
}
