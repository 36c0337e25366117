use proptest::prelude::*;
use spinlab::algebra::{charge_conjugation, gamma_set, majorana_transform};
use spinlab::equations::{
    barut_factorization_check, compatibility_solve, dirac_op, dispersion_roots, kg_first_order_op,
    lambda_equation_residuals, pair_frequencies, EquationParams, Frequency, GeneralizedParams,
};
use spinlab::kinematics::{boost_left, boost_right, FourMomentum, FourVector};
use spinlab::matrix::{c, realify, ComplexMatrix, RealLinearOp, C64};
use spinlab::spinors::{classify_conjugacy, make_lambda, Classification, Conjugacy, Direction, Helicity};

fn momentum() -> impl Strategy<Value = FourMomentum> {
    (0.1f64..5.0, -3.0f64..1.0, 0.0f64..std::f64::consts::PI, -3.2f64..3.2).prop_map(|(m, lg, th, ph)| {
        let r = m * 10f64.powf(lg);
        FourMomentum::new(m, [r * th.sin() * ph.cos(), r * th.sin() * ph.sin(), r * th.cos()]).unwrap()
    })
}

fn complex() -> impl Strategy<Value = C64> {
    (-2.0f64..2.0, -2.0f64..2.0).prop_map(|(re, im)| c(re, im))
}

fn matrix4() -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec(complex(), 16).prop_map(|e| ComplexMatrix::from_rows(4, 4, &e))
}

fn spinor() -> impl Strategy<Value = [C64; 4]> {
    prop::array::uniform4(complex())
}

fn coupling() -> impl Strategy<Value = f64> {
    prop_oneof![-3.0f64..-0.1, 0.1f64..3.0]
}

proptest! {
    #[test]
    fn realification_preserves_linearity_type(l in matrix4(), a in matrix4()) {
        prop_assert!(realify(&l, &ComplexMatrix::zeros(4, 4)).unwrap().commutator_with_i() < 1e-12);
        prop_assert!(realify(&ComplexMatrix::zeros(4, 4), &a).unwrap().anticommutator_with_i() < 1e-12);
        let op = realify(&l, &a).unwrap();
        prop_assert!(op.linear_part().approx_eq(&l, 1e-12));
        prop_assert!(op.antilinear_part().approx_eq(&a, 1e-12));
    }

    #[test]
    fn realify_is_additive_and_applies_correctly(l in matrix4(), a in matrix4(), psi in spinor()) {
        let op = realify(&l, &a).unwrap();
        let lin = l.apply(&psi).unwrap();
        let anti = a.apply(&psi.map(|z| z.conj())).unwrap();
        let out = op.apply(&psi);
        for k in 0..4 {
            prop_assert!((out[k] - lin[k] - anti[k]).norm() < 1e-12);
        }
        let sum = op.add(&RealLinearOp::identity());
        prop_assert!(sum.linear_part().approx_eq(&(&l + &ComplexMatrix::identity(4)), 1e-12));
    }

    #[test]
    fn charge_conjugation_involution(psi in spinor()) {
        let sc = charge_conjugation();
        let twice = sc.apply(&sc.apply(&psi));
        for k in 0..4 {
            prop_assert!((twice[k] - psi[k]).norm() < 1e-14);
        }
    }

    #[test]
    fn majorana_transform_preserves_norm(psi in spinor()) {
        let (u, _) = majorana_transform();
        let out = u.apply(&psi).unwrap();
        let n0: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        let n1: f64 = out.iter().map(|z| z.norm_sqr()).sum();
        prop_assert!((n0 - n1).abs() < 1e-12 * n0.max(1.0));
    }

    #[test]
    fn slash_squares_to_minkowski(e in -5.0f64..5.0, p in prop::array::uniform3(-5.0f64..5.0)) {
        let v = FourVector::new(e, p);
        let s = dirac_op(v);
        prop_assert!((&s * &s).approx_eq(&ComplexMatrix::identity(4).scale_re(v.minkowski_sq()), 1e-11));
    }

    #[test]
    fn boosts_are_unimodular_and_mutually_adjoint_inverse(p in momentum()) {
        let r = boost_right(&p);
        let l = boost_left(&p);
        prop_assert!((r.det().unwrap() - c(1.0, 0.0)).norm() < 1e-10);
        prop_assert!((&r * &l.dagger()).approx_eq(&ComplexMatrix::identity(2), 1e-9));
    }

    #[test]
    fn boosted_bispinor_transforms_gamma_covariantly(p in momentum()) {
        // Λ(p)† γ⁰ Λ(p) = γ⁰ for the 4×4 boost diag(Λ_R, Λ_L)
        let z = ComplexMatrix::zeros(2, 2);
        let big = ComplexMatrix::block2(&boost_right(&p), &z, &z, &boost_left(&p)).unwrap();
        let g0 = &gamma_set().mu[0];
        prop_assert!((&(&big.dagger() * g0) * &big).approx_eq(g0, 1e-9));
    }

    #[test]
    fn lambda_spinors_keep_their_class(p in momentum(), up in any::<bool>(), s in any::<bool>()) {
        let eta = if up { Helicity::Up } else { Helicity::Down };
        let kind = if s { Conjugacy::S } else { Conjugacy::A };
        let l = make_lambda(eta, kind, &p, Direction::of(&p));
        let want = if s { Classification::S } else { Classification::A };
        prop_assert_eq!(classify_conjugacy(&l, 1e-10).unwrap(), want);
    }

    #[test]
    fn matched_branch_solves_the_lambda_equations(p in momentum(), b in -3.0f64..3.0, s in any::<bool>()) {
        let kind = if s { Conjugacy::S } else { Conjugacy::A };
        let params = EquationParams::new(b - 1.0, b, p.mass()).unwrap();
        let r = lambda_equation_residuals(&p, &params, kind);
        prop_assert!(r[0] < 1e-10 * (1.0 + p.energy()) && r[1] < 1e-10 * (1.0 + p.energy()));
    }

    #[test]
    fn barut_factorization(p in momentum(), a in coupling(), b in -3.0f64..3.0) {
        let params = EquationParams::new(a, b, p.mass()).unwrap();
        let scale = 1.0 + p.energy() * p.energy() / p.mass();
        prop_assert!(barut_factorization_check(p, &params).unwrap() < 1e-10 * scale);
    }

    #[test]
    fn kg_pair_squares_to_klein_gordon(p in momentum(), a in coupling(), b in -3.0f64..3.0) {
        // the paired operator's 4×4 blocks A ± B each square to (a²p²/m² − (b−1)²)
        let params = EquationParams::new(a, b, p.mass()).unwrap();
        let paired = pair_frequencies(
            &kg_first_order_op(p, &params, Frequency::Positive),
            &kg_first_order_op(p, &params, Frequency::Negative),
        );
        // on shell p² = m²
        let kg = a * a - (b - 1.0).powi(2);
        let dets = paired.det().unwrap();
        prop_assert!((dets - c(kg.powi(4), 0.0)).norm() < 1e-8 * kg.abs().powi(4).max(1.0));
    }

    #[test]
    fn dispersion_closed_form(a in coupling(), b in -3.0f64..3.0, m in 0.2f64..4.0) {
        prop_assume!((b - 1.0).abs() > 1e-3);
        let r = dispersion_roots(&EquationParams::new(a, b, m).unwrap()).unwrap();
        let expected = m * m * (b - 1.0).powi(2) / (a * a);
        prop_assert_eq!(r.total_multiplicity(), 4);
        prop_assert!((r.unique_root().unwrap() - expected).abs() <= 1e-8 * expected);
    }

    #[test]
    fn generalized_dispersion_closed_form(
        a in coupling(), beta1 in -2.0f64..2.0, beta2 in -2.0f64..2.0, alpha1 in -3.2f64..3.2, flip in any::<bool>()
    ) {
        prop_assume!(beta1.hypot(beta2) > 1e-3);
        let alpha2 = if flip { std::f64::consts::PI } else { 0.0 };
        let g = GeneralizedParams::new(a, 2.0, alpha1, alpha2, beta1, beta2, 1.0).unwrap();
        let expected = (beta1 * beta1 + beta2 * beta2) / (a * a);
        let got = dispersion_roots(&g).unwrap().unique_root().unwrap();
        prop_assert!((got - expected).abs() <= 1e-8 * expected);
    }

    #[test]
    fn consistency_is_alpha1_blind(
        b in -2.0f64..3.0, alpha2 in 0.0f64..3.2, beta1 in 0.0f64..2.0, beta2 in 0.0f64..2.0,
        a1 in -3.2f64..3.2, a2 in -3.2f64..3.2
    ) {
        let one = compatibility_solve(&GeneralizedParams::new(1.0, b, a1, alpha2, beta1, beta2, 1.0).unwrap());
        let two = compatibility_solve(&GeneralizedParams::new(1.0, b, a2, alpha2, beta1, beta2, 1.0).unwrap());
        prop_assert_eq!(one.kernel_dim, two.kernel_dim);
        prop_assert!((one.min_singular - two.min_singular).abs() < 1e-12);
    }
}
