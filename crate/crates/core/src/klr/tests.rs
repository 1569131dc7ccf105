use super::*;
use crate::cartan::tests_support::{d0, d1, d2, dim};
use crate::qarith::QRat;

fn qr(text: &str) -> QRat {
    QRat::parse(text).unwrap()
}

fn a12() -> RootVector {
    RootVector::from_coeffs([(0, 1), (1, 1)])
}

#[test]
fn default_params_on_d1() {
    let datum = d1();
    let params = KLRParams::default_for(&datum);
    // Q_{1,2} has the admissible monomials u + v.
    let expected_q = &MPoly::var(2, 0) + &MPoly::var(2, 1);
    assert_eq!(*params.q(0, 1), expected_q);
    // P_2 = u^2 + uv + v^2.
    let u = MPoly::var(2, 0);
    let v = MPoly::var(2, 1);
    let expected_p = &(&(&u * &u) + &(&u * &v)) + &(&v * &v);
    assert_eq!(*params.p(1), expected_p);
    // P_1 is normalized to 1 on the real index.
    assert!(params.p(0).is_one());
    params.validate(&datum).unwrap();
}

#[test]
fn tau_generator_branches() {
    let datum = d1();
    let klr = KLR::new(&datum);

    // Equal neighbors: P del with two rational summands.
    let ctx = klr.context(RootVector::from_coeffs([(1, 2)]), 4).unwrap();
    let tau = ctx.tau_op(1).unwrap();
    let src = vec![1, 1];
    let r1 = Perm::transposition(2, 0);
    let p = klr.params.p(1).embedded(2, &[0, 1]);
    let expected = MRat::quotient_by_diff(p, 0, 1);
    assert_eq!(*tau.summand(&src, &r1).unwrap(), expected);
    assert_eq!(*tau.summand(&src, &Perm::identity(2)).unwrap(), -&expected);

    // Ascending neighbors: a plain transposition routing (1,2) -> (2,1).
    let ctx = klr.context(a12(), 4).unwrap();
    let tau = ctx.tau_op(1).unwrap();
    let src = vec![0, 1];
    assert_eq!(*tau.summand(&src, &r1).unwrap(), MRat::one(2));
    assert!(tau.summand(&src, &Perm::identity(2)).is_none());

    // x(1) is multiplication by x_1 on every component.
    let x = ctx.x_op(1).unwrap();
    for seq in ctx.seqs() {
        assert_eq!(
            *x.summand(seq, &Perm::identity(2)).unwrap(),
            MRat::from_poly(MPoly::var(2, 0))
        );
    }

    assert!(matches!(ctx.tau_op(0), Err(KLRError::OutOfRange(_))));
    assert!(matches!(ctx.x_op(3), Err(KLRError::OutOfRange(_))));
}

#[test]
fn compose_matches_defining_relations() {
    let datum = d1();
    let klr = KLR::new(&datum);
    let ctx = klr.context(RootVector::from_coeffs([(1, 2)]), 4).unwrap();
    let tau = ctx.tau_op(1).unwrap();

    // tau^2 = 0 on (2,2) since P_2 is symmetric.
    assert!(tau.compose(&tau).is_zero());

    // tau x_2 - x_1 tau = multiplication by P_2(x_1, x_2).
    let lhs = &tau.compose(&ctx.x_op(2).unwrap()) - &ctx.x_op(1).unwrap().compose(&tau);
    let p = klr.params.p(1).embedded(2, &[0, 1]);
    assert_eq!(lhs, ctx.mult_poly_all(&p));

    // unit composition is the identity on the block.
    let id = ctx.identity_op();
    assert_eq!(id.compose(&tau), tau);
}

#[test]
fn to_normal_of_tau_squared_is_q_polynomial() {
    let datum = d1();
    let klr = KLR::new(&datum);
    let ctx = klr.context(a12(), 4).unwrap();
    let tau = ctx.tau_op(1).unwrap();
    let src = vec![0, 1];
    let op = tau.compose(&tau.compose(&ctx.unit_op(&src).unwrap()));
    let nf = ctx.to_normal(&op).unwrap();
    // tau_1^2 1_{(1,2)} = (x_1 + x_2) 1_{(1,2)}.
    let mut expected = KLRElement::zero(a12());
    expected.insert_add(src.clone(), Perm::identity(2), vec![1, 0], QRat::one());
    expected.insert_add(src.clone(), Perm::identity(2), vec![0, 1], QRat::one());
    assert_eq!(nf, expected);
    assert_eq!(nf.display_expr(&datum, ctx.table()), "(x(1)+x(2))*e(1,2)");
}

#[test]
fn to_normal_of_identity_is_sum_of_idempotents() {
    let datum = d1();
    let klr = KLR::new(&datum);
    let ctx = klr.context(a12(), 4).unwrap();
    let nf = ctx.to_normal(&ctx.identity_op()).unwrap();
    let mut expected = KLRElement::zero(a12());
    for seq in ctx.seqs() {
        expected.insert_add(seq.clone(), Perm::identity(2), vec![0, 0], QRat::one());
    }
    assert_eq!(nf, expected);
}

#[test]
fn normal_form_round_trip() {
    let datum = d1();
    let klr = KLR::new(&datum);
    let ctx = klr.context(a12(), 4).unwrap();
    // v = tau_{r_1} x_1^3 1_{(2,1)}.
    let v = KLRElement::basis_term(vec![1, 0], Perm::transposition(2, 0), vec![3, 0], QRat::one());
    assert_eq!(ctx.to_normal(&ctx.operator_of(&v)).unwrap(), v);
}

#[test]
fn non_image_operators_are_rejected() {
    let datum = d1();
    let klr = KLR::new(&datum);
    let ctx = klr.context(RootVector::from_coeffs([(1, 2)]), 4).unwrap();
    // A bare transposition on (2,2) is not in the image: the leading
    // coefficient of tau_{r_1} 1_{(2,2)} is P/(x_1 - x_2), and 1 divided by
    // it is not polynomial.
    let mut op = KLROperator::zero(2);
    op.insert_add(vec![1, 1], Perm::transposition(2, 0), MRat::one(2));
    assert!(matches!(ctx.to_normal(&op), Err(KLRError::NotInImage(_))));
}

#[test]
fn degrees_of_generators() {
    let datum = d1();
    let klr = KLR::new(&datum);
    let ctx = klr.context(a12(), 4).unwrap();
    // deg tau_1 1_{(1,2)} = -(a_1|a_2) = 1.
    let t = KLRElement::basis_term(vec![0, 1], Perm::transposition(2, 0), vec![0, 0], QRat::one());
    assert_eq!(ctx.degree(&t).unwrap(), 1);

    let ctx2 = klr.context(RootVector::from_coeffs([(1, 2)]), 4).unwrap();
    // deg x_1 1_{(2,2)} = 2 s_2 = 2.
    let x = KLRElement::basis_term(vec![1, 1], Perm::identity(2), vec![1, 0], QRat::one());
    assert_eq!(ctx2.degree(&x).unwrap(), 2);
    // deg tau_1 1_{(2,2)} = -(a_2|a_2) = 2.
    let t = KLRElement::basis_term(vec![1, 1], Perm::transposition(2, 0), vec![0, 0], QRat::one());
    assert_eq!(ctx2.degree(&t).unwrap(), 2);
    // Mixed degrees are rejected.
    assert_eq!(ctx2.degree(&x.plus(&KLRElement::idempotent(&vec![1, 1]))), Err(KLRError::NotHomogeneous));
    assert_eq!(ctx2.degree(&KLRElement::zero(RootVector::from_coeffs([(1, 2)]))), Err(KLRError::ZeroElement));
}

#[test]
fn psi_fixes_polynomials_and_reverses_words() {
    let datum = d1();
    let klr = KLR::new(&datum);
    let ctx = klr.context(RootVector::from_coeffs([(1, 2)]), 4).unwrap();
    let x = KLRElement::basis_term(vec![1, 1], Perm::identity(2), vec![0, 2], QRat::one());
    assert_eq!(ctx.psi(&x).unwrap(), x);

    // psi(tau_1 tau_2 1_i) = normal form of tau_2 tau_1 1_{route}.
    let alpha = RootVector::from_coeffs([(0, 2), (1, 1)]);
    let ctx = klr.context(alpha, 4).unwrap();
    let src = vec![0, 0, 1];
    let t1 = ctx.tau_op(1).unwrap();
    let t2 = ctx.tau_op(2).unwrap();
    let unit = ctx.unit_op(&src).unwrap();
    let v = ctx.to_normal(&t1.compose(&t2.compose(&unit))).unwrap();
    let psi_v = ctx.psi(&v).unwrap();
    // By the anti-involution, psi(tau_1 tau_2 1_i) = 1_i tau_2 tau_1
    // = tau_2 tau_1 1_{r_1(r_2(i))} in normal form.
    let routing = Perm::transposition(3, 0).compose(&Perm::transposition(3, 1));
    let routed_src = routing.apply_to_seq(&src);
    let expected = ctx
        .to_normal(&t2.compose(&t1.compose(&ctx.unit_op(&routed_src).unwrap())))
        .unwrap();
    assert_eq!(psi_v, expected);
    // Involution on a sample of normal forms.
    for v in [v, expected] {
        assert_eq!(ctx.psi(&ctx.psi(&v).unwrap()).unwrap(), v);
    }
}

#[test]
fn psi_reverses_products() {
    let datum = d1();
    let klr = KLR::new(&datum);
    let alpha = RootVector::from_coeffs([(0, 1), (1, 2)]);
    let ctx = klr.context(alpha, 4).unwrap();
    let a = ctx.to_normal(&ctx.tau_op(1).unwrap()).unwrap();
    let b = ctx
        .to_normal(&ctx.tau_op(2).unwrap().compose(&ctx.x_op(1).unwrap()))
        .unwrap();
    let ab = ctx.multiply(&a, &b).unwrap();
    let psi_ab = ctx.psi(&ab).unwrap();
    let expected = ctx.multiply(&ctx.psi(&b).unwrap(), &ctx.psi(&a).unwrap()).unwrap();
    assert_eq!(psi_ab, expected);
}

#[test]
fn correction_polynomials_for_linear_symmetric_p() {
    let datum = d2();
    let params = KLRParams::default_for(&datum);
    // P = u + v: Pbar' = 1, Pbar'' = -1.
    let (p1, p2) = correction_polys(&params, 0).unwrap();
    assert!(p1.is_one());
    assert_eq!(p2, MPoly::constant(3, QRat::from_int(-1)));
}

#[test]
fn correction_polynomials_vanish_for_real_indices() {
    let datum = d0();
    let params = KLRParams::default_for(&datum);
    let (p1, p2) = correction_polys(&params, 0).unwrap();
    assert!(p1.is_zero());
    assert!(p2.is_zero());
}

#[test]
fn correction_polynomials_antisymmetry_for_symmetric_p() {
    for datum in [d1(), dim(), d2()] {
        let params = KLRParams::default_for(&datum);
        for i in datum.imaginary_indices() {
            assert!(params.p_is_symmetric(i));
            let (p1, p2) = correction_polys(&params, i).unwrap();
            assert_eq!(p2, -&p1, "Pbar'' = -Pbar' for symmetric P");
        }
    }
}

#[test]
fn correction_q_for_d1() {
    let datum = d1();
    let params = KLRParams::default_for(&datum);
    // Q_{1,2} = u + v: (Q(u,v) - Q(w,v))/(u - w) = 1.
    let qbar = correction_q(&params, 0, 1).unwrap();
    assert!(qbar.is_one());
}

#[test]
fn verify_relations_passes_on_small_weights() {
    let datum = d1();
    let klr = KLR::new(&datum);
    for alpha in [
        RootVector::simple(0),
        a12(),
        RootVector::from_coeffs([(0, 2), (1, 1)]),
        RootVector::from_coeffs([(1, 3)]),
    ] {
        let ctx = klr.context(alpha.clone(), 4).unwrap();
        let report = verify_relations(&ctx);
        assert!(report.all_passed(), "alpha = {}: {}", alpha, report);
    }
}

#[test]
fn divided_idempotents() {
    let datum = d1();
    let klr = KLR::new(&datum);
    // Real index, d = 1: plain idempotent.
    assert_eq!(klr.divided_idempotent(0, 1).unwrap(), KLRElement::idempotent(&vec![0]));
    // Real index, d = 2: -tau_1 x_1 1_{(1,1)} (the sign restores
    // idempotency under this divided-difference orientation).
    let e = klr.divided_idempotent(0, 2).unwrap();
    let expected =
        KLRElement::basis_term(vec![0, 0], Perm::transposition(2, 0), vec![1, 0], QRat::from_int(-1));
    assert_eq!(e, expected);
    let ctx = klr.context(RootVector::from_coeffs([(0, 2)]), 2).unwrap();
    assert_eq!(ctx.multiply(&e, &e).unwrap(), e);
    // Imaginary index: 1_{(2,2,2)}.
    let e = klr.divided_idempotent(1, 3).unwrap();
    assert_eq!(e, KLRElement::idempotent(&vec![1, 1, 1]));
}

#[test]
fn qdim_block_values_on_d1() {
    let datum = d1();
    let klr = KLR::new(&datum);
    let ctx = klr.context(RootVector::simple(0), 4).unwrap();
    assert_eq!(ctx.qdim_block(&vec![0], &vec![0]).unwrap(), qr("1/(1-q^2)"));

    let ctx = klr.context(RootVector::from_coeffs([(1, 2)]), 4).unwrap();
    assert_eq!(
        ctx.qdim_block(&vec![1, 1], &vec![1, 1]).unwrap(),
        qr("(1+q^2)/((1-q^2)^2)")
    );

    let ctx = klr.context(a12(), 4).unwrap();
    assert_eq!(ctx.qdim_block(&vec![1, 0], &vec![0, 1]).unwrap(), qr("q/((1-q^2)^2)"));
    assert!(matches!(
        ctx.qdim_block(&vec![0, 0], &vec![0, 1]),
        Err(KLRError::WeightMismatch(_))
    ));
}

#[test]
fn qdim_series_matches_closed_form() {
    let datum = d1();
    let klr = KLR::new(&datum);
    let alpha = RootVector::from_coeffs([(0, 1), (1, 1)]);
    let ctx = klr.context(alpha, 4).unwrap();
    for target in ctx.seqs().to_vec() {
        for source in ctx.seqs().to_vec() {
            let closed = ctx.qdim_block(&target, &source).unwrap();
            let series = closed.series_coeffs(20).unwrap();
            let counts = ctx.qdim_block_series(&target, &source, 20).unwrap();
            for (n, c) in counts.iter().enumerate() {
                assert_eq!(
                    series[n],
                    num_rational::BigRational::from_integer((*c as i64).into()),
                    "coefficient of q^{} in block ({:?}, {:?})",
                    n,
                    target,
                    source
                );
            }
        }
    }
}

#[test]
fn serre_identities_on_d1() {
    let datum = d1();
    let klr = KLR::new(&datum);
    let report = serre_verify(&klr, 0, 1).unwrap();
    assert_eq!(report.lines.len(), 5, "five identities for N = 2");
    assert!(report.all_passed(), "{}", report);
}

#[test]
fn center_membership() {
    let datum = d1();
    let klr = KLR::new(&datum);
    let ctx = klr.context(RootVector::from_coeffs([(1, 2)]), 3).unwrap();
    let e1 = &MPoly::var(2, 0) + &MPoly::var(2, 1);
    assert!(center_check(&ctx, &e1));
    assert!(!center_check(&ctx, &MPoly::var(2, 0)));

    // Height 1: every polynomial is central.
    let ctx = klr.context(RootVector::simple(0), 3).unwrap();
    assert!(center_check(&ctx, &MPoly::var(1, 0)));
}

#[test]
fn tau_squared_vanishes_on_equal_neighbors_with_symmetric_p() {
    let datum = d1();
    let klr = KLR::new(&datum);
    let alpha = RootVector::from_coeffs([(0, 2), (1, 2)]);
    let ctx = klr.context(alpha, 4).unwrap();
    for t in 1..ctx.nvars() {
        let tau = ctx.tau_op(t).unwrap();
        let squared = tau.compose(&tau);
        for seq in ctx.seqs() {
            if seq[t - 1] == seq[t] {
                let unit = ctx.unit_op(seq).unwrap();
                assert!(squared.compose(&unit).is_zero(), "tau_{}^2 1_{:?}", t, seq);
            }
        }
    }
}
#[test]
fn serre_identities_on_a12_minus_two_variant() {
    let datum = crate::cartan::tests_support::d4();
    let klr = KLR::new(&datum);
    let report = serre_verify(&klr, 0, 1).unwrap();
    assert!(report.all_passed(), "{}", report);
    // N = 3: two d+d+ instances, two d-d-, two ends, two middles.
    assert_eq!(report.lines.len(), 8);
}

#[test]
fn serre_inverse_route_for_zero_pairing() {
    let datum = crate::cartan::tests_support::d3();
    let klr = KLR::new(&datum);
    let report = serre_verify(&klr, 0, 1).unwrap();
    assert!(report.all_passed(), "{}", report);
}
