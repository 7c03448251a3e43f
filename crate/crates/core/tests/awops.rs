mod common;

use aw_nevanlinna::awops::*;
use aw_nevanlinna::qcore::{q, qr, GaussPoint, RatFunc, XPoly};
use aw_nevanlinna::Error;
use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn product_rule(f in xpoly_strategy(5), g in xpoly_strategy(5)) {
        let c = ctx();
        prop_assert!(verify_product_rule(&RatFunc::from_xpoly(&f), &RatFunc::from_xpoly(&g), &c));
    }

    #[test]
    fn quotient_rule(f in xpoly_strategy(4), g in nonzero_xpoly_strategy(3)) {
        let c = ctx();
        prop_assert!(verify_quotient_rule(&RatFunc::from_xpoly(&f), &RatFunc::from_xpoly(&g), &c).unwrap());
    }

    #[test]
    fn dq_lowers_degree_by_one(f in nonzero_xpoly_strategy(6)) {
        let c = ctx();
        let d = aw_diff(&RatFunc::from_xpoly(&f), &c);
        match f.deg0() {
            0 => prop_assert!(d.is_zero()),
            k => prop_assert_eq!(d.to_xpoly().unwrap().deg0(), k - 1),
        }
    }

    #[test]
    fn averaging_keeps_polynomials(f in nonzero_xpoly_strategy(5), n in 0u32..4) {
        let c = ctx();
        let a = aw_avg(&RatFunc::from_xpoly(&f), n, &c).to_xpoly().unwrap();
        prop_assert_eq!(a.deg0(), f.deg0());
    }

    #[test]
    fn operators_are_linear(f in xpoly_strategy(4), g in xpoly_strategy(4), m in 1u32..4, t in 0u32..4) {
        prop_assume!(t <= m);
        let c = ctx();
        let (rf, rg) = (RatFunc::from_xpoly(&f), RatFunc::from_xpoly(&g));
        let lhs = mixed(&(&rf + &rg), m, t, &c);
        prop_assert_eq!(lhs, &mixed(&rf, m, t, &c) + &mixed(&rg, m, t, &c));
    }
}

#[test]
fn worked_values() {
    let c = ctx();
    let x2 = RatFunc::from_xpoly(&XPoly::from_ints(&[0, 0, 1]));
    let x = RatFunc::from_xpoly(&XPoly::x());
    assert_eq!(aw_diff(&x2, &c).to_xpoly().unwrap(), XPoly::new(vec![q(0), qr(5, 2)]));
    assert_eq!(aw_avg(&x, 1, &c).to_xpoly().unwrap(), XPoly::new(vec![q(0), qr(5, 4)]));
    assert_eq!(aw_avg(&x, 2, &c).to_xpoly().unwrap(), XPoly::new(vec![q(0), qr(17, 8)]));
    assert_eq!(mixed(&x2, 2, 1, &c).to_xpoly().unwrap(), XPoly::new(vec![q(0), qr(25, 8)]));
}

#[test]
fn guard_and_parameter_errors() {
    let c = ctx();
    assert!(matches!(c.check_guard(&GaussPoint::real(q(3)), 2), Err(Error::GuardViolation { .. })));
    assert!(c.check_guard(&GaussPoint::real(q(5)), 2).is_ok());
    assert!(AwContext::new(q(1)).is_err());
    assert!(AwContext::new(qr(-1, 2)).is_err());
}

#[test]
fn other_deformation_parameter() {
    let c = AwContext::new(qr(1, 3)).unwrap();
    let mut r = rng(7);
    for _ in 0..20 {
        let f = RatFunc::from_xpoly(&random_xpoly(&mut r, 4));
        let g = RatFunc::from_xpoly(&random_nonzero(&mut r, 3));
        assert!(verify_product_rule(&f, &g, &c));
        assert!(verify_quotient_rule(&f, &g, &c).unwrap());
    }
}
