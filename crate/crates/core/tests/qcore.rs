mod common;

use aw_nevanlinna::qcore::xpoly::render_poly;
use aw_nevanlinna::qcore::{parse_hompoly, parse_mpoly, parse_xpoly, poly_roots, q, Laurent, MPoly, Poly, XPoly};
use aw_nevanlinna::Error;
use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn render_parse_round_trip(p in xpoly_strategy(6)) {
        let text = render_poly(p.poly(), "x");
        prop_assert_eq!(parse_xpoly(&text).unwrap(), p);
    }

    #[test]
    fn laurent_model_round_trip(p in xpoly_strategy(6)) {
        let l = p.to_laurent();
        prop_assert!(l.is_symmetric());
        prop_assert_eq!(XPoly::from_laurent(&l).unwrap(), p);
    }

    #[test]
    fn model_is_a_ring_map(a in xpoly_strategy(4), b in xpoly_strategy(4)) {
        prop_assert_eq!((&a * &b).to_laurent(), &a.to_laurent() * &b.to_laurent());
        prop_assert_eq!((&a + &b).to_laurent(), &a.to_laurent() + &b.to_laurent());
    }

    #[test]
    fn divrem_reconstructs(a in xpoly_strategy(6), b in nonzero_xpoly_strategy(3)) {
        let (qq, r) = a.poly().divrem(b.poly());
        prop_assert_eq!(&(&qq * b.poly()) + &r, a.poly().clone());
        prop_assert!(r.is_zero() || r.deg0() < b.poly().deg0());
    }

    #[test]
    fn gcd_divides_both(a in nonzero_xpoly_strategy(4), b in nonzero_xpoly_strategy(4), c in nonzero_xpoly_strategy(2)) {
        let (pa, pb) = (a.poly() * c.poly(), b.poly() * c.poly());
        let g = Poly::gcd(&pa, &pb);
        prop_assert!(pa.div_exact(&g).is_some());
        prop_assert!(pb.div_exact(&g).is_some());
        prop_assert!(g.deg0() >= c.poly().deg0());
    }

    #[test]
    fn square_free_reconstructs(a in nonzero_xpoly_strategy(3), b in nonzero_xpoly_strategy(2)) {
        let p = &a.poly().pow(2) * b.poly();
        let rebuilt = p.square_free().into_iter().fold(Poly::one(), |acc, (f, i)| &acc * &f.pow(i));
        prop_assert_eq!(rebuilt.monic(), p.monic());
    }

    #[test]
    fn numeric_roots_cover_degree(p in nonzero_xpoly_strategy(5)) {
        prop_assume!(p.deg0() > 0);
        let roots = poly_roots(p.poly(), 1e-8).unwrap();
        let total: usize = roots.iter().map(|r| r.1).sum();
        prop_assert_eq!(total, p.deg0());
    }

    #[test]
    fn mpoly_eval_matches_composition(a in xpoly_strategy(3), b in xpoly_strategy(3)) {
        let m = parse_hompoly("x0^2 - 3 * x0 * x1 + 1/2 * x1^2", 1).unwrap();
        let direct = &(&a.pow(2) - &(&a * &b).scale(&q(3))) + &b.pow(2).scale(&aw_nevanlinna::qcore::qr(1, 2));
        prop_assert_eq!(m.eval_xpolys(&[a, b]), direct);
    }
}

#[test]
fn parser_errors_carry_offsets() {
    assert!(matches!(parse_xpoly("x^-2"), Err(Error::Exponent { offset: 2, .. })));
    assert!(matches!(parse_xpoly("x^1.5"), Err(Error::Exponent { .. })));
    assert!(matches!(parse_xpoly("2 / 3"), Err(Error::Syntax { .. })));
    assert!(matches!(parse_xpoly("(x + 1"), Err(Error::Syntax { .. })));
    assert!(matches!(parse_xpoly("y"), Err(Error::Syntax { offset: 0, .. })));
    assert_eq!(parse_xpoly("2/3 * x").unwrap(), XPoly::new(vec![q(0), aw_nevanlinna::qcore::qr(2, 3)]));
}

#[test]
fn hompoly_rejects_mixed_degrees() {
    assert!(parse_hompoly("x0^2 + x1", 1).is_err());
    let m = parse_mpoly("x0 * x1", &MPoly::default_names(2)).unwrap();
    assert!(m.is_homogeneous());
}

#[test]
fn laurent_orders() {
    let l = Laurent::new(-2, vec![q(4), q(-4), q(1)]);
    let z = aw_nevanlinna::qcore::GaussPoint::real(q(2));
    assert_eq!(l.order_at(&z).unwrap(), 2);
    assert!(Laurent::zero().order_at(&z).is_err());
}
