mod common;

use aw_nevanlinna::nevanlinna::fmt::{counting_n, fmt_check, proximity_m};
use aw_nevanlinna::nevanlinna::truncated::*;
use aw_nevanlinna::nevanlinna::{growth_trend, GrowthKind, Hypersurface, ProjCurveRep, RGrid, ZeroList};
use aw_nevanlinna::qcore::{parse_hompoly, q, RatFunc, XPoly};
use common::*;
use proptest::prelude::*;
use rand::Rng;

/// `int_0^r n(t)/t dt` by the midpoint rule on a log scale.
fn counting_by_integration(z: &ZeroList, r: f64) -> f64 {
    let steps = 200_000;
    let (lo, hi) = (1e-6f64.ln(), r.ln());
    let h = (hi - lo) / steps as f64;
    let mut acc = 0.0;
    for k in 0..steps {
        let t = (lo + h * (k as f64 + 0.5)).exp();
        let n: usize = z.entries.iter().filter(|e| e.0 <= t).map(|e| e.1).sum();
        acc += n as f64 * h;
    }
    acc + z.origin_mult as f64 * r.ln()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn counting_is_monotone(p in nonzero_xpoly_strategy(5), a in 1.5f64..50.0, b in 1.5f64..50.0) {
        let z = ZeroList::from_xpoly(&p, 1e-8).unwrap();
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        prop_assert!(counting_n(&z, lo) <= counting_n(&z, hi) + 1e-12);
    }

    #[test]
    fn order_identity_on_planted(seed in any::<u64>(), m in 1u32..=3) {
        let mut r = rng(seed);
        let inst = planted_instance(&mut r, m);
        prop_assert!(verify_lemma53(&inst.product(), m, &inst.points, &ctx()).unwrap());
    }

    #[test]
    fn superadditivity_on_planted(seed in any::<u64>(), m in 1u32..=3) {
        let mut r = rng(seed);
        let inst = planted_instance(&mut r, m);
        let rep = superadditivity_report(&inst.factor_funcs(), m, &inst.points, &ctx()).unwrap();
        prop_assert!(rep.aw);
        prop_assert_eq!(rep.classical, Some(true));
    }

    #[test]
    fn truncated_count_bounded_by_all_zeros(seed in any::<u64>(), m in 1u32..=3) {
        let mut r = rng(seed);
        let inst = planted_instance(&mut r, m);
        let f = inst.product();
        let c = ctx();
        let got = trunc_aw_m(&f, &q(0), m, &inst.points, &c).unwrap();
        let shifted = aw_nevanlinna::awops::shift(&f, delta(m), &c);
        let all: usize = inst.points.iter().map(|z| shifted.order_at(z).unwrap()).sum();
        prop_assert!(got <= all);
    }
}

#[test]
fn counting_matches_integration() {
    let p = &XPoly::from_ints(&[-3, 1]).pow(2) * &XPoly::from_ints(&[0, 1, 0, 2]);
    let z = ZeroList::from_xpoly(&p, 1e-8).unwrap();
    for r in [2.0, 5.0, 40.0] {
        let closed = counting_n(&z, r);
        let numeric = counting_by_integration(&z, r);
        assert!((closed - numeric).abs() < 1e-3, "r = {r}: {closed} vs {numeric}");
    }
}

#[test]
fn quadrature_converges_when_doubled() {
    let f = RatFunc::from_xpoly(&XPoly::from_ints(&[3, -1, 2]));
    for r in [10.0, 137.0, 5000.0] {
        let a = proximity_m(&f, r, 1024).unwrap();
        let b = proximity_m(&f, r, 2048).unwrap();
        assert!((a - b).abs() < 1e-6);
    }
}

#[test]
fn fmt_spread_small_for_random_pairs() {
    let mut r = rng(2024);
    let grid = RGrid::default_grid();
    let mut checked = 0;
    while checked < 8 {
        let n = r.gen_range(1..=2);
        let comps: Vec<XPoly> = (0..=n).map(|_| random_xpoly(&mut r, 3)).collect();
        let Ok(curve) = ProjCurveRep::new(comps, ctx()) else { continue };
        let d = r.gen_range(1..=3);
        let Some(h) = random_hypersurface(&mut r, n, d) else { continue };
        let Ok(rep) = fmt_check(&curve, &h, &grid) else { continue };
        assert!(rep.spread < 0.05, "spread {} for {:?} / {}", rep.spread, curve.components, h.q);
        checked += 1;
    }
}

#[test]
fn fmt_line_is_exact() {
    let curve = ProjCurveRep::new(vec![XPoly::one(), XPoly::x()], ctx()).unwrap();
    let h = Hypersurface::new(parse_hompoly("x1", 1).unwrap()).unwrap();
    let rep = fmt_check(&curve, &h, &RGrid::default_grid()).unwrap();
    assert!(rep.rows.iter().all(|row| row.deviation.abs() < 1e-6));
}

#[test]
fn growth_reports_are_finite() {
    let g = RGrid::geometric(10.0, 1000.0, 6, 512).unwrap();
    let f = XPoly::from_ints(&[1, 0, 1]);
    for kind in [GrowthKind::LdDq, GrowthKind::LdAvg, GrowthKind::ShiftN] {
        let rep = growth_trend(&f, kind, 2, &g, &ctx()).unwrap();
        assert_eq!(rep.rows.len(), 6);
        assert!(rep.rows.iter().all(|r| r.value.is_finite() && r.ratio.is_finite()));
    }
}

#[test]
fn guard_rejected_for_small_grids() {
    let g = RGrid::geometric(1.5, 10.0, 3, 256).unwrap();
    assert!(g.check_guard(&ctx(), 3).is_err());
}
