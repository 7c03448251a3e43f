mod common;

use aw_nevanlinna::decomp::*;
use aw_nevanlinna::nevanlinna::Hypersurface;
use aw_nevanlinna::qcore::parse_hompoly;
use common::rng;
use proptest::prelude::*;
use rand::Rng;

fn random_multiset(r: &mut impl Rng, max_s: usize) -> DegreeMultiset {
    let s = r.gen_range(1..=max_s);
    DegreeMultiset::new((0..s).map(|_| r.gen_range(1..=20)).collect()).unwrap()
}

#[test]
fn greedy_respects_bound_on_random_multisets() {
    let mut r = rng(7);
    for _ in 0..1000 {
        let ds = random_multiset(&mut r, 40);
        for sp in 1..=ds.count() {
            let (dec, _) = greedy_decompose(&ds, sp).unwrap();
            let b = bound(ds.total(), ds.count(), sp).unwrap();
            assert!(dec.max_degree() <= b, "{:?} s'={sp}: {} > {b}", ds.degrees(), dec.max_degree());
            assert!(dec.is_valid_for(&ds));
        }
    }
}

#[test]
fn oracle_sandwich_small_multisets() {
    let mut r = rng(11);
    let mut strict = 0;
    for _ in 0..300 {
        let ds = random_multiset(&mut r, 10);
        for sp in 1..=ds.count() {
            let (dec, _) = greedy_decompose(&ds, sp).unwrap();
            let best = brute_force_minmax(&ds, sp).unwrap();
            let b = bound(ds.total(), ds.count(), sp).unwrap();
            assert!(best <= dec.max_degree() && dec.max_degree() <= b);
            if best < dec.max_degree() {
                strict += 1;
            }
        }
    }
    println!("greedy strictly suboptimal on {strict} instances");
}

proptest! {
    #[test]
    fn greedy_is_deterministic(degs in prop::collection::vec(1usize..=20, 1..=25), k in 1usize..=25) {
        let ds = DegreeMultiset::new(degs.clone()).unwrap();
        let sp = k.min(ds.count());
        let a = greedy_decompose(&ds, sp).unwrap();
        let b = greedy_decompose(&DegreeMultiset::new(degs).unwrap(), sp).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn trace_is_monotone(degs in prop::collection::vec(1usize..=12, 1..=20), k in 1usize..=20) {
        let ds = DegreeMultiset::new(degs).unwrap();
        let sp = k.min(ds.count());
        let (dec, trace) = greedy_decompose(&ds, sp).unwrap();
        for w in trace.rows.windows(2) {
            prop_assert!(w[0].k > w[1].k && w[0].d <= w[1].d && w[0].s <= w[1].s);
        }
        let last = trace.rows.last().unwrap();
        prop_assert_eq!(last.d, ds.total());
        prop_assert_eq!(last.i_max, dec.max_degree());
    }

    #[test]
    fn single_bin_holds_everything(degs in prop::collection::vec(1usize..=20, 1..=BRUTE_FORCE_MAX)) {
        let ds = DegreeMultiset::new(degs).unwrap();
        let (dec, _) = greedy_decompose(&ds, 1).unwrap();
        prop_assert_eq!(dec.max_degree(), ds.total());
        prop_assert_eq!(brute_force_minmax(&ds, 1).unwrap(), ds.total());
    }
}

#[test]
fn table1_golden() {
    let (ds, dec, trace) = table1();
    assert_eq!(dec.bin_degrees, vec![13, 13, 13]);
    let rows: Vec<_> = trace.rows.iter().map(|r| (r.k, r.d, r.s, r.i_max, r.i_min)).collect();
    assert_eq!(rows, TABLE1_ROWS.to_vec());
    assert_eq!(render_table(&ds, &trace), TABLE1_GOLDEN);
}

#[test]
fn bad_inputs_are_rejected() {
    assert!(DegreeMultiset::new(vec![]).is_err());
    assert!(DegreeMultiset::new(vec![2, 0]).is_err());
    let ds = DegreeMultiset::new(vec![2, 1]).unwrap();
    assert!(greedy_decompose(&ds, 3).is_err());
    assert!(greedy_decompose(&ds, 0).is_err());
    let big = DegreeMultiset::new(vec![1; BRUTE_FORCE_MAX + 1]).unwrap();
    assert!(brute_force_minmax(&big, 2).is_err());
}

#[test]
fn repeated_factor_stays_atomic() {
    let x0 = parse_hompoly("x0", 1).unwrap();
    let x1 = parse_hompoly("x1", 1).unwrap();
    let h = Hypersurface::from_factors(vec![(x0.clone(), 2), (x1.clone(), 1)]).unwrap();
    let (groups, dec) = polynomial_decompose(&h, 2).unwrap();
    assert_eq!(dec.bin_degrees, vec![2, 1]);
    assert_eq!(groups, vec![x0.pow(2), x1]);
    let prod = groups.iter().fold(aw_nevanlinna::qcore::mpoly::MPoly::constant(2, aw_nevanlinna::qcore::q(1)), |a, g| &a * g);
    assert_eq!(prod, h.q);
}
