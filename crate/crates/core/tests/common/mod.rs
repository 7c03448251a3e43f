//! Shared generators for the integration suites.
#![allow(dead_code)]

use aw_nevanlinna::awops::AwContext;
use aw_nevanlinna::qcore::{q, qr, GaussPoint, RatFunc, XPoly, Q};
use proptest::prelude::*;
use aw_nevanlinna::nevanlinna::Hypersurface;
use aw_nevanlinna::qcore::parse_hompoly;
use itertools::Itertools;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ctx() -> AwContext {
    AwContext::default()
}

/// Small rational coefficient `a/b` with `|a| <= 9`, `1 <= b <= 4`.
pub fn small_q(r: &mut impl Rng) -> Q {
    qr(r.gen_range(-9..=9), r.gen_range(1..=4))
}

pub fn random_xpoly(r: &mut impl Rng, max_deg: usize) -> XPoly {
    let d = r.gen_range(0..=max_deg);
    let mut c: Vec<Q> = (0..=d).map(|_| small_q(r)).collect();
    if c[d] == q(0) {
        c[d] = q(1);
    }
    XPoly::new(c)
}

pub fn random_nonzero(r: &mut impl Rng, max_deg: usize) -> XPoly {
    loop {
        let p = random_xpoly(r, max_deg);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn coeff_strategy() -> impl Strategy<Value = Q> {
    (-9i64..=9, 1i64..=4).prop_map(|(a, b)| qr(a, b))
}

pub fn xpoly_strategy(max_deg: usize) -> impl Strategy<Value = XPoly> {
    prop::collection::vec(coeff_strategy(), 1..=max_deg + 1).prop_map(XPoly::new)
}

pub fn nonzero_xpoly_strategy(max_deg: usize) -> impl Strategy<Value = XPoly> {
    xpoly_strategy(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

/// The x-image of a z-point.
pub fn x_of(z: &GaussPoint) -> GaussPoint {
    aw_nevanlinna::nevanlinna::truncated::z_to_x(z)
}

/// Real polynomial in `x` vanishing at the x-image of `z0` (and of its
/// conjugate when `z0` is not real).
pub fn planted(z0: &GaussPoint) -> XPoly {
    let x0 = x_of(z0);
    if x0.im == q(0) {
        XPoly::new(vec![-x0.re, q(1)])
    } else {
        XPoly::new(vec![x0.norm_sqr(), -(x0.re.clone() * q(2)), q(1)])
    }
}

/// Planted-zero instance: factors vanishing on a shift chain
/// `s^j z0`, plus exact query points on and next to the chain, all outside
/// the guard radius for level `m`.
pub struct Planted {
    pub factors: Vec<XPoly>,
    pub points: Vec<GaussPoint>,
}

impl Planted {
    pub fn product(&self) -> RatFunc {
        RatFunc::from_xpoly(&self.factors.iter().fold(XPoly::one(), |a, f| &a * f))
    }

    pub fn factor_funcs(&self) -> Vec<RatFunc> {
        self.factors.iter().map(RatFunc::from_xpoly).collect()
    }
}

pub fn planted_instance(r: &mut impl Rng, m: u32) -> Planted {
    let guard = 1i64 << (m + 1);
    let base = loop {
        let re = r.gen_range(1..=7) * guard * 4;
        let im = if r.gen_bool(0.3) { r.gen_range(1..=5) * guard } else { 0 };
        break GaussPoint::new(q(re), q(im));
    };
    let mut factors = Vec::new();
    let mut points = Vec::new();
    let chain = r.gen_range(1..=3);
    for j in 0..chain {
        // Chain members step by s^{-1} = 2 or s^{-2} = 4.
        let step: i64 = if r.gen_bool(0.5) { 2 } else { 4 };
        let z = base.scale(&q(step.pow(j as u32)));
        let mult = r.gen_range(1..=3);
        for _ in 0..mult {
            factors.push(planted(&z));
        }
        points.push(z);
    }
    if r.gen_bool(0.5) {
        let other = GaussPoint::real(q(r.gen_range(3..=9) * guard * 3 + 1));
        factors.push(planted(&other));
        points.push(other);
    }
    let mut query = Vec::new();
    for p in &points {
        for k in -(m as i64) - 1..=(m as i64) + 1 {
            let z = p.scale(&aw_nevanlinna::qcore::scalar::qpow(&qr(1, 2), k));
            if z.modulus_gt(&q(1i64 << m)) && !query.contains(&z) {
                query.push(z);
            }
        }
    }
    Planted { factors, points: query }
}

/// Random homogeneous form of degree `d` in `x0..xn` with small positive
/// coefficients, or `None` when every monomial was dropped.
pub fn random_hypersurface(r: &mut impl Rng, n: usize, d: usize) -> Option<Hypersurface> {
    let names: Vec<String> = (0..=n).map(|i| format!("x{i}")).collect();
    let mut terms = Vec::new();
    for idx in (0..=n).combinations_with_replacement(d) {
        if r.gen_bool(0.6) {
            let mono = idx.iter().map(|&i| names[i].clone()).join(" * ");
            terms.push(format!("{} * {}", r.gen_range(1..=5), mono));
        }
    }
    if terms.is_empty() {
        return None;
    }
    Hypersurface::new(parse_hompoly(&terms.join(" + "), n).ok()?).ok()
}
