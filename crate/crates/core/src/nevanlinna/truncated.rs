//! Truncated counting functions and the pointwise order identities behind
//! them. Orders are exact: query points are Gaussian rationals in the
//! z-model and vanishing orders come from synthetic division.

use num::complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::awops::{mixed_all, shift, AwContext};
use crate::error::{Error, Result};
use crate::qcore::scalar::{qpow, qr, Q};
use crate::qcore::{GaussPoint, Laurent, Poly, RatFunc, XPoly};

/// `-1` for odd `M`, `0` for even `M`.
pub fn delta(m: u32) -> i64 {
    if m % 2 == 1 {
        -1
    } else {
        0
    }
}

/// Order of zero, `None` for the zero function (order infinity).
fn ord(f: &RatFunc, z: &GaussPoint) -> Option<usize> {
    if f.is_zero() {
        None
    } else {
        Some(f.order_at(z).expect("nonzero"))
    }
}

fn min_ord<'a>(fs: impl IntoIterator<Item = &'a RatFunc>, z: &GaussPoint) -> usize {
    fs.into_iter()
        .filter_map(|f| ord(f, z))
        .min()
        .expect("at least one nonzero function")
}

fn check_points(points: &[GaussPoint], n: u32, ctx: &AwContext) -> Result<()> {
    points.iter().try_for_each(|z| ctx.check_guard(z, n))
}

fn minus_const(f: &RatFunc, a: &Q) -> Result<RatFunc> {
    let g = f - &RatFunc::constant(a.clone());
    if g.is_zero() {
        return Err(Error::ZeroFunction);
    }
    Ok(g)
}

/// `sum min{nu_{f-a}(x), M}` over the supplied exact points in the x-plane.
pub fn trunc_classical(f: &XPoly, a: &Q, m: u32, points: &[GaussPoint]) -> Result<usize> {
    let g = f - &XPoly::constant(a.clone());
    if g.is_zero() {
        return Err(Error::ZeroFunction);
    }
    Ok(points.iter().map(|x| g.poly().order_at(x).min(m as usize)).sum())
}

/// `sum [nu(eta^{delta(M)}(f-a)) - min_t nu(A_{q^{M-t}} D^t (f-a))]`.
pub fn trunc_aw_m(f: &RatFunc, a: &Q, m: u32, points: &[GaussPoint], ctx: &AwContext) -> Result<usize> {
    check_points(points, m, ctx)?;
    let g = minus_const(f, a)?;
    let ops = mixed_all(&g, m, ctx);
    let gd = shift(&g, delta(m), ctx);
    let mut total = 0usize;
    for z in points {
        let top = ord(&gd, z).unwrap();
        let low = min_ord(&ops, z);
        debug_assert!(top >= low, "shifted order below the operator minimum");
        total += top.saturating_sub(low);
    }
    Ok(total)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CfCounts {
    /// `sum nu(f-a) - min{nu(f-a), nu(eta D (f-a))}`.
    pub first: usize,
    /// `sum nu(f-a) - min{nu(f-a), nu(eta^2 (f-a))}`.
    pub second: usize,
}

pub fn trunc_aw_cf(f: &RatFunc, a: &Q, points: &[GaussPoint], ctx: &AwContext) -> Result<CfCounts> {
    check_points(points, 2, ctx)?;
    let g = minus_const(f, a)?;
    let ed = shift(&crate::awops::aw_diff(&g, ctx), 1, ctx);
    let e2 = shift(&g, 2, ctx);
    let mut out = CfCounts { first: 0, second: 0 };
    for z in points {
        let v = ord(&g, z).unwrap();
        out.first += v - ord(&ed, z).map_or(v, |w| v.min(w));
        out.second += v - ord(&e2, z).map_or(v, |w| v.min(w));
    }
    Ok(out)
}

/// `min_t nu(A_{q^{M-t}} D^t f) = min_t nu(eta^{M-2t} f)` at every point.
pub fn verify_lemma53(f: &RatFunc, m: u32, points: &[GaussPoint], ctx: &AwContext) -> Result<bool> {
    check_points(points, m, ctx)?;
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let ops = mixed_all(f, m, ctx);
    let shifts: Vec<RatFunc> = (0..=m as i64).map(|t| shift(f, m as i64 - 2 * t, ctx)).collect();
    Ok(points.iter().all(|z| min_ord(&ops, z) == min_ord(&shifts, z)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SuperadditivityReport {
    pub aw: bool,
    /// `None` unless every factor is a polynomial in `x`.
    pub classical: Option<bool>,
}

impl SuperadditivityReport {
    pub fn holds(&self) -> bool {
        self.aw && self.classical.unwrap_or(true)
    }
}

/// The AW inequality at each point, and the two-sided derivative chain at
/// the corresponding `x = (z + 1/z)/2` when the factors are polynomials.
pub fn superadditivity_report(
    factors: &[RatFunc],
    m: u32,
    points: &[GaussPoint],
    ctx: &AwContext,
) -> Result<SuperadditivityReport> {
    check_points(points, m, ctx)?;
    if factors.is_empty() || factors.iter().any(|f| f.is_zero()) {
        return Err(Error::ZeroFunction);
    }
    let prod = factors.iter().fold(RatFunc::one(), |a, f| &a * f);
    let prod_ops = mixed_all(&prod, m, ctx);
    let factor_ops: Vec<Vec<RatFunc>> = factors.iter().map(|f| mixed_all(f, m, ctx)).collect();
    let aw = points.iter().all(|z| {
        let lhs = min_ord(&prod_ops, z);
        let rhs: usize = factor_ops.iter().map(|ops| min_ord(ops, z)).sum();
        lhs >= rhs
    });
    let polys: Option<Vec<XPoly>> = factors.iter().map(|f| f.to_xpoly().ok()).collect();
    let classical = polys.map(|ps| {
        let xs: Vec<GaussPoint> = points.iter().map(z_to_x).collect();
        classical_chain(&ps, m, &xs)
    });
    Ok(SuperadditivityReport { aw, classical })
}

pub fn verify_order_superadditivity(
    factors: &[RatFunc],
    m: u32,
    points: &[GaussPoint],
    ctx: &AwContext,
) -> Result<bool> {
    Ok(superadditivity_report(factors, m, points, ctx)?.holds())
}

/// `x = (z + 1/z)/2` exactly.
pub fn z_to_x(z: &GaussPoint) -> GaussPoint {
    (&(z + &z.recip())).scale(&qr(1, 2))
}

fn min_deriv_order(p: &XPoly, upto: usize, x: &GaussPoint) -> usize {
    let mut d = p.clone();
    let mut best = usize::MAX;
    for _ in 0..=upto {
        if d.is_zero() {
            break;
        }
        best = best.min(d.poly().order_at(x));
        d = d.derivative();
    }
    best
}

/// `min_{t<=M} nu(f^(t)) >= sum_i min_{t<=M} nu(f_i^(t)) >= min_{t<=mM} nu(f^(t))`.
pub fn classical_chain(factors: &[XPoly], m: u32, points: &[GaussPoint]) -> bool {
    let f = factors.iter().fold(XPoly::one(), |a, p| &a * p);
    let k = factors.len();
    points.iter().all(|x| {
        let left = min_deriv_order(&f, m as usize, x);
        let mid: usize = factors.iter().map(|p| min_deriv_order(p, m as usize, x)).sum();
        let right = min_deriv_order(&f, k * m as usize, x);
        left >= mid && mid >= right
    })
}

/// Zero moduli in the x-plane with real weights; the origin is kept apart.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct WeightedZeros {
    pub entries: Vec<(f64, f64)>,
    pub origin: f64,
}

impl WeightedZeros {
    /// Integrated count `sum w log(r/|x|) + origin log r`.
    pub fn counting(&self, r: f64) -> f64 {
        let lr = r.ln();
        let mut acc = self.origin * lr;
        for &(m, w) in &self.entries {
            if m <= r {
                acc += w * (lr - m.ln());
            }
        }
        acc
    }

    pub fn total(&self) -> f64 {
        self.origin + self.entries.iter().map(|e| e.1).sum::<f64>()
    }
}

const CIRCLE_TOL: f64 = 1e-9;

/// Weight of a z-root for counting x-points: roots with `|z| > 1` count
/// once, the unit circle is split by `Im z > 0`, and `z = +-1` counts half.
fn branch_weight(z: Complex64) -> f64 {
    let a = z.norm();
    if a > 1.0 + CIRCLE_TOL {
        1.0
    } else if a < 1.0 - CIRCLE_TOL {
        0.0
    } else if z.im.abs() <= CIRCLE_TOL {
        0.5
    } else if z.im > 0.0 {
        1.0
    } else {
        0.0
    }
}

/// Split a square-free `b` into pieces on which `o` has constant order.
fn split_by_order(b: &Poly, o: &Poly) -> Vec<(Poly, usize)> {
    let g = Poly::gcd(b, o);
    if g.deg0() == 0 {
        return vec![(b.clone(), 0)];
    }
    let mut out = Vec::new();
    let rest = b.div_exact(&g).unwrap();
    if rest.deg0() > 0 {
        out.push((rest, 0));
    }
    let inner = o.div_exact(&g).unwrap();
    for (p, k) in split_by_order(&g, &inner) {
        out.push((p, k + 1));
    }
    out
}

/// Truncation levels up to this use the operator form directly.
pub const MIXED_FORM_MAX_M: u32 = 256;

/// Pointwise `nu(eta^delta target) - sum_i min_t nu(A_{q^{M-t}} D^t part_i)`
/// at every zero of `eta^delta target`, mapped to `|x|`. With no parts this
/// is the plain zero distribution of the shifted target.
///
/// Orders are exact: the zero set is cut into coprime square-free pieces on
/// which every operator has a constant order, and only the piece roots are
/// computed numerically. When `M` exceeds the root count of a part, the
/// shift form of the operator minimum is identically 0 and that part drops
/// out.
pub fn truncated_profile(
    target: &Laurent,
    parts: &[Laurent],
    m: u32,
    delta_shift: i64,
    ctx: &AwContext,
) -> Result<WeightedZeros> {
    if target.is_zero() || parts.iter().any(|p| p.is_zero()) {
        return Err(Error::ZeroFunction);
    }
    let shifted = target.scale_var(&qpow(ctx.s(), delta_shift));
    let mut ops: Vec<Vec<Poly>> = Vec::with_capacity(parts.len());
    for p in parts {
        let roots = p.poly().deg0();
        if m as usize > roots {
            // Distinct shifts eta^{M-2t} send a point to distinct places, and
            // only `roots` of them can land on a zero, so the minimum is 0.
            ops.push(Vec::new());
        } else if m <= MIXED_FORM_MAX_M {
            let f = RatFunc::from_laurent(p.clone());
            ops.push(
                mixed_all(&f, m, ctx)
                    .into_iter()
                    .filter(|o| !o.is_zero())
                    .map(|o| o.num().poly().clone())
                    .collect(),
            );
        } else {
            return Err(Error::TooLarge(format!("truncation level {m} with {roots} operator roots")));
        }
    }
    // (piece, order in target, order of every operator of every part)
    let mut pieces: Vec<(Poly, usize, Vec<Vec<usize>>)> = shifted
        .poly()
        .square_free()
        .into_iter()
        .map(|(b, e)| (b, e, vec![Vec::new(); parts.len()]))
        .collect();
    for (i, part_ops) in ops.iter().enumerate() {
        for o in part_ops {
            let mut next = Vec::new();
            for (b, e, orders) in pieces {
                for (piece, k) in split_by_order(&b, o) {
                    let mut ords = orders.clone();
                    ords[i].push(k);
                    next.push((piece, e, ords));
                }
            }
            pieces = next;
        }
    }
    let mut out = WeightedZeros::default();
    for (b, e, orders) in pieces {
        let sub: usize = orders.iter().map(|v| v.iter().copied().min().unwrap_or(0)).sum();
        let count = e.saturating_sub(sub);
        if count == 0 {
            continue;
        }
        for z in crate::qcore::roots::squarefree_roots(&b) {
            let w = branch_weight(z) * count as f64;
            if w == 0.0 {
                continue;
            }
            let x = ((z + 1.0 / z) / 2.0).norm();
            if x < 1e-12 {
                out.origin += w;
            } else {
                out.entries.push((x, w));
            }
        }
    }
    out.entries.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(out)
}

/// `s^k` as an exact rational.
pub fn s_pow(ctx: &AwContext, k: i64) -> Q {
    qpow(ctx.s(), k)
}
