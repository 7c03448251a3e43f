//! Desk-scale margin harnesses. Each row compares the two sides of a
//! second main theorem at one radius; the verdict is a trend contract on
//! `margin / T` over the top half of the grid.

use itertools::Itertools;
use num::integer::Integer;
use num::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::params::{compute_smt_params, SmtParams};
use super::position::{general_position_check, hypersurface_position, HyperplaneSet, PositionMethod};
use crate::awwronskian::{linearly_independent, wronskian, FunctionTuple};
use crate::decomp::polynomial_decompose;
use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::nevanlinna::fmt::{characteristic_t_curve, counting_n};
use crate::nevanlinna::quadrature::circle_mean;
use crate::nevanlinna::truncated::{truncated_profile, WeightedZeros};
use crate::nevanlinna::{Hypersurface, ProjCurveRep, RGrid, ZeroList};
use crate::qcore::roots::DEFAULT_CLUSTER_TOL;
use crate::qcore::scalar::{fmt_q, to_f64};
use crate::qcore::{MPoly, XPoly, Q};

/// Tunables shared by the harnesses.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HarnessOptions {
    pub slack: f64,
    pub cluster_tol: f64,
    /// Highest degree of polynomial relation searched among the curve
    /// components; `None` means twice the largest component degree.
    pub relation_degree: Option<usize>,
}

impl Default for HarnessOptions {
    fn default() -> Self {
        HarnessOptions { slack: 0.05, cluster_tol: DEFAULT_CLUSTER_TOL, relation_degree: None }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MarginRow {
    pub r: f64,
    #[serde(rename = "T")]
    pub t: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub ratio: f64,
    /// Second right-hand side (truncated counts), when the theorem has one.
    pub rhs_alt: Option<f64>,
    pub margin_alt: Option<f64>,
    pub ratio_alt: Option<f64>,
}

impl MarginRow {
    fn new(r: f64, t: f64, lhs: f64, rhs: f64, rhs_alt: Option<f64>) -> Self {
        let ratio = |m: f64| if t > 0.0 { m / t } else { 0.0 };
        let margin = rhs - lhs;
        let margin_alt = rhs_alt.map(|a| a - lhs);
        MarginRow { r, t, lhs, rhs, margin, ratio: ratio(margin), rhs_alt, margin_alt, ratio_alt: margin_alt.map(ratio) }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrendVerdict {
    pub slack: f64,
    /// Smallest `margin / T` over the top half of the grid.
    pub worst_ratio: f64,
    pub rows_checked: usize,
    pub pass: bool,
}

impl TrendVerdict {
    pub fn of(rows: &[MarginRow], slack: f64) -> Self {
        let top = &rows[rows.len() / 2..];
        let worst_ratio = top
            .iter()
            .flat_map(|r| std::iter::once(r.ratio).chain(r.ratio_alt))
            .fold(f64::INFINITY, f64::min);
        TrendVerdict { slack, worst_ratio, rows_checked: top.len(), pass: worst_ratio >= -slack }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MarginReport {
    pub theorem: String,
    pub s: String,
    pub theta_points: usize,
    pub notes: Vec<String>,
    pub params: Option<SmtParams>,
    pub rows: Vec<MarginRow>,
    pub verdict: TrendVerdict,
}

impl MarginReport {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &self.rows {
            w.serialize(row).map_err(|e| Error::InvalidParameter(e.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| Error::InvalidParameter(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

fn check_linear_independence(curve: &ProjCurveRep) -> Result<()> {
    if !linearly_independent(&curve.components) {
        return Err(Error::DependentCurve("components are linearly dependent".into()));
    }
    Ok(())
}

/// `N(r, 1/W)` for the AW Wronskian of the components.
fn wronskian_zeros(curve: &ProjCurveRep, tol: f64) -> Result<ZeroList> {
    let tuple = FunctionTuple::from_xpolys(&curve.components, curve.ctx.clone())?;
    let w = wronskian(&tuple).to_xpoly()?;
    ZeroList::from_xpoly(&w, tol)
}

fn form_on_curve(form: &[Q], curve: &ProjCurveRep) -> Result<XPoly> {
    let p = MPoly::linear(form).eval_xpolys(&curve.components);
    if p.is_zero() {
        return Err(Error::CurveInHypersurface);
    }
    Ok(p)
}

fn check_dims(curve: &ProjCurveRep, h: &HyperplaneSet) -> Result<()> {
    if h.dim() != curve.n() {
        return Err(Error::BadArity(format!("forms live in P^{} but the curve in P^{}", h.dim(), curve.n())));
    }
    Ok(())
}

fn finish(theorem: &str, curve: &ProjCurveRep, grid: &RGrid, notes: Vec<String>, params: Option<SmtParams>, rows: Vec<MarginRow>, slack: f64) -> MarginReport {
    let verdict = TrendVerdict::of(&rows, slack);
    MarginReport {
        theorem: theorem.into(),
        s: fmt_q(curve.ctx.s()),
        theta_points: grid.theta_points,
        notes,
        params,
        rows,
        verdict,
    }
}

/// General form: `int max_K sum_{j in K} log(||f|| / |L_j(f)|) + N_W(r, 0)`
/// against `(n + 1) T_f(r)`, the maximum running over linearly independent
/// subsets of the forms.
pub fn run_general_smt(curve: &ProjCurveRep, h: &HyperplaneSet, grid: &RGrid, opts: &HarnessOptions) -> Result<MarginReport> {
    check_dims(curve, h)?;
    check_linear_independence(curve)?;
    let n = curve.n();
    grid.check_guard(&curve.ctx, n as u32)?;
    if h.p() > 8 {
        return Err(Error::TooLarge(format!("{} forms; subset enumeration is capped at 8", h.p())));
    }
    let nw = wronskian_zeros(curve, opts.cluster_tol)?;
    let subsets = h.independent_subsets();
    let forms: Vec<Vec<f64>> = h.forms().iter().map(|f| f.iter().map(to_f64).collect()).collect();
    let theta = grid.theta_points;
    let rows: Result<Vec<MarginRow>> = grid
        .radii
        .par_iter()
        .map(|&r| {
            let t = characteristic_t_curve(curve, r, theta)?;
            let integral = circle_mean(r, theta, |x| {
                let fx = curve.eval_c64(x);
                let norm = fx.iter().map(|v| v.norm()).fold(0.0, f64::max);
                let mut weakest = norm;
                let logs: Vec<f64> = forms
                    .iter()
                    .map(|a| {
                        let v = a.iter().zip(&fx).map(|(c, f)| f * *c).sum::<num::complex::Complex64>().norm();
                        weakest = weakest.min(v);
                        norm.ln() - v.ln()
                    })
                    .collect();
                let best = subsets
                    .iter()
                    .map(|k| k.iter().map(|&j| logs[j]).sum::<f64>())
                    .fold(f64::NEG_INFINITY, f64::max);
                (best, weakest)
            })?;
            let lhs = integral + counting_n(&nw, r);
            Ok(MarginRow::new(r, t, lhs, (n + 1) as f64 * t, None))
        })
        .collect();
    let notes = vec![format!("{} independent subsets of {} forms", subsets.len(), h.p())];
    Ok(finish("general", curve, grid, notes, None, rows?, opts.slack))
}

/// Truncated form: `(p - n - 1) T_f(r)` against `sum_j N(r, 1/L_j(f)) - N_W(r, 0)`
/// and against `sum_j N~^[n]_AW(r, 1/L_j(f))`.
pub fn run_truncated_smt(curve: &ProjCurveRep, h: &HyperplaneSet, grid: &RGrid, opts: &HarnessOptions) -> Result<MarginReport> {
    check_dims(curve, h)?;
    let n = curve.n();
    if !general_position_check(h, n)? {
        return Err(Error::PositionFailed("hyperplanes are not in general position".into()));
    }
    check_linear_independence(curve)?;
    grid.check_guard(&curve.ctx, n as u32)?;
    let nw = wronskian_zeros(curve, opts.cluster_tol)?;
    let delta = crate::nevanlinna::truncated::delta(n as u32);
    let mut plain = Vec::new();
    let mut truncated = Vec::new();
    for form in h.forms() {
        let lf = form_on_curve(form, curve)?;
        plain.push(ZeroList::from_xpoly(&lf, opts.cluster_tol)?);
        let l = lf.to_laurent();
        truncated.push(truncated_profile(&l, std::slice::from_ref(&l), n as u32, delta, &curve.ctx)?);
    }
    let p = h.p();
    let theta = grid.theta_points;
    let rows: Result<Vec<MarginRow>> = grid
        .radii
        .par_iter()
        .map(|&r| {
            let t = characteristic_t_curve(curve, r, theta)?;
            let lhs = (p as f64 - n as f64 - 1.0) * t;
            let sum_n: f64 = plain.iter().map(|z| counting_n(z, r)).sum();
            let sum_trunc: f64 = truncated.iter().map(|z| z.counting(r)).sum();
            Ok(MarginRow::new(r, t, lhs, sum_n - counting_n(&nw, r), Some(sum_trunc)))
        })
        .collect();
    let notes = vec![
        "rhs: untruncated counts minus the Wronskian zeros".into(),
        format!("rhs_alt: truncated AW counts at level {n}, exact orders in the z-model"),
    ];
    Ok(finish("truncated", curve, grid, notes, None, rows?, opts.slack))
}

/// No homogeneous relation of degree `1..=max_degree` among the components.
pub fn algebraically_nondegenerate(components: &[XPoly], max_degree: usize) -> bool {
    let nv = components.len();
    for k in 1..=max_degree {
        let monomials: Vec<XPoly> = (0..nv)
            .combinations_with_replacement(k)
            .map(|idx| idx.iter().fold(XPoly::one(), |a, &i| &a * &components[i]))
            .collect();
        let deg = monomials.iter().map(|m| m.deg0()).max().unwrap_or(0);
        let rows: Vec<Vec<Q>> = (0..=deg).map(|c| monomials.iter().map(|m| m.poly().coeff(c)).collect()).collect();
        if rank(&rows) < monomials.len() {
            return false;
        }
    }
    true
}

fn atomic_profile(q: &Hypersurface) -> Result<Vec<usize>> {
    let factors = q
        .factors
        .as_ref()
        .ok_or_else(|| Error::InvalidParameter("hypersurface carries no factorization".into()))?;
    Ok(factors.iter().map(|(f, m)| f.total_degree() * *m as usize).collect())
}

/// Hypersurface form: `(p - (alpha + 1)(n + 1) - eps) T_f(r)` against
/// `(1/d) sum_j N~^[M1](s')_AW(r, 1/Q~_j(f))`, where `Q~_j = Q_j^{d/d_j}` is
/// split into `s'` coprime groups by the greedy decomposition.
pub fn run_hypersurface_smt(
    curve: &ProjCurveRep,
    qs: &[Hypersurface],
    s_prime: usize,
    l: usize,
    eps: &Q,
    grid: &RGrid,
    opts: &HarnessOptions,
) -> Result<MarginReport> {
    let n = curve.n();
    let profiles: Vec<Vec<usize>> = qs.iter().map(atomic_profile).collect::<Result<_>>()?;
    let params = compute_smt_params(n, l, &profiles, s_prime, eps)?;
    let mut notes = Vec::new();

    let position = hypersurface_position(qs, n, l)?;
    if !position.holds {
        return Err(Error::PositionFailed(format!("hypersurfaces are not in {l}-subgeneral position")));
    }
    if position.method == PositionMethod::Heuristic {
        notes.push("position heuristic only: not verified exactly for nonlinear hypersurfaces with n >= 2".into());
    }

    let max_deg = curve.components.iter().map(|c| c.deg0()).max().unwrap_or(0);
    let rel = opts.relation_degree.unwrap_or(2 * max_deg.max(1));
    if !algebraically_nondegenerate(&curve.components, rel) {
        return Err(Error::DependentCurve(format!("components satisfy a homogeneous relation of degree <= {rel}")));
    }
    notes.push(format!("algebraic independence assumed beyond relation degree {rel}"));

    let d = params.d;
    let m1 = params.m1.to_u32().unwrap_or(u32::MAX);
    let delta = if params.m1.is_odd() { -1 } else { 0 };
    let mut profiles_z: Vec<WeightedZeros> = Vec::new();
    let mut collapsed = false;
    for q in qs {
        let power = (d / q.d) as u32;
        let factors = q.factors.as_ref().unwrap();
        let scaled = Hypersurface::from_factors(factors.iter().map(|(f, m)| (f.clone(), m * power)).collect())?;
        let target = scaled.q.eval_xpolys(&curve.components);
        if target.is_zero() {
            return Err(Error::CurveInHypersurface);
        }
        let (groups, _) = polynomial_decompose(&scaled, s_prime)?;
        let parts: Vec<_> = groups.iter().map(|g| g.eval_xpolys(&curve.components).to_laurent()).collect();
        collapsed |= parts.iter().any(|p| m1 as usize > p.poly().deg0());
        profiles_z.push(truncated_profile(&target.to_laurent(), &parts, m1, delta, &curve.ctx)?);
    }
    if collapsed {
        notes.push(format!(
            "M1 = {} exceeds the root count of some group, so its shift-orbit minimum is 0",
            params.m1
        ));
    }

    let lead = qs.len() as f64 - (to_f64(&params.alpha) + 1.0) * (n as f64 + 1.0) - to_f64(eps);
    let theta = grid.theta_points;
    let rows: Result<Vec<MarginRow>> = grid
        .radii
        .par_iter()
        .map(|&r| {
            let t = characteristic_t_curve(curve, r, theta)?;
            let rhs = profiles_z.iter().map(|z| z.counting(r)).sum::<f64>() / d as f64;
            Ok(MarginRow::new(r, t, lead * t, rhs, None))
        })
        .collect();
    Ok(finish("hypersurface", curve, grid, notes, Some(params), rows?, opts.slack))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::awops::AwContext;
    use crate::qcore::parser::parse_hompoly;
    use crate::qcore::scalar::q;

    fn curve(ps: &[&[i64]]) -> ProjCurveRep {
        ProjCurveRep::new(ps.iter().map(|p| XPoly::from_ints(p)).collect(), AwContext::default()).unwrap()
    }

    fn grid() -> RGrid {
        RGrid::geometric(100.0, 10000.0, 6, 1024).unwrap()
    }

    fn hs(rows: &[&[i64]]) -> HyperplaneSet {
        HyperplaneSet::new(rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn general_on_line() {
        let c = curve(&[&[1], &[0, 1]]);
        let rep = run_general_smt(&c, &HyperplaneSet::coordinate(1), &grid(), &HarnessOptions::default()).unwrap();
        for row in &rep.rows {
            assert!((row.lhs - row.r.ln()).abs() < 1e-6, "{row:?}");
            assert!((row.rhs - 2.0 * row.r.ln()).abs() < 1e-6);
        }
        assert!(rep.verdict.pass);
    }

    #[test]
    fn truncated_on_conic() {
        let c = curve(&[&[1], &[0, 1], &[0, 0, 1]]);
        let h = hs(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        let rep = run_truncated_smt(&c, &h, &grid(), &HarnessOptions::default()).unwrap();
        assert!(rep.verdict.pass, "{:?}", rep.verdict);
        let coord = run_truncated_smt(&c, &HyperplaneSet::coordinate(2), &grid(), &HarnessOptions::default()).unwrap();
        assert!(coord.rows.iter().all(|r| r.lhs == 0.0));
        let dep = curve(&[&[1], &[0, 1], &[1, 1]]);
        assert!(matches!(
            run_truncated_smt(&dep, &h, &grid(), &HarnessOptions::default()),
            Err(Error::DependentCurve(_))
        ));
    }

    #[test]
    fn hypersurface_two_quadratics() {
        let f = |s: &str| parse_hompoly(s, 1).unwrap();
        let q1 = Hypersurface::from_factors(vec![(f("x0 - x1"), 1), (f("x0 + x1"), 1)]).unwrap();
        let q2 = Hypersurface::from_factors(vec![(f("x0 - 2 * x1"), 1), (f("x0 + 3 * x1"), 1)]).unwrap();
        let c = curve(&[&[1], &[0, 1]]);
        let g = RGrid::geometric(10.0, 1000.0, 4, 512).unwrap();
        let rep = run_hypersurface_smt(&c, &[q1, q2], 1, 1, &q(1), &g, &HarnessOptions::default()).unwrap();
        assert!(rep.verdict.pass);
        assert!(rep.rows.iter().all(|r| r.lhs <= 0.0));
    }

    #[test]
    fn conic_is_degenerate() {
        let comps = [XPoly::from_ints(&[1]), XPoly::from_ints(&[0, 1]), XPoly::from_ints(&[0, 0, 1])];
        assert!(algebraically_nondegenerate(&comps[..2], 4));
        assert!(!algebraically_nondegenerate(&comps, 2));
    }
}
