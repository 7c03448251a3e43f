//! `N`, `m`, `T` and the First Main Theorem desk check.

use num::complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::quadrature::{circle_mean, log_plus, x_to_z};
use super::{Hypersurface, ProjCurveRep, RGrid, ZeroList};
use crate::error::{Error, Result};
use crate::qcore::roots::DEFAULT_CLUSTER_TOL;
use crate::qcore::scalar::{fmt_q, ln_abs};
use crate::qcore::RatFunc;

/// `sum_{0 < |x_k| <= r} log(r/|x_k|) + origin_mult log r`.
pub fn counting_n(zeros: &ZeroList, r: f64) -> f64 {
    let lr = r.ln();
    let mut acc = zeros.origin_mult as f64 * lr;
    for &(m, k) in &zeros.entries {
        if m <= r && m > 0.0 {
            acc += k as f64 * (lr - m.ln());
        }
    }
    acc
}

/// Evaluate a z-model function at `x` through the `|z| >= 1` branch.
pub fn eval_at_x(f: &RatFunc, x: Complex64) -> (Complex64, f64) {
    let z = x_to_z(x);
    (f.eval_c64(z), f.den_abs_c64(z))
}

/// `(1/2pi) int log+ |f(r e^{i theta})| d theta`.
pub fn proximity_m(f: &RatFunc, r: f64, theta_points: usize) -> Result<f64> {
    if f.is_zero() {
        return Ok(0.0);
    }
    circle_mean(r, theta_points, |x| {
        let (v, d) = eval_at_x(f, x);
        (log_plus(v.norm()), d)
    })
}

/// `(1/2pi) int log max_k |f_k(r e^{i theta})| d theta`.
pub fn characteristic_t_curve(curve: &ProjCurveRep, r: f64, theta_points: usize) -> Result<f64> {
    circle_mean(r, theta_points, |x| {
        let v = curve.norm_at(x);
        (v.ln(), v)
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FmtRow {
    pub r: f64,
    pub m: f64,
    #[serde(rename = "N")]
    pub n: f64,
    #[serde(rename = "T")]
    pub t: f64,
    pub deviation: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FmtReport {
    pub s: String,
    pub hypersurface: String,
    pub degree: usize,
    pub theta_points: usize,
    pub cluster_tol: f64,
    pub rows: Vec<FmtRow>,
    /// `max - min` of the deviation over the grid.
    pub spread: f64,
}

impl FmtReport {
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &self.rows {
            w.serialize(row).map_err(|e| Error::InvalidParameter(e.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| Error::InvalidParameter(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

/// `m_f(r, D) + N_f(r, D) - d T_f(r)` over the grid.
pub fn fmt_check(curve: &ProjCurveRep, dh: &Hypersurface, grid: &RGrid) -> Result<FmtReport> {
    fmt_check_with(curve, dh, grid, DEFAULT_CLUSTER_TOL)
}

pub fn fmt_check_with(
    curve: &ProjCurveRep,
    dh: &Hypersurface,
    grid: &RGrid,
    cluster_tol: f64,
) -> Result<FmtReport> {
    let g = dh.on_curve(curve)?;
    if g.is_zero() {
        return Err(Error::CurveInHypersurface);
    }
    let zeros = ZeroList::from_xpoly(&g, cluster_tol)?;
    let d = dh.d as f64;
    let lq = ln_abs(&dh.norm());
    let nodes = grid.theta_points;
    let rows = grid
        .radii
        .par_iter()
        .map(|&r| -> Result<FmtRow> {
            let m = circle_mean(r, nodes, |x| {
                let nf = curve.norm_at(x);
                let qv = g.eval_c64(x).norm();
                (d * nf.ln() + lq - qv.ln(), qv.min(nf))
            })?;
            let t = characteristic_t_curve(curve, r, nodes)?;
            let n = counting_n(&zeros, r);
            Ok(FmtRow { r, m, n, t, deviation: m + n - d * t })
        })
        .collect::<Result<Vec<_>>>()?;
    let (lo, hi) = rows
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), row| (lo.min(row.deviation), hi.max(row.deviation)));
    Ok(FmtReport {
        s: fmt_q(curve.ctx.s()),
        hypersurface: dh.q.to_string(),
        degree: dh.d,
        theta_points: nodes,
        cluster_tol,
        rows,
        spread: hi - lo,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::awops::AwContext;
    use crate::qcore::scalar::q;
    use crate::qcore::XPoly;

    fn curve(ps: &[&[i64]]) -> ProjCurveRep {
        ProjCurveRep::new(ps.iter().map(|c| XPoly::from_ints(c)).collect(), AwContext::default()).unwrap()
    }

    #[test]
    fn counting_examples() {
        let zx = ZeroList::new(vec![], 1);
        assert!((counting_n(&zx, std::f64::consts::E) - 1.0).abs() < 1e-15);
        let z = ZeroList::from_xpoly(&XPoly::from_ints(&[6, -5, 1]), 1e-8).unwrap();
        assert!((counting_n(&z, 6.0) - 6f64.ln()).abs() < 1e-12);
        assert_eq!(counting_n(&z, 1.5), 0.0);
    }

    #[test]
    fn proximity_examples() {
        let five = RatFunc::constant(q(5));
        assert!((proximity_m(&five, 3.0, 256).unwrap() - 5f64.ln()).abs() < 1e-9);
        let x = RatFunc::from_xpoly(&XPoly::x());
        assert!((proximity_m(&x, 10.0, 2048).unwrap() - 10f64.ln()).abs() < 1e-6);
        let x2 = RatFunc::from_xpoly(&XPoly::from_ints(&[0, 0, 1]));
        assert!((proximity_m(&x2, 10.0, 2048).unwrap() - 2.0 * 10f64.ln()).abs() < 1e-6);
    }

    #[test]
    fn characteristic_examples() {
        let t = characteristic_t_curve(&curve(&[&[1], &[0, 1]]), 10.0, 2048).unwrap();
        assert!((t - 10f64.ln()).abs() < 1e-6);
        let t = characteristic_t_curve(&curve(&[&[1], &[0, 1], &[0, 0, 1]]), 10.0, 2048).unwrap();
        assert!((t - 2.0 * 10f64.ln()).abs() < 1e-6);
        let c = curve(&[&[3], &[]]);
        for r in [2.0, 50.0] {
            assert!((characteristic_t_curve(&c, r, 256).unwrap() - 3f64.ln()).abs() < 1e-12);
        }
    }

    #[test]
    fn fmt_examples() {
        let grid = RGrid::geometric(10.0, 1e4, 8, 2048).unwrap();
        let c = curve(&[&[1], &[0, 1]]);
        let x1 = Hypersurface::linear(&[q(0), q(1)]).unwrap();
        let rep = fmt_check(&c, &x1, &grid).unwrap();
        for row in &rep.rows {
            assert!(row.deviation.abs() < 1e-6);
            assert!(row.m.abs() < 1e-6);
        }
        let x0 = Hypersurface::linear(&[q(1), q(0)]).unwrap();
        let rep = fmt_check(&c, &x0, &grid).unwrap();
        assert!(rep.spread < 1e-4);
        let csv = rep.to_csv().unwrap();
        assert!(csv.starts_with("r,m,N,T,deviation"));
        let deg = curve(&[&[1], &[1]]);
        let diag = Hypersurface::linear(&[q(1), q(-1)]).unwrap();
        assert!(matches!(fmt_check(&deg, &diag, &grid), Err(Error::CurveInHypersurface)));
    }
}
