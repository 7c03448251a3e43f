//! Empirical growth sampling for the AW logarithmic-derivative lemmas and
//! the shift invariance of counting functions. Reports only; no verdicts.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::fmt::proximity_m;
use super::truncated::truncated_profile;
use super::RGrid;
use crate::awops::{aw_avg, aw_diff_pow, AwContext};
use crate::error::Result;
use crate::qcore::{RatFunc, XPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GrowthKind {
    /// `m(r, D^n f / f)`.
    LdDq,
    /// `m(r, A_{q^n} f / f)`.
    LdAvg,
    /// `max_{+-} |N(r, 1/eta^{+-1} f) - N(r, 1/f)|`.
    ShiftN,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrendRow {
    pub r: f64,
    pub value: f64,
    #[serde(rename = "T")]
    pub t: f64,
    /// `value / (T / log log r)`, zero when `T` vanishes.
    pub ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrendReport {
    pub kind: GrowthKind,
    pub n: u32,
    pub rows: Vec<TrendRow>,
}

impl TrendReport {
    pub fn max_ratio(&self) -> f64 {
        self.rows.iter().map(|r| r.ratio.abs()).fold(0.0, f64::max)
    }
}

/// Samples the chosen quantity over `grid`. `f` is entire, so `T(r, f)` is
/// just `m(r, f)`.
pub fn growth_trend(f: &XPoly, kind: GrowthKind, n: u32, grid: &RGrid, ctx: &AwContext) -> Result<TrendReport> {
    grid.check_guard(ctx, n.max(1))?;
    let fr = RatFunc::from_xpoly(f);
    let theta = grid.theta_points;
    let quotient = match kind {
        GrowthKind::LdDq if !f.is_zero() => Some(aw_diff_pow(&fr, n, ctx).div(&fr)?),
        GrowthKind::LdAvg if !f.is_zero() => Some(aw_avg(&fr, n, ctx).div(&fr)?),
        _ => None,
    };
    let profiles = if kind == GrowthKind::ShiftN && !f.is_zero() && f.deg0() > 0 {
        let l = f.to_laurent();
        Some([-1i64, 0, 1].map(|k| truncated_profile(&l, &[], 1, k, ctx)))
    } else {
        None
    };
    let profiles = match profiles {
        Some([a, b, c]) => Some([a?, b?, c?]),
        None => None,
    };
    let rows: Result<Vec<TrendRow>> = grid
        .radii
        .par_iter()
        .map(|&r| {
            let t = proximity_m(&fr, r, theta)?;
            let value = match (&quotient, &profiles) {
                (Some(g), _) => proximity_m(g, r, theta)?,
                (None, Some([lo, mid, hi])) => {
                    let base = mid.counting(r);
                    (lo.counting(r) - base).abs().max((hi.counting(r) - base).abs())
                }
                _ => 0.0,
            };
            let scale = t / r.ln().ln();
            let ratio = if t > 0.0 { value / scale } else { 0.0 };
            Ok(TrendRow { r, value, t, ratio })
        })
        .collect();
    Ok(TrendReport { kind, n, rows: rows? })
}
