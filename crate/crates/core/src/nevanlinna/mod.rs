//! Counting, proximity and characteristic functions for polynomial data,
//! plus the truncated counting functions built from the AW operators.

pub mod fmt;
pub mod growth;
pub mod quadrature;
pub mod truncated;

use num::complex::Complex64;
use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::awops::AwContext;
use crate::error::{Error, Result};
use crate::qcore::mpoly::MPoly;
use crate::qcore::{poly_roots, Poly, XPoly, Q};

pub use fmt::{characteristic_t_curve, counting_n, fmt_check, proximity_m, FmtReport, FmtRow};
pub use growth::{growth_trend, GrowthKind, TrendReport, TrendRow};
pub use quadrature::{x_to_z, DEFAULT_THETA_POINTS};
pub use truncated::{
    delta, trunc_aw_cf, trunc_aw_m, trunc_classical, truncated_profile, verify_lemma53,
    verify_order_superadditivity, CfCounts, WeightedZeros,
};

/// A reduced representation `(f_0, ..., f_n)` of a holomorphic curve.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProjCurveRep {
    pub components: Vec<XPoly>,
    #[serde(default)]
    pub ctx: AwContext,
}

impl ProjCurveRep {
    /// Rejects the all-zero tuple and tuples whose components share a root.
    pub fn new(components: Vec<XPoly>, ctx: AwContext) -> Result<Self> {
        if components.iter().all(|c| c.is_zero()) {
            return Err(Error::InvalidCurve("all components vanish".into()));
        }
        let g = components.iter().fold(Poly::zero(), |g, c| Poly::gcd(&g, c.poly()));
        if g.deg0() > 0 {
            return Err(Error::InvalidCurve(format!(
                "components share the factor {}",
                XPoly::from_poly(g)
            )));
        }
        Ok(ProjCurveRep { components, ctx })
    }

    pub fn n(&self) -> usize {
        self.components.len() - 1
    }

    pub fn degree(&self) -> usize {
        self.components.iter().map(|c| c.deg0()).max().unwrap_or(0)
    }

    /// `max_k |f_k(x)|`.
    pub fn norm_at(&self, x: Complex64) -> f64 {
        self.components.iter().map(|c| c.eval_c64(x).norm()).fold(0.0, f64::max)
    }

    pub fn eval_c64(&self, x: Complex64) -> Vec<Complex64> {
        self.components.iter().map(|c| c.eval_c64(x)).collect()
    }
}

/// A hypersurface `{Q = 0}` in projective space.
#[derive(Clone, Debug, PartialEq)]
pub struct Hypersurface {
    pub q: MPoly,
    pub d: usize,
    pub factors: Option<Vec<(MPoly, u32)>>,
}

impl Hypersurface {
    pub fn new(q: MPoly) -> Result<Self> {
        if q.is_zero() || !q.is_homogeneous() {
            return Err(Error::InvalidParameter("hypersurface needs a nonzero homogeneous polynomial".into()));
        }
        let d = q.total_degree();
        if d == 0 {
            return Err(Error::InvalidParameter("hypersurface degree must be positive".into()));
        }
        Ok(Hypersurface { q, d, factors: None })
    }

    /// Builds `Q` as the product of the given factors with multiplicities.
    pub fn from_factors(factors: Vec<(MPoly, u32)>) -> Result<Self> {
        let nv = factors.first().map(|f| f.0.nvars()).ok_or_else(|| {
            Error::InvalidParameter("factor list is empty".into())
        })?;
        let mut q = MPoly::constant(nv, Q::one());
        for (f, m) in &factors {
            if *m == 0 || !f.is_homogeneous() || f.total_degree() == 0 {
                return Err(Error::InvalidParameter(format!("bad factor {f}^{m}")));
            }
            q = &q * &f.pow(*m as usize);
        }
        let mut h = Self::new(q)?;
        h.factors = Some(factors);
        Ok(h)
    }

    /// Attach a factorization, checking it reproduces `Q` up to a scalar.
    pub fn with_factors(mut self, factors: Vec<(MPoly, u32)>) -> Result<Self> {
        let prod = Self::from_factors(factors.clone())?.q;
        let (e, c) = prod.terms().iter().next_back().unwrap();
        let lam = self.q.terms().get(e).cloned().unwrap_or_else(Q::zero) / c;
        if lam.is_zero() || prod.scale(&lam) != self.q {
            return Err(Error::InvalidParameter("factors do not multiply to Q".into()));
        }
        self.factors = Some(factors);
        Ok(self)
    }

    pub fn linear(coeffs: &[Q]) -> Result<Self> {
        let h = Self::new(MPoly::linear(coeffs))?;
        let q = h.q.clone();
        Ok(Hypersurface { factors: Some(vec![(q, 1)]), ..h })
    }

    /// `||Q||`, the largest absolute coefficient.
    pub fn norm(&self) -> Q {
        self.q.norm()
    }

    pub fn nvars(&self) -> usize {
        self.q.nvars()
    }

    /// `Q(f)` as a polynomial in `x`.
    pub fn on_curve(&self, curve: &ProjCurveRep) -> Result<XPoly> {
        if curve.components.len() != self.nvars() {
            return Err(Error::BadArity(format!(
                "hypersurface in {} variables, curve with {} components",
                self.nvars(),
                curve.components.len()
            )));
        }
        Ok(self.q.eval_xpolys(&curve.components))
    }
}

/// Radii for sampling, all above 1 and strictly increasing.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RGrid {
    pub radii: Vec<f64>,
    pub theta_points: usize,
}

impl RGrid {
    pub fn new(radii: Vec<f64>, theta_points: usize) -> Result<Self> {
        if radii.is_empty() || radii.iter().any(|&r| !(r > 1.0) || !r.is_finite()) {
            return Err(Error::InvalidParameter("grid radii must be finite and > 1".into()));
        }
        if radii.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidParameter("grid radii must increase strictly".into()));
        }
        if theta_points < 64 {
            return Err(Error::InvalidParameter("theta_points must be at least 64".into()));
        }
        Ok(RGrid { radii, theta_points })
    }

    /// `steps` geometric radii from `lo` to `hi` inclusive.
    pub fn geometric(lo: f64, hi: f64, steps: usize, theta_points: usize) -> Result<Self> {
        if steps < 2 || !(lo < hi) {
            return Self::new(vec![lo], theta_points);
        }
        let ratio = (hi / lo).ln() / (steps - 1) as f64;
        let radii = (0..steps).map(|i| lo * (ratio * i as f64).exp()).collect();
        Self::new(radii, theta_points)
    }

    /// Default grid: 10 to 10^4 in 25 steps at 2048 nodes.
    pub fn default_grid() -> Self {
        Self::geometric(10.0, 1e4, 25, DEFAULT_THETA_POINTS).unwrap()
    }

    /// Every circle `|x| = r` must map to `|z| > s^{-n}`.
    pub fn check_guard(&self, ctx: &AwContext, n: u32) -> Result<()> {
        let guard = ctx.guard_radius(n);
        let r = self.radii[0];
        let zmin = r + (r * r - 1.0).sqrt();
        if zmin <= guard {
            return Err(Error::GuardViolation { modulus: zmin, radius: guard });
        }
        Ok(())
    }
}

/// Zero moduli with multiplicities plus the order at the origin.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroList {
    pub entries: Vec<(f64, usize)>,
    pub origin_mult: usize,
}

impl ZeroList {
    pub fn new(mut entries: Vec<(f64, usize)>, origin_mult: usize) -> Self {
        entries.sort_by(|a, b| a.0.total_cmp(&b.0));
        ZeroList { entries, origin_mult }
    }

    /// Zeros of a nonzero polynomial in `x`; the origin is split off exactly.
    pub fn from_xpoly(p: &XPoly, cluster_tol: f64) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let v = p.poly().valuation().unwrap();
        let rest = p.poly().shift_down(v);
        let entries = poly_roots(&rest, cluster_tol)?
            .into_iter()
            .map(|(z, m)| (z.norm(), m))
            .collect();
        Ok(Self::new(entries, v))
    }

    pub fn total(&self) -> usize {
        self.origin_mult + self.entries.iter().map(|e| e.1).sum::<usize>()
    }
}
