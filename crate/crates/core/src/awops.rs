//! Askey-Wilson shift, averaging and divided-difference operators.
//!
//! `eta^k f(z) = f(s^k z)`, so `eta^{+-1}` shifts `x` by `q^{+-1/2}`.

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qcore::poly::Poly;
use crate::qcore::scalar::{qpow, qr, serde_q, to_f64, Q};
use crate::qcore::{GaussPoint, Laurent, RatFunc};

/// `q = s^2` with `0 < s < 1` rational.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QParam {
    #[serde(with = "serde_q")]
    s: Q,
}

impl QParam {
    pub fn new(s: Q) -> Result<Self> {
        if !s.is_positive() || s >= Q::one() {
            return Err(Error::InvalidParameter(format!("s must lie in (0, 1), got {s}")));
        }
        Ok(QParam { s })
    }

    pub fn s(&self) -> &Q {
        &self.s
    }

    pub fn q(&self) -> Q {
        &self.s * &self.s
    }
}

impl Default for QParam {
    fn default() -> Self {
        QParam { s: qr(1, 2) }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AwContext {
    pub q: QParam,
}

impl AwContext {
    pub fn new(s: Q) -> Result<Self> {
        Ok(AwContext { q: QParam::new(s)? })
    }

    pub fn s(&self) -> &Q {
        self.q.s()
    }

    /// `s^{-n}`: numeric evaluation refuses points with `|z|` at or below it.
    pub fn guard_radius(&self, n: u32) -> f64 {
        to_f64(&self.guard_radius_q(n))
    }

    pub fn guard_radius_q(&self, n: u32) -> Q {
        qpow(self.s(), -(n as i64))
    }

    pub fn check_guard(&self, z: &GaussPoint, n: u32) -> Result<()> {
        let r = self.guard_radius_q(n);
        if z.modulus_gt(&r) {
            Ok(())
        } else {
            Err(Error::GuardViolation { modulus: z.modulus(), radius: to_f64(&r) })
        }
    }
}

/// `eta^k f`.
pub fn shift(f: &RatFunc, k: i64, ctx: &AwContext) -> RatFunc {
    if k == 0 {
        return f.clone();
    }
    f.scale_var(&qpow(ctx.s(), k))
}

/// `eta^m x = (s^m z + s^{-m}/z)/2`.
pub fn eta_x(m: i64, ctx: &AwContext) -> Laurent {
    let half = qr(1, 2);
    Laurent::new(-1, vec![qpow(ctx.s(), -m) * &half, Q::zero(), qpow(ctx.s(), m) * half])
}

/// `D_q f = (eta f - eta^{-1} f) / (eta x - eta^{-1} x)`.
pub fn aw_diff(f: &RatFunc, ctx: &AwContext) -> RatFunc {
    let s = ctx.s();
    let numer = &shift(f, 1, ctx) - &shift(f, -1, ctx);
    if numer.is_zero() {
        return RatFunc::zero();
    }
    // eta x - eta^{-1} x = c (z^2 - 1)/z with c = (s - 1/s)/2.
    let c = (s - s.recip()) * qr(1, 2);
    let zz1 = Poly::new(vec![-Q::one(), Q::zero(), Q::one()]);
    if let Some(l) = numer.as_laurent() {
        if let Some(quo) = l.poly().div_exact(&zz1) {
            return RatFunc::from_laurent(Laurent::from_parts(l.low() + 1, quo).scale(&c.recip()));
        }
    }
    let den = Laurent::from_parts(-1, zz1.scale(&c));
    numer.div(&RatFunc::from_laurent(den)).expect("nonzero denominator")
}

/// `A_{q^n} f = (eta^n f + eta^{-n} f)/2`.
pub fn aw_avg(f: &RatFunc, n: u32, ctx: &AwContext) -> RatFunc {
    if n == 0 {
        return f.clone();
    }
    let n = n as i64;
    (&shift(f, n, ctx) + &shift(f, -n, ctx)).scale(&qr(1, 2))
}

/// `D_q^k f`.
pub fn aw_diff_pow(f: &RatFunc, k: u32, ctx: &AwContext) -> RatFunc {
    let mut g = f.clone();
    for _ in 0..k {
        if g.is_zero() {
            break;
        }
        g = aw_diff(&g, ctx);
    }
    g
}

/// `A_{q^{M-t}} D_q^t f`.
pub fn mixed(f: &RatFunc, m: u32, t: u32, ctx: &AwContext) -> RatFunc {
    assert!(t <= m, "mixed operator needs t <= M");
    aw_avg(&aw_diff_pow(f, t, ctx), m - t, ctx)
}

/// Every `A_{q^{M-t}} D_q^t f` for `t = 0..=M`, sharing the iterated differences.
pub fn mixed_all(f: &RatFunc, m: u32, ctx: &AwContext) -> Vec<RatFunc> {
    let mut out = Vec::with_capacity(m as usize + 1);
    let mut d = f.clone();
    for t in 0..=m {
        out.push(aw_avg(&d, m - t, ctx));
        if t < m {
            d = if d.is_zero() { d } else { aw_diff(&d, ctx) };
        }
    }
    out
}

/// `D_q(fg) = A_q f D_q g + A_q g D_q f`.
pub fn verify_product_rule(f: &RatFunc, g: &RatFunc, ctx: &AwContext) -> bool {
    let lhs = aw_diff(&(f * g), ctx);
    let rhs = &(&aw_avg(f, 1, ctx) * &aw_diff(g, ctx)) + &(&aw_avg(g, 1, ctx) * &aw_diff(f, ctx));
    lhs == rhs
}

/// `D_q(f/g) = (A_q g D_q f - A_q f D_q g) / (eta g eta^{-1} g)`.
pub fn verify_quotient_rule(f: &RatFunc, g: &RatFunc, ctx: &AwContext) -> Result<bool> {
    if g.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let lhs = aw_diff(&f.div(g)?, ctx);
    let top = &(&aw_avg(g, 1, ctx) * &aw_diff(f, ctx)) - &(&aw_avg(f, 1, ctx) * &aw_diff(g, ctx));
    let bottom = &shift(g, 1, ctx) * &shift(g, -1, ctx);
    Ok(lhs == top.div(&bottom)?)
}
