//! The Askey-Wilson Wronskian-Casorati determinant.

use num::Zero;
use serde::Serialize;

use crate::awops::{aw_diff, aw_diff_pow, eta_x, mixed_all, shift, AwContext};
use crate::error::{Error, Result};
use crate::linalg::{det, rank};
use crate::qcore::{RatFunc, XPoly, Q};

#[derive(Clone, Debug, PartialEq)]
pub struct FunctionTuple {
    pub entries: Vec<RatFunc>,
    pub ctx: AwContext,
}

impl FunctionTuple {
    pub fn new(entries: Vec<RatFunc>, ctx: AwContext) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::BadArity("a function tuple needs at least one entry".into()));
        }
        Ok(FunctionTuple { entries, ctx })
    }

    pub fn from_xpolys(ps: &[XPoly], ctx: AwContext) -> Result<Self> {
        Self::new(ps.iter().map(RatFunc::from_xpoly).collect(), ctx)
    }

    /// `n`, one less than the number of entries.
    pub fn n(&self) -> usize {
        self.entries.len() - 1
    }

    fn with(&self, entries: Vec<RatFunc>) -> Self {
        FunctionTuple { entries, ctx: self.ctx.clone() }
    }
}

/// Row `i` is `A_{q^{n-i}} D_q^i` applied to every entry.
pub fn wronskian(fs: &FunctionTuple) -> RatFunc {
    let n = fs.n();
    let cols: Vec<Vec<RatFunc>> = fs.entries.iter().map(|f| mixed_all(f, n as u32, &fs.ctx)).collect();
    let m: Vec<Vec<RatFunc>> = (0..=n).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    det(&m)
}

/// `prod_{i=1}^n prod_{j=1}^i (-1)/(eta^{i-2j+2} x - eta^{i-2j} x)`.
pub fn shift_form_prefactor(n: usize, ctx: &AwContext) -> RatFunc {
    let mut acc = RatFunc::one();
    for i in 1..=n as i64 {
        for j in 1..=i {
            let d = &eta_x(i - 2 * j + 2, ctx) - &eta_x(i - 2 * j, ctx);
            let term = RatFunc::from_laurent(d).recip().expect("shifted x values differ");
            acc = &acc * &(-&term);
        }
    }
    acc
}

/// Rows `eta^{n-2k} f_j` for `k = 0..n`, times the prefactor.
pub fn wronskian_shift_form(fs: &FunctionTuple) -> RatFunc {
    let n = fs.n();
    let m: Vec<Vec<RatFunc>> = (0..=n)
        .map(|k| fs.entries.iter().map(|f| shift(f, n as i64 - 2 * k as i64, &fs.ctx)).collect())
        .collect();
    &det(&m) * &shift_form_prefactor(n, &fs.ctx)
}

/// Rows `eta^{delta_i (n-i)} D_q^i f_j` for `i < n` and `D_q^n f_j` last.
pub fn wronskian_delta_form(fs: &FunctionTuple, deltas: &[i8]) -> Result<RatFunc> {
    let n = fs.n();
    if deltas.len() != n || deltas.iter().any(|d| d.abs() != 1) {
        return Err(Error::BadArity(format!("need {n} signs in {{-1, +1}}")));
    }
    let m: Vec<Vec<RatFunc>> = (0..=n)
        .map(|i| {
            fs.entries
                .iter()
                .map(|f| {
                    let d = aw_diff_pow(f, i as u32, &fs.ctx);
                    if i == n {
                        d
                    } else {
                        shift(&d, deltas[i] as i64 * (n - i) as i64, &fs.ctx)
                    }
                })
                .collect()
        })
        .collect();
    Ok(det(&m))
}

/// Every sign vector in `{-1, +1}^n`.
pub fn all_sign_vectors(n: usize) -> Vec<Vec<i8>> {
    (0..1u32 << n)
        .map(|mask| (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect())
        .collect()
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PropertyReport {
    pub scalars: bool,
    pub constant_first: bool,
    pub common_factor: bool,
    pub quotient_reduction: bool,
}

impl PropertyReport {
    pub fn all(&self) -> bool {
        self.scalars && self.constant_first && self.common_factor && self.quotient_reduction
    }
}

fn shifted_product(g: &RatFunc, n: usize, ctx: &AwContext) -> RatFunc {
    (0..=n).fold(RatFunc::one(), |acc, k| &acc * &shift(g, n as i64 - 2 * k as i64, ctx))
}

/// Checks the four algebraic properties of the determinant exactly.
pub fn verify_properties(fs: &FunctionTuple, g: &RatFunc, cs: &[Q]) -> Result<PropertyReport> {
    let n = fs.n();
    if cs.len() != n + 1 {
        return Err(Error::BadArity(format!("need {} scalars", n + 1)));
    }
    if cs.iter().any(|c| c.is_zero()) {
        return Err(Error::InvalidParameter("scalars must be nonzero".into()));
    }
    let f0 = &fs.entries[0];
    if f0.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let ctx = &fs.ctx;
    let w = wronskian(fs);

    let scaled = fs.with(fs.entries.iter().zip(cs).map(|(f, c)| f.scale(c)).collect());
    let prod: Q = cs.iter().product();
    let scalars = wronskian(&scaled) == w.scale(&prod);

    let constant_first = if n == 0 {
        true
    } else {
        let mut e = vec![RatFunc::one()];
        e.extend(fs.entries[1..].iter().cloned());
        let d: Vec<RatFunc> = fs.entries[1..].iter().map(|f| aw_diff(f, ctx)).collect();
        wronskian(&fs.with(e)) == wronskian(&fs.with(d))
    };

    let timesg = fs.with(fs.entries.iter().map(|f| f * g).collect());
    let common_factor = wronskian(&timesg) == &shifted_product(g, n, ctx) * &w;

    let quotient_reduction = if n == 0 {
        w == *f0
    } else {
        let d: Vec<RatFunc> =
            fs.entries[1..].iter().map(|f| aw_diff(&f.div(f0).unwrap(), ctx)).collect();
        w == &shifted_product(f0, n, ctx) * &wronskian(&fs.with(d))
    };

    Ok(PropertyReport { scalars, constant_first, common_factor, quotient_reduction })
}

/// Full column rank of the coefficient matrix in the monomial basis.
pub fn linearly_independent(ps: &[XPoly]) -> bool {
    let deg = ps.iter().map(|p| p.deg0()).max().unwrap_or(0);
    let rows: Vec<Vec<Q>> = (0..=deg)
        .map(|k| ps.iter().map(|p| p.poly().coeff(k)).collect())
        .collect();
    rank(&rows) == ps.len()
}
