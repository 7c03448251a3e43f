//! Exact rationals. `Q` is `num`'s big rational, which already keeps
//! numerator and denominator coprime with a positive denominator.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qzero() -> Q {
    Q::zero()
}

pub fn qone() -> Q {
    Q::one()
}

/// `c^k` for any integer `k`; `c` must be nonzero when `k < 0`.
pub fn qpow(c: &Q, k: i64) -> Q {
    if k >= 0 {
        num::pow::pow(c.clone(), k as usize)
    } else {
        num::pow::pow(c.recip(), (-k) as usize)
    }
}

pub fn to_f64(c: &Q) -> f64 {
    if let Some(v) = c.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Huge or tiny magnitudes: go through logs of the parts.
    let sign = if c.is_negative() { -1.0 } else { 1.0 };
    let ln = big_ln(c.numer().abs()) - big_ln(c.denom().clone());
    sign * ln.exp()
}

/// Natural log of a positive rational, safe for magnitudes beyond f64.
pub fn ln_abs(c: &Q) -> f64 {
    big_ln(c.numer().abs()) - big_ln(c.denom().clone())
}

fn big_ln(n: BigInt) -> f64 {
    let bits = n.bits();
    if bits < 1000 {
        return n.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top: BigInt = &n >> shift;
    top.to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}

/// Render as `num` or `num/den`.
pub fn fmt_q(c: &Q) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Parse `int` or `int/int`.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::InvalidParameter(format!("not a rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Q::new(n, d))
}

pub fn ceil_q(c: &Q) -> BigInt {
    c.ceil().to_integer()
}

pub fn floor_q(c: &Q) -> BigInt {
    c.floor().to_integer()
}

/// Serde adapter storing a rational as a `"num/den"` string.
pub mod serde_q {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(c: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(c))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse_q(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `Vec<Q>`.
pub mod serde_qvec {
    use super::*;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
        v.iter().map(fmt_q).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Q>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| parse_q(s).map_err(serde::de::Error::custom))
            .collect()
    }
}
