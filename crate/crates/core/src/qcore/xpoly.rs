//! Polynomials in `x`, the user-facing entire functions, and the
//! substitution `x = (z + 1/z)/2` into the Laurent model.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::complex::Complex64;
use num::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::laurent::{Laurent, SymLaurent};
use super::poly::Poly;
use super::scalar::{fmt_q, parse_q, qpow, qr, Q};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct XPoly(Poly);

/// The model of `x` itself: `(z + 1/z)/2`.
pub fn x_model() -> Laurent {
    Laurent::new(-1, vec![qr(1, 2), Q::zero(), qr(1, 2)])
}

impl XPoly {
    pub fn new(c: Vec<Q>) -> Self {
        XPoly(Poly::new(c))
    }

    pub fn from_poly(p: Poly) -> Self {
        XPoly(p)
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| Q::from_integer(v.into())).collect())
    }

    pub fn zero() -> Self {
        XPoly(Poly::zero())
    }

    pub fn one() -> Self {
        XPoly(Poly::one())
    }

    pub fn x() -> Self {
        Self::new(vec![Q::zero(), Q::one()])
    }

    pub fn constant(c: Q) -> Self {
        XPoly(Poly::constant(c))
    }

    pub fn poly(&self) -> &Poly {
        &self.0
    }

    pub fn coeffs(&self) -> &[Q] {
        self.0.coeffs()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    pub fn deg0(&self) -> usize {
        self.0.deg0()
    }

    pub fn derivative(&self) -> Self {
        XPoly(self.0.derivative())
    }

    pub fn scale(&self, c: &Q) -> Self {
        XPoly(self.0.scale(c))
    }

    pub fn pow(&self, k: usize) -> Self {
        XPoly(self.0.pow(k))
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.0.eval(x)
    }

    pub fn eval_c64(&self, x: Complex64) -> Complex64 {
        self.0.eval_c64(x)
    }

    pub fn to_laurent(&self) -> Laurent {
        let xm = x_model();
        let mut acc = Laurent::zero();
        for c in self.0.coeffs().iter().rev() {
            acc = &(&acc * &xm) + &Laurent::constant(c.clone());
        }
        acc
    }

    pub fn to_symlaurent(&self) -> SymLaurent {
        SymLaurent::new(self.to_laurent()).expect("substitution image is symmetric")
    }

    /// Inverse of the substitution. Fails unless `l` is symmetric.
    pub fn from_laurent(l: &Laurent) -> Result<Self> {
        if !l.is_symmetric() {
            return Err(Error::NotPolynomial("Laurent polynomial is not symmetric".into()));
        }
        if l.is_zero() {
            return Ok(Self::zero());
        }
        let deg = l.high() as usize;
        let xm = x_model();
        let mut pows = vec![Laurent::one()];
        for _ in 0..deg {
            let next = pows.last().unwrap() * &xm;
            pows.push(next);
        }
        let mut rest = l.clone();
        let mut out = vec![Q::zero(); deg + 1];
        while !rest.is_zero() {
            let d = rest.high();
            debug_assert!(d >= 0 && rest.low() == -d);
            let a = rest.coeff(d) * qpow(&Q::from_integer(2.into()), d);
            rest = &rest - &pows[d as usize].scale(&a);
            out[d as usize] = a;
        }
        Ok(Self::new(out))
    }
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, o: &XPoly) -> XPoly {
        XPoly(&self.0 + &o.0)
    }
}

impl Sub for &XPoly {
    type Output = XPoly;
    fn sub(self, o: &XPoly) -> XPoly {
        XPoly(&self.0 - &o.0)
    }
}

impl Mul for &XPoly {
    type Output = XPoly;
    fn mul(self, o: &XPoly) -> XPoly {
        XPoly(&self.0 * &o.0)
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly(-&self.0)
    }
}

/// Descending powers with exact coefficients, e.g. `x^2 - 3 * x + 1/2`.
pub fn render_poly(p: &Poly, var: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let a = c.abs();
        if s.is_empty() {
            if c.is_negative() {
                s.push('-');
            }
        } else {
            s.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if k == 0 {
            s.push_str(&fmt_q(&a));
            continue;
        }
        if !a.is_one() {
            s.push_str(&fmt_q(&a));
            s.push_str(" * ");
        }
        s.push_str(var);
        if k > 1 {
            s.push_str(&format!("^{k}"));
        }
    }
    s
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_poly(&self.0, "x"))
    }
}

impl Serialize for XPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs().iter().map(fmt_q).collect::<Vec<_>>().serialize(s)
    }
}

impl<'de> Deserialize<'de> for XPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        let c = v
            .iter()
            .map(|s| parse_q(s).map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(XPoly::new(c))
    }
}
