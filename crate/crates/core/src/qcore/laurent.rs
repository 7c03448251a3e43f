//! Laurent polynomials in `z`, kept as `z^low * p(z)` with `p(0) != 0`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::complex::Complex64;
use num::{One, Zero};

use super::gauss::GaussPoint;
use super::poly::Poly;
use super::scalar::{fmt_q, qpow, Q};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    low: i64,
    p: Poly,
}

impl Laurent {
    /// `z^low * sum c_i z^i`.
    pub fn new(low: i64, c: Vec<Q>) -> Self {
        Self::from_parts(low, Poly::new(c))
    }

    pub fn from_parts(low: i64, p: Poly) -> Self {
        match p.valuation() {
            None => Self::zero(),
            Some(v) => Laurent { low: low + v as i64, p: p.shift_down(v) },
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::from_parts(0, p)
    }

    pub fn from_map(m: &BTreeMap<i64, Q>) -> Self {
        let Some((&lo, _)) = m.iter().next() else {
            return Self::zero();
        };
        let hi = *m.keys().next_back().unwrap();
        let mut c = vec![Q::zero(); (hi - lo + 1) as usize];
        for (k, v) in m {
            c[(k - lo) as usize] += v;
        }
        Self::new(lo, c)
    }

    pub fn zero() -> Self {
        Laurent { low: 0, p: Poly::zero() }
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::from_parts(0, Poly::constant(c))
    }

    pub fn monomial(c: Q, k: i64) -> Self {
        Self::from_parts(k, Poly::constant(c))
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.low == 0 && self.p.is_constant())
    }

    pub fn is_monomial(&self) -> bool {
        self.p.is_constant()
    }

    /// The polynomial `z^{-low} * self`, with nonzero constant term.
    pub fn poly(&self) -> &Poly {
        &self.p
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.p.deg0() as i64
    }

    /// `high - low`, the number of finite nonzero roots.
    pub fn width(&self) -> usize {
        self.p.deg0()
    }

    pub fn coeff(&self, k: i64) -> Q {
        if k < self.low {
            return Q::zero();
        }
        self.p.coeff((k - self.low) as usize)
    }

    /// Nonzero terms `(exponent, coefficient)` in increasing exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Q)> + '_ {
        self.p
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn to_map(&self) -> BTreeMap<i64, Q> {
        self.terms().map(|(k, c)| (k, c.clone())).collect()
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::from_parts(self.low, self.p.scale(c))
    }

    /// Multiply by `z^k`.
    pub fn mul_z(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Laurent { low: self.low + k, p: self.p.clone() }
    }

    /// Substitute `z -> c z`, i.e. `c_k -> c_k c^k`.
    pub fn scale_var(&self, c: &Q) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Laurent { low: self.low, p: self.p.scale_var(c).scale(&qpow(c, self.low)) }
    }

    /// Substitute `z -> 1/z`.
    pub fn invert_var(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Laurent { low: -self.high(), p: self.p.reversed() }
    }

    pub fn is_symmetric(&self) -> bool {
        self == &self.invert_var()
    }

    pub fn eval_c64(&self, z: Complex64) -> Complex64 {
        self.p.eval_c64(z) * z.powi(self.low as i32)
    }

    pub fn eval_q(&self, z: &Q) -> Q {
        self.p.eval(z) * qpow(z, self.low)
    }

    pub fn eval_gauss(&self, z: &GaussPoint) -> GaussPoint {
        let v = self.p.eval_gauss(z);
        let mut zk = GaussPoint::real(Q::one());
        let base = if self.low >= 0 { z.clone() } else { z.recip() };
        for _ in 0..self.low.unsigned_abs() {
            zk = &zk * &base;
        }
        &v * &zk
    }

    /// Vanishing order at a nonzero Gaussian rational point.
    pub fn order_at(&self, z0: &GaussPoint) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        if z0.is_zero() {
            return Ok(self.low.max(0) as usize);
        }
        Ok(self.p.order_at(z0))
    }

    pub fn pow(&self, k: usize) -> Self {
        Laurent { low: self.low * k as i64, p: self.p.pow(k) }
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, o: &Laurent) -> Laurent {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let lo = self.low.min(o.low);
        let a = self.p.shift_up((self.low - lo) as usize);
        let b = o.p.shift_up((o.low - lo) as usize);
        Laurent::from_parts(lo, &a + &b)
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, o: &Laurent) -> Laurent {
        self + &(-o)
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent { low: self.low, p: -&self.p }
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, o: &Laurent) -> Laurent {
        if self.is_zero() || o.is_zero() {
            return Laurent::zero();
        }
        Laurent { low: self.low + o.low, p: &self.p * &o.p }
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<(i64, Q)> = self.terms().map(|(k, c)| (k, c.clone())).collect();
        let mut first = true;
        for (k, c) in terms.into_iter().rev() {
            let neg = c < Q::zero();
            let a = if neg { -c } else { c };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", fmt_q(&a))?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{} * ", fmt_q(&a))?;
                    }
                    if k == 1 {
                        write!(f, "z")?
                    } else {
                        write!(f, "z^{k}")?
                    }
                }
            }
        }
        Ok(())
    }
}

/// A Laurent polynomial invariant under `z <-> 1/z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymLaurent(Laurent);

impl SymLaurent {
    pub fn new(l: Laurent) -> Result<Self> {
        if l.is_symmetric() {
            Ok(SymLaurent(l))
        } else {
            Err(Error::InvalidParameter("Laurent polynomial is not symmetric".into()))
        }
    }

    pub fn underlying(&self) -> &Laurent {
        &self.0
    }

    pub fn into_inner(self) -> Laurent {
        self.0
    }
}

impl Add for &SymLaurent {
    type Output = SymLaurent;
    fn add(self, o: &SymLaurent) -> SymLaurent {
        SymLaurent(&self.0 + &o.0)
    }
}

impl Mul for &SymLaurent {
    type Output = SymLaurent;
    fn mul(self, o: &SymLaurent) -> SymLaurent {
        SymLaurent(&self.0 * &o.0)
    }
}
