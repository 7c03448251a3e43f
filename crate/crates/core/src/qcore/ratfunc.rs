//! Reduced quotients of Laurent polynomials.
//!
//! Canonical form: the denominator is a monic polynomial with nonzero
//! constant term, coprime to the numerator; every power of `z` lives in the
//! numerator. Two equal functions therefore have identical fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::complex::Complex64;
use num::{One, Zero};

use super::gauss::GaussPoint;
use super::laurent::Laurent;
use super::poly::Poly;
use super::scalar::Q;
use super::xpoly::XPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Laurent,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Laurent, den: Laurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce(num.low() - den.low(), num.poly().clone(), den.poly().clone()))
    }

    fn reduce(low: i64, np: Poly, dp: Poly) -> Self {
        if np.is_zero() {
            return Self::zero();
        }
        if dp.is_constant() {
            let inv = dp.coeff(0).recip();
            return RatFunc { num: Laurent::from_parts(low, np.scale(&inv)), den: Poly::one() };
        }
        let g = Poly::gcd(&np, &dp);
        let (np, dp) = if g.is_constant() {
            (np, dp)
        } else {
            (np.div_exact(&g).unwrap(), dp.div_exact(&g).unwrap())
        };
        let inv = dp.lead().unwrap().recip();
        RatFunc { num: Laurent::from_parts(low, np.scale(&inv)), den: dp.scale(&inv) }
    }

    pub fn zero() -> Self {
        RatFunc { num: Laurent::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::from_laurent(Laurent::constant(c))
    }

    pub fn from_laurent(l: Laurent) -> Self {
        RatFunc { num: l, den: Poly::one() }
    }

    pub fn from_xpoly(p: &XPoly) -> Self {
        Self::from_laurent(p.to_laurent())
    }

    pub fn num(&self) -> &Laurent {
        &self.num
    }

    /// The denominator as a Laurent polynomial (always a polynomial).
    pub fn den(&self) -> Laurent {
        Laurent::from_poly(self.den.clone())
    }

    pub fn den_poly(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one_poly()
    }

    pub fn as_laurent(&self) -> Option<&Laurent> {
        self.is_laurent().then_some(&self.num)
    }

    /// The x-polynomial this function models, if it is one.
    pub fn to_xpoly(&self) -> Result<XPoly> {
        match self.as_laurent() {
            Some(l) => XPoly::from_laurent(l),
            None => Err(Error::NotPolynomial("function has a denominator".into())),
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Substitute `z -> c z`.
    pub fn scale_var(&self, c: &Q) -> Self {
        if self.is_laurent() {
            return Self::from_laurent(self.num.scale_var(c));
        }
        let n = self.num.scale_var(c);
        let d = self.den.scale_var(c);
        let inv = d.lead().unwrap().recip();
        RatFunc { num: n.scale(&inv), den: d.scale(&inv) }
    }

    /// Substitute `z -> 1/z`.
    pub fn invert_var(&self) -> Self {
        let n = self.num.invert_var();
        let d = Laurent::from_poly(self.den.clone()).invert_var();
        Self::new(n, d).unwrap()
    }

    pub fn is_symmetric(&self) -> bool {
        self == &self.invert_var()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Self::new(Laurent::from_poly(self.den.clone()), self.num.clone())
    }

    pub fn div(&self, o: &RatFunc) -> Result<Self> {
        Ok(self * &o.recip()?)
    }

    pub fn pow(&self, k: usize) -> Self {
        RatFunc { num: self.num.pow(k), den: self.den.pow(k) }
    }

    pub fn eval_c64(&self, z: Complex64) -> Complex64 {
        self.num.eval_c64(z) / self.den.eval_c64(z)
    }

    /// Modulus of the denominator at `z`; used to detect near-poles.
    pub fn den_abs_c64(&self, z: Complex64) -> f64 {
        self.den.eval_c64(z).norm()
    }

    pub fn eval_gauss(&self, z: &GaussPoint) -> Result<GaussPoint> {
        let d = self.den.eval_gauss(z);
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(&self.num.eval_gauss(z) / &d)
    }

    /// Order of zero at a nonzero point; poles count as order 0.
    pub fn order_at(&self, z0: &GaussPoint) -> Result<usize> {
        self.num.order_at(z0)
    }
}

trait PolyOne {
    fn is_one_poly(&self) -> bool;
}

impl PolyOne for Poly {
    fn is_one_poly(&self) -> bool {
        self.coeffs().len() == 1 && self.coeffs()[0].is_one()
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.is_laurent() && o.is_laurent() {
            return RatFunc::from_laurent(&self.num + &o.num);
        }
        if self.den == o.den {
            let n = &self.num + &o.num;
            return RatFunc::reduce(n.low(), n.poly().clone(), self.den.clone());
        }
        let a = &self.num * &Laurent::from_poly(o.den.clone());
        let b = &o.num * &Laurent::from_poly(self.den.clone());
        let n = &a + &b;
        RatFunc::reduce(n.low(), n.poly().clone(), &self.den * &o.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_laurent() && o.is_laurent() {
            return RatFunc::from_laurent(&self.num * &o.num);
        }
        let n = &self.num * &o.num;
        RatFunc::reduce(n.low(), n.poly().clone(), &self.den * &o.den)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, Laurent::from_poly(self.den.clone()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::scalar::{q, qr};

    fn l(low: i64, c: &[i64]) -> Laurent {
        Laurent::new(low, c.iter().map(|&v| q(v)).collect())
    }

    #[test]
    fn reduction_is_canonical() {
        // (z^2 - 1)/(2z - 2) = (z + 1)/2
        let r = RatFunc::new(l(0, &[-1, 0, 1]), l(0, &[-2, 2])).unwrap();
        assert!(r.is_laurent());
        assert_eq!(r.num(), &Laurent::new(0, vec![qr(1, 2), qr(1, 2)]));
        let a = RatFunc::new(l(-1, &[1]), l(0, &[1, 1])).unwrap();
        let b = RatFunc::new(l(0, &[2]), l(1, &[2, 2])).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn field_identities() {
        let a = RatFunc::new(l(0, &[1, 2]), l(0, &[3, 0, 1])).unwrap();
        let b = RatFunc::new(l(-2, &[1, 0, 5]), l(0, &[1, -1])).unwrap();
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!((&a * &b).div(&b).unwrap(), a);
        assert_eq!(&a * &a.recip().unwrap(), RatFunc::one());
        assert!(RatFunc::zero().recip().is_err());
        assert!(RatFunc::new(l(0, &[1]), Laurent::zero()).is_err());
    }

    #[test]
    fn substitution_commutes_with_evaluation() {
        let a = RatFunc::new(l(0, &[1, 2]), l(0, &[3, 0, 1])).unwrap();
        let c = qr(1, 3);
        let z = GaussPoint::real(q(2));
        let lhs = a.scale_var(&c).eval_gauss(&z).unwrap();
        let rhs = a.eval_gauss(&GaussPoint::real(qr(2, 3))).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(a.invert_var().invert_var(), a);
    }
}
