//! Exact Gaussian rationals, used as query points for vanishing orders.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num::complex::Complex64;
use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::scalar::{serde_q, to_f64, Q};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaussPoint {
    #[serde(with = "serde_q")]
    pub re: Q,
    #[serde(with = "serde_q")]
    pub im: Q,
}

impl GaussPoint {
    pub fn new(re: Q, im: Q) -> Self {
        GaussPoint { re, im }
    }

    pub fn real(re: Q) -> Self {
        GaussPoint { re, im: Q::zero() }
    }

    pub fn zero() -> Self {
        Self::real(Q::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn norm_sqr(&self) -> Q {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn modulus(&self) -> f64 {
        self.to_c64().norm()
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(to_f64(&self.re), to_f64(&self.im))
    }

    pub fn conj(&self) -> Self {
        GaussPoint::new(self.re.clone(), -&self.im)
    }

    pub fn scale(&self, c: &Q) -> Self {
        GaussPoint::new(&self.re * c, &self.im * c)
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        GaussPoint::new(&self.re / &n, -&self.im / &n)
    }

    /// Exact comparison of `|self|` against a rational radius.
    pub fn modulus_gt(&self, r: &Q) -> bool {
        r.is_negative() || self.norm_sqr() > r * r
    }
}

impl<'a> Add<&'a GaussPoint> for &'a GaussPoint {
    type Output = GaussPoint;
    fn add(self, o: &GaussPoint) -> GaussPoint {
        GaussPoint::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl<'a> Sub<&'a GaussPoint> for &'a GaussPoint {
    type Output = GaussPoint;
    fn sub(self, o: &GaussPoint) -> GaussPoint {
        GaussPoint::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl<'a> Mul<&'a GaussPoint> for &'a GaussPoint {
    type Output = GaussPoint;
    fn mul(self, o: &GaussPoint) -> GaussPoint {
        GaussPoint::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl<'a> Div<&'a GaussPoint> for &'a GaussPoint {
    type Output = GaussPoint;
    fn div(self, o: &GaussPoint) -> GaussPoint {
        self * &o.recip()
    }
}

impl Neg for &GaussPoint {
    type Output = GaussPoint;
    fn neg(self) -> GaussPoint {
        GaussPoint::new(-&self.re, -&self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::scalar::{q, qr};

    #[test]
    fn field_ops() {
        let a = GaussPoint::new(q(1), q(2));
        let b = GaussPoint::new(q(3), q(-1));
        let p = &a * &b;
        assert_eq!(p, GaussPoint::new(q(5), q(5)));
        assert_eq!(&p / &b, a);
        assert_eq!(a.recip(), GaussPoint::new(qr(1, 5), qr(-2, 5)));
        assert!(a.modulus_gt(&q(2)));
        assert!(!a.modulus_gt(&q(3)));
    }
}
