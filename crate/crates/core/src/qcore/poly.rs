//! Dense univariate polynomials over `Q`, coefficients stored lowest degree first.

use std::ops::{Add, Mul, Neg, Sub};

use num::complex::Complex64;
use num::{One, Zero};

use super::gauss::GaussPoint;
use super::scalar::{to_f64, Q};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    c: Vec<Q>,
}

impl Poly {
    pub fn new(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(a: Q) -> Self {
        Self::new(vec![a])
    }

    pub fn monomial(a: Q, k: usize) -> Self {
        let mut c = vec![Q::zero(); k + 1];
        c[k] = a;
        Self::new(c)
    }

    /// The monic linear polynomial `z - a`.
    pub fn linear_root(a: Q) -> Self {
        Self::new(vec![-a, Q::one()])
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<Q> {
        self.c
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.c.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree, with the zero polynomial mapped to 0.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lead(&self) -> Option<&Q> {
        self.c.last()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    pub fn scale(&self, a: &Q) -> Self {
        if a.is_zero() {
            return Self::zero();
        }
        Poly { c: self.c.iter().map(|x| x * a).collect() }
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Multiply by `z^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![Q::zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    /// Drop the lowest `k` coefficients (division by `z^k` when exact).
    pub fn shift_down(&self, k: usize) -> Self {
        Poly::new(self.c.iter().skip(k).cloned().collect())
    }

    /// `p(c z)`.
    pub fn scale_var(&self, a: &Q) -> Self {
        let mut pw = Q::one();
        let mut out = Vec::with_capacity(self.c.len());
        for x in &self.c {
            out.push(x * &pw);
            pw *= a;
        }
        Poly::new(out)
    }

    /// Coefficients in reverse order: `z^deg p(1/z)`.
    pub fn reversed(&self) -> Self {
        let mut c = self.c.clone();
        c.reverse();
        Poly::new(c)
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, x)| x * Q::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Poly::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let Some(nd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if nd < dd {
            return (Poly::zero(), self.clone());
        }
        let inv = d.c[dd].recip();
        let mut r = self.c.clone();
        let mut quo = vec![Q::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let t = &r[k + dd] * &inv;
            if t.is_zero() {
                continue;
            }
            for (j, dj) in d.c.iter().enumerate() {
                if !dj.is_zero() {
                    r[k + j] -= &t * dj;
                }
            }
            quo[k] = t;
        }
        r.truncate(dd);
        (Poly::new(quo), Poly::new(r))
    }

    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let mut a = a.monic();
        let mut b = b.monic();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.c.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_gauss(&self, z: &GaussPoint) -> GaussPoint {
        let mut acc = GaussPoint::zero();
        for c in self.c.iter().rev() {
            acc = &acc * z;
            acc.re += c;
        }
        acc
    }

    pub fn eval_c64(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.c.iter().rev() {
            acc = acc * z + to_f64(c);
        }
        acc
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.c.iter().map(to_f64).collect()
    }

    /// Largest `m` with `(z - z0)^m | p`, by exact synthetic division over
    /// Gaussian rationals. `p` must be nonzero.
    pub fn order_at(&self, z0: &GaussPoint) -> usize {
        assert!(!self.is_zero());
        if z0.im.is_zero() {
            let a = &z0.re;
            let mut cur = self.clone();
            let mut m = 0;
            loop {
                let (quo, rem) = synthetic_real(&cur, a);
                if !rem.is_zero() {
                    return m;
                }
                m += 1;
                cur = quo;
            }
        }
        let mut cur: Vec<GaussPoint> = self.c.iter().map(|c| GaussPoint::real(c.clone())).collect();
        let mut m = 0;
        loop {
            let (quo, rem) = synthetic_gauss(&cur, z0);
            if !rem.is_zero() {
                return m;
            }
            m += 1;
            cur = quo;
        }
    }

    /// Yun's square-free decomposition: `p = lc * prod f_i^i`, returning the
    /// nonconstant `(f_i, i)`.
    pub fn square_free(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        if self.deg0() == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = Poly::gcd(&f, &fp);
        let mut b = f.div_exact(&a0).unwrap();
        let mut c = fp.div_exact(&a0).unwrap();
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            let a = Poly::gcd(&b, &d);
            if a.deg0() > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a).unwrap();
            if b.deg0() == 0 {
                break;
            }
            c = d.div_exact(&a).unwrap();
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Radical (product of distinct irreducible factors), monic.
    pub fn square_free_part(&self) -> Poly {
        let f = self.monic();
        let g = Poly::gcd(&f, &f.derivative());
        f.div_exact(&g).unwrap()
    }
}

fn synthetic_real(p: &Poly, a: &Q) -> (Poly, Q) {
    let n = p.c.len();
    let mut quo = vec![Q::zero(); n.saturating_sub(1)];
    let mut acc = Q::zero();
    for k in (0..n).rev() {
        acc = acc * a + &p.c[k];
        if k > 0 {
            quo[k - 1] = acc.clone();
        }
    }
    (Poly::new(quo), acc)
}

fn synthetic_gauss(p: &[GaussPoint], z0: &GaussPoint) -> (Vec<GaussPoint>, GaussPoint) {
    let n = p.len();
    let mut quo = vec![GaussPoint::zero(); n.saturating_sub(1)];
    let mut acc = GaussPoint::zero();
    for k in (0..n).rev() {
        acc = &(&acc * z0) + &p[k];
        if k > 0 {
            quo[k - 1] = acc.clone();
        }
    }
    (quo, acc)
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { c: self.c.iter().map(|x| -x).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Q::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        Poly::new(c)
    }
}

/// `prod (z - a_i)` for rational roots.
pub fn from_roots(roots: &[Q]) -> Poly {
    roots
        .iter()
        .fold(Poly::one(), |acc, a| &acc * &Poly::linear_root(a.clone()))
}
