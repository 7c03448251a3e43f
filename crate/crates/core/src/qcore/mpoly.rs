//! Sparse multivariate polynomials over `Q`: hypersurface equations and
//! linear forms in `x0..xn`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::complex::Complex64;
use num::{One, Signed, Zero};

use super::scalar::{fmt_q, to_f64, Q};
use super::xpoly::XPoly;

pub type Exps = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Exps, Q>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut m = Self::zero(nvars);
        m.add_term(vec![0; nvars], c);
        m
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut m = Self::zero(nvars);
        m.add_term(e, Q::one());
        m
    }

    /// The linear form `sum c_i x_i`.
    pub fn linear(coeffs: &[Q]) -> Self {
        let n = coeffs.len();
        let mut m = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            m.add_term(e, c.clone());
        }
        m
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exps, Q)>) -> Self {
        let mut m = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            m.add_term(e, c);
        }
        m
    }

    pub fn add_term(&mut self, e: Exps, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exps, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|k| k == d),
        }
    }

    /// Linear coefficient vector, if every term has degree one.
    pub fn linear_coeffs(&self) -> Option<Vec<Q>> {
        let mut out = vec![Q::zero(); self.nvars];
        for (e, c) in &self.terms {
            let pos: Vec<usize> = e.iter().enumerate().filter(|(_, &k)| k > 0).map(|(i, _)| i).collect();
            if pos.len() != 1 || e[pos[0]] != 1 {
                return None;
            }
            out[pos[0]] = c.clone();
        }
        Some(out)
    }

    /// Maximum absolute coefficient.
    pub fn norm(&self) -> Q {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_else(Q::zero)
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().map(|(e, v)| (e.clone(), v * c)))
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::constant(self.nvars, Q::one());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Compose with univariate polynomials: `Q(f_0, ..., f_n)`.
    pub fn eval_xpolys(&self, fs: &[XPoly]) -> XPoly {
        assert_eq!(fs.len(), self.nvars);
        let maxe: Vec<u32> = (0..self.nvars)
            .map(|i| self.terms.keys().map(|e| e[i]).max().unwrap_or(0))
            .collect();
        let pows: Vec<Vec<XPoly>> = fs
            .iter()
            .zip(&maxe)
            .map(|(f, &m)| {
                let mut v = vec![XPoly::one()];
                for _ in 0..m {
                    let next = v.last().unwrap() * f;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = XPoly::zero();
        for (e, c) in &self.terms {
            let mut t = XPoly::constant(c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = &t * &pows[i][k as usize];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    pub fn eval_q(&self, xs: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in xs.iter().zip(e) {
                t *= num::pow::pow(x.clone(), k as usize);
            }
            acc += t;
        }
        acc
    }

    pub fn eval_c64(&self, xs: &[Complex64]) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut t = Complex64::new(to_f64(c), 0.0);
            for (x, &k) in xs.iter().zip(e) {
                if k > 0 {
                    t *= x.powu(k);
                }
            }
            acc += t;
        }
        acc
    }

    /// Univariate view when `nvars == 1`.
    pub fn to_univariate(&self) -> Option<XPoly> {
        if self.nvars != 1 {
            return None;
        }
        let deg = self.total_degree();
        let mut c = vec![Q::zero(); deg + 1];
        for (e, v) in &self.terms {
            c[e[0] as usize] = v.clone();
        }
        Some(XPoly::new(c))
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (e, c) in self.terms.iter().rev() {
            let a = c.abs();
            if s.is_empty() {
                if c.is_negative() {
                    s.push('-');
                }
            } else {
                s.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let mons: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { names[i].clone() } else { format!("{}^{}", names[i], k) })
                .collect();
            if mons.is_empty() {
                s.push_str(&fmt_q(&a));
            } else {
                if !a.is_one() {
                    s.push_str(&fmt_q(&a));
                    s.push_str(" * ");
                }
                s.push_str(&mons.join(" * "));
            }
        }
        s
    }

    pub fn default_names(nvars: usize) -> Vec<String> {
        (0..nvars).map(|i| format!("x{i}")).collect()
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&Self::default_names(self.nvars)))
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        let mut m = self.clone();
        for (e, c) in &o.terms {
            m.add_term(e.clone(), c.clone());
        }
        m
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        self + &(-o)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&-Q::one())
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        let mut m = MPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Exps = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                m.add_term(e, c1 * c2);
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::scalar::q;

    #[test]
    fn homogeneity_and_norm() {
        let x0 = MPoly::var(2, 0);
        let x1 = MPoly::var(2, 1);
        let qd = &(&x0 * &x1) - &(&x1 * &x1).scale(&q(-3));
        assert!(qd.is_homogeneous());
        assert_eq!(qd.total_degree(), 2);
        assert_eq!(qd.norm(), q(3));
        assert!(!(&x0 + &MPoly::constant(2, q(1))).is_homogeneous());
    }

    #[test]
    fn composition_with_curve() {
        let x0 = MPoly::var(3, 0);
        let x1 = MPoly::var(3, 1);
        let x2 = MPoly::var(3, 2);
        let rel = &(&x0 * &x2) - &(&x1 * &x1);
        let curve = [XPoly::one(), XPoly::x(), XPoly::from_ints(&[0, 0, 1])];
        assert!(rel.eval_xpolys(&curve).is_zero());
        assert_eq!(x1.eval_xpolys(&curve), XPoly::x());
    }

    #[test]
    fn linear_extraction() {
        let l = MPoly::linear(&[q(1), q(0), q(-2)]);
        assert_eq!(l.linear_coeffs().unwrap(), vec![q(1), q(0), q(-2)]);
        assert!(MPoly::var(1, 0).pow(2).linear_coeffs().is_none());
        assert_eq!(l.to_string(), "x0 - 2 * x2");
    }
}
