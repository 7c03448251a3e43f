//! Parameters of the hypersurface second main theorem and their exact
//! certificates. Euler's number enters through a 50-digit rational
//! enclosure, so every floor and comparison involving it is certified.

use num::bigint::BigInt;
use num::integer::{binomial, Integer};
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::decomp::{bound, greedy_decompose, DegreeMultiset};
use crate::error::{Error, Result};
use crate::qcore::scalar::{ceil_q, floor_q, fmt_q, serde_q};
use crate::qcore::Q;

/// `[lo, hi]` with `lo <= e <= hi`, both with 50 decimal digits.
pub fn euler_enclosure() -> (Q, Q) {
    let mut sum = Q::zero();
    let mut term = Q::one();
    for k in 1..=60u32 {
        sum += &term;
        term /= Q::from_integer(k.into());
    }
    // The tail after the last added term is below twice the next term.
    let hi = &sum + &term * Q::from_integer(2.into());
    let scale = Q::from_integer(num::pow::pow(BigInt::from(10), 50));
    let lo = Q::from_integer((&sum * &scale).floor().to_integer()) / &scale;
    let hi = Q::from_integer((&hi * &scale).ceil().to_integer()) / &scale;
    (lo, hi)
}

mod serde_big {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificates {
    /// `N` is a multiple of `dhat`.
    pub n_divisible: bool,
    /// `N M / (dhat Omega)` as an exact rational.
    #[serde(with = "serde_q")]
    pub nm_ratio: Q,
    /// `(n + 1) + eps / (alpha + 1)`.
    #[serde(with = "serde_q")]
    pub nm_limit: Q,
    pub nm_ok: bool,
    /// `M <= 4 (e ceil(alpha+1) (n+1)^2 d! ceil(1/eps))^n`, using the lower end of `e`.
    pub m_bound_ok: bool,
    /// Both ends of the enclosure of `e` give the same `M_1`.
    pub m1_certified: bool,
    /// `Omega` agrees with the closed form of the Delta-sum.
    pub delta_sum_ok: bool,
    /// `beta (alpha + 1) >= alpha`.
    pub hypothesis_ok: bool,
}

impl Certificates {
    pub fn all(&self) -> bool {
        self.n_divisible && self.nm_ok && self.m_bound_ok && self.m1_certified && self.delta_sum_ok && self.hypothesis_ok
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmtParams {
    pub n: usize,
    pub l: usize,
    pub p: usize,
    /// `d_j`, the degree of each hypersurface.
    pub degrees: Vec<usize>,
    /// `s_j`, the number of distinct irreducible factors.
    pub factor_counts: Vec<usize>,
    pub s_prime: usize,
    /// `lcm(d_j)`.
    pub d: usize,
    pub dhat: usize,
    #[serde(with = "serde_q")]
    pub alpha: Q,
    #[serde(with = "serde_q")]
    pub beta: Q,
    #[serde(with = "serde_q")]
    pub eps: Q,
    #[serde(rename = "N", with = "serde_big")]
    pub big_n: BigInt,
    #[serde(rename = "M", with = "serde_big")]
    pub big_m: BigInt,
    #[serde(rename = "Omega", with = "serde_big")]
    pub omega: BigInt,
    #[serde(rename = "M1", with = "serde_big")]
    pub m1: BigInt,
    pub certificates: Certificates,
}

fn big(n: usize) -> BigInt {
    BigInt::from(n)
}

fn qi(n: &BigInt) -> Q {
    Q::from_integer(n.clone())
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * big(k))
}

/// Smallest `d >= 1` with `d! >= dhat`.
pub fn default_d(dhat: usize) -> usize {
    (1..).find(|&d| factorial(d) >= big(dhat)).unwrap()
}

/// `(1 + y)^n <= 1 + (n + 1) y` at `steps + 1` equally spaced rationals of
/// `[0, 1/(n(n+1))]`.
pub fn binomial_y_check(n: usize, steps: usize) -> bool {
    if n == 0 {
        return true;
    }
    let top = Q::new(BigInt::one(), big(n * (n + 1)));
    (0..=steps).all(|k| {
        let y = &top * Q::new(big(k), big(steps.max(1)));
        let lhs = num::pow::pow(Q::one() + &y, n);
        lhs <= Q::one() + Q::from_integer(big(n + 1)) * y
    })
}

/// `N`, `M`, `Omega`, `M_1` and their certificates for given
/// `(n, dhat, d, alpha, eps)`. `beta` only feeds the hypothesis flag.
pub fn core_params(n: usize, dhat: usize, d: usize, alpha: &Q, beta: &Q, eps: &Q) -> Result<(BigInt, BigInt, BigInt, BigInt, Certificates)> {
    if n == 0 || dhat == 0 || d == 0 {
        return Err(Error::InvalidParameter("n, dhat and d must be positive".into()));
    }
    if !eps.is_positive() || alpha.is_negative() {
        return Err(Error::InvalidParameter("need eps > 0 and alpha >= 0".into()));
    }
    let ca = ceil_q(&(alpha + Q::one()));
    let ce = ceil_q(&eps.recip());
    let n1 = big(n + 1);
    let dh = big(dhat);
    let big_n = &ca * n1.pow(3) * &dh * &ce + &n1 * &dh;
    let big_m = binomial(&big_n + big(n), big(n));
    let num: BigInt = (0..=n).map(|i| &big_n - big(i) * &dh).product();
    let den = &dh * factorial(n + 1);
    let (omega, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(Error::InvalidParameter("Omega is not an integer".into()));
    }

    let nm_ratio = Q::new(&big_n * &big_m, &dh * &omega);
    let nm_limit = qi(&n1) + eps / (alpha + Q::one());
    let k = qi(&(&ca * n1.pow(2) * factorial(d) * &ce));
    let (e_lo, e_hi) = euler_enclosure();
    let four = Q::from_integer(4.into());
    let power_lo = &four * num::pow::pow(&e_lo * &k, n);
    let power_hi = &four * num::pow::pow(&e_hi * &k, n);
    let m1_lo = floor_q(&(&power_lo - Q::one()));
    let m1_hi = floor_q(&(&power_hi - Q::one()));

    let kk = &big_n / &dh - big(n);
    let delta_sum = Q::new(dh.pow(n as u32) * &kk * binomial(&kk + big(n), big(n)), n1.clone());

    let certificates = Certificates {
        n_divisible: (&big_n % &dh).is_zero(),
        nm_ok: nm_ratio <= nm_limit,
        nm_ratio,
        nm_limit,
        m_bound_ok: qi(&big_m) <= power_lo,
        m1_certified: m1_lo == m1_hi,
        delta_sum_ok: delta_sum == qi(&omega),
        hypothesis_ok: beta * (alpha + Q::one()) >= *alpha,
    };
    Ok((big_n, big_m, omega, m1_lo, certificates))
}

/// Full parameter set for `p` hypersurfaces in `l`-subgeneral position in
/// `P^n`. Each profile lists the degrees of the atomic factors of one
/// hypersurface; a repeated factor is one item of degree `m deg`.
pub fn compute_smt_params(n: usize, l: usize, profiles: &[Vec<usize>], s_prime: usize, eps: &Q) -> Result<SmtParams> {
    if profiles.is_empty() {
        return Err(Error::TooFew { have: 0, need: 1 });
    }
    let degrees: Vec<usize> = profiles.iter().map(|p| p.iter().sum()).collect();
    let factor_counts: Vec<usize> = profiles.iter().map(|p| p.len()).collect();
    let min_s = *factor_counts.iter().min().unwrap();
    if s_prime == 0 || s_prime > n.min(min_s) {
        return Err(Error::BadArity(format!("s' = {s_prime} must lie in 1..={}", n.min(min_s))));
    }
    if l < n {
        return Err(Error::InvalidParameter(format!("l = {l} must be at least n = {n}")));
    }
    if !eps.is_positive() {
        return Err(Error::InvalidParameter("eps must be positive".into()));
    }
    let d = degrees.iter().fold(1usize, |a, &b| a.lcm(&b));

    let mut dhat = d;
    for p in profiles {
        let scale = d / p.iter().sum::<usize>();
        let ds = DegreeMultiset::new(p.iter().map(|&x| x * scale).collect())?;
        let (dec, _) = greedy_decompose(&ds, s_prime)?;
        dhat = dec.bin_degrees.iter().fold(dhat, |a, &b| a.lcm(&b));
    }

    let ln = Q::from_integer(big(l - n));
    let (alpha, beta) = if l == n {
        (Q::zero(), Q::one())
    } else {
        let mut a = Q::zero();
        let mut b_den = 0usize;
        for (&dj, &sj) in degrees.iter().zip(&factor_counts) {
            let r = Q::new(big(bound(dj, sj, s_prime)?), big(dj));
            if r > a {
                a = r;
            }
            b_den = b_den.max((d + 1).saturating_sub(sj).max(d.div_ceil(s_prime)));
        }
        let alpha = a * &ln;
        let beta = &alpha * Q::from_integer(big(d)) / (Q::from_integer(big(b_den)) * &ln);
        (alpha, beta)
    };
    let (big_n, big_m, omega, m1, certificates) = core_params(n, dhat, d, &alpha, &beta, eps)?;
    if !certificates.hypothesis_ok {
        return Err(Error::HypothesisFailed { alpha: fmt_q(&alpha), beta: fmt_q(&beta) });
    }
    Ok(SmtParams {
        n,
        l,
        p: profiles.len(),
        degrees,
        factor_counts,
        s_prime,
        d,
        dhat,
        alpha,
        beta,
        eps: eps.clone(),
        big_n,
        big_m,
        omega,
        m1,
        certificates,
    })
}

/// Parameters from `(n, dhat, alpha, eps)` alone, as in the spot checks.
/// `d` defaults to the smallest integer with `d! >= dhat`.
pub fn params_from_core(n: usize, dhat: usize, d: Option<usize>, alpha: &Q, eps: &Q) -> Result<SmtParams> {
    let d = d.unwrap_or_else(|| default_d(dhat));
    let beta = Q::one();
    let (big_n, big_m, omega, m1, certificates) = core_params(n, dhat, d, alpha, &beta, eps)?;
    Ok(SmtParams {
        n,
        l: n,
        p: 0,
        degrees: Vec::new(),
        factor_counts: Vec::new(),
        s_prime: 1,
        d,
        dhat,
        alpha: alpha.clone(),
        beta,
        eps: eps.clone(),
        big_n,
        big_m,
        omega,
        m1,
        certificates,
    })
}
