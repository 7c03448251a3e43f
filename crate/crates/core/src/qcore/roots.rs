//! Numeric roots. Multiplicities come from an exact square-free
//! decomposition; each square-free part goes through companion-matrix
//! eigenvalues followed by a few Newton steps.

use nalgebra::{DMatrix, Schur};
use num::complex::Complex64;

use super::laurent::Laurent;
use super::poly::Poly;
use crate::error::{Error, Result};

pub const DEFAULT_CLUSTER_TOL: f64 = 1e-8;

/// Roots of `z^{-low} g` with multiplicities; their total equals `g.width()`.
pub fn roots_numeric(g: &Laurent, cluster_tol: f64) -> Result<Vec<(Complex64, usize)>> {
    if g.is_zero() {
        return Err(Error::ZeroFunction);
    }
    poly_roots(g.poly(), cluster_tol)
}

pub fn poly_roots(p: &Poly, cluster_tol: f64) -> Result<Vec<(Complex64, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let mut raw = Vec::new();
    for (f, m) in p.square_free() {
        for z in squarefree_roots(&f) {
            raw.push((z, m));
        }
    }
    Ok(cluster(raw, cluster_tol))
}

/// Roots of a polynomial known to be square-free, each listed once.
pub fn squarefree_roots(f: &Poly) -> Vec<Complex64> {
    let Some(n) = f.degree() else { return Vec::new() };
    if n == 0 {
        return Vec::new();
    }
    let c = f.monic().to_f64_coeffs();
    if n == 1 {
        return vec![Complex64::new(-c[0], 0.0)];
    }
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..n {
        m[(i, n - 1)] = -c[i];
    }
    let fp = f.derivative();
    let start: Vec<Complex64> = match Schur::try_new(m, f64::EPSILON, 200 * n) {
        Some(schur) => schur.complex_eigenvalues().iter().copied().collect(),
        None => aberth(&c),
    };
    start.into_iter().map(|z| polish(f, &fp, z)).collect()
}

/// Aberth-Ehrlich iteration on a monic coefficient vector. Used when the
/// QR iteration on the companion matrix stalls.
fn aberth(c: &[f64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    let radius = 1.0 + c[..n].iter().fold(0.0f64, |m, a| m.max(a.abs()));
    let eval = |z: Complex64| {
        let mut v = Complex64::new(0.0, 0.0);
        let mut d = Complex64::new(0.0, 0.0);
        for a in c.iter().rev() {
            d = d * z + v;
            v = v * z + a;
        }
        (v, d)
    };
    let mut zs: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 0.4 + std::f64::consts::TAU * k as f64 / n as f64))
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (v, d) = eval(zs[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / d;
            let sum: Complex64 = (0..n).filter(|&j| j != i).map(|j| 1.0 / (zs[i] - zs[j])).sum();
            let step = ratio / (1.0 - ratio * sum);
            if step.re.is_finite() && step.im.is_finite() {
                zs[i] -= step;
                moved = moved.max(step.norm() / zs[i].norm().max(1.0));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    zs
}

fn polish(f: &Poly, fp: &Poly, mut z: Complex64) -> Complex64 {
    for _ in 0..8 {
        let d = fp.eval_c64(z);
        if d.norm() == 0.0 {
            break;
        }
        let step = f.eval_c64(z) / d;
        if !step.re.is_finite() || !step.im.is_finite() {
            break;
        }
        z -= step;
        if step.norm() <= 1e-16 * z.norm().max(1.0) {
            break;
        }
    }
    z
}

fn cluster(raw: Vec<(Complex64, usize)>, tol: f64) -> Vec<(Complex64, usize)> {
    let mut out: Vec<(Complex64, usize)> = Vec::new();
    for (z, m) in raw {
        match out.iter_mut().find(|(w, _)| (*w - z).norm() <= tol) {
            Some((w, k)) => {
                *w = (*w * *k as f64 + z * m as f64) / (*k + m) as f64;
                *k += m;
            }
            None => out.push((z, m)),
        }
    }
    out.sort_by(|a, b| {
        a.0.norm()
            .total_cmp(&b.0.norm())
            .then(a.0.arg().total_cmp(&b.0.arg()))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::poly::from_roots;
    use crate::qcore::scalar::{q, qr};
    use crate::qcore::xpoly::XPoly;

    #[test]
    fn factored_quadratic() {
        let g = Laurent::new(0, vec![q(6), q(-5), q(1)]);
        let r = roots_numeric(&g, DEFAULT_CLUSTER_TOL).unwrap();
        assert_eq!(r.len(), 2);
        assert!((r[0].0 - Complex64::new(2.0, 0.0)).norm() < 1e-12 && r[0].1 == 1);
        assert!((r[1].0 - Complex64::new(3.0, 0.0)).norm() < 1e-12 && r[1].1 == 1);
    }

    #[test]
    fn planted_multiplicity() {
        let g = Laurent::from_poly(from_roots(&[q(1), q(1), q(1)]));
        let r = roots_numeric(&g, 1e-8).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].1, 3);
        assert!((r[0].0 - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn z_roots_pair_up_for_symmetric_input() {
        // x^2 - 13/4 x + 3/2 = (x - 1/2)(x - 11/4)
        let p = XPoly::new(vec![qr(11, 8), qr(-13, 4), q(1)]);
        let r = roots_numeric(&p.to_laurent(), 1e-8).unwrap();
        assert_eq!(r.len(), 4);
        for (z, m) in &r {
            assert_eq!(*m, 1);
            let inv = 1.0 / *z;
            assert!(r.iter().any(|(w, _)| (*w - inv).norm() < 1e-9));
            let x = (*z + inv) / 2.0;
            assert!((x - 0.5).norm() < 1e-9 || (x - 2.75).norm() < 1e-9);
        }
    }

    #[test]
    fn unit_circle_roots_converge() {
        // z^4 + z^2 + 1 stalls unshifted QR on its companion matrix.
        let p = Poly::new(vec![q(1), q(0), q(1), q(0), q(1)]);
        let r = squarefree_roots(&p);
        assert_eq!(r.len(), 4);
        for z in r {
            assert!((z.norm() - 1.0).abs() < 1e-12);
            assert!(p.eval_c64(z).norm() < 1e-12);
        }
    }

    #[test]
    fn zero_rejected() {
        assert!(roots_numeric(&Laurent::zero(), 1e-8).is_err());
    }
}
