//! Uniform trapezoid rule on circles `|x| = r`.

use std::f64::consts::PI;

use num::complex::Complex64;

use crate::error::{Error, Result};

pub const DEFAULT_THETA_POINTS: usize = 2048;
/// Nodes whose singular factor is below this modulus are moved half a step.
pub const SINGULAR_EPS: f64 = 1e-12;
/// Share of perturbed nodes beyond which the rule is declared degenerate.
pub const DEGENERATE_SHARE: f64 = 0.01;

/// The branch of `z` with `x = (z + 1/z)/2` and `|z| >= 1`.
pub fn x_to_z(x: Complex64) -> Complex64 {
    let w = (x * x - 1.0).sqrt();
    let a = x + w;
    let b = x - w;
    if a.norm() >= b.norm() {
        a
    } else {
        b
    }
}

/// `(1/2pi) int g(r e^{i theta}) d theta`. The integrand returns its value
/// and the modulus of whatever factor makes it singular.
pub fn circle_mean<F>(r: f64, nodes: usize, g: F) -> Result<f64>
where
    F: Fn(Complex64) -> (f64, f64),
{
    let h = 2.0 * PI / nodes as f64;
    let mut perturbed = 0;
    let mut acc = 0.0;
    for k in 0..nodes {
        let theta = h * k as f64;
        let (mut v, sing) = g(Complex64::from_polar(r, theta));
        if sing < SINGULAR_EPS || !v.is_finite() {
            perturbed += 1;
            v = g(Complex64::from_polar(r, theta + h / 2.0)).0;
        }
        acc += v;
    }
    if perturbed as f64 > DEGENERATE_SHARE * nodes as f64 {
        return Err(Error::QuadratureDegenerate { r, perturbed, nodes });
    }
    Ok(acc / nodes as f64)
}

pub fn log_plus(v: f64) -> f64 {
    if v > 1.0 {
        v.ln()
    } else {
        0.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn branch_is_outside_unit_disc() {
        for x in [Complex64::new(3.0, 0.5), Complex64::new(-2.0, -7.0), Complex64::new(0.0, 0.2)] {
            let z = x_to_z(x);
            assert!(z.norm() >= 1.0);
            assert!(((z + 1.0 / z) / 2.0 - x).norm() < 1e-12);
        }
    }

    #[test]
    fn jensen_on_a_linear_factor() {
        // mean of log|x - 2| on |x| = 5 is log 5
        let m = circle_mean(5.0, 512, |x| ((x - 2.0).norm().ln(), (x - 2.0).norm())).unwrap();
        assert!((m - 5f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn degenerate_detection() {
        let r = circle_mean(1.0, 64, |_| (0.0, 0.0));
        assert!(matches!(r, Err(Error::QuadratureDegenerate { .. })));
    }
}
