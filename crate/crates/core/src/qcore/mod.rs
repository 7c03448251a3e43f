//! Exact arithmetic core: rationals, polynomials in `x` and `z`, rational
//! functions, numeric roots and the expression parser.

pub mod gauss;
pub mod laurent;
pub mod mpoly;
pub mod parser;
pub mod poly;
pub mod ratfunc;
pub mod roots;
pub mod scalar;
pub mod xpoly;

pub use gauss::GaussPoint;
pub use laurent::{Laurent, SymLaurent};
pub use mpoly::MPoly;
pub use parser::{parse_hompoly, parse_mpoly, parse_xpoly};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use roots::{poly_roots, roots_numeric, DEFAULT_CLUSTER_TOL};
pub use scalar::{fmt_q, parse_q, q, qr, Q};
pub use xpoly::XPoly;

/// Vanishing order of `g` at `z0`.
pub fn order_at(g: &Laurent, z0: &GaussPoint) -> crate::error::Result<usize> {
    g.order_at(z0)
}

/// Image of `p` under `x = (z + 1/z)/2`.
pub fn to_symlaurent(p: &XPoly) -> SymLaurent {
    p.to_symlaurent()
}
