//! Exact general and subgeneral position checks.

use itertools::Itertools;
use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::nevanlinna::Hypersurface;
use crate::qcore::{scalar::serde_qvec, Poly, Q};

/// Linear forms `L_j` as coefficient vectors of length `n + 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HyperplaneSet {
    #[serde(with = "serde_forms")]
    forms: Vec<Vec<Q>>,
}

mod serde_forms {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Row(#[serde(with = "serde_qvec")] Vec<Q>);

    pub fn serialize<S: Serializer>(v: &[Vec<Q>], s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Row> = v.iter().map(|r| Row(r.clone())).collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Vec<Q>>, D::Error> {
        Ok(Vec::<Row>::deserialize(d)?.into_iter().map(|r| r.0).collect())
    }
}

impl HyperplaneSet {
    pub fn new(forms: Vec<Vec<Q>>) -> Result<Self> {
        let Some(width) = forms.first().map(|f| f.len()) else {
            return Err(Error::TooFew { have: 0, need: 1 });
        };
        if width < 2 || forms.iter().any(|f| f.len() != width) {
            return Err(Error::BadArity("every form needs the same length n + 1 >= 2".into()));
        }
        if forms.iter().any(|f| f.iter().all(Zero::is_zero)) {
            return Err(Error::InvalidParameter("zero linear form".into()));
        }
        Ok(HyperplaneSet { forms })
    }

    /// The coordinate hyperplanes `x_0, ..., x_n`.
    pub fn coordinate(n: usize) -> Self {
        let forms = (0..=n)
            .map(|i| (0..=n).map(|j| if i == j { Q::from_integer(1.into()) } else { Q::zero() }).collect())
            .collect();
        HyperplaneSet { forms }
    }

    pub fn forms(&self) -> &[Vec<Q>] {
        &self.forms
    }

    pub fn p(&self) -> usize {
        self.forms.len()
    }

    /// Projective dimension `n`.
    pub fn dim(&self) -> usize {
        self.forms[0].len() - 1
    }

    fn subset_rank(&self, idx: &[usize]) -> usize {
        let m: Vec<Vec<Q>> = idx.iter().map(|&i| self.forms[i].clone()).collect();
        rank(&m)
    }

    /// Index sets of all linearly independent subsets, the empty set included.
    pub fn independent_subsets(&self) -> Vec<Vec<usize>> {
        (0..=self.dim() + 1)
            .flat_map(|k| (0..self.p()).combinations(k))
            .filter(|idx| self.subset_rank(idx) == idx.len())
            .collect()
    }
}

fn check_dim(h: &HyperplaneSet, n: usize) -> Result<()> {
    if h.dim() != n {
        return Err(Error::BadArity(format!("forms live in P^{} but n = {n}", h.dim())));
    }
    Ok(())
}

/// Every `n + 1` of the forms are linearly independent.
pub fn general_position_check(h: &HyperplaneSet, n: usize) -> Result<bool> {
    subgeneral_position_check(h, n, n)
}

/// Every `l + 1` of the forms have rank `n + 1`, i.e. no common zero.
pub fn subgeneral_position_check(h: &HyperplaneSet, n: usize, l: usize) -> Result<bool> {
    check_dim(h, n)?;
    if l < n {
        return Err(Error::InvalidParameter(format!("l = {l} must be at least n = {n}")));
    }
    if h.p() < l + 1 {
        return Err(Error::TooFew { have: h.p(), need: l + 1 });
    }
    Ok((0..h.p()).combinations(l + 1).all(|idx| h.subset_rank(&idx) == n + 1))
}

/// How a hypersurface position verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PositionMethod {
    /// All hypersurfaces are hyperplanes; integer rank.
    Linear,
    /// Binary forms on the projective line; exact gcd.
    BinaryForms,
    /// Not checked exactly; the caller must supply the position.
    Heuristic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositionVerdict {
    pub method: PositionMethod,
    pub holds: bool,
}

/// `l`-subgeneral position for hypersurfaces in `P^n`. Exact for
/// hyperplanes and for `n = 1`; otherwise reported as heuristic and
/// assumed to hold.
pub fn hypersurface_position(qs: &[Hypersurface], n: usize, l: usize) -> Result<PositionVerdict> {
    if l < n {
        return Err(Error::InvalidParameter(format!("l = {l} must be at least n = {n}")));
    }
    if qs.len() < l + 1 {
        return Err(Error::TooFew { have: qs.len(), need: l + 1 });
    }
    if let Some(bad) = qs.iter().find(|q| q.nvars() != n + 1) {
        return Err(Error::BadArity(format!("hypersurface in {} variables, expected {}", bad.nvars(), n + 1)));
    }
    let linear: Option<Vec<Vec<Q>>> = qs.iter().map(|q| q.q.linear_coeffs()).collect();
    if let Some(forms) = linear {
        let h = HyperplaneSet::new(forms)?;
        return Ok(PositionVerdict { method: PositionMethod::Linear, holds: subgeneral_position_check(&h, n, l)? });
    }
    if n == 1 {
        let affine: Vec<Poly> = qs
            .iter()
            .map(|q| q.q.eval_xpolys(&[crate::qcore::XPoly::one(), crate::qcore::XPoly::x()]).poly().clone())
            .collect();
        let at_infinity: Vec<bool> = qs.iter().map(|q| q.q.eval_q(&[Q::zero(), Q::from_integer(1.into())]).is_zero()).collect();
        let holds = (0..qs.len()).combinations(l + 1).all(|idx| {
            let g = idx.iter().fold(Poly::zero(), |g, &i| Poly::gcd(&g, &affine[i]));
            g.deg0() == 0 && !idx.iter().all(|&i| at_infinity[i])
        });
        return Ok(PositionVerdict { method: PositionMethod::BinaryForms, holds });
    }
    Ok(PositionVerdict { method: PositionMethod::Heuristic, holds: true })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::parser::parse_hompoly;
    use crate::qcore::scalar::q;

    fn hs(rows: &[&[i64]]) -> HyperplaneSet {
        HyperplaneSet::new(rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn general_position_examples() {
        assert!(general_position_check(&HyperplaneSet::coordinate(3), 3).unwrap());
        assert!(!general_position_check(&hs(&[&[1, 0], &[2, 0], &[0, 1]]), 1).unwrap());
        assert!(general_position_check(&hs(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]), 2).unwrap());
        assert!(matches!(general_position_check(&hs(&[&[1, 0, 0]]), 2), Err(Error::TooFew { .. })));
    }

    #[test]
    fn subgeneral_examples() {
        let h = hs(&[&[1, 0], &[0, 1], &[1, 1], &[1, -1]]);
        assert!(subgeneral_position_check(&h, 1, 2).unwrap());
        assert_eq!(subgeneral_position_check(&h, 1, 1).unwrap(), general_position_check(&h, 1).unwrap());
        let dup = hs(&[&[1, 0], &[2, 0], &[0, 1], &[0, 3]]);
        assert!(!subgeneral_position_check(&dup, 1, 1).unwrap());
        assert!(subgeneral_position_check(&dup, 1, 2).unwrap());
    }

    #[test]
    fn independent_subsets_include_empty() {
        let h = hs(&[&[1, 0], &[2, 0], &[0, 1]]);
        let subs = h.independent_subsets();
        assert!(subs.contains(&vec![]));
        assert!(subs.contains(&vec![0, 2]));
        assert!(!subs.contains(&vec![0, 1]));
    }

    #[test]
    fn binary_form_position() {
        let h = |s: &str| Hypersurface::new(parse_hompoly(s, 1).unwrap()).unwrap();
        let qs = [h("x0^2 - x1^2"), h("x0^2 + x1^2"), h("x0 * x1")];
        let v = hypersurface_position(&qs, 1, 1).unwrap();
        assert_eq!(v, PositionVerdict { method: PositionMethod::BinaryForms, holds: true });
        let qs = [h("x0^2 - x1^2"), h("x0^2 - x0 * x1")];
        assert!(!hypersurface_position(&qs, 1, 1).unwrap().holds);
        let qs = [h("x0 * x1"), h("x0^2")];
        assert!(!hypersurface_position(&qs, 1, 1).unwrap().holds);
    }
}
