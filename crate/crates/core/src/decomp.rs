//! Min-max decomposition of a factored homogeneous polynomial into `s'`
//! pairwise coprime groups: the greedy distribution, its stage trace, the
//! degree bound and an exhaustive oracle for small inputs.

use std::fmt::Write as _;

use num::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nevanlinna::Hypersurface;
use crate::qcore::mpoly::MPoly;
use crate::qcore::Q;

/// Largest factor count the exhaustive oracle accepts.
pub const BRUTE_FORCE_MAX: usize = 12;

/// Factor degrees sorted nonincreasing. `order[i]` is the caller's index of
/// the `i`-th sorted degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeMultiset {
    degrees: Vec<usize>,
    order: Vec<usize>,
}

impl DegreeMultiset {
    /// Sorts stably, so equal degrees keep their input order.
    pub fn new(degrees: Vec<usize>) -> Result<Self> {
        if degrees.is_empty() || degrees.contains(&0) {
            return Err(Error::InvalidParameter("degrees must be a nonempty list of positive integers".into()));
        }
        let mut order: Vec<usize> = (0..degrees.len()).collect();
        order.sort_by(|&a, &b| degrees[b].cmp(&degrees[a]));
        let degrees = order.iter().map(|&i| degrees[i]).collect();
        Ok(DegreeMultiset { degrees, order })
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Input index of each sorted position.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn total(&self) -> usize {
        self.degrees.iter().sum()
    }

    pub fn count(&self) -> usize {
        self.degrees.len()
    }
}

/// Bins hold 1-based positions into the sorted degree list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub bins: Vec<Vec<usize>>,
    pub bin_degrees: Vec<usize>,
}

impl Decomposition {
    pub fn max_degree(&self) -> usize {
        self.bin_degrees.iter().copied().max().unwrap_or(0)
    }

    /// Bins partition `1..=s`, none empty, and the degree sums agree.
    pub fn is_valid_for(&self, ds: &DegreeMultiset) -> bool {
        let mut seen = vec![false; ds.count()];
        for (bin, &deg) in self.bins.iter().zip(&self.bin_degrees) {
            if bin.is_empty() {
                return false;
            }
            let mut sum = 0;
            for &i in bin {
                if i == 0 || i > seen.len() || seen[i - 1] {
                    return false;
                }
                seen[i - 1] = true;
                sum += ds.degrees[i - 1];
            }
            if sum != deg {
                return false;
            }
        }
        self.bins.len() == self.bin_degrees.len() && seen.iter().all(|&b| b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageRow {
    pub k: usize,
    /// Total degree distributed so far.
    pub d: usize,
    /// Number of factors distributed so far.
    pub s: usize,
    pub i_max: usize,
    pub i_min: usize,
    pub bins: Vec<Vec<usize>>,
}

/// One row per stage `k`, from the largest degree down to 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageTrace {
    pub rows: Vec<StageRow>,
}

fn check_arity(s: usize, s_prime: usize) -> Result<()> {
    if s_prime == 0 || s_prime > s {
        return Err(Error::BadArity(format!("s' = {s_prime} must lie in 1..={s}")));
    }
    Ok(())
}

/// Seeds bins with the `s'` largest degrees, then hands each remaining
/// degree to the lightest bin, lowest index first.
pub fn greedy_decompose(ds: &DegreeMultiset, s_prime: usize) -> Result<(Decomposition, StageTrace)> {
    check_arity(ds.count(), s_prime)?;
    let mut bins: Vec<Vec<usize>> = vec![Vec::new(); s_prime];
    let mut load = vec![0usize; s_prime];
    let mut rows = Vec::new();
    let mut next = 0;
    let mut placed_deg = 0;
    for k in (1..=ds.degrees[0]).rev() {
        while next < ds.count() && ds.degrees[next] >= k {
            let j = if next < s_prime {
                next
            } else {
                (0..s_prime).min_by_key(|&j| (load[j], j)).unwrap()
            };
            bins[j].push(next + 1);
            load[j] += ds.degrees[next];
            placed_deg += ds.degrees[next];
            next += 1;
        }
        rows.push(StageRow {
            k,
            d: placed_deg,
            s: next,
            i_max: *load.iter().max().unwrap(),
            i_min: *load.iter().min().unwrap(),
            bins: bins.clone(),
        });
    }
    Ok((Decomposition { bins, bin_degrees: load }, StageTrace { rows }))
}

/// `max{d - s + 1, ceil(d / s')}`.
pub fn bound(d: usize, s: usize, s_prime: usize) -> Result<usize> {
    check_arity(s, s_prime)?;
    if s > d {
        return Err(Error::BadArity(format!("{s} factors cannot have total degree {d}")));
    }
    Ok((d - s + 1).max(d.div_ceil(s_prime)))
}

/// Exact min-max over all partitions into `s'` nonempty groups.
pub fn brute_force_minmax(ds: &DegreeMultiset, s_prime: usize) -> Result<usize> {
    check_arity(ds.count(), s_prime)?;
    if ds.count() > BRUTE_FORCE_MAX {
        return Err(Error::TooLarge(format!("{} factors exceed the oracle limit {BRUTE_FORCE_MAX}", ds.count())));
    }
    let mut best = usize::MAX;
    let mut load = Vec::with_capacity(s_prime);
    search(&ds.degrees, 0, s_prime, &mut load, &mut best);
    Ok(best)
}

fn search(ds: &[usize], i: usize, s_prime: usize, load: &mut Vec<usize>, best: &mut usize) {
    let current = load.iter().copied().max().unwrap_or(0);
    if current >= *best {
        return;
    }
    if i == ds.len() {
        if load.len() == s_prime {
            *best = current;
        }
        return;
    }
    if ds.len() - i < s_prime - load.len() {
        return;
    }
    for j in 0..load.len() {
        load[j] += ds[i];
        search(ds, i + 1, s_prime, load, best);
        load[j] -= ds[i];
    }
    if load.len() < s_prime {
        load.push(ds[i]);
        search(ds, i + 1, s_prime, load, best);
        load.pop();
    }
}

/// Groups the factors of `q` by the greedy bins. A factor with multiplicity
/// `m` is one item of degree `m deg`, so no two groups share a factor.
pub fn polynomial_decompose(q: &Hypersurface, s_prime: usize) -> Result<(Vec<MPoly>, Decomposition)> {
    let factors = q
        .factors
        .as_ref()
        .ok_or_else(|| Error::InvalidParameter("hypersurface carries no factorization".into()))?;
    if factors.len() < s_prime {
        return Err(Error::NotEnoughFactors { have: factors.len(), need: s_prime });
    }
    let ds = DegreeMultiset::new(factors.iter().map(|(f, m)| f.total_degree() * *m as usize).collect())?;
    let (dec, _) = greedy_decompose(&ds, s_prime)?;
    let groups = dec
        .bins
        .iter()
        .map(|bin| {
            bin.iter().fold(MPoly::constant(q.nvars(), Q::one()), |acc, &i| {
                let (f, m) = &factors[ds.order[i - 1]];
                &acc * &f.pow(*m as usize)
            })
        })
        .collect();
    Ok((groups, dec))
}

fn fmt_set(bin: &[usize]) -> String {
    let inner: Vec<String> = bin.iter().map(|i| format!("Q{i}")).collect();
    format!("{{{}}}", inner.join(","))
}

/// Plain-text stage table: one row per stage with the cumulative degree,
/// factor count, extreme bin degrees and bin contents.
pub fn render_table(ds: &DegreeMultiset, trace: &StageTrace) -> String {
    let s_prime = trace.rows.first().map_or(0, |r| r.bins.len());
    let mut out = String::new();
    let degs: Vec<String> = ds.degrees.iter().map(|d| d.to_string()).collect();
    let _ = writeln!(out, "degrees: {}  s' = {s_prime}", degs.join(" "));
    let _ = write!(out, "{:>3} {:>5} {:>5} {:>5} {:>5}", "k", "d(k)", "s(k)", "Imax", "Imin");
    for j in 1..=s_prime {
        let _ = write!(out, "  {:<18}", format!("E{j}"));
    }
    let line = out.trim_end_matches(' ').len();
    out.truncate(line);
    out.push('\n');
    for r in &trace.rows {
        let _ = write!(out, "{:>3} {:>5} {:>5} {:>5} {:>5}", r.k, r.d, r.s, r.i_max, r.i_min);
        for bin in &r.bins {
            let _ = write!(out, "  {:<18}", fmt_set(bin));
        }
        let line = out.trim_end_matches(' ').len();
        out.truncate(line);
        out.push('\n');
    }
    out
}

/// Degrees of the worked stage-table instance.
pub const TABLE1_DEGREES: [usize; 10] = [6, 5, 5, 5, 5, 5, 3, 2, 2, 1];

/// `(k, d(k), s(k), Imax, Imin)` for the worked instance with `s' = 3`.
pub const TABLE1_ROWS: [(usize, usize, usize, usize, usize); 6] = [
    (6, 6, 1, 6, 0),
    (5, 31, 6, 11, 10),
    (4, 31, 6, 11, 10),
    (3, 34, 7, 13, 10),
    (2, 38, 9, 13, 12),
    (1, 39, 10, 13, 13),
];

/// Rendered stage table for the worked instance.
pub const TABLE1_GOLDEN: &str = include_str!("table1.txt");

pub fn table1() -> (DegreeMultiset, Decomposition, StageTrace) {
    let ds = DegreeMultiset::new(TABLE1_DEGREES.to_vec()).unwrap();
    let (dec, trace) = greedy_decompose(&ds, 3).unwrap();
    (ds, dec, trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::parser::parse_hompoly;

    fn ms(v: &[usize]) -> DegreeMultiset {
        DegreeMultiset::new(v.to_vec()).unwrap()
    }

    #[test]
    fn table1_trace() {
        let (ds, dec, trace) = table1();
        assert_eq!(dec.bin_degrees, vec![13, 13, 13]);
        let got: Vec<_> = trace.rows.iter().map(|r| (r.k, r.d, r.s, r.i_max, r.i_min)).collect();
        assert_eq!(got, TABLE1_ROWS.to_vec());
        assert!(dec.is_valid_for(&ds));
        assert_eq!(render_table(&ds, &trace), TABLE1_GOLDEN);
    }

    #[test]
    fn small_cases() {
        let (dec, _) = greedy_decompose(&ms(&[3, 2, 2]), 2).unwrap();
        assert_eq!(dec.bin_degrees, vec![3, 4]);
        assert_eq!(brute_force_minmax(&ms(&[3, 2, 2]), 2).unwrap(), 4);
        assert_eq!(brute_force_minmax(&ms(&[5, 5]), 2).unwrap(), 5);
        assert_eq!(brute_force_minmax(&ms(&TABLE1_DEGREES), 3).unwrap(), 13);
        let (dec, _) = greedy_decompose(&ms(&[4, 1, 1]), 1).unwrap();
        assert_eq!(dec.bin_degrees, vec![6]);
    }

    #[test]
    fn bounds() {
        // max{39 - 10 + 1, ceil(39/3)} = 30; the greedy optimum 13 sits well inside.
        assert_eq!(bound(39, 10, 3).unwrap(), 30);
        assert_eq!(bound(9, 1, 1).unwrap(), 9);
        assert_eq!(bound(7, 3, 2).unwrap(), 5);
        assert!(matches!(bound(7, 3, 4), Err(Error::BadArity(_))));
        assert!(matches!(greedy_decompose(&ms(&[1, 1]), 3), Err(Error::BadArity(_))));
        assert!(matches!(brute_force_minmax(&ms(&[1; 13]), 2), Err(Error::TooLarge(_))));
    }

    #[test]
    fn factored_polynomials() {
        let f = |s: &str| parse_hompoly(s, 1).unwrap();
        let h = Hypersurface::from_factors(vec![(f("x0"), 1), (f("x1"), 1), (f("x0 + x1"), 1)]).unwrap();
        let (groups, _) = polynomial_decompose(&h, 3).unwrap();
        assert_eq!(groups, vec![f("x0"), f("x1"), f("x0 + x1")]);
        let h = Hypersurface::from_factors(vec![(f("x0"), 2), (f("x1"), 1)]).unwrap();
        let (groups, _) = polynomial_decompose(&h, 2).unwrap();
        assert_eq!(groups, vec![f("x0^2"), f("x1")]);
        assert!(matches!(polynomial_decompose(&h, 3), Err(Error::NotEnoughFactors { have: 2, need: 3 })));
    }
}
