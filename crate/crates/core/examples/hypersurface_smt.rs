//! The hypersurface margin harness on a line in P^1.

use aw_nevanlinna::awops::AwContext;
use aw_nevanlinna::nevanlinna::{Hypersurface, ProjCurveRep, RGrid};
use aw_nevanlinna::qcore::{parse_hompoly, qr, XPoly};
use aw_nevanlinna::smt::{hypersurface_position, run_hypersurface_smt, HarnessOptions};

fn main() -> aw_nevanlinna::Result<()> {
    let f = |s: &str| parse_hompoly(s, 1);
    let qs = vec![
        Hypersurface::from_factors(vec![(f("x0 - x1")?, 1), (f("x0 + x1")?, 1)])?,
        Hypersurface::from_factors(vec![(f("x0 - 2*x1")?, 1), (f("x0 + 3*x1")?, 1)])?,
        Hypersurface::from_factors(vec![(f("x0")?, 2), (f("x1")?, 1)])?,
        Hypersurface::from_factors(vec![(f("2*x0 - x1")?, 1), (f("x0 + 5*x1")?, 2)])?,
    ];
    println!("{:?}", hypersurface_position(&qs, 1, 1)?);
    let curve = ProjCurveRep::new(vec![XPoly::one(), XPoly::x()], AwContext::default())?;
    let grid = RGrid::geometric(10.0, 1e4, 8, 1024)?;
    let rep = run_hypersurface_smt(&curve, &qs, 1, 1, &qr(1, 2), &grid, &HarnessOptions::default())?;
    for note in &rep.notes {
        println!("note: {note}");
    }
    println!("{}", rep.to_json()?);
    Ok(())
}
