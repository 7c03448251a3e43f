//! m(r) + N(r) against d T(r) for a curve and a hypersurface.

use aw_nevanlinna::awops::AwContext;
use aw_nevanlinna::nevanlinna::{fmt_check, Hypersurface, ProjCurveRep, RGrid};
use aw_nevanlinna::qcore::{parse_hompoly, parse_xpoly};

fn main() -> aw_nevanlinna::Result<()> {
    let curve = ProjCurveRep::new(
        vec![parse_xpoly("1")?, parse_xpoly("x - 3")?, parse_xpoly("x^3 + 2")?],
        AwContext::default(),
    )?;
    let h = Hypersurface::new(parse_hompoly("x0*x2 - x1^2 + 5*x0^2", 2)?)?;
    let grid = RGrid::geometric(10.0, 1e4, 8, 2048)?;
    let rep = fmt_check(&curve, &h, &grid)?;
    println!("{:>10} {:>12} {:>12} {:>12} {:>12}", "r", "m", "N", "T", "deviation");
    for row in &rep.rows {
        println!("{:>10.1} {:>12.6} {:>12.6} {:>12.6} {:>12.3e}", row.r, row.m, row.n, row.t, row.deviation);
    }
    println!("spread {:.3e}", rep.spread);
    Ok(())
}
