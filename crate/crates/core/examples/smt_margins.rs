//! Margin reports for a conic against lines in general position.

use aw_nevanlinna::awops::AwContext;
use aw_nevanlinna::nevanlinna::{ProjCurveRep, RGrid};
use aw_nevanlinna::qcore::{q, XPoly};
use aw_nevanlinna::smt::*;

fn main() -> aw_nevanlinna::Result<()> {
    let curve = ProjCurveRep::new(
        vec![XPoly::from_ints(&[1]), XPoly::from_ints(&[0, 1]), XPoly::from_ints(&[0, 0, 1])],
        AwContext::default(),
    )?;
    let rows: [[i64; 3]; 5] = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, -2, 3]];
    let h = HyperplaneSet::new(rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect())?;
    println!("general position: {}", general_position_check(&h, 2)?);

    let grid = RGrid::geometric(100.0, 1e4, 10, 2048)?;
    let opts = HarnessOptions::default();
    for rep in [run_general_smt(&curve, &h, &grid, &opts)?, run_truncated_smt(&curve, &h, &grid, &opts)?] {
        println!("{}: pass {} worst {:.3}", rep.theorem, rep.verdict.pass, rep.verdict.worst_ratio);
        print!("{}", rep.to_csv()?);
    }
    Ok(())
}
