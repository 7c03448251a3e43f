//! How operator-derived proximity and counting terms compare with T(r).

use aw_nevanlinna::awops::AwContext;
use aw_nevanlinna::nevanlinna::{growth_trend, GrowthKind, RGrid};
use aw_nevanlinna::qcore::parse_xpoly;

fn main() -> aw_nevanlinna::Result<()> {
    let ctx = AwContext::default();
    let f = parse_xpoly("x^4 - 3*x + 1")?;
    let grid = RGrid::geometric(10.0, 1e4, 6, 1024)?;
    for kind in [GrowthKind::LdDq, GrowthKind::LdAvg, GrowthKind::ShiftN] {
        let rep = growth_trend(&f, kind, 2, &grid, &ctx)?;
        println!("{kind:?}: max ratio {:.4}", rep.max_ratio());
        for row in &rep.rows {
            println!("  r = {:>9.1}  value {:>10.5}  T {:>9.4}  ratio {:>8.4}", row.r, row.value, row.t, row.ratio);
        }
    }
    Ok(())
}
