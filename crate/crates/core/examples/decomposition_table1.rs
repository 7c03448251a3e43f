//! Greedy min-max distribution of factor degrees, with its stage table.

use aw_nevanlinna::decomp::{bound, brute_force_minmax, greedy_decompose, render_table, DegreeMultiset};

fn main() -> aw_nevanlinna::Result<()> {
    let ds = DegreeMultiset::new(vec![6, 5, 5, 5, 5, 5, 3, 2, 2, 1])?;
    let (dec, trace) = greedy_decompose(&ds, 3)?;
    print!("{}", render_table(&ds, &trace));
    println!("bin degrees {:?}", dec.bin_degrees);
    println!("bound {}", bound(ds.total(), ds.count(), 3)?);
    println!("optimum {}", brute_force_minmax(&ds, 3)?);
    Ok(())
}
