//! Parsing polynomials with exact rational coefficients.

use aw_nevanlinna::qcore::{fmt_q, parse_hompoly, parse_q, parse_xpoly};

fn main() -> aw_nevanlinna::Result<()> {
    let p = parse_xpoly("(x - 1/2)^2 * (3*x + 2) - x")?;
    println!("p(x)   = {p}");
    println!("p(1/3) = {}", fmt_q(&p.eval(&parse_q("1/3")?)));
    println!("z-model: {}", p.to_laurent());

    let q = parse_hompoly("x0^2 - 4/3*x0*x1 + x1*x2", 2)?;
    println!("Q = {q}, degree {}, homogeneous {}", q.total_degree(), q.is_homogeneous());

    for bad in ["x^", "2 ** x", "x^-1", "x0 + y"] {
        match parse_xpoly(bad) {
            Ok(p) => println!("{bad:>8} -> {p}"),
            Err(e) => println!("{bad:>8} -> error: {e}"),
        }
    }
    Ok(())
}
