//! The determinant of mixed operators applied to a tuple, in its three forms.

use aw_nevanlinna::awops::AwContext;
use aw_nevanlinna::awwronskian::*;
use aw_nevanlinna::qcore::{parse_xpoly, q, RatFunc, XPoly};

fn main() -> aw_nevanlinna::Result<()> {
    let ctx = AwContext::default();
    let ps: Vec<XPoly> = ["1", "x", "x^2 - 1"].iter().map(|s| parse_xpoly(s)).collect::<Result<_, _>>()?;
    let t = FunctionTuple::from_xpolys(&ps, ctx.clone())?;

    let w = wronskian(&t);
    println!("W = {}", w.to_xpoly()?);
    println!("shift form agrees: {}", wronskian_shift_form(&t) == w);
    for signs in all_sign_vectors(t.n()) {
        println!("signs {signs:?}: {}", wronskian_delta_form(&t, &signs)? == w);
    }

    let g = RatFunc::from_xpoly(&parse_xpoly("x + 2")?);
    let rep = verify_properties(&t, &g, &[q(2), q(-1), q(3)])?;
    println!("{rep:?}");

    // A dependent tuple.
    let dep = vec![ps[0].clone(), ps[2].clone(), &ps[2] + &ps[0].scale(&q(5))];
    let td = FunctionTuple::from_xpolys(&dep, ctx)?;
    println!("dependent: independent = {}, W = 0: {}", linearly_independent(&dep), wronskian(&td).is_zero());
    Ok(())
}
