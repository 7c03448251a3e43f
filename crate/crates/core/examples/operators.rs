//! The divided-difference, averaging and shift operators on polynomials in x.

use aw_nevanlinna::awops::{aw_avg, aw_diff, aw_diff_pow, mixed_all, shift, verify_product_rule, verify_quotient_rule, AwContext};
use aw_nevanlinna::qcore::{parse_xpoly, qr, RatFunc};

fn show(label: &str, f: &RatFunc) {
    match f.to_xpoly() {
        Ok(p) => println!("{label:<14} {p}"),
        Err(_) => println!("{label:<14} {f}"),
    }
}

fn main() -> aw_nevanlinna::Result<()> {
    let ctx = AwContext::new(qr(1, 2))?;
    let f = RatFunc::from_xpoly(&parse_xpoly("x^3 - 2*x + 1/3")?);
    let g = RatFunc::from_xpoly(&parse_xpoly("x^2 + 1")?);

    show("f", &f);
    show("D f", &aw_diff(&f, &ctx));
    show("D^2 f", &aw_diff_pow(&f, 2, &ctx));
    show("A_q f", &aw_avg(&f, 1, &ctx));
    // A single shift leaves the x-polynomials; it is a Laurent polynomial in z.
    println!("{:<14} {}", "eta f", shift(&f, 1, &ctx));

    for (t, op) in mixed_all(&f, 2, &ctx).iter().enumerate() {
        show(&format!("A D^{t} (M=2)"), op);
    }

    println!("product rule holds: {}", verify_product_rule(&f, &g, &ctx));
    println!("quotient rule holds: {}", verify_quotient_rule(&f, &g, &ctx)?);
    Ok(())
}
