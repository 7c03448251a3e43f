//! Truncated counts at exact points of the z-plane.

use aw_nevanlinna::awops::AwContext;
use aw_nevanlinna::nevanlinna::truncated::*;
use aw_nevanlinna::qcore::{q, GaussPoint, RatFunc, XPoly};

fn main() -> aw_nevanlinna::Result<()> {
    let ctx = AwContext::default();
    // Zeros at the x-images of z = 32, 64, 128: one shift chain for s = 1/2.
    let chain = [32, 64, 128];
    let factors: Vec<XPoly> = chain
        .iter()
        .map(|&z| XPoly::new(vec![-z_to_x(&GaussPoint::real(q(z))).re, q(1)]))
        .collect();
    let f = RatFunc::from_xpoly(&factors.iter().fold(XPoly::one(), |a, p| &a * p));
    let points: Vec<GaussPoint> = [16, 32, 64, 128, 256].iter().map(|&z| GaussPoint::real(q(z))).collect();

    for m in 1..=3 {
        let aw = trunc_aw_m(&f, &q(0), m, &points, &ctx)?;
        println!("M = {m}: truncated count {aw}, order identity {}", verify_lemma53(&f, m, &points, &ctx)?);
    }
    let cf = trunc_aw_cf(&f, &q(0), &points[1..], &ctx)?;
    println!("two-point variant: {cf:?}");

    let funcs: Vec<RatFunc> = factors.iter().map(RatFunc::from_xpoly).collect();
    println!("{:?}", superadditivity_report(&funcs, 2, &points, &ctx)?);

    // Integrated form: weighted zero moduli in the x-plane.
    let l = f.num().clone();
    let prof = truncated_profile(&l, std::slice::from_ref(&l), 2, delta(2), &ctx)?;
    println!("profile total {} at r = 100: {:.4}", prof.total(), prof.counting(100.0));
    Ok(())
}
