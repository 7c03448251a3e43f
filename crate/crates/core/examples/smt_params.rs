//! Parameter sets and their exact certificates.

use aw_nevanlinna::qcore::{q, qr};
use aw_nevanlinna::smt::{compute_smt_params, params_from_core};

fn main() -> aw_nevanlinna::Result<()> {
    let p = params_from_core(1, 1, Some(1), &q(1), &q(1))?;
    println!("N = {}, M = {}, Omega = {}, M1 = {}", p.big_n, p.big_m, p.omega, p.m1);
    println!("{}", serde_json::to_string_pretty(&p.certificates)?);

    // Two hypersurfaces in P^2 with factor degrees (1, 1) and (2, 1).
    let p = compute_smt_params(2, 3, &[vec![1, 1], vec![2, 1]], 2, &qr(1, 2))?;
    println!("alpha = {}, beta = {}, dhat = {}, N = {}", p.alpha, p.beta, p.dhat, p.big_n);

    match compute_smt_params(2, 11, &[vec![1, 1], vec![2, 1]], 2, &q(1)) {
        Ok(_) => println!("hypothesis holds"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
