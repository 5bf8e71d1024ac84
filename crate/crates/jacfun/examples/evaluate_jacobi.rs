//! Evaluate Jacobi functions of the first and second kind.
//!
//! Shows the four hypergeometric representations agreeing, the special
//! values at the endpoint and at negative integer degrees, and the exact
//! integer-parameter log formula.
//!
//! Run with: cargo run --example evaluate_jacobi

use jacfun::jacobi::{jacobi_p, jacobi_q, jacobi_q_integer, JacobiParams, Rep};
use jacfun::numkernel::c64;

fn main() -> jacfun::Result<()> {
    let params = JacobiParams::real(0.4, 0.2, 0.7);
    let z = c64(1.5, 0.0);

    println!("P_gamma^(alpha,beta) at alpha=0.4, beta=0.2, gamma=0.7, z=1.5:");
    for rep in [Rep::Rep1, Rep::Rep2, Rep::Rep3, Rep::Rep4] {
        let r = jacobi_p(&params, z, rep)?;
        println!("  {rep:?}: {:.15} (est err {:.1e})", r.value.re, r.abs_error_estimate);
    }

    println!("\nQ_gamma^(alpha,beta) at the same parameters:");
    for rep in [Rep::Rep1, Rep::Rep2, Rep::Rep3, Rep::Rep4] {
        let r = jacobi_q(&params, z, rep)?;
        println!("  {rep:?}: {:.15}", r.value.re);
    }

    // P_0 = 1 for any parameters and argument
    let one = jacobi_p(&JacobiParams::real(0.3, 0.9, 0.0), c64(2.7, 0.4), Rep::Auto)?;
    println!("\nP_0 at any argument: {} (exactly 1)", one.value);

    // the exact log formula at integer parameters: Q_0^(0,0)(2) = ln(3)/2
    let q = jacobi_q_integer(0, 0, 0, c64(2.0, 0.0))?;
    println!(
        "Q_0^(0,0)(2) = {:.16}  vs ln(3)/2 = {:.16}",
        q.value.re,
        3f64.ln() / 2.0
    );

    // complex arguments work throughout the cut plane
    let r = jacobi_q(&params, c64(0.3, 1.4), Rep::Auto)?;
    println!("Q at z = 0.3+1.4i: {:.12}+{:.12}i", r.value.re, r.value.im);
    Ok(())
}
