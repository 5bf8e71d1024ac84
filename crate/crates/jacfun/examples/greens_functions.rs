//! Fundamental solutions of the Laplace-Beltrami operator on the six
//! rank-one symmetric spaces: closed forms, harmonicity residuals, and the
//! flat-space matching that pins every constant (including 302400/pi^8 for
//! the octonionic plane).
//!
//! Run with: cargo run --example greens_functions

use jacfun::symmspace::{
    all_spaces, euclidean_greens, greens, near_singularity_check, radial_laplacian_residual,
    DivisionField, SymmetricSpace,
};

fn main() -> jacfun::Result<()> {
    // CH^1 has the elementary closed form (1/2pi) ln coth r
    let ch1 = SymmetricSpace::new(DivisionField::Complex, false, 1, 1.0)?;
    println!("CH^1 vs (1/2pi) ln coth r:");
    for r in [0.2, 0.8, 2.0] {
        let g = greens(&ch1, r)?;
        let closed = (1.0 / r.tanh()).ln() / (2.0 * std::f64::consts::PI);
        println!("  r = {r}: {g:.15}  closed {closed:.15}");
    }

    println!("\nall six spaces at n = 2, R = 1:");
    println!("{:<6} {:>5} {:>5} {:>14} {:>12} {:>22}", "space", "alpha", "beta", "constant", "G(0.8)", "harmonicity residual");
    for space in all_spaces(2, 1.0) {
        let point = 0.8;
        let g = greens(&space, point)?;
        let res = radial_laplacian_residual(&space, |r| greens(&space, r).unwrap(), point, 1e-4 * point)?;
        println!(
            "{:<6} {:>5} {:>5} {:>14.6e} {:>12.4e} {:>22.3e}",
            space.label(),
            space.alpha(),
            space.beta(),
            space.constant(),
            g,
            res
        );
    }

    println!("\nflat-space matching: G / Euclidean -> 1 as the geodesic shrinks");
    for space in all_spaces(2, 1.0) {
        let ratios = near_singularity_check(&space)?;
        let formatted: Vec<String> = ratios
            .iter()
            .map(|(eps, ratio)| format!("eps={eps:.0e}: {ratio:.8}"))
            .collect();
        println!("  {:<6} {}", space.label(), formatted.join("  "));
    }

    // the Euclidean references themselves
    println!("\nEuclidean fundamental solutions at distance 1:");
    for s in [2u32, 3, 4, 8, 16] {
        println!("  s = {s:>2}: {:.10e}", euclidean_greens(s, 1.0)?);
    }
    Ok(())
}
