//! The parabolic biangle polynomial system: orthogonality under the weight
//! (1-w^2)^(a-b-1) w^(2b+1) (sin phi)^(2b), and the integral projections that
//! extract single (k,l) coefficients from the addition kernels (the k=l=0
//! case being the classical product formulas).
//!
//! Run with: cargo run --example biangle_orthogonality

use jacfun::addition::{biangle_orthogonality, biangle_poly, integral_projection, ProjectionKind};
use jacfun::jacobi::JacobiParams;
use jacfun::numkernel::c64;

fn main() -> jacfun::Result<()> {
    let (alpha, beta) = (1.5, 0.5);

    println!("biangle polynomial values at w = 0.7, phi = 1.1:");
    for (k, l) in [(0, 0), (1, 0), (1, 1), (2, 1)] {
        let v = biangle_poly(k, l, c64(alpha, 0.0), c64(beta, 0.0), c64(0.7, 0.0), 1.1)?;
        println!("  P_({k},{l}) = {:.12}", v.re);
    }

    println!("\northogonality (96-point tensor Gauss-Legendre):");
    for (k, l, k2, l2) in [(0, 0, 0, 0), (1, 0, 1, 0), (2, 1, 2, 1), (1, 0, 2, 1), (0, 0, 1, 1)] {
        let (integral, closed) = biangle_orthogonality(k, l, k2, l2, alpha, beta, 96)?;
        println!(
            "  <P_({k},{l}), P_({k2},{l2})> = {:+.12e}   closed form {:+.12e}",
            integral.re, closed.re
        );
    }

    // product formulas: the (0,0) projections of the addition kernels
    let params = JacobiParams::real(alpha, beta, 0.7);
    println!("\nproduct formulas (k = l = 0 projections):");
    let (i, c) = integral_projection(ProjectionKind::PHyp, 0, 0, &params, 1.2, 1.3, 96)?;
    println!("  P P : quadrature {:.12e}  closed {:.12e}", i.re, c.re);
    let (i, c) = integral_projection(ProjectionKind::QHyp, 0, 0, &params, 1.2, 1.6, 96)?;
    println!("  P Q : quadrature {:.12e}  closed {:.12e}", i.re, c.re);

    // higher modes pick out single terms of the double series
    println!("\nhigher projections:");
    for (k, l) in [(1, 0), (1, 1), (2, 1)] {
        let (i, c) = integral_projection(ProjectionKind::QHyp, k, l, &params, 1.2, 1.6, 96)?;
        println!(
            "  ({k},{l}): quadrature {:+.10e}  closed {:+.10e}  (diff {:.1e})",
            i.re,
            c.re,
            (i - c).norm()
        );
    }
    Ok(())
}
