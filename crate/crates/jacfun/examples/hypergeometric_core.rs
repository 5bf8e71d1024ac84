//! The Olver-normalized Gauss hypergeometric core: entire in the parameters
//! (including nonpositive integer c), automatic argument-transformation
//! selection over the six standard maps, and the compensated double-double
//! accumulation path.
//!
//! Run with: cargo run --example hypergeometric_core

use jacfun::hypergeom::{olver_2f1, olver_2f1_prec, olver_rfs, quad_transform_2f1, Precision};
use jacfun::numkernel::c64;
use jacfun::numkernel::quadrature::QuadratureRule;

fn main() -> jacfun::Result<()> {
    // 2F1(1,1;2;z) = -ln(1-z)/z; the Olver form divides by Gamma(2) = 1
    let r = olver_2f1(c64(1.0, 0.0), c64(1.0, 0.0), c64(2.0, 0.0), c64(0.5, 0.0))?;
    println!("bold-F(1,1;2;1/2) = {:.15}   (2 ln 2 = {:.15})", r.value.re, 2.0 * 2f64.ln());
    println!("  path {:?}, {} terms, est err {:.1e}", r.path, r.terms_used, r.abs_error_estimate);

    // continuity straight through a nonpositive integer c
    println!("\nbold-F across c = -2 (entire in c):");
    for c in [-2.0 - 1e-6, -2.0, -2.0 + 1e-6] {
        let r = olver_2f1(c64(0.6, 0.0), c64(1.9, 0.0), c64(c, 0.0), c64(0.4, 0.0))?;
        println!("  c = {c:+.6}: {:.10}", r.value.re);
    }

    // transformation selection outside the unit disk
    println!("\narguments needing linear transformations:");
    for z in [c64(-2.5, 0.4), c64(0.4, 1.8), c64(0.97, 0.0)] {
        let r = olver_2f1(c64(0.35, 0.0), c64(1.45, 0.0), c64(0.77, 0.0), z)?;
        println!("  z = {z}: {:.12}+{:.12}i  via {:?}", r.value.re, r.value.im, r.path);
    }

    // generalized series and the quadratic c = 2b transformation
    let e = olver_rfs(&[], &[], c64(1.0, 0.0))?;
    println!("\n0F0(1) = e = {:.15}", e.value.re);
    let q = quad_transform_2f1(c64(0.7, 0.0), c64(1.1, 0.0), c64(2.2, 0.0), c64(0.2, 0.0))?;
    println!("quadratic transform both-sides residual: {:.2e}", q.abs_error_estimate);

    // double-double accumulation for the oracle path
    let d = olver_2f1(c64(0.35, 0.0), c64(1.45, 0.0), c64(0.77, 0.0), c64(0.6, 0.0))?;
    let dd = olver_2f1_prec(
        c64(0.35, 0.0),
        c64(1.45, 0.0),
        c64(0.77, 0.0),
        c64(0.6, 0.0),
        Precision::DoubleDouble,
    )?;
    println!("\ndouble vs double-double accumulation: {:.16} vs {:.16}", d.value.re, dd.value.re);

    // the quadrature rules behind the orthogonality checks
    let rule = QuadratureRule::gauss_legendre(20)?;
    let integral = rule.integrate(-1.0, 1.0, |t| t.powi(10));
    println!("20-point Gauss-Legendre of x^10 over [-1,1]: {integral:.16} (exact 2/11 = {:.16})", 2.0 / 11.0);
    Ok(())
}
