//! The classical specializations: Gegenbauer, associated Legendre, Ferrers
//! and Chebyshev functions, and a few of the interrelations connecting them
//! to symmetric and antisymmetric Jacobi functions.
//!
//! Run with: cargo run --example classical_zoo

use jacfun::classical::{
    self, eval_classical, run_identity_batch, AnyIdentity, ClassicalKind, Family, QuadraticId,
    SpecializationId,
};
use jacfun::numkernel::c64;

fn main() -> jacfun::Result<()> {
    let z = c64(1.7, 0.0);
    let x = c64(0.4, 0.0);

    println!("values at degree 0.9, order 0.3:");
    for (family, arg) in [
        (Family::GegenbauerC, z),
        (Family::GegenbauerD, z),
        (Family::LegendreP, z),
        (Family::LegendreQ, z),
        (Family::FerrersP, x),
        (Family::FerrersQ, x),
        (Family::GegenbauerCCut, x),
        (Family::GegenbauerDCut, x),
    ] {
        let kind = ClassicalKind {
            family,
            degree: c64(0.9, 0.0),
            order: c64(0.3, 0.0),
        };
        let r = eval_classical(&kind, arg)?;
        println!("  {family:?}({arg}) = {:.12}+{:.12}i", r.value.re, r.value.im);
    }

    // polynomials: P_n(x) = C_n^{1/2}(x) = P_n^{(0,0)}(x)
    println!("\nLegendre polynomial triple agreement at n = 5, x = 0.321:");
    let a = classical::legendre_poly(5, c64(0.321, 0.0));
    let b = classical::gegenbauer_c(c64(5.0, 0.0), c64(0.5, 0.0), c64(0.321, 0.0))?;
    println!("  recurrence: {:.15}", a.re);
    println!("  gegenbauer: {:.15}", b.re);

    // run a couple of identity batches the way `jacfun verify` does
    println!("\nseeded identity batches (50 samples each):");
    for id in [
        AnyIdentity::Specialization(SpecializationId::SymPGegenbauerC),
        AnyIdentity::Specialization(SpecializationId::SymQGegenbauerD),
        AnyIdentity::Quadratic(QuadraticId::QEven),
    ] {
        let report = run_identity_batch(id, 50, 7)?;
        println!(
            "  {:<28} max residual {:.2e}  pass: {}",
            report.identity, report.max_rel_residual, report.pass
        );
    }

    // the Chebyshev limit of Gegenbauer
    let res = classical::chebyshev_limit(3, c64(0.3, 0.0))?;
    println!("\nChebyshev limit residual at n = 3: {res:.2e}");
    Ok(())
}
