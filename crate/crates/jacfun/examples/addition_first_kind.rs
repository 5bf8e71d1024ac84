//! The double summation addition theorem for the Jacobi function of the
//! first kind: terminating at integer degree, convergent otherwise, in both
//! the hyperbolic and trigonometric contexts, plus the single-sum Gegenbauer
//! reduction down to the Legendre addition theorem.
//!
//! Run with: cargo run --example addition_first_kind

use jacfun::addition::{
    addition_gegenbauer, addition_series, composite_arg, composite_arg_gegenbauer, Context,
    GegenbauerKind, GeodesicArgs, Kind, SeriesOptions, Sign, TruncationSpec,
};
use jacfun::jacobi::{jacobi_p, jacobi_p_cut, JacobiParams, Rep};
use jacfun::numkernel::c64;

fn main() -> jacfun::Result<()> {
    // terminating case: gamma = 2 stops at k = 2 with zero tail
    let params = JacobiParams::real(1.5, 0.5, 2.0);
    let args = GeodesicArgs::real(1.2, 1.3, 0.4, std::f64::consts::PI / 3.0, Sign::Plus);
    let opts = SeriesOptions::new(Kind::P, Context::Hyperbolic);
    let trunc = TruncationSpec::default();
    let series = addition_series(&opts, &params, &args, &trunc)?;
    let z = composite_arg(&args, Context::Hyperbolic)?;
    let direct = jacobi_p(&params, z, Rep::Auto)?;
    println!("first kind, hyperbolic, gamma = 2 (terminating at k = {}):", series.k_used);
    println!("  series : {:.15}", series.value.re);
    println!("  direct : {:.15}", direct.value.re);

    // nonterminating degree: geometric convergence of the k-blocks
    let params = JacobiParams::real(1.5, 0.5, 0.7);
    let trunc = TruncationSpec {
        k_max: 30,
        ..TruncationSpec::default()
    };
    let series = addition_series(&opts, &params, &args, &trunc)?;
    let direct = jacobi_p(&params, z, Rep::Auto)?;
    println!("\ngamma = 0.7, k_max = 30 (converged: {}):", series.converged);
    println!("  series : {:.12}", series.value.re);
    println!("  direct : {:.12}", direct.value.re);
    println!("  blocks : {:?}", series.terms.iter().take(6).map(|t| t.norm()).collect::<Vec<_>>());

    // trigonometric context with cut functions
    let params = JacobiParams::real(1.5, 0.5, 2.0);
    let targs = GeodesicArgs::real(0.8, 0.4, 0.5, 1.2, Sign::Plus);
    let topts = SeriesOptions::new(Kind::P, Context::Trig);
    let tseries = addition_series(&topts, &params, &targs, &TruncationSpec::default())?;
    let xcomp = composite_arg(&targs, Context::Trig)?;
    let tdirect = jacobi_p_cut(&params, xcomp)?;
    println!("\ntrigonometric context, gamma = 2:");
    println!("  series : {:.15}", tseries.value.re);
    println!("  direct : {:.15}", tdirect.value.re);

    // Gegenbauer reduction, down to the Legendre addition theorem at
    // alpha = 1/2: P_1(X) = cos t1 cos t2 + sin t1 sin t2 cos phi
    let (t1, t2, phi) = (0.5f64, 0.9f64, 1.2f64);
    let gargs = GeodesicArgs::real(t1.cos(), t2.cos(), 1.0, phi, Sign::Plus);
    let g = addition_gegenbauer(
        GegenbauerKind::CX,
        c64(0.5, 0.0),
        c64(1.0, 0.0),
        &gargs,
        &TruncationSpec::default(),
    )?;
    let composite = composite_arg_gegenbauer(&gargs, Context::Trig)?;
    println!("\nLegendre addition theorem (alpha = 1/2, n = 1):");
    println!("  series   : {:.15}", g.value.re);
    println!("  composite: {:.15}", composite.re);
    Ok(())
}
