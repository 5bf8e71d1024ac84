//! The double summation addition theorem for the Jacobi function of the
//! second kind: nonterminating, with the z_< / z_> point split, the
//! standard-vs-Olver normalization equivalence, and the sign-variant
//! discovery report.
//!
//! Run with: cargo run --example addition_second_kind

use jacfun::addition::{
    addition_series, composite_arg, Context, GeodesicArgs, Kind, Normalization, SeriesOptions,
    Sign, SignVariant, SumOrder, TruncationSpec,
};
use jacfun::jacobi::{jacobi_q, jacobi_q_cut, JacobiParams, Rep};

fn main() -> jacfun::Result<()> {
    let params = JacobiParams::real(1.5, 0.5, 0.3);
    let args = GeodesicArgs::real(1.1, 2.0, 0.7, std::f64::consts::PI / 4.0, Sign::Plus);
    let trunc = TruncationSpec {
        k_max: 40,
        ..TruncationSpec::default()
    };

    let opts = SeriesOptions::new(Kind::Q, Context::Hyperbolic);
    let series = addition_series(&opts, &params, &args, &trunc)?;
    let z = composite_arg(&args, Context::Hyperbolic)?;
    let direct = jacobi_q(&params, z, Rep::Auto)?;
    println!("second kind, hyperbolic (k_max = 40, converged: {}):", series.converged);
    println!("  series : {:.12e}", series.value.re);
    println!("  direct : {:.12e}", direct.value.re);
    println!(
        "  rel dev: {:.2e}",
        (series.value - direct.value).norm() / direct.value.norm()
    );

    // Olver normalization sums to the same value through pole-free factors
    let olver = SeriesOptions {
        normalization: Normalization::Olver,
        ..opts
    };
    let oseries = addition_series(&olver, &params, &args, &trunc)?;
    println!("  olver  : {:.12e}", oseries.value.re);

    // reversed l-sum
    let rev = SeriesOptions {
        order: SumOrder::Reversed,
        ..opts
    };
    let rseries = addition_series(&rev, &params, &args, &trunc)?;
    println!("  revsum : {:.12e}", rseries.value.re);

    // sign-variant discovery: which printed variant matches direct
    // evaluation in each context
    println!("\nsign-variant discovery (hyperbolic):");
    for variant in [
        SignVariant::MinusTopKml,
        SignVariant::PlusTopKpl,
        SignVariant::PlusTopKml,
    ] {
        let o = SeriesOptions {
            sign_variant: Some(variant),
            ..opts
        };
        match addition_series(&o, &params, &args, &trunc) {
            Ok(r) => {
                let dev = (r.value - direct.value).norm() / direct.value.norm();
                let verdict = if dev < 1e-5 { "agrees" } else { "disagrees" };
                println!("  {variant:?}: rel dev {dev:.2e} -> {verdict}");
            }
            Err(e) => println!("  {variant:?}: {e}"),
        }
    }

    // trigonometric context in its empirically convergent region
    let tparams = JacobiParams::real(0.3, 0.2, 0.6);
    let targs = GeodesicArgs::real(0.95, 0.5, 0.5, 1.1, Sign::Plus);
    let topts = SeriesOptions::new(Kind::Q, Context::Trig);
    let ttrunc = TruncationSpec {
        k_max: 40,
        tol: 1e-9,
        ..TruncationSpec::default()
    };
    let tseries = addition_series(&topts, &tparams, &targs, &ttrunc)?;
    let x = composite_arg(&targs, Context::Trig)?;
    let tdirect = jacobi_q_cut(&tparams, x)?;
    println!("\nsecond kind, trigonometric (converged: {}):", tseries.converged);
    println!("  series : {:.12}", tseries.value.re);
    println!("  direct : {:.12}", tdirect.value.re);
    Ok(())
}
