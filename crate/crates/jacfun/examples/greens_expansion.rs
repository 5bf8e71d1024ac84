//! Separated expansion of the Green's functions: the gamma = 0 Olver-form
//! addition theorem splits G(geodesic(p1, p2)) into products of functions of
//! the two radial coordinates, with Chebyshev T/U (or C^3) angular factors
//! depending on the base field.
//!
//! Run with: cargo run --example greens_expansion

use jacfun::addition::{composite_arg, Context, GeodesicArgs, Sign, TruncationSpec};
use jacfun::symmspace::{all_spaces, greens, greens_expansion};

fn main() -> jacfun::Result<()> {
    let trunc = TruncationSpec {
        k_max: 40,
        tol: 1e-8,
        ..TruncationSpec::default()
    };

    println!("noncompact spaces: two points at cosh r = 1.1 and 1.9, w = 0.6, phi = 0.9");
    let args = GeodesicArgs::real(1.1, 1.9, 0.6, 0.9, Sign::Plus);
    for space in all_spaces(2, 1.0).into_iter().filter(|s| !s.compact) {
        let series = greens_expansion(&space, &args, &trunc)?;
        let z = composite_arg(&args, Context::Hyperbolic)?;
        let direct = greens(&space, 0.5 * z.re.acosh())?;
        println!(
            "  {:<6} expansion {:+.10e}  direct {:+.10e}  (k_used {}, converged {})",
            space.label(),
            series.value.re,
            direct,
            series.k_used,
            series.converged
        );
    }

    println!("\ncompact spaces: cos theta = 0.95 and 0.5, w = 0.5, phi = 1.1");
    println!("(the second-kind factors are the extrapolated limit functions)");
    let args = GeodesicArgs::real(0.95, 0.5, 0.5, 1.1, Sign::Plus);
    let trunc = TruncationSpec {
        k_max: 26,
        tol: 1e-7,
        ..TruncationSpec::default()
    };
    for space in all_spaces(2, 1.0).into_iter().filter(|s| s.compact) {
        let series = greens_expansion(&space, &args, &trunc)?;
        let x = composite_arg(&args, Context::Trig)?;
        let direct = greens(&space, 0.5 * x.re.acos())?;
        println!(
            "  {:<6} expansion {:+.10e}  direct {:+.10e}  (k_used {})",
            space.label(),
            series.value.re,
            direct,
            series.k_used
        );
    }
    Ok(())
}
