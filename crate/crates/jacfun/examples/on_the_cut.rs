//! Jacobi functions on the cut (-1, 1): the Ferrers-type second kind via its
//! two-term hypergeometric formula, cross-checked against the defining
//! +-i0 average, plus the exact integer form and the Olver-style
//! normalization.
//!
//! Run with: cargo run --example on_the_cut

use jacfun::jacobi::{
    jacobi_p_cut, jacobi_q_cut, jacobi_q_cut_average, jacobi_q_cut_integer, jacobi_q_cut_special,
    JacobiParams, CUT_DELTA,
};
use jacfun::numkernel::c64;

fn main() -> jacfun::Result<()> {
    let params = JacobiParams::real(0.3, 0.2, 0.7);
    let x = c64(0.4, 0.0);

    let q = jacobi_q_cut(&params, x)?;
    let avg = jacobi_q_cut_average(&params, x, CUT_DELTA)?;
    println!("sf-Q at (0.3, 0.2, 0.7), x = 0.4:");
    println!("  two-term formula : {:.15}", q.value.re);
    println!("  defining average : {:.15}", avg.value.re);
    println!(
        "  agreement        : {:.2e}",
        (q.value - avg.value).norm() / q.value.norm()
    );

    // first kind on the cut is plain analytic continuation
    let p = jacobi_p_cut(&params, x)?;
    println!("\nsf-P at the same point: {:.15}", p.value.re);

    // integer parameters: finite polynomial sum + log term, exact
    let qi = jacobi_q_cut_integer(0, 0, 0, c64(0.5, 0.0))?;
    println!(
        "\nsf-Q_0^(0,0)(0.5) = {:.16}  vs ln(3)/2 = {:.16}",
        qi.value.re,
        3f64.ln() / 2.0
    );

    // the special normalization bold-sf-Q, related by
    // bold-sf-Q = -sin(pi alpha) Gamma(alpha+1) / pi * sf-Q
    let qb = jacobi_q_cut_special(&params, x)?;
    let factor = -(std::f64::consts::PI * 0.3).sin()
        * jacfun::numkernel::gamma(c64(1.3, 0.0))?.re
        / std::f64::consts::PI;
    println!("\nbold-sf-Q: {:.15}", qb.value.re);
    println!("scaled sf-Q: {:.15}", q.value.re * factor);

    // near the endpoint the leading behavior is coefficient * eps^(-alpha)
    let p15 = JacobiParams::real(1.5, 0.2, 0.3);
    let eps = 1e-6;
    let v = jacobi_q_cut(&p15, c64(1.0 - eps, 0.0))?;
    let form = jacfun::jacobi::q_asymptotics(&p15, jacfun::jacobi::AsymptoticRegime::CutNearOne)?;
    println!(
        "\nnear x = 1: value {:.6e}, leading form {:.6e}",
        v.value.re,
        form.leading_value(c64(eps, 0.0)).re
    );
    Ok(())
}
