use jacfun::numkernel::c64;
use jacfun::numkernel::C64;
use jacfun::jacobi::*;
use jacfun::classical::*;
use jacfun::addition::*;
use jacfun::symmspace::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn fd(f: impl Fn(f64) -> C64, x: f64, h: f64) -> (C64, C64, C64) {
    let fm = f(x - h); let f0 = f(x); let fp = f(x + h);
    ((f0), (fp - fm) / (2.0*h), (fp - 2.0*f0 + fm)/(h*h))
}

fn main() {
    const SEED: u64 = 20240817;
    // criterion 3: find the bad family
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 3);
    let h = 1e-5;
    for iter in 0..17 {
        let alpha = rng.gen_range(0.2..1.5);
        let beta = rng.gen_range(0.2..1.2);
        let gamma = rng.gen_range(0.4..1.8);
        let zr = rng.gen_range(1.3..2.2);
        let xr = rng.gen_range(-0.6..0.6);
        let params = JacobiParams::real(alpha, beta, gamma);
        let jac_res = |f: &dyn Fn(f64) -> C64| {
            let (w, w1, w2) = fd(f, zr, h);
            let t1 = (1.0 - zr*zr)*w2;
            let t2 = (beta - alpha - zr*(alpha+beta+2.0))*w1;
            let t3 = gamma*(alpha+beta+gamma+1.0)*w;
            (t1+t2+t3).norm()/t1.norm().max(t2.norm()).max(t3.norm()).max(1e-10)
        };
        let rp = jac_res(&|t| jacobi_p(&params, c64(t,0.0), Rep::Auto).unwrap().value);
        let rq = jac_res(&|t| jacobi_q(&params, c64(t,0.0), Rep::Auto).unwrap().value);
        let (lam, mu) = (c64(gamma,0.0), c64(0.5*beta,0.0));
        let gen_res = |f: &dyn Fn(f64) -> C64| {
            let (w, w1, w2) = fd(f, zr, h);
            let t1 = (zr*zr-1.0)*w2;
            let t2 = (2.0*lam+1.0)*zr*w1;
            let t3 = -lam*(lam+2.0*mu)*w;
            (t1+t2+t3).norm()/t1.norm().max(t2.norm()).max(t3.norm()).max(1e-10)
        };
        let rc = gen_res(&|t| gegenbauer_c(lam, mu, c64(t,0.0)).unwrap());
        let rd = gen_res(&|t| gegenbauer_d(lam, mu, c64(t,0.0)).unwrap());
        let (nu, mo) = (c64(gamma,0.0), c64(0.3*beta,0.0));
        let leg_res = |f: &dyn Fn(f64) -> C64, t: f64| {
            let (w, w1, w2) = fd(f, t, h);
            let t1 = (1.0 - t*t)*w2;
            let t2 = -2.0*t*w1;
            let t3 = (nu*(nu+1.0) - mo*mo/(1.0-t*t))*w;
            (t1+t2+t3).norm()/t1.norm().max(t2.norm()).max(t3.norm()).max(1e-10)
        };
        let rlp = leg_res(&|t| legendre_p(nu, mo, c64(t,0.0)).unwrap(), zr);
        let rlq = leg_res(&|t| legendre_q(nu, mo, c64(t,0.0)).unwrap(), zr);
        let rfp = leg_res(&|t| ferrers_p(nu, mo, c64(t,0.0)).unwrap(), xr);
        let rfq = leg_res(&|t| ferrers_q(nu, mo, c64(t,0.0)).unwrap(), xr);
        if [rp,rq,rc,rd,rlp,rlq,rfp,rfq].iter().any(|r| *r > 1e-5) {
            println!("iter {iter}: P {rp:.1e} Q {rq:.1e} C {rc:.1e} D {rd:.1e} LP {rlp:.1e} LQ {rlq:.1e} FP {rfp:.1e} FQ {rfq:.1e}  (a={alpha:.3},b={beta:.3},g={gamma:.3},z={zr:.3},x={xr:.3})");
        }
    }

    // criterion 6: find bad sample
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
    for iter in 0..20 {
        let beta = rng.gen_range(-0.45..1.4);
        let alpha = beta + rng.gen_range(0.05..1.5);
        let gamma = rng.gen_range(0.0..2.0);
        let params = JacobiParams::real(alpha, beta, gamma);
        let args = GeodesicArgs::real(
            rng.gen_range(1.001..1.3), rng.gen_range(1.8..3.0),
            rng.gen_range(0.05..0.95), rng.gen_range(0.05..3.1),
            if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus });
        let opts = SeriesOptions::new(Kind::Q, Context::Hyperbolic);
        let trunc = TruncationSpec { k_max: 40, tol: 1e-9, ..TruncationSpec::default() };
        match addition_series(&opts, &params, &args, &trunc) {
            Ok(series) => {
                let direct = jacobi_q(&params, composite_arg(&args, Context::Hyperbolic).unwrap(), Rep::Auto).unwrap().value;
                let dev = (series.value - direct).norm()/direct.norm();
                if dev > 1e-6 {
                    println!("c6 iter {iter}: dev {dev:.2e} a={alpha:.4} b={beta:.4} g={gamma:.4} z1={} z2={} w={} phi={:.3} conv={}", args.p1.re, args.p2.re, args.w.re, args.phi, series.converged);
                }
            }
            Err(e) => println!("c6 iter {iter}: err {e}"),
        }
    }

    // criterion 4 cut: find worst combo
    let x = c64(0.4, 0.0);
    let richardson = |f: &dyn Fn(f64) -> C64| {
        let (f1, f2, f3) = (f(1e-4), f(5e-5), f(2.5e-5));
        (4.0*(2.0*f3-f2) - (2.0*f2-f1))/3.0
    };
    let mut worst = (0.0, 0, 0, 0);
    for n in 0..=4u32 { for a in 0..=4u32 { for b in 0..=4u32 {
        let exact = jacobi_q_cut_integer(n, a, b, x).unwrap().value;
        let limit = richardson(&|d| {
            let p = JacobiParams::real(a as f64 + d, b as f64 + d, n as f64 + d);
            jacobi_q_cut(&p, x).unwrap().value
        });
        let dev = (exact - limit).norm()/exact.norm().max(1e-300);
        if dev > worst.0 { worst = (dev, n, a, b); }
    }}}
    println!("c4 worst cut: dev {:.2e} at n={} a={} b={}", worst.0, worst.1, worst.2, worst.3);

    // criterion 9: compact expansion errors at k_max 60
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 9);
    for space in all_spaces(2, 1.0) {
        if !space.compact { continue; }
        let trunc = TruncationSpec { k_max: 60, tol: 1e-8, ..TruncationSpec::default() };
        for i in 0..20 {
            let args = GeodesicArgs::real(
                rng.gen_range(0.9..0.97), rng.gen_range(0.3..0.6),
                rng.gen_range(0.3..0.9), rng.gen_range(0.3..2.8), Sign::Plus);
            match greens_expansion(&space, &args, &trunc) {
                Ok(series) => {
                    let arg = composite_arg(&args, Context::Trig).unwrap();
                    let direct = greens(&space, 0.5*arg.re.acos()).unwrap();
                    let dev = (series.value.re - direct).abs()/direct.abs().max(1e-300);
                    if dev > 1e-5 || !series.converged {
                        println!("{} pair {i}: dev {dev:.2e} conv {} k_used {}", space.label(), series.converged, series.k_used);
                    }
                }
                Err(e) => { println!("{} pair {i}: err {e}", space.label()); }
            }
        }
    }
}
