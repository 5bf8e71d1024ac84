//! Complex scalar kernel: branch conventions, the gamma family, shifted
//! factorials, and Gauss-Legendre quadrature.
//!
//! Everything here is pure and reentrant. The branch convention is principal
//! everywhere except [`branch_pow_sq`], which realizes the product convention
//! `(z^2-1)^a := (z+1)^a (z-1)^a`.

pub mod double_double;
pub mod quadrature;

use crate::error::{Error, Result};
use num_complex::Complex64;

pub type C64 = Complex64;

/// Tolerance under which a value is snapped to an exact integer.
pub const INT_EPS: f64 = 1e-12;

pub fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Nearest integer if `z` is within `INT_EPS` of one (and real), else None.
pub fn nearest_integer(z: C64) -> Option<i64> {
    if z.im.abs() > INT_EPS {
        return None;
    }
    let n = z.re.round();
    if (z.re - n).abs() <= INT_EPS && n.abs() < 1e15 {
        Some(n as i64)
    } else {
        None
    }
}

/// Some(n >= 0) if `z` is within `INT_EPS` of the nonpositive integer `-n`.
pub fn nonpositive_integer(z: C64) -> Option<u64> {
    match nearest_integer(z) {
        Some(n) if n <= 0 => Some((-n) as u64),
        _ => None,
    }
}

/// Distance from `z` to the nearest integer (in the complex plane).
pub fn integer_distance(z: C64) -> f64 {
    (z - c64(z.re.round(), 0.0)).norm()
}

/// Distance from `z` to the nearest nonpositive integer.
pub fn nonpos_integer_distance(z: C64) -> f64 {
    let n = z.re.round().min(0.0);
    (z - c64(n, 0.0)).norm()
}

const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_74;

/// A logarithm of Gamma(z) (not necessarily the principal one). Safe to
/// exponentiate or to combine in sums that are exponentiated, since any
/// branch offset is a multiple of 2*pi*i.
pub fn ln_gamma(z: C64) -> C64 {
    if z.re < 0.5 {
        // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z))
        let s = (C64::new(std::f64::consts::PI, 0.0) * z).sin();
        return C64::new(std::f64::consts::PI.ln(), 0.0) - s.ln() - ln_gamma(c64(1.0, 0.0) - z);
    }
    let zm1 = z - 1.0;
    let mut acc = C64::new(LANCZOS_COEFFS[0], 0.0);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (zm1 + i as f64);
    }
    let t = zm1 + 7.5;
    HALF_LN_TWO_PI + (zm1 + 0.5) * t.ln() - t + acc.ln()
}

/// Gamma(z) with a typed pole error at nonpositive integers and an overflow
/// guard (the spec's non-goal region |z| > 170 on the positive axis).
pub fn gamma(z: C64) -> Result<C64> {
    if nonpositive_integer(z).is_some() {
        return Err(Error::Pole { at: z });
    }
    let lg = ln_gamma(z);
    if lg.re > 709.0 {
        return Err(Error::Overflow(format!("gamma({z}) exceeds double range")));
    }
    Ok(lg.exp())
}

/// 1/Gamma(z): entire, exactly 0 at the poles of Gamma.
pub fn rgamma(z: C64) -> C64 {
    if nonpositive_integer(z).is_some() {
        return C64::new(0.0, 0.0);
    }
    if z.re < 0.5 {
        // 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi: stable near the poles
        let s = (C64::new(std::f64::consts::PI, 0.0) * z).sin();
        let lg = ln_gamma(c64(1.0, 0.0) - z);
        if lg.re > 690.0 {
            // Gamma(1-z) overflows; 1/Gamma(z) itself is enormous here
            return (lg + s.ln() - std::f64::consts::PI.ln()).exp();
        }
        return s * lg.exp() / std::f64::consts::PI;
    }
    (-ln_gamma(z)).exp()
}

/// Product of gammas over a product of gammas, with exact pole cancellation:
/// num/den pole pairs contribute lim Gamma(-m+e)/Gamma(-n+e) = (-1)^{m-n} n!/m!.
/// Unpaired numerator poles are a typed error; unpaired denominator poles give 0.
pub fn gamma_ratio(num: &[C64], den: &[C64]) -> Result<C64> {
    let mut num_poles: Vec<u64> = Vec::new();
    let mut den_poles: Vec<u64> = Vec::new();
    let mut lg = C64::new(0.0, 0.0);
    for &a in num {
        match nonpositive_integer(a) {
            Some(m) => num_poles.push(m),
            None => lg += ln_gamma(a),
        }
    }
    for &b in den {
        match nonpositive_integer(b) {
            Some(m) => den_poles.push(m),
            None => lg -= ln_gamma(b),
        }
    }
    let pairs = num_poles.len().min(den_poles.len());
    if num_poles.len() > pairs {
        return Err(Error::Pole {
            at: c64(-(num_poles[pairs] as f64), 0.0),
        });
    }
    let mut factor = 1.0f64;
    let mut sign = 1.0f64;
    for i in 0..pairs {
        let (m, n) = (num_poles[i], den_poles[i]);
        if (m + n) % 2 == 1 {
            sign = -sign;
        }
        factor *= ln_factorial_ratio(n, m);
    }
    if den_poles.len() > pairs {
        return Ok(C64::new(0.0, 0.0));
    }
    if lg.re > 709.0 {
        return Err(Error::Overflow("gamma ratio exceeds double range".into()));
    }
    Ok(lg.exp() * sign * factor)
}

/// n!/m! as a float without overflowing intermediates.
fn ln_factorial_ratio(n: u64, m: u64) -> f64 {
    let lg = ln_gamma(c64(n as f64 + 1.0, 0.0)).re - ln_gamma(c64(m as f64 + 1.0, 0.0)).re;
    lg.exp()
}

/// Shifted factorial (a)_n, extended to negative n via (a)_{-m} = 1/(a-m)_m.
pub fn pochhammer(a: C64, n: i64) -> Result<C64> {
    if n >= 0 {
        let n = n as u64;
        if n <= 512 {
            let mut p = C64::new(1.0, 0.0);
            for k in 0..n {
                p *= a + k as f64;
            }
            return Ok(p);
        }
        // integer a <= 0 inside the product range gives an exact zero
        if let Some(m) = nonpositive_integer(a) {
            if m < n {
                return Ok(C64::new(0.0, 0.0));
            }
        }
        return gamma_ratio(&[a + n as f64], &[a]);
    }
    let m = (-n) as u64;
    let mut p = C64::new(1.0, 0.0);
    for k in 1..=m {
        let factor = a - k as f64;
        if factor.norm() < 1e-300 {
            return Err(Error::Undefined(format!(
                "pochhammer({a}, {n}) hits an uncancelled pole"
            )));
        }
        p /= factor;
    }
    Ok(p)
}

/// Generalized binomial coefficient binom(z, n) = (-1)^n (-z)_n / n!.
pub fn binomial(z: C64, n: u32) -> C64 {
    let mut p = C64::new(1.0, 0.0);
    for k in 0..n {
        p *= (z - k as f64) / (k as f64 + 1.0);
    }
    p
}

/// The paper's branch convention (z^2-1)^a := (z+1)^a (z-1)^a with principal
/// powers of each factor. This is NOT the principal power of z^2-1.
pub fn branch_pow_sq(z: C64, alpha: C64) -> Result<C64> {
    if (z - 1.0).norm() < 1e-300 || (z + 1.0).norm() < 1e-300 {
        return Err(Error::BranchPoint { at: z });
    }
    Ok((z + 1.0).powc(alpha) * (z - 1.0).powc(alpha))
}

/// Neumann factor eps_n = 2 - delta_{n,0}.
pub fn neumann(n: u32) -> u32 {
    if n == 0 {
        1
    } else {
        2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn gamma_small_integers_and_half() {
        assert_relative_eq!(gamma(c64(1.0, 0.0)).unwrap().re, 1.0, max_relative = 1e-14);
        assert_relative_eq!(gamma(c64(5.0, 0.0)).unwrap().re, 24.0, max_relative = 1e-14);
        assert_relative_eq!(
            gamma(c64(0.5, 0.0)).unwrap().re,
            1.772_453_850_905_516,
            max_relative = 1e-14
        );
    }

    #[test]
    fn gamma_complex_spot() {
        // Gamma(2+3i), verified against 40-digit arithmetic
        let g = gamma(c64(2.0, 3.0)).unwrap();
        assert_relative_eq!(g.re, -0.082_395_272_665_611_88, max_relative = 1e-12);
        assert_relative_eq!(g.im, 0.091_774_287_435_259_31, max_relative = 1e-12);
    }

    #[test]
    fn gamma_pole_is_typed() {
        assert!(matches!(gamma(c64(0.0, 0.0)), Err(Error::Pole { .. })));
        assert!(matches!(gamma(c64(-3.0, 0.0)), Err(Error::Pole { .. })));
        assert!(matches!(gamma(c64(200.0, 0.0)), Err(Error::Overflow(_))));
    }

    #[test]
    fn rgamma_vanishes_at_poles() {
        assert_eq!(rgamma(c64(-2.0, 0.0)), c64(0.0, 0.0));
        assert_relative_eq!(rgamma(c64(3.0, 0.0)).re, 0.5, max_relative = 1e-14);
    }

    #[test]
    fn gamma_ratio_cancels_pole_pairs() {
        // lim Gamma(-5+e)/Gamma(-3+e) = (-1)^2 3!/5! = 1/20
        let r = gamma_ratio(&[c64(-5.0, 0.0)], &[c64(-3.0, 0.0)]).unwrap();
        assert_relative_eq!(r.re, 1.0 / 20.0, max_relative = 1e-12);
        // unpaired numerator pole
        assert!(gamma_ratio(&[c64(-1.0, 0.0)], &[c64(2.0, 0.0)]).is_err());
        // unpaired denominator pole -> 0
        let z = gamma_ratio(&[c64(2.0, 0.0)], &[c64(-1.0, 0.0)]).unwrap();
        assert_eq!(z, c64(0.0, 0.0));
    }

    #[test]
    fn pochhammer_examples() {
        assert_relative_eq!(
            pochhammer(c64(3.0, 0.0), 4).unwrap().re,
            360.0,
            max_relative = 1e-14
        );
        assert_eq!(pochhammer(c64(1.7, -0.3), 0).unwrap(), c64(1.0, 0.0));
        // (-3)_2 = (-3)(-2) = 6, Eq.-style (-n)_k = (-1)^k n!/(n-k)!
        assert_relative_eq!(
            pochhammer(c64(-3.0, 0.0), 2).unwrap().re,
            6.0,
            max_relative = 1e-14
        );
        // negative n: (a)_{-2} = 1/((a-2)(a-1))
        let v = pochhammer(c64(-3.0, 0.0), -2).unwrap();
        assert_relative_eq!(v.re, 1.0 / 20.0, max_relative = 1e-14);
    }

    #[test]
    fn binomial_examples() {
        assert_relative_eq!(binomial(c64(4.0, 0.0), 2).re, 6.0, max_relative = 1e-14);
        assert_eq!(binomial(c64(0.3, 1.1), 0), c64(1.0, 0.0));
        // (-1 choose 3) = (-1)^3 (1)_3 / 3! = -1
        assert_relative_eq!(binomial(c64(-1.0, 0.0), 3).re, -1.0, max_relative = 1e-14);
    }

    #[test]
    fn branch_pow_examples() {
        let v = branch_pow_sq(c64(2.0, 0.0), c64(1.0, 0.0)).unwrap();
        assert_relative_eq!(v.re, 3.0, max_relative = 1e-14);
        // z = i: (1+i)^(1/2) (-1+i)^(1/2) = sqrt(2) i exactly
        let v = branch_pow_sq(c64(0.0, 1.0), c64(0.5, 0.0)).unwrap();
        assert!(v.re.abs() < 1e-14);
        assert_relative_eq!(v.im, std::f64::consts::SQRT_2, max_relative = 1e-14);
        assert!(branch_pow_sq(c64(1.0, 0.0), c64(0.5, 0.0)).is_err());
    }

    #[test]
    fn branch_pow_schwarz_reflection() {
        // x in (-1,1): approaching from above vs below conjugate for real alpha
        let a = c64(0.5, 0.0);
        let up = branch_pow_sq(c64(0.3, 1e-9), a).unwrap();
        let dn = branch_pow_sq(c64(0.3, -1e-9), a).unwrap();
        assert_relative_eq!(up.re, dn.re, max_relative = 1e-6);
        assert_relative_eq!(up.im, -dn.im, max_relative = 1e-6);
    }

    #[test]
    fn neumann_values() {
        assert_eq!(neumann(0), 1);
        assert_eq!(neumann(1), 2);
        assert_eq!(neumann(7), 2);
    }

    proptest! {
        #[test]
        fn gamma_recurrence(re in -30.0f64..30.0, im in -30.0f64..30.0) {
            let z = c64(re, im);
            prop_assume!(nonpos_integer_distance(z) > 0.1 && nonpos_integer_distance(z + 1.0) > 0.1);
            prop_assume!(z.norm() > 0.2);
            let g1 = gamma(z + 1.0).unwrap();
            let g0 = gamma(z).unwrap();
            let diff = (g1 - z * g0).norm() / g1.norm().max(1e-300);
            prop_assert!(diff < 1e-12, "recurrence residual {diff:e} at {z}");
        }

        #[test]
        fn pochhammer_additivity(re in -5.0f64..5.0, im in -5.0f64..5.0,
                                 m in 0i64..12, n in 0i64..12) {
            let a = c64(re, im);
            let lhs = pochhammer(a, m + n).unwrap();
            let rhs = pochhammer(a, m).unwrap() * pochhammer(a + m as f64, n).unwrap();
            let scale = lhs.norm().max(rhs.norm()).max(1e-12);
            prop_assert!((lhs - rhs).norm() / scale < 1e-12);
        }

        #[test]
        fn branch_pow_conjugation(re in -3.0f64..3.0, im in 0.01f64..3.0, a in -2.0f64..2.0) {
            let z = c64(re, im);
            let alpha = c64(a, 0.0);
            let lhs = branch_pow_sq(z.conj(), alpha).unwrap();
            let rhs = branch_pow_sq(z, alpha).unwrap().conj();
            prop_assert!((lhs - rhs).norm() / rhs.norm().max(1e-300) < 1e-12);
        }
    }
}
