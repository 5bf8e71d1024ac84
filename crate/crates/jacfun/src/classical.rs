//! Gegenbauer, associated Legendre, Ferrers and Chebyshev functions, plus
//! residual verifiers for every interrelation, Jacobi specialization and
//! quadratic transformation between them.
//!
//! The verifiers evaluate both sides of an identity at admissible random
//! samples and report the relative residual; phase factors are implemented
//! exactly as the identities state them and pinned by complex samples.

use crate::error::{Error, Result};
use crate::hypergeom::olver_2f1;
use crate::jacobi::{
    self, jacobi_p, jacobi_q, jacobi_q_cut, EvalResult, JacobiParams, Method, Rep,
};
use crate::numkernel::{c64, gamma_ratio, nearest_integer, rgamma, C64};
use rand::Rng;

const PI: f64 = std::f64::consts::PI;

fn cpi() -> C64 {
    C64::new(PI, 0.0)
}

fn sqrt_pi() -> C64 {
    C64::new(PI.sqrt(), 0.0)
}

fn two() -> C64 {
    C64::new(2.0, 0.0)
}

/// Function family selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    GegenbauerC,
    GegenbauerD,
    GegenbauerCCut,
    GegenbauerDCut,
    LegendreP,
    LegendreQ,
    FerrersP,
    FerrersQ,
    ChebyshevT,
    ChebyshevU,
    LegendrePoly,
}

/// A classical function identified by family, degree and order.
#[derive(Debug, Clone, Copy)]
pub struct ClassicalKind {
    pub family: Family,
    pub degree: C64,
    pub order: C64,
}

/// Dispatching evaluator for all classical families.
pub fn eval_classical(kind: &ClassicalKind, z: C64) -> Result<EvalResult> {
    let (lam, mu) = (kind.degree, kind.order);
    let value = match kind.family {
        Family::GegenbauerC => gegenbauer_c(lam, mu, z)?,
        Family::GegenbauerD => gegenbauer_d(lam, mu, z)?,
        Family::GegenbauerCCut => gegenbauer_c_cut(lam, mu, z)?,
        Family::GegenbauerDCut => gegenbauer_d_cut(lam, mu, z)?,
        Family::LegendreP => legendre_p(lam, mu, z)?,
        Family::LegendreQ => legendre_q(lam, mu, z)?,
        Family::FerrersP => ferrers_p(lam, mu, z)?,
        Family::FerrersQ => ferrers_q(lam, mu, z)?,
        Family::ChebyshevT => chebyshev_t(integer_degree(lam)?, z),
        Family::ChebyshevU => chebyshev_u(integer_degree(lam)?, z),
        Family::LegendrePoly => legendre_poly(integer_degree(lam)?, z),
    };
    Ok(EvalResult {
        value,
        abs_error_estimate: 1e-13 * value.norm(),
        method: Method::Rep1,
    })
}

fn integer_degree(lam: C64) -> Result<u32> {
    match nearest_integer(lam) {
        Some(n) if n >= 0 => Ok(n as u32),
        _ => Err(Error::Domain(format!(
            "polynomial family needs a nonnegative integer degree, got {lam}"
        ))),
    }
}

/// Gegenbauer function of the first kind C_lambda^mu(z).
pub fn gegenbauer_c(lam: C64, mu: C64, z: C64) -> Result<C64> {
    let pref =
        sqrt_pi() * gamma_ratio(&[lam + 2.0 * mu], &[mu, lam + 1.0])? / two().powc(2.0 * mu - 1.0);
    let f = olver_2f1(-lam, 2.0 * mu + lam, mu + 0.5, (1.0 - z) / 2.0)?;
    Ok(pref * f.value)
}

/// Gegenbauer function of the second kind D_lambda^mu(z): both
/// hypergeometric representations, routed by argument size.
pub fn gegenbauer_d(lam: C64, mu: C64, z: C64) -> Result<C64> {
    let arg1 = 1.0 / (z * z);
    let arg2 = 2.0 / (1.0 - z);
    if arg1.norm() <= arg2.norm() {
        gegenbauer_d_rep1(lam, mu, z)
    } else {
        gegenbauer_d_rep2(lam, mu, z)
    }
}

pub fn gegenbauer_d_rep1(lam: C64, mu: C64, z: C64) -> Result<C64> {
    let phase = (C64::new(0.0, PI) * mu).exp();
    let pref = phase * gamma_ratio(&[lam + 2.0 * mu], &[mu])? / (2.0 * z).powc(lam + 2.0 * mu);
    let f = olver_2f1(
        0.5 * lam + mu,
        0.5 * lam + mu + 0.5,
        lam + mu + 1.0,
        1.0 / (z * z),
    )?;
    Ok(pref * f.value)
}

pub fn gegenbauer_d_rep2(lam: C64, mu: C64, z: C64) -> Result<C64> {
    let phase = (C64::new(0.0, PI) * mu).exp();
    let pref = phase * two().powc(lam) * gamma_ratio(&[lam + mu + 0.5, lam + 2.0 * mu], &[mu])?
        / (sqrt_pi() * (z - 1.0).powc(lam + mu + 0.5) * (z + 1.0).powc(mu - 0.5));
    let f = olver_2f1(
        lam + 1.0,
        lam + mu + 0.5,
        2.0 * lam + 2.0 * mu + 1.0,
        2.0 / (1.0 - z),
    )?;
    Ok(pref * f.value)
}

/// Associated Legendre function of the first kind P_nu^mu(z).
pub fn legendre_p(nu: C64, mu: C64, z: C64) -> Result<C64> {
    let pref = ((z + 1.0) / (z - 1.0)).powc(0.5 * mu);
    let f = olver_2f1(-nu, nu + 1.0, 1.0 - mu, (1.0 - z) / 2.0)?;
    Ok(pref * f.value)
}

/// Associated Legendre function of the second kind Q_nu^mu(z) (DLMF
/// convention carrying e^{i pi mu}); two representations.
pub fn legendre_q(nu: C64, mu: C64, z: C64) -> Result<C64> {
    let arg1 = 1.0 / (z * z);
    let arg2 = 2.0 / (1.0 - z);
    if arg1.norm() <= arg2.norm() {
        legendre_q_rep1(nu, mu, z)
    } else {
        legendre_q_rep2(nu, mu, z)
    }
}

pub fn legendre_q_rep1(nu: C64, mu: C64, z: C64) -> Result<C64> {
    let phase = (C64::new(0.0, PI) * mu).exp();
    let pref = sqrt_pi() * phase * gamma_ratio(&[nu + mu + 1.0], &[])?
        * crate::numkernel::branch_pow_sq(z, 0.5 * mu)?
        / (two().powc(nu + 1.0) * z.powc(nu + mu + 1.0));
    let f = olver_2f1(
        0.5 * (nu + mu + 1.0),
        0.5 * (nu + mu + 2.0),
        nu + 1.5,
        1.0 / (z * z),
    )?;
    Ok(pref * f.value)
}

pub fn legendre_q_rep2(nu: C64, mu: C64, z: C64) -> Result<C64> {
    let phase = (C64::new(0.0, PI) * mu).exp();
    let pref = two().powc(nu) * phase * gamma_ratio(&[nu + 1.0, nu + mu + 1.0], &[])?
        * (z + 1.0).powc(0.5 * mu)
        / (z - 1.0).powc(0.5 * mu + nu + 1.0);
    let f = olver_2f1(nu + 1.0, nu + mu + 1.0, 2.0 * nu + 2.0, 2.0 / (1.0 - z))?;
    Ok(pref * f.value)
}

/// Ferrers function of the first kind sf-P_nu^mu(x) on the cut.
pub fn ferrers_p(nu: C64, mu: C64, x: C64) -> Result<C64> {
    let pref = ((1.0 + x) / (1.0 - x)).powc(0.5 * mu);
    let f = olver_2f1(-nu, nu + 1.0, 1.0 - mu, (1.0 - x) / 2.0)?;
    Ok(pref * f.value)
}

/// Ferrers function of the second kind sf-Q_nu^mu(x): double hypergeometric
/// representation for generic mu; integer order routes through the +-i0
/// defining average.
pub fn ferrers_q(nu: C64, mu: C64, x: C64) -> Result<C64> {
    if nearest_integer(mu).is_some() {
        return ferrers_q_average(nu, mu, x, 1e-9);
    }
    let front = cpi() / (2.0 * (cpi() * mu).sin());
    let t1 = (cpi() * mu).cos()
        * ((1.0 + x) / (1.0 - x)).powc(0.5 * mu)
        * olver_2f1(-nu, nu + 1.0, 1.0 - mu, (1.0 - x) / 2.0)?.value;
    let t2 = gamma_ratio(&[nu + mu + 1.0], &[nu - mu + 1.0])?
        * ((1.0 - x) / (1.0 + x)).powc(0.5 * mu)
        * olver_2f1(-nu, nu + 1.0, 1.0 + mu, (1.0 - x) / 2.0)?.value;
    Ok(front * (t1 - t2))
}

/// Defining average of the Ferrers second kind from Legendre Q at x +- i d.
pub fn ferrers_q_average(nu: C64, mu: C64, x: C64, delta: f64) -> Result<C64> {
    let up = legendre_q(nu, mu, x + c64(0.0, delta))?;
    let dn = legendre_q(nu, mu, x - c64(0.0, delta))?;
    let e = |t: C64| (C64::new(0.0, -PI) * t).exp();
    Ok(e(mu) / 2.0 * (e(0.5 * mu) * up + dn / e(0.5 * mu)))
}

/// Gegenbauer first kind on the cut: the same analytic continuation.
pub fn gegenbauer_c_cut(lam: C64, mu: C64, x: C64) -> Result<C64> {
    gegenbauer_c(lam, mu, x)
}

/// Gegenbauer second kind on the cut, via the direct double hypergeometric
/// representation (generic mu); near half-odd-integer mu falls back to the
/// +-i0 definition.
pub fn gegenbauer_d_cut(lam: C64, mu: C64, x: C64) -> Result<C64> {
    let cos_mu = (cpi() * mu).cos();
    if cos_mu.norm() < 0.1 {
        return gegenbauer_d_cut_definition(lam, mu, x, 1e-9);
    }
    let front = sqrt_pi() / (cos_mu * two().powc(mu - 0.5)) * rgamma(mu);
    let t1 = (cpi() * mu).sin() * gamma_ratio(&[lam + 2.0 * mu], &[lam + 1.0])?
        / (1.0 + x).powc(mu - 0.5)
        * olver_2f1(lam + mu + 0.5, 0.5 - lam - mu, 0.5 + mu, (1.0 - x) / 2.0)?.value;
    let t2 = olver_2f1(lam + mu + 0.5, 0.5 - lam - mu, 1.5 - mu, (1.0 - x) / 2.0)?.value
        / (1.0 - x).powc(mu - 0.5);
    Ok(front * (t1 - t2))
}

/// The +-i0 definition of the cut Gegenbauer second kind:
/// -i D(x + i d) + i e^{-2 pi i mu} D(x - i d).
pub fn gegenbauer_d_cut_definition(lam: C64, mu: C64, x: C64, delta: f64) -> Result<C64> {
    let up = gegenbauer_d(lam, mu, x + c64(0.0, delta))?;
    let dn = gegenbauer_d(lam, mu, x - c64(0.0, delta))?;
    let i = C64::new(0.0, 1.0);
    Ok(-i * up + i * (C64::new(0.0, -2.0 * PI) * mu).exp() * dn)
}

/// Chebyshev polynomial of the first kind, complex argument.
pub fn chebyshev_t(n: u32, z: C64) -> C64 {
    let mut t0 = C64::new(1.0, 0.0);
    let mut t1 = z;
    if n == 0 {
        return t0;
    }
    for _ in 1..n {
        let t2 = 2.0 * z * t1 - t0;
        t0 = t1;
        t1 = t2;
    }
    t1
}

/// Chebyshev polynomial of the second kind.
pub fn chebyshev_u(n: u32, z: C64) -> C64 {
    let mut u0 = C64::new(1.0, 0.0);
    let mut u1 = 2.0 * z;
    if n == 0 {
        return u0;
    }
    for _ in 1..n {
        let u2 = 2.0 * z * u1 - u0;
        u0 = u1;
        u1 = u2;
    }
    u1
}

/// Legendre polynomial P_n.
pub fn legendre_poly(n: u32, z: C64) -> C64 {
    let mut p0 = C64::new(1.0, 0.0);
    let mut p1 = z;
    if n == 0 {
        return p0;
    }
    for k in 1..n {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0) * z * p1 - kf * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// |C_n^mu(-z) - (-1)^n C_n^mu(z)| relative: the parity relation residual.
pub fn parity_check_gegenbauer(n: u32, mu: C64, z: C64) -> Result<f64> {
    let lhs = gegenbauer_c(c64(n as f64, 0.0), mu, -z)?;
    let rhs = gegenbauer_c(c64(n as f64, 0.0), mu, z)?;
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    Ok((lhs - sign * rhs).norm() / lhs.norm().max(rhs.norm()).max(1e-300))
}

/// |lim_{mu->0} ((n+mu)/mu) C_n^mu(x) - eps_n T_n(x)| via offsets
/// mu in {1e-4, 5e-5} and linear extrapolation.
pub fn chebyshev_limit(n: u32, x: C64) -> Result<f64> {
    let eval = |m: f64| -> Result<C64> {
        let mu = c64(m, 0.0);
        Ok((n as f64 + m) / m * gegenbauer_c(c64(n as f64, 0.0), mu, x)?)
    };
    let f1 = eval(1e-4)?;
    let f2 = eval(5e-5)?;
    let limit = 2.0 * f2 - f1;
    let target = crate::numkernel::neumann(n) as f64 * chebyshev_t(n, x);
    Ok((limit - target).norm() / target.norm().max(1e-300))
}

// --- identity verifiers ---

/// Interrelations among the classical families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InterrelationId {
    LegendrePFromGegenbauerC,
    LegendreQFromGegenbauerD,
    GegenbauerCFromLegendreP,
    GegenbauerDFromLegendreQ,
    GegenbauerDCutFromFerrersQ,
    FerrersQFromGegenbauerDCut,
    FerrersPFromGegenbauerCCut,
    GegenbauerCCutFromFerrersP,
    GegenbauerDCutDefinition,
    Bridge2f1LegendreP,
    Bridge2f1GegenbauerC,
    Bridge2f1LegendreQ,
    Bridge2f1GegenbauerD,
}

/// Specializations of Jacobi functions to the classical families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpecializationId {
    SymPGegenbauerC,
    SymPFerrers,
    SymPLegendre,
    AntisymPCutFerrers,
    AntisymPCutGegenbauer,
    AntisymPLegendre,
    AntisymPGegenbauer,
    SymQLegendreNeg,
    SymQLegendrePos,
    AntisymQLegendre,
    AntisymQLegendreSwapped,
    SymQGegenbauerD,
    AntisymQGegenbauerD,
    SymQCutFerrers,
    AntisymQCutFerrers,
    AntisymQCutFerrersSwapped,
    HalfPlanePhases,
}

/// Quadratic transformations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QuadraticId {
    PEven,
    POdd,
    QEven,
    QOdd,
    GegenbauerOddFromQ,
    GegenbauerEvenFromQ,
    QHalfFromGegenbauer,
    QMinusHalfFromGegenbauer,
    QHalfShift,
}

/// Generic three-slot sample: (degree-like, order-like, argument).
#[derive(Debug, Clone, Copy)]
pub struct IdentitySample {
    pub degree: C64,
    pub order: C64,
    pub argument: C64,
}

fn rel_residual(lhs: C64, rhs: C64) -> f64 {
    (lhs - rhs).norm() / lhs.norm().max(rhs.norm()).max(1e-300)
}

/// Relative residual of an interrelation at one sample.
pub fn verify_interrelation(id: InterrelationId, s: &IdentitySample) -> Result<f64> {
    use InterrelationId::*;
    let (nu, mu, z) = (s.degree, s.order, s.argument);
    let half = c64(0.5, 0.0);
    let bps = crate::numkernel::branch_pow_sq;
    match id {
        LegendrePFromGegenbauerC => {
            if nearest_integer(mu - 0.5).is_some() {
                return Err(Error::Restriction("mu in {1/2, 3/2, ...} excluded".into()));
            }
            let lhs = legendre_p(nu, mu, z)?;
            let rhs = gamma_ratio(&[half - mu, nu + mu + 1.0], &[nu - mu + 1.0])?
                / (two().powc(mu) * sqrt_pi() * bps(z, 0.5 * mu)?)
                * gegenbauer_c(nu + mu, half - mu, z)?;
            Ok(rel_residual(lhs, rhs))
        }
        LegendreQFromGegenbauerD => {
            let lhs = legendre_q(nu, mu, z)?;
            let rhs = (C64::new(0.0, 2.0 * PI) * (mu - 0.25)).exp()
                * sqrt_pi()
                * gamma_ratio(&[half - mu, nu + mu + 1.0], &[nu - mu + 1.0])?
                / (two().powc(mu) * bps(z, 0.5 * mu)?)
                * gegenbauer_d(nu + mu, half - mu, z)?;
            Ok(rel_residual(lhs, rhs))
        }
        GegenbauerCFromLegendreP => {
            let (lam, mu) = (nu, mu);
            let lhs = gegenbauer_c(lam, mu, z)?;
            let rhs = sqrt_pi() * gamma_ratio(&[lam + 2.0 * mu], &[mu, lam + 1.0])?
                / (two().powc(mu - 0.5) * bps(z, 0.5 * mu - 0.25)?)
                * legendre_p(lam + mu - 0.5, half - mu, z)?;
            Ok(rel_residual(lhs, rhs))
        }
        GegenbauerDFromLegendreQ => {
            let (lam, mu) = (nu, mu);
            let lhs = gegenbauer_d(lam, mu, z)?;
            let rhs = (C64::new(0.0, 2.0 * PI) * (mu - 0.25)).exp()
                * gamma_ratio(&[lam + 2.0 * mu], &[mu, lam + 1.0])?
                / (sqrt_pi() * two().powc(mu - 0.5) * bps(z, 0.5 * mu - 0.25)?)
                * legendre_q(lam + mu - 0.5, half - mu, z)?;
            Ok(rel_residual(lhs, rhs))
        }
        GegenbauerDCutFromFerrersQ => {
            let (lam, mu, x) = (nu, mu, z);
            let lhs = gegenbauer_d_cut(lam, mu, x)?;
            let rhs = gamma_ratio(&[lam + 2.0 * mu], &[mu, lam + 1.0])?
                / (two().powc(mu - 1.5) * sqrt_pi() * (1.0 - x * x).powc(0.5 * mu - 0.25))
                * ferrers_q(lam + mu - 0.5, half - mu, x)?;
            Ok(rel_residual(lhs, rhs))
        }
        FerrersQFromGegenbauerDCut => {
            if nearest_integer(mu - 0.5).is_some() {
                return Err(Error::Restriction("mu in {1/2, 3/2, ...} excluded".into()));
            }
            let x = z;
            let lhs = ferrers_q(nu, mu, x)?;
            let rhs = sqrt_pi() * gamma_ratio(&[half - mu, nu + mu + 1.0], &[nu - mu + 1.0])?
                / (two().powc(mu + 1.0) * (1.0 - x * x).powc(0.5 * mu))
                * gegenbauer_d_cut(nu + mu, half - mu, x)?;
            Ok(rel_residual(lhs, rhs))
        }
        FerrersPFromGegenbauerCCut => {
            if nearest_integer(mu - 0.5).is_some() {
                return Err(Error::Restriction("mu in {1/2, 3/2, ...} excluded".into()));
            }
            let x = z;
            let lhs = ferrers_p(nu, mu, x)?;
            let rhs = gamma_ratio(&[half - mu, nu + mu + 1.0], &[nu - mu + 1.0])?
                / (two().powc(mu) * sqrt_pi() * (1.0 - x * x).powc(0.5 * mu))
                * gegenbauer_c_cut(nu + mu, half - mu, x)?;
            Ok(rel_residual(lhs, rhs))
        }
        GegenbauerCCutFromFerrersP => {
            let (lam, mu, x) = (nu, mu, z);
            let lhs = gegenbauer_c_cut(lam, mu, x)?;
            let rhs = sqrt_pi() * gamma_ratio(&[lam + 2.0 * mu], &[mu, lam + 1.0])?
                / (two().powc(mu - 0.5) * (1.0 - x * x).powc(0.5 * mu - 0.25))
                * ferrers_p(lam + mu - 0.5, half - mu, x)?;
            Ok(rel_residual(lhs, rhs))
        }
        GegenbauerDCutDefinition => {
            let (lam, mu, x) = (nu, mu, z);
            let lhs = gegenbauer_d_cut(lam, mu, x)?;
            let rhs = gegenbauer_d_cut_definition(lam, mu, x, 1e-9)?;
            Ok(rel_residual(lhs, rhs))
        }
        Bridge2f1LegendreP => {
            let (a, cc, zz) = (s.degree, s.order, s.argument);
            let lhs = olver_2f1(a, a + half, cc, zz)?.value;
            let rhs = two().powc(cc - 1.0)
                * zz.powc(0.5 * (1.0 - cc))
                * (1.0 - zz).powc(0.5 * cc - a - 0.5)
                * legendre_p(2.0 * a - cc, 1.0 - cc, 1.0 / (1.0 - zz).sqrt())?;
            Ok(rel_residual(lhs, rhs))
        }
        Bridge2f1GegenbauerC => {
            let (a, cc, zz) = (s.degree, s.order, s.argument);
            let lhs = olver_2f1(a, a + half, cc, zz)?.value;
            let rhs = two().powc(2.0 * cc - 2.0)
                * gamma_ratio(&[cc - 0.5, 2.0 * (a - cc + 1.0)], &[2.0 * a])?
                / (sqrt_pi() * (1.0 - zz).powc(a))
                * gegenbauer_c(2.0 * a - 2.0 * cc + 1.0, cc - 0.5, 1.0 / (1.0 - zz).sqrt())?;
            Ok(rel_residual(lhs, rhs))
        }
        Bridge2f1LegendreQ => {
            let (a, cc, zz) = (s.degree, s.order, s.argument);
            let lhs = olver_2f1(a, a + half, cc, zz)?.value;
            let rhs = (C64::new(0.0, PI) * (cc - 2.0 * a - 0.5)).exp()
                * two().powc(cc - 0.5)
                * (1.0 - zz).powc(0.5 * cc - a - 0.25)
                * gamma_ratio(&[], &[2.0 * a])?
                / (sqrt_pi() * zz.powc(0.5 * cc - 0.25))
                * legendre_q(cc - 1.5, 2.0 * a - cc + 0.5, 1.0 / zz.sqrt())?;
            Ok(rel_residual(lhs, rhs))
        }
        Bridge2f1GegenbauerD => {
            let (a, cc, zz) = (s.degree, s.order, s.argument);
            let lhs = olver_2f1(a, a + half, cc, zz)?.value;
            let rhs = (C64::new(0.0, PI) * (2.0 * a - cc)).exp()
                * two().powc(2.0 * cc - 2.0 * a - 1.0)
                * gamma_ratio(&[cc - 2.0 * a], &[2.0 * cc - 2.0 * a - 1.0])?
                * (1.0 - zz).powc(cc - 2.0 * a - 0.5)
                / zz.powc(cc - a - 0.5)
                * gegenbauer_d(2.0 * a - 1.0, cc - 2.0 * a, 1.0 / zz.sqrt())?;
            Ok(rel_residual(lhs, rhs))
        }
    }
}

/// Relative residual of a Jacobi-specialization identity at one sample.
pub fn verify_jacobi_specialization(id: SpecializationId, s: &IdentitySample) -> Result<f64> {
    use SpecializationId::*;
    let (gamma_deg, alpha, z) = (s.degree, s.order, s.argument);
    let bps = crate::numkernel::branch_pow_sq;
    let half = c64(0.5, 0.0);
    let sym = JacobiParams::new(alpha, alpha, gamma_deg);
    let anti = JacobiParams::new(alpha, -alpha, gamma_deg);
    match id {
        SymPGegenbauerC => {
            let lhs = jacobi_p(&sym, z, Rep::Auto)?.value;
            let rhs = gamma_ratio(
                &[2.0 * alpha + 1.0, alpha + gamma_deg + 1.0],
                &[alpha + 1.0, 2.0 * alpha + gamma_deg + 1.0],
            )? * gegenbauer_c(gamma_deg, alpha + half, z)?;
            Ok(rel_residual(lhs, rhs))
        }
        SymPFerrers => {
            let x = z;
            let lhs = jacobi_p(&sym, x, Rep::Auto)?.value;
            let rhs = two().powc(alpha)
                * gamma_ratio(&[alpha + gamma_deg + 1.0], &[gamma_deg + 1.0])?
                / (1.0 - x * x).powc(0.5 * alpha)
                * ferrers_p(alpha + gamma_deg, -alpha, x)?;
            Ok(rel_residual(lhs, rhs))
        }
        SymPLegendre => {
            let lhs = jacobi_p(&sym, z, Rep::Auto)?.value;
            let rhs = two().powc(alpha)
                * gamma_ratio(&[alpha + gamma_deg + 1.0], &[gamma_deg + 1.0])?
                / bps(z, 0.5 * alpha)?
                * legendre_p(alpha + gamma_deg, -alpha, z)?;
            Ok(rel_residual(lhs, rhs))
        }
        AntisymPCutFerrers => {
            let x = z;
            let lhs = jacobi_p(&anti, x, Rep::Auto)?.value;
            let rhs = gamma_ratio(&[alpha + gamma_deg + 1.0], &[gamma_deg + 1.0])?
                * ((1.0 + x) / (1.0 - x)).powc(0.5 * alpha)
                * ferrers_p(gamma_deg, -alpha, x)?;
            Ok(rel_residual(lhs, rhs))
        }
        AntisymPCutGegenbauer => {
            let x = z;
            let lhs = jacobi_p(&anti, x, Rep::Auto)?.value;
            let rhs = gamma_ratio(
                &[2.0 * alpha + 1.0, gamma_deg - alpha + 1.0],
                &[gamma_deg + 1.0, alpha + 1.0],
            )? / two().powc(alpha)
                * (1.0 + x).powc(alpha)
                * gegenbauer_c_cut(gamma_deg - alpha, alpha + half, x)?;
            Ok(rel_residual(lhs, rhs))
        }
        AntisymPLegendre => {
            let lhs = jacobi_p(&anti, z, Rep::Auto)?.value;
            let rhs = gamma_ratio(&[alpha + gamma_deg + 1.0], &[gamma_deg + 1.0])?
                * ((z + 1.0) / (z - 1.0)).powc(0.5 * alpha)
                * legendre_p(gamma_deg, -alpha, z)?;
            Ok(rel_residual(lhs, rhs))
        }
        AntisymPGegenbauer => {
            let lhs = jacobi_p(&anti, z, Rep::Auto)?.value;
            let rhs = gamma_ratio(
                &[2.0 * alpha + 1.0, gamma_deg - alpha + 1.0],
                &[gamma_deg + 1.0, alpha + 1.0],
            )? / two().powc(alpha)
                * (z + 1.0).powc(alpha)
                * gegenbauer_c(gamma_deg - alpha, alpha + half, z)?;
            Ok(rel_residual(lhs, rhs))
        }
        SymQLegendreNeg => {
            let lhs = jacobi_q(&sym, z, Rep::Auto)?.value;
            let rhs = two().powc(alpha)
                * (C64::new(0.0, PI) * alpha).exp()
                * gamma_ratio(&[alpha + gamma_deg + 1.0], &[gamma_deg + 1.0])?
                / bps(z, 0.5 * alpha)?
                * legendre_q(alpha + gamma_deg, -alpha, z)?;
            Ok(rel_residual(lhs, rhs))
        }
        SymQLegendrePos => {
            let lhs = jacobi_q(&sym, z, Rep::Auto)?.value;
            let rhs = two().powc(alpha)
                * (C64::new(0.0, -PI) * alpha).exp()
                * gamma_ratio(&[alpha + gamma_deg + 1.0], &[2.0 * alpha + gamma_deg + 1.0])?
                / bps(z, 0.5 * alpha)?
                * legendre_q(alpha + gamma_deg, alpha, z)?;
            Ok(rel_residual(lhs, rhs))
        }
        AntisymQLegendre => {
            let lhs = jacobi_q(&anti, z, Rep::Auto)?.value;
            let rhs = (C64::new(0.0, -PI) * alpha).exp()
                * gamma_ratio(&[gamma_deg - alpha + 1.0], &[gamma_deg + 1.0])?
                * ((z + 1.0) / (z - 1.0)).powc(0.5 * alpha)
                * legendre_q(gamma_deg, alpha, z)?;
            Ok(rel_residual(lhs, rhs))
        }
        AntisymQLegendreSwapped => {
            let swapped = JacobiParams::new(-alpha, alpha, gamma_deg);
            let lhs = jacobi_q(&swapped, z, Rep::Auto)?.value;
            let rhs = (C64::new(0.0, -PI) * alpha).exp()
                * gamma_ratio(&[gamma_deg - alpha + 1.0], &[gamma_deg + 1.0])?
                * ((z - 1.0) / (z + 1.0)).powc(0.5 * alpha)
                * legendre_q(gamma_deg, alpha, z)?;
            Ok(rel_residual(lhs, rhs))
        }
        SymQGegenbauerD => {
            let lhs = jacobi_q(&sym, z, Rep::Auto)?.value;
            let rhs = (C64::new(0.0, -PI) * (alpha + 0.5)).exp()
                * sqrt_pi()
                * two().powc(2.0 * alpha)
                * gamma_ratio(
                    &[alpha + 0.5, alpha + gamma_deg + 1.0],
                    &[2.0 * alpha + gamma_deg + 1.0],
                )?
                * gegenbauer_d(gamma_deg, alpha + half, z)?;
            Ok(rel_residual(lhs, rhs))
        }
        AntisymQGegenbauerD => {
            let lhs = jacobi_q(&anti, z, Rep::Auto)?.value;
            let rhs = (C64::new(0.0, PI) * (alpha - 0.5)).exp()
                * two().powc(2.0 * gamma_deg - alpha + 1.0)
                * gamma_ratio(
                    &[alpha + gamma_deg + 1.0, half - alpha, gamma_deg + 1.5],
                    &[2.0 * gamma_deg + 2.0],
                )?
                / (z - 1.0).powc(alpha)
                * gegenbauer_d(alpha + gamma_deg, half - alpha, z)?;
            Ok(rel_residual(lhs, rhs))
        }
        SymQCutFerrers => {
            let x = z;
            let lhs = jacobi_q_cut(&sym, x)?.value;
            let rhs = two().powc(alpha)
                * gamma_ratio(&[alpha + gamma_deg + 1.0], &[gamma_deg + 1.0])?
                / (1.0 - x * x).powc(0.5 * alpha)
                * ferrers_q(gamma_deg + alpha, -alpha, x)?;
            Ok(rel_residual(lhs, rhs))
        }
        AntisymQCutFerrers => {
            let x = z;
            let lhs = jacobi_q_cut(&anti, x)?.value;
            let rhs = gamma_ratio(&[alpha + gamma_deg + 1.0], &[gamma_deg + 1.0])?
                * ((1.0 + x) / (1.0 - x)).powc(0.5 * alpha)
                * ferrers_q(gamma_deg, -alpha, x)?;
            Ok(rel_residual(lhs, rhs))
        }
        AntisymQCutFerrersSwapped => {
            let x = z;
            let swapped = JacobiParams::new(-alpha, alpha, gamma_deg);
            let lhs = jacobi_q_cut(&swapped, x)?.value;
            let rhs = gamma_ratio(&[gamma_deg - alpha + 1.0], &[gamma_deg + 1.0])?
                * ((1.0 - x) / (1.0 + x)).powc(0.5 * alpha)
                * ferrers_q(gamma_deg, alpha, x)?;
            Ok(rel_residual(lhs, rhs))
        }
        HalfPlanePhases => {
            // piecewise phase identity, with the principal power of z^2-1
            let lhs = jacobi_q(&sym, z, Rep::Auto)?.value;
            let shifted = JacobiParams::new(-alpha, -alpha, gamma_deg + 2.0 * alpha);
            let base = two().powc(2.0 * alpha) * (z * z - 1.0).powc(-alpha)
                * jacobi_q(&shifted, z, Rep::Auto)?.value;
            let phase = if z.re >= 0.0 {
                C64::new(1.0, 0.0)
            } else if z.im < 0.0 {
                (C64::new(0.0, 2.0 * PI) * alpha).exp()
            } else {
                (C64::new(0.0, -2.0 * PI) * alpha).exp()
            };
            Ok(rel_residual(lhs, base * phase))
        }
    }
}

/// Relative residual of a quadratic transformation at one sample.
pub fn verify_quadratic(id: QuadraticId, s: &IdentitySample) -> Result<f64> {
    use QuadraticId::*;
    let (gamma_deg, alpha, z) = (s.degree, s.order, s.argument);
    let half = c64(0.5, 0.0);
    match id {
        PEven => {
            let lhs =
                jacobi_p(&JacobiParams::new(alpha, alpha, 2.0 * gamma_deg), z, Rep::Auto)?.value;
            let rhs = sqrt_pi()
                * gamma_ratio(
                    &[alpha + 2.0 * gamma_deg + 1.0],
                    &[gamma_deg + 0.5, alpha + gamma_deg + 1.0],
                )?
                / two().powc(2.0 * gamma_deg)
                * jacobi_p(
                    &JacobiParams::new(alpha, -half, gamma_deg),
                    2.0 * z * z - 1.0,
                    Rep::Auto,
                )?
                .value;
            Ok(rel_residual(lhs, rhs))
        }
        POdd => {
            let lhs = jacobi_p(
                &JacobiParams::new(alpha, alpha, 2.0 * gamma_deg + 1.0),
                z,
                Rep::Auto,
            )?
            .value;
            let rhs = sqrt_pi()
                * gamma_ratio(
                    &[alpha + 2.0 * gamma_deg + 2.0],
                    &[gamma_deg + 1.5, alpha + gamma_deg + 1.0],
                )?
                * z
                / two().powc(2.0 * gamma_deg + 1.0)
                * jacobi_p(
                    &JacobiParams::new(alpha, half, gamma_deg),
                    2.0 * z * z - 1.0,
                    Rep::Auto,
                )?
                .value;
            Ok(rel_residual(lhs, rhs))
        }
        QEven => {
            let lhs =
                jacobi_q(&JacobiParams::new(alpha, alpha, 2.0 * gamma_deg), z, Rep::Auto)?.value;
            let rhs = sqrt_pi()
                * gamma_ratio(
                    &[alpha + 2.0 * gamma_deg + 1.0],
                    &[gamma_deg + 0.5, alpha + gamma_deg + 1.0],
                )?
                / two().powc(2.0 * gamma_deg)
                * jacobi_q(
                    &JacobiParams::new(alpha, -half, gamma_deg),
                    2.0 * z * z - 1.0,
                    Rep::Auto,
                )?
                .value;
            Ok(rel_residual(lhs, rhs))
        }
        QOdd => {
            let lhs = jacobi_q(
                &JacobiParams::new(alpha, alpha, 2.0 * gamma_deg + 1.0),
                z,
                Rep::Auto,
            )?
            .value;
            let rhs = sqrt_pi()
                * gamma_ratio(
                    &[alpha + 2.0 * gamma_deg + 2.0],
                    &[gamma_deg + 1.5, alpha + gamma_deg + 1.0],
                )?
                * z
                / two().powc(2.0 * gamma_deg + 1.0)
                * jacobi_q(
                    &JacobiParams::new(alpha, half, gamma_deg),
                    2.0 * z * z - 1.0,
                    Rep::Auto,
                )?
                .value;
            Ok(rel_residual(lhs, rhs))
        }
        GegenbauerOddFromQ => {
            // |z| < 1 sample; the order slot plays the Gegenbauer beta
            let beta = alpha;
            let lhs = gegenbauer_c(2.0 * gamma_deg + 1.0, beta, z)?;
            let arg = (1.0 + z * z) / (1.0 - z * z);
            let rhs = two().powc(2.0 * gamma_deg + 2.0)
                * gamma_ratio(
                    &[beta + gamma_deg + 0.5],
                    &[-gamma_deg - 0.5, 2.0 * gamma_deg + 2.0, beta],
                )?
                / (1.0 - z * z).powc(beta + gamma_deg + 0.5)
                * jacobi_q(
                    &JacobiParams::new(-half, beta + 2.0 * gamma_deg + 1.0, -gamma_deg - 1.0),
                    arg,
                    Rep::Auto,
                )?
                .value;
            Ok(rel_residual(lhs, rhs))
        }
        GegenbauerEvenFromQ => {
            let beta = alpha;
            let lhs = gegenbauer_c(2.0 * gamma_deg, beta, z)?;
            let arg = (1.0 + z * z) / (1.0 - z * z);
            let rhs = two().powc(2.0 * gamma_deg + 1.0)
                * gamma_ratio(
                    &[beta + gamma_deg + 0.5],
                    &[-gamma_deg + 0.5, 2.0 * gamma_deg + 1.0, beta],
                )?
                * z
                / (1.0 - z * z).powc(beta + gamma_deg + 0.5)
                * jacobi_q(
                    &JacobiParams::new(half, beta + 2.0 * gamma_deg, -gamma_deg - 1.0),
                    arg,
                    Rep::Auto,
                )?
                .value;
            Ok(rel_residual(lhs, rhs))
        }
        QHalfFromGegenbauer => {
            let beta = alpha;
            let lhs = jacobi_q(&JacobiParams::new(half, beta, gamma_deg), z, Rep::Auto)?.value;
            let rhs = two().powc(beta + 3.0 * gamma_deg + 2.5)
                * gamma_ratio(
                    &[
                        -2.0 * gamma_deg - 1.0,
                        gamma_deg + 1.5,
                        beta + 2.0 * gamma_deg + 2.0,
                    ],
                    &[beta + gamma_deg + 1.5],
                )?
                / ((z - 1.0).powc(half) * (z + 1.0).powc(beta + gamma_deg + 1.0))
                * gegenbauer_c(
                    -2.0 * gamma_deg - 2.0,
                    beta + 2.0 * gamma_deg + 2.0,
                    ((z - 1.0) / (z + 1.0)).sqrt(),
                )?;
            Ok(rel_residual(lhs, rhs))
        }
        QMinusHalfFromGegenbauer => {
            let beta = alpha;
            let lhs = jacobi_q(&JacobiParams::new(-half, beta, gamma_deg), z, Rep::Auto)?.value;
            let rhs = two().powc(beta + 3.0 * gamma_deg + 0.5)
                * gamma_ratio(
                    &[
                        -2.0 * gamma_deg,
                        gamma_deg + 0.5,
                        beta + 2.0 * gamma_deg + 1.0,
                    ],
                    &[beta + gamma_deg + 0.5],
                )?
                / (z + 1.0).powc(beta + gamma_deg + 0.5)
                * gegenbauer_c(
                    -2.0 * gamma_deg - 1.0,
                    beta + 2.0 * gamma_deg + 1.0,
                    ((z - 1.0) / (z + 1.0)).sqrt(),
                )?;
            Ok(rel_residual(lhs, rhs))
        }
        QHalfShift => {
            let beta = alpha;
            let lhs = jacobi_q(&JacobiParams::new(half, beta, gamma_deg), z, Rep::Auto)?.value;
            let rhs = gamma_ratio(
                &[gamma_deg + 1.5, beta + gamma_deg + 1.0],
                &[gamma_deg + 1.0, beta + gamma_deg + 1.5],
            )? * (2.0 / (z - 1.0)).powc(half)
                * jacobi_q(
                    &JacobiParams::new(-half, beta, gamma_deg + 0.5),
                    z,
                    Rep::Auto,
                )?
                .value;
            Ok(rel_residual(lhs, rhs))
        }
    }
}

// --- batch running over seeded admissible samples ---

/// Any identity the crate can verify in batch (classical verifiers plus the
/// Jacobi-module connection relations).
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(untagged)]
pub enum AnyIdentity {
    Interrelation(InterrelationId),
    Specialization(SpecializationId),
    Quadratic(QuadraticId),
    Connection(ConnectionId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConnectionId {
    Durconrel,
    WolfP,
    GegenbauerParity,
    ChebyshevLimitRelation,
}

impl AnyIdentity {
    pub fn name(&self) -> String {
        match self {
            AnyIdentity::Interrelation(id) => format!("{id:?}"),
            AnyIdentity::Specialization(id) => format!("{id:?}"),
            AnyIdentity::Quadratic(id) => format!("quadratic_{id:?}"),
            AnyIdentity::Connection(id) => format!("{id:?}"),
        }
        .to_lowercase()
    }

    /// Identity-specific pass tolerance: 1e-8, relaxed to 1e-5 for the
    /// limit-based checks (offset extrapolation or +-i0 averages).
    pub fn tolerance(&self) -> f64 {
        match self {
            AnyIdentity::Interrelation(InterrelationId::GegenbauerDCutDefinition) => 1e-5,
            AnyIdentity::Connection(ConnectionId::ChebyshevLimitRelation) => 1e-5,
            _ => 1e-8,
        }
    }
}

/// Everything `verify` can run, in a stable order.
pub fn all_identities() -> Vec<AnyIdentity> {
    use AnyIdentity::*;
    let mut v = Vec::new();
    for id in [
        InterrelationId::LegendrePFromGegenbauerC,
        InterrelationId::LegendreQFromGegenbauerD,
        InterrelationId::GegenbauerCFromLegendreP,
        InterrelationId::GegenbauerDFromLegendreQ,
        InterrelationId::GegenbauerDCutFromFerrersQ,
        InterrelationId::FerrersQFromGegenbauerDCut,
        InterrelationId::FerrersPFromGegenbauerCCut,
        InterrelationId::GegenbauerCCutFromFerrersP,
        InterrelationId::GegenbauerDCutDefinition,
        InterrelationId::Bridge2f1LegendreP,
        InterrelationId::Bridge2f1GegenbauerC,
        InterrelationId::Bridge2f1LegendreQ,
        InterrelationId::Bridge2f1GegenbauerD,
    ] {
        v.push(Interrelation(id));
    }
    for id in [
        SpecializationId::SymPGegenbauerC,
        SpecializationId::SymPFerrers,
        SpecializationId::SymPLegendre,
        SpecializationId::AntisymPCutFerrers,
        SpecializationId::AntisymPCutGegenbauer,
        SpecializationId::AntisymPLegendre,
        SpecializationId::AntisymPGegenbauer,
        SpecializationId::SymQLegendreNeg,
        SpecializationId::SymQLegendrePos,
        SpecializationId::AntisymQLegendre,
        SpecializationId::AntisymQLegendreSwapped,
        SpecializationId::SymQGegenbauerD,
        SpecializationId::AntisymQGegenbauerD,
        SpecializationId::SymQCutFerrers,
        SpecializationId::AntisymQCutFerrers,
        SpecializationId::AntisymQCutFerrersSwapped,
        SpecializationId::HalfPlanePhases,
    ] {
        v.push(Specialization(id));
    }
    for id in [
        QuadraticId::PEven,
        QuadraticId::POdd,
        QuadraticId::QEven,
        QuadraticId::QOdd,
        QuadraticId::GegenbauerOddFromQ,
        QuadraticId::GegenbauerEvenFromQ,
        QuadraticId::QHalfFromGegenbauer,
        QuadraticId::QMinusHalfFromGegenbauer,
        QuadraticId::QHalfShift,
    ] {
        v.push(Quadratic(id));
    }
    for id in [
        ConnectionId::Durconrel,
        ConnectionId::WolfP,
        ConnectionId::GegenbauerParity,
        ConnectionId::ChebyshevLimitRelation,
    ] {
        v.push(Connection(id));
    }
    v
}

pub fn find_identity(name: &str) -> Option<AnyIdentity> {
    all_identities().into_iter().find(|id| id.name() == name)
}

/// Batch verification report.
#[derive(Debug, Clone, serde::Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub samples: usize,
    pub max_rel_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Admissible sample for the given identity.
pub fn admissible_sample<R: Rng>(id: AnyIdentity, rng: &mut R) -> IdentitySample {
    let u = |rng: &mut R, lo: f64, hi: f64| rng.gen_range(lo..hi);
    // orders kept away from half-integers and quarter-resonances
    let order = loop {
        let m = u(rng, 0.05, 0.45);
        if (m - 0.25).abs() > 0.02 {
            break m;
        }
    };
    let degree = u(rng, 0.15, 1.9);
    let hyper_z = c64(u(rng, 1.15, 2.8), 0.0);
    let cut_x = c64(u(rng, -0.75, 0.75), 0.0);
    let small_z = c64(u(rng, 0.05, 0.45), 0.0);
    use AnyIdentity::*;
    match id {
        Interrelation(i) => {
            use InterrelationId::*;
            match i {
                Bridge2f1LegendreP | Bridge2f1GegenbauerC | Bridge2f1LegendreQ
                | Bridge2f1GegenbauerD => IdentitySample {
                    degree: c64(u(rng, 0.15, 0.7), 0.0), // a
                    order: c64(u(rng, 0.9, 1.6), 0.0),   // c
                    argument: small_z,
                },
                FerrersPFromGegenbauerCCut | GegenbauerCCutFromFerrersP
                | GegenbauerDCutFromFerrersQ | FerrersQFromGegenbauerDCut
                | GegenbauerDCutDefinition => IdentitySample {
                    degree: c64(degree, 0.0),
                    order: c64(order, 0.0),
                    argument: cut_x,
                },
                _ => IdentitySample {
                    degree: c64(degree, 0.0),
                    order: c64(order, 0.0),
                    argument: hyper_z,
                },
            }
        }
        Specialization(sid) => {
            use SpecializationId::*;
            let argument = match sid {
                AntisymPCutFerrers | AntisymPCutGegenbauer | SymQCutFerrers
                | AntisymQCutFerrers | AntisymQCutFerrersSwapped | SymPFerrers => cut_x,
                HalfPlanePhases => match rng.gen_range(0u8..3) {
                    0 => c64(u(rng, 1.2, 2.5), u(rng, 0.2, 0.8)),
                    1 => c64(u(rng, -2.5, -1.2), u(rng, -0.8, -0.2)),
                    _ => c64(u(rng, -2.5, -1.2), u(rng, 0.2, 0.8)),
                },
                _ => hyper_z,
            };
            IdentitySample {
                degree: c64(degree, 0.0),
                order: c64(order, 0.0),
                argument,
            }
        }
        Quadratic(q) => {
            use QuadraticId::*;
            let argument = match q {
                GegenbauerOddFromQ | GegenbauerEvenFromQ => c64(u(rng, 0.1, 0.7), 0.0),
                _ => hyper_z,
            };
            IdentitySample {
                degree: c64(u(rng, 0.1, 0.85), 0.0),
                order: c64(order + 0.3, 0.0),
                argument,
            }
        }
        Connection(c) => {
            use ConnectionId::*;
            match c {
                GegenbauerParity => IdentitySample {
                    degree: c64(rng.gen_range(0i32..6) as f64, 0.0),
                    order: c64(u(rng, 0.1, 1.4), 0.0),
                    argument: c64(u(rng, 0.1, 1.8), u(rng, -0.4, 0.4)),
                },
                ChebyshevLimitRelation => IdentitySample {
                    degree: c64(rng.gen_range(0i32..5) as f64, 0.0),
                    order: c64(0.0, 0.0),
                    argument: cut_x,
                },
                _ => IdentitySample {
                    degree: c64(degree, 0.0),
                    order: c64(order, 0.0),
                    argument: hyper_z,
                },
            }
        }
    }
}

/// Residual of any registered identity at one sample.
pub fn identity_residual(id: AnyIdentity, s: &IdentitySample) -> Result<f64> {
    match id {
        AnyIdentity::Interrelation(i) => verify_interrelation(i, s),
        AnyIdentity::Specialization(i) => verify_jacobi_specialization(i, s),
        AnyIdentity::Quadratic(i) => verify_quadratic(i, s),
        AnyIdentity::Connection(c) => match c {
            ConnectionId::Durconrel => {
                let p = JacobiParams::new(s.order, s.order * 0.7, s.degree);
                let r = jacobi::connection_p_from_q(&p, s.argument)?;
                let direct = jacobi_p(&p, s.argument, Rep::Auto)?;
                Ok(r.abs_error_estimate / direct.value.norm().max(1e-300))
            }
            ConnectionId::WolfP => {
                let p = JacobiParams::new(s.order, s.order * 0.7, s.degree);
                let from_rel = jacobi::connection_reflect(&p, s.argument)?;
                let reflected =
                    JacobiParams::new(p.alpha, p.beta, -p.gamma - p.alpha - p.beta - 1.0);
                let direct = jacobi_p(&reflected, s.argument, Rep::Auto)?;
                Ok(rel_residual(from_rel.value, direct.value))
            }
            ConnectionId::GegenbauerParity => {
                parity_check_gegenbauer(s.degree.re as u32, s.order, s.argument)
            }
            ConnectionId::ChebyshevLimitRelation => {
                chebyshev_limit(s.degree.re as u32, s.argument)
            }
        },
    }
}

/// Run an identity over `samples` seeded admissible samples.
pub fn run_identity_batch(id: AnyIdentity, samples: usize, seed: u64) -> Result<IdentityReport> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ stable_hash(&id.name()));
    let mut max_res = 0.0f64;
    for _ in 0..samples {
        let s = admissible_sample(id, &mut rng);
        let r = identity_residual(id, &s)?;
        max_res = max_res.max(r);
    }
    Ok(IdentityReport {
        identity: id.name(),
        samples,
        max_rel_residual: max_res,
        tolerance: id.tolerance(),
        pass: max_res <= id.tolerance(),
    })
}

fn stable_hash(s: &str) -> u64 {
    // FNV-1a, stable across runs and platforms
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn close(a: C64, b: C64, tol: f64) -> bool {
        (a - b).norm() <= tol * a.norm().max(b.norm()).max(1e-300)
    }

    #[test]
    fn polynomial_families() {
        assert!(close(legendre_poly(1, c64(0.37, 0.0)), c64(0.37, 0.0), 1e-15));
        // C_2^1(x) = 4x^2 - 1, zero at x = 1/2
        assert!(gegenbauer_c(c64(2.0, 0.0), c64(1.0, 0.0), c64(0.5, 0.0))
            .unwrap()
            .norm()
            < 1e-13);
        // ferrers_p with mu = 0, nu = 2 is the Legendre polynomial
        let v = ferrers_p(c64(2.0, 0.0), c64(0.0, 0.0), c64(0.5, 0.0)).unwrap();
        assert!(close(v, c64(-0.125, 0.0), 1e-13));
        assert!(close(chebyshev_t(3, c64(0.3, 0.0)), c64(4.0 * 0.027 - 0.9, 0.0), 1e-13));
        assert!(close(chebyshev_u(1, c64(0.4, 0.0)), c64(0.8, 0.0), 1e-14));
    }

    #[test]
    fn triple_agreement_legendre() {
        // P_n(x) = C_n^{1/2}(x) = P_n^{(0,0)}(x) for n <= 12
        for n in 0..=12u32 {
            let x = c64(0.321, 0.0);
            let a = legendre_poly(n, x);
            let b = gegenbauer_c(c64(n as f64, 0.0), c64(0.5, 0.0), x).unwrap();
            let p = JacobiParams::real(0.0, 0.0, n as f64);
            let c = jacobi_p(&p, x, Rep::Auto).unwrap().value;
            // |P_n| <= 1 on the segment: absolute agreement at 1e-11
            assert!((a - b).norm() <= 1e-11, "n={n}: {a} vs {b}");
            assert!((a - c).norm() <= 1e-11, "n={n}: {a} vs {c}");
        }
    }

    #[test]
    fn d_representations_agree() {
        let (lam, mu) = (c64(0.7, 0.0), c64(0.3, 0.0));
        for z in [c64(1.7, 0.0), c64(2.4, 0.3)] {
            let a = gegenbauer_d_rep1(lam, mu, z).unwrap();
            let b = gegenbauer_d_rep2(lam, mu, z).unwrap();
            assert!(close(a, b, 1e-9), "at {z}: {a} vs {b}");
        }
    }

    #[test]
    fn legendre_q_representations_agree() {
        let (nu, mu) = (c64(0.7, 0.0), c64(0.3, 0.0));
        for z in [c64(1.7, 0.0), c64(2.4, 0.3)] {
            let a = legendre_q_rep1(nu, mu, z).unwrap();
            let b = legendre_q_rep2(nu, mu, z).unwrap();
            assert!(close(a, b, 1e-9), "at {z}: {a} vs {b}");
        }
    }

    #[test]
    fn cut_c_equals_boundary_value() {
        let (lam, mu) = (c64(0.9, 0.0), c64(0.3, 0.0));
        let x = c64(0.4, 0.0);
        let cut = gegenbauer_c_cut(lam, mu, x).unwrap();
        let above = gegenbauer_c(lam, mu, x + c64(0.0, 1e-9)).unwrap();
        assert!(close(cut, above, 1e-7));
    }

    #[test]
    fn parity_examples() {
        assert!(parity_check_gegenbauer(2, c64(0.8, 0.0), c64(0.6, 0.0)).unwrap() < 1e-13);
        assert!(parity_check_gegenbauer(3, c64(0.8, 0.0), c64(0.6, 0.0)).unwrap() < 1e-13);
        assert!(parity_check_gegenbauer(4, c64(1.3, 0.0), c64(0.2, 0.4)).unwrap() < 1e-12);
    }

    #[test]
    fn chebyshev_limit_examples() {
        assert!(chebyshev_limit(0, c64(0.3, 0.0)).unwrap() < 1e-5);
        assert!(chebyshev_limit(1, c64(0.3, 0.0)).unwrap() < 1e-5);
        assert!(chebyshev_limit(3, c64(0.3, 0.0)).unwrap() < 1e-5);
    }

    #[test]
    fn ferrers_q_integer_order_route() {
        // integer order uses the averaging definition; sf-Q_0^0(x) = atanh(x)
        let v = ferrers_q(c64(0.0, 0.0), c64(0.0, 0.0), c64(0.4, 0.0)).unwrap();
        assert_relative_eq!(v.re, 0.4f64.atanh(), max_relative = 1e-6);
    }

    #[test]
    fn spot_identity_residuals() {
        let s = IdentitySample {
            degree: c64(0.7, 0.0),
            order: c64(0.3, 0.0),
            argument: c64(2.0, 0.0),
        };
        for id in [
            InterrelationId::LegendrePFromGegenbauerC,
            InterrelationId::LegendreQFromGegenbauerD,
            InterrelationId::GegenbauerCFromLegendreP,
            InterrelationId::GegenbauerDFromLegendreQ,
        ] {
            let r = verify_interrelation(id, &s).unwrap();
            assert!(r < 1e-9, "{id:?} residual {r}");
        }
        let sx = IdentitySample {
            degree: c64(0.9, 0.0),
            order: c64(0.3, 0.0),
            argument: c64(0.4, 0.0),
        };
        for id in [
            InterrelationId::GegenbauerDCutFromFerrersQ,
            InterrelationId::FerrersQFromGegenbauerDCut,
            InterrelationId::FerrersPFromGegenbauerCCut,
            InterrelationId::GegenbauerCCutFromFerrersP,
        ] {
            let r = verify_interrelation(id, &sx).unwrap();
            assert!(r < 1e-9, "{id:?} residual {r}");
        }
        let sb = IdentitySample {
            degree: c64(0.35, 0.0),
            order: c64(1.4, 0.0),
            argument: c64(0.3, 0.0),
        };
        for id in [
            InterrelationId::Bridge2f1LegendreP,
            InterrelationId::Bridge2f1GegenbauerC,
            InterrelationId::Bridge2f1LegendreQ,
            InterrelationId::Bridge2f1GegenbauerD,
        ] {
            let r = verify_interrelation(id, &sb).unwrap();
            assert!(r < 1e-9, "{id:?} residual {r}");
        }
    }

    #[test]
    fn spot_specializations() {
        let s = IdentitySample {
            degree: c64(1.3, 0.0),
            order: c64(0.4, 0.0),
            argument: c64(1.7, 0.0),
        };
        use SpecializationId::*;
        for id in [
            SymPGegenbauerC,
            SymPLegendre,
            AntisymPLegendre,
            AntisymPGegenbauer,
            SymQLegendreNeg,
            SymQLegendrePos,
            AntisymQLegendre,
            AntisymQLegendreSwapped,
            SymQGegenbauerD,
            AntisymQGegenbauerD,
        ] {
            let r = verify_jacobi_specialization(id, &s).unwrap();
            assert!(r < 1e-9, "{id:?} residual {r}");
        }
        let sx = IdentitySample {
            degree: c64(1.3, 0.0),
            order: c64(0.4, 0.0),
            argument: c64(0.4, 0.0),
        };
        for id in [
            SymPFerrers,
            AntisymPCutFerrers,
            AntisymPCutGegenbauer,
            SymQCutFerrers,
            AntisymQCutFerrers,
            AntisymQCutFerrersSwapped,
        ] {
            let r = verify_jacobi_specialization(id, &sx).unwrap();
            assert!(r < 1e-9, "{id:?} residual {r}");
        }
        // piecewise phases across the three regions
        for arg in [c64(1.5, 0.8), c64(-1.5, -0.8), c64(-1.5, 0.8)] {
            let sp = IdentitySample {
                degree: c64(1.3, 0.0),
                order: c64(0.4, 0.0),
                argument: arg,
            };
            let r = verify_jacobi_specialization(HalfPlanePhases, &sp).unwrap();
            assert!(r < 1e-9, "at {arg}: residual {r}");
        }
    }

    #[test]
    fn spot_quadratics() {
        use QuadraticId::*;
        let s = IdentitySample {
            degree: c64(0.4, 0.0),
            order: c64(0.6, 0.0),
            argument: c64(1.5, 0.0),
        };
        for id in [
            PEven,
            POdd,
            QEven,
            QOdd,
            QHalfShift,
            QHalfFromGegenbauer,
            QMinusHalfFromGegenbauer,
        ] {
            let r = verify_quadratic(id, &s).unwrap();
            assert!(r < 1e-8, "{id:?} residual {r}");
        }
        let sz = IdentitySample {
            degree: c64(0.4, 0.0),
            order: c64(0.8, 0.0),
            argument: c64(0.35, 0.0),
        };
        for id in [GegenbauerOddFromQ, GegenbauerEvenFromQ] {
            let r = verify_quadratic(id, &sz).unwrap();
            assert!(r < 1e-8, "{id:?} residual {r}");
        }
        // polynomial case: gamma = 1/2 makes the even transform terminating
        let sp = IdentitySample {
            degree: c64(0.5, 0.0),
            order: c64(0.6, 0.0),
            argument: c64(1.5, 0.0),
        };
        let r = verify_quadratic(POdd, &sp).unwrap();
        assert!(r < 1e-12, "polynomial residual {r}");
    }

    #[test]
    fn excluded_mu_errors() {
        let s = IdentitySample {
            degree: c64(0.7, 0.0),
            order: c64(0.5, 0.0),
            argument: c64(2.0, 0.0),
        };
        assert!(matches!(
            verify_interrelation(InterrelationId::LegendrePFromGegenbauerC, &s),
            Err(Error::Restriction(_))
        ));
    }

    #[test]
    fn batch_runner_is_deterministic() {
        let id = AnyIdentity::Quadratic(QuadraticId::QEven);
        let a = run_identity_batch(id, 10, 7).unwrap();
        let b = run_identity_batch(id, 10, 7).unwrap();
        assert_eq!(a.max_rel_residual, b.max_rel_residual);
        assert!(a.pass, "residual {}", a.max_rel_residual);
    }
}
