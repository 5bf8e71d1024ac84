//! Fundamental solutions of the Laplace-Beltrami operator on the six
//! rank-one symmetric spaces (complex, quaternionic, octonionic; hyperbolic
//! and projective), their Euclidean matching, radial-Laplacian residual
//! checks, and separated expansions via the addition module.

use crate::addition::{
    addition_specialized, Context, GeodesicArgs, SeriesReport, SpecializedVariant, TruncationSpec,
};
#[cfg(test)]
use crate::addition::composite_arg;
use crate::error::{Error, Result};
use crate::jacobi::jacobi_q_cut_integer;
use crate::numkernel::c64;

const PI: f64 = std::f64::consts::PI;

/// Base division algebra of the space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DivisionField {
    Complex,
    Quaternion,
    Octonion,
}

impl DivisionField {
    /// Real dimension of the algebra: d in {2, 4, 8}.
    pub fn real_dim(self) -> u32 {
        match self {
            DivisionField::Complex => 2,
            DivisionField::Quaternion => 4,
            DivisionField::Octonion => 8,
        }
    }
}

/// One of the rank-one symmetric spaces. `n = 2` is forced for the
/// octonionic plane; `radius` is the curvature radius R.
#[derive(Debug, Clone, Copy)]
pub struct SymmetricSpace {
    pub field: DivisionField,
    pub compact: bool,
    pub n: u32,
    pub radius: f64,
}

impl SymmetricSpace {
    pub fn new(field: DivisionField, compact: bool, n: u32, radius: f64) -> Result<Self> {
        if field == DivisionField::Octonion && n != 2 {
            return Err(Error::Restriction("the octonionic plane has n = 2".into()));
        }
        if n == 0 || radius <= 0.0 {
            return Err(Error::Restriction("need n >= 1 and radius > 0".into()));
        }
        Ok(SymmetricSpace {
            field,
            compact,
            n,
            radius,
        })
    }

    /// Real dimension d*n in {2n, 4n, 16}.
    pub fn real_dimension(&self) -> u32 {
        self.field.real_dim() * self.n
    }

    /// Jacobi parameter alpha = d n/2 - 1 in {n-1, 2n-1, 7}.
    pub fn alpha(&self) -> u32 {
        self.real_dimension() / 2 - 1
    }

    /// Jacobi parameter beta = d/2 - 1 in {0, 1, 3}.
    pub fn beta(&self) -> u32 {
        self.field.real_dim() / 2 - 1
    }

    /// The constant multiplying Q_0 (resp. sf-Q_0): (n-1)!/(2 pi^n R^{2n-2}),
    /// (2n)!/(2 pi^{2n} R^{4n-2}), 302400/(pi^8 R^14).
    pub fn constant(&self) -> f64 {
        let n = self.n as f64;
        let r = self.radius;
        match self.field {
            DivisionField::Complex => {
                factorial(self.n - 1) / (2.0 * PI.powf(n) * r.powf(2.0 * n - 2.0))
            }
            DivisionField::Quaternion => {
                factorial(2 * self.n) / (2.0 * PI.powf(2.0 * n) * r.powf(4.0 * n - 2.0))
            }
            DivisionField::Octonion => 302_400.0 / (PI.powi(8) * r.powi(14)),
        }
    }

    /// Short identifier like "CH^2" or "OP^2".
    pub fn label(&self) -> String {
        let f = match self.field {
            DivisionField::Complex => "C",
            DivisionField::Quaternion => "H",
            DivisionField::Octonion => "O",
        };
        let k = if self.compact { "P" } else { "H" };
        format!("{f}{k}^{}", self.n)
    }
}

fn factorial(n: u32) -> f64 {
    (1..=n as u64).map(|k| k as f64).product()
}

/// Fundamental solution at geodesic distance r (noncompact, r > 0) or
/// geodesic angle theta (compact, 0 < theta <= pi/2):
/// constant x Q_0^{(alpha,beta)}(cosh 2r), resp. x sf-Q_0(cos 2theta).
pub fn greens(space: &SymmetricSpace, geodesic: f64) -> Result<f64> {
    if geodesic <= 0.0 {
        return Err(Error::Domain(
            "fundamental solution is singular at geodesic 0".into(),
        ));
    }
    let (a, b) = (space.alpha(), space.beta());
    let value = if space.compact {
        if geodesic > PI / 2.0 {
            return Err(Error::Domain("compact geodesic angle exceeds pi/2".into()));
        }
        jacobi_q_cut_integer(0, a, b, c64((2.0 * geodesic).cos(), 0.0))?.value
    } else {
        let p = crate::jacobi::JacobiParams::real(a as f64, b as f64, 0.0);
        crate::jacobi::jacobi_q(&p, c64((2.0 * geodesic).cosh(), 0.0), crate::jacobi::Rep::Auto)?
            .value
    };
    Ok(space.constant() * value.re)
}

/// Euclidean fundamental solution of Laplace's equation in s dimensions.
pub fn euclidean_greens(s: u32, distance: f64) -> Result<f64> {
    if distance <= 0.0 {
        return Err(Error::Domain("distance must be positive".into()));
    }
    if s == 0 {
        return Err(Error::Domain("dimension must be >= 1".into()));
    }
    if s == 2 {
        return Ok((1.0 / distance).ln() / (2.0 * PI));
    }
    let sf = s as f64;
    let g = crate::numkernel::gamma(c64(sf / 2.0, 0.0))?.re;
    Ok(g / (2.0 * PI.powf(sf / 2.0) * (sf - 2.0)) * distance.powf(2.0 - sf))
}

/// Radial part of the Laplace-Beltrami operator applied to f at a point,
/// by a 5-point central stencil: f'' + ((dn-1) coth r + (d-1) tanh r) f'
/// (hyperbolic) or with cot/tan (compact), scaled by 1/R^2. Returns |Delta f|.
pub fn radial_laplacian_residual<F: Fn(f64) -> f64>(
    space: &SymmetricSpace,
    f: F,
    point: f64,
    h: f64,
) -> Result<f64> {
    if h >= point / 4.0 {
        return Err(Error::StepSize { h, point });
    }
    let fm2 = f(point - 2.0 * h);
    let fm1 = f(point - h);
    let f0 = f(point);
    let fp1 = f(point + h);
    let fp2 = f(point + 2.0 * h);
    let d1 = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
    let d2 = (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
    let dn = (space.field.real_dim() * space.n) as f64;
    let d = space.field.real_dim() as f64;
    // compact form: (dn-1) cot - (d-1) tan, from
    // d(n-1) cot(t) + 2(d-1) cot(2t) with 2 cot(2t) = cot(t) - tan(t)
    let coef = if space.compact {
        (dn - 1.0) / point.tan() - (d - 1.0) * point.tan()
    } else {
        (dn - 1.0) / point.tanh() + (d - 1.0) * point.tanh()
    };
    Ok(((d2 + coef * d1) / (space.radius * space.radius)).abs())
}

/// Flat-space matching: samples eps in {1e-3, 1e-4, 1e-5} and returns
/// (eps, G(geodesic(eps)) / Euclidean(rho(eps))); the ratios approach 1.
/// Here eps parameterizes cosh(2r) = 1 + 2 eps^2 / R^2-free form: the
/// geodesic is r = eps (noncompact) or theta = eps (compact), with
/// Euclidean distance rho = R * eps.
pub fn near_singularity_check(space: &SymmetricSpace) -> Result<Vec<(f64, f64)>> {
    let mut out = Vec::new();
    for eps in [1e-3, 1e-4, 1e-5] {
        let g = greens(space, eps)?;
        let rho = space.radius * eps;
        let e = euclidean_greens(space.real_dimension(), rho)?;
        out.push((eps, g / e));
    }
    Ok(out)
}

/// Separated expansion of the Green's function between two points whose
/// composite argument is cosh(2 r_geodesic) (resp. cos(2 theta)): the
/// gamma = 0 Olver expansion specialized to the space's (alpha, beta),
/// multiplied by the space constant.
pub fn greens_expansion(
    space: &SymmetricSpace,
    args: &GeodesicArgs,
    trunc: &TruncationSpec,
) -> Result<SeriesReport> {
    let variant = match space.beta() {
        0 => SpecializedVariant::Beta0,
        1 => SpecializedVariant::Beta1,
        3 => SpecializedVariant::Beta3,
        b => SpecializedVariant::Gamma0 { beta: b as f64 },
    };
    let context = if space.compact {
        Context::Trig
    } else {
        Context::Hyperbolic
    };
    let alpha = c64(space.alpha() as f64, 0.0);
    let series = addition_specialized(variant, context, alpha, args, trunc)?;
    let c = space.constant();
    Ok(SeriesReport {
        value: series.value * c,
        terms: series.terms.iter().map(|t| t * c).collect(),
        converged: series.converged,
        k_used: series.k_used,
    })
}

/// All six spaces at the given n and radius (octonionic fixed at n = 2).
pub fn all_spaces(n: u32, radius: f64) -> Vec<SymmetricSpace> {
    vec![
        SymmetricSpace::new(DivisionField::Complex, false, n, radius).unwrap(),
        SymmetricSpace::new(DivisionField::Quaternion, false, n, radius).unwrap(),
        SymmetricSpace::new(DivisionField::Octonion, false, 2, radius).unwrap(),
        SymmetricSpace::new(DivisionField::Complex, true, n, radius).unwrap(),
        SymmetricSpace::new(DivisionField::Quaternion, true, n, radius).unwrap(),
        SymmetricSpace::new(DivisionField::Octonion, true, 2, radius).unwrap(),
    ]
}
