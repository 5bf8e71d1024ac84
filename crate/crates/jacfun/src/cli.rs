//! Command-line interface: evaluation, identity verification, addition-theorem
//! expansion, biangle orthogonality, and Green's-function tables, with JSON or
//! CSV output on stdout and diagnostics on stderr.
//!
//! Complex scalars parse as "re" or "re,im". Exit codes: 0 success, 2 parse
//! error, 1 domain/convergence error (the taxonomy name goes to stderr).

use crate::addition::{
    addition_series, biangle_orthogonality, composite_arg, Context, GeodesicArgs, Kind,
    Normalization, SeriesOptions, Sign, SignVariant, SumOrder, TruncationSpec,
};
use crate::classical::{self, ClassicalKind, Family};
use crate::error::{Error, Result};
use crate::hypergeom::{self, Precision};
use crate::jacobi::{self, EvalResult, JacobiParams, Rep};
use crate::numkernel::{c64, C64};
use crate::symmspace::{self, DivisionField, SymmetricSpace};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// A parsed CLI request.
#[derive(Debug, Parser)]
#[command(
    name = "jacfun",
    about = "Jacobi functions of the first and second kind, their addition theorems, \
             and fundamental solutions on rank-one symmetric spaces",
    version
)]
pub struct Request {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Series accumulation precision (dd = compensated double-double).
    #[arg(long, global = true, value_enum, default_value_t = PrecisionArg::Double)]
    pub precision: PrecisionArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PrecisionArg {
    Double,
    Dd,
}

impl From<PrecisionArg> for Precision {
    fn from(p: PrecisionArg) -> Self {
        match p {
            PrecisionArg::Double => Precision::Double,
            PrecisionArg::Dd => Precision::DoubleDouble,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a function at a point.
    Eval(EvalArgs),
    /// Run an identity verifier over seeded random admissible samples.
    Verify(VerifyArgs),
    /// Evaluate a truncated addition-theorem series and compare with the
    /// direct evaluation at the composite argument.
    Addition(AdditionArgs),
    /// Biangle orthogonality: quadrature vs closed form.
    Orthogonality(OrthogonalityArgs),
    /// Fundamental solution on a rank-one symmetric space: a table of
    /// (geodesic, value) rows.
    Greens(GreensArgs),
    /// Tabulate a function over a grid in its argument.
    Table(TableArgs),
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Function name: jacobi_p, jacobi_q, jacobi_p_cut, jacobi_q_cut,
    /// jacobi_q_cut_special, jacobi_p_olver, jacobi_q_olver, gegenbauer_c,
    /// gegenbauer_d, gegenbauer_c_cut, gegenbauer_d_cut, legendre_p,
    /// legendre_q, ferrers_p, ferrers_q, chebyshev_t, chebyshev_u,
    /// legendre_poly, hyp_2f1, olver_2f1.
    pub function: String,
    /// Jacobi alpha; order mu for classical families; a for 2F1.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// Jacobi beta; b for 2F1.
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    /// Jacobi degree gamma; degree nu/lambda/n for classical families; c for 2F1.
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<String>,
    /// Argument for hyperbolic-context functions.
    #[arg(long, allow_hyphen_values = true)]
    pub z: Option<String>,
    /// Argument for on-the-cut functions.
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
    /// Representation 1-4 (default auto).
    #[arg(long)]
    pub rep: Option<u8>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity name (see `verify list`), or "all", or "list".
    pub identity: String,
    /// Number of seeded random admissible samples per identity.
    #[arg(long, default_value_t = 50)]
    pub samples: usize,
    /// RNG seed; runs are bit-identical for a fixed seed.
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct AdditionArgs {
    #[arg(long, value_enum)]
    pub kind: KindArg,
    #[arg(long, value_enum)]
    pub context: ContextArg,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: String,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: String,
    /// First point (z1 in the hyperbolic context, x1 on the cut).
    #[arg(long, allow_hyphen_values = true, alias = "x1")]
    pub z1: String,
    /// Second point.
    #[arg(long, allow_hyphen_values = true, alias = "x2")]
    pub z2: String,
    #[arg(long, allow_hyphen_values = true)]
    pub w: String,
    /// Angle in radians.
    #[arg(long, allow_hyphen_values = true)]
    pub phi: f64,
    /// Composite-argument branch.
    #[arg(long, value_enum, default_value_t = SignArg::Plus)]
    pub sign: SignArg,
    #[arg(long, default_value_t = 40)]
    pub kmax: u32,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = NormalizationArg::Standard)]
    pub normalization: NormalizationArg,
    #[arg(long, value_enum, default_value_t = OrderArg::Standard)]
    pub order: OrderArg,
    /// Inner sign variant override (defaults to the printed one).
    #[arg(long, value_enum)]
    pub sign_variant: Option<SignVariantArg>,
    /// Permit |Im| > 0.1 on the variables for second-kind expansions.
    #[arg(long, default_value_t = false)]
    pub complex_override: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KindArg {
    P,
    Q,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ContextArg {
    Hyperbolic,
    Trig,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SignArg {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum NormalizationArg {
    Standard,
    Olver,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OrderArg {
    Standard,
    Reversed,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SignVariantArg {
    MinusTopKml,
    PlusTopKpl,
    PlusTopKml,
}

#[derive(Debug, Args)]
pub struct OrthogonalityArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub l: u32,
    #[arg(long)]
    pub k2: u32,
    #[arg(long)]
    pub l2: u32,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: f64,
    #[arg(long, default_value_t = 96)]
    pub nquad: usize,
}

#[derive(Debug, Args)]
pub struct GreensArgs {
    /// Space: ch, hh, oh (hyperbolic), cp, hp, op (projective).
    #[arg(long)]
    pub space: String,
    #[arg(long, default_value_t = 2)]
    pub n: u32,
    #[arg(long, default_value_t = 1.0)]
    pub radius: f64,
    /// Comma-separated geodesic distances (radii r or angles theta).
    #[arg(long)]
    pub geodesics: Option<String>,
    #[arg(long)]
    pub from: Option<f64>,
    #[arg(long)]
    pub to: Option<f64>,
    #[arg(long, default_value_t = 10)]
    pub steps: usize,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Function name (same set as eval).
    pub function: String,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub from: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub to: f64,
    #[arg(long, default_value_t = 10)]
    pub steps: usize,
}

// --- output shapes ---

#[derive(Serialize)]
struct ComplexOut {
    re: f64,
    im: f64,
}

impl From<C64> for ComplexOut {
    fn from(z: C64) -> Self {
        ComplexOut { re: z.re, im: z.im }
    }
}

#[derive(Serialize)]
struct EvalOut {
    schema: u32,
    command: &'static str,
    function: String,
    value: ComplexOut,
    abs_error_estimate: f64,
    terms_used: Option<usize>,
    method: String,
}

#[derive(Serialize)]
struct AdditionOut {
    schema: u32,
    command: &'static str,
    value: ComplexOut,
    converged: bool,
    k_used: u32,
    block_magnitudes: Vec<f64>,
    composite_argument: ComplexOut,
    direct_value: Option<ComplexOut>,
    rel_deviation_from_direct: Option<f64>,
}

#[derive(Serialize)]
struct VerifyOut {
    schema: u32,
    command: &'static str,
    reports: Vec<classical::IdentityReport>,
    all_pass: bool,
}

#[derive(Serialize)]
struct OrthogonalityOut {
    schema: u32,
    command: &'static str,
    integral: ComplexOut,
    closed_form: ComplexOut,
    abs_difference: f64,
}

#[derive(Serialize)]
struct GreensOut {
    schema: u32,
    command: &'static str,
    space: String,
    alpha: u32,
    beta: u32,
    constant: f64,
    rows: Vec<(f64, f64)>,
}

#[derive(Serialize)]
struct TableOut {
    schema: u32,
    command: &'static str,
    function: String,
    rows: Vec<TableRow>,
}

#[derive(Serialize)]
struct TableRow {
    argument: f64,
    value: ComplexOut,
}

// --- logging ---

fn log_level() -> u8 {
    match std::env::var("JACOBI_LOG_LEVEL").as_deref() {
        Ok("debug") => 3,
        Ok("info") => 2,
        Ok("warn") => 1,
        _ => 0,
    }
}

macro_rules! diag {
    ($lvl:expr, $min:expr, $($arg:tt)*) => {
        if $lvl >= $min {
            eprintln!($($arg)*);
        }
    };
}

/// Entry point used by the binary; returns the process exit code.
pub fn main() -> i32 {
    let request = Request::parse();
    match run(&request) {
        Ok(output) => {
            println!("{output}");
            0
        }
        Err(e) => {
            eprintln!("error[{}]: {e}", e.taxonomy());
            1
        }
    }
}

/// Execute a request, returning the serialized output.
pub fn run(request: &Request) -> Result<String> {
    let lvl = log_level();
    let prec: Precision = request.precision.into();
    let out = match &request.command {
        Command::Eval(args) => {
            diag!(lvl, 2, "evaluating {}", args.function);
            let r = eval_function(args, prec)?;
            render(
                request.format,
                &EvalOut {
                    schema: 1,
                    command: "eval",
                    function: args.function.clone(),
                    value: r.0.value.into(),
                    abs_error_estimate: r.0.abs_error_estimate,
                    terms_used: r.1,
                    method: format!("{:?}", r.0.method).to_lowercase(),
                },
                |o| {
                    vec![
                        ("function".into(), o.function.clone()),
                        ("value_re".into(), fmt_f64(o.value.re)),
                        ("value_im".into(), fmt_f64(o.value.im)),
                        ("abs_error_estimate".into(), fmt_f64(o.abs_error_estimate)),
                        ("method".into(), o.method.clone()),
                    ]
                },
            )
        }
        Command::Verify(args) => {
            if args.identity == "list" {
                let names: Vec<String> =
                    classical::all_identities().iter().map(|i| i.name()).collect();
                return Ok(names.join("\n"));
            }
            let ids = if args.identity == "all" {
                classical::all_identities()
            } else {
                vec![classical::find_identity(&args.identity).ok_or_else(|| {
                    Error::Domain(format!(
                        "unknown identity '{}'; try `verify list`",
                        args.identity
                    ))
                })?]
            };
            let mut reports = Vec::new();
            for id in ids {
                diag!(lvl, 2, "verifying {}", id.name());
                reports.push(classical::run_identity_batch(id, args.samples, args.seed)?);
            }
            let all_pass = reports.iter().all(|r| r.pass);
            render(
                request.format,
                &VerifyOut {
                    schema: 1,
                    command: "verify",
                    reports,
                    all_pass,
                },
                |o| {
                    o.reports
                        .iter()
                        .flat_map(|r| {
                            vec![
                                ("identity".into(), r.identity.clone()),
                                ("samples".into(), r.samples.to_string()),
                                ("max_rel_residual".into(), fmt_f64(r.max_rel_residual)),
                                ("pass".into(), r.pass.to_string()),
                            ]
                        })
                        .collect()
                },
            )
        }
        Command::Addition(args) => {
            let params = JacobiParams::new(
                parse_complex(&args.alpha)?,
                parse_complex(&args.beta)?,
                parse_complex(&args.gamma)?,
            );
            let context = match args.context {
                ContextArg::Hyperbolic => Context::Hyperbolic,
                ContextArg::Trig => Context::Trig,
            };
            let geo = GeodesicArgs {
                p1: parse_complex(&args.z1)?,
                p2: parse_complex(&args.z2)?,
                w: parse_complex(&args.w)?,
                phi: args.phi,
                sign: match args.sign {
                    SignArg::Plus => Sign::Plus,
                    SignArg::Minus => Sign::Minus,
                },
                complex_override: args.complex_override,
            };
            let opts = SeriesOptions {
                kind: match args.kind {
                    KindArg::P => Kind::P,
                    KindArg::Q => Kind::Q,
                },
                context,
                normalization: match args.normalization {
                    NormalizationArg::Standard => Normalization::Standard,
                    NormalizationArg::Olver => Normalization::Olver,
                },
                order: match args.order {
                    OrderArg::Standard => SumOrder::Standard,
                    OrderArg::Reversed => SumOrder::Reversed,
                },
                sign_variant: args.sign_variant.map(|v| match v {
                    SignVariantArg::MinusTopKml => SignVariant::MinusTopKml,
                    SignVariantArg::PlusTopKpl => SignVariant::PlusTopKpl,
                    SignVariantArg::PlusTopKml => SignVariant::PlusTopKml,
                }),
            };
            let trunc = TruncationSpec {
                k_max: args.kmax,
                tol: args.tol,
                ..TruncationSpec::default()
            };
            let report = addition_series(&opts, &params, &geo, &trunc)?;
            let composite = composite_arg(&geo, context)?;
            // direct comparison only for the standard normalization
            let direct = match (opts.kind, opts.normalization) {
                (Kind::P, Normalization::Standard) => match context {
                    Context::Hyperbolic => {
                        jacobi::jacobi_p(&params, composite, Rep::Auto).ok().map(|r| r.value)
                    }
                    Context::Trig => jacobi::jacobi_p_cut(&params, composite).ok().map(|r| r.value),
                },
                (Kind::Q, Normalization::Standard) => match context {
                    Context::Hyperbolic => {
                        jacobi::jacobi_q(&params, composite, Rep::Auto).ok().map(|r| r.value)
                    }
                    Context::Trig => jacobi::jacobi_q_cut(&params, composite).ok().map(|r| r.value),
                },
                _ => None,
            };
            let rel = direct.map(|d| (report.value - d).norm() / d.norm().max(1e-300));
            render(
                request.format,
                &AdditionOut {
                    schema: 1,
                    command: "addition",
                    value: report.value.into(),
                    converged: report.converged,
                    k_used: report.k_used,
                    block_magnitudes: report.terms.iter().map(|t| t.norm()).collect(),
                    composite_argument: composite.into(),
                    direct_value: direct.map(Into::into),
                    rel_deviation_from_direct: rel,
                },
                |o| {
                    vec![
                        ("value_re".into(), fmt_f64(o.value.re)),
                        ("value_im".into(), fmt_f64(o.value.im)),
                        ("converged".into(), o.converged.to_string()),
                        ("k_used".into(), o.k_used.to_string()),
                        (
                            "rel_deviation_from_direct".into(),
                            o.rel_deviation_from_direct.map(fmt_f64).unwrap_or_default(),
                        ),
                    ]
                },
            )
        }
        Command::Orthogonality(args) => {
            let (integral, closed) = biangle_orthogonality(
                args.k, args.l, args.k2, args.l2, args.alpha, args.beta, args.nquad,
            )?;
            render(
                request.format,
                &OrthogonalityOut {
                    schema: 1,
                    command: "orthogonality",
                    integral: integral.into(),
                    closed_form: closed.into(),
                    abs_difference: (integral - closed).norm(),
                },
                |o| {
                    vec![
                        ("integral_re".into(), fmt_f64(o.integral.re)),
                        ("closed_form_re".into(), fmt_f64(o.closed_form.re)),
                        ("abs_difference".into(), fmt_f64(o.abs_difference)),
                    ]
                },
            )
        }
        Command::Greens(args) => {
            let space = parse_space(&args.space, args.n, args.radius)?;
            let geodesics: Vec<f64> = if let Some(list) = &args.geodesics {
                list.split(',')
                    .map(|s| parse_real(s.trim()))
                    .collect::<Result<_>>()?
            } else {
                let from = args.from.unwrap_or(0.1);
                let to = args.to.unwrap_or(if space.compact { 1.5 } else { 2.0 });
                grid(from, to, args.steps)
            };
            let mut rows = Vec::new();
            for g in geodesics {
                rows.push((g, symmspace::greens(&space, g)?));
            }
            render(
                request.format,
                &GreensOut {
                    schema: 1,
                    command: "greens",
                    space: space.label(),
                    alpha: space.alpha(),
                    beta: space.beta(),
                    constant: space.constant(),
                    rows,
                },
                |o| {
                    o.rows
                        .iter()
                        .flat_map(|(g, v)| {
                            vec![
                                ("geodesic".into(), fmt_f64(*g)),
                                ("value".into(), fmt_f64(*v)),
                            ]
                        })
                        .collect()
                },
            )
        }
        Command::Table(args) => {
            let mut rows = Vec::new();
            for t in grid(args.from, args.to, args.steps) {
                let eval_args = EvalArgs {
                    function: args.function.clone(),
                    alpha: args.alpha.clone(),
                    beta: args.beta.clone(),
                    gamma: args.gamma.clone(),
                    z: Some(format!("{t}")),
                    x: Some(format!("{t}")),
                    rep: None,
                };
                let (r, _) = eval_function(&eval_args, prec)?;
                rows.push(TableRow {
                    argument: t,
                    value: r.value.into(),
                });
            }
            render(
                request.format,
                &TableOut {
                    schema: 1,
                    command: "table",
                    function: args.function.clone(),
                    rows,
                },
                |o| {
                    o.rows
                        .iter()
                        .flat_map(|r| {
                            vec![
                                ("argument".into(), fmt_f64(r.argument)),
                                ("value_re".into(), fmt_f64(r.value.re)),
                                ("value_im".into(), fmt_f64(r.value.im)),
                            ]
                        })
                        .collect()
                },
            )
        }
    };
    Ok(out)
}

fn grid(from: f64, to: f64, steps: usize) -> Vec<f64> {
    let n = steps.max(1);
    (0..=n)
        .map(|i| from + (to - from) * i as f64 / n as f64)
        .collect()
}

fn eval_function(args: &EvalArgs, prec: Precision) -> Result<(EvalResult, Option<usize>)> {
    let get = |v: &Option<String>, name: &str| -> Result<C64> {
        v.as_ref()
            .ok_or_else(|| Error::Domain(format!("missing --{name}")))
            .and_then(|s| parse_complex(s))
    };
    let rep = match args.rep {
        None => Rep::Auto,
        Some(1) => Rep::Rep1,
        Some(2) => Rep::Rep2,
        Some(3) => Rep::Rep3,
        Some(4) => Rep::Rep4,
        Some(r) => return Err(Error::Domain(format!("representation {r} out of range 1-4"))),
    };
    let params = || -> Result<JacobiParams> {
        Ok(JacobiParams::new(
            get(&args.alpha, "alpha")?,
            get(&args.beta, "beta")?,
            get(&args.gamma, "gamma")?,
        ))
    };
    let zarg = || get(&args.z, "z");
    let xarg = || get(&args.x, "x").or_else(|_| get(&args.z, "z or x"));
    let classical_kind = |family: Family| -> Result<(ClassicalKind, C64)> {
        Ok((
            ClassicalKind {
                family,
                degree: get(&args.gamma, "gamma (degree)")?,
                order: get(&args.alpha, "alpha (order)").unwrap_or_else(|_| c64(0.0, 0.0)),
            },
            xarg()?,
        ))
    };
    match args.function.as_str() {
        "jacobi_p" => Ok((jacobi::jacobi_p_prec(&params()?, zarg()?, rep, prec)?, None)),
        "jacobi_q" => Ok((jacobi::jacobi_q_prec(&params()?, zarg()?, rep, prec)?, None)),
        "jacobi_p_cut" => Ok((jacobi::jacobi_p_cut(&params()?, xarg()?)?, None)),
        "jacobi_q_cut" => Ok((jacobi::jacobi_q_cut(&params()?, xarg()?)?, None)),
        "jacobi_q_cut_special" => Ok((jacobi::jacobi_q_cut_special(&params()?, xarg()?)?, None)),
        "jacobi_p_olver" => Ok((jacobi::jacobi_p_olver(&params()?, zarg()?)?, None)),
        "jacobi_q_olver" => Ok((jacobi::jacobi_q_olver(&params()?, zarg()?)?, None)),
        "hyp_2f1" | "olver_2f1" => {
            let (a, b, c) = (
                get(&args.alpha, "alpha (a)")?,
                get(&args.beta, "beta (b)")?,
                get(&args.gamma, "gamma (c)")?,
            );
            let r = if args.function == "hyp_2f1" {
                hypergeom::hyp_2f1(a, b, c, zarg()?)?
            } else {
                hypergeom::olver_2f1_prec(a, b, c, zarg()?, prec)?
            };
            Ok((
                EvalResult {
                    value: r.value,
                    abs_error_estimate: r.abs_error_estimate,
                    method: jacobi::Method::Rep1,
                },
                Some(r.terms_used),
            ))
        }
        name => {
            let family = match name {
                "gegenbauer_c" => Family::GegenbauerC,
                "gegenbauer_d" => Family::GegenbauerD,
                "gegenbauer_c_cut" => Family::GegenbauerCCut,
                "gegenbauer_d_cut" => Family::GegenbauerDCut,
                "legendre_p" => Family::LegendreP,
                "legendre_q" => Family::LegendreQ,
                "ferrers_p" => Family::FerrersP,
                "ferrers_q" => Family::FerrersQ,
                "chebyshev_t" => Family::ChebyshevT,
                "chebyshev_u" => Family::ChebyshevU,
                "legendre_poly" => Family::LegendrePoly,
                other => {
                    return Err(Error::Domain(format!("unknown function '{other}'")));
                }
            };
            let (kind, arg) = classical_kind(family)?;
            Ok((classical::eval_classical(&kind, arg)?, None))
        }
    }
}

fn parse_space(tag: &str, n: u32, radius: f64) -> Result<SymmetricSpace> {
    let (field, compact) = match tag.to_lowercase().as_str() {
        "ch" => (DivisionField::Complex, false),
        "hh" => (DivisionField::Quaternion, false),
        "oh" => (DivisionField::Octonion, false),
        "cp" => (DivisionField::Complex, true),
        "hp" => (DivisionField::Quaternion, true),
        "op" => (DivisionField::Octonion, true),
        other => {
            return Err(Error::Domain(format!(
                "unknown space '{other}' (expected ch|hh|oh|cp|hp|op)"
            )));
        }
    };
    let n = if field == DivisionField::Octonion { 2 } else { n };
    SymmetricSpace::new(field, compact, n, radius)
}

/// Parse "re" or "re,im"; rejects NaN and infinities.
pub fn parse_complex(s: &str) -> Result<C64> {
    let parts: Vec<&str> = s.split(',').collect();
    match parts.as_slice() {
        [re] => Ok(c64(parse_real(re)?, 0.0)),
        [re, im] => Ok(c64(parse_real(re)?, parse_real(im)?)),
        _ => Err(Error::Domain(format!(
            "cannot parse '{s}' as a complex scalar (expected \"re\" or \"re,im\")"
        ))),
    }
}

fn parse_real(s: &str) -> Result<f64> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| Error::Domain(format!("cannot parse '{s}' as a number")))?;
    if !v.is_finite() {
        return Err(Error::Domain(format!("non-finite input '{s}' rejected")));
    }
    Ok(v)
}

fn fmt_f64(v: f64) -> String {
    // {:?} prints the shortest representation that round-trips
    format!("{v:?}")
}

fn render<T: Serialize>(
    format: OutputFormat,
    value: &T,
    csv_fields: impl Fn(&T) -> Vec<(String, String)>,
) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(value).expect("serializable output"),
        OutputFormat::Csv => {
            let fields = csv_fields(value);
            let header: Vec<String> = fields.iter().map(|(k, _)| csv_quote(k)).collect();
            let row: Vec<String> = fields.iter().map(|(_, v)| csv_quote(v)).collect();
            format!("{}\r\n{}", header.join(","), row.join(","))
        }
    }
}

fn csv_quote(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_parsing() {
        assert_eq!(parse_complex("2").unwrap(), c64(2.0, 0.0));
        assert_eq!(parse_complex("-1.5,0.25").unwrap(), c64(-1.5, 0.25));
        assert!(parse_complex("nan").is_err());
        assert!(parse_complex("inf,0").is_err());
        assert!(parse_complex("1,2,3").is_err());
    }

    #[test]
    fn json_roundtrip_exact() {
        // every JSON float field re-parses to the emitted value exactly
        let v = 0.549_306_144_334_054_9_f64;
        let s = fmt_f64(v);
        let back: f64 = s.parse().unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_quote("plain"), "plain");
        assert_eq!(csv_quote("a,b"), "\"a,b\"");
        assert_eq!(csv_quote("say \"hi\""), "\"say \"\"hi\"\"\"");
    }
}
