//! Command-line front end: `eval`, `check`, `figure` and `selftest`.
//!
//! Exit codes: 0 pass, 1 fail, 2 usage, 3 math error, 4 inconclusive, 5 I/O.

mod figure;
mod json;
mod selftest;
mod source;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

pub use figure::{image_curve, to_csv, to_svg, winding_number, Overlay, Quantity, EXP_BOUNDARY_POINTS};
pub use source::parse_complex;

use crate::error::Error;
use crate::gft::{self, CheckOptions, Class, DiskGrid, MembershipReport, Verdict};
use crate::series::PowerSeries;
use crate::special::{self, EvalResult, NamedFunction};
use crate::theorems::{self, Family, Part, TheoremReport};
use source::{Elementary, FunctionArgs, ModifierArgs, ParamArgs};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MATH: i32 = 3;
pub const EXIT_INCONCLUSIVE: i32 = 4;
pub const EXIT_IO: i32 = 5;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Math(#[from] Error),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Math(_) => EXIT_MATH,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "bessel-exp", version, about = "Generalized Bessel functions and exponential starlikeness checks")]
pub struct Cli {
    /// Absolute tolerance for series evaluation.
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tol: f64,
    /// Comma-separated sampling radii, increasing, inside (0, 1).
    #[arg(long, global = true, value_delimiter = ',')]
    pub grid_radii: Option<Vec<f64>>,
    /// Sample angles per circle.
    #[arg(long, global = true)]
    pub grid_angles: Option<usize>,
    /// Emit JSON instead of a text summary.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate φ, ϑ, ω or a named Bessel function at one point.
    Eval(EvalArgs),
    /// Check a theorem's hypotheses or a class membership.
    Check(CheckArgs),
    /// Write the image of |z| = r under a quantity as CSV and SVG.
    Figure(FigureArgs),
    /// Run a fast battery of internal consistency checks.
    Selftest,
}

#[derive(Debug, Args)]
#[group(id = "target", required = true, multiple = false, args = ["phi", "vartheta", "omega", "named"])]
pub struct EvalArgs {
    #[arg(long)]
    pub phi: bool,
    #[arg(long)]
    pub vartheta: bool,
    #[arg(long)]
    pub omega: bool,
    /// One of J, I, j_sph, i_sph, calJ, calI, frakj, fraki.
    #[arg(long)]
    pub named: Option<NamedFunction>,
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub z: Complex64,
    /// Derivative order 1..=3 of φ.
    #[arg(long, requires = "phi")]
    pub derivative: Option<usize>,
    /// Rotation of the branch cut of z^ν away from the negative real axis.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub branch_angle: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoremArg {
    #[value(name = "Pe")]
    Pe,
    #[value(name = "Ke")]
    Ke,
    #[value(name = "Se")]
    Se,
    #[value(name = "CorBessel_a")]
    CorBesselA,
    #[value(name = "CorBessel_b")]
    CorBesselB,
    #[value(name = "CorSpherical_a")]
    CorSphericalA,
    #[value(name = "CorSpherical_b")]
    CorSphericalB,
    #[value(name = "Libera")]
    Libera,
    #[value(name = "OmegaSe")]
    OmegaSe,
    #[value(name = "BkcChain")]
    BkcChain,
    #[value(name = "BesselChain")]
    BesselChain,
    #[value(name = "ExLinear")]
    ExLinear,
    #[value(name = "ExProduct")]
    ExProduct,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    #[value(name = "Pe")]
    Pe,
    #[value(name = "Se")]
    Se,
    #[value(name = "Ke")]
    Ke,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PartArg {
    A,
    B,
}

#[derive(Debug, Args)]
#[group(id = "what", required = true, multiple = false, args = ["theorem", "class"])]
pub struct CheckArgs {
    #[arg(long, value_enum)]
    pub theorem: Option<TheoremArg>,
    #[arg(long, value_enum)]
    pub class: Option<ClassArg>,
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub function: FunctionArgs,
    #[command(flatten)]
    pub modifiers: ModifierArgs,
    /// Also sample the conclusion of the theorem.
    #[arg(long)]
    pub verify: bool,
    /// Weight α > 1/e for ExLinear.
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    #[arg(long, value_enum, default_value = "a")]
    pub part: PartArg,
    /// Target class of the Libera theorem.
    #[arg(long, value_enum, default_value = "Ke")]
    pub target: ClassArg,
    /// Number of order-raising steps for BesselChain.
    #[arg(long, default_value_t = 5)]
    pub steps: usize,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub function: FunctionArgs,
    #[command(flatten)]
    pub modifiers: ModifierArgs,
    #[arg(long, value_enum, default_value = "value")]
    pub quantity: Quantity,
    #[arg(long, default_value_t = 0.999)]
    pub radius: f64,
    #[arg(long, default_value_t = 2048)]
    pub points: usize,
    #[arg(long, value_enum, default_value = "exp")]
    pub overlay: Overlay,
    /// Write PREFIX.csv and PREFIX.svg; without it the CSV goes to stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion);
            let _ = if informational { write!(out, "{}", e.render()) } else { write!(err, "{}", e.render()) };
            return if informational { EXIT_PASS } else { EXIT_USAGE };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> CliResult<i32> {
    match &cli.command {
        Command::Eval(args) => cmd_eval(cli, args, out),
        Command::Check(args) => cmd_check(cli, args, out),
        Command::Figure(args) => cmd_figure(cli, args, out),
        Command::Selftest => selftest::run(cli, out),
    }
}

impl Cli {
    pub fn check_options(&self) -> CliResult<CheckOptions> {
        let radii = self.grid_radii.clone().unwrap_or_else(|| DiskGrid::DEFAULT_RADII.to_vec());
        let angles = self.grid_angles.unwrap_or(DiskGrid::DEFAULT_ANGLES);
        let grid = DiskGrid::new(radii, angles).map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(CheckOptions::with_grid(grid))
    }

    fn emit<T: Serialize>(&self, out: &mut dyn Write, value: &T, text: impl FnOnce() -> String) -> CliResult<()> {
        if self.json {
            let s = json::to_string(value).map_err(|e| CliError::Io(e.to_string()))?;
            writeln!(out, "{s}")?;
        } else {
            write!(out, "{}", text())?;
        }
        Ok(())
    }
}

fn fmt_complex(w: Complex64) -> String {
    format!("{:.16e} {} {:.16e}i", w.re, if w.im < 0.0 { '-' } else { '+' }, w.im.abs())
}

fn cmd_eval(cli: &Cli, args: &EvalArgs, out: &mut dyn Write) -> CliResult<i32> {
    let result: EvalResult = if let Some(name) = args.named {
        special::named_family(name, args.params.nu()?, args.z, cli.tol)?
    } else {
        let params = args.params.params()?;
        if args.omega {
            special::omega_eval(&params, args.z, args.branch_angle, cli.tol)?
        } else if args.vartheta {
            special::vartheta_eval(&params, args.z, cli.tol)?
        } else if let Some(k) = args.derivative {
            special::phi_derivative(&params, args.z, k, cli.tol)?
        } else {
            special::phi_eval(&params, args.z, cli.tol)?
        }
    };
    cli.emit(out, &result, || {
        format!(
            "value = {}\nterms_used = {}\ntail_bound = {:.3e}\n",
            fmt_complex(result.value),
            result.terms_used,
            result.tail_bound
        )
    })?;
    Ok(EXIT_PASS)
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Pass => EXIT_PASS,
        Verdict::Fail => EXIT_FAIL,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn report_code(r: &TheoremReport) -> i32 {
    if !r.applicable {
        return EXIT_FAIL;
    }
    let checks = r.conclusion_check.iter().chain(&r.supporting_checks);
    combine(checks.map(|c| verdict_code(c.verdict)))
}

/// Fail dominates inconclusive, which dominates pass.
fn combine(codes: impl IntoIterator<Item = i32>) -> i32 {
    codes.into_iter().fold(EXIT_PASS, |acc, c| match (acc, c) {
        (EXIT_FAIL, _) | (_, EXIT_FAIL) => EXIT_FAIL,
        (EXIT_INCONCLUSIVE, _) | (_, EXIT_INCONCLUSIVE) => EXIT_INCONCLUSIVE,
        _ => EXIT_PASS,
    })
}

fn membership_text(label: &str, r: &MembershipReport) -> String {
    format!(
        "{label}: {} (sup {:.6e}, threshold {}, margin {:.3e}, witness {})\n",
        format!("{:?}", r.verdict).to_lowercase(),
        r.sup_value,
        r.threshold,
        r.margin,
        fmt_complex(r.witness)
    )
}

fn theorem_text(r: &TheoremReport) -> String {
    let mut s = format!("{:?}: {}\n", r.theorem, if r.applicable { "applicable" } else { "not applicable" });
    for h in &r.hypotheses {
        let rel = serde_json::to_value(h.relation).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default();
        s += &format!(
            "  [{}] {}: {:.12} {rel} {:.12}\n",
            if h.holds { "ok" } else { "no" },
            h.name,
            h.lhs,
            h.rhs
        );
    }
    if let Some(c) = &r.conclusion_check {
        s += &membership_text("  conclusion", c);
    }
    for c in &r.supporting_checks {
        s += &membership_text("  supporting", c);
    }
    s
}

fn function_or_geometric(args: &CheckArgs) -> CliResult<source::Function> {
    if args.function.is_set() {
        args.function.resolve(&args.params, args.modifiers.order, None)
    } else {
        Ok(source::Function::Elementary(Elementary::Geometric, PowerSeries::geometric(args.modifiers.order)))
    }
}

fn cmd_check(cli: &Cli, args: &CheckArgs, out: &mut dyn Write) -> CliResult<i32> {
    let opts = cli.check_options()?;
    let verify = args.verify.then_some(&opts);
    if let Some(class) = args.class {
        let default: fn(&_, usize) -> _ = match class {
            ClassArg::Pe => PowerSeries::phi,
            ClassArg::Se => PowerSeries::vartheta,
            ClassArg::Ke => PowerSeries::phi_normalized,
        };
        let f = args.function.resolve(&args.params, args.modifiers.order, Some(default))?;
        let f = args.modifiers.apply(f, &args.params)?;
        let report = match class {
            ClassArg::Pe => gft::check_subordinate_exp(|z| crate::Holomorphic::value(&f, z), &opts)?,
            ClassArg::Se => gft::check_class(&f, Class::Starlike, &opts)?,
            ClassArg::Ke => gft::check_class(&f, Class::Convex, &opts)?,
        };
        cli.emit(out, &report, || membership_text(&format!("{class:?}"), &report))?;
        return Ok(verdict_code(report.verdict));
    }

    let theorem = args.theorem.expect("clap enforces --theorem or --class");
    let part = match args.part {
        PartArg::A => Part::A,
        PartArg::B => Part::B,
    };
    let report = match theorem {
        TheoremArg::Pe => theorems::hyp_pe(&args.params.params()?, verify)?,
        TheoremArg::Ke => theorems::hyp_ke(&args.params.params()?, verify)?,
        TheoremArg::Se => theorems::hyp_se(&args.params.params()?, verify)?,
        TheoremArg::CorBesselA => theorems::hyp_corollary(args.params.nu()?, Family::Bessel, Part::A, verify)?,
        TheoremArg::CorBesselB => theorems::hyp_corollary(args.params.nu()?, Family::Bessel, Part::B, verify)?,
        TheoremArg::CorSphericalA => theorems::hyp_corollary(args.params.nu()?, Family::Spherical, Part::A, verify)?,
        TheoremArg::CorSphericalB => theorems::hyp_corollary(args.params.nu()?, Family::Spherical, Part::B, verify)?,
        TheoremArg::Libera => {
            let target = match args.target {
                ClassArg::Se => Class::Starlike,
                ClassArg::Ke => Class::Convex,
                ClassArg::Pe => return Err(CliError::Usage("--target must be Se or Ke".into())),
            };
            theorems::hyp_libera(&args.params.params()?, target, verify)?
        }
        TheoremArg::OmegaSe => theorems::hyp_omega_se(&args.params.params()?, verify)?,
        TheoremArg::BkcChain => {
            let f = function_or_geometric(args)?;
            let params = args.params.params()?;
            match part {
                Part::A => theorems::hyp_bkc_chain_with(&params, f.series(), &f, part, verify)?,
                Part::B => theorems::hyp_bkc_chain(&params, f.series(), part, verify)?,
            }
        }
        TheoremArg::BesselChain => {
            let nu = args.params.nu()?;
            if nu.im != 0.0 || args.params.c.im != 0.0 {
                return Err(CliError::Usage("BesselChain needs real --nu and --c".into()));
            }
            let reports = theorems::bessel_chain(nu.re, args.steps, args.params.c.re, &opts)?;
            cli.emit(out, &reports, || reports.iter().map(theorem_text).collect())?;
            return Ok(combine(reports.iter().map(report_code)));
        }
        TheoremArg::ExLinear => {
            let f = function_or_geometric(args)?;
            theorems::example_linear_check(&args.params.params()?, f.series(), args.alpha, &opts)?
        }
        TheoremArg::ExProduct => {
            let f = function_or_geometric(args)?;
            theorems::example_product_check(&args.params.params()?, f.series(), &opts)?
        }
    };
    cli.emit(out, &report, || theorem_text(&report))?;
    Ok(report_code(&report))
}

#[derive(Serialize)]
struct FigureSummary<'a> {
    quantity: Quantity,
    overlay: Overlay,
    radius: f64,
    points: usize,
    inside: bool,
    points_outside: usize,
    csv: Option<&'a std::path::Path>,
    svg: Option<&'a std::path::Path>,
}

fn cmd_figure(cli: &Cli, args: &FigureArgs, out: &mut dyn Write) -> CliResult<i32> {
    if !(args.radius > 0.0 && args.radius < 1.0) {
        return Err(CliError::Usage(format!("--radius must lie in (0, 1), got {}", args.radius)));
    }
    if args.points < 64 {
        return Err(CliError::Usage(format!("--points must be at least 64, got {}", args.points)));
    }
    let f = args.function.resolve(&args.params, args.modifiers.order, Some(PowerSeries::phi))?;
    let f = args.modifiers.apply(f, &args.params)?;
    let curve = image_curve(&f, args.quantity, args.radius, args.points)?;
    let boundary = args.overlay.boundary(EXP_BOUNDARY_POINTS);
    let points_outside = curve.iter().filter(|(_, w)| !args.overlay.contains(*w, &boundary)).count();
    let csv = to_csv(&curve);

    let Some(prefix) = &args.out else {
        write!(out, "{csv}")?;
        return Ok(if points_outside == 0 { EXIT_PASS } else { EXIT_FAIL });
    };
    let csv_path = prefix.with_extension("csv");
    let svg_path = prefix.with_extension("svg");
    let io = |p: &std::path::Path, e: std::io::Error| CliError::Io(format!("{}: {e}", p.display()));
    std::fs::write(&csv_path, csv).map_err(|e| io(&csv_path, e))?;
    let overlay = (args.overlay != Overlay::None).then_some(boundary.as_slice());
    std::fs::write(&svg_path, to_svg(&curve, overlay)).map_err(|e| io(&svg_path, e))?;

    let summary = FigureSummary {
        quantity: args.quantity,
        overlay: args.overlay,
        radius: args.radius,
        points: args.points,
        inside: points_outside == 0,
        points_outside,
        csv: Some(&csv_path),
        svg: Some(&svg_path),
    };
    cli.emit(out, &summary, || {
        format!(
            "{} of {} points inside; wrote {} and {}\n",
            args.points - points_outside,
            args.points,
            csv_path.display(),
            svg_path.display()
        )
    })?;
    Ok(if points_outside == 0 { EXIT_PASS } else { EXIT_FAIL })
}
