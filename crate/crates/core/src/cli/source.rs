//! Parameters and function selection shared by the subcommands.

use std::path::PathBuf;

use clap::Args;
use num_complex::Complex64;

use super::CliError;
use crate::error::Result;
use crate::holomorphic::{Holomorphic, Jet};
use crate::series::{PowerSeries, DEFAULT_ORDER, MAX_ORDER};
use crate::special::BesselParams;
use crate::theorems;

/// Parses `x` or `re,im`.
pub fn parse_complex(s: &str) -> std::result::Result<Complex64, String> {
    let parse = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("`{t}`: {e}"));
    match s.split_once(',') {
        Some((re, im)) => Ok(Complex64::new(parse(re)?, parse(im)?)),
        None => Ok(Complex64::new(parse(s)?, 0.0)),
    }
}

fn parse_order(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if (1..=MAX_ORDER).contains(&n) => Ok(n),
        _ => Err(format!("expected an integer in 1..={MAX_ORDER}")),
    }
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    /// Order ν, as `x` or `re,im`.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, conflicts_with = "kappa")]
    pub nu: Option<Complex64>,
    /// κ = ν + (b+1)/2, as an alternative to --nu.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub kappa: Option<Complex64>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, default_value = "1")]
    pub b: Complex64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, default_value = "1")]
    pub c: Complex64,
}

impl ParamArgs {
    pub fn is_set(&self) -> bool {
        self.nu.is_some() || self.kappa.is_some()
    }

    pub fn nu(&self) -> std::result::Result<Complex64, CliError> {
        match (self.nu, self.kappa) {
            (Some(nu), _) => Ok(nu),
            (None, Some(kappa)) => Ok(kappa - (self.b + 1.0) / 2.0),
            (None, None) => Err(CliError::Usage("--nu or --kappa is required".into())),
        }
    }

    pub fn params(&self) -> std::result::Result<BesselParams, CliError> {
        Ok(BesselParams::new(self.nu()?, self.b, self.c)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Elementary {
    #[value(name = "z")]
    Identity,
    #[value(name = "z/(1-z)")]
    Geometric,
}

#[derive(Debug, Clone, Args)]
#[group(id = "function", multiple = false)]
pub struct FunctionArgs {
    /// φ_{ν,b,c}.
    #[arg(long)]
    pub phi: bool,
    /// ϑ = z φ.
    #[arg(long)]
    pub vartheta: bool,
    /// -4κ(φ - 1)/c.
    #[arg(long)]
    pub normalized: bool,
    /// z φ(z²), the normalized form of ω.
    #[arg(long)]
    pub omega_lift: bool,
    /// An elementary function.
    #[arg(long = "fn", value_enum)]
    pub elementary: Option<Elementary>,
    /// Power series from a JSON file holding `[[re, im], ...]`.
    #[arg(long)]
    pub series: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ModifierArgs {
    /// Replace f by B_κ^c f.
    #[arg(long)]
    pub bkc: bool,
    /// Replace f by its Libera image (applied after --bkc).
    #[arg(long)]
    pub libera: bool,
    /// Truncation order of generated series.
    #[arg(long, default_value_t = DEFAULT_ORDER, value_parser = parse_order)]
    pub order: usize,
}

/// A function to be sampled: a truncated series or an exact elementary form.
#[derive(Debug, Clone)]
pub enum Function {
    Series(PowerSeries),
    Elementary(Elementary, PowerSeries),
}

impl Function {
    pub fn series(&self) -> &PowerSeries {
        match self {
            Function::Series(s) | Function::Elementary(_, s) => s,
        }
    }
}

impl Holomorphic for Function {
    fn jet(&self, z: Complex64) -> Result<Jet> {
        match self {
            Function::Series(s) => s.jet(z),
            Function::Elementary(Elementary::Identity, _) => {
                Ok(Jet { value: z, d1: Complex64::new(1.0, 0.0), d2: Complex64::new(0.0, 0.0) })
            }
            Function::Elementary(Elementary::Geometric, _) => theorems::geometric_closed_form().jet(z),
        }
    }
}

pub fn read_series(path: &std::path::Path) -> std::result::Result<PowerSeries, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    Ok(PowerSeries::from_json(&text)?)
}

impl FunctionArgs {
    pub fn is_set(&self) -> bool {
        self.phi || self.vartheta || self.normalized || self.omega_lift || self.elementary.is_some() || self.series.is_some()
    }

    /// The selected function before modifiers; `default` applies when no
    /// selector was given.
    pub fn resolve(
        &self,
        params: &ParamArgs,
        order: usize,
        default: Option<fn(&BesselParams, usize) -> Result<PowerSeries>>,
    ) -> std::result::Result<Function, CliError> {
        let from_params = |build: fn(&BesselParams, usize) -> Result<PowerSeries>| -> std::result::Result<Function, CliError> {
            Ok(Function::Series(build(&params.params()?, order)?))
        };
        if self.phi {
            from_params(PowerSeries::phi)
        } else if self.vartheta {
            from_params(PowerSeries::vartheta)
        } else if self.normalized {
            from_params(PowerSeries::phi_normalized)
        } else if self.omega_lift {
            from_params(theorems::omega_normalized_series)
        } else if let Some(kind) = self.elementary {
            let s = match kind {
                Elementary::Identity => PowerSeries::identity(order),
                Elementary::Geometric => PowerSeries::geometric(order),
            };
            Ok(Function::Elementary(kind, s))
        } else if let Some(path) = &self.series {
            Ok(Function::Series(read_series(path)?))
        } else if let Some(build) = default {
            from_params(build)
        } else {
            Err(CliError::Usage("select a function with --phi, --vartheta, --normalized, --omega-lift, --fn or --series".into()))
        }
    }
}

impl ModifierArgs {
    pub fn apply(&self, f: Function, params: &ParamArgs) -> std::result::Result<Function, CliError> {
        if !self.bkc && !self.libera {
            return Ok(f);
        }
        let mut s = f.series().clone();
        if self.bkc {
            s = s.b_operator(&params.params()?)?;
        }
        if self.libera {
            s = s.libera()?;
        }
        Ok(Function::Series(s))
    }
}
