use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::path::PathBuf;
use zeta3_core::{FamilyParams, Perturbation, Source};

use crate::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "zeta3",
    version,
    about = "Rational approximants to zeta(3): tables, figures, fractions, recurrences, certificates"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact p/q and certified error per n.
    Table(Common),
    /// Figure data: the f grid of a preset.
    Figure {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Preset::Figure1)]
        preset: Preset,
    },
    /// Continued fraction terms and convergents.
    Cf {
        #[command(flatten)]
        common: Common,
        /// Integer form (Apéry, or family (1,2) with theta = 2).
        #[arg(long)]
        canonical: bool,
    },
    /// Three-term recurrence, closed form or fitted.
    Recurrence(Common),
    /// Integrality and decay checks behind the irrationality argument.
    Certify(Common),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// `apery`, `counterexample1`, `counterexample2` or `i,j`.
    #[arg(long, default_value = "apery")]
    pub family: String,
    #[arg(long, allow_hyphen_values = true)]
    pub rho: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<i64>,
    #[arg(long)]
    pub upsilon: Option<i64>,
    #[arg(long)]
    pub chi: Option<i64>,
    #[arg(long)]
    pub psi: Option<i64>,
    /// Indices, e.g. `2..4,50`.
    #[arg(long)]
    pub n: Option<String>,
    /// Significant digits for certified values.
    #[arg(long)]
    pub digits: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to a file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Working precision cap in decimal digits.
    #[arg(long, env = "ZETA3_PRECISION_CAP")]
    pub precision_cap: Option<u32>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    Figure1,
    Figure2,
}

/// Validated run configuration.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub source: Source,
    pub ns: Vec<u64>,
    pub digits: u32,
}

impl RunConfig {
    pub fn new(c: &Common, default_ns: &str, default_digits: u32) -> Result<Self, CliError> {
        let source = parse_source(c)?;
        let ns = parse_ns(c.n.as_deref().unwrap_or(default_ns))?;
        let min = source.first_index();
        if let Some(&bad) = ns.iter().find(|&&n| n < min) {
            return Err(CliError::Usage(format!(
                "n = {bad} is below the first index {min} of {source}"
            )));
        }
        let digits = c.digits.unwrap_or(default_digits);
        if !(1..=60).contains(&digits) {
            return Err(CliError::Usage(format!(
                "--digits {digits} must be in 1..=60"
            )));
        }
        Ok(Self { source, ns, digits })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "family": self.source.to_string(),
            "n": self.ns,
            "digits": self.digits,
        })
    }
}

pub fn parse_source(c: &Common) -> Result<Source, CliError> {
    let given = [
        ("rho", c.rho.is_some()),
        ("theta", c.theta.is_some()),
        ("upsilon", c.upsilon.is_some()),
        ("chi", c.chi.is_some()),
        ("psi", c.psi.is_some()),
    ];
    let reject_extra = |allowed: &[&str]| -> Result<(), CliError> {
        match given
            .iter()
            .find(|(name, set)| *set && !allowed.contains(name))
        {
            Some((name, _)) => Err(CliError::Usage(format!(
                "--{name} does not apply to family {}",
                c.family
            ))),
            None => Ok(()),
        }
    };
    let family = c.family.trim().to_ascii_lowercase();
    let source = match family.as_str() {
        "apery" => {
            reject_extra(&[])?;
            Source::Apery
        }
        "counterexample1" | "counterexample2" => {
            reject_extra(&[])?;
            Source::Counterexample(if family.ends_with('1') { 1 } else { 2 })
        }
        spec => {
            let (i, j) = spec
                .split_once(',')
                .and_then(|(i, j)| {
                    Some((
                        i.trim().parse::<usize>().ok()?,
                        j.trim().parse::<usize>().ok()?,
                    ))
                })
                .ok_or_else(|| CliError::Usage(format!("unknown family `{}`", c.family)))?;
            let need = |name: &str, v: Option<i64>| {
                v.ok_or_else(|| CliError::Usage(format!("family {i},{j} needs --{name}")))
            };
            let perturbation = match j {
                1 => {
                    reject_extra(&["rho"])?;
                    Perturbation::Rho(need("rho", c.rho)?)
                }
                2 => {
                    reject_extra(&["theta"])?;
                    Perturbation::Theta(need("theta", c.theta)?)
                }
                3 => {
                    reject_extra(&["upsilon", "chi", "psi"])?;
                    Perturbation::Affine {
                        upsilon: need("upsilon", c.upsilon)?,
                        chi: need("chi", c.chi)?,
                        psi: need("psi", c.psi)?,
                    }
                }
                _ => {
                    return Err(CliError::Usage(format!(
                        "column index j = {j} must be 1, 2 or 3"
                    )))
                }
            };
            Source::Family(
                FamilyParams::new(i, perturbation).map_err(|e| CliError::Usage(e.to_string()))?,
            )
        }
    };
    Ok(source)
}

/// Comma separated indices and inclusive ranges `a..b`, sorted and deduplicated.
pub fn parse_ns(spec: &str) -> Result<Vec<u64>, CliError> {
    let bad = || CliError::Usage(format!("bad --n `{spec}`, expected e.g. `2..4,50`"));
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim) {
        if let Some((a, b)) = part.split_once("..") {
            let a: u64 = a.trim().parse().map_err(|_| bad())?;
            let b: u64 = b
                .trim_start_matches('=')
                .trim()
                .parse()
                .map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            out.extend(a..=b);
        } else {
            out.push(part.parse().map_err(|_| bad())?);
        }
    }
    out.sort_unstable();
    out.dedup();
    if out.is_empty() {
        return Err(bad());
    }
    Ok(out)
}
