//! `zeta3`: regenerate tables, figure data, continued fractions, recurrences
//! and certificates for rational approximants to zeta(3).

mod args;
mod commands;
mod report;

use clap::Parser;
use std::io::Write;
use std::process::ExitCode;

use args::{Cli, Command, Common, RunConfig};
use zeta3_core::analysis::PRECISION_CAP_ENV;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or parameters; exit code 2.
    Usage(String),
    /// A computation or self-check failed; exit code 1.
    Internal(String),
}

impl From<zeta3_core::Error> for CliError {
    fn from(e: zeta3_core::Error) -> Self {
        match e {
            zeta3_core::Error::InvalidParams(_) | zeta3_core::Error::IndexRange { .. } => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Internal(other.to_string()),
        }
    }
}

fn reject_family_flags(c: &Common) -> Result<(), CliError> {
    let set = [
        ("family", c.family != "apery"),
        ("rho", c.rho.is_some()),
        ("theta", c.theta.is_some()),
        ("upsilon", c.upsilon.is_some()),
        ("chi", c.chi.is_some()),
        ("psi", c.psi.is_some()),
        ("n", c.n.is_some()),
    ];
    match set.iter().find(|s| s.1) {
        Some((name, _)) => Err(CliError::Usage(format!(
            "figure takes --preset, not --{name}"
        ))),
        None => Ok(()),
    }
}

fn run(cli: &Cli) -> Result<(commands::Outcome, Common), CliError> {
    let common = match &cli.command {
        Command::Table(c) | Command::Recurrence(c) | Command::Certify(c) => c,
        Command::Figure { common, .. } | Command::Cf { common, .. } => common,
    };
    if let Some(cap) = common.precision_cap {
        if cap == 0 {
            return Err(CliError::Usage("--precision-cap must be positive".into()));
        }
        std::env::set_var(PRECISION_CAP_ENV, cap.to_string());
    }
    let outcome = match &cli.command {
        Command::Table(c) => commands::table(&RunConfig::new(c, "2..4,50", 4)?)?,
        Command::Figure { common, preset } => {
            reject_family_flags(common)?;
            let digits = common.digits.unwrap_or(6);
            if !(1..=12).contains(&digits) {
                return Err(CliError::Usage(format!(
                    "--digits {digits} must be in 1..=12 for figure"
                )));
            }
            commands::figure(*preset, digits)?
        }
        Command::Cf { common, canonical } => {
            commands::cf(&RunConfig::new(common, "10", 4)?, *canonical)?
        }
        Command::Recurrence(c) => commands::recurrence(&RunConfig::new(c, "50", 4)?)?,
        Command::Certify(c) => commands::certify(&RunConfig::new(c, "1..50", 6)?)?,
    };
    Ok((outcome, common.clone()))
}

fn emit(text: &str, common: &Common) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Internal(format!("write failed: {e}"));
    match &common.output {
        Some(path) => std::fs::write(path, text).map_err(io),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(io)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|(outcome, common)| {
        emit(&outcome.report.render(common.format), &common)?;
        Ok(outcome.ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(CliError::Internal(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
