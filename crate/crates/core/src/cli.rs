//! Command-line front end. Exit codes: 0 success, 1 runtime or validation
//! failure (including failed self-audit checks), 2 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::app::{execute, format_check};
use crate::config::{load_config, Config};
use crate::scenario::{ForceOracle, ScenarioKind, ScenarioSpec};

#[derive(Debug, Parser)]
#[command(name = "vsa", version, about = "Leaf-spring variable stiffness actuator scenarios")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone, Default)]
pub struct Common {
    /// JSON configuration file; defaults apply when omitted.
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Output CSV path; a manifest is written next to it.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Integration step (s).
    #[arg(long)]
    pub dt: Option<f64>,
    /// Simulated time (s).
    #[arg(long)]
    pub duration: Option<f64>,
    /// Deflection grid, comma separated (rad).
    #[arg(long, value_delimiter = ',', num_args = 1, allow_hyphen_values = true)]
    pub qd: Option<Vec<f64>>,
    /// Roller-position grid, comma separated (m).
    #[arg(long, value_delimiter = ',', num_args = 1)]
    pub xr: Option<Vec<f64>>,
}

#[derive(Debug, Args, Clone, Default)]
pub struct WithOracle {
    #[command(flatten)]
    pub common: Common,
    /// Force law behind the table.
    #[arg(long, value_enum, default_value = "closed-form")]
    pub oracle: OracleArg,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
pub enum OracleArg {
    #[default]
    ClosedForm,
    Elastica,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Output torque against deflection, one curve per roller position.
    StaticTorque(WithOracle),
    /// Equilibrium stiffness against roller position.
    StiffnessCurve(WithOracle),
    /// Disturbance torque on the stiffness motor over the deflection/roller grid.
    DisturbanceMap(WithOracle),
    /// Closed-loop deflection ramp with the link clamped, stiff and soft.
    DeflectionExperiment(Common),
    /// Soft-to-stiff sweep at equilibrium and at a held deflection.
    StiffnessSweepEnergy(Common),
    /// Undriven frictionless run: energy drift and integrator order.
    PassiveAudit(Common),
    /// Link released from a deflection with both servo loops active.
    Simulate(Common),
    /// Linear contact force against the large-deflection solution.
    ElasticaCompare(Common),
}

impl Command {
    fn parts(&self) -> (ScenarioKind, &Common, ForceOracle) {
        fn with(k: ScenarioKind, o: &WithOracle) -> (ScenarioKind, &Common, ForceOracle) {
            let oracle = match o.oracle {
                OracleArg::ClosedForm => ForceOracle::ClosedForm,
                OracleArg::Elastica => ForceOracle::Elastica,
            };
            (k, &o.common, oracle)
        }
        match self {
            Command::StaticTorque(o) => with(ScenarioKind::StaticTorque, o),
            Command::StiffnessCurve(o) => with(ScenarioKind::StiffnessCurve, o),
            Command::DisturbanceMap(o) => with(ScenarioKind::DisturbanceMap, o),
            Command::DeflectionExperiment(c) => (ScenarioKind::DeflectionExperiment, c, ForceOracle::ClosedForm),
            Command::StiffnessSweepEnergy(c) => (ScenarioKind::StiffnessSweepEnergy, c, ForceOracle::ClosedForm),
            Command::PassiveAudit(c) => (ScenarioKind::PassiveAudit, c, ForceOracle::ClosedForm),
            Command::Simulate(c) => (ScenarioKind::Simulate, c, ForceOracle::ClosedForm),
            Command::ElasticaCompare(c) => (ScenarioKind::ElasticaCompare, c, ForceOracle::ClosedForm),
        }
    }

    /// Scenario description and the config path, if any.
    pub fn spec(&self) -> (ScenarioSpec, Option<PathBuf>) {
        let (kind, c, oracle) = self.parts();
        let spec = ScenarioSpec {
            kind,
            q_grid: c.qd.clone(),
            x_grid: c.xr.clone(),
            dt: c.dt,
            duration: c.duration,
            oracle,
            out: c.out.clone(),
        };
        (spec, c.config.clone())
    }
}

/// Parse `argv` into a scenario; `Err` carries clap's error (usage or help).
pub fn parse_cli<I, T>(argv: I) -> Result<(ScenarioSpec, Option<PathBuf>), clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    Cli::try_parse_from(argv).map(|cli| cli.command.spec())
}

/// Full CLI run; returns the process exit code.
pub fn main_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let (spec, config) = match parse_cli(argv) {
        Ok(v) => v,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{text}");
            } else {
                let _ = write!(stderr, "{text}");
            }
            return code;
        }
    };
    let cfg = match config {
        Some(path) => match load_config(&path) {
            Ok(c) => c,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                return 1;
            }
        },
        None => Config::default(),
    };
    match execute(&spec, &cfg) {
        Ok(outcome) => {
            for f in &outcome.files {
                let _ = writeln!(stdout, "wrote {}", f.display());
            }
            let _ = writeln!(stdout, "wrote {}", outcome.manifest.display());
            for c in &outcome.report.checks {
                let _ = writeln!(stdout, "{}", format_check(c));
            }
            if outcome.report.passed() {
                0
            } else {
                let _ = writeln!(stderr, "error: self-audit checks failed");
                1
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stiffness_curve_grid() {
        let (spec, cfg) = parse_cli(["vsa", "stiffness-curve", "--config", "c.json", "--xr", "0.01,0.02,0.04,0.08", "--out", "k.csv"]).unwrap();
        assert_eq!(spec.kind, ScenarioKind::StiffnessCurve);
        assert_eq!(spec.x_grid, Some(vec![0.01, 0.02, 0.04, 0.08]));
        assert_eq!(cfg, Some(PathBuf::from("c.json")));
        assert_eq!(spec.out, Some(PathBuf::from("k.csv")));
    }

    #[test]
    fn negative_deflections() {
        let (spec, _) = parse_cli(["vsa", "static-torque", "--qd", "-0.1,0,0.1"]).unwrap();
        assert_eq!(spec.q_grid, Some(vec![-0.1, 0.0, 0.1]));
    }

    #[test]
    fn unknown_subcommand_is_usage_error() {
        assert_eq!(parse_cli(["vsa", "frobnicate"]).unwrap_err().exit_code(), 2);
        assert_eq!(parse_cli(["vsa", "passive-audit", "--oracle", "elastica"]).unwrap_err().exit_code(), 2);
    }
}
