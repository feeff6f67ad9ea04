use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PerturbKind {
    /// Smooth bump vanishing at both ends; excites every mode.
    Default,
    /// The scheme's discrete eigenvector for `--mode`.
    Mode,
    /// Initial profile of the exact modal solution for `--mode`.
    Modal,
}

/// Flags shared by every subcommand. Each may also come from `--config`;
/// flags win.
#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    /// TOML file with any of the keys below (unknown keys are rejected).
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Viscosity.
    #[arg(long, allow_negative_numbers = true)]
    pub nu: Option<f64>,
    /// Interval length.
    #[arg(long, allow_negative_numbers = true)]
    pub l: Option<f64>,
    /// Left boundary value u(0).
    #[arg(long = "A", allow_negative_numbers = true)]
    pub a: Option<f64>,
    /// Right boundary value u(l).
    #[arg(long = "B", allow_negative_numbers = true)]
    pub b: Option<f64>,
    /// Output file ("-" for standard output).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Per-command knobs; `None` means "not given on the command line".
#[derive(Debug, Clone, Default)]
pub struct Knobs {
    pub count: Option<usize>,
    pub points: Option<usize>,
    pub cells: Option<usize>,
    pub mode: Option<usize>,
    pub ratio: Option<f64>,
    pub samples: Option<usize>,
    pub t_end: Option<f64>,
    pub perturb: Option<PerturbKind>,
    pub amplitude: Option<f64>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    nu: Option<f64>,
    l: Option<f64>,
    #[serde(rename = "A")]
    a: Option<f64>,
    #[serde(rename = "B")]
    b: Option<f64>,
    out: Option<PathBuf>,
    count: Option<usize>,
    points: Option<usize>,
    cells: Option<usize>,
    mode: Option<usize>,
    ratio: Option<f64>,
    samples: Option<usize>,
    t_end: Option<f64>,
    perturb: Option<PerturbKind>,
    amplitude: Option<f64>,
}

/// Fully resolved configuration for one run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub nu: f64,
    pub l: f64,
    pub a: f64,
    pub b: f64,
    pub out: Option<PathBuf>,
    pub count: usize,
    pub points: usize,
    pub cells: usize,
    pub mode: usize,
    pub ratio: f64,
    pub samples: usize,
    pub t_end: Option<f64>,
    pub perturb: PerturbKind,
    pub amplitude: f64,
}

fn read_file(path: &Path) -> Result<FileConfig, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))
}

fn required(name: &str, flag: Option<f64>, file: Option<f64>) -> Result<f64, CliError> {
    flag.or(file)
        .ok_or_else(|| CliError::Validation(format!("missing --{name} (flag or config key)")))
}

fn positive_count(name: &str, v: usize, min: usize) -> Result<usize, CliError> {
    if v < min {
        Err(CliError::Validation(format!(
            "--{name} must be at least {min}, got {v}"
        )))
    } else {
        Ok(v)
    }
}

impl RunConfig {
    pub fn resolve(common: &CommonArgs, knobs: &Knobs) -> Result<Self, CliError> {
        let file = match &common.config {
            Some(path) => read_file(path)?,
            None => FileConfig::default(),
        };
        let cfg = RunConfig {
            nu: required("nu", common.nu, file.nu)?,
            l: required("l", common.l, file.l)?,
            a: required("A", common.a, file.a)?,
            b: required("B", common.b, file.b)?,
            out: common.out.clone().or(file.out),
            count: knobs.count.or(file.count).unwrap_or(10),
            points: knobs.points.or(file.points).unwrap_or(1001),
            cells: knobs.cells.or(file.cells).unwrap_or(400),
            mode: knobs.mode.or(file.mode).unwrap_or(1),
            ratio: knobs.ratio.or(file.ratio).unwrap_or(1e-3),
            samples: knobs.samples.or(file.samples).unwrap_or(1025),
            t_end: knobs.t_end.or(file.t_end),
            perturb: knobs.perturb.or(file.perturb).unwrap_or(PerturbKind::Default),
            amplitude: knobs.amplitude.or(file.amplitude).unwrap_or(1e-3),
        };
        cfg.validate()
    }

    fn validate(self) -> Result<Self, CliError> {
        positive_count("count", self.count, 1)?;
        positive_count("points", self.points, 2)?;
        positive_count("cells", self.cells, 16)?;
        positive_count("mode", self.mode, 1)?;
        positive_count("samples", self.samples, 2)?;
        if !(self.ratio > 0.0 && self.ratio < 1.0) {
            return Err(CliError::Validation(format!(
                "--ratio must lie in (0, 1), got {}",
                self.ratio
            )));
        }
        if !(self.amplitude.is_finite() && self.amplitude > 0.0) {
            return Err(CliError::Validation(format!(
                "--amplitude must be positive, got {}",
                self.amplitude
            )));
        }
        if let Some(t) = self.t_end {
            if !(t.is_finite() && t > 0.0) {
                return Err(CliError::Validation(format!("--t-end must be positive, got {t}")));
            }
        }
        Ok(self)
    }
}
