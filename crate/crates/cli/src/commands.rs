use std::path::{Path, PathBuf};

use burgers_core::{
    classify, compute_h, eval_stationary, ground_state, lyapunov_exponents, modal_decay_curve, run_decay,
    solve_stationary, spectrum, DecayConfig, ModalSolution, Perturbation, ProblemSpec64,
};

use crate::config::{PerturbKind, RunConfig};
use crate::output::{csv, destination, emit, json_object, Cell, Json};
use crate::CliError;

fn problem(cfg: &RunConfig) -> Result<ProblemSpec64, CliError> {
    Ok(ProblemSpec64::new(cfg.nu, cfg.l, cfg.a, cfg.b)?)
}

fn write(cfg: &RunConfig, out_dir: Option<&Path>, name: &str, text: &str) -> Result<(), CliError> {
    let target = destination(cfg.out.as_deref(), out_dir, name);
    emit(target.as_deref(), text).map_err(|e| {
        CliError::Io(format!(
            "{}: {e}",
            target.as_deref().unwrap_or(Path::new("<stdout>")).display()
        ))
    })
}

pub fn classify_cmd(cfg: &RunConfig, out_dir: Option<&Path>) -> Result<(), CliError> {
    let spec = problem(cfg)?;
    let h = compute_h(&spec);
    let profile = solve_stationary(&spec)?;
    let ground = ground_state(&spec)?;
    let text = json_object(&[
        ("case", Json::Str(classify(&spec).letter().to_string())),
        ("H", Json::Float(h.value)),
        ("C0", Json::Float(profile.c0)),
        ("k0", Json::Float(profile.k0)),
        ("x0", Json::Float(profile.x0)),
        ("lambda0", Json::Float(ground.lambda)),
    ]);
    write(cfg, out_dir, "classify.json", &text)
}

pub fn stationary_cmd(cfg: &RunConfig, out_dir: Option<&Path>) -> Result<(), CliError> {
    let spec = problem(cfg)?;
    let profile = solve_stationary(&spec)?;
    let rows = spec
        .uniform_grid(cfg.points - 1)
        .into_iter()
        .map(|x| Ok(vec![Cell::Float(x), Cell::Float(eval_stationary(&profile, &spec, x)?)]))
        .collect::<Result<Vec<_>, CliError>>()?;
    write(cfg, out_dir, "stationary.csv", &csv(&["x", "u"], rows))
}

pub fn spectrum_cmd(cfg: &RunConfig, out_dir: Option<&Path>) -> Result<(), CliError> {
    let spec = problem(cfg)?;
    let entries = spectrum(&spec, cfg.count.max(2))?;
    let rows = entries.iter().take(cfg.count).map(|e| {
        vec![
            Cell::Int(e.index),
            Cell::Text(e.branch.name()),
            Cell::Float(e.xi),
            Cell::Float(e.lambda),
            Cell::Int(e.zero_count),
        ]
    });
    write(
        cfg,
        out_dir,
        "spectrum.csv",
        &csv(&["i", "branch", "xi", "lambda", "zero_count"], rows),
    )
}

pub fn lyapunov_cmd(cfg: &RunConfig, out_dir: Option<&Path>) -> Result<(), CliError> {
    let spec = problem(cfg)?;
    let exponents = lyapunov_exponents(&spec, cfg.count)?;
    let rows = exponents
        .mu
        .iter()
        .enumerate()
        .map(|(i, &mu)| vec![Cell::Int(i + 1), Cell::Float(mu)]);
    write(cfg, out_dir, "lyapunov.csv", &csv(&["i", "mu"], rows))
}

pub fn modal_cmd(cfg: &RunConfig, out_dir: Option<&Path>) -> Result<(), CliError> {
    let spec = problem(cfg)?;
    let m = ModalSolution::with_amplitude_ratio(&spec, cfg.mode, cfg.ratio)?;
    let t_end = cfg.t_end.unwrap_or_else(|| 1e10f64.ln() / m.exponent().abs());
    let last = (cfg.samples - 1) as f64;
    let times: Vec<f64> = (0..cfg.samples).map(|k| t_end * k as f64 / last).collect();
    let curve = modal_decay_curve(&m, &times)?;
    let rows = curve.into_iter().map(|(t, d)| vec![Cell::Float(t), Cell::Float(d)]);
    write(cfg, out_dir, "modal.csv", &csv(&["t", "D"], rows))
}

/// Prints the JSON summary; the `(t, D)` table goes to `--out` or the
/// output directory, with the summary alongside it as `<stem>.json`.
pub fn evolve_cmd(cfg: &RunConfig, out_dir: Option<&Path>) -> Result<(), CliError> {
    let spec = problem(cfg)?;
    let perturbation = match cfg.perturb {
        PerturbKind::Default => Perturbation::Generic {
            amplitude: cfg.amplitude,
        },
        PerturbKind::Mode => Perturbation::DiscreteMode {
            index: cfg.mode,
            amplitude: cfg.amplitude,
        },
        PerturbKind::Modal => Perturbation::Modal {
            index: cfg.mode,
            ratio: cfg.ratio,
        },
    };
    let mut config = DecayConfig::new(cfg.cells, perturbation);
    config.t_end = cfg.t_end;
    let r = run_decay(&spec, &config)?;
    let summary = json_object(&[
        ("cells", Json::Int(cfg.cells)),
        ("mode", Json::Int(r.mode_index)),
        ("fitted_rate", Json::Float(r.fitted_rate)),
        ("predicted_mu", Json::Float(r.predicted_mu)),
        ("relative_error", Json::Float(r.relative_error)),
        ("samples_in_window", Json::Int(r.samples_in_window)),
        ("reliable", Json::Bool(r.reliable)),
        ("steady_offset", Json::Float(r.steady_offset)),
        ("max_abs_u", Json::Float(r.max_abs_u)),
        ("max_abs_bound", Json::Float(r.max_abs_bound)),
        ("max_principle", Json::Bool(r.max_principle_holds())),
        ("steps", Json::Int(r.steps)),
    ]);
    let table_path = match destination(cfg.out.as_deref(), out_dir, "evolve.csv") {
        Some(p) => Some(p),
        None if cfg.out.is_some() => {
            return Err(CliError::Validation(
                "evolve prints its summary on standard output; --out needs a file path".into(),
            ))
        }
        None => None,
    };
    if let Some(path) = table_path {
        let rows = r.samples.iter().map(|&(t, d)| vec![Cell::Float(t), Cell::Float(d)]);
        let table = csv(&["t", "D"], rows);
        let io = |p: &Path, e: std::io::Error| CliError::Io(format!("{}: {e}", p.display()));
        emit(Some(&path), &table).map_err(|e| io(&path, e))?;
        let json_path: PathBuf = path.with_extension("json");
        emit(Some(&json_path), &summary).map_err(|e| io(&json_path, e))?;
    }
    emit(None, &summary).map_err(|e| CliError::Io(format!("<stdout>: {e}")))
}
