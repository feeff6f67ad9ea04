//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use burgers_core::simulate::{run_decay, DecayConfig, Perturbation};
use burgers_core::{
    classify, eval_eigenfunction, eval_stationary, fit_decay_rate, lyapunov_exponents, modal_decay_curve,
    solve_stationary, spectrum, stationary_residual, CaseLabel, ModalSolution, ProblemSpec64,
};

type Outcome = Result<String, String>;

fn spec(nu: f64, l: f64, a: f64, b: f64) -> ProblemSpec64 {
    ProblemSpec64::new(nu, l, a, b).expect("valid spec")
}

/// One spec per case (a)..(e).
fn case_specs() -> [(char, ProblemSpec64); 5] {
    [
        ('a', spec(1.0, 1.0, -1.0, 1.0)),
        ('b', spec(1.0, 1.0, -2.0, -1.0)),
        ('c', spec(1.0, 1.0, 2.0, 3.0)),
        ('d', spec(1.0, 1.0, 1.5, 1.5)),
        ('e', spec(1.0, 1.0, 1.0, -1.0)),
    ]
}

fn check(cond: bool, msg: String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg)
    }
}

fn closed_form_spectrum() -> Outcome {
    let s = spec(1.0, std::f64::consts::PI, 2.0, 2.0);
    let sp = spectrum(&s, 11).map_err(|e| e.to_string())?;
    let mut worst: f64 = ((sp[0].lambda + 1.0) / 1.0).abs();
    for (n, e) in sp.iter().enumerate().skip(1) {
        let exact = (n * n) as f64;
        worst = worst.max(((e.lambda - exact) / exact).abs());
    }
    check(worst < 1e-12, format!("max relative eigenvalue error {worst:.3e}"))?;
    let mu = lyapunov_exponents(&s, 1).map_err(|e| e.to_string())?.mu[0];
    check((mu + 2.0).abs() < 1e-12, format!("mu_1 = {mu:.17e}"))?;
    Ok(format!("max rel err {worst:.2e}, mu_1 = {mu}"))
}

fn classification_table() -> Outcome {
    // A = 3i/10, B = 3j/10 with integer i, j in [-10, 10]; sign of H from integers:
    // 100 H / 3 = 20 (j - i) - 3 i j
    let mut zero_h = 0;
    for i in -10i64..=10 {
        for j in -10i64..=10 {
            let (a, b) = (0.3 * i as f64, 0.3 * j as f64);
            let h = 20 * (j - i) - 3 * i * j;
            let expected = if i > j {
                CaseLabel::HyperTanh
            } else if i == j {
                CaseLabel::Constant
            } else if h == 0 {
                zero_h += 1;
                CaseLabel::Rational
            } else if h > 0 {
                CaseLabel::TrigCot
            } else {
                CaseLabel::HyperCoth
            };
            let got = classify(&spec(1.0, 1.0, a, b));
            check(
                got == expected,
                format!("A={a}, B={b}: got ({got}), expected ({expected})"),
            )?;
        }
    }
    Ok(format!("441/441 agree ({zero_h} separatrix points)"))
}

fn stationarity_residuals() -> Outcome {
    let mut report = Vec::new();
    for (case, s) in case_specs() {
        let p = solve_stationary(&s).map_err(|e| e.to_string())?;
        check(
            p.label.letter() == case,
            format!("expected case ({case}), got ({})", p.label),
        )?;
        let r = stationary_residual(&p, &s, &s.uniform_grid(1000)).map_err(|e| e.to_string())?;
        check(r.first_integral < 1e-9 && r.ode < 1e-9, format!("case ({case}): {r:?}"))?;
        report.push(format!("({case}) {:.1e}/{:.1e}", r.first_integral, r.ode));
    }
    Ok(report.join(", "))
}

/// Sign changes of `X_i` on a fine grid, counted independently of the library scan.
fn oracle_zero_count(s: &ProblemSpec64, f: impl Fn(f64) -> f64) -> usize {
    let n = 40_000;
    let mut last = f(0.0).signum();
    let mut count = 0;
    for x in s.uniform_grid(n).into_iter().skip(1) {
        let v = f(x);
        if v != 0.0 && v.signum() != last {
            count += 1;
            last = v.signum();
        }
    }
    count
}

fn oscillation_certification() -> Outcome {
    for (case, s) in case_specs() {
        let sp = spectrum(&s, 11).map_err(|e| format!("case ({case}): {e}"))?;
        for (i, e) in sp.iter().enumerate() {
            let oracle = oracle_zero_count(&s, |x| eval_eigenfunction(e, &s, x).unwrap());
            check(
                e.zero_count == i && oracle == i,
                format!("case ({case}) i={i}: certified {} oracle {oracle}", e.zero_count),
            )?;
        }
    }
    Ok("5 specs x 11 modes".into())
}

fn route_consistency() -> Outcome {
    let mut worst: f64 = 0.0;
    for (case, s) in case_specs() {
        let p = solve_stationary(&s).map_err(|e| e.to_string())?;
        let ground = spectrum(&s, 2).map_err(|e| e.to_string())?[0];
        let l = s.length();
        let delta = 1e-6 * l;
        let n = 1000;
        let mut sup: f64 = 0.0;
        for j in 0..=n {
            let x = delta + (l - 2.0 * delta) * j as f64 / n as f64;
            let (v, d) = ground.value_and_slope(&s, x);
            let from_spectrum = -2.0 * s.nu() * d / v;
            let from_table = eval_stationary(&p, &s, x).map_err(|e| e.to_string())?;
            sup = sup.max((from_spectrum - from_table).abs());
        }
        check(sup < 1e-8, format!("case ({case}): sup difference {sup:.3e}"))?;
        worst = worst.max(sup);
    }
    Ok(format!("worst sup difference {worst:.2e}"))
}

fn modal_decay() -> Outcome {
    let mut worst: f64 = 0.0;
    for (case, s) in case_specs() {
        for i in 1..=3 {
            let m = ModalSolution::with_default_amplitude(&s, i).map_err(|e| e.to_string())?;
            let mu = m.exponent();
            let t_end = (1e10f64).ln() / mu.abs();
            let times: Vec<f64> = (0..=400).map(|k| t_end * k as f64 / 400.0).collect();
            let curve = modal_decay_curve(&m, &times).map_err(|e| e.to_string())?;
            let fit = fit_decay_rate(&curve);
            let err = ((fit.rate - mu) / mu).abs();
            check(
                fit.reliable && err < 5e-3,
                format!(
                    "case ({case}) i={i}: fitted {} vs mu {mu}, reliable {}",
                    fit.rate, fit.reliable
                ),
            )?;
            worst = worst.max(err);
        }
    }
    Ok(format!("worst relative error {worst:.2e}"))
}

fn pde_cross_validation(max_principle: &mut Vec<(String, bool)>) -> Outcome {
    let s = spec(1.0, 1.0, 1.0, -1.0);
    let mut rates = Vec::new();
    for n in [400, 800] {
        let r = run_decay(&s, &DecayConfig::new(n, Perturbation::Generic { amplitude: 1e-3 }))
            .map_err(|e| e.to_string())?;
        max_principle.push((format!("generic n={n}"), r.max_principle_holds()));
        check(
            r.reliable,
            format!("n={n}: only {} samples in the fit window", r.samples_in_window),
        )?;
        rates.push((r.fitted_rate, r.predicted_mu, r.relative_error));
    }
    let (fit800, mu, err800) = rates[1];
    check(
        err800 < 0.03,
        format!("n=800: fitted {fit800} vs mu_1 {mu} (rel err {err800:.3e})"),
    )?;
    let ratio = (rates[0].0 - mu) / (fit800 - mu);
    check((3.5..=4.5).contains(&ratio), format!("Richardson ratio {ratio}"))?;
    Ok(format!(
        "n=800 rate {fit800:.8} vs mu_1 {mu:.8} (rel err {err800:.2e}), Richardson ratio {ratio:.4}"
    ))
}

fn mode_selection(max_principle: &mut Vec<(String, bool)>) -> Outcome {
    let s = spec(1.0, 1.0, 1.0, -1.0);
    let r = run_decay(
        &s,
        &DecayConfig::new(
            800,
            Perturbation::DiscreteMode {
                index: 2,
                amplitude: 1e-3,
            },
        ),
    )
    .map_err(|e| e.to_string())?;
    max_principle.push(("mode 2 n=800".into(), r.max_principle_holds()));
    let mu1 = lyapunov_exponents(&s, 1).map_err(|e| e.to_string())?.mu[0];
    check(
        r.reliable && r.relative_error < 0.03,
        format!(
            "fitted {} vs mu_2 {} (rel err {:.3e})",
            r.fitted_rate, r.predicted_mu, r.relative_error
        ),
    )?;
    check(
        ((r.fitted_rate - mu1) / mu1).abs() > 0.03,
        format!("rate {} is indistinguishable from mu_1 {mu1}", r.fitted_rate),
    )?;
    Ok(format!(
        "rate {:.6} vs mu_2 {:.6} (rel err {:.2e}); mu_1 = {mu1:.4}",
        r.fitted_rate, r.predicted_mu, r.relative_error
    ))
}

fn max_principle(runs: &[(String, bool)]) -> Outcome {
    check(
        runs.len() == 3,
        format!("expected 3 simulation runs, saw {}", runs.len()),
    )?;
    let failed: Vec<&str> = runs.iter().filter(|r| !r.1).map(|r| r.0.as_str()).collect();
    check(failed.is_empty(), format!("bound exceeded in {failed:?}"))?;
    Ok(format!("{} runs within max(initial, |A|, |B|) + 1e-8", runs.len()))
}

fn main() -> ExitCode {
    let mut runs = Vec::new();
    let mut results: Vec<(usize, &str, Outcome, f64)> = Vec::new();
    let mut run = |id, name, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let outcome = f();
        results.push((id, name, outcome, start.elapsed().as_secs_f64()));
    };
    run(1, "closed-form spectrum", &mut closed_form_spectrum);
    run(2, "classification table", &mut classification_table);
    run(3, "stationarity residuals", &mut stationarity_residuals);
    run(4, "oscillation certification", &mut oscillation_certification);
    run(5, "route consistency", &mut route_consistency);
    run(6, "modal decay", &mut modal_decay);
    run(7, "PDE cross-validation", &mut || pde_cross_validation(&mut runs));
    run(8, "mode selection", &mut || mode_selection(&mut runs));
    run(9, "maximum principle", &mut || max_principle(&runs));

    let mut failures = 0;
    for (id, name, outcome, secs) in &results {
        match outcome {
            Ok(detail) => println!("criterion {id} ({name}): PASS [{secs:.2}s] {detail}"),
            Err(detail) => {
                failures += 1;
                println!("criterion {id} ({name}): FAIL [{secs:.2}s] {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", results.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
