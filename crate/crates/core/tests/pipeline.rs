use approx::assert_relative_eq;
use burgers_core::simulate::{discrete_stationary, run_decay, DecayConfig, Perturbation};
use burgers_core::{
    classify, eval_modal_solution, evolve, ground_state, lyapunov_exponents, solve_stationary, spectrum, GridField,
    ModalSolution, ProblemSpec32, ProblemSpec64,
};

#[test]
fn single_precision_matches_double() {
    for (a, b) in [(-1.0, 1.0), (1.0, -1.0), (1.0, 3.0), (2.0, 2.0)] {
        let s64 = ProblemSpec64::new(0.5, 1.5, a, b).unwrap();
        let s32 = ProblemSpec32::new(0.5, 1.5, a as f32, b as f32).unwrap();
        assert_eq!(classify(&s64), classify(&s32));
        let l64 = lyapunov_exponents(&s64, 3).unwrap();
        let l32 = lyapunov_exponents(&s32, 3).unwrap();
        for (m64, m32) in l64.mu.iter().zip(&l32.mu) {
            assert_relative_eq!(*m64, *m32 as f64, max_relative = 1e-4);
        }
        let p32 = solve_stationary(&s32).unwrap();
        let p64 = solve_stationary(&s64).unwrap();
        assert_relative_eq!(p64.k0, p32.k0 as f64, max_relative = 1e-4, epsilon = 1e-6);
    }
}

#[test]
fn ground_state_is_first_spectrum_entry() {
    for (a, b) in [(-1.0, 1.0), (1.0, -1.0), (1.0, 3.0), (-2.0, -1.0), (0.5, 0.5)] {
        let s = ProblemSpec64::new(1.0, 1.0, a, b).unwrap();
        assert_eq!(ground_state(&s).unwrap(), spectrum(&s, 2).unwrap()[0]);
    }
}

#[test]
fn modal_solution_under_the_scheme() {
    // the scheme started on an exact modal solution follows its distance curve
    let s = ProblemSpec64::new(1.0, 1.0, -1.0, 1.0).unwrap();
    let m = ModalSolution::with_amplitude_ratio(&s, 1, 0.2).unwrap();
    let init = GridField::from_fn(&s, 400, |x| eval_modal_solution(&m, x, 0.0).unwrap()).unwrap();
    let snaps = evolve(&s, &init, 0.3, 2000).unwrap();
    let last = snaps.last().unwrap();
    for (j, &u) in last.values().iter().enumerate().step_by(20) {
        let x = last.node(j).min(1.0);
        let exact = eval_modal_solution(&m, x, last.time()).unwrap();
        assert!((u - exact).abs() < 1e-4, "x={x}: {u} vs {exact}");
    }
}

#[test]
fn decay_run_reports_consistent_quantities() {
    let s = ProblemSpec64::new(0.5, 2.0, 0.5, 1.5).unwrap();
    let r = run_decay(&s, &DecayConfig::new(128, Perturbation::Generic { amplitude: 1e-2 })).unwrap();
    let p = solve_stationary(&s).unwrap();
    let steady = discrete_stationary(&s, &p, 128).unwrap();
    assert!(r.reliable);
    assert!(r.relative_error < 0.01, "{}", r.relative_error);
    assert!(r.max_principle_holds());
    assert_eq!(r.mode_index, 1);
    assert_eq!(r.predicted_mu, lyapunov_exponents(&s, 1).unwrap().mu[0]);
    assert!(r.steady_offset > 0.0 && r.steady_offset < 1e-3);
    assert!(steady
        .values()
        .iter()
        .zip(steady.values().iter().skip(1))
        .all(|(u, v)| v > u));
    let (t_last, d_last) = *r.samples.last().unwrap();
    assert!(t_last > 0.0 && d_last < 1e-10 * r.samples[0].1);
}

#[test]
fn modal_perturbation_decays_at_requested_mode() {
    let s = ProblemSpec64::new(1.0, 1.0, 1.0, -1.0).unwrap();
    let r = run_decay(
        &s,
        &DecayConfig::new(
            200,
            Perturbation::DiscreteMode {
                index: 3,
                amplitude: 1e-4,
            },
        ),
    )
    .unwrap();
    assert_eq!(r.mode_index, 3);
    assert!(r.relative_error < 0.03, "{} vs {}", r.fitted_rate, r.predicted_mu);
}
