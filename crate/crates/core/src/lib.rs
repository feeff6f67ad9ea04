//! Exact stationary solutions, Robin spectra and Lyapunov exponents for the
//! viscous Burgers equation `u_t + u u_x = nu u_xx` on `[0, l]` with
//! Dirichlet data `u(0,t) = A`, `u(l,t) = B`.
//!
//! All computations are generic over [`Scalar`] (`f32` or `f64`); the `*64`
//! aliases below fix the scalar to `f64`.
//!
//! ```
//! use burgers_core::{lyapunov_exponents, ProblemSpec64};
//!
//! let spec = ProblemSpec64::new(1.0, std::f64::consts::PI, 2.0, 2.0).unwrap();
//! let mu = lyapunov_exponents(&spec, 3).unwrap().mu;
//! assert!((mu[0] + 2.0).abs() < 1e-12);
//! ```

// `!(x > 0)` style guards are used on purpose: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod fit;
pub mod lyapunov;
pub mod model;
pub mod roots;
pub mod scalar;
pub mod simulate;
pub mod spectrum;
pub mod stationary;

pub use error::{BurgersError, Result};
pub use fit::{fit_decay_rate, DecayFit, FitWindow};
pub use lyapunov::{
    cole_hopf_numeric, eval_modal_solution, lyapunov_exponents, modal_decay_curve, LyapunovSpectrum, ModalSolution,
};
pub use model::{classify, compute_h, CaseLabel, HQuantity, ProblemSpec};
pub use scalar::Scalar;
pub use simulate::{
    discrete_stationary, distance_to_stationary, evolve, run_decay, stability_bound, step, DecayConfig, DecayReport,
    GridField, Perturbation,
};
pub use spectrum::{
    build_pq, count_interior_zeros, eval_eigenfunction, eval_eigenfunction_slope, ground_state, hyperbolic_roots,
    spectrum, trig_roots, Branch, HyperbolicForm, RobinCoefficients, SpectrumEntry,
};
pub use stationary::{eval_stationary, solve_stationary, stationary_residual, ResidualReport, StationaryProfile};

pub type ProblemSpec64 = ProblemSpec<f64>;
pub type ProblemSpec32 = ProblemSpec<f32>;
pub type StationaryProfile64 = StationaryProfile<f64>;
pub type SpectrumEntry64 = SpectrumEntry<f64>;
pub type RobinCoefficients64 = RobinCoefficients<f64>;
pub type LyapunovSpectrum64 = LyapunovSpectrum<f64>;
pub type ModalSolution64 = ModalSolution<f64>;
pub type GridField64 = GridField<f64>;
pub type DecayReport64 = DecayReport<f64>;
pub type DecayConfig64 = DecayConfig<f64>;
