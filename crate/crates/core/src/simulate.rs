//! Explicit finite-difference solver for the Dirichlet problem and empirical
//! decay-rate measurement.
//!
//! The semi-discretization is
//!
//! ```text
//! du_j/dt = -(u_{j+1}^2 - u_{j-1}^2) / (4h) + nu (u_{j+1} - 2 u_j + u_{j-1}) / h^2
//! ```
//!
//! with forward Euler in time and `u_0 = A`, `u_N = B` pinned.
//!
//! Decay runs measure the distance to the discrete steady state of this
//! scheme (computed by Newton's method), not to the exact profile: the latter
//! differs from the former by `O(h^2)` and would put a floor under the
//! measured distance. The run evolves the deviation `w = u - u_h^S` in the
//! algebraically expanded form of the same update, so rounding scales with
//! `|w|` rather than with `|u|`.

use crate::error::{BurgersError, Result};
use crate::fit::{fit_decay_rate_in, FitWindow};
use crate::lyapunov::{lyapunov_exponents, ModalSolution};
use crate::model::ProblemSpec;
use crate::scalar::Scalar;
use crate::spectrum::spectrum;
use crate::stationary::{solve_stationary, StationaryProfile};

/// Fraction of the stability limit used for automatic steps.
pub const CFL_SAFETY: f64 = 0.9;

/// Node values of `u` on a uniform grid over `[0, l]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridField<T> {
    n_cells: usize,
    h: T,
    values: Vec<T>,
    time: T,
}

impl<T: Scalar> GridField<T> {
    /// Samples `f` at the nodes. The sampled endpoint values must match the
    /// boundary data to `1e-12 (1 + |A| + |B|)`; they are then pinned exactly.
    pub fn from_fn(spec: &ProblemSpec<T>, n_cells: usize, f: impl Fn(T) -> T) -> Result<Self> {
        let values = spec.uniform_grid(n_cells.max(1)).into_iter().map(f).collect();
        Self::from_values(spec, values, T::zero())
    }

    pub fn from_values(spec: &ProblemSpec<T>, mut values: Vec<T>, time: T) -> Result<Self> {
        if values.len() < 17 {
            return Err(BurgersError::InvalidArgument(format!(
                "grid needs at least 16 cells, got {}",
                values.len().saturating_sub(1)
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(BurgersError::InvalidArgument("field values must be finite".into()));
        }
        let n_cells = values.len() - 1;
        let tol = T::lit(1e-12).max(T::lit(16.0) * T::epsilon()) * (T::one() + spec.left().abs() + spec.right().abs());
        let (first, last) = (values[0], values[n_cells]);
        if (first - spec.left()).abs() > tol || (last - spec.right()).abs() > tol {
            return Err(BurgersError::InvalidArgument(format!(
                "field endpoints ({first}, {last}) do not match boundary data ({}, {})",
                spec.left(),
                spec.right()
            )));
        }
        values[0] = spec.left();
        values[n_cells] = spec.right();
        Ok(Self {
            n_cells,
            h: spec.length() / T::from_usize_lossy(n_cells),
            values,
            time,
        })
    }

    /// Exact stationary profile sampled at the nodes.
    pub fn stationary(spec: &ProblemSpec<T>, profile: &StationaryProfile<T>, n_cells: usize) -> Result<Self> {
        Self::from_fn(spec, n_cells, |x| profile.jet(spec, x).0)
    }

    pub fn n_cells(&self) -> usize {
        self.n_cells
    }

    pub fn h(&self) -> T {
        self.h
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn time(&self) -> T {
        self.time
    }

    /// Coordinate of node `j`.
    pub fn node(&self, j: usize) -> T {
        T::from_usize_lossy(j) * self.h
    }

    pub fn max_abs(&self) -> T {
        max_abs(&self.values)
    }
}

fn max_abs<T: Scalar>(v: &[T]) -> T {
    v.iter().fold(T::zero(), |m, x| m.max(x.abs()))
}

/// `0.9 min(h^2 / (2 nu), h / max|u|)`.
pub fn stability_bound<T: Scalar>(field: &GridField<T>, spec: &ProblemSpec<T>) -> T {
    step_bound(field.h, spec.nu(), field.max_abs())
}

fn step_bound<T: Scalar>(h: T, nu: T, umax: T) -> T {
    let diffusive = h * h / (nu + nu);
    let advective = h / (umax + T::epsilon());
    T::lit(CFL_SAFETY) * diffusive.min(advective)
}

/// Automatic step: the stability bound, further capped by `nu / max|u|^2`
/// (the advection-diffusion limit of forward Euler with central fluxes).
fn auto_dt<T: Scalar>(h: T, nu: T, umax: T) -> T {
    step_bound(h, nu, umax).min(T::lit(CFL_SAFETY) * nu / (umax * umax + T::min_positive_value()))
}

/// Interior right-hand side of the semi-discrete scheme.
fn rhs<T: Scalar>(u: &[T], h: T, nu: T, out: &mut [T]) {
    let n = u.len() - 1;
    let adv = (T::lit(4.0) * h).recip();
    let dif = nu / (h * h);
    out[0] = T::zero();
    out[n] = T::zero();
    for j in 1..n {
        let (l, c, r) = (u[j - 1], u[j], u[j + 1]);
        out[j] = -(r * r - l * l) * adv + dif * (r - (c + c) + l);
    }
}

/// Right-hand side for the deviation `w` around a base state `s`:
/// `L(s + w) - L(s)` expanded so no `O(|s|)` terms cancel.
fn rhs_deviation<T: Scalar>(s: &[T], w: &[T], h: T, nu: T, out: &mut [T]) {
    let n = w.len() - 1;
    let adv = (T::lit(4.0) * h).recip();
    let dif = nu / (h * h);
    out[0] = T::zero();
    out[n] = T::zero();
    for j in 1..n {
        let (wl, wc, wr) = (w[j - 1], w[j], w[j + 1]);
        let flux = (s[j + 1] + s[j + 1] + wr) * wr - (s[j - 1] + s[j - 1] + wl) * wl;
        out[j] = -flux * adv + dif * (wr - (wc + wc) + wl);
    }
}

/// One forward-Euler step of size `dt`.
pub fn step<T: Scalar>(field: &GridField<T>, spec: &ProblemSpec<T>, dt: T) -> Result<GridField<T>> {
    let bound = stability_bound(field, spec);
    if !(dt > T::zero()) || dt > bound * (T::one() + T::lit(1e-12)) {
        return Err(BurgersError::UnstableTimeStep {
            dt: dt.to_f64_lossy(),
            bound: bound.to_f64_lossy(),
        });
    }
    let mut k = vec![T::zero(); field.values.len()];
    rhs(&field.values, field.h, spec.nu(), &mut k);
    let mut values: Vec<T> = field.values.iter().zip(&k).map(|(&u, &du)| u + dt * du).collect();
    values[0] = spec.left();
    values[field.n_cells] = spec.right();
    Ok(GridField {
        n_cells: field.n_cells,
        h: field.h,
        values,
        time: field.time + dt,
    })
}

/// Steps to `t_end` with automatic `dt`, keeping the initial field and every
/// `sample_every`-th step (plus the final state).
pub fn evolve<T: Scalar>(
    spec: &ProblemSpec<T>,
    initial: &GridField<T>,
    t_end: T,
    sample_every: usize,
) -> Result<Vec<GridField<T>>> {
    if initial.values[0] != spec.left() || initial.values[initial.n_cells] != spec.right() {
        return Err(BurgersError::InvalidArgument(
            "initial field violates the boundary data".into(),
        ));
    }
    let every = sample_every.max(1);
    let bound0 = initial.max_abs().max(spec.left().abs()).max(spec.right().abs());
    let limit = T::lit(10.0) * bound0.max(T::min_positive_value());
    let nu = spec.nu();
    let mut snapshots = vec![initial.clone()];
    let mut field = initial.clone();
    let mut k = vec![T::zero(); field.values.len()];
    let mut steps = 0usize;
    while field.time < t_end {
        let umax = field.max_abs();
        let dt = auto_dt(field.h, nu, umax).min(t_end - field.time);
        rhs(&field.values, field.h, nu, &mut k);
        for (u, du) in field.values.iter_mut().zip(&k) {
            *u = *u + dt * *du;
        }
        field.time = if t_end - field.time <= dt {
            t_end
        } else {
            field.time + dt
        };
        steps += 1;
        let umax = field.max_abs();
        if !(umax <= limit) {
            return Err(BurgersError::BlowUp {
                t: field.time.to_f64_lossy(),
                max_abs: umax.to_f64_lossy(),
                limit: limit.to_f64_lossy(),
            });
        }
        if steps.is_multiple_of(every) || field.time >= t_end {
            snapshots.push(field.clone());
        }
    }
    Ok(snapshots)
}

/// `max_j |u_j - u^S(x_j)|`.
pub fn distance_to_stationary<T: Scalar>(
    field: &GridField<T>,
    profile: &StationaryProfile<T>,
    spec: &ProblemSpec<T>,
) -> T {
    field.values.iter().enumerate().fold(T::zero(), |d, (j, &u)| {
        d.max((u - profile.jet(spec, field.node(j).min(spec.length())).0).abs())
    })
}

/// Thomas algorithm for a tridiagonal system; `sub[0]` and `sup[n-1]` are ignored.
fn solve_tridiagonal<T: Scalar>(sub: &[T], diag: &[T], sup: &[T], rhs: &mut [T]) {
    let n = diag.len();
    let mut c = vec![T::zero(); n];
    let mut beta = diag[0];
    c[0] = sup[0] / beta;
    rhs[0] = rhs[0] / beta;
    for i in 1..n {
        beta = diag[i] - sub[i] * c[i - 1];
        c[i] = sup[i] / beta;
        rhs[i] = (rhs[i] - sub[i] * rhs[i - 1]) / beta;
    }
    for i in (0..n - 1).rev() {
        rhs[i] = rhs[i] - c[i] * rhs[i + 1];
    }
}

/// Linearization of the interior right-hand side at `s`, as
/// `(sub, diag, sup)` over the unknowns `1..n`.
fn jacobian<T: Scalar>(s: &[T], h: T, nu: T) -> (Vec<T>, Vec<T>, Vec<T>) {
    let n = s.len() - 1;
    let inv_2h = (h + h).recip();
    let dif = nu / (h * h);
    let m = n - 1;
    let mut sub = vec![T::zero(); m];
    let mut diag = vec![-(dif + dif); m];
    let mut sup = vec![T::zero(); m];
    for i in 0..m {
        let j = i + 1;
        sub[i] = s[j - 1] * inv_2h + dif;
        sup[i] = -s[j + 1] * inv_2h + dif;
        diag[i] = -(dif + dif);
    }
    (sub, diag, sup)
}

/// Steady state of the discrete scheme, by Newton's method from the exact
/// profile.
pub fn discrete_stationary<T: Scalar>(
    spec: &ProblemSpec<T>,
    profile: &StationaryProfile<T>,
    n_cells: usize,
) -> Result<GridField<T>> {
    let mut field = GridField::stationary(spec, profile, n_cells)?;
    let nu = spec.nu();
    let h = field.h;
    let mut r = vec![T::zero(); n_cells + 1];
    let scale = T::one() + field.max_abs();
    for _ in 0..50 {
        rhs(&field.values, h, nu, &mut r);
        let (sub, diag, sup) = jacobian(&field.values, h, nu);
        let mut delta: Vec<T> = r[1..n_cells].iter().map(|&v| -v).collect();
        solve_tridiagonal(&sub, &diag, &sup, &mut delta);
        let size = max_abs(&delta);
        for (u, d) in field.values[1..n_cells].iter_mut().zip(&delta) {
            *u = *u + *d;
        }
        if size <= T::lit(4.0) * T::epsilon() * scale {
            return Ok(field);
        }
    }
    rhs(&field.values, h, nu, &mut r);
    Err(BurgersError::NoConvergence {
        residual: max_abs(&r).to_f64_lossy(),
    })
}

/// Discrete eigenvector of the scheme's linearization at `base` closest to
/// `shift`, by inverse iteration from `seed` (interior values `1..n`).
fn discrete_mode<T: Scalar>(base: &[T], h: T, nu: T, shift: T, seed: Vec<T>) -> Vec<T> {
    let (sub, mut diag, sup) = jacobian(base, h, nu);
    for d in diag.iter_mut() {
        *d = *d - shift;
    }
    let mut v = seed;
    let seed_sign = v.clone();
    for _ in 0..8 {
        solve_tridiagonal(&sub, &diag, &sup, &mut v);
        let norm = max_abs(&v);
        v.iter_mut().for_each(|x| *x = *x / norm);
    }
    let overlap = v.iter().zip(&seed_sign).fold(T::zero(), |acc, (a, b)| acc + *a * *b);
    if overlap < T::zero() {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    v
}

/// Initial perturbations of the stationary state for decay runs. All vanish
/// at both endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Perturbation<T> {
    /// `amplitude sin(pi x / l) exp(-4 (x/l - 0.4)^2)`: excites every mode.
    Generic { amplitude: T },
    /// `amplitude` times the scheme's own discrete eigenvector for mode `index`
    /// (max-abs normalized), so only that mode is present initially.
    DiscreteMode { index: usize, amplitude: T },
    /// The velocity of a modal solution `u_i(x, 0)` minus `u^S`.
    Modal { index: usize, ratio: T },
}

impl<T: Scalar> Perturbation<T> {
    /// Index of the exponent the run is expected to decay at.
    pub fn mode_index(&self) -> usize {
        match *self {
            Perturbation::Generic { .. } => 1,
            Perturbation::DiscreteMode { index, .. } | Perturbation::Modal { index, .. } => index,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecayConfig<T> {
    pub n_cells: usize,
    pub perturbation: Perturbation<T>,
    /// Defaults to the time for the predicted mode to decay by `1e-11`.
    pub t_end: Option<T>,
}

impl<T: Scalar> DecayConfig<T> {
    pub fn new(n_cells: usize, perturbation: Perturbation<T>) -> Self {
        Self {
            n_cells,
            perturbation,
            t_end: None,
        }
    }
}

/// Result of a decay run.
#[derive(Debug, Clone, PartialEq)]
pub struct DecayReport<T> {
    /// `(t, D)` with `D = max_j |u_j - u_h^S(x_j)|`, the distance to the
    /// discrete steady state.
    pub samples: Vec<(T, T)>,
    /// `(t, max_j |u_j - u^S(x_j)|)`, the distance to the exact profile.
    pub exact_distance: Vec<(T, T)>,
    pub fitted_rate: T,
    pub predicted_mu: T,
    pub relative_error: T,
    pub fit_window: FitWindow<T>,
    pub samples_in_window: usize,
    pub reliable: bool,
    pub mode_index: usize,
    /// `max_j |u_h^S(x_j) - u^S(x_j)|`.
    pub steady_offset: T,
    /// Largest node magnitude seen during the run.
    pub max_abs_u: T,
    /// `max(max|u(., 0)|, |A|, |B|)`.
    pub max_abs_bound: T,
    pub steps: usize,
}

impl<T: Scalar> DecayReport<T> {
    /// Whether `max|u|` stayed below `max(initial, |A|, |B|) + 1e-8 scale`.
    pub fn max_principle_holds(&self) -> bool {
        self.max_abs_u <= self.max_abs_bound + T::lit(1e-8) * self.max_abs_bound.max(T::one())
    }
}

fn generic_shape<T: Scalar>(x: T, l: T) -> T {
    let s = x / l;
    let c = s - T::lit(0.4);
    (T::PI() * s).sin() * (-T::lit(4.0) * c * c).exp()
}

/// Perturbs the stationary state, evolves the deviation, and fits the decay
/// rate of `max_j |u_j - u_h^S|` against the predicted exponent.
pub fn run_decay<T: Scalar>(spec: &ProblemSpec<T>, config: &DecayConfig<T>) -> Result<DecayReport<T>> {
    let n = config.n_cells;
    if n < 16 {
        return Err(BurgersError::InvalidArgument(format!(
            "need at least 16 cells, got {n}"
        )));
    }
    let mode_index = config.perturbation.mode_index();
    if mode_index == 0 {
        return Err(BurgersError::InvalidArgument(
            "perturbation mode index must be at least 1".into(),
        ));
    }
    let profile = solve_stationary(spec)?;
    let exponents = lyapunov_exponents(spec, mode_index)?;
    let predicted_mu = exponents.mu[mode_index - 1];
    let base = discrete_stationary(spec, &profile, n)?;
    let s = base.values.clone();
    let h = base.h;
    let nu = spec.nu();
    let exact: Vec<T> = (0..=n)
        .map(|j| profile.jet(spec, base.node(j).min(spec.length())).0)
        .collect();
    let steady_offset = s.iter().zip(&exact).fold(T::zero(), |d, (a, b)| d.max((*a - *b).abs()));

    let mut w: Vec<T> = match config.perturbation {
        Perturbation::Generic { amplitude } => (0..=n)
            .map(|j| amplitude * generic_shape(base.node(j), spec.length()))
            .collect(),
        Perturbation::DiscreteMode { index, amplitude } => {
            let entries = spectrum(spec, (index + 1).max(2))?;
            let (ground, mode) = (entries[0], entries[index]);
            // continuous linear shape -2 nu (X_i / X_0)' seeds the inverse iteration
            let seed: Vec<T> = (1..n)
                .map(|j| {
                    let x = base.node(j);
                    let (g, dg) = ground.value_and_slope(spec, x);
                    let (m, dm) = mode.value_and_slope(spec, x);
                    -(nu + nu) * (dm * g - m * dg) / (g * g)
                })
                .collect();
            let v = discrete_mode(&s, h, nu, predicted_mu, seed);
            let mut w = vec![T::zero(); n + 1];
            for (dst, src) in w[1..n].iter_mut().zip(&v) {
                *dst = amplitude * *src;
            }
            w
        }
        Perturbation::Modal { index, ratio } => {
            let m = ModalSolution::with_amplitude_ratio(spec, index, ratio)?;
            let mut w: Vec<T> = (0..=n)
                .map(|j| {
                    let x = base.node(j).min(spec.length());
                    let (phi, dphi) = m.phi(x, T::zero());
                    -(nu + nu) * dphi / phi - exact[j]
                })
                .collect();
            w[0] = T::zero();
            w[n] = T::zero();
            w
        }
    };
    w[0] = T::zero();
    w[n] = T::zero();

    let t_end = config.t_end.unwrap_or_else(|| T::lit(1e11).ln() / predicted_mu.abs());
    let initial_u: Vec<T> = s.iter().zip(&w).map(|(a, b)| *a + *b).collect();
    let max_abs_bound = max_abs(&initial_u).max(spec.left().abs()).max(spec.right().abs());
    let limit = T::lit(10.0) * max_abs_bound.max(T::min_positive_value());
    let dt0 = auto_dt(h, nu, max_abs_bound);
    let total_steps = (t_end / dt0).ceil().to_f64_lossy().max(1.0) as usize;
    let every = (total_steps / 1000).max(1);

    let distance = |w: &[T]| max_abs(w);
    let exact_dist = |w: &[T]| {
        s.iter()
            .zip(w)
            .zip(&exact)
            .fold(T::zero(), |d, ((a, b), c)| d.max((*a + *b - *c).abs()))
    };
    let mut samples = vec![(T::zero(), distance(&w))];
    let mut exact_distance = vec![(T::zero(), exact_dist(&w))];
    let mut k = vec![T::zero(); n + 1];
    let mut t = T::zero();
    let mut steps = 0usize;
    let mut max_abs_u = max_abs(&initial_u);
    while t < t_end {
        let umax = s.iter().zip(&w).fold(T::zero(), |m, (a, b)| m.max((*a + *b).abs()));
        max_abs_u = max_abs_u.max(umax);
        if !(umax <= limit) {
            return Err(BurgersError::BlowUp {
                t: t.to_f64_lossy(),
                max_abs: umax.to_f64_lossy(),
                limit: limit.to_f64_lossy(),
            });
        }
        let dt = auto_dt(h, nu, umax).min(t_end - t);
        rhs_deviation(&s, &w, h, nu, &mut k);
        for (wj, kj) in w.iter_mut().zip(&k) {
            *wj = *wj + dt * *kj;
        }
        t = if t_end - t <= dt { t_end } else { t + dt };
        steps += 1;
        if steps.is_multiple_of(every) || t >= t_end {
            samples.push((t, distance(&w)));
            exact_distance.push((t, exact_dist(&w)));
        }
    }
    let umax = s.iter().zip(&w).fold(T::zero(), |m, (a, b)| m.max((*a + *b).abs()));
    max_abs_u = max_abs_u.max(umax);

    let scale = samples[0].1;
    let fit = fit_decay_rate_in(&samples, FitWindow::relative(scale), scale);
    Ok(DecayReport {
        relative_error: ((fit.rate - predicted_mu) / predicted_mu).abs(),
        fitted_rate: fit.rate,
        predicted_mu,
        fit_window: fit.window,
        samples_in_window: fit.samples_used,
        reliable: fit.reliable,
        mode_index,
        steady_offset,
        max_abs_u,
        max_abs_bound,
        steps,
        samples,
        exact_distance,
    })
}
