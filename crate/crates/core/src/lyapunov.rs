//! Lyapunov exponents, modal solutions and the Cole-Hopf map.
//!
//! Every solution of the Dirichlet problem is `u = -2 nu phi_x / phi` for a
//! positive heat-equation solution `phi = sum_i alpha_i X_i(x) exp(-nu lambda_i t)`.
//! The distance to the stationary profile decays like
//! `exp(-nu (lambda_n - lambda_0) t)` where `n` is the first excited term
//! present, so the exponents are `mu_i = -nu (lambda_i - lambda_0)`, `i >= 1`,
//! measured in the max-abs norm on `[0, l]`.
//!
//! A modal solution keeps only the ground term and one excited term:
//!
//! ```text
//! u_i(x,t) = -2 nu (c X_0'(x) + alpha X_i'(x) E(t)) / (c X_0(x) + alpha X_i(x) E(t)),
//! E(t) = exp(-nu (lambda_i - lambda_0) t).
//! ```

use crate::error::{BurgersError, Result};
use crate::model::ProblemSpec;
use crate::scalar::Scalar;
use crate::spectrum::{spectrum, SpectrumEntry};
use crate::stationary::{solve_stationary, StationaryProfile};

/// Grid size used by [`modal_decay_curve`].
pub const MODAL_CURVE_POINTS: usize = 1025;

#[derive(Debug, Clone, PartialEq)]
pub struct LyapunovSpectrum<T> {
    /// `mu_i` for `i = 1..=n`, stored at position `i - 1`.
    pub mu: Vec<T>,
    /// The `n + 1` eigenpairs the exponents were computed from.
    pub spectrum: Vec<SpectrumEntry<T>>,
}

pub fn lyapunov_exponents<T: Scalar>(spec: &ProblemSpec<T>, n: usize) -> Result<LyapunovSpectrum<T>> {
    if n == 0 {
        return Err(BurgersError::InvalidArgument(
            "exponent count must be at least 1".into(),
        ));
    }
    let entries = spectrum(spec, n + 1)?;
    let lambda0 = entries[0].lambda;
    let mu: Vec<T> = entries[1..].iter().map(|e| -spec.nu() * (e.lambda - lambda0)).collect();
    debug_assert!(mu.iter().all(|&m| m < T::zero()));
    debug_assert!(mu.windows(2).all(|w| w[1] < w[0]));
    Ok(LyapunovSpectrum { mu, spectrum: entries })
}

/// `phi = c X_0 exp(-nu lambda_0 t) + alpha X_i exp(-nu lambda_i t)` and the
/// velocity it generates.
#[derive(Debug, Clone, PartialEq)]
pub struct ModalSolution<T> {
    pub spec: ProblemSpec<T>,
    pub ground: SpectrumEntry<T>,
    pub mode: SpectrumEntry<T>,
    pub c_ground: T,
    pub alpha: T,
    pub profile: StationaryProfile<T>,
}

impl<T: Scalar> ModalSolution<T> {
    /// Requires `c_ground != 0` and `|alpha| < min|X_0| |c_ground| / max|X_i|`,
    /// which keeps `phi` of one sign on `[0, l]` for all `t >= 0`.
    pub fn new(spec: &ProblemSpec<T>, mode_index: usize, c_ground: T, alpha: T) -> Result<Self> {
        if mode_index == 0 {
            return Err(BurgersError::InvalidArgument(
                "modal solutions need an excited mode (index >= 1)".into(),
            ));
        }
        if c_ground == T::zero() || !c_ground.is_finite() || !alpha.is_finite() {
            return Err(BurgersError::InvalidArgument(
                "ground amplitude must be finite and nonzero".into(),
            ));
        }
        let entries = spectrum(spec, (mode_index + 1).max(2))?;
        let ground = entries[0];
        let mode = entries[mode_index];
        let limit = Self::amplitude_limit(spec, &ground, &mode) * c_ground.abs();
        if alpha.abs() >= limit {
            return Err(BurgersError::InvalidArgument(format!(
                "|alpha| = {} must stay below {} to keep phi positive",
                alpha.abs(),
                limit
            )));
        }
        let profile = solve_stationary(spec)?;
        Ok(Self {
            spec: *spec,
            ground,
            mode,
            c_ground,
            alpha,
            profile,
        })
    }

    /// `c_ground = 1`, `alpha = 1e-3 min|X_0| / max|X_i|`.
    pub fn with_default_amplitude(spec: &ProblemSpec<T>, mode_index: usize) -> Result<Self> {
        Self::with_amplitude_ratio(spec, mode_index, T::lit(1e-3))
    }

    /// `c_ground = 1`, `alpha = ratio min|X_0| / max|X_i|` with `0 < |ratio| < 1`.
    pub fn with_amplitude_ratio(spec: &ProblemSpec<T>, mode_index: usize, ratio: T) -> Result<Self> {
        let entries = spectrum(spec, (mode_index + 1).max(2))?;
        let limit = Self::amplitude_limit(spec, &entries[0], &entries[mode_index.max(1)]);
        Self::new(spec, mode_index, T::one(), ratio * limit)
    }

    fn amplitude_limit(spec: &ProblemSpec<T>, ground: &SpectrumEntry<T>, mode: &SpectrumEntry<T>) -> T {
        let (ground_min, _) = ground.abs_extrema(spec);
        let (_, mode_max) = mode.abs_extrema(spec);
        ground_min / mode_max
    }

    /// `mu_i = -nu (lambda_i - lambda_0)`.
    pub fn exponent(&self) -> T {
        -self.spec.nu() * (self.mode.lambda - self.ground.lambda)
    }

    /// `(phi, phi_x)` with the common factor `exp(-nu lambda_0 t)` removed.
    pub fn phi(&self, x: T, t: T) -> (T, T) {
        let e = (self.exponent() * t).exp();
        let (g, dg) = self.ground.value_and_slope(&self.spec, x);
        let (m, dm) = self.mode.value_and_slope(&self.spec, x);
        (
            self.c_ground * g + self.alpha * e * m,
            self.c_ground * dg + self.alpha * e * dm,
        )
    }
}

pub fn eval_modal_solution<T: Scalar>(m: &ModalSolution<T>, x: T, t: T) -> Result<T> {
    m.spec.check_coordinate(x)?;
    let (phi, dphi) = m.phi(x, t);
    if phi.abs() < T::lit(1e-14) * m.c_ground.abs() {
        return Err(BurgersError::SingularDenominator {
            x: x.to_f64_lossy(),
            t: t.to_f64_lossy(),
        });
    }
    let nu = m.spec.nu();
    Ok(-(nu + nu) * dphi / phi)
}

/// Right-hand side of the pointwise bound
/// `|u - u^S| <= u_max |phi~ / phi^S| + 2 nu |phi~_x / phi^S|`.
pub fn decay_envelope<T: Scalar>(m: &ModalSolution<T>, x: T, t: T, u_max: T) -> T {
    let e = (m.exponent() * t).exp();
    let (g, _) = m.ground.value_and_slope(&m.spec, x);
    let (v, dv) = m.mode.value_and_slope(&m.spec, x);
    let ground = m.c_ground * g;
    let nu = m.spec.nu();
    u_max * (m.alpha * e * v / ground).abs() + (nu + nu) * (m.alpha * e * dv / ground).abs()
}

/// `u = -2 nu (ln |phi|)_x` from uniform samples of `phi`, second order:
/// central differences inside, one-sided three-point stencils at the ends.
pub fn cole_hopf_numeric<T: Scalar>(phi: &[T], h: T, nu: T) -> Result<Vec<T>> {
    if phi.len() < 3 {
        return Err(BurgersError::InvalidArgument(
            "Cole-Hopf needs at least 3 samples".into(),
        ));
    }
    if !(h > T::zero()) {
        return Err(BurgersError::InvalidArgument(format!(
            "grid spacing must be positive, got {h}"
        )));
    }
    let positive = phi[0] > T::zero();
    if let Some(index) = phi
        .iter()
        .position(|&v| v == T::zero() || !v.is_finite() || (v > T::zero()) != positive)
    {
        return Err(BurgersError::SignChange { index });
    }
    let logs: Vec<T> = phi.iter().map(|v| v.abs().ln()).collect();
    let n = logs.len();
    let two_h = h + h;
    let (three, four) = (T::lit(3.0), T::lit(4.0));
    let factor = -(nu + nu);
    let mut u = Vec::with_capacity(n);
    u.push(factor * (-three * logs[0] + four * logs[1] - logs[2]) / two_h);
    for j in 1..n - 1 {
        u.push(factor * (logs[j + 1] - logs[j - 1]) / two_h);
    }
    u.push(factor * (three * logs[n - 1] - four * logs[n - 2] + logs[n - 3]) / two_h);
    Ok(u)
}

/// `(t, max_x |u_i(x,t) - u^S(x)|)` on a [`MODAL_CURVE_POINTS`]-node grid.
pub fn modal_decay_curve<T: Scalar>(m: &ModalSolution<T>, times: &[T]) -> Result<Vec<(T, T)>> {
    if times.windows(2).any(|w| w[1] < w[0]) || times.first().is_some_and(|&t| t < T::zero()) {
        return Err(BurgersError::InvalidArgument(
            "times must be nonnegative and nondecreasing".into(),
        ));
    }
    let grid = m.spec.uniform_grid(MODAL_CURVE_POINTS - 1);
    let stationary: Vec<T> = grid.iter().map(|&x| m.profile.jet(&m.spec, x).0).collect();
    times
        .iter()
        .map(|&t| {
            let mut d = T::zero();
            for (&x, &us) in grid.iter().zip(&stationary) {
                d = d.max((eval_modal_solution(m, x, t)? - us).abs());
            }
            Ok((t, d))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fit::{fit_decay_rate_in, FitWindow};
    use crate::stationary::eval_stationary;
    use approx::assert_relative_eq;

    fn spec(nu: f64, l: f64, a: f64, b: f64) -> ProblemSpec<f64> {
        ProblemSpec::new(nu, l, a, b).unwrap()
    }

    #[test]
    fn closed_form_exponents() {
        let s = spec(1.0, std::f64::consts::PI, 2.0, 2.0);
        let ly = lyapunov_exponents(&s, 3).unwrap();
        assert_relative_eq!(ly.mu[0], -2.0, max_relative = 1e-13);
        assert_relative_eq!(ly.mu[1], -5.0, max_relative = 1e-13);
        assert_relative_eq!(ly.mu[2], -10.0, max_relative = 1e-13);
        let s = spec(1.0, 1.0, 0.0, 0.0);
        let ly = lyapunov_exponents(&s, 4).unwrap();
        for (i, mu) in ly.mu.iter().enumerate() {
            let n = (i + 1) as f64;
            assert_relative_eq!(*mu, -(std::f64::consts::PI * n).powi(2), max_relative = 1e-13);
        }
    }

    #[test]
    fn case_e_first_exponent() {
        let ly = lyapunov_exponents(&spec(1.0, 1.0, 1.0, -1.0), 3).unwrap();
        assert!((ly.mu[0] / -8.8 - 1.0).abs() < 1e-2, "{}", ly.mu[0]);
        assert!(ly.mu.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn zero_alpha_is_stationary() {
        let s = spec(1.0, 1.0, 1.0, -1.0);
        let m = ModalSolution::new(&s, 1, 1.0, 0.0).unwrap();
        for x in [0.0, 0.3, 0.8, 1.0] {
            for t in [0.0, 0.5, 3.0] {
                let u = eval_modal_solution(&m, x, t).unwrap();
                assert!((u - eval_stationary(&m.profile, &s, x).unwrap()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn modal_boundary_values() {
        for (a, b) in [(-1.0, 1.0), (1.0, -1.0), (-2.0, -1.0), (1.0, 3.0), (2.0, 2.0)] {
            let s = spec(1.0, 1.0, a, b);
            for i in 1..=3 {
                let m = ModalSolution::with_amplitude_ratio(&s, i, 0.5).unwrap();
                for t in [0.0, 0.1, 1.0, 10.0] {
                    assert!((eval_modal_solution(&m, 0.0, t).unwrap() - a).abs() < 1e-9);
                    assert!((eval_modal_solution(&m, 1.0, t).unwrap() - b).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn long_time_limit_is_stationary() {
        let s = spec(1.0, 1.0, -1.0, 1.0);
        let m = ModalSolution::with_default_amplitude(&s, 2).unwrap();
        let t = 40.0 / m.exponent().abs();
        for x in s.uniform_grid(16) {
            let u = eval_modal_solution(&m, x, t).unwrap();
            assert!((u - eval_stationary(&m.profile, &s, x).unwrap()).abs() < 1e-9);
        }
    }

    #[test]
    fn amplitude_limit_enforced() {
        let s = spec(1.0, 1.0, -1.0, 1.0);
        assert!(ModalSolution::new(&s, 1, 1.0, 10.0).is_err());
        assert!(ModalSolution::new(&s, 1, 0.0, 0.0).is_err());
        assert!(ModalSolution::new(&s, 0, 1.0, 0.0).is_err());
        assert!(ModalSolution::with_amplitude_ratio(&s, 1, 1.0).is_err());
    }

    #[test]
    fn cole_hopf_exponential_is_exact() {
        let (k, nu, h) = (0.7, 0.3, 0.01);
        let phi: Vec<f64> = (0..=100).map(|j| (-k * j as f64 * h).exp()).collect();
        let u = cole_hopf_numeric(&phi, h, nu).unwrap();
        assert!(u.iter().all(|v| (v - 2.0 * nu * k).abs() < 1e-12));
        let flat = cole_hopf_numeric(&[2.5; 7], 0.1, 1.0).unwrap();
        assert!(flat.iter().all(|&v| v == 0.0));
        assert_eq!(
            cole_hopf_numeric(&[1.0, 0.5, -0.1, 0.3], 0.1, 1.0),
            Err(BurgersError::SignChange { index: 2 })
        );
        assert!(cole_hopf_numeric(&[1.0, 2.0], 0.1, 1.0).is_err());
    }

    #[test]
    fn cole_hopf_richardson() {
        let s = spec(1.0, 1.0, 1.0, -1.0);
        let m = ModalSolution::new(&s, 1, 1.0, 0.0).unwrap();
        let err = |n: usize| {
            let grid = s.uniform_grid(n);
            let h = 1.0 / n as f64;
            let phi: Vec<f64> = grid.iter().map(|&x| m.ground.value_and_slope(&s, x).0).collect();
            let u = cole_hopf_numeric(&phi, h, 1.0).unwrap();
            grid.iter()
                .zip(&u)
                .map(|(&x, &v)| (v - eval_stationary(&m.profile, &s, x).unwrap()).abs())
                .fold(0.0, f64::max)
        };
        let ratio = err(40) / err(80);
        assert!((3.5..4.5).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn curve_slope_and_amplitude_shift() {
        let s = spec(1.0, 1.0, -1.0, 1.0);
        let m1 = ModalSolution::with_default_amplitude(&s, 1).unwrap();
        let m2 = ModalSolution::new(&s, 1, 1.0, 2.0 * m1.alpha).unwrap();
        let mu = m1.exponent();
        let times: Vec<f64> = (0..=300).map(|i| i as f64 * 20.0 / (300.0 * mu.abs())).collect();
        let c1 = modal_decay_curve(&m1, &times).unwrap();
        let c2 = modal_decay_curve(&m2, &times).unwrap();
        let w = FitWindow { hi: 1e-2, lo: 1e-8 };
        let f1 = fit_decay_rate_in(&c1, w, 1.0);
        let f2 = fit_decay_rate_in(&c2, w, 1.0);
        assert!(f1.reliable && f2.reliable);
        assert!(((f1.rate - mu) / mu).abs() < 5e-3);
        assert!(((f2.rate - f1.rate) / f1.rate).abs() < 1e-3);
        let late = c1.len() - 20;
        assert!(((c2[late].1 / c1[late].1).ln() - 2f64.ln()).abs() < 1e-3);
    }

    #[test]
    fn envelope_bounds_distance() {
        for (a, b) in [(-1.0, 1.0), (1.0, -1.0), (1.0, 3.0)] {
            let s = spec(1.0, 1.0, a, b);
            let m = ModalSolution::with_amplitude_ratio(&s, 1, 0.3).unwrap();
            let grid = s.uniform_grid(200);
            let u_max = s
                .uniform_grid(4000)
                .iter()
                .map(|&x| eval_modal_solution(&m, x, 0.0).unwrap().abs())
                .fold(0.0, f64::max);
            for t in [0.0, 0.05, 0.2, 1.0] {
                for &x in &grid {
                    let d =
                        (eval_modal_solution(&m, x, t).unwrap() - eval_stationary(&m.profile, &s, x).unwrap()).abs();
                    assert!(d <= decay_envelope(&m, x, t, u_max) * (1.0 + 1e-9) + 1e-13);
                }
            }
        }
    }
}
