//! Log-linear least-squares estimation of exponential decay rates.

use crate::scalar::Scalar;

/// Fewest in-window samples for a fit to count as reliable.
pub const MIN_WINDOW_SAMPLES: usize = 10;

/// Absolute bounds `[lo, hi]` on the distances used by a fit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitWindow<T> {
    pub hi: T,
    pub lo: T,
}

impl<T: Scalar> FitWindow<T> {
    /// `[1e-8 scale, 1e-2 scale]`.
    pub fn relative(scale: T) -> Self {
        Self {
            hi: T::lit(1e-2) * scale,
            lo: T::lit(1e-8) * scale,
        }
    }

    fn contains(&self, d: T) -> bool {
        d >= self.lo && d <= self.hi
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayFit<T> {
    /// Slope of `ln D` against `t`.
    pub rate: T,
    pub intercept: T,
    pub samples_used: usize,
    pub reliable: bool,
    pub window: FitWindow<T>,
}

/// Fits `ln D = intercept + rate t` over the default window relative to the
/// first sample's distance.
pub fn fit_decay_rate<T: Scalar>(samples: &[(T, T)]) -> DecayFit<T> {
    let scale = samples.first().map(|s| s.1).unwrap_or_else(T::zero);
    fit_decay_rate_in(samples, FitWindow::relative(scale), scale)
}

/// Fits over an explicit window. Samples below `1e-12 scale` are dropped
/// even when the window reaches that far.
pub fn fit_decay_rate_in<T: Scalar>(samples: &[(T, T)], window: FitWindow<T>, scale: T) -> DecayFit<T> {
    let floor = T::lit(1e-12) * scale;
    let points: Vec<(T, T)> = samples
        .iter()
        .filter(|(_, d)| d.is_finite() && *d > floor && window.contains(*d))
        .map(|&(t, d)| (t, d.ln()))
        .collect();
    let n = points.len();
    if n < 2 {
        return DecayFit {
            rate: T::nan(),
            intercept: T::nan(),
            samples_used: n,
            reliable: false,
            window,
        };
    }
    let count = T::from_usize_lossy(n);
    let t_mean = points.iter().fold(T::zero(), |acc, p| acc + p.0) / count;
    let y_mean = points.iter().fold(T::zero(), |acc, p| acc + p.1) / count;
    let (sxy, sxx) = points.iter().fold((T::zero(), T::zero()), |(sxy, sxx), &(t, y)| {
        let dt = t - t_mean;
        (sxy + dt * (y - y_mean), sxx + dt * dt)
    });
    let rate = sxy / sxx;
    DecayFit {
        rate,
        intercept: y_mean - rate * t_mean,
        samples_used: n,
        reliable: n >= MIN_WINDOW_SAMPLES && sxx > T::zero(),
        window,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(f: impl Fn(f64) -> f64, t_end: f64, n: usize) -> Vec<(f64, f64)> {
        (0..=n)
            .map(|i| i as f64 * t_end / n as f64)
            .map(|t| (t, f(t)))
            .collect()
    }

    #[test]
    fn exact_exponential() {
        let s = curve(|t| 3.0 * (-2.0 * t).exp(), 12.0, 600);
        let fit = fit_decay_rate(&s);
        assert!(fit.reliable);
        assert!((fit.rate + 2.0).abs() < 1e-12);
        assert!((fit.intercept - 3f64.ln()).abs() < 1e-10);
    }

    #[test]
    fn late_window_removes_fast_mode() {
        let s = curve(|t| (-2.0 * t).exp() + (-10.0 * t).exp(), 14.0, 2000);
        let mut last = f64::INFINITY;
        for hi in [1e-1, 1e-2, 1e-3, 1e-4] {
            let fit = fit_decay_rate_in(&s, FitWindow { hi, lo: 1e-10 }, 2.0);
            let err = (fit.rate + 2.0).abs();
            assert!(err < last);
            last = err;
        }
        assert!(last < 1e-6);
    }

    #[test]
    fn too_few_samples_unreliable() {
        let s = curve(|t| (-t).exp(), 30.0, 8);
        let fit = fit_decay_rate(&s);
        assert!(!fit.reliable);
        assert!(fit.samples_used < MIN_WINDOW_SAMPLES);
    }

    #[test]
    fn floor_excluded() {
        let mut s = curve(|t| (-3.0 * t).exp(), 8.0, 400);
        for p in s.iter_mut().skip(300) {
            p.1 = 1e-15;
        }
        let fit = fit_decay_rate_in(&s, FitWindow { hi: 1e-2, lo: 0.0 }, 1.0);
        assert!((fit.rate + 3.0).abs() < 1e-10);
    }
}
