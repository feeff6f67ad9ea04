//! Exact stationary solutions `u^S(x)`.
//!
//! Every stationary solution satisfies `2 nu u' = u^2 + C0` for a constant
//! `C0`, and on `[0, l]` with data `A`, `B` it is one of
//!
//! | case | profile                         | `C0`           |
//! |------|---------------------------------|----------------|
//! | (a)  | `-2 nu k0 cot(k0 (x - x0))`     | `+(2 nu k0)^2` |
//! | (b)  | `-2 nu / (x - x0)`              | `0`            |
//! | (c)  | `-2 nu k0 coth(k0 (x - x0))`    | `-(2 nu k0)^2` |
//! | (d)  | `A`                             | `-A^2`         |
//! | (e)  | `-2 nu k0 tanh(k0 (x - x0))`    | `-(2 nu k0)^2` |
//!
//! Case (a) can equally be written `2 nu k0 tan(k0 (x - x0*))` with the phase
//! shifted by a quarter period; only the cot form is produced here.
//!
//! The wavenumber `k0` and the hyperbolic phases come from the ground state in
//! [`crate::spectrum`]; the cot phase follows from `u(0) = A` through arccot.
//! Hyperbolic phases are read at whichever endpoint keeps artanh / arcoth
//! well conditioned, and sit at exactly `l/2` when `A = -B`.

use crate::error::{BurgersError, Result};
use crate::model::{classify, CaseLabel, ProblemSpec};
use crate::scalar::{arccot, Scalar};
use crate::spectrum::{ground_state, Branch, HyperbolicForm};

/// Below this value of `k0 * max|x - pole|` case (a) is evaluated through its
/// Laurent series.
const LAURENT_THRESHOLD: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StationaryProfile<T> {
    pub label: CaseLabel,
    /// Wavenumber `k0 = |C0|^{1/2} / (2 nu)`.
    pub k0: T,
    /// Phase offset (pole or center); may lie outside `[0, l]`.
    pub x0: T,
    /// Integration constant `C0 = 2 nu u' - u^2`.
    pub c0: T,
}

/// Sup-norm residuals of a profile on a grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualReport<T> {
    /// `max |2 nu u' - u^2 - C0|`.
    pub first_integral: T,
    /// `max |u u' - nu u''|`.
    pub ode: T,
}

pub fn solve_stationary<T: Scalar>(spec: &ProblemSpec<T>) -> Result<StationaryProfile<T>> {
    let label = classify(spec);
    let nu = spec.nu();
    let two_nu = nu + nu;
    let a = spec.robin_left();
    let profile = match label {
        CaseLabel::Constant => StationaryProfile {
            label,
            k0: a.abs(),
            x0: T::zero(),
            c0: -(spec.left() * spec.left()),
        },
        CaseLabel::Rational => StationaryProfile {
            label,
            k0: T::zero(),
            x0: a.recip(),
            c0: T::zero(),
        },
        CaseLabel::TrigCot | CaseLabel::HyperCoth | CaseLabel::HyperTanh => {
            let ground = ground_state(spec)?;
            let expected = match label {
                CaseLabel::TrigCot => Branch::Trig,
                CaseLabel::HyperCoth => Branch::Hyperbolic(HyperbolicForm::Sinh),
                _ => Branch::Hyperbolic(HyperbolicForm::Cosh),
            };
            if ground.branch != expected {
                return Err(BurgersError::InconsistentProfile(format!(
                    "case ({label}) but ground state is on the {} branch",
                    ground.branch
                )));
            }
            let k0 = ground.wavenumber(spec);
            let scale = (two_nu * k0) * (two_nu * k0);
            let (x0, c0) = match label {
                CaseLabel::TrigCot => (arccot(a / k0) / k0, scale),
                _ => (ground.phase, -scale),
            };
            StationaryProfile { label, k0, x0, c0 }
        }
    };
    let tol = T::lit(1e-10).max(T::lit(256.0) * T::epsilon()) * (T::one() + spec.left().abs() + spec.right().abs());
    let left = profile.jet(spec, T::zero()).0;
    let right = profile.jet(spec, spec.length()).0;
    if (left - spec.left()).abs() > tol || (right - spec.right()).abs() > tol {
        return Err(BurgersError::InconsistentProfile(format!(
            "u(0) = {left} (A = {}), u(l) = {right} (B = {})",
            spec.left(),
            spec.right()
        )));
    }
    Ok(profile)
}

impl<T: Scalar> StationaryProfile<T> {
    /// Pole of the cot profile nearest to the interval. The arccot phase
    /// `x0` may sit a full period `pi / k0` away from it.
    fn cot_pole(&self, spec: &ProblemSpec<T>) -> T {
        let a = spec.robin_left();
        if a == T::zero() {
            self.x0
        } else {
            (self.k0 / a).atan() / self.k0
        }
    }

    /// `(u, u', u'')` from the analytic case formula, no domain check.
    pub fn jet(&self, spec: &ProblemSpec<T>, x: T) -> (T, T, T) {
        let nu = spec.nu();
        let two = T::lit(2.0);
        let four = T::lit(4.0);
        let k = self.k0;
        match self.label {
            CaseLabel::Constant => (spec.left(), T::zero(), T::zero()),
            CaseLabel::Rational => {
                let s = x - self.x0;
                (-two * nu / s, two * nu / (s * s), -four * nu / (s * s * s))
            }
            CaseLabel::TrigCot => {
                let pole = self.cot_pole(spec);
                let s = x - pole;
                let reach = pole.abs().max((spec.length() - pole).abs());
                if k * reach < T::lit(LAURENT_THRESHOLD) {
                    // k cot(k s) = 1/s - k^2 s/3 - k^4 s^3/45 + O(k^6 s^5)
                    let k2 = k * k;
                    let k4 = k2 * k2;
                    let u = -two * nu * (s.recip() - k2 * s / T::lit(3.0) - k4 * s * s * s / T::lit(45.0));
                    let du = two * nu * ((s * s).recip() + k2 / T::lit(3.0) + k4 * s * s / T::lit(15.0));
                    let d2u = -two * nu * (two / (s * s * s) - two * k4 * s / T::lit(15.0));
                    (u, du, d2u)
                } else {
                    let cot = (k * s).tan().recip();
                    let csc2 = T::one() + cot * cot;
                    (
                        -two * nu * k * cot,
                        two * nu * k * k * csc2,
                        -four * nu * k * k * k * cot * csc2,
                    )
                }
            }
            CaseLabel::HyperCoth => {
                let coth = (k * (x - self.x0)).tanh().recip();
                let csch2 = coth * coth - T::one();
                (
                    -two * nu * k * coth,
                    two * nu * k * k * csch2,
                    -four * nu * k * k * k * coth * csch2,
                )
            }
            CaseLabel::HyperTanh => {
                let tanh = (k * (x - self.x0)).tanh();
                let sech2 = T::one() - tanh * tanh;
                (
                    -two * nu * k * tanh,
                    -two * nu * k * k * sech2,
                    four * nu * k * k * k * tanh * sech2,
                )
            }
        }
    }
}

pub fn eval_stationary<T: Scalar>(profile: &StationaryProfile<T>, spec: &ProblemSpec<T>, x: T) -> Result<T> {
    spec.check_coordinate(x)?;
    Ok(profile.jet(spec, x).0)
}

/// Residuals of the first integral and of `u u' = nu u''` on `grid`.
pub fn stationary_residual<T: Scalar>(
    profile: &StationaryProfile<T>,
    spec: &ProblemSpec<T>,
    grid: &[T],
) -> Result<ResidualReport<T>> {
    let nu = spec.nu();
    let mut report = ResidualReport {
        first_integral: T::zero(),
        ode: T::zero(),
    };
    for &x in grid {
        spec.check_coordinate(x)?;
        let (u, du, d2u) = profile.jet(spec, x);
        let first = ((nu + nu) * du - u * u - profile.c0).abs();
        let ode = (u * du - nu * d2u).abs();
        report.first_integral = report.first_integral.max(first);
        report.ode = report.ode.max(ode);
    }
    Ok(report)
}
