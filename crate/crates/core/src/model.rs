//! Problem definition and the five-way classification of stationary profiles.
//!
//! A problem is the viscous Burgers equation `u_t + u u_x = nu u_xx` on
//! `[0, l]` with constant Dirichlet data `u(0,t) = A`, `u(l,t) = B`. The
//! stationary solution takes one of five closed forms, selected by the sign
//! of `B - A` and of `H = 2 nu (B - A) - l A B`.

use std::fmt;

use crate::error::{BurgersError, Result};
use crate::scalar::Scalar;

/// The quadruple `(nu, l, A, B)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProblemSpec<T> {
    nu: T,
    length: T,
    left: T,
    right: T,
}

impl<T: Scalar> ProblemSpec<T> {
    /// Builds a problem; `nu` and `l` must be positive and all inputs finite.
    pub fn new(nu: T, length: T, left: T, right: T) -> Result<Self> {
        if !(nu.is_finite() && length.is_finite() && left.is_finite() && right.is_finite()) {
            return Err(BurgersError::InvalidProblem("all parameters must be finite".into()));
        }
        if nu <= T::zero() {
            return Err(BurgersError::InvalidProblem(format!("nu must be positive, got {nu}")));
        }
        if length <= T::zero() {
            return Err(BurgersError::InvalidProblem(format!(
                "l must be positive, got {length}"
            )));
        }
        Ok(Self {
            nu,
            length,
            left,
            right,
        })
    }

    /// Viscosity `nu`.
    pub fn nu(&self) -> T {
        self.nu
    }

    /// Interval length `l`.
    pub fn length(&self) -> T {
        self.length
    }

    /// Left boundary value `A = u(0, t)`.
    pub fn left(&self) -> T {
        self.left
    }

    /// Right boundary value `B = u(l, t)`.
    pub fn right(&self) -> T {
        self.right
    }

    /// Robin coefficient `A / (2 nu)` of the transformed left boundary condition.
    pub fn robin_left(&self) -> T {
        self.left / (self.nu + self.nu)
    }

    /// Robin coefficient `B / (2 nu)` of the transformed right boundary condition.
    pub fn robin_right(&self) -> T {
        self.right / (self.nu + self.nu)
    }

    /// Rejects coordinates outside `[0, l]`.
    pub fn check_coordinate(&self, x: T) -> Result<()> {
        if x >= T::zero() && x <= self.length {
            Ok(())
        } else {
            Err(BurgersError::OutOfDomain {
                x: x.to_f64_lossy(),
                length: self.length.to_f64_lossy(),
            })
        }
    }

    /// `n + 1` uniformly spaced nodes covering `[0, l]`, endpoints exact.
    pub fn uniform_grid(&self, n: usize) -> Vec<T> {
        let n = n.max(1);
        let h = self.length / T::from_usize_lossy(n);
        (0..=n)
            .map(|j| {
                if j == n {
                    self.length
                } else {
                    T::from_usize_lossy(j) * h
                }
            })
            .collect()
    }

    /// Same problem under `(nu, l, A, B) -> (c nu, l, c A, c B)`.
    pub fn scaled(&self, c: T) -> Result<Self> {
        Self::new(c * self.nu, self.length, c * self.left, c * self.right)
    }
}

/// The H-quantity `2 nu (B - A) - l A B`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct HQuantity<T> {
    pub value: T,
    /// `|2 nu (B - A)| + |l A B|`, the magnitude the zero test is relative to.
    pub magnitude: T,
}

impl<T: Scalar> HQuantity<T> {
    /// Whether `H` is zero within `decision_tol * magnitude`.
    pub fn is_zero(&self) -> bool {
        self.value.abs() <= T::decision_tol() * self.magnitude
    }
}

/// Stationary-solution families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    /// (a) `-2 nu k0 cot(k0 (x - x0))`, `A < B`, `H > 0`.
    TrigCot,
    /// (b) `-2 nu / (x - x0)`, `A < B`, `H = 0`.
    Rational,
    /// (c) `-2 nu k0 coth(k0 (x - x0))`, `A < B`, `H < 0`.
    HyperCoth,
    /// (d) constant, `A = B`.
    Constant,
    /// (e) `-2 nu k0 tanh(k0 (x - x0))`, `A > B`.
    HyperTanh,
}

impl CaseLabel {
    pub fn letter(self) -> char {
        match self {
            CaseLabel::TrigCot => 'a',
            CaseLabel::Rational => 'b',
            CaseLabel::HyperCoth => 'c',
            CaseLabel::Constant => 'd',
            CaseLabel::HyperTanh => 'e',
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

pub fn compute_h<T: Scalar>(spec: &ProblemSpec<T>) -> HQuantity<T> {
    let diffusive = (spec.nu + spec.nu) * (spec.right - spec.left);
    let product = spec.length * spec.left * spec.right;
    HQuantity {
        value: diffusive - product,
        magnitude: diffusive.abs() + product.abs(),
    }
}

/// Selects the stationary family from the boundary data.
///
/// `A = B` is decided by exact equality; `H = 0` within the relative
/// tolerance of [`HQuantity::is_zero`].
pub fn classify<T: Scalar>(spec: &ProblemSpec<T>) -> CaseLabel {
    if spec.left > spec.right {
        return CaseLabel::HyperTanh;
    }
    if spec.left == spec.right {
        return CaseLabel::Constant;
    }
    let h = compute_h(spec);
    if h.is_zero() {
        CaseLabel::Rational
    } else if h.value > T::zero() {
        CaseLabel::TrigCot
    } else {
        CaseLabel::HyperCoth
    }
}
