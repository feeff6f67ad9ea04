//! Robin Sturm-Liouville spectrum of the Cole-Hopf transformed problem.
//!
//! Under `u = -2 nu (ln |phi|)_x` the Dirichlet data become Robin conditions
//!
//! ```text
//! -X'' = lambda X,   X'(0) + a X(0) = 0,   X'(l) + b X(l) = 0,
//! a = A / (2 nu),    b = B / (2 nu).
//! ```
//!
//! For `A != B` the eigenvalues come from three branches: trigonometric
//! modes `lambda = (xi/l)^2` with `cot xi = p/xi + q xi`, at most two
//! hyperbolic modes `lambda = -(xi/l)^2` with `coth xi = p/xi - q xi`, and a
//! `lambda = 0` linear mode exactly when `H = 0`. Here
//! `p = l A B / (2 nu (B - A))` and `q = 2 nu / (l (B - A))`. For `A = B`
//! the spectrum is closed form: `lambda_0 = -a^2`, `lambda_i = (pi i / l)^2`.
//!
//! Both transcendental equations are solved in the pole-free forms
//!
//! ```text
//! g(xi) = xi cos xi  - (p + q xi^2) sin xi
//! h(xi) = xi cosh xi - (p - q xi^2) sinh xi      (evaluated as h e^{-xi})
//! ```
//!
//! Both satisfy `g(xi)/xi -> 1 - p` and `h(xi)/xi -> 1 - p` as `xi -> 0`, which
//! is the sign used at the origin of the bracket scans.
//!
//! Eigenfunctions are evaluated as `k cos(kx) - a sin(kx)` (trig) and
//! `k cosh(kx) - a sinh(kx)` (hyperbolic), which satisfy the left Robin
//! condition identically. These equal the phase forms `sin(k(x - x_i))`,
//! `cosh(k(x - x_i))` or `sinh(k(x - x_i))` up to a constant factor, and are
//! normalized to max-abs 1 on `[0, l]` with `X(0) > 0`.

use std::fmt;

use crate::error::{BurgersError, Result};
use crate::model::{compute_h, ProblemSpec};
use crate::roots::{bisect, newton_polish, scan_brackets};
use crate::scalar::{arccot, arcoth, Scalar};

/// Points per unit of `xi` used when certifying zero counts.
pub const DEFAULT_SCAN_RESOLUTION: usize = 64;

/// Dimensionless coefficients of the transcendental eigenvalue equations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RobinCoefficients<T> {
    pub p: T,
    pub q: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HyperbolicForm {
    /// `cosh(k(x - x_i))`, used when `|A| < 2 nu k`.
    Cosh,
    /// `sinh(k(x - x_i))`, used when `|A| > 2 nu k`.
    Sinh,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `lambda = k^2 > 0`, root of `cot xi = p/xi + q xi`.
    Trig,
    /// `lambda = -k^2 < 0`, root of `coth xi = p/xi - q xi`.
    Hyperbolic(HyperbolicForm),
    /// `lambda = 0`, `X = x - x0`; present iff `H = 0`.
    Zero,
    /// `A = B`: `X_0 = exp(-A x / 2 nu)`, `X_i = sin(k_i (x - x_i))`, `k_i = pi i / l`.
    ClosedForm,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::Trig => "trig",
            Branch::Hyperbolic(HyperbolicForm::Cosh) => "hyperbolic-cosh",
            Branch::Hyperbolic(HyperbolicForm::Sinh) => "hyperbolic-sinh",
            Branch::Zero => "zero",
            Branch::ClosedForm => "closed-form",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One eigenpair of the Robin problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumEntry<T> {
    pub index: usize,
    pub branch: Branch,
    /// Scaled root `xi = k l`.
    pub xi: T,
    pub lambda: T,
    /// Phase `x_i` of the `sin`/`cosh`/`sinh` form; pole location `1/a` on the
    /// zero branch; zero for the exponential ground state of the closed form.
    pub phase: T,
    /// Certified number of interior zeros of `X_i` on `(0, l)`.
    pub zero_count: usize,
    /// Reciprocal of the max-abs of the unnormalized shape on `[0, l]`.
    inv_norm: T,
    anchor: Anchor,
}

/// Endpoint whose Robin coefficient parametrizes a hyperbolic shape. The
/// coefficients `k -+ a` lose all precision once `k l` is large and `|a|`
/// is within rounding of `k`, so the better-conditioned end is used;
/// `Center` covers `A = -B`, where both ends degenerate together.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Anchor {
    Left,
    Right,
    Center,
}

#[derive(Clone, Copy)]
enum Shape {
    Trig,
    Hyper,
    Linear,
    Exp,
}

impl<T: Scalar> SpectrumEntry<T> {
    /// Wavenumber `k = xi / l`.
    pub fn wavenumber(&self, spec: &ProblemSpec<T>) -> T {
        self.xi / spec.length()
    }

    fn shape(&self) -> Shape {
        match self.branch {
            Branch::Trig => Shape::Trig,
            Branch::Hyperbolic(_) => Shape::Hyper,
            Branch::Zero => Shape::Linear,
            Branch::ClosedForm if self.index == 0 => Shape::Exp,
            Branch::ClosedForm => Shape::Trig,
        }
    }

    /// Unnormalized `(X, X')`; hyperbolic and exponential shapes carry a
    /// constant factor that keeps them bounded on `[0, l]`.
    fn raw(&self, spec: &ProblemSpec<T>, x: T) -> (T, T) {
        let a = spec.robin_left();
        let l = spec.length();
        let k = self.xi / l;
        let half = T::lit(0.5);
        match self.shape() {
            Shape::Trig => {
                let (s, c) = (k * x).sin_cos();
                (k * c - a * s, -k * (k * s + a * c))
            }
            Shape::Hyper => match self.anchor {
                Anchor::Left => {
                    let grow = (k * (x - l)).exp();
                    let fall = (-k * (x + l)).exp();
                    let v = half * ((k - a) * grow + (k + a) * fall);
                    let d = half * k * ((k - a) * grow - (k + a) * fall);
                    (v, d)
                }
                Anchor::Right => {
                    let b = spec.robin_right();
                    let grow = (k * (x - l - l)).exp();
                    let fall = (-k * x).exp();
                    let sign = if self.index.is_multiple_of(2) {
                        T::one()
                    } else {
                        -T::one()
                    };
                    let v = half * ((k - b) * grow + (k + b) * fall);
                    let d = half * k * ((k - b) * grow - (k + b) * fall);
                    (sign * v, sign * d)
                }
                Anchor::Center => {
                    let grow = (k * (x - l)).exp();
                    let fall = (-k * x).exp();
                    match self.branch {
                        Branch::Hyperbolic(HyperbolicForm::Sinh) => (half * (fall - grow), -half * k * (fall + grow)),
                        _ => (half * (grow + fall), half * k * (grow - fall)),
                    }
                }
            },
            Shape::Linear => (T::one() - a * x, -a),
            Shape::Exp => {
                let shift = T::zero().max(-a * l);
                let v = (-a * x - shift).exp();
                (v, -a * v)
            }
        }
    }

    /// Interior critical points of the shape on `(0, l)` (at most one is
    /// needed for the extremum bookkeeping: all trig extrema share `|X|`).
    fn critical_point(&self, spec: &ProblemSpec<T>) -> Option<T> {
        let a = spec.robin_left();
        let l = spec.length();
        let k = self.xi / l;
        match self.shape() {
            Shape::Trig => {
                let theta = (-a / k).atan();
                let pi = T::PI();
                let mut m = (-theta / pi).ceil();
                let mut x = (theta + m * pi) / k;
                if x <= T::zero() {
                    m = m + T::one();
                    x = (theta + m * pi) / k;
                }
                (x > T::zero() && x < l).then_some(x)
            }
            Shape::Hyper => {
                let cosh = matches!(self.branch, Branch::Hyperbolic(HyperbolicForm::Cosh));
                cosh.then_some(self.phase).filter(|&x| x > T::zero() && x < l)
            }
            Shape::Linear | Shape::Exp => None,
        }
    }

    /// `(min |X|, max |X|)` over `[0, l]` for the normalized eigenfunction.
    /// The minimum is zero whenever the function has interior zeros.
    pub fn abs_extrema(&self, spec: &ProblemSpec<T>) -> (T, T) {
        let mut lo = T::infinity();
        let mut hi = T::zero();
        let mut visit = |x: T| {
            let v = (self.raw(spec, x).0 * self.inv_norm).abs();
            lo = lo.min(v);
            hi = hi.max(v);
        };
        visit(T::zero());
        visit(spec.length());
        if let Some(x) = self.critical_point(spec) {
            visit(x);
        }
        if self.zero_count > 0 {
            lo = T::zero();
        }
        (lo, hi)
    }

    /// Normalized `(X_i(x), X_i'(x))` without the domain check.
    pub fn value_and_slope(&self, spec: &ProblemSpec<T>, x: T) -> (T, T) {
        let (v, d) = self.raw(spec, x);
        (v * self.inv_norm, d * self.inv_norm)
    }
}

pub fn build_pq<T: Scalar>(spec: &ProblemSpec<T>) -> Result<RobinCoefficients<T>> {
    let (nu, l, a, b) = (spec.nu(), spec.length(), spec.left(), spec.right());
    if a == b {
        return Err(BurgersError::EqualBoundaryValues);
    }
    let two_nu = nu + nu;
    Ok(RobinCoefficients {
        p: l * a * b / (two_nu * (b - a)),
        q: two_nu / (l * (b - a)),
    })
}

/// `g(xi) = xi cos xi - (p + q xi^2) sin xi`.
pub fn trig_residual<T: Scalar>(pq: &RobinCoefficients<T>, xi: T) -> T {
    let (s, c) = xi.sin_cos();
    xi * c - (pq.p + pq.q * xi * xi) * s
}

fn trig_residual_slope<T: Scalar>(pq: &RobinCoefficients<T>, xi: T) -> T {
    let (s, c) = xi.sin_cos();
    let two = T::lit(2.0);
    c - xi * s - two * pq.q * xi * s - (pq.p + pq.q * xi * xi) * c
}

/// `h(xi) e^{-xi}` with `h(xi) = xi cosh xi - (p - q xi^2) sinh xi`.
pub fn hyperbolic_residual<T: Scalar>(pq: &RobinCoefficients<T>, xi: T) -> T {
    let e = (-(xi + xi)).exp();
    let half = T::lit(0.5);
    half * (xi * (T::one() + e) - (pq.p - pq.q * xi * xi) * (T::one() - e))
}

fn hyperbolic_residual_slope<T: Scalar>(pq: &RobinCoefficients<T>, xi: T) -> T {
    let e = (-(xi + xi)).exp();
    let half = T::lit(0.5);
    let r = pq.p - pq.q * xi * xi;
    half * (T::one() + e) - xi * e + pq.q * xi * (T::one() - e) - r * e
}

/// `g(xi) / xi`, extended by `1 - p` at the origin.
fn trig_reduced<T: Scalar>(pq: &RobinCoefficients<T>, xi: T) -> T {
    let sinc = if xi == T::zero() { T::one() } else { xi.sin() / xi };
    xi.cos() - (pq.p + pq.q * xi * xi) * sinc
}

fn trig_reduced_slope<T: Scalar>(pq: &RobinCoefficients<T>, xi: T) -> T {
    if xi == T::zero() {
        T::zero()
    } else {
        (trig_residual_slope(pq, xi) - trig_reduced(pq, xi)) / xi
    }
}

/// `h(xi) e^{-xi} / xi`, extended by `1 - p` at the origin.
fn hyperbolic_reduced<T: Scalar>(pq: &RobinCoefficients<T>, xi: T) -> T {
    let two = T::lit(2.0);
    let e = (-(xi + xi)).exp();
    let shrink = if xi == T::zero() {
        two
    } else {
        -(-(xi + xi)).exp_m1() / xi
    };
    T::lit(0.5) * ((T::one() + e) - (pq.p - pq.q * xi * xi) * shrink)
}

fn hyperbolic_reduced_slope<T: Scalar>(pq: &RobinCoefficients<T>, xi: T) -> T {
    if xi == T::zero() {
        T::zero()
    } else {
        (hyperbolic_residual_slope(pq, xi) - hyperbolic_reduced(pq, xi)) / xi
    }
}

/// Residual scale `1 + |p| + |q| xi^2` used in root acceptance tests.
pub fn residual_scale<T: Scalar>(pq: &RobinCoefficients<T>, xi: T) -> T {
    T::one() + pq.p.abs() + pq.q.abs() * xi * xi
}

fn refine<T, F, D>(f: F, df: D, lo: T, hi: T) -> T
where
    T: Scalar,
    F: Fn(T) -> T + Copy,
    D: Fn(T) -> T,
{
    let rtol = T::lit(1e-13).max(T::epsilon());
    let x = bisect(f, lo, hi, rtol);
    newton_polish(f, df, x, lo, hi)
}

/// The `n` smallest positive roots of the trigonometric equation, ascending.
pub fn trig_roots<T: Scalar>(pq: &RobinCoefficients<T>, n: usize) -> Result<Vec<T>> {
    trig_roots_impl(pq, n, false)
}

fn trig_roots_impl<T: Scalar>(pq: &RobinCoefficients<T>, n: usize, skip_origin: bool) -> Result<Vec<T>> {
    if n == 0 {
        return Err(BurgersError::InvalidArgument("root count must be at least 1".into()));
    }
    let pi = T::PI();
    let step = pi / T::lit(64.0);
    let chunk = T::from_usize_lossy(n + 2) * pi;
    let limit = chunk * T::lit(16.0);
    let g = |xi: T| trig_residual(pq, xi);
    let mut roots = Vec::with_capacity(n);
    let mut start = if skip_origin { step } else { T::zero() };
    let mut f_start = if skip_origin { None } else { Some(T::one() - pq.p) };
    while roots.len() < n {
        let end = start + chunk;
        if end > limit + chunk {
            return Err(BurgersError::Bracketing {
                wanted: n,
                found: roots.len(),
                start: 0.0,
                end: start.to_f64_lossy(),
                step: step.to_f64_lossy(),
            });
        }
        for (lo, hi) in scan_brackets(g, start, end, step, f_start) {
            roots.push(refine(
                |xi| trig_reduced(pq, xi),
                |xi| trig_reduced_slope(pq, xi),
                lo,
                hi,
            ));
            if roots.len() == n {
                break;
            }
        }
        // continue from the last scanned node so no interval is skipped
        let steps = ((end - start) / step).floor();
        start = start + steps * step;
        f_start = None;
    }
    Ok(roots)
}

/// Upper bound on hyperbolic roots: at a root `coth xi` lies in
/// `(1, 1 + 1/xi]`, so `xi < p - q xi^2 <= xi + 1`.
fn hyperbolic_bound<T: Scalar>(pq: &RobinCoefficients<T>) -> T {
    if pq.q >= T::zero() {
        pq.p.max(T::zero())
    } else {
        let mq = -pq.q;
        let disc = T::one() + T::lit(4.0) * mq * (T::one() - pq.p);
        if disc < T::zero() {
            T::zero()
        } else {
            (T::one() + disc.sqrt()) / (mq + mq)
        }
    }
}

/// Scan ceiling for the hyperbolic equation.
pub fn hyperbolic_ceiling<T: Scalar>(pq: &RobinCoefficients<T>) -> T {
    let heuristic = T::lit(10.0) + T::lit(2.0) * (pq.p.abs() + T::lit(100.0) * pq.q.abs() + T::lit(10.0));
    heuristic.max(T::lit(1.01) * hyperbolic_bound(pq) + T::lit(2.0 / 64.0))
}

/// All positive roots of the hyperbolic equation (0, 1 or 2 of them), ascending.
pub fn hyperbolic_roots<T: Scalar>(pq: &RobinCoefficients<T>) -> Result<Vec<T>> {
    hyperbolic_roots_impl(pq, false)
}

fn hyperbolic_roots_impl<T: Scalar>(pq: &RobinCoefficients<T>, skip_origin: bool) -> Result<Vec<T>> {
    let step = T::lit(1.0 / 64.0);
    let end = hyperbolic_ceiling(pq);
    let h = |xi: T| hyperbolic_residual(pq, xi);
    let (start, f_start) = if skip_origin {
        (step, None)
    } else {
        (T::zero(), Some(T::one() - pq.p))
    };
    let roots: Vec<T> = scan_brackets(h, start, end, step, f_start)
        .into_iter()
        .map(|(lo, hi)| {
            refine(
                |xi| hyperbolic_reduced(pq, xi),
                |xi| hyperbolic_reduced_slope(pq, xi),
                lo,
                hi,
            )
        })
        .collect();
    if roots.len() > 2 {
        return Err(BurgersError::TooManyHyperbolicRoots(roots.len()));
    }
    Ok(roots)
}

/// Hyperbolic candidates, largest root first. With `A = -B > 0` the modes are
/// even or odd about `l/2`, and with `c = a l / 2`, `s = k l / 2` they solve
/// `s tanh s = c` (even) and `s = c tanh s` (odd, only for `c > 1`). The
/// general equation has these as a near-double root once `a l` is large.
fn hyperbolic_candidates<T: Scalar>(
    spec: &ProblemSpec<T>,
    pq: &RobinCoefficients<T>,
    skip_origin: bool,
) -> Result<Vec<Candidate<T>>> {
    let l = spec.length();
    if spec.left() > T::zero() && spec.left() == -spec.right() {
        let c = T::lit(0.5) * spec.robin_left() * l;
        let rtol = T::lit(1e-13).max(T::epsilon());
        let mut out = Vec::with_capacity(2);
        let even = |s: T| s * s.tanh() - c;
        let s = newton_polish(
            even,
            |s: T| s.tanh() + s * (T::one() - s.tanh() * s.tanh()),
            bisect(even, T::zero(), c + T::one(), rtol),
            T::zero(),
            c + T::one(),
        );
        let mut push = |s: T, form| {
            let k = (s + s) / l;
            out.push(Candidate {
                branch: Branch::Hyperbolic(form),
                anchor: Anchor::Center,
                xi: k * l,
                lambda: -(k * k),
            });
        };
        push(s, HyperbolicForm::Cosh);
        if c > T::one() && !skip_origin {
            let odd = |s: T| s - c * s.tanh();
            let mut lo = c;
            while lo > T::min_positive_value() && odd(lo) >= T::zero() {
                lo = lo * T::lit(0.5);
            }
            if odd(lo) < T::zero() {
                push(bisect(odd, lo, c, rtol), HyperbolicForm::Sinh);
            }
        }
        return Ok(out);
    }
    hyperbolic_roots_impl(pq, skip_origin)?
        .into_iter()
        .rev()
        .map(|xi| Candidate::hyperbolic(spec, xi))
        .collect()
}

/// `cosh` when `|a| < k`, read off at the anchor end.
fn hyperbolic_layout<T: Scalar>(spec: &ProblemSpec<T>, k: T) -> Result<(HyperbolicForm, Anchor)> {
    let a = spec.robin_left().abs();
    let b = spec.robin_right().abs();
    let (gap_a, gap_b) = ((a - k).abs(), (b - k).abs());
    let tol = T::decision_tol() * k;
    let form = |c: T| {
        if c < k {
            HyperbolicForm::Cosh
        } else {
            HyperbolicForm::Sinh
        }
    };
    if gap_a >= gap_b && gap_a > tol {
        Ok((form(a), Anchor::Left))
    } else if gap_b > tol {
        Ok((form(b), Anchor::Right))
    } else {
        Err(BurgersError::DegenerateHyperbolicMode { k: k.to_f64_lossy() })
    }
}

fn phase_of<T: Scalar>(spec: &ProblemSpec<T>, branch: Branch, anchor: Anchor, index: usize, xi: T) -> T {
    let a = spec.robin_left();
    let b = spec.robin_right();
    let l = spec.length();
    let k = xi / l;
    match (branch, anchor) {
        (Branch::Trig, _) => arccot(a / k) / k,
        (Branch::ClosedForm, _) if index > 0 => arccot(a / k) / k,
        (Branch::ClosedForm, _) => T::zero(),
        (Branch::Hyperbolic(_), Anchor::Center) => T::lit(0.5) * l,
        (Branch::Hyperbolic(HyperbolicForm::Cosh), Anchor::Left) => (a / k).atanh() / k,
        (Branch::Hyperbolic(HyperbolicForm::Cosh), Anchor::Right) => l + (b / k).atanh() / k,
        (Branch::Hyperbolic(HyperbolicForm::Sinh), Anchor::Left) => arcoth(a / k) / k,
        (Branch::Hyperbolic(HyperbolicForm::Sinh), Anchor::Right) => l + arcoth(b / k) / k,
        (Branch::Zero, _) => a.recip(),
    }
}

/// Builds a normalized entry and certifies its zero count against `index`.
fn make_entry<T: Scalar>(spec: &ProblemSpec<T>, index: usize, c: Candidate<T>) -> Result<SpectrumEntry<T>> {
    let Candidate {
        branch,
        anchor,
        xi,
        lambda,
    } = c;
    let mut entry = SpectrumEntry {
        index,
        branch,
        xi,
        lambda,
        phase: phase_of(spec, branch, anchor, index, xi),
        zero_count: 0,
        inv_norm: T::one(),
        anchor,
    };
    let mut norm = entry
        .raw(spec, T::zero())
        .0
        .abs()
        .max(entry.raw(spec, spec.length()).0.abs());
    if let Some(x) = entry.critical_point(spec) {
        norm = norm.max(entry.raw(spec, x).0.abs());
    }
    entry.inv_norm = norm.recip();
    let zeros = count_interior_zeros(&entry, spec, DEFAULT_SCAN_RESOLUTION)?;
    if zeros != index {
        return Err(BurgersError::ZeroCountMismatch { index, zeros });
    }
    entry.zero_count = zeros;
    Ok(entry)
}

fn closed_form<T: Scalar>(spec: &ProblemSpec<T>, n: usize) -> Result<Vec<SpectrumEntry<T>>> {
    let a = spec.robin_left();
    let l = spec.length();
    (0..n)
        .map(|i| {
            if i == 0 {
                make_entry(
                    spec,
                    0,
                    Candidate::plain(Branch::ClosedForm, a.abs() * l, T::zero() - a * a),
                )
            } else {
                let k = T::PI() * T::from_usize_lossy(i) / l;
                make_entry(spec, i, Candidate::plain(Branch::ClosedForm, k * l, k * k))
            }
        })
        .collect()
}

struct Candidate<T> {
    branch: Branch,
    anchor: Anchor,
    xi: T,
    lambda: T,
}

impl<T: Scalar> Candidate<T> {
    fn plain(branch: Branch, xi: T, lambda: T) -> Self {
        Self {
            branch,
            anchor: Anchor::Left,
            xi,
            lambda,
        }
    }

    fn hyperbolic(spec: &ProblemSpec<T>, xi: T) -> Result<Self> {
        let k = xi / spec.length();
        let (form, anchor) = hyperbolic_layout(spec, k)?;
        Ok(Self {
            branch: Branch::Hyperbolic(form),
            anchor,
            xi,
            lambda: -(k * k),
        })
    }
}

fn candidates<T: Scalar>(spec: &ProblemSpec<T>, trig_count: usize) -> Result<Vec<Candidate<T>>> {
    let pq = build_pq(spec)?;
    let l = spec.length();
    let has_zero = compute_h(spec).is_zero();
    let mut out = Vec::new();
    out.extend(hyperbolic_candidates(spec, &pq, has_zero)?);
    if has_zero {
        out.push(Candidate::plain(Branch::Zero, T::zero(), T::zero()));
    }
    if trig_count > 0 {
        for xi in trig_roots_impl(&pq, trig_count, has_zero)? {
            let k = xi / l;
            out.push(Candidate::plain(Branch::Trig, xi, k * k));
        }
    }
    out.sort_by(|x, y| x.lambda.partial_cmp(&y.lambda).expect("finite eigenvalues"));
    Ok(out)
}

/// The `n` least eigenvalues `lambda_0 < ... < lambda_{n-1}` with certified
/// eigenfunctions.
pub fn spectrum<T: Scalar>(spec: &ProblemSpec<T>, n: usize) -> Result<Vec<SpectrumEntry<T>>> {
    if n < 2 {
        return Err(BurgersError::InvalidArgument(format!(
            "spectrum needs at least 2 entries, got {n}"
        )));
    }
    let entries = if spec.left() == spec.right() {
        closed_form(spec, n)?
    } else {
        candidates(spec, n)?
            .into_iter()
            .take(n)
            .enumerate()
            .map(|(i, c)| make_entry(spec, i, c))
            .collect::<Result<Vec<_>>>()?
    };
    if entries.len() < n {
        return Err(BurgersError::Bracketing {
            wanted: n,
            found: entries.len(),
            start: 0.0,
            end: f64::NAN,
            step: f64::NAN,
        });
    }
    for (i, w) in entries.windows(2).enumerate() {
        if !(w[1].lambda > w[0].lambda) {
            return Err(BurgersError::NotStrictlyIncreasing { index: i + 1 });
        }
    }
    Ok(entries)
}

/// The ground state `X_0`, the unique eigenfunction without zeros on `[0, l]`.
pub fn ground_state<T: Scalar>(spec: &ProblemSpec<T>) -> Result<SpectrumEntry<T>> {
    if spec.left() == spec.right() {
        return closed_form(spec, 1).map(|v| v[0]);
    }
    let pq = build_pq(spec)?;
    let l = spec.length();
    let has_zero = compute_h(spec).is_zero();
    if let Some(top) = hyperbolic_candidates(spec, &pq, has_zero)?.into_iter().next() {
        return make_entry(spec, 0, top);
    }
    if has_zero {
        return make_entry(spec, 0, Candidate::plain(Branch::Zero, T::zero(), T::zero()));
    }
    let xi = trig_roots_impl(&pq, 1, false)?[0];
    let k = xi / l;
    make_entry(spec, 0, Candidate::plain(Branch::Trig, xi, k * k))
}

/// Normalized eigenfunction value `X_i(x)`.
pub fn eval_eigenfunction<T: Scalar>(entry: &SpectrumEntry<T>, spec: &ProblemSpec<T>, x: T) -> Result<T> {
    spec.check_coordinate(x)?;
    Ok(entry.value_and_slope(spec, x).0)
}

/// Normalized eigenfunction slope `X_i'(x)`.
pub fn eval_eigenfunction_slope<T: Scalar>(entry: &SpectrumEntry<T>, spec: &ProblemSpec<T>, x: T) -> Result<T> {
    spec.check_coordinate(x)?;
    Ok(entry.value_and_slope(spec, x).1)
}

/// Number of sign changes of `X_i` strictly inside `(0, l)`.
///
/// The scan uses `resolution * max(xi, 1)` intervals, so consecutive trig
/// zeros (spaced `pi / k`) are always separated by several nodes. Each
/// crossing is located by bisection and must have a nonvanishing slope.
pub fn count_interior_zeros<T: Scalar>(
    entry: &SpectrumEntry<T>,
    spec: &ProblemSpec<T>,
    resolution: usize,
) -> Result<usize> {
    if resolution < DEFAULT_SCAN_RESOLUTION {
        return Err(BurgersError::InvalidArgument(format!(
            "scan resolution must be at least {DEFAULT_SCAN_RESOLUTION}, got {resolution}"
        )));
    }
    let l = spec.length();
    let k = entry.xi / l;
    let span = entry.xi.max(T::one()).to_f64_lossy();
    let intervals = (resolution as f64 * span).ceil() as usize;
    let grid = spec.uniform_grid(intervals);
    let values: Vec<T> = grid.iter().map(|&x| entry.value_and_slope(spec, x).0).collect();
    // a cosh shape may dip to e^{-k l} legitimately; only sinusoids are checked for near-tangency
    let oscillatory = matches!(entry.shape(), Shape::Trig);
    let tiny = T::lit(1e-9);
    let slope_floor = T::lit(1e-8) * (k + spec.robin_left().abs() + l.recip());

    let mut zeros = 0;
    let mut last_sign = values[0].signum();
    let mut last_x = grid[0];
    for j in 1..values.len() {
        let v = values[j];
        if v == T::zero() {
            continue;
        }
        let sign = v.signum();
        if sign != last_sign {
            let f = |x: T| entry.value_and_slope(spec, x).0;
            let z = bisect(f, last_x, grid[j], T::epsilon());
            if entry.value_and_slope(spec, z).1.abs() <= slope_floor {
                return Err(BurgersError::TangentialZero {
                    index: entry.index,
                    x: z.to_f64_lossy(),
                });
            }
            zeros += 1;
            last_sign = sign;
        } else if oscillatory
            && j + 1 < values.len()
            && v.abs() < tiny
            && v.abs() <= values[j - 1].abs()
            && v.abs() <= values[j + 1].abs()
            && values[j + 1].signum() == sign
        {
            return Err(BurgersError::TangentialZero {
                index: entry.index,
                x: grid[j].to_f64_lossy(),
            });
        }
        last_x = grid[j];
    }
    Ok(zeros)
}
