//! Derivative-free bracketing of scalar roots with a Newton polish.

use crate::scalar::Scalar;

/// Sign-change brackets of `f` on the uniform scan `start, start + step, ...`
/// up to and including `end`.
///
/// `f(start)` may be supplied separately through `f_start` when `f` itself is
/// degenerate at the first node (e.g. a removable `0/0`).
pub fn scan_brackets<T, F>(f: F, start: T, end: T, step: T, f_start: Option<T>) -> Vec<(T, T)>
where
    T: Scalar,
    F: Fn(T) -> T,
{
    let mut out = Vec::new();
    let mut x_prev = start;
    let mut f_prev = f_start.unwrap_or_else(|| f(start));
    let mut j = 1usize;
    loop {
        let x = start + T::from_usize_lossy(j) * step;
        if x > end {
            break;
        }
        let fx = f(x);
        if fx == T::zero() || (f_prev != T::zero() && (f_prev < T::zero()) != (fx < T::zero())) {
            out.push((x_prev, x));
        }
        x_prev = x;
        f_prev = fx;
        j += 1;
    }
    out
}

/// Bisection on a sign-change bracket until the bracket width drops below
/// `rtol * max(|x|, tiny)` or the floats are adjacent.
pub fn bisect<T, F>(f: F, lo: T, hi: T, rtol: T) -> T
where
    T: Scalar,
    F: Fn(T) -> T,
{
    let (mut a, mut b) = (lo, hi);
    let mut fa = f(a);
    if fa == T::zero() {
        return a;
    }
    if f(b) == T::zero() {
        return b;
    }
    let two = T::lit(2.0);
    for _ in 0..400 {
        let m = a + (b - a) / two;
        if m <= a || m >= b {
            break;
        }
        let fm = f(m);
        if fm == T::zero() {
            return m;
        }
        if (fm < T::zero()) == (fa < T::zero()) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
        if (b - a) <= rtol * a.abs().max(b.abs()).max(T::min_positive_value()) {
            break;
        }
    }
    a + (b - a) / two
}

/// One Newton step from `x`, kept only if it stays inside `[lo, hi]` and
/// does not increase `|f|`.
pub fn newton_polish<T, F, D>(f: F, df: D, x: T, lo: T, hi: T) -> T
where
    T: Scalar,
    F: Fn(T) -> T,
    D: Fn(T) -> T,
{
    let fx = f(x);
    let d = df(x);
    if fx == T::zero() || d == T::zero() || !d.is_finite() {
        return x;
    }
    let candidate = x - fx / d;
    if candidate >= lo && candidate <= hi && f(candidate).abs() <= fx.abs() {
        candidate
    } else {
        x
    }
}
