//! Bracketed scalar root finding: bisection with Newton acceleration.
//!
//! Every solver in the crate funnels through [`bisect_newton`]. The bracket
//! guarantees convergence; the Newton step only ever replaces a bisection
//! step when it stays strictly inside the current bracket, so the combination
//! cannot escape or cycle.

use crate::scalar::{ulp_of, Real};

/// Outcome of a bracketed solve: the best abscissa seen and |f| there.
#[derive(Debug, Clone, Copy)]
pub(crate) struct BracketedRoot<T> {
    pub x: T,
    pub f_abs: T,
}

/// Find the root of `f` inside `[lo, hi]`, where `f(lo)` and `f(hi)` have
/// opposite signs. `df` is the derivative. Stops once `|f| <= target_abs`
/// or the bracket has collapsed to adjacent floats, and returns the best
/// point seen either way.
pub(crate) fn bisect_newton<T, F, D>(
    mut f: F,
    mut df: D,
    mut lo: T,
    mut hi: T,
    mut f_lo: T,
    target_abs: T,
    max_iter: usize,
) -> BracketedRoot<T>
where
    T: Real,
    F: FnMut(T) -> T,
    D: FnMut(T) -> T,
{
    debug_assert!(lo <= hi);
    let two = T::one() + T::one();
    let mut best = if f_lo.is_finite() {
        BracketedRoot { x: lo, f_abs: f_lo.abs() }
    } else {
        BracketedRoot { x: hi, f_abs: T::infinity() }
    };

    let mut x = (lo + hi) / two;
    for _ in 0..max_iter {
        let fx = f(x);
        if fx.is_finite() && fx.abs() < best.f_abs {
            best = BracketedRoot { x, f_abs: fx.abs() };
        }
        if fx == T::zero() || (fx.is_finite() && fx.abs() <= target_abs) {
            return best;
        }
        // shrink the bracket around the sign change
        if fx.is_nan() || (fx > T::zero()) == (f_lo > T::zero()) {
            lo = x;
            if fx.is_finite() {
                f_lo = fx;
            }
        } else {
            hi = x;
        }
        let width = hi - lo;
        if width <= ulp_of(lo).max(ulp_of(hi)) {
            break;
        }
        // Newton candidate, accepted only strictly inside the bracket
        let d = df(x);
        let newton = x - fx / d;
        x = if d != T::zero() && newton.is_finite() && newton > lo && newton < hi {
            newton
        } else {
            (lo + hi) / two
        };
        if x <= lo || x >= hi {
            x = (lo + hi) / two;
        }
    }

    // squeeze the last ulp: the float minimizing |f| among the neighbours
    for cand in [best.x - ulp_of(best.x), best.x + ulp_of(best.x)] {
        let fc = f(cand);
        if fc.is_finite() && fc.abs() < best.f_abs {
            best = BracketedRoot { x: cand, f_abs: fc.abs() };
        }
    }
    best
}

/// A few plain Newton steps from a start already inside the basin of a
/// simple root, keeping the best point seen by |f|. Used to re-polish roots
/// in a transformed variable where the residual scale differs from the one
/// the bracketed solve met.
pub(crate) fn newton_polish<T, F, D>(start: T, mut f: F, mut df: D) -> T
where
    T: Real,
    F: FnMut(T) -> T,
    D: FnMut(T) -> T,
{
    let mut x = start;
    let mut best = x;
    let mut best_f = f(x).abs();
    for _ in 0..6 {
        let fx = f(x);
        let d = df(x);
        if d == T::zero() || !fx.is_finite() {
            break;
        }
        let next = x - fx / d;
        if !next.is_finite() {
            break;
        }
        let fn_abs = f(next).abs();
        if fn_abs < best_f {
            best = next;
            best_f = fn_abs;
        }
        if next == x {
            break;
        }
        x = next;
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn newton_bisection_finds_cubic_root() {
        // x^3 - 2x - 5, the classical example root
        let f = |x: f64| x * x * x - 2.0 * x - 5.0;
        let df = |x: f64| 3.0 * x * x - 2.0;
        let r = bisect_newton(f, df, 2.0, 3.0, f(2.0), 1e-14, 200);
        assert!((r.x - 2.0945514815423265).abs() < 1e-12);
    }

    #[test]
    fn bisection_handles_flat_derivative() {
        let f = |x: f64| (x - 1.0).powi(3);
        let df = |x: f64| 3.0 * (x - 1.0).powi(2);
        let r = bisect_newton(f, df, 0.0, 2.5, f(0.0), 1e-30, 500);
        assert!((r.x - 1.0).abs() < 1e-9);
    }

}
