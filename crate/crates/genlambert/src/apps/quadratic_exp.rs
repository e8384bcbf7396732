//! Real solutions of the quadratic-exponential equation
//! `e^{-cx} = a₀(x-t₁)(x-t₂)`.

use crate::error::Result;
use crate::genw::{canonicalize, RationalExpEquation, SolutionSet};
use crate::roots::newton_polish;
use crate::scalar::Real;

/// Solve `e^{-cx} = a₀(x-t₁)(x-t₂)` for every real root, via the scaled
/// canonical form with back-map `x = X/c`. Residuals are reported against
/// the raw equation.
pub fn solve_quadratic_exp<T: Real>(c: T, a0: T, t1: T, t2: T, tol: T) -> Result<SolutionSet<T>> {
    let eq = RationalExpEquation { c, a0, upper_raw: vec![t1, t2], lower_raw: vec![] };
    let canon = canonicalize(&eq)?;
    let mut set = canon.solve(&eq, tol)?;
    // polish on the raw residual h(x) = e^{-cx} - a0(x-t1)(x-t2)
    let h = |x: T| (-c * x).exp() - a0 * (x - t1) * (x - t2);
    let dh = |x: T| -c * (-c * x).exp() - a0 * ((x - t1) + (x - t2));
    for r in &mut set.roots {
        r.x = newton_polish(r.x, h, dh);
        r.residual = eq.residual(r.x);
    }
    Ok(set)
}
