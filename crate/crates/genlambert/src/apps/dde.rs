//! Real characteristic roots of the second-order delayed feedback equation
//! `(λ-t₁)(λ-t₂) = b₁·e^{-λτ}·(λ-s₁)`.
//!
//! The substitution `x = λτ` turns the characteristic equation into
//! `eˣ·(x-τt₁)(x-τt₂)/(x-τs₁) = b₁τ`, a generalized Lambert equation; the
//! roots map back through `λ = x/τ`.

use crate::error::{Error, Result};
use crate::genw::{solve_all, GenWParams, SolutionSet};
use crate::roots::newton_polish;
use crate::scalar::Real;

/// Factored characteristic data: polynomial roots `t₁, t₂` (left side) and
/// `s₁` (right side), feedback gain `b₁`, delay `τ > 0`. Factoring the
/// polynomials is the caller's job.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dde2Params<T = f64> {
    pub t1: T,
    pub t2: T,
    pub s1: T,
    pub b1: T,
    pub tau: T,
}

/// Real spectrum of [`Dde2Params`]: every real root, the rightmost one, and
/// its sign as a stability verdict.
///
/// The verdict covers the real spectrum only; complex root pairs are outside
/// the scope of this solver, so `stable_real_spectrum = Some(true)` is
/// necessary but not sufficient for full stability.
#[derive(Debug, Clone, PartialEq)]
pub struct DdeRealRoots<T = f64> {
    pub roots: SolutionSet<T>,
    pub rightmost: Option<T>,
    pub stable_real_spectrum: Option<bool>,
}

/// Find all real characteristic roots.
pub fn dde2_real_roots<T: Real>(p: &Dde2Params<T>, tol: T) -> Result<DdeRealRoots<T>> {
    if !(p.tau > T::zero()) || !p.tau.is_finite() {
        return Err(Error::Domain(format!("delay must be positive, got {}", p.tau)));
    }
    let upper = vec![p.tau * p.t1, p.tau * p.t2];
    let lower = vec![p.tau * p.s1];
    let params = GenWParams::new(upper, lower, p.b1 * p.tau)?;
    let mut set = solve_all(&params, tol)?;
    // the scaled residual is amplified by e^{-λτ}(λ-s₁)/τ² on the way back,
    // so polish each root against the characteristic function itself
    let h = |l: T| (l - p.t1) * (l - p.t2) - p.b1 * (-l * p.tau).exp() * (l - p.s1);
    let dh = |l: T| {
        (l - p.t1) + (l - p.t2)
            - p.b1 * (-l * p.tau).exp() * (T::one() - p.tau * (l - p.s1))
    };
    for r in &mut set.roots {
        r.x = newton_polish(r.x / p.tau, h, dh);
        r.residual = characteristic_residual(p, r.x);
    }
    // τ > 0 preserves order; indices stay valid
    let rightmost = set.roots.last().map(|r| r.x);
    Ok(DdeRealRoots {
        stable_real_spectrum: rightmost.map(|x| x < T::zero()),
        rightmost,
        roots: set,
    })
}

/// `|(λ-t₁)(λ-t₂) - b₁·e^{-λτ}·(λ-s₁)|`.
pub fn characteristic_residual<T: Real>(p: &Dde2Params<T>, lambda: T) -> T {
    ((lambda - p.t1) * (lambda - p.t2)
        - p.b1 * (-lambda * p.tau).exp() * (lambda - p.s1))
        .abs()
}
