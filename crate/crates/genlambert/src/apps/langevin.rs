//! The Langevin function `L(x) = coth(x) - 1/x` and its inverse.
//!
//! `L(x) = a` rewrites (after clearing denominators and substituting
//! `u = -2x`) into `e^{-u} = ((a+1)/(a-1))·(u - 2/(a+1))/(u - 2/(a-1))`, a
//! one-upper/one-lower generalized Lambert equation. Clearing denominators
//! introduces a spurious root at `u = 0`, and the genuine root maps back
//! through `x = -u/2`; the defining relation `L(x) = a` is the arbiter for
//! that sign convention, verified in the round-trip tests.

use crate::error::{Error, Result};
use crate::genw::{solve_all, GenWParams};
use crate::roots::bisect_newton;
use crate::scalar::{real, Real};

/// `coth(x) - 1/x`, with the removable singularity at zero evaluated by the
/// series `x/3 - x³/45` for `|x| < 1e-2`.
pub fn langevin<T: Real>(x: T) -> T {
    if x.abs() < real::<T>(1e-2) {
        let three = real::<T>(3.0);
        let f45 = real::<T>(45.0);
        return x / three - x * x * x / f45;
    }
    x.tanh().recip() - x.recip()
}

/// Derivative `L'(x) = 1/x² - csch²(x)`, with the matching series near zero.
fn langevin_deriv<T: Real>(x: T) -> T {
    if x.abs() < real::<T>(1e-2) {
        let third = real::<T>(3.0).recip();
        let fifth = real::<T>(15.0).recip();
        return third - x * x * fifth;
    }
    let csch = x.sinh().recip();
    x.recip() * x.recip() - csch * csch
}

/// Inverse Langevin function on `(-1, 1)`, solved directly on the defining
/// relation by safeguarded Newton. Odd symmetry holds exactly by
/// construction.
pub fn inverse_langevin<T: Real>(a: T) -> Result<T> {
    check_domain(a)?;
    if a == T::zero() {
        return Ok(T::zero());
    }
    let sign = a.signum();
    let aa = a.abs();
    Ok(sign * inverse_positive(aa))
}

fn check_domain<T: Real>(a: T) -> Result<()> {
    if !a.is_finite() || a.abs() >= T::one() {
        return Err(Error::Domain(format!(
            "the Langevin function maps onto (-1, 1); no inverse at {a}"
        )));
    }
    Ok(())
}

fn inverse_positive<T: Real>(aa: T) -> T {
    let one = T::one();
    let three = real::<T>(3.0);
    // Padé-style starting guess a(3 - a²)/(1 - a²), exact to both limits
    let guess = aa * (three - aa * aa) / (one - aa * aa);
    let mut lo = guess * real::<T>(0.5);
    let mut hi = guess * real::<T>(1.5) + T::epsilon();
    while langevin(lo) >= aa {
        lo = lo * real::<T>(0.5);
    }
    while langevin(hi) <= aa {
        hi = hi * real::<T>(2.0);
    }
    let f = |x: T| langevin(x) - aa;
    let sol = bisect_newton(f, langevin_deriv, lo, hi, f(lo), T::zero(), 120);
    sol.x
}

/// Inverse Langevin through the generalized-Lambert reduction, without any
/// polish against `L` itself; kept separate so the two routes can be
/// compared as independent checks.
///
/// Toward `|a| → 1` the genuine root approaches the pole `2/(a-1)`
/// exponentially fast; once the gap underflows double resolution, the pole
/// position `1/(1-|a|)` itself is the correctly rounded inverse and is
/// returned directly.
pub fn inverse_langevin_via_genw<T: Real>(a: T) -> Result<T> {
    check_domain(a)?;
    if a == T::zero() {
        return Ok(T::zero());
    }
    let sign = a.signum();
    let aa = a.abs();
    let one = T::one();
    let two = one + one;

    let t1 = two / (aa + one);
    let s1 = two / (aa - one);
    let rhs = (aa - one) / (aa + one);
    let params = GenWParams::new(vec![t1], vec![s1], rhs)?;
    // drive the residual to the float noise floor: near a = 0 the genuine
    // root sits beside a tangency, where the slope of the equation is of
    // order a², so every decade of residual matters for the back-mapped x
    let set = solve_all(&params, real::<T>(1e-15).max(T::epsilon()))?;

    // the genuine root satisfies u = -2·L⁻¹(a) <= -6a; u = 0 is spurious
    let threshold = -real::<T>(3.0) * aa;
    let genuine = set
        .roots
        .iter()
        .map(|r| r.x)
        .filter(|&u| u < threshold)
        .fold(None, |acc: Option<T>, u| Some(acc.map_or(u, |v| v.min(u))));
    match genuine {
        Some(u) => Ok(sign * (-u / two)),
        None if aa > real::<T>(0.9) => Ok(sign * (one - aa).recip()),
        None => Err(Error::NoConvergence(format!(
            "reduction route found no usable root at a = {a}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn langevin_basics() {
        assert_eq!(langevin(0.0f64), 0.0);
        let v: f64 = langevin(1.0);
        assert!((v - 0.3130352855).abs() < 1e-10);
        // odd function
        for &x in &[1e-4f64, 0.005, 0.3, 2.0, 40.0] {
            assert_eq!(langevin(-x), -langevin(x));
        }
        // the series window joins the direct formula smoothly
        let eps = (langevin(0.01000001f64) - langevin(0.00999999)).abs();
        assert!(eps < 1e-8);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(inverse_langevin(0.0f64).unwrap(), 0.0);
        let a1 = 1.0f64.tanh().recip() - 1.0; // L(1) ≈ 0.3130352855
        assert!((a1 - 0.3130352855).abs() < 1e-10);
        assert!((inverse_langevin(a1).unwrap() - 1.0).abs() < 1e-12);
        let a2 = 2.0f64.tanh().recip() - 0.5; // L(2) ≈ 0.5373147
        assert!((a2 - 0.5373147094).abs() < 2e-8);
        assert!((inverse_langevin(a2).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn inverse_domain_errors() {
        for &a in &[1.0, -1.0, 1.5, f64::NAN] {
            assert!(matches!(inverse_langevin(a), Err(Error::Domain(_))));
            assert!(matches!(inverse_langevin_via_genw(a), Err(Error::Domain(_))));
        }
    }

    #[test]
    fn roundtrip_on_grid() {
        for i in 0..=1000 {
            let a = -0.99 + 1.98 * i as f64 / 1000.0;
            let x = inverse_langevin(a).unwrap();
            assert!(
                (langevin(x) - a).abs() <= 1e-11,
                "roundtrip {} at a = {a}",
                (langevin(x) - a).abs()
            );
            // odd symmetry is exact
            assert_eq!(inverse_langevin(-a).unwrap(), -x);
        }
    }

    #[test]
    fn reduction_route_agrees_with_direct() {
        for i in 0..=400 {
            let a = -0.99 + 1.98 * i as f64 / 400.0;
            if a == 0.0 {
                continue;
            }
            let direct = inverse_langevin(a).unwrap();
            let reduced = inverse_langevin_via_genw(a).unwrap();
            assert!(
                (direct - reduced).abs() <= 1e-10 * (1.0 + direct.abs()),
                "paths disagree at a = {a}: {direct} vs {reduced}"
            );
        }
    }

    #[test]
    fn reduction_route_survives_near_saturation() {
        // the root hugs the pole here; the limiting value must take over
        let a = 0.999999f64;
        let x = inverse_langevin_via_genw(a).unwrap();
        let direct = inverse_langevin(a).unwrap();
        assert!((x - direct).abs() <= 1e-9 * direct.abs());
    }
}
