//! Real branches of the classical Lambert function, the inverse of
//! `x ↦ x·eˣ`.
//!
//! Two real branches exist: the principal branch `W₀` on `[-1/e, ∞)` and
//! `W₋₁` on `[-1/e, 0)`. Both meet at the branch point `a = -1/e`, where the
//! inverse has a square-root singularity.

use crate::error::{Error, Result};
use crate::roots::bisect_newton;
use crate::scalar::{neg_inv_e, real, Real};

/// The two real branches of the Lambert function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicBranch {
    /// `W₀`, defined on `[-1/e, ∞)`, with values in `[-1, ∞)`.
    Principal,
    /// `W₋₁`, defined on `[-1/e, 0)`, with values in `(-∞, -1]`.
    MinusOne,
}

/// Evaluate the requested real branch of the Lambert function at `a`.
///
/// The result `x` satisfies `x·eˣ = a` to within a few ulps of `a`; near the
/// branch point the attainable absolute accuracy degrades to the square root
/// of machine precision, as dictated by the singularity itself.
pub fn lambert_w<T: Real>(branch: ClassicBranch, a: T) -> Result<T> {
    if a.is_nan() {
        return Err(Error::Domain("argument is NaN".into()));
    }
    let bp = neg_inv_e::<T>();
    // tolerate arguments a few ulps below -1/e: they round to the branch point
    let slack = real::<T>(16.0) * T::epsilon() * bp.abs();
    if a < bp - slack {
        return Err(Error::Domain(format!(
            "argument {a} below the branch point -1/e = {bp}"
        )));
    }
    let a = if a < bp { bp } else { a };

    match branch {
        ClassicBranch::Principal => w_principal(a),
        ClassicBranch::MinusOne => {
            if a >= T::zero() {
                return Err(Error::Domain(format!(
                    "branch W_-1 requires a < 0, got {a}"
                )));
            }
            w_minus_one(a)
        }
    }
}

/// `W₀(a)`, shorthand for [`lambert_w`] on the principal branch.
pub fn w0<T: Real>(a: T) -> Result<T> {
    lambert_w(ClassicBranch::Principal, a)
}

/// `W₋₁(a)`, shorthand for [`lambert_w`] on the lower branch.
pub fn wm1<T: Real>(a: T) -> Result<T> {
    lambert_w(ClassicBranch::MinusOne, a)
}

/// Expansion of W about the branch point in powers of `p = ±√(2(e·a+1))`.
/// `p > 0` gives the principal branch, `p < 0` the lower one.
fn branch_point_series<T: Real>(p: T) -> T {
    let c2 = -T::one() / real::<T>(3.0);
    let c3 = real::<T>(11.0 / 72.0);
    -T::one() + p * (T::one() + p * (c2 + p * c3))
}

fn residual_target<T: Real>(a: T) -> T {
    real::<T>(4.0) * T::epsilon() * (T::one() + a.abs())
}

fn w_principal<T: Real>(a: T) -> Result<T> {
    if a == T::zero() {
        return Ok(T::zero());
    }
    let one = T::one();
    let e = one.exp();

    let p_sq = (real::<T>(2.0) * (e * a + one)).max(T::zero());
    if p_sq == T::zero() {
        return Ok(-one);
    }

    // bracket with f increasing: f(lo) <= 0 <= f(hi)
    let (lo, hi) = if a < T::zero() {
        (-one, T::zero())
    } else if a <= e {
        (T::zero(), one)
    } else {
        let ln_a = a.ln();
        (ln_a - ln_a.ln(), ln_a)
    };

    let f = |x: T| x * x.exp() - a;
    let df = |x: T| x.exp() * (one + x);
    let sol = bisect_newton(f, df, lo, hi, f(lo), residual_target(a), 120);
    check_residual(sol.x, sol.f_abs, a)
}

fn w_minus_one<T: Real>(a: T) -> Result<T> {
    let one = T::one();
    let e = one.exp();
    let p_sq = (real::<T>(2.0) * (e * a + one)).max(T::zero());
    if p_sq == T::zero() {
        return Ok(-one);
    }
    if p_sq < real::<T>(1e-6) {
        // so close to the branch point that the series is already at full
        // attainable accuracy
        return Ok(branch_point_series(-p_sq.sqrt()));
    }

    // f = x e^x - a is decreasing on (-inf, -1]: f(-1) <= 0, f -> -a > 0 leftward
    let f = |x: T| x * x.exp() - a;
    let df = |x: T| x.exp() * (one + x);
    let mut lo = -one - one;
    while f(lo) <= T::zero() {
        lo = lo + (lo + one); // double the distance from -1
        if lo < real::<T>(-1.0e4) {
            return Err(Error::NoConvergence(
                "failed to bracket W_-1; argument too close to zero".into(),
            ));
        }
    }
    let sol = bisect_newton(f, df, lo, -one, f(lo), residual_target(a), 160);
    check_residual(sol.x, sol.f_abs, a)
}

fn check_residual<T: Real>(x: T, f_abs: T, a: T) -> Result<T> {
    // near the branch point the square-root singularity limits |x e^x - a|
    // to about eps; anywhere else the safeguarded iteration reaches the ulp
    // level. A residual grossly above that signals a logic error.
    let net = real::<T>(1e-10).max(T::epsilon() * real::<T>(1e4));
    if f_abs <= net * (T::one() + a.abs()) {
        Ok(x)
    } else {
        Err(Error::NoConvergence(format!(
            "residual {f_abs} at x = {x} for a = {a}"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent check: bisection on x e^x = a over a given interval.
    fn bisection_oracle(a: f64, mut lo: f64, mut hi: f64) -> f64 {
        let f = |x: f64| x * x.exp() - a;
        assert!(
            f(lo) * f(hi) <= 0.0,
            "oracle bracket invalid for a = {a}"
        );
        let lo_sign = f(lo) > 0.0;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if (f(mid) > 0.0) == lo_sign {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn principal_at_zero_and_e() {
        assert_eq!(w0(0.0).unwrap(), 0.0);
        let x = w0(std::f64::consts::E).unwrap();
        assert!((x - 1.0).abs() < 1e-14);
    }

    #[test]
    fn omega_constant() {
        // bisection oracle on x e^x = 1 to 1e-12
        let oracle = bisection_oracle(1.0, 0.0, 1.0);
        let x = w0(1.0).unwrap();
        assert!((x - oracle).abs() < 1e-12);
        assert!((x - 0.5671432904).abs() < 1e-9);
    }

    #[test]
    fn lower_branch_at_branch_point() {
        let x = wm1(-(-1.0f64).exp()).unwrap();
        assert!((x + 1.0).abs() < 1e-7);
    }

    #[test]
    fn lower_branch_at_minus_tenth() {
        let oracle = bisection_oracle(-0.1, -20.0, -1.0);
        let x = wm1(-0.1).unwrap();
        assert!((x - oracle).abs() < 1e-11);
        assert!((x - (-3.577152)).abs() < 1e-5);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(w0(-0.4), Err(Error::Domain(_))));
        assert!(matches!(wm1(-0.4), Err(Error::Domain(_))));
        assert!(matches!(wm1(0.0), Err(Error::Domain(_))));
        assert!(matches!(wm1(1.0), Err(Error::Domain(_))));
        assert!(matches!(w0(f64::NAN), Err(Error::Domain(_))));
    }

    #[test]
    fn roundtrip_principal() {
        let bp = -(-1.0f64).exp();
        // log-ish grid reaching from near the branch point to large a
        let mut a = bp + 1e-12;
        let mut samples = vec![a, bp + 1e-6, -0.1, -1e-8, 1e-8, 0.5, 1.0, 10.0];
        while a < 1e12 {
            a = a.abs().max(1e-3) * 3.7;
            samples.push(a);
        }
        for &a in &samples {
            let x = w0(a).unwrap();
            assert!(
                (x * x.exp() - a).abs() <= 1e-12 * (1.0 + a.abs()),
                "roundtrip failed at a = {a}"
            );
            assert!(x >= -1.0 - 1e-12);
        }
    }

    #[test]
    fn roundtrip_lower() {
        let bp = -(-1.0f64).exp();
        for i in 1..400 {
            let a = bp * (1.0 - (i as f64 / 400.0).powi(2)).max(1e-14);
            let x = wm1(a).unwrap();
            assert!(
                (x * x.exp() - a).abs() <= 1e-12 * (1.0 + a.abs()),
                "roundtrip failed at a = {a}"
            );
            assert!(x <= -1.0 + 1e-12);
        }
    }

    #[test]
    fn monotonicity() {
        let bp = -(-1.0f64).exp();
        let mut prev = -1.0;
        for i in 1..=1000 {
            let a = bp + (i as f64) * 0.02;
            let x = w0(a).unwrap();
            assert!(x > prev, "W0 not increasing at a = {a}");
            prev = x;
        }
        let mut prev = -1.0;
        for i in 1..1000 {
            let a = bp + (i as f64 / 1000.0) * (-bp - 1e-9);
            let x = wm1(a).unwrap();
            assert!(x < prev + 1e-13, "W-1 not decreasing at a = {a}");
            prev = x;
        }
    }

    #[test]
    fn branches_meet_at_branch_point() {
        let bp = -(-1.0f64).exp();
        let p = w0(bp).unwrap();
        let m = wm1(bp).unwrap();
        assert!((p + 1.0).abs() < 1e-10);
        assert!((m + 1.0).abs() < 1e-10);
    }

    #[test]
    fn works_at_f32() {
        let x = w0(1.0f32).unwrap();
        assert!((x * x.exp() - 1.0).abs() < 1e-5);
    }
}
