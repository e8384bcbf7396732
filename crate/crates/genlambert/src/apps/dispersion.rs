//! Wavenumber inversion for the linear water-wave dispersion relation.
//!
//! Single layer: `ω² = gk·tanh(kh)`. With `x = kh` and `y = ω²h/g` this is
//! `y = x·tanh(x)`, i.e. `e^{2x} = (x+y)/(x-y)`, increasing in `x`, so each
//! `y > 0` has one positive solution. Two layers of densities `ρ₁ > ρ₂`:
//! `ω² = gk(ρ₁-ρ₂)/(ρ₁·coth(kh)+ρ₂)`, which rearranges to
//! `e^{2x} = (x+y)/(x-cy)` with `c = (ρ₁+ρ₂)/(ρ₁-ρ₂)`; `ρ₂ = 0` gives back
//! the single-layer relation.

use crate::error::{Error, Result};
use crate::genw::{solve_all, GenWParams};
use crate::scalar::{real, Real};

/// Wave frequency, gravity, depth and the two layer densities. `rho2 = 0`
/// selects the single-layer relation (then `rho1` drops out).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DispersionParams<T = f64> {
    pub omega: T,
    pub g: T,
    pub h: T,
    pub rho1: T,
    pub rho2: T,
}

impl<T: Real> DispersionParams<T> {
    /// Single-layer setup (`rho1 = 1`, `rho2 = 0`).
    pub fn single_layer(omega: T, g: T, h: T) -> Self {
        DispersionParams { omega, g, h, rho1: T::one(), rho2: T::zero() }
    }
}

/// The inverted wavenumber `k` together with the nondimensional pair
/// `x = kh`, `y = ω²h/g`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DispersionSolution<T = f64> {
    pub k: T,
    pub x: T,
    pub y: T,
}

/// Invert the dispersion relation for the wavenumber.
pub fn invert_dispersion<T: Real>(p: &DispersionParams<T>) -> Result<DispersionSolution<T>> {
    for (name, v) in [("omega", p.omega), ("g", p.g), ("h", p.h)] {
        if !(v > T::zero()) || !v.is_finite() {
            return Err(Error::Domain(format!("{name} must be positive, got {v}")));
        }
    }
    let (rho1, rho2) = if p.rho2 == T::zero() {
        (T::one(), T::zero())
    } else {
        if p.rho2 < T::zero() || !(p.rho1 > p.rho2) {
            return Err(Error::Domain(format!(
                "two-layer inversion requires rho1 > rho2 >= 0, got rho1 = {}, rho2 = {}",
                p.rho1, p.rho2
            )));
        }
        (p.rho1, p.rho2)
    };
    let c = (rho1 + rho2) / (rho1 - rho2);
    let y = p.omega * p.omega * p.h / p.g;

    // deep regime: 1 - tanh(x) is below resolution, x = c·y exactly
    let x = if c * y > real::<T>(20.0) {
        c * y
    } else {
        let two = T::one() + T::one();
        let mut x0 = genw_first_guess(c, y).unwrap_or_else(|| {
            // bound max(y, sqrt(y)) < x always brackets from below
            c * y.max(y.sqrt()) + T::one()
        });
        // polish on the physical relation, which is what callers round-trip
        let phi = |x: T| x * (rho1 - rho2) / (rho1 / x.tanh() + rho2) - y;
        let dphi = |x: T| {
            let beta = rho1 / x.tanh() + rho2;
            let csch = x.sinh().recip();
            (rho1 - rho2) * (beta + x * rho1 * csch * csch) / (beta * beta)
        };
        for _ in 0..60 {
            let step = phi(x0) / dphi(x0);
            let next = x0 - step;
            if !next.is_finite() || next <= T::zero() {
                break;
            }
            let done = (next - x0).abs() <= x0.abs() * T::epsilon() * two;
            x0 = next;
            if done {
                break;
            }
        }
        x0
    };
    Ok(DispersionSolution { k: x / p.h, x, y })
}

/// First guess from the generalized Lambert form `e^u(u-2cy)/(u+2y) = 1`
/// with `u = 2x`: the unique root right of the zero `2cy`.
fn genw_first_guess<T: Real>(c: T, y: T) -> Option<T> {
    let two = T::one() + T::one();
    let params = GenWParams::new(vec![two * c * y], vec![-two * y], T::one()).ok()?;
    let set = solve_all(&params, real::<T>(1e-6)).ok()?;
    set.roots
        .iter()
        .map(|r| r.x)
        .filter(|&u| u > two * c * y)
        .fold(None, |acc: Option<T>, u| Some(acc.map_or(u, |v| v.min(u))))
        .map(|u| u / two)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forward_example_inverts_to_unit_wavenumber() {
        // ω = sqrt(9.81·tanh 1) makes k = 1 at h = 1
        let omega = (9.81f64 * 1.0f64.tanh()).sqrt();
        assert!((omega - 2.733357).abs() < 1e-6);
        let sol = invert_dispersion(&DispersionParams::single_layer(omega, 9.81, 1.0)).unwrap();
        assert!((sol.k - 1.0).abs() < 1e-12, "k = {}", sol.k);
        assert!((sol.y - 1.0f64.tanh()).abs() < 1e-15);
    }

    #[test]
    fn roundtrip_over_wide_y_range() {
        // log grid of y via omega; x·tanh(x) must reproduce y to 1e-12 relative
        for i in 0..=120 {
            let y = 10f64.powf(-6.0 + 9.0 * i as f64 / 120.0);
            let omega = (9.81 * y).sqrt();
            let sol = invert_dispersion(&DispersionParams::single_layer(omega, 9.81, 1.0)).unwrap();
            let back = sol.x * sol.x.tanh();
            assert!(
                (back - sol.y).abs() <= 1e-12 * sol.y,
                "y = {y}: roundtrip error {}",
                ((back - sol.y) / sol.y).abs()
            );
            // bound: x > max(y, sqrt(y)); representable strictly below the
            // deep-water regime, as equality in the last ulp beyond it
            let bound = sol.y.max(sol.y.sqrt());
            if sol.y < 17.0 {
                assert!(sol.x > bound, "bound violated at y = {y}");
            } else {
                assert!(sol.x >= bound, "bound violated at y = {y}");
            }
        }
    }

    #[test]
    fn two_layer_with_empty_top_matches_single_layer() {
        for &(omega, h) in &[(0.5f64, 2.0), (2.0, 1.0), (9.0, 3.0)] {
            let single =
                invert_dispersion(&DispersionParams::single_layer(omega, 9.81, h)).unwrap();
            let two = invert_dispersion(&DispersionParams {
                omega,
                g: 9.81,
                h,
                rho1: 1025.0,
                rho2: 0.0,
            })
            .unwrap();
            assert!((single.k - two.k).abs() <= 1e-12 * single.k.abs());
        }
    }

    #[test]
    fn two_layer_solves_its_relation() {
        let p = DispersionParams { omega: 1.2f64, g: 9.81, h: 4.0, rho1: 1025.0, rho2: 1000.0 };
        let sol = invert_dispersion(&p).unwrap();
        let back = sol.x * (p.rho1 - p.rho2) / (p.rho1 / sol.x.tanh() + p.rho2);
        assert!((back - sol.y).abs() <= 1e-12 * sol.y, "two-layer roundtrip");
        // heavier top layer is unphysical here
        let bad = DispersionParams { rho1: 1000.0, rho2: 1025.0, ..p };
        assert!(matches!(invert_dispersion(&bad), Err(Error::Domain(_))));
    }

    #[test]
    fn rejects_nonpositive_inputs() {
        assert!(invert_dispersion(&DispersionParams::single_layer(0.0f64, 9.81, 1.0)).is_err());
        assert!(invert_dispersion(&DispersionParams::single_layer(1.0f64, -9.81, 1.0)).is_err());
        assert!(invert_dispersion(&DispersionParams::single_layer(1.0f64, 9.81, 0.0)).is_err());
    }
}
