//! Bound-state levels of the symmetric double Dirac-delta well.
//!
//! The decay rates satisfy `d± = q(1 ± e^{-d± R})`, which resolves to
//! `d± = q + W₀(±qR·e^{-qR})/R`; the two eigenenergies are `E± = -d±²/2`.

use crate::classicw::w0;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Well depth `q` and separation `r` (both positive).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DoubleWellParams<T = f64> {
    pub q: T,
    pub r: T,
}

/// Decay rates and eigenenergies of the two levels. `d_minus` (and with it
/// the antisymmetric level) degenerates to zero as `qR → 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DoubleWellLevels<T = f64> {
    pub d_plus: T,
    pub d_minus: T,
    pub e_plus: T,
    pub e_minus: T,
}

/// Solve `d = q(1 ± e^{-dR})` for both signs and form the energies.
///
/// The argument of the minus branch, `-qR·e^{-qR}`, never drops below
/// `-1/e`, so the principal Lambert branch always applies.
pub fn double_well_levels<T: Real>(p: &DoubleWellParams<T>) -> Result<DoubleWellLevels<T>> {
    if !(p.q > T::zero()) || !p.q.is_finite() {
        return Err(Error::Domain(format!("well depth must be positive, got {}", p.q)));
    }
    if !(p.r > T::zero()) || !p.r.is_finite() {
        return Err(Error::Domain(format!("separation must be positive, got {}", p.r)));
    }
    let u = p.q * p.r;
    let arg = u * (-u).exp();
    let d_plus = p.q + w0(arg)? / p.r;
    let d_minus = p.q + w0(-arg)? / p.r;
    let half = (T::one() + T::one()).recip();
    Ok(DoubleWellLevels {
        d_plus,
        d_minus,
        e_plus: -d_plus * d_plus * half,
        e_minus: -d_minus * d_minus * half,
    })
}
