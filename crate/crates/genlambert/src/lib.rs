//! Real-valued generalized Lambert functions.
//!
//! The crate solves `eˣ·(x-t₁)···(x-tₙ)/((x-s₁)···(x-sₘ)) = a` over the
//! reals and builds everything the equation family touches on top of that:
//!
//! - [`classicw`]: the two real branches of the classical Lambert function;
//! - [`genw`]: the full solver (all real roots, residuals, bracket reports),
//!   closed-form reductions for small parameter counts, and canonicalization
//!   of `e^{-cx} = a₀·Π(x-tᵢ)/Π(x-sⱼ)`;
//! - [`series`]: Taylor expansions of the solutions around `a = 0`, with
//!   log-scaled coefficients and a closed-form radius of convergence for the
//!   one-upper/one-lower case;
//! - [`rlambert`]: the r-Lambert function `x·eˣ + r·x = n`, its branch
//!   structure and asymptotic forms;
//! - [`apps`]: double-well bound states, quadratic-exponential equations,
//!   delay differential equation spectra, water-wave dispersion inversion,
//!   and the inverse Langevin function;
//! - [`polys`]: the Laguerre/Bessel/Stirling coefficient machinery behind
//!   the series, in overflow-safe log-scaled form.
//!
//! Numeric code is generic over the [`Real`] scalar trait (`f32` or `f64`);
//! public structs default their scalar parameter to `f64`.

pub mod apps;
pub mod classicw;
pub mod error;
pub mod genw;
pub mod polys;
pub mod rlambert;
pub mod series;

mod roots;
mod scalar;

pub use crate::classicw::{lambert_w, w0, wm1, ClassicBranch};
pub use crate::error::{Error, Result};
pub use crate::genw::{
    canonicalize, reduce_special, solve_all, solve_all_bounded, BracketInfo, Canonicalized,
    GenWParams, RationalExpEquation, Root, SolutionSet, SpecialForm, SpecialReduction,
};
pub use crate::polys::PolyValue;
pub use crate::rlambert::{
    branch_structure, principal_branch_index, r_lambert, r_lambert_asymptotic,
    AsymptoticDirection, BranchStructure, RLambertQuery,
};
pub use crate::scalar::Real;
pub use crate::series::{
    radius_one_up_one_low, series_one_up_one_low, series_r_lambert, series_two_up,
    SeriesExpansion, SeriesKind,
};
