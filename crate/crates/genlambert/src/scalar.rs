//! Floating-point scalar abstraction.
//!
//! All numeric routines in this crate are generic over [`Real`], so the same
//! code runs at `f32` or `f64` precision. The default type parameter on the
//! public structs is `f64`, which is what the command-line tool and the test
//! suite use.

use core::fmt;
use core::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating point scalar: `f32` or `f64`.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + fmt::Debug
    + fmt::Display
    + 'static
{
}

impl Real for f32 {}
impl Real for f64 {}

/// Convert an `f64` literal into the working scalar type.
///
/// Panics only if the conversion is unrepresentable, which cannot happen for
/// the in-range constants this crate uses.
#[inline]
pub fn real<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("constant not representable in scalar type")
}

/// Convert a `usize` into the working scalar type.
#[inline]
pub fn real_usize<T: Real>(n: usize) -> T {
    T::from_usize(n).expect("integer not representable in scalar type")
}

/// `-1/e`, the branch point of the classical Lambert function.
#[inline]
pub fn neg_inv_e<T: Real>() -> T {
    -(-T::one()).exp()
}

/// One unit in the last place of `x`, used for float-resolution stopping tests.
#[inline]
pub fn ulp_of<T: Real>(x: T) -> T {
    let ax = x.abs().max(T::min_positive_value());
    ax * T::epsilon()
}
