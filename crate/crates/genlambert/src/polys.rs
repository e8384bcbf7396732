//! Polynomial coefficient machinery for the series expansions: generalized
//! Laguerre polynomials, Bessel polynomials, Stirling numbers of the second
//! kind, rising factorials, and the auxiliary `M_k^{(n)}` polynomials.
//!
//! Laguerre values at arguments proportional to the degree grow or shrink
//! geometrically, far past the range of a double. Every polynomial evaluator
//! therefore reports a [`PolyValue`], a mantissa with an optional natural-log
//! scale, and the recurrences rescale internally.

use crate::error::{Error, Result};
use crate::scalar::{real_usize, Real};

/// A real value in overflow-safe form: `value · exp(log_scale)`.
///
/// When `log_scale` is present the mantissa is normalized into
/// `[1, 2) ∪ (-2, -1]`, or is exactly zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolyValue<T = f64> {
    value: T,
    log_scale: Option<T>,
}

impl<T: Real> PolyValue<T> {
    /// Wrap a plainly representable value (no scale attached).
    pub fn from_scalar(value: T) -> Self {
        PolyValue { value, log_scale: None }
    }

    /// Build from a mantissa and a natural-log scale, normalizing the
    /// mantissa into `[1, 2) ∪ (-2, -1]`.
    pub fn scaled(mantissa: T, ln_scale: T) -> Self {
        if mantissa == T::zero() || !mantissa.is_finite() {
            return PolyValue { value: mantissa, log_scale: Some(T::zero()) };
        }
        let two = T::one() + T::one();
        let ln2 = two.ln();
        let k = mantissa.abs().log2().floor();
        let mut m = mantissa * (-k).exp2();
        let mut e = ln_scale + k * ln2;
        while m.abs() >= two {
            m = m / two;
            e = e + ln2;
        }
        while m.abs() < T::one() {
            m = m * two;
            e = e - ln2;
        }
        PolyValue { value: m, log_scale: Some(e) }
    }

    /// The normalized mantissa.
    pub fn value(&self) -> T {
        self.value
    }

    /// The natural-log scale, if one is attached.
    pub fn log_scale(&self) -> Option<T> {
        self.log_scale
    }

    /// Collapse to a plain scalar. Overflows to infinity (or underflows to
    /// zero) when the represented magnitude leaves the scalar's range.
    pub fn to_scalar(&self) -> T {
        match self.log_scale {
            None => self.value,
            Some(e) => self.value * e.exp(),
        }
    }

    /// Natural log of the absolute value; `-∞` for zero.
    pub fn ln_abs(&self) -> T {
        if self.value == T::zero() {
            return T::neg_infinity();
        }
        match self.log_scale {
            None => self.value.abs().ln(),
            Some(e) => self.value.abs().ln() + e,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.value == T::zero()
    }

    /// Sign of the represented value: -1, 0 or +1.
    pub fn signum(&self) -> T {
        if self.value == T::zero() {
            T::zero()
        } else {
            self.value.signum()
        }
    }

    /// The same magnitude with flipped sign.
    pub fn neg(self) -> Self {
        PolyValue { value: -self.value, log_scale: self.log_scale }
    }
}

/// Rescaling threshold: 2^(half the exponent range) of the scalar type.
fn rescale_threshold<T: Real>() -> T {
    let half = (T::max_value().log2() / (T::one() + T::one())).floor();
    half.exp2()
}

/// Generalized Laguerre polynomial `L_n^{(α)}(x)` by the three-term
/// recurrence, rescaled so degrees in the hundreds stay representable.
pub fn laguerre<T: Real>(n: u32, alpha: u32, x: T) -> PolyValue<T> {
    let one = T::one();
    let alpha_t = real_usize::<T>(alpha as usize);
    if n == 0 {
        return PolyValue::from_scalar(one);
    }
    let big = rescale_threshold::<T>();
    let inv_big = big.recip();
    let ln_big = big.ln();

    let mut e = T::zero();
    let mut prev = one; // L_0
    let mut curr = one + alpha_t - x; // L_1
    for k in 1..n {
        let k_t = real_usize::<T>(k as usize);
        let next = ((k_t + k_t + one + alpha_t - x) * curr - (k_t + alpha_t) * prev)
            / (k_t + one);
        prev = curr;
        curr = next;
        let mag = curr.abs().max(prev.abs());
        if mag > big {
            curr = curr * inv_big;
            prev = prev * inv_big;
            e = e + ln_big;
        } else if mag < inv_big && mag > T::zero() {
            curr = curr * big;
            prev = prev * big;
            e = e - ln_big;
        }
    }
    PolyValue::scaled(curr, e)
}

/// Derivative of the plain Laguerre polynomial: `L_n'(x) = -L_{n-1}^{(1)}(x)`.
pub fn laguerre_deriv<T: Real>(n: u32, x: T) -> PolyValue<T> {
    assert!(n >= 1, "laguerre_deriv requires n >= 1");
    laguerre(n - 1, 1, x).neg()
}

/// Bessel polynomial `B_n(z) = Σ_k (n+k)!/(k!(n-k)!) (z/2)^k` by direct
/// summation with log-scaled factorials.
pub fn bessel_poly<T: Real>(n: u32, z: T) -> PolyValue<T> {
    let one = T::one();
    if n == 0 || z == T::zero() {
        return PolyValue::from_scalar(one);
    }
    let n = n as usize;
    // ln k! for k = 0..=2n
    let mut lnfact = vec![T::zero(); 2 * n + 1];
    for k in 2..=2 * n {
        lnfact[k] = lnfact[k - 1] + real_usize::<T>(k).ln();
    }
    let half = z / (one + one);
    let ln_h = half.abs().ln();
    let sign_h = half.signum();

    let mut ln_terms = Vec::with_capacity(n + 1);
    let mut max_ln = T::neg_infinity();
    for k in 0..=n {
        let lt = lnfact[n + k] - lnfact[k] - lnfact[n - k] + real_usize::<T>(k) * ln_h;
        if lt > max_ln {
            max_ln = lt;
        }
        ln_terms.push(lt);
    }
    let mut sum = T::zero();
    let mut sign = one;
    for (k, &lt) in ln_terms.iter().enumerate() {
        if k > 0 {
            sign = sign * sign_h;
        }
        sum = sum + sign * (lt - max_ln).exp();
    }
    PolyValue::scaled(sum, max_ln)
}

/// Stirling number of the second kind `S(k, i)`: partitions of a `k`-set
/// into `i` nonempty blocks. Exact integer arithmetic; reports overflow
/// rather than silently losing precision.
pub fn stirling2(k: u32, i: u32) -> Result<u128> {
    if i > k {
        return Err(Error::Domain(format!("stirling2 requires i <= k, got ({k}, {i})")));
    }
    let k = k as usize;
    let i = i as usize;
    let mut row = vec![0u128; i + 1];
    row[0] = 1; // S(0, 0)
    for r in 1..=k {
        let top = i.min(r);
        for j in (1..=top).rev() {
            let kept = row[j]
                .checked_mul(j as u128)
                .and_then(|v| v.checked_add(row[j - 1]));
            row[j] = kept.ok_or_else(|| {
                Error::Overflow(format!("stirling2({k}, {i}) exceeds 128-bit range"))
            })?;
        }
        row[0] = 0; // S(r, 0) = 0 for r >= 1
    }
    Ok(row[i])
}

/// Row `S(k, 1..=k)` of Stirling numbers in floating point, for coefficient
/// work past the exact-integer range. Index `j` holds `S(k, j)`.
pub(crate) fn stirling2_row<T: Real>(k: u32) -> Vec<T> {
    let k = k as usize;
    let mut row = vec![T::zero(); k + 1];
    row[0] = T::one();
    for r in 1..=k {
        for j in (1..=r).rev() {
            row[j] = real_usize::<T>(j) * row[j] + row[j - 1];
        }
        row[0] = T::zero();
    }
    row
}

/// The polynomial `M_k^{(n)}(y) = Σ_{i=1}^{k} n^{ī} S(k,i) (-y)^i`, where
/// `n^{ī}` is the rising factorial `n(n+1)···(n+i-1)`.
pub fn m_poly<T: Real>(k: u32, n: u32, y: T) -> T {
    assert!(k >= 1, "m_poly requires k >= 1");
    assert!(n >= 1, "m_poly requires n >= 1");
    let row = stirling2_row::<T>(k);
    let n_t = real_usize::<T>(n as usize);
    let mut rising = n_t; // n^{1̄}
    let mut power = -y; // (-y)^1
    let mut acc = rising * row[1] * power;
    for i in 2..=(k as usize) {
        rising = rising * (n_t + real_usize::<T>(i - 1));
        power = power * (-y);
        acc = acc + rising * row[i] * power;
    }
    acc
}
