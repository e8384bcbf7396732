//! Taylor expansions of the generalized Lambert solutions around a zero
//! right-hand side, with truncation control and convergence checking.
//!
//! Three expansions are provided: one upper and one lower parameter (Laguerre
//! derivative coefficients, with a closed-form radius of convergence when
//! `t < s`), two upper parameters (Bessel polynomial coefficients), and the
//! r-Lambert expansion (Stirling-number polynomials `M_k^{(n)}`). All
//! coefficient arithmetic is log-scaled so the expansions stay usable at
//! degrees in the hundreds, far enough to run coefficient-ratio radius
//! estimates.

use crate::error::{Error, Result};
use crate::polys::{laguerre_deriv, bessel_poly, m_poly, PolyValue};
use crate::scalar::{real, real_usize, Real};

/// Which expansion a [`SeriesExpansion`] came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    /// One upper, one lower parameter.
    OneUpOneLow,
    /// Two upper parameters.
    TwoUp,
    /// r-Lambert expansion in the argument.
    RLambert,
}

/// A truncated expansion: log-scaled coefficients (entry 0 is the n = 1
/// term), the radius of convergence when one is known, and truncation
/// diagnostics.
///
/// `truncation_estimate` is a geometric-tail bound on the omitted remainder,
/// derived from the first omitted term and the last observed term ratio. A
/// large estimate flags that the partial sum cannot be trusted.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesExpansion<T = f64> {
    pub kind: SeriesKind,
    pub params: Vec<T>,
    pub coeffs: Vec<PolyValue<T>>,
    pub radius: Option<T>,
    pub terms_used: usize,
    pub truncation_estimate: T,
}

/// Relative size at which further terms stop changing the partial sum.
fn stop_threshold<T: Real>() -> T {
    real::<T>(1e-16).max(T::epsilon() * real::<T>(0.25))
}

/// Geometric tail bound from the first omitted term and the last observed
/// ratio, with one extra ratio factor of margin since early ratios tend to
/// undershoot the asymptotic one.
fn tail_bound<T: Real>(first_omitted: T, ratio: T) -> T {
    if !first_omitted.is_finite() {
        return T::infinity();
    }
    let cap = real::<T>(0.97);
    if ratio.is_finite() && ratio >= T::zero() && ratio < cap {
        let rest = T::one() - ratio;
        first_omitted / (rest * rest)
    } else {
        first_omitted * real::<T>(33.0)
    }
}

/// Shared summation driver: feeds term magnitudes from a coefficient
/// generator, applies the stop rule, and watches for divergence.
struct Summation<T> {
    sum: T,
    prev_mag: T,
    growth_streak: usize,
    small_streak: usize,
    terms_used: usize,
    last_ratio: T,
}

impl<T: Real> Summation<T> {
    fn new(constant: T) -> Self {
        Summation {
            sum: constant,
            prev_mag: T::infinity(),
            growth_streak: 0,
            small_streak: 0,
            terms_used: 0,
            last_ratio: T::zero(),
        }
    }

    /// Add one term. Returns `true` when summation should stop (converged).
    /// Two consecutive negligible terms are required, since a single
    /// coefficient may legitimately vanish mid-series.
    fn push(&mut self, term: T) -> bool {
        let mag = term.abs();
        self.sum = self.sum + term;
        self.terms_used += 1;
        if self.prev_mag.is_finite() && self.prev_mag > T::zero() {
            self.last_ratio = mag / self.prev_mag;
            if mag > self.prev_mag {
                self.growth_streak += 1;
            } else {
                self.growth_streak = 0;
            }
        }
        self.prev_mag = mag;
        if mag <= stop_threshold::<T>() * (T::one() + self.sum.abs()) {
            self.small_streak += 1;
        } else {
            self.small_streak = 0;
        }
        self.small_streak >= 2
    }

    fn diverging(&self) -> bool {
        self.growth_streak >= 5 && self.terms_used >= 6
    }
}

// ---------------------------------------------------------------------------
// one upper, one lower parameter
// ---------------------------------------------------------------------------

/// Radius of convergence of the one-up/one-low expansion, valid for `t < s`:
/// `e^{(t+s)/2 - 2√(s-t)}`.
pub fn radius_one_up_one_low<T: Real>(t: T, s: T) -> Result<T> {
    if !(t < s) {
        return Err(Error::Domain(format!(
            "radius formula requires t < s, got t = {t}, s = {s}"
        )));
    }
    let two = T::one() + T::one();
    Ok(((t + s) / two - two * (s - t).sqrt()).exp())
}

/// Coefficient of `aⁿ` in the one-up/one-low expansion:
/// `-T·L_n'(nT)·e^{-nt}/n` with `T = t - s`.
pub fn one_up_one_low_coefficient<T: Real>(t: T, s: T, n: u32) -> PolyValue<T> {
    let big_t = t - s;
    let n_t = real_usize::<T>(n as usize);
    let deriv = laguerre_deriv(n, n_t * big_t);
    let mantissa = -big_t * deriv.value() / n_t;
    let ln_scale = deriv.log_scale().unwrap_or_else(T::zero) - n_t * t;
    PolyValue::scaled(mantissa, ln_scale)
}

/// Sum the expansion of the root of `eˣ(x-t)/(x-s) = a` that passes through
/// `x = t` at `a = 0`.
pub fn series_one_up_one_low<T: Real>(
    t: T,
    s: T,
    a: T,
    n_max: u32,
) -> Result<(T, SeriesExpansion<T>)> {
    if t == s {
        return Err(Error::DegenerateInput("series requires t ≠ s".into()));
    }
    if n_max < 1 {
        return Err(Error::Domain("n_max must be at least 1".into()));
    }
    let radius = if t < s { Some(radius_one_up_one_low(t, s)?) } else { None };
    if let Some(r) = radius {
        if a.abs() >= r {
            return Err(Error::ConvergenceDomain(format!(
                "|a| = {} is not below the radius of convergence {r}",
                a.abs()
            )));
        }
    }

    let ln_a = a.abs().ln();
    let sign_a = a.signum();
    let mut coeffs = Vec::new();
    let mut acc = Summation::new(t);
    let mut pow_sign = T::one();
    for n in 1..=n_max {
        let c = one_up_one_low_coefficient(t, s, n);
        coeffs.push(c);
        pow_sign = pow_sign * sign_a;
        let term = term_value(&c, real_usize::<T>(n as usize) * ln_a, pow_sign);
        if acc.push(term) {
            break;
        }
        if acc.diverging() {
            return Err(Error::ConvergenceDomain(
                "series terms are growing; argument outside the convergence domain".into(),
            ));
        }
    }
    let n_next = acc.terms_used as u32 + 1;
    let c_next = one_up_one_low_coefficient(t, s, n_next);
    let omitted = term_value(&c_next, real_usize::<T>(n_next as usize) * ln_a, T::one()).abs();
    let expansion = SeriesExpansion {
        kind: SeriesKind::OneUpOneLow,
        params: vec![t, s],
        coeffs,
        radius,
        terms_used: acc.terms_used,
        truncation_estimate: tail_bound(omitted, acc.last_ratio),
    };
    Ok((acc.sum, expansion))
}

// ---------------------------------------------------------------------------
// two upper parameters
// ---------------------------------------------------------------------------

/// Coefficient of `aⁿ` in the two-upper expansion:
/// `-(1/(n·n!))·(n·e^{-t₁}/T)ⁿ·B_{n-1}(-2/(nT))` with `T = t₂ - t₁`.
pub fn two_up_coefficient<T: Real>(t1: T, t2: T, n: u32, lnfact_n: T) -> PolyValue<T> {
    let big_t = t2 - t1;
    let n_t = real_usize::<T>(n as usize);
    let two = T::one() + T::one();
    let b = bessel_poly(n - 1, -two / (n_t * big_t));
    // ln of (n e^{-t1}/|T|)^n / (n · n!)
    let ln_mag = n_t * (n_t.ln() - t1 - big_t.abs().ln()) - n_t.ln() - lnfact_n;
    let sign_ratio = if big_t > T::zero() { T::one() } else { -T::one() };
    let sign_pow = if n % 2 == 0 { T::one() } else { sign_ratio };
    let mantissa = -sign_pow * b.value();
    PolyValue::scaled(mantissa, ln_mag + b.log_scale().unwrap_or_else(T::zero))
}

/// Sum the expansion of the root of `eˣ(x-t₁)(x-t₂) = a` passing through
/// `x = t₁` at `a = 0`.
pub fn series_two_up<T: Real>(t1: T, t2: T, a: T, n_max: u32) -> Result<(T, SeriesExpansion<T>)> {
    if t1 == t2 {
        return Err(Error::DegenerateInput("series requires t₁ ≠ t₂".into()));
    }
    if n_max < 1 {
        return Err(Error::Domain("n_max must be at least 1".into()));
    }
    let ln_a = a.abs().ln();
    let sign_a = a.signum();
    let mut coeffs = Vec::new();
    let mut acc = Summation::new(t1);
    let mut pow_sign = T::one();
    let mut lnfact = T::zero();
    for n in 1..=n_max {
        lnfact = lnfact + real_usize::<T>(n as usize).ln();
        let c = two_up_coefficient(t1, t2, n, lnfact);
        coeffs.push(c);
        pow_sign = pow_sign * sign_a;
        let term = term_value(&c, real_usize::<T>(n as usize) * ln_a, pow_sign);
        if acc.push(term) {
            break;
        }
        if acc.diverging() {
            return Err(Error::Diverging(format!(
                "two-upper series terms grow by n = {n}; |a| = {} is too large",
                a.abs()
            )));
        }
    }
    let n_next = acc.terms_used as u32 + 1;
    let lnfact_next = lnfact + real_usize::<T>(n_next as usize).ln();
    let c_next = two_up_coefficient(t1, t2, n_next, lnfact_next);
    let omitted = term_value(&c_next, real_usize::<T>(n_next as usize) * ln_a, T::one()).abs();
    let expansion = SeriesExpansion {
        kind: SeriesKind::TwoUp,
        params: vec![t1, t2],
        coeffs,
        radius: None,
        terms_used: acc.terms_used,
        truncation_estimate: tail_bound(omitted, acc.last_ratio),
    };
    Ok((acc.sum, expansion))
}

// ---------------------------------------------------------------------------
// r-Lambert expansion
// ---------------------------------------------------------------------------

/// Coefficient of `xⁿ` in the r-Lambert expansion about 0:
/// `1/(r+1)` for n = 1, `M_{n-1}^{(n)}(1/(r+1)) / ((r+1)ⁿ·n!)` beyond.
pub fn r_lambert_coefficient<T: Real>(r: T, n: u32) -> PolyValue<T> {
    let rp1 = r + T::one();
    if n == 1 {
        return PolyValue::scaled(rp1.recip(), T::zero());
    }
    let y = rp1.recip();
    let m = m_poly(n - 1, n, y);
    let mut lnfact = T::zero();
    for k in 2..=(n as usize) {
        lnfact = lnfact + real_usize::<T>(k).ln();
    }
    let ln_scale = -real_usize::<T>(n as usize) * rp1.abs().ln() - lnfact;
    let sign_pow = if n % 2 == 0 || rp1 > T::zero() { T::one() } else { -T::one() };
    PolyValue::scaled(m * sign_pow, ln_scale)
}

/// Sum the r-Lambert expansion `W_r(x) = x/(r+1) + Σ_{n≥2} M_{n-1}^{(n)}(…)
/// xⁿ/((r+1)ⁿ n!)` at `x`. Check `truncation_estimate` on the returned
/// expansion before trusting the value: outside the (parameter-dependent)
/// convergence region the partial sum is reported with a large estimate
/// rather than an error.
pub fn series_r_lambert<T: Real>(r: T, x: T, n_max: u32) -> Result<(T, SeriesExpansion<T>)> {
    if r == -T::one() {
        return Err(Error::DegenerateInput("r-Lambert series requires r ≠ -1".into()));
    }
    if n_max < 1 {
        return Err(Error::Domain("n_max must be at least 1".into()));
    }
    let ln_x = x.abs().ln();
    let sign_x = x.signum();
    let mut coeffs = Vec::new();
    let mut acc = Summation::new(T::zero());
    let mut pow_sign = T::one();
    for n in 1..=n_max {
        let c = r_lambert_coefficient(r, n);
        coeffs.push(c);
        pow_sign = pow_sign * sign_x;
        let term = term_value(&c, real_usize::<T>(n as usize) * ln_x, pow_sign);
        if acc.push(term) {
            break;
        }
        if acc.diverging() {
            break; // report the partial sum; the truncation estimate flags it
        }
    }
    let n_next = acc.terms_used as u32 + 1;
    let c_next = r_lambert_coefficient(r, n_next);
    let omitted = term_value(&c_next, real_usize::<T>(n_next as usize) * ln_x, T::one()).abs();
    let expansion = SeriesExpansion {
        kind: SeriesKind::RLambert,
        params: vec![r],
        coeffs,
        radius: None,
        terms_used: acc.terms_used,
        truncation_estimate: tail_bound(omitted, acc.last_ratio),
    };
    Ok((acc.sum, expansion))
}

/// `coefficient · exp(n·ln|arg|) · signⁿ`, assembled in log space.
fn term_value<T: Real>(c: &PolyValue<T>, ln_pow: T, pow_sign: T) -> T {
    if c.is_zero() {
        return T::zero();
    }
    if ln_pow == T::neg_infinity() {
        return T::zero(); // argument is exactly zero
    }
    c.signum() * pow_sign * (c.ln_abs() + ln_pow).exp()
}
