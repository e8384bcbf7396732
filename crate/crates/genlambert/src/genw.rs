//! Solver for the generalized Lambert equation
//! `eˣ·(x-t₁)···(x-tₙ)/((x-s₁)···(x-sₘ)) = a` over the reals.
//!
//! The real line is partitioned at the poles `sⱼ` and at the critical points
//! of the left-hand side `F`. Critical points are the real roots of a
//! polynomial (the numerator of `F'/F` cleared of denominators), isolated by
//! recursive monotone decomposition. Between consecutive landmarks `F` is
//! strictly monotone, so each segment carries at most one root of `F = a`,
//! bracketed from analytically known endpoint signs and polished by
//! safeguarded Newton. No root between landmarks can be missed.

use crate::classicw::{w0, wm1};
use crate::error::{Error, Result};
use crate::roots::bisect_newton;
use crate::scalar::{real, ulp_of, Real};

/// Parameters of the generalized Lambert equation: upper parameters `tᵢ`
/// (zeros of the numerator), lower parameters `sⱼ` (poles), and the
/// right-hand side `a`.
#[derive(Debug, Clone, PartialEq)]
pub struct GenWParams<T = f64> {
    pub upper: Vec<T>,
    pub lower: Vec<T>,
    pub a: T,
}

impl<T: Real> GenWParams<T> {
    /// Validate and build. A value shared between the upper and lower lists
    /// would cancel and is rejected as degenerate.
    pub fn new(upper: Vec<T>, lower: Vec<T>, a: T) -> Result<Self> {
        for &t in &upper {
            if !t.is_finite() {
                return Err(Error::Domain(format!("non-finite upper parameter {t}")));
            }
        }
        for &s in &lower {
            if !s.is_finite() {
                return Err(Error::Domain(format!("non-finite lower parameter {s}")));
            }
        }
        if !a.is_finite() {
            return Err(Error::Domain(format!("non-finite right-hand side {a}")));
        }
        for &t in &upper {
            if lower.iter().any(|&s| s == t) {
                return Err(Error::DegenerateInput(format!(
                    "upper and lower parameter lists share the value {t}; cancel it first"
                )));
            }
        }
        Ok(GenWParams { upper, lower, a })
    }
}

/// One real solution: abscissa, achieved residual `|F(x)-a|`, index in
/// ascending order, and multiplicity (2 marks a tangency, where `F-a`
/// touches zero without a sign change).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root<T = f64> {
    pub x: T,
    pub residual: T,
    pub branch_index: usize,
    pub multiplicity: u32,
}

/// A scanned monotone interval with the signs of `F-a` at its two ends
/// (0 marks an endpoint where `F-a` vanished to within tolerance).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BracketInfo<T = f64> {
    pub lo: T,
    pub hi: T,
    pub sign_lo: i8,
    pub sign_hi: i8,
}

/// All real solutions found, ascending, plus the interval scan report.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionSet<T = f64> {
    pub roots: Vec<Root<T>>,
    pub bracket_report: Vec<BracketInfo<T>>,
}

impl<T: Real> SolutionSet<T> {
    fn empty() -> Self {
        SolutionSet { roots: Vec::new(), bracket_report: Vec::new() }
    }

    /// Abscissas only, ascending.
    pub fn xs(&self) -> Vec<T> {
        self.roots.iter().map(|r| r.x).collect()
    }
}

// ---------------------------------------------------------------------------
// closed-form reductions
// ---------------------------------------------------------------------------

/// The classical closed forms available for small parameter counts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpecialForm<T = f64> {
    /// No parameters: `x = log(a)`.
    Log,
    /// One upper parameter: `x = t + W(a·e^{-t})`.
    UpperShift { t: T },
    /// One lower parameter: `x = s - W(-e^{s}/a)`.
    LowerShift { s: T },
}

/// A recognized closed form together with the real values it produces for
/// the given right-hand side (ascending; the length is the branch
/// multiplicity).
#[derive(Debug, Clone, PartialEq)]
pub struct SpecialReduction<T = f64> {
    pub form: SpecialForm<T>,
    pub values: Vec<T>,
}

/// Recognize the parameter counts `(0,0)`, `(1,0)` and `(0,1)`, which reduce
/// to a logarithm or a shifted classical Lambert value. Returns `None` for
/// any other shape.
pub fn reduce_special<T: Real>(p: &GenWParams<T>) -> Option<SpecialReduction<T>> {
    let a = p.a;
    match (p.upper.len(), p.lower.len()) {
        (0, 0) => {
            let values = if a > T::zero() { vec![a.ln()] } else { vec![] };
            Some(SpecialReduction { form: SpecialForm::Log, values })
        }
        (1, 0) => {
            let t = p.upper[0];
            let arg = a * (-t).exp();
            let mut values: Vec<T> = [w0(arg), wm1(arg)]
                .into_iter()
                .filter_map(|w| w.ok())
                .map(|w| t + w)
                .filter(|v| v.is_finite())
                .collect();
            sort_dedup(&mut values);
            Some(SpecialReduction { form: SpecialForm::UpperShift { t }, values })
        }
        (0, 1) => {
            let s = p.lower[0];
            let mut values: Vec<T> = Vec::new();
            if a != T::zero() {
                let arg = -s.exp() / a;
                values = [w0(arg), wm1(arg)]
                    .into_iter()
                    .filter_map(|w| w.ok())
                    .map(|w| s - w)
                    .filter(|v| v.is_finite())
                    .collect();
            }
            sort_dedup(&mut values);
            Some(SpecialReduction { form: SpecialForm::LowerShift { s }, values })
        }
        _ => None,
    }
}

fn sort_dedup<T: Real>(values: &mut Vec<T>) {
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    values.dedup_by(|a, b| (*a - *b).abs() <= ulp_of(*a) * real::<T>(8.0));
}

// ---------------------------------------------------------------------------
// canonicalization of e^{-cx} = a0 · Π(x-tᵢ)/Π(x-sⱼ)
// ---------------------------------------------------------------------------

/// A rational-exponential equation `e^{-cx} = a₀·Π(x-tᵢ)/Π(x-sⱼ)` in raw
/// (unscaled) form.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalExpEquation<T = f64> {
    pub c: T,
    pub a0: T,
    pub upper_raw: Vec<T>,
    pub lower_raw: Vec<T>,
}

impl<T: Real> RationalExpEquation<T> {
    /// `|e^{-cx} - a₀·Π(x-tᵢ)/Π(x-sⱼ)|` at `x`.
    pub fn residual(&self, x: T) -> T {
        let lhs = (-self.c * x).exp();
        let mut rhs = self.a0;
        for &t in &self.upper_raw {
            rhs = rhs * (x - t);
        }
        for &s in &self.lower_raw {
            rhs = rhs / (x - s);
        }
        (lhs - rhs).abs()
    }
}

/// Canonical parameters plus the substitution that undoes the scaling:
/// a canonical solution `X` maps back to `x = X / scale`.
#[derive(Debug, Clone, PartialEq)]
pub struct Canonicalized<T = f64> {
    pub params: GenWParams<T>,
    pub scale: T,
}

impl<T: Real> Canonicalized<T> {
    /// Map a canonical solution back to the raw variable.
    pub fn back_map(&self, x: T) -> T {
        x / self.scale
    }

    /// Solve the canonical equation and return the solutions of the raw
    /// equation, re-sorted and re-indexed after the back-map.
    pub fn solve(&self, eq: &RationalExpEquation<T>, tol: T) -> Result<SolutionSet<T>> {
        let mut set = solve_all(&self.params, tol)?;
        for r in &mut set.roots {
            r.x = self.back_map(r.x);
        }
        set.roots.sort_by(|p, q| p.x.partial_cmp(&q.x).unwrap());
        for (i, r) in set.roots.iter_mut().enumerate() {
            r.branch_index = i;
            r.residual = eq.residual(r.x);
        }
        Ok(set)
    }
}

/// Scale `e^{-cx} = a₀·Π(x-tᵢ)/Π(x-sⱼ)` into canonical form: upper
/// parameters `c·tᵢ`, lower parameters `c·sⱼ`, right-hand side
/// `c^{n-m}/a₀`, with back-map `x = X/c`.
pub fn canonicalize<T: Real>(eq: &RationalExpEquation<T>) -> Result<Canonicalized<T>> {
    if eq.c == T::zero() || !eq.c.is_finite() {
        return Err(Error::Domain(format!("decay rate c must be finite and nonzero, got {}", eq.c)));
    }
    if eq.a0 == T::zero() || !eq.a0.is_finite() {
        return Err(Error::Domain(format!("scale a0 must be finite and nonzero, got {}", eq.a0)));
    }
    let upper: Vec<T> = eq.upper_raw.iter().map(|&t| eq.c * t).collect();
    let lower: Vec<T> = eq.lower_raw.iter().map(|&s| eq.c * s).collect();
    let diff = eq.upper_raw.len() as i32 - eq.lower_raw.len() as i32;
    let a = eq.c.powi(diff) / eq.a0;
    let params = GenWParams::new(upper, lower, a)?;
    Ok(Canonicalized { params, scale: eq.c })
}

// ---------------------------------------------------------------------------
// the full solver
// ---------------------------------------------------------------------------

/// Evaluation of `F`, its logarithmic derivative and related quantities.
pub(crate) struct Equation<'a, T> {
    upper: &'a [T],
    lower: &'a [T],
}

impl<'a, T: Real> Equation<'a, T> {
    pub(crate) fn new(upper: &'a [T], lower: &'a [T]) -> Self {
        Equation { upper, lower }
    }

    /// `F(x) = eˣ·Π(x-t)/Π(x-s)`. Returns `±∞` when the exponential
    /// overflows and NaN exactly at a pole.
    pub(crate) fn f(&self, x: T) -> T {
        let mut num = T::one();
        for &t in self.upper {
            num = num * (x - t);
        }
        if num == T::zero() {
            return T::zero();
        }
        let mut den = T::one();
        for &s in self.lower {
            den = den * (x - s);
        }
        (num / den) * x.exp()
    }

    /// `G(x) = F'(x)/F(x) = 1 + Σ 1/(x-t) - Σ 1/(x-s)`.
    fn g(&self, x: T) -> T {
        let mut acc = T::one();
        for &t in self.upper {
            acc = acc + (x - t).recip();
        }
        for &s in self.lower {
            acc = acc - (x - s).recip();
        }
        acc
    }

    /// `G'(x) = -Σ 1/(x-t)² + Σ 1/(x-s)²`.
    fn g_prime(&self, x: T) -> T {
        let mut acc = T::zero();
        for &t in self.upper {
            let d = (x - t).recip();
            acc = acc - d * d;
        }
        for &s in self.lower {
            let d = (x - s).recip();
            acc = acc + d * d;
        }
        acc
    }

    fn f_prime(&self, x: T) -> T {
        self.f(x) * self.g(x)
    }

    fn f_second(&self, x: T) -> T {
        let g = self.g(x);
        self.f(x) * (g * g + self.g_prime(x))
    }
}

/// Sign of `F` in the one-sided limit at the pole `p` (`from_right` chooses
/// the side), computed from factor signs alone so it stays exact however
/// violently `F` blows up.
fn pole_side_sign<T: Real>(upper: &[T], lower: &[T], p: T, from_right: bool) -> i8 {
    let mut sign = 1i8;
    for &t in upper {
        if p - t < T::zero() {
            sign = -sign;
        }
    }
    for &s in lower {
        if s == p {
            if !from_right {
                sign = -sign;
            }
        } else if p - s < T::zero() {
            sign = -sign;
        }
    }
    sign
}

/// One end of a monotone segment.
#[derive(Debug, Clone, Copy, PartialEq)]
enum SegEnd<T> {
    NegInf,
    PlusInf,
    Pole(T),
    Point(T),
}

/// Solve `F(x) = a` for every detectable real root.
///
/// With both parameter lists empty the equation is `eˣ = a`; `a ≤ 0` is a
/// domain error there. Everywhere else an empty [`SolutionSet`] is a valid
/// result, not an error.
pub fn solve_all<T: Real>(p: &GenWParams<T>, tol: T) -> Result<SolutionSet<T>> {
    solve_all_bounded(p, tol, None)
}

/// Like [`solve_all`], but reports only roots inside `[xmin, xmax]` when a
/// window is given.
pub fn solve_all_bounded<T: Real>(
    p: &GenWParams<T>,
    tol: T,
    window: Option<(T, T)>,
) -> Result<SolutionSet<T>> {
    if tol <= T::zero() || !tol.is_finite() {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    // re-validate so callers constructing the struct literally are covered
    let p = GenWParams::new(p.upper.clone(), p.lower.clone(), p.a)?;
    let a = p.a;

    if p.upper.is_empty() && p.lower.is_empty() {
        if a <= T::zero() {
            return Err(Error::Domain(format!(
                "e^x = a has no real solution for a = {a}"
            )));
        }
        let x = a.ln();
        let mut set = SolutionSet::empty();
        set.roots.push(Root {
            x,
            residual: (x.exp() - a).abs(),
            branch_index: 0,
            multiplicity: 1,
        });
        return Ok(clip(set, window));
    }

    // a = 0: the roots are exactly the upper parameters
    if a == T::zero() {
        let mut set = SolutionSet::empty();
        let mut ts = p.upper.clone();
        ts.sort_by(|x, y| x.partial_cmp(y).unwrap());
        let mut i = 0;
        while i < ts.len() {
            let mut mult = 1u32;
            while i + (mult as usize) < ts.len() && ts[i + mult as usize] == ts[i] {
                mult += 1;
            }
            set.roots.push(Root {
                x: ts[i],
                residual: T::zero(),
                branch_index: set.roots.len(),
                multiplicity: mult,
            });
            i += mult as usize;
        }
        return Ok(clip(set, window));
    }

    let eq = Equation::new(&p.upper, &p.lower);
    let tol_abs = tol * (T::one() + a.abs());

    // landmarks: distinct poles plus the critical points of F
    let mut poles = p.lower.clone();
    poles.sort_by(|x, y| x.partial_cmp(y).unwrap());
    poles.dedup();

    let crit = critical_points(&p.upper, &p.lower);
    let mut landmarks: Vec<(T, bool)> = Vec::new(); // (x, is_pole)
    for &q in &poles {
        landmarks.push((q, true));
    }
    'outer: for &c in &crit {
        for &q in &poles {
            if (c - q).abs() <= real::<T>(8.0) * ulp_of(q).max(ulp_of(c)) {
                continue 'outer; // a degenerate critical point sitting on a pole
            }
        }
        landmarks.push((c, false));
    }
    landmarks.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());

    // segment ends
    let mut ends: Vec<SegEnd<T>> = Vec::with_capacity(landmarks.len() + 2);
    ends.push(SegEnd::NegInf);
    for &(x, is_pole) in &landmarks {
        ends.push(if is_pole { SegEnd::Pole(x) } else { SegEnd::Point(x) });
    }
    ends.push(SegEnd::PlusInf);

    let mut set = SolutionSet::empty();
    for pair in ends.windows(2) {
        process_segment(&eq, a, tol_abs, pair[0], pair[1], &mut set);
    }

    // roots sitting exactly at critical points, including tangencies
    for &c in &crit {
        if landmarks.iter().any(|&(x, is_pole)| is_pole && x == c) {
            continue;
        }
        let fc = eq.f(c) - a;
        if !fc.is_finite() || fc.abs() > tol_abs {
            continue;
        }
        let touch_width = tangency_width(&eq, c, tol_abs);
        if set.roots.iter().any(|r| (r.x - c).abs() <= touch_width) {
            continue;
        }
        // crossing with zero slope vs. genuine touch: probe both sides
        let h = touch_width.max(ulp_of(c) * real::<T>(64.0));
        let sl = sign_of(eq.f(c - h) - a, tol_abs);
        let sr = sign_of(eq.f(c + h) - a, tol_abs);
        let multiplicity = if sl != 0 && sl == -sr { 1 } else { 2 };
        set.roots.push(Root { x: c, residual: fc.abs(), branch_index: 0, multiplicity });
    }

    set.roots.sort_by(|p, q| p.x.partial_cmp(&q.x).unwrap());
    // merge duplicates that collapsed to the same float neighbourhood
    let mut merged: Vec<Root<T>> = Vec::with_capacity(set.roots.len());
    for r in set.roots.drain(..) {
        if let Some(last) = merged.last_mut() {
            if (r.x - last.x).abs() <= real::<T>(8.0) * ulp_of(last.x).max(ulp_of(r.x)) {
                if r.residual < last.residual {
                    last.x = r.x;
                    last.residual = r.residual;
                }
                last.multiplicity = last.multiplicity.max(2);
                continue;
            }
        }
        merged.push(r);
    }
    for (i, r) in merged.iter_mut().enumerate() {
        r.branch_index = i;
    }
    set.roots = merged;
    Ok(clip(set, window))
}

fn clip<T: Real>(mut set: SolutionSet<T>, window: Option<(T, T)>) -> SolutionSet<T> {
    if let Some((lo, hi)) = window {
        set.roots.retain(|r| r.x >= lo && r.x <= hi);
        for (i, r) in set.roots.iter_mut().enumerate() {
            r.branch_index = i;
        }
    }
    set
}

fn sign_of<T: Real>(v: T, tol_abs: T) -> i8 {
    if !v.is_finite() {
        if v == T::infinity() {
            return 1;
        }
        if v == T::neg_infinity() {
            return -1;
        }
        return 0;
    }
    if v.abs() <= tol_abs {
        0
    } else if v > T::zero() {
        1
    } else {
        -1
    }
}

/// Width around a critical point inside which `|F - a|` stays below the
/// tolerance, from the local quadratic model.
fn tangency_width<T: Real>(eq: &Equation<'_, T>, c: T, tol_abs: T) -> T {
    let two = T::one() + T::one();
    let f2 = eq.f_second(c).abs();
    let w = if f2 > T::zero() && f2.is_finite() {
        (two * tol_abs / f2).sqrt()
    } else {
        real::<T>(1e-6) * (T::one() + c.abs())
    };
    w.max(real::<T>(4.0) * ulp_of(c))
}

fn process_segment<T: Real>(
    eq: &Equation<'_, T>,
    a: T,
    tol_abs: T,
    left: SegEnd<T>,
    right: SegEnd<T>,
    set: &mut SolutionSet<T>,
) {
    let (sigma_l, anchor_l) = end_sign(eq, a, tol_abs, left, true, right);
    let (sigma_r, anchor_r) = end_sign(eq, a, tol_abs, right, false, left);

    set.bracket_report.push(BracketInfo {
        lo: anchor_l,
        hi: anchor_r,
        sign_lo: sigma_l,
        sign_hi: sigma_r,
    });

    if sigma_l == 0 || sigma_r == 0 || sigma_l == sigma_r {
        return; // endpoint hit or no crossing: no interior root on a monotone piece
    }

    let Some((u, fu)) = finite_end(eq, a, left, sigma_l, right) else {
        return; // sign change vanished below float resolution (root on a pole)
    };
    let Some((v, _fv)) = finite_end(eq, a, right, sigma_r, left) else {
        return;
    };
    if !(u < v) {
        return;
    }
    let sol = bisect_newton(
        |x| eq.f(x) - a,
        |x| eq.f_prime(x),
        u,
        v,
        fu,
        tol_abs,
        240,
    );
    set.roots.push(Root {
        x: sol.x,
        residual: sol.f_abs,
        branch_index: 0,
        multiplicity: 1,
    });
}

/// Sign of `F - a` in the limit at a segment end, plus a representative
/// abscissa for the bracket report.
fn end_sign<T: Real>(
    eq: &Equation<'_, T>,
    a: T,
    tol_abs: T,
    end: SegEnd<T>,
    is_left: bool,
    _other: SegEnd<T>,
) -> (i8, T) {
    match end {
        SegEnd::NegInf => {
            // F -> 0, so F - a -> -a
            let s = if a > T::zero() { -1 } else { 1 };
            (s, T::neg_infinity())
        }
        SegEnd::PlusInf => (1, T::infinity()),
        SegEnd::Pole(p) => {
            let s = pole_side_sign(eq.upper, eq.lower, p, is_left);
            (s, p)
        }
        SegEnd::Point(c) => (sign_of(eq.f(c) - a, tol_abs), c),
    }
}

/// A finite abscissa inside the segment at which `F - a` already carries the
/// limit sign of the given end. `None` when the sign cannot be realized at
/// float resolution (the root has collapsed onto the landmark).
fn finite_end<T: Real>(
    eq: &Equation<'_, T>,
    a: T,
    end: SegEnd<T>,
    sigma: i8,
    other: SegEnd<T>,
) -> Option<(T, T)> {
    let two = T::one() + T::one();
    let other_x = match other {
        SegEnd::Pole(x) | SegEnd::Point(x) => Some(x),
        _ => None,
    };
    match end {
        SegEnd::Point(c) => Some((c, eq.f(c) - a)),
        SegEnd::Pole(p) => {
            // walk toward the pole until the blow-up sign appears
            let span = match other_x {
                Some(o) => (o - p).abs() / real::<T>(4.0),
                None => T::one(),
            };
            let toward_right = matches!(other, SegEnd::Pole(o) | SegEnd::Point(o) if o > p)
                || matches!(other, SegEnd::PlusInf);
            let mut off = span.max(ulp_of(p) * real::<T>(4.0));
            for _ in 0..140 {
                let x = if toward_right { p + off } else { p - off };
                if x != p {
                    let v = eq.f(x) - a;
                    if v.is_finite() || v.is_infinite() {
                        if sign_of(v, T::zero()) == sigma {
                            return Some((x, v));
                        }
                    }
                }
                off = off / two;
                if off < ulp_of(p) {
                    return None;
                }
            }
            None
        }
        SegEnd::NegInf => {
            let start = other_x.unwrap_or_else(|| T::zero());
            let mut step = T::one();
            for _ in 0..80 {
                let x = start - step;
                let v = eq.f(x) - a;
                if v.is_finite() && sign_of(v, T::zero()) == sigma {
                    return Some((x, v));
                }
                step = step * two;
            }
            None
        }
        SegEnd::PlusInf => {
            let start = other_x.unwrap_or_else(|| T::zero());
            let mut step = T::one();
            for _ in 0..80 {
                let x = start + step;
                let v = eq.f(x) - a;
                if (v.is_finite() || v == T::infinity()) && sign_of(v, T::zero()) == sigma {
                    return Some((x, v));
                }
                step = step * two;
            }
            None
        }
    }
}

// ---------------------------------------------------------------------------
// critical points: real roots of N·D + N'·D - N·D'
// ---------------------------------------------------------------------------

/// All critical points of `F` (roots of `F' = 0` counted without
/// multiplicity), ascending. They are the real roots of the polynomial
/// `Q = N·D + N'·D - N·D'` with `N = Π(x-t)`, `D = Π(x-s)`; every real root
/// of `Q` lies within `2(n+m)+1` of the parameter range, which bounds the
/// search window.
fn critical_points<T: Real>(upper: &[T], lower: &[T]) -> Vec<T> {
    let n = upper.len();
    let m = lower.len();
    if n + m == 0 {
        return Vec::new();
    }
    let num = poly_from_roots(upper);
    let den = poly_from_roots(lower);
    let q = poly_sub(
        &poly_add(&poly_mul(&num, &den), &poly_mul(&poly_deriv(&num), &den)),
        &poly_mul(&num, &poly_deriv(&den)),
    );

    let mut lo = T::infinity();
    let mut hi = T::neg_infinity();
    for &v in upper.iter().chain(lower.iter()) {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    let margin = real_i::<T>(2 * (n + m) + 1);
    poly_real_roots(&q, lo - margin, hi + margin)
}

fn real_i<T: Real>(n: usize) -> T {
    T::from_usize(n).expect("small integer fits any float")
}

/// Monic polynomial with the given roots; coefficients low to high.
fn poly_from_roots<T: Real>(roots: &[T]) -> Vec<T> {
    let mut p = vec![T::one()];
    for &r in roots {
        let mut next = vec![T::zero(); p.len() + 1];
        for (i, &c) in p.iter().enumerate() {
            next[i + 1] = next[i + 1] + c;
            next[i] = next[i] - r * c;
        }
        p = next;
    }
    p
}

fn poly_mul<T: Real>(a: &[T], b: &[T]) -> Vec<T> {
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = out[i + j] + x * y;
        }
    }
    out
}

fn poly_add<T: Real>(a: &[T], b: &[T]) -> Vec<T> {
    let mut out = vec![T::zero(); a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        out[i] = out[i] + x;
    }
    for (i, &y) in b.iter().enumerate() {
        out[i] = out[i] + y;
    }
    out
}

fn poly_sub<T: Real>(a: &[T], b: &[T]) -> Vec<T> {
    let neg: Vec<T> = b.iter().map(|&y| -y).collect();
    poly_add(a, &neg)
}

fn poly_deriv<T: Real>(p: &[T]) -> Vec<T> {
    if p.len() <= 1 {
        return vec![T::zero()];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| c * real_i::<T>(i))
        .collect()
}

fn poly_eval<T: Real>(p: &[T], x: T) -> T {
    let mut acc = T::zero();
    for &c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn poly_trim<T: Real>(p: &[T]) -> &[T] {
    let mut end = p.len();
    while end > 1 && p[end - 1] == T::zero() {
        end -= 1;
    }
    &p[..end]
}

/// Every real root of `p` in `[lo, hi]`, by recursive monotone
/// decomposition: the roots of `p'` split the window into intervals on which
/// `p` is monotone, and each sign change is bisected. Tangent (even) roots
/// are caught by a tolerance test at the extrema.
fn poly_real_roots<T: Real>(p: &[T], lo: T, hi: T) -> Vec<T> {
    let p = poly_trim(p);
    let deg = p.len() - 1;
    let mut roots = Vec::new();
    if deg == 0 {
        return roots;
    }
    if deg == 1 {
        let r = -p[0] / p[1];
        if r >= lo && r <= hi {
            roots.push(r);
        }
        return roots;
    }

    let dp: Vec<T> = poly_deriv(p);
    let crit = poly_real_roots(&dp, lo, hi);
    let mut pts = Vec::with_capacity(crit.len() + 2);
    pts.push(lo);
    pts.extend_from_slice(&crit);
    pts.push(hi);

    for w in pts.windows(2) {
        let (u, v) = (w[0], w[1]);
        if !(u < v) {
            continue;
        }
        let fu = poly_eval(p, u);
        let fv = poly_eval(p, v);
        if fu == T::zero() {
            push_root(&mut roots, u);
            continue;
        }
        if fv != T::zero() && (fu > T::zero()) != (fv > T::zero()) {
            let sol = bisect_newton(
                |x| poly_eval(p, x),
                |x| poly_eval(&dp, x),
                u,
                v,
                fu,
                T::zero(),
                180,
            );
            push_root(&mut roots, sol.x);
        }
    }
    if poly_eval(p, hi) == T::zero() {
        push_root(&mut roots, hi);
    }
    // even-multiplicity roots: the polynomial touches zero at an extremum
    for &c in &crit {
        let scale: T = p
            .iter()
            .enumerate()
            .fold(T::zero(), |acc, (i, &q)| acc + q.abs() * c.abs().max(T::one()).powi(i as i32));
        if poly_eval(p, c).abs() <= scale * T::epsilon() * real::<T>(64.0) {
            push_root(&mut roots, c);
        }
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots.dedup_by(|a, b| (*a - *b).abs() <= real::<T>(8.0) * ulp_of(*a).max(ulp_of(*b)));
    roots
}

fn push_root<T: Real>(roots: &mut Vec<T>, x: T) {
    if !roots
        .iter()
        .any(|&r| (r - x).abs() <= real::<T>(8.0) * ulp_of(r).max(ulp_of(x)))
    {
        roots.push(x);
    }
}
