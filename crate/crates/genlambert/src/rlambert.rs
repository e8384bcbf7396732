//! The r-Lambert function: real solutions of `x·eˣ + r·x = n`.
//!
//! Depending on `r`, the map `f(x) = x·eˣ + r·x` has zero, one or two
//! critical points, so its inverse has one, two or three real branches.
//! The transition happens at `r = e⁻²`: the second derivative `eˣ(x+2)`
//! vanishes at `x = -2`, where `f'` bottoms out at `e⁻² · (-1) + r`.

use crate::error::{Error, Result};
use crate::roots::bisect_newton;
use crate::scalar::{real, Real};

/// Monotone-branch decomposition of `f(x) = x·eˣ + r·x`.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchStructure<T = f64> {
    pub r: T,
    /// Roots of `f'(x) = eˣ(x+1) + r`, ascending.
    pub critical_points: Vec<T>,
    /// Always `critical_points.len() + 1`.
    pub branch_count: usize,
    /// Monotone domains, ascending; outer bounds are `±∞`.
    pub branch_intervals: Vec<(T, T)>,
}

/// A point query: parameter `r`, right-hand side `n`, and the branch to
/// invert on (index into [`BranchStructure::branch_intervals`]).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RLambertQuery<T = f64> {
    pub r: T,
    pub n: T,
    pub branch: usize,
}

/// Direction selector for the asymptotic forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AsymptoticDirection {
    PlusInf,
    MinusInf,
}

fn f_val<T: Real>(r: T, x: T) -> T {
    x * x.exp() + r * x
}

fn f_deriv<T: Real>(r: T, x: T) -> T {
    x.exp() * (x + T::one()) + r
}

/// Compute the branch structure of `x·eˣ + r·x` for the given `r`.
pub fn branch_structure<T: Real>(r: T) -> BranchStructure<T> {
    let one = T::one();
    let two = one + one;
    let g = |x: T| f_deriv(r, x);
    let dg = |x: T| x.exp() * (x + two);

    let mut critical_points: Vec<T> = Vec::new();
    if r < T::zero() {
        // e^x(x+1) = -r > 0 has exactly one root, right of -1
        let mut hi = T::zero();
        while g(hi) <= T::zero() {
            hi = (hi + one) * two;
        }
        let sol = bisect_newton(g, dg, -one, hi, g(-one), crit_target(r), 200);
        critical_points.push(sol.x);
    } else if r == T::zero() {
        critical_points.push(-one);
    } else {
        let g_m2 = g(-two);
        if g_m2 == T::zero() {
            // f' touches zero at the inflection: a single double critical point
            critical_points.push(-two);
        } else if g_m2 < T::zero() {
            // two roots straddling -2
            let mut lo = -two - one;
            while g(lo) <= T::zero() {
                lo = lo * two;
            }
            let left = bisect_newton(g, dg, lo, -two, g(lo), crit_target(r), 200);
            let right = bisect_newton(g, dg, -two, -one, g_m2, crit_target(r), 200);
            critical_points.push(left.x);
            critical_points.push(right.x);
        }
        // g(-2) > 0: f' > 0 everywhere, no critical points
    }

    let mut branch_intervals = Vec::with_capacity(critical_points.len() + 1);
    let mut lo = T::neg_infinity();
    for &c in &critical_points {
        branch_intervals.push((lo, c));
        lo = c;
    }
    branch_intervals.push((lo, T::infinity()));

    BranchStructure {
        r,
        branch_count: critical_points.len() + 1,
        critical_points,
        branch_intervals,
    }
}

fn crit_target<T: Real>(r: T) -> T {
    real::<T>(8.0) * T::epsilon() * (T::one() + r.abs())
}

/// Invert `x·eˣ + r·x = n` on the requested branch. Returns `None` when the
/// branch's image does not contain `n`. A root landing exactly on a shared
/// critical point is assigned to the lower-indexed adjacent branch.
pub fn r_lambert<T: Real>(q: &RLambertQuery<T>, tol: T) -> Result<Option<T>> {
    if !q.r.is_finite() || !q.n.is_finite() {
        return Err(Error::Domain("r and n must be finite".into()));
    }
    let structure = branch_structure(q.r);
    if q.branch >= structure.branch_count {
        return Err(Error::InvalidBranch(format!(
            "branch {} does not exist; r = {} has {} branch(es)",
            q.branch, q.r, structure.branch_count
        )));
    }
    let (lo, hi) = structure.branch_intervals[q.branch];
    let r = q.r;
    let n = q.n;

    // endpoint values of f on the branch, as extended reals
    let left_is_crit = lo.is_finite();
    let right_is_crit = hi.is_finite();
    let v_lo = if left_is_crit {
        f_val(r, lo)
    } else if r > T::zero() {
        T::neg_infinity()
    } else if r < T::zero() {
        T::infinity()
    } else {
        T::zero() // approached from below, never attained
    };
    let v_hi = if right_is_crit { f_val(r, hi) } else { T::infinity() };

    // ties at shared critical points go to the lower-indexed branch
    if right_is_crit && n == v_hi {
        return Ok(Some(hi));
    }
    if left_is_crit && n == v_lo {
        return Ok(None);
    }
    let (img_min, img_max) = if v_lo <= v_hi { (v_lo, v_hi) } else { (v_hi, v_lo) };
    let inside = if r == T::zero() && !left_is_crit {
        // image of the leftmost classical branch is [f(c), 0), 0 excluded
        n > img_min && n < img_max
    } else {
        n > img_min && n < img_max
    };
    if !inside {
        return Ok(None);
    }

    // finite bracket: walk outward from the finite side(s)
    let anchor = if left_is_crit {
        lo
    } else if right_is_crit {
        hi
    } else {
        T::zero()
    };
    let target = tol * (T::one() + n.abs());
    let fa = f_val(r, anchor) - n;
    let mut blo;
    let mut bhi;
    if fa == T::zero() {
        return Ok(Some(anchor));
    }
    // expand toward where the sign flips
    let mut step = T::one();
    if left_is_crit && right_is_crit {
        blo = lo;
        bhi = hi;
    } else if left_is_crit {
        blo = lo;
        bhi = lo + step;
        while same_sign(f_val(r, bhi) - n, fa) {
            step = step + step;
            bhi = lo + step;
        }
    } else if right_is_crit {
        bhi = hi;
        blo = hi - step;
        while same_sign(f_val(r, blo) - n, fa) {
            step = step + step;
            blo = hi - step;
        }
    } else {
        // single-branch case: expand both ways around zero
        blo = -step;
        bhi = step;
        while same_sign(f_val(r, blo) - n, f_val(r, bhi) - n) {
            step = step + step;
            blo = -step;
            bhi = step;
            if step > real::<T>(1e30) {
                return Err(Error::NoConvergence("failed to bracket the root".into()));
            }
        }
    }
    let f_blo = f_val(r, blo) - n;
    let sol = bisect_newton(
        |x| f_val(r, x) - n,
        |x| f_deriv(r, x),
        blo,
        bhi,
        f_blo,
        target,
        240,
    );
    Ok(Some(sol.x))
}

fn same_sign<T: Real>(a: T, b: T) -> bool {
    (a > T::zero()) == (b > T::zero())
}

/// Asymptotic approximations of the r-Lambert function:
/// `log(x) + log(1/log(x) - r/x)` as `x → +∞`, and `x/r` as `x → -∞`.
///
/// These are the displayed limiting forms, not exact values.
pub fn r_lambert_asymptotic<T: Real>(r: T, x: T, direction: AsymptoticDirection) -> Result<T> {
    match direction {
        AsymptoticDirection::PlusInf => {
            if x <= T::one().exp() {
                return Err(Error::Domain(format!(
                    "the +∞ form needs x > e, got {x}"
                )));
            }
            let arg = x.ln().recip() - r / x;
            if arg <= T::zero() {
                return Err(Error::Domain(format!(
                    "correction term 1/log(x) - r/x = {arg} is not positive at x = {x}"
                )));
            }
            Ok(x.ln() + arg.ln())
        }
        AsymptoticDirection::MinusInf => {
            if r == T::zero() {
                return Err(Error::Domain(
                    "the -∞ form x/r requires r ≠ 0".into(),
                ));
            }
            Ok(x / r)
        }
    }
}

/// Index of the branch whose domain contains `x = 0`; this is the branch on
/// which `W_r` reduces to the classical `W₀` as `r → 0`.
pub fn principal_branch_index<T: Real>(structure: &BranchStructure<T>) -> usize {
    structure
        .branch_intervals
        .iter()
        .position(|&(lo, hi)| lo < T::zero() && T::zero() <= hi)
        .unwrap_or(structure.branch_count - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classicw::w0;

    #[test]
    fn branch_counts() {
        // minimum of e^x(x+1) is -e^{-2}: r above it leaves f' positive
        assert_eq!(branch_structure(0.2f64).branch_count, 1);
        assert_eq!(branch_structure(0.1f64).branch_count, 3);
        assert_eq!(branch_structure(-1.0f64).branch_count, 2);
        assert_eq!(branch_structure(0.0f64).branch_count, 2);
        let e2 = (-2.0f64).exp();
        assert_eq!(branch_structure(e2 - 1e-6).branch_count, 3);
        assert_eq!(branch_structure(e2 + 1e-6).branch_count, 1);
    }

    #[test]
    fn critical_points_satisfy_equation() {
        for &r in &[-2.0f64, -1.0, -0.05, 0.05, 0.1, 0.13, 1.0] {
            let s = branch_structure(r);
            assert_eq!(s.branch_count, s.critical_points.len() + 1);
            for &c in &s.critical_points {
                let g = c.exp() * (c + 1.0) + r;
                assert!(g.abs() <= 1e-12, "r = {r}: residual {g} at c = {c}");
            }
            // intervals partition the line
            assert_eq!(s.branch_intervals.first().unwrap().0, f64::NEG_INFINITY);
            assert_eq!(s.branch_intervals.last().unwrap().1, f64::INFINITY);
            for w in s.branch_intervals.windows(2) {
                assert_eq!(w[0].1, w[1].0);
            }
        }
    }

    #[test]
    fn solves_simple_queries() {
        // x = 0 solves for any r at n = 0
        let x = r_lambert(&RLambertQuery { r: 1.0f64, n: 0.0, branch: 0 }, 1e-12)
            .unwrap()
            .unwrap();
        assert!(x.abs() < 1e-14);
        // forward value: 1·e + 1 = e + 1
        let x = r_lambert(
            &RLambertQuery { r: 1.0, n: std::f64::consts::E + 1.0, branch: 0 },
            1e-12,
        )
        .unwrap()
        .unwrap();
        assert!((x - 1.0).abs() < 1e-13);
    }

    #[test]
    fn reduces_to_classical_at_r_zero() {
        let s = branch_structure(0.0f64);
        let b = principal_branch_index(&s);
        let x = r_lambert(&RLambertQuery { r: 0.0f64, n: 1.0, branch: b }, 1e-14)
            .unwrap()
            .unwrap();
        let w = w0(1.0).unwrap();
        assert!((x - w).abs() < 1e-13);
        assert!((x - 0.5671432904).abs() < 1e-9);
    }

    #[test]
    fn invalid_branch_is_an_error() {
        assert!(matches!(
            r_lambert(&RLambertQuery { r: 1.0, n: 0.5, branch: 1 }, 1e-12),
            Err(Error::InvalidBranch(_))
        ));
        assert!(matches!(
            r_lambert(&RLambertQuery { r: 0.05, n: 0.5, branch: 3 }, 1e-12),
            Err(Error::InvalidBranch(_))
        ));
    }

    #[test]
    fn branch_images_and_roundtrip() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let r_set = [-2.5, -1.0, -0.3, 0.08, 0.13, 0.2, 1.0, 2.0];
        for &r in &r_set {
            for _ in 0..25 {
                let n: f64 = rng.gen_range(-5.0..5.0);
                let s = branch_structure(r);
                let mut found = 0usize;
                for b in 0..s.branch_count {
                    let got = r_lambert(&RLambertQuery { r, n, branch: b }, 1e-12).unwrap();
                    if let Some(x) = got {
                        found += 1;
                        let res = (x * x.exp() + r * x - n).abs();
                        assert!(
                            res <= 1e-12 * (1.0 + n.abs()),
                            "r = {r}, n = {n}, branch {b}: residual {res}"
                        );
                        let (lo, hi) = s.branch_intervals[b];
                        assert!(x >= lo && x <= hi, "root escaped its branch interval");
                    }
                }
                // total across branches matches a sign-change scan
                let span = 12.0 + (n / r).abs() * 2.0;
                let m = 400_000;
                let mut scan = 0usize;
                let mut anchor = 0i8;
                for i in 0..=m {
                    let x = -span + 2.0 * span * i as f64 / m as f64;
                    let v = x * x.exp() + r * x - n;
                    if !v.is_finite() || v == 0.0 {
                        anchor = 0;
                        continue;
                    }
                    let sg = if v > 0.0 { 1 } else { -1 };
                    if anchor != 0 && sg != anchor {
                        scan += 1;
                    }
                    anchor = sg;
                }
                assert_eq!(found, scan, "root count mismatch for r = {r}, n = {n}");
            }
        }
    }

    #[test]
    fn tie_at_critical_point_goes_to_lower_branch() {
        let r = 0.0f64;
        let s = branch_structure(r);
        let n = f_val(r, s.critical_points[0]); // the branch-point value
        let low = r_lambert(&RLambertQuery { r, n, branch: 0 }, 1e-12).unwrap();
        let high = r_lambert(&RLambertQuery { r, n, branch: 1 }, 1e-12).unwrap();
        assert!((low.unwrap() + 1.0).abs() < 1e-12);
        assert!(high.is_none());
    }

    #[test]
    fn asymptotic_forms() {
        // r = 2 toward -∞: x/2 exactly
        let v = r_lambert_asymptotic(2.0f64, -1e6, AsymptoticDirection::MinusInf).unwrap();
        assert_eq!(v, -5e5);
        // r = 0 toward +∞ is the classical form log x + log(1/log x)
        let x = 1e6f64;
        let v = r_lambert_asymptotic(0.0, x, AsymptoticDirection::PlusInf).unwrap();
        assert!((v - (x.ln() + (1.0 / x.ln()).ln())).abs() < 1e-12);
        assert!(matches!(
            r_lambert_asymptotic(0.0, -1e6, AsymptoticDirection::MinusInf),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            r_lambert_asymptotic(1.0, 2.0, AsymptoticDirection::PlusInf),
            Err(Error::Domain(_))
        ));
        // large positive r near the lower end of the +∞ domain
        assert!(matches!(
            r_lambert_asymptotic(10.0, 3.0, AsymptoticDirection::PlusInf),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn continuity_in_r_toward_classical() {
        for &n in &[0.5, 1.0, 2.0] {
            let w = w0(n).unwrap();
            let mut prev_diff = f64::INFINITY;
            for k in 1..=8 {
                let r = 10f64.powi(-k);
                let s = branch_structure(r);
                let b = principal_branch_index(&s);
                let x = r_lambert(&RLambertQuery { r, n, branch: b }, 1e-14)
                    .unwrap()
                    .unwrap();
                let diff = (x - w).abs();
                assert!(
                    diff <= prev_diff * (1.0 + 1e-9),
                    "difference not shrinking at r = {r} for n = {n}"
                );
                prev_diff = diff;
            }
            assert!(prev_diff < 1e-8);
        }
    }

    #[test]
    fn works_at_f32() {
        let s = branch_structure(0.5f32);
        assert_eq!(s.branch_count, 1);
        let x = r_lambert(&RLambertQuery { r: 0.5f32, n: 2.0, branch: 0 }, 1e-5)
            .unwrap()
            .unwrap();
        assert!((x * x.exp() + 0.5 * x - 2.0).abs() < 1e-4);
    }
}
