//! Shared oracles for the integration suites: sign-change scans and direct
//! evaluation of the defining equations, independent of the library's
//! solver internals.

/// Evaluate `eˣ·Π(x-t)/Π(x-s)`.
pub fn gen_f(upper: &[f64], lower: &[f64], x: f64) -> f64 {
    let mut num = 1.0;
    for &t in upper {
        num *= x - t;
    }
    if num == 0.0 {
        return 0.0;
    }
    let mut den = 1.0;
    for &s in lower {
        den *= x - s;
    }
    (num / den) * x.exp()
}

/// Sign-change scan of `f` over `[lo, hi]` with `n` samples. Samples landing
/// exactly on a root are recorded as degenerate intervals and removed from
/// the sign chain, so each root is counted once.
pub fn scan_sign_changes(f: impl Fn(f64) -> f64, lo: f64, hi: f64, n: usize) -> Vec<(f64, f64)> {
    let step = (hi - lo) / n as f64;
    let mut intervals = Vec::new();
    let mut anchor_sign = 0i8;
    let mut anchor_x = 0.0;
    for i in 0..=n {
        let x = match i {
            0 => lo + step * 1e-3,
            _ if i == n => hi - step * 1e-3,
            _ => lo + step * i as f64,
        };
        let v = f(x);
        if !v.is_finite() {
            anchor_sign = 0;
            continue;
        }
        if v == 0.0 {
            intervals.push((x, x));
            anchor_sign = 0;
            continue;
        }
        let s = if v > 0.0 { 1 } else { -1 };
        if anchor_sign != 0 && s != anchor_sign {
            intervals.push((anchor_x, x));
        }
        anchor_sign = s;
        anchor_x = x;
    }
    intervals
}

/// Scan the pole-delimited pieces of `[lo, hi]` for roots of
/// `eˣ·Π(x-t)/Π(x-s) = a`, `n` samples in total.
pub fn scan_generalized(
    upper: &[f64],
    lower: &[f64],
    a: f64,
    lo: f64,
    hi: f64,
    n: usize,
) -> Vec<(f64, f64)> {
    let mut cuts: Vec<f64> = lower.to_vec();
    cuts.sort_by(|p, q| p.partial_cmp(q).unwrap());
    cuts.dedup();
    let mut pieces = Vec::new();
    let mut start = lo;
    for &c in &cuts {
        if c > lo && c < hi {
            pieces.push((start, c));
            start = c;
        }
    }
    pieces.push((start, hi));
    let total_span = hi - lo;
    let mut intervals = Vec::new();
    for (u, v) in pieces {
        let share = (((v - u) / total_span) * n as f64).ceil() as usize;
        let samples = share.max(1000);
        intervals.extend(scan_sign_changes(
            |x| gen_f(upper, lower, x) - a,
            u,
            v,
            samples,
        ));
    }
    intervals
}

/// Check a solver root list against scan intervals: every interval holds
/// exactly one root and every root lies in an interval. Roots outside
/// `[lo, hi]` are ignored.
pub fn assert_matches_scan(label: &str, roots: &[f64], intervals: &[(f64, f64)], lo: f64, hi: f64) {
    let in_window: Vec<f64> = roots.iter().copied().filter(|x| (lo..=hi).contains(x)).collect();
    assert_eq!(
        intervals.len(),
        in_window.len(),
        "{label}: oracle found {} roots, solver {}",
        intervals.len(),
        in_window.len()
    );
    for ((ilo, ihi), x) in intervals.iter().zip(&in_window) {
        let slack = 1e-9 * (1.0 + x.abs());
        assert!(
            *x >= ilo - slack && *x <= ihi + slack,
            "{label}: root {x} outside scan interval [{ilo}, {ihi}]"
        );
    }
}
