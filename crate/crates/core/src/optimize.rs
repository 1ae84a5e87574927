//! One-dimensional search: golden-section minimization and bisection.

use crate::{Error, Result};

const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum {
    pub x: f64,
    pub value: f64,
}

/// Golden-section search for a minimum of a unimodal `f` on `[a, b]`,
/// stopping once the bracket is narrower than `tol`.
pub fn golden_section<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol: f64) -> Minimum {
    if a > b {
        std::mem::swap(&mut a, &mut b);
    }
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    // 200 iterations shrink any finite bracket below f64 resolution
    for _ in 0..200 {
        if (b - a).abs() <= tol {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    if fc < fd {
        Minimum { x: c, value: fc }
    } else {
        Minimum { x: d, value: fd }
    }
}

/// Minimizes `f` on `[a, b]` without assuming unimodality: a uniform scan
/// of `samples` points picks the best cell, golden-section refines it, and
/// the endpoints are kept when they win outright.
pub fn scan_minimize<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, samples: usize, tol: f64) -> Minimum {
    let samples = samples.max(3);
    let step = (b - a) / (samples - 1) as f64;
    let mut best = 0;
    let mut best_val = f64::INFINITY;
    for i in 0..samples {
        let x = if i == samples - 1 {
            b
        } else {
            a + step * i as f64
        };
        let v = f(x);
        if v < best_val {
            best_val = v;
            best = i;
        }
    }
    let x_best = if best == samples - 1 {
        b
    } else {
        a + step * best as f64
    };
    let lo = if best == 0 {
        a
    } else {
        a + step * (best - 1) as f64
    };
    let hi = if best + 1 >= samples - 1 {
        b
    } else {
        a + step * (best + 1) as f64
    };
    let refined = golden_section(&f, lo, hi, tol);
    if refined.value < best_val {
        refined
    } else {
        Minimum {
            x: x_best,
            value: best_val,
        }
    }
}

/// Bisection for a root of `f` in `[lo, hi]`; requires a sign change.
pub fn bisect<F: Fn(f64) -> f64>(
    f: F,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
    what: &'static str,
) -> Result<f64> {
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() || f_lo.is_nan() || f_hi.is_nan() {
        return Err(Error::NoBracket { what, lo, hi });
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol || mid == lo || mid == hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
