//! Analytic continuation of 2F1 by Taylor re-expansion of the
//! hypergeometric differential equation
//!
//!   w(1-w) F'' + [c - (a+b+1) w] F' - ab F = 0
//!
//! along a path from the disc to the target that keeps clear of the
//! singular points 0 and 1 and never crosses `[1, inf)`.

use num_complex::Complex64;

use super::series::sum_with_derivative;
use super::{HypParams, Method, ValueWithError};
use crate::error::{Error, Result};

/// Each step covers at most this fraction of the distance to the nearest
/// singular point, so the local series converges at least like 2^-n.
const STEP_FRACTION: f64 = 0.5;
const SEED_RADIUS: f64 = 0.5;
const MAX_STEPS: usize = 10_000;
const MAX_STEP_TERMS: usize = 4_000;

/// Straight-line legs from the seed circle to `w`, detouring around `w = 1`
/// when the direct ray would pass close to it.
fn waypoints(w: Complex64) -> Vec<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    let len2 = w.norm_sqr();
    let t = (w.re / len2).clamp(0.0, 1.0);
    let closest = (w * t - one).norm();
    if w.re > 1.0 && closest < 0.45 {
        let side = if w.im >= 0.0 { 1.0 } else { -1.0 };
        vec![Complex64::new(1.0, 0.75 * side), w]
    } else {
        vec![w]
    }
}

struct StepResult {
    f: Complex64,
    df: Complex64,
    abs_sum: f64,
    terms: usize,
}

/// Sum the local Taylor series about `z0` at displacement `h`.
fn taylor_step(
    p: &HypParams,
    z0: Complex64,
    f: Complex64,
    df: Complex64,
    h: Complex64,
) -> Result<StepResult> {
    let (a, b, c) = (p.a, p.b, p.c);
    let a0 = z0 * (1.0 - z0);
    let a1 = 1.0 - 2.0 * z0;
    let b0 = c - (a + b + 1.0) * z0;
    // d_n = c_n h^n
    let mut d_prev = f;
    let mut d_cur = df * h;
    let mut val = d_prev + d_cur;
    let mut der = d_cur;
    let mut abs_sum = d_prev.norm() + d_cur.norm();
    let mut small = 0;
    for n in 0..MAX_STEP_TERMS {
        let nf = n as f64;
        let d_next = ((a + nf) * (b + nf) * d_prev * h * h
            - (a1 * nf + b0) * (nf + 1.0) * d_cur * h)
            / (a0 * ((nf + 2.0) * (nf + 1.0)));
        val += d_next;
        der += d_next * (nf + 2.0);
        abs_sum += d_next.norm() * (nf + 3.0);
        let scale = val.norm() + der.norm();
        if d_next.norm() * (nf + 3.0) <= 0.25 * f64::EPSILON * scale {
            small += 1;
            if small >= 3 {
                return Ok(StepResult {
                    f: val,
                    df: der / h,
                    abs_sum,
                    terms: n + 3,
                });
            }
        } else {
            small = 0;
        }
        d_prev = d_cur;
        d_cur = d_next;
    }
    Err(Error::NoConvergence(format!(
        "local Taylor series about {z0}"
    )))
}

/// `2F1(a,b;c;w)` for any `w` off `[1, inf)` and away from 0.
pub fn continue_2f1(p: &HypParams, w: Complex64) -> Result<ValueWithError> {
    let legs = waypoints(w);
    let first = legs[0];
    let seed = if first.norm() <= SEED_RADIUS {
        first
    } else {
        first * (SEED_RADIUS / first.norm())
    };
    let (mut f, mut df, mut err) = sum_with_derivative(p, seed)?;
    let mut z = seed;
    let mut terms = 0usize;
    let mut steps = 0usize;
    let one = Complex64::new(1.0, 0.0);
    for target in legs {
        loop {
            let gap = target - z;
            let remaining = gap.norm();
            if remaining <= 1e-15 * target.norm().max(1.0) {
                break;
            }
            let radius = z.norm().min((one - z).norm());
            let len = remaining.min(STEP_FRACTION * radius);
            let h = if len == remaining {
                gap
            } else {
                gap * (len / remaining)
            };
            let step = taylor_step(p, z, f, df, h)?;
            f = step.f;
            df = step.df;
            err += 8.0 * f64::EPSILON * step.abs_sum;
            terms += step.terms;
            z = if len == remaining { target } else { z + h };
            steps += 1;
            if steps > MAX_STEPS {
                return Err(Error::NoConvergence(format!("continuation path to {w}")));
            }
        }
    }
    Ok(ValueWithError {
        value: f,
        error_estimate: err,
        method: Method::Continued,
        terms_used: terms.max(1),
        perturbed: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn log_identity_outside_disc() {
        // 2F1(1,1;2;w) = -ln(1-w)/w
        let p = HypParams::new(c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0)).unwrap();
        for w in [
            c(0.3, 0.9),
            c(-2.5, 0.4),
            c(3.0, 0.2),
            c(1.2, -0.05),
            c(0.5, 0.866_025_403_784_438_6),
        ] {
            let exact = -(c(1.0, 0.0) - w).ln() / w;
            let got = continue_2f1(&p, w).unwrap();
            let e = (got.value - exact).norm();
            assert!(e < 1e-13 * exact.norm().max(1.0), "{w}: {e}");
            assert!(
                e <= 10.0 * got.error_estimate + 1e-15,
                "{w}: {e} vs {}",
                got.error_estimate
            );
        }
    }

    #[test]
    fn detour_only_when_passing_near_one() {
        assert_eq!(waypoints(c(-3.0, 0.5)).len(), 1);
        assert_eq!(waypoints(c(3.0, 0.1)).len(), 2);
        assert_eq!(waypoints(c(3.0, -0.1))[0].im, -0.75);
    }
}
