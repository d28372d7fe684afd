//! The defining power series of 2F1 and its direct summation.

use num_complex::Complex64;

use super::{HypParams, Method, ValueWithError};
use crate::error::{Error, Result};
use crate::special::nonpositive_integer;

/// Hard cap on the number of summed terms.
pub const MAX_TERMS: usize = 1_000_000;

/// Consecutive small terms required before truncating.
const SMALL_RUN: usize = 3;

/// Lazy, restartable stream of the series terms
/// `(a)_k (b)_k / ((c)_k k!) w^k`.
#[derive(Debug, Clone)]
pub struct SeriesTerms {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    w: Complex64,
    k: u64,
    term: Complex64,
}

impl Iterator for SeriesTerms {
    type Item = Complex64;

    fn next(&mut self) -> Option<Complex64> {
        let out = self.term;
        let k = self.k as f64;
        self.term *= (self.a + k) * (self.b + k) * self.w / ((self.c + k) * (k + 1.0));
        self.k += 1;
        Some(out)
    }
}

/// Term stream of the hypergeometric series at `w`; `term_0 = 1`.
pub fn series_term_stream(p: &HypParams, w: Complex64) -> SeriesTerms {
    SeriesTerms {
        a: p.a(),
        b: p.b(),
        c: p.c(),
        w,
        k: 0,
        term: Complex64::new(1.0, 0.0),
    }
}

/// Degree of the polynomial when `a` or `b` is a non-positive integer.
pub fn terminating_degree(p: &HypParams) -> Option<u64> {
    let tol = 8.0 * f64::EPSILON;
    let da = nonpositive_integer(p.a(), tol).map(|n| n.unsigned_abs());
    let db = nonpositive_integer(p.b(), tol).map(|n| n.unsigned_abs());
    match (da, db) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    }
}

/// Direct summation. Valid for `|w| < 1`, or any `w` for terminating
/// parameters.
pub fn sum_direct(p: &HypParams, w: Complex64) -> Result<ValueWithError> {
    if let Some(m) = terminating_degree(p) {
        let mut sum = Complex64::new(0.0, 0.0);
        let mut abs_sum = 0.0;
        for t in series_term_stream(p, w).take(m as usize + 1) {
            sum += t;
            abs_sum += t.norm();
        }
        return Ok(ValueWithError {
            value: sum,
            error_estimate: 4.0 * f64::EPSILON * abs_sum * (m as f64 + 1.0).sqrt(),
            method: Method::DirectSeries,
            terms_used: m as usize + 1,
            perturbed: false,
        });
    }
    let r = w.norm();
    if r >= 1.0 {
        return Err(Error::NoConvergence(format!(
            "direct series needs |w| < 1, got |w| = {r}"
        )));
    }
    let mut sum = Complex64::new(0.0, 0.0);
    let mut abs_sum = 0.0;
    let mut small = 0;
    let mut last = Complex64::new(0.0, 0.0);
    for (n, t) in series_term_stream(p, w).take(MAX_TERMS).enumerate() {
        sum += t;
        abs_sum += t.norm();
        last = t;
        if t.norm() <= 0.5 * f64::EPSILON * sum.norm() {
            small += 1;
            if small >= SMALL_RUN {
                let tail = 2.0 * last.norm() * r / (1.0 - r);
                return Ok(ValueWithError {
                    value: sum,
                    error_estimate: tail + 4.0 * f64::EPSILON * abs_sum,
                    method: Method::DirectSeries,
                    terms_used: n + 1,
                    perturbed: false,
                });
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NoConvergence(format!(
        "direct series not converged after {MAX_TERMS} terms (last term {})",
        last.norm()
    )))
}

/// Value and derivative at `w` from the series, for seeding the ODE
/// continuation. Requires `|w| < 1` and `w != 0`.
pub(crate) fn sum_with_derivative(
    p: &HypParams,
    w: Complex64,
) -> Result<(Complex64, Complex64, f64)> {
    let r = w.norm();
    let mut f = Complex64::new(0.0, 0.0);
    let mut df = Complex64::new(0.0, 0.0);
    let mut abs_sum = 0.0;
    let mut small = 0;
    for (n, t) in series_term_stream(p, w).take(MAX_TERMS).enumerate() {
        f += t;
        let dt = t * (n as f64) / w;
        df += dt;
        abs_sum += t.norm() * (1.0 + n as f64);
        if t.norm() * (1.0 + n as f64) <= 0.25 * f64::EPSILON * (f.norm() + df.norm() * r) {
            small += 1;
            if small >= SMALL_RUN {
                return Ok((f, df, 8.0 * f64::EPSILON * abs_sum));
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NoConvergence("seed series for continuation".into()))
}
