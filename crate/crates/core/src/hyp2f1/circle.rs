//! Summation of the hypergeometric series on the unit circle.

use num_complex::Complex64;

use super::series::{series_term_stream, sum_direct, terminating_degree};
use super::{gauss_2f1, HypParams, Method, ValueWithError};
use crate::accel::accelerate_series;
use crate::error::{Error, Result};
use crate::special::{ln_gamma_unwrapped, rgamma};

/// Default stopping tolerance on the circle.
pub const CIRCLE_TOLERANCE: f64 = 1e-8;

/// Allowed deviation of `|w|` from 1.
pub const CIRCLE_BAND: f64 = 1e-12;

const MAX_CIRCLE_TERMS: usize = 20_000;

/// Convergence behavior of the series at a point of the unit circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CircleRegime {
    AbsolutelyConvergent,
    ConditionallyConvergent,
    Divergent,
    AtOne,
}

/// Classify by `s = c - a - b`: absolute iff `Re s > 0`, conditional iff
/// `-1 < Re s <= 0` (w != 1), divergent iff `Re s <= -1` (w != 1).
pub fn circle_regime(p: &HypParams, w: Complex64) -> CircleRegime {
    let s = p.c - p.a - p.b;
    if (w - 1.0).norm() <= CIRCLE_BAND {
        CircleRegime::AtOne
    } else if s.re > 0.0 {
        CircleRegime::AbsolutelyConvergent
    } else if s.re > -1.0 {
        CircleRegime::ConditionallyConvergent
    } else {
        CircleRegime::Divergent
    }
}

fn gauss_sum(p: &HypParams) -> Result<Complex64> {
    let (a, b, c) = (p.a, p.b, p.c);
    let s = c - a - b;
    let den = rgamma(c - a) * rgamma(c - b);
    Ok((ln_gamma_unwrapped(c)? + ln_gamma_unwrapped(s)?).exp() * den)
}

/// Sum the series at `|w| = 1` with the default tolerance.
pub fn circle_2f1(p: &HypParams, w: Complex64) -> Result<ValueWithError> {
    circle_2f1_with(p, w, CIRCLE_TOLERANCE)
}

/// Sum the series at `|w| = 1`, accelerating the partial sums.
pub fn circle_2f1_with(p: &HypParams, w: Complex64, tol: f64) -> Result<ValueWithError> {
    if (w.norm() - 1.0).abs() > CIRCLE_BAND {
        return Err(Error::Domain(format!(
            "|w| = {} is not on the unit circle",
            w.norm()
        )));
    }
    if terminating_degree(p).is_some() {
        return sum_direct(p, w);
    }
    let s = p.c - p.a - p.b;
    match circle_regime(p, w) {
        CircleRegime::AtOne => {
            if s.re > 0.0 {
                let v = gauss_sum(p)?;
                Ok(ValueWithError {
                    value: v,
                    error_estimate: 32.0 * f64::EPSILON * v.norm(),
                    method: Method::Transformed,
                    terms_used: 1,
                    perturbed: false,
                })
            } else {
                Err(Error::AtOne(s.re))
            }
        }
        CircleRegime::Divergent => Err(Error::DivergentRegime(s.re)),
        CircleRegime::AbsolutelyConvergent | CircleRegime::ConditionallyConvergent => {
            let r = accelerate_series(series_term_stream(p, w), tol, MAX_CIRCLE_TERMS);
            if !r.converged {
                return Err(Error::NoConvergence(format!(
                    "circle acceleration at w = {w} stalled at spread {:e}",
                    r.error
                )));
            }
            Ok(ValueWithError {
                value: r.value,
                error_estimate: r.error,
                method: Method::CircleAccelerated,
                terms_used: r.terms_used,
                perturbed: false,
            })
        }
    }
}

/// Radial limit `lim_{r->1-} 2F1(r w)` from evaluations at
/// `r = 1 - h, 1 - 2h, 1 - 3h` (h = 1e-6) with one linear extrapolation
/// step. The second difference bounds the extrapolation error.
pub fn radial_limit_2f1(p: &HypParams, w: Complex64) -> Result<ValueWithError> {
    const H: f64 = 1e-6;
    let f1 = gauss_2f1(p, w * (1.0 - H))?;
    let f2 = gauss_2f1(p, w * (1.0 - 2.0 * H))?;
    let f3 = gauss_2f1(p, w * (1.0 - 3.0 * H))?;
    let value = f1.value * 2.0 - f2.value;
    let curvature = (f1.value - f2.value * 2.0 + f3.value).norm();
    Ok(ValueWithError {
        value,
        error_estimate: curvature + 3.0 * (f1.error_estimate + f2.error_estimate),
        method: f1.method,
        terms_used: f1.terms_used + f2.terms_used + f3.terms_used,
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
    fn regime_examples() {
        // s = 0.5
        let p = HypParams::new(c(0.25, 0.0), c(0.25, 0.0), c(1.0, 0.0)).unwrap();
        assert_eq!(
            circle_regime(&p, c(-1.0, 0.0)),
            CircleRegime::AbsolutelyConvergent
        );
        assert_eq!(circle_regime(&p, c(1.0, 0.0)), CircleRegime::AtOne);
        // s = -0.5
        let q = HypParams::new(c(0.75, 0.0), c(0.75, 0.0), c(1.0, 0.0)).unwrap();
        assert_eq!(
            circle_regime(&q, c(0.0, 1.0)),
            CircleRegime::ConditionallyConvergent
        );
        // s = -1.5
        let d = HypParams::new(c(1.25, 0.0), c(1.25, 0.0), c(1.0, 0.0)).unwrap();
        assert_eq!(circle_regime(&d, c(-1.0, 0.0)), CircleRegime::Divergent);
        assert!(matches!(
            circle_2f1(&d, c(-1.0, 0.0)),
            Err(Error::DivergentRegime(_))
        ));
    }

    #[test]
    fn binomial_case_on_circle() {
        // 2F1(a,b;b;w) = (1-w)^-a, s = -a > 0 for a < 0
        for a in [-0.3, -1.7] {
            let p = HypParams::new(c(a, 0.0), c(0.6, 0.2), c(0.6, 0.2)).unwrap();
            let w = c(0.0, 1.0);
            let got = circle_2f1(&p, w).unwrap();
            let exact = (c(1.0, 0.0) - w).powc(c(-a, 0.0));
            assert!(
                (got.value - exact).norm() < 1e-8,
                "{a}: {} vs {exact}",
                got.value
            );
        }
    }

    #[test]
    fn at_one_uses_gauss_sum() {
        // 2F1(1/4,1/4;2;1) = Γ(2)Γ(3/2)/Γ(7/4)²
        let p = HypParams::new(c(0.25, 0.0), c(0.25, 0.0), c(2.0, 0.0)).unwrap();
        let v = circle_2f1(&p, c(1.0, 0.0)).unwrap().value;
        let g = |x: f64| crate::special::gamma(c(x, 0.0)).unwrap();
        let exact = g(2.0) * g(1.5) / (g(1.75) * g(1.75));
        assert!((v - exact).norm() < 1e-14);
        let q = HypParams::new(c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0)).unwrap();
        assert!(matches!(circle_2f1(&q, c(1.0, 0.0)), Err(Error::AtOne(_))));
    }
}
