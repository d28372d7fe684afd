//! Gauss hypergeometric function `2F1(a, b; c; w)`.

pub mod circle;
pub mod continuation;
pub mod series;
pub mod transform;

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::special::{nonpositive_integer, CUT_TOLERANCE};

pub use circle::{
    circle_2f1, circle_2f1_with, circle_regime, radial_limit_2f1, CircleRegime, CIRCLE_TOLERANCE,
};
pub use continuation::continue_2f1;
pub use series::{series_term_stream, sum_direct, terminating_degree, SeriesTerms};
pub use transform::{best_transformation, eval_transformed, Transformation};

/// Below this modulus the defining series is summed directly.
pub const RHO_DIRECT: f64 = 0.75;

/// Default relative tolerance inside the disc.
pub const DISC_TOLERANCE: f64 = 1e-12;

/// Parameters `(a, b, c)` with `c` off the poles `0, -1, -2, ...`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypParams {
    pub(crate) a: Complex64,
    pub(crate) b: Complex64,
    pub(crate) c: Complex64,
}

impl HypParams {
    pub fn new(a: Complex64, b: Complex64, c: Complex64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::Domain("non-finite hypergeometric parameter".into()));
        }
        if nonpositive_integer(c, 8.0 * f64::EPSILON).is_some() {
            return Err(Error::CPole(c));
        }
        Ok(HypParams { a, b, c })
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    pub fn c(&self) -> Complex64 {
        self.c
    }

    /// `c - a - b`, which governs the behavior on the unit circle.
    pub fn excess(&self) -> Complex64 {
        self.c - self.a - self.b
    }
}

/// How a value was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    DirectSeries,
    Transformed,
    Continued,
    CircleAccelerated,
    FourierSeries,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::DirectSeries => "direct_series",
            Method::Transformed => "transformed",
            Method::Continued => "continued",
            Method::CircleAccelerated => "circle_accelerated",
            Method::FourierSeries => "fourier_series",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A value, a non-negative absolute error estimate and its provenance.
/// `perturbed` marks values obtained through a parameter perturbation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValueWithError {
    pub value: Complex64,
    pub error_estimate: f64,
    pub method: Method,
    pub terms_used: usize,
    pub perturbed: bool,
}

impl ValueWithError {
    pub fn relative_error(&self) -> f64 {
        self.error_estimate / self.value.norm().max(f64::MIN_POSITIVE)
    }
}

/// Principal-branch `2F1(a, b; c; w)` for any `w` off `[1, inf)`.
pub fn gauss_2f1(p: &HypParams, w: Complex64) -> Result<ValueWithError> {
    if !w.is_finite() {
        return Err(Error::Domain(format!("non-finite argument {w}")));
    }
    if w == Complex64::new(0.0, 0.0) {
        return Ok(ValueWithError {
            value: Complex64::new(1.0, 0.0),
            error_estimate: 0.0,
            method: Method::DirectSeries,
            terms_used: 1,
            perturbed: false,
        });
    }
    if terminating_degree(p).is_some() {
        return sum_direct(p, w);
    }
    if w.re >= 1.0 - CUT_TOLERANCE && w.im.abs() <= CUT_TOLERANCE {
        return Err(Error::Branch(w));
    }
    if w.norm() <= RHO_DIRECT {
        return sum_direct(p, w);
    }
    if let Some((t, r)) = best_transformation(p, w) {
        if r <= RHO_DIRECT {
            return eval_transformed(p, w, t);
        }
    }
    continue_2f1(p, w)
}
