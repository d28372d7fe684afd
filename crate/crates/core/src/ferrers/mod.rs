//! Ferrers function of the first kind `P_nu^mu`.

mod fourier;
mod theorem1;

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hyp2f1::{ValueWithError, DISC_TOLERANCE};
use crate::special::{cut_distance, nonpositive_integer, CUT_TOLERANCE};

pub use fourier::{
    coefficient_asymptotic, fourier_accelerated, fourier_coefficient, fourier_partial_sum,
    fourier_prefactor, fourier_sum, FourierTermRecord, SeriesTrace, FOURIER_TERM_CAP,
};
pub use theorem1::{eval_theorem1, eval_theta, eval_theta_with, theorem1_bracket};

/// `|theta - pi/2|` below this counts as exactly `pi/2`.
pub const HALF_PI_TOLERANCE: f64 = 1e-12;

/// Degree `nu` and order `mu`, with `nu + mu` not a negative integer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegreeOrder {
    nu: Complex64,
    mu: Complex64,
}

impl DegreeOrder {
    pub fn new(nu: Complex64, mu: Complex64) -> Result<Self> {
        if !(nu.is_finite() && mu.is_finite()) {
            return Err(Error::Domain("non-finite degree or order".into()));
        }
        if nonpositive_integer(nu + mu + 1.0, 1e-12).is_some() {
            return Err(Error::ParameterPole(nu + mu));
        }
        Ok(DegreeOrder { nu, mu })
    }

    pub fn real(nu: f64, mu: f64) -> Result<Self> {
        Self::new(Complex64::new(nu, 0.0), Complex64::new(mu, 0.0))
    }

    pub fn nu(&self) -> Complex64 {
        self.nu
    }

    pub fn mu(&self) -> Complex64 {
        self.mu
    }

    /// Hypergeometric parameters `(mu + 1/2, nu + mu + 1, nu + 3/2)`.
    pub fn hyp_parameters(&self) -> (Complex64, Complex64, Complex64) {
        (self.mu + 0.5, self.nu + self.mu + 1.0, self.nu + 1.5)
    }
}

/// A point of the plane cut along `(-inf,-1]` and `[1,inf)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CutPlanePoint {
    x: Complex64,
}

impl CutPlanePoint {
    pub fn new(x: Complex64) -> Result<Self> {
        if !x.is_finite() {
            return Err(Error::Domain(format!("non-finite point {x}")));
        }
        if cut_distance(x) <= CUT_TOLERANCE {
            return Err(Error::BranchCut(x));
        }
        Ok(CutPlanePoint { x })
    }

    pub fn real(x: f64) -> Result<Self> {
        Self::new(Complex64::new(x, 0.0))
    }

    pub fn x(&self) -> Complex64 {
        self.x
    }

    /// Real and strictly inside `(-1, 1)`.
    pub fn is_real_interval(&self) -> bool {
        self.x.im == 0.0 && self.x.re.abs() < 1.0
    }
}

/// An angle with `Re theta` in `(0, pi)`; `x = cos theta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaPoint {
    theta: Complex64,
    is_real: bool,
}

impl ThetaPoint {
    pub fn new(theta: Complex64) -> Result<Self> {
        if !theta.is_finite() || theta.re <= 0.0 || theta.re >= PI {
            return Err(Error::Domain(format!(
                "Re theta = {} is outside (0, pi)",
                theta.re
            )));
        }
        let is_real = theta.im.abs() <= 1e-14;
        let theta = if is_real {
            Complex64::new(theta.re, 0.0)
        } else {
            theta
        };
        Ok(ThetaPoint { theta, is_real })
    }

    pub fn real(theta: f64) -> Result<Self> {
        Self::new(Complex64::new(theta, 0.0))
    }

    pub fn theta(&self) -> Complex64 {
        self.theta
    }

    pub fn is_real(&self) -> bool {
        self.is_real
    }

    pub fn is_half_pi(&self) -> bool {
        self.is_real && is_half_pi(self.theta.re)
    }
}

pub fn is_half_pi(theta: f64) -> bool {
    (theta - FRAC_PI_2).abs() <= HALF_PI_TOLERANCE
}

/// Where the evaluation is requested.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Point {
    X(CutPlanePoint),
    Theta(ThetaPoint),
}

impl From<CutPlanePoint> for Point {
    fn from(p: CutPlanePoint) -> Self {
        Point::X(p)
    }
}

impl From<ThetaPoint> for Point {
    fn from(t: ThetaPoint) -> Self {
        Point::Theta(t)
    }
}

/// Convergence of the Fourier sine series at a real angle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConvergenceClass {
    Absolute,
    ConditionalNotAbsolute,
    /// Convergent at `theta = pi/2`; absoluteness is not asserted.
    ConditionalHalfPi,
    Divergent,
    OutsideTheorem,
}

impl ConvergenceClass {
    pub fn name(self) -> &'static str {
        match self {
            ConvergenceClass::Absolute => "Absolute",
            ConvergenceClass::ConditionalNotAbsolute => "ConditionalNotAbsolute",
            ConvergenceClass::ConditionalHalfPi => "Conditional(theta=pi/2)",
            ConvergenceClass::Divergent => "Divergent",
            ConvergenceClass::OutsideTheorem => "OutsideTheorem",
        }
    }

    pub fn converges(self) -> bool {
        matches!(
            self,
            ConvergenceClass::Absolute
                | ConvergenceClass::ConditionalNotAbsolute
                | ConvergenceClass::ConditionalHalfPi
        )
    }
}

impl fmt::Display for ConvergenceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Classify the sine series at real `theta` in `(0, pi)` from `Re mu`.
pub fn classify_convergence(p: &DegreeOrder, theta: f64) -> ConvergenceClass {
    classify_order(p.mu, theta)
}

/// The class depends on the order alone.
pub fn classify_order(mu: Complex64, theta: f64) -> ConvergenceClass {
    let m = mu.re;
    let half = is_half_pi(theta);
    if m < 0.0 {
        ConvergenceClass::Absolute
    } else if m < 0.5 {
        if half {
            ConvergenceClass::ConditionalHalfPi
        } else {
            ConvergenceClass::ConditionalNotAbsolute
        }
    } else if half {
        ConvergenceClass::OutsideTheorem
    } else {
        ConvergenceClass::Divergent
    }
}

/// Evaluate `P_nu^mu` with the default tolerance.
pub fn ferrers_p(p: &DegreeOrder, point: impl Into<Point>) -> Result<ValueWithError> {
    ferrers_p_with(p, point, DISC_TOLERANCE)
}

/// Evaluate `P_nu^mu`, choosing the route from the point and `Re mu`:
/// off the real interval the two-term hypergeometric form; on it the sine
/// series for `Re mu < 0` when its tail bound reaches `tol` within
/// [`FOURIER_TERM_CAP`] terms, the angle form on the unit circle for
/// `0 <= Re mu < 1/2` when the circle sums reach `tol`, and analytic
/// continuation otherwise.
pub fn ferrers_p_with(
    p: &DegreeOrder,
    point: impl Into<Point>,
    tol: f64,
) -> Result<ValueWithError> {
    let point = point.into();
    let theta = match point {
        Point::X(pt) if !pt.is_real_interval() => return eval_theorem1(p, &pt),
        Point::Theta(t) if !t.is_real() => return eval_theta_with(p, &t, tol),
        Point::X(pt) => pt.x.re.acos(),
        Point::Theta(t) => t.theta.re,
    };
    let by_theorem1 = || match point {
        Point::X(pt) => eval_theorem1(p, &pt),
        Point::Theta(_) => eval_theorem1(p, &CutPlanePoint::real(theta.cos())?),
    };
    let mu = p.mu.re;
    if mu < 0.0 {
        match fourier_sum(p, theta, tol) {
            Ok(v) => Ok(v),
            Err(Error::NoConvergence(_)) => by_theorem1(),
            Err(e) => Err(e),
        }
    } else if mu < 0.5 {
        match eval_theta_with(p, &ThetaPoint::real(theta)?, tol) {
            Ok(v) if v.error_estimate <= tol * v.value.norm().max(1.0) => Ok(v),
            Ok(v) => {
                // the circle sum stalled short of tol; keep whichever is sharper
                let w = by_theorem1()?;
                Ok(if w.error_estimate < v.error_estimate {
                    w
                } else {
                    v
                })
            }
            Err(Error::DivergentRegime(_) | Error::NoConvergence(_)) => by_theorem1(),
            Err(e) => Err(e),
        }
    } else {
        by_theorem1()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyp2f1::Method;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn degree_order_rejects_negative_integer_sum() {
        assert!(matches!(
            DegreeOrder::real(-2.5, 0.5),
            Err(Error::ParameterPole(_))
        ));
        assert!(DegreeOrder::real(-2.5, 0.25).is_ok());
        assert!(DegreeOrder::real(0.5, -0.5).is_ok());
    }

    #[test]
    fn cut_points_and_angles() {
        assert!(matches!(CutPlanePoint::real(1.0), Err(Error::BranchCut(_))));
        assert!(matches!(
            CutPlanePoint::new(c(-3.0, 1e-13)),
            Err(Error::BranchCut(_))
        ));
        assert!(CutPlanePoint::new(c(-3.0, 1e-6)).is_ok());
        assert!(ThetaPoint::real(0.0).is_err());
        assert!(ThetaPoint::real(FRAC_PI_2).unwrap().is_half_pi());
        assert!(!ThetaPoint::new(c(1.0, 0.2)).unwrap().is_real());
    }

    #[test]
    fn classification_examples() {
        let cls = |mu: f64, t: f64| classify_convergence(&DegreeOrder::real(0.3, mu).unwrap(), t);
        assert_eq!(cls(-1.0, 2.0), ConvergenceClass::Absolute);
        assert_eq!(cls(0.25, 1.0), ConvergenceClass::ConditionalNotAbsolute);
        assert_eq!(cls(0.25, FRAC_PI_2), ConvergenceClass::ConditionalHalfPi);
        assert_eq!(cls(1.0, 1.0), ConvergenceClass::Divergent);
        assert_eq!(cls(1.0, FRAC_PI_2), ConvergenceClass::OutsideTheorem);
        assert_eq!(cls(0.0, 1.0), ConvergenceClass::ConditionalNotAbsolute);
        assert_eq!(cls(0.5, 1.0), ConvergenceClass::Divergent);
    }

    #[test]
    fn routing_examples() {
        let p = DegreeOrder::real(3.0, 0.0).unwrap();
        let v = ferrers_p(&p, CutPlanePoint::real(-0.2).unwrap()).unwrap();
        assert!((v.value - c(0.28, 0.0)).norm() < 1e-12, "{v:?}");
        let one = DegreeOrder::real(0.0, 0.0).unwrap();
        let v = ferrers_p(&one, ThetaPoint::real(0.7).unwrap()).unwrap();
        assert!((v.value - c(1.0, 0.0)).norm() < 1e-12);
        // Re mu < 0 with a fast-decaying tail goes through the sine series.
        let q = DegreeOrder::real(0.3, -2.0).unwrap();
        let v = ferrers_p(&q, CutPlanePoint::real(0.1).unwrap()).unwrap();
        assert_eq!(v.method, Method::FourierSeries);
        let w = eval_theorem1(&q, &CutPlanePoint::real(0.1).unwrap()).unwrap();
        assert!(
            (v.value - w.value).norm() < 1e-11 * w.value.norm(),
            "{v:?} {w:?}"
        );
        // Off the interval.
        let r = ferrers_p(&p, CutPlanePoint::new(c(0.2, 0.5)).unwrap()).unwrap();
        let x = c(0.2, 0.5);
        let exact = (x.powi(3) * 5.0 - x * 3.0) / 2.0;
        assert!((r.value - exact).norm() < 1e-12);
    }
}
