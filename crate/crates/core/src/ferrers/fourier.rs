//! The Fourier sine series of `P_ν^μ(cos θ)`.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use super::{classify_convergence, ConvergenceClass, DegreeOrder};
use crate::accel::accelerate_series;
use crate::error::{Error, Result};
use crate::hyp2f1::{Method, ValueWithError};
use crate::special::{
    ln_gamma_ratio, ln_gamma_unwrapped, nonpositive_integer, pochhammer, principal_power, rgamma,
};

/// Terms the plain summation in [`fourier_sum`] may spend.
pub const FOURIER_TERM_CAP: u64 = 200_000;

/// The coefficient recurrence is re-anchored on the log-space value at
/// multiples of this index.
const REANCHOR: u64 = 512;

const MAX_ACCEL_TERMS: usize = 20_000;

/// One row of a partial-sum trace.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourierTermRecord {
    pub k: u64,
    pub coefficient: Complex64,
    pub phase_arg: Complex64,
    pub term: Complex64,
    pub partial_sum: Complex64,
    pub abs_partial_sum: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeriesTrace {
    pub prefactor: Complex64,
    pub class: ConvergenceClass,
    /// Whether the error estimate of the accompanying value is a tail bound.
    pub rigorous: bool,
    pub records: Vec<FourierTermRecord>,
}

fn check_theta(theta: f64) -> Result<()> {
    if theta.is_finite() && theta > 0.0 && theta < PI {
        Ok(())
    } else {
        Err(Error::Domain(format!("theta = {theta} is outside (0, pi)")))
    }
}

/// `Γ(ν+μ+k+1)/Γ(ν+k+3/2) · (μ+1/2)_k / k!`, evaluated in log space.
pub fn fourier_coefficient(p: &DegreeOrder, k: u64) -> Result<Complex64> {
    let (a, b, c) = p.hyp_parameters();
    let zero = Complex64::new(0.0, 0.0);
    let head = match ln_gamma_ratio(b, c, k)? {
        Some(l) => l,
        None => return Ok(zero),
    };
    if let Some(n) = nonpositive_integer(a, 8.0 * f64::EPSILON) {
        if n.unsigned_abs() < k {
            return Ok(zero);
        }
        // k is at most |a| here, so the direct product is short.
        let poch = pochhammer(a, k)?;
        let fact = (ln_gamma_unwrapped(Complex64::new(k as f64 + 1.0, 0.0))?).exp();
        return Ok(head.exp() * poch / fact);
    }
    let tail = ln_gamma_ratio(a, Complex64::new(1.0, 0.0), k)?.expect("Γ(k+1) is finite");
    Ok((head + tail - ln_gamma_unwrapped(a)?).exp())
}

/// `k^{2μ-1} / Γ(μ+1/2)`, the large-`k` form of the coefficient.
pub fn coefficient_asymptotic(p: &DegreeOrder, k: u64) -> Result<Complex64> {
    let a = p.mu() + 0.5;
    if nonpositive_integer(a, 8.0 * f64::EPSILON).is_some() {
        return Err(Error::AsymptoticUndefined(a));
    }
    if k == 0 {
        return Err(Error::Domain(
            "the coefficient asymptotic needs k >= 1".into(),
        ));
    }
    let kf = Complex64::new(k as f64, 0.0);
    Ok(principal_power(kf, p.mu() * 2.0 - 1.0)? * rgamma(a))
}

/// `2^{μ+1}/√π (sin θ)^μ`.
pub fn fourier_prefactor(p: &DegreeOrder, theta: f64) -> Result<Complex64> {
    check_theta(theta)?;
    let mu = p.mu();
    Ok(((mu + 1.0) * LN_2 - 0.5 * PI.ln()).exp()
        * principal_power(Complex64::new(theta.sin(), 0.0), mu)?)
}

/// Coefficients in index order: a ratio recurrence, re-anchored from
/// [`fourier_coefficient`] periodically and wherever the recurrence
/// would divide by a vanishing factor.
struct Coefficients {
    p: DegreeOrder,
    k: u64,
    current: Complex64,
    terminated: bool,
}

impl Coefficients {
    fn new(p: &DegreeOrder) -> Self {
        Coefficients {
            p: *p,
            k: 0,
            current: Complex64::new(0.0, 0.0),
            terminated: false,
        }
    }

    fn next(&mut self) -> Result<Complex64> {
        let k = self.k;
        let (a, b, c) = self.p.hyp_parameters();
        let value = if self.terminated {
            Complex64::new(0.0, 0.0)
        } else if k == 0
            || k % REANCHOR == 0
            || self.current == Complex64::new(0.0, 0.0)
            || nonpositive_integer(c + (k - 1) as f64, 1e-12).is_some()
        {
            fourier_coefficient(&self.p, k)?
        } else {
            let j = (k - 1) as f64;
            self.current * (b + j) * (a + j) / ((c + j) * (j + 1.0))
        };
        if let Some(n) = nonpositive_integer(a, 8.0 * f64::EPSILON) {
            if k >= n.unsigned_abs() {
                self.terminated = true;
            }
        }
        self.current = value;
        self.k += 1;
        Ok(value)
    }
}

fn phase_arg(p: &DegreeOrder, theta: f64, k: u64) -> Complex64 {
    (p.nu() + p.mu() + 1.0) * theta + Complex64::new(2.0 * k as f64 * theta, 0.0)
}

/// Envelope bound on `Σ_{k>n} |term_k|` when `Re μ < 0`, taking
/// `|coeff_k| <= 2 |coeff_n| (k/n)^{2 Re μ - 1}` and `|sin z| <= cosh(Im z)`.
fn tail_bound(
    p: &DegreeOrder,
    prefactor: Complex64,
    theta: f64,
    n: u64,
    coeff_n: Complex64,
) -> f64 {
    let m = p.mu().re;
    if m >= 0.0 {
        return f64::INFINITY;
    }
    if let Some(j) = nonpositive_integer(p.mu() + 0.5, 8.0 * f64::EPSILON) {
        if n >= j.unsigned_abs() {
            return 0.0;
        }
    }
    let nf = (n.max(1)) as f64;
    let envelope = 2.0 * coeff_n.norm() * nf.powf(1.0 - 2.0 * m);
    let sine = ((p.nu() + p.mu()).im * theta).cosh();
    prefactor.norm() * sine * envelope * nf.powf(2.0 * m) / (-2.0 * m)
}

/// Partial sum `Σ_{k=0}^{n}` of the sine series with its per-term trace.
/// Defined in every regime; the error estimate is a tail bound only when
/// the series converges absolutely.
pub fn fourier_partial_sum(
    p: &DegreeOrder,
    theta: f64,
    n: u64,
) -> Result<(ValueWithError, SeriesTrace)> {
    let prefactor = fourier_prefactor(p, theta)?;
    let class = classify_convergence(p, theta);
    let mut coeffs = Coefficients::new(p);
    let mut records = Vec::with_capacity(n as usize + 1);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut abs_sum = 0.0;
    let mut last = Complex64::new(0.0, 0.0);
    for k in 0..=n {
        let coefficient = coeffs.next()?;
        let phase = phase_arg(p, theta, k);
        let term = prefactor * coefficient * phase.sin();
        sum += term;
        abs_sum += term.norm();
        last = coefficient;
        records.push(FourierTermRecord {
            k,
            coefficient,
            phase_arg: phase,
            term,
            partial_sum: sum,
            abs_partial_sum: abs_sum,
        });
    }
    let rigorous = class == ConvergenceClass::Absolute;
    let rounding = 4.0 * f64::EPSILON * abs_sum * (1.0 + (n as f64).sqrt());
    let error = if rigorous {
        tail_bound(p, prefactor, theta, n, last) + rounding
    } else {
        records.last().map_or(0.0, |r| r.term.norm()) + rounding
    };
    let value = ValueWithError {
        value: sum,
        error_estimate: error,
        method: Method::FourierSeries,
        terms_used: n as usize + 1,
        perturbed: false,
    };
    Ok((
        value,
        SeriesTrace {
            prefactor,
            class,
            rigorous,
            records,
        },
    ))
}

/// Sum the absolutely convergent series (`Re μ < 0`) until the tail bound
/// falls below `tol · max(1, |sum|)`; `NoConvergence` if that would take
/// more than [`FOURIER_TERM_CAP`] terms.
pub fn fourier_sum(p: &DegreeOrder, theta: f64, tol: f64) -> Result<ValueWithError> {
    let prefactor = fourier_prefactor(p, theta)?;
    if classify_convergence(p, theta) != ConvergenceClass::Absolute {
        return Err(Error::NoConvergence(format!(
            "the sine series is not absolutely convergent for Re mu = {}",
            p.mu().re
        )));
    }
    // Predict the length from the envelope at a moderate index.
    let probe = 64;
    let bound_probe = tail_bound(p, prefactor, theta, probe, fourier_coefficient(p, probe)?);
    let m = p.mu().re;
    let needed = if 2.0 * bound_probe <= tol {
        probe as f64
    } else {
        probe as f64 * (2.0 * bound_probe / tol).powf(1.0 / (-2.0 * m))
    };
    if needed.is_nan() || needed > FOURIER_TERM_CAP as f64 {
        return Err(Error::NoConvergence(format!(
            "tail bound needs about {needed:.3e} terms"
        )));
    }
    let n = needed.ceil() as u64;
    let mut coeffs = Coefficients::new(p);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut abs_sum = 0.0;
    let mut last = Complex64::new(0.0, 0.0);
    for k in 0..=n {
        last = coeffs.next()?;
        let term = prefactor * last * phase_arg(p, theta, k).sin();
        sum += term;
        abs_sum += term.norm();
    }
    let error = tail_bound(p, prefactor, theta, n, last)
        + 4.0 * f64::EPSILON * abs_sum * (1.0 + (n as f64).sqrt());
    if error > tol * sum.norm().max(1.0) {
        return Err(Error::NoConvergence(format!(
            "tail bound {error:.3e} above tolerance"
        )));
    }
    Ok(ValueWithError {
        value: sum,
        error_estimate: error,
        method: Method::FourierSeries,
        terms_used: n as usize + 1,
        perturbed: false,
    })
}

/// Limit of the sine series by Wynn acceleration of its two exponential
/// components `Σ coeff_k e^{±2ikθ}`. Refused where the series diverges.
pub fn fourier_accelerated(p: &DegreeOrder, theta: f64, tol: f64) -> Result<ValueWithError> {
    let prefactor = fourier_prefactor(p, theta)?;
    let class = classify_convergence(p, theta);
    if !class.converges() {
        return Err(Error::DivergentRegime(-2.0 * p.mu().re));
    }
    let mut coeffs = Coefficients::new(p);
    let mut list = Vec::new();
    let mut fail = None;
    for _ in 0..MAX_ACCEL_TERMS {
        match coeffs.next() {
            Ok(c) => list.push(c),
            Err(e) => {
                fail = Some(e);
                break;
            }
        }
    }
    if let Some(e) = fail {
        return Err(e);
    }
    let component = |sign: f64| {
        let terms = list
            .iter()
            .enumerate()
            .map(move |(k, &c)| c * Complex64::from_polar(1.0, sign * 2.0 * k as f64 * theta));
        accelerate_series(terms, tol, MAX_ACCEL_TERMS)
    };
    let plus = component(1.0);
    let minus = component(-1.0);
    if !(plus.converged && minus.converged) {
        return Err(Error::NoConvergence(format!(
            "sine series acceleration at theta = {theta}"
        )));
    }
    let i = Complex64::new(0.0, 1.0);
    let beta = (p.nu() + p.mu() + 1.0) * theta;
    let eu = (i * beta).exp();
    let ev = (-i * beta).exp();
    let half = prefactor / (2.0 * i);
    let value = half * (eu * plus.value - ev * minus.value);
    Ok(ValueWithError {
        value,
        error_estimate: half.norm() * (eu.norm() * plus.error + ev.norm() * minus.error),
        method: Method::FourierSeries,
        terms_used: plus.terms_used.max(minus.terms_used),
        perturbed: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ferrers::{eval_theta, ThetaPoint};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn coefficient_examples() {
        let p = DegreeOrder::real(0.0, -0.5).unwrap();
        assert!((fourier_coefficient(&p, 0).unwrap() - c(2.0, 0.0)).norm() < 1e-14);
        for k in [1, 2, 50] {
            assert_eq!(fourier_coefficient(&p, k).unwrap(), c(0.0, 0.0));
        }
        let q = DegreeOrder::real(0.3, 0.2).unwrap();
        let r = fourier_coefficient(&q, 100_000).unwrap()
            / coefficient_asymptotic(&q, 100_000).unwrap();
        assert!((r - 1.0).norm() < 0.01);
    }

    #[test]
    fn asymptotic_examples() {
        let p = DegreeOrder::real(0.9, 0.5).unwrap();
        assert!((coefficient_asymptotic(&p, 7).unwrap() - c(1.0, 0.0)).norm() < 1e-15);
        let q = DegreeOrder::real(0.0, 0.0).unwrap();
        let v = coefficient_asymptotic(&q, 4).unwrap().re;
        assert!((v - 0.141_047_395_886_939_08).abs() < 1e-15);
        let r = DegreeOrder::real(0.0, -1.5).unwrap();
        assert!(matches!(
            coefficient_asymptotic(&r, 3),
            Err(Error::AsymptoticUndefined(_))
        ));
    }

    #[test]
    fn recurrence_matches_log_space() {
        let p = DegreeOrder::new(c(0.3, 0.2), c(-0.25, 0.5)).unwrap();
        let mut it = Coefficients::new(&p);
        for k in 0..1500 {
            let r = it.next().unwrap();
            let d = fourier_coefficient(&p, k).unwrap();
            assert!((r - d).norm() <= 1e-12 * d.norm(), "{k}");
        }
    }

    #[test]
    fn coefficients_through_c_poles() {
        // c + k hits the poles at k = 0, 1, 2 and then leaves them.
        let p = DegreeOrder::real(-3.5, 0.2).unwrap();
        let mut it = Coefficients::new(&p);
        for k in 0..10 {
            let r = it.next().unwrap();
            let d = fourier_coefficient(&p, k).unwrap();
            if k <= 2 {
                assert_eq!(d, c(0.0, 0.0));
            }
            assert!(
                (r - d).norm() <= 1e-13 * d.norm().max(1e-300),
                "{k}: {r} {d}"
            );
        }
    }

    #[test]
    fn terminating_series() {
        let p = DegreeOrder::real(0.0, -0.5).unwrap();
        for th in [0.3, 1.0, 2.5] {
            let closed = (2.0 / (PI * f64::sin(th))).sqrt() * 2.0 * (th / 2.0).sin();
            let (v0, _) = fourier_partial_sum(&p, th, 0).unwrap();
            let (v100, t) = fourier_partial_sum(&p, th, 100).unwrap();
            assert!((v0.value.re - closed).abs() < 1e-14);
            assert_eq!(v0.value, v100.value);
            assert!(t.rigorous);
            assert_eq!(t.records.len(), 101);
        }
    }

    #[test]
    fn trace_structure() {
        let p = DegreeOrder::real(0.3, 0.25).unwrap();
        let (_, t) = fourier_partial_sum(&p, 1.0, 300).unwrap();
        assert!(!t.rigorous);
        let mut acc = c(0.0, 0.0);
        for w in t.records.windows(2) {
            assert!(w[1].abs_partial_sum >= w[0].abs_partial_sum);
        }
        for r in &t.records {
            acc += t.prefactor * r.coefficient * r.phase_arg.sin();
            assert!((acc - r.partial_sum).norm() <= 1e-12 * acc.norm().max(1.0));
        }
    }

    #[test]
    fn accelerated_matches_angle_form() {
        let p = DegreeOrder::real(0.3, 0.25).unwrap();
        let a = fourier_accelerated(&p, 1.0, 1e-10).unwrap();
        let b = eval_theta(&p, &ThetaPoint::real(1.0).unwrap()).unwrap();
        assert!((a.value - b.value).norm() < 1e-8, "{a:?} {b:?}");
        let d = DegreeOrder::real(0.3, 1.0).unwrap();
        assert!(matches!(
            fourier_accelerated(&d, 1.0, 1e-8),
            Err(Error::DivergentRegime(_))
        ));
    }

    #[test]
    fn plain_sum_respects_its_bound() {
        let p = DegreeOrder::real(0.3, -1.5).unwrap();
        let v = fourier_sum(&p, 2.0, 1e-10).unwrap();
        let e = eval_theta(&p, &ThetaPoint::real(2.0).unwrap()).unwrap();
        assert!(
            (v.value - e.value).norm() <= v.error_estimate + e.error_estimate,
            "{v:?} {e:?}"
        );
    }
}
