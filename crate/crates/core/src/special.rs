//! Complex-plane special-function primitives.
//!
//! Log-gamma uses the Stirling series with an upward recurrence shift for
//! small arguments and the reflection formula for `Re z < 1/2`. Gamma
//! ratios `Γ(a+k)/Γ(b+k)` switch to the large-`k` expansion in inverse
//! powers of `k` once `k` reaches [`GAMMA_RATIO_CROSSOVER`].

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Distance below which a point is considered to sit on a branch cut.
pub const CUT_TOLERANCE: f64 = 1e-12;

/// Index at which [`gamma_ratio`] switches to the asymptotic expansion.
pub const GAMMA_RATIO_CROSSOVER: u64 = 10_000;

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;
const LN_PI: f64 = 1.144_729_885_849_400_2;

/// Stirling coefficients `B_{2n} / (2n (2n-1))` for n = 1..=8.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// Arguments with modulus at least this large go straight to Stirling.
const STIRLING_MIN: f64 = 15.0;

/// `log Γ(z)` split into modulus and phase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogGammaValue {
    pub log_modulus: f64,
    /// Principal phase in (-π, π].
    pub phase: f64,
}

impl LogGammaValue {
    fn from_log(l: Complex64) -> Self {
        LogGammaValue {
            log_modulus: l.re,
            phase: wrap_phase(l.im),
        }
    }

    pub fn as_log(&self) -> Complex64 {
        Complex64::new(self.log_modulus, self.phase)
    }

    /// `Γ(z)` itself. Overflows to infinity for very large arguments.
    pub fn exp(&self) -> Complex64 {
        Complex64::from_polar(self.log_modulus.exp(), self.phase)
    }
}

/// Result of [`gamma_ratio`]: either a finite value or an exact zero caused
/// by a pole of the denominator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GammaRatio {
    Value(Complex64),
    TrivialZero,
}

impl GammaRatio {
    pub fn value(&self) -> Complex64 {
        match *self {
            GammaRatio::Value(v) => v,
            GammaRatio::TrivialZero => Complex64::new(0.0, 0.0),
        }
    }

    pub fn is_trivial_zero(&self) -> bool {
        matches!(self, GammaRatio::TrivialZero)
    }
}

/// Reduce an angle to (-π, π].
pub fn wrap_phase(phi: f64) -> f64 {
    if phi > -PI && phi <= PI {
        return phi;
    }
    let two_pi = 2.0 * PI;
    let mut r = phi % two_pi;
    if r <= -PI {
        r += two_pi;
    } else if r > PI {
        r -= two_pi;
    }
    r
}

/// Replace a negative-zero imaginary part so that real negative numbers
/// land on the principal side of the cut.
#[inline]
fn canonical(z: Complex64) -> Complex64 {
    if z.im == 0.0 {
        Complex64::new(z.re, 0.0)
    } else {
        z
    }
}

/// Principal logarithm with imaginary part in (-π, π].
pub fn principal_ln(z: Complex64) -> Complex64 {
    canonical(z).ln()
}

/// `ln(1 + t)` without cancellation for small `t`.
pub fn ln_1p(t: Complex64) -> Complex64 {
    // |1+t|² - 1 = x(2+x) + y² keeps the real part accurate when t is tiny
    let t = canonical(t);
    let (x, y) = (t.re, t.im);
    Complex64::new(0.5 * (x * (2.0 + x) + y * y).ln_1p(), y.atan2(1.0 + x))
}

/// Returns `Some(n)` when `z` is within rounding distance of the
/// non-positive integer `n`.
pub fn nonpositive_integer(z: Complex64, tol: f64) -> Option<i64> {
    if z.re > 0.5 {
        return None;
    }
    let n = z.re.round();
    let scale = tol * n.abs().max(1.0);
    if (z.re - n).abs() <= scale && z.im.abs() <= scale {
        Some(n as i64)
    } else {
        None
    }
}

fn is_gamma_pole(z: Complex64) -> bool {
    nonpositive_integer(z, 8.0 * f64::EPSILON).is_some()
}

/// `sin(π x)` with exact reduction, so integers give exactly zero.
pub fn sin_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let mut r = x % 2.0;
    if r > 1.0 {
        r -= 2.0;
    } else if r < -1.0 {
        r += 2.0;
    }
    if r > 0.5 {
        r = 1.0 - r;
    } else if r < -0.5 {
        r = -1.0 - r;
    }
    (PI * r).sin()
}

/// `cos(π x)` with exact reduction, so half-integers give exactly zero.
pub fn cos_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let mut r = x.abs() % 2.0;
    if r > 1.0 {
        r = 2.0 - r;
    }
    sin_pi(0.5 - r)
}

/// `sin(π z)` for complex `z`.
pub fn sin_pi_complex(z: Complex64) -> Complex64 {
    let y = PI * z.im;
    Complex64::new(sin_pi(z.re) * y.cosh(), cos_pi(z.re) * y.sinh())
}

/// `cos(π z)` for complex `z`.
pub fn cos_pi_complex(z: Complex64) -> Complex64 {
    let y = PI * z.im;
    Complex64::new(cos_pi(z.re) * y.cosh(), -sin_pi(z.re) * y.sinh())
}

/// `ln sin(π z)`, branch unspecified (only used under `exp` or with a
/// wrapped phase).
fn ln_sin_pi(z: Complex64) -> Complex64 {
    if z.im.abs() < 20.0 {
        return principal_ln(sin_pi_complex(z));
    }
    if z.im < 0.0 {
        return ln_sin_pi(z.conj()).conj();
    }
    // sin(πz) = (i/2) e^{-iπz} (1 - e^{2iπz}); reduce Re z mod 2 in the phase.
    let x = z.re % 2.0;
    let lead = Complex64::new(PI * z.im, -PI * x);
    let decay = (-2.0 * PI * z.im).exp();
    let e2 = Complex64::new(decay * cos_pi(2.0 * z.re), decay * sin_pi(2.0 * z.re));
    lead + ln_1p(-e2) + Complex64::new((0.5f64).ln(), 0.5 * PI)
}

fn stirling_series(z: Complex64) -> Complex64 {
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut t = inv;
    let mut series = Complex64::new(0.0, 0.0);
    for c in STIRLING {
        series += t * c;
        t *= inv2;
    }
    series
}

fn stirling(z: Complex64) -> Complex64 {
    (z - 0.5) * principal_ln(z) - z + HALF_LN_2PI + stirling_series(z)
}

/// Unwrapped `log Γ(z)`; exact branch only guaranteed for `Re z >= 1/2`.
fn ln_gamma_raw(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        return Complex64::new(LN_PI, 0.0) - ln_sin_pi(z) - ln_gamma_raw(1.0 - z);
    }
    if z.norm() >= STIRLING_MIN {
        return stirling(z);
    }
    let m = (STIRLING_MIN - z.re).ceil().max(1.0) as usize;
    let mut shift = Complex64::new(0.0, 0.0);
    for j in 0..m {
        shift += principal_ln(z + j as f64);
    }
    stirling(z + m as f64) - shift
}

/// `log Γ(z)` for complex `z` off the poles.
pub fn log_gamma(z: Complex64) -> Result<LogGammaValue> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain(format!("non-finite argument {z}")));
    }
    if is_gamma_pole(z) {
        return Err(Error::Pole(z));
    }
    Ok(LogGammaValue::from_log(ln_gamma_raw(z)))
}

/// `log Γ(z)` as a complex number without phase reduction.
pub(crate) fn ln_gamma_unwrapped(z: Complex64) -> Result<Complex64> {
    if is_gamma_pole(z) {
        return Err(Error::Pole(z));
    }
    Ok(ln_gamma_raw(z))
}

/// `Γ(z)`.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    log_gamma(z).map(|l| l.exp())
}

/// `1/Γ(z)`, which is entire: exactly zero at the poles of `Γ`.
pub fn rgamma(z: Complex64) -> Complex64 {
    if is_gamma_pole(z) {
        return Complex64::new(0.0, 0.0);
    }
    (-ln_gamma_raw(z)).exp()
}

fn bernoulli_poly(n: usize, x: Complex64) -> Complex64 {
    let x2 = x * x;
    match n {
        2 => x2 - x + 1.0 / 6.0,
        3 => x2 * x - x2 * 1.5 + x * 0.5,
        4 => x2 * x2 - x2 * x * 2.0 + x2 - 1.0 / 30.0,
        5 => x2 * x2 * x - x2 * x2 * 2.5 + x2 * x * (5.0 / 3.0) - x / 6.0,
        _ => unreachable!("only B2..B5 are tabulated"),
    }
}

/// `ln[Γ(a+k)/Γ(b+k)]` from the expansion in inverse powers of `k`.
fn ln_gamma_ratio_asymptotic(a: Complex64, b: Complex64, k: f64) -> Complex64 {
    let mut acc = (a - b) * k.ln();
    let mut kp = 1.0;
    for n in 1..=4usize {
        kp *= k;
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        let diff = bernoulli_poly(n + 1, a) - bernoulli_poly(n + 1, b);
        acc += diff * (sign / ((n * (n + 1)) as f64 * kp));
    }
    acc
}

/// `ln Γ(w2 + d) - ln Γ(w2)` for `Re w2, Re(w2 + d) >= 15`, arranged so the
/// large leading terms cancel analytically. `d` is passed separately because
/// `w1 - w2` loses the low bits of `d` once `w2` is large.
fn ln_gamma_diff_large(w2: Complex64, d: Complex64) -> Complex64 {
    let w1 = w2 + d;
    let lead = (w1 - 0.5) * ln_1p(d / w2) + d * principal_ln(w2) - d;
    lead + stirling_series(w1) - stirling_series(w2)
}

/// `ln[Γ(a+k)/Γ(b+k)]`, or `None` when the denominator sits on a pole.
pub fn ln_gamma_ratio(a: Complex64, b: Complex64, k: u64) -> Result<Option<Complex64>> {
    let kf = k as f64;
    let z1 = a + kf;
    let z2 = b + kf;
    if is_gamma_pole(z1) {
        return Err(Error::Pole(z1));
    }
    if is_gamma_pole(z2) {
        return Ok(None);
    }
    if a == b {
        return Ok(Some(Complex64::new(0.0, 0.0)));
    }
    if k >= GAMMA_RATIO_CROSSOVER {
        return Ok(Some(ln_gamma_ratio_asymptotic(a, b, kf)));
    }
    Ok(Some(ln_gamma_ratio_direct(a, b, kf)))
}

fn ln_gamma_ratio_direct(a: Complex64, b: Complex64, k: f64) -> Complex64 {
    let z1 = a + k;
    let z2 = b + k;
    let low = z1.re.min(z2.re);
    let m = if low < STIRLING_MIN {
        (STIRLING_MIN - low).ceil() as usize
    } else {
        0
    };
    if m > 400 {
        return ln_gamma_raw(z1) - ln_gamma_raw(z2);
    }
    let mut shift = Complex64::new(0.0, 0.0);
    for j in 0..m {
        let j = j as f64;
        shift += principal_ln(z2 + j) - principal_ln(z1 + j);
    }
    ln_gamma_diff_large(b + (k + m as f64), a - b) + shift
}

/// `Γ(a+k)/Γ(b+k)`.
///
/// A pole of the numerator is an error; a pole of the denominator gives
/// [`GammaRatio::TrivialZero`].
pub fn gamma_ratio(a: Complex64, b: Complex64, k: u64) -> Result<GammaRatio> {
    Ok(match ln_gamma_ratio(a, b, k)? {
        Some(l) => GammaRatio::Value(l.exp()),
        None => GammaRatio::TrivialZero,
    })
}

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`.
pub fn pochhammer(a: Complex64, k: u64) -> Result<Complex64> {
    if let Some(n) = nonpositive_integer(a, 8.0 * f64::EPSILON) {
        if (n.unsigned_abs()) < k {
            return Ok(Complex64::new(0.0, 0.0));
        }
    }
    let mut acc = Complex64::new(1.0, 0.0);
    for j in 0..k {
        acc *= a + j as f64;
        if !(acc.re.is_finite() && acc.im.is_finite()) {
            return Err(Error::Overflow);
        }
    }
    Ok(acc)
}

/// Distance from `x` to `(-inf,-1] ∪ [1,inf)`.
pub fn cut_distance(x: Complex64) -> f64 {
    let r = x.re.abs();
    if r >= 1.0 {
        x.im.abs()
    } else {
        (1.0 - r).hypot(x.im)
    }
}

/// The branch of `sqrt(1 - x²)` that is positive on (-1, 1) and continuous
/// on the plane cut along `(-inf,-1] ∪ [1,inf)`.
pub fn principal_sqrt_one_minus_sq(x: Complex64) -> Result<Complex64> {
    if cut_distance(x) <= CUT_TOLERANCE {
        return Err(Error::BranchCut(x));
    }
    let w = canonical((1.0 - x) * (1.0 + x));
    Ok(w.sqrt())
}

/// `exp(α Log z)` with the principal logarithm.
pub fn principal_power(z: Complex64, alpha: Complex64) -> Result<Complex64> {
    if z == Complex64::new(0.0, 0.0) {
        return if alpha.re > 0.0 {
            Ok(Complex64::new(0.0, 0.0))
        } else {
            Err(Error::Domain(format!("0 raised to {alpha}")))
        };
    }
    Ok((alpha * principal_ln(z)).exp())
}
