//! The two-term hypergeometric representation and its angle form.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use super::{CutPlanePoint, DegreeOrder, ThetaPoint};
use crate::error::{Error, Result};
use crate::hyp2f1::{
    circle_2f1_with, gauss_2f1, HypParams, ValueWithError, CIRCLE_TOLERANCE, DISC_TOLERANCE,
};
use crate::special::{
    ln_gamma_unwrapped, nonpositive_integer, pochhammer, principal_power,
    principal_sqrt_one_minus_sq,
};

type Evaluator<'a> = &'a dyn Fn(&HypParams, Complex64) -> Result<ValueWithError>;

/// `Γ(b)/Γ(c) · 2F1(a, b; c; w)`, continuous through the poles of `Γ(c)`.
fn gamma_scaled_2f1(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    w: Complex64,
    eval: Evaluator,
) -> Result<ValueWithError> {
    if let Some(n) = nonpositive_integer(c, 1e-12) {
        // lim F/Γ(c) at c = -n is (a)_m (b)_m / m! w^m F(a+m, b+m; m+1; w), m = n+1
        let m = n.unsigned_abs() + 1;
        let mf = m as f64;
        let q = HypParams::new(a + mf, b + mf, Complex64::new(mf + 1.0, 0.0))?;
        let f = eval(&q, w)?;
        let g = (ln_gamma_unwrapped(b + mf)? - ln_gamma_unwrapped(Complex64::new(mf + 1.0, 0.0))?)
            .exp()
            * pochhammer(a, m)?
            * w.powu(m as u32);
        return Ok(ValueWithError {
            value: g * f.value,
            error_estimate: g.norm() * f.error_estimate
                + 16.0 * f64::EPSILON * (g * f.value).norm(),
            ..f
        });
    }
    let q = HypParams::new(a, b, c)?;
    let f = eval(&q, w)?;
    let g = (ln_gamma_unwrapped(b)? - ln_gamma_unwrapped(c)?).exp();
    Ok(ValueWithError {
        value: g * f.value,
        error_estimate: g.norm() * f.error_estimate + 16.0 * f64::EPSILON * (g * f.value).norm(),
        ..f
    })
}

/// `pu · G F(w_u) - pv · G F(w_v)` with `G = Γ(b)/Γ(c)`.
fn two_term(
    p: &DegreeOrder,
    pu: Complex64,
    wu: Complex64,
    pv: Complex64,
    wv: Complex64,
    eval: Evaluator,
) -> Result<ValueWithError> {
    let (a, b, c) = p.hyp_parameters();
    let fu = gamma_scaled_2f1(a, b, c, wu, eval)?;
    let fv = gamma_scaled_2f1(a, b, c, wv, eval)?;
    let tu = pu * fu.value;
    let tv = pv * fv.value;
    let dominant = if fu.error_estimate * pu.norm() >= fv.error_estimate * pv.norm() {
        &fu
    } else {
        &fv
    };
    Ok(ValueWithError {
        value: tu - tv,
        error_estimate: pu.norm() * fu.error_estimate
            + pv.norm() * fv.error_estimate
            + 8.0 * f64::EPSILON * (tu.norm() + tv.norm()),
        method: dominant.method,
        terms_used: fu.terms_used + fv.terms_used,
        perturbed: fu.perturbed || fv.perturbed,
    })
}

/// `Γ(ν+μ+1)/Γ(ν+3/2) [u^{ν+μ+1} F(u/v) - v^{ν+μ+1} F(v/u)]`, the bracket
/// without the leading factor. Exchanging `u` and `v` negates it.
pub fn theorem1_bracket(p: &DegreeOrder, u: Complex64, v: Complex64) -> Result<ValueWithError> {
    let (_, b, _) = p.hyp_parameters();
    two_term(
        p,
        principal_power(u, b)?,
        u / v,
        principal_power(v, b)?,
        v / u,
        &gauss_2f1,
    )
}

/// `2^μ / (i √π)` as a single exponential.
fn leading_factor(mu: Complex64) -> Complex64 {
    (mu * LN_2 - 0.5 * PI.ln() + Complex64::new(0.0, -0.5 * PI)).exp()
}

fn scale(v: ValueWithError, f: Complex64) -> ValueWithError {
    let value = v.value * f;
    ValueWithError {
        value,
        error_estimate: v.error_estimate * f.norm() + 8.0 * f64::EPSILON * value.norm(),
        ..v
    }
}

/// `P_ν^μ(x)` on the cut plane from the two-term hypergeometric
/// representation with `u = x + i√(1-x²)`, `v = 1/u`.
pub fn eval_theorem1(p: &DegreeOrder, pt: &CutPlanePoint) -> Result<ValueWithError> {
    let x = pt.x();
    let s = principal_sqrt_one_minus_sq(x)?;
    let i = Complex64::new(0.0, 1.0);
    let u = x + i * s;
    let v = x - i * s;
    let bracket = theorem1_bracket(p, u, v)?;
    let power = principal_power((1.0 - x) * (1.0 + x), p.mu() * 0.5)?;
    Ok(scale(bracket, leading_factor(p.mu()) * power))
}

/// `P_ν^μ(cos θ)` with the hypergeometric factors at `e^{±2iθ}`, using
/// [`DISC_TOLERANCE`] for the circle summation.
pub fn eval_theta(p: &DegreeOrder, t: &ThetaPoint) -> Result<ValueWithError> {
    eval_theta_with(p, t, DISC_TOLERANCE)
}

/// Angle form. For real `θ` both factors are summed on the unit circle,
/// loosening the tolerance towards [`CIRCLE_TOLERANCE`] if the
/// acceleration stalls; for complex `θ` one argument lies inside the disc
/// and the other is reached by continuation.
pub fn eval_theta_with(p: &DegreeOrder, t: &ThetaPoint, tol: f64) -> Result<ValueWithError> {
    let theta = t.theta();
    let (_, b, _) = p.hyp_parameters();
    let i = Complex64::new(0.0, 1.0);
    let (wu, wv) = if t.is_real() {
        (
            Complex64::from_polar(1.0, 2.0 * theta.re),
            Complex64::from_polar(1.0, -2.0 * theta.re),
        )
    } else {
        ((2.0 * i * theta).exp(), (-2.0 * i * theta).exp())
    };
    let pu = (i * b * theta).exp();
    let pv = (-i * b * theta).exp();
    let circle = |q: &HypParams, w: Complex64| {
        let mut tol = tol.max(1e-15);
        loop {
            match circle_2f1_with(q, w, tol) {
                Err(Error::NoConvergence(_)) if tol < CIRCLE_TOLERANCE => {
                    tol = (tol * 100.0).min(CIRCLE_TOLERANCE)
                }
                r => return r,
            }
        }
    };
    let bracket = if t.is_real() {
        two_term(p, pu, wu, pv, wv, &circle)?
    } else {
        two_term(p, pu, wu, pv, wv, &gauss_2f1)?
    };
    let power = principal_power(theta.sin(), p.mu())?;
    Ok(scale(bracket, leading_factor(p.mu()) * power))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_3;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn x(v: f64) -> CutPlanePoint {
        CutPlanePoint::real(v).unwrap()
    }

    #[test]
    fn legendre_examples() {
        let v = eval_theorem1(&DegreeOrder::real(0.0, 0.0).unwrap(), &x(0.37)).unwrap();
        assert!((v.value - c(1.0, 0.0)).norm() < 1e-14, "{v:?}");
        let v = eval_theorem1(&DegreeOrder::real(1.0, 0.0).unwrap(), &x(0.3)).unwrap();
        assert!((v.value - c(0.3, 0.0)).norm() < 1e-14, "{v:?}");
        let v = eval_theorem1(&DegreeOrder::real(2.0, 0.0).unwrap(), &x(0.5)).unwrap();
        assert!((v.value - c(-0.125, 0.0)).norm() < 1e-14, "{v:?}");
    }

    #[test]
    fn half_integer_order_closed_form() {
        // P_ν^{1/2}(cos θ) = sqrt(2/(π sin θ)) cos((ν+1/2)θ)
        let p = DegreeOrder::new(c(0.3, 0.2), c(0.5, 0.0)).unwrap();
        for th in [0.4, 1.1, 2.7] {
            let v = eval_theorem1(&p, &x(f64::cos(th))).unwrap();
            let exact = (2.0 / (PI * th.sin())).sqrt() * (c(0.8, 0.2) * th).cos();
            assert!(
                (v.value - exact).norm() < 1e-12 * exact.norm(),
                "{th}: {v:?} vs {exact}"
            );
        }
    }

    #[test]
    fn degree_at_gamma_pole_of_c() {
        // ν = -3/2: P_{-3/2}^μ = P_{1/2}^μ
        let p = DegreeOrder::real(-1.5, 0.3).unwrap();
        let q = DegreeOrder::real(0.5, 0.3).unwrap();
        for z in [c(0.2, 0.0), c(-0.6, 0.4), c(1.5, 0.7)] {
            let pt = CutPlanePoint::new(z).unwrap();
            let a = eval_theorem1(&p, &pt).unwrap().value;
            let b = eval_theorem1(&q, &pt).unwrap().value;
            assert!((a - b).norm() < 1e-12 * b.norm(), "{z}: {a} vs {b}");
        }
    }

    #[test]
    fn angle_form_examples() {
        let t = ThetaPoint::real(1.0).unwrap();
        let v = eval_theta(&DegreeOrder::real(0.0, 0.0).unwrap(), &t).unwrap();
        assert!((v.value - c(1.0, 0.0)).norm() < 1e-12);
        let v = eval_theta(
            &DegreeOrder::real(1.0, 0.0).unwrap(),
            &ThetaPoint::real(FRAC_PI_3).unwrap(),
        )
        .unwrap();
        assert!((v.value - c(0.5, 0.0)).norm() < 1e-10, "{v:?}");
        let closed = (2.0 / (PI * 1f64.sin())).sqrt() * 2.0 * 0.5f64.sin();
        let v = eval_theta(&DegreeOrder::real(0.0, -0.5).unwrap(), &t).unwrap();
        assert!(
            (v.value - c(closed, 0.0)).norm() < 1e-13,
            "{v:?} vs {closed}"
        );
    }

    #[test]
    fn angle_form_divergent_on_circle() {
        let t = ThetaPoint::real(1.0).unwrap();
        let e = eval_theta(&DegreeOrder::real(0.3, 1.0).unwrap(), &t).unwrap_err();
        assert!(matches!(e, Error::DivergentRegime(_)));
    }

    #[test]
    fn complex_angle_matches_cut_plane_form() {
        let p = DegreeOrder::new(c(0.7, -0.1), c(0.8, 0.3)).unwrap();
        let th = c(1.2, 0.4);
        let a = eval_theta(&p, &ThetaPoint::new(th).unwrap()).unwrap();
        let b = eval_theorem1(&p, &CutPlanePoint::new(th.cos()).unwrap()).unwrap();
        assert!(
            (a.value - b.value).norm() < 1e-12 * b.value.norm(),
            "{a:?} {b:?}"
        );
    }

    #[test]
    fn bracket_is_antisymmetric() {
        let p = DegreeOrder::new(c(0.4, 0.1), c(-0.3, 0.2)).unwrap();
        let z = c(0.3, 0.5);
        let s = principal_sqrt_one_minus_sq(z).unwrap();
        let u = z + c(0.0, 1.0) * s;
        let v = z - c(0.0, 1.0) * s;
        let f = theorem1_bracket(&p, u, v).unwrap().value;
        let g = theorem1_bracket(&p, v, u).unwrap().value;
        assert!((f + g).norm() <= 1e-12 * f.norm());
    }
}
