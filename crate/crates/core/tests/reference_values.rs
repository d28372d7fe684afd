//! Worked examples against values computed once in extended precision
//! (40-digit arithmetic) and frozen here, or against the bundled oracle
//! fixture.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

use ferrers_core::ferrers::{
    coefficient_asymptotic, eval_theorem1, eval_theta, ferrers_p, fourier_partial_sum,
    CutPlanePoint, DegreeOrder, ThetaPoint,
};
use ferrers_core::fixture::{bundled, PointSpec};
use ferrers_core::hyp2f1::{circle_2f1, gauss_2f1, HypParams};
use ferrers_core::special::{gamma_ratio, log_gamma, principal_power};
use ferrers_core::{Complex64, Method};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

#[test]
fn log_gamma_one_plus_i() {
    let v = log_gamma(c(1.0, 1.0)).unwrap().as_log();
    assert!(
        rel(v, c(-0.6509231993018563, -0.3016403204675332)) < 1e-13,
        "{v}"
    );
}

#[test]
fn gamma_ratio_large_shift() {
    let v = gamma_ratio(c(0.3, 0.0), c(1.1, 0.0), 1_000_000)
        .unwrap()
        .value();
    assert!(rel(v, c(1.584892938878227e-5, 0.0)) < 1e-14, "{v}");
    assert!(rel(v, c(1e6f64.powf(-0.8), 0.0)) < 1e-6);
}

#[test]
fn principal_power_on_unit_circle() {
    let z = Complex64::from_polar(1.0, FRAC_PI_3);
    let v = principal_power(z, c(1.5, 0.0)).unwrap();
    assert!(
        (v - c(3.763156583177588e-17, 0.9999999999999999)).norm() < 1e-15,
        "{v}"
    );
}

#[test]
fn hypergeometric_examples() {
    let p = HypParams::new(c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0)).unwrap();
    let v = gauss_2f1(&p, c(0.5, 0.0)).unwrap();
    assert!(rel(v.value, c(2.0 * 2f64.ln(), 0.0)) < 1e-15);
    // c - a - b = 1.5 on the circle
    let p = HypParams::new(c(0.25, 0.0), c(0.25, 0.0), c(2.0, 0.0)).unwrap();
    let v = circle_2f1(&p, c(-1.0, 0.0)).unwrap();
    assert!(rel(v.value, c(0.9746018696787334, 0.0)) < 1e-8, "{v:?}");
}

#[test]
fn coefficient_asymptotic_complex_order() {
    let p = DegreeOrder::new(c(0.3, 0.0), c(0.3, 0.1)).unwrap();
    let v = coefficient_asymptotic(&p, 100).unwrap();
    assert!(
        rel(v, c(0.07244112541309214, 0.11710238943651685)) < 1e-14,
        "{v}"
    );
}

fn fixture_value(nu: Complex64, mu: Complex64, x: Complex64) -> Complex64 {
    bundled()
        .into_iter()
        .find(|r| {
            let k = r.case().unwrap();
            k.nu == nu && k.mu == mu && k.point == PointSpec::X(x)
        })
        .map(|r| r.value())
        .expect("case present in the fixture")
}

#[test]
fn oracle_fixed_examples() {
    let (nu, mu, x) = (c(0.3, 0.1), c(0.2, 0.0), c(0.4, 0.6));
    let v = eval_theorem1(
        &DegreeOrder::new(nu, mu).unwrap(),
        &CutPlanePoint::new(x).unwrap(),
    )
    .unwrap();
    assert!(rel(v.value, fixture_value(nu, mu, x)) < 1e-13, "{v:?}");

    let (nu, mu, x) = (c(1.4, 0.0), c(0.3, 0.0), c(0.25, 0.5));
    let v = ferrers_p(
        &DegreeOrder::new(nu, mu).unwrap(),
        CutPlanePoint::new(x).unwrap(),
    )
    .unwrap();
    assert!(rel(v.value, fixture_value(nu, mu, x)) < 1e-13, "{v:?}");
}

#[test]
fn legendre_through_the_facade() {
    let v = ferrers_p(
        &DegreeOrder::real(3.0, 0.0).unwrap(),
        CutPlanePoint::real(-0.2).unwrap(),
    )
    .unwrap();
    assert!((v.value - c(0.28, 0.0)).norm() < 1e-13, "{v:?}");
    let v = ferrers_p(
        &DegreeOrder::real(2.0, 0.0).unwrap(),
        CutPlanePoint::real(0.5).unwrap(),
    )
    .unwrap();
    assert!((v.value - c(-0.125, 0.0)).norm() < 1e-13, "{v:?}");
}

#[test]
fn terminating_sine_series() {
    let p = DegreeOrder::real(0.0, -0.5).unwrap();
    for th in [0.3, 1.0, FRAC_PI_2, 2.5] {
        let closed = (2.0 / (PI * f64::sin(th))).sqrt() * 2.0 * (th / 2.0).sin();
        let (s0, _) = fourier_partial_sum(&p, th, 0).unwrap();
        let (s100, _) = fourier_partial_sum(&p, th, 100).unwrap();
        let e = eval_theta(&p, &ThetaPoint::real(th).unwrap()).unwrap();
        assert!((s0.value - c(closed, 0.0)).norm() < 1e-12);
        assert!((s100.value - s0.value).norm() < 1e-15);
        assert!((e.value - c(closed, 0.0)).norm() < 1e-12, "{th}: {e:?}");
        assert_eq!(s0.method, Method::FourierSeries);
    }
}

#[test]
fn legendre_zero_partial_sums_at_half_pi() {
    let p = DegreeOrder::real(0.0, 0.0).unwrap();
    let (v, tr) = fourier_partial_sum(&p, FRAC_PI_2, 20_000).unwrap();
    assert!((v.value - c(1.0, 0.0)).norm() < 1e-4, "{v:?}");
    assert_eq!(tr.records.len(), 20_001);
}
