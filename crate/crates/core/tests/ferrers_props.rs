use std::f64::consts::FRAC_PI_2;

use ferrers_core::ferrers::{eval_theorem1, eval_theta, CutPlanePoint, DegreeOrder, ThetaPoint};
use ferrers_core::{Complex64, Error};
use proptest::prelude::*;

fn small() -> impl Strategy<Value = Complex64> {
    (-2.0f64..2.0, -2.0f64..2.0)
        .prop_map(|(x, y)| Complex64::new(x, y))
        .prop_filter("|z| <= 2", |z| z.norm() <= 2.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn routes_agree(nu in small(), mu in small()) {
        let Ok(p) = DegreeOrder::new(nu, mu) else { return Ok(()) };
        for th in [0.3, 1.0, FRAC_PI_2, 2.5] {
            let a = eval_theorem1(&p, &CutPlanePoint::real(f64::cos(th)).unwrap()).unwrap();
            match eval_theta(&p, &ThetaPoint::real(th).unwrap()) {
                Ok(b) => {
                    let bound = 10.0 * (a.error_estimate + b.error_estimate);
                    prop_assert!((a.value - b.value).norm() <= bound, "{nu} {mu} {th}: {a:?} vs {b:?}");
                }
                Err(Error::DivergentRegime(_)) => prop_assert!(mu.re >= 0.5),
                Err(e) => prop_assert!(false, "{nu} {mu} {th}: {e}"),
            }
        }
    }

    #[test]
    fn real_parameters_give_real_values(nu in -3.0f64..3.0, mu in -3.0f64..3.0, x in -0.99f64..0.99) {
        let Ok(p) = DegreeOrder::real(nu, mu) else { return Ok(()) };
        let v = eval_theorem1(&p, &CutPlanePoint::real(x).unwrap()).unwrap().value;
        prop_assert!(v.im.abs() <= 1e-10 * (1.0 + v.norm()), "{nu} {mu} {x}: {v}");
    }
}
