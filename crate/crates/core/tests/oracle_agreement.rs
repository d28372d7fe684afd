//! The main path against the bundled extended-precision fixture.

use ferrers_core::ferrers::{eval_theorem1, ferrers_p, CutPlanePoint, ThetaPoint};
use ferrers_core::fixture::{bundled, PointSpec};
use ferrers_core::Method;

#[test]
fn theorem1_matches_oracle_on_grid() {
    let recs = bundled();
    assert!(recs.len() >= 200);
    let mut worst = 0.0f64;
    for r in &recs {
        let case = r.case().unwrap();
        let p = case.degree_order().unwrap();
        let v = eval_theorem1(&p, &CutPlanePoint::new(case.point.x()).unwrap()).unwrap();
        let want = r.value();
        let err = (v.value - want).norm();
        let rel = err / want.norm();
        let limit = if v.perturbed || v.method == Method::CircleAccelerated {
            1e-7
        } else {
            1e-9
        };
        assert!(rel <= limit, "{r:?}: {v:?}");
        // the reported estimate is honest to a factor of ten
        assert!(
            err <= 10.0 * v.error_estimate.max(f64::EPSILON * want.norm()),
            "{r:?}: {v:?} err {err:e}"
        );
        worst = worst.max(rel);
    }
    assert!(worst < 1e-12, "worst relative error {worst:e}");
}

#[test]
fn facade_matches_oracle_on_real_points() {
    for r in bundled() {
        let case = r.case().unwrap();
        let p = case.degree_order().unwrap();
        let v = match case.point {
            PointSpec::X(x) => ferrers_p(&p, CutPlanePoint::new(x).unwrap()),
            PointSpec::Theta(t) => ferrers_p(&p, ThetaPoint::new(t).unwrap()),
        }
        .unwrap();
        let rel = (v.value - r.value()).norm() / r.value().norm();
        assert!(rel <= 1e-9, "{r:?}: {v:?}");
    }
}
