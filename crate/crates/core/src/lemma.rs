//! Numerical demonstrations of the two sine lemmas behind the divergence
//! results, and of the bounded cosine sums used in the Dirichlet test.
//!
//! Arguments are formed as multiples of `θ/π` and fed to `sin_pi`, so
//! angles given as exact fractions of π (e.g. `FRAC_PI_2`) produce exact
//! zeros where the mathematics does.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::ferrers::is_half_pi;
use crate::special::{cos_pi, sin_pi_complex};

/// One step of a running sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LemmaTrace {
    pub n: u64,
    pub value: f64,
    pub running_sum: f64,
}

fn check_angle(theta: f64) -> Result<()> {
    if theta > 0.0 && theta < PI {
        Ok(())
    } else {
        Err(Error::Domain(format!("theta = {theta} is outside (0, pi)")))
    }
}

fn lemma3_terms(a: Complex64, theta: f64) -> impl Iterator<Item = f64> {
    let t = theta / PI;
    let a_t = a * t;
    (1u64..).map(move |k| sin_pi_complex(a_t + 2.0 * k as f64 * t).norm() / k as f64)
}

/// `Σ_{k=1}^n |sin((a+2k)θ)| / k`; complex `a` uses the modulus of the
/// complex sine.
pub fn lemma3_partial_sum(a: Complex64, theta: f64, n: u64) -> Result<f64> {
    check_angle(theta)?;
    Ok(lemma3_terms(a, theta).take(n as usize).sum())
}

/// Every partial sum of [`lemma3_partial_sum`] up to `n`.
pub fn lemma3_trace(a: Complex64, theta: f64, n: u64) -> Result<Vec<LemmaTrace>> {
    check_angle(theta)?;
    let mut sum = 0.0;
    Ok(lemma3_terms(a, theta)
        .take(n as usize)
        .enumerate()
        .map(|(i, v)| {
            sum += v;
            LemmaTrace {
                n: i as u64 + 1,
                value: v,
                running_sum: sum,
            }
        })
        .collect())
}

/// `Σ_{k=1}^n cos(2(a+2k)θ)`, bounded by [`dirichlet_bound`] whenever
/// `θ ≠ π/2`.
pub fn dirichlet_cosine_sum(a: f64, theta: f64, n: u64) -> Result<f64> {
    check_angle(theta)?;
    if is_half_pi(theta) {
        return Err(Error::HalfPi);
    }
    let t = theta / PI;
    let a_t = a * t;
    Ok((1..=n)
        .map(|k| cos_pi(2.0 * (a_t + 2.0 * k as f64 * t)))
        .sum())
}

/// `1/|sin 2θ| + 1`.
pub fn dirichlet_bound(theta: f64) -> f64 {
    1.0 / (2.0 * theta).sin().abs() + 1.0
}

/// `max_{n ∈ [N, N+window]} |sin(a + b n)|`.
pub fn lemma4_tail_stat(a: Complex64, b: Complex64, start: u64, window: u64) -> f64 {
    lemma4_trace(a, b, start, window)
        .iter()
        .map(|t| t.value)
        .fold(0.0, f64::max)
}

/// `|sin(a + b n)|` for `n ∈ [N, N+window]`, with the running maximum.
pub fn lemma4_trace(a: Complex64, b: Complex64, start: u64, window: u64) -> Vec<LemmaTrace> {
    let a_t = a / PI;
    let b_t = b / PI;
    let mut max = 0.0f64;
    (start..=start.saturating_add(window))
        .map(|n| {
            let v = sin_pi_complex(a_t + b_t * n as f64).norm();
            max = max.max(v);
            LemmaTrace {
                n,
                value: v,
                running_sum: max,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn lemma3_examples() {
        for n in [1, 10, 1000] {
            assert_eq!(lemma3_partial_sum(re(0.0), FRAC_PI_2, n).unwrap(), 0.0);
        }
        let h10 = 7381.0 / 2520.0;
        assert!((lemma3_partial_sum(re(1.0), FRAC_PI_2, 10).unwrap() - h10).abs() < 1e-14);
        assert_eq!(lemma3_partial_sum(re(0.3), 1.0, 0).unwrap(), 0.0);
        assert!(lemma3_partial_sum(re(1.0), 0.0, 3).is_err());
    }

    #[test]
    fn lemma3_reference_sum() {
        // extended-precision direct loop
        let want = 5.045083810499545;
        let got = lemma3_partial_sum(re(0.0), 1.0, 1000).unwrap();
        assert!((got - want).abs() < 1e-11 * want, "{got}");
    }

    #[test]
    fn lemma3_exceptional_case_is_exact() {
        // at θ = π/2 every term is |sin(aπ/2)| / k: zero exactly for even
        // integer a, but not for a = π even though sin a = 0
        for a in [-4.0, -2.0, 0.0, 2.0, 6.0] {
            assert_eq!(
                lemma3_partial_sum(re(a), FRAC_PI_2, 500).unwrap(),
                0.0,
                "a = {a}"
            );
        }
        let first = lemma3_partial_sum(re(PI), FRAC_PI_2, 1).unwrap();
        assert!((first - 0.9753679720836314).abs() < 1e-12, "{first}");
    }

    #[test]
    fn lemma3_divergence_increments() {
        for (a, th) in [(0.0, 1.0), (0.7, 2.0), (1.0, FRAC_PI_4)] {
            for j in 8..=14 {
                let n = 1u64 << j;
                let d = lemma3_partial_sum(re(a), th, 2 * n).unwrap()
                    - lemma3_partial_sum(re(a), th, n).unwrap();
                assert!(d >= 0.05, "a={a} θ={th} n={n}: {d}");
            }
        }
    }

    #[test]
    fn lemma3_trace_is_monotone() {
        let tr = lemma3_trace(Complex64::new(0.3, 0.4), 1.3, 200).unwrap();
        assert_eq!(tr.len(), 200);
        assert!(tr.windows(2).all(|w| w[1].running_sum >= w[0].running_sum));
        let direct = lemma3_partial_sum(Complex64::new(0.3, 0.4), 1.3, 200).unwrap();
        assert_eq!(tr[199].running_sum, direct);
        let direct5 = (Complex64::new(10.3, 0.4) * 1.3).sin().norm() / 5.0;
        assert!((tr[4].value - direct5).abs() < 1e-14);
    }

    #[test]
    fn dirichlet_examples() {
        assert!(dirichlet_cosine_sum(0.0, FRAC_PI_4, 4).unwrap().abs() < 1e-15);
        assert_eq!(dirichlet_cosine_sum(0.9, 1.0, 0).unwrap(), 0.0);
        assert_eq!(
            dirichlet_cosine_sum(0.3, FRAC_PI_2, 5).unwrap_err(),
            Error::HalfPi
        );
        let s = dirichlet_cosine_sum(0.3, 1.0, 100_000).unwrap();
        assert!((dirichlet_bound(1.0) - 2.0997).abs() < 1e-4);
        assert!(s.abs() <= dirichlet_bound(1.0), "{s}");
    }

    #[test]
    fn lemma4_examples() {
        assert_eq!(lemma4_tail_stat(re(0.0), re(PI), 0, 100), 0.0);
        assert_eq!(lemma4_tail_stat(re(0.0), re(PI), 123_456, 10), 0.0);
        assert_eq!(lemma4_tail_stat(re(0.0), re(FRAC_PI_2), 5, 1), 1.0);
        assert!(lemma4_tail_stat(re(0.3), re(1.0), 10_000, 10) >= 0.2);
        assert_eq!(lemma4_trace(re(0.1), re(0.2), 7, 3).len(), 4);
    }

    proptest! {
        #[test]
        fn complex_sine_dominates_real_part(x in -20.0f64..20.0, y in -3.0f64..3.0) {
            let z = Complex64::new(x, y);
            prop_assert!(z.sin().norm() >= x.sin().abs() - 1e-15);
        }

        #[test]
        fn sine_dominates_its_square(t in -50.0f64..50.0) {
            prop_assert!(t.sin().abs() >= t.sin().powi(2));
        }

        #[test]
        fn complex_lemma3_dominates_real(a in -3.0f64..3.0, y in -1.0f64..1.0, th in 0.05f64..3.1, n in 1u64..300) {
            let c = lemma3_partial_sum(Complex64::new(a, y), th, n).unwrap();
            let r = lemma3_partial_sum(re(a), th, n).unwrap();
            prop_assert!(c >= r - 1e-12 * r.max(1.0));
        }

        #[test]
        fn dirichlet_sum_is_bounded(a in -10.0f64..10.0, th in 0.01f64..3.13, n in 0u64..3000) {
            prop_assume!((th - FRAC_PI_2).abs() > 1e-6);
            let s = dirichlet_cosine_sum(a, th, n).unwrap();
            prop_assert!(s.abs() <= dirichlet_bound(th));
        }

        #[test]
        fn lemma4_tail_bounded_below(a in -10.0f64..10.0, b in -10.0f64..10.0, start in 0u64..1_000_000) {
            prop_assume!(b.sin().abs() >= 0.1);
            prop_assert!(lemma4_tail_stat(re(a), re(b), start, 10) >= 0.1);
        }
    }
}
