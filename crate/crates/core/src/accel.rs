//! Wynn epsilon acceleration of complex partial-sum sequences.

use num_complex::Complex64;

/// Maximum Shanks order; the epsilon table then spans `2 * MAX_ORDER + 1`
/// partial sums.
pub const MAX_ORDER: usize = 12;

/// Estimate of a limit together with the spread of the last diagonal
/// entries, used as the error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Accelerated {
    pub value: Complex64,
    pub error: f64,
    pub terms_used: usize,
    pub converged: bool,
}

/// Shanks transform of order `min(MAX_ORDER, (len-1)/2)` applied to the
/// trailing window of `sums`.
pub fn wynn_epsilon(sums: &[Complex64]) -> Complex64 {
    let order = ((sums.len().saturating_sub(1)) / 2).min(MAX_ORDER);
    if order == 0 {
        return *sums.last().expect("at least one partial sum");
    }
    let window = &sums[sums.len() - (2 * order + 1)..];
    // prev = column k-1, cur = column k; estimates live in even columns.
    let mut prev = vec![Complex64::new(0.0, 0.0); window.len() + 1];
    let mut cur: Vec<Complex64> = window.to_vec();
    let mut best = *window.last().unwrap();
    for col in 1..=2 * order {
        let mut next = Vec::with_capacity(cur.len() - 1);
        for n in 0..cur.len() - 1 {
            let diff = cur[n + 1] - cur[n];
            if diff.norm() <= f64::MIN_POSITIVE * 1e10 {
                // Converged to rounding; the column below is exact.
                return if col % 2 == 1 { cur[n + 1] } else { best };
            }
            next.push(prev[n + 1] + diff.inv());
        }
        if col % 2 == 0 {
            best = *next.last().unwrap();
        }
        prev = cur;
        cur = next;
    }
    best
}

/// Feeds partial sums from `terms` into a sliding epsilon table and stops
/// once two successive estimates differ by less than `tol` (relative to
/// the estimate, floored at absolute `tol`).
pub fn accelerate_series<I>(terms: I, tol: f64, max_terms: usize) -> Accelerated
where
    I: IntoIterator<Item = Complex64>,
{
    let mut sums: Vec<Complex64> = Vec::new();
    let mut acc = Complex64::new(0.0, 0.0);
    let mut last: Option<Complex64> = None;
    let mut last_diff = f64::INFINITY;
    let mut streak = 0;
    let mut abs_sum = 0.0;
    let min_len = 2 * MAX_ORDER + 1;
    for (n, t) in terms.into_iter().take(max_terms).enumerate() {
        acc += t;
        abs_sum += t.norm();
        sums.push(acc);
        if sums.len() > min_len {
            sums.remove(0);
        }
        let est = wynn_epsilon(&sums);
        if let Some(prev) = last {
            let diff = (est - prev).norm();
            let scale = est.norm().max(1.0);
            if diff <= tol * scale && sums.len() >= 5 {
                streak += 1;
                if streak >= 2 {
                    let rounding = 16.0 * f64::EPSILON * abs_sum.max(est.norm());
                    return Accelerated {
                        value: est,
                        error: 4.0 * diff.max(last_diff) + rounding,
                        terms_used: n + 1,
                        converged: true,
                    };
                }
            } else {
                streak = 0;
            }
            last_diff = diff;
        }
        last = Some(est);
    }
    let value = last.unwrap_or(acc);
    Accelerated {
        value,
        error: last_diff.max(tol),
        terms_used: max_terms,
        converged: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_harmonic_to_ln2() {
        let terms = (1..).map(|k: u32| {
            let s = if k % 2 == 1 { 1.0 } else { -1.0 };
            Complex64::new(s / k as f64, 0.0)
        });
        let r = accelerate_series(terms, 1e-13, 500);
        assert!(r.converged);
        assert!(
            (r.value.re - std::f64::consts::LN_2).abs() < 1e-12,
            "{:?}",
            r
        );
        assert!(r.terms_used < 60);
    }

    #[test]
    fn oscillatory_log_series() {
        // sum_{k>=1} w^k / k = -ln(1 - w) on |w| = 1, w != 1.
        let w = Complex64::from_polar(1.0, 2.0);
        let terms = (1..).map(move |k: i32| w.powi(k) / k as f64);
        let r = accelerate_series(terms, 1e-12, 500);
        let exact = -(Complex64::new(1.0, 0.0) - w).ln();
        assert!((r.value - exact).norm() < 1e-11, "{:?} vs {exact}", r.value);
        assert!((r.value - exact).norm() <= r.error * 10.0);
    }

    #[test]
    fn finite_sequence_is_returned_unchanged() {
        let terms = [1.0, 0.5, 0.25].map(|x| Complex64::new(x, 0.0));
        let r = accelerate_series(
            terms
                .into_iter()
                .chain(std::iter::repeat(Complex64::new(0.0, 0.0))),
            1e-14,
            50,
        );
        assert!((r.value.re - 1.75).abs() < 1e-15);
    }
}
