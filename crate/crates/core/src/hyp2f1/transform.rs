//! Fractional-linear argument transformations with their connection
//! coefficients.

use num_complex::Complex64;

use super::series::sum_direct;
use super::{HypParams, Method, ValueWithError};
use crate::error::{Error, Result};
use crate::special::{ln_gamma_unwrapped, nonpositive_integer, principal_power, rgamma};

/// Parameter differences closer than this to an integer are skipped by the
/// automatic selection: the two connection terms then cancel.
pub const AUTO_DEGENERACY_MARGIN: f64 = 1e-2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Transformation {
    /// `w -> w/(w-1)`
    Pfaff,
    /// `w -> 1-w`
    OneMinus,
    /// `w -> 1/w`
    Inverse,
    /// `w -> 1/(1-w)`
    InverseOneMinus,
    /// `w -> 1 - 1/w`
    OneMinusInverse,
}

impl Transformation {
    pub const ALL: [Transformation; 5] = [
        Transformation::Pfaff,
        Transformation::OneMinus,
        Transformation::Inverse,
        Transformation::InverseOneMinus,
        Transformation::OneMinusInverse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Transformation::Pfaff => "w/(w-1)",
            Transformation::OneMinus => "1-w",
            Transformation::Inverse => "1/w",
            Transformation::InverseOneMinus => "1/(1-w)",
            Transformation::OneMinusInverse => "1-1/w",
        }
    }

    pub fn argument(self, w: Complex64) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        match self {
            Transformation::Pfaff => w / (w - one),
            Transformation::OneMinus => one - w,
            Transformation::Inverse => w.inv(),
            Transformation::InverseOneMinus => (one - w).inv(),
            Transformation::OneMinusInverse => one - w.inv(),
        }
    }

    /// The parameter combination whose integrality breaks the formula.
    fn critical_difference(self, p: &HypParams) -> Option<Complex64> {
        match self {
            Transformation::Pfaff => None,
            Transformation::OneMinus | Transformation::OneMinusInverse => {
                Some(p.c() - p.a() - p.b())
            }
            Transformation::Inverse | Transformation::InverseOneMinus => Some(p.a() - p.b()),
        }
    }

    /// Distance of the critical difference from the integers.
    pub fn degeneracy_distance(self, p: &HypParams) -> f64 {
        match self.critical_difference(p) {
            None => f64::INFINITY,
            Some(d) => (d.re - d.re.round()).hypot(d.im),
        }
    }

    pub fn is_degenerate(self, p: &HypParams) -> bool {
        self.degeneracy_distance(p) <= 8.0 * f64::EPSILON
    }
}

/// `Γ(n1) Γ(n2) / (Γ(d1) Γ(d2))` with vanishing denominators giving 0.
fn gamma_coefficient(num: [Complex64; 2], den: [Complex64; 2]) -> Result<Complex64> {
    if den.iter().any(|&d| rgamma(d) == Complex64::new(0.0, 0.0)) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let mut l = Complex64::new(0.0, 0.0);
    for z in num {
        l += ln_gamma_unwrapped(z)?;
    }
    for z in den {
        l -= ln_gamma_unwrapped(z)?;
    }
    Ok(l.exp())
}

struct Piece {
    factor: Complex64,
    params: (Complex64, Complex64, Complex64),
}

fn assemble(pieces: &[Piece], z: Complex64) -> Result<ValueWithError> {
    let mut value = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut magnitude = 0.0;
    let mut terms = 0;
    for piece in pieces {
        if piece.factor == Complex64::new(0.0, 0.0) {
            continue;
        }
        let (a, b, c) = piece.params;
        if nonpositive_integer(c, 8.0 * f64::EPSILON).is_some() {
            return Err(Error::CPole(c));
        }
        let q = HypParams { a, b, c };
        let f = sum_direct(&q, z)?;
        let t = piece.factor * f.value;
        value += t;
        magnitude += t.norm();
        err += piece.factor.norm() * f.error_estimate;
        terms += f.terms_used;
    }
    Ok(ValueWithError {
        value,
        error_estimate: err + 16.0 * f64::EPSILON * magnitude,
        method: Method::Transformed,
        terms_used: terms.max(1),
        perturbed: false,
    })
}

/// Evaluate `2F1(a,b;c;w)` through the connection formula of `t`. The
/// transformed argument must lie inside the unit disc.
pub fn eval_transformed(p: &HypParams, w: Complex64, t: Transformation) -> Result<ValueWithError> {
    if t.is_degenerate(p) {
        return Err(Error::DegenerateConnection(t.name()));
    }
    let (a, b, c) = (p.a(), p.b(), p.c());
    let one = Complex64::new(1.0, 0.0);
    let z = t.argument(w);
    let pieces = match t {
        Transformation::Pfaff => vec![Piece {
            factor: principal_power(one - w, -a)?,
            params: (a, c - b, c),
        }],
        Transformation::OneMinus => {
            let s = c - a - b;
            vec![
                Piece {
                    factor: gamma_coefficient([c, s], [c - a, c - b])?,
                    params: (a, b, one - s),
                },
                Piece {
                    factor: gamma_coefficient([c, -s], [a, b])? * principal_power(one - w, s)?,
                    params: (c - a, c - b, one + s),
                },
            ]
        }
        Transformation::Inverse => vec![
            Piece {
                factor: gamma_coefficient([c, b - a], [b, c - a])? * principal_power(-w, -a)?,
                params: (a, a - c + one, a - b + one),
            },
            Piece {
                factor: gamma_coefficient([c, a - b], [a, c - b])? * principal_power(-w, -b)?,
                params: (b, b - c + one, b - a + one),
            },
        ],
        Transformation::InverseOneMinus => vec![
            Piece {
                factor: gamma_coefficient([c, b - a], [b, c - a])? * principal_power(one - w, -a)?,
                params: (a, c - b, a - b + one),
            },
            Piece {
                factor: gamma_coefficient([c, a - b], [a, c - b])? * principal_power(one - w, -b)?,
                params: (b, c - a, b - a + one),
            },
        ],
        Transformation::OneMinusInverse => {
            let s = c - a - b;
            vec![
                Piece {
                    factor: gamma_coefficient([c, s], [c - a, c - b])? * principal_power(w, -a)?,
                    params: (a, a - c + one, one - s),
                },
                Piece {
                    factor: gamma_coefficient([c, -s], [a, b])?
                        * principal_power(one - w, s)?
                        * principal_power(w, a - c)?,
                    params: (c - a, one - a, one + s),
                },
            ]
        }
    };
    assemble(&pieces, z)
}

/// The non-degenerate transformation with the smallest transformed
/// argument, together with that modulus.
pub fn best_transformation(p: &HypParams, w: Complex64) -> Option<(Transformation, f64)> {
    Transformation::ALL
        .iter()
        .filter(|t| t.degeneracy_distance(p) > AUTO_DEGENERACY_MARGIN)
        .map(|&t| (t, t.argument(w).norm()))
        .filter(|(_, r)| r.is_finite())
        .min_by(|x, y| x.1.total_cmp(&y.1))
}
