//! Oracle reference values as JSON lines, so ordinary test runs need no
//! extended-precision arithmetic.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Error;
use crate::ferrers::DegreeOrder;
use crate::oracle::{reference_ferrers_p, MIN_DIGITS};
use crate::text::{format_complex, parse_angle, parse_complex, ParseError};

/// The reference values shipped with the crate, regenerated by
/// `ferrers fixtures`.
pub const BUNDLED: &str = include_str!("../fixtures/oracle.jsonl");

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: {source}")]
    Json {
        line: usize,
        source: serde_json::Error,
    },
    #[error(transparent)]
    Text(#[from] ParseError),
    #[error("point spec {0:?} is neither x:<value> nor theta:<value>")]
    PointSpec(String),
    #[error(transparent)]
    Value(#[from] Error),
}

/// One reference value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FixtureRecord {
    pub nu: String,
    pub mu: String,
    pub x_or_theta: String,
    pub value_re: f64,
    pub value_im: f64,
    pub digits: u32,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PointSpec {
    X(Complex64),
    Theta(Complex64),
}

impl PointSpec {
    /// The point in the `x` plane.
    pub fn x(self) -> Complex64 {
        match self {
            PointSpec::X(x) => x,
            PointSpec::Theta(t) => t.cos(),
        }
    }
}

impl fmt::Display for PointSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointSpec::X(x) => write!(f, "x:{}", format_complex(*x)),
            PointSpec::Theta(t) => write!(f, "theta:{}", format_complex(*t)),
        }
    }
}

impl FromStr for PointSpec {
    type Err = FixtureError;

    fn from_str(s: &str) -> Result<Self, FixtureError> {
        if let Some(v) = s.strip_prefix("x:") {
            Ok(PointSpec::X(parse_complex(v)?))
        } else if let Some(v) = s.strip_prefix("theta:") {
            Ok(PointSpec::Theta(parse_angle(v)?))
        } else {
            Err(FixtureError::PointSpec(s.to_string()))
        }
    }
}

/// Parameters and point of one reference value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixtureCase {
    pub nu: Complex64,
    pub mu: Complex64,
    pub point: PointSpec,
}

impl FixtureCase {
    pub fn degree_order(&self) -> Result<DegreeOrder, Error> {
        DegreeOrder::new(self.nu, self.mu)
    }
}

impl FixtureRecord {
    pub fn case(&self) -> Result<FixtureCase, FixtureError> {
        Ok(FixtureCase {
            nu: parse_complex(&self.nu)?,
            mu: parse_complex(&self.mu)?,
            point: self.x_or_theta.parse()?,
        })
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.value_re, self.value_im)
    }
}

/// Degrees and orders of the acceptance grid.
pub const GRID_NU: [(f64, f64); 5] = [
    (-0.7, 0.0),
    (0.3, 0.2),
    (1.5, 0.0),
    (2.0, 0.0),
    (-0.25, 0.5),
];
pub const GRID_MU: [f64; 6] = [-1.0, -0.5, 0.0, 0.25, 0.5, 1.0];

/// Complex points with `|x| ≤ 2` off the cuts, then real points in `(-1, 1)`.
pub const GRID_X: [(f64, f64); 12] = [
    (0.4, 0.6),
    (-0.5, 0.3),
    (1.2, 0.8),
    (-1.5, -0.5),
    (0.1, -1.8),
    (1.7, 0.4),
    (-0.3, -0.9),
    (-1.1, 1.2),
    (-0.8, 0.0),
    (-0.2, 0.0),
    (0.35, 0.0),
    (0.9, 0.0),
];

/// The acceptance grid, skipping parameter poles, followed by the worked
/// examples.
pub fn acceptance_grid() -> Vec<FixtureCase> {
    let mut cases = Vec::new();
    for &(nr, ni) in &GRID_NU {
        for &m in &GRID_MU {
            let nu = Complex64::new(nr, ni);
            let mu = Complex64::new(m, 0.0);
            if DegreeOrder::new(nu, mu).is_err() {
                continue;
            }
            for &(xr, xi) in &GRID_X {
                cases.push(FixtureCase {
                    nu,
                    mu,
                    point: PointSpec::X(Complex64::new(xr, xi)),
                });
            }
        }
    }
    cases.push(FixtureCase {
        nu: Complex64::new(0.3, 0.1),
        mu: Complex64::new(0.2, 0.0),
        point: PointSpec::X(Complex64::new(0.4, 0.6)),
    });
    cases.push(FixtureCase {
        nu: Complex64::new(1.4, 0.0),
        mu: Complex64::new(0.3, 0.0),
        point: PointSpec::X(Complex64::new(0.25, 0.5)),
    });
    cases.push(FixtureCase {
        nu: Complex64::new(0.3, 0.0),
        mu: Complex64::new(-1.0, 0.0),
        point: PointSpec::Theta(Complex64::new(2.0, 0.0)),
    });
    cases.push(FixtureCase {
        nu: Complex64::new(0.3, 0.0),
        mu: Complex64::new(0.25, 0.0),
        point: PointSpec::Theta(Complex64::new(1.0, 0.0)),
    });
    cases
}

/// Evaluate the oracle for one case.
pub fn reference_record(case: &FixtureCase, digits: u32) -> Result<FixtureRecord, FixtureError> {
    let p = case.degree_order()?;
    let v = reference_ferrers_p(&p, case.point.x(), digits.max(MIN_DIGITS))?;
    let z = v.to_complex64();
    Ok(FixtureRecord {
        nu: format_complex(case.nu),
        mu: format_complex(case.mu),
        x_or_theta: case.point.to_string(),
        value_re: z.re,
        value_im: z.im,
        digits: v.precision_digits(),
    })
}

pub fn write_record(out: &mut impl Write, rec: &FixtureRecord) -> Result<(), FixtureError> {
    let line =
        serde_json::to_string(rec).map_err(|source| FixtureError::Json { line: 0, source })?;
    writeln!(out, "{line}")?;
    Ok(())
}

/// Parse JSON lines, ignoring blank lines.
pub fn parse_fixtures(text: &str) -> Result<Vec<FixtureRecord>, FixtureError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l).map_err(|source| FixtureError::Json {
                line: i + 1,
                source,
            })
        })
        .collect()
}

/// The records in [`BUNDLED`].
pub fn bundled() -> Vec<FixtureRecord> {
    parse_fixtures(BUNDLED).expect("bundled fixture file is well formed")
}
