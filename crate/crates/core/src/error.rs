use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure mode of the numerical routines.
///
/// [`Error::code`] gives a stable machine-readable tag used by the CLI.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma function pole at {0}")]
    Pole(Complex64),
    #[error("running product overflowed; use the log-space variant")]
    Overflow,
    #[error("point {0} lies on a branch cut (-inf,-1] or [1,inf)")]
    BranchCut(Complex64),
    #[error("argument outside the function domain: {0}")]
    Domain(String),
    #[error("hypergeometric parameter c = {0} is a non-positive integer")]
    CPole(Complex64),
    #[error("hypergeometric argument w = {0} lies on the cut [1, inf)")]
    Branch(Complex64),
    #[error("connection formula {0} is degenerate for these parameters")]
    DegenerateConnection(&'static str),
    #[error("series diverges on the unit circle (Re(c-a-b) = {0} <= -1)")]
    DivergentRegime(f64),
    #[error("series at w = 1 requires Re(c-a-b) > 0, got {0}")]
    AtOne(f64),
    #[error("nu + mu = {0} is a negative integer")]
    ParameterPole(Complex64),
    #[error("mu + 1/2 = {0} is a non-positive integer; the coefficient asymptotic degenerates")]
    AsymptoticUndefined(Complex64),
    #[error("theta = pi/2 is excluded")]
    HalfPi,
    #[error("no convergence: {0}")]
    NoConvergence(String),
    #[error("no admissible representation covers x = {0}")]
    RepresentationDomain(Complex64),
    #[error("extrapolation unstable: {0}")]
    ExtrapolationUnstable(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Pole(_) => "pole",
            Error::Overflow => "overflow",
            Error::BranchCut(_) => "branch_cut",
            Error::Domain(_) => "domain",
            Error::CPole(_) => "c_pole",
            Error::Branch(_) => "branch",
            Error::DegenerateConnection(_) => "degenerate_connection",
            Error::DivergentRegime(_) => "divergent_regime",
            Error::AtOne(_) => "at_one",
            Error::ParameterPole(_) => "parameter_pole",
            Error::AsymptoticUndefined(_) => "asymptotic_undefined",
            Error::HalfPi => "half_pi",
            Error::NoConvergence(_) => "no_convergence",
            Error::RepresentationDomain(_) => "representation_domain",
            Error::ExtrapolationUnstable(_) => "extrapolation_unstable",
        }
    }
}
