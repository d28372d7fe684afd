pub mod accel;
pub mod error;
pub mod ferrers;
pub mod fixture;
pub mod hyp2f1;
pub mod lemma;
pub mod oracle;
pub mod special;
pub mod text;

pub use error::{Error, Result};
pub use ferrers::{
    classify_convergence, classify_order, eval_theorem1, eval_theta, ferrers_p,
    fourier_partial_sum, ConvergenceClass, CutPlanePoint, DegreeOrder, Point, ThetaPoint,
};
pub use hyp2f1::{gauss_2f1, HypParams, Method, ValueWithError};
pub use num_complex::Complex64;
