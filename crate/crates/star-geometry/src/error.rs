use specfun::SpecFunError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("symmetric difference failed to converge; best estimate {best}")]
    SymdiffNonConvergence { best: f64 },

    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
}
