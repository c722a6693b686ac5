use specfun::SpecFunError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BallError {
    #[error("invalid ball query: {0}")]
    InvalidQuery(String),

    #[error("failed to bracket the eigenvalue for dim={dim}, beta={beta}, r={radius}")]
    Bracketing { dim: u32, beta: f64, radius: f64 },

    #[error("eigenvalue residual {residual} exceeds the 1e-10 budget")]
    ResidualTooLarge { residual: f64 },

    #[error("denominator g - (N-2)*beta + beta^2*r is nonpositive ({0}); eigenvalue inconsistent")]
    NonPositiveDenominator(f64),

    #[error("radial eigenfunction vanished inside the ball at rho = {0}")]
    VanishingEigenfunction(f64),

    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
}
