use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum SpecFunError {
    #[error("unsupported Bessel order {0}; supported orders are 0, 1, 1/2, 3/2")]
    UnsupportedOrder(f64),

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("invalid bracket [{lo}, {hi}]: endpoint values {f_lo} and {f_hi} must have opposite signs")]
    InvalidBracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    #[error("non-finite function value at x = {0}")]
    NonFinite(f64),

    #[error("quadrature did not converge; best estimate {best} (error bound {error})")]
    QuadratureNonConvergence { best: f64, error: f64 },
}
