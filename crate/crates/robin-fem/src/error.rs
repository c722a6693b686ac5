use star_geometry::GeometryError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FemError {
    #[error("invalid mesh parameters: {0}")]
    InvalidParameter(String),

    #[error("degenerate triangle {index} (signed area {area})")]
    DegenerateTriangle { index: usize, area: f64 },

    #[error("mesh invariant violated: {0}")]
    InvalidMesh(String),

    #[error("linear solver failed: {0}")]
    Solver(String),

    #[error("eigeniteration hit the cap of {cap}; best eigenvalue {best_lambda}")]
    IterationCap { cap: usize, best_lambda: f64 },

    #[error("zero vector passed to a Rayleigh quotient")]
    ZeroVector,

    #[error(transparent)]
    Geometry(#[from] GeometryError),
}
