use thiserror::Error;

#[derive(Debug, Error)]
pub enum LabError {
    #[error("configuration error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Ball(#[from] ball_spectrum::BallError),

    #[error(transparent)]
    Geometry(#[from] star_geometry::GeometryError),

    #[error(transparent)]
    Fem(#[from] robin_fem::FemError),

    #[error(transparent)]
    SpecFun(#[from] specfun::SpecFunError),
}

impl LabError {
    /// Process exit code: 2 for configuration problems, 3 for numeric
    /// failures (assertion failures exit with 1 and are not errors).
    pub fn exit_code(&self) -> i32 {
        match self {
            LabError::Config(_) => 2,
            _ => 3,
        }
    }
}
