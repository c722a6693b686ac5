//! First Robin eigenpair on star-shaped planar domains by P1 finite elements:
//! structured meshing through the star map, sparse assembly of the stiffness,
//! boundary-mass and mass forms, inverse power iteration on the generalized
//! problem, and mesh-refinement extrapolation of the eigenvalue.

mod assemble;
mod eigensolve;
mod error;
mod mesh;
mod refine;
mod sparse;

pub use assemble::{assemble, Assembly};
pub use eigensolve::{rayleigh_quotient, smallest_robin_eigenpair, EigenSolution};
pub use error::FemError;
pub use mesh::{mesh_star_domain, TriangleMesh};
pub use refine::{refine_and_extrapolate, refine_and_extrapolate_from, RefinementStudy};
pub use sparse::SparseSymMatrix;

pub type Result<T> = std::result::Result<T, FemError>;
