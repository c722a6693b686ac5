//! Planar star-shaped domains described by a positive radial boundary
//! function about an interior point, with the measures and shape functionals
//! needed to compare a domain against the ball of the same volume: area,
//! perimeter, symmetric differences with discs, Fraenkel asymmetry by
//! derivative-free minimization over ball centers, and isoperimetric
//! diagnostics.
//!
//! Domains are immutable after construction; everything here may be evaluated
//! concurrently.

mod asymmetry;
mod domain;
mod error;
mod isoperimetric;
mod symdiff;

pub use asymmetry::{fraenkel_asymmetry, fraenkel_asymmetry_with, AsymmetryOptions, AsymmetryResult};
pub use domain::{Point, StarDomain};
pub use error::GeometryError;
pub use isoperimetric::{isoperimetric_checks, IsoperimetricReport};
pub use symdiff::symdiff_volume;

pub type Result<T> = std::result::Result<T, GeometryError>;
