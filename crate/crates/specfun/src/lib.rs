//! Self-contained special functions, scalar root finding and one-dimensional
//! quadrature.
//!
//! Everything here is a pure function of its inputs; the module holds no
//! shared mutable state and is safe to call concurrently.

mod bessel;
mod error;
mod quad;
mod root;

pub use bessel::{bessel_j, bessel_jn};
pub use error::SpecFunError;
pub use quad::integrate;
pub use root::{find_root, Bracket};

pub type Result<T> = std::result::Result<T, SpecFunError>;
