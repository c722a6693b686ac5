//! First Robin eigenvalue on balls in dimension 2 and 3, computed to
//! root-finding accuracy from the implicit equation
//! `G(r, lambda) = sqrt(lambda) J_{N/2}(sqrt(lambda) r) - beta J_{N/2-1}(sqrt(lambda) r) = 0`,
//! together with the derived quantities used by the verification lab:
//! the map `g(r) = r * lambda(B_r)` and its closed-form derivative, convexity
//! scans, the radial logarithmic-derivative profile, the level-set functional
//! `H_B`, and the penalty constant that makes a prescribed ball the global
//! minimizer of `lambda + k |B_r|`.
//!
//! All operations are pure; grids of queries may be evaluated concurrently.

mod convexity;
mod eigen;
mod error;
mod gfun;
mod penalty;
mod profile;
mod tabulate;

pub use convexity::{convexity_scan, second_difference_quotients, ConvexityScan};
pub use eigen::{ball_volume, dirichlet_threshold, robin_eigenvalue_ball, sphere_area, BallQuery, BallSolution};
pub use error::BallError;
pub use gfun::{g_prime_ode, g_value, lambda_prime};
pub use penalty::penalized_k_for_volume;
pub use profile::{hb_functional, radial_profile, RadialProfile};
pub use tabulate::{tabulate, BallTableRow};

pub type Result<T> = std::result::Result<T, BallError>;
