//! Numerical Robbin-Salamon / Conley-Zehnder index engine for paths of
//! symplectic matrices.
//!
//! The pipeline is: a symmetric generator S(t) is integrated to a path
//! Phi(t) in Sp(2m) (`integrate_path`), the zeros of det(Phi(t) - I) are
//! located with their crossing forms (`find_crossings`), and the index is
//! the half-signature sum over crossings (`rs_index`). Totally degenerate
//! families (shears of radial Hamiltonians) are routed to the closed form
//! `rs_shear` instead.

mod crossings;
mod generator;
mod index;
pub mod linalg;
mod path;

pub use crossings::{find_crossings, Crossing, CrossingPosition};
pub use generator::SymmetricGenerator;
pub use index::{default_time_tol, perturbed_index_window, rs_index, rs_shear, IndexWindow};
pub use path::{integrate_path, SymplecticPath};
