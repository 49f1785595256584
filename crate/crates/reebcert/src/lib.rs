//! Numerical toolkit for Reeb dynamics on contact-type boundaries: exact
//! Robbin-Salamon/Conley-Zehnder indices of symplectic paths, Reeb spectra
//! of model domains, the action-index ratio invariant, relative n-spectra
//! with certified hypothesis checks for max-inequality statements,
//! spectral-killer profiles with bifurcation-diagram tracking, and
//! Poisson-bracket lower bounds for covers.
//!
//! Spectral invariants c(H) themselves are Floer-theoretic and are always
//! caller-supplied inputs; this crate certifies the hypotheses under which
//! they are controlled and reproduces the supporting spectrum and diagram
//! computations.

pub mod capacity;
pub mod cover;
pub mod diagrams;
pub mod error;
pub mod half_int;
pub mod reeb_domains;
pub mod relspec;
pub mod sympath;

pub use error::{Error, Result};
pub use half_int::HalfInt;
