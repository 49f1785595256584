//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the index engine, domain models and certificate checkers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("generator is not symmetric at t = {t}: asymmetry {asymmetry:.3e}")]
    NonSymmetricGenerator { t: f64, asymmetry: f64 },

    #[error("symplectic residual {residual:.3e} exceeds 1e-8 after projection at t = {t}")]
    SymplecticDriftExceeded { t: f64, residual: f64 },

    #[error("det(Phi(t) - I) vanishes on an interval [{lo}, {hi}]; path is totally degenerate")]
    ContinuumCrossing { lo: f64, hi: f64 },

    #[error("kernel extraction at t = {t} is ill-conditioned (det flagged but no singular value below threshold)")]
    IllConditionedKernel { t: f64 },

    #[error("crossing at t = {t} stayed degenerate after {retries} perturbation retries")]
    UnresolvableDegeneracy { t: f64, retries: u32 },

    #[error("ellipsoid is resonant: {detail}")]
    ResonantEllipsoid { detail: String },

    #[error("operation requires a {expected} toric profile")]
    WrongKind { expected: &'static str },

    #[error("inner value requires a strictly positive vector, got component {component} = {value}")]
    NonPositiveV { component: usize, value: i64 },

    #[error("toric profile is degenerate: {detail}")]
    DegenerateProfile { detail: String },

    #[error("enumerated supremum {enumerated} disagrees with closed form {closed_form}")]
    InternalMismatch { enumerated: f64, closed_form: f64 },

    #[error("claimed extremal structure violated: {detail}")]
    ClaimViolated { detail: String },

    #[error("{operation} does not accept a {kind} ambient model")]
    WrongAmbientKind {
        operation: &'static str,
        kind: &'static str,
    },

    #[error("spectrum window [{have_lo}, {have_hi}] does not cover required [{need_lo}, {need_hi}]")]
    WindowTooSmall {
        have_lo: f64,
        have_hi: f64,
        need_lo: f64,
        need_hi: f64,
    },

    #[error("internal assertion failed: {detail}")]
    AssertionFailed { detail: String },

    #[error("max inequality requires the caller to declare the supports pairwise disjoint")]
    DisjointnessNotDeclared,

    #[error("cover has no doubled adjacency matrix")]
    MissingDoubledAdjacency,

    #[error("hypothesis violated: {detail}")]
    HypothesisViolated { detail: String },

    #[error("orbit is constant (chi'(s) = 0); the radial index formula does not apply")]
    ConstantOrbit,

    #[error("portability extrapolation needs at least 2 samples, got {got}")]
    InsufficientSamples { got: usize },

    #[error("invalid input: {detail}")]
    InvalidInput { detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Coarse classification used by the CLI for exit codes.
    pub fn is_degeneracy(&self) -> bool {
        matches!(
            self,
            Error::ResonantEllipsoid { .. }
                | Error::DegenerateProfile { .. }
                | Error::ContinuumCrossing { .. }
        )
    }

    /// True for errors that signal an engine bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::InternalMismatch { .. } | Error::AssertionFailed { .. } | Error::ClaimViolated { .. }
        )
    }
}
