//! Symmetric generators S(t) of linear Hamiltonian flows.
//!
//! A path of symplectic matrices solving Phi' = J0 S(t) Phi is determined by
//! its symmetric generator S(t) = -J0 Phi' Phi^{-1}. Generators are the
//! canonical input to the integrator and the source of crossing forms.

use std::fmt;
use std::sync::Arc;

use nalgebra::DMatrix;

use super::linalg::{asymmetry, standard_j};
use crate::error::{Error, Result};

const SYMMETRY_TOL: f64 = 1e-10;

/// A map t in [0, T] -> symmetric 2m x 2m matrix.
#[derive(Clone)]
pub struct SymmetricGenerator {
    dim: usize,
    duration: f64,
    eval: Arc<dyn Fn(f64) -> DMatrix<f64> + Send + Sync>,
}

impl fmt::Debug for SymmetricGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SymmetricGenerator")
            .field("dim", &self.dim)
            .field("duration", &self.duration)
            .finish()
    }
}

impl SymmetricGenerator {
    /// Wrap an analytic generator, validating symmetry on a probe grid.
    pub fn from_fn<F>(dim: usize, duration: f64, f: F) -> Result<Self>
    where
        F: Fn(f64) -> DMatrix<f64> + Send + Sync + 'static,
    {
        if dim == 0 || dim % 2 != 0 {
            return Err(Error::InvalidInput {
                detail: format!("generator dimension must be even and positive, got {dim}"),
            });
        }
        if !(duration > 0.0) || !duration.is_finite() {
            return Err(Error::InvalidInput {
                detail: format!("generator duration must be positive and finite, got {duration}"),
            });
        }
        let gen = SymmetricGenerator {
            dim,
            duration,
            eval: Arc::new(f),
        };
        gen.validate_symmetry()?;
        Ok(gen)
    }

    /// Constant generator.
    pub fn constant(matrix: DMatrix<f64>, duration: f64) -> Result<Self> {
        let dim = matrix.nrows();
        if matrix.ncols() != dim {
            return Err(Error::InvalidInput {
                detail: "generator matrix must be square".into(),
            });
        }
        Self::from_fn(dim, duration, move |_| matrix.clone())
    }

    /// Planar rotation generator: S = rate * I_2, whose path is the rotation
    /// by angle rate * t.
    pub fn rotation(rate: f64, duration: f64) -> Result<Self> {
        Self::constant(DMatrix::from_diagonal_element(2, 2, rate), duration)
    }

    /// Generator of the shear path [[1, 0], [t b, 1]].
    pub fn shear(b: f64, duration: f64) -> Result<Self> {
        let mut s = DMatrix::zeros(2, 2);
        s[(0, 0)] = b;
        Self::constant(s, duration)
    }

    /// Piecewise-linear interpolation of sampled symmetric matrices.
    pub fn from_samples(times: Vec<f64>, mats: Vec<DMatrix<f64>>) -> Result<Self> {
        if times.len() < 2 || times.len() != mats.len() {
            return Err(Error::InvalidInput {
                detail: "sampled generator needs matching times and matrices, at least 2".into(),
            });
        }
        if !times.windows(2).all(|w| w[1] > w[0]) || times[0] != 0.0 {
            return Err(Error::InvalidInput {
                detail: "sample times must start at 0 and strictly increase".into(),
            });
        }
        let dim = mats[0].nrows();
        let duration = *times.last().unwrap();
        Self::from_fn(dim, duration, move |t| {
            let t = t.clamp(times[0], *times.last().unwrap());
            let i = match times.binary_search_by(|x| x.partial_cmp(&t).unwrap()) {
                Ok(i) => i.min(times.len() - 2),
                Err(i) => i.saturating_sub(1).min(times.len() - 2),
            };
            let w = (t - times[i]) / (times[i + 1] - times[i]);
            &mats[i] * (1.0 - w) + &mats[i + 1] * w
        })
    }

    /// Block-diagonal direct sum; all parts must share the duration.
    pub fn block_diag(parts: &[SymmetricGenerator]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidInput {
                detail: "block_diag needs at least one part".into(),
            });
        }
        let duration = parts[0].duration;
        if parts.iter().any(|p| (p.duration - duration).abs() > 1e-12) {
            return Err(Error::InvalidInput {
                detail: "block_diag parts must share the same duration".into(),
            });
        }
        let dim: usize = parts.iter().map(|p| p.dim).sum();
        let parts: Vec<SymmetricGenerator> = parts.to_vec();
        Self::from_fn(dim, duration, move |t| {
            let mut s = DMatrix::zeros(dim, dim);
            let mut off = 0;
            for p in &parts {
                s.view_mut((off, off), (p.dim, p.dim)).copy_from(&p.at(t));
                off += p.dim;
            }
            s
        })
    }

    /// Time-reversed generator: the generator of t -> Phi(T - t) is -S(T - t).
    pub fn reversed(&self) -> SymmetricGenerator {
        let inner = self.eval.clone();
        let duration = self.duration;
        SymmetricGenerator {
            dim: self.dim,
            duration,
            eval: Arc::new(move |t| -inner(duration - t)),
        }
    }

    /// Generator of the conjugated path Psi Phi Psi^{-1} for a fixed
    /// symplectic Psi: S_c = J0 Psi J0 S J0 Psi^T J0.
    pub fn conjugated(&self, psi: &DMatrix<f64>) -> SymmetricGenerator {
        let j = standard_j(self.dim);
        let left = &j * psi * &j;
        let right = &j * psi.transpose() * &j;
        let inner = self.eval.clone();
        SymmetricGenerator {
            dim: self.dim,
            duration: self.duration,
            eval: Arc::new(move |t| {
                let s = &left * inner(t) * &right;
                // congruence keeps symmetry exactly; symmetrize rounding noise
                (&s + s.transpose()) * 0.5
            }),
        }
    }

    /// Add eps * w(t) * I on a smooth bump supported in `window`.
    pub fn perturbed(&self, eps: f64, window: (f64, f64)) -> SymmetricGenerator {
        let inner = self.eval.clone();
        let dim = self.dim;
        let (lo, hi) = window;
        let edge = 0.2 * (hi - lo);
        SymmetricGenerator {
            dim,
            duration: self.duration,
            eval: Arc::new(move |t| {
                let mut s = inner(t);
                let w = bump(t, lo, hi, edge);
                if w > 0.0 {
                    for i in 0..dim {
                        s[(i, i)] += eps * w;
                    }
                }
                s
            }),
        }
    }

    /// Restriction to [t0, t1] (re-parametrized to start at 0).
    pub fn restricted(&self, t0: f64, t1: f64) -> Result<SymmetricGenerator> {
        if !(t0 >= 0.0 && t1 <= self.duration + 1e-12 && t1 > t0) {
            return Err(Error::InvalidInput {
                detail: format!("bad restriction window [{t0}, {t1}]"),
            });
        }
        let inner = self.eval.clone();
        Ok(SymmetricGenerator {
            dim: self.dim,
            duration: t1 - t0,
            eval: Arc::new(move |t| inner(t0 + t)),
        })
    }

    pub fn at(&self, t: f64) -> DMatrix<f64> {
        (self.eval)(t)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn duration(&self) -> f64 {
        self.duration
    }

    fn validate_symmetry(&self) -> Result<()> {
        let probes = 17;
        for k in 0..=probes {
            let t = self.duration * k as f64 / probes as f64;
            let s = self.at(t);
            if s.nrows() != self.dim || s.ncols() != self.dim {
                return Err(Error::InvalidInput {
                    detail: format!("generator returned a {}x{} matrix", s.nrows(), s.ncols()),
                });
            }
            let a = asymmetry(&s);
            if a > SYMMETRY_TOL * (1.0 + s.amax()) {
                return Err(Error::NonSymmetricGenerator { t, asymmetry: a });
            }
        }
        Ok(())
    }
}

/// C^1 bump: 0 outside [lo, hi], 1 on the inner plateau, smoothstep edges.
fn bump(t: f64, lo: f64, hi: f64, edge: f64) -> f64 {
    if t <= lo || t >= hi {
        return 0.0;
    }
    let rise = ((t - lo) / edge).min(1.0);
    let fall = ((hi - t) / edge).min(1.0);
    let s = rise.min(fall);
    s * s * (3.0 - 2.0 * s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_asymmetric_generator() {
        let mut m = DMatrix::zeros(2, 2);
        m[(0, 1)] = 1.0;
        let err = SymmetricGenerator::constant(m, 1.0).unwrap_err();
        assert!(matches!(err, Error::NonSymmetricGenerator { .. }));
    }

    #[test]
    fn block_diag_stacks_blocks() {
        let a = SymmetricGenerator::rotation(1.0, 2.0).unwrap();
        let b = SymmetricGenerator::rotation(-3.0, 2.0).unwrap();
        let s = SymmetricGenerator::block_diag(&[a, b]).unwrap().at(0.5);
        assert_eq!(s.nrows(), 4);
        assert_eq!(s[(0, 0)], 1.0);
        assert_eq!(s[(3, 3)], -3.0);
        assert_eq!(s[(0, 2)], 0.0);
    }

    #[test]
    fn reversed_negates_and_flips() {
        let g = SymmetricGenerator::from_fn(2, 1.0, |t| DMatrix::from_diagonal_element(2, 2, t))
            .unwrap();
        let r = g.reversed();
        assert!((r.at(0.25)[(0, 0)] - (-0.75)).abs() < 1e-15);
    }

    #[test]
    fn bump_is_zero_outside_window() {
        assert_eq!(bump(0.0, 0.2, 0.8, 0.1), 0.0);
        assert_eq!(bump(1.0, 0.2, 0.8, 0.1), 0.0);
        assert_eq!(bump(0.5, 0.2, 0.8, 0.1), 1.0);
        assert!(bump(0.25, 0.2, 0.8, 0.1) > 0.0);
    }
}
