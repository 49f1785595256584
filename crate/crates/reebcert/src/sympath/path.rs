//! Discretized paths of symplectic matrices and the structure-preserving
//! integrator that produces them.

use nalgebra::DMatrix;

use super::generator::SymmetricGenerator;
use super::linalg::{project_symplectic, standard_j, symplectic_residual};
use crate::error::{Error, Result};

const SYMPLECTIC_TOL: f64 = 1e-8;

/// A path {Phi(t_i)} in Sp(2m) on a strictly increasing time grid.
#[derive(Debug, Clone)]
pub struct SymplecticPath {
    dim: usize,
    times: Vec<f64>,
    mats: Vec<DMatrix<f64>>,
    generator: Option<SymmetricGenerator>,
}

/// Classical 4th-order one-step integration of Phi' = J0 S(t) Phi with
/// Phi(0) = I, re-projecting onto the symplectic group after every step.
pub fn integrate_path(gen: &SymmetricGenerator, steps: usize) -> Result<SymplecticPath> {
    if steps == 0 {
        return Err(Error::InvalidInput {
            detail: "integration needs at least one step".into(),
        });
    }
    let dim = gen.dim();
    let j = standard_j(dim);
    let duration = gen.duration();
    let h = duration / steps as f64;

    let mut times = Vec::with_capacity(steps + 1);
    let mut mats = Vec::with_capacity(steps + 1);
    let mut phi = DMatrix::<f64>::identity(dim, dim);
    times.push(0.0);
    mats.push(phi.clone());

    for k in 0..steps {
        let t = k as f64 * h;
        phi = rk4_step(&phi, t, h, gen, &j);
        let residual = project_symplectic(&mut phi, &j);
        if residual > SYMPLECTIC_TOL {
            return Err(Error::SymplecticDriftExceeded { t: t + h, residual });
        }
        times.push(if k + 1 == steps { duration } else { t + h });
        mats.push(phi.clone());
    }

    Ok(SymplecticPath {
        dim,
        times,
        mats,
        generator: Some(gen.clone()),
    })
}

fn rk4_step(
    phi: &DMatrix<f64>,
    t: f64,
    h: f64,
    gen: &SymmetricGenerator,
    j: &DMatrix<f64>,
) -> DMatrix<f64> {
    let f = |t: f64, m: &DMatrix<f64>| j * gen.at(t) * m;
    let k1 = f(t, phi);
    let k2 = f(t + 0.5 * h, &(phi + 0.5 * h * &k1));
    let k3 = f(t + 0.5 * h, &(phi + 0.5 * h * &k2));
    let k4 = f(t + h, &(phi + h * &k3));
    phi + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
}

impl SymplecticPath {
    /// Build a path from explicit samples, validating symplecticity.
    pub fn from_samples(
        times: Vec<f64>,
        mats: Vec<DMatrix<f64>>,
        generator: Option<SymmetricGenerator>,
    ) -> Result<Self> {
        if times.len() != mats.len() || times.len() < 2 {
            return Err(Error::InvalidInput {
                detail: "path needs matching times and matrices, at least 2 samples".into(),
            });
        }
        if !times.windows(2).all(|w| w[1] > w[0]) {
            return Err(Error::InvalidInput {
                detail: "path times must be strictly increasing".into(),
            });
        }
        let dim = mats[0].nrows();
        let j = standard_j(dim);
        for (t, m) in times.iter().zip(&mats) {
            let residual = symplectic_residual(m, &j);
            if residual > SYMPLECTIC_TOL {
                return Err(Error::SymplecticDriftExceeded { t: *t, residual });
            }
        }
        Ok(SymplecticPath {
            dim,
            times,
            mats,
            generator,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn mats(&self) -> &[DMatrix<f64>] {
        &self.mats
    }

    pub fn generator(&self) -> Option<&SymmetricGenerator> {
        self.generator.as_ref()
    }

    pub fn duration(&self) -> f64 {
        *self.times.last().unwrap() - self.times[0]
    }

    pub fn start_time(&self) -> f64 {
        self.times[0]
    }

    pub fn end_time(&self) -> f64 {
        *self.times.last().unwrap()
    }

    pub fn start_matrix(&self) -> &DMatrix<f64> {
        &self.mats[0]
    }

    pub fn end_matrix(&self) -> &DMatrix<f64> {
        self.mats.last().unwrap()
    }

    pub fn steps(&self) -> usize {
        self.times.len() - 1
    }

    /// Grid index of the last sample with time <= t.
    pub(super) fn interval_index(&self, t: f64) -> usize {
        match self
            .times
            .binary_search_by(|x| x.partial_cmp(&t).unwrap())
        {
            Ok(i) => i.min(self.times.len() - 2),
            Err(i) => i.saturating_sub(1).min(self.times.len() - 2),
        }
    }

    /// Evaluate Phi at an off-grid time.
    ///
    /// With a generator, re-integrates from the nearest grid node with small
    /// RK4 substeps; otherwise interpolates linearly, re-projected onto the
    /// group. Generator times are the path's own clock (they may be shifted
    /// relative to the generator's [0, T]; `gen_offset` accounts for that).
    pub fn matrix_at(&self, t: f64) -> DMatrix<f64> {
        let t = t.clamp(self.start_time(), self.end_time());
        let i = self.interval_index(t);
        if t == self.times[i] {
            return self.mats[i].clone();
        }
        if t == self.times[i + 1] {
            return self.mats[i + 1].clone();
        }
        let j = standard_j(self.dim);
        match &self.generator {
            Some(gen) => {
                let offset = self.start_time();
                let spacing = self.times[i + 1] - self.times[i];
                let dt = t - self.times[i];
                let substeps = ((dt / spacing * 8.0).ceil() as usize).max(1);
                let h = dt / substeps as f64;
                let mut phi = self.mats[i].clone();
                for k in 0..substeps {
                    let tk = self.times[i] + k as f64 * h - offset;
                    phi = rk4_step(&phi, tk, h, gen, &j);
                    project_symplectic(&mut phi, &j);
                }
                phi
            }
            None => {
                let w = (t - self.times[i]) / (self.times[i + 1] - self.times[i]);
                let mut phi = &self.mats[i] * (1.0 - w) + &self.mats[i + 1] * w;
                project_symplectic(&mut phi, &j);
                phi
            }
        }
    }

    /// Generator value at a path time, shifted to the generator clock.
    pub(super) fn generator_at(&self, t: f64) -> Option<DMatrix<f64>> {
        self.generator
            .as_ref()
            .map(|g| g.at(t - self.start_time()))
    }

    /// The inverse path t -> Phi(T - t).
    pub fn reversed(&self) -> SymplecticPath {
        let t0 = self.start_time();
        let t1 = self.end_time();
        let times = self.times.iter().rev().map(|t| t0 + (t1 - t)).collect();
        let mats = self.mats.iter().rev().cloned().collect();
        SymplecticPath {
            dim: self.dim,
            times,
            mats,
            generator: self.generator.as_ref().map(|g| g.reversed()),
        }
    }

    /// Concatenation; `other` must start where `self` ends.
    pub fn concatenate(&self, other: &SymplecticPath) -> Result<SymplecticPath> {
        if self.dim != other.dim {
            return Err(Error::InvalidInput {
                detail: "concatenation needs equal dimensions".into(),
            });
        }
        let gap = (self.end_matrix() - other.start_matrix()).amax();
        if gap > 1e-7 {
            return Err(Error::InvalidInput {
                detail: format!("concatenation endpoints differ by {gap:.3e}"),
            });
        }
        let shift = self.end_time() - other.start_time();
        let mut times = self.times.clone();
        let mut mats = self.mats.clone();
        for (t, m) in other.times.iter().zip(&other.mats).skip(1) {
            times.push(t + shift);
            mats.push(m.clone());
        }
        // A composite generator would need the matching left-translation of
        // the second factor; crossing forms are only needed per-piece, so the
        // concatenated path drops the generator and works from samples.
        Ok(SymplecticPath {
            dim: self.dim,
            times,
            mats,
            generator: None,
        })
    }

    /// Blockwise direct sum of two paths on identical grids.
    pub fn direct_sum(&self, other: &SymplecticPath) -> Result<SymplecticPath> {
        if self.times.len() != other.times.len()
            || self
                .times
                .iter()
                .zip(&other.times)
                .any(|(a, b)| (a - b).abs() > 1e-12)
        {
            return Err(Error::InvalidInput {
                detail: "direct sum needs identical time grids".into(),
            });
        }
        let dim = self.dim + other.dim;
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| {
                let mut m = DMatrix::zeros(dim, dim);
                m.view_mut((0, 0), (self.dim, self.dim)).copy_from(a);
                m.view_mut((self.dim, self.dim), (other.dim, other.dim))
                    .copy_from(b);
                m
            })
            .collect();
        let generator = match (&self.generator, &other.generator) {
            (Some(a), Some(b)) => {
                Some(SymmetricGenerator::block_diag(&[a.clone(), b.clone()])?)
            }
            _ => None,
        };
        Ok(SymplecticPath {
            dim,
            times: self.times.clone(),
            mats,
            generator,
        })
    }

    /// Restriction to the sub-grid [i0, i1], keeping the generator.
    pub fn restrict(&self, i0: usize, i1: usize) -> Result<SymplecticPath> {
        if i0 >= i1 || i1 >= self.times.len() {
            return Err(Error::InvalidInput {
                detail: format!("bad restriction indices [{i0}, {i1}]"),
            });
        }
        let generator = match &self.generator {
            Some(g) => {
                let off = self.start_time();
                Some(g.restricted(self.times[i0] - off, self.times[i1] - off)?)
            }
            None => None,
        };
        Ok(SymplecticPath {
            dim: self.dim,
            // re-based so the restricted generator clock starts at 0
            times: self.times[i0..=i1]
                .iter()
                .map(|t| t - self.times[i0])
                .collect(),
            mats: self.mats[i0..=i1].to_vec(),
            generator,
        })
    }

    /// Right translation t -> Phi(t) M; the generator is unchanged because
    /// Phi' Phi^{-1} is invariant under right multiplication.
    pub fn right_translated(&self, m: &DMatrix<f64>) -> Result<SymplecticPath> {
        let j = standard_j(self.dim);
        if symplectic_residual(m, &j) > 1e-8 {
            return Err(Error::InvalidInput {
                detail: "right translation needs a symplectic matrix".into(),
            });
        }
        Ok(SymplecticPath {
            dim: self.dim,
            times: self.times.clone(),
            mats: self.mats.iter().map(|p| p * m).collect(),
            generator: self.generator.clone(),
        })
    }

    /// Conjugated path Psi Phi Psi^{-1} for a fixed symplectic Psi.
    pub fn conjugated(&self, psi: &DMatrix<f64>) -> Result<SymplecticPath> {
        let j = standard_j(self.dim);
        if symplectic_residual(psi, &j) > 1e-8 {
            return Err(Error::InvalidInput {
                detail: "conjugator is not symplectic".into(),
            });
        }
        // Psi^{-1} = -J Psi^T J for symplectic Psi.
        let psi_inv = -(&j * psi.transpose() * &j);
        let mats = self.mats.iter().map(|m| psi * m * &psi_inv).collect();
        Ok(SymplecticPath {
            dim: self.dim,
            times: self.times.clone(),
            mats,
            generator: self.generator.as_ref().map(|g| g.conjugated(psi)),
        })
    }

    /// Worst symplectic residual over all samples.
    pub fn max_symplectic_residual(&self) -> f64 {
        let j = standard_j(self.dim);
        self.mats
            .iter()
            .map(|m| symplectic_residual(m, &j))
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn rotation_matrix(theta: f64) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(2, 2);
        m[(0, 0)] = theta.cos();
        m[(0, 1)] = -theta.sin();
        m[(1, 0)] = theta.sin();
        m[(1, 1)] = theta.cos();
        m
    }

    #[test]
    fn zero_generator_gives_identity_path() {
        let gen = SymmetricGenerator::constant(DMatrix::zeros(2, 2), 3.0).unwrap();
        let path = integrate_path(&gen, 10).unwrap();
        for m in path.mats() {
            assert!((m - DMatrix::<f64>::identity(2, 2)).amax() < 1e-14);
        }
    }

    #[test]
    fn rotation_generator_integrates_to_rotation() {
        // S = 3*pi*I on [0,1] solves to R(3*pi*t) in closed form.
        let gen = SymmetricGenerator::rotation(3.0 * PI, 1.0).unwrap();
        let path = integrate_path(&gen, 2000).unwrap();
        for (t, m) in path.times().iter().zip(path.mats()) {
            let exact = rotation_matrix(3.0 * PI * t);
            assert!((m - exact).amax() < 1e-9, "t = {t}");
        }
        assert!(path.max_symplectic_residual() <= 1e-8);
    }

    #[test]
    fn block_generator_integrates_blockwise() {
        let g1 = SymmetricGenerator::rotation(2.0, 1.0).unwrap();
        let g2 = SymmetricGenerator::rotation(-1.0, 1.0).unwrap();
        let g = SymmetricGenerator::block_diag(&[g1.clone(), g2.clone()]).unwrap();
        let p = integrate_path(&g, 200).unwrap();
        let p1 = integrate_path(&g1, 200).unwrap();
        let p2 = integrate_path(&g2, 200).unwrap();
        let sum = p1.direct_sum(&p2).unwrap();
        for (a, b) in p.mats().iter().zip(sum.mats()) {
            assert!((a - b).amax() < 1e-10);
        }
    }

    #[test]
    fn matrix_at_matches_closed_form_off_grid() {
        let gen = SymmetricGenerator::rotation(2.0 * PI, 1.0).unwrap();
        let path = integrate_path(&gen, 1000).unwrap();
        let t = 0.5037;
        let exact = rotation_matrix(2.0 * PI * t);
        assert!((path.matrix_at(t) - exact).amax() < 1e-9);
    }

    #[test]
    fn reversal_flips_matrices() {
        let gen = SymmetricGenerator::rotation(1.0, 1.0).unwrap();
        let path = integrate_path(&gen, 50).unwrap();
        let rev = path.reversed();
        assert!((rev.start_matrix() - path.end_matrix()).amax() < 1e-15);
        assert!((rev.matrix_at(0.3) - path.matrix_at(0.7)).amax() < 1e-9);
    }
}
