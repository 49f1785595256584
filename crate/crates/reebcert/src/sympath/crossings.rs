//! Crossing detection: zeros of det(Phi(t) - I) and their crossing forms.

use nalgebra::DMatrix;

use super::linalg::{det_minus_identity, inf_norm, standard_j};
use super::path::SymplecticPath;
use crate::error::{Error, Result};

/// Where a crossing sits on the path; endpoint crossings contribute half
/// their signature to the index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossingPosition {
    Start,
    Interior,
    End,
}

/// An isolated zero of det(Phi(t) - I) with its crossing form data.
#[derive(Debug, Clone)]
pub struct Crossing {
    pub t: f64,
    pub position: CrossingPosition,
    pub kernel_dim: usize,
    /// Crossing form: restriction of S(t) = -J0 Phi' Phi^{-1} to ker(Phi - I).
    pub form: DMatrix<f64>,
    /// Signature of the form, counting only eigenvalues above the zero
    /// threshold.
    pub signature: i64,
    /// True when the form is nondegenerate on the kernel.
    pub regular: bool,
}

/// Detection threshold for |det(Phi - I)|.
fn det_threshold(phi: &DMatrix<f64>) -> f64 {
    let dim = phi.nrows() as i32;
    1e-9 * (1.0 + inf_norm(phi).powi(dim))
}

/// Locate all isolated crossings of the path, refined to time accuracy
/// `time_tol`. Fails with `ContinuumCrossing` when the determinant vanishes
/// along an interval (totally degenerate families such as shears).
pub fn find_crossings(path: &SymplecticPath, time_tol: f64) -> Result<Vec<Crossing>> {
    if !(time_tol > 0.0) {
        return Err(Error::InvalidInput {
            detail: "crossing tolerance must be positive".into(),
        });
    }
    let times = path.times();
    let n = times.len();
    let duration = path.duration();
    let dets: Vec<f64> = path.mats().iter().map(det_minus_identity).collect();
    let thrs: Vec<f64> = path.mats().iter().map(det_threshold).collect();
    let below: Vec<bool> = dets
        .iter()
        .zip(&thrs)
        .map(|(d, t)| d.abs() < *t)
        .collect();

    // Totally degenerate detection: a long run of below-threshold samples.
    let below_count = below.iter().filter(|b| **b).count();
    let mut run_start = None;
    for i in 0..=n {
        let is_below = i < n && below[i];
        match (run_start, is_below) {
            (None, true) => run_start = Some(i),
            (Some(s), false) => {
                let width = times[i - 1] - times[s];
                if i - s >= 8 && width >= 0.02 * duration {
                    return Err(Error::ContinuumCrossing {
                        lo: times[s],
                        hi: times[i - 1],
                    });
                }
                run_start = None;
            }
            _ => {}
        }
    }
    if below_count * 2 > n {
        return Err(Error::ContinuumCrossing {
            lo: times[0],
            hi: times[n - 1],
        });
    }

    let mut candidate_times: Vec<f64> = Vec::new();

    // Endpoints are always reported when the determinant is below threshold.
    if below[0] {
        candidate_times.push(times[0]);
    }

    // Interior sign changes: bisect the determinant itself.
    for i in 0..n - 1 {
        if dets[i] != 0.0 && dets[i + 1] != 0.0 && dets[i].signum() != dets[i + 1].signum() {
            let t = bisect_sign_change(path, times[i], times[i + 1], time_tol);
            candidate_times.push(t);
        }
    }

    // Touch zeros (even-dimensional kernels): the determinant dips to zero
    // without changing sign. Refine local minima of |det| by bisecting the
    // sign change of the numerical derivative.
    let fd_h = (duration * 1e-7).max(time_tol);
    for i in 1..n - 1 {
        let is_local_min = dets[i].abs() <= dets[i - 1].abs() && dets[i].abs() <= dets[i + 1].abs();
        if !is_local_min {
            continue;
        }
        // Loose pre-filter: only refine dips that could plausibly reach zero.
        if dets[i].abs() > 1e6 * thrs[i] {
            continue;
        }
        if dets[i - 1].signum() != dets[i + 1].signum() {
            continue; // already handled as a sign change
        }
        if let Some(t) = bisect_derivative_zero(path, times[i - 1], times[i + 1], time_tol, fd_h) {
            let phi = path.matrix_at(t);
            if det_minus_identity(&phi).abs() < det_threshold(&phi) {
                candidate_times.push(t);
            }
        }
    }

    if below[n - 1] {
        candidate_times.push(times[n - 1]);
    }

    candidate_times.sort_by(|a, b| a.partial_cmp(b).unwrap());
    // Merge candidates that bisection resolved to the same crossing. The
    // merge radius is tied to the grid, not to time_tol, because a dip and a
    // sign change in the same grid cell are one crossing seen twice.
    let merge_radius = duration / (n as f64 - 1.0) * 0.5;
    let mut merged: Vec<f64> = Vec::new();
    for t in candidate_times {
        match merged.last() {
            Some(last) if (t - last).abs() <= merge_radius => {
                // keep endpoints pinned exactly
                if t == times[0] || t == times[n - 1] {
                    *merged.last_mut().unwrap() = t;
                }
            }
            _ => merged.push(t),
        }
    }

    merged
        .into_iter()
        .map(|t| build_crossing(path, t))
        .collect()
}

fn bisect_sign_change(path: &SymplecticPath, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let mut f_lo = det_minus_identity(&path.matrix_at(lo));
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let f_mid = det_minus_identity(&path.matrix_at(mid));
        if f_mid == 0.0 {
            return mid;
        }
        if f_lo.signum() == f_mid.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Bisect the zero of d/dt det(Phi(t) - I), estimated by central differences.
fn bisect_derivative_zero(
    path: &SymplecticPath,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
    fd_h: f64,
) -> Option<f64> {
    let deriv = |t: f64| {
        let a = det_minus_identity(&path.matrix_at(t - fd_h));
        let b = det_minus_identity(&path.matrix_at(t + fd_h));
        (b - a) / (2.0 * fd_h)
    };
    let mut d_lo = deriv(lo);
    let d_hi = deriv(hi);
    if d_lo == 0.0 {
        return Some(lo);
    }
    if d_hi == 0.0 {
        return Some(hi);
    }
    if d_lo.signum() == d_hi.signum() {
        return None;
    }
    for _ in 0..200 {
        if hi - lo <= tol.max(fd_h * 1e-3) {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let d_mid = deriv(mid);
        if d_mid == 0.0 {
            return Some(mid);
        }
        if d_lo.signum() == d_mid.signum() {
            lo = mid;
            d_lo = d_mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

/// Kernel basis, crossing form and signature at a crossing time.
fn build_crossing(path: &SymplecticPath, t: f64) -> Result<Crossing> {
    let position = if t <= path.start_time() {
        CrossingPosition::Start
    } else if t >= path.end_time() {
        CrossingPosition::End
    } else {
        CrossingPosition::Interior
    };
    let phi = path.matrix_at(t);
    let dim = phi.nrows();
    let m = &phi - DMatrix::<f64>::identity(dim, dim);

    let svd = m.clone().svd(true, true);
    let v_t = svd.v_t.as_ref().expect("svd with vectors");
    // Absolute kernel cut relative to the path scale; at an exactly-identity
    // crossing every singular value is ~0 and a purely relative cut would
    // find no kernel at all.
    let cut = 1e-8 * (1.0 + inf_norm(&phi));
    let mut kernel_cols: Vec<usize> = (0..svd.singular_values.len())
        .filter(|&i| svd.singular_values[i] <= cut)
        .collect();
    kernel_cols.sort_unstable();
    let kernel_dim = kernel_cols.len();
    if kernel_dim == 0 {
        return Err(Error::IllConditionedKernel { t });
    }
    let mut kernel = DMatrix::zeros(dim, kernel_dim);
    for (j, &i) in kernel_cols.iter().enumerate() {
        for r in 0..dim {
            kernel[(r, j)] = v_t[(i, r)];
        }
    }

    let s = match path.generator_at(t) {
        Some(s) => s,
        None => {
            // finite-difference S = -J0 Phi' Phi^{-1}, symmetrized
            let h = (path.duration() * 1e-6).max(1e-12);
            let a = path.matrix_at(t - h);
            let b = path.matrix_at(t + h);
            let dphi = (b - a) / (2.0 * h);
            let j = standard_j(dim);
            let inv = phi.clone().try_inverse().ok_or(Error::IllConditionedKernel { t })?;
            let s = -(&j) * dphi * inv;
            (&s + s.transpose()) * 0.5
        }
    };

    let mut form = kernel.transpose() * s * &kernel;
    form = (&form + form.transpose()) * 0.5;
    let eigen = form.clone().symmetric_eigen();
    let zero_thr = 1e-8 * f64::max(1.0, form.amax());
    let mut signature = 0i64;
    let mut regular = true;
    for &lambda in eigen.eigenvalues.iter() {
        if lambda > zero_thr {
            signature += 1;
        } else if lambda < -zero_thr {
            signature -= 1;
        } else {
            regular = false;
        }
    }

    Ok(Crossing {
        t,
        position,
        kernel_dim,
        form,
        signature,
        regular,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sympath::generator::SymmetricGenerator;
    use crate::sympath::path::integrate_path;
    use std::f64::consts::PI;

    #[test]
    fn rotation_3pi_has_start_and_interior_crossing() {
        let gen = SymmetricGenerator::rotation(3.0 * PI, 1.0).unwrap();
        let path = integrate_path(&gen, 2000).unwrap();
        let crossings = find_crossings(&path, 1e-12).unwrap();
        assert_eq!(crossings.len(), 2, "{crossings:?}");
        assert_eq!(crossings[0].position, CrossingPosition::Start);
        assert_eq!(crossings[0].kernel_dim, 2);
        assert_eq!(crossings[0].signature, 2);
        assert!(crossings[0].regular);
        assert_eq!(crossings[1].position, CrossingPosition::Interior);
        // interior crossing where the angle reaches 2*pi: t = 2/3
        assert!((crossings[1].t - 2.0 / 3.0).abs() < 1e-9);
        assert_eq!(crossings[1].signature, 2);
    }

    #[test]
    fn quarter_rotation_crosses_only_at_start() {
        let gen = SymmetricGenerator::rotation(PI / 2.0, 1.0).unwrap();
        let path = integrate_path(&gen, 500).unwrap();
        let crossings = find_crossings(&path, 1e-12).unwrap();
        assert_eq!(crossings.len(), 1);
        assert_eq!(crossings[0].position, CrossingPosition::Start);
        assert_eq!(crossings[0].signature, 2);
    }

    #[test]
    fn identity_path_is_a_continuum() {
        let gen = SymmetricGenerator::constant(DMatrix::zeros(2, 2), 1.0).unwrap();
        let path = integrate_path(&gen, 100).unwrap();
        let err = find_crossings(&path, 1e-12).unwrap_err();
        assert!(matches!(err, Error::ContinuumCrossing { .. }));
    }

    #[test]
    fn shear_path_is_a_continuum() {
        let gen = SymmetricGenerator::shear(1.5, 1.0).unwrap();
        let path = integrate_path(&gen, 100).unwrap();
        let err = find_crossings(&path, 1e-12).unwrap_err();
        assert!(matches!(err, Error::ContinuumCrossing { .. }));
    }

    #[test]
    fn end_crossing_reported_for_full_rotation() {
        let gen = SymmetricGenerator::rotation(2.0 * PI, 1.0).unwrap();
        let path = integrate_path(&gen, 2000).unwrap();
        let crossings = find_crossings(&path, 1e-12).unwrap();
        assert_eq!(crossings.len(), 2);
        assert_eq!(crossings[0].position, CrossingPosition::Start);
        assert_eq!(crossings[1].position, CrossingPosition::End);
    }
}
