//! Small dense linear-algebra helpers shared by the index engine.

use nalgebra::DMatrix;

/// Standard symplectic matrix on R^{2m} in interleaved coordinates
/// (q1, p1, q2, p2, ...): block diagonal copies of [[0, -1], [1, 0]].
pub fn standard_j(dim: usize) -> DMatrix<f64> {
    assert!(dim % 2 == 0, "symplectic dimension must be even");
    let mut j = DMatrix::zeros(dim, dim);
    for b in 0..dim / 2 {
        j[(2 * b, 2 * b + 1)] = -1.0;
        j[(2 * b + 1, 2 * b)] = 1.0;
    }
    j
}

/// Max-abs entry of Phi^T J Phi - J.
pub fn symplectic_residual(phi: &DMatrix<f64>, j: &DMatrix<f64>) -> f64 {
    let e = phi.transpose() * j * phi - j;
    e.amax()
}

/// Newton-correct a near-symplectic matrix onto the symplectic group.
///
/// One step maps A to A(I + J E / 2) with E = A^T J A - J, which cancels the
/// defect to first order; convergence is quadratic. Returns the residual
/// after the final step.
pub fn project_symplectic(phi: &mut DMatrix<f64>, j: &DMatrix<f64>) -> f64 {
    let dim = phi.nrows();
    let identity = DMatrix::identity(dim, dim);
    let mut residual = f64::INFINITY;
    for _ in 0..6 {
        let e = phi.transpose() * j * &*phi - j;
        residual = e.amax();
        if residual <= 1e-15 {
            break;
        }
        let correction = &identity + 0.5 * j * e;
        *phi *= correction;
    }
    residual
}

/// Max-abs asymmetry of a square matrix.
pub fn asymmetry(m: &DMatrix<f64>) -> f64 {
    let d = m - m.transpose();
    d.amax()
}

/// det(Phi - I).
pub fn det_minus_identity(phi: &DMatrix<f64>) -> f64 {
    let dim = phi.nrows();
    let m = phi - DMatrix::<f64>::identity(dim, dim);
    m.determinant()
}

/// Matrix infinity norm (max absolute row sum).
pub fn inf_norm(m: &DMatrix<f64>) -> f64 {
    let mut best = 0.0_f64;
    for r in 0..m.nrows() {
        let s: f64 = (0..m.ncols()).map(|c| m[(r, c)].abs()).sum();
        best = best.max(s);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_j_squares_to_minus_identity() {
        for dim in [2, 4, 6] {
            let j = standard_j(dim);
            let jj = &j * &j;
            let minus_id = -DMatrix::<f64>::identity(dim, dim);
            assert!((jj - minus_id).amax() < 1e-15);
        }
    }

    #[test]
    fn projection_restores_symplecticity() {
        let j = standard_j(4);
        // Rotation blocks with a deliberate O(1e-4) defect.
        let mut phi = DMatrix::identity(4, 4);
        let th = 0.7_f64;
        phi[(0, 0)] = th.cos();
        phi[(0, 1)] = -th.sin();
        phi[(1, 0)] = th.sin();
        phi[(1, 1)] = th.cos();
        phi[(2, 2)] = 1.0 + 1e-4;
        let res = project_symplectic(&mut phi, &j);
        assert!(res < 1e-12, "residual {res}");
    }
}
