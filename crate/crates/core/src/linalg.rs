//! Dense symmetric eigensolver for the tiny (<= 3x3) blocks this crate produces.

/// Eigen-decomposition of a real symmetric matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricEigen {
    /// Eigenvalues in ascending order.
    pub values: Vec<f64>,
    /// `vectors[k]` is the unit eigenvector belonging to `values[k]`.
    pub vectors: Vec<Vec<f64>>,
}

/// Cyclic Jacobi rotations. Converges quadratically; for n <= 3 a handful of sweeps
/// reach machine precision and the eigenvectors come out orthonormal to ~1e-15.
pub fn symmetric_eigen(matrix: &[Vec<f64>]) -> SymmetricEigen {
    let n = matrix.len();
    assert!(n <= 3, "symmetric_eigen handles at most 3x3 matrices");
    let mut a = [[0.0; 3]; 3];
    for (dst, src) in a.iter_mut().zip(matrix) {
        dst[..n].copy_from_slice(&src[..n]);
    }
    let small = eigen3(&a, n);
    SymmetricEigen {
        values: small.values[..n].to_vec(),
        vectors: small.vectors[..n].iter().map(|v| v[..n].to_vec()).collect(),
    }
}

/// Stack-allocated result of [`eigen3`]; only the leading `n` entries are meaningful.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Eigen3 {
    pub values: [f64; 3],
    pub vectors: [[f64; 3]; 3],
}

/// Jacobi diagonalization of the leading `n x n` block of `matrix` (n <= 3), values
/// ascending.
pub(crate) fn eigen3(matrix: &[[f64; 3]; 3], n: usize) -> Eigen3 {
    // Work relative to the mean diagonal so rounding scales with the spread of the
    // eigenvalues rather than their magnitude.
    let shift = (0..n).map(|i| matrix[i][i]).sum::<f64>() / n.max(1) as f64;
    let mut a = *matrix;
    for (i, row) in a.iter_mut().enumerate().take(n) {
        row[i] -= shift;
    }
    let mut v = [[0.0; 3]; 3];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }

    for _sweep in 0..64 {
        let mut off = 0.0;
        let mut diag = 0.0;
        for i in 0..n {
            diag += a[i][i] * a[i][i];
            for j in 0..n {
                if i != j {
                    off += a[i][j] * a[i][j];
                }
            }
        }
        if off <= 1e-34 * (diag + off) || off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if a[p][q] == 0.0 {
                    continue;
                }
                let g = 100.0 * a[p][q].abs();
                if a[p][p].abs() + g == a[p][p].abs() && a[q][q].abs() + g == a[q][q].abs() {
                    a[p][q] = 0.0;
                    a[q][p] = 0.0;
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = if theta == 0.0 {
                    1.0
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for row in a.iter_mut().take(n) {
                    let (kp, kq) = (row[p], row[q]);
                    row[p] = c * kp - s * kq;
                    row[q] = s * kp + c * kq;
                }
                for k in 0..n {
                    let (pk, qk) = (a[p][k], a[q][k]);
                    a[p][k] = c * pk - s * qk;
                    a[q][k] = s * pk + c * qk;
                }
                for row in v.iter_mut().take(n) {
                    let (vp, vq) = (row[p], row[q]);
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
    }

    let mut order = [0usize, 1, 2];
    order[..n].sort_by(|&x, &y| a[x][x].total_cmp(&a[y][y]));
    let mut out = Eigen3 {
        values: [0.0; 3],
        vectors: [[0.0; 3]; 3],
    };
    for (slot, &k) in order[..n].iter().enumerate() {
        out.values[slot] = a[k][k] + shift;
        for i in 0..n {
            out.vectors[slot][i] = v[i][k];
        }
    }
    out
}
