use crate::angular_momentum::{wigner_3j, wigner_6j, HalfInt, HalfIntegerJ};
use crate::error::{Error, Result};

use super::constants::MolecularConstants;
use super::fine_structure::{allowed_j, FineStructureTriplet};

/// J values in manifold `n` that admit projection `m_j`, ascending.
pub fn j_labels_for(n: u32, m_j: i32) -> Vec<u32> {
    allowed_j(n)
        .into_iter()
        .filter(|&j| m_j.unsigned_abs() <= j)
        .collect()
}

fn parity(k: i64) -> f64 {
    if k.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `<N S J M| S_z |N S J' M>` for S = 1 via Wigner–Eckart:
///
/// ```text
/// (-1)^{J-M} (J 1 J'; -M 0 M) (-1)^{N+S+J+1} sqrt((2J+1)(2J'+1)) {S J N; J' S 1} sqrt(S(S+1)(2S+1))
/// ```
pub fn spin_projection_coupled(n: u32, j_row: u32, j_col: u32, m: i32) -> Result<f64> {
    let allowed = allowed_j(n);
    for j in [j_row, j_col] {
        if !allowed.contains(&j) {
            return Err(Error::InvalidQuantumNumber(format!(
                "J={j} is not in manifold N={n}"
            )));
        }
    }
    if m.unsigned_abs() > j_row.min(j_col) {
        return Err(Error::InvalidQuantumNumber(format!(
            "M={m} exceeds min(J, J') = {}",
            j_row.min(j_col)
        )));
    }
    let s = 1u32;
    let h = HalfIntegerJ::integer;
    let three_j = wigner_3j(
        h(j_row),
        h(1),
        h(j_col),
        HalfInt::integer(-m),
        HalfInt::integer(0),
        HalfInt::integer(m),
    );
    let six_j = wigner_6j(h(s), h(j_row), h(n), h(j_col), h(s), h(1));
    let sf = f64::from(s);
    let reduced = parity(i64::from(n + s + j_row + 1))
        * (f64::from(2 * j_row + 1) * f64::from(2 * j_col + 1)).sqrt()
        * six_j
        * (sf * (sf + 1.0) * (2.0 * sf + 1.0)).sqrt();
    Ok(parity(i64::from(j_row) - i64::from(m)) * three_j * reduced)
}

/// One M_J block of `H_fs + g_s μ_B B S_z` over the `|N S J M>` states present.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeemanBlock {
    pub n: u32,
    pub m_j: i32,
    /// J label of each basis state, ascending.
    pub j_labels: Vec<u32>,
    /// Real symmetric matrix in GHz.
    pub matrix: Vec<Vec<f64>>,
}

impl ZeemanBlock {
    pub fn dim(&self) -> usize {
        self.j_labels.len()
    }
}

/// Block for projection `m_j` built on the given zero-field fine structure.
pub fn zeeman_block_with(
    fine: &FineStructureTriplet,
    m_j: i32,
    b_field: f64,
    constants: &MolecularConstants,
) -> Result<ZeemanBlock> {
    let n = fine.n;
    let max_j = fine.j_values().max().unwrap_or(0);
    if m_j.unsigned_abs() > max_j {
        return Err(Error::InvalidQuantumNumber(format!(
            "|M_J|={} exceeds N+1={max_j}",
            m_j.abs()
        )));
    }
    let labels = j_labels_for(n, m_j);
    let zeeman = constants.zeeman_ghz_per_tesla() * b_field;
    let mut matrix = vec![vec![0.0; labels.len()]; labels.len()];
    for (r, &jr) in labels.iter().enumerate() {
        for (c, &jc) in labels.iter().enumerate() {
            let sz = spin_projection_coupled(n, jr, jc, m_j)?;
            matrix[r][c] = zeeman * sz;
        }
        matrix[r][r] += fine.energy(jr).expect("label comes from the same manifold");
    }
    // Enforce exact symmetry; the two triangle entries differ only by rounding.
    for r in 0..labels.len() {
        for c in (r + 1)..labels.len() {
            let avg = 0.5 * (matrix[r][c] + matrix[c][r]);
            matrix[r][c] = avg;
            matrix[c][r] = avg;
        }
    }
    Ok(ZeemanBlock {
        n,
        m_j,
        j_labels: labels,
        matrix,
    })
}

/// `diag(E_fs(J)) + g_s μ_B B S_z` for one M_J; dimension 3, 2 or 1 for
/// `|M_J| <= N-1`, `= N`, `= N+1`.
pub fn zeeman_block(
    n: u32,
    m_j: i32,
    b_field: f64,
    constants: &MolecularConstants,
) -> Result<ZeemanBlock> {
    if m_j.unsigned_abs() > n + 1 {
        return Err(Error::InvalidQuantumNumber(format!(
            "|M_J|={} exceeds N+1={}",
            m_j.abs(),
            n + 1
        )));
    }
    let fine = super::fine_structure::fine_structure_energies(n, constants);
    zeeman_block_with(&fine, m_j, b_field, constants)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projection_theorem_diagonals() {
        let v = spin_projection_coupled(59, 60, 60, 30).unwrap();
        assert!((v - 0.5).abs() < 1e-13);
        let v = spin_projection_coupled(59, 58, 58, 30).unwrap();
        assert!((v + 30.0 / 59.0).abs() < 1e-13);
        let v = spin_projection_coupled(59, 59, 59, 30).unwrap();
        assert!((v - 30.0 / (59.0 * 60.0)).abs() < 1e-13);
    }

    #[test]
    fn invalid_labels_are_errors() {
        assert!(spin_projection_coupled(5, 7, 5, 0).is_err());
        assert!(spin_projection_coupled(5, 4, 4, 5).is_err());
        assert!(zeeman_block(5, 7, 0.1, &MolecularConstants::oxygen()).is_err());
    }

    #[test]
    fn block_dimensions() {
        let c = MolecularConstants::oxygen();
        assert_eq!(zeeman_block(5, 4, 0.3, &c).unwrap().dim(), 3);
        assert_eq!(zeeman_block(5, -5, 0.3, &c).unwrap().dim(), 2);
        assert_eq!(zeeman_block(5, 6, 0.3, &c).unwrap().dim(), 1);
        assert_eq!(zeeman_block(1, 0, 0.3, &c).unwrap().j_labels, vec![0, 1, 2]);
    }

    #[test]
    fn zero_field_is_diagonal_fine_structure() {
        let c = MolecularConstants::oxygen();
        let fs = super::super::fine_structure::fine_structure_energies(59, &c);
        let b = zeeman_block(59, 12, 0.0, &c).unwrap();
        for (r, &j) in b.j_labels.iter().enumerate() {
            for cc in 0..b.dim() {
                let expected = if r == cc { fs.energy(j).unwrap() } else { 0.0 };
                assert_eq!(b.matrix[r][cc], expected);
            }
        }
    }

    #[test]
    fn block_is_symmetric() {
        let b = zeeman_block(59, 12, 0.32, &MolecularConstants::oxygen()).unwrap();
        for r in 0..3 {
            for c in 0..3 {
                assert_eq!(b.matrix[r][c], b.matrix[c][r]);
            }
        }
    }
}
