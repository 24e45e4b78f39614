use crate::error::{Error, Result};
use crate::linalg::eigen3;

use super::constants::MolecularConstants;
use super::fine_structure::{fine_structure_energies, FineStructureTriplet};
use super::zeeman::{zeeman_block_with, ZeemanBlock};

/// Field step used when following eigenvectors from B = 0 (Tesla).
const TRACKING_STEP_T: f64 = 0.005;

/// Eigensystem of one M_J block.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockEigensystem {
    pub m_j: i32,
    /// J label of each basis state `|N S J M_J>`, ascending.
    pub basis_j: Vec<u32>,
    /// Eigenvalues in GHz, one per adiabatic state.
    pub energies: Vec<f64>,
    /// Adiabatic J label of each eigenvalue.
    pub labels: Vec<u32>,
    /// `vectors[k][b]` = component of eigenstate k on basis state b.
    pub vectors: Vec<Vec<f64>>,
}

impl BlockEigensystem {
    pub fn dim(&self) -> usize {
        self.basis_j.len()
    }

    /// Index of the eigenstate carrying adiabatic label `j`.
    pub fn state_with_label(&self, j: u32) -> Option<usize> {
        self.labels.iter().position(|&l| l == j)
    }

    pub fn basis_index(&self, j: u32) -> Option<usize> {
        self.basis_j.iter().position(|&l| l == j)
    }
}

/// All `E_{N,J,M_J}(B)` of one rotational manifold.
#[derive(Debug, Clone, PartialEq)]
pub struct ManifoldSpectrum {
    pub n: u32,
    pub b_field: f64,
    pub fine: FineStructureTriplet,
    /// Blocks ordered by `M_J = -(N+1) ..= N+1`.
    pub blocks: Vec<BlockEigensystem>,
}

impl ManifoldSpectrum {
    pub fn block(&self, m_j: i32) -> Option<&BlockEigensystem> {
        let max = self.n as i32 + 1;
        if m_j.abs() > max {
            return None;
        }
        self.blocks.get((m_j + max) as usize)
    }

    /// Eigenvalue with adiabatic label `j` in block `m_j`.
    pub fn energy(&self, j: u32, m_j: i32) -> Option<f64> {
        let block = self.block(m_j)?;
        block.state_with_label(j).map(|k| block.energies[k])
    }

    /// `(J label, M_J, E)` for every level, sorted by `(J, M_J)`.
    pub fn levels(&self) -> Vec<(u32, i32, f64)> {
        let mut out: Vec<(u32, i32, f64)> = self
            .blocks
            .iter()
            .flat_map(|b| {
                b.labels
                    .iter()
                    .zip(&b.energies)
                    .map(move |(&j, &e)| (j, b.m_j, e))
            })
            .collect();
        out.sort_by_key(|&(j, m, _)| (j, m));
        out
    }

    pub fn level_count(&self) -> usize {
        self.blocks.iter().map(|b| b.dim()).sum()
    }
}

const PERMUTATIONS_3: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];
const PERMUTATIONS_2: [[usize; 3]; 2] = [[0, 1, 2], [1, 0, 2]];
const PERMUTATIONS_1: [[usize; 3]; 1] = [[0, 1, 2]];

fn permutations(dim: usize) -> &'static [[usize; 3]] {
    match dim {
        1 => &PERMUTATIONS_1,
        2 => &PERMUTATIONS_2,
        3 => &PERMUTATIONS_3,
        _ => unreachable!("Zeeman blocks have one to three states"),
    }
}

fn to_array(block: &ZeemanBlock) -> [[f64; 3]; 3] {
    let mut a = [[0.0; 3]; 3];
    for (dst, src) in a.iter_mut().zip(&block.matrix) {
        dst[..src.len()].copy_from_slice(src);
    }
    a
}

/// Follows one block's eigenvectors outward from B = 0, pairing states between
/// successive fields by maximal total overlap. Ties keep energy order.
#[derive(Clone)]
struct Tracker<'a> {
    fine_block: &'a ZeemanBlock,
    dim: usize,
    fine: [[f64; 3]; 3],
    unit: [[f64; 3]; 3],
    b: f64,
    labels: [u32; 3],
    energies: [f64; 3],
    vectors: [[f64; 3]; 3],
}

impl<'a> Tracker<'a> {
    fn new(fine_block: &'a ZeemanBlock, unit_block: &ZeemanBlock) -> Self {
        let dim = fine_block.dim();
        let fine = to_array(fine_block);
        // B = 0: diagonal, each eigenvector is a basis state.
        let zero = eigen3(&fine, dim);
        let mut labels = [0; 3];
        for (k, v) in zero.vectors[..dim].iter().enumerate() {
            let dominant = (0..dim)
                .max_by(|&a, &b| v[a].abs().total_cmp(&v[b].abs()))
                .unwrap();
            labels[k] = fine_block.j_labels[dominant];
        }
        Self {
            fine_block,
            dim,
            fine,
            unit: to_array(unit_block),
            b: 0.0,
            labels,
            energies: zero.values,
            vectors: zero.vectors,
        }
    }

    fn step_to(&mut self, b: f64) {
        let dim = self.dim;
        let mut m = self.fine;
        for r in 0..dim {
            for c in 0..dim {
                m[r][c] += b * self.unit[r][c];
            }
        }
        let eig = eigen3(&m, dim);
        let overlap = |old: usize, new: usize| -> f64 {
            (0..dim)
                .map(|i| self.vectors[old][i] * eig.vectors[new][i])
                .sum()
        };
        // perm[old] = new
        let mut best = &permutations(dim)[0];
        let mut best_score = f64::NEG_INFINITY;
        for p in permutations(dim) {
            let score: f64 = (0..dim).map(|old| overlap(old, p[old]).abs()).sum();
            if score > best_score + 1e-12 {
                best_score = score;
                best = p;
            }
        }
        let mut vectors = [[0.0; 3]; 3];
        let mut energies = [0.0; 3];
        for old in 0..dim {
            let new = best[old];
            let sign = if overlap(old, new) < 0.0 { -1.0 } else { 1.0 };
            for i in 0..dim {
                vectors[old][i] = sign * eig.vectors[new][i];
            }
            energies[old] = eig.values[new];
        }
        self.vectors = vectors;
        self.energies = energies;
        self.b = b;
    }

    /// Moves to `target` in equal steps no longer than the tracking step.
    fn advance_to(&mut self, target: f64) {
        let span = target - self.b;
        if span == 0.0 {
            return;
        }
        let steps = ((span.abs() / TRACKING_STEP_T).ceil() as usize).max(1);
        let start = self.b;
        for s in 1..=steps {
            let b = if s == steps {
                target
            } else {
                start + span * s as f64 / steps as f64
            };
            self.step_to(b);
        }
    }

    /// Current eigensystem with states in ascending energy.
    fn snapshot(&self) -> BlockEigensystem {
        let dim = self.dim;
        let mut order: Vec<usize> = (0..dim).collect();
        order.sort_by(|&a, &b| self.energies[a].total_cmp(&self.energies[b]));
        BlockEigensystem {
            m_j: self.fine_block.m_j,
            basis_j: self.fine_block.j_labels.clone(),
            energies: order.iter().map(|&k| self.energies[k]).collect(),
            labels: order.iter().map(|&k| self.labels[k]).collect(),
            vectors: order
                .iter()
                .map(|&k| self.vectors[k][..dim].to_vec())
                .collect(),
        }
    }
}

fn check_request(n: u32, fields: &[f64]) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidQuantumNumber(
            "manifold_spectrum requires N >= 1".into(),
        ));
    }
    if let Some(b) = fields.iter().find(|b| !b.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "field {b} T is not finite"
        )));
    }
    Ok(())
}

/// Diagonalizes every M_J block of manifold `n` at field `b_field` (Tesla).
pub fn manifold_spectrum(
    n: u32,
    b_field: f64,
    constants: &MolecularConstants,
) -> Result<ManifoldSpectrum> {
    let mut all = manifold_spectra(n, &[b_field], constants)?;
    Ok(all.pop().expect("one field in, one spectrum out"))
}

/// [`manifold_spectrum`] for many fields at once. Each block is tracked in a single
/// sweep outward from zero through the requested fields of each sign, which costs
/// the same as tracking to the largest field alone. Output order follows `fields`.
pub fn manifold_spectra(
    n: u32,
    fields: &[f64],
    constants: &MolecularConstants,
) -> Result<Vec<ManifoldSpectrum>> {
    check_request(n, fields)?;
    let fine = fine_structure_energies(n, constants);
    let max = n as i32 + 1;

    // Visiting order: each sign separately, by increasing |B|.
    let mut order: Vec<usize> = (0..fields.len()).collect();
    order.sort_by(|&a, &b| {
        let (fa, fb) = (fields[a], fields[b]);
        (fa < 0.0)
            .cmp(&(fb < 0.0))
            .then(fa.abs().total_cmp(&fb.abs()))
    });

    let mut per_field: Vec<Vec<BlockEigensystem>> =
        vec![Vec::with_capacity((2 * max + 1) as usize); fields.len()];
    for m in -max..=max {
        let fine_block = zeeman_block_with(&fine, m, 0.0, constants)?;
        let mut unit = zeeman_block_with(&fine, m, 1.0, constants)?;
        for r in 0..unit.dim() {
            for c in 0..unit.dim() {
                unit.matrix[r][c] -= fine_block.matrix[r][c];
            }
        }
        let fresh = Tracker::new(&fine_block, &unit);
        let mut tracker = fresh.clone();
        let mut negative = false;
        for &idx in &order {
            let b = fields[idx];
            if b < 0.0 && !negative {
                negative = true;
                tracker = fresh.clone();
            }
            tracker.advance_to(b);
            per_field[idx].push(tracker.snapshot());
        }
    }
    Ok(fields
        .iter()
        .zip(per_field)
        .map(|(&b_field, blocks)| ManifoldSpectrum {
            n,
            b_field,
            fine: fine.clone(),
            blocks,
        })
        .collect())
}
