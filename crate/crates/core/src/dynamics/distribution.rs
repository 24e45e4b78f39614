use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

use crate::angular_momentum::{legendre_table, QuadratureGrid};
use crate::error::{Error, Result};

use super::packet::RotationalWavePacket;

/// `ρ(θ, φ)` sampled on a quadrature grid, stored row-major (θ rows, φ columns).
#[derive(Debug, Clone, PartialEq)]
pub struct DistributionField {
    pub grid: QuadratureGrid,
    pub values: Vec<f64>,
    /// Largest J contributing; fixes the polynomial degree of ρ.
    pub max_j: u32,
}

impl DistributionField {
    pub fn value(&self, i_theta: usize, k_phi: usize) -> f64 {
        self.values[i_theta * self.grid.phi_count + k_phi]
    }

    pub fn integral(&self) -> f64 {
        self.grid.integrate(&self.values)
    }

    /// `ρ` at an arbitrary unit vector by linear interpolation in θ (clamped to the
    /// outermost rows) and periodic linear interpolation in φ.
    pub fn sample(&self, direction: [f64; 3]) -> f64 {
        let [x, y, z] = direction;
        let theta = z.clamp(-1.0, 1.0).acos();
        let mut phi = y.atan2(x);
        if phi < 0.0 {
            phi += 2.0 * PI;
        }
        let nodes = &self.grid.theta_nodes;
        let (i0, i1, ft) = match nodes.partition_point(|&t| t < theta) {
            0 => (0, 0, 0.0),
            i if i == nodes.len() => (i - 1, i - 1, 0.0),
            i => (i - 1, i, (theta - nodes[i - 1]) / (nodes[i] - nodes[i - 1])),
        };
        let np = self.grid.phi_count;
        let pos = phi / self.grid.phi_weight();
        let k0 = (pos.floor() as usize) % np;
        let k1 = (k0 + 1) % np;
        let fp = pos - pos.floor();
        let row = |i: usize| (1.0 - fp) * self.value(i, k0) + fp * self.value(i, k1);
        (1.0 - ft) * row(i0) + ft * row(i1)
    }
}

fn phase_table(n_phi: usize) -> Vec<Complex64> {
    (0..n_phi)
        .map(|q| Complex64::from_polar(1.0, 2.0 * PI * q as f64 / n_phi as f64))
        .collect()
}

/// Per-label densities `Σ_k w_k |Σ_M c^k_{J,M} Y_{J,M}|²` on every grid point, ordered
/// like `packet.j_labels`. Rows are evaluated independently, so the result does not
/// depend on how rayon splits the work.
fn label_densities(packet: &RotationalWavePacket, grid: &QuadratureGrid) -> Vec<Vec<f64>> {
    let n_phi = grid.phi_count;
    let phases = phase_table(n_phi);
    let norm = 1.0 / (2.0 * PI).sqrt();
    let max_j = packet.max_j() as usize;

    let rows: Vec<Vec<Vec<f64>>> = grid
        .cos_theta
        .par_iter()
        .map(|&x| {
            let table = legendre_table(max_j, x);
            let mut per_label = vec![vec![0.0; n_phi]; packet.j_labels.len()];
            let mut psi = vec![Complex64::new(0.0, 0.0); n_phi];
            for comp in &packet.components {
                for (li, &j) in packet.j_labels.iter().enumerate() {
                    let amps = &comp.amplitudes[li];
                    if amps.iter().all(|c| c.norm_sqr() == 0.0) {
                        continue;
                    }
                    let coeffs: Vec<(i64, Complex64)> = amps
                        .iter()
                        .enumerate()
                        .map(|(k, c)| {
                            let m = k as i64 - j as i64;
                            (m, c * table.get_signed(j as usize, m) * norm)
                        })
                        .collect();
                    for (kphi, slot) in psi.iter_mut().enumerate() {
                        let mut acc = Complex64::new(0.0, 0.0);
                        for &(m, f) in &coeffs {
                            let q = (m * kphi as i64).rem_euclid(n_phi as i64) as usize;
                            acc += f * phases[q];
                        }
                        *slot = acc;
                    }
                    for (dst, p) in per_label[li].iter_mut().zip(&psi) {
                        *dst += comp.weight * p.norm_sqr();
                    }
                }
            }
            per_label
        })
        .collect();

    (0..packet.j_labels.len())
        .map(|li| rows.iter().flat_map(|r| r[li].iter().copied()).collect())
        .collect()
}

fn check_grid(packet: &RotationalWavePacket, grid: &QuadratureGrid) -> Result<()> {
    grid.ensure_degree(2 * packet.max_j() as usize)
}

/// `ρ(θ,φ) = Σ_J Σ_k w_k |Σ_M c^k_{J,M} Y_{J,M}(θ,φ)|²`, with `∫ ρ dΩ = 1`.
pub fn angular_distribution(
    packet: &RotationalWavePacket,
    grid: &QuadratureGrid,
) -> Result<DistributionField> {
    check_grid(packet, grid)?;
    let per_label = label_densities(packet, grid);
    let mut values = vec![0.0; grid.len()];
    for density in &per_label {
        for (v, d) in values.iter_mut().zip(density) {
            *v += d;
        }
    }
    let field = DistributionField {
        grid: grid.clone(),
        values,
        max_j: packet.max_j(),
    };
    let integral = field.integral();
    if (integral - 1.0).abs() > 1e-9 {
        return Err(Error::NotNormalized(integral));
    }
    Ok(field)
}

/// The partial distributions of each J label (not individually normalized; they sum
/// to the full distribution).
pub fn angular_distribution_by_label(
    packet: &RotationalWavePacket,
    grid: &QuadratureGrid,
) -> Result<Vec<(u32, DistributionField)>> {
    check_grid(packet, grid)?;
    Ok(packet
        .j_labels
        .iter()
        .zip(label_densities(packet, grid))
        .map(|(&j, values)| {
            (
                j,
                DistributionField {
                    grid: grid.clone(),
                    values,
                    max_j: j,
                },
            )
        })
        .collect())
}
