use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI};

use crate::angular_momentum::wigner_3j_twice;
use crate::dynamics::{DistributionField, RotationalWavePacket};
use crate::error::{Error, Result};
use crate::linalg::symmetric_eigen;

/// `⟨n_a n_b⟩` over the molecular-axis direction `n`, indices 0, 1, 2 for x, y, z.
pub type MomentTensor = [[f64; 3]; 3];

const NORM_TOL: f64 = 1e-9;

/// Ensemble averages of squared direction cosines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlignmentMoments {
    pub cos2_x: f64,
    pub cos2_y: f64,
    pub cos2_z: f64,
    /// `⟨cos θ_y cos θ_z⟩`.
    pub cross_yz: f64,
}

impl AlignmentMoments {
    pub const ISOTROPIC: Self = Self {
        cos2_x: 1.0 / 3.0,
        cos2_y: 1.0 / 3.0,
        cos2_z: 1.0 / 3.0,
        cross_yz: 0.0,
    };

    pub fn from_tensor(t: &MomentTensor) -> Self {
        Self {
            cos2_x: t[0][0],
            cos2_y: t[1][1],
            cos2_z: t[2][2],
            cross_yz: t[1][2],
        }
    }

    pub fn trace(&self) -> f64 {
        self.cos2_x + self.cos2_y + self.cos2_z
    }
}

/// Quadrature moments of a normalized distribution.
pub fn moment_tensor_of_field(field: &DistributionField) -> MomentTensor {
    let grid = &field.grid;
    let n_phi = grid.phi_count;
    let mut t = [[0.0; 3]; 3];
    for i in 0..grid.n_theta() {
        let mut row = [[0.0; 3]; 3];
        for k in 0..n_phi {
            let rho = field.values[i * n_phi + k];
            let n = grid.direction(i, k);
            for a in 0..3 {
                for b in a..3 {
                    row[a][b] += rho * n[a] * n[b];
                }
            }
        }
        let w = grid.theta_weights[i] * grid.phi_weight();
        for a in 0..3 {
            for b in a..3 {
                t[a][b] += w * row[a][b];
            }
        }
    }
    symmetrize(t)
}

pub fn alignment_moments(field: &DistributionField) -> Result<AlignmentMoments> {
    let total = field.integral();
    if (total - 1.0).abs() > NORM_TOL {
        return Err(Error::NotNormalized(total));
    }
    Ok(AlignmentMoments::from_tensor(&moment_tensor_of_field(
        field,
    )))
}

fn symmetrize(mut t: MomentTensor) -> MomentTensor {
    for a in 0..3 {
        for b in 0..a {
            t[a][b] = t[b][a];
        }
    }
    t
}

/// `⟨J, M+q| C²_q |J, M⟩` for the molecular axis in state `Y_{J,M}`.
fn c2_element(j: u32, m: i64, q: i64) -> f64 {
    let tj = 2 * i64::from(j);
    let reduced = f64::from(2 * j + 1) * wigner_3j_twice(tj, 4, tj, 0, 0, 0);
    let mp = m + q;
    let sign = if mp.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    sign * reduced * wigner_3j_twice(tj, 4, tj, -2 * mp, 2 * q, 2 * m)
}

/// Unnormalized moment tensor of one amplitude vector over `M = -J..=J`, from the
/// rank-2 decomposition of `n_a n_b`.
fn amplitude_tensor(j: u32, amps: &[Complex64]) -> MomentTensor {
    let norm: f64 = amps.iter().map(|c| c.norm_sqr()).sum();
    if norm == 0.0 {
        return [[0.0; 3]; 3];
    }
    let ji = i64::from(j);
    let mut tq = [Complex64::new(0.0, 0.0); 5];
    for (qi, q) in (-2i64..=2).enumerate() {
        if j == 0 {
            break;
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for m in -ji..=ji {
            let mp = m + q;
            if mp.abs() > ji {
                continue;
            }
            let a = amps[(m + ji) as usize];
            let b = amps[(mp + ji) as usize];
            acc += b.conj() * a * c2_element(j, m, q);
        }
        tq[qi] = acc;
    }
    let [tm2, tm1, t0, t1, t2] = tq;
    let i = Complex64::i();
    let s6 = 6f64.sqrt();
    let zz = norm / 3.0 + 2.0 / 3.0 * t0.re;
    let perp = 2.0 / 3.0 * norm - 2.0 / 3.0 * t0.re;
    let diff = (t2 + tm2).re / 1.5f64.sqrt();
    let yz = (i * (t1 + tm1)).re / s6;
    let xz = -(t1 - tm1).re / s6;
    let xy = (-i * (t2 - tm2)).re / s6;
    [
        [(perp + diff) / 2.0, xy, xz],
        [xy, (perp - diff) / 2.0, yz],
        [xz, yz, zz],
    ]
}

fn add_scaled(acc: &mut MomentTensor, t: &MomentTensor, w: f64) {
    for a in 0..3 {
        for b in 0..3 {
            acc[a][b] += w * t[a][b];
        }
    }
}

/// Weighted moment tensor of each J label's partial distribution; the tensors sum to
/// [`moment_tensor`].
pub fn moment_tensor_by_label(packet: &RotationalWavePacket) -> Vec<(u32, MomentTensor)> {
    packet
        .j_labels
        .iter()
        .enumerate()
        .map(|(li, &j)| {
            let mut t = [[0.0; 3]; 3];
            for comp in &packet.components {
                add_scaled(
                    &mut t,
                    &amplitude_tensor(j, &comp.amplitudes[li]),
                    comp.weight,
                );
            }
            (j, t)
        })
        .collect()
}

/// Moment tensor computed directly from the amplitudes, without a grid.
pub fn moment_tensor(packet: &RotationalWavePacket) -> MomentTensor {
    let mut t = [[0.0; 3]; 3];
    for (_, part) in moment_tensor_by_label(packet) {
        add_scaled(&mut t, &part, 1.0);
    }
    t
}

pub fn alignment_moments_of_packet(packet: &RotationalWavePacket) -> Result<AlignmentMoments> {
    packet.validate(NORM_TOL)?;
    Ok(AlignmentMoments::from_tensor(&moment_tensor(packet)))
}

/// `⟨cos²θ_z⟩ - ⟨cos²θ_y⟩`, the anisotropy seen by a probe travelling along x.
pub fn birefringence_signal(m: &AlignmentMoments) -> f64 {
    m.cos2_z - m.cos2_y
}

/// `⟨cos²θ_p⟩ - 1/2` for the polarization direction `z cos θ_p + y sin θ_p`.
pub fn probe_projection(m: &AlignmentMoments, theta_p: f64) -> f64 {
    let (s, c) = theta_p.sin_cos();
    (m.cos2_z - 0.5) * c * c + (m.cos2_y - 0.5) * s * s + m.cross_yz * (2.0 * theta_p).sin()
}

/// Azimuth of the distribution's symmetry axis (eigenvector of the smallest moment,
/// the disk normal) measured from +x towards +y, folded into `(-π/2, π/2]`.
pub fn principal_axis_tilt(t: &MomentTensor) -> f64 {
    let eig = symmetric_eigen(&t.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
    let normal = &eig.vectors[0];
    let mut angle = normal[1].atan2(normal[0]);
    if angle > FRAC_PI_2 {
        angle -= PI;
    } else if angle <= -FRAC_PI_2 {
        angle += PI;
    }
    angle
}
