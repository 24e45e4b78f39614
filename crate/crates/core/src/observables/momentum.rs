use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;

use crate::angular_momentum::{wigner_d_matrix, HalfIntegerJ};
use crate::dynamics::RotationalWavePacket;

/// `(⟨J_x⟩, ⟨J_y⟩, ⟨J_z⟩)` of every incoherent component, keyed by its initial J.
pub fn angular_momentum_vector(packet: &RotationalWavePacket) -> Vec<(u32, [f64; 3])> {
    packet
        .components
        .iter()
        .map(|comp| {
            let mut v = [0.0; 3];
            for (&j, amps) in packet.j_labels.iter().zip(&comp.amplitudes) {
                let jf = f64::from(j);
                let ji = j as i64;
                let mut raise = Complex64::new(0.0, 0.0);
                for (k, a) in amps.iter().enumerate() {
                    let m = k as i64 - ji;
                    v[2] += m as f64 * a.norm_sqr();
                    if m < ji {
                        let mf = m as f64;
                        raise +=
                            amps[k + 1].conj() * a * (jf * (jf + 1.0) - mf * (mf + 1.0)).sqrt();
                    }
                }
                v[0] += raise.re;
                v[1] += raise.im;
            }
            (comp.initial_j, v)
        })
        .collect()
}

/// Populations of positive, zero and negative angular-momentum projection on the
/// centrifuge axis x.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RamanWeights {
    pub w_plus: f64,
    pub w_zero: f64,
    pub w_minus: f64,
}

/// Re-expresses every amplitude vector in the x-quantized frame,
/// `b_{M'} = Σ_M d^J_{M,M'}(π/2) c_M`, and sums the weighted populations by sign of `M'`.
pub fn raman_weights(packet: &RotationalWavePacket) -> RamanWeights {
    let mut w = [0.0; 3];
    for (li, &j) in packet.j_labels.iter().enumerate() {
        if packet
            .components
            .iter()
            .all(|c| c.amplitudes[li].iter().all(|a| a.norm_sqr() == 0.0))
        {
            continue;
        }
        let d = wigner_d_matrix(HalfIntegerJ::integer(j), FRAC_PI_2);
        let dim = d.len();
        for comp in &packet.components {
            let amps = &comp.amplitudes[li];
            for (col, _) in d.iter().enumerate() {
                let b: Complex64 = (0..dim).map(|row| amps[row] * d[row][col]).sum();
                let m_x = col as i64 - j as i64;
                w[(1 - m_x.signum()) as usize] += comp.weight * b.norm_sqr();
            }
        }
    }
    RamanWeights {
        w_plus: w[0],
        w_zero: w[1],
        w_minus: w[2],
    }
}
