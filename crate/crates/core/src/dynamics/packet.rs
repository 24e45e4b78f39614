use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;

use crate::angular_momentum::stretched_rotation_column;
use crate::error::{Error, Result};

use super::evolve::EvolutionMode;

/// How the three centrifuged J components share the population.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ComponentWeighting {
    /// `w_J = 1/3`.
    #[default]
    Equal,
    /// `w_J ∝ 2J + 1`.
    Degeneracy,
}

/// One incoherent member of the mixture: the state that started as the stretched
/// state of `initial_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct PacketComponent {
    pub initial_j: u32,
    pub weight: f64,
    /// Amplitudes `c_{J,M}` in the field frame, one vector per manifold J label (aligned
    /// with `RotationalWavePacket::j_labels`), indexed by `M + J`. Only exact evolution
    /// populates labels other than `initial_j`.
    pub amplitudes: Vec<Vec<Complex64>>,
}

impl PacketComponent {
    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().flatten().map(|c| c.norm_sqr()).sum()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RotationalWavePacket {
    pub n: u32,
    /// `N-1, N, N+1`, ascending.
    pub j_labels: Vec<u32>,
    pub components: Vec<PacketComponent>,
    /// Elapsed evolution time in ns.
    pub time_ns: f64,
    /// Field the packet was last evolved in, Tesla.
    pub b_field: f64,
    /// `None` until the packet has been evolved.
    pub mode: Option<EvolutionMode>,
}

impl RotationalWavePacket {
    pub fn label_index(&self, j: u32) -> Option<usize> {
        self.j_labels.iter().position(|&l| l == j)
    }

    pub fn max_j(&self) -> u32 {
        *self.j_labels.last().expect("manifold has labels")
    }

    pub fn component(&self, initial_j: u32) -> Option<&PacketComponent> {
        self.components.iter().find(|c| c.initial_j == initial_j)
    }

    /// Checks unit component norms and normalized non-negative weights.
    pub fn validate(&self, tol: f64) -> Result<()> {
        let total: f64 = self.components.iter().map(|c| c.weight).sum();
        if (total - 1.0).abs() > tol || self.components.iter().any(|c| c.weight < 0.0) {
            return Err(Error::InvalidParameter(format!(
                "component weights sum to {total}"
            )));
        }
        for c in &self.components {
            let norm = c.norm_sqr();
            if (norm - 1.0).abs() > tol {
                return Err(Error::InvalidParameter(format!(
                    "component J={} has norm² {norm}",
                    c.initial_j
                )));
            }
        }
        Ok(())
    }
}

/// The centrifuge output for manifold `n`: for every J, the state stretched along +x,
/// written in the z-quantized frame as `c_{J,M} = d^J_{M,J}(π/2)`.
pub fn centrifuge_packet(n: u32, weighting: ComponentWeighting) -> Result<RotationalWavePacket> {
    if n == 0 {
        return Err(Error::InvalidQuantumNumber(
            "centrifuge packet needs N >= 1".into(),
        ));
    }
    let j_labels = vec![n - 1, n, n + 1];
    let raw: Vec<f64> = j_labels
        .iter()
        .map(|&j| match weighting {
            ComponentWeighting::Equal => 1.0,
            ComponentWeighting::Degeneracy => f64::from(2 * j + 1),
        })
        .collect();
    let total: f64 = raw.iter().sum();
    let components = j_labels
        .iter()
        .zip(&raw)
        .map(|(&j, &w)| PacketComponent {
            initial_j: j,
            weight: w / total,
            amplitudes: j_labels
                .iter()
                .map(|&label| {
                    if label == j {
                        stretched_rotation_column(j, FRAC_PI_2)
                            .into_iter()
                            .map(|x| Complex64::new(x, 0.0))
                            .collect()
                    } else {
                        vec![Complex64::new(0.0, 0.0); (2 * label + 1) as usize]
                    }
                })
                .collect(),
        })
        .collect();
    Ok(RotationalWavePacket {
        n,
        j_labels,
        components,
        time_ns: 0.0,
        b_field: 0.0,
        mode: None,
    })
}
