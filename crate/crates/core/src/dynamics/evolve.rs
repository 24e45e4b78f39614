use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::molecule::ManifoldSpectrum;

use super::packet::RotationalWavePacket;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EvolutionMode {
    /// Each `c_{J,M}` picks up the phase of the eigenvalue carrying adiabatic label J;
    /// amplitudes never move between J labels.
    #[default]
    AdiabaticLabel,
    /// Full propagation in each M block: project on eigenvectors, phase, project back.
    Exact,
}

/// Sign of the propagator phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhaseConvention {
    /// `exp(+i E t / ħ)`, as written in the angular-distribution formula.
    Literal,
    /// `exp(-i E t / ħ)`, the Schrödinger propagator.
    Physical,
}

impl PhaseConvention {
    fn sign(self) -> f64 {
        match self {
            PhaseConvention::Literal => 1.0,
            PhaseConvention::Physical => -1.0,
        }
    }
}

impl Default for PhaseConvention {
    fn default() -> Self {
        if cfg!(feature = "physical-phase") {
            PhaseConvention::Physical
        } else {
            PhaseConvention::Literal
        }
    }
}

fn phase(energy_ghz: f64, t_ns: f64, convention: PhaseConvention) -> Complex64 {
    Complex64::from_polar(1.0, convention.sign() * 2.0 * PI * energy_ghz * t_ns)
}

/// Propagates `packet` for `t_ns` nanoseconds in the field described by `spectrum`.
pub fn evolve(
    packet: &RotationalWavePacket,
    t_ns: f64,
    spectrum: &ManifoldSpectrum,
    mode: EvolutionMode,
    convention: PhaseConvention,
) -> Result<RotationalWavePacket> {
    if packet.n != spectrum.n {
        return Err(Error::ManifoldMismatch {
            packet: packet.n,
            spectrum: spectrum.n,
        });
    }
    if !(t_ns.is_finite() && t_ns >= 0.0) {
        return Err(Error::InvalidParameter(format!(
            "evolution time {t_ns} ns must be finite and >= 0"
        )));
    }
    let mut out = packet.clone();
    out.time_ns = packet.time_ns + t_ns;
    out.b_field = spectrum.b_field;
    out.mode = Some(mode);

    match mode {
        EvolutionMode::AdiabaticLabel => {
            for comp in &mut out.components {
                for (li, &j) in packet.j_labels.iter().enumerate() {
                    for (k, c) in comp.amplitudes[li].iter_mut().enumerate() {
                        if *c == Complex64::new(0.0, 0.0) {
                            continue;
                        }
                        let m = k as i32 - j as i32;
                        let e = spectrum
                            .energy(j, m)
                            .expect("label exists for every |M| <= J");
                        *c *= phase(e, t_ns, convention);
                    }
                }
            }
        }
        EvolutionMode::Exact => {
            for comp in &mut out.components {
                for block in &spectrum.blocks {
                    let m = block.m_j;
                    let slots: Vec<(usize, usize)> = block
                        .basis_j
                        .iter()
                        .map(|&j| {
                            let li = packet.label_index(j).expect("same manifold");
                            (li, (m + j as i32) as usize)
                        })
                        .collect();
                    let a: Vec<Complex64> = slots
                        .iter()
                        .map(|&(li, k)| comp.amplitudes[li][k])
                        .collect();
                    if a.iter().all(|x| x.norm_sqr() == 0.0) {
                        continue;
                    }
                    let d = a.len();
                    let evolved: Vec<Complex64> = (0..d)
                        .map(|state| {
                            let proj: Complex64 =
                                (0..d).map(|b| a[b] * block.vectors[state][b]).sum();
                            proj * phase(block.energies[state], t_ns, convention)
                        })
                        .collect();
                    for (b, &(li, k)) in slots.iter().enumerate() {
                        comp.amplitudes[li][k] =
                            (0..d).map(|s| evolved[s] * block.vectors[s][b]).sum();
                    }
                }
            }
        }
    }
    Ok(out)
}
