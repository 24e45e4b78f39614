use crate::dynamics::{
    centrifuge_packet, evolve, ComponentWeighting, EvolutionMode, PhaseConvention,
    RotationalWavePacket,
};
use crate::error::Result;
use crate::molecule::{manifold_spectrum, ManifoldSpectrum, MolecularConstants};

use super::decay::{collisional_envelope, DecayTable};
use super::moments::{alignment_moments_of_packet, birefringence_signal, AlignmentMoments};
use super::momentum::{raman_weights, RamanWeights};

/// Everything needed to go from `(N, B, t, P)` to a predicted signal.
#[derive(Debug, Clone, Default)]
pub struct SignalModel {
    pub constants: MolecularConstants,
    pub mode: EvolutionMode,
    pub convention: PhaseConvention,
    pub weighting: ComponentWeighting,
    pub decay: DecayTable,
}

/// Observables of one evolved packet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignalSample {
    pub moments: AlignmentMoments,
    pub birefringence: f64,
    pub raman: RamanWeights,
    pub envelope: f64,
    pub observed: f64,
}

impl SignalModel {
    pub fn spectrum(&self, n: u32, b_field: f64) -> Result<ManifoldSpectrum> {
        manifold_spectrum(n, b_field, &self.constants)
    }

    pub fn packet(&self, spectrum: &ManifoldSpectrum, t_ns: f64) -> Result<RotationalWavePacket> {
        let start = centrifuge_packet(spectrum.n, self.weighting)?;
        evolve(&start, t_ns, spectrum, self.mode, self.convention)
    }

    pub fn sample(
        &self,
        spectrum: &ManifoldSpectrum,
        t_ns: f64,
        pressure_atm: f64,
    ) -> Result<SignalSample> {
        let envelope = collisional_envelope(spectrum.n, pressure_atm, t_ns, &self.decay)?;
        let packet = self.packet(spectrum, t_ns)?;
        let moments = alignment_moments_of_packet(&packet)?;
        let birefringence = birefringence_signal(&moments);
        Ok(SignalSample {
            moments,
            birefringence,
            raman: raman_weights(&packet),
            envelope,
            observed: birefringence * envelope,
        })
    }
}

/// Birefringence of the evolved centrifuge packet times the collisional envelope.
pub fn observed_signal(
    n: u32,
    b_field: f64,
    t_ns: f64,
    pressure_atm: f64,
    model: &SignalModel,
) -> Result<f64> {
    let spectrum = model.spectrum(n, b_field)?;
    Ok(model.sample(&spectrum, t_ns, pressure_atm)?.observed)
}
