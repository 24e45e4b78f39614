//! Reductions of wave packets and distributions to measurable quantities.
//!
//! The axis frame is the one fixed in [`crate::dynamics`]: field along z, centrifuge
//! and probe propagation along x, probe polarization in the yz plane.

mod decay;
mod moments;
mod momentum;
mod signal;

pub use decay::{collisional_envelope, DecayTable};
pub use moments::{
    alignment_moments, alignment_moments_of_packet, birefringence_signal, moment_tensor,
    moment_tensor_by_label, moment_tensor_of_field, principal_axis_tilt, probe_projection,
    AlignmentMoments, MomentTensor,
};
pub use momentum::{angular_momentum_vector, raman_weights, RamanWeights};
pub use signal::{observed_signal, SignalModel, SignalSample};
