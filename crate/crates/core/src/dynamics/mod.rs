//! Centrifuge-prepared wave packets, their evolution in the field, and the resulting
//! distribution of molecular axes.
//!
//! Geometry: the centrifuge propagates along +x and leaves the angular momentum along +x;
//! the field is B ẑ; the probe travels along x with its polarization in the yz plane.

mod distribution;
mod evolve;
mod image;
mod packet;

pub use distribution::{angular_distribution, angular_distribution_by_label, DistributionField};
pub use evolve::{evolve, EvolutionMode, PhaseConvention};
pub use image::{project_image, Image, ViewAxis};
pub use packet::{centrifuge_packet, ComponentWeighting, PacketComponent, RotationalWavePacket};
