//! Simulation of centrifuged O₂ superrotors in a magnetic field: angular-momentum
//! algebra, the Hund's case (b) Zeeman problem, wave-packet evolution, and the
//! alignment observables behind magneto-rotational birefringence.

#![allow(clippy::needless_range_loop)]

pub mod angular_momentum;
pub mod dynamics;
pub mod error;
pub mod linalg;
pub mod molecule;
pub mod observables;
pub mod scan;

pub use angular_momentum::{HalfInt, HalfIntegerJ, QuadratureGrid};
pub use dynamics::{
    DistributionField, EvolutionMode, PhaseConvention, RotationalWavePacket, ViewAxis,
};
pub use error::{Error, Result};
pub use molecule::{ManifoldSpectrum, MolecularConstants};
pub use observables::{AlignmentMoments, DecayTable, RamanWeights, SignalModel};
pub use scan::{MomentMethod, ScanRow, ScanSpec};
