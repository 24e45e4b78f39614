//! Energy levels of a ³Σ molecule in Hund's case (b): rigid rotor, fine structure and
//! the per-M_J Zeeman blocks.
//!
//! Basis states are `|N, S, J, M_J>` with N coupled first: `|J M> = Σ <N m_N; S m_S|J M>
//! |N m_N>|S m_S>`. Energies are E/h in GHz throughout.

mod constants;
mod fine_structure;
mod spectrum;
mod zeeman;

pub use constants::MolecularConstants;
pub use fine_structure::{
    fine_structure_energies, fine_structure_energies_fixed_n, raman_shift, rigid_rotor_energy,
    spin_rotation_expectation, spin_spin_element, FineStructureTriplet,
};
pub use spectrum::{manifold_spectra, manifold_spectrum, BlockEigensystem, ManifoldSpectrum};
pub use zeeman::{j_labels_for, spin_projection_coupled, zeeman_block, ZeemanBlock};
