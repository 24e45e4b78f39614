//! Angular-momentum algebra for quantum numbers up to J ~ 150.
//!
//! Phase conventions (used everywhere in this crate):
//!
//! * Clebsch–Gordan coefficients follow Condon–Shortley: `<j1 j1; j2 (J-j1) | J J>` is
//!   positive.
//! * Spherical harmonics carry the Condon–Shortley factor `(-1)^M` for `M > 0`, and
//!   `Y_{J,-M} = (-1)^M conj(Y_{J,M})`.
//! * `d^J_{m'm}(beta) = <J m'| exp(-i beta J_y) |J m>`, so the column `m = J` is the
//!   stretched state along the direction obtained by rotating the z axis by `beta` about y.
//!
//! Factorial ratios are always combined in log space; quantum numbers are carried
//! internally as doubled integers so half-integers stay exact.

mod coupling;
mod factorial;
mod harmonics;
mod quadrature;
mod quantum;
mod rotation;

pub(crate) use coupling::wigner_3j_twice;
pub use coupling::{clebsch_gordan, wigner_3j, wigner_6j};
pub use factorial::ln_factorial;
pub use harmonics::{legendre_table, normalized_legendre, sph_harm, LegendreTable};
pub use quadrature::{gauss_legendre, make_grid, QuadratureGrid};
pub use quantum::{HalfInt, HalfIntegerJ};
pub use rotation::{stretched_rotation_column, wigner_d, wigner_d_column, wigner_d_matrix};
