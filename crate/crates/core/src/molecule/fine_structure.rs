use crate::angular_momentum::{wigner_3j, wigner_6j, HalfInt, HalfIntegerJ};

use super::constants::MolecularConstants;

/// `B N(N+1) - D N²(N+1)²` in GHz.
pub fn rigid_rotor_energy(n: u32, c: &MolecularConstants) -> f64 {
    let x = f64::from(n) * f64::from(n + 1);
    c.b0 * x - c.d0 * x * x
}

/// S-branch Raman shift `E(N+2) - E(N)` in THz.
pub fn raman_shift(n: u32, c: &MolecularConstants) -> f64 {
    (rigid_rotor_energy(n + 2, c) - rigid_rotor_energy(n, c)) / 1000.0
}

/// `<N·S> = [J(J+1) - N(N+1) - S(S+1)] / 2`.
pub fn spin_rotation_expectation(n: u32, j: u32, spin: u32) -> f64 {
    let jj = f64::from(j) * f64::from(j + 1);
    let nn = f64::from(n) * f64::from(n + 1);
    let ss = f64::from(spin) * f64::from(spin + 1);
    0.5 * (jj - nn - ss)
}

fn parity(k: i64) -> f64 {
    if k.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `<N S J| (2λ/3)(3S_z'² - S²) |N' S J>` in GHz, z' along the internuclear axis.
///
/// The operator is `(2λ/3) √6 T²(C)·T²(S,S)`, reduced with a 6j symbol:
/// `(-1)^{N'+S+J} {J S N'; 2 N S} <N||C²||N'> <S||T²(S,S)||S>`.
pub fn spin_spin_element(n_row: u32, n_col: u32, j: u32, c: &MolecularConstants) -> f64 {
    let s = c.spin();
    let h = HalfIntegerJ::integer;
    let six_j = wigner_6j(h(j), h(s), h(n_col), h(2), h(n_row), h(s));
    if six_j == 0.0 {
        return 0.0;
    }
    let (nr, nc) = (f64::from(n_row), f64::from(n_col));
    let c2_reduced = parity(i64::from(n_row))
        * ((2.0 * nr + 1.0) * (2.0 * nc + 1.0)).sqrt()
        * wigner_3j(
            h(n_row),
            h(2),
            h(n_col),
            HalfInt::integer(0),
            HalfInt::integer(0),
            HalfInt::integer(0),
        );
    let sf = f64::from(s);
    let t2_reduced =
        ((2.0 * sf - 1.0) * 2.0 * sf * (2.0 * sf + 1.0) * (2.0 * sf + 2.0) * (2.0 * sf + 3.0))
            .sqrt()
            / (2.0 * 6f64.sqrt());
    let phase = parity(i64::from(n_col + s + j));
    2.0 * c.lambda_ss / 3.0 * 6f64.sqrt() * phase * six_j * c2_reduced * t2_reduced
}

/// Zero-field energies of the J components of one N manifold, relative to the
/// rigid-rotor energy of N.
#[derive(Debug, Clone, PartialEq)]
pub struct FineStructureTriplet {
    pub n: u32,
    /// `(J, E)` pairs in ascending J.
    pub e_by_j: Vec<(u32, f64)>,
}

impl FineStructureTriplet {
    pub fn energy(&self, j: u32) -> Option<f64> {
        self.e_by_j.iter().find(|(jj, _)| *jj == j).map(|(_, e)| *e)
    }

    pub fn j_values(&self) -> impl Iterator<Item = u32> + '_ {
        self.e_by_j.iter().map(|(j, _)| *j)
    }
}

/// J values allowed in manifold N for S = 1.
pub(crate) fn allowed_j(n: u32) -> Vec<u32> {
    if n == 0 {
        vec![1]
    } else {
        vec![n - 1, n, n + 1]
    }
}

fn fixed_n_diagonal(n: u32, j: u32, c: &MolecularConstants) -> f64 {
    c.gamma_sr * spin_rotation_expectation(n, j, c.spin()) + spin_spin_element(n, n, j, c)
}

/// Fine structure from the diagonal of `γ N·S + H_ss` inside the fixed-N block only.
pub fn fine_structure_energies_fixed_n(n: u32, c: &MolecularConstants) -> FineStructureTriplet {
    FineStructureTriplet {
        n,
        e_by_j: allowed_j(n)
            .into_iter()
            .map(|j| (j, fixed_n_diagonal(n, j, c)))
            .collect(),
    }
}

/// Fine structure including the ΔN = ±2 spin–spin coupling of the J = N ± 1 levels to the
/// same-J level of manifold N ± 2. Each such level is the eigenvalue of that 2x2 block
/// adiabatically connected to N; J = N has no partner and is unchanged.
pub fn fine_structure_energies(n: u32, c: &MolecularConstants) -> FineStructureTriplet {
    let e_by_j = allowed_j(n)
        .into_iter()
        .map(|j| {
            let own = fixed_n_diagonal(n, j, c);
            let partner = match j.cmp(&n) {
                std::cmp::Ordering::Greater => Some(n + 2),
                std::cmp::Ordering::Less if n >= 2 => Some(n - 2),
                _ => None,
            };
            let Some(np) = partner else {
                return (j, own);
            };
            let other =
                rigid_rotor_energy(np, c) - rigid_rotor_energy(n, c) + fixed_n_diagonal(np, j, c);
            let coupling = spin_spin_element(n, np, j, c);
            let half_gap = 0.5 * (own - other);
            let mean = 0.5 * (own + other);
            let root = (half_gap * half_gap + coupling * coupling).sqrt();
            (j, mean + half_gap.signum() * root)
        })
        .collect();
    FineStructureTriplet { n, e_by_j }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c() -> MolecularConstants {
        MolecularConstants::oxygen()
    }

    #[test]
    fn rigid_rotor_values() {
        assert_eq!(rigid_rotor_energy(0, &c()), 0.0);
        assert!((rigid_rotor_energy(1, &c()) - (2.0 * 43.1 - 4.0 * 1.45e-4)).abs() < 1e-12);
        let x = 71.0 * 72.0;
        let expected = 43.1 * x - 1.45e-4 * x * x;
        assert!((rigid_rotor_energy(71, &c()) - expected).abs() < 1e-9);
    }

    #[test]
    fn raman_shift_values() {
        let r0 = raman_shift(0, &c());
        assert!((r0 - (6.0 * 43.1 - 1.45e-4 * 36.0) / 1000.0).abs() < 1e-15);
        let mut prev = r0;
        for n in 1..=150 {
            let r = raman_shift(n, &c());
            assert!(r > prev, "not increasing at {n}");
            prev = r;
        }
    }

    #[test]
    fn spin_rotation_values() {
        assert_eq!(spin_rotation_expectation(59, 60, 1), 59.0);
        assert_eq!(spin_rotation_expectation(59, 59, 1), -1.0);
        assert_eq!(spin_rotation_expectation(59, 58, 1), -60.0);
    }

    #[test]
    fn spin_spin_diagonal_closed_forms() {
        let l = c().lambda_ss;
        for n in [1u32, 2, 5, 33, 59, 101] {
            let nf = f64::from(n);
            let up = spin_spin_element(n, n, n + 1, &c());
            let mid = spin_spin_element(n, n, n, &c());
            let down = spin_spin_element(n, n, n - 1, &c());
            assert!(
                (up + 2.0 * l / 3.0 * nf / (2.0 * nf + 3.0)).abs() < 1e-11,
                "N={n} up"
            );
            assert!((mid - 2.0 * l / 3.0).abs() < 1e-11, "N={n} mid");
            assert!(
                (down + 2.0 * l / 3.0 * (nf + 1.0) / (2.0 * nf - 1.0)).abs() < 1e-11,
                "N={n} down"
            );
        }
    }

    #[test]
    fn spin_spin_delta_n_two_coupling() {
        // |<N=J-1, J| H_ss |N=J+1, J>| = 2λ sqrt(J(J+1)) / (2J+1)
        let l = c().lambda_ss;
        for j in [1u32, 2, 10, 60] {
            let jf = f64::from(j);
            let v = spin_spin_element(j - 1, j + 1, j, &c());
            let expected = 2.0 * l * (jf * (jf + 1.0)).sqrt() / (2.0 * jf + 1.0);
            assert!(
                (v.abs() - expected).abs() < 1e-12,
                "J={j}: {v} vs {expected}"
            );
            assert!((v - spin_spin_element(j + 1, j - 1, j, &c())).abs() < 1e-12);
        }
    }

    #[test]
    fn n_one_line_at_118_ghz() {
        for fs in [
            fine_structure_energies(1, &c()),
            fine_structure_energies_fixed_n(1, &c()),
        ] {
            let gap = fs.energy(1).unwrap() - fs.energy(0).unwrap();
            assert!((gap - 118.75).abs() < 0.03 * 118.75, "{gap}");
        }
    }

    #[test]
    fn n_zero_has_single_level() {
        let fs = fine_structure_energies(0, &c());
        assert_eq!(fs.j_values().collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn fixed_n_model_overshoots_n3_lower_gap() {
        // Without the ΔN = ±2 mixing the N = 3, J = 2 gap exceeds the observed 62.5 GHz
        // line by ~8 GHz.
        let fs = fine_structure_energies_fixed_n(3, &c());
        let gap = fs.energy(3).unwrap() - fs.energy(2).unwrap();
        assert!(gap > 70.0);
        let mixed = fine_structure_energies(3, &c());
        let gap = mixed.energy(3).unwrap() - mixed.energy(2).unwrap();
        assert!((gap - 62.486).abs() < 1.0, "{gap}");
    }
}
