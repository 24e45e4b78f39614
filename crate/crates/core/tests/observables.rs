//! Alignment moments, probe projection, precession and Raman directionality.

use num_complex::Complex64;
use o2sim_core::angular_momentum::{make_grid, stretched_rotation_column};
use o2sim_core::dynamics::*;
use o2sim_core::molecule::{manifold_spectrum, MolecularConstants};
use o2sim_core::observables::*;
use o2sim_core::Error;

fn evolved(n: u32, b: f64, t: f64, mode: EvolutionMode) -> RotationalWavePacket {
    let spectrum = manifold_spectrum(n, b, &MolecularConstants::oxygen()).unwrap();
    let p0 = centrifuge_packet(n, ComponentWeighting::Equal).unwrap();
    evolve(&p0, t, &spectrum, mode, PhaseConvention::default()).unwrap()
}

/// Diagonal-in-M closed form for `<cos²θ_z>`; `cos²θ_z` only couples equal M within
/// a J, and the distribution carries no cross-J interference.
fn cos2_z_closed_form(p: &RotationalWavePacket) -> f64 {
    let mut total = 0.0;
    for comp in &p.components {
        for (&j, amps) in p.j_labels.iter().zip(&comp.amplitudes) {
            let jf = f64::from(j);
            for (k, c) in amps.iter().enumerate() {
                let m = k as f64 - jf;
                let diag = if j == 0 {
                    1.0 / 3.0
                } else {
                    1.0 / 3.0
                        + 2.0 / 3.0 * (jf * (jf + 1.0) - 3.0 * m * m)
                            / ((2.0 * jf - 1.0) * (2.0 * jf + 3.0))
                };
                total += comp.weight * c.norm_sqr() * diag;
            }
        }
    }
    total
}

#[test]
fn quadrature_and_coefficient_paths_agree() {
    let cases = [
        (5, 0.0, 0.0),
        (5, 3.0, 0.7),
        (20, 1.0, 1.3),
        (59, 0.32, 0.9),
        (71, 1.0, 1.14),
        (95, 2.0, 1.5),
    ];
    for (n, b, t) in cases {
        for mode in [EvolutionMode::AdiabaticLabel, EvolutionMode::Exact] {
            let p = evolved(n, b, t, mode);
            let n_theta = (n as usize + 2).next_power_of_two();
            let field =
                angular_distribution(&p, &make_grid(n_theta, 2 * n_theta).unwrap()).unwrap();
            let quad = moment_tensor_of_field(&field);
            let coeff = moment_tensor(&p);
            for a in 0..3 {
                for c in 0..3 {
                    assert!(
                        (quad[a][c] - coeff[a][c]).abs() < 1e-10,
                        "N={n} B={b} {mode:?} [{a}][{c}]"
                    );
                }
            }
            assert!(
                (quad[2][2] - cos2_z_closed_form(&p)).abs() < 1e-10,
                "N={n} B={b} {mode:?}"
            );
            let m = alignment_moments(&field).unwrap();
            assert!((m.trace() - 1.0).abs() < 1e-10);
            for v in [m.cos2_x, m.cos2_y, m.cos2_z] {
                assert!((0.0..=1.0).contains(&v));
            }
        }
    }
}

#[test]
fn isotropic_field_moments() {
    let grid = make_grid(8, 16).unwrap();
    let field = DistributionField {
        values: vec![1.0 / (4.0 * std::f64::consts::PI); grid.len()],
        grid,
        max_j: 0,
    };
    let m = alignment_moments(&field).unwrap();
    let iso = AlignmentMoments::ISOTROPIC;
    for (a, b) in [
        (m.cos2_x, iso.cos2_x),
        (m.cos2_y, iso.cos2_y),
        (m.cos2_z, iso.cos2_z),
        (m.cross_yz, 0.0),
    ] {
        assert!((a - b).abs() < 1e-14);
    }
}

#[test]
fn unnormalized_inputs_are_rejected() {
    let grid = make_grid(8, 16).unwrap();
    let field = DistributionField {
        values: vec![1.0; grid.len()],
        grid,
        max_j: 0,
    };
    assert!(matches!(
        alignment_moments(&field),
        Err(Error::NotNormalized(_))
    ));
    let mut p = centrifuge_packet(10, ComponentWeighting::Equal).unwrap();
    p.components[0].amplitudes[0][0] += Complex64::new(0.5, 0.0);
    assert!(alignment_moments_of_packet(&p).is_err());
}

#[test]
fn zero_field_planar_disk() {
    for weighting in [ComponentWeighting::Equal, ComponentWeighting::Degeneracy] {
        let p = centrifuge_packet(59, weighting).unwrap();
        let m = alignment_moments_of_packet(&p).unwrap();
        let expected: f64 = p
            .components
            .iter()
            .map(|c| c.weight / f64::from(2 * c.initial_j + 3))
            .sum();
        assert!((m.cos2_x - expected).abs() < 1e-12);
        assert!((m.cos2_y - (1.0 - expected) / 2.0).abs() < 1e-12);
        assert!(birefringence_signal(&m).abs() < 1e-12);
    }
}

#[test]
fn birefringence_sign_in_weak_field() {
    let m = alignment_moments_of_packet(&evolved(59, 0.32, 0.9, EvolutionMode::AdiabaticLabel))
        .unwrap();
    let d = birefringence_signal(&m);
    assert!(d > 0.0 && d <= 1.0, "{d}");
}

#[test]
fn probe_projection_is_a_second_degree_trig_polynomial() {
    let m =
        alignment_moments_of_packet(&evolved(95, 2.0, 1.5, EvolutionMode::AdiabaticLabel)).unwrap();
    let thetas: Vec<f64> = (0..24)
        .map(|k| k as f64 * std::f64::consts::PI / 12.0)
        .collect();
    let ys: Vec<f64> = thetas.iter().map(|&t| probe_projection(&m, t)).collect();
    // Least squares on {1, cos 2θ, sin 2θ}; the basis is orthogonal on this uniform grid.
    let n = thetas.len() as f64;
    let a0: f64 = ys.iter().sum::<f64>() / n;
    let a1: f64 = thetas
        .iter()
        .zip(&ys)
        .map(|(t, y)| y * (2.0 * t).cos())
        .sum::<f64>()
        * 2.0
        / n;
    let a2: f64 = thetas
        .iter()
        .zip(&ys)
        .map(|(t, y)| y * (2.0 * t).sin())
        .sum::<f64>()
        * 2.0
        / n;
    for (t, y) in thetas.iter().zip(&ys) {
        let fit = a0 + a1 * (2.0 * t).cos() + a2 * (2.0 * t).sin();
        assert!((fit - y).abs() < 1e-12);
    }
    assert!((a2 - m.cross_yz).abs() < 1e-12);
    assert!((probe_projection(&m, 0.0) - (m.cos2_z - 0.5)).abs() < 1e-15);
}

#[test]
fn precession_rates_follow_first_order_zeeman() {
    let c = MolecularConstants::oxygen();
    let (n, b, t) = (59u32, 0.32, 0.05);
    let p = evolved(n, b, t, EvolutionMode::AdiabaticLabel);
    let nf = f64::from(n);
    let omega = 2.0 * std::f64::consts::PI * c.zeeman_ghz_per_tesla() * b * t;
    let v: Vec<(u32, [f64; 3])> = angular_momentum_vector(&p);
    let angle = |j: u32| {
        let (_, x) = v.iter().find(|(k, _)| *k == j).unwrap();
        x[1].atan2(x[0])
    };
    let (lo, mid, hi) = (angle(n - 1), angle(n), angle(n + 1));
    assert!(lo * hi < 0.0, "opposite senses: {lo} {hi}");
    assert!((lo.abs() / (omega / nf) - 1.0).abs() < 0.05, "J=N-1: {lo}");
    assert!(
        (hi.abs() / (omega / (nf + 1.0)) - 1.0).abs() < 0.05,
        "J=N+1: {hi}"
    );
    assert!(mid.abs() * 50.0 < lo.abs().min(hi.abs()), "J=N: {mid}");
}

#[test]
fn angular_momentum_is_static_without_field() {
    let p = evolved(33, 0.0, 2.0, EvolutionMode::Exact);
    for (j, v) in angular_momentum_vector(&p) {
        assert!((v[0] - f64::from(j)).abs() < 1e-10 && v[1].abs() < 1e-10 && v[2].abs() < 1e-10);
    }
}

#[test]
fn precession_is_odd_in_field() {
    for mode in [EvolutionMode::AdiabaticLabel, EvolutionMode::Exact] {
        let plus = angular_momentum_vector(&evolved(40, 0.9, 0.6, mode));
        let minus = angular_momentum_vector(&evolved(40, -0.9, 0.6, mode));
        for ((_, a), (_, b)) in plus.iter().zip(&minus) {
            assert!((a[1] + b[1]).abs() < 1e-10);
            assert!((a[0] - b[0]).abs() < 1e-10);
        }
    }
}

#[test]
fn raman_weights_of_stationary_packets() {
    let p = centrifuge_packet(71, ComponentWeighting::Equal).unwrap();
    let w = raman_weights(&p);
    assert!((w.w_plus - 1.0).abs() < 1e-12 && w.w_minus < 1e-12 && w.w_zero < 1e-12);
    let w = raman_weights(&evolved(71, 0.0, 1.14, EvolutionMode::AdiabaticLabel));
    assert!(w.w_minus < 1e-12);
}

#[test]
fn raman_weights_sum_to_one_and_ignore_global_phases() {
    let mut p = evolved(71, 0.6, 1.14, EvolutionMode::Exact);
    let w = raman_weights(&p);
    assert!((w.w_plus + w.w_zero + w.w_minus - 1.0).abs() < 1e-12);
    let phase = Complex64::from_polar(1.0, 2.1);
    for a in p.components[1].amplitudes.iter_mut().flatten() {
        *a *= phase;
    }
    let v = raman_weights(&p);
    assert!((v.w_minus - w.w_minus).abs() < 1e-13 && (v.w_plus - w.w_plus).abs() < 1e-13);
}

/// A stretched state rotated about z by `alpha` has x-frame populations
/// `|d^J_{M',J}(alpha)|²`, from the closed binomial form.
#[test]
fn raman_weights_of_rotated_stretched_state() {
    let j = 12u32;
    let c = stretched_rotation_column(j, std::f64::consts::FRAC_PI_2);
    for alpha in [0.3, 1.2, 2.0, 2.9] {
        let amps: Vec<Complex64> = c
            .iter()
            .enumerate()
            .map(|(k, &x)| x * Complex64::from_polar(1.0, -(k as f64 - f64::from(j)) * alpha))
            .collect();
        let empty = |label: u32| vec![Complex64::new(0.0, 0.0); 2 * label as usize + 1];
        let p = RotationalWavePacket {
            n: j - 1,
            j_labels: vec![j - 2, j - 1, j],
            components: vec![PacketComponent {
                initial_j: j,
                weight: 1.0,
                amplitudes: vec![empty(j - 2), empty(j - 1), amps],
            }],
            time_ns: 0.0,
            b_field: 0.0,
            mode: None,
        };
        let oracle = stretched_rotation_column(j, alpha);
        let minus: f64 = oracle[..j as usize].iter().map(|x| x * x).sum();
        let w = raman_weights(&p);
        assert!(
            (w.w_minus - minus).abs() < 1e-12,
            "alpha={alpha}: {} vs {minus}",
            w.w_minus
        );
        assert!((w.w_zero - oracle[j as usize].powi(2)).abs() < 1e-12);
    }
}

#[test]
fn collisional_envelope_table() {
    let t = DecayTable::oxygen();
    for (n, tau) in [(13, 85.0), (33, 290.0), (73, 660.0), (99, 610.0)] {
        let e = collisional_envelope(n, 1.0, tau / 1000.0, &t).unwrap();
        assert!((e - (-1.0f64).exp()).abs() < 1e-12);
    }
    assert_eq!(t.lifetime_ps_atm(53), 475.0);
    assert_eq!(collisional_envelope(53, 0.0, 5.0, &t).unwrap(), 1.0);
}

#[test]
fn observed_signal_vanishes_at_zero_time_and_field() {
    let model = SignalModel::default();
    assert!(observed_signal(33, 2.0, 0.0, 0.3, &model).unwrap().abs() < 1e-12);
    assert!(observed_signal(33, 0.0, 1.0, 0.3, &model).unwrap().abs() < 1e-12);
    let far = observed_signal(33, 2.0, 1.0, 0.3, &model).unwrap();
    let near = observed_signal(33, 2.0, 1.0, 0.0, &model).unwrap();
    let env = collisional_envelope(33, 0.3, 1.0, &model.decay).unwrap();
    assert!((far - near * env).abs() < 1e-14);
}

#[test]
fn per_label_tilts_are_opposite_in_weak_field() {
    let p = evolved(59, 0.32, 0.9, EvolutionMode::AdiabaticLabel);
    let tilts: Vec<(u32, f64)> = moment_tensor_by_label(&p)
        .iter()
        .map(|(j, t)| (*j, principal_axis_tilt(t)))
        .collect();
    assert!(tilts[0].1 * tilts[2].1 < 0.0, "{tilts:?}");
    assert!(tilts[1].1.abs() < 0.05, "{tilts:?}");
}
