use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use o2sim_core::angular_momentum::{make_grid, wigner_6j, wigner_d_column, HalfInt, HalfIntegerJ};
use o2sim_core::dynamics::{angular_distribution, centrifuge_packet, evolve, ComponentWeighting};
use o2sim_core::molecule::manifold_spectrum;
use o2sim_core::observables::{moment_tensor, raman_weights};
use o2sim_core::scan::{run_scan, ScanSpec};
use o2sim_core::{EvolutionMode, MolecularConstants, MomentMethod, PhaseConvention, SignalModel};

fn angular_algebra(c: &mut Criterion) {
    let mut group = c.benchmark_group("angular_algebra");
    for j in [10u32, 59, 101] {
        group.bench_with_input(BenchmarkId::new("wigner_d_column", j), &j, |b, &j| {
            b.iter(|| {
                wigner_d_column(
                    HalfIntegerJ::integer(j),
                    HalfInt::integer(j as i32),
                    black_box(1.1),
                )
            })
        });
    }
    let h = HalfIntegerJ::integer;
    group.bench_function("wigner_6j_n59", |b| {
        b.iter(|| wigner_6j(h(1), h(60), h(59), h(black_box(59)), h(1), h(1)))
    });
    group.finish();
}

fn spectra(c: &mut Criterion) {
    let constants = MolecularConstants::oxygen();
    let mut group = c.benchmark_group("manifold_spectrum");
    for (n, b_field) in [(13u32, 2.0), (59, 0.32), (95, 4.0)] {
        group.bench_with_input(
            BenchmarkId::new(format!("N{n}"), b_field),
            &(n, b_field),
            |b, &(n, field)| b.iter(|| manifold_spectrum(n, black_box(field), &constants).unwrap()),
        );
    }
    group.finish();
}

fn observables(c: &mut Criterion) {
    let constants = MolecularConstants::oxygen();
    let spectrum = manifold_spectrum(59, 0.32, &constants).unwrap();
    let p0 = centrifuge_packet(59, ComponentWeighting::Equal).unwrap();
    let packet = evolve(
        &p0,
        0.9,
        &spectrum,
        EvolutionMode::AdiabaticLabel,
        PhaseConvention::default(),
    )
    .unwrap();

    let mut group = c.benchmark_group("observables_n59");
    group.bench_function("evolve_exact", |b| {
        b.iter(|| {
            evolve(
                &p0,
                black_box(0.9),
                &spectrum,
                EvolutionMode::Exact,
                PhaseConvention::default(),
            )
            .unwrap()
        })
    });
    group.bench_function("moment_tensor", |b| {
        b.iter(|| moment_tensor(black_box(&packet)))
    });
    group.bench_function("raman_weights", |b| {
        b.iter(|| raman_weights(black_box(&packet)))
    });
    for (n_theta, n_phi) in [(128usize, 256usize), (256, 512)] {
        let grid = make_grid(n_theta, n_phi).unwrap();
        group.bench_with_input(
            BenchmarkId::new("angular_distribution", format!("{n_theta}x{n_phi}")),
            &grid,
            |b, grid| b.iter(|| angular_distribution(&packet, grid).unwrap()),
        );
    }
    group.finish();
}

fn scan(c: &mut Criterion) {
    let spec = ScanSpec {
        n_list: vec![33, 95],
        b_list: (0..=20).map(|k| 0.2 * f64::from(k)).collect(),
        t_list_ps: vec![1000],
        theta_p_list: vec![0.0],
        pressure_atm: 0.0,
        model: SignalModel::default(),
        grid: (128, 256),
        moments: MomentMethod::Coefficient,
    };
    let mut group = c.benchmark_group("scan");
    group.sample_size(10);
    group.bench_function("field_sweep_42_rows", |b| {
        b.iter(|| run_scan(&spec, 0).unwrap())
    });
    group.finish();
}

criterion_group!(benches, angular_algebra, spectra, observables, scan);
criterion_main!(benches);
