//! Cartesian parameter scans over `(N, B, t, θ_p)` with a fixed pressure.
//!
//! Rows come out in input order (N outermost, then B, t, θ_p) whatever the number of
//! worker threads, and every row is computed from scratch from its own tuple, so the
//! output is bit-for-bit independent of the parallel schedule.

use rayon::prelude::*;

use crate::angular_momentum::make_grid;
use crate::dynamics::angular_distribution;
use crate::error::{Error, Result};
use crate::molecule::manifold_spectra;
use crate::observables::{
    alignment_moments, alignment_moments_of_packet, birefringence_signal, collisional_envelope,
    probe_projection, raman_weights, SignalModel,
};

/// How alignment moments are obtained for each scan tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MomentMethod {
    /// Closed-form rank-2 matrix elements over the amplitudes.
    #[default]
    Coefficient,
    /// Quadrature over the angular distribution on the scan grid.
    Quadrature,
}

#[derive(Debug, Clone)]
pub struct ScanSpec {
    pub n_list: Vec<u32>,
    pub b_list: Vec<f64>,
    /// Probe delays in whole picoseconds.
    pub t_list_ps: Vec<u64>,
    pub theta_p_list: Vec<f64>,
    pub pressure_atm: f64,
    pub model: SignalModel,
    /// `(n_theta, n_phi)`.
    pub grid: (usize, usize),
    pub moments: MomentMethod,
}

impl ScanSpec {
    pub fn validate(&self) -> Result<()> {
        let empty = [
            ("N", self.n_list.is_empty()),
            ("B", self.b_list.is_empty()),
            ("t", self.t_list_ps.is_empty()),
            ("theta_p", self.theta_p_list.is_empty()),
        ];
        if let Some((name, _)) = empty.iter().find(|e| e.1) {
            return Err(Error::InvalidParameter(format!(
                "scan list for {name} is empty"
            )));
        }
        if self.n_list.contains(&0) {
            return Err(Error::InvalidQuantumNumber("scan needs N >= 1".into()));
        }
        if self
            .b_list
            .iter()
            .chain(&self.theta_p_list)
            .any(|v| !v.is_finite())
        {
            return Err(Error::InvalidParameter("scan values must be finite".into()));
        }
        if !(self.pressure_atm.is_finite() && self.pressure_atm >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "pressure {} atm",
                self.pressure_atm
            )));
        }
        let max_n = *self.n_list.iter().max().expect("non-empty");
        let grid = make_grid(self.grid.0, self.grid.1)?;
        grid.ensure_degree(2 * (max_n as usize + 1))?;
        Ok(())
    }

    pub fn row_count(&self) -> usize {
        self.n_list.len() * self.b_list.len() * self.t_list_ps.len() * self.theta_p_list.len()
    }
}

/// One output line; field order is the CSV column order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRow {
    pub n: u32,
    pub b_tesla: f64,
    pub t_ns: f64,
    pub theta_p: f64,
    pub pressure_atm: f64,
    pub cos2_x: f64,
    pub cos2_y: f64,
    pub cos2_z: f64,
    pub cross_yz: f64,
    pub birefringence: f64,
    pub probe_signal: f64,
    pub w_plus: f64,
    pub w_minus: f64,
    pub envelope: f64,
    pub observed_signal: f64,
}

impl ScanRow {
    pub const COLUMNS: [&'static str; 15] = [
        "n",
        "b_tesla",
        "t_ns",
        "theta_p",
        "pressure_atm",
        "cos2_x",
        "cos2_y",
        "cos2_z",
        "cross_yz",
        "birefringence",
        "probe_signal",
        "w_plus",
        "w_minus",
        "envelope",
        "observed_signal",
    ];

    /// The real-valued columns after `n`, in column order.
    pub fn values(&self) -> [f64; 14] {
        [
            self.b_tesla,
            self.t_ns,
            self.theta_p,
            self.pressure_atm,
            self.cos2_x,
            self.cos2_y,
            self.cos2_z,
            self.cross_yz,
            self.birefringence,
            self.probe_signal,
            self.w_plus,
            self.w_minus,
            self.envelope,
            self.observed_signal,
        ]
    }
}

pub fn ps_to_ns(ps: u64) -> f64 {
    ps as f64 / 1000.0
}

/// Evaluates every tuple of `spec` on a pool of `workers` threads (0 lets rayon choose).
pub fn run_scan(spec: &ScanSpec, workers: usize) -> Result<Vec<ScanRow>> {
    spec.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot start worker pool: {e}")))?;
    pool.install(|| scan_rows(spec))
}

fn scan_rows(spec: &ScanSpec) -> Result<Vec<ScanRow>> {
    let model = &spec.model;
    let grid = make_grid(spec.grid.0, spec.grid.1)?;
    let spectra = spec
        .n_list
        .par_iter()
        .map(|&n| manifold_spectra(n, &spec.b_list, &model.constants))
        .collect::<Result<Vec<_>>>()?;

    let tuples: Vec<(usize, usize, u64)> = (0..spec.n_list.len())
        .flat_map(|ni| {
            (0..spec.b_list.len())
                .flat_map(move |bi| spec.t_list_ps.iter().map(move |&t| (ni, bi, t)))
        })
        .collect();

    let blocks = tuples
        .par_iter()
        .map(|&(ni, bi, t_ps)| {
            let spectrum = &spectra[ni][bi];
            let t_ns = ps_to_ns(t_ps);
            let packet = model.packet(spectrum, t_ns)?;
            let moments = match spec.moments {
                MomentMethod::Coefficient => alignment_moments_of_packet(&packet)?,
                MomentMethod::Quadrature => {
                    alignment_moments(&angular_distribution(&packet, &grid)?)?
                }
            };
            let birefringence = birefringence_signal(&moments);
            let raman = raman_weights(&packet);
            let envelope = collisional_envelope(spectrum.n, spec.pressure_atm, t_ns, &model.decay)?;
            Ok(spec
                .theta_p_list
                .iter()
                .map(|&theta_p| ScanRow {
                    n: spectrum.n,
                    b_tesla: spectrum.b_field,
                    t_ns,
                    theta_p,
                    pressure_atm: spec.pressure_atm,
                    cos2_x: moments.cos2_x,
                    cos2_y: moments.cos2_y,
                    cos2_z: moments.cos2_z,
                    cross_yz: moments.cross_yz,
                    birefringence,
                    probe_signal: probe_projection(&moments, theta_p),
                    w_plus: raman.w_plus,
                    w_minus: raman.w_minus,
                    envelope,
                    observed_signal: birefringence * envelope,
                })
                .collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(blocks.into_iter().flatten().collect())
}
