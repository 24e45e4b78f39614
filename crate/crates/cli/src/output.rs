//! CSV formatting and file output.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use o2sim_core::{DistributionField, ScanRow};

use crate::error::CliError;

/// Shortest-width scientific notation that still round-trips: 17 significant digits.
pub fn real(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn scan_csv(rows: &[ScanRow]) -> String {
    let mut out = ScanRow::COLUMNS.join(",");
    out.push('\n');
    for row in rows {
        write!(out, "{}", row.n).expect("writing to a String");
        for v in row.values() {
            out.push(',');
            out.push_str(&real(v));
        }
        out.push('\n');
    }
    out
}

/// Sphere map with one `theta,phi,rho` line per grid point, θ-major.
pub fn distribution_csv(field: &DistributionField) -> String {
    let grid = &field.grid;
    let mut csv = String::with_capacity(grid.len() * 72);
    csv.push_str("theta,phi,rho\n");
    for i in 0..grid.n_theta() {
        let theta = real(grid.theta_nodes[i]);
        for k in 0..grid.phi_count {
            writeln!(
                csv,
                "{theta},{},{}",
                real(grid.phi(k)),
                real(field.value(i, k))
            )
            .expect("writing to a String");
        }
    }
    csv
}

/// Writes to `path`, or to standard output when no path is given.
pub fn emit(path: Option<&Path>, bytes: &[u8]) -> Result<(), CliError> {
    match path {
        Some(p) => write_file(p, bytes),
        None => std::io::stdout()
            .lock()
            .write_all(bytes)
            .map_err(|e| CliError::Io(format!("stdout: {e}"))),
    }
}

pub fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    std::fs::write(path, bytes).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}
