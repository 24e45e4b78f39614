//! Recipes that regenerate the data behind each published figure and test the figure's
//! qualitative claims against it.

use std::f64::consts::TAU;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use o2sim_core::angular_momentum::make_grid;
use o2sim_core::dynamics::{
    angular_distribution, angular_distribution_by_label, project_image, ViewAxis,
};
use o2sim_core::molecule::raman_shift;
use o2sim_core::observables::{
    alignment_moments, alignment_moments_of_packet, birefringence_signal, collisional_envelope,
    moment_tensor_of_field, principal_axis_tilt, DecayTable,
};
use o2sim_core::scan::{run_scan, ScanSpec};
use o2sim_core::{EvolutionMode, MomentMethod, PhaseConvention, ScanRow, SignalModel};

use crate::error::CliError;
use crate::output::{distribution_csv, real, scan_csv};

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, pass: bool, detail: String) -> Self {
        Self {
            name: name.to_string(),
            pass,
            detail,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FigureReport {
    pub figure: String,
    pub checks: Vec<Check>,
}

impl FigureReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn human_summary(&self) -> String {
        let mut s = format!("{}\n", self.figure);
        for c in &self.checks {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            writeln!(s, "  [{mark}] {}: {}", c.name, c.detail).expect("writing to a String");
        }
        s
    }
}

/// Report plus the files (name, contents) the recipe produced.
pub struct FigureRun {
    pub report: FigureReport,
    pub files: Vec<(String, Vec<u8>)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    Fig2,
    Fig3b,
    Fig3c,
    Fig4a,
    Fig4b,
}

impl Figure {
    pub const ALL: [Figure; 5] = [
        Figure::Fig2,
        Figure::Fig3b,
        Figure::Fig3c,
        Figure::Fig4a,
        Figure::Fig4b,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Figure::Fig2 => "fig2",
            Figure::Fig3b => "fig3b",
            Figure::Fig3c => "fig3c",
            Figure::Fig4a => "fig4a",
            Figure::Fig4b => "fig4b",
        }
    }

    pub fn from_id(id: &str) -> Result<Self, CliError> {
        Self::ALL.into_iter().find(|f| f.id() == id).ok_or_else(|| {
            let ids: Vec<&str> = Self::ALL.iter().map(|f| f.id()).collect();
            CliError::Usage(format!(
                "unknown figure '{id}'; valid ids: {}",
                ids.join(", ")
            ))
        })
    }
}

pub fn run(figure: Figure, model: &SignalModel, workers: usize) -> Result<FigureRun, CliError> {
    match figure {
        Figure::Fig2 => fig2(model, workers),
        Figure::Fig3b => fig3b(model),
        Figure::Fig3c => fig3c(model, workers),
        Figure::Fig4a => fig4a(model, workers),
        Figure::Fig4b => fig4b(model, workers),
    }
}

fn scan(
    model: &SignalModel,
    n_list: Vec<u32>,
    b_list: Vec<f64>,
    t_list_ps: Vec<u64>,
    theta_p_list: Vec<f64>,
    pressure_atm: f64,
    workers: usize,
) -> Result<Vec<ScanRow>, CliError> {
    let spec = ScanSpec {
        n_list,
        b_list,
        t_list_ps,
        theta_p_list,
        pressure_atm,
        model: model.clone(),
        grid: (128, 256),
        moments: MomentMethod::Coefficient,
    };
    Ok(run_scan(&spec, workers)?)
}

fn steps(start: f64, step: f64, count: usize) -> Vec<f64> {
    (0..count).map(|k| start + k as f64 * step).collect()
}

/// Raman reversal at N = 71, t = 1.14 ns, over 0 to 1 T.
fn fig2(model: &SignalModel, workers: usize) -> Result<FigureRun, CliError> {
    let rows = scan(
        model,
        vec![71],
        steps(0.0, 0.05, 21),
        vec![1140],
        vec![0.0],
        0.3,
        workers,
    )?;
    let mut checks = Vec::new();

    let w0 = rows[0].w_minus;
    checks.push(Check::new(
        "w_minus vanishes at B = 0",
        w0.abs() < 1e-12,
        format!("w_minus(0) = {w0:.3e}"),
    ));

    let drops: Vec<f64> = rows
        .windows(2)
        .map(|w| w[0].w_minus - w[1].w_minus)
        .filter(|d| *d > 1e-9)
        .collect();
    let last = rows.last().expect("non-empty scan");
    checks.push(Check::new(
        "w_minus grows with B over 0-1 T",
        drops.is_empty() && last.w_minus > w0,
        format!(
            "w_minus(1 T) = {:.4}, {} decreasing steps",
            last.w_minus,
            drops.len()
        ),
    ));

    let ratios: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| (r.b_tesla, r.w_minus / r.w_plus))
        .collect();
    let worst = ratios
        .iter()
        .cloned()
        .fold((0.0, 0.0), |a, b| if b.1 > a.1 { b } else { a });
    let held_until = ratios
        .iter()
        .take_while(|r| r.1 < 0.2)
        .last()
        .map(|r| r.0)
        .unwrap_or(f64::NAN);
    checks.push(Check::new(
        "w_minus/w_plus < 0.2 over 0-1 T",
        worst.1 < 0.2,
        format!(
            "max ratio {:.3} at B = {:.2} T; ratio stays below 0.2 up to {:.2} T",
            worst.1, worst.0, held_until
        ),
    ));

    let half = raman_shift(71, &model.constants) / 2.0;
    let rel = (half - 6.2).abs() / 6.2;
    checks.push(Check::new(
        "rotation frequency at N = 71 near 6.2 THz",
        rel < 0.05,
        format!(
            "raman_shift/2 = {half:.3} THz ({:.1}% from 6.2)",
            100.0 * rel
        ),
    ));

    Ok(FigureRun {
        report: FigureReport {
            figure: "fig2".into(),
            checks,
        },
        files: vec![("fig2_scan.csv".into(), scan_csv(&rows).into_bytes())],
    })
}

/// Axis distributions at N = 59, t = 0.9 ns for 0 and 0.32 T.
fn fig3b(model: &SignalModel) -> Result<FigureRun, CliError> {
    let (n, t, b) = (59u32, 0.9, 0.32);
    let grid = make_grid(256, 512)?;
    let mut checks = Vec::new();
    let mut files = Vec::new();

    let started = Instant::now();
    let spectrum = model.spectrum(n, b)?;
    let packet = model.packet(&spectrum, t)?;
    let field = angular_distribution(&packet, &grid)?;
    let moments = alignment_moments(&field)?;
    let parts = angular_distribution_by_label(&packet, &grid)?;
    let tilts: Vec<(u32, f64, f64)> = parts
        .iter()
        .map(|(j, part)| {
            (
                *j,
                part.integral(),
                principal_axis_tilt(&moment_tensor_of_field(part)),
            )
        })
        .collect();
    let elapsed = started.elapsed().as_secs_f64();

    let delta = birefringence_signal(&moments);
    checks.push(Check::new(
        "anisotropy along the field at 0.32 T",
        delta > 0.0,
        format!("cos2_z - cos2_y = {delta:.4}"),
    ));

    let estimate = TAU * model.constants.zeeman_ghz_per_tesla() * b * t / f64::from(n + 1);
    let (lo, mid, hi) = (tilts[0].2, tilts[1].2, tilts[2].2);
    checks.push(Check::new(
        "J = N-1 and J = N+1 disks tilt in opposite senses",
        lo * hi < 0.0,
        format!(
            "tilts {lo:+.3}, {mid:+.3}, {hi:+.3} rad for J = {}, {}, {}",
            n - 1,
            n,
            n + 1
        ),
    ));
    let within = |x: f64| x.abs() >= estimate / 2.0 && x.abs() <= estimate * 2.0;
    let sense = |x: f64| {
        if x > 0.0 {
            "counter-clockwise"
        } else {
            "clockwise"
        }
    };
    let convention = match model.convention {
        PhaseConvention::Literal => "exp(+iEt)",
        PhaseConvention::Physical => "exp(-iEt)",
    };
    checks.push(Check::new(
        "tilt magnitudes within a factor 2 of the Larmor estimate",
        within(lo) && within(hi),
        format!(
            "estimate {estimate:.3} rad; with {convention} J = N-1 turns {} and J = N+1 {} seen from +z",
            sense(lo),
            sense(hi)
        ),
    ));

    let other_mode = match model.mode {
        EvolutionMode::AdiabaticLabel => EvolutionMode::Exact,
        EvolutionMode::Exact => EvolutionMode::AdiabaticLabel,
    };
    let other = SignalModel {
        mode: other_mode,
        ..model.clone()
    };
    let other_delta =
        birefringence_signal(&alignment_moments_of_packet(&other.packet(&spectrum, t)?)?);
    let rel = (other_delta - delta).abs() / delta.abs();
    checks.push(Check::new(
        "adiabatic-label and exact evolution agree",
        rel < 0.05,
        format!("relative difference in anisotropy {rel:.2e}"),
    ));

    let zero_spectrum = model.spectrum(n, 0.0)?;
    let zero = angular_distribution(&model.packet(&zero_spectrum, t)?, &grid)?;
    let zm = alignment_moments(&zero)?;
    let disk: f64 = model_weights(model, n)
        .iter()
        .map(|(j, w)| w / f64::from(2 * j + 3))
        .sum();
    let disk_ok = (zm.cos2_x - disk).abs() < 1e-10 && birefringence_signal(&zm).abs() < 1e-10;
    checks.push(Check::new(
        "zero-field disk",
        disk_ok,
        format!(
            "cos2_x = {:.12} vs {disk:.12}, cos2_z - cos2_y = {:.1e}",
            zm.cos2_x,
            birefringence_signal(&zm)
        ),
    ));

    checks.push(Check::new(
        "256x512 evaluation under 5 s",
        elapsed < 5.0,
        format!("{elapsed:.2} s"),
    ));

    let mut table = String::from("j_label,weight,tilt_rad,larmor_estimate_rad\n");
    for (j, w, tilt) in &tilts {
        writeln!(table, "{j},{},{},{}", real(*w), real(*tilt), real(estimate))
            .expect("writing to a String");
    }
    files.push(("fig3b_tilts.csv".into(), table.into_bytes()));
    for (tag, f) in [("0T", &zero), ("0.32T", &field)] {
        files.push((
            format!("fig3b_distribution_{tag}.csv"),
            distribution_csv(f).into_bytes(),
        ));
        for axis in [ViewAxis::X, ViewAxis::Z] {
            files.push((
                format!("fig3b_{tag}_view_{axis}.pgm"),
                project_image(f, axis, 256).to_pgm(),
            ));
        }
    }
    Ok(FigureRun {
        report: FigureReport {
            figure: "fig3b".into(),
            checks,
        },
        files,
    })
}

fn model_weights(model: &SignalModel, n: u32) -> Vec<(u32, f64)> {
    o2sim_core::dynamics::centrifuge_packet(n, model.weighting)
        .map(|p| {
            p.components
                .iter()
                .map(|c| (c.initial_j, c.weight))
                .collect()
        })
        .unwrap_or_default()
}

/// Least-squares `a + b cos²θ`; returns `(a, b, max |residual|)`.
pub fn fit_cos2(thetas: &[f64], values: &[f64]) -> (f64, f64, f64) {
    let n = thetas.len() as f64;
    let xs: Vec<f64> = thetas.iter().map(|t| t.cos().powi(2)).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = values.iter().sum::<f64>() / n;
    let sxy: f64 = xs
        .iter()
        .zip(values)
        .map(|(x, y)| (x - mx) * (y - my))
        .sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let b = sxy / sxx;
    let a = my - b * mx;
    let worst = xs
        .iter()
        .zip(values)
        .map(|(x, y)| (y - a - b * x).abs())
        .fold(0.0, f64::max);
    (a, b, worst)
}

/// Probe-angle dependence at N = 95, B = 2 T, t = 1.5 ns.
fn fig3c(model: &SignalModel, workers: usize) -> Result<FigureRun, CliError> {
    let thetas: Vec<f64> = (0..=36).map(|k| f64::from(5 * k).to_radians()).collect();
    let rows = scan(
        model,
        vec![95],
        vec![2.0],
        vec![1500],
        thetas.clone(),
        0.0,
        workers,
    )?;
    let values: Vec<f64> = rows.iter().map(|r| r.probe_signal).collect();
    let (a, b, worst) = fit_cos2(&thetas, &values);
    let rel = worst / b.abs();
    let checks = vec![
        Check::new(
            "probe signal follows a + b cos^2(theta_p)",
            rel < 0.05,
            format!(
                "a = {a:.4}, b = {b:.4}, max residual {:.2}% of b",
                100.0 * rel
            ),
        ),
        Check::new(
            "anisotropy axis along the field",
            b > 0.0,
            format!("b = {b:.4}"),
        ),
    ];
    Ok(FigureRun {
        report: FigureReport {
            figure: "fig3c".into(),
            checks,
        },
        files: vec![("fig3c_scan.csv".into(), scan_csv(&rows).into_bytes())],
    })
}

/// Time of the maximum of `signal` along consecutive rows.
fn argmax_time(rows: &[ScanRow], signal: impl Fn(&ScanRow) -> f64) -> f64 {
    rows.iter()
        .fold((f64::NAN, f64::NEG_INFINITY), |best, r| {
            let v = signal(r);
            if v > best.1 {
                (r.t_ns, v)
            } else {
                best
            }
        })
        .0
}

/// Time dependence at B = 2 T and 0.3 atm for N = 13, 33, 73, 99.
fn fig4a(model: &SignalModel, workers: usize) -> Result<FigureRun, CliError> {
    let ns = vec![13u32, 33, 73, 99];
    let times: Vec<u64> = (0..=400).map(|k| 10 * k).collect();
    let rows = scan(
        model,
        ns.clone(),
        vec![2.0],
        times.clone(),
        vec![0.0],
        0.3,
        workers,
    )?;
    let per_n: Vec<&[ScanRow]> = rows.chunks(times.len()).collect();
    let peaks: Vec<f64> = per_n
        .iter()
        .map(|r| argmax_time(r, |x| x.observed_signal))
        .collect();
    let mut checks = Vec::new();

    let listing: Vec<String> = ns
        .iter()
        .zip(&peaks)
        .map(|(n, t)| format!("N={n}: {t:.2} ns"))
        .collect();
    checks.push(Check::new(
        "signal maximum later for N = 73 than N = 33",
        peaks[1] < peaks[2],
        format!("peak times {}", listing.join(", ")),
    ));

    let start = per_n
        .iter()
        .map(|r| r[0].observed_signal.abs())
        .fold(0.0, f64::max);
    checks.push(Check::new(
        "no signal at t = 0",
        start < 1e-12,
        format!("max |signal(0)| = {start:.1e}"),
    ));

    let table = &model.decay;
    let worst = DecayTable::oxygen()
        .entries()
        .iter()
        .map(|&(n, tau)| {
            let e = collisional_envelope(n, 1.0, tau / 1000.0, table).unwrap_or(f64::NAN);
            (e - (-1.0f64).exp()).abs()
        })
        .fold(0.0, f64::max);
    checks.push(Check::new(
        "envelope e-fold times match the lifetime table",
        worst < 1e-12,
        format!("max |envelope(tau) - 1/e| = {worst:.1e} at N = 13, 33, 73, 99"),
    ));

    Ok(FigureRun {
        report: FigureReport {
            figure: "fig4a".into(),
            checks,
        },
        files: vec![("fig4a_scan.csv".into(), scan_csv(&rows).into_bytes())],
    })
}

/// First field at which `values` reaches `fraction` of its maximum.
fn field_at_fraction(fields: &[f64], values: &[f64], fraction: f64) -> f64 {
    let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    fields
        .iter()
        .zip(values)
        .find(|(_, v)| **v >= fraction * max)
        .map(|(b, _)| *b)
        .unwrap_or(f64::NAN)
}

/// Field dependence at t = 1 ns without collisions for N = 33 and 95.
fn fig4b(model: &SignalModel, workers: usize) -> Result<FigureRun, CliError> {
    let fields = steps(0.0, 0.05, 81);
    let rows = scan(
        model,
        vec![33, 95],
        fields.clone(),
        vec![1000],
        vec![0.0],
        0.0,
        workers,
    )?;
    let per_n: Vec<&[ScanRow]> = rows.chunks(fields.len()).collect();
    let curves: Vec<Vec<f64>> = per_n
        .iter()
        .map(|r| r.iter().map(|x| x.birefringence).collect())
        .collect();
    let b80: Vec<f64> = curves
        .iter()
        .map(|c| field_at_fraction(&fields, c, 0.8))
        .collect();
    let mut checks = Vec::new();
    checks.push(Check::new(
        "N = 33 reaches 80% of its plateau at a weaker field than N = 95",
        b80[0] < b80[1],
        format!(
            "B(80%) = {:.2} T for N = 33, {:.2} T for N = 95",
            b80[0], b80[1]
        ),
    ));
    let at_zero = curves.iter().map(|c| c[0].abs()).fold(0.0, f64::max);
    checks.push(Check::new(
        "no anisotropy at B = 0",
        at_zero < 1e-12,
        format!("max |signal(B=0)| = {at_zero:.1e}"),
    ));
    let rising = curves.iter().all(|c| {
        let peak = c
            .windows(2)
            .position(|w| w[1] < w[0])
            .unwrap_or(c.len() - 1);
        c[..=peak].windows(2).all(|w| w[1] >= w[0])
    });
    let first_peaks: Vec<String> = curves
        .iter()
        .map(|c| {
            let k = c
                .windows(2)
                .position(|w| w[1] < w[0])
                .unwrap_or(c.len() - 1);
            format!("{:.2} T", fields[k])
        })
        .collect();
    checks.push(Check::new(
        "initial rise is monotone",
        rising && curves.iter().all(|c| c[1] > c[0]),
        format!("first local maxima at {}", first_peaks.join(" and ")),
    ));
    Ok(FigureRun {
        report: FigureReport {
            figure: "fig4b".into(),
            checks,
        },
        files: vec![("fig4b_scan.csv".into(), scan_csv(&rows).into_bytes())],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn cos2_fit_recovers_exact_curve() {
        let th: Vec<f64> = (0..20).map(|k| k as f64 * PI / 19.0).collect();
        let v: Vec<f64> = th.iter().map(|t| 0.3 - 1.5 * t.cos().powi(2)).collect();
        let (a, b, r) = fit_cos2(&th, &v);
        assert!((a - 0.3).abs() < 1e-12 && (b + 1.5).abs() < 1e-12 && r < 1e-12);
    }

    #[test]
    fn figure_ids() {
        for f in Figure::ALL {
            assert_eq!(Figure::from_id(f.id()).unwrap(), f);
        }
        let err = Figure::from_id("fig9").unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("fig3c"));
    }
}
