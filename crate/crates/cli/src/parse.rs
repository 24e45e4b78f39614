//! Flag value syntax: lists, inclusive ranges, angles, grids and image targets.

use std::path::PathBuf;

use o2sim_core::ViewAxis;

use crate::error::CliError;

fn number(text: &str, what: &str) -> Result<f64, CliError> {
    let v: f64 = text
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("cannot parse {what} value '{text}'")))?;
    if !v.is_finite() {
        return Err(CliError::Usage(format!(
            "{what} value '{text}' is not finite"
        )));
    }
    Ok(v)
}

/// `start:stop:step` (stop included when hit within rounding), `a,b,c`, or a single
/// value. Range values are `start + k * step`, never accumulated.
pub fn real_list(text: &str, what: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = text.split(':').collect();
    match parts.as_slice() {
        [start, stop, step] => {
            let (start, stop, step) = (
                number(start, what)?,
                number(stop, what)?,
                number(step, what)?,
            );
            if step.is_nan() || step <= 0.0 {
                return Err(CliError::Usage(format!(
                    "{what} range step must be positive"
                )));
            }
            if stop < start {
                return Err(CliError::Usage(format!("{what} range stop is below start")));
            }
            let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
            Ok((0..count).map(|k| start + k as f64 * step).collect())
        }
        [single] => single
            .split(',')
            .map(|v| number(v, what))
            .collect::<Result<Vec<_>, _>>(),
        _ => Err(CliError::Usage(format!(
            "malformed {what} range '{text}', expected start:stop:step"
        ))),
    }
}

pub fn n_list(text: &str) -> Result<Vec<u32>, CliError> {
    real_list(text, "N")?
        .into_iter()
        .map(|v| {
            if v >= 1.0 && v.fract() == 0.0 && v <= f64::from(u32::MAX) {
                Ok(v as u32)
            } else {
                Err(CliError::Usage(format!(
                    "N must be a positive integer, got {v}"
                )))
            }
        })
        .collect()
}

/// Times in ns resolved to whole picoseconds.
pub fn time_list_ps(text: &str) -> Result<Vec<u64>, CliError> {
    real_list(text, "time")?
        .into_iter()
        .map(|ns| {
            let ps = (ns * 1000.0).round();
            if ns < 0.0 {
                Err(CliError::Usage(format!("time {ns} ns is negative")))
            } else if (ns * 1000.0 - ps).abs() > 1e-6 {
                Err(CliError::Usage(format!(
                    "time {ns} ns is not a whole number of picoseconds"
                )))
            } else {
                Ok(ps as u64)
            }
        })
        .collect()
}

/// Radians, or degrees when the whole value ends in `deg`.
pub fn angle_list(text: &str) -> Result<Vec<f64>, CliError> {
    let text = text.trim();
    match text.strip_suffix("deg") {
        Some(deg) => Ok(real_list(deg, "theta-p")?
            .into_iter()
            .map(f64::to_radians)
            .collect()),
        None => real_list(text, "theta-p"),
    }
}

pub fn grid(text: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("grid must look like 256x512, got '{text}'"));
    let (r, c) = text.split_once(['x', 'X']).ok_or_else(bad)?;
    let r: usize = r.trim().parse().map_err(|_| bad())?;
    let c: usize = c.trim().parse().map_err(|_| bad())?;
    if r == 0 || c == 0 {
        return Err(bad());
    }
    Ok((r, c))
}

pub fn image_target(text: &str) -> Result<(ViewAxis, PathBuf), CliError> {
    let (axis, path) = text
        .split_once(':')
        .ok_or_else(|| CliError::Usage(format!("image must look like AXIS:PATH, got '{text}'")))?;
    let axis: ViewAxis = axis.parse().map_err(CliError::Usage)?;
    if path.is_empty() {
        return Err(CliError::Usage("image path is empty".into()));
    }
    Ok((axis, PathBuf::from(path)))
}
