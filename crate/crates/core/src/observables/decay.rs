use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Collisional lifetimes `τ(N)` in ps·atm, interpolated linearly in N and held flat
/// outside the tabulated range.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecayTable {
    entries: Vec<(u32, f64)>,
}

impl DecayTable {
    pub fn new(mut entries: Vec<(u32, f64)>) -> Result<Self> {
        entries.sort_by_key(|e| e.0);
        if entries.is_empty() {
            return Err(Error::InvalidParameter("decay table is empty".into()));
        }
        if entries.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidParameter("decay table has repeated N".into()));
        }
        if let Some(bad) = entries.iter().find(|e| !(e.1.is_finite() && e.1 > 0.0)) {
            return Err(Error::InvalidParameter(format!(
                "lifetime for N={} must be positive",
                bad.0
            )));
        }
        Ok(Self { entries })
    }

    /// Measured de-orientation lifetimes of oxygen superrotors.
    pub fn oxygen() -> Self {
        Self::new(vec![(13, 85.0), (33, 290.0), (73, 660.0), (99, 610.0)])
            .expect("static table is valid")
    }

    pub fn entries(&self) -> &[(u32, f64)] {
        &self.entries
    }

    pub fn lifetime_ps_atm(&self, n: u32) -> f64 {
        let e = &self.entries;
        let first = e[0];
        let last = e[e.len() - 1];
        if n <= first.0 {
            return first.1;
        }
        if n >= last.0 {
            return last.1;
        }
        let i = e.partition_point(|x| x.0 <= n);
        let (n0, t0) = e[i - 1];
        let (n1, t1) = e[i];
        t0 + (t1 - t0) * f64::from(n - n0) / f64::from(n1 - n0)
    }
}

impl Default for DecayTable {
    fn default() -> Self {
        Self::oxygen()
    }
}

/// `exp(-t P / τ(N))` with `t` in ns and `P` in atm.
pub fn collisional_envelope(
    n: u32,
    pressure_atm: f64,
    t_ns: f64,
    table: &DecayTable,
) -> Result<f64> {
    if !(pressure_atm.is_finite() && pressure_atm >= 0.0 && t_ns.is_finite() && t_ns >= 0.0) {
        return Err(Error::InvalidParameter(format!(
            "pressure {pressure_atm} atm and time {t_ns} ns must be finite and non-negative"
        )));
    }
    Ok((-(t_ns * 1000.0) * pressure_atm / table.lifetime_ps_atm(n)).exp())
}
