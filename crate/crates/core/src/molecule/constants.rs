use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const DEFAULT_JSON: &str = include_str!("../../data/o2_constants.json");

/// Rotational, fine-structure and magnetic constants (frequencies in GHz).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MolecularConstants {
    pub b0: f64,
    pub d0: f64,
    pub lambda_ss: f64,
    pub gamma_sr: f64,
    pub g_s: f64,
    /// μ_B / h in GHz/T.
    pub mu_b: f64,
    spin: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConstantsFile {
    b0_ghz: f64,
    d0_ghz: f64,
    lambda_ghz: f64,
    gamma_ghz: f64,
    g_s: f64,
    mu_b_ghz_per_tesla: f64,
}

impl MolecularConstants {
    pub fn new(
        b0: f64,
        d0: f64,
        lambda_ss: f64,
        gamma_sr: f64,
        g_s: f64,
        mu_b: f64,
    ) -> Result<Self> {
        let c = Self {
            b0,
            d0,
            lambda_ss,
            gamma_sr,
            g_s,
            mu_b,
            spin: 1,
        };
        c.validate()?;
        Ok(c)
    }

    /// Electronic spin S; always 1.
    pub fn spin(&self) -> u32 {
        self.spin
    }

    /// Zeeman prefactor g_s μ_B / h in GHz/T.
    pub fn zeeman_ghz_per_tesla(&self) -> f64 {
        self.g_s * self.mu_b
    }

    fn validate(&self) -> Result<()> {
        let all = [
            self.b0,
            self.d0,
            self.lambda_ss,
            self.gamma_sr,
            self.g_s,
            self.mu_b,
        ];
        if all.iter().any(|x| !x.is_finite()) {
            return Err(Error::Config("constants must be finite".into()));
        }
        if self.b0 <= 0.0 {
            return Err(Error::Config(format!(
                "b0_ghz must be positive, got {}",
                self.b0
            )));
        }
        if self.mu_b <= 0.0 {
            return Err(Error::Config(format!(
                "mu_b_ghz_per_tesla must be positive, got {}",
                self.mu_b
            )));
        }
        Ok(())
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let f: ConstantsFile =
            serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        Self::new(
            f.b0_ghz,
            f.d0_ghz,
            f.lambda_ghz,
            f.gamma_ghz,
            f.g_s,
            f.mu_b_ghz_per_tesla,
        )
    }

    pub fn from_json_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::from_json_str(&text)
    }

    pub fn to_json_string(&self) -> String {
        let f = ConstantsFile {
            b0_ghz: self.b0,
            d0_ghz: self.d0,
            lambda_ghz: self.lambda_ss,
            gamma_ghz: self.gamma_sr,
            g_s: self.g_s,
            mu_b_ghz_per_tesla: self.mu_b,
        };
        serde_json::to_string_pretty(&f).expect("plain struct serializes")
    }

    /// The bundled O₂ X³Σ⁻g constants (see `data/o2_constants.md`).
    pub fn oxygen() -> Self {
        Self::from_json_str(DEFAULT_JSON).expect("bundled constants are valid")
    }
}

impl Default for MolecularConstants {
    fn default() -> Self {
        Self::oxygen()
    }
}
