use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Dimensionless model inputs defining the Debye shell.
///
/// `delta` is the pairing energy (zero is the normal-metal limit),
/// `debye` the Debye energy bounding the shell `[-debye, +debye]`,
/// and `mu` the Fermi energy. All three share one arbitrary energy unit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    pub delta: f64,
    pub debye: f64,
    pub mu: f64,
}

impl ModelParams {
    pub fn new(delta: f64, debye: f64, mu: f64) -> Result<Self> {
        if !delta.is_finite() || delta < 0.0 {
            return Err(Error::InvalidParams(format!(
                "pairing energy delta must be finite and >= 0, got {delta}"
            )));
        }
        if !debye.is_finite() || debye <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "Debye energy must be finite and > 0, got {debye}"
            )));
        }
        if !mu.is_finite() || mu <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "Fermi energy mu must be finite and > 0, got {mu}"
            )));
        }
        Ok(Self { delta, debye, mu })
    }

    /// True when the energy scales are well separated
    /// (`delta <= debye/10` and `debye <= mu/10`), the regime in which
    /// the closed-form area law and fluctuation identities hold.
    /// Checked explicitly, never silently assumed.
    pub fn in_area_law_regime(&self) -> bool {
        self.delta <= self.debye / 10.0 && self.debye <= self.mu / 10.0
    }

    /// True when `xi` lies in the closed Debye shell `[-debye, +debye]`.
    pub fn in_shell(&self, xi: f64) -> bool {
        xi.abs() <= self.debye
    }
}
