//! Density-of-states models used to weight per-orbital quantities.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Density of states `g(xi)`.
///
/// `PowerLaw3d` is the unnormalized 3D free-electron form
/// `scale * (xi + mu)^{1/2}`; the optional scale defaults to 1.
/// `Tabulated` interpolates linearly between strictly increasing knots
/// and treats out-of-range queries as errors, never extrapolating.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum DosModel {
    Constant { g0: f64 },
    PowerLaw3d { mu: f64, scale: f64 },
    Tabulated { table: Vec<(f64, f64)> },
}

impl DosModel {
    pub fn constant(g0: f64) -> Result<Self> {
        if !g0.is_finite() || g0 <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "constant DOS requires g0 > 0, got {g0}"
            )));
        }
        Ok(DosModel::Constant { g0 })
    }

    pub fn power_law_3d(mu: f64) -> Result<Self> {
        Self::power_law_3d_scaled(mu, 1.0)
    }

    pub fn power_law_3d_scaled(mu: f64, scale: f64) -> Result<Self> {
        if !mu.is_finite() || mu <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "3D power-law DOS requires mu > 0, got {mu}"
            )));
        }
        if !scale.is_finite() || scale <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "3D power-law DOS requires scale > 0, got {scale}"
            )));
        }
        Ok(DosModel::PowerLaw3d { mu, scale })
    }

    pub fn tabulated(table: Vec<(f64, f64)>) -> Result<Self> {
        if table.len() < 2 {
            return Err(Error::InvalidInput(
                "tabulated DOS needs at least 2 samples".into(),
            ));
        }
        if table.windows(2).any(|w| w[0].0 >= w[1].0 || w[0].0.is_nan() || w[1].0.is_nan()) {
            return Err(Error::InvalidInput(
                "tabulated DOS samples must be strictly increasing in xi".into(),
            ));
        }
        if table.iter().any(|&(x, g)| !x.is_finite() || !g.is_finite() || g < 0.0) {
            return Err(Error::InvalidInput(
                "tabulated DOS samples must be finite with g >= 0".into(),
            ));
        }
        Ok(DosModel::Tabulated { table })
    }

    /// Evaluates `g(xi)`.
    pub fn evaluate(&self, xi: f64) -> Result<f64> {
        match self {
            DosModel::Constant { g0 } => Ok(*g0),
            DosModel::PowerLaw3d { mu, scale } => {
                let arg = xi + mu;
                if arg < 0.0 {
                    return Err(Error::DosDomain(format!(
                        "xi = {xi} lies below the band bottom -mu = {}",
                        -mu
                    )));
                }
                Ok(scale * arg.sqrt())
            }
            DosModel::Tabulated { table } => {
                let first = table[0].0;
                let last = table[table.len() - 1].0;
                if xi < first || xi > last {
                    return Err(Error::DosDomain(format!(
                        "xi = {xi} outside tabulated range [{first}, {last}]"
                    )));
                }
                // partition_point gives the first knot strictly beyond xi.
                let hi = table.partition_point(|&(x, _)| x <= xi);
                if hi == table.len() {
                    return Ok(table[table.len() - 1].1);
                }
                let (x0, g0) = table[hi - 1];
                let (x1, g1) = table[hi];
                let t = (xi - x0) / (x1 - x0);
                Ok(g0 + t * (g1 - g0))
            }
        }
    }
}
