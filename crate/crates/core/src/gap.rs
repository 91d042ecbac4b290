//! Pairing-energy profiles `delta(xi)` over the Debye shell.

use std::fmt;
use std::sync::Arc;

use crate::{Error, Result};

/// Pairing energy as a function of orbital energy.
///
/// Constant profiles and genuinely `xi`-dependent ones share the same
/// evaluation path, so a function profile that happens to be constant
/// reproduces the constant-gap results bit for bit.
#[derive(Clone)]
pub enum GapProfile {
    Constant(f64),
    FunctionOfXi {
        delta0: f64,
        profile: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    },
}

impl GapProfile {
    pub fn constant(delta0: f64) -> Result<Self> {
        if !delta0.is_finite() || delta0 <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "gap profile requires delta0 > 0, got {delta0}"
            )));
        }
        Ok(GapProfile::Constant(delta0))
    }

    /// Profile given by an arbitrary map `xi -> delta(xi)`; `delta0` is
    /// taken from the map at `xi = 0` and must be positive.
    pub fn function_of_xi<F>(profile: F) -> Result<Self>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        let delta0 = profile(0.0);
        if !delta0.is_finite() || delta0 <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "gap profile requires delta(0) > 0, got {delta0}"
            )));
        }
        Ok(GapProfile::FunctionOfXi {
            delta0,
            profile: Arc::new(profile),
        })
    }

    /// Linear interpolation through strictly increasing `(xi, delta)` knots,
    /// clamped to the end values outside the table.
    pub fn tabulated(table: Vec<(f64, f64)>) -> Result<Self> {
        if table.len() < 2 {
            return Err(Error::InvalidInput(
                "tabulated gap profile needs at least 2 samples".into(),
            ));
        }
        if table.windows(2).any(|w| w[0].0 >= w[1].0 || w[0].0.is_nan() || w[1].0.is_nan()) {
            return Err(Error::InvalidInput(
                "tabulated gap samples must be strictly increasing in xi".into(),
            ));
        }
        if table.iter().any(|&(x, d)| !x.is_finite() || !d.is_finite() || d < 0.0) {
            return Err(Error::InvalidInput(
                "tabulated gap samples must be finite with delta >= 0".into(),
            ));
        }
        Self::function_of_xi(move |xi| {
            if xi <= table[0].0 {
                return table[0].1;
            }
            if xi >= table[table.len() - 1].0 {
                return table[table.len() - 1].1;
            }
            let hi = table.partition_point(|&(x, _)| x <= xi);
            let (x0, d0) = table[hi - 1];
            let (x1, d1) = table[hi];
            d0 + (xi - x0) / (x1 - x0) * (d1 - d0)
        })
    }

    /// Gap at the Fermi surface.
    pub fn delta0(&self) -> f64 {
        match self {
            GapProfile::Constant(d) => *d,
            GapProfile::FunctionOfXi { delta0, .. } => *delta0,
        }
    }

    pub fn evaluate(&self, xi: f64) -> f64 {
        match self {
            GapProfile::Constant(d) => *d,
            GapProfile::FunctionOfXi { profile, .. } => profile(xi),
        }
    }

    /// True when the profile deviates from `delta(0)` by at most 10%
    /// over `|xi| <= 3 delta(0)`, sampled on a uniform grid. Gates the
    /// area-law comparison for varying gaps.
    pub fn is_slowly_varying(&self) -> bool {
        match self {
            GapProfile::Constant(_) => true,
            GapProfile::FunctionOfXi { delta0, profile } => {
                let n = 601;
                (0..n).all(|i| {
                    let xi = -3.0 * delta0 + 6.0 * delta0 * i as f64 / (n - 1) as f64;
                    (profile(xi) - delta0).abs() / delta0 <= 0.1
                })
            }
        }
    }
}

impl fmt::Debug for GapProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GapProfile::Constant(d) => write!(f, "GapProfile::Constant({d})"),
            GapProfile::FunctionOfXi { delta0, .. } => {
                write!(f, "GapProfile::FunctionOfXi {{ delta0: {delta0}, .. }}")
            }
        }
    }
}
