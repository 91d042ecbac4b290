//! Effective thermal descriptions of the entanglement spectrum.
//!
//! The occupancies `|v(xi)|^2` match a Fermi function with a
//! mode-dependent reciprocal temperature (a generalized Gibbs ensemble);
//! pinning the map at `xi = +/-delta` gives the constant canonical
//! approximation `beta_eff_0 = 2 acoth(sqrt 2) / delta`, numerically close
//! to the BCS critical value `pi e^{-gamma} / delta`.

use serde::{Deserialize, Serialize};

use crate::amplitudes;
use crate::params::ModelParams;
use crate::{Error, Result};

/// Euler-Mascheroni constant, 20 significant digits.
#[allow(clippy::excessive_precision)]
pub const EULER_GAMMA: f64 = 0.57721566490153286061;

/// Constant effective and critical reciprocal temperatures for a given gap.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EffectiveTemperatures {
    /// Canonical effective reciprocal temperature `2 acoth(sqrt 2) / delta`.
    pub beta_eff_0: f64,
    /// BCS critical reciprocal temperature `pi e^{-gamma} / delta`.
    pub beta_c: f64,
    /// `|beta_eff_0 - beta_c| / beta_c`.
    pub relative_gap: f64,
}

/// Inverse hyperbolic cotangent for `x > 1`. The `ln_1p` form keeps
/// full relative precision as the argument diverges, where the naive
/// `ln((x+1)/(x-1))` collapses to rounding noise.
fn acoth(x: f64) -> f64 {
    0.5 * (2.0 / (x - 1.0)).ln_1p()
}

/// Mode-dependent effective reciprocal temperature
/// `beta_eff(xi) = (2/xi) acoth(sqrt(xi^2 + delta^2)/xi)`.
///
/// Even in `xi` and strictly positive; the removable singularity at
/// `xi = 0` is handled by the quadratic Taylor branch, giving `2/delta`.
pub fn beta_eff(xi: f64, delta: f64) -> Result<f64> {
    if !delta.is_finite() || delta <= 0.0 {
        return Err(Error::InvalidParams(format!(
            "beta_eff requires delta > 0, got {delta}"
        )));
    }
    if !xi.is_finite() {
        return Err(Error::InvalidInput(format!("xi must be finite, got {xi}")));
    }
    // Direct evaluation loses all precision as the acoth argument
    // diverges; beta_eff = (2/delta)(1 - xi^2/(6 delta^2) + O(xi^4)).
    if xi.abs() < 1e-7 * delta {
        let r2 = (xi / delta) * (xi / delta);
        return Ok(2.0 / delta * (1.0 - r2 / 6.0));
    }
    // evenness is exact: evaluate on |xi|
    let a = xi.abs();
    let arg = (a * a + delta * delta).sqrt() / a;
    Ok(2.0 / a * acoth(arg))
}

/// Fermi-Dirac occupation `1 / (1 + e^{beta xi})`, overflow-safe.
pub fn fermi_occupation(xi: f64, beta: f64) -> Result<f64> {
    if beta.is_nan() || beta <= 0.0 {
        return Err(Error::InvalidParams(format!(
            "fermi_occupation requires beta > 0, got {beta}"
        )));
    }
    let x = beta * xi;
    // exp saturates cleanly: e^{-746} underflows to 0 and e^{710}
    // overflows to +inf, both of which give the exact limit here.
    if x >= 0.0 {
        let e = (-x).exp();
        Ok(e / (1.0 + e))
    } else {
        Ok(1.0 / (1.0 + x.exp()))
    }
}

/// Canonical effective temperature and the BCS critical temperature.
pub fn canonical_temperatures(delta: f64) -> Result<EffectiveTemperatures> {
    if !delta.is_finite() || delta <= 0.0 {
        return Err(Error::InvalidParams(format!(
            "canonical_temperatures requires delta > 0, got {delta}"
        )));
    }
    let beta_eff_0 = 2.0 * acoth(2.0_f64.sqrt()) / delta;
    let beta_c = std::f64::consts::PI * (-EULER_GAMMA).exp() / delta;
    Ok(EffectiveTemperatures {
        beta_eff_0,
        beta_c,
        relative_gap: (beta_eff_0 - beta_c).abs() / beta_c,
    })
}

/// One row of the canonical-approximation residual table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResidualPoint {
    pub xi: f64,
    pub residual: f64,
}

/// Pointwise residual `|v(xi)|^2 - fermi_occupation(xi, beta_eff_0)`.
///
/// Vanishes at `xi = 0` and, by construction of `beta_eff_0`, at
/// `xi = +/-delta`.
pub fn canonical_residual(params: &ModelParams, grid: &[f64]) -> Result<Vec<ResidualPoint>> {
    let beta0 = canonical_temperatures(params.delta)?.beta_eff_0;
    grid.iter()
        .map(|&xi| {
            let v2 = amplitudes::occupation_probability(xi, params)?;
            Ok(ResidualPoint {
                xi,
                residual: v2 - fermi_occupation(xi, beta0)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn beta_eff_at_xi_equal_delta() {
        // 2 acoth(sqrt 2) = ln((sqrt2+1)/(sqrt2-1)) ~ 1.7627
        let b = beta_eff(1.0, 1.0).unwrap();
        assert_abs_diff_eq!(b, 2.0 * acoth(2.0_f64.sqrt()), epsilon = 1e-15);
        assert_abs_diff_eq!(b, 1.762_747, epsilon = 5e-7);
    }

    #[test]
    fn beta_eff_fermi_surface_limit() {
        assert_abs_diff_eq!(beta_eff(1e-8, 1.0).unwrap(), 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(beta_eff(0.0, 1.0).unwrap(), 2.0, epsilon = 0.0);
        // Taylor branch joins the direct formula smoothly.
        let lo = beta_eff(9.9e-8, 1.0).unwrap();
        let hi = beta_eff(1.01e-7, 1.0).unwrap();
        assert_abs_diff_eq!(lo, hi, epsilon = 1e-13);
        assert_abs_diff_eq!(beta_eff(1.5e-7, 1.0).unwrap(), 2.0, epsilon = 1e-12);
    }

    #[test]
    fn beta_eff_is_even() {
        for &xi in &[0.3, 1.0, 5.0, 120.0] {
            assert_eq!(beta_eff(xi, 1.0).unwrap(), beta_eff(-xi, 1.0).unwrap());
        }
    }

    #[test]
    fn beta_eff_rejects_gapless_input() {
        assert!(beta_eff(1.0, 0.0).is_err());
        assert!(beta_eff(1.0, -1.0).is_err());
    }

    #[test]
    fn fermi_occupation_basics() {
        assert_eq!(fermi_occupation(0.0, 3.7).unwrap(), 0.5);
        assert_eq!(fermi_occupation(800.0, 1.0).unwrap(), 0.0);
        assert_eq!(fermi_occupation(-800.0, 1.0).unwrap(), 1.0);
        assert!(fermi_occupation(1.0, 0.0).is_err());
    }

    #[test]
    fn fermi_occupation_reproduces_v2_at_pinned_points() {
        let b = beta_eff(1.0, 1.0).unwrap();
        let expect = 0.5 * (1.0 - 1.0 / 2.0_f64.sqrt());
        assert_abs_diff_eq!(fermi_occupation(1.0, b).unwrap(), expect, epsilon = 1e-14);
    }

    #[test]
    fn canonical_temperature_values() {
        let t = canonical_temperatures(1.0).unwrap();
        assert_abs_diff_eq!(t.beta_eff_0, 1.7627, epsilon = 1e-4);
        assert_abs_diff_eq!(t.beta_c, 1.7639, epsilon = 1e-4);
        assert!(t.relative_gap < 1e-3);

        // 1/delta scaling
        let t2 = canonical_temperatures(2.0).unwrap();
        assert_abs_diff_eq!(t2.beta_eff_0, 0.88137, epsilon = 1e-5);
        assert!(canonical_temperatures(0.0).is_err());
    }

    #[test]
    fn canonical_residual_vanishes_at_pinned_points() {
        let p = ModelParams::new(1.0, 50.0, 500.0).unwrap();
        let rows = canonical_residual(&p, &[-1.0, 0.0, 1.0]).unwrap();
        for row in rows {
            assert_abs_diff_eq!(row.residual, 0.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn canonical_residual_stays_small_in_shell() {
        let p = ModelParams::new(1.0, 50.0, 500.0).unwrap();
        let at5 = canonical_residual(&p, &[5.0]).unwrap()[0].residual;
        assert!(at5.abs() < 0.02, "residual at 5 delta: {at5}");
        // maximum over [-10, 10] sits near xi = 2.2 delta at ~0.0245
        let grid: Vec<f64> = (0..=2000).map(|i| -10.0 + i as f64 * 0.01).collect();
        let max = canonical_residual(&p, &grid)
            .unwrap()
            .iter()
            .map(|r| r.residual.abs())
            .fold(0.0, f64::max);
        assert!(max < 0.025, "max residual {max}");
    }
}
