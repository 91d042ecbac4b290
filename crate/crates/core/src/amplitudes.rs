//! BCS coherence factors and the per-orbital entanglement spectrum.
//!
//! Inside the Debye shell the pair-orbital occupation probability is
//! `|v(xi)|^2 = (1 - xi/sqrt(xi^2 + delta^2))/2`; outside it the orbital
//! is exactly filled (`xi < -debye`) or empty (`xi > +debye`). The
//! interior formula applies on the closed interval `[-debye, +debye]`;
//! the piecewise values are kept raw, with no smoothing at the edges.

use serde::{Deserialize, Serialize};

use crate::params::ModelParams;
use crate::thermal;
use crate::{Error, Result};

/// Per-orbital record of the entanglement spectrum.
///
/// `beta_eff` is `f64::INFINITY` outside the Debye shell and in the
/// `delta = 0` limit, where the orbital occupancy is deterministic.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumPoint {
    pub xi: f64,
    pub u2: f64,
    pub v2: f64,
    pub entropy: f64,
    pub beta_eff: f64,
}

/// Binary Shannon entropy in nats, with `0 ln 0 = 0`.
pub fn binary_entropy(p: f64) -> f64 {
    let q = 1.0 - p;
    let mut s = 0.0;
    if p > 0.0 {
        s -= p * p.ln();
    }
    if q > 0.0 {
        s -= q * q.ln();
    }
    s
}

/// Pair-orbital occupation probability `|v(xi)|^2`.
///
/// Returns the step function for `delta = 0` (1 below the Fermi surface,
/// 0 above, 1/2 exactly at `xi = 0` by the symmetric-limit convention).
pub fn occupation_probability(xi: f64, params: &ModelParams) -> Result<f64> {
    if !xi.is_finite() {
        return Err(Error::InvalidInput(format!("xi must be finite, got {xi}")));
    }
    if xi < -params.debye {
        return Ok(1.0);
    }
    if xi > params.debye {
        return Ok(0.0);
    }
    if params.delta == 0.0 {
        return Ok(if xi < 0.0 {
            1.0
        } else if xi > 0.0 {
            0.0
        } else {
            0.5
        });
    }
    // v^2 = 1 - u^2 keeps u^2 + v^2 = 1 exact.
    Ok(1.0 - unoccupation_probability_interior(xi, params.delta))
}

/// `|u(xi)|^2 = (1 + xi/sqrt(xi^2 + delta^2))/2`, interior formula only.
fn unoccupation_probability_interior(xi: f64, delta: f64) -> f64 {
    0.5 * (1.0 + xi / (xi * xi + delta * delta).sqrt())
}

/// Product `|u|^2 |v|^2`, evaluated as `delta^2 / (4 (xi^2 + delta^2))`
/// inside the shell. The rearranged form avoids the cancellation in
/// `1 - u^2` when `|xi| >> delta`.
pub fn uv_squared(xi: f64, params: &ModelParams) -> Result<f64> {
    if !xi.is_finite() {
        return Err(Error::InvalidInput(format!("xi must be finite, got {xi}")));
    }
    if !params.in_shell(xi) {
        return Ok(0.0);
    }
    let d2 = params.delta * params.delta;
    if d2 == 0.0 {
        return Ok(0.0);
    }
    Ok(d2 / (4.0 * (xi * xi + d2)))
}

/// Orbital entropy `S(xi) = -u^2 ln u^2 - v^2 ln v^2` in nats.
pub fn orbital_entropy(xi: f64, params: &ModelParams) -> Result<f64> {
    Ok(binary_entropy(occupation_probability(xi, params)?))
}

/// Assembles the full spectrum record at one orbital energy.
pub fn spectrum_point(xi: f64, params: &ModelParams) -> Result<SpectrumPoint> {
    let v2 = occupation_probability(xi, params)?;
    let u2 = 1.0 - v2;
    let beta_eff = if params.in_shell(xi) && params.delta > 0.0 {
        thermal::beta_eff(xi, params.delta)?
    } else {
        f64::INFINITY
    };
    Ok(SpectrumPoint {
        xi,
        u2,
        v2,
        entropy: binary_entropy(v2),
        beta_eff,
    })
}

/// Evaluates the spectrum on a strictly increasing grid of orbital energies.
pub fn spectrum_grid(grid: &[f64], params: &ModelParams) -> Result<Vec<SpectrumPoint>> {
    if grid.is_empty() {
        return Err(Error::InvalidInput("grid must not be empty".into()));
    }
    if grid.windows(2).any(|w| w[0] >= w[1] || w[0].is_nan() || w[1].is_nan()) {
        return Err(Error::InvalidInput(
            "grid must be strictly increasing".into(),
        ));
    }
    grid.iter().map(|&xi| spectrum_point(xi, params)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn params(delta: f64) -> ModelParams {
        ModelParams::new(delta, 10.0, 100.0).unwrap()
    }

    #[test]
    fn half_filling_at_fermi_surface() {
        assert_eq!(occupation_probability(0.0, &params(1.0)).unwrap(), 0.5);
    }

    #[test]
    fn exterior_is_deterministic() {
        let p = params(1.0);
        assert_eq!(occupation_probability(-20.0, &p).unwrap(), 1.0);
        assert_eq!(occupation_probability(30.0, &p).unwrap(), 0.0);
    }

    #[test]
    fn closed_form_at_xi_equal_delta() {
        // v^2(delta) = (1 - 1/sqrt(2))/2
        let expect = 0.5 * (1.0 - 1.0 / 2.0_f64.sqrt());
        let got = occupation_probability(1.0, &params(1.0)).unwrap();
        assert_abs_diff_eq!(got, expect, epsilon = 1e-15);
        assert_abs_diff_eq!(got, 0.146_446_6, epsilon = 5e-8);
    }

    #[test]
    fn delta_zero_step_function() {
        let p = params(0.0);
        assert_eq!(occupation_probability(-0.5, &p).unwrap(), 1.0);
        assert_eq!(occupation_probability(0.5, &p).unwrap(), 0.0);
        assert_eq!(occupation_probability(0.0, &p).unwrap(), 0.5);
    }

    #[test]
    fn interior_formula_on_closed_shell_boundary() {
        let p = params(1.0);
        let interior = 1.0 - unoccupation_probability_interior(p.debye, p.delta);
        assert_eq!(occupation_probability(p.debye, &p).unwrap(), interior);
        assert!(interior > 0.0);
    }

    #[test]
    fn spectrum_point_at_fermi_surface_is_maximally_mixed() {
        let pt = spectrum_point(0.0, &params(1.0)).unwrap();
        assert_eq!(pt.u2, 0.5);
        assert_eq!(pt.v2, 0.5);
        assert_abs_diff_eq!(pt.entropy, std::f64::consts::LN_2, epsilon = 1e-15);
        assert_abs_diff_eq!(pt.beta_eff, 2.0, epsilon = 1e-12);
    }

    #[test]
    fn spectrum_point_outside_shell_is_pure() {
        let pt = spectrum_point(30.0, &params(1.0)).unwrap();
        assert_eq!(pt.u2, 1.0);
        assert_eq!(pt.v2, 0.0);
        assert_eq!(pt.entropy, 0.0);
        assert!(pt.beta_eff.is_infinite());
    }

    #[test]
    fn spectrum_point_entropy_at_xi_equal_delta() {
        // Frozen closed-form value, cross-checked by the exact oracle suite.
        let pt = spectrum_point(1.0, &params(1.0)).unwrap();
        assert_abs_diff_eq!(pt.entropy, 0.416_495_5, epsilon = 5e-7);
    }

    #[test]
    fn spectrum_grid_closed_form_row() {
        let pts = spectrum_grid(&[-1.0, 0.0, 1.0], &params(1.0)).unwrap();
        let v2: Vec<f64> = pts.iter().map(|p| p.v2).collect();
        assert_abs_diff_eq!(v2[0], 0.853_553, epsilon = 5e-7);
        assert_abs_diff_eq!(v2[1], 0.5, epsilon = 0.0);
        assert_abs_diff_eq!(v2[2], 0.146_447, epsilon = 5e-7);
    }

    #[test]
    fn spectrum_grid_rejects_bad_grids() {
        let p = params(1.0);
        assert!(spectrum_grid(&[], &p).is_err());
        assert!(spectrum_grid(&[0.0, 0.0], &p).is_err());
        assert!(spectrum_grid(&[1.0, -1.0], &p).is_err());
    }

    #[test]
    fn grid_above_shell_is_unoccupied() {
        let pts = spectrum_grid(&[20.0, 30.0], &params(1.0)).unwrap();
        for pt in pts {
            assert_eq!(pt.u2, 1.0);
            assert_eq!(pt.v2, 0.0);
            assert_eq!(pt.entropy, 0.0);
        }
    }

    #[test]
    fn delta_zero_grid_has_zero_entropy_off_fermi_surface() {
        let pts = spectrum_grid(&[-3.0, -1.0, 1.0, 3.0], &params(0.0)).unwrap();
        for pt in pts {
            assert_eq!(pt.entropy, 0.0);
        }
    }
}
