//! Orbital-energy grids for scans and figure data.

use crate::{Error, Result};

/// Uniform grid of `points >= 2` nodes on `[min, max]`.
pub fn linear(min: f64, max: f64, points: usize) -> Result<Vec<f64>> {
    if points < 2 {
        return Err(Error::InvalidInput("grid needs at least 2 points".into()));
    }
    if min.is_nan() || max.is_nan() || min >= max {
        return Err(Error::InvalidInput(format!(
            "grid requires min < max, got {min}..{max}"
        )));
    }
    let step = (max - min) / (points - 1) as f64;
    let mut g: Vec<f64> = (0..points).map(|i| min + i as f64 * step).collect();
    // pin the endpoint against accumulated rounding
    g[points - 1] = max;
    Ok(g)
}

/// Sign-symmetric log-spaced grid, dense near `xi = 0`.
///
/// Magnitudes run logarithmically from `min_mag` to `max_mag` on both
/// signs; an odd `points` count adds the node at exactly 0.
pub fn log_symmetric(min_mag: f64, max_mag: f64, points: usize) -> Result<Vec<f64>> {
    if points < 2 {
        return Err(Error::InvalidInput("grid needs at least 2 points".into()));
    }
    if min_mag.is_nan() || max_mag.is_nan() || min_mag <= 0.0 || min_mag >= max_mag {
        return Err(Error::InvalidInput(format!(
            "log-symmetric grid requires 0 < min_mag < max_mag, got {min_mag}..{max_mag}"
        )));
    }
    let half = points / 2;
    if half < 2 {
        return Err(Error::InvalidInput(
            "log-symmetric grid needs at least 4 points".into(),
        ));
    }
    let lmin = min_mag.ln();
    let lmax = max_mag.ln();
    let step = (lmax - lmin) / (half - 1) as f64;
    let mags: Vec<f64> = (0..half)
        .map(|i| (lmin + i as f64 * step).exp())
        .collect();
    let mut g = Vec::with_capacity(points);
    g.extend(mags.iter().rev().map(|m| -m));
    if points % 2 == 1 {
        g.push(0.0);
    }
    g.extend(mags.iter().copied());
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_endpoints_exact() {
        let g = linear(-5.0, 5.0, 101).unwrap();
        assert_eq!(g.len(), 101);
        assert_eq!(g[0], -5.0);
        assert_eq!(g[100], 5.0);
        assert_eq!(g[50], 0.0);
        assert!(linear(0.0, 0.0, 10).is_err());
        assert!(linear(0.0, 1.0, 1).is_err());
    }

    #[test]
    fn log_symmetric_shape() {
        let g = log_symmetric(1e-3, 1e3, 101).unwrap();
        assert_eq!(g.len(), 101);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(g[50], 0.0);
        assert_eq!(g[0], -g[100]);
        assert!((g[51] - 1e-3).abs() < 1e-18);
    }

    #[test]
    fn log_symmetric_even_count_omits_zero() {
        let g = log_symmetric(0.1, 10.0, 8).unwrap();
        assert_eq!(g.len(), 8);
        assert!(!g.contains(&0.0));
    }
}
