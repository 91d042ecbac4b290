//! Brute-force validation oracle.
//!
//! Builds the full N-pair-mode BCS state as a dense amplitude vector,
//! traces out the spin-down occupancies numerically, and exposes
//! entropy/variance of the reduced state for comparison against the
//! analytic modules. Deliberately dense and unoptimized: the oracle is
//! an independent check, capped at N = 8 (65536 amplitudes, 256x256
//! reduced matrix).
//!
//! Basis ordering: mode-major, little-endian over modes; within mode
//! `k`, bit `2k` of the index is the spin-up occupancy and bit `2k+1`
//! the spin-down occupancy.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::amplitudes;
use crate::params::ModelParams;
use crate::{Error, Result};

pub const MAX_MODES: usize = 8;

/// Dense N-mode BCS state and its spin-up reduced density matrix.
#[derive(Debug, Clone)]
pub struct OracleState {
    pub n_modes: usize,
    pub xis: Vec<f64>,
    /// Length `4^n_modes`, unit norm.
    pub amplitudes: Vec<Complex64>,
    /// Dimension `2^n_modes`, stored dense so diagonality can be checked.
    pub rho_up: DMatrix<Complex64>,
}

/// Builds the state with real nonnegative coherence factors.
pub fn build_state(xis: &[f64], params: &ModelParams) -> Result<OracleState> {
    let phases = vec![0.0; xis.len()];
    build_state_with_phases(xis, params, &phases)
}

/// Builds the state with an arbitrary phase on each pair amplitude
/// `v_k -> v_k e^{i phase_k}`. Entanglement quantities are phase
/// independent, which one property test exercises directly.
pub fn build_state_with_phases(
    xis: &[f64],
    params: &ModelParams,
    phases: &[f64],
) -> Result<OracleState> {
    let n = xis.len();
    if !(1..=MAX_MODES).contains(&n) {
        return Err(Error::Capacity(format!(
            "oracle supports 1..={MAX_MODES} modes, got {n}"
        )));
    }
    if phases.len() != n {
        return Err(Error::InvalidInput(
            "phases must match the mode count".into(),
        ));
    }

    let mut u = Vec::with_capacity(n);
    let mut v = Vec::with_capacity(n);
    for (&xi, &ph) in xis.iter().zip(phases) {
        let v2 = amplitudes::occupation_probability(xi, params)?;
        u.push(Complex64::new((1.0 - v2).sqrt(), 0.0));
        v.push(Complex64::from_polar(v2.sqrt(), ph));
    }

    let dim = 1usize << (2 * n);
    let mut amp = vec![Complex64::new(0.0, 0.0); dim];
    for (i, a) in amp.iter_mut().enumerate() {
        let mut value = Complex64::new(1.0, 0.0);
        let mut paired = true;
        for k in 0..n {
            let up = (i >> (2 * k)) & 1;
            let down = (i >> (2 * k + 1)) & 1;
            if up != down {
                paired = false;
                break;
            }
            value *= if up == 1 { v[k] } else { u[k] };
        }
        if paired {
            *a = value;
        }
    }

    let rho_up = partial_trace_down(&amp, n);
    Ok(OracleState {
        n_modes: n,
        xis: xis.to_vec(),
        amplitudes: amp,
        rho_up,
    })
}

/// Traces the spin-down occupancies out of the rank-1 density operator
/// `|psi><psi|`: `rho[a,b] = sum_d psi(a,d) psi*(b,d)`.
pub fn partial_trace_down(amplitudes: &[Complex64], n_modes: usize) -> DMatrix<Complex64> {
    let dim_up = 1usize << n_modes;
    let full_index = |up: usize, down: usize| -> usize {
        let mut idx = 0usize;
        for k in 0..n_modes {
            idx |= ((up >> k) & 1) << (2 * k);
            idx |= ((down >> k) & 1) << (2 * k + 1);
        }
        idx
    };
    DMatrix::from_fn(dim_up, dim_up, |a, b| {
        (0..dim_up)
            .map(|d| amplitudes[full_index(a, d)] * amplitudes[full_index(b, d)].conj())
            .sum()
    })
}

/// Norm of the amplitude vector.
pub fn state_norm(state: &OracleState) -> f64 {
    state
        .amplitudes
        .iter()
        .map(|a| a.norm_sqr())
        .sum::<f64>()
        .sqrt()
}

/// Largest off-diagonal magnitude of the reduced matrix.
pub fn max_off_diagonal(state: &OracleState) -> f64 {
    let d = state.rho_up.nrows();
    let mut max = 0.0f64;
    for i in 0..d {
        for j in 0..d {
            if i != j {
                max = max.max(state.rho_up[(i, j)].norm());
            }
        }
    }
    max
}

/// Von Neumann entropy of the reduced state from a dense hermitian
/// eigensolve (independent of the analytic entropy path).
pub fn oracle_entropy(state: &OracleState) -> Result<f64> {
    Ok(eigenvalues(state)?
        .iter()
        .filter(|&&p| p > 1e-300)
        .map(|&p| -p * p.ln())
        .sum())
}

/// Eigenvalues of the reduced matrix, unordered.
pub fn eigenvalues(state: &OracleState) -> Result<Vec<f64>> {
    let eig = SymmetricEigen::try_new(state.rho_up.clone(), 1e-13, 10_000).ok_or_else(|| {
        Error::Numerical {
            message: "hermitian eigensolve did not converge".into(),
            partial: f64::NAN,
            error_estimate: f64::NAN,
        }
    })?;
    Ok(eig.eigenvalues.iter().map(|&p| p.max(0.0)).collect())
}

/// Spin-up number variance `<N^2> - <N>^2` from the occupancy-basis
/// diagonal of the reduced matrix.
pub fn oracle_variance(state: &OracleState) -> f64 {
    let mut mean = 0.0;
    let mut mean_sq = 0.0;
    for i in 0..state.rho_up.nrows() {
        let p = state.rho_up[(i, i)].re;
        let n = i.count_ones() as f64;
        mean += p * n;
        mean_sq += p * n * n;
    }
    mean_sq - mean * mean
}

/// All `2^N` products of per-mode `{u^2, v^2}`: the analytic
/// entanglement spectrum the oracle eigenvalues must reproduce.
pub fn product_spectrum(xis: &[f64], params: &ModelParams) -> Result<Vec<f64>> {
    let mut probs = vec![1.0f64];
    for &xi in xis {
        let v2 = amplitudes::occupation_probability(xi, params)?;
        let u2 = 1.0 - v2;
        probs = probs
            .iter()
            .flat_map(|&p| [p * u2, p * v2])
            .collect();
    }
    Ok(probs)
}
