//! Integrated ground-state observables: spin entanglement entropy
//! (discrete sum and thermodynamic-limit quadrature), the closed-form
//! area law, number-fluctuation variances, and the entropy/MEP relation.

use serde::{Deserialize, Serialize};

use crate::amplitudes::{self, binary_entropy};
use crate::dos::DosModel;
use crate::gap::GapProfile;
use crate::params::ModelParams;
use crate::quadrature::{self, QuadOptions, Quadrature};
use crate::{Error, Result};

/// Aggregate report over one parameter point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ObservablesReport {
    pub entropy_total: f64,
    pub entropy_area_law: f64,
    pub variance_up: f64,
    pub variance_total: f64,
    pub mep: f64,
    pub quadrature_error_estimate: f64,
}

/// Occupation probability with a possibly xi-dependent gap; piecewise
/// exterior values are unchanged.
fn occupation_with_gap(xi: f64, params: &ModelParams, gap: &GapProfile) -> Result<f64> {
    let local = ModelParams {
        delta: gap.evaluate(xi),
        ..*params
    };
    amplitudes::occupation_probability(xi, &local)
}

/// Breakpoints for shell integrals: the integrand has curvature knees
/// at xi = 0 and xi = +/-delta(0).
fn shell_panels(params: &ModelParams, gap: &GapProfile) -> Vec<f64> {
    let ed = params.debye;
    let d0 = gap.delta0();
    let mut panels = vec![-ed, 0.0, ed];
    if d0 < ed {
        panels.push(-d0);
        panels.push(d0);
    }
    panels.sort_by(|a, b| a.partial_cmp(b).unwrap());
    panels.dedup();
    panels
}

/// Sum of per-orbital entropies over a discrete orbital list, in nats.
/// Orbitals outside the Debye shell contribute exactly zero.
pub fn entropy_discrete(orbitals: &[f64], params: &ModelParams) -> Result<f64> {
    let mut total = 0.0;
    for &xi in orbitals {
        total += amplitudes::orbital_entropy(xi, params)?;
    }
    Ok(total)
}

/// Thermodynamic-limit entropy `\int S(xi; delta(xi)) g(xi) dxi` over
/// the finite Debye shell. The infinite-limit closed form lives in
/// [`entropy_area_law`]; keeping the shell finite makes the
/// convergence toward it observable.
pub fn entropy_integral(
    dos: &DosModel,
    params: &ModelParams,
    gap: &GapProfile,
    opts: &QuadOptions,
) -> Result<Quadrature> {
    let integrand = |xi: f64| -> Result<f64> {
        let v2 = occupation_with_gap(xi, params, gap)?;
        Ok(binary_entropy(v2) * dos.evaluate(xi)?)
    };
    quadrature::integrate(integrand, &shell_panels(params, gap), opts)
}

/// Closed-form area law `pi g(0) delta`.
pub fn entropy_area_law(g0: f64, delta0: f64) -> f64 {
    std::f64::consts::PI * g0 * delta0
}

/// Discrete spin-up number variance `sum u^2 v^2`.
pub fn variance_discrete(orbitals: &[f64], params: &ModelParams) -> Result<f64> {
    let mut total = 0.0;
    for &xi in orbitals {
        total += amplitudes::uv_squared(xi, params)?;
    }
    Ok(total)
}

/// Variance pair from the shell integral of `u^2 v^2 g`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VarianceReport {
    pub variance_up: f64,
    /// Total-number variance, `4 * variance_up` by pair structure.
    pub variance_total: f64,
    pub quadrature_error_estimate: f64,
}

/// Spin-up number variance `\int u^2 v^2 g dxi` over the shell, and the
/// total-number variance `4 sigma_up^2`. For constant `g` and constant
/// gap this equals `(g0 delta / 2) atan(debye / delta)` exactly.
pub fn variance_integral(
    dos: &DosModel,
    params: &ModelParams,
    gap: &GapProfile,
    opts: &QuadOptions,
) -> Result<VarianceReport> {
    let integrand = |xi: f64| -> Result<f64> {
        let d = gap.evaluate(xi);
        let local = ModelParams { delta: d, ..*params };
        Ok(amplitudes::uv_squared(xi, &local)? * dos.evaluate(xi)?)
    };
    let q = quadrature::integrate(integrand, &shell_panels(params, gap), opts)?;
    Ok(VarianceReport {
        variance_up: q.value,
        variance_total: 4.0 * q.value,
        quadrature_error_estimate: q.error_estimate,
    })
}

/// Ratio `S / (4 sigma_up^2)` for a constant gap; tends to 1 as
/// `debye/delta -> infinity`.
pub fn entropy_fluctuation_ratio(
    dos: &DosModel,
    params: &ModelParams,
    opts: &QuadOptions,
) -> Result<f64> {
    let gap = GapProfile::constant(params.delta)?;
    let s = entropy_integral(dos, params, &gap, opts)?;
    let v = variance_integral(dos, params, &gap, opts)?;
    if v.variance_total == 0.0 {
        return Err(Error::Numerical {
            message: "variance integral vanished; ratio undefined".into(),
            partial: f64::NAN,
            error_estimate: v.quadrature_error_estimate,
        });
    }
    Ok(s.value / v.variance_total)
}

/// Macrocanonical entanglement of pairing from the total entropy,
/// `MEP = 1 - e^{-S/2}`.
pub fn mep_from_entropy(entropy: f64) -> Result<f64> {
    if entropy.is_nan() || entropy < 0.0 {
        return Err(Error::InvalidInput(format!(
            "entropy must be >= 0, got {entropy}"
        )));
    }
    Ok(-(-entropy / 2.0).exp_m1())
}

/// One row of the DOS-weighted entropy profile.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeightedEntropyPoint {
    pub xi: f64,
    pub weighted_entropy: f64,
}

/// Pointwise `S(xi) g(xi)` for plotting; peaks at the Fermi surface
/// with value `ln 2 * g(0)`.
pub fn weighted_entropy_profile(
    dos: &DosModel,
    params: &ModelParams,
    grid: &[f64],
) -> Result<Vec<WeightedEntropyPoint>> {
    grid.iter()
        .map(|&xi| {
            Ok(WeightedEntropyPoint {
                xi,
                weighted_entropy: amplitudes::orbital_entropy(xi, params)? * dos.evaluate(xi)?,
            })
        })
        .collect()
}

/// Full report at one parameter point (constant-`g0` entropy reference
/// for the area-law column uses `g(0)`).
pub fn report(
    dos: &DosModel,
    params: &ModelParams,
    gap: &GapProfile,
    opts: &QuadOptions,
) -> Result<ObservablesReport> {
    let s = entropy_integral(dos, params, gap, opts)?;
    let v = variance_integral(dos, params, gap, opts)?;
    let g0 = dos.evaluate(0.0)?;
    Ok(ObservablesReport {
        entropy_total: s.value,
        entropy_area_law: entropy_area_law(g0, gap.delta0()),
        variance_up: v.variance_up,
        variance_total: v.variance_total,
        mep: mep_from_entropy(s.value)?,
        quadrature_error_estimate: s.error_estimate.max(v.quadrature_error_estimate),
    })
}
