//! C ABI for the spin-ee library.
//!
//! All functions return a [`SpinEeStatus`] code and write results through
//! out-pointers. Model parameters travel as an opaque handle created by
//! [`spinee_params_new`] and released by [`spinee_params_free`]. Null
//! out-pointers yield `SPIN_EE_STATUS_NULL_POINTER`; no function panics
//! across the boundary.

use std::os::raw::c_char;

use spin_ee::dos::DosModel;
use spin_ee::gap::GapProfile;
use spin_ee::quadrature::QuadOptions;
use spin_ee::{amplitudes, observables, thermal, Error, ModelParams};

/// Status codes returned by every binding.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpinEeStatus {
    Ok = 0,
    InvalidParams = 1,
    InvalidInput = 2,
    DosDomain = 3,
    Capacity = 4,
    NumericalFailure = 5,
    NullPointer = 6,
}

fn status_of(err: &Error) -> SpinEeStatus {
    match err {
        Error::InvalidParams(_) => SpinEeStatus::InvalidParams,
        Error::InvalidInput(_) | Error::Parse(_) => SpinEeStatus::InvalidInput,
        Error::DosDomain(_) => SpinEeStatus::DosDomain,
        Error::Capacity(_) => SpinEeStatus::Capacity,
        Error::Numerical { .. } => SpinEeStatus::NumericalFailure,
        Error::Io(_) => SpinEeStatus::InvalidInput,
    }
}

/// Opaque model-parameter handle.
pub struct SpinEeParams {
    inner: ModelParams,
}

/// Per-orbital spectrum record. `beta_eff` is `INFINITY` outside the
/// Debye shell and in the gapless limit.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct SpinEeSpectrumPoint {
    pub xi: f64,
    pub u2: f64,
    pub v2: f64,
    pub entropy: f64,
    pub beta_eff: f64,
}

/// Constant effective and critical reciprocal temperatures.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct SpinEeTemperatures {
    pub beta_eff_0: f64,
    pub beta_c: f64,
    pub relative_gap: f64,
}

/// Integral value with the quadrature error estimate.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct SpinEeIntegral {
    pub value: f64,
    pub error_estimate: f64,
}

/// Creates a parameter handle; writes it to `out` on success.
///
/// # Safety
/// `out` must be a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn spinee_params_new(
    delta: f64,
    debye: f64,
    mu: f64,
    out: *mut *mut SpinEeParams,
) -> SpinEeStatus {
    if out.is_null() {
        return SpinEeStatus::NullPointer;
    }
    match ModelParams::new(delta, debye, mu) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(SpinEeParams { inner }));
            SpinEeStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Releases a handle created by `spinee_params_new`. Null is a no-op.
///
/// # Safety
/// `params` must be null or a pointer previously returned by
/// `spinee_params_new` that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn spinee_params_free(params: *mut SpinEeParams) {
    if !params.is_null() {
        drop(Box::from_raw(params));
    }
}

unsafe fn with_params<T>(
    params: *const SpinEeParams,
    out: *mut T,
    f: impl FnOnce(&ModelParams) -> Result<T, Error>,
) -> SpinEeStatus {
    if params.is_null() || out.is_null() {
        return SpinEeStatus::NullPointer;
    }
    match f(&(*params).inner) {
        Ok(v) => {
            *out = v;
            SpinEeStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Pair-orbital occupation probability `|v(xi)|^2`.
///
/// # Safety
/// `params` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn spinee_occupation_probability(
    params: *const SpinEeParams,
    xi: f64,
    out: *mut f64,
) -> SpinEeStatus {
    with_params(params, out, |p| amplitudes::occupation_probability(xi, p))
}

/// Full spectrum record at one orbital energy.
///
/// # Safety
/// `params` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn spinee_spectrum_point(
    params: *const SpinEeParams,
    xi: f64,
    out: *mut SpinEeSpectrumPoint,
) -> SpinEeStatus {
    with_params(params, out, |p| {
        amplitudes::spectrum_point(xi, p).map(|pt| SpinEeSpectrumPoint {
            xi: pt.xi,
            u2: pt.u2,
            v2: pt.v2,
            entropy: pt.entropy,
            beta_eff: pt.beta_eff,
        })
    })
}

/// Mode-dependent effective reciprocal temperature.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn spinee_beta_eff(xi: f64, delta: f64, out: *mut f64) -> SpinEeStatus {
    if out.is_null() {
        return SpinEeStatus::NullPointer;
    }
    match thermal::beta_eff(xi, delta) {
        Ok(v) => {
            *out = v;
            SpinEeStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Overflow-safe Fermi-Dirac occupation `1/(1 + e^{beta xi})`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn spinee_fermi_occupation(
    xi: f64,
    beta: f64,
    out: *mut f64,
) -> SpinEeStatus {
    if out.is_null() {
        return SpinEeStatus::NullPointer;
    }
    match thermal::fermi_occupation(xi, beta) {
        Ok(v) => {
            *out = v;
            SpinEeStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Canonical effective temperature, BCS critical temperature, and their
/// relative gap.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn spinee_canonical_temperatures(
    delta: f64,
    out: *mut SpinEeTemperatures,
) -> SpinEeStatus {
    if out.is_null() {
        return SpinEeStatus::NullPointer;
    }
    match thermal::canonical_temperatures(delta) {
        Ok(t) => {
            *out = SpinEeTemperatures {
                beta_eff_0: t.beta_eff_0,
                beta_c: t.beta_c,
                relative_gap: t.relative_gap,
            };
            SpinEeStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Closed-form area law `pi g0 delta`.
#[no_mangle]
pub extern "C" fn spinee_entropy_area_law(g0: f64, delta: f64) -> f64 {
    observables::entropy_area_law(g0, delta)
}

/// Spin entanglement entropy over the Debye shell for a constant DOS
/// and constant gap, by adaptive quadrature at tolerance `abs_tol`.
///
/// # Safety
/// `params` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn spinee_entropy_integral_constant(
    params: *const SpinEeParams,
    g0: f64,
    abs_tol: f64,
    out: *mut SpinEeIntegral,
) -> SpinEeStatus {
    with_params(params, out, |p| {
        let dos = DosModel::constant(g0)?;
        let gap = GapProfile::constant(p.delta)?;
        let opts = QuadOptions {
            abs_tol,
            ..QuadOptions::default()
        };
        observables::entropy_integral(&dos, p, &gap, &opts).map(|q| SpinEeIntegral {
            value: q.value,
            error_estimate: q.error_estimate,
        })
    })
}

/// Spin-up and total number variances for a constant DOS and gap.
///
/// # Safety
/// `params` must be a live handle; both out-pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn spinee_variance_integral_constant(
    params: *const SpinEeParams,
    g0: f64,
    abs_tol: f64,
    sigma_up_sq: *mut f64,
    sigma_total_sq: *mut f64,
) -> SpinEeStatus {
    if params.is_null() || sigma_up_sq.is_null() || sigma_total_sq.is_null() {
        return SpinEeStatus::NullPointer;
    }
    let p = &(*params).inner;
    let result = (|| {
        let dos = DosModel::constant(g0)?;
        let gap = GapProfile::constant(p.delta)?;
        let opts = QuadOptions {
            abs_tol,
            ..QuadOptions::default()
        };
        observables::variance_integral(&dos, p, &gap, &opts)
    })();
    match result {
        Ok(v) => {
            *sigma_up_sq = v.variance_up;
            *sigma_total_sq = v.variance_total;
            SpinEeStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Macrocanonical entanglement of pairing from the total entropy.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn spinee_mep_from_entropy(entropy: f64, out: *mut f64) -> SpinEeStatus {
    if out.is_null() {
        return SpinEeStatus::NullPointer;
    }
    match observables::mep_from_entropy(entropy) {
        Ok(v) => {
            *out = v;
            SpinEeStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn spinee_status_message(status: SpinEeStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        SpinEeStatus::Ok => b"ok\0",
        SpinEeStatus::InvalidParams => b"invalid model parameters\0",
        SpinEeStatus::InvalidInput => b"invalid input\0",
        SpinEeStatus::DosDomain => b"density-of-states domain error\0",
        SpinEeStatus::Capacity => b"capacity exceeded\0",
        SpinEeStatus::NumericalFailure => b"numerical failure\0",
        SpinEeStatus::NullPointer => b"null pointer\0",
    };
    msg.as_ptr() as *const c_char
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    #[test]
    fn params_lifecycle_and_occupation() {
        unsafe {
            let mut handle: *mut SpinEeParams = ptr::null_mut();
            assert_eq!(
                spinee_params_new(1.0, 10.0, 100.0, &mut handle),
                SpinEeStatus::Ok
            );
            let mut v2 = 0.0;
            assert_eq!(
                spinee_occupation_probability(handle, 0.0, &mut v2),
                SpinEeStatus::Ok
            );
            assert_eq!(v2, 0.5);
            spinee_params_free(handle);
        }
    }

    #[test]
    fn rejects_bad_params_and_null_pointers() {
        unsafe {
            let mut handle: *mut SpinEeParams = ptr::null_mut();
            assert_eq!(
                spinee_params_new(-1.0, 10.0, 100.0, &mut handle),
                SpinEeStatus::InvalidParams
            );
            assert_eq!(
                spinee_params_new(1.0, 10.0, 100.0, ptr::null_mut()),
                SpinEeStatus::NullPointer
            );
            let mut out = 0.0;
            assert_eq!(
                spinee_occupation_probability(ptr::null(), 0.0, &mut out),
                SpinEeStatus::NullPointer
            );
        }
    }

    #[test]
    fn temperatures_and_area_law() {
        unsafe {
            let mut t = SpinEeTemperatures {
                beta_eff_0: 0.0,
                beta_c: 0.0,
                relative_gap: 0.0,
            };
            assert_eq!(spinee_canonical_temperatures(1.0, &mut t), SpinEeStatus::Ok);
            assert!((t.beta_eff_0 - 1.7627).abs() < 1e-4);
            assert!((t.beta_c - 1.7639).abs() < 1e-4);
            assert_eq!(
                spinee_canonical_temperatures(0.0, &mut t),
                SpinEeStatus::InvalidParams
            );
        }
        assert!((spinee_entropy_area_law(1.0, 1.0) - std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn integrals_via_handle() {
        unsafe {
            let mut handle: *mut SpinEeParams = ptr::null_mut();
            spinee_params_new(1.0, 1e4, 1e6, &mut handle);

            let mut s = SpinEeIntegral {
                value: 0.0,
                error_estimate: 0.0,
            };
            assert_eq!(
                spinee_entropy_integral_constant(handle, 1.0, 1e-10, &mut s),
                SpinEeStatus::Ok
            );
            assert!((s.value - std::f64::consts::PI).abs() / std::f64::consts::PI < 0.0015);

            let (mut up, mut total) = (0.0, 0.0);
            assert_eq!(
                spinee_variance_integral_constant(handle, 1.0, 1e-10, &mut up, &mut total),
                SpinEeStatus::Ok
            );
            assert_eq!(total, 4.0 * up);
            assert!((up - std::f64::consts::FRAC_PI_4).abs() < 0.002);

            spinee_params_free(handle);
        }
    }
}
