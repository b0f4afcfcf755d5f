//! C ABI for the ualp library.
//!
//! Conventions:
//! - every fallible call returns a [`UalpStatus`] and writes its result
//!   through an out-pointer, which is untouched on error;
//! - stateful objects ([`UalpQuadratureSpec`], [`UalpReport`]) are opaque
//!   handles created and destroyed by paired `_new`/`_free` calls;
//! - strings returned by the library are freed with [`ualp_string_free`],
//!   never with `free(3)`.
//!
//! The matching C header is generated into `include/ualp.h` by the build
//! script (cbindgen).

use std::ffi::{c_char, CStr, CString};

use ualp::{Error, Identity, IntegralResult, PolyParams, QuadratureSpec, RealOrder};

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UalpStatus {
    Ok = 0,
    /// Input outside a function's mathematical domain.
    DomainError = 1,
    /// Argument outside an algorithm's supported numerical range.
    RangeError = 2,
    /// An integrand produced a non-finite value.
    EvaluationError = 3,
    /// An iteration cap was hit before the stopping rule.
    ConvergenceError = 4,
    /// A required pointer argument was null.
    NullPointer = 5,
    /// Verification identity name not recognized.
    UnknownIdentity = 6,
    /// A verification grid entry was malformed.
    MalformedGrid = 7,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 8,
    /// Internal numerical assertion failure.
    InternalError = 9,
}

impl From<&Error> for UalpStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Domain(_) => UalpStatus::DomainError,
            Error::Range(_) => UalpStatus::RangeError,
            Error::Evaluation { .. } => UalpStatus::EvaluationError,
            Error::Convergence(_) => UalpStatus::ConvergenceError,
            Error::Internal(_) => UalpStatus::InternalError,
            Error::UnknownIdentity(_) => UalpStatus::UnknownIdentity,
            Error::MalformedGrid(_) => UalpStatus::MalformedGrid,
        }
    }
}

/// Value, error estimate, convergence flag, and evaluation count of one
/// quadrature run.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct UalpIntegralResult {
    pub value: f64,
    pub error_estimate: f64,
    pub converged: bool,
    pub evaluations: u64,
}

impl From<IntegralResult> for UalpIntegralResult {
    fn from(r: IntegralResult) -> Self {
        UalpIntegralResult {
            value: r.value,
            error_estimate: r.error_estimate,
            converged: r.converged,
            evaluations: r.evaluations,
        }
    }
}

/// Opaque quadrature configuration handle.
pub struct UalpQuadratureSpec {
    inner: QuadratureSpec,
}

/// Opaque verification report handle.
pub struct UalpReport {
    doc: ualp::ReportDocument,
}

fn write_result<T>(out: *mut T, value: ualp::Result<T>) -> UalpStatus {
    if out.is_null() {
        return UalpStatus::NullPointer;
    }
    match value {
        Ok(v) => {
            unsafe { out.write(v) };
            UalpStatus::Ok
        }
        Err(e) => UalpStatus::from(&e),
    }
}

/// Largest argument accepted by `ualp_bessel_j`.
#[no_mangle]
pub extern "C" fn ualp_bessel_j_max_arg() -> f64 {
    ualp::BESSEL_J_MAX_ARG
}

/// ln Gamma(x) for x > 0.
#[no_mangle]
pub extern "C" fn ualp_log_gamma(x: f64, out: *mut f64) -> UalpStatus {
    write_result(out, ualp::log_gamma(x))
}

/// Gamma(a) / Gamma(b) for positive a, b, computed in log space.
#[no_mangle]
pub extern "C" fn ualp_gamma_ratio(a: f64, b: f64, out: *mut f64) -> UalpStatus {
    write_result(out, ualp::gamma_ratio(a, b))
}

/// Bessel J_nu(x) for nu >= 0 and 0 <= x <= ualp_bessel_j_max_arg().
#[no_mangle]
pub extern "C" fn ualp_bessel_j(nu: f64, x: f64, out: *mut f64) -> UalpStatus {
    write_result(out, RealOrder::new(nu).and_then(|o| ualp::bessel_j(o, x)))
}

/// k-th positive zero (k >= 1) of the integer-order Bessel function J_n.
#[no_mangle]
pub extern "C" fn ualp_bessel_j_zero(n: u32, k: u32, out: *mut f64) -> UalpStatus {
    write_result(out, ualp::bessel_j_zero(n, k))
}

/// Gegenbauer polynomial C_n^lambda(x) for lambda > 0 and x in [-1, 1].
#[no_mangle]
pub extern "C" fn ualp_gegenbauer_c(n: u32, lambda: f64, x: f64, out: *mut f64) -> UalpStatus {
    write_result(out, ualp::gegenbauer_c(n, lambda, x))
}

/// P_{l'}^{m'}(x) by the defining series, with l' = m_prime + n.
#[no_mangle]
pub extern "C" fn ualp_eval(m_prime: f64, n: u32, x: f64, out: *mut f64) -> UalpStatus {
    write_result(
        out,
        PolyParams::new(m_prime, n).and_then(|p| ualp::ualp_eval(p, x)),
    )
}

/// P_{l'}^{m'}(x) by the Gegenbauer (generating-function) route.
#[no_mangle]
pub extern "C" fn ualp_eval_gegenbauer(m_prime: f64, n: u32, x: f64, out: *mut f64) -> UalpStatus {
    write_result(
        out,
        PolyParams::new(m_prime, n).and_then(|p| ualp::ualp_eval_gegenbauer(p, x)),
    )
}

/// Generating function value for |v| < 1 (negative v only for integer m').
#[no_mangle]
pub extern "C" fn ualp_generating_fn(m_prime: f64, x: f64, v: f64, out: *mut f64) -> UalpStatus {
    write_result(out, ualp::ualp_generating_fn(m_prime, x, v))
}

/// Squared L2 norm of P_{l'}^{m'} on [-1, 1].
#[no_mangle]
pub extern "C" fn ualp_norm_sq(m_prime: f64, n: u32, out: *mut f64) -> UalpStatus {
    write_result(out, PolyParams::new(m_prime, n).map(ualp::ualp_norm_sq))
}

/// Squared norm weighted by 1/(1-x^2); diverges (domain error) at m' = 0.
#[no_mangle]
pub extern "C" fn ualp_weighted_norm_sq(m_prime: f64, n: u32, out: *mut f64) -> UalpStatus {
    write_result(
        out,
        PolyParams::new(m_prime, n).and_then(ualp::ualp_weighted_norm_sq),
    )
}

/// The composed-argument integrand factor
/// P_{l'}^{m'}((xt-1)/sqrt(1+t^2-2tx)) (1+t^2-2tx)^{-(l'+1)/2}, 0 < t < 1.
#[no_mangle]
pub extern "C" fn ualp_shifted_integrand(
    m_prime: f64,
    n: u32,
    x: f64,
    t: f64,
    out: *mut f64,
) -> UalpStatus {
    write_result(
        out,
        PolyParams::new(m_prime, n).and_then(|p| ualp::ualp_shifted_integrand(p, x, t)),
    )
}

/// Effective order m' = sqrt(b + m^2) of the ring-shaped potential.
#[no_mangle]
pub extern "C" fn ualp_effective_order(b: f64, m: u32, out: *mut f64) -> UalpStatus {
    write_result(
        out,
        ualp::RingPotentialParams::new(b, m).map(ualp::effective_order),
    )
}

/// Angular eigenvalue l'(l'+1) with l' = m_prime + n.
#[no_mangle]
pub extern "C" fn ualp_angular_eigenvalue(m_prime: f64, n: u32, out: *mut f64) -> UalpStatus {
    write_result(out, ualp::angular_eigenvalue(m_prime, n))
}

/// Maximum normalized residual of the polar angular equation over a theta
/// grid of `len` points (each at least 0.05 rad away from 0 and pi).
///
/// # Safety
/// `theta_grid` must point to `len` readable f64 values.
#[no_mangle]
pub unsafe extern "C" fn ualp_ode_residual(
    m_prime: f64,
    n: u32,
    theta_grid: *const f64,
    len: usize,
    out: *mut f64,
) -> UalpStatus {
    if theta_grid.is_null() {
        return UalpStatus::NullPointer;
    }
    let grid = unsafe { std::slice::from_raw_parts(theta_grid, len) };
    write_result(
        out,
        PolyParams::new(m_prime, n).and_then(|p| ualp::ode_residual(p, grid)),
    )
}

/// Orthogonality closed form (0 off the diagonal n_l != n_k).
#[no_mangle]
pub extern "C" fn ualp_orthogonality_closed_form(
    m_prime: f64,
    n_l: u32,
    n_k: u32,
    out: *mut f64,
) -> UalpStatus {
    write_result(out, ualp::orthogonality_closed_form(m_prime, n_l, n_k))
}

/// Closed form of the composed-argument integral.
#[no_mangle]
pub extern "C" fn ualp_main_integral_closed_form(
    m_prime: f64,
    n_l: u32,
    n_k: u32,
    t: f64,
    out: *mut f64,
) -> UalpStatus {
    write_result(
        out,
        ualp::MainIntegralParams::new(m_prime, n_l, n_k, t)
            .map(|p| ualp::main_integral_closed_form(&p)),
    )
}

/// Closed form of the Bessel integral (requires n - m - 1 >= 0).
#[no_mangle]
pub extern "C" fn ualp_bessel_integral_closed_form(
    n: u32,
    m: f64,
    alpha: f64,
    z: f64,
    out: *mut f64,
) -> UalpStatus {
    write_result(
        out,
        ualp::BesselIntegralParams::new(n, m, alpha, z)
            .and_then(|p| ualp::bessel_integral_closed_form(&p)),
    )
}

/// Closed form of Int_0^inf x^m exp(-beta x^n) dx.
#[no_mangle]
pub extern "C" fn ualp_power_exp_integral_closed_form(
    m: f64,
    n: f64,
    beta: f64,
    out: *mut f64,
) -> UalpStatus {
    write_result(out, ualp::power_exp_integral_closed_form(m, n, beta))
}

/// New quadrature configuration; NULL when the settings are invalid
/// (tolerances must be positive, max_levels >= 3, max_segments >= 10).
#[no_mangle]
pub extern "C" fn ualp_quadrature_spec_new(
    abs_tol: f64,
    rel_tol: f64,
    max_levels: u32,
    max_segments: u32,
) -> *mut UalpQuadratureSpec {
    match QuadratureSpec::new(abs_tol, rel_tol, max_levels, max_segments) {
        Ok(inner) => Box::into_raw(Box::new(UalpQuadratureSpec { inner })),
        Err(_) => std::ptr::null_mut(),
    }
}

/// Default engine configuration (abs/rel 1e-9, 12 levels, 200 segments).
#[no_mangle]
pub extern "C" fn ualp_quadrature_spec_default() -> *mut UalpQuadratureSpec {
    Box::into_raw(Box::new(UalpQuadratureSpec {
        inner: QuadratureSpec::default(),
    }))
}

/// # Safety
/// `spec` must be a pointer previously returned by one of the
/// `ualp_quadrature_spec_*` constructors, not yet freed; NULL is a no-op.
#[no_mangle]
pub unsafe extern "C" fn ualp_quadrature_spec_free(spec: *mut UalpQuadratureSpec) {
    if !spec.is_null() {
        drop(unsafe { Box::from_raw(spec) });
    }
}

fn spec_or_default(spec: *const UalpQuadratureSpec) -> QuadratureSpec {
    if spec.is_null() {
        QuadratureSpec::default()
    } else {
        unsafe { (*spec).inner }
    }
}

/// Quadrature of the composed-argument integral. `spec` may be NULL for the
/// default configuration.
///
/// # Safety
/// `spec`, when non-NULL, must be a live `ualp_quadrature_spec_*` handle.
#[no_mangle]
pub unsafe extern "C" fn ualp_main_integral_numeric(
    m_prime: f64,
    n_l: u32,
    n_k: u32,
    t: f64,
    spec: *const UalpQuadratureSpec,
    out: *mut UalpIntegralResult,
) -> UalpStatus {
    let engine = spec_or_default(spec);
    write_result(
        out,
        ualp::MainIntegralParams::new(m_prime, n_l, n_k, t)
            .and_then(|p| ualp::main_integral_numeric(&p, &engine))
            .map(UalpIntegralResult::from),
    )
}

/// Quadrature of the Bessel integral (convergence guard n > 2m + 1/2).
/// `spec` may be NULL for the default oscillatory configuration.
///
/// # Safety
/// `spec`, when non-NULL, must be a live `ualp_quadrature_spec_*` handle.
#[no_mangle]
pub unsafe extern "C" fn ualp_bessel_integral_numeric(
    n: u32,
    m: f64,
    alpha: f64,
    z: f64,
    spec: *const UalpQuadratureSpec,
    out: *mut UalpIntegralResult,
) -> UalpStatus {
    let engine = if spec.is_null() {
        ualp::default_engine_spec(Identity::BesselIntegral)
    } else {
        unsafe { (*spec).inner }
    };
    write_result(
        out,
        ualp::BesselIntegralParams::new(n, m, alpha, z)
            .and_then(|p| ualp::bessel_integral_numeric(&p, &engine))
            .map(UalpIntegralResult::from),
    )
}

/// Run one identity's compiled-in default grid and return a report handle
/// through `out`. `identity` is one of "norm", "weighted-norm",
/// "orthogonality", "main-integral", "bessel-integral", "power-exp".
///
/// # Safety
/// `identity` must be a NUL-terminated C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ualp_verify_default_grid(
    identity: *const c_char,
    abs_tol: f64,
    rel_tol: f64,
    out: *mut *mut UalpReport,
) -> UalpStatus {
    if identity.is_null() || out.is_null() {
        return UalpStatus::NullPointer;
    }
    let name = match unsafe { CStr::from_ptr(identity) }.to_str() {
        Ok(s) => s,
        Err(_) => return UalpStatus::InvalidUtf8,
    };
    let id: Identity = match name.parse() {
        Ok(id) => id,
        Err(ref e) => return UalpStatus::from(e),
    };
    let engine = ualp::default_engine_spec(id);
    let records =
        match ualp::verify_identity_grid(id, &ualp::default_grid(id), &engine, abs_tol, rel_tol) {
            Ok(records) => records,
            Err(ref e) => return UalpStatus::from(e),
        };
    let tolerance_config = vec![
        ("abs_tol".to_string(), abs_tol),
        ("rel_tol".to_string(), rel_tol),
        ("engine_abs_tol".to_string(), engine.abs_tol),
        ("engine_rel_tol".to_string(), engine.rel_tol),
    ];
    let doc = ualp::ReportDocument::new(id.name(), tolerance_config, records, None);
    unsafe { out.write(Box::into_raw(Box::new(UalpReport { doc }))) };
    UalpStatus::Ok
}

/// Number of records in the report.
///
/// # Safety
/// `report` must be a live handle from `ualp_verify_default_grid`.
#[no_mangle]
pub unsafe extern "C" fn ualp_report_len(report: *const UalpReport) -> usize {
    if report.is_null() {
        return 0;
    }
    unsafe { (*report).doc.records.len() }
}

/// 1 if record `index` passed, 0 if it failed, -1 if out of range.
///
/// # Safety
/// `report` must be a live handle from `ualp_verify_default_grid`.
#[no_mangle]
pub unsafe extern "C" fn ualp_report_record_passed(report: *const UalpReport, index: usize) -> i32 {
    if report.is_null() {
        return -1;
    }
    let records = unsafe { &(*report).doc.records };
    match records.get(index) {
        Some(r) => r.passed as i32,
        None => -1,
    }
}

/// Pass/fail tallies of the report.
///
/// # Safety
/// `report` must be a live handle; the out-pointers must be writable or NULL.
#[no_mangle]
pub unsafe extern "C" fn ualp_report_summary(
    report: *const UalpReport,
    total: *mut usize,
    passed: *mut usize,
    failed: *mut usize,
) -> UalpStatus {
    if report.is_null() {
        return UalpStatus::NullPointer;
    }
    let summary = unsafe { (*report).doc.summary };
    unsafe {
        if !total.is_null() {
            total.write(summary.total);
        }
        if !passed.is_null() {
            passed.write(summary.passed);
        }
        if !failed.is_null() {
            failed.write(summary.failed);
        }
    }
    UalpStatus::Ok
}

/// The report as a JSON document; free the returned string with
/// `ualp_string_free`. Returns NULL on a NULL handle.
///
/// # Safety
/// `report` must be a live handle from `ualp_verify_default_grid`.
#[no_mangle]
pub unsafe extern "C" fn ualp_report_to_json(report: *const UalpReport) -> *mut c_char {
    if report.is_null() {
        return std::ptr::null_mut();
    }
    let json = unsafe { (*report).doc.to_json() };
    match CString::new(json) {
        Ok(s) => s.into_raw(),
        Err(_) => std::ptr::null_mut(),
    }
}

/// # Safety
/// `report` must be a pointer previously returned by
/// `ualp_verify_default_grid`, not yet freed; NULL is a no-op.
#[no_mangle]
pub unsafe extern "C" fn ualp_report_free(report: *mut UalpReport) {
    if !report.is_null() {
        drop(unsafe { Box::from_raw(report) });
    }
}

/// # Safety
/// `s` must be a pointer previously returned by `ualp_report_to_json`, not
/// yet freed; NULL is a no-op.
#[no_mangle]
pub unsafe extern "C" fn ualp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
