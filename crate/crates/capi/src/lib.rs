//! C ABI over the curvature-operator certification library.
//!
//! All objects are opaque handles created and freed here; every function
//! is panic-safe and reports failures through status codes, with a
//! thread-local message available from [`sc_last_error_message`]. See
//! `include/strongcurv.h` for the generated header.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use strongcurv::certify::{
    certify_strongly_nonnegative, certify_strongly_positive, strong_fatness, CertKind, Certificate,
};
use strongcurv::config::Config;
use strongcurv::construct::{normal_homogeneous, wallach, Coset};
use strongcurv::curvature::min_sec_estimate;
use strongcurv::exterior::{Basis4, FourForm, SymOp};
use strongcurv::liealg::{
    build_split, invariant_four_forms, HomogeneousSplit, Space, SubspaceSelector,
};
use strongcurv::report::CertificateSummary;

/// Status codes returned by fallible functions.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum ScStatus {
    ScOk = 0,
    ScNullArgument = 1,
    ScInvalidArgument = 2,
    ScComputationFailed = 3,
    ScInvalidUtf8 = 4,
    ScPanic = 5,
}

/// Certification outcomes (see `sc_certificate_kind`).
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum ScCertKind {
    ScPrimalPositive = 0,
    ScPrimalNonnegative = 1,
    ScDualInfeasible = 2,
    ScInconclusive = 3,
}

/// Coset selector for `sc_operator_normal_homogeneous`.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum ScCoset {
    ScTotalSpace = 0,
    ScBase = 1,
    ScFiber = 2,
}

/// Opaque homogeneous-splitting handle.
pub struct ScSplit {
    split: HomogeneousSplit,
}

/// Opaque symmetric-operator handle (over the full pair basis).
pub struct ScOperator {
    op: SymOp,
}

/// Opaque certificate handle.
pub struct ScCertificate {
    cert: Certificate,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let sanitized: String = msg.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn guarded<T>(default: T, body: impl FnOnce() -> T) -> T {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(v) => v,
        Err(_) => {
            set_error("internal panic");
            default
        }
    }
}

/// Message describing the most recent failure on this thread. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn sc_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}

unsafe fn cstr<'a>(ptr: *const c_char) -> Option<&'a str> {
    if ptr.is_null() {
        set_error("null string argument");
        return None;
    }
    match CStr::from_ptr(ptr).to_str() {
        Ok(s) => Some(s),
        Err(_) => {
            set_error("argument is not valid UTF-8");
            None
        }
    }
}

/// Build a built-in splitting. `name` is one of sphere, cpn, hpn, w6,
/// w12, w7, b7, b13, berger7; `n` feeds sphere/cpn/hpn, `k`/`l` feed w7
/// (pass 0 when unused). Returns NULL on failure.
///
/// # Safety
/// `name` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn sc_split_builtin(
    name: *const c_char,
    n: usize,
    k: i64,
    l: i64,
) -> *mut ScSplit {
    guarded(ptr::null_mut(), || {
        let Some(name) = (unsafe { cstr(name) }) else {
            return ptr::null_mut();
        };
        let space = match name {
            "sphere" => Space::Sphere(n),
            "cpn" => Space::Cpn(n),
            "hpn" => Space::Hpn(n),
            "w6" => Space::W6,
            "w12" => Space::W12,
            "w7" => Space::W7 { k, l },
            "b7" => Space::B7,
            "b13" => Space::B13,
            "berger7" => Space::BergerSphere(1),
            other => {
                set_error(&format!("unknown space '{other}'"));
                return ptr::null_mut();
            }
        };
        match build_split(space) {
            Ok(split) => Box::into_raw(Box::new(ScSplit { split })),
            Err(e) => {
                set_error(&e.to_string());
                ptr::null_mut()
            }
        }
    })
}

/// Load a splitting from its JSON schema. Returns NULL on failure.
///
/// # Safety
/// `json` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn sc_split_from_json(json: *const c_char) -> *mut ScSplit {
    guarded(ptr::null_mut(), || {
        let Some(text) = (unsafe { cstr(json) }) else {
            return ptr::null_mut();
        };
        let parsed: Result<strongcurv::io::SplitJson, _> =
            serde_json::from_str(text).map_err(|e| e.to_string());
        match parsed.and_then(|j| strongcurv::io::split_from_json(&j).map_err(|e| e.to_string())) {
            Ok(split) => Box::into_raw(Box::new(ScSplit { split })),
            Err(e) => {
                set_error(&e);
                ptr::null_mut()
            }
        }
    })
}

/// Serialize a splitting to JSON; free the string with `sc_string_free`.
///
/// # Safety
/// `split` must be a live handle from this library or NULL.
#[no_mangle]
pub unsafe extern "C" fn sc_split_to_json(split: *const ScSplit) -> *mut c_char {
    guarded(ptr::null_mut(), || {
        let Some(split) = (unsafe { split.as_ref() }) else {
            set_error("null split");
            return ptr::null_mut();
        };
        let j = strongcurv::io::split_to_json(&split.split);
        match serde_json_string(&j) {
            Some(text) => into_cstring(text),
            None => ptr::null_mut(),
        }
    })
}

/// Tangent dimension (dim m + dim p) of a splitting; 0 for NULL.
///
/// # Safety
/// `split` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn sc_split_tangent_dim(split: *const ScSplit) -> usize {
    unsafe { split.as_ref() }.map_or(0, |s| s.split.tangent_dim())
}

/// # Safety
/// `split` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sc_split_free(split: *mut ScSplit) {
    if !split.is_null() {
        drop(unsafe { Box::from_raw(split) });
    }
}

/// Normal homogeneous curvature operator of the selected coset.
///
/// # Safety
/// `split` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn sc_operator_normal_homogeneous(
    split: *const ScSplit,
    coset: ScCoset,
) -> *mut ScOperator {
    guarded(ptr::null_mut(), || {
        let Some(split) = (unsafe { split.as_ref() }) else {
            set_error("null split");
            return ptr::null_mut();
        };
        let coset = match coset {
            ScCoset::ScTotalSpace => Coset::GModH,
            ScCoset::ScBase => Coset::GModK,
            ScCoset::ScFiber => Coset::KModH,
        };
        match normal_homogeneous(&split.split, coset) {
            Ok((r, _)) => Box::into_raw(Box::new(ScOperator { op: r })),
            Err(e) => {
                set_error(&e.to_string());
                ptr::null_mut()
            }
        }
    })
}

/// Curvature operator of the fiber-rescaled metric g_t.
///
/// # Safety
/// `split` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn sc_operator_fiber_rescaled(
    split: *const ScSplit,
    t: f64,
) -> *mut ScOperator {
    guarded(ptr::null_mut(), || {
        let Some(split) = (unsafe { split.as_ref() }) else {
            set_error("null split");
            return ptr::null_mut();
        };
        match wallach(&split.split, t) {
            Ok(w) => Box::into_raw(Box::new(ScOperator { op: w.op().clone() })),
            Err(e) => {
                set_error(&e.to_string());
                ptr::null_mut()
            }
        }
    })
}

/// Side length of the operator matrix (the number of basis 2-vectors).
///
/// # Safety
/// `op` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn sc_operator_dim(op: *const ScOperator) -> usize {
    unsafe { op.as_ref() }.map_or(0, |o| o.op.dim())
}

/// Matrix entry in the lexicographic pair basis.
///
/// # Safety
/// `op` must be a live handle or NULL; `out` must point at a writable f64.
#[no_mangle]
pub unsafe extern "C" fn sc_operator_entry(
    op: *const ScOperator,
    row: usize,
    col: usize,
    out: *mut f64,
) -> ScStatus {
    let Some(op) = (unsafe { op.as_ref() }) else {
        set_error("null operator");
        return ScStatus::ScNullArgument;
    };
    if out.is_null() {
        set_error("null output pointer");
        return ScStatus::ScNullArgument;
    }
    if row >= op.op.dim() || col >= op.op.dim() {
        set_error("entry index out of range");
        return ScStatus::ScInvalidArgument;
    }
    unsafe { *out = op.op.matrix()[(row, col)] };
    ScStatus::ScOk
}

/// Smallest eigenvalue of the operator.
///
/// # Safety
/// `op` must be a live handle or NULL; `out` must point at a writable f64.
#[no_mangle]
pub unsafe extern "C" fn sc_operator_lambda_min(op: *const ScOperator, out: *mut f64) -> ScStatus {
    guarded(ScStatus::ScPanic, || {
        let Some(op) = (unsafe { op.as_ref() }) else {
            set_error("null operator");
            return ScStatus::ScNullArgument;
        };
        if out.is_null() {
            set_error("null output pointer");
            return ScStatus::ScNullArgument;
        }
        unsafe { *out = op.op.lambda_min() };
        ScStatus::ScOk
    })
}

/// Heuristic minimum of the sectional-curvature function (an upper bound
/// on the true minimum), deterministic for a fixed seed.
///
/// # Safety
/// `op` must be a live handle or NULL; `out` must point at a writable f64.
#[no_mangle]
pub unsafe extern "C" fn sc_operator_min_sec(
    op: *const ScOperator,
    restarts: usize,
    seed: u64,
    out: *mut f64,
) -> ScStatus {
    guarded(ScStatus::ScPanic, || {
        let Some(op) = (unsafe { op.as_ref() }) else {
            set_error("null operator");
            return ScStatus::ScNullArgument;
        };
        if out.is_null() {
            set_error("null output pointer");
            return ScStatus::ScNullArgument;
        }
        match min_sec_estimate(&op.op, restarts, seed) {
            Ok(ms) => {
                unsafe { *out = ms.value };
                ScStatus::ScOk
            }
            Err(e) => {
                set_error(&e.to_string());
                ScStatus::ScComputationFailed
            }
        }
    })
}

/// # Safety
/// `op` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sc_operator_free(op: *mut ScOperator) {
    if !op.is_null() {
        drop(unsafe { Box::from_raw(op) });
    }
}

fn run_certification(
    split: &HomogeneousSplit,
    op: &SymOp,
    nonnegative: bool,
) -> Result<Certificate, String> {
    let selector = if op.n() == split.dim_m() && split.dim_p() > 0 {
        SubspaceSelector::MOnly
    } else {
        SubspaceSelector::Tangent
    };
    let search: Vec<FourForm> = invariant_four_forms(split, selector).map_err(|e| e.to_string())?;
    let cfg = Config::default();
    let run = if nonnegative {
        certify_strongly_nonnegative(op, &search, &cfg)
    } else {
        certify_strongly_positive(op, &search, None, &cfg)
    };
    run.map_err(|e| e.to_string())
}

/// Certify the operator over the H-invariant 4-forms of the split (the
/// operator must live over Λ² of the split's tangent space, or of m for
/// base operators). Set `nonnegative` for the semidefinite variant.
///
/// # Safety
/// `split` and `op` must be live handles or NULL.
#[no_mangle]
pub unsafe extern "C" fn sc_certify(
    split: *const ScSplit,
    op: *const ScOperator,
    nonnegative: bool,
) -> *mut ScCertificate {
    guarded(ptr::null_mut(), || {
        let (Some(split), Some(op)) = (unsafe { split.as_ref() }, unsafe { op.as_ref() }) else {
            set_error("null argument");
            return ptr::null_mut();
        };
        match run_certification(&split.split, &op.op, nonnegative) {
            Ok(cert) => Box::into_raw(Box::new(ScCertificate { cert })),
            Err(e) => {
                set_error(&e);
                ptr::null_mut()
            }
        }
    })
}

/// Certify over the full 4-form space of the operator's dimension.
///
/// # Safety
/// `op` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn sc_certify_full(
    op: *const ScOperator,
    nonnegative: bool,
) -> *mut ScCertificate {
    guarded(ptr::null_mut(), || {
        let Some(op) = (unsafe { op.as_ref() }) else {
            set_error("null operator");
            return ptr::null_mut();
        };
        let b4 = Basis4::new(op.op.n());
        let search: Vec<FourForm> = (0..b4.len())
            .map(|t| {
                let mut coords = nalgebra::DVector::zeros(b4.len());
                coords[t] = 1.0;
                FourForm::new(b4.clone(), coords).expect("unit coordinates")
            })
            .collect();
        let cfg = Config::default();
        let run = if nonnegative {
            certify_strongly_nonnegative(&op.op, &search, &cfg)
        } else {
            certify_strongly_positive(&op.op, &search, None, &cfg)
        };
        match run {
            Ok(cert) => Box::into_raw(Box::new(ScCertificate { cert })),
            Err(e) => {
                set_error(&e.to_string());
                ptr::null_mut()
            }
        }
    })
}

/// Strong-fatness certification of a fibration split.
///
/// # Safety
/// `split` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn sc_strong_fatness(split: *const ScSplit) -> *mut ScCertificate {
    guarded(ptr::null_mut(), || {
        let Some(split) = (unsafe { split.as_ref() }) else {
            set_error("null split");
            return ptr::null_mut();
        };
        match strong_fatness(&split.split, &Config::default()) {
            Ok(cert) => Box::into_raw(Box::new(ScCertificate { cert })),
            Err(e) => {
                set_error(&e.to_string());
                ptr::null_mut()
            }
        }
    })
}

/// Outcome kind, or -1 for NULL.
///
/// # Safety
/// `cert` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn sc_certificate_kind(cert: *const ScCertificate) -> c_int {
    match unsafe { cert.as_ref() } {
        None => -1,
        Some(c) => match c.cert.kind {
            CertKind::PrimalPositive => ScCertKind::ScPrimalPositive as c_int,
            CertKind::PrimalNonnegative => ScCertKind::ScPrimalNonnegative as c_int,
            CertKind::DualInfeasible => ScCertKind::ScDualInfeasible as c_int,
            CertKind::Inconclusive => ScCertKind::ScInconclusive as c_int,
        },
    }
}

/// Verified λ_min of the modified operator (primal outcomes only).
///
/// # Safety
/// `cert` must be a live handle or NULL; `out` must point at a writable f64.
#[no_mangle]
pub unsafe extern "C" fn sc_certificate_lambda_min(
    cert: *const ScCertificate,
    out: *mut f64,
) -> ScStatus {
    let Some(cert) = (unsafe { cert.as_ref() }) else {
        set_error("null certificate");
        return ScStatus::ScNullArgument;
    };
    if out.is_null() {
        set_error("null output pointer");
        return ScStatus::ScNullArgument;
    }
    match cert.cert.lambda_min {
        Some(v) => {
            unsafe { *out = v };
            ScStatus::ScOk
        }
        None => {
            set_error("certificate carries no primal margin");
            ScStatus::ScInvalidArgument
        }
    }
}

/// `tr(R S)` of a dual certificate.
///
/// # Safety
/// `cert` must be a live handle or NULL; `out` must point at a writable f64.
#[no_mangle]
pub unsafe extern "C" fn sc_certificate_pairing(
    cert: *const ScCertificate,
    out: *mut f64,
) -> ScStatus {
    let Some(cert) = (unsafe { cert.as_ref() }) else {
        set_error("null certificate");
        return ScStatus::ScNullArgument;
    };
    if out.is_null() {
        set_error("null output pointer");
        return ScStatus::ScNullArgument;
    }
    match cert.cert.pairing {
        Some(v) => {
            unsafe { *out = v };
            ScStatus::ScOk
        }
        None => {
            set_error("certificate carries no dual pairing");
            ScStatus::ScInvalidArgument
        }
    }
}

/// Serialize the certificate summary to JSON; free with `sc_string_free`.
///
/// # Safety
/// `cert` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn sc_certificate_to_json(cert: *const ScCertificate) -> *mut c_char {
    guarded(ptr::null_mut(), || {
        let Some(cert) = (unsafe { cert.as_ref() }) else {
            set_error("null certificate");
            return ptr::null_mut();
        };
        let summary = CertificateSummary::from_certificate(&cert.cert, true);
        match serde_json_string(&summary) {
            Some(text) => into_cstring(text),
            None => ptr::null_mut(),
        }
    })
}

/// # Safety
/// `cert` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sc_certificate_free(cert: *mut ScCertificate) {
    if !cert.is_null() {
        drop(unsafe { Box::from_raw(cert) });
    }
}

/// Free a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

fn into_cstring(text: String) -> *mut c_char {
    match CString::new(text) {
        Ok(c) => c.into_raw(),
        Err(_) => {
            set_error("string contains interior NUL");
            ptr::null_mut()
        }
    }
}

fn serde_json_string<T: serde::Serialize>(value: &T) -> Option<String> {
    match serde_json::to_string_pretty(value) {
        Ok(s) => Some(s),
        Err(e) => {
            set_error(&e.to_string());
            None
        }
    }
}
