//! C interface: parse an algebra description once, then query it. All
//! results cross the boundary as JSON strings in the same shape the
//! command-line tool prints.
//!
//! Ownership rules: `qh_algebra_parse` hands out a pointer that must go
//! back through `qh_algebra_free`; every `char*` written to an out
//! parameter must go back through `qh_string_free`. On any status other
//! than `Ok` the out parameter (when present and non-null) receives an
//! error message instead of a payload.

use qhstruct::report::{check_report, connect_report, enumerate_report, to_json};
use qhstruct::{Algebra, AlgebraFile, Perm, Strategy};
use std::ffi::{c_char, CStr, CString};
use std::sync::Arc;

/// Opaque algebra handle.
pub struct QhAlgebra {
    inner: Arc<Algebra>,
}

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QhStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The algebra description did not parse or build.
    ParseFailed = 3,
    /// An order or word argument was malformed for this algebra.
    InvalidOrder = 4,
    /// The computation itself refused (too many vertices, endpoint not
    /// quasi-hereditary, ...); see the message in the out parameter.
    Failed = 5,
}

fn export(s: String) -> *mut c_char {
    // JSON and error strings never contain interior NULs.
    CString::new(s)
        .map(CString::into_raw)
        .unwrap_or(std::ptr::null_mut())
}

unsafe fn write_out(out: *mut *mut c_char, s: String) {
    if !out.is_null() {
        *out = export(s);
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, QhStatus> {
    if p.is_null() {
        return Err(QhStatus::NullArgument);
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| QhStatus::InvalidUtf8)
}

fn parse_order(s: &str, n: usize) -> Result<Perm, String> {
    let entries: Vec<usize> = s
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| format!("order must be comma-separated integers, got `{s}`"))?;
    if entries.len() != n {
        return Err(format!(
            "order has {} entries but the algebra has {n} vertices",
            entries.len()
        ));
    }
    Perm::from_one_line(&entries).map_err(|e| e.to_string())
}

/// Parses and builds an algebra from its text description.
///
/// Returns null on failure; when `error_out` is non-null it then receives
/// a message (free it with `qh_string_free`).
///
/// # Safety
/// `text` must be a valid NUL-terminated string or null. `error_out` must
/// be null or point to writable memory.
#[no_mangle]
pub unsafe extern "C" fn qh_algebra_parse(
    text: *const c_char,
    error_out: *mut *mut c_char,
) -> *mut QhAlgebra {
    if !error_out.is_null() {
        *error_out = std::ptr::null_mut();
    }
    let text = match read_str(text) {
        Ok(t) => t,
        Err(st) => {
            write_out(error_out, format!("{st:?}"));
            return std::ptr::null_mut();
        }
    };
    match AlgebraFile::parse(text).and_then(|f| f.build()) {
        Ok(inner) => Box::into_raw(Box::new(QhAlgebra { inner })),
        Err(e) => {
            write_out(error_out, e.to_string());
            std::ptr::null_mut()
        }
    }
}

/// Releases a handle from `qh_algebra_parse`. Null is a no-op.
///
/// # Safety
/// `alg` must be null or a pointer obtained from `qh_algebra_parse` that
/// has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn qh_algebra_free(alg: *mut QhAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Number of vertices (simple modules); 0 for null.
///
/// # Safety
/// `alg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qh_algebra_vertices(alg: *const QhAlgebra) -> usize {
    alg.as_ref().map_or(0, |a| a.inner.n())
}

/// Total dimension over the base field; 0 for null.
///
/// # Safety
/// `alg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qh_algebra_dimension(alg: *const QhAlgebra) -> usize {
    alg.as_ref().map_or(0, |a| a.inner.dim())
}

/// Quasi-heredity check for one order (one-line notation, e.g. "1,2,4,3").
/// On `Ok`, `json_out` receives the same JSON `qh check --json` prints.
///
/// # Safety
/// `alg` must be a live handle, `order` a valid NUL-terminated string;
/// `json_out` must be null or point to writable memory.
#[no_mangle]
pub unsafe extern "C" fn qh_check_json(
    alg: *const QhAlgebra,
    order: *const c_char,
    json_out: *mut *mut c_char,
) -> QhStatus {
    if !json_out.is_null() {
        *json_out = std::ptr::null_mut();
    }
    let Some(a) = alg.as_ref() else {
        return QhStatus::NullArgument;
    };
    let order = match read_str(order) {
        Ok(s) => s,
        Err(st) => return st,
    };
    match parse_order(order, a.inner.n()) {
        Ok(sigma) => {
            write_out(json_out, to_json(&check_report(&a.inner, &sigma)));
            QhStatus::Ok
        }
        Err(msg) => {
            write_out(json_out, msg);
            QhStatus::InvalidOrder
        }
    }
}

/// Enumerates all quasi-hereditary orders; `strategy` is "brute" or "bfs".
///
/// # Safety
/// Same contract as `qh_check_json`.
#[no_mangle]
pub unsafe extern "C" fn qh_enumerate_json(
    alg: *const QhAlgebra,
    strategy: *const c_char,
    json_out: *mut *mut c_char,
) -> QhStatus {
    if !json_out.is_null() {
        *json_out = std::ptr::null_mut();
    }
    let Some(a) = alg.as_ref() else {
        return QhStatus::NullArgument;
    };
    let strategy = match read_str(strategy) {
        Ok(s) => s,
        Err(st) => return st,
    };
    let strategy: Strategy = match strategy.parse() {
        Ok(s) => s,
        Err(msg) => {
            write_out(json_out, msg);
            return QhStatus::InvalidOrder;
        }
    };
    match enumerate_report(&a.inner, strategy) {
        Ok(r) => {
            write_out(json_out, to_json(&r));
            QhStatus::Ok
        }
        Err(e) => {
            write_out(json_out, e.to_string());
            QhStatus::Failed
        }
    }
}

/// Certified twist path between two quasi-hereditary orders.
///
/// # Safety
/// Same contract as `qh_check_json`.
#[no_mangle]
pub unsafe extern "C" fn qh_connect_json(
    alg: *const QhAlgebra,
    from: *const c_char,
    to: *const c_char,
    json_out: *mut *mut c_char,
) -> QhStatus {
    if !json_out.is_null() {
        *json_out = std::ptr::null_mut();
    }
    let Some(a) = alg.as_ref() else {
        return QhStatus::NullArgument;
    };
    let (from, to) = match (read_str(from), read_str(to)) {
        (Ok(f), Ok(t)) => (f, t),
        (Err(st), _) | (_, Err(st)) => return st,
    };
    let n = a.inner.n();
    let (from, to) = match (parse_order(from, n), parse_order(to, n)) {
        (Ok(f), Ok(t)) => (f, t),
        (Err(msg), _) | (_, Err(msg)) => {
            write_out(json_out, msg);
            return QhStatus::InvalidOrder;
        }
    };
    match connect_report(&a.inner, &from, &to) {
        Ok(r) => {
            write_out(json_out, to_json(&r));
            QhStatus::Ok
        }
        Err(e) => {
            write_out(json_out, e.to_string());
            QhStatus::Failed
        }
    }
}

/// Releases any string handed out by this library. Null is a no-op.
///
/// # Safety
/// `s` must be null or a string obtained from this library that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn qh_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
