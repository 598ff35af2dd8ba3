//! C interface to `shifted-chains`.
//!
//! Paths and tableaux cross the boundary as opaque handles; counts are
//! returned as decimal strings since they outgrow 64 bits. Every function
//! returns an [`ScStatus`]; on failure [`sc_last_error`] describes what went
//! wrong on the calling thread. Strings handed out must be released with
//! [`sc_string_free`], handles with their own `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use shifted_chains::bijections::{theta, theta_inv};
use shifted_chains::cli::parse_tableau;
use shifted_chains::formulas::{f_by_tableaux, j_count, saturated_count};
use shifted_chains::lattice::degree_formula;
use shifted_chains::tableaux::count_weak;
use shifted_chains::{Error, Multichain, Path, Shape, ShiftedTableau};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    InvalidUtf8 = 2,
    /// Malformed path word, tableau JSON or multichain text.
    ParseError = 3,
    /// Well-formed input outside the domain of the operation.
    InvalidInput = 4,
    /// A bound or size limit was exceeded.
    OutOfRange = 5,
    /// A panic or broken invariant inside the library.
    Internal = 6,
}

/// A binary path.
pub struct ScPath {
    inner: Path,
}

/// A shifted tableau.
pub struct ScTableau {
    inner: ShiftedTableau,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure {
    status: ScStatus,
    message: String,
}

impl Failure {
    fn new(status: ScStatus, message: impl Into<String>) -> Failure {
        Failure { status, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let status = match &e {
            Error::InvalidStep { .. } | Error::InvalidHeights { .. } | Error::InvalidEncoding(_) | Error::Parse(_) => {
                ScStatus::ParseError
            }
            Error::BoundViolation(_)
            | Error::LimitExceeded { .. }
            | Error::CellOutOfRange { .. }
            | Error::PointOutOfRange { .. } => ScStatus::OutOfRange,
            Error::Invariant(_) | Error::Io(_) => ScStatus::Internal,
            _ => ScStatus::InvalidInput,
        };
        Failure::new(status, e.to_string())
    }
}

fn set_last_error(message: Option<String>) {
    let value = message.map(|m| CString::new(m.replace('\0', " ")).expect("no interior nul"));
    LAST_ERROR.with(|slot| *slot.borrow_mut() = value);
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> ScStatus {
    let outcome = catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|panic| {
        let message = panic
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| panic.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "panic".to_string());
        Err(Failure::new(ScStatus::Internal, message))
    });
    match outcome {
        Ok(()) => {
            set_last_error(None);
            ScStatus::Ok
        }
        Err(f) => {
            set_last_error(Some(f.message));
            f.status
        }
    }
}

unsafe fn text<'a>(s: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure::new(ScStatus::NullArgument, format!("{} is null", name)));
    }
    CStr::from_ptr(s).to_str().map_err(|e| Failure::new(ScStatus::InvalidUtf8, format!("{}: {}", name, e)))
}

unsafe fn get<'a, T>(p: *const T, name: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure::new(ScStatus::NullArgument, format!("{} is null", name)))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::new(ScStatus::NullArgument, "output pointer is null"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, value: String) -> Result<(), Failure> {
    let c = CString::new(value).map_err(|e| Failure::new(ScStatus::Internal, e.to_string()))?;
    if out.is_null() {
        return Err(Failure::new(ScStatus::NullArgument, "output pointer is null"));
    }
    out.write(c.into_raw());
    Ok(())
}

fn shape_of_stripped(p: &Path) -> Result<Shape, Error> {
    let q = p.strip_leading_ups();
    if q.is_empty() {
        Ok(Shape::default())
    } else {
        Shape::of_path(&q)
    }
}

/// The message of the last failure on this thread, or null after a success.
/// The pointer stays valid until the next call into this library on the
/// same thread.
#[no_mangle]
pub extern "C" fn sc_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a word over `u` and `d`.
///
/// # Safety
/// `word` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_path_parse(word: *const c_char, out: *mut *mut ScPath) -> ScStatus {
    guard(|| {
        let p: Path = text(word, "word")?.parse()?;
        put(out, Box::into_raw(Box::new(ScPath { inner: p })))
    })
}

/// # Safety
/// `path` must be null or a handle from [`sc_path_parse`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sc_path_free(path: *mut ScPath) {
    if !path.is_null() {
        drop(Box::from_raw(path));
    }
}

/// # Safety
/// `path` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_path_length(path: *const ScPath, out: *mut usize) -> ScStatus {
    guard(|| put(out, get(path, "path")?.inner.len()))
}

/// # Safety
/// `path` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_path_to_string(path: *const ScPath, out: *mut *mut c_char) -> ScStatus {
    guard(|| put_string(out, get(path, "path")?.inner.to_string()))
}

/// The number of fillings from the path to the top.
///
/// # Safety
/// `path` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_path_degree(path: *const ScPath, out: *mut u64) -> ScStatus {
    guard(|| put(out, degree_formula(&get(path, "path")?.inner)))
}

/// The parts of `λ(P)` as a JSON array, `[]` for `u^n`.
///
/// # Safety
/// `path` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_path_shape(path: *const ScPath, out: *mut *mut c_char) -> ScStatus {
    guard(|| {
        let shape = shape_of_stripped(&get(path, "path")?.inner)?;
        put_string(out, serde_json::to_string(shape.parts()).expect("parts serialize"))
    })
}

/// The number of minimal small-interval chains to the top.
///
/// # Safety
/// `path` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_path_f(path: *const ScPath, out: *mut *mut c_char) -> ScStatus {
    guard(|| put_string(out, f_by_tableaux(&get(path, "path")?.inner).to_string()))
}

/// The number of saturated chains to the top; fails for `u^n`.
///
/// # Safety
/// `path` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_path_saturated_count(path: *const ScPath, out: *mut *mut c_char) -> ScStatus {
    guard(|| put_string(out, saturated_count(&get(path, "path")?.inner)?.to_string()))
}

/// The number of multichains of length `k` from the path to the top.
///
/// # Safety
/// `path` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_path_multichain_count(path: *const ScPath, k: u32, out: *mut *mut c_char) -> ScStatus {
    guard(|| {
        let shape = shape_of_stripped(&get(path, "path")?.inner)?;
        put_string(out, count_weak(&shape, k).to_string())
    })
}

/// Summary statistics as a JSON object with string values.
///
/// # Safety
/// `path` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_path_analyze(path: *const ScPath, out: *mut *mut c_char) -> ScStatus {
    guard(|| {
        let p = &get(path, "path")?.inner;
        let shape = shape_of_stripped(p)?;
        let value = serde_json::json!({
            "path": p.to_string(),
            "n": p.len().to_string(),
            "delta": degree_formula(p).to_string(),
            "shape": shape.to_string(),
            "f": f_by_tableaux(p).to_string(),
            "saturated": saturated_count(p).ok().map(|c| c.to_string()),
            "interval": j_count(p).to_string(),
        });
        put_string(out, value.to_string())
    })
}

/// Parses a tableau from `{"shape": [...], "rows": [[...], ...]}` or a bare
/// array of rows.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_tableau_parse(json: *const c_char, out: *mut *mut ScTableau) -> ScStatus {
    guard(|| {
        let t = parse_tableau(text(json, "json")?)?;
        put(out, Box::into_raw(Box::new(ScTableau { inner: t })))
    })
}

/// # Safety
/// `tableau` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sc_tableau_free(tableau: *mut ScTableau) {
    if !tableau.is_null() {
        drop(Box::from_raw(tableau));
    }
}

/// # Safety
/// `tableau` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_tableau_to_json(tableau: *const ScTableau, out: *mut *mut c_char) -> ScStatus {
    guard(|| put_string(out, get(tableau, "tableau")?.inner.to_json()))
}

/// The largest entry, 0 for the empty tableau.
///
/// # Safety
/// `tableau` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_tableau_max(tableau: *const ScTableau, out: *mut u32) -> ScStatus {
    guard(|| put(out, get(tableau, "tableau")?.inner.max_entry()))
}

/// The tableau of a multichain given as one word per line, bottom first.
///
/// # Safety
/// `chain` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_theta(chain: *const c_char, out: *mut *mut ScTableau) -> ScStatus {
    guard(|| {
        let c = Multichain::parse_text(text(chain, "chain")?)?;
        put(out, Box::into_raw(Box::new(ScTableau { inner: theta(&c)? })))
    })
}

/// The multichain of length `k` encoded by a tableau, one word per line.
///
/// # Safety
/// `tableau` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_theta_inv(tableau: *const ScTableau, k: usize, out: *mut *mut c_char) -> ScStatus {
    guard(|| {
        let c = theta_inv(&get(tableau, "tableau")?.inner, k)?;
        put_string(out, c.to_text())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn library_errors_map_to_status_codes() {
        assert_eq!(Failure::from(Error::Parse("x".into())).status, ScStatus::ParseError);
        assert_eq!(Failure::from(Error::Incomparable).status, ScStatus::InvalidInput);
        assert_eq!(Failure::from(Error::BoundViolation("k".into())).status, ScStatus::OutOfRange);
        assert_eq!(Failure::from(Error::Invariant("i".into())).status, ScStatus::Internal);
    }

    #[test]
    fn panics_become_internal_errors() {
        assert_eq!(guard(|| panic!("boom")), ScStatus::Internal);
        assert_eq!(unsafe { CStr::from_ptr(sc_last_error()) }.to_str().unwrap(), "boom");
        assert_eq!(guard(|| Ok(())), ScStatus::Ok);
        assert!(sc_last_error().is_null());
    }
}
