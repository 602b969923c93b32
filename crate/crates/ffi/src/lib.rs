//! C ABI over `mxk`.
//!
//! Matroids are opaque `MxkMatroid` handles created by the constructors and
//! released with `mxk_matroid_free`. Every fallible call returns an
//! `MxkStatus`; on failure `mxk_last_error` describes the error for the
//! calling thread. Strings returned by the library are freed with
//! `mxk_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use mxk::algebra::GroupTable;
use mxk::io::Instance;
use mxk::matroid::{complete_graphic, epsilon, MatroidHandle};
use mxk::{ElemSet, Error};

/// Result codes shared by every entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MxkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    CapExceeded = 4,
    UnknownElement = 5,
    Io = 6,
    CheckFailed = 7,
    Panic = 8,
}

/// Opaque matroid handle.
pub struct MxkMatroid(MatroidHandle);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> MxkStatus {
    match e {
        Error::Parse { .. } => MxkStatus::Parse,
        Error::CapExceeded { .. } => MxkStatus::CapExceeded,
        Error::UnknownElement(_) | Error::Overlap(_) => MxkStatus::UnknownElement,
        Error::Io(_) => MxkStatus::Io,
        Error::CheckFailed(_) => MxkStatus::CheckFailed,
        _ => MxkStatus::InvalidArgument,
    }
}

/// Run `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (MxkStatus, String)>) -> MxkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            MxkStatus::Ok
        }
        Ok(Err((s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic".into());
            MxkStatus::Panic
        }
    }
}

fn lib(e: Error) -> (MxkStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (MxkStatus, String) {
    (MxkStatus::NullPointer, format!("{what} is null"))
}

unsafe fn matroid<'a>(m: *const MxkMatroid) -> Result<&'a MatroidHandle, (MxkStatus, String)> {
    m.as_ref().map(|m| &m.0).ok_or_else(|| null("matroid"))
}

unsafe fn ids(p: *const usize, len: usize) -> Result<ElemSet, (MxkStatus, String)> {
    if len == 0 {
        return Ok(ElemSet::new());
    }
    if p.is_null() {
        return Err(null("id array"));
    }
    Ok(std::slice::from_raw_parts(p, len).iter().copied().collect())
}

unsafe fn emit(out: *mut *mut MxkMatroid, m: MatroidHandle) -> Result<(), (MxkStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(MxkMatroid(m)));
    Ok(())
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), (MxkStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = v;
    Ok(())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn mxk_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn mxk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Free a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn mxk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Free a matroid handle. Null is ignored.
///
/// # Safety
/// `m` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn mxk_matroid_free(m: *mut MxkMatroid) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// PG(n-1, q).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mxk_projective_geometry(n: usize, q: u64, out: *mut *mut MxkMatroid) -> MxkStatus {
    guard(|| {
        let m = mxk::linear::projective_geometry(n, q).map_err(lib)?;
        emit(out, m.into_handle())
    })
}

/// AG(n-1, q).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mxk_affine_geometry(n: usize, q: u64, out: *mut *mut MxkMatroid) -> MxkStatus {
    guard(|| {
        let m = mxk::linear::affine_geometry(n, q).map_err(lib)?;
        emit(out, m.into_handle())
    })
}

/// The (n, q, t)-crown.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mxk_crown(n: usize, q: u64, t: usize, out: *mut *mut MxkMatroid) -> MxkStatus {
    guard(|| {
        let m = mxk::linear::crown(n, q, t).map_err(lib)?;
        emit(out, m.into_handle())
    })
}

/// M(K_t).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mxk_complete_graphic(t: usize, out: *mut *mut MxkMatroid) -> MxkStatus {
    guard(|| emit(out, complete_graphic(t)))
}

/// The Dowling geometry of rank `n` over the cyclic group of order `k`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mxk_dowling_cyclic(n: usize, k: usize, out: *mut *mut MxkMatroid) -> MxkStatus {
    guard(|| {
        let g = GroupTable::cyclic(k).map_err(lib)?;
        emit(out, mxk::frame::dowling(n, &g).map_err(lib)?)
    })
}

/// Parse an instance in the text format (linear, graphic, biased graph or
/// graph) and return its matroid.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mxk_matroid_parse(text: *const c_char, out: *mut *mut MxkMatroid) -> MxkStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| (MxkStatus::Parse, "text is not UTF-8".to_string()))?;
        let inst: Instance = s.parse().map_err(lib)?;
        emit(out, inst.matroid())
    })
}

/// Number of elements.
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mxk_matroid_size(m: *const MxkMatroid, out: *mut usize) -> MxkStatus {
    guard(|| put(out, matroid(m)?.size()))
}

/// Rank of the matroid.
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mxk_matroid_rank(m: *const MxkMatroid, out: *mut usize) -> MxkStatus {
    guard(|| put(out, matroid(m)?.rank()))
}

/// Number of points (rank-1 flats).
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mxk_matroid_epsilon(m: *const MxkMatroid, out: *mut usize) -> MxkStatus {
    guard(|| put(out, epsilon(matroid(m)?)))
}

/// Rank of the set `ids[0..len]`.
///
/// # Safety
/// `m` must be a live handle, `ids` must hold `len` values, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn mxk_matroid_rank_of(
    m: *const MxkMatroid,
    ids_ptr: *const usize,
    len: usize,
    out: *mut usize,
) -> MxkStatus {
    guard(|| {
        let m = matroid(m)?;
        let s = ids(ids_ptr, len)?;
        put(out, m.rank_of(&s).map_err(lib)?)
    })
}

/// The minor `m / contract \ delete` as a new handle.
///
/// # Safety
/// `m` must be a live handle; the arrays must hold the given counts.
#[no_mangle]
pub unsafe extern "C" fn mxk_matroid_minor(
    m: *const MxkMatroid,
    contract: *const usize,
    contract_len: usize,
    delete: *const usize,
    delete_len: usize,
    out: *mut *mut MxkMatroid,
) -> MxkStatus {
    guard(|| {
        let m = matroid(m)?;
        let c = ids(contract, contract_len)?;
        let d = ids(delete, delete_len)?;
        emit(out, m.minor(&c, &d).map_err(lib)?)
    })
}

unsafe fn witness_out(
    found: *mut bool,
    witness: *mut *mut c_char,
    w: Option<mxk::search::MinorWitness>,
) -> Result<(), (MxkStatus, String)> {
    put(found, w.is_some())?;
    if !witness.is_null() {
        *witness = match w {
            Some(w) => CString::new(w.to_string()).map_or(ptr::null_mut(), CString::into_raw),
            None => ptr::null_mut(),
        };
    }
    Ok(())
}

/// Whether `m` has a `U_{2,k}`-minor. When `witness` is not null it receives
/// the witness text (or null), to be freed with `mxk_string_free`.
///
/// # Safety
/// `m` must be a live handle and `found` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mxk_has_line_minor(
    m: *const MxkMatroid,
    k: usize,
    found: *mut bool,
    witness: *mut *mut c_char,
) -> MxkStatus {
    guard(|| {
        let w = mxk::search::has_line_minor(matroid(m)?, k).map_err(lib)?;
        witness_out(found, witness, w)
    })
}

/// Whether `m` has an `M(K_t)`-minor; witness as in `mxk_has_line_minor`.
///
/// # Safety
/// `m` must be a live handle and `found` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mxk_has_clique_minor(
    m: *const MxkMatroid,
    t: usize,
    found: *mut bool,
    witness: *mut *mut c_char,
) -> MxkStatus {
    guard(|| {
        let w = mxk::search::has_clique_minor(matroid(m)?, t).map_err(lib)?;
        witness_out(found, witness, w)
    })
}

/// `w_n(m)`: the number of n-towers of the simplification.
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mxk_count_towers(m: *const MxkMatroid, n: usize, out: *mut u64) -> MxkStatus {
    guard(|| put(out, mxk::towers::count_w(matroid(m)?, n).map_err(lib)? as u64))
}
