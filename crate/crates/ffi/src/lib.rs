//! C ABI over `coulomb-hankel`.
//!
//! Exact quantities cross the boundary as strings (`"p/q"` or an integer),
//! floating-point quantities as `double`. Every fallible call returns a
//! [`ChStatus`]; on failure [`ch_last_error`] describes the cause for the
//! calling thread. Strings returned through out-parameters are owned by the
//! caller and released with [`ch_string_free`]. Handles are released with
//! their matching `*_free` function; passing `NULL` to any `*_free` is a no-op.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use coulomb_hankel::hankel::{build_coulomb_hankel, det_rayleigh, RayleighMethod};
use coulomb_hankel::numeric::{self, NumericError, Rect, SearchOptions, ZeroKind, ZeroReport};
use coulomb_hankel::{classify, det_exact, CoulombParams, Error, ExactRational, ZetaTable};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// Parameter on an excluded set or at a pole of the recurrence.
    ExcludedParameter = 3,
    /// Numerical evaluation or zero search could not meet its guarantees.
    Numeric = 4,
    IdentityMismatch = 5,
    OutOfRange = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChRayleighMethod {
    Direct = 0,
    Closed = 1,
    DesnanotJacobi = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChZeroKind {
    Real = 0,
    Complex = 1,
    Imaginary = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChRect {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChZero {
    pub re: f64,
    pub im: f64,
    pub multiplicity: usize,
    pub kind: ChZeroKind,
    pub residual: f64,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ChZeroCounts {
    pub real: usize,
    pub complex_pairs: usize,
    pub imaginary_pairs: usize,
    pub winding_count: usize,
    pub unresolved: usize,
}

/// Opaque table of `zeta_L(k)`.
pub struct ChZetaTable(ZetaTable);

/// Opaque result of a zero search.
pub struct ChZeroReport(ZeroReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(ChStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::SingularParameter(_) | Error::ExcludedParameter(_) | Error::BoundaryParameter(_) => {
                ChStatus::ExcludedParameter
            }
            Error::IdentityMismatch { .. } => ChStatus::IdentityMismatch,
            _ => ChStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

impl From<NumericError> for Failure {
    fn from(e: NumericError) -> Self {
        let status = match e {
            NumericError::SingularB(_) => ChStatus::ExcludedParameter,
            NumericError::InvalidInput(_) => ChStatus::InvalidArgument,
            _ => ChStatus::Numeric,
        };
        Failure(status, e.to_string())
    }
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard<F: FnOnce() -> Result<(), Failure>>(f: F) -> ChStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            ChStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            ChStatus::Panic
        }
    }
}

fn null() -> Failure {
    Failure(ChStatus::NullPointer, "null pointer argument".into())
}

unsafe fn rational(p: *const c_char, name: &str) -> Result<ExactRational, Failure> {
    if p.is_null() {
        return Err(null());
    }
    let s =
        CStr::from_ptr(p).to_str().map_err(|_| Failure(ChStatus::InvalidArgument, format!("{name} is not UTF-8")))?;
    s.parse().map_err(|e| Failure(ChStatus::InvalidArgument, format!("{name}: {e}")))
}

unsafe fn params(l: *const c_char, eta: *const c_char) -> Result<CoulombParams, Failure> {
    Ok(CoulombParams::new(rational(l, "L")?, rational(eta, "eta")?))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(ChStatus::InvalidArgument, "interior NUL".into()))?;
    write(out, c.into_raw())
}

/// Message for the last failed call on this thread, or `NULL` after a
/// success. The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn ch_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn ch_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be `NULL` or a string obtained from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ch_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds `zeta_L(k)` for `k = 2..=kmax`.
///
/// # Safety
/// `l` and `eta` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ch_zeta_table_new(
    l: *const c_char,
    eta: *const c_char,
    kmax: usize,
    out: *mut *mut ChZetaTable,
) -> ChStatus {
    guard(|| {
        let table = ZetaTable::with_kmax(params(l, eta)?, kmax)?;
        write(out, Box::into_raw(Box::new(ChZetaTable(table))))
    })
}

/// # Safety
/// `table` must be a live handle from [`ch_zeta_table_new`].
#[no_mangle]
pub unsafe extern "C" fn ch_zeta_table_kmax(table: *const ChZetaTable) -> usize {
    table.as_ref().map_or(0, |t| t.0.kmax())
}

/// `zeta_L(k)` as a reduced fraction string.
///
/// # Safety
/// `table` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ch_zeta_table_get(table: *const ChZetaTable, k: usize, out: *mut *mut c_char) -> ChStatus {
    guard(|| {
        let t = table.as_ref().ok_or_else(null)?;
        let v =
            t.0.get(k).ok_or_else(|| Failure(ChStatus::OutOfRange, format!("k = {k} outside 2..={}", t.0.kmax())))?;
        write_string(out, v.to_string())
    })
}

/// # Safety
/// `table` must be `NULL` or a live handle, released at most once.
#[no_mangle]
pub unsafe extern "C" fn ch_zeta_table_free(table: *mut ChZetaTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Exact `det H_n(L, eta)`.
///
/// # Safety
/// `l` and `eta` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ch_hankel_det(
    l: *const c_char,
    eta: *const c_char,
    n: usize,
    out: *mut *mut c_char,
) -> ChStatus {
    guard(|| {
        let h = build_coulomb_hankel(&params(l, eta)?, n)?;
        write_string(out, det_exact(&h.matrix).to_string())
    })
}

/// Exact Rayleigh Hankel determinant of order `n` and shift `ell`.
///
/// # Safety
/// `nu` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ch_rayleigh_det(
    nu: *const c_char,
    ell: u32,
    n: usize,
    method: ChRayleighMethod,
    out: *mut *mut c_char,
) -> ChStatus {
    guard(|| {
        let method = match method {
            ChRayleighMethod::Direct => RayleighMethod::Direct,
            ChRayleighMethod::Closed => RayleighMethod::Closed,
            ChRayleighMethod::DesnanotJacobi => RayleighMethod::Dj,
        };
        let det = det_rayleigh(&rational(nu, "nu")?, ell, n, method)?;
        write_string(out, det.to_string())
    })
}

/// Number of complex-conjugate zero pairs of `phi_L(eta, .)`. `nmax = 0`
/// picks the order automatically.
///
/// # Safety
/// `l` and `eta` must be NUL-terminated strings; `out_pairs` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ch_classify(
    l: *const c_char,
    eta: *const c_char,
    nmax: usize,
    out_pairs: *mut usize,
) -> ChStatus {
    guard(|| {
        let c = classify(&params(l, eta)?, (nmax > 0).then_some(nmax))?;
        write(out_pairs, c.pair_count)
    })
}

/// `phi_L(eta, rho)` at `rho = re + i im`.
///
/// # Safety
/// `out_re` and `out_im` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ch_phi(
    l: f64,
    eta: f64,
    re: f64,
    im: f64,
    tol: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> ChStatus {
    guard(|| {
        if out_re.is_null() || out_im.is_null() {
            return Err(null());
        }
        let v = numeric::phi(l, eta, numeric::ComplexPoint::new(re, im), tol)?;
        write(out_re, v.re)?;
        write(out_im, v.im)
    })
}

/// Locates the zeros of `phi_L(eta, .)`. `region` may be `NULL` for the
/// default search rectangle; `tol <= 0` keeps the default tolerance.
///
/// # Safety
/// `region` must be `NULL` or readable; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ch_find_zeros(
    l: f64,
    eta: f64,
    region: *const ChRect,
    tol: f64,
    out: *mut *mut ChZeroReport,
) -> ChStatus {
    guard(|| {
        let rect = match region.as_ref() {
            Some(r) => Rect::new(r.re_min, r.re_max, r.im_min, r.im_max),
            None => numeric::default_search_rect(l),
        };
        let mut opts = SearchOptions::default();
        if tol > 0.0 {
            opts.tol = tol;
        }
        let report = numeric::find_complex_zeros(l, eta, rect, opts)?;
        write(out, Box::into_raw(Box::new(ChZeroReport(report))))
    })
}

/// Number of zeros in the report, conjugates and real zeros included.
///
/// # Safety
/// `report` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ch_zero_report_len(report: *const ChZeroReport) -> usize {
    report.as_ref().map_or(0, |r| r.0.zeros.len())
}

/// # Safety
/// `report` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ch_zero_report_get(report: *const ChZeroReport, index: usize, out: *mut ChZero) -> ChStatus {
    guard(|| {
        let r = report.as_ref().ok_or_else(null)?;
        let z =
            r.0.zeros
                .get(index)
                .ok_or_else(|| Failure(ChStatus::OutOfRange, format!("index {index} beyond {}", r.0.zeros.len())))?;
        let kind = match z.kind {
            ZeroKind::Real => ChZeroKind::Real,
            ZeroKind::Complex => ChZeroKind::Complex,
            ZeroKind::Imaginary => ChZeroKind::Imaginary,
        };
        write(out, ChZero { re: z.point.re, im: z.point.im, multiplicity: z.multiplicity, kind, residual: z.residual })
    })
}

/// # Safety
/// `report` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ch_zero_report_counts(report: *const ChZeroReport, out: *mut ChZeroCounts) -> ChStatus {
    guard(|| {
        let r = &report.as_ref().ok_or_else(null)?.0;
        write(
            out,
            ChZeroCounts {
                real: r.counts.real,
                complex_pairs: r.counts.complex_pairs,
                imaginary_pairs: r.counts.imaginary_pairs,
                winding_count: r.winding_count,
                unresolved: r.unresolved,
            },
        )
    })
}

/// # Safety
/// `report` must be `NULL` or a live handle, released at most once.
#[no_mangle]
pub unsafe extern "C" fn ch_zero_report_free(report: *mut ChZeroReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}
