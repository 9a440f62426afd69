//! C interface to the `rademacher` crate.
//!
//! Matrices and `Gamma0+(p)` elements are opaque heap handles released with
//! their `*_free` function. Every fallible call returns an [`RdmStatus`] and
//! writes its result through an out-pointer only on success. Strings handed
//! out by the library are NUL-terminated UTF-8 and must be released with
//! [`rdm_string_free`]. Integers and rationals of unbounded size travel as
//! decimal strings; structured results travel as JSON.
//!
//! [`rdm_last_error_message`] describes the most recent failure on the
//! calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use rademacher::cli::{json_int, json_points, json_word};
use rademacher::fricke::gamma_plus_mul;
use rademacher::{
    decompose, endpoints, k_of_p, phi_p, phi_p_geometric, rademacher_phi, EdgeWord, Error, EtaEngine,
    FrickeElement, TridiagonalSpec, UnimodularMatrix, VerificationReport,
};
use serde_json::json;

/// Result codes; `RDM_STATUS_OK` is zero, everything else is a failure.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RdmStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    DeterminantMismatch = 4,
    DivisibilityViolation = 5,
    InvalidPrime = 6,
    PrimeMismatch = 7,
    DedekindDomain = 8,
    NotInGamma0 = 9,
    NotAnEdge = 10,
    WrongBaseEdge = 11,
    TooFewEndpoints = 12,
    InvalidFraction = 13,
    ImaginaryPartTooSmall = 14,
    PrecisionTooLow = 15,
    RenderOptions = 16,
    Numeric = 17,
    /// The value does not fit the requested fixed-width integer.
    Overflow = 18,
    /// A Rust panic was caught at the boundary; this is a library bug.
    Panic = 19,
}

impl From<&Error> for RdmStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::DeterminantMismatch { .. } => RdmStatus::DeterminantMismatch,
            Error::DivisibilityViolation { .. } => RdmStatus::DivisibilityViolation,
            Error::InvalidPrime(_) => RdmStatus::InvalidPrime,
            Error::PrimeMismatch { .. } => RdmStatus::PrimeMismatch,
            Error::DedekindDomain { .. } => RdmStatus::DedekindDomain,
            Error::NotInGamma0 => RdmStatus::NotInGamma0,
            Error::NotAnEdge { .. } => RdmStatus::NotAnEdge,
            Error::WrongBaseEdge => RdmStatus::WrongBaseEdge,
            Error::TooFewEndpoints(_) => RdmStatus::TooFewEndpoints,
            Error::InvalidFraction(_) => RdmStatus::InvalidFraction,
            Error::ImaginaryPartTooSmall { .. } => RdmStatus::ImaginaryPartTooSmall,
            Error::PrecisionTooLow { .. } => RdmStatus::PrecisionTooLow,
            Error::Parse { .. } => RdmStatus::ParseError,
            Error::RenderOptions(_) => RdmStatus::RenderOptions,
            Error::Numeric(_) => RdmStatus::Numeric,
        }
    }
}

/// Opaque `SL2(Z)` matrix.
pub struct RdmMatrix(UnimodularMatrix);

/// Opaque element of `Gamma0+(p)`.
pub struct RdmFrickeElement(FrickeElement);

struct Failure {
    status: RdmStatus,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            status: (&e).into(),
            message: e.to_string(),
        }
    }
}

impl Failure {
    fn new(status: RdmStatus, message: impl Into<String>) -> Self {
        Failure {
            status,
            message: message.into(),
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

/// Runs `f`, translating errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> RdmStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            RdmStatus::Ok
        }
        Ok(Err(failure)) => {
            set_last_error(&failure.message);
            failure.status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_last_error(&msg);
            RdmStatus::Panic
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure::new(RdmStatus::NullArgument, format!("{what} is null")))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::new(RdmStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::new(RdmStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::new(RdmStatus::NullArgument, "output pointer is null"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure::new(RdmStatus::Numeric, "interior NUL in output"))?;
    if out.is_null() {
        return Err(Failure::new(RdmStatus::NullArgument, "output pointer is null"));
    }
    out.write(c.into_raw());
    Ok(())
}

fn report_json(r: &VerificationReport) -> Result<String, Failure> {
    let v = serde_json::to_value(r.to_json()?).map_err(|e| Failure::new(RdmStatus::Numeric, e.to_string()))?;
    Ok(v.to_string())
}

/// Message of the last failed call on this thread, or `""`. The pointer stays
/// valid until the next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn rdm_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Stable snake_case name of a status code; never null, never freed.
#[no_mangle]
pub extern "C" fn rdm_status_name(status: RdmStatus) -> *const c_char {
    let name: &'static CStr = match status {
        RdmStatus::Ok => c"ok",
        RdmStatus::NullArgument => c"null_argument",
        RdmStatus::InvalidUtf8 => c"invalid_utf8",
        RdmStatus::ParseError => c"parse_error",
        RdmStatus::DeterminantMismatch => c"determinant_mismatch",
        RdmStatus::DivisibilityViolation => c"divisibility_violation",
        RdmStatus::InvalidPrime => c"invalid_prime",
        RdmStatus::PrimeMismatch => c"prime_mismatch",
        RdmStatus::DedekindDomain => c"dedekind_domain",
        RdmStatus::NotInGamma0 => c"not_in_gamma0",
        RdmStatus::NotAnEdge => c"not_an_edge",
        RdmStatus::WrongBaseEdge => c"wrong_base_edge",
        RdmStatus::TooFewEndpoints => c"too_few_endpoints",
        RdmStatus::InvalidFraction => c"invalid_fraction",
        RdmStatus::ImaginaryPartTooSmall => c"imaginary_part_too_small",
        RdmStatus::PrecisionTooLow => c"precision_too_low",
        RdmStatus::RenderOptions => c"render_options",
        RdmStatus::Numeric => c"numeric",
        RdmStatus::Overflow => c"overflow",
        RdmStatus::Panic => c"panic",
    };
    name.as_ptr()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn rdm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `(a b; c d)`; fails unless `ad - bc = 1`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rdm_matrix_new(a: i64, b: i64, c: i64, d: i64, out: *mut *mut RdmMatrix) -> RdmStatus {
    guard(|| {
        let m = UnimodularMatrix::from_i64(a, b, c, d)?;
        put(out, Box::into_raw(Box::new(RdmMatrix(m))))
    })
}

/// Parses `"a,b,c,d"` with entries of any size.
///
/// # Safety
/// `s` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rdm_matrix_parse(s: *const c_char, out: *mut *mut RdmMatrix) -> RdmStatus {
    guard(|| {
        let m: UnimodularMatrix = text(s, "matrix text")?.parse()?;
        put(out, Box::into_raw(Box::new(RdmMatrix(m))))
    })
}

/// Releases a matrix handle. Null is ignored.
///
/// # Safety
/// `m` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn rdm_matrix_free(m: *mut RdmMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Matrix product `x y` as a new handle.
///
/// # Safety
/// `x`, `y` must be live handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rdm_matrix_mul(x: *const RdmMatrix, y: *const RdmMatrix, out: *mut *mut RdmMatrix) -> RdmStatus {
    guard(|| {
        let prod = &borrow(x, "x")?.0 * &borrow(y, "y")?.0;
        put(out, Box::into_raw(Box::new(RdmMatrix(prod))))
    })
}

/// Text form `"a,b,c,d"`.
///
/// # Safety
/// `m` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rdm_matrix_to_string(m: *const RdmMatrix, out: *mut *mut c_char) -> RdmStatus {
    guard(|| put_string(out, borrow(m, "matrix")?.0.to_string()))
}

/// Rademacher symbol as a decimal string.
///
/// # Safety
/// `m` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rdm_phi(m: *const RdmMatrix, out: *mut *mut c_char) -> RdmStatus {
    guard(|| put_string(out, rademacher_phi(&borrow(m, "matrix")?.0).to_string()))
}

/// Rademacher symbol as a 64-bit integer; `RDM_STATUS_OVERFLOW` if it does not fit.
///
/// # Safety
/// `m` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rdm_phi_i64(m: *const RdmMatrix, out: *mut i64) -> RdmStatus {
    guard(|| {
        let v = rademacher_phi(&borrow(m, "matrix")?.0);
        let v = i64::try_from(&v).map_err(|_| Failure::new(RdmStatus::Overflow, format!("{v} does not fit in i64")))?;
        put(out, v)
    })
}

/// Word and endpoints of a based edge path for `m`, as
/// `{"word": [...], "endpoints": ["1/0", ...]}`.
///
/// # Safety
/// `m` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rdm_decompose(m: *const RdmMatrix, out: *mut *mut c_char) -> RdmStatus {
    guard(|| {
        let w = decompose(&borrow(m, "matrix")?.0);
        let v = json!({ "word": json_word(&w), "endpoints": json_points(&endpoints(&w)) });
        put_string(out, v.to_string())
    })
}

/// Endpoints of the word `"a1,a2,..."` as a JSON array of fractions.
///
/// # Safety
/// `word` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rdm_endpoints(word: *const c_char, out: *mut *mut c_char) -> RdmStatus {
    guard(|| {
        let w: EdgeWord = text(word, "word")?.parse()?;
        put_string(out, json_points(&endpoints(&w)).to_string())
    })
}

/// `{"trace": t, "signature": s, "phi": t - 3 s}` for the word `"a1,a2,..."`.
///
/// # Safety
/// `word` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rdm_km(word: *const c_char, out: *mut *mut c_char) -> RdmStatus {
    guard(|| {
        let w: EdgeWord = text(word, "word")?.parse()?;
        let spec = TridiagonalSpec::from_word(&w);
        let trace = spec.trace();
        let signature = spec.inertia().signature();
        let phi = &trace - 3 * signature;
        let v = json!({ "trace": json_int(&trace), "signature": signature, "phi": json_int(&phi) });
        put_string(out, v.to_string())
    })
}

/// Smallest even `k` with `24 | (p - 1) k`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rdm_k_of_p(p: u64, out: *mut u64) -> RdmStatus {
    guard(|| put(out, k_of_p(p)?))
}

/// Element of `Gamma0(p)`; the matrix is copied.
///
/// # Safety
/// `m` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rdm_fricke_gamma0(p: u64, m: *const RdmMatrix, out: *mut *mut RdmFrickeElement) -> RdmStatus {
    guard(|| {
        let e = FrickeElement::gamma0(p, borrow(m, "matrix")?.0.clone())?;
        put(out, Box::into_raw(Box::new(RdmFrickeElement(e))))
    })
}

/// Coset element `(1/sqrt p)(p alpha, beta; p gamma, p delta)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rdm_fricke_coset(
    p: u64,
    alpha: i64,
    beta: i64,
    gamma: i64,
    delta: i64,
    out: *mut *mut RdmFrickeElement,
) -> RdmStatus {
    guard(|| {
        let e = FrickeElement::coset(p, alpha.into(), beta.into(), gamma.into(), delta.into())?;
        put(out, Box::into_raw(Box::new(RdmFrickeElement(e))))
    })
}

/// Parses the coset form `"p:alpha,beta,gamma,delta"`.
///
/// # Safety
/// `s` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rdm_fricke_parse(s: *const c_char, out: *mut *mut RdmFrickeElement) -> RdmStatus {
    guard(|| {
        let e: FrickeElement = text(s, "Fricke element text")?.parse()?;
        put(out, Box::into_raw(Box::new(RdmFrickeElement(e))))
    })
}

/// Group product `x y` in `Gamma0+(p)`.
///
/// # Safety
/// `x`, `y` must be live handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rdm_fricke_mul(
    x: *const RdmFrickeElement,
    y: *const RdmFrickeElement,
    out: *mut *mut RdmFrickeElement,
) -> RdmStatus {
    guard(|| {
        let e = gamma_plus_mul(&borrow(x, "x")?.0, &borrow(y, "y")?.0)?;
        put(out, Box::into_raw(Box::new(RdmFrickeElement(e))))
    })
}

/// Releases an element handle. Null is ignored.
///
/// # Safety
/// `e` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn rdm_fricke_free(e: *mut RdmFrickeElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// `Phi_p` as an exact rational string such as `"3"` or `"-5/2"`; with
/// `geometric` set, evaluated through traces and signatures of edge paths.
///
/// # Safety
/// `e` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rdm_phi_p(e: *const RdmFrickeElement, geometric: bool, out: *mut *mut c_char) -> RdmStatus {
    guard(|| {
        let e = &borrow(e, "element")?.0;
        let v = if geometric { phi_p_geometric(e) } else { phi_p(e) };
        put_string(out, v.to_string())
    })
}

/// Residual report of the eta transformation law at `z = "re,im"`, as JSON.
///
/// # Safety
/// `m` must be a live handle, `z` a NUL-terminated string, `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rdm_verify_eta(
    m: *const RdmMatrix,
    z: *const c_char,
    precision: u32,
    out: *mut *mut c_char,
) -> RdmStatus {
    guard(|| {
        let g = &borrow(m, "matrix")?.0;
        let mut eng = EtaEngine::new(precision as usize)?;
        let z = eng.hp().parse_complex(text(z, "z")?)?;
        let rep = eng.verify_eta_transform(g, &z)?;
        put_string(out, report_json(&rep)?)
    })
}

/// Residual report of the `eta_p` transformation law at `z = "re,im"`, as JSON.
///
/// # Safety
/// `e` must be a live handle, `z` a NUL-terminated string, `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rdm_verify_theorem1(
    e: *const RdmFrickeElement,
    z: *const c_char,
    precision: u32,
    out: *mut *mut c_char,
) -> RdmStatus {
    guard(|| {
        let e = &borrow(e, "element")?.0;
        let mut eng = EtaEngine::new(precision as usize)?;
        let z = eng.hp().parse_complex(text(z, "z")?)?;
        let rep = eng.verify_theorem1(e, &z)?;
        put_string(out, report_json(&rep)?)
    })
}
