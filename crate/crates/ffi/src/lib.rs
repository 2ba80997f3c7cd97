//! C ABI for orbikit.
//!
//! Presentations and diamonds cross the boundary as opaque handles that the
//! caller releases with the matching `*_free` function. Every fallible call
//! returns an [`OrbikitStatus`]; on failure a message is available from
//! [`orbikit_last_error_message`] on the same thread until the next call.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use orbikit::catalog;
use orbikit::format::{Document, Loaded};
use orbikit::{
    assemble_diamond, build_kummer, build_projective_quotient, check_partners_with, check_symmetries, columns,
    extract_h0q, extract_hn0, extract_hn10, hochschild_via_sectors, is_gorenstein, mckay_compare,
    reconstruct_gorenstein, ColumnVector, Error, Grade, HodgeDiamond, KummerSpec, OrbifoldPresentation, PartnerOptions,
    ProjectiveQuotientSpec, Verdict,
};

/// Opaque handle to validated inertia data.
pub struct OrbikitPresentation(OrbifoldPresentation);

/// Opaque handle to a Hodge diamond.
pub struct OrbikitDiamond(HodgeDiamond);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbikitStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Validation = 4,
    DimensionMismatch = 5,
    Unsupported = 6,
    Inconsistent = 7,
    Parity = 8,
    BufferTooSmall = 9,
    Io = 10,
    Panic = 11,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbikitVerdict {
    CompatibleSoFar = 0,
    Incompatible = 1,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn status_of(e: &Error) -> OrbikitStatus {
    match e {
        Error::Parse(_) | Error::UnknownCatalogEntry(_) | Error::MissingArgument(_) => OrbikitStatus::Parse,
        Error::Io(_) => OrbikitStatus::Io,
        Error::InvalidDiamond(_)
        | Error::InvalidComponent { .. }
        | Error::InvalidPresentation(_)
        | Error::PseudoReflection(_)
        | Error::ScalarAction(_)
        | Error::GroupTooLarge { .. }
        | Error::DimensionTooSmall(_)
        | Error::OutOfRange { .. } => OrbikitStatus::Validation,
        Error::DimensionMismatch { .. } => OrbikitStatus::DimensionMismatch,
        Error::Inconsistent(_) => OrbikitStatus::Inconsistent,
        Error::ParityError { .. } => OrbikitStatus::Parity,
        Error::NonGorensteinOrbifold | Error::UnsupportedDimension(_) => OrbikitStatus::Unsupported,
    }
}

struct Failure(OrbikitStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), format!("{}: {e}", e.kind()))
    }
}

fn null(what: &str) -> Failure {
    Failure(OrbikitStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> OrbikitStatus {
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => OrbikitStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            OrbikitStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(OrbikitStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_columns(c: &ColumnVector, buf: *mut u64, len: usize) -> Result<(), Failure> {
    let need = 2 * c.dim() as usize + 1;
    if buf.is_null() {
        return Err(null("buffer"));
    }
    if len < need {
        return Err(Failure(
            OrbikitStatus::BufferTooSmall,
            format!("buffer holds {len} values, need {need}"),
        ));
    }
    for (k, (_, v)) in c.iter().enumerate() {
        *buf.add(k) = v;
    }
    Ok(())
}

unsafe fn read_columns(n: u32, cols: *const u64, len: usize) -> Result<ColumnVector, Failure> {
    if cols.is_null() {
        return Err(null("columns"));
    }
    let need = 2 * n as usize + 1;
    if len != need {
        return Err(Failure(
            OrbikitStatus::Parse,
            format!("expected {need} columns for dimension {n}, got {len}"),
        ));
    }
    let values = std::slice::from_raw_parts(cols, len);
    let pairs = values.iter().enumerate().map(|(k, &v)| (k as i64 - n as i64, v));
    Ok(ColumnVector::new(n, pairs)?)
}

fn boxed_presentation(p: OrbifoldPresentation) -> *mut OrbikitPresentation {
    Box::into_raw(Box::new(OrbikitPresentation(p)))
}

fn boxed_diamond(d: HodgeDiamond) -> *mut OrbikitDiamond {
    Box::into_raw(Box::new(OrbikitDiamond(d)))
}

fn presentation_from_document(doc: &Document) -> Result<OrbifoldPresentation, Failure> {
    match Loaded::from_document(doc)? {
        Loaded::Presentation(p) => Ok(p),
        Loaded::Diamond { .. } => Err(Failure(
            OrbikitStatus::Parse,
            "document is a bare diamond, not inertia data".into(),
        )),
    }
}

/// Message describing the last failure on this thread, or NULL.
///
/// The pointer stays valid until the next orbikit call on the same thread.
#[no_mangle]
pub extern "C" fn orbikit_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses an orbifold or generator JSON document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn orbikit_presentation_from_json(
    json: *const c_char,
    out: *mut *mut OrbikitPresentation,
) -> OrbikitStatus {
    guard(|| {
        let text = read_str(json, "json")?;
        let p = presentation_from_document(&Document::from_json(text)?)?;
        write_out(out, boxed_presentation(p), "out")
    })
}

/// Loads a catalog entry by name.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn orbikit_presentation_from_catalog(
    name: *const c_char,
    out: *mut *mut OrbikitPresentation,
) -> OrbikitStatus {
    guard(|| {
        let name = read_str(name, "name")?;
        let doc = Document::from_json(&catalog::lookup(name)?.source)?;
        let p = presentation_from_document(&doc)?;
        write_out(out, boxed_presentation(p), "out")
    })
}

/// Inertia data of the Kummer quotient of an `n`-dimensional torus.
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn orbikit_build_kummer(n: u32, out: *mut *mut OrbikitPresentation) -> OrbikitStatus {
    guard(|| {
        let p = build_kummer(KummerSpec { n })?;
        write_out(out, boxed_presentation(p), "out")
    })
}

/// Inertia data of `P^n / G` for `G = Z/orders[0] x ... x Z/orders[k-1]`
/// acting diagonally. `weights` is row-major with `k` rows of `n + 1` entries.
///
/// # Safety
/// `orders` must point to `k` values and `weights` to `k * (n + 1)` values
/// (either may be NULL when `k == 0`); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orbikit_build_projective_quotient(
    n: u32,
    orders: *const u32,
    k: usize,
    weights: *const u32,
    out: *mut *mut OrbikitPresentation,
) -> OrbikitStatus {
    guard(|| {
        let (orders, weights) = if k == 0 {
            (Vec::new(), Vec::new())
        } else {
            if orders.is_null() || weights.is_null() {
                return Err(null("orders/weights"));
            }
            let row = n as usize + 1;
            let flat = std::slice::from_raw_parts(weights, k * row);
            (
                std::slice::from_raw_parts(orders, k).to_vec(),
                flat.chunks(row).map(<[u32]>::to_vec).collect(),
            )
        };
        let p = build_projective_quotient(&ProjectiveQuotientSpec::new(n, orders, weights))?;
        write_out(out, boxed_presentation(p), "out")
    })
}

/// # Safety
/// `p` must be NULL or a handle returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn orbikit_presentation_free(p: *mut OrbikitPresentation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Ambient dimension, or 0 for a NULL handle.
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn orbikit_presentation_dim(p: *const OrbikitPresentation) -> u32 {
    p.as_ref().map_or(0, |p| p.0.dim())
}

/// Number of inertia sectors, or 0 for a NULL handle.
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn orbikit_presentation_sector_count(p: *const OrbikitPresentation) -> usize {
    p.as_ref().map_or(0, |p| p.0.components().len())
}

/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orbikit_presentation_is_gorenstein(
    p: *const OrbikitPresentation,
    out: *mut bool,
) -> OrbikitStatus {
    guard(|| write_out(out, is_gorenstein(&deref(p, "presentation")?.0), "out"))
}

/// `h^{0,q}` of the orbifold, read from the untwisted sector.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orbikit_presentation_h0q(
    p: *const OrbikitPresentation,
    q: u32,
    out: *mut u64,
) -> OrbikitStatus {
    guard(|| write_out(out, extract_h0q(&deref(p, "presentation")?.0, q), "out"))
}

/// Writes the `2n + 1` sector-summed column values (index `-n` first).
///
/// # Safety
/// `p` must be a live handle and `buf` must hold `len` values.
#[no_mangle]
pub unsafe extern "C" fn orbikit_presentation_hochschild(
    p: *const OrbikitPresentation,
    buf: *mut u64,
    len: usize,
) -> OrbikitStatus {
    guard(|| write_columns(&hochschild_via_sectors(&deref(p, "presentation")?.0), buf, len))
}

/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orbikit_assemble_diamond(
    p: *const OrbikitPresentation,
    out: *mut *mut OrbikitDiamond,
) -> OrbikitStatus {
    guard(|| {
        let d = assemble_diamond(&deref(p, "presentation")?.0)?;
        write_out(out, boxed_diamond(d), "out")
    })
}

/// Parses a diamond JSON document (`{"name", "dim", "entries"}`).
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orbikit_diamond_from_json(
    json: *const c_char,
    out: *mut *mut OrbikitDiamond,
) -> OrbikitStatus {
    guard(|| {
        let text = read_str(json, "json")?;
        let d = match Document::from_json(text)? {
            Document::Diamond(f) => f.to_diamond()?,
            _ => return Err(Failure(OrbikitStatus::Parse, "expected a diamond document".into())),
        };
        write_out(out, boxed_diamond(d), "out")
    })
}

/// Serializes a diamond as JSON. Free the result with [`orbikit_string_free`].
///
/// # Safety
/// `d` must be a live handle, `name` NULL or a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orbikit_diamond_to_json(
    d: *const OrbikitDiamond,
    name: *const c_char,
    out: *mut *mut c_char,
) -> OrbikitStatus {
    guard(|| {
        let d = deref(d, "diamond")?;
        let name = if name.is_null() {
            "diamond"
        } else {
            read_str(name, "name")?
        };
        let text = orbikit::render::diamond_json(name, &d.0);
        let c = CString::new(text).map_err(|_| Failure(OrbikitStatus::Parse, "interior NUL".into()))?;
        write_out(out, c.into_raw(), "out")
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn orbikit_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `d` must be NULL or a handle returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn orbikit_diamond_free(d: *mut OrbikitDiamond) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// # Safety
/// `d` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn orbikit_diamond_dim(d: *const OrbikitDiamond) -> u32 {
    d.as_ref().map_or(0, |d| d.0.dim())
}

/// # Safety
/// `d` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn orbikit_diamond_level(d: *const OrbikitDiamond) -> u64 {
    d.as_ref().map_or(0, |d| d.0.level())
}

/// Entry at `(p_num / p_den, q_num / q_den)`.
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orbikit_diamond_get(
    d: *const OrbikitDiamond,
    p_num: i64,
    p_den: i64,
    q_num: i64,
    q_den: i64,
    out: *mut u64,
) -> OrbikitStatus {
    guard(|| {
        let d = deref(d, "diamond")?;
        let p = Grade::checked_new(p_num, p_den)?;
        let q = Grade::checked_new(q_num, q_den)?;
        write_out(out, d.0.get(p, q), "out")
    })
}

/// Writes the `2n + 1` column sums (index `-n` first).
///
/// # Safety
/// `d` must be a live handle and `buf` must hold `len` values.
#[no_mangle]
pub unsafe extern "C" fn orbikit_diamond_columns(d: *const OrbikitDiamond, buf: *mut u64, len: usize) -> OrbikitStatus {
    guard(|| write_columns(&columns(&deref(d, "diamond")?.0), buf, len))
}

/// # Safety
/// `d` must be a live handle; `serre` and `hodge` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orbikit_diamond_check_symmetries(
    d: *const OrbikitDiamond,
    serre: *mut bool,
    hodge: *mut bool,
) -> OrbikitStatus {
    guard(|| {
        let r = check_symmetries(&deref(d, "diamond")?.0);
        write_out(serre, r.serre, "serre")?;
        write_out(hodge, r.hodge, "hodge")
    })
}

/// # Safety
/// `a` and `b` must be live handles and `verdict` writable.
#[no_mangle]
pub unsafe extern "C" fn orbikit_check_partners(
    a: *const OrbikitDiamond,
    b: *const OrbikitDiamond,
    strict_dim3: bool,
    verdict: *mut OrbikitVerdict,
) -> OrbikitStatus {
    guard(|| {
        let r = check_partners_with(&deref(a, "a")?.0, &deref(b, "b")?.0, PartnerOptions { strict_dim3 })?;
        let v = match r.verdict {
            Verdict::CompatibleSoFar => OrbikitVerdict::CompatibleSoFar,
            Verdict::Incompatible => OrbikitVerdict::Incompatible,
        };
        write_out(verdict, v, "verdict")
    })
}

/// Solves for the Gorenstein diamond of dimension `n <= 3` from its `2n + 1`
/// column sums (index `-n` first). `h01` is used only when `has_h01` is true.
///
/// # Safety
/// `cols` must hold `len` values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orbikit_reconstruct_gorenstein(
    n: u32,
    cols: *const u64,
    len: usize,
    h01: u64,
    has_h01: bool,
    out: *mut *mut OrbikitDiamond,
) -> OrbikitStatus {
    guard(|| {
        if n > 3 {
            return Err(Error::UnsupportedDimension(n).into());
        }
        let c = read_columns(n, cols, len)?;
        let d = reconstruct_gorenstein(&c, has_h01.then_some(h01), n)?;
        write_out(out, boxed_diamond(d), "out")
    })
}

/// `h^{n,0}` from `2n + 1` column sums.
///
/// # Safety
/// `cols` must hold `len` values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orbikit_extract_hn0(n: u32, cols: *const u64, len: usize, out: *mut u64) -> OrbikitStatus {
    guard(|| write_out(out, extract_hn0(&read_columns(n, cols, len)?), "out"))
}

/// `h^{n-1,0}` from `2n + 1` column sums; fails with `Parity` on odd input.
///
/// # Safety
/// `cols` must hold `len` values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orbikit_extract_hn10(n: u32, cols: *const u64, len: usize, out: *mut u64) -> OrbikitStatus {
    guard(|| write_out(out, extract_hn10(&read_columns(n, cols, len)?)?, "out"))
}

/// # Safety
/// `orb` and `resolution` must be live handles and `equal` writable.
#[no_mangle]
pub unsafe extern "C" fn orbikit_mckay_compare(
    orb: *const OrbikitDiamond,
    resolution: *const OrbikitDiamond,
    equal: *mut bool,
) -> OrbikitStatus {
    guard(|| {
        let r = mckay_compare(&deref(orb, "orbifold")?.0, &deref(resolution, "resolution")?.0)?;
        write_out(equal, r.equal, "equal")
    })
}
