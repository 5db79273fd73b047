//! C ABI over the core library.
//!
//! Handles are opaque and owned by the caller; every `*_free` accepts null.
//! Functions return a [`SiltStatus`]; on failure the message is available
//! from [`silt_last_error`] on the same thread. Strings handed out by this
//! library must be released with [`silt_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use silt::algebra::{build_algebra, FdAlgebra};
use silt::homotopy::{
    end_algebra, mutate_left, mutate_right, presentation_match, stalk, ProjComplex,
};
use silt::presentation::BoundQuiverPresentation;
use silt::{brauer, fixtures, Error};

/// Result codes. `Ok` is zero; library errors map to one code per kind.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SiltStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    BufferTooSmall = 3,
    Parse = 10,
    Field = 11,
    Quiver = 12,
    Relations = 13,
    Graph = 14,
    UnknownName = 15,
    Complex = 16,
    Crystal = 17,
    NoSolution = 18,
    Usage = 19,
    Io = 20,
    Panic = 99,
}

impl From<&Error> for SiltStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Parse(_) => SiltStatus::Parse,
            Error::InvalidField(_) | Error::UnsupportedField(_) => SiltStatus::Field,
            Error::InvalidQuiver(_) => SiltStatus::Quiver,
            Error::NonAdmissibleIdeal(_)
            | Error::InconsistentRewriting(_)
            | Error::InhomogeneousRelations(_) => SiltStatus::Relations,
            Error::InvalidGraph(_) => SiltStatus::Graph,
            Error::UnknownName(_) => SiltStatus::UnknownName,
            Error::AlgebraMismatch
            | Error::InvalidComplex(_)
            | Error::NotASummand(_)
            | Error::NotBasic(_)
            | Error::WrongAlgebra(_) => SiltStatus::Complex,
            Error::InvalidContext(_)
            | Error::UndefinedOperator(_)
            | Error::NotKleshchev
            | Error::InvalidPartition(_)
            | Error::NonAlternatingWord(_) => SiltStatus::Crystal,
            Error::NoSolution => SiltStatus::NoSolution,
            Error::Usage(_) => SiltStatus::Usage,
            Error::Io(_) => SiltStatus::Io,
        }
    }
}

/// A finite-dimensional algebra built from a presentation.
pub struct SiltAlgebra(Arc<FdAlgebra>);

/// A basic complex of projectives, one entry per indecomposable summand.
pub struct SiltComplex(ProjComplex);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(SiltStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(SiltStatus::from(&e), e.to_string())
    }
}

fn fail(status: SiltStatus, msg: &str) -> Failure {
    Failure(status, msg.to_string())
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SiltStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SiltStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SiltStatus::Panic
        }
    }
}

/// # Safety
/// `p` is null or a NUL-terminated string valid for the call.
unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(fail(SiltStatus::NullArgument, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(SiltStatus::InvalidUtf8, "argument is not UTF-8"))
}

/// # Safety
/// `p` is null or points to a live handle.
unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| fail(SiltStatus::NullArgument, "null handle"))
}

/// # Safety
/// `out` is null or writable.
unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(fail(SiltStatus::NullArgument, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

fn owned_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| fail(SiltStatus::Parse, "output contains NUL"))
}

/// Copies a square matrix row-major into `buf`; `*n` receives the size.
///
/// # Safety
/// `buf` is null or writable for `len` elements.
unsafe fn write_matrix(
    m: &[Vec<usize>],
    buf: *mut usize,
    len: usize,
    n: *mut usize,
) -> Result<(), Failure> {
    write(n, m.len())?;
    let flat: Vec<usize> = m.iter().flatten().copied().collect();
    if flat.len() > len {
        return Err(fail(SiltStatus::BufferTooSmall, "matrix buffer too small"));
    }
    if buf.is_null() && !flat.is_empty() {
        return Err(fail(SiltStatus::NullArgument, "null matrix buffer"));
    }
    ptr::copy_nonoverlapping(flat.as_ptr(), buf, flat.len());
    Ok(())
}

fn new_algebra(pres: &BoundQuiverPresentation) -> Result<*mut SiltAlgebra, Failure> {
    Ok(Box::into_raw(Box::new(SiltAlgebra(Arc::new(
        build_algebra(pres)?,
    )))))
}

/// Message of the last failed call on this thread, or null. Borrowed; valid
/// until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn silt_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` is null or was returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn silt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a named fixture, e.g. `A(2,2,2)` or `kronecker`.
///
/// # Safety
/// `name` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn silt_algebra_from_fixture(
    name: *const c_char,
    out: *mut *mut SiltAlgebra,
) -> SiltStatus {
    guard(|| {
        let name = read_str(name)?;
        let pres = fixtures::by_name(name)
            .ok_or_else(|| Failure::from(Error::UnknownName(name.into())))?;
        write(out, new_algebra(&pres)?)
    })
}

/// Builds the algebra of a named Brauer graph from the catalogue.
///
/// # Safety
/// `name` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn silt_algebra_from_catalogue(
    name: *const c_char,
    out: *mut *mut SiltAlgebra,
) -> SiltStatus {
    guard(|| {
        let entry = brauer::catalogue(read_str(name)?)?;
        write(
            out,
            new_algebra(&brauer::graph_to_presentation(&entry.graph)?)?,
        )
    })
}

/// Builds an algebra from presentation text.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn silt_algebra_from_text(
    text: *const c_char,
    out: *mut *mut SiltAlgebra,
) -> SiltStatus {
    guard(|| {
        write(
            out,
            new_algebra(&BoundQuiverPresentation::from_text(read_str(text)?)?)?,
        )
    })
}

/// # Safety
/// `a` is null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn silt_algebra_free(a: *mut SiltAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// # Safety
/// `a` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn silt_algebra_dim(a: *const SiltAlgebra, out: *mut usize) -> SiltStatus {
    guard(|| write(out, handle(a)?.0.dim()))
}

/// # Safety
/// `a` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn silt_algebra_vertex_count(
    a: *const SiltAlgebra,
    out: *mut usize,
) -> SiltStatus {
    guard(|| write(out, handle(a)?.0.vertex_count()))
}

/// Cartan matrix, row-major; entry `(i, j)` is `dim e_i A e_j`.
///
/// # Safety
/// `a` is a live handle; `buf` is writable for `len` elements; `n` is writable.
#[no_mangle]
pub unsafe extern "C" fn silt_algebra_cartan(
    a: *const SiltAlgebra,
    buf: *mut usize,
    len: usize,
    n: *mut usize,
) -> SiltStatus {
    guard(|| write_matrix(&handle(a)?.0.cartan_matrix(), buf, len, n))
}

/// Presentation text of the algebra.
///
/// # Safety
/// `a` is a live handle; `out` is writable. Free the result with `silt_string_free`.
#[no_mangle]
pub unsafe extern "C" fn silt_algebra_to_text(
    a: *const SiltAlgebra,
    out: *mut *mut c_char,
) -> SiltStatus {
    guard(|| write(out, owned_string(handle(a)?.0.presentation().to_text())?))
}

/// Whether the presentations agree after relabelling and rescaling arrows.
///
/// # Safety
/// `a`, `b` are live handles; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn silt_algebra_match(
    a: *const SiltAlgebra,
    b: *const SiltAlgebra,
    out: *mut bool,
) -> SiltStatus {
    guard(|| {
        let m = presentation_match(handle(a)?.0.presentation(), handle(b)?.0.presentation())?;
        write(out, m.matched)
    })
}

/// The stalk complex of the regular module in degree zero.
///
/// # Safety
/// `a` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn silt_stalk(
    a: *const SiltAlgebra,
    out: *mut *mut SiltComplex,
) -> SiltStatus {
    guard(|| {
        write(
            out,
            Box::into_raw(Box::new(SiltComplex(stalk(Arc::clone(&handle(a)?.0))))),
        )
    })
}

/// Parses complex text over the algebra of `a`.
///
/// # Safety
/// `a` is a live handle; `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn silt_complex_from_text(
    a: *const SiltAlgebra,
    text: *const c_char,
    out: *mut *mut SiltComplex,
) -> SiltStatus {
    guard(|| {
        let t = ProjComplex::from_text(Arc::clone(&handle(a)?.0), read_str(text)?)?;
        write(out, Box::into_raw(Box::new(SiltComplex(t))))
    })
}

/// # Safety
/// `t` is null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn silt_complex_free(t: *mut SiltComplex) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// # Safety
/// `t` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn silt_complex_summand_count(
    t: *const SiltComplex,
    out: *mut usize,
) -> SiltStatus {
    guard(|| write(out, handle(t)?.0.summands().len()))
}

/// # Safety
/// `t` is a live handle; `out` is writable. Free the result with `silt_string_free`.
#[no_mangle]
pub unsafe extern "C" fn silt_complex_to_text(
    t: *const SiltComplex,
    out: *mut *mut c_char,
) -> SiltStatus {
    guard(|| write(out, owned_string(handle(t)?.0.to_text())?))
}

/// Left mutation at the zero-based summand `x`.
///
/// # Safety
/// `t` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn silt_mutate_left(
    t: *const SiltComplex,
    x: usize,
    out: *mut *mut SiltComplex,
) -> SiltStatus {
    guard(|| {
        write(
            out,
            Box::into_raw(Box::new(SiltComplex(mutate_left(&handle(t)?.0, x)?))),
        )
    })
}

/// Right mutation at the zero-based summand `x`.
///
/// # Safety
/// `t` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn silt_mutate_right(
    t: *const SiltComplex,
    x: usize,
    out: *mut *mut SiltComplex,
) -> SiltStatus {
    guard(|| {
        write(
            out,
            Box::into_raw(Box::new(SiltComplex(mutate_right(&handle(t)?.0, x)?))),
        )
    })
}

/// The endomorphism algebra of `t` as a new algebra handle.
///
/// # Safety
/// `t` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn silt_end_algebra(
    t: *const SiltComplex,
    out: *mut *mut SiltAlgebra,
) -> SiltStatus {
    guard(|| {
        let e = end_algebra(&handle(t)?.0)?;
        write(
            out,
            Box::into_raw(Box::new(SiltAlgebra(Arc::new(e.algebra)))),
        )
    })
}

/// Runs the command line with `argc` arguments (program name excluded).
/// `code` receives the exit code and `report` the output text.
///
/// # Safety
/// `argv` is readable for `argc` NUL-terminated strings; `code` and `report`
/// are writable. Free `*report` with `silt_string_free`.
#[no_mangle]
pub unsafe extern "C" fn silt_run(
    argc: usize,
    argv: *const *const c_char,
    code: *mut i32,
    report: *mut *mut c_char,
) -> SiltStatus {
    guard(|| {
        if argv.is_null() && argc > 0 {
            return Err(fail(SiltStatus::NullArgument, "null argv"));
        }
        let mut args = vec!["silt".to_string()];
        for i in 0..argc {
            args.push(read_str(*argv.add(i))?.to_string());
        }
        let r = silt::cli::run(args);
        write(code, r.code)?;
        write(report, owned_string(r.report)?)
    })
}
