//! C interface to `surfchar`.
//!
//! Every function returns a [`SurfcharStatus`]; results come back through out
//! parameters. On failure a message is kept per thread and can be read with
//! [`surfchar_last_error`]. Strings returned by the library must be released
//! with [`surfchar_string_free`], surfaces with [`surfchar_surface_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use surfchar::mcg::SignCharacter;
use surfchar::trace::TraceExpression;
use surfchar::valuation::Lamination;
use surfchar::{Error, Surface};

/// Opaque handle to a surface of fixed genus.
pub struct SurfcharSurface {
    inner: Surface,
}

#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SurfcharStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed or out-of-range input (CLI exit class 2).
    InvalidInput = 3,
    /// Budget, solver or geometry failure (CLI exit class 3).
    ComputationFailed = 4,
    Panic = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(message));
}

enum Failure {
    Null,
    Utf8,
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SurfcharStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SurfcharStatus::Ok,
        Ok(Err(Failure::Null)) => {
            set_error("null pointer argument".into());
            SurfcharStatus::NullPointer
        }
        Ok(Err(Failure::Utf8)) => {
            set_error("argument is not valid UTF-8".into());
            SurfcharStatus::InvalidUtf8
        }
        Ok(Err(Failure::Lib(e))) => {
            set_error(e.to_string());
            if e.exit_code() == 3 {
                SurfcharStatus::ComputationFailed
            } else {
                SurfcharStatus::InvalidInput
            }
        }
        Err(_) => {
            set_error("internal panic".into());
            SurfcharStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Null);
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure::Utf8)
}

unsafe fn surface<'a>(p: *const SurfcharSurface) -> Result<&'a Surface, Failure> {
    p.as_ref().map(|s| &s.inner).ok_or(Failure::Null)
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null);
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, value: String) -> Result<(), Failure> {
    let s = CString::new(value).map_err(|_| Failure::Utf8)?;
    write(out, s.into_raw())
}

/// Creates a surface of genus `genus >= 2`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn surfchar_surface_new(genus: usize, out: *mut *mut SurfcharSurface) -> SurfcharStatus {
    guard(|| {
        if out.is_null() {
            return Err(Failure::Null);
        }
        let inner = Surface::new(genus)?;
        write(out, Box::into_raw(Box::new(SurfcharSurface { inner })))
    })
}

/// # Safety
/// `s` must come from [`surfchar_surface_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn surfchar_surface_free(s: *mut SurfcharSurface) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// # Safety
/// `s` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn surfchar_surface_genus(s: *const SurfcharSurface) -> usize {
    s.as_ref().map_or(0, |s| s.inner.genus())
}

/// Geometric intersection number of two curves given as words.
///
/// # Safety
/// Pointers must be valid; strings NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn surfchar_intersection_number(
    s: *const SurfcharSurface,
    x: *const c_char,
    y: *const c_char,
    out: *mut u64,
) -> SurfcharStatus {
    guard(|| {
        let s = surface(s)?;
        let n = s.intersection_number(&s.parse_class(text(x)?)?, &s.parse_class(text(y)?)?)?;
        write(out, n)
    })
}

/// # Safety
/// Pointers must be valid; strings NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn surfchar_self_intersection(
    s: *const SurfcharSurface,
    word: *const c_char,
    out: *mut u64,
) -> SurfcharStatus {
    guard(|| {
        let s = surface(s)?;
        write(out, s.self_intersection(&s.parse_class(text(word)?)?)?.count)
    })
}

/// # Safety
/// Pointers must be valid; strings NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn surfchar_is_simple(
    s: *const SurfcharSurface,
    word: *const c_char,
    out: *mut bool,
) -> SurfcharStatus {
    guard(|| {
        let s = surface(s)?;
        write(out, s.is_simple(&s.parse_class(text(word)?)?)?)
    })
}

/// Expansion of `t_word` as `RATIONAL<TAB>multicurve` lines.
///
/// # Safety
/// Pointers must be valid; free the result with [`surfchar_string_free`].
#[no_mangle]
pub unsafe extern "C" fn surfchar_expand_trace(
    s: *const SurfcharSurface,
    word: *const c_char,
    out: *mut *mut c_char,
) -> SurfcharStatus {
    guard(|| {
        let s = surface(s)?;
        let f = s.expand_trace(&s.parse_word(text(word)?)?)?;
        write_string(out, f.to_string())
    })
}

/// Product of two expressions in the `RATIONAL<TAB>multicurve` format.
///
/// # Safety
/// Pointers must be valid; free the result with [`surfchar_string_free`].
#[no_mangle]
pub unsafe extern "C" fn surfchar_multiply(
    s: *const SurfcharSurface,
    f: *const c_char,
    g: *const c_char,
    out: *mut *mut c_char,
) -> SurfcharStatus {
    guard(|| {
        let s = surface(s)?;
        let f = TraceExpression::parse(s, text(f)?)?;
        let g = TraceExpression::parse(s, text(g)?)?;
        write_string(out, s.multiply_expressions(&f, &g)?.to_string())
    })
}

/// Value of the lamination valuation on `t_word`; `-inf` for zero.
/// The lamination uses the inline `RATIONAL word; ...` format.
///
/// # Safety
/// Pointers must be valid; free the result with [`surfchar_string_free`].
#[no_mangle]
pub unsafe extern "C" fn surfchar_valuate(
    s: *const SurfcharSurface,
    lamination: *const c_char,
    word: *const c_char,
    out: *mut *mut c_char,
) -> SurfcharStatus {
    guard(|| {
        let s = surface(s)?;
        let l = Lamination::parse_inline(s, text(lamination)?)?;
        let f = s.expand_trace(&s.parse_word(text(word)?)?)?;
        write_string(out, s.valuate(&l, &f)?.to_string())
    })
}

/// `Discrete` or `NotDiscrete witness=... value=...`.
///
/// # Safety
/// Pointers must be valid; free the result with [`surfchar_string_free`].
#[no_mangle]
pub unsafe extern "C" fn surfchar_classify(
    s: *const SurfcharSurface,
    lamination: *const c_char,
    out: *mut *mut c_char,
) -> SurfcharStatus {
    guard(|| {
        let s = surface(s)?;
        let l = Lamination::parse_inline(s, text(lamination)?)?;
        write_string(out, s.classify_discrete(&l)?.to_string())
    })
}

/// Image of a word under a Humphries twist generator (or its inverse).
///
/// # Safety
/// Pointers must be valid; free the result with [`surfchar_string_free`].
#[no_mangle]
pub unsafe extern "C" fn surfchar_twist_word(
    s: *const SurfcharSurface,
    which: usize,
    inverse: bool,
    word: *const c_char,
    out: *mut *mut c_char,
) -> SurfcharStatus {
    guard(|| {
        let s = surface(s)?;
        let mut t = s.twist_generator(which)?;
        if inverse {
            t = t.inverse();
        }
        let img = t.apply_to_word(s, &s.parse_word(text(word)?)?)?;
        write_string(out, img.to_string())
    })
}

/// Sign action of the character `bits` (`a1 b1 ... ag bg`) on an expression.
///
/// # Safety
/// Pointers must be valid; free the result with [`surfchar_string_free`].
#[no_mangle]
pub unsafe extern "C" fn surfchar_sign_action(
    s: *const SurfcharSurface,
    bits: *const c_char,
    f: *const c_char,
    out: *mut *mut c_char,
) -> SurfcharStatus {
    guard(|| {
        let s = surface(s)?;
        let a = SignCharacter::parse(s, text(bits)?)?;
        let f = TraceExpression::parse(s, text(f)?)?;
        write_string(out, a.act(s, &f).to_string())
    })
}

/// # Safety
/// `p` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn surfchar_string_free(p: *mut c_char) {
    if !p.is_null() {
        drop(CString::from_raw(p));
    }
}

/// Message of the last failure on this thread, or null. Valid until the next
/// call into the library on the same thread.
#[no_mangle]
pub extern "C" fn surfchar_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |m| m.as_ptr()))
}
