//! C ABI over the `geography` solver.
//!
//! Every fallible call returns a [`GeoStatus`] and writes its result through
//! an out-pointer. On failure, [`geo_last_error_message`] describes what went
//! wrong on the calling thread. Positions are opaque and owned by the caller
//! once returned; release them with [`geo_position_free`]. Strings returned
//! by the library are released with [`geo_string_free`].

use geography::constructor::{build_nimber_position, build_tree_nimber};
use geography::graph::{parse_directed, parse_position, serialize_position, Format, Position};
use geography::grundy::{
    exact_grundy, grundy_bab, grundy_degree3, BabConfig, Degree3Error, SolveBudget, SolveError,
};
use geography::matching::{is_winnable, winning_move};
use geography::reductions::{add_prelude, gg_to_ug};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeoStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    BudgetExceeded = 4,
    DegreeViolation = 5,
    InvalidArgument = 6,
    Panic = 7,
}

/// Algorithm used by [`geo_grundy`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeoMethod {
    /// Degree-3 algorithm when every vertex has degree at most 3, otherwise
    /// branch and bound.
    Auto = 0,
    Exact = 1,
    Degree3 = 2,
    BranchAndBound = 3,
}

/// An undirected board with a token. Opaque to C.
pub struct GeoPosition {
    inner: Position,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(GeoStatus, String);

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        Failure(GeoStatus::BudgetExceeded, e.to_string())
    }
}

impl From<Degree3Error> for Failure {
    fn from(e: Degree3Error) -> Self {
        Failure(GeoStatus::DegreeViolation, e.to_string())
    }
}

fn set_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("interior nuls replaced");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> GeoStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => GeoStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_string());
            set_error(format!("panic: {message}"));
            GeoStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(GeoStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a [u8], Failure> {
    if s.is_null() {
        return Err(null("input string"));
    }
    let bytes = CStr::from_ptr(s).to_bytes();
    std::str::from_utf8(bytes).map_err(|e| Failure(GeoStatus::InvalidUtf8, e.to_string()))?;
    Ok(bytes)
}

unsafe fn position<'a>(p: *const GeoPosition) -> Result<&'a Position, Failure> {
    p.as_ref().map(|p| &p.inner).ok_or_else(|| null("position"))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn boxed(p: Position) -> *mut GeoPosition {
    Box::into_raw(Box::new(GeoPosition { inner: p }))
}

fn budget(max_states: u64) -> SolveBudget {
    if max_states == 0 {
        SolveBudget::default()
    } else {
        SolveBudget::states(max_states)
    }
}

/// Parses a board in JSON or edge-list form.
///
/// # Safety
/// `text_in` must be a nul-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn geo_position_parse(text_in: *const c_char, out: *mut *mut GeoPosition) -> GeoStatus {
    guard(|| {
        let bytes = text(text_in)?;
        let p = parse_position(bytes, Format::detect(bytes))
            .map_err(|e| Failure(GeoStatus::Parse, e.to_string()))?;
        write(out, boxed(p))
    })
}

/// Releases a position. Null is ignored.
///
/// # Safety
/// `p` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn geo_position_free(p: *mut GeoPosition) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of vertices on the board.
///
/// # Safety
/// `p` must be a live position and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn geo_position_vertex_count(p: *const GeoPosition, out: *mut usize) -> GeoStatus {
    guard(|| write(out, position(p)?.vertex_count()))
}

/// Whether the player to move wins.
///
/// # Safety
/// `p` must be a live position and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn geo_is_winnable(p: *const GeoPosition, out: *mut bool) -> GeoStatus {
    guard(|| {
        let p = position(p)?;
        write(out, is_winnable(p, &p.fresh_mask()))
    })
}

/// A vertex to move to that wins, or -1 when the mover loses.
///
/// # Safety
/// `p` must be a live position and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn geo_winning_move(p: *const GeoPosition, out: *mut i64) -> GeoStatus {
    guard(|| {
        let p = position(p)?;
        write(out, winning_move(p, &p.fresh_mask()).map_or(-1, |v| v as i64))
    })
}

/// Grundy value of the position. `max_states == 0` uses the default budget.
///
/// # Safety
/// `p` must be a live position and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn geo_grundy(
    p: *const GeoPosition,
    method: GeoMethod,
    max_states: u64,
    out: *mut u32,
) -> GeoStatus {
    guard(|| {
        let p = position(p)?;
        let budget = budget(max_states);
        let method = match method {
            GeoMethod::Auto if p.graph().max_degree() <= 3 => GeoMethod::Degree3,
            GeoMethod::Auto => GeoMethod::BranchAndBound,
            m => m,
        };
        let value = match method {
            GeoMethod::Exact => exact_grundy(p, &p.fresh_mask(), budget)?,
            GeoMethod::Degree3 => grundy_degree3(p)?,
            _ => grundy_bab(
                p,
                BabConfig {
                    budget: Some(budget),
                    ..BabConfig::default()
                },
            )?,
        };
        write(out, value.value())
    })
}

/// Builds a position of value `nimber`. With `tree` set, uses the
/// exponential-size tree, capped at value 10.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn geo_construct(nimber: u32, tree: bool, out: *mut *mut GeoPosition) -> GeoStatus {
    guard(|| {
        let built = if tree {
            build_tree_nimber(nimber).map_err(|e| Failure(GeoStatus::InvalidArgument, e.to_string()))?
        } else {
            build_nimber_position(nimber)
        };
        write(out, boxed(built.position))
    })
}

/// Maps a directed board to an undirected one that is `*` exactly when the
/// directed mover loses. With `prelude` set, the result is `*` or `*2`.
///
/// # Safety
/// `text_in` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn geo_gg_to_ug(
    text_in: *const c_char,
    prelude: bool,
    out: *mut *mut GeoPosition,
) -> GeoStatus {
    guard(|| {
        let bytes = text(text_in)?;
        let dp = parse_directed(bytes, Format::detect(bytes))
            .map_err(|e| Failure(GeoStatus::Parse, e.to_string()))?;
        let (p, _) = gg_to_ug(&dp);
        write(out, boxed(if prelude { add_prelude(&p) } else { p }))
    })
}

/// Canonical JSON for the position. Free the result with [`geo_string_free`].
///
/// # Safety
/// `p` must be a live position and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn geo_position_to_json(p: *const GeoPosition, out: *mut *mut c_char) -> GeoStatus {
    guard(|| {
        let json = CString::new(serialize_position(position(p)?)).expect("JSON has no nul bytes");
        write(out, json.into_raw())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn geo_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next call into the library from this thread.
#[no_mangle]
pub extern "C" fn geo_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
