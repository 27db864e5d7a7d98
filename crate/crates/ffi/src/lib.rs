//! C ABI over `gyk`.
//!
//! Objects live behind opaque handles that the caller frees with the
//! matching `*_free`. Every fallible call returns a [`GykStatus`]; on failure
//! [`gyk_last_error`] describes what went wrong on the calling thread.
//! Tables are row-major arrays of `n * n` indices with the identity at 0.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::fmt::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use gyk::action::{self, ActionTable};
use gyk::right::{self, RightGyrogroup};
use gyk::{Error, FiniteGroup, GgcResult, Gyrogroup};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GykStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    /// The input is well formed but fails the axioms.
    Axioms = 4,
    Budget = 5,
    BufferTooSmall = 6,
    Internal = 7,
}

pub struct GykGyrogroup(Gyrogroup);
pub struct GykGgc(GgcResult);
pub struct GykRightGyrogroup(RightGyrogroup);

/// Orders of the objects built by the completion.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GykGgcOrders {
    pub gyrogroup: usize,
    pub gyration_group: usize,
    pub pair_group: usize,
    pub normal_closure: usize,
    pub completion: usize,
    pub kernel: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(err: &Error) -> GykStatus {
    match err {
        Error::Parse(_) | Error::Io(_) => GykStatus::Parse,
        Error::BudgetExceeded { .. } | Error::OrderBound { .. } => GykStatus::Budget,
        Error::Axioms(_)
        | Error::NotHomomorphism(_)
        | Error::NotSubgroup(_)
        | Error::NotNormal(_)
        | Error::NotTransversal(_)
        | Error::NotRightSubgyrogroup(_) => GykStatus::Axioms,
        Error::Inconsistency(_) => GykStatus::Internal,
        _ => GykStatus::InvalidArgument,
    }
}

/// Runs `f`, recording errors and turning panics into `Internal`.
fn guard(f: impl FnOnce() -> Result<(), (GykStatus, String)>) -> GykStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GykStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            GykStatus::Internal
        }
    }
}

fn lib<T>(r: gyk::Result<T>) -> Result<T, (GykStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (GykStatus, String) {
    (GykStatus::NullPointer, format!("{what} is null"))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, (GykStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn out_ptr<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, (GykStatus, String)> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn square(n: usize, table: *const usize) -> Result<Vec<usize>, (GykStatus, String)> {
    if table.is_null() {
        return Err(null("table"));
    }
    let len = n.checked_mul(n).ok_or((GykStatus::InvalidArgument, "order overflows".to_string()))?;
    Ok(std::slice::from_raw_parts(table, len).to_vec())
}

unsafe fn fill(out: *mut usize, len: usize, data: &[usize]) -> Result<(), (GykStatus, String)> {
    if out.is_null() {
        return Err(null("output buffer"));
    }
    if len < data.len() {
        return Err((GykStatus::BufferTooSmall, format!("buffer holds {len}, need {}", data.len())));
    }
    std::slice::from_raw_parts_mut(out, data.len()).copy_from_slice(data);
    Ok(())
}

fn in_range(a: usize, n: usize) -> Result<(), (GykStatus, String)> {
    if a >= n {
        return Err((GykStatus::InvalidArgument, format!("element {a} is outside 0..{n}")));
    }
    Ok(())
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn gyk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Frees a string returned by the library.
#[no_mangle]
pub unsafe extern "C" fn gyk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---- gyrogroups ----

#[no_mangle]
pub unsafe extern "C" fn gyk_gyrogroup_from_table(n: usize, table: *const usize, out: *mut *mut GykGyrogroup) -> GykStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let g = lib(Gyrogroup::from_flat(n, square(n, table)?))?;
        *out = Box::into_raw(Box::new(GykGyrogroup(g)));
        Ok(())
    })
}

/// Parses the text table format.
#[no_mangle]
pub unsafe extern "C" fn gyk_gyrogroup_parse(text: *const c_char, out: *mut *mut GykGyrogroup) -> GykStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        if text.is_null() {
            return Err(null("text"));
        }
        let text = CStr::from_ptr(text).to_str().map_err(|e| (GykStatus::Parse, e.to_string()))?;
        let raw = lib(gyk::io::parse_table(text).map_err(Error::from))?;
        let mut g = lib(Gyrogroup::from_rows(&raw.rows))?;
        if let Some(l) = raw.labels {
            g = lib(g.with_labels(l))?;
        }
        *out = Box::into_raw(Box::new(GykGyrogroup(g)));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn gyk_gyrogroup_free(g: *mut GykGyrogroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

#[no_mangle]
pub unsafe extern "C" fn gyk_gyrogroup_order(g: *const GykGyrogroup, out: *mut usize) -> GykStatus {
    guard(|| {
        *out_ptr(out, "out")? = handle(g, "gyrogroup")?.0.order();
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn gyk_gyrogroup_op(g: *const GykGyrogroup, a: usize, b: usize, out: *mut usize) -> GykStatus {
    guard(|| {
        let g = &handle(g, "gyrogroup")?.0;
        in_range(a, g.order())?;
        in_range(b, g.order())?;
        *out_ptr(out, "out")? = g.op(a, b);
        Ok(())
    })
}

/// Writes the images of `gyr[a,b]` into `out[0..order]`.
#[no_mangle]
pub unsafe extern "C" fn gyk_gyrogroup_gyr(
    g: *const GykGyrogroup,
    a: usize,
    b: usize,
    out: *mut usize,
    len: usize,
) -> GykStatus {
    guard(|| {
        let g = &handle(g, "gyrogroup")?.0;
        in_range(a, g.order())?;
        in_range(b, g.order())?;
        let p = g.gyr(a, b);
        let images: Vec<usize> = (0..g.order()).map(|x| p.apply(x)).collect();
        fill(out, len, &images)
    })
}

#[no_mangle]
pub unsafe extern "C" fn gyk_gyrogroup_is_associative(g: *const GykGyrogroup, out: *mut bool) -> GykStatus {
    guard(|| {
        *out_ptr(out, "out")? = handle(g, "gyrogroup")?.0.is_associative();
        Ok(())
    })
}

/// Dimension of the space of functions invariant under translated gyrations.
#[no_mangle]
pub unsafe extern "C" fn gyk_lgyr_dimension(g: *const GykGyrogroup, out: *mut usize) -> GykStatus {
    guard(|| {
        let g = &handle(g, "gyrogroup")?.0;
        let out = out_ptr(out, "out")?;
        let ggc = lib(gyk::complete(g))?;
        *out = lib(gyk::lgyr::lgyr_dimension(g, &ggc))?;
        Ok(())
    })
}

// ---- completion ----

#[no_mangle]
pub unsafe extern "C" fn gyk_ggc_complete(g: *const GykGyrogroup, out: *mut *mut GykGgc) -> GykStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let result = lib(gyk::complete(&handle(g, "gyrogroup")?.0))?;
        *out = Box::into_raw(Box::new(GykGgc(result)));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn gyk_ggc_free(c: *mut GykGgc) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

#[no_mangle]
pub unsafe extern "C" fn gyk_ggc_orders(c: *const GykGgc, out: *mut GykGgcOrders) -> GykStatus {
    guard(|| {
        let c = &handle(c, "completion")?.0;
        *out_ptr(out, "out")? = GykGgcOrders {
            gyrogroup: c.source.order(),
            gyration_group: c.gyration_group.order(),
            pair_group: c.pair_group.order(),
            normal_closure: c.normal_closure.len(),
            completion: c.completion.order(),
            kernel: c.kernel.len(),
        };
        Ok(())
    })
}

/// Writes `nu(a)` for every `a` into `out[0..|G|]`.
#[no_mangle]
pub unsafe extern "C" fn gyk_ggc_nu(c: *const GykGgc, out: *mut usize, len: usize) -> GykStatus {
    guard(|| fill(out, len, &handle(c, "completion")?.0.nu))
}

/// Writes the kernel of `nu` in ascending order into `out[0..kernel]`.
#[no_mangle]
pub unsafe extern "C" fn gyk_ggc_kernel(c: *const GykGgc, out: *mut usize, len: usize) -> GykStatus {
    guard(|| fill(out, len, &handle(c, "completion")?.0.kernel))
}

/// Writes the Cayley table of `M(G)`, row-major, into `out[0..|M|^2]`.
#[no_mangle]
pub unsafe extern "C" fn gyk_ggc_completion_table(c: *const GykGgc, out: *mut usize, len: usize) -> GykStatus {
    guard(|| {
        let table = handle(c, "completion")?.0.completion.rows().concat();
        fill(out, len, &table)
    })
}

/// A text summary; free it with `gyk_string_free`.
#[no_mangle]
pub unsafe extern "C" fn gyk_ggc_report(c: *const GykGgc, out: *mut *mut c_char) -> GykStatus {
    guard(|| {
        let c = &handle(c, "completion")?.0;
        let out = out_ptr(out, "out")?;
        let mut s = String::new();
        let _ = writeln!(s, "|G| = {}", c.source.order());
        let _ = writeln!(s, "|R(G)| = {}", c.gyration_group.order());
        let _ = writeln!(s, "|GR(G)| = {}", c.pair_group.order());
        let _ = writeln!(s, "|[R(G)]| = {}", c.normal_closure.len());
        let _ = writeln!(s, "|M(G)| = {}", c.completion.order());
        for (a, m) in c.nu.iter().enumerate() {
            let _ = writeln!(s, "{a} -> {m}");
        }
        let kernel: Vec<String> = c.kernel.iter().map(usize::to_string).collect();
        let _ = writeln!(s, "kernel: {}", kernel.join(" "));
        *out = CString::new(s).expect("no interior nul").into_raw();
        Ok(())
    })
}

// ---- actions ----

unsafe fn action_table(g: &Gyrogroup, k: usize, table: *const usize) -> Result<ActionTable, (GykStatus, String)> {
    if table.is_null() {
        return Err(null("table"));
    }
    let len = g.order().checked_mul(k).ok_or((GykStatus::InvalidArgument, "size overflows".to_string()))?;
    let data = std::slice::from_raw_parts(table, len).to_vec();
    lib(ActionTable::new(g.order(), k, data))
}

/// Checks the action axioms for `table[a*k + x] = a·x` on a set of size `k`.
/// `valid` reports the verdict; the status is non-zero only for bad input.
#[no_mangle]
pub unsafe extern "C" fn gyk_action_validate(
    g: *const GykGyrogroup,
    k: usize,
    table: *const usize,
    valid: *mut bool,
) -> GykStatus {
    guard(|| {
        let g = &handle(g, "gyrogroup")?.0;
        let valid = out_ptr(valid, "valid")?;
        let act = action_table(g, k, table)?;
        let report = lib(action::validate_action(g, &act))?;
        *valid = report.passed();
        if !report.passed() {
            set_error(report.to_string());
        }
        Ok(())
    })
}

/// Number of orbits, after checking that both averaging formulas agree.
#[no_mangle]
pub unsafe extern "C" fn gyk_action_burnside(
    g: *const GykGyrogroup,
    k: usize,
    table: *const usize,
    orbits: *mut usize,
) -> GykStatus {
    guard(|| {
        let g = &handle(g, "gyrogroup")?.0;
        let orbits = out_ptr(orbits, "orbits")?;
        let act = action_table(g, k, table)?;
        let report = lib(action::validate_action(g, &act))?;
        if !report.passed() {
            return Err((GykStatus::Axioms, report.to_string()));
        }
        let ggc = lib(gyk::complete(g))?;
        let counts = lib(action::burnside_counts(&act, &ggc))?;
        if !counts.holds() {
            return Err((GykStatus::Internal, format!("orbit counts disagree: {counts:?}")));
        }
        *orbits = counts.direct;
        Ok(())
    })
}

// ---- right gyrogroups ----

#[no_mangle]
pub unsafe extern "C" fn gyk_right_from_table(n: usize, table: *const usize, out: *mut *mut GykRightGyrogroup) -> GykStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let flat = square(n, table)?;
        let rows: Vec<Vec<usize>> = if n == 0 { Vec::new() } else { flat.chunks(n).map(<[usize]>::to_vec).collect() };
        let r = lib(right::validate_right(&rows))?;
        *out = Box::into_raw(Box::new(GykRightGyrogroup(r)));
        Ok(())
    })
}

/// The right gyrogroup `a∘b = b⁻¹ab²` on the group with Cayley table `table`.
#[no_mangle]
pub unsafe extern "C" fn gyk_right_gbased(n: usize, table: *const usize, out: *mut *mut GykRightGyrogroup) -> GykStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let flat = square(n, table)?;
        let rows: Vec<Vec<usize>> = if n == 0 { Vec::new() } else { flat.chunks(n).map(<[usize]>::to_vec).collect() };
        let k = lib(FiniteGroup::from_rows(&rows))?;
        let r = lib(right::gbased(&k))?;
        *out = Box::into_raw(Box::new(GykRightGyrogroup(r)));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn gyk_right_free(r: *mut GykRightGyrogroup) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

#[no_mangle]
pub unsafe extern "C" fn gyk_right_order(r: *const GykRightGyrogroup, out: *mut usize) -> GykStatus {
    guard(|| {
        *out_ptr(out, "out")? = handle(r, "right gyrogroup")?.0.order();
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn gyk_right_op(r: *const GykRightGyrogroup, a: usize, b: usize, out: *mut usize) -> GykStatus {
    guard(|| {
        let r = &handle(r, "right gyrogroup")?.0;
        in_range(a, r.order())?;
        in_range(b, r.order())?;
        *out_ptr(out, "out")? = r.op(a, b);
        Ok(())
    })
}

/// Writes the images of `gyr[a,b]` into `out[0..order]`.
#[no_mangle]
pub unsafe extern "C" fn gyk_right_gyr(
    r: *const GykRightGyrogroup,
    a: usize,
    b: usize,
    out: *mut usize,
    len: usize,
) -> GykStatus {
    guard(|| {
        let r = &handle(r, "right gyrogroup")?.0;
        in_range(a, r.order())?;
        in_range(b, r.order())?;
        let p = r.gyr(a, b);
        let images: Vec<usize> = (0..r.order()).map(|x| p.apply(x)).collect();
        fill(out, len, &images)
    })
}

#[no_mangle]
pub unsafe extern "C" fn gyk_right_is_associative(r: *const GykRightGyrogroup, out: *mut bool) -> GykStatus {
    guard(|| {
        *out_ptr(out, "out")? = handle(r, "right gyrogroup")?.0.is_associative();
        Ok(())
    })
}
