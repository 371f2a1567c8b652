//! C interface to `sombor-core`.
//!
//! Graphs and extremal results are opaque heap handles released with their
//! `_free` function. Every fallible entry point returns a [`SomborStatus`];
//! the message of the most recent failure on the calling thread is available
//! from [`sombor_last_error`]. Panics are caught at the boundary and reported
//! as [`SomborStatus::Panic`].
//!
//! String outputs use a caller buffer: on success the text is written with a
//! trailing NUL; `*len_out` always receives the text length without the NUL,
//! so a call with `cap == 0` queries the size.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use sombor_core::{
    build_cycle, build_u_abc, build_u_n_d, canonical_certificate, closed_form, index_value,
    Direction, Error, ExtremalRecord, Graph, IndexKind, Tolerance, UnicyclicClasses,
};

pub const SOMBOR_INDEX_SO: u32 = 0;
pub const SOMBOR_INDEX_SO_RED: u32 = 1;
pub const SOMBOR_DIRECTION_MAX: u32 = 0;
pub const SOMBOR_DIRECTION_MIN: u32 = 1;
/// Pass as the diameter to search every diameter.
pub const SOMBOR_ANY_DIAMETER: i64 = -1;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SomborStatus {
    Ok = 0,
    NullPointer = 1,
    Input = 2,
    Structure = 3,
    Capability = 4,
    Domain = 5,
    Panic = 6,
    BufferTooSmall = 7,
}

pub struct SomborGraph(Graph);

pub struct SomborExtremal(ExtremalRecord);

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: impl Into<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.into());
}

fn status_of(err: Error) -> SomborStatus {
    let status = match &err {
        Error::Input(_) => SomborStatus::Input,
        Error::Structure(_) => SomborStatus::Structure,
        Error::Capability(_) => SomborStatus::Capability,
        Error::Domain(_) => SomborStatus::Domain,
    };
    set_error(err.to_string());
    status
}

fn null(what: &str) -> SomborStatus {
    set_error(format!("null pointer: {what}"));
    SomborStatus::NullPointer
}

/// Runs `f`, converting panics into `Panic`.
fn guard(f: impl FnOnce() -> Result<(), SomborStatus>) -> SomborStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SomborStatus::Ok,
        Ok(Err(status)) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {msg}"));
            SomborStatus::Panic
        }
    }
}

fn kind_of(code: u32) -> Result<IndexKind, SomborStatus> {
    match code {
        SOMBOR_INDEX_SO => Ok(IndexKind::Sombor),
        SOMBOR_INDEX_SO_RED => Ok(IndexKind::ReducedSombor),
        _ => Err(status_of(Error::Input(format!(
            "unknown index code {code}"
        )))),
    }
}

fn direction_of(code: u32) -> Result<Direction, SomborStatus> {
    match code {
        SOMBOR_DIRECTION_MAX => Ok(Direction::Max),
        SOMBOR_DIRECTION_MIN => Ok(Direction::Min),
        _ => Err(status_of(Error::Input(format!(
            "unknown direction code {code}"
        )))),
    }
}

unsafe fn graph_ref<'a>(g: *const SomborGraph) -> Result<&'a Graph, SomborStatus> {
    g.as_ref().map(|g| &g.0).ok_or_else(|| null("graph"))
}

unsafe fn extremal_ref<'a>(e: *const SomborExtremal) -> Result<&'a ExtremalRecord, SomborStatus> {
    e.as_ref().map(|e| &e.0).ok_or_else(|| null("extremal"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), SomborStatus> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(value);
    Ok(())
}

unsafe fn give_graph(out: *mut *mut SomborGraph, g: Graph) -> Result<(), SomborStatus> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(SomborGraph(g)));
    Ok(())
}

unsafe fn write_str(
    text: &str,
    buf: *mut c_char,
    cap: usize,
    len_out: *mut usize,
) -> Result<(), SomborStatus> {
    if len_out.is_null() {
        return Err(null("len_out"));
    }
    *len_out = text.len();
    if cap <= text.len() {
        set_error(format!(
            "buffer holds {cap} bytes, {} needed",
            text.len() + 1
        ));
        return Err(SomborStatus::BufferTooSmall);
    }
    if buf.is_null() {
        return Err(null("buf"));
    }
    ptr::copy_nonoverlapping(text.as_ptr(), buf.cast::<u8>(), text.len());
    *buf.add(text.len()) = 0;
    Ok(())
}

/// Copies the last error message of this thread into `buf` (NUL-terminated,
/// truncated to fit) and returns its full length.
#[no_mangle]
pub unsafe extern "C" fn sombor_last_error(buf: *mut c_char, cap: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && cap > 0 {
            let n = msg.len().min(cap - 1);
            ptr::copy_nonoverlapping(msg.as_ptr(), buf.cast::<u8>(), n);
            *buf.add(n) = 0;
        }
        msg.len()
    })
}

/// Builds a graph on `n` vertices from `m` edges stored as `2 * m`
/// consecutive endpoints.
#[no_mangle]
pub unsafe extern "C" fn sombor_graph_from_edges(
    n: usize,
    endpoints: *const usize,
    m: usize,
    out: *mut *mut SomborGraph,
) -> SomborStatus {
    guard(|| {
        if endpoints.is_null() && m > 0 {
            return Err(null("endpoints"));
        }
        let flat = if m == 0 {
            &[][..]
        } else {
            slice::from_raw_parts(endpoints, 2 * m)
        };
        let edges: Vec<(usize, usize)> = flat.chunks_exact(2).map(|e| (e[0], e[1])).collect();
        let g = Graph::from_edges(n, &edges).map_err(status_of)?;
        give_graph(out, g)
    })
}

/// Parses the `n m` / `u v` text format from a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn sombor_graph_from_text(
    text: *const c_char,
    out: *mut *mut SomborGraph,
) -> SomborStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| status_of(Error::Input("text is not UTF-8".into())))?;
        let g: Graph = s.parse().map_err(status_of)?;
        give_graph(out, g)
    })
}

#[no_mangle]
pub unsafe extern "C" fn sombor_graph_free(g: *mut SomborGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

#[no_mangle]
pub unsafe extern "C" fn sombor_graph_order(
    g: *const SomborGraph,
    out: *mut usize,
) -> SomborStatus {
    guard(|| write_out(out, graph_ref(g)?.order()))
}

#[no_mangle]
pub unsafe extern "C" fn sombor_graph_size(g: *const SomborGraph, out: *mut usize) -> SomborStatus {
    guard(|| write_out(out, graph_ref(g)?.size()))
}

/// Fails with `Structure` on a disconnected graph.
#[no_mangle]
pub unsafe extern "C" fn sombor_graph_diameter(
    g: *const SomborGraph,
    out: *mut usize,
) -> SomborStatus {
    guard(|| {
        let d = graph_ref(g)?.diameter().map_err(status_of)?;
        write_out(out, d)
    })
}

#[no_mangle]
pub unsafe extern "C" fn sombor_graph_is_unicyclic(
    g: *const SomborGraph,
    out: *mut bool,
) -> SomborStatus {
    guard(|| write_out(out, graph_ref(g)?.is_unicyclic()))
}

#[no_mangle]
pub unsafe extern "C" fn sombor_graph_to_text(
    g: *const SomborGraph,
    buf: *mut c_char,
    cap: usize,
    len_out: *mut usize,
) -> SomborStatus {
    guard(|| write_str(&graph_ref(g)?.to_string(), buf, cap, len_out))
}

/// Canonical certificate as lowercase hex; equal strings mean isomorphic graphs.
#[no_mangle]
pub unsafe extern "C" fn sombor_graph_certificate_hex(
    g: *const SomborGraph,
    buf: *mut c_char,
    cap: usize,
    len_out: *mut usize,
) -> SomborStatus {
    guard(|| {
        let cert = canonical_certificate(graph_ref(g)?).map_err(status_of)?;
        write_str(&cert.to_hex(), buf, cap, len_out)
    })
}

#[no_mangle]
pub unsafe extern "C" fn sombor_index_value(
    g: *const SomborGraph,
    index: u32,
    out: *mut f64,
) -> SomborStatus {
    guard(|| {
        let kind = kind_of(index)?;
        write_out(out, index_value(graph_ref(g)?, kind))
    })
}

#[no_mangle]
pub unsafe extern "C" fn sombor_closed_form(
    n: usize,
    d: usize,
    index: u32,
    out: *mut f64,
) -> SomborStatus {
    guard(|| {
        let v = closed_form(n, d, kind_of(index)?).map_err(status_of)?;
        write_out(out, v)
    })
}

#[no_mangle]
pub unsafe extern "C" fn sombor_build_cycle(n: usize, out: *mut *mut SomborGraph) -> SomborStatus {
    guard(|| give_graph(out, build_cycle(n).map_err(status_of)?))
}

#[no_mangle]
pub unsafe extern "C" fn sombor_build_u_n_d(
    n: usize,
    d: usize,
    out: *mut *mut SomborGraph,
) -> SomborStatus {
    guard(|| give_graph(out, build_u_n_d(n, d).map_err(status_of)?))
}

#[no_mangle]
pub unsafe extern "C" fn sombor_build_u_abc(
    n: usize,
    a: usize,
    b: usize,
    c: usize,
    out: *mut *mut SomborGraph,
) -> SomborStatus {
    guard(|| give_graph(out, build_u_abc(n, a, b, c).map_err(status_of)?))
}

/// Brute-force extremum over unicyclic graphs of order `n` with diameter `d`
/// (or [`SOMBOR_ANY_DIAMETER`]). A non-positive `tolerance` selects the default.
#[no_mangle]
pub unsafe extern "C" fn sombor_extremal(
    n: usize,
    d: i64,
    index: u32,
    direction: u32,
    tolerance: f64,
    out: *mut *mut SomborExtremal,
) -> SomborStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let kind = kind_of(index)?;
        let direction = direction_of(direction)?;
        let d = match d {
            SOMBOR_ANY_DIAMETER => None,
            d if d >= 0 => Some(d as usize),
            d => return Err(status_of(Error::Input(format!("negative diameter {d}")))),
        };
        let tol = if tolerance > 0.0 {
            Tolerance(tolerance)
        } else {
            Tolerance::default()
        };
        let record = UnicyclicClasses::new(n)
            .and_then(|c| c.extremal(d, kind, direction, tol))
            .map_err(status_of)?;
        *out = Box::into_raw(Box::new(SomborExtremal(record)));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn sombor_extremal_free(e: *mut SomborExtremal) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

#[no_mangle]
pub unsafe extern "C" fn sombor_extremal_value(
    e: *const SomborExtremal,
    out: *mut f64,
) -> SomborStatus {
    guard(|| write_out(out, extremal_ref(e)?.value))
}

#[no_mangle]
pub unsafe extern "C" fn sombor_extremal_count_searched(
    e: *const SomborExtremal,
    out: *mut usize,
) -> SomborStatus {
    guard(|| write_out(out, extremal_ref(e)?.count_searched))
}

#[no_mangle]
pub unsafe extern "C" fn sombor_extremal_optimum_count(
    e: *const SomborExtremal,
    out: *mut usize,
) -> SomborStatus {
    guard(|| write_out(out, extremal_ref(e)?.optima.len()))
}

/// Certificate of the `i`-th optimal class, in ascending certificate order.
#[no_mangle]
pub unsafe extern "C" fn sombor_extremal_optimum_hex(
    e: *const SomborExtremal,
    i: usize,
    buf: *mut c_char,
    cap: usize,
    len_out: *mut usize,
) -> SomborStatus {
    guard(|| {
        let record = extremal_ref(e)?;
        let cert = record.optima.iter().nth(i).ok_or_else(|| {
            status_of(Error::Input(format!(
                "optimum {i} requested, {} available",
                record.optima.len()
            )))
        })?;
        write_str(&cert.to_hex(), buf, cap, len_out)
    })
}
