//! C ABI over `invcayley`.
//!
//! Rings are opaque handles from `ic_ring_parse`, released with
//! `ic_ring_free`. Every call returns an `IcStatus`; on failure
//! `ic_last_error` describes it. Strings handed out by the library are
//! released with `ic_string_free`.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use invcayley::classifier::{classify_genus, constructive_embedding, GenusClass};
use invcayley::graph::{build_cayley, to_dot, CayleyGraph};
use invcayley::verifier::{run_suite, seeded_genus};
use invcayley::{build_ring, parse_ring_spec, FiniteRing, RingSpec};
use libc::{c_char, size_t};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    RingError = 4,
    NoConstruction = 5,
    /// The search ran out of budget; the JSON output carries bounds.
    Indeterminate = 6,
    InvalidArgument = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IcGenusClass {
    Planar = 0,
    Toroidal = 1,
    Higher = 2,
}

/// A ring together with its involutory Cayley graph.
pub struct IcRing {
    spec: RingSpec,
    ring: FiniteRing,
    graph: CayleyGraph,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).unwrap_or_default());
}

fn guard(f: impl FnOnce() -> Result<(), (IcStatus, String)>) -> IcStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => IcStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            IcStatus::Panic
        }
    }
}

unsafe fn ring_ref<'a>(ring: *const IcRing) -> Result<&'a IcRing, (IcStatus, String)> {
    ring.as_ref().ok_or((IcStatus::NullPointer, "ring handle is null".into()))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), (IcStatus, String)> {
    if out.is_null() {
        return Err((IcStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (IcStatus, String)> {
    let c = CString::new(s).map_err(|_| (IcStatus::Panic, "output contains NUL".to_string()))?;
    write_out(out, c.into_raw())
}

/// Message for the most recent failed call on this thread; empty after a
/// success. Owned by the library and valid until the next call.
#[no_mangle]
pub extern "C" fn ic_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ic_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses a ring spec such as `"Z9 x Z4"` and builds the ring and its graph.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ic_ring_parse(spec: *const c_char, out: *mut *mut IcRing) -> IcStatus {
    guard(|| {
        if spec.is_null() {
            return Err((IcStatus::NullPointer, "spec is null".into()));
        }
        let text = CStr::from_ptr(spec).to_str().map_err(|e| (IcStatus::InvalidUtf8, e.to_string()))?;
        let parsed = parse_ring_spec(text).map_err(|e| (IcStatus::ParseError, e.to_string()))?;
        let ring = build_ring(&parsed).map_err(|e| (IcStatus::RingError, e.to_string()))?;
        let graph = build_cayley(&ring);
        write_out(out, Box::into_raw(Box::new(IcRing { spec: parsed, ring, graph })))
    })
}

/// # Safety
/// `ring` must come from `ic_ring_parse` and not be freed twice. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn ic_ring_free(ring: *mut IcRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// # Safety
/// `ring` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ic_ring_order(ring: *const IcRing, out: *mut size_t) -> IcStatus {
    guard(|| write_out(out, ring_ref(ring)?.ring.order()))
}

/// Degree of the (regular) graph.
///
/// # Safety
/// `ring` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ic_ring_degree(ring: *const IcRing, out: *mut size_t) -> IcStatus {
    guard(|| {
        let r = ring_ref(ring)?;
        let d = r.graph.is_regular().ok_or((IcStatus::RingError, "graph is not regular".to_string()))?;
        write_out(out, d)
    })
}

/// # Safety
/// `ring` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ic_ring_is_connected(ring: *const IcRing, out: *mut bool) -> IcStatus {
    guard(|| write_out(out, ring_ref(ring)?.graph.is_connected()))
}

/// # Safety
/// `ring` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ic_ring_genus_class(ring: *const IcRing, out: *mut IcGenusClass) -> IcStatus {
    guard(|| {
        let verdict = classify_genus(&ring_ref(ring)?.ring.local_decomposition());
        let class = match verdict.class {
            GenusClass::Planar => IcGenusClass::Planar,
            GenusClass::Toroidal => IcGenusClass::Toroidal,
            GenusClass::Higher { .. } => IcGenusClass::Higher,
        };
        write_out(out, class)
    })
}

/// Canonical spelling of the ring spec.
///
/// # Safety
/// `ring` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ic_ring_spec(ring: *const IcRing, out: *mut *mut c_char) -> IcStatus {
    guard(|| write_string(out, ring_ref(ring)?.spec.to_string()))
}

/// Invariants and genus verdict as JSON.
///
/// # Safety
/// `ring` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ic_ring_analyze_json(ring: *const IcRing, out: *mut *mut c_char) -> IcStatus {
    guard(|| {
        let r = ring_ref(ring)?;
        let report = invcayley::cli::analyze(&r.ring, &r.graph).map_err(|e| (IcStatus::RingError, e.to_string()))?;
        write_string(out, serde_json::to_string(&report).expect("serializable"))
    })
}

/// Genus certificate as JSON. Returns `Indeterminate` (with the bounds
/// written to `out`) when the budget runs out.
///
/// # Safety
/// `ring` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ic_ring_genus_json(ring: *const IcRing, budget: u64, out: *mut *mut c_char) -> IcStatus {
    let mut exact = true;
    let status = guard(|| {
        let r = ring_ref(ring)?;
        let cert = seeded_genus(&r.ring, &r.graph, budget);
        exact = cert.exact_genus().is_some();
        write_string(out, serde_json::to_string(&cert).expect("serializable"))
    });
    if status == IcStatus::Ok && !exact {
        set_error("genus search budget exhausted");
        return IcStatus::Indeterminate;
    }
    status
}

/// Explicit genus-1 embedding as JSON, or `NoConstruction`.
///
/// # Safety
/// `ring` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ic_ring_embed_json(ring: *const IcRing, out: *mut *mut c_char) -> IcStatus {
    guard(|| {
        let r = ring_ref(ring)?;
        let c = constructive_embedding(&r.ring)
            .ok_or((IcStatus::NoConstruction, "no constructive embedding; use genus".to_string()))?;
        write_string(out, serde_json::to_string(&c.embedding).expect("serializable"))
    })
}

/// The graph in DOT, vertices labelled by ring elements.
///
/// # Safety
/// `ring` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ic_ring_export_dot(ring: *const IcRing, out: *mut *mut c_char) -> IcStatus {
    guard(|| {
        let r = ring_ref(ring)?;
        write_string(out, to_dot(&r.graph, &format!("Gamma({})", r.spec)))
    })
}

/// Theorem suite report as JSON.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ic_verify_json(max_order: size_t, budget: u64, out: *mut *mut c_char) -> IcStatus {
    guard(|| {
        if max_order < 2 {
            return Err((IcStatus::InvalidArgument, "max_order must be at least 2".into()));
        }
        write_string(out, run_suite(max_order, budget).to_json())
    })
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn ic_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
