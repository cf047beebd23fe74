use std::ffi::{CStr, CString};
use std::ptr;

use invcayley_ffi::*;
use libc::c_char;

fn parse(text: &str) -> *mut IcRing {
    let spec = CString::new(text).unwrap();
    let mut ring = ptr::null_mut();
    assert_eq!(unsafe { ic_ring_parse(spec.as_ptr(), &mut ring) }, IcStatus::Ok);
    assert!(!ring.is_null());
    ring
}

fn take(s: *mut c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { ic_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(ic_last_error()) }.to_str().unwrap().to_owned()
}

#[test]
fn scalar_queries() {
    let ring = parse("Z9 x Z4");
    let (mut order, mut degree, mut connected) = (0usize, 0usize, false);
    let mut class = IcGenusClass::Planar;
    unsafe {
        assert_eq!(ic_ring_order(ring, &mut order), IcStatus::Ok);
        assert_eq!(ic_ring_degree(ring, &mut degree), IcStatus::Ok);
        assert_eq!(ic_ring_is_connected(ring, &mut connected), IcStatus::Ok);
        assert_eq!(ic_ring_genus_class(ring, &mut class), IcStatus::Ok);
        ic_ring_free(ring);
    }
    assert_eq!((order, degree, connected, class), (36, 4, true, IcGenusClass::Toroidal));
}

#[test]
fn json_outputs() {
    let ring = parse("Z16");
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(ic_ring_embed_json(ring, &mut s), IcStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["genus"], 1);
        assert_eq!(v["faces"].as_array().unwrap().len(), 16);

        assert_eq!(ic_ring_genus_json(ring, 1_000_000, &mut s), IcStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["kind"], "embedding");
        assert_eq!(v["genus"], 1);

        assert_eq!(ic_ring_analyze_json(ring, &mut s), IcStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["degree"], 4);
        assert_eq!(v["genus_class"]["class"], "Toroidal");

        assert_eq!(ic_ring_export_dot(ring, &mut s), IcStatus::Ok);
        assert!(take(s).starts_with("graph"));

        assert_eq!(ic_ring_spec(ring, &mut s), IcStatus::Ok);
        assert_eq!(take(s), "Z16");
        ic_ring_free(ring);
    }
}

#[test]
fn errors_are_reported() {
    let bad = CString::new("Z4 x Q").unwrap();
    let mut ring = ptr::null_mut();
    assert_eq!(unsafe { ic_ring_parse(bad.as_ptr(), &mut ring) }, IcStatus::ParseError);
    assert!(ring.is_null());
    assert!(last_error().contains("byte 5"), "{}", last_error());

    assert_eq!(unsafe { ic_ring_parse(ptr::null(), &mut ring) }, IcStatus::NullPointer);
    let mut order = 0usize;
    assert_eq!(unsafe { ic_ring_order(ptr::null(), &mut order) }, IcStatus::NullPointer);

    let ring = parse("Z3 x Z3 x Z3");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { ic_ring_embed_json(ring, &mut s) }, IcStatus::NoConstruction);
    assert_eq!(last_error(), "no constructive embedding; use genus");
    assert_eq!(unsafe { ic_ring_order(ring, ptr::null_mut()) }, IcStatus::NullPointer);
    unsafe { ic_ring_free(ring) };

    assert_eq!(unsafe { ic_verify_json(1, 10, &mut s) }, IcStatus::InvalidArgument);
}

#[test]
fn budget_exhaustion_is_indeterminate() {
    let ring = parse("Z3 x Z3 x Z3");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { ic_ring_genus_json(ring, 10, &mut s) }, IcStatus::Indeterminate);
    let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(v["kind"], "bounds");
    unsafe { ic_ring_free(ring) };
}

#[test]
fn verify_report() {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { ic_verify_json(8, 1_000_000, &mut s) }, IcStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(v["max_order"], 8);
    assert!(v["theorems"].as_array().unwrap().iter().all(|t| t["failures"].as_array().unwrap().is_empty()));
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(ic_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_compiles_and_links() {
    let Some(cc) = ["cc", "gcc", "clang"].into_iter().find(|c| std::process::Command::new(c).arg("--version").output().is_ok())
    else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR"));
    let target = dir.join("../../target").join(if cfg!(debug_assertions) { "debug" } else { "release" });
    let lib = target.join("libinvcayley_ffi.a");
    if !lib.exists() {
        eprintln!("{} not built; skipping", lib.display());
        return;
    }
    let tmp = std::env::temp_dir().join(format!("invcayley_ffi_{}", std::process::id()));
    std::fs::create_dir_all(&tmp).unwrap();
    let src = tmp.join("smoke.c");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include "invcayley.h"
int main(void) {
    IcRing *r = NULL;
    if (ic_ring_parse("Z8", &r) != IC_STATUS_OK) return 1;
    size_t d = 0;
    if (ic_ring_degree(r, &d) != IC_STATUS_OK || d != 4) return 2;
    char *s = NULL;
    if (ic_ring_embed_json(r, &s) != IC_STATUS_OK) return 3;
    ic_string_free(s);
    ic_ring_free(r);
    printf("ok\n");
    return 0;
}
"#,
    )
    .unwrap();
    let exe = tmp.join("smoke");
    let status = std::process::Command::new(cc)
        .arg(&src)
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C smoke test failed to compile");
    let out = std::process::Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}
