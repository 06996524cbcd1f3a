// Copyright 2026 the compass authors
// SPDX-License-Identifier: Apache-2.0

use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use compass_ffi::*;

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    compass_string_free(s);
    out
}

unsafe fn parse(text: &str) -> *mut CompassValue {
    let c = CString::new(text).unwrap();
    let mut v = ptr::null_mut();
    assert_eq!(compass_value_parse(c.as_ptr(), &mut v), CompassStatus::Ok);
    v
}

#[test]
fn arithmetic_round_trip() {
    unsafe {
        let two = parse("2");
        let mut root = ptr::null_mut();
        assert_eq!(compass_value_sqrt(two, &mut root), CompassStatus::Ok);
        let mut sq = ptr::null_mut();
        assert_eq!(compass_value_arith(CompassOp::Mul, root, root, &mut sq), CompassStatus::Ok);
        let mut cmp = 7;
        assert_eq!(compass_value_compare(sq, two, &mut cmp), CompassStatus::Ok);
        assert_eq!(cmp, 0);
        let mut s = ptr::null_mut();
        assert_eq!(compass_value_to_string(root, &mut s), CompassStatus::Ok);
        assert_eq!(take(s), "(0 + 1*sqrt(2))");
        for v in [two, root, sq] {
            compass_value_free(v);
        }
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let zero = parse("0");
        let one = parse("1");
        let mut q = ptr::null_mut();
        assert_eq!(compass_value_arith(CompassOp::Div, one, zero, &mut q), CompassStatus::DivisionByZero);
        assert!(q.is_null());
        let msg = CStr::from_ptr(compass_last_error()).to_str().unwrap();
        assert_eq!(msg, "division by zero");
        let neg = parse("-1");
        assert_eq!(compass_value_sqrt(neg, &mut q), CompassStatus::NegativeSqrt);
        assert_eq!(compass_value_sqrt(ptr::null(), &mut q), CompassStatus::NullPointer);
        let bad = CString::new("(1 +").unwrap();
        assert_eq!(compass_value_parse(bad.as_ptr(), &mut q), CompassStatus::Parse);
        let (mut s, mut c) = (ptr::null_mut(), ptr::null_mut());
        let off = CString::new("4").unwrap();
        assert_eq!(compass_sin_cos(off.as_ptr(), &mut s, &mut c), CompassStatus::OffGrid);
        for v in [zero, one, neg] {
            compass_value_free(v);
        }
    }
}

#[test]
fn polygons_and_verdicts() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(compass_polygon_construct(10, &mut p), CompassStatus::Ok);
        let mut ok = false;
        assert_eq!(compass_polygon_verify(p, &mut ok), CompassStatus::Ok);
        assert!(ok);
        let (mut x, mut y) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(compass_polygon_vertex(p, 10, &mut x, &mut y), CompassStatus::OutOfRange);
        let mut json = ptr::null_mut();
        assert_eq!(compass_polygon_trace_json(p, &mut json), CompassStatus::Ok);
        assert!(take(json).contains("\"kind\": \"place-point\""));
        let mut svg = ptr::null_mut();
        assert_eq!(compass_polygon_svg(p, &mut svg), CompassStatus::Ok);
        assert!(take(svg).contains("<svg"));
        compass_polygon_free(p);

        let (mut c, mut w) = (true, 0u64);
        assert_eq!(compass_gauss_constructible(7, &mut c, &mut w), CompassStatus::Ok);
        assert_eq!((c, w), (false, 7));
        assert_eq!(compass_gauss_constructible(17, &mut c, &mut w), CompassStatus::Ok);
        assert_eq!((c, w), (true, 0));
        assert_eq!(compass_gauss_constructible(2, &mut c, &mut w), CompassStatus::InvalidArgument);
    }
}

#[test]
fn header_is_current() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/compass.h")).unwrap();
    for name in [
        "compass_value_parse",
        "compass_value_arith",
        "compass_sin_cos",
        "compass_polygon_construct",
        "compass_gauss_constructible",
        "COMPASS_STATUS_OFF_GRID",
    ] {
        assert!(header.contains(name), "{name} missing from compass.h");
    }
}

/// Compiles a C program against the header and the static library.
#[test]
fn c_program_links_and_runs() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|d| d.parent()).unwrap();
    let lib = profile_dir.join("libcompass_ffi.a");
    assert!(lib.exists(), "static library not found at {}", lib.display());
    let out_dir = tempfile::tempdir().unwrap();
    let bin = out_dir.path().join("smoke");
    let status = Command::new("cc")
        .arg(dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .expect("a C compiler on PATH");
    assert!(status.success());
    let run = Command::new(&bin).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}
