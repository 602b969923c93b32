use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use mxk_ffi::*;

fn last_error() -> String {
    let p = mxk_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn fano_through_the_abi() {
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(mxk_projective_geometry(3, 2, &mut m), MxkStatus::Ok);
        let (mut size, mut rank, mut eps) = (0, 0, 0);
        assert_eq!(mxk_matroid_size(m, &mut size), MxkStatus::Ok);
        assert_eq!(mxk_matroid_rank(m, &mut rank), MxkStatus::Ok);
        assert_eq!(mxk_matroid_epsilon(m, &mut eps), MxkStatus::Ok);
        assert_eq!((size, rank, eps), (7, 3, 7));

        let line = [0usize, 1, 2];
        let mut r = 0;
        assert_eq!(mxk_matroid_rank_of(m, line.as_ptr(), 3, &mut r), MxkStatus::Ok);
        assert_eq!(r, 2);

        let mut found = true;
        let mut w = ptr::null_mut();
        assert_eq!(mxk_has_line_minor(m, 4, &mut found, &mut w), MxkStatus::Ok);
        assert!(!found && w.is_null());
        assert_eq!(mxk_has_clique_minor(m, 4, &mut found, &mut w), MxkStatus::Ok);
        assert!(found);
        let text = CStr::from_ptr(w).to_str().unwrap().to_string();
        assert!(text.starts_with("contract="));
        mxk_string_free(w);

        let mut n = 0u64;
        assert_eq!(mxk_count_towers(m, 2, &mut n), MxkStatus::Ok);
        assert_eq!(n, 42);

        let mut minor = ptr::null_mut();
        let c = [0usize];
        assert_eq!(mxk_matroid_minor(m, c.as_ptr(), 1, ptr::null(), 0, &mut minor), MxkStatus::Ok);
        assert_eq!(mxk_matroid_rank(minor, &mut rank), MxkStatus::Ok);
        assert_eq!(rank, 2);
        mxk_matroid_free(minor);
        mxk_matroid_free(m);
    }
}

#[test]
fn errors_set_codes_and_messages() {
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(mxk_projective_geometry(3, 6, &mut m), MxkStatus::InvalidArgument);
        assert!(last_error().contains("prime power"));
        assert!(m.is_null());

        let bad = CString::new("graph vertices=2\n0 x\n").unwrap();
        assert_eq!(mxk_matroid_parse(bad.as_ptr(), &mut m), MxkStatus::Parse);
        assert_eq!(mxk_matroid_size(ptr::null(), ptr::null_mut()), MxkStatus::NullPointer);

        let good = CString::new("matroid graphic vertices=3\n0 1\n1 2\n0 2\n").unwrap();
        assert_eq!(mxk_matroid_parse(good.as_ptr(), &mut m), MxkStatus::Ok);
        assert!(mxk_last_error().is_null());
        let ids = [9usize];
        let mut r = 0;
        assert_eq!(mxk_matroid_rank_of(m, ids.as_ptr(), 1, &mut r), MxkStatus::UnknownElement);
        mxk_matroid_free(m);

        assert_eq!(mxk_dowling_cyclic(3, 2, &mut m), MxkStatus::Ok);
        let mut size = 0;
        mxk_matroid_size(m, &mut size);
        assert_eq!(size, 9);
        mxk_matroid_free(m);

        assert_eq!(mxk_complete_graphic(40, &mut m), MxkStatus::Ok);
        let mut n = 0u64;
        assert_eq!(mxk_count_towers(m, 9, &mut n), MxkStatus::CapExceeded);
        mxk_matroid_free(m);
        mxk_matroid_free(ptr::null_mut());
    }
    let v = unsafe { CStr::from_ptr(mxk_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

/// Compile a C program against the generated header and the static library.
#[test]
fn c_program_links_and_runs() {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let target = std::env::var_os("CARGO_TARGET_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| root.join("../../target"));
    let profile = if cfg!(debug_assertions) { "debug" } else { "release" };
    let lib = target.join(profile).join("libmxk_ffi.a");
    assert!(lib.exists(), "missing {}", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("smoke.c");
    std::fs::write(
        &src,
        r#"
#include <stdio.h>
#include "mxk.h"
int main(void) {
    MxkMatroid *m = NULL;
    size_t size = 0, rank = 0;
    if (mxk_crown(5, 2, 2, &m) != MXK_STATUS_OK) return 1;
    mxk_matroid_size(m, &size);
    mxk_matroid_rank(m, &rank);
    bool found = true;
    if (mxk_has_clique_minor(m, 5, &found, NULL) != MXK_STATUS_OK) return 2;
    mxk_matroid_free(m);
    if (mxk_projective_geometry(3, 6, &m) != MXK_STATUS_INVALID_ARGUMENT) return 3;
    printf("%zu %zu %d %s\n", size, rank, (int)found, mxk_last_error() ? "err" : "none");
    return 0;
}
"#,
    )
    .unwrap();
    let exe = dir.path().join("smoke");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(root.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("a C compiler");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{:?}", out);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "15 5 0 err\n");
}
