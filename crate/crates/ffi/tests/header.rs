//! Compiles and runs a C program against the generated header and the static library.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "surfchar.h"

int main(void) {
    SurfcharSurface *s = NULL;
    if (surfchar_surface_new(2, &s) != SURFCHAR_STATUS_OK) return 10;
    uint64_t n = 0;
    if (surfchar_intersection_number(s, "a1", "b1", &n) != SURFCHAR_STATUS_OK || n != 1) return 11;
    char *out = NULL;
    if (surfchar_expand_trace(s, "a1a1", &out) != SURFCHAR_STATUS_OK) return 12;
    if (strcmp(out, "1\ta1^2\n-2\t-\n") != 0) return 13;
    surfchar_string_free(out);
    if (surfchar_is_simple(s, "q", &(bool){false}) != SURFCHAR_STATUS_INVALID_INPUT) return 14;
    if (surfchar_last_error() == NULL) return 15;
    surfchar_surface_free(s);
    puts("ok");
    return 0;
}
"#;

#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // target/<profile>/deps/header-<hash> -> target/<profile>
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libsurfchar_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: static library or C compiler not available");
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    let exe = dir.path().join("main");
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new("cc")
        .arg("-std=c11")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}
