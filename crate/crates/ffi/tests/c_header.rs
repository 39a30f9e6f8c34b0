//! Compiles a small C program against the generated header and links it to the static library.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "frobreg.h"

int main(void) {
    FrobregRing *ring = NULL;
    if (frobreg_ring_new(2, "x y", "x*y", &ring) != FROBREG_STATUS_OK) return 1;
    uint64_t seq[3];
    if (frobreg_ehk_sequence(ring, NULL, 3, seq, 3) != FROBREG_STATUS_OK) return 2;
    bool regular = true;
    if (frobreg_kunz_test(ring, &regular) != FROBREG_STATUS_OK || regular) return 3;
    frobreg_ring_free(ring);
    if (frobreg_ring_new(2, "x y", "x*y - x", &ring) != FROBREG_STATUS_INPUT_ERROR) return 4;
    if (strstr(frobreg_last_error(), "x*y + x") == NULL) return 5;
    printf("%llu %llu %llu\n", (unsigned long long)seq[0], (unsigned long long)seq[1], (unsigned long long)seq[2]);
    return 0;
}
"#;

fn target_dir() -> PathBuf {
    // .../target/<profile>/deps/<test binary>
    std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_static_library() {
    let lib = target_dir().join("libfrobreg_ffi.a");
    assert!(lib.exists(), "static library not found at {}", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("smoke.c");
    let exe = dir.path().join("smoke");
    std::fs::write(&src, PROGRAM).unwrap();
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("run cc");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "3 7 15");
}
