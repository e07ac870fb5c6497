use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use relcat_ffi::*;

fn last_error() -> String {
    let mut buf = vec![0 as libc::c_char; 512];
    let mut needed = 0;
    unsafe { relcat_last_error(buf.as_mut_ptr(), buf.len(), &mut needed) };
    unsafe { CStr::from_ptr(buf.as_ptr()) }.to_string_lossy().into_owned()
}

fn eval(m: *const RelcatModel, term: &str) -> Result<String, (RelcatStatus, String)> {
    let t = CString::new(term).unwrap();
    let mut buf = vec![0 as libc::c_char; 256];
    let mut needed = 0;
    let s = unsafe { relcat_eval(m, t.as_ptr(), buf.as_mut_ptr(), buf.len(), &mut needed) };
    if s != RelcatStatus::Ok {
        return Err((s, last_error()));
    }
    Ok(unsafe { CStr::from_ptr(buf.as_ptr()) }.to_string_lossy().into_owned())
}

#[test]
fn eval_and_example_on_embedded_model() {
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { relcat_model_embedded(&mut m) }, RelcatStatus::Ok);
    assert_eq!(eval(m, "ubd(E, X)").unwrap(), "(0 1)");
    assert_eq!(eval(m, "X ; conv(C)").unwrap(), "(u 0)");
    let (status, msg) = eval(m, "X ; X").unwrap_err();
    assert_eq!(status, RelcatStatus::InvalidTerm);
    assert!(msg.contains("sort"), "{msg}");
    let mut ok = 0u8;
    assert_eq!(unsafe { relcat_golden_example(m, &mut ok) }, RelcatStatus::Ok);
    assert_eq!(ok, 1);
    unsafe { relcat_model_free(m) };
}

#[test]
fn buffer_too_small_reports_size() {
    let mut m = ptr::null_mut();
    unsafe { relcat_model_embedded(&mut m) };
    let t = CString::new("C").unwrap();
    let mut buf = [0 as libc::c_char; 4];
    let mut needed = 0;
    let s = unsafe { relcat_eval(m, t.as_ptr(), buf.as_mut_ptr(), buf.len(), &mut needed) };
    assert_eq!(s, RelcatStatus::BufferTooSmall);
    assert_eq!(needed, "(0 1) (0 0)".len() + 1);
    unsafe { relcat_model_free(m) };
}

#[test]
fn model_json_and_law_checks() {
    let json = CString::new(relcat::model::BOOL2_MODEL_JSON).unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { relcat_model_from_json(json.as_ptr(), &mut m) }, RelcatStatus::Ok);
    let law = CString::new("schroeder").unwrap();
    let mut sum = RelcatCheckSummary::default();
    assert_eq!(unsafe { relcat_check_law(m, law.as_ptr(), 0, 0, &mut sum) }, RelcatStatus::Ok);
    assert_eq!((sum.assignments, sum.violations, sum.vacuous), (4096, 0, 0));
    assert_eq!(unsafe { relcat_check_law(m, law.as_ptr(), 100, 7, &mut sum) }, RelcatStatus::Ok);
    assert_eq!(sum.assignments, 100);
    let bogus = CString::new("noSuchLaw").unwrap();
    assert_eq!(unsafe { relcat_check_law(m, bogus.as_ptr(), 0, 0, &mut sum) }, RelcatStatus::UnknownLaw);
    unsafe { relcat_model_free(m) };

    let bad = CString::new("{\"id\": 1}").unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { relcat_model_from_json(bad.as_ptr(), &mut m) }, RelcatStatus::InvalidModel);
    assert!(m.is_null());
    assert!(!last_error().is_empty());
}

#[test]
fn null_arguments_are_rejected() {
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { relcat_model_from_json(ptr::null(), &mut m) }, RelcatStatus::NullPointer);
    let mut sum = RelcatCheckSummary::default();
    let law = CString::new("schroeder").unwrap();
    assert_eq!(unsafe { relcat_check_law(ptr::null(), law.as_ptr(), 0, 0, &mut sum) }, RelcatStatus::NullPointer);
    unsafe { relcat_model_free(ptr::null_mut()) };
    let v = unsafe { CStr::from_ptr(relcat_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "relcat.h"

int main(void) {
    RelcatModel *m = NULL;
    char buf[64];
    size_t needed = 0;
    uint8_t ok = 0;
    if (relcat_model_embedded(&m) != RELCAT_STATUS_OK) return 1;
    if (relcat_eval(m, "lub(E, X) ; conv(C)", buf, sizeof buf, &needed) != RELCAT_STATUS_OK) return 2;
    if (strcmp(buf, "(1 0)") != 0) return 3;
    if (relcat_golden_example(m, &ok) != RELCAT_STATUS_OK || ok != 1) return 4;
    if (relcat_eval(m, "nonsense(", buf, sizeof buf, &needed) != RELCAT_STATUS_INVALID_TERM) return 5;
    relcat_model_free(m);
    printf("%s\n", relcat_version());
    return 0;
}
"#;

#[test]
fn c_program_links_against_static_library() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("librelcat_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let tmp = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("ffi-c");
    std::fs::create_dir_all(&tmp).unwrap();
    let src = tmp.join("main.c");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let bin = tmp.join("main");
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .expect("a C compiler");
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), env!("CARGO_PKG_VERSION"));
}
