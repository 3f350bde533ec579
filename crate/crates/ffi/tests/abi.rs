use sptrace_ffi::*;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = sptrace_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn series_round_trip() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(sptrace_series_load(c("n3_k1_star.series").as_ptr(), &mut s), SptraceStatus::Ok);
        assert_eq!(sptrace_series_nvars(s), 1);
        let mut holds = -1;
        assert_eq!(sptrace_series_check_functional_equation(s, &mut holds), SptraceStatus::Ok);
        assert_eq!(holds, 1);
        let mut t = ptr::null_mut();
        assert_eq!(sptrace_series_expand(s, 10, &mut t), SptraceStatus::Ok);
        let mut v = 0i64;
        assert_eq!(sptrace_table_get(t, [10u32].as_ptr(), 1, &mut v), SptraceStatus::Ok);
        assert_eq!(v, 245);
        assert_eq!(sptrace_table_get(t, [1u32, 2].as_ptr(), 2, &mut v), SptraceStatus::Incompatible);
        sptrace_table_free(t);
        sptrace_series_free(s);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(sptrace_series_parse(c("name: x\nmeta: 2 1 1\nvariables: t:p+k\nnumerator:\n1 q\n").as_ptr(), &mut s), SptraceStatus::Parse);
        assert!(s.is_null());
        assert!(last_error().contains("line"), "{}", last_error());
        assert_eq!(sptrace_series_load(c("nope.series").as_ptr(), &mut s), SptraceStatus::Io);
        assert_eq!(sptrace_series_load(ptr::null(), &mut s), SptraceStatus::NullPointer);
        assert_eq!(sptrace_series_nvars(ptr::null()), 0);
        sptrace_series_free(ptr::null_mut());
        sptrace_string_free(ptr::null_mut());
    }
}

#[test]
fn canonical_words() {
    unsafe {
        let mut out: *mut c_char = ptr::null_mut();
        let mut sign = 9i8;
        assert_eq!(sptrace_canonicalize(c("x:p y:k").as_ptr(), c("y*").as_ptr(), &mut out, &mut sign), SptraceStatus::Ok);
        assert_eq!(CStr::from_ptr(out).to_str().unwrap(), "y");
        assert_eq!(sign, 0);
        sptrace_string_free(out);
        assert_eq!(sptrace_canonicalize(c("x").as_ptr(), c("q").as_ptr(), &mut out, &mut sign), SptraceStatus::Parse);
    }
}

#[test]
fn msg_report_as_json() {
    unsafe {
        let (mut w, mut s) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(sptrace_words_load(c("w1.words").as_ptr(), &mut w), SptraceStatus::Ok);
        assert_eq!(sptrace_words_len(w), 28);
        assert_eq!(sptrace_series_load(c("n3_k1_star.series").as_ptr(), &mut s), SptraceStatus::Ok);
        let mut js: *mut c_char = ptr::null_mut();
        assert_eq!(sptrace_verify_msg(w, s, 5, -1, &mut js), SptraceStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(CStr::from_ptr(js).to_str().unwrap()).unwrap();
        assert_eq!(v["ok"], true);
        assert_eq!(v["rows"][5]["expected"], 17);
        sptrace_string_free(js);

        let mut few = ptr::null_mut();
        assert_eq!(sptrace_words_parse(c("alphabet: z\nz\n").as_ptr(), &mut few), SptraceStatus::Ok);
        assert_eq!(sptrace_verify_msg(few, s, 2, -1, &mut js), SptraceStatus::CheckFailed);
        sptrace_string_free(js);
        sptrace_words_free(few);
        sptrace_words_free(w);
        sptrace_series_free(s);
    }
}

#[test]
fn cli_entry_point() {
    unsafe {
        let args = [c("expand"), c("--fixture"), c("n2_k1.series"), c("--max-degree"), c("0")];
        let ptrs: Vec<*const c_char> = args.iter().map(|a| a.as_ptr()).collect();
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(sptrace_run_cli(ptrs.len(), ptrs.as_ptr(), &mut out), 0);
        assert!(CStr::from_ptr(out).to_str().unwrap().ends_with("0, 1\n"));
        sptrace_string_free(out);
        let bad = [c("expand")];
        let ptrs: Vec<*const c_char> = bad.iter().map(|a| a.as_ptr()).collect();
        assert_eq!(sptrace_run_cli(1, ptrs.as_ptr(), &mut out), 2);
        sptrace_string_free(out);
    }
}

#[test]
fn header_is_valid_c() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/sptrace.h")).unwrap();
    for f in ["sptrace_series_load", "sptrace_table_get", "sptrace_verify_msg", "sptrace_run_cli", "SPTRACE_STATUS_CHECK_FAILED"] {
        assert!(header.contains(f), "{f} missing from the header");
    }
    let Ok(status) = std::process::Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c", "-"])
        .arg("-I")
        .arg(dir.join("include"))
        .stdin(std::process::Stdio::piped())
        .spawn()
        .and_then(|mut ch| {
            use std::io::Write;
            ch.stdin.take().unwrap().write_all(b"#include \"sptrace.h\"\nint main(void) { SptraceSeries *s = 0; return sptrace_series_load(\"x\", &s) == SPTRACE_STATUS_OK; }\n")?;
            ch.wait()
        })
    else {
        eprintln!("no C compiler; syntax check skipped");
        return;
    };
    assert!(status.success());
}
