use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use extcode_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(extcode_last_error()) }
        .to_string_lossy()
        .into_owned()
}

fn field(p: u32, m: u32) -> *mut ExtcodeField {
    let mut f = ptr::null_mut();
    assert_eq!(
        unsafe { extcode_field_new(p, m, &mut f) },
        ExtcodeStatus::Ok
    );
    f
}

fn code_from_json(json: &str, f: *const ExtcodeField) -> Result<*mut ExtcodeCode, ExtcodeStatus> {
    let text = CString::new(json).unwrap();
    let mut c = ptr::null_mut();
    match unsafe { extcode_code_from_json(text.as_ptr(), f, &mut c) } {
        ExtcodeStatus::Ok => Ok(c),
        s => Err(s),
    }
}

#[test]
fn code_round_trip_through_json() {
    unsafe {
        let mut bad = ptr::null_mut();
        assert_eq!(
            extcode_field_new(4, 1, &mut bad),
            ExtcodeStatus::InvalidInput
        );
        assert!(bad.is_null());
        assert!(!last_error().is_empty());
        let f = field(2, 2);
        assert_eq!(extcode_field_order(f), 4);
        let c = code_from_json(r#"{"prs": {"k": 2}}"#, f).unwrap();
        assert_eq!((extcode_code_length(c), extcode_code_dimension(c)), (5, 2));
        let mut text = ptr::null_mut();
        assert_eq!(extcode_code_to_json(c, &mut text), ExtcodeStatus::Ok);
        let json = CStr::from_ptr(text).to_str().unwrap().to_owned();
        extcode_string_free(text);
        let back = code_from_json(&json, ptr::null()).unwrap();
        assert_eq!(extcode_code_dimension(back), 2);
        let mut dual = ptr::null_mut();
        assert_eq!(extcode_code_dual(back, &mut dual), ExtcodeStatus::Ok);
        assert_eq!(extcode_code_dimension(dual), 3);
        let mut d = 0usize;
        assert_eq!(
            extcode_code_min_distance(dual, 1 << 20, &mut d),
            ExtcodeStatus::Ok
        );
        assert_eq!(d, 3);
        for h in [c, back, dual] {
            extcode_code_free(h);
        }
        extcode_field_free(f);
    }
}

#[test]
fn covering_and_deep_holes() {
    unsafe {
        let f = field(5, 1);
        let entries = [1u32, 1, 1, 1, 0, 1, 2, 3];
        let mut c = ptr::null_mut();
        assert_eq!(
            extcode_code_from_generator(f, 2, 4, entries.as_ptr(), &mut c),
            ExtcodeStatus::Ok
        );
        let mut r = ptr::null_mut();
        assert_eq!(
            extcode_covering_radius(c, 1 << 20, true, &mut r),
            ExtcodeStatus::Ok
        );
        assert_eq!(extcode_report_rho(r), 2);
        assert_eq!(extcode_report_num_deep_hole_cosets(r), 8);
        let u = [0u32, 1, 4, 4];
        let (mut a, mut b) = (false, false);
        assert_eq!(
            extcode_report_is_deep_hole(r, u.as_ptr(), 4, &mut a),
            ExtcodeStatus::Ok
        );
        assert_eq!(
            extcode_is_deep_hole(c, u.as_ptr(), 4, &mut b),
            ExtcodeStatus::Ok
        );
        assert!(a && b);
        assert_eq!(
            extcode_report_is_deep_hole(r, u.as_ptr(), 3, &mut a),
            ExtcodeStatus::InvalidInput
        );
        let mut text = ptr::null_mut();
        assert_eq!(
            extcode_report_to_json(r, true, &mut text),
            ExtcodeStatus::Ok
        );
        let v: serde_json::Value =
            serde_json::from_str(CStr::from_ptr(text).to_str().unwrap()).unwrap();
        assert_eq!(v["representatives"].as_array().unwrap().len(), 8);
        extcode_string_free(text);
        let mut ext = ptr::null_mut();
        assert_eq!(
            extcode_code_extend(c, u.as_ptr(), 4, &mut ext),
            ExtcodeStatus::Ok
        );
        let mut mds = false;
        assert_eq!(
            extcode_code_is_mds(ext, 1 << 20, &mut mds),
            ExtcodeStatus::Ok
        );
        assert!(mds);
        extcode_code_free(ext);
        extcode_report_free(r);
        extcode_code_free(c);
        extcode_field_free(f);
    }
}

#[test]
fn errors_map_to_status_codes() {
    unsafe {
        let f = field(5, 1);
        assert_eq!(code_from_json("{", f), Err(ExtcodeStatus::Parse));
        assert_eq!(
            code_from_json(r#"{"prs": {"k": 9}}"#, f),
            Err(ExtcodeStatus::InvalidInput)
        );
        assert_eq!(
            code_from_json(r#"{"prs": {"k": 2}}"#, ptr::null()),
            Err(ExtcodeStatus::InvalidInput)
        );
        let mut c = ptr::null_mut();
        assert_eq!(
            extcode_code_from_json(ptr::null(), f, &mut c),
            ExtcodeStatus::NullPointer
        );
        let bad = [0xffu8, 0];
        assert_eq!(
            extcode_code_from_json(bad.as_ptr().cast(), f, &mut c),
            ExtcodeStatus::InvalidUtf8
        );
        let c = code_from_json(r#"{"grs": {"a": [0, 1, 2, 3], "k": 2}}"#, f).unwrap();
        let mut d = 0usize;
        assert_eq!(
            extcode_code_min_distance(c, 1, &mut d),
            ExtcodeStatus::BudgetExceeded
        );
        assert!(!last_error().is_empty());
        assert_eq!(
            extcode_code_min_distance(c, 1 << 20, &mut d),
            ExtcodeStatus::Ok
        );
        assert!(last_error().is_empty());
        assert_eq!(
            extcode_code_min_distance(c, 1 << 20, ptr::null_mut()),
            ExtcodeStatus::NullPointer
        );
        assert_eq!(extcode_code_length(ptr::null()), 0);
        extcode_code_free(ptr::null_mut());
        extcode_code_free(c);
        extcode_field_free(f);
    }
}

/// Compiles the C smoke test against the generated header and the static
/// library, then runs it.
#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let profile_dir = std::env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf();
    let lib = profile_dir.join("libextcode_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let exe = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("extcode_smoke");
    let status = Command::new("cc")
        .arg("-std=c11")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("cc runs");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
