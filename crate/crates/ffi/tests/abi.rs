use std::ffi::{c_char, CStr, CString};
use std::ptr;

use hzbounds_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(p: *mut c_char) -> Option<String> {
    if p.is_null() {
        return None;
    }
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    hz_string_free(p);
    Some(s)
}

fn last_error() -> String {
    let p = hz_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn root_system(f: &str, r: usize) -> *mut HzRootSystem {
    let mut rs = ptr::null_mut();
    assert_eq!(unsafe { hz_root_system_new(c(f).as_ptr(), r, &mut rs) }, HzStatus::Ok);
    rs
}

#[test]
fn bounds_round_trip() {
    let rs = root_system("F", 4);
    let (mut rank, mut dim, mut n) = (0, 0, 0);
    unsafe {
        assert_eq!(hz_root_system_info(rs, &mut rank, &mut dim, &mut n), HzStatus::Ok);
        assert_eq!((rank, dim, n), (4, 4, 48));
        let mut b = ptr::null_mut();
        assert_eq!(hz_bounds_compute(rs, c("10,3,2,1").as_ptr(), 0, &mut b), HzStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(hz_bounds_lower(b, &mut s), HzStatus::Ok);
        assert_eq!(take(s).as_deref(), Some("20/1"));
        assert_eq!(hz_bounds_upper(b, &mut s), HzStatus::Ok);
        assert_eq!(take(s).as_deref(), Some("24/1"));
        assert_eq!(hz_bounds_exact(b, &mut s), HzStatus::Ok);
        assert_eq!(take(s), None);
        let (mut w, mut ok) = (0, false);
        assert_eq!(hz_bounds_info(b, &mut w, &mut ok), HzStatus::Ok);
        assert!(ok && (1..=4).contains(&w));
        assert_eq!(hz_bounds_to_json(b, &mut s), HzStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s).unwrap()).unwrap();
        assert_eq!(v["type"], "F");
        assert_eq!(v["witness_simple"], w);
        hz_bounds_free(b);
        hz_root_system_free(rs);
    }
    assert!(hz_last_error().is_null());
}

#[test]
fn type_a_exact() {
    let rs = root_system("a", 2);
    unsafe {
        let mut b = ptr::null_mut();
        assert_eq!(hz_bounds_compute(rs, c("1/2,0,-1/3").as_ptr(), 0, &mut b), HzStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(hz_bounds_exact(b, &mut s), HzStatus::Ok);
        assert_eq!(take(s).as_deref(), Some("5/6"));
        hz_bounds_free(b);
        hz_root_system_free(rs);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut rs = ptr::null_mut();
        assert_eq!(hz_root_system_new(c("E").as_ptr(), 5, &mut rs), HzStatus::InvalidType);
        assert!(rs.is_null());
        assert!(last_error().contains("E5"));
        assert_eq!(hz_root_system_new(c("Q").as_ptr(), 2, &mut rs), HzStatus::Parse);
        assert_eq!(hz_root_system_new(ptr::null(), 2, &mut rs), HzStatus::NullPointer);
        assert_eq!(hz_root_system_new(c("A").as_ptr(), 2, ptr::null_mut()), HzStatus::NullPointer);

        let rs = root_system("F", 4);
        let mut b = ptr::null_mut();
        assert_eq!(hz_bounds_compute(rs, c("4,3,2,1").as_ptr(), 0, &mut b), HzStatus::NotDominant);
        assert!(b.is_null());
        assert!(last_error().contains("alpha_4"));
        assert_eq!(hz_bounds_compute(rs, c("1,2").as_ptr(), 0, &mut b), HzStatus::DimensionMismatch);
        assert_eq!(hz_bounds_compute(rs, c("1,x,0,0").as_ptr(), 0, &mut b), HzStatus::Parse);
        let bad = [0xffu8, 0];
        assert_eq!(hz_bounds_compute(rs, bad.as_ptr().cast(), 0, &mut b), HzStatus::InvalidUtf8);
        hz_root_system_free(rs);

        let mut s = ptr::null_mut();
        assert_eq!(hz_bounds_lower(ptr::null(), &mut s), HzStatus::NullPointer);
        assert_eq!(hz_cayley_diameter(c("8,7,6,5,4,3,2,1").as_ptr(), 0, &mut s), HzStatus::TooLarge);
        assert_eq!(hz_unitary_capacity(c("1,2").as_ptr(), &mut s), HzStatus::NotDominant);
        hz_string_free(ptr::null_mut());
        hz_root_system_free(ptr::null_mut());
        hz_bounds_free(ptr::null_mut());
    }
}

#[test]
fn unitary_and_cayley_agree() {
    for l in ["3,2,1,0", "7,7,0,0", "5/2,1,-1,-3/2,-4"] {
        let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
        unsafe {
            assert_eq!(hz_unitary_capacity(c(l).as_ptr(), &mut a), HzStatus::Ok);
            assert_eq!(hz_cayley_diameter(c(l).as_ptr(), 0, &mut b), HzStatus::Ok);
            assert_eq!(take(a), take(b), "{l}");
        }
    }
}

#[test]
fn graphs_as_json() {
    let rs = root_system("A", 2);
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(hz_graph_json(rs, HzGraphKind::Quantum, ptr::null(), 0, &mut s), HzStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s).unwrap()).unwrap();
        assert_eq!(v["edges"].as_array().unwrap().len(), 15);
        assert_eq!(hz_graph_json(rs, HzGraphKind::Bruhat, ptr::null(), 0, &mut s), HzStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s).unwrap()).unwrap();
        assert_eq!(v["edges"].as_array().unwrap().len(), 9);
        hz_root_system_free(rs);

        let rs = root_system("A", 3);
        assert_eq!(hz_graph_json(rs, HzGraphKind::Bruhat, c("5,5,0,0").as_ptr(), 0, &mut s), HzStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s).unwrap()).unwrap();
        assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
        assert!(v["edges"].as_array().unwrap().iter().all(|e| e["area"] == "5/1"));
        assert_eq!(hz_graph_json(rs, HzGraphKind::Bruhat, ptr::null(), 10, &mut s), HzStatus::TooLarge);
        assert!(last_error().contains("cap 10"));
        hz_root_system_free(rs);

        assert_eq!(hz_cayley_graph_json(c("2,1,0").as_ptr(), 0, &mut s), HzStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s).unwrap()).unwrap();
        assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
    }
}

#[test]
fn header_declares_every_export() {
    let h = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/hzbounds.h")).unwrap();
    let src = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    let names: Vec<&str> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|l| l.split('(').next().unwrap())
        .collect();
    assert!(names.len() >= 15);
    for n in names {
        assert!(h.contains(&format!("{n}(")), "{n} missing from header");
    }
    assert!(h.contains("HZ_STATUS_NOT_DOMINANT = 5"));
    assert!(h.contains("typedef struct HzBounds HzBounds;"));
    let v = unsafe { CStr::from_ptr(hz_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
