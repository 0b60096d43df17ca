use std::ffi::{c_char, CStr, CString};
use std::ptr;

use surfchar_ffi::*;

struct Handle(*mut SurfcharSurface);

impl Handle {
    fn new(genus: usize) -> Handle {
        let mut p = ptr::null_mut();
        assert_eq!(unsafe { surfchar_surface_new(genus, &mut p) }, SurfcharStatus::Ok);
        Handle(p)
    }
}

impl Drop for Handle {
    fn drop(&mut self) {
        unsafe { surfchar_surface_free(self.0) }
    }
}

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn take(p: *mut c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { surfchar_string_free(p) };
    s
}

fn last_error() -> String {
    let p = surfchar_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn surface_lifecycle() {
    let h = Handle::new(3);
    assert_eq!(unsafe { surfchar_surface_genus(h.0) }, 3);
    assert_eq!(unsafe { surfchar_surface_genus(ptr::null()) }, 0);
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { surfchar_surface_new(1, &mut p) }, SurfcharStatus::InvalidInput);
    assert!(p.is_null());
    assert!(last_error().contains("genus 1"));
    unsafe { surfchar_surface_free(ptr::null_mut()) };
}

#[test]
fn numbers() {
    let h = Handle::new(2);
    let mut n = 0u64;
    assert_eq!(unsafe { surfchar_intersection_number(h.0, c("a1").as_ptr(), c("b1").as_ptr(), &mut n) }, SurfcharStatus::Ok);
    assert_eq!(n, 1);
    assert!(surfchar_last_error().is_null());
    assert_eq!(unsafe { surfchar_self_intersection(h.0, c("a1a1a1").as_ptr(), &mut n) }, SurfcharStatus::Ok);
    assert_eq!(n, 2);
    let mut simple = false;
    assert_eq!(unsafe { surfchar_is_simple(h.0, c("a1b1A1B1").as_ptr(), &mut simple) }, SurfcharStatus::Ok);
    assert!(simple);
}

#[test]
fn strings() {
    let h = Handle::new(2);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { surfchar_expand_trace(h.0, c("a1a1").as_ptr(), &mut out) }, SurfcharStatus::Ok);
    let sq = take(out);
    assert_eq!(sq, "1\ta1^2\n-2\t-\n");
    assert_eq!(unsafe { surfchar_multiply(h.0, c("1\ta1^1\n").as_ptr(), c("1\ta1^1\n").as_ptr(), &mut out) }, SurfcharStatus::Ok);
    assert_eq!(take(out), "1\ta1^2\n");
    assert_eq!(unsafe { surfchar_classify(h.0, c("1/2 a1").as_ptr(), &mut out) }, SurfcharStatus::Ok);
    assert_eq!(take(out), "NotDiscrete witness=b1 value=1/2");
    assert_eq!(unsafe { surfchar_valuate(h.0, c("1 a1; 1/3 a2").as_ptr(), c("b1b2").as_ptr(), &mut out) }, SurfcharStatus::Ok);
    assert_eq!(take(out), "4/3");
    assert_eq!(unsafe { surfchar_twist_word(h.0, 0, false, c("b1").as_ptr(), &mut out) }, SurfcharStatus::Ok);
    assert_eq!(take(out), "b1a1");
    assert_eq!(unsafe { surfchar_twist_word(h.0, 0, true, c("b1").as_ptr(), &mut out) }, SurfcharStatus::Ok);
    assert_eq!(take(out), "b1A1");
    assert_eq!(unsafe { surfchar_sign_action(h.0, c("1000").as_ptr(), c(&sq).as_ptr(), &mut out) }, SurfcharStatus::Ok);
    assert_eq!(take(out), sq);
    assert_eq!(unsafe { surfchar_sign_action(h.0, c("1000").as_ptr(), c("1\ta1^1\n").as_ptr(), &mut out) }, SurfcharStatus::Ok);
    assert_eq!(take(out), "-1\ta1^1\n");
}

#[test]
fn failures() {
    let h = Handle::new(2);
    let mut n = 0u64;
    assert_eq!(unsafe { surfchar_intersection_number(h.0, c("a1").as_ptr(), c("z").as_ptr(), &mut n) }, SurfcharStatus::InvalidInput);
    assert!(last_error().contains("bad letter"));
    assert_eq!(unsafe { surfchar_intersection_number(h.0, ptr::null(), c("a1").as_ptr(), &mut n) }, SurfcharStatus::NullPointer);
    assert_eq!(unsafe { surfchar_intersection_number(ptr::null(), c("a1").as_ptr(), c("a1").as_ptr(), &mut n) }, SurfcharStatus::NullPointer);
    assert_eq!(unsafe { surfchar_intersection_number(h.0, c("a1").as_ptr(), c("a1").as_ptr(), ptr::null_mut()) }, SurfcharStatus::NullPointer);
    let bad = [0xffu8, 0];
    assert_eq!(unsafe { surfchar_is_simple(h.0, bad.as_ptr().cast(), &mut false) }, SurfcharStatus::InvalidUtf8);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { surfchar_twist_word(h.0, 5, false, c("a1").as_ptr(), &mut out) }, SurfcharStatus::InvalidInput);
    assert!(out.is_null());
    assert_eq!(unsafe { surfchar_classify(h.0, c("1 a1; 1 b1").as_ptr(), &mut out) }, SurfcharStatus::InvalidInput);
}
