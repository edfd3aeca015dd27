use std::ffi::{c_char, CStr, CString};
use std::ptr;

use coulomb_hankel_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(p: *mut c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    ch_string_free(p);
    s
}

unsafe fn last_error() -> String {
    let p = ch_last_error();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_str().unwrap().to_owned()
}

#[test]
fn zeta_table_handle() {
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(ch_zeta_table_new(c("0").as_ptr(), c("0").as_ptr(), 6, &mut t), ChStatus::Ok);
        assert!(ch_last_error().is_null());
        assert_eq!(ch_zeta_table_kmax(t), 6);
        let mut out = ptr::null_mut();
        let expect = [(2, "1/3"), (3, "0"), (4, "1/45"), (6, "2/945")];
        for (k, v) in expect {
            assert_eq!(ch_zeta_table_get(t, k, &mut out), ChStatus::Ok);
            assert_eq!(take(out), v);
        }
        assert_eq!(ch_zeta_table_get(t, 7, &mut out), ChStatus::OutOfRange);
        assert_eq!(ch_zeta_table_get(t, 1, &mut out), ChStatus::OutOfRange);
        ch_zeta_table_free(t);
        ch_zeta_table_free(ptr::null_mut());
    }
}

#[test]
fn hankel_det_and_errors() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(ch_hankel_det(c("0").as_ptr(), c("0").as_ptr(), 2, &mut out), ChStatus::Ok);
        assert_eq!(take(out), "1/135");

        assert_eq!(ch_hankel_det(c("-3/2").as_ptr(), c("0").as_ptr(), 2, &mut out), ChStatus::ExcludedParameter);
        assert!(!last_error().is_empty());
        assert_eq!(ch_hankel_det(c("0.5").as_ptr(), c("0").as_ptr(), 2, &mut out), ChStatus::InvalidArgument);
        assert_eq!(ch_hankel_det(ptr::null(), c("0").as_ptr(), 2, &mut out), ChStatus::NullPointer);
        assert_eq!(ch_hankel_det(c("0").as_ptr(), c("0").as_ptr(), 2, ptr::null_mut()), ChStatus::NullPointer);
    }
}

#[test]
fn rayleigh_methods_agree() {
    unsafe {
        let nu = c("5/2");
        let mut values = Vec::new();
        for m in [ChRayleighMethod::Direct, ChRayleighMethod::Closed, ChRayleighMethod::DesnanotJacobi] {
            let mut out = ptr::null_mut();
            assert_eq!(ch_rayleigh_det(nu.as_ptr(), 1, 3, m, &mut out), ChStatus::Ok, "{m:?}");
            values.push(take(out));
        }
        assert!(values.windows(2).all(|w| w[0] == w[1]), "{values:?}");
    }
}

#[test]
fn classify_pairs() {
    unsafe {
        let mut m = usize::MAX;
        assert_eq!(ch_classify(c("-7/4").as_ptr(), c("3/2").as_ptr(), 0, &mut m), ChStatus::Ok);
        assert_eq!(m, 1);
        assert_eq!(ch_classify(c("-23/4").as_ptr(), c("0").as_ptr(), 0, &mut m), ChStatus::Ok);
        assert_eq!(m, 5);
        assert_eq!(ch_classify(c("-1").as_ptr(), c("1").as_ptr(), 0, &mut m), ChStatus::ExcludedParameter);
        assert!(last_error().contains("excluded"));
    }
}

#[test]
fn phi_values() {
    unsafe {
        let (mut re, mut im) = (0.0, 0.0);
        assert_eq!(ch_phi(0.0, 0.0, 1.0, 0.0, 1e-14, &mut re, &mut im), ChStatus::Ok);
        assert!((re - 1f64.sin()).abs() < 1e-14 && im == 0.0);
        assert_eq!(ch_phi(-1.0, 1.0, 1.0, 0.0, 1e-14, &mut re, &mut im), ChStatus::ExcludedParameter);
        assert_eq!(ch_phi(0.0, 0.0, 1.0, 0.0, 1e-14, ptr::null_mut(), &mut im), ChStatus::NullPointer);
    }
}

#[test]
fn zero_report_handle() {
    unsafe {
        let mut r = ptr::null_mut();
        assert_eq!(ch_find_zeros(-1.75, 1.5, ptr::null(), 0.0, &mut r), ChStatus::Ok);
        let mut counts = ChZeroCounts::default();
        assert_eq!(ch_zero_report_counts(r, &mut counts), ChStatus::Ok);
        assert_eq!(counts.complex_pairs, 1);
        assert_eq!(counts.unresolved, 0);
        let n = ch_zero_report_len(r);
        assert_eq!(n, counts.real + 2 * counts.complex_pairs);
        let mut zeros = Vec::new();
        for i in 0..n {
            let mut z = ChZero { re: 0.0, im: 0.0, multiplicity: 0, kind: ChZeroKind::Real, residual: 0.0 };
            assert_eq!(ch_zero_report_get(r, i, &mut z), ChStatus::Ok);
            zeros.push(z);
        }
        let upper = zeros.iter().find(|z| z.im > 0.0).unwrap();
        assert_eq!(upper.kind, ChZeroKind::Complex);
        assert!((upper.re - 0.150059).abs() < 1e-5 && (upper.im - 0.252047).abs() < 1e-5);
        let mut z = zeros[0];
        assert_eq!(ch_zero_report_get(r, n, &mut z), ChStatus::OutOfRange);
        ch_zero_report_free(r);

        let bad = ChRect { re_min: 1.0, re_max: 0.0, im_min: 0.1, im_max: 1.0 };
        assert_eq!(ch_find_zeros(0.0, 0.0, &bad, 0.0, &mut r), ChStatus::InvalidArgument);
    }
}

#[test]
fn errors_are_per_thread() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(ch_hankel_det(c("x").as_ptr(), c("0").as_ptr(), 2, &mut out), ChStatus::InvalidArgument);
        std::thread::spawn(|| assert!(ch_last_error().is_null())).join().unwrap();
        assert!(!ch_last_error().is_null());
    }
}

#[test]
fn header_declares_every_entry_point() {
    let header = include_str!("../include/coulomb_hankel.h");
    let src = include_str!("../src/lib.rs");
    let exported: Vec<_> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exported.len() >= 15);
    for name in exported {
        let declared = [" ", "*"].iter().any(|pre| header.contains(&format!("{pre}{name}(")));
        assert!(declared, "{name} missing from header");
    }
    let version = unsafe { CStr::from_ptr(ch_version()) };
    assert_eq!(version.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
