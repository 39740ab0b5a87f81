use std::ffi::CStr;
use std::path::Path;
use std::process::Command;
use std::ptr;

use pha_ffi::*;

fn last_error() -> String {
    let mut buf = [0 as std::ffi::c_char; 256];
    let n = unsafe { pha_last_error_message(buf.as_mut_ptr(), buf.len()) };
    assert!(n > 0);
    unsafe { CStr::from_ptr(buf.as_ptr()) }.to_string_lossy().into_owned()
}

#[test]
fn version_is_package_version() {
    let v = unsafe { CStr::from_ptr(pha_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn coherent_state_round_trip() {
    let mut cs = ptr::null_mut();
    assert_eq!(unsafe { pha_cs_new(1, 1.5, -0.5, 0, &mut cs) }, PhaStatus::Ok);
    assert!(!cs.is_null());

    let mut n = 0usize;
    assert_eq!(unsafe { pha_cs_len(cs, &mut n) }, PhaStatus::Ok);
    let (mut re, mut im) = (vec![0.0; n], vec![0.0; n]);
    assert_eq!(unsafe { pha_cs_coeffs(cs, re.as_mut_ptr(), im.as_mut_ptr(), n) }, PhaStatus::Ok);
    let norm: f64 = re.iter().zip(&im).map(|(a, b)| a * a + b * b).sum();
    assert!((norm - 1.0).abs() < 1e-14);
    // only levels 1, 4, 7, ... are populated on this ladder
    for (k, (a, b)) in re.iter().zip(&im).enumerate() {
        if k % 3 != 1 {
            assert_eq!((*a, *b), (0.0, 0.0));
        }
    }
    assert_eq!(
        unsafe { pha_cs_coeffs(cs, re.as_mut_ptr(), im.as_mut_ptr(), n - 1) },
        PhaStatus::BufferTooSmall
    );

    let mut r = f64::NAN;
    assert_eq!(unsafe { pha_cs_eigen_residual(cs, &mut r) }, PhaStatus::Ok);
    assert!(r < 1e-10);

    let mut s = PhaStatistics::default();
    assert_eq!(unsafe { pha_cs_statistics(cs, &mut s) }, PhaStatus::Ok);
    let mut closed = 0.0;
    let abs_alpha = (1.5f64 * 1.5 + 0.25).sqrt();
    assert_eq!(unsafe { pha_a_norm_squared(1, abs_alpha, &mut closed) }, PhaStatus::Ok);
    assert!((s.mean_number - closed).abs() < 1e-10);
    assert!((s.mean_h - s.mean_number - 0.5).abs() < 1e-12);
    unsafe { pha_cs_free(cs) };
}

#[test]
fn minima_through_the_abi() {
    for (j, want) in [(0u8, 0.5), (1, 1.5), (2, 2.5)] {
        let mut cs = ptr::null_mut();
        assert_eq!(unsafe { pha_cs_new(j, 0.0, 0.0, 0, &mut cs) }, PhaStatus::Ok);
        let mut s = PhaStatistics::default();
        assert_eq!(unsafe { pha_cs_statistics(cs, &mut s) }, PhaStatus::Ok);
        assert!((s.uncertainty_product - want).abs() < 1e-12);
        unsafe { pha_cs_free(cs) };
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    let mut cs = ptr::null_mut();
    assert_eq!(unsafe { pha_cs_new(3, 1.0, 0.0, 0, &mut cs) }, PhaStatus::InvalidArgument);
    assert!(cs.is_null());
    assert!(!last_error().is_empty());

    assert_eq!(unsafe { pha_cs_new(0, 4.0, 0.0, 5, &mut cs) }, PhaStatus::Truncation);
    assert!(cs.is_null());
    assert!(last_error().contains("37"), "message should name the minimal truncation");

    assert_eq!(unsafe { pha_cs_new(0, 1.0, 0.0, 0, ptr::null_mut()) }, PhaStatus::NullPointer);
    let mut n = 0usize;
    assert_eq!(unsafe { pha_cs_len(ptr::null(), &mut n) }, PhaStatus::NullPointer);
    unsafe { pha_cs_free(ptr::null_mut()) };

    let mut v = 0.0;
    assert_eq!(unsafe { pha_hermite_function(-1, 0.0, &mut v) }, PhaStatus::InvalidArgument);
    assert_eq!(unsafe { pha_density_gaussian(1, 0.0, 0.0, 0.0, 0.0, &mut v) }, PhaStatus::InvalidArgument);
}

#[test]
fn message_buffer_truncates() {
    let mut cs = ptr::null_mut();
    unsafe { pha_cs_new(9, 0.0, 0.0, 0, &mut cs) };
    let mut buf = [1 as std::ffi::c_char; 4];
    let full = unsafe { pha_last_error_message(buf.as_mut_ptr(), buf.len()) };
    assert!(full > 3);
    assert_eq!(buf[3], 0);
    assert_eq!(unsafe { pha_last_error_message(ptr::null_mut(), 0) }, full);
}

#[test]
fn piv_through_the_abi() {
    let table = [([1u8, 2, 3], 0.0, -2.0 / 9.0), ([2, 1, 3], -1.0, -8.0 / 9.0), ([3, 1, 2], -2.0, -2.0 / 9.0)];
    for (ordering, a, b) in table {
        let (mut ga, mut gb) = (f64::NAN, f64::NAN);
        assert_eq!(unsafe { pha_piv_parameters(ordering.as_ptr(), &mut ga, &mut gb) }, PhaStatus::Ok);
        assert!((ga - a).abs() < 1e-15 && (gb - b).abs() < 1e-15);

        let mut sol = ptr::null_mut();
        assert_eq!(unsafe { pha_piv_solution_new(ordering.as_ptr(), &mut sol) }, PhaStatus::Ok);
        for y in [-3.3, -0.4, 0.37, 2.9] {
            let mut r = f64::NAN;
            assert_eq!(unsafe { pha_piv_residual(sol, y, 0.1, &mut r) }, PhaStatus::Ok);
            assert!(r.abs() < 1e-10);
        }
        unsafe { pha_piv_solution_free(sol) };
    }

    let mut sol = ptr::null_mut();
    let third = [3u8, 1, 2];
    assert_eq!(unsafe { pha_piv_solution_new(third.as_ptr(), &mut sol) }, PhaStatus::Ok);
    let mut r = 0.0;
    assert_eq!(unsafe { pha_piv_residual(sol, 1.5f64.sqrt() + 0.05, 0.1, &mut r) }, PhaStatus::Singular);
    assert_eq!(unsafe { pha_piv_g(sol, 0.0, &mut r) }, PhaStatus::Ok);
    assert_eq!(r, 0.0);
    unsafe { pha_piv_solution_free(sol) };

    // g = -2y/3 - 1/y has its pole exactly at the origin
    let second = [2u8, 1, 3];
    assert_eq!(unsafe { pha_piv_solution_new(second.as_ptr(), &mut sol) }, PhaStatus::Ok);
    assert_eq!(unsafe { pha_piv_g(sol, 0.0, &mut r) }, PhaStatus::Singular);
    assert_eq!(unsafe { pha_piv_g(sol, 1.0, &mut r) }, PhaStatus::Ok);
    assert!((r + 2.0 / 3.0 + 1.0).abs() < 1e-15);
    unsafe { pha_piv_solution_free(sol) };

    let bad = [1u8, 1, 3];
    assert_eq!(unsafe { pha_piv_solution_new(bad.as_ptr(), &mut sol) }, PhaStatus::InvalidArgument);
    assert!(sol.is_null());
}

#[test]
fn densities_agree_across_paths() {
    for j in 0..3u8 {
        for (x, t) in [(-1.2, 0.3), (0.0, 1.9), (2.4, 4.4)] {
            let (mut f, mut g) = (f64::NAN, f64::NAN);
            assert_eq!(unsafe { pha_density_fock(j, 2.0, 0.5, x, t, &mut f) }, PhaStatus::Ok);
            assert_eq!(unsafe { pha_density_gaussian(j, 2.0, 0.5, x, t, &mut g) }, PhaStatus::Ok);
            assert!((f - g).abs() < 1e-10, "j={j} x={x} t={t}: {f} vs {g}");
        }
    }
    let mut h = 0.0;
    assert_eq!(unsafe { pha_hermite_function(0, 0.0, &mut h) }, PhaStatus::Ok);
    assert!((h - std::f64::consts::PI.powf(-0.25)).abs() < 1e-15);
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/pha.h")).unwrap();
    for name in [
        "pha_version",
        "pha_last_error_message",
        "pha_cs_new",
        "pha_cs_free",
        "pha_cs_len",
        "pha_cs_coeffs",
        "pha_cs_statistics",
        "pha_cs_eigen_residual",
        "pha_a_norm_squared",
        "pha_piv_parameters",
        "pha_piv_solution_new",
        "pha_piv_solution_free",
        "pha_piv_g",
        "pha_piv_residual",
        "pha_hermite_function",
        "pha_density_fock",
        "pha_density_gaussian",
        "PHA_STATUS_OK",
        "typedef struct PhaCoherentState PhaCoherentState",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

#[test]
fn header_compiles_as_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/pha.h");
    let Ok(status) = Command::new("cc").args(["-fsyntax-only", "-x", "c", "-std=c99", "-Wall", "-Werror"]).arg(&header).status()
    else {
        eprintln!("no C compiler on PATH; skipping");
        return;
    };
    assert!(status.success());
}
