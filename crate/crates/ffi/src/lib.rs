//! C interface to `pha-core`.
//!
//! Every fallible function returns a [`PhaStatus`] and writes its result
//! through an out-pointer. On failure a message is kept per thread and can be
//! copied out with [`pha_last_error_message`]. Handles are opaque and must be
//! released with the matching `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_complex::Complex64;
use pha_core::coherent::{self, CoherentSpec};
use pha_core::fock::{FockVector, LadderIndex};
use pha_core::painleve::{self, ExtremalSeed, PivSolution};
use pha_core::wavepacket::{self, FockPacket, GaussianPacket};
use pha_core::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// Requested truncation below what the state needs.
    Truncation = 3,
    /// Evaluation point inside an excluded neighbourhood or on a zero of `g`.
    Singular = 4,
    BufferTooSmall = 5,
    Overflow = 6,
    /// A Rust panic was caught at the boundary.
    Internal = 7,
}

/// A normalized coherent state of one ladder, truncated to a Fock block.
pub struct PhaCoherentState {
    spec: CoherentSpec,
    coeffs: FockVector,
}

/// One rational solution of Painleve IV.
pub struct PhaPivSolution {
    inner: PivSolution,
}

/// Moments of a coherent state.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PhaStatistics {
    pub mean_x: f64,
    pub mean_p: f64,
    pub mean_x2: f64,
    pub mean_p2: f64,
    pub mean_h: f64,
    pub mean_number: f64,
    pub uncertainty_product: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(err: &Error) -> PhaStatus {
    match err {
        Error::Truncation { .. } | Error::InvalidTruncation { .. } => PhaStatus::Truncation,
        Error::SingularPoint { .. } | Error::DivisionByZero { .. } => PhaStatus::Singular,
        Error::Overflow(_) => PhaStatus::Overflow,
        _ => PhaStatus::InvalidArgument,
    }
}

fn fail(status: PhaStatus, msg: impl Into<String>) -> PhaStatus {
    set_error(msg);
    status
}

/// Runs `f` behind a panic guard and translates core errors.
fn guard(f: impl FnOnce() -> Result<(), PhaStatus>) -> PhaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PhaStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(PhaStatus::Internal, "panic inside pha"),
    }
}

fn core<T>(r: pha_core::Result<T>) -> Result<T, PhaStatus> {
    r.map_err(|e| fail(status_of(&e), e.to_string()))
}

fn ladder(j: u8) -> Result<LadderIndex, PhaStatus> {
    core(LadderIndex::coherent(j))
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, PhaStatus> {
    p.as_mut().ok_or_else(|| fail(PhaStatus::NullPointer, "null output pointer"))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, PhaStatus> {
    p.as_ref().ok_or_else(|| fail(PhaStatus::NullPointer, "null handle"))
}

/// Library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn pha_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Copies the calling thread's last error message into `buf`, truncating
/// to `len - 1` bytes plus a nul. Returns the full message length without
/// the nul, or 0 if no error has been recorded.
///
/// # Safety
/// `buf` must be null or valid for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn pha_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let e = e.borrow();
        let Some(msg) = e.as_ref() else { return 0 };
        let bytes = msg.as_bytes();
        if !buf.is_null() && len > 0 {
            let n = bytes.len().min(len - 1);
            ptr::copy_nonoverlapping(bytes.as_ptr(), buf.cast::<u8>(), n);
            *buf.add(n) = 0;
        }
        bytes.len()
    })
}

/// Builds the ladder-`j` coherent state with eigenvalue `alpha`.
/// `truncation == 0` picks the smallest adequate truncation.
///
/// # Safety
/// `out_state` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pha_cs_new(
    j: u8,
    alpha_re: f64,
    alpha_im: f64,
    truncation: usize,
    out_state: *mut *mut PhaCoherentState,
) -> PhaStatus {
    guard(|| {
        let slot = out(out_state)?;
        *slot = ptr::null_mut();
        let mut spec = core(CoherentSpec::new(ladder(j)?, Complex64::new(alpha_re, alpha_im)))?;
        if truncation != 0 {
            spec = spec.with_truncation(truncation);
        }
        let coeffs = core(coherent::build_cs(&spec))?;
        *slot = Box::into_raw(Box::new(PhaCoherentState { spec, coeffs }));
        Ok(())
    })
}

/// # Safety
/// `state` must come from [`pha_cs_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pha_cs_free(state: *mut PhaCoherentState) {
    if !state.is_null() {
        drop(Box::from_raw(state));
    }
}

/// Number of Fock coefficients held by the state.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn pha_cs_len(state: *const PhaCoherentState, out_len: *mut usize) -> PhaStatus {
    guard(|| {
        *out(out_len)? = handle(state)?.coeffs.truncation();
        Ok(())
    })
}

/// Copies the coefficients into `re[0..len]` and `im[0..len]`.
///
/// # Safety
/// `re` and `im` must be valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn pha_cs_coeffs(
    state: *const PhaCoherentState,
    re: *mut f64,
    im: *mut f64,
    len: usize,
) -> PhaStatus {
    guard(|| {
        let s = handle(state)?;
        if re.is_null() || im.is_null() {
            return Err(fail(PhaStatus::NullPointer, "null coefficient buffer"));
        }
        let n = s.coeffs.truncation();
        if len < n {
            return Err(fail(PhaStatus::BufferTooSmall, format!("need {n} entries, got {len}")));
        }
        for (i, c) in s.coeffs.coeffs().iter().enumerate() {
            *re.add(i) = c.re;
            *im.add(i) = c.im;
        }
        Ok(())
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn pha_cs_statistics(state: *const PhaCoherentState, out_stats: *mut PhaStatistics) -> PhaStatus {
    guard(|| {
        let s = core(coherent::statistics(&handle(state)?.spec))?;
        *out(out_stats)? = PhaStatistics {
            mean_x: s.mean_x,
            mean_p: s.mean_p,
            mean_x2: s.mean_x2,
            mean_p2: s.mean_p2,
            mean_h: s.mean_h,
            mean_number: s.mean_number,
            uncertainty_product: s.uncertainty_product,
        };
        Ok(())
    })
}

/// `|| a_g psi - alpha psi ||` for the stored state.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn pha_cs_eigen_residual(state: *const PhaCoherentState, out_value: *mut f64) -> PhaStatus {
    guard(|| {
        *out(out_value)? = core(coherent::eigen_residual(&handle(state)?.spec))?;
        Ok(())
    })
}

/// Closed-form `<a+ a>` of the ladder-`j` state at `|alpha|`.
///
/// # Safety
/// `out_value` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pha_a_norm_squared(j: u8, abs_alpha: f64, out_value: *mut f64) -> PhaStatus {
    guard(|| {
        if !(abs_alpha.is_finite() && abs_alpha >= 0.0) {
            return Err(fail(PhaStatus::InvalidArgument, "abs_alpha must be finite and nonnegative"));
        }
        *out(out_value)? = coherent::a_norm_squared(ladder(j)?, abs_alpha);
        Ok(())
    })
}

unsafe fn seed(ordering: *const u8) -> Result<ExtremalSeed, PhaStatus> {
    let o = handle(ordering.cast::<[u8; 3]>())?;
    core(ExtremalSeed::new(*o))
}

/// Painleve IV parameters `(a, b)` for an ordering of the extremal labels
/// `{1, 2, 3}`, given as three bytes.
///
/// # Safety
/// `ordering` must point at 3 bytes; outputs must be valid.
#[no_mangle]
pub unsafe extern "C" fn pha_piv_parameters(ordering: *const u8, out_a: *mut f64, out_b: *mut f64) -> PhaStatus {
    guard(|| {
        let (a, b) = painleve::piv_parameters(&seed(ordering)?);
        *out(out_a)? = a;
        *out(out_b)? = b;
        Ok(())
    })
}

/// # Safety
/// `ordering` must point at 3 bytes; `out_solution` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pha_piv_solution_new(ordering: *const u8, out_solution: *mut *mut PhaPivSolution) -> PhaStatus {
    guard(|| {
        let slot = out(out_solution)?;
        *slot = ptr::null_mut();
        let inner = painleve::solution_from_extremal(&seed(ordering)?);
        *slot = Box::into_raw(Box::new(PhaPivSolution { inner }));
        Ok(())
    })
}

/// # Safety
/// `solution` must come from [`pha_piv_solution_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pha_piv_solution_free(solution: *mut PhaPivSolution) {
    if !solution.is_null() {
        drop(Box::from_raw(solution));
    }
}

/// `g(y)`; [`PhaStatus::Singular`] exactly on a pole.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn pha_piv_g(solution: *const PhaPivSolution, y: f64, out_value: *mut f64) -> PhaStatus {
    guard(|| {
        let g = handle(solution)?.inner.g(y);
        if !g.is_finite() {
            return Err(fail(PhaStatus::Singular, format!("pole at y = {y}")));
        }
        *out(out_value)? = g;
        Ok(())
    })
}

/// Equation residual at `y`, refusing points within `delta` of a pole.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn pha_piv_residual(
    solution: *const PhaPivSolution,
    y: f64,
    delta: f64,
    out_value: *mut f64,
) -> PhaStatus {
    guard(|| {
        let sol = &handle(solution)?.inner;
        *out(out_value)? = core(painleve::piv_residual_with(sol, y, delta, painleve::Derivatives::Analytic))?;
        Ok(())
    })
}

/// Normalized Hermite function `psi_n(x)`.
///
/// # Safety
/// `out_value` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pha_hermite_function(n: i64, x: f64, out_value: *mut f64) -> PhaStatus {
    guard(|| {
        *out(out_value)? = core(wavepacket::hermite_function(n, x))?;
        Ok(())
    })
}

/// `|psi(x, t)|^2` of the ladder-`j` state labelled by `z` (eigenvalue `z^3`),
/// summed over Fock levels.
///
/// # Safety
/// `out_value` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pha_density_fock(j: u8, z_re: f64, z_im: f64, x: f64, t: f64, out_value: *mut f64) -> PhaStatus {
    guard(|| {
        let packet = core(FockPacket::new(ladder(j)?, Complex64::new(z_re, z_im)))?;
        *out(out_value)? = core(packet.density(x, t))?;
        Ok(())
    })
}

/// Same density, evaluated as a superposition of three Gaussians.
///
/// # Safety
/// `out_value` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pha_density_gaussian(
    j: u8,
    z_re: f64,
    z_im: f64,
    x: f64,
    t: f64,
    out_value: *mut f64,
) -> PhaStatus {
    guard(|| {
        let packet = core(GaussianPacket::new(ladder(j)?, Complex64::new(z_re, z_im)))?;
        *out(out_value)? = packet.density(x, t);
        Ok(())
    })
}
