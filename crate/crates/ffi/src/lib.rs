//! C ABI for the casimir-spectra library.
//!
//! The surface follows the usual C-library conventions: an opaque handle
//! for the monochromatic run configuration, flat `#[repr(C)]` result
//! structs, and status codes instead of unwinding. Every function is safe
//! to call from any thread; the handle is immutable after construction.
//!
//! Complex scattering amplitudes cross the boundary as separate real and
//! imaginary parts. Spectral densities follow the library conventions:
//! monochromatic results are per unit τ, the general quadrature path
//! returns raw densities.

// Pointer contracts are stated once here rather than per function: every
// out-pointer must point to writable storage of the documented type, array
// parameters must cover `len` elements, and handles must come from
// `casimir_mono_config_new` and not outlive `casimir_mono_config_free`.
// Scalar-heavy signatures mirror the C surface one-to-one.
#![allow(clippy::missing_safety_doc, clippy::too_many_arguments)]
// `!(x > 0.0)` guards reject NaN; `x <= 0.0` would not.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

use casimir_spectra::asymmetry::{self, delta_n_total};
use casimir_spectra::drives::{DampedCosineDrive, MultiSourceDrive};
use casimir_spectra::enhancement;
use casimir_spectra::rates::{self, RateMethod};
use casimir_spectra::scattering::{self, MirrorParams, Side};
use casimir_spectra::spectrum::{self, MonoConfig};

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CasimirStatus {
    Ok = 0,
    /// A parameter failed validation (non-finite, out of range…).
    InvalidArgument = 1,
    /// A required pointer was null.
    NullPointer = 2,
    /// Quadrature or root finding failed to converge.
    NumericalFailure = 3,
    /// The queried roots do not exist in this parameter regime.
    NoRoots = 4,
    /// Unexpected internal failure.
    Internal = 5,
}

/// Which half of space a spectral quantity refers to.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CasimirSide {
    Right = 0,
    Left = 1,
}

impl From<CasimirSide> for Side {
    fn from(side: CasimirSide) -> Side {
        match side {
            CasimirSide::Right => Side::Right,
            CasimirSide::Left => Side::Left,
        }
    }
}

/// Provenance of a rate component.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CasimirRateMethod {
    ClosedForm = 0,
    Quadrature = 1,
}

impl From<RateMethod> for CasimirRateMethod {
    fn from(m: RateMethod) -> Self {
        match m {
            RateMethod::ClosedForm => CasimirRateMethod::ClosedForm,
            RateMethod::Quadrature => CasimirRateMethod::Quadrature,
        }
    }
}

/// Per-frequency spectral decomposition for one side.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct CasimirSpectrum {
    pub n_q: f64,
    pub n_mu: f64,
    pub n_int: f64,
    pub n_total: f64,
}

/// Per-frequency left-minus-right difference decomposition.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct CasimirDifference {
    pub d_q: f64,
    pub d_mu: f64,
    pub d_int: f64,
    pub d_total: f64,
}

/// Total created-particle numbers with per-component provenance.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct CasimirRates {
    pub n_q: f64,
    pub n_mu: f64,
    pub n_int: f64,
    pub n_total: f64,
    pub xi: f64,
    pub method_q: CasimirRateMethod,
    pub method_mu: CasimirRateMethod,
    pub method_int: CasimirRateMethod,
}

/// Opaque handle to a monochromatic run configuration. Create with
/// `casimir_mono_config_new`, release with `casimir_mono_config_free`.
pub struct CasimirMonoConfig {
    config: MonoConfig,
}

fn config_from_raw<'a>(ptr: *const CasimirMonoConfig) -> Option<&'a MonoConfig> {
    // Safety: the only way to obtain a non-null handle is through
    // casimir_mono_config_new, which leaks a Box<CasimirMonoConfig>.
    unsafe { ptr.as_ref().map(|handle| &handle.config) }
}

unsafe fn write_out<T>(ptr: *mut T, value: T) -> CasimirStatus {
    if ptr.is_null() {
        return CasimirStatus::NullPointer;
    }
    ptr.write(value);
    CasimirStatus::Ok
}

fn guarded(f: impl FnOnce() -> CasimirStatus) -> CasimirStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => CasimirStatus::Internal,
    }
}

/// Version of the underlying library as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn casimir_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Allocate a monochromatic configuration handle.
///
/// On success writes the handle to `out` and returns `Ok`; the caller
/// owns the handle and must release it with `casimir_mono_config_free`.
#[no_mangle]
pub unsafe extern "C" fn casimir_mono_config_new(
    mu0: f64,
    lambda0: f64,
    omega0: f64,
    phi: f64,
    eps: f64,
    tau: f64,
    out: *mut *mut CasimirMonoConfig,
) -> CasimirStatus {
    if out.is_null() {
        return CasimirStatus::NullPointer;
    }
    let params = match MirrorParams::new(mu0, lambda0) {
        Ok(p) => p,
        Err(_) => return CasimirStatus::InvalidArgument,
    };
    match MonoConfig::new(params, omega0, phi, eps, tau) {
        Ok(config) => {
            out.write(Box::into_raw(Box::new(CasimirMonoConfig { config })));
            CasimirStatus::Ok
        }
        Err(_) => CasimirStatus::InvalidArgument,
    }
}

/// Release a configuration handle. Null is accepted and ignored.
#[no_mangle]
pub unsafe extern "C" fn casimir_mono_config_free(cfg: *mut CasimirMonoConfig) {
    if !cfg.is_null() {
        drop(Box::from_raw(cfg));
    }
}

/// Monochromatic spectral components (per unit τ) at one frequency.
#[no_mangle]
pub unsafe extern "C" fn casimir_spectrum_components(
    cfg: *const CasimirMonoConfig,
    omega: f64,
    side: CasimirSide,
    out: *mut CasimirSpectrum,
) -> CasimirStatus {
    let Some(config) = config_from_raw(cfg) else {
        return CasimirStatus::NullPointer;
    };
    let s = spectrum::spectrum_components(omega, side.into(), config);
    write_out(
        out,
        CasimirSpectrum {
            n_q: s.n_q,
            n_mu: s.n_mu,
            n_int: s.n_int,
            n_total: s.n_total,
        },
    )
}

/// Left-minus-right difference components (per unit τ) at one frequency.
#[no_mangle]
pub unsafe extern "C" fn casimir_difference_components(
    cfg: *const CasimirMonoConfig,
    omega: f64,
    out: *mut CasimirDifference,
) -> CasimirStatus {
    let Some(config) = config_from_raw(cfg) else {
        return CasimirStatus::NullPointer;
    };
    let d = delta_n_total(omega, config);
    write_out(
        out,
        CasimirDifference {
            d_q: d.d_q,
            d_mu: d.d_mu,
            d_int: d.d_int,
            d_total: d.d_total,
        },
    )
}

/// Total created-particle numbers; the motion component is evaluated by
/// adaptive quadrature at relative tolerance `tol`.
#[no_mangle]
pub unsafe extern "C" fn casimir_rate_breakdown(
    cfg: *const CasimirMonoConfig,
    tol: f64,
    out: *mut CasimirRates,
) -> CasimirStatus {
    let Some(config) = config_from_raw(cfg) else {
        return CasimirStatus::NullPointer;
    };
    if !(tol > 0.0) || !tol.is_finite() {
        return CasimirStatus::InvalidArgument;
    }
    guarded(|| match rates::rate_breakdown(config, tol) {
        Ok(b) => write_out(
            out,
            CasimirRates {
                n_q: b.n_q,
                n_mu: b.n_mu,
                n_int: b.n_int,
                n_total: b.n_total,
                xi: b.xi,
                method_q: b.method_q.into(),
                method_mu: b.method_mu.into(),
                method_int: b.method_int.into(),
            },
        ),
        Err(_) => CasimirStatus::NumericalFailure,
    })
}

/// Sign-change frequencies of the right-side interference spectrum.
/// Returns `NoRoots` (outputs untouched) when the sign is constant.
#[no_mangle]
pub unsafe extern "C" fn casimir_interference_roots(
    cfg: *const CasimirMonoConfig,
    out_minus: *mut f64,
    out_plus: *mut f64,
) -> CasimirStatus {
    let Some(config) = config_from_raw(cfg) else {
        return CasimirStatus::NullPointer;
    };
    if out_minus.is_null() || out_plus.is_null() {
        return CasimirStatus::NullPointer;
    }
    match spectrum::interference_roots(config) {
        Some((lo, hi)) => {
            out_minus.write(lo);
            out_plus.write(hi);
            CasimirStatus::Ok
        }
        None => CasimirStatus::NoRoots,
    }
}

/// Sign-change frequencies of the interference difference. Returns
/// `NoRoots` (outputs untouched) when the sign is constant.
#[no_mangle]
pub unsafe extern "C" fn casimir_diff_roots(
    cfg: *const CasimirMonoConfig,
    out_minus: *mut f64,
    out_plus: *mut f64,
) -> CasimirStatus {
    let Some(config) = config_from_raw(cfg) else {
        return CasimirStatus::NullPointer;
    };
    if out_minus.is_null() || out_plus.is_null() {
        return CasimirStatus::NullPointer;
    }
    match asymmetry::diff_roots(config) {
        Some((lo, hi)) => {
            out_minus.write(lo);
            out_plus.write(hi);
            CasimirStatus::Ok
        }
        None => CasimirStatus::NoRoots,
    }
}

/// The dimensionless drive parameter ξ = (1+λ₀²)ω₀/μ₀.
#[no_mangle]
pub unsafe extern "C" fn casimir_xi(
    cfg: *const CasimirMonoConfig,
    out: *mut f64,
) -> CasimirStatus {
    let Some(config) = config_from_raw(cfg) else {
        return CasimirStatus::NullPointer;
    };
    write_out(out, rates::xi_of(config))
}

/// Closed-form rate function of the coupling-fluctuation channel.
#[no_mangle]
pub unsafe extern "C" fn casimir_g_of_xi(xi: f64, out: *mut f64) -> CasimirStatus {
    match rates::g_of_xi(xi) {
        Ok(v) => write_out(out, v),
        Err(_) => CasimirStatus::InvalidArgument,
    }
}

/// Closed-form rate function of the interference channel.
#[no_mangle]
pub unsafe extern "C" fn casimir_i_of_xi(xi: f64, out: *mut f64) -> CasimirStatus {
    match rates::i_of_xi(xi) {
        Ok(v) => write_out(out, v),
        Err(_) => CasimirStatus::InvalidArgument,
    }
}

/// The parameter-independent zero ξ* ≈ 2.23 of the interference rate.
#[no_mangle]
pub unsafe extern "C" fn casimir_interference_null(out: *mut f64) -> CasimirStatus {
    guarded(|| match rates::interference_null() {
        Ok(v) => unsafe { write_out(out, v) },
        Err(_) => CasimirStatus::NumericalFailure,
    })
}

/// The spectral kernel Υ(ω) = ω/[μ₀² + ω²(1+λ₀²)²].
#[no_mangle]
pub unsafe extern "C" fn casimir_upsilon(
    mu0: f64,
    lambda0: f64,
    omega: f64,
    out: *mut f64,
) -> CasimirStatus {
    let params = match MirrorParams::new(mu0, lambda0) {
        Ok(p) => p,
        Err(_) => return CasimirStatus::InvalidArgument,
    };
    write_out(out, spectrum::upsilon(omega, &params))
}

/// Reflection amplitude for one side, split into real and imaginary parts.
#[no_mangle]
pub unsafe extern "C" fn casimir_reflection(
    mu0: f64,
    lambda0: f64,
    omega: f64,
    side: CasimirSide,
    out_re: *mut f64,
    out_im: *mut f64,
) -> CasimirStatus {
    let params = match MirrorParams::new(mu0, lambda0) {
        Ok(p) => p,
        Err(_) => return CasimirStatus::InvalidArgument,
    };
    if out_re.is_null() || out_im.is_null() {
        return CasimirStatus::NullPointer;
    }
    let r = scattering::reflection(omega, side.into(), &params);
    out_re.write(r.re);
    out_im.write(r.im);
    CasimirStatus::Ok
}

/// Transmission amplitude (side-independent), split into parts.
#[no_mangle]
pub unsafe extern "C" fn casimir_transmission(
    mu0: f64,
    lambda0: f64,
    omega: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> CasimirStatus {
    let params = match MirrorParams::new(mu0, lambda0) {
        Ok(p) => p,
        Err(_) => return CasimirStatus::InvalidArgument,
    };
    if out_re.is_null() || out_im.is_null() {
        return CasimirStatus::NullPointer;
    }
    let s = scattering::transmission(omega, &params);
    out_re.write(s.re);
    out_im.write(s.im);
    CasimirStatus::Ok
}

/// The static S-matrix at ω, written row-major (s₊, r₊, r₋, s₋) into two
/// four-element arrays for the real and imaginary parts.
#[no_mangle]
pub unsafe extern "C" fn casimir_s0_matrix(
    mu0: f64,
    lambda0: f64,
    omega: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> CasimirStatus {
    let params = match MirrorParams::new(mu0, lambda0) {
        Ok(p) => p,
        Err(_) => return CasimirStatus::InvalidArgument,
    };
    if out_re.is_null() || out_im.is_null() {
        return CasimirStatus::NullPointer;
    }
    let m = scattering::s0_matrix(omega, &params);
    for row in 0..2 {
        for col in 0..2 {
            let e = m.entry(row, col);
            out_re.add(row * 2 + col).write(e.re);
            out_im.add(row * 2 + col).write(e.im);
        }
    }
    CasimirStatus::Ok
}

/// Effective squared amplitude |Σᵢ εᵢ e^{iφᵢ}|² of `len` coherent sources
/// described by parallel `eps`/`phi` arrays.
#[no_mangle]
pub unsafe extern "C" fn casimir_effective_eps_sq(
    eps: *const f64,
    phi: *const f64,
    len: usize,
    out: *mut f64,
) -> CasimirStatus {
    if eps.is_null() || phi.is_null() {
        return CasimirStatus::NullPointer;
    }
    if len == 0 {
        return CasimirStatus::InvalidArgument;
    }
    let eps = std::slice::from_raw_parts(eps, len);
    let phi = std::slice::from_raw_parts(phi, len);
    if eps.iter().any(|e| !(*e >= 0.0) || !e.is_finite())
        || phi.iter().any(|p| !p.is_finite())
    {
        return CasimirStatus::InvalidArgument;
    }
    let mut total = 0.0;
    for i in 0..len {
        total += eps[i] * eps[i];
        for j in (i + 1)..len {
            total += 2.0 * eps[i] * eps[j] * (phi[j] - phi[i]).cos();
        }
    }
    write_out(out, total)
}

/// Resonantly enhanced coupling-channel spectral difference (per unit τ)
/// of `len` sources sharing frequency ω₀, at spectral frequency ω.
/// The first source's phase must be 0.
#[no_mangle]
pub unsafe extern "C" fn casimir_enhanced_delta_n_mu(
    mu0: f64,
    lambda0: f64,
    omega0: f64,
    tau: f64,
    eps: *const f64,
    phi: *const f64,
    len: usize,
    omega: f64,
    out: *mut f64,
) -> CasimirStatus {
    if eps.is_null() || phi.is_null() {
        return CasimirStatus::NullPointer;
    }
    if len == 0 {
        return CasimirStatus::InvalidArgument;
    }
    let params = match MirrorParams::new(mu0, lambda0) {
        Ok(p) => p,
        Err(_) => return CasimirStatus::InvalidArgument,
    };
    let eps = std::slice::from_raw_parts(eps, len);
    let phi = std::slice::from_raw_parts(phi, len);
    let mut sources = Vec::with_capacity(len);
    for i in 0..len {
        match DampedCosineDrive::new(eps[i], omega0, phi[i], tau) {
            Ok(d) => sources.push(d),
            Err(_) => return CasimirStatus::InvalidArgument,
        }
    }
    let drive = match MultiSourceDrive::new(sources) {
        Ok(d) => d,
        Err(_) => return CasimirStatus::InvalidArgument,
    };
    guarded(|| match enhancement::enhanced_delta_n_mu(omega, &drive, &params, omega0) {
        Ok(v) => unsafe { write_out(out, v) },
        Err(_) => CasimirStatus::InvalidArgument,
    })
}

/// General-path spectral components (raw densities) for independently
/// driven motion (`omega2`, phase `phi`) and coupling (`omega1`) channels
/// sharing amplitude ε and oscillation time τ.
#[no_mangle]
pub unsafe extern "C" fn casimir_general_components(
    mu0: f64,
    lambda0: f64,
    omega1: f64,
    omega2: f64,
    phi: f64,
    eps: f64,
    tau: f64,
    omega: f64,
    side: CasimirSide,
    tol: f64,
    out: *mut CasimirSpectrum,
) -> CasimirStatus {
    let params = match MirrorParams::new(mu0, lambda0) {
        Ok(p) => p,
        Err(_) => return CasimirStatus::InvalidArgument,
    };
    let coupling = match DampedCosineDrive::new(eps, omega1, 0.0, tau) {
        Ok(d) => d,
        Err(_) => return CasimirStatus::InvalidArgument,
    };
    let motion = match DampedCosineDrive::new(eps, omega2, phi, tau) {
        Ok(d) => d,
        Err(_) => return CasimirStatus::InvalidArgument,
    };
    guarded(|| {
        match spectrum::n_general(omega, side.into(), &coupling, &motion, &params, tol) {
            Ok(s) => unsafe {
                write_out(
                    out,
                    CasimirSpectrum {
                        n_q: s.n_q,
                        n_mu: s.n_mu,
                        n_int: s.n_int,
                        n_total: s.n_total,
                    },
                )
            },
            Err(_) => CasimirStatus::NumericalFailure,
        }
    })
}
