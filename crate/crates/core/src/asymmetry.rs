//! Left-minus-right spectral differences and the structure of the
//! mirror's asymmetry.
//!
//! The spectral difference ΔN(ω) = N₋(ω) - N₊(ω) measures how unevenly
//! the two halves of space are populated. In the monochromatic limit the
//! channel differences collapse onto one shared kernel:
//!
//! ```text
//! ΔN_q/τ  = +(ε²/π)·ω₀²·μ₀²λ₀(1+λ₀²)·Υ(ω)Υ(ω₀-ω)·Θ(ω₀-ω)
//! ΔN_μ/τ  = -(ε²/π)·      μ₀²λ₀(1+λ₀²)·Υ(ω)Υ(ω₀-ω)·Θ(ω₀-ω)
//! ΔN_int/τ = -(ε²/π)·μ₀(1+λ₀²)·[μ₀² - 4λ₀²ω(ω₀-ω)]·Υ(ω)Υ(ω₀-ω)·Θ·cos φ
//! ```
//!
//! so the two independent channels obey the resonance identity
//! ΔN_q = -ω₀²·ΔN_μ pointwise: they oppose each other, cancelling exactly
//! at ω₀ = 1 where only the interference difference survives. The three
//! differences are tied together by a double-slit-style relation through
//! the interference factor I(ω) = [μ₀² - 4λ₀²ω(ω₀-ω)]/(2λ₀μ₀ω₀), and the
//! total takes the product form ΔN = [1 + 2ω₀I(ω)cos φ - ω₀²]·ΔN_μ.
//!
//! `delta_n_q` and `delta_n_mu` are built from one shared kernel
//! evaluation, so the resonance identity holds to the last bit; the
//! definitional cross-checks against the per-side spectra live in tests.
//!
//! The low/high-frequency approximants are shipped verbatim as printed
//! diagnostic curves: they drop the ε², τ and window factors and replace
//! the partner kernel, so they are qualitative companions to the exact
//! differences above, not substitutes.

use thiserror::Error;

use crate::spectrum::{upsilon, MonoConfig};

#[derive(Debug, Error, PartialEq)]
pub enum AsymmetryError {
    #[error("the interference factor is undefined for a symmetric mirror (lambda0 = 0)")]
    SymmetricMirror,
}

/// Per-frequency decomposition of the left-minus-right difference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DifferenceComponents {
    pub omega: f64,
    pub d_q: f64,
    pub d_mu: f64,
    pub d_int: f64,
    /// Exact sum of the three components as stored.
    pub d_total: f64,
}

/// Shared kernel (ε²/π)·μ₀²λ₀(1+λ₀²)·Υ(ω)Υ(ω₀-ω) inside the window.
fn channel_kernel(omega: f64, cfg: &MonoConfig) -> f64 {
    if omega <= 0.0 || omega >= cfg.omega0() {
        return 0.0;
    }
    let p = cfg.params();
    let l = 1.0 + p.lambda0() * p.lambda0();
    let eps = cfg.eps();
    eps * eps / std::f64::consts::PI
        * p.mu0()
        * p.mu0()
        * p.lambda0()
        * l
        * upsilon(omega, p)
        * upsilon(cfg.omega0() - omega, p)
}

/// Motion-channel difference per unit τ; positive for λ₀ > 0 (the left
/// half over-produces from motion).
pub fn delta_n_q(omega: f64, cfg: &MonoConfig) -> f64 {
    cfg.omega0() * cfg.omega0() * channel_kernel(omega, cfg)
}

/// Coupling-fluctuation difference per unit τ; negative for λ₀ > 0 (the
/// right half always over-produces from the fluctuating coupling).
pub fn delta_n_mu(omega: f64, cfg: &MonoConfig) -> f64 {
    -channel_kernel(omega, cfg)
}

/// Interference difference per unit τ. Survives λ₀ = 0, where the two
/// independent differences vanish but the cross term does not.
pub fn delta_n_int(omega: f64, cfg: &MonoConfig) -> f64 {
    if omega <= 0.0 || omega >= cfg.omega0() {
        return 0.0;
    }
    let p = cfg.params();
    let mu0 = p.mu0();
    let lambda0 = p.lambda0();
    let l = 1.0 + lambda0 * lambda0;
    let partner = cfg.omega0() - omega;
    let bracket = mu0 * mu0 - 4.0 * lambda0 * lambda0 * omega * partner;
    let eps = cfg.eps();
    -eps * eps / std::f64::consts::PI
        * mu0
        * l
        * bracket
        * upsilon(omega, p)
        * upsilon(partner, p)
        * cfg.phi().cos()
}

/// Residual of the resonance identity: ΔN_q + ω₀²·ΔN_μ, which must be
/// numerically zero everywhere.
pub fn resonance_check(omega: f64, cfg: &MonoConfig) -> f64 {
    delta_n_q(omega, cfg) + cfg.omega0() * cfg.omega0() * delta_n_mu(omega, cfg)
}

/// Dimensionless interference factor
/// I(ω) = [μ₀² - 4λ₀²ω(ω₀-ω)] / (2λ₀μ₀ω₀), symmetric under ω → ω₀-ω.
///
/// Undefined for λ₀ = 0; the interference difference itself stays finite
/// there via [`delta_n_int`].
pub fn interference_factor(omega: f64, cfg: &MonoConfig) -> Result<f64, AsymmetryError> {
    let p = cfg.params();
    let lambda0 = p.lambda0();
    if lambda0 == 0.0 {
        return Err(AsymmetryError::SymmetricMirror);
    }
    let mu0 = p.mu0();
    let bracket = mu0 * mu0 - 4.0 * lambda0 * lambda0 * omega * (cfg.omega0() - omega);
    Ok(bracket / (2.0 * lambda0 * mu0 * cfg.omega0()))
}

/// All difference components and their sum at one frequency.
///
/// For λ₀ ≠ 0 the total also satisfies the product form
/// [1 + 2ω₀I(ω)cos φ - ω₀²]·ΔN_μ, cross-checked in debug builds; see
/// [`delta_n_total_product`] for the explicit second route.
pub fn delta_n_total(omega: f64, cfg: &MonoConfig) -> DifferenceComponents {
    let d_q = delta_n_q(omega, cfg);
    let d_mu = delta_n_mu(omega, cfg);
    let d_int = delta_n_int(omega, cfg);
    let d_total = d_q + d_mu + d_int;
    // Agreement is judged against the component scale: the sum cancels to
    // zero on the vanishing locus while the inputs stay finite.
    let scale = d_q.abs() + d_mu.abs() + d_int.abs();
    debug_assert!(
        match delta_n_total_product(omega, cfg) {
            Some(product) => (product - d_total).abs() <= 1e-9 * scale.max(1e-300),
            None => true,
        },
        "component sum and product form disagree at omega = {omega}"
    );
    DifferenceComponents {
        omega,
        d_q,
        d_mu,
        d_int,
        d_total,
    }
}

/// The product-form total [1 + 2ω₀I(ω)cos φ - ω₀²]·ΔN_μ(ω), an
/// algebraically independent route to the same number. `None` for λ₀ = 0
/// where I(ω) is undefined.
pub fn delta_n_total_product(omega: f64, cfg: &MonoConfig) -> Option<f64> {
    let factor = interference_factor(omega, cfg).ok()?;
    let w0 = cfg.omega0();
    Some((1.0 + 2.0 * w0 * factor * cfg.phi().cos() - w0 * w0) * delta_n_mu(omega, cfg))
}

/// Frequencies where the interference difference changes sign:
/// 2ω± = ω₀ ± √(ω₀² - μ₀²/λ₀²), present only when λ₀ω₀ > μ₀. Below that
/// threshold the sign is constant across the window and `None` is
/// returned.
pub fn diff_roots(cfg: &MonoConfig) -> Option<(f64, f64)> {
    let p = cfg.params();
    let lambda0 = p.lambda0();
    if lambda0 <= 0.0 {
        return None;
    }
    let w0 = cfg.omega0();
    let ratio = p.mu0() / lambda0;
    let disc = w0 * w0 - ratio * ratio;
    if disc <= 0.0 {
        return None;
    }
    let root = disc.sqrt();
    Some(((w0 - root) / 2.0, (w0 + root) / 2.0))
}

/// Dominant-term approximant of ΔN_μ in the low driving-frequency regime
/// ω₀ ≪ 1, as a dimensionless diagnostic curve (no ε², τ or window
/// factors).
pub fn low_freq_approx(omega: f64, cfg: &MonoConfig) -> f64 {
    let p = cfg.params();
    let l = 1.0 + p.lambda0() * p.lambda0();
    let den = p.mu0() * p.mu0() + omega * omega * l * l;
    p.lambda0() * l * p.mu0() * p.mu0() * omega * omega / (std::f64::consts::PI * den * den)
}

/// Dominant-term approximant of ΔN_q in the high driving-frequency regime
/// ω₀ ≫ 1; diagnostic curve on the same terms as [`low_freq_approx`].
pub fn high_freq_approx(omega: f64, cfg: &MonoConfig) -> f64 {
    let p = cfg.params();
    let l = 1.0 + p.lambda0() * p.lambda0();
    let den = p.mu0() * p.mu0() + omega * omega * l * l;
    p.lambda0() * p.mu0() * p.mu0() * omega * (cfg.omega0() + omega)
        / (std::f64::consts::PI * l * den)
}
