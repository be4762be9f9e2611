//! Total created-particle numbers and the closed-form rate functions.
//!
//! Integrating the per-side monochromatic densities over frequency gives
//! the totals 𝒩 = 𝒩_q + 𝒩_μ + 𝒩_int, each linear in ε²τ and controlled by
//! the single dimensionless drive parameter ξ = (1+λ₀²)ω₀/μ₀:
//!
//! ```text
//! 𝒩_μ   = (ε²τω₀/π)·g(ξ)
//! g(ξ)  = [(ξ²+2)·ln(1+ξ²) - 2ξ·arctan ξ] / (2ξ²(ξ²+4))
//!
//! 𝒩_int = (2ε²τλ₀ω₀³·cos φ/(μ₀π))·i(ξ)
//! i(ξ)  = [ξ·(ln(1+ξ²) - 4 - ξ²) + 2(2+ξ²)·arctan ξ] / (ξ³(ξ²+4))
//! ```
//!
//! g(ξ) is positive for all ξ > 0 and behaves as ξ²/12 near the origin.
//! i(ξ) starts at 1/6, changes sign exactly once, at ξ* ≈ 2.23: for
//! phases with cos φ > 0 the interference adds particles below ξ* and
//! removes them above it. The motion total 𝒩_q has no closed form here
//! and is evaluated by adaptive quadrature of its spectral density; both
//! closed forms are validated against the same quadrature route in tests.
//!
//! Totals are recovered from the per-τ densities as τ·∫dω N(ω)/τ; that
//! normalization is the one under which the closed forms above hold, and
//! it is pinned by the quadrature oracles.
//!
//! For a perfectly reflecting mirror (λ₀ = 1) the coupling-fluctuation
//! problem maps onto a mirror with a time-dependent Robin boundary
//! condition of parameter γ₀ = 2/μ₀: under that correspondence the
//! coupling rate equals ω₀² times the Robin-mirror rate, and the
//! interference rate matches the Robin one up to an overall factor
//! -2ω₀. The correspondence is documented here for orientation only;
//! no Robin-mirror quantities are computed.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::quadrature::{find_root, integrate, QuadratureError};
use crate::scattering::Side;
use crate::spectrum::{n_q_mono, MonoConfig};

#[derive(Debug, Error)]
pub enum RatesError {
    #[error("the rate functions require xi > 0, got {xi}")]
    NonPositiveXi { xi: f64 },
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}

/// How a component of [`RateBreakdown`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RateMethod {
    ClosedForm,
    Quadrature,
}

impl std::fmt::Display for RateMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RateMethod::ClosedForm => write!(f, "closed_form"),
            RateMethod::Quadrature => write!(f, "quadrature"),
        }
    }
}

/// Total created-particle numbers summed over both sides, with the
/// provenance of each component.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateBreakdown {
    pub n_q: f64,
    pub n_mu: f64,
    pub n_int: f64,
    /// Exact sum of the three components as stored.
    pub n_total: f64,
    pub xi: f64,
    pub method_q: RateMethod,
    pub method_mu: RateMethod,
    pub method_int: RateMethod,
}

/// The dimensionless drive parameter ξ = (1+λ₀²)ω₀/μ₀.
pub fn xi_of(cfg: &MonoConfig) -> f64 {
    let p = cfg.params();
    (1.0 + p.lambda0() * p.lambda0()) * cfg.omega0() / p.mu0()
}

/// Closed-form rate function of the coupling-fluctuation channel.
pub fn g_of_xi(xi: f64) -> Result<f64, RatesError> {
    if !(xi > 0.0) || !xi.is_finite() {
        return Err(RatesError::NonPositiveXi { xi });
    }
    let xi2 = xi * xi;
    let numerator = (xi2 + 2.0) * xi2.ln_1p() - 2.0 * xi * xi.atan();
    Ok(numerator / (2.0 * xi2 * (xi2 + 4.0)))
}

/// Closed-form rate function of the interference channel; changes sign
/// once, at ξ ≈ 2.23.
pub fn i_of_xi(xi: f64) -> Result<f64, RatesError> {
    if !(xi > 0.0) || !xi.is_finite() {
        return Err(RatesError::NonPositiveXi { xi });
    }
    let xi2 = xi * xi;
    let numerator = xi * (xi2.ln_1p() - 4.0 - xi2) + 2.0 * (2.0 + xi2) * xi.atan();
    Ok(numerator / (xi2 * xi * (xi2 + 4.0)))
}

/// Totals over both sides: the μ and interference channels from their
/// closed forms, the motion channel by quadrature of its density.
pub fn rate_breakdown(cfg: &MonoConfig, tol: f64) -> Result<RateBreakdown, RatesError> {
    let xi = xi_of(cfg);
    let eps_sq_tau = cfg.eps() * cfg.eps() * cfg.tau();
    let w0 = cfg.omega0();
    let p = cfg.params();

    let n_mu = eps_sq_tau * w0 / std::f64::consts::PI * g_of_xi(xi)?;
    let n_int = 2.0 * eps_sq_tau * p.lambda0() * w0.powi(3) * cfg.phi().cos()
        / (p.mu0() * std::f64::consts::PI)
        * i_of_xi(xi)?;

    // TODO: slot in the closed-form motion rate once its coefficient
    // functions are derived; this quadrature then becomes its oracle.
    let motion_density =
        |w: f64| n_q_mono(w, Side::Right, cfg) + n_q_mono(w, Side::Left, cfg);
    let n_q = cfg.tau() * integrate(motion_density, 0.0, w0, tol)?.value;

    Ok(RateBreakdown {
        n_q,
        n_mu,
        n_int,
        n_total: n_q + n_mu + n_int,
        xi,
        method_q: RateMethod::Quadrature,
        method_mu: RateMethod::ClosedForm,
        method_int: RateMethod::ClosedForm,
    })
}

/// The zero ξ* of the interference rate function, located by bracketed
/// root finding on [1, 3]. A pure number: it depends on no mirror or
/// drive parameter.
pub fn interference_null() -> Result<f64, RatesError> {
    Ok(find_root(|xi| i_of_xi(xi).unwrap(), 1.0, 3.0, 1e-13)?)
}
