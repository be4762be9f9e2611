//! Time-dependent drive profiles and their Fourier transforms.
//!
//! Every drive is a damped cosine cos(ω₁t + φ)·e^(-|t|/τ): the standard
//! profile for both mirror motion and coupling fluctuations. Its transform
//! under the unnormalized convention ℱ(ω) = ∫ dt f(t) e^{iωt} is a pair of
//! Lorentzians of width a = 1/τ,
//!
//! ```text
//! ℱ(ω) = e^{+iφ}·a/(a² + (ω+ω₁)²) + e^{-iφ}·a/(a² + (ω-ω₁)²)
//! ```
//!
//! This convention is the one fixed by the monochromatic limit: each
//! squared Lorentzian integrates to πτ/2, so |ℱ(ω)|²/τ collapses onto
//! (π/2)[δ(ω-ω₁) + δ(ω+ω₁)] as ω₁τ → ∞. The phase enters as exact complex
//! factors on the two Lorentzian terms; tests pin it against a time-domain
//! quadrature oracle rather than a hand-derived formula.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum DriveError {
    #[error("{field} must be {requirement}, got {value}")]
    InvalidField {
        field: &'static str,
        requirement: &'static str,
        value: f64,
    },
    #[error("multi-source drives share one oscillation time; expected tau = {expected}, got {got}")]
    MismatchedTau { expected: f64, got: f64 },
    #[error("a multi-source drive needs at least one source")]
    Empty,
    #[error("the first source fixes the phase reference and must have phase 0, got {phase}")]
    FirstPhaseNonzero { phase: f64 },
}

/// A damped cosine drive cos(freq·t + phase)·e^(-|t|/tau) with a small
/// dimensionless amplitude `eps` carried alongside for spectral formulas.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DampedCosineDrive {
    eps: f64,
    freq: f64,
    phase: f64,
    tau: f64,
}

impl DampedCosineDrive {
    pub fn new(eps: f64, freq: f64, phase: f64, tau: f64) -> Result<Self, DriveError> {
        if !(eps >= 0.0) || !eps.is_finite() {
            return Err(DriveError::InvalidField {
                field: "eps",
                requirement: "nonnegative and finite",
                value: eps,
            });
        }
        if !(freq > 0.0) || !freq.is_finite() {
            return Err(DriveError::InvalidField {
                field: "freq",
                requirement: "positive and finite",
                value: freq,
            });
        }
        if !phase.is_finite() {
            return Err(DriveError::InvalidField {
                field: "phase",
                requirement: "finite",
                value: phase,
            });
        }
        if !(tau > 0.0) || !tau.is_finite() {
            return Err(DriveError::InvalidField {
                field: "tau",
                requirement: "positive and finite",
                value: tau,
            });
        }
        Ok(Self {
            eps,
            freq,
            phase,
            tau,
        })
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn freq(&self) -> f64 {
        self.freq
    }

    pub fn phase(&self) -> f64 {
        self.phase
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    /// The normalized time profile, bounded by 1 in magnitude. The
    /// amplitude `eps` is deliberately not applied here.
    pub fn profile(&self, t: f64) -> f64 {
        (self.freq * t + self.phase).cos() * (-t.abs() / self.tau).exp()
    }

    /// Fourier transform ∫ dt profile(t) e^{iωt}: two phase-dressed
    /// Lorentzians of width 1/τ centered at ∓freq.
    pub fn fourier(&self, omega: f64) -> Complex64 {
        let a = 1.0 / self.tau;
        let up = omega + self.freq;
        let down = omega - self.freq;
        let plus = a / (a * a + up * up);
        let minus = a / (a * a + down * down);
        Complex64::from_polar(1.0, self.phase) * plus
            + Complex64::from_polar(1.0, -self.phase) * minus
    }
}

/// Which pair partner a delta-pair drive selects at frequency ω: particles
/// are created in pairs whose frequencies sum to the drive frequency, so a
/// particle at ω pairs with one at ω₀ - ω. Returns `None` outside the open
/// interval (0, ω₀) where no partner exists on the positive axis.
///
/// Bookkeeping helper for tests that verify the collapse of the general
/// spectral integrals onto the closed forms.
pub fn mono_pair_weight(omega: f64, omega0: f64) -> Option<f64> {
    if omega > 0.0 && omega < omega0 {
        Some(omega0 - omega)
    } else {
        None
    }
}

/// An ordered set of damped cosine sources acting simultaneously, sharing
/// one effective oscillation time. The first source carries phase 0 and
/// serves as the phase reference for the rest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MultiSourceDrive {
    sources: Vec<DampedCosineDrive>,
}

impl MultiSourceDrive {
    pub fn new(sources: Vec<DampedCosineDrive>) -> Result<Self, DriveError> {
        let first = sources.first().ok_or(DriveError::Empty)?;
        if first.phase() != 0.0 {
            return Err(DriveError::FirstPhaseNonzero {
                phase: first.phase(),
            });
        }
        let tau = first.tau();
        for s in &sources[1..] {
            if s.tau() != tau {
                return Err(DriveError::MismatchedTau {
                    expected: tau,
                    got: s.tau(),
                });
            }
        }
        Ok(Self { sources })
    }

    pub fn sources(&self) -> &[DampedCosineDrive] {
        &self.sources
    }

    pub fn tau(&self) -> f64 {
        self.sources[0].tau()
    }

    pub fn len(&self) -> usize {
        self.sources.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty sets
    }

    /// True when every source oscillates at exactly the same frequency.
    pub fn all_same_frequency(&self) -> bool {
        let f0 = self.sources[0].freq();
        self.sources.iter().all(|s| s.freq() == f0)
    }
}
