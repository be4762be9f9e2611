//! Particle creation from the quantum vacuum by a partially reflecting
//! δ–δ′ mirror in (1+1) dimensions.
//!
//! A point mirror with potential μ₀δ(x) + λ₀δ′(x) couples asymmetrically
//! to a massless scalar field: the δ′ term makes the two faces reflect
//! differently. Driving the mirror — by moving it, by modulating its
//! coupling μ(t), or both at once — converts vacuum fluctuations into
//! real particle pairs. This crate computes, in units c = ħ = 1:
//!
//! * the static scattering amplitudes and the first-order corrections
//!   from motion and coupling fluctuations ([`scattering`]);
//! * drive profiles and their Fourier transforms ([`drives`]);
//! * per-side spectral densities, by adaptive quadrature of the spectral
//!   trace and by monochromatic closed forms, including the interference
//!   between the two drive channels ([`spectrum`]);
//! * left-minus-right spectral differences, their resonance structure and
//!   double-slit-style relation ([`asymmetry`]);
//! * total created-particle numbers and the rate functions with their
//!   interference null at ξ ≈ 2.23 ([`rates`]);
//! * coherent enhancement from multiple fluctuation sources, up to the
//!   N² scaling of aligned sources ([`enhancement`]).
//!
//! Closed forms are validated against an independent quadrature path
//! throughout; [`quadrature`] provides the adaptive Gauss–Kronrod
//! integrator (with hint points for narrow Lorentzian peaks) and the
//! bracketed root finder those oracles rely on.
//!
//! The `casimir-spectra` binary exposes the library as CSV-emitting
//! subcommands for spectra, differences, rates, roots, enhancement scans
//! and parameter sweeps.

// Validation guards use negated comparisons on purpose: `!(x > 0.0)`
// rejects NaN where `x <= 0.0` would let it through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asymmetry;
pub mod cli;
pub mod drives;
pub mod enhancement;
pub mod quadrature;
pub mod rates;
pub mod scattering;
pub mod spectrum;

pub use asymmetry::DifferenceComponents;
pub use drives::{DampedCosineDrive, MultiSourceDrive};
pub use quadrature::IntegrationResult;
pub use rates::{RateBreakdown, RateMethod};
pub use scattering::{MirrorParams, ScatterMatrix, Side};
pub use spectrum::{MonoConfig, SpectrumComponents};
