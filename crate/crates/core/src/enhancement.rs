//! Multi-source coupling fluctuations on a stationary mirror.
//!
//! When several independent sources modulate the mirror's coupling at a
//! common frequency, their contributions interfere coherently and the
//! whole asymmetric spectrum scales with one effective squared amplitude
//!
//! ```text
//! ε(φ)² = Σᵢ εᵢ² + Σ_{i≠j} εᵢεⱼ·cos(φⱼ - φᵢ) = |Σᵢ εᵢ e^{iφᵢ}|²
//! ```
//!
//! N identical in-phase sources therefore enhance the spectral difference
//! by N²; an anti-aligned equal pair cancels it entirely, and sources a
//! quarter period apart add as plain intensities. Sources at different
//! frequencies do not interfere at all: their spectra simply add, each
//! with its own pair-creation cutoff.
//!
//! The mixed case (some frequencies shared, some not) is resolved by
//! grouping sources into equal-frequency clusters: coherent ε(φ)² within
//! a cluster, incoherent sums across clusters. That grouping is the only
//! extension consistent with linear response, where cross terms between
//! different frequencies average away exactly as in the two-source case.

use thiserror::Error;

use crate::drives::{DampedCosineDrive, MultiSourceDrive};
use crate::scattering::{MirrorParams, Side};
use crate::spectrum::upsilon;

#[derive(Debug, Error, PartialEq)]
pub enum EnhancementError {
    #[error(
        "sources oscillate at different frequencies ({got} vs {expected}), so no coherent \
         effective amplitude exists; sum the per-source spectra with off_resonance_spectrum \
         instead"
    )]
    UnequalFrequencies { expected: f64, got: f64 },
}

/// Effective squared amplitude of two coherent sources with relative
/// phase φ: ε₁² + ε₂² + 2ε₁ε₂·cos φ.
pub fn effective_eps_sq_two(eps1: f64, eps2: f64, phi: f64) -> f64 {
    eps1 * eps1 + eps2 * eps2 + 2.0 * eps1 * eps2 * phi.cos()
}

/// Σᵢεᵢ² + 2Σ_{i<j}εᵢεⱼcos(φⱼ-φᵢ) over a coherent group. Anti-aligned
/// pairs cancel exactly here (cos π = -1 in f64), which the equivalent
/// phasor-magnitude form does not quite achieve.
fn coherent_eps_sq(group: &[&DampedCosineDrive]) -> f64 {
    let mut total = 0.0;
    for (i, a) in group.iter().enumerate() {
        total += a.eps() * a.eps();
        for b in &group[i + 1..] {
            total += 2.0 * a.eps() * b.eps() * (b.phase() - a.phase()).cos();
        }
    }
    total
}

/// Effective squared amplitude of any number of equal-frequency sources.
///
/// Equals the phasor magnitude |Σᵢ εᵢ e^{iφᵢ}|², hence nonnegative up to
/// rounding. Errors when the sources do not share one frequency.
pub fn effective_eps_sq_n(sources: &MultiSourceDrive) -> Result<f64, EnhancementError> {
    let list = sources.sources();
    let f0 = list[0].freq();
    for s in list {
        if s.freq() != f0 {
            return Err(EnhancementError::UnequalFrequencies {
                expected: f0,
                got: s.freq(),
            });
        }
    }
    Ok(coherent_eps_sq(&list.iter().collect::<Vec<_>>()))
}

/// Single-source spectral difference kernel, per unit τ:
/// -(ε²/π)·μ₀²λ₀(1+λ₀²)·Υ(ω)Υ(ω₀-ω) inside the pair window.
fn single_source_delta(omega: f64, eps_sq: f64, omega0: f64, p: &MirrorParams) -> f64 {
    if omega <= 0.0 || omega >= omega0 {
        return 0.0;
    }
    let l = 1.0 + p.lambda0() * p.lambda0();
    -eps_sq / std::f64::consts::PI
        * p.mu0()
        * p.mu0()
        * p.lambda0()
        * l
        * upsilon(omega, p)
        * upsilon(omega0 - omega, p)
}

/// Coupling-channel spectral difference per unit τ for sources resonating
/// at the common frequency `omega0`: the single-source kernel scaled by
/// the coherent ε(φ)².
///
/// Errors if any source runs at a different frequency. The pairwise
/// cross-term route ([`enhanced_delta_n_mu_pairwise`]) reproduces this
/// value and is asserted against it in debug builds.
pub fn enhanced_delta_n_mu(
    omega: f64,
    sources: &MultiSourceDrive,
    p: &MirrorParams,
    omega0: f64,
) -> Result<f64, EnhancementError> {
    for s in sources.sources() {
        if s.freq() != omega0 {
            return Err(EnhancementError::UnequalFrequencies {
                expected: omega0,
                got: s.freq(),
            });
        }
    }
    let eps_sq = effective_eps_sq_n(sources)?;
    let value = single_source_delta(omega, eps_sq, omega0, p);
    debug_assert!(
        {
            let pairwise = enhanced_delta_n_mu_pairwise(omega, sources, p, omega0);
            (pairwise - value).abs() <= 1e-9 * value.abs().max(1e-12)
        },
        "effective-amplitude and pairwise routes disagree at omega = {omega}"
    );
    Ok(value)
}

/// The same resonant difference built the long way: per-source terms plus
/// sign-aware pairwise cross terms 2·sgn·√|ΔᵢΔⱼ|·cos(φⱼ-φᵢ).
///
/// All single-source differences share one sign at fixed λ₀, so the
/// square root is taken of |ΔᵢΔⱼ| and re-signed with that common sign,
/// which reproduces the effective-amplitude form exactly.
pub fn enhanced_delta_n_mu_pairwise(
    omega: f64,
    sources: &MultiSourceDrive,
    p: &MirrorParams,
    omega0: f64,
) -> f64 {
    let list = sources.sources();
    let singles: Vec<f64> = list
        .iter()
        .map(|s| single_source_delta(omega, s.eps() * s.eps(), omega0, p))
        .collect();
    let mut total: f64 = singles.iter().sum();
    let sign = -p.lambda0().signum();
    for i in 0..list.len() {
        for j in (i + 1)..list.len() {
            let cross = (singles[i] * singles[j]).abs().sqrt();
            total += 2.0 * sign * cross * (list[j].phase() - list[i].phase()).cos();
        }
    }
    total
}

/// Spectral difference per unit τ for an arbitrary source set, resolved
/// by equal-frequency clustering: coherent ε(φ)² within each cluster,
/// plain sums across clusters.
pub fn multi_source_delta_n_mu(omega: f64, sources: &MultiSourceDrive, p: &MirrorParams) -> f64 {
    let mut indexed: Vec<usize> = (0..sources.len()).collect();
    indexed.sort_by(|&a, &b| {
        sources.sources()[a]
            .freq()
            .total_cmp(&sources.sources()[b].freq())
    });

    let list = sources.sources();
    let mut total = 0.0;
    let mut start = 0;
    while start < indexed.len() {
        let freq = list[indexed[start]].freq();
        let mut end = start + 1;
        while end < indexed.len() && list[indexed[end]].freq() == freq {
            end += 1;
        }
        let cluster: Vec<&DampedCosineDrive> =
            indexed[start..end].iter().map(|&k| &list[k]).collect();
        total += single_source_delta(omega, coherent_eps_sq(&cluster), freq, p);
        start = end;
    }
    total
}

/// Per-side coupling spectrum (per unit τ) for an arbitrary source set,
/// with the same equal-frequency clustering as
/// [`multi_source_delta_n_mu`]: each cluster contributes its coherent
/// ε(φ)² times the per-side kernel, clusters add incoherently. Reduces to
/// [`off_resonance_spectrum`] when every frequency is distinct.
pub fn multi_source_spectrum(
    omega: f64,
    side: Side,
    sources: &MultiSourceDrive,
    p: &MirrorParams,
) -> f64 {
    let list = sources.sources();
    let mut indexed: Vec<usize> = (0..list.len()).collect();
    indexed.sort_by(|&a, &b| list[a].freq().total_cmp(&list[b].freq()));

    let l = 1.0 + p.lambda0() * p.lambda0();
    let asym = 1.0 + side.sign() * p.lambda0();
    let mut total = 0.0;
    let mut start = 0;
    while start < indexed.len() {
        let freq = list[indexed[start]].freq();
        let mut end = start + 1;
        while end < indexed.len() && list[indexed[end]].freq() == freq {
            end += 1;
        }
        if omega > 0.0 && omega < freq {
            let cluster: Vec<&DampedCosineDrive> =
                indexed[start..end].iter().map(|&k| &list[k]).collect();
            total += coherent_eps_sq(&cluster) * p.mu0() * p.mu0()
                / (4.0 * std::f64::consts::PI)
                * asym
                * asym
                * l
                * upsilon(omega, p)
                * upsilon(freq - omega, p);
        }
        start = end;
    }
    total
}

/// Per-side coupling spectrum (per unit τ) of independently oscillating
/// sources: the plain sum of single-source spectra, each cut off at its
/// own frequency. Valid when the frequencies differ; equal-frequency sets
/// interfere and belong to [`enhanced_delta_n_mu`].
pub fn off_resonance_spectrum(
    omega: f64,
    side: Side,
    sources: &MultiSourceDrive,
    p: &MirrorParams,
) -> f64 {
    let l = 1.0 + p.lambda0() * p.lambda0();
    let asym = 1.0 + side.sign() * p.lambda0();
    let mut total = 0.0;
    for s in sources.sources() {
        if omega <= 0.0 || omega >= s.freq() {
            continue;
        }
        total += s.eps() * s.eps() * p.mu0() * p.mu0() / (4.0 * std::f64::consts::PI)
            * asym
            * asym
            * l
            * upsilon(omega, p)
            * upsilon(s.freq() - omega, p);
    }
    total
}
