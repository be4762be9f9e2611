//! Spectral distributions of created particles, per side and per source.
//!
//! Two independent particle-creation channels act at first order: the
//! mirror's motion (the q channel) and its fluctuating coupling (the μ
//! channel). Their cross term is a genuine interference contribution that
//! can add or subtract depending on the relative phase φ of the drives.
//!
//! Two evaluation paths are provided and tested against each other:
//!
//! * [`n_general`] integrates the spectral trace
//!   N(ω) = (1/2π) ∫₀^∞ (dω′/2π) (ω/ω′) Tr[δS(ω,-ω′) δS†(ω,-ω′)]
//!   with δS = δS_q + δS_μ for arbitrary damped-cosine drives. The row of
//!   δS selects the side: row one is the right half (x > 0), row two the
//!   left half. Squaring a row splits the spectrum into |q|², |μ|² and
//!   twice the real cross term.
//! * `n_*_mono` evaluate the closed forms obtained in the monochromatic
//!   limit ω₀τ ≫ 1 at common drive frequency ω₀, reported per unit τ.
//!
//! Monochromatic densities vanish for ω ≥ ω₀ and are symmetric under
//! ω → ω₀ - ω: particles appear in pairs whose frequencies sum to ω₀.
//! All channel formulas share the kernel Υ(ω) = ω/[μ₀² + ω²(1+λ₀²)²].
//!
//! Sign conventions per side follow the matrix-row attribution: the μ
//! channel and the interference carry (1 ± λ₀)² with + for the right
//! side, while the motion channel carries (1 ∓ λ₀)² inside its real part
//! (− for the right side). The general path arbitrates these labels: the
//! row-resolved trace reproduces each closed form as written.

use num_complex::Complex64;
use thiserror::Error;

use crate::drives::DampedCosineDrive;
use crate::quadrature::{integrate, integrate_with_hints, QuadratureError};
use crate::scattering::{delta_s_mu, delta_s_q, MirrorParams, Side};

#[derive(Debug, Error)]
pub enum SpectrumError {
    #[error("{field} must be {requirement}, got {value}")]
    InvalidConfig {
        field: &'static str,
        requirement: &'static str,
        value: f64,
    },
    #[error("drives must share one oscillation time, got {tau_f} and {tau_g}")]
    MismatchedTau { tau_f: f64, tau_g: f64 },
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}

/// Configuration of the monochromatic limit: both drives at one common
/// frequency ω₀, with relative phase φ, amplitude ε and effective time τ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonoConfig {
    params: MirrorParams,
    omega0: f64,
    phi: f64,
    eps: f64,
    tau: f64,
}

impl MonoConfig {
    pub fn new(
        params: MirrorParams,
        omega0: f64,
        phi: f64,
        eps: f64,
        tau: f64,
    ) -> Result<Self, SpectrumError> {
        if !(omega0 > 0.0) || !omega0.is_finite() {
            return Err(SpectrumError::InvalidConfig {
                field: "omega0",
                requirement: "positive and finite",
                value: omega0,
            });
        }
        if !phi.is_finite() {
            return Err(SpectrumError::InvalidConfig {
                field: "phi",
                requirement: "finite",
                value: phi,
            });
        }
        if !(eps >= 0.0) || !eps.is_finite() {
            return Err(SpectrumError::InvalidConfig {
                field: "eps",
                requirement: "nonnegative and finite",
                value: eps,
            });
        }
        if !(tau > 0.0) || !tau.is_finite() {
            return Err(SpectrumError::InvalidConfig {
                field: "tau",
                requirement: "positive and finite",
                value: tau,
            });
        }
        Ok(Self {
            params,
            omega0,
            phi,
            eps,
            tau,
        })
    }

    pub fn params(&self) -> &MirrorParams {
        &self.params
    }

    pub fn omega0(&self) -> f64 {
        self.omega0
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }
}

/// Per-frequency, per-side decomposition of the created-particle density.
///
/// Monochromatic operations fill this with densities per unit τ; the
/// general path stores raw (un-divided) densities. The conversion is the
/// caller's, and deliberately explicit, to keep factors of τ visible.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumComponents {
    pub omega: f64,
    pub side: Side,
    /// Motion-channel density.
    pub n_q: f64,
    /// Coupling-fluctuation density.
    pub n_mu: f64,
    /// Interference between the two channels; may have either sign.
    pub n_int: f64,
    /// Exact sum of the three components as stored.
    pub n_total: f64,
}

/// The spectral kernel Υ(ω) = ω / [μ₀² + ω²(1+λ₀²)²].
///
/// Nonnegative for ω ≥ 0, with its maximum at ω = μ₀/(1+λ₀²).
pub fn upsilon(omega: f64, p: &MirrorParams) -> f64 {
    let l = p.lambda_sq_plus_one();
    omega / (p.mu0() * p.mu0() + omega * omega * l * l)
}

/// Pair-creation window: zero outside the open interval (0, ω₀). The
/// boundary itself maps to zero, which is also the continuous limit of
/// every monochromatic density.
fn in_pair_window(omega: f64, omega0: f64) -> bool {
    omega > 0.0 && omega < omega0
}

/// Monochromatic motion-channel density per unit τ.
pub fn n_q_mono(omega: f64, side: Side, cfg: &MonoConfig) -> f64 {
    if !in_pair_window(omega, cfg.omega0()) {
        return 0.0;
    }
    let p = cfg.params();
    let mu0 = p.mu0();
    let lambda0 = p.lambda0();
    let partner = cfg.omega0() - omega;
    // The motion channel couples to the side through (1 ∓ λ₀)².
    let asym = 1.0 - side.sign() * lambda0;
    let numerator = Complex64::new(
        8.0 * lambda0 * lambda0 * omega * partner - 2.0 * mu0 * mu0,
        mu0 * asym * asym * cfg.omega0(),
    );
    let denominator = p.denominator(omega) * p.denominator(partner);
    let eps = cfg.eps();
    eps * eps / (4.0 * std::f64::consts::PI)
        * omega
        * partner
        * (numerator / denominator).re
}

/// Monochromatic coupling-fluctuation density per unit τ.
pub fn n_mu_mono(omega: f64, side: Side, cfg: &MonoConfig) -> f64 {
    if !in_pair_window(omega, cfg.omega0()) {
        return 0.0;
    }
    let p = cfg.params();
    let mu0 = p.mu0();
    let asym = 1.0 + side.sign() * p.lambda0();
    let l = 1.0 + p.lambda0() * p.lambda0();
    let eps = cfg.eps();
    eps * eps * mu0 * mu0 / (4.0 * std::f64::consts::PI)
        * asym
        * asym
        * l
        * upsilon(omega, p)
        * upsilon(cfg.omega0() - omega, p)
}

/// Monochromatic interference density per unit τ; proportional to cos φ
/// and zero whenever the drives run at different frequencies.
pub fn n_int_mono(omega: f64, side: Side, cfg: &MonoConfig) -> f64 {
    if !in_pair_window(omega, cfg.omega0()) {
        return 0.0;
    }
    let p = cfg.params();
    let mu0 = p.mu0();
    let lambda0 = p.lambda0();
    let l = 1.0 + lambda0 * lambda0;
    let partner = cfg.omega0() - omega;
    let asym = 1.0 + side.sign() * lambda0;
    let bracket = side.sign() * mu0 * mu0 - 2.0 * lambda0 * l * omega * partner;
    let eps = cfg.eps();
    eps * eps * mu0 / (2.0 * std::f64::consts::PI)
        * asym
        * asym
        * bracket
        * upsilon(omega, p)
        * upsilon(partner, p)
        * cfg.phi().cos()
}

/// Frequencies where the right-side interference density changes sign:
/// 2ω± = ω₀ ± √(ω₀² - 2μ₀²/(λ₀(1+λ₀²))), symmetric about ω₀/2.
///
/// Real roots exist only for λ₀(1+λ₀²)ω₀² > 2μ₀²; otherwise the
/// interference keeps one sign across the whole window and `None` is
/// returned. The left side never flips sign.
pub fn interference_roots(cfg: &MonoConfig) -> Option<(f64, f64)> {
    let p = cfg.params();
    let lambda0 = p.lambda0();
    if lambda0 <= 0.0 {
        return None;
    }
    let l = 1.0 + lambda0 * lambda0;
    let w0 = cfg.omega0();
    let disc = w0 * w0 - 2.0 * p.mu0() * p.mu0() / (lambda0 * l);
    if disc <= 0.0 {
        return None;
    }
    let root = disc.sqrt();
    Some(((w0 - root) / 2.0, (w0 + root) / 2.0))
}

/// Bundle the three monochromatic densities and their sum.
pub fn spectrum_components(omega: f64, side: Side, cfg: &MonoConfig) -> SpectrumComponents {
    let n_q = n_q_mono(omega, side, cfg);
    let n_mu = n_mu_mono(omega, side, cfg);
    let n_int = n_int_mono(omega, side, cfg);
    SpectrumComponents {
        omega,
        side,
        n_q,
        n_mu,
        n_int,
        n_total: n_q + n_mu + n_int,
    }
}

/// General-path spectral density for one side at frequency ω, by adaptive
/// quadrature of the row-resolved trace integral. Densities are raw, not
/// divided by τ.
///
/// `drive_f` drives the coupling fluctuation (the μ channel), `drive_g`
/// the mirror motion (the q channel); they must share τ but may have
/// distinct frequencies, phases and amplitudes. The ω′ integrand carries
/// Lorentzian peaks of width 1/τ where ω + ω′ hits a drive frequency;
/// their locations are passed to the integrator as hint points.
pub fn n_general(
    omega: f64,
    side: Side,
    drive_f: &DampedCosineDrive,
    drive_g: &DampedCosineDrive,
    p: &MirrorParams,
    tol: f64,
) -> Result<SpectrumComponents, SpectrumError> {
    if drive_f.tau() != drive_g.tau() {
        return Err(SpectrumError::MismatchedTau {
            tau_f: drive_f.tau(),
            tau_g: drive_g.tau(),
        });
    }
    if omega <= 0.0 {
        return Ok(SpectrumComponents {
            omega,
            side,
            n_q: 0.0,
            n_mu: 0.0,
            n_int: 0.0,
            n_total: 0.0,
        });
    }

    let tau = drive_f.tau();
    let q_row = move |wp: f64| -> [Complex64; 2] {
        delta_s_q(omega, -wp, drive_g.fourier(omega + wp), drive_g.eps(), p).side_row(side)
    };
    let mu_row = move |wp: f64| -> [Complex64; 2] {
        delta_s_mu(omega, -wp, drive_f.fourier(omega + wp), drive_f.eps(), p).side_row(side)
    };

    let integrand_q = move |wp: f64| {
        let row = q_row(wp);
        omega / wp * (row[0].norm_sqr() + row[1].norm_sqr())
    };
    let integrand_mu = move |wp: f64| {
        let row = mu_row(wp);
        omega / wp * (row[0].norm_sqr() + row[1].norm_sqr())
    };
    let integrand_cross = move |wp: f64| {
        let q = q_row(wp);
        let m = mu_row(wp);
        omega / wp * 2.0 * (q[0] * m[0].conj() + q[1] * m[1].conj()).re
    };

    let cut = omega + drive_f.freq().max(drive_g.freq()) + 50.0 / tau;
    let hints: Vec<f64> = [
        drive_f.freq() - omega,
        drive_g.freq() - omega,
        drive_f.freq() + omega,
        drive_g.freq() + omega,
    ]
    .into_iter()
    .filter(|h| *h > 0.0 && *h < cut)
    .collect();

    let norm = 1.0 / (4.0 * std::f64::consts::PI * std::f64::consts::PI);
    let evaluate = |f: &dyn Fn(f64) -> f64| -> Result<f64, SpectrumError> {
        let body = integrate_with_hints(f, 0.0, cut, &hints, tol)?;
        let tail = integrate(f, cut, f64::INFINITY, tol)?;
        Ok((body.value + tail.value) * norm)
    };

    let n_q = evaluate(&integrand_q)?;
    let n_mu = evaluate(&integrand_mu)?;
    let n_int = evaluate(&integrand_cross)?;
    Ok(SpectrumComponents {
        omega,
        side,
        n_q,
        n_mu,
        n_int,
        n_total: n_q + n_mu + n_int,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scattering::s0_matrix;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn params(mu0: f64, lambda0: f64) -> MirrorParams {
        MirrorParams::new(mu0, lambda0).unwrap()
    }

    fn cfg(mu0: f64, lambda0: f64, omega0: f64, phi: f64) -> MonoConfig {
        MonoConfig::new(params(mu0, lambda0), omega0, phi, 1.0, 1.0).unwrap()
    }

    #[test]
    fn upsilon_values() {
        let p = params(1.0, 0.0);
        assert_eq!(upsilon(0.0, &p), 0.0);
        assert!((upsilon(1.0, &p) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn upsilon_peaks_at_mu0_over_lambda_factor() {
        // Calculus oracle: maximum at ω = μ₀/(1+λ₀²); confirm by grid scan.
        for (mu0, lambda0) in [(1.0, 0.0), (2.0, 1.0), (0.5, 2.0)] {
            let p = params(mu0, lambda0);
            let expected = mu0 / (1.0 + lambda0 * lambda0);
            let mut best = (0.0, f64::MIN);
            let n = 100_000;
            for i in 1..n {
                let w = 5.0 * expected * i as f64 / n as f64;
                let v = upsilon(w, &p);
                if v > best.1 {
                    best = (w, v);
                }
            }
            let step = 5.0 * expected / n as f64;
            assert!(
                (best.0 - expected).abs() <= step,
                "peak at {} vs {expected}",
                best.0
            );
        }
    }

    #[test]
    fn mono_densities_vanish_outside_window() {
        let c = cfg(1.0, 1.0, 1.0, 0.0);
        for side in Side::BOTH {
            for &w in &[-0.5, 0.0, 1.0, 1.5, 7.0] {
                assert_eq!(n_q_mono(w, side, &c), 0.0);
                assert_eq!(n_mu_mono(w, side, &c), 0.0);
                assert_eq!(n_int_mono(w, side, &c), 0.0);
            }
        }
    }

    #[test]
    fn n_mu_hand_value() {
        // ω = ω₀/2 = 1, μ₀ = 1, λ₀ = 0: Υ(1) = 1/2 on both factors gives
        // ε²/(16π) on either side.
        let c = cfg(1.0, 0.0, 2.0, 0.0);
        let expected = 1.0 / (16.0 * PI);
        for side in Side::BOTH {
            assert!((n_mu_mono(1.0, side, &c) - expected).abs() < 1e-15);
        }
    }

    #[test]
    fn mu_channel_symmetric_mirror_is_side_blind() {
        let c = cfg(1.3, 0.0, 1.7, 0.0);
        for i in 1..40 {
            let w = 1.7 * i as f64 / 40.0;
            assert_eq!(n_mu_mono(w, Side::Left, &c), n_mu_mono(w, Side::Right, &c));
        }
    }

    #[test]
    fn pair_symmetry_of_all_components() {
        let c = cfg(1.0, 1.0, 2.0, 0.7);
        for i in 1..50 {
            let w = 2.0 * i as f64 / 50.0;
            let partner = 2.0 - w;
            for side in Side::BOTH {
                assert!((n_q_mono(w, side, &c) - n_q_mono(partner, side, &c)).abs() < 1e-12);
                assert!((n_mu_mono(w, side, &c) - n_mu_mono(partner, side, &c)).abs() < 1e-12);
                assert!((n_int_mono(w, side, &c) - n_int_mono(partner, side, &c)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn interference_dies_at_quarter_phase() {
        let c = cfg(1.0, 1.0, 2.0, FRAC_PI_2);
        for i in 1..20 {
            let w = 2.0 * i as f64 / 20.0;
            for side in Side::BOTH {
                assert!(n_int_mono(w, side, &c).abs() < 1e-16);
            }
        }
    }

    #[test]
    fn left_interference_keeps_one_sign() {
        for &lambda0 in &[0.5, 1.0, 2.0] {
            let c = cfg(1.0, lambda0, 2.0, 0.0);
            let mut pos = false;
            let mut neg = false;
            for i in 1..400 {
                let w = 2.0 * i as f64 / 400.0;
                let v = n_int_mono(w, Side::Left, &c);
                pos |= v > 0.0;
                neg |= v < 0.0;
            }
            assert!(!(pos && neg), "left side changed sign at lambda0={lambda0}");
        }
    }

    #[test]
    fn right_interference_vanishes_at_roots() {
        let c = cfg(1.0, 1.0, 2.0, 0.0);
        let (lo, hi) = interference_roots(&c).unwrap();
        assert!((lo - (2.0 - 3.0_f64.sqrt()) / 2.0).abs() < 1e-14);
        assert!((hi - (2.0 + 3.0_f64.sqrt()) / 2.0).abs() < 1e-14);
        assert!(n_int_mono(lo, Side::Right, &c).abs() < 1e-10);
        assert!(n_int_mono(hi, Side::Right, &c).abs() < 1e-10);
    }

    #[test]
    fn right_interference_sign_regions() {
        // Right side, cos φ > 0: positive outside the root window,
        // negative inside it; flipped for cos φ < 0.
        for &(phi, flip) in &[(0.0, 1.0), (3.0 * PI / 4.0, -1.0)] {
            let c = cfg(1.0, 1.0, 2.0, phi);
            let (lo, hi) = interference_roots(&c).unwrap();
            for i in 1..300 {
                let w = 2.0 * i as f64 / 300.0;
                let v = flip * n_int_mono(w, Side::Right, &c);
                if w < lo - 1e-9 || w > hi + 1e-9 {
                    assert!(v > 0.0, "expected constructive at {w}");
                } else if w > lo + 1e-9 && w < hi - 1e-9 {
                    assert!(v < 0.0, "expected destructive at {w}");
                }
            }
        }
    }

    #[test]
    fn no_roots_in_single_sign_regime() {
        // λ₀(1+λ₀²)ω₀² < 2μ₀² keeps the right-side sign constant.
        let c = cfg(2.0, 0.5, 1.0, 0.0);
        assert_eq!(interference_roots(&c), None);
        let c = cfg(1.0, 0.0, 5.0, 0.0);
        assert_eq!(interference_roots(&c), None);
    }

    #[test]
    fn components_sum_exactly() {
        let c = cfg(0.7, 1.5, 2.5, 1.0);
        for i in 1..30 {
            let w = 2.5 * i as f64 / 30.0;
            for side in Side::BOTH {
                let s = spectrum_components(w, side, &c);
                assert_eq!(s.n_total, s.n_q + s.n_mu + s.n_int);
            }
        }
    }

    #[test]
    fn per_side_totals_nonnegative_on_grid() {
        for &mu0 in &[0.5, 1.0, 2.0] {
            for &lambda0 in &[0.0, 0.5, 1.0, 2.0] {
                for &omega0 in &[0.5, 1.0, 2.0, 5.0] {
                    for &phi in &[0.0, PI / 4.0, FRAC_PI_2, 3.0 * PI / 4.0, PI] {
                        let c = cfg(mu0, lambda0, omega0, phi);
                        for i in 1..20 {
                            let w = omega0 * i as f64 / 20.0;
                            for side in Side::BOTH {
                                let s = spectrum_components(w, side, &c);
                                assert!(
                                    s.n_total >= -1e-12,
                                    "negative total {} at mu0={mu0} lambda0={lambda0} \
                                     omega0={omega0} phi={phi} w={w} side={side}",
                                    s.n_total
                                );
                                assert!(s.n_q >= -1e-12);
                                assert!(s.n_mu >= 0.0);
                            }
                        }
                    }
                }
            }
        }
    }

    // Integrand-level checks of the row-resolved trace against the
    // closed general integrands, evaluated at a sample (ω, ω′) with the
    // Fourier factors set to one.
    #[test]
    fn trace_row_reproduces_motion_integrand() {
        let p = params(1.0, 1.0);
        let (w, wp) = (1.0, 0.5);
        let one = Complex64::new(1.0, 0.0);
        for side in Side::BOTH {
            let row = delta_s_q(w, -wp, one, 1.0, &p).side_row(side);
            let lhs = w / wp * (row[0].norm_sqr() + row[1].norm_sqr());
            let asym = 1.0 - side.sign() * p.lambda0();
            let numerator = Complex64::new(
                8.0 * p.lambda0() * p.lambda0() * w * wp - 2.0 * p.mu0() * p.mu0(),
                p.mu0() * asym * asym * (w + wp),
            );
            let den = p.denominator(w) * p.denominator(wp);
            let rhs = 2.0 * w * wp * (numerator / den).re;
            assert!(
                (lhs - rhs).abs() < 1e-13 * rhs.abs().max(1.0),
                "side {side}: trace row {lhs} vs closed integrand {rhs}"
            );
        }
    }

    #[test]
    fn trace_rows_reproduce_mu_and_cross_integrands() {
        let p = params(1.0, 1.0);
        let (w, wp) = (1.0, 0.5);
        let one = Complex64::new(1.0, 0.0);
        let l = 1.0 + p.lambda0() * p.lambda0();
        for side in Side::BOTH {
            let asym = 1.0 + side.sign() * p.lambda0();
            // μ channel: (ω/ω′)·|μ row|² = 2μ₀²(1±λ₀)²(1+λ₀²)·Υ(ω)Υ(ω′).
            let mu_row = delta_s_mu(w, -wp, one, 1.0, &p).side_row(side);
            let lhs_spectral = w / wp * (mu_row[0].norm_sqr() + mu_row[1].norm_sqr());
            let rhs_spectral =
                2.0 * p.mu0() * p.mu0() * asym * asym * l * upsilon(w, &p) * upsilon(wp, &p);
            assert!(
                (lhs_spectral - rhs_spectral).abs() < 1e-13 * rhs_spectral.abs().max(1.0),
                "mu channel side {side}: {lhs_spectral} vs {rhs_spectral}"
            );

            // Cross term: (ω/ω′)·2Re⟨q,μ⟩ = 4μ₀(1±λ₀)²[±μ₀² - 2λ₀Lωω′]Υ(ω)Υ(ω′).
            let q_row = delta_s_q(w, -wp, one, 1.0, &p).side_row(side);
            let lhs_cross =
                w / wp * 2.0 * (q_row[0] * mu_row[0].conj() + q_row[1] * mu_row[1].conj()).re;
            let bracket = side.sign() * p.mu0() * p.mu0() - 2.0 * p.lambda0() * l * w * wp;
            let rhs_cross =
                4.0 * p.mu0() * asym * asym * bracket * upsilon(w, &p) * upsilon(wp, &p);
            assert!(
                (lhs_cross - rhs_cross).abs() < 1e-13 * rhs_cross.abs().max(1.0),
                "cross term side {side}: {lhs_cross} vs {rhs_cross}"
            );
        }
    }

    #[test]
    fn general_matches_mono_at_long_tau() {
        // One interior point per component; the acceptance suite sweeps a
        // full grid. ω₀τ = 10³.
        let p = params(1.0, 1.0);
        let tau = 1e3;
        let eps = 1e-3;
        let f = DampedCosineDrive::new(eps, 1.0, 0.0, tau).unwrap();
        let g = DampedCosineDrive::new(eps, 1.0, 0.0, tau).unwrap();
        let c = MonoConfig::new(p, 1.0, 0.0, eps, tau).unwrap();
        let w = 0.3;
        for side in Side::BOTH {
            let gen = n_general(w, side, &f, &g, &p, 1e-7).unwrap();
            let mono = spectrum_components(w, side, &c);
            for (label, got, want) in [
                ("q", gen.n_q / tau, mono.n_q),
                ("mu", gen.n_mu / tau, mono.n_mu),
                ("int", gen.n_int / tau, mono.n_int),
            ] {
                assert!(
                    (got - want).abs() <= 0.02 * want.abs().max(1e-12),
                    "{label} channel side {side}: general {got} vs mono {want}"
                );
            }
        }
    }

    #[test]
    fn general_interference_vanishes_off_resonance() {
        let p = params(1.0, 1.0);
        let tau = 1e3;
        let f = DampedCosineDrive::new(1e-3, 1.0, 0.0, tau).unwrap();
        let g = DampedCosineDrive::new(1e-3, 2.0, 0.0, tau).unwrap();
        let s = n_general(0.4, Side::Right, &f, &g, &p, 1e-7).unwrap();
        assert!(
            s.n_int.abs() <= 0.01 * (s.n_q + s.n_mu),
            "interference {} vs independent {}",
            s.n_int,
            s.n_q + s.n_mu
        );
    }

    #[test]
    fn general_mu_side_blind_for_symmetric_mirror() {
        let p = params(1.0, 0.0);
        let tau = 200.0;
        let f = DampedCosineDrive::new(1e-3, 1.0, 0.0, tau).unwrap();
        let g = DampedCosineDrive::new(1e-3, 1.0, 0.0, tau).unwrap();
        let left = n_general(0.45, Side::Left, &f, &g, &p, 1e-8).unwrap();
        let right = n_general(0.45, Side::Right, &f, &g, &p, 1e-8).unwrap();
        assert!(
            (left.n_mu - right.n_mu).abs() <= 1e-6 * right.n_mu.abs(),
            "left {} right {}",
            left.n_mu,
            right.n_mu
        );
    }

    #[test]
    fn general_cross_term_flips_with_phase() {
        // φ → φ + π flips the interference exactly, leaving q and μ alone.
        let p = params(1.0, 0.5);
        let tau = 100.0;
        let f = DampedCosineDrive::new(1e-3, 1.0, 0.0, tau).unwrap();
        let g0 = DampedCosineDrive::new(1e-3, 1.0, 0.3, tau).unwrap();
        let g1 = DampedCosineDrive::new(1e-3, 1.0, 0.3 + PI, tau).unwrap();
        let a = n_general(0.5, Side::Right, &f, &g0, &p, 1e-8).unwrap();
        let b = n_general(0.5, Side::Right, &f, &g1, &p, 1e-8).unwrap();
        assert!((a.n_q - b.n_q).abs() <= 1e-9 * a.n_q.abs());
        assert!((a.n_mu - b.n_mu).abs() <= 1e-9 * a.n_mu.abs());
        assert!(
            (a.n_int + b.n_int).abs() <= 1e-6 * a.n_int.abs().max(1e-18),
            "cross terms {} and {} are not opposite",
            a.n_int,
            b.n_int
        );
    }

    #[test]
    fn general_rejects_mismatched_tau() {
        let p = params(1.0, 0.0);
        let f = DampedCosineDrive::new(1e-3, 1.0, 0.0, 10.0).unwrap();
        let g = DampedCosineDrive::new(1e-3, 1.0, 0.0, 20.0).unwrap();
        assert!(matches!(
            n_general(0.5, Side::Left, &f, &g, &p, 1e-6),
            Err(SpectrumError::MismatchedTau { .. })
        ));
    }

    #[test]
    fn config_validation() {
        let p = params(1.0, 0.0);
        assert!(MonoConfig::new(p, 0.0, 0.0, 0.1, 1.0).is_err());
        assert!(MonoConfig::new(p, 1.0, f64::NAN, 0.1, 1.0).is_err());
        assert!(MonoConfig::new(p, 1.0, 0.0, -0.1, 1.0).is_err());
        assert!(MonoConfig::new(p, 1.0, 0.0, 0.1, 0.0).is_err());
    }

    #[test]
    fn static_matrix_row_attribution_is_consistent() {
        // The side enum indexes rows of the static matrix too.
        let p = params(1.0, 0.7);
        let m = s0_matrix(0.8, &p);
        assert_eq!(m.side_row(Side::Right)[1], m.entry(0, 1));
        assert_eq!(m.side_row(Side::Left)[0], m.entry(1, 0));
    }

    proptest! {
        #[test]
        fn pair_symmetry_property(
            mu0 in 0.3_f64..3.0,
            lambda0 in 0.0_f64..2.0,
            omega0 in 0.3_f64..4.0,
            phi in 0.0_f64..(2.0 * PI),
            frac in 0.01_f64..0.99,
        ) {
            let c = MonoConfig::new(params(mu0, lambda0), omega0, phi, 1.0, 1.0).unwrap();
            let w = frac * omega0;
            let partner = omega0 - w;
            for side in Side::BOTH {
                let a = spectrum_components(w, side, &c);
                let b = spectrum_components(partner, side, &c);
                prop_assert!((a.n_q - b.n_q).abs() < 1e-12);
                prop_assert!((a.n_mu - b.n_mu).abs() < 1e-12);
                prop_assert!((a.n_int - b.n_int).abs() < 1e-12);
            }
        }
    }
}
