//! Complex scattering coefficients and S-matrices of the δ–δ′ mirror.
//!
//! A point mirror at x = 0 with potential μ₀δ(x) + λ₀δ′(x) scatters the
//! (1+1)D massless scalar field. In units c = ħ = 1 the frequency-domain
//! reflection and transmission amplitudes are
//!
//! ```text
//! r±(ω) = (-iμ₀ ± 2ωλ₀) / (iμ₀ + ω(1+λ₀²))
//! s(ω)  =  ω(1-λ₀²)     / (iμ₀ + ω(1+λ₀²))
//! ```
//!
//! with the static S-matrix laid out as (s₊, r₊ / r₋, s₋): row one maps
//! onto the right-moving outgoing amplitude (region x > 0), row two onto
//! the left-moving one (x < 0). All spectra downstream reference this row
//! convention.
//!
//! Two first-order corrections enter at linear order in a small drive
//! amplitude ε: `delta_s_q` for rigid mirror motion and `delta_s_mu` for a
//! fluctuating coupling μ(t) = μ₀[1 + εf(t)]. Both take the relevant
//! Fourier-transform value as an argument rather than a drive object, so
//! the same matrices serve the general quadrature path and the
//! monochromatic closed forms.
//!
//! The formulas are evaluated as written for any real ω, including ω < 0;
//! spectra only ever probe the combinations appearing in the spectral
//! trace integral, which fixes the convention observably. At ω = 0 the
//! amplitudes reduce to the analytic limit r± = -1, s = 0 (for μ₀ > 0),
//! so no singular case exists.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ScatteringError {
    #[error("mu0 must be positive and finite, got {mu0}")]
    InvalidMu0 { mu0: f64 },
    #[error("lambda0 must be finite, got {lambda0}")]
    InvalidLambda0 { lambda0: f64 },
}

/// Static mirror constants: the plasma-frequency-like scale μ₀ (inverse
/// length) and the dimensionless asymmetry factor λ₀.
///
/// μ₀ > 0 is required. The fluctuating-coupling analysis additionally
/// assumes μ₀ ≥ 1; values below that are accepted (see
/// [`MirrorParams::in_fluctuation_regime`]) since the static scattering
/// problem is well posed for any positive μ₀. |λ₀| = 1 makes the mirror
/// perfectly reflecting: transmission vanishes identically.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MirrorParams {
    mu0: f64,
    lambda0: f64,
}

impl MirrorParams {
    pub fn new(mu0: f64, lambda0: f64) -> Result<Self, ScatteringError> {
        if !(mu0 > 0.0) || !mu0.is_finite() {
            return Err(ScatteringError::InvalidMu0 { mu0 });
        }
        if !lambda0.is_finite() {
            return Err(ScatteringError::InvalidLambda0 { lambda0 });
        }
        Ok(Self { mu0, lambda0 })
    }

    pub fn mu0(&self) -> f64 {
        self.mu0
    }

    pub fn lambda0(&self) -> f64 {
        self.lambda0
    }

    /// Whether μ₀ satisfies the μ₀ ≥ 1 assumption used when the coupling
    /// fluctuates in time. Construction does not reject smaller values.
    pub fn in_fluctuation_regime(&self) -> bool {
        self.mu0 >= 1.0
    }

    /// 1 + λ₀², the combination entering every denominator.
    pub(crate) fn lambda_sq_plus_one(&self) -> f64 {
        1.0 + self.lambda0 * self.lambda0
    }

    /// iμ₀ + ω(1+λ₀²), nonzero for all real ω when μ₀ > 0.
    pub(crate) fn denominator(&self, omega: f64) -> Complex64 {
        Complex64::new(omega * self.lambda_sq_plus_one(), self.mu0)
    }
}

/// Which half of space an outgoing particle occupies.
///
/// `Right` is the x > 0 region (the + label, first matrix row), `Left`
/// the x < 0 region (the − label, second row).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Right,
    Left,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Right, Side::Left];

    /// +1 for `Right`, -1 for `Left`: the ± of the side label.
    pub fn sign(self) -> f64 {
        match self {
            Side::Right => 1.0,
            Side::Left => -1.0,
        }
    }

    /// Matrix row carrying this side's outgoing amplitude.
    pub fn row(self) -> usize {
        match self {
            Side::Right => 0,
            Side::Left => 1,
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Right => write!(f, "right"),
            Side::Left => write!(f, "left"),
        }
    }
}

/// 2×2 complex scattering matrix in the (s₊, r₊ / r₋, s₋) layout.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatterMatrix {
    entries: [[Complex64; 2]; 2],
}

impl ScatterMatrix {
    pub fn new(entries: [[Complex64; 2]; 2]) -> Self {
        Self { entries }
    }

    pub fn zero() -> Self {
        Self {
            entries: [[Complex64::new(0.0, 0.0); 2]; 2],
        }
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row][col]
    }

    /// The row attributed to `side` (Right ↔ row 0, Left ↔ row 1).
    pub fn side_row(&self, side: Side) -> [Complex64; 2] {
        self.entries[side.row()]
    }

    pub fn det(&self) -> Complex64 {
        self.entries[0][0] * self.entries[1][1] - self.entries[0][1] * self.entries[1][0]
    }

    /// |m00|² + |m01|² of the given side's row; equals 1 for the static
    /// matrix at real ω (flux conservation).
    pub fn row_norm_sqr(&self, side: Side) -> f64 {
        let row = self.side_row(side);
        row[0].norm_sqr() + row[1].norm_sqr()
    }

    fn scaled(&self, z: Complex64) -> Self {
        let mut out = *self;
        for row in &mut out.entries {
            for e in row {
                *e *= z;
            }
        }
        out
    }
}

/// Reflection amplitude r₊ (Right) or r₋ (Left) at frequency ω.
pub fn reflection(omega: f64, side: Side, p: &MirrorParams) -> Complex64 {
    let numerator = Complex64::new(2.0 * omega * p.lambda0() * side.sign(), -p.mu0());
    numerator / p.denominator(omega)
}

/// Transmission amplitude; identical on both sides of the mirror.
pub fn transmission(omega: f64, p: &MirrorParams) -> Complex64 {
    let numerator = Complex64::new(omega * (1.0 - p.lambda0() * p.lambda0()), 0.0);
    numerator / p.denominator(omega)
}

/// The static S-matrix (s₊, r₊ / r₋, s₋) at frequency ω.
pub fn s0_matrix(omega: f64, p: &MirrorParams) -> ScatterMatrix {
    let s = transmission(omega, p);
    let r_plus = reflection(omega, Side::Right, p);
    let r_minus = reflection(omega, Side::Left, p);
    ScatterMatrix::new([[s, r_plus], [r_minus, s]])
}

/// First-order S-matrix correction from rigid mirror motion:
/// iεω′·𝒢(ω-ω′)·[S₀(ω)η - ηS₀(ω′)] with η = diag(1, -1).
///
/// `g_hat` is the motion profile's Fourier transform evaluated at ω - ω′.
/// Linear in both `eps` and `g_hat`; ε ≪ 1 is assumed but not enforced.
pub fn delta_s_q(
    omega: f64,
    omega_prime: f64,
    g_hat: Complex64,
    eps: f64,
    p: &MirrorParams,
) -> ScatterMatrix {
    let s_w = s0_matrix(omega, p);
    let s_wp = s0_matrix(omega_prime, p);
    // S₀(ω)η negates the second column, ηS₀(ω′) negates the second row.
    let bracket = ScatterMatrix::new([
        [
            s_w.entry(0, 0) - s_wp.entry(0, 0),
            -s_w.entry(0, 1) - s_wp.entry(0, 1),
        ],
        [
            s_w.entry(1, 0) + s_wp.entry(1, 0),
            -s_w.entry(1, 1) + s_wp.entry(1, 1),
        ],
    ]);
    let prefactor = Complex64::new(0.0, eps * omega_prime) * g_hat;
    bracket.scaled(prefactor)
}

/// First-order S-matrix correction from a fluctuating coupling μ(t):
/// ε·α_μ(ω,ω′)·[J₂ + S₀(ω′)] with α_μ = -iμ₀ℱ(ω-ω′)/[iμ₀ + ω(1+λ₀²)]
/// and J₂ the column-reversed identity.
///
/// `f_hat` is the coupling profile's Fourier transform at ω - ω′. The
/// bracket matrix carries s±(ω′) on the diagonal and 1 + r±(ω′) off it.
pub fn delta_s_mu(
    omega: f64,
    omega_prime: f64,
    f_hat: Complex64,
    eps: f64,
    p: &MirrorParams,
) -> ScatterMatrix {
    let s_wp = s0_matrix(omega_prime, p);
    let one = Complex64::new(1.0, 0.0);
    let bracket = ScatterMatrix::new([
        [s_wp.entry(0, 0), one + s_wp.entry(0, 1)],
        [one + s_wp.entry(1, 0), s_wp.entry(1, 1)],
    ]);
    let alpha = Complex64::new(0.0, -p.mu0()) * f_hat / p.denominator(omega);
    bracket.scaled(alpha * eps)
}
