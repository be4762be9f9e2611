//! Run configuration: JSON schema, dotted-path overrides and validation.

use serde::{Deserialize, Serialize};

use crate::drives::{DampedCosineDrive, MultiSourceDrive};
use crate::scattering::MirrorParams;
use crate::spectrum::MonoConfig;

use super::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub mirror: MirrorSection,
    pub drive: DriveSection,
    pub grid: GridSection,
    /// Optional declaration of which outputs a config is written for;
    /// informational, the subcommand picks the actual output.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub outputs: Vec<OutputKind>,
    #[serde(default)]
    pub tolerances: Tolerances,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepSection>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MirrorSection {
    pub mu0: f64,
    pub lambda0: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase", deny_unknown_fields)]
pub enum DriveSection {
    /// Both drive channels at one frequency; the closed-form path.
    Mono {
        omega0: f64,
        phi: f64,
        eps: f64,
        tau: f64,
    },
    /// Independent drive frequencies; the quadrature path. `omega1`
    /// drives the coupling fluctuation, `omega2` the motion, and `phi`
    /// is the motion drive's phase.
    General {
        omega1: f64,
        omega2: f64,
        phi: f64,
        eps: f64,
        tau: f64,
    },
    /// A stationary mirror with several coupling-fluctuation sources.
    Sources { tau: f64, sources: Vec<SourceSpec> },
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SourceSpec {
    pub eps: f64,
    pub omega: f64,
    pub phi: f64,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSection {
    pub omega_min: f64,
    pub omega_max: f64,
    pub points: usize,
    pub spacing: Spacing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputKind {
    Spectrum,
    Diff,
    Rates,
    Roots,
    Enhance,
    Sweep,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tolerances {
    /// Relative tolerance for the general-path spectral integrals.
    #[serde(default = "default_quad_rel")]
    pub quad_rel: f64,
    /// Relative tolerance for closed-form cross-check quadratures.
    #[serde(default = "default_rate_rel")]
    pub rate_rel: f64,
}

fn default_quad_rel() -> f64 {
    1e-6
}

fn default_rate_rel() -> f64 {
    1e-9
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            quad_rel: default_quad_rel(),
            rate_rel: default_rate_rel(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSection {
    pub mu0: Vec<f64>,
    pub lambda0: Vec<f64>,
    pub omega0: Vec<f64>,
    pub phi: Vec<f64>,
    #[serde(default = "default_sweep_eps")]
    pub eps: f64,
    #[serde(default = "default_sweep_tau")]
    pub tau: f64,
}

fn default_sweep_eps() -> f64 {
    1.0
}

fn default_sweep_tau() -> f64 {
    1.0
}

impl RunConfig {
    /// Parse a config from JSON text, after applying `--set` overrides on
    /// the raw document. Errors carry serde's line/column diagnostics.
    pub fn from_json(text: &str, overrides: &[String]) -> Result<Self, CliError> {
        let mut value: serde_json::Value = serde_json::from_str(text)
            .map_err(|e| CliError::Config(format!("config is not valid JSON: {e}")))?;
        for item in overrides {
            apply_override(&mut value, item)?;
        }
        let config: RunConfig = serde_json::from_value(value)
            .map_err(|e| CliError::Config(format!("config rejected: {e}")))?;
        config.validate()?;
        Ok(config)
    }

    fn validate(&self) -> Result<(), CliError> {
        self.mirror_params()?;
        if self.grid.points < 2 {
            return Err(CliError::Config(format!(
                "grid.points must be at least 2, got {}",
                self.grid.points
            )));
        }
        if !(self.grid.omega_min >= 0.0) {
            return Err(CliError::Config(format!(
                "grid.omega_min must be nonnegative, got {}",
                self.grid.omega_min
            )));
        }
        if !(self.grid.omega_max > self.grid.omega_min) {
            return Err(CliError::Config(format!(
                "grid.omega_max must exceed omega_min, got [{}, {}]",
                self.grid.omega_min, self.grid.omega_max
            )));
        }
        if self.grid.spacing == Spacing::Log && self.grid.omega_min <= 0.0 {
            return Err(CliError::Config(
                "log spacing requires grid.omega_min > 0".into(),
            ));
        }
        if !(self.tolerances.quad_rel > 0.0) || !(self.tolerances.rate_rel > 0.0) {
            return Err(CliError::Config(
                "tolerances must be positive".into(),
            ));
        }
        match &self.drive {
            DriveSection::Mono { .. } => {
                self.mono_config()?;
            }
            DriveSection::General { .. } => {
                self.general_drives()?;
            }
            DriveSection::Sources { .. } => {
                self.source_drive()?;
            }
        }
        if let Some(sweep) = &self.sweep {
            for (name, axis) in [
                ("mu0", &sweep.mu0),
                ("lambda0", &sweep.lambda0),
                ("omega0", &sweep.omega0),
                ("phi", &sweep.phi),
            ] {
                if axis.is_empty() {
                    return Err(CliError::Config(format!("sweep.{name} must be non-empty")));
                }
            }
        }
        Ok(())
    }

    pub fn mirror_params(&self) -> Result<MirrorParams, CliError> {
        MirrorParams::new(self.mirror.mu0, self.mirror.lambda0)
            .map_err(|e| CliError::Config(format!("mirror: {e}")))
    }

    /// The monochromatic configuration; errors unless drive.mode = mono.
    pub fn mono_config(&self) -> Result<MonoConfig, CliError> {
        match self.drive {
            DriveSection::Mono {
                omega0,
                phi,
                eps,
                tau,
            } => MonoConfig::new(self.mirror_params()?, omega0, phi, eps, tau)
                .map_err(|e| CliError::Config(format!("drive: {e}"))),
            _ => Err(CliError::Config(
                "this command needs drive.mode = \"mono\"".into(),
            )),
        }
    }

    /// The (coupling, motion) drive pair; errors unless mode is mono or
    /// general. A mono drive maps onto two equal-frequency drives.
    pub fn general_drives(&self) -> Result<(DampedCosineDrive, DampedCosineDrive), CliError> {
        let (omega1, omega2, phi, eps, tau) = match self.drive {
            DriveSection::Mono {
                omega0,
                phi,
                eps,
                tau,
            } => (omega0, omega0, phi, eps, tau),
            DriveSection::General {
                omega1,
                omega2,
                phi,
                eps,
                tau,
            } => (omega1, omega2, phi, eps, tau),
            DriveSection::Sources { .. } => {
                return Err(CliError::Config(
                    "this command needs drive.mode = \"mono\" or \"general\"".into(),
                ))
            }
        };
        let coupling = DampedCosineDrive::new(eps, omega1, 0.0, tau)
            .map_err(|e| CliError::Config(format!("drive: {e}")))?;
        let motion = DampedCosineDrive::new(eps, omega2, phi, tau)
            .map_err(|e| CliError::Config(format!("drive: {e}")))?;
        Ok((coupling, motion))
    }

    /// The multi-source drive; errors unless drive.mode = sources.
    pub fn source_drive(&self) -> Result<MultiSourceDrive, CliError> {
        match &self.drive {
            DriveSection::Sources { tau, sources } => {
                let drives: Result<Vec<_>, _> = sources
                    .iter()
                    .map(|s| DampedCosineDrive::new(s.eps, s.omega, s.phi, *tau))
                    .collect();
                let drives = drives.map_err(|e| CliError::Config(format!("drive: {e}")))?;
                MultiSourceDrive::new(drives)
                    .map_err(|e| CliError::Config(format!("drive: {e}")))
            }
            _ => Err(CliError::Config(
                "this command needs drive.mode = \"sources\"".into(),
            )),
        }
    }

    /// The frequency grid, honoring the requested spacing.
    pub fn omega_grid(&self) -> Vec<f64> {
        let g = &self.grid;
        let n = g.points;
        match g.spacing {
            Spacing::Linear => (0..n)
                .map(|i| {
                    g.omega_min + (g.omega_max - g.omega_min) * i as f64 / (n - 1) as f64
                })
                .collect(),
            Spacing::Log => {
                let lo = g.omega_min.log10();
                let hi = g.omega_max.log10();
                (0..n)
                    .map(|i| 10f64.powf(lo + (hi - lo) * i as f64 / (n - 1) as f64))
                    .collect()
            }
        }
    }

    /// Canonical single-line JSON of the resolved config, for the CSV
    /// metadata header.
    pub fn canonical_json(&self) -> String {
        serde_json::to_string(self).expect("config serializes")
    }
}

/// Apply one `key.path=value` override onto the raw JSON document.
/// Values parse as JSON when possible and fall back to strings, so
/// `--set grid.spacing=log` and `--set mirror.mu0=2.0` both work.
fn apply_override(root: &mut serde_json::Value, item: &str) -> Result<(), CliError> {
    let (path, raw) = item.split_once('=').ok_or_else(|| {
        CliError::Config(format!("--set expects key.path=value, got {item:?}"))
    })?;
    if path.is_empty() {
        return Err(CliError::Config(format!(
            "--set has an empty key path in {item:?}"
        )));
    }
    let parsed: serde_json::Value = serde_json::from_str(raw)
        .unwrap_or_else(|_| serde_json::Value::String(raw.to_string()));

    let mut cursor = root;
    let segments: Vec<&str> = path.split('.').collect();
    for (i, segment) in segments.iter().enumerate() {
        if !cursor.is_object() {
            return Err(CliError::Config(format!(
                "--set {path}: {} is not an object",
                segments[..i].join(".")
            )));
        }
        let map = cursor.as_object_mut().expect("checked above");
        if i + 1 == segments.len() {
            map.insert(segment.to_string(), parsed);
            return Ok(());
        }
        cursor = map
            .entry(segment.to_string())
            .or_insert_with(|| serde_json::Value::Object(Default::default()));
    }
    unreachable!("loop always returns on the last segment")
}
