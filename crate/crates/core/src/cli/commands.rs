//! The six CSV-emitting subcommands.
//!
//! Every emitter writes `#`-prefixed metadata lines (tool version,
//! resolved config), a header row, then data rows. Floats print in
//! Rust's shortest round-trip form, so identical configs produce
//! byte-identical files on every platform.

use std::io::Write;

use rayon::prelude::*;

use crate::asymmetry::{
    delta_n_int, delta_n_mu, delta_n_q, delta_n_total, delta_n_total_product, diff_roots,
    interference_factor, resonance_check,
};
use crate::enhancement::{multi_source_delta_n_mu, multi_source_spectrum};
use crate::rates::{interference_null, rate_breakdown, xi_of};
use crate::scattering::Side;
use crate::spectrum::{interference_roots, n_general, spectrum_components, MonoConfig};

use super::config::{DriveSection, RunConfig};
use super::CliError;

const TOOL: &str = concat!("casimir-spectra ", env!("CARGO_PKG_VERSION"));

fn preamble(out: &mut dyn Write, command: &str, config: &RunConfig) -> Result<(), CliError> {
    writeln!(out, "# {TOOL} {command}")?;
    writeln!(out, "# config: {}", config.canonical_json())?;
    Ok(())
}

fn finite_or_err(value: f64, context: &str) -> Result<f64, CliError> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(CliError::Numerical(format!(
            "non-finite value in {context}"
        )))
    }
}

/// Per-side spectral components over the frequency grid.
///
/// Monochromatic drives use the closed forms (densities per unit τ);
/// general drives go through the quadrature path (raw densities). The
/// `per_tau` column records which convention a row is in.
pub fn cmd_spectrum(config: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    preamble(out, "spectrum", config)?;
    writeln!(out, "omega,side,n_q,n_mu,n_int,n_total,per_tau")?;
    match &config.drive {
        DriveSection::Mono { .. } => {
            let cfg = config.mono_config()?;
            for omega in config.omega_grid() {
                for side in Side::BOTH {
                    let s = spectrum_components(omega, side, &cfg);
                    finite_or_err(s.n_total, "spectrum")?;
                    writeln!(
                        out,
                        "{},{},{},{},{},{},true",
                        s.omega, side, s.n_q, s.n_mu, s.n_int, s.n_total
                    )?;
                }
            }
        }
        DriveSection::General { .. } => {
            let (coupling, motion) = config.general_drives()?;
            let params = config.mirror_params()?;
            let tol = config.tolerances.quad_rel;
            let grid = config.omega_grid();
            let rows: Result<Vec<_>, CliError> = grid
                .iter()
                .flat_map(|&omega| Side::BOTH.map(|side| (omega, side)))
                .map(|(omega, side)| {
                    let s = n_general(omega, side, &coupling, &motion, &params, tol)
                        .map_err(|e| CliError::Numerical(e.to_string()))?;
                    finite_or_err(s.n_total, "spectrum")?;
                    Ok(s)
                })
                .collect();
            for s in rows? {
                writeln!(
                    out,
                    "{},{},{},{},{},{},false",
                    s.omega, s.side, s.n_q, s.n_mu, s.n_int, s.n_total
                )?;
            }
        }
        DriveSection::Sources { .. } => {
            return Err(CliError::Config(
                "spectrum needs drive.mode = \"mono\" or \"general\"".into(),
            ))
        }
    }
    Ok(())
}

/// Left-minus-right difference components over the frequency grid
/// (monochromatic drives only).
pub fn cmd_diff(config: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let cfg = config.mono_config()?;
    preamble(out, "diff", config)?;
    writeln!(out, "omega,d_q,d_mu,d_int,d_total,per_tau")?;
    for omega in config.omega_grid() {
        let d = delta_n_total(omega, &cfg);
        finite_or_err(d.d_total, "diff")?;
        writeln!(
            out,
            "{},{},{},{},{},true",
            d.omega, d.d_q, d.d_mu, d.d_int, d.d_total
        )?;
    }
    Ok(())
}

/// Total created-particle numbers with per-component provenance: a
/// human-readable table in the comments plus one machine row.
pub fn cmd_rates(config: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let cfg = config.mono_config()?;
    let breakdown = rate_breakdown(&cfg, config.tolerances.rate_rel)
        .map_err(|e| CliError::Numerical(e.to_string()))?;
    finite_or_err(breakdown.n_total, "rates")?;
    preamble(out, "rates", config)?;
    writeln!(out, "# quantity      value                     method")?;
    writeln!(
        out,
        "# n_q           {:<25} {}",
        breakdown.n_q, breakdown.method_q
    )?;
    writeln!(
        out,
        "# n_mu          {:<25} {}",
        breakdown.n_mu, breakdown.method_mu
    )?;
    writeln!(
        out,
        "# n_int         {:<25} {}",
        breakdown.n_int, breakdown.method_int
    )?;
    writeln!(out, "# n_total       {:<25} sum", breakdown.n_total)?;
    writeln!(out, "# rate (per tau) {}", breakdown.n_total / cfg.tau())?;
    writeln!(out, "# xi            {}", breakdown.xi)?;
    writeln!(
        out,
        "n_q,n_mu,n_int,n_total,xi,rate_total,method_q,method_mu,method_int"
    )?;
    writeln!(
        out,
        "{},{},{},{},{},{},{},{},{}",
        breakdown.n_q,
        breakdown.n_mu,
        breakdown.n_int,
        breakdown.n_total,
        breakdown.xi,
        breakdown.n_total / cfg.tau(),
        breakdown.method_q,
        breakdown.method_mu,
        breakdown.method_int
    )?;
    Ok(())
}

fn optional_pair(pair: Option<(f64, f64)>) -> (String, String) {
    match pair {
        Some((lo, hi)) => (lo.to_string(), hi.to_string()),
        None => ("none".into(), "none".into()),
    }
}

/// Root record: sign-change frequencies of the right-side interference
/// spectrum and of the interference difference (explicit `none` markers
/// when a regime has no roots), plus the rate-function null ξ*.
pub fn cmd_roots(config: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let cfg = config.mono_config()?;
    let (int_lo, int_hi) = optional_pair(interference_roots(&cfg));
    let (diff_lo, diff_hi) = optional_pair(diff_roots(&cfg));
    let xi_star = interference_null().map_err(|e| CliError::Numerical(e.to_string()))?;
    preamble(out, "roots", config)?;
    writeln!(
        out,
        "int_root_minus,int_root_plus,diff_root_minus,diff_root_plus,xi_star"
    )?;
    writeln!(out, "{int_lo},{int_hi},{diff_lo},{diff_hi},{xi_star}")?;
    Ok(())
}

/// Multi-source coupling spectra and their asymmetry over the grid
/// (drive.mode = sources). Per-side columns cluster equal-frequency
/// sources coherently; distinct frequencies add with their own cutoffs.
pub fn cmd_enhance(config: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let sources = config.source_drive()?;
    let params = config.mirror_params()?;
    preamble(out, "enhance", config)?;
    if sources.all_same_frequency() {
        let eps_sq = crate::enhancement::effective_eps_sq_n(&sources)
            .map_err(|e| CliError::Config(e.to_string()))?;
        writeln!(out, "# effective_eps_sq: {eps_sq}")?;
    }
    writeln!(out, "omega,n_mu_plus,n_mu_minus,delta_n_mu,per_tau")?;
    for omega in config.omega_grid() {
        let plus = multi_source_spectrum(omega, Side::Right, &sources, &params);
        let minus = multi_source_spectrum(omega, Side::Left, &sources, &params);
        let delta = multi_source_delta_n_mu(omega, &sources, &params);
        finite_or_err(plus + minus + delta, "enhance")?;
        writeln!(out, "{omega},{plus},{minus},{delta},true")?;
    }
    Ok(())
}

struct SweepRow {
    mu0: f64,
    lambda0: f64,
    omega0: f64,
    phi: f64,
    xi: f64,
    n_q: f64,
    n_mu: f64,
    n_int: f64,
    n_total: f64,
    rate_total: f64,
    resonance_residual: f64,
    double_slit_residual: Option<f64>,
    min_n_total: f64,
}

#[allow(clippy::too_many_arguments)]
fn sweep_row(
    mu0: f64,
    lambda0: f64,
    omega0: f64,
    phi: f64,
    eps: f64,
    tau: f64,
    points: usize,
    rate_tol: f64,
) -> Result<SweepRow, CliError> {
    let params = crate::scattering::MirrorParams::new(mu0, lambda0)
        .map_err(|e| CliError::Config(format!("sweep: {e}")))?;
    let cfg = MonoConfig::new(params, omega0, phi, eps, tau)
        .map_err(|e| CliError::Config(format!("sweep: {e}")))?;
    let breakdown =
        rate_breakdown(&cfg, rate_tol).map_err(|e| CliError::Numerical(e.to_string()))?;

    // Residuals over an interior grid scaled to this row's window.
    let mut resonance_residual = 0.0_f64;
    let mut double_slit_residual: Option<f64> = if lambda0 != 0.0 { Some(0.0) } else { None };
    let mut min_n_total = f64::INFINITY;
    for i in 1..=points {
        let omega = omega0 * i as f64 / (points + 1) as f64;
        resonance_residual = resonance_residual.max(resonance_check(omega, &cfg).abs());
        if let Some(worst) = double_slit_residual.as_mut() {
            let lhs = delta_n_int(omega, &cfg).abs();
            let factor = interference_factor(omega, &cfg)
                .expect("lambda0 != 0 checked above");
            let rhs = 2.0
                * factor.abs()
                * (delta_n_q(omega, &cfg) * delta_n_mu(omega, &cfg)).abs().sqrt()
                * phi.cos().abs();
            *worst = worst.max((lhs - rhs).abs());
        }
        for side in Side::BOTH {
            min_n_total = min_n_total.min(spectrum_components(omega, side, &cfg).n_total);
        }
        // The two total routes must agree; surface disagreement as a
        // numerical failure rather than silently emitting one of them.
        let d = delta_n_total(omega, &cfg);
        if let Some(product) = delta_n_total_product(omega, &cfg) {
            let scale = d.d_q.abs() + d.d_mu.abs() + d.d_int.abs();
            if (d.d_total - product).abs() > 1e-9 * scale.max(1e-300) {
                return Err(CliError::Numerical(format!(
                    "difference-total routes disagree at omega = {omega}: {} vs {product}",
                    d.d_total
                )));
            }
        }
    }

    let row = SweepRow {
        mu0,
        lambda0,
        omega0,
        phi,
        xi: xi_of(&cfg),
        n_q: breakdown.n_q,
        n_mu: breakdown.n_mu,
        n_int: breakdown.n_int,
        n_total: breakdown.n_total,
        rate_total: breakdown.n_total / tau,
        resonance_residual,
        double_slit_residual,
        min_n_total,
    };
    let finite = row.n_total.is_finite()
        && row.resonance_residual.is_finite()
        && row.min_n_total.is_finite()
        && row.double_slit_residual.is_none_or(f64::is_finite);
    if !finite {
        return Err(CliError::Numerical(format!(
            "non-finite sweep row at mu0={mu0}, lambda0={lambda0}, omega0={omega0}, phi={phi}"
        )));
    }
    Ok(row)
}

/// Parameter sweep over a (μ₀, λ₀, ω₀, φ) product grid. Rows compute in
/// parallel (capped by `CASIMIR_SPECTRA_THREADS`) but emit in grid order,
/// and each carries the invariant residuals as extra columns.
pub fn cmd_sweep(config: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let sweep = config
        .sweep
        .as_ref()
        .ok_or_else(|| CliError::Config("sweep needs a \"sweep\" config section".into()))?;

    let mut combos = Vec::new();
    for &mu0 in &sweep.mu0 {
        for &lambda0 in &sweep.lambda0 {
            for &omega0 in &sweep.omega0 {
                for &phi in &sweep.phi {
                    combos.push((mu0, lambda0, omega0, phi));
                }
            }
        }
    }

    let points = config.grid.points;
    let rate_tol = config.tolerances.rate_rel;
    let (eps, tau) = (sweep.eps, sweep.tau);
    let compute = || -> Result<Vec<SweepRow>, CliError> {
        combos
            .par_iter()
            .map(|&(mu0, lambda0, omega0, phi)| {
                sweep_row(mu0, lambda0, omega0, phi, eps, tau, points, rate_tol)
            })
            .collect()
    };

    let rows = match super::thread_cap()? {
        Some(threads) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| CliError::Config(format!("thread pool: {e}")))?;
            pool.install(compute)?
        }
        None => compute()?,
    };

    preamble(out, "sweep", config)?;
    writeln!(
        out,
        "mu0,lambda0,omega0,phi,xi,n_q,n_mu,n_int,n_total,rate_total,\
         resonance_residual,double_slit_residual,min_n_total"
    )?;
    for r in rows {
        let ds = r
            .double_slit_residual
            .map_or_else(|| "none".into(), |v| v.to_string());
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            r.mu0,
            r.lambda0,
            r.omega0,
            r.phi,
            r.xi,
            r.n_q,
            r.n_mu,
            r.n_int,
            r.n_total,
            r.rate_total,
            r.resonance_residual,
            ds,
            r.min_n_total
        )?;
    }
    Ok(())
}
