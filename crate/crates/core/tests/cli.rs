//! End-to-end checks of the `casimir-spectra` binary: exit codes, CSV
//! shape, determinism and the documented environment knob.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_casimir-spectra")
}

fn write_config(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

fn mono_config(dir: &Path) -> String {
    write_config(
        dir,
        "mono.json",
        r#"{
            "mirror": {"mu0": 1.0, "lambda0": 1.0},
            "drive": {"mode": "mono", "omega0": 1.0, "phi": 0.0, "eps": 0.001, "tau": 1000.0},
            "grid": {"omega_min": 0.0, "omega_max": 1.5, "points": 7, "spacing": "linear"}
        }"#,
    )
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().unwrap()
}

fn stdout_of(out: &Output) -> String {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn data_rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn spectrum_emits_header_metadata_and_cutoff_tail() {
    let dir = tempfile::tempdir().unwrap();
    let config = mono_config(dir.path());
    let csv = stdout_of(&run(&["spectrum", "--config", &config]));

    let mut lines = csv.lines();
    assert!(lines.next().unwrap().starts_with("# casimir-spectra "));
    assert!(lines.next().unwrap().starts_with("# config: {"));
    assert_eq!(
        lines.next().unwrap(),
        "omega,side,n_q,n_mu,n_int,n_total,per_tau"
    );

    let rows = data_rows(&csv);
    // One row per (grid point, side).
    assert_eq!(rows.len(), 7 * 2);
    // Rows beyond the drive frequency are explicit zeros.
    for row in rows.iter().filter(|r| r[0].parse::<f64>().unwrap() > 1.0) {
        assert_eq!(&row[2..6], ["0", "0", "0", "0"]);
        assert_eq!(row[6], "true");
    }
}

#[test]
fn identical_configs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let config = mono_config(dir.path());
    for cmd in ["spectrum", "diff", "rates", "roots"] {
        let a = run(&[cmd, "--config", &config]);
        let b = run(&[cmd, "--config", &config]);
        assert_eq!(stdout_of(&a), stdout_of(&b), "{cmd} output not reproducible");
    }
}

#[test]
fn set_overrides_change_the_physics() {
    let dir = tempfile::tempdir().unwrap();
    let config = mono_config(dir.path());
    let base = stdout_of(&run(&["spectrum", "--config", &config]));
    let widened = stdout_of(&run(&[
        "spectrum",
        "--config",
        &config,
        "--set",
        "mirror.lambda0=0.0",
    ]));
    assert_ne!(base, widened);
    // The override is recorded in the metadata line.
    assert!(widened.contains("\"lambda0\":0.0"));
}

#[test]
fn out_flag_writes_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let config = mono_config(dir.path());
    let target = dir.path().join("spectrum.csv");
    let out = run(&[
        "spectrum",
        "--config",
        &config,
        "--out",
        target.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&target).unwrap();
    assert!(written.contains("omega,side,n_q"));
}

#[test]
fn config_problems_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let config = mono_config(dir.path());

    let missing = run(&["spectrum", "--config", "/nonexistent/run.json"]);
    assert_eq!(missing.status.code(), Some(2));

    let degenerate_grid = run(&["spectrum", "--config", &config, "--set", "grid.points=1"]);
    assert_eq!(degenerate_grid.status.code(), Some(2));

    let wrong_mode = run(&["enhance", "--config", &config]);
    assert_eq!(wrong_mode.status.code(), Some(2));

    let bad_mirror = run(&["diff", "--config", &config, "--set", "mirror.mu0=-1.0"]);
    assert_eq!(bad_mirror.status.code(), Some(2));

    let sweepless = run(&["sweep", "--config", &config]);
    assert_eq!(sweepless.status.code(), Some(2));
}

#[test]
fn numerical_failure_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(
        dir.path(),
        "general.json",
        r#"{
            "mirror": {"mu0": 1.0, "lambda0": 1.0},
            "drive": {"mode": "general", "omega1": 1.0, "omega2": 2.0, "phi": 0.0,
                      "eps": 0.001, "tau": 1000.0},
            "grid": {"omega_min": 0.3, "omega_max": 0.6, "points": 2, "spacing": "linear"},
            "tolerances": {"quad_rel": 1e-300}
        }"#,
    );
    let out = run(&["spectrum", "--config", &config]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn general_mode_emits_raw_densities() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(
        dir.path(),
        "general.json",
        r#"{
            "mirror": {"mu0": 1.0, "lambda0": 0.5},
            "drive": {"mode": "general", "omega1": 1.0, "omega2": 2.0, "phi": 0.0,
                      "eps": 0.001, "tau": 200.0},
            "grid": {"omega_min": 0.2, "omega_max": 0.8, "points": 3, "spacing": "linear"}
        }"#,
    );
    let csv = stdout_of(&run(&["spectrum", "--config", &config]));
    let rows = data_rows(&csv);
    assert_eq!(rows.len(), 6);
    for row in &rows {
        assert_eq!(row[6], "false");
        // Off-resonance drives: interference is tiny next to the others.
        let n_q: f64 = row[2].parse().unwrap();
        let n_mu: f64 = row[3].parse().unwrap();
        let n_int: f64 = row[4].parse().unwrap();
        assert!(n_int.abs() <= 0.01 * (n_q + n_mu));
    }
}

#[test]
fn rates_row_carries_method_flags() {
    let dir = tempfile::tempdir().unwrap();
    let config = mono_config(dir.path());
    let csv = stdout_of(&run(&["rates", "--config", &config]));
    let rows = data_rows(&csv);
    assert_eq!(rows.len(), 1);
    let row = &rows[0];
    assert_eq!(row[6], "quadrature");
    assert_eq!(row[7], "closed_form");
    assert_eq!(row[8], "closed_form");
    // phi = pi/2 zeroes the interference component.
    let quarter = stdout_of(&run(&[
        "rates",
        "--config",
        &config,
        "--set",
        "drive.phi=1.5707963267948966",
    ]));
    let n_int: f64 = data_rows(&quarter)[0][2].parse().unwrap();
    assert!(n_int.abs() < 1e-20);
}

#[test]
fn roots_report_values_and_none_markers() {
    let dir = tempfile::tempdir().unwrap();
    let config = mono_config(dir.path());
    let csv = stdout_of(&run(&[
        "roots",
        "--config",
        &config,
        "--set",
        "drive.omega0=2.0",
    ]));
    let row = &data_rows(&csv)[0];
    let lo: f64 = row[0].parse().unwrap();
    let hi: f64 = row[1].parse().unwrap();
    assert!((lo - (2.0 - 3.0_f64.sqrt()) / 2.0).abs() < 1e-12);
    assert!((hi - (2.0 + 3.0_f64.sqrt()) / 2.0).abs() < 1e-12);
    let xi_star: f64 = row[4].parse().unwrap();
    assert!((xi_star - 2.23).abs() < 0.01);

    // No-root regime: explicit markers.
    let none = stdout_of(&run(&[
        "roots",
        "--config",
        &config,
        "--set",
        "mirror.mu0=2.0",
        "--set",
        "mirror.lambda0=0.5",
        "--set",
        "drive.omega0=1.0",
    ]));
    let row = &data_rows(&none)[0];
    assert_eq!(&row[..4], ["none", "none", "none", "none"]);
}

#[test]
fn enhance_clusters_and_cancels() {
    let dir = tempfile::tempdir().unwrap();
    // Anti-aligned equal pair: the difference column is identically zero.
    let cancelled = write_config(
        dir.path(),
        "cancelled.json",
        r#"{
            "mirror": {"mu0": 1.0, "lambda0": 1.0},
            "drive": {"mode": "sources", "tau": 100.0, "sources": [
                {"eps": 0.5, "omega": 2.0, "phi": 0.0},
                {"eps": 0.5, "omega": 2.0, "phi": 3.141592653589793}
            ]},
            "grid": {"omega_min": 0.0, "omega_max": 2.0, "points": 9, "spacing": "linear"}
        }"#,
    );
    let csv = stdout_of(&run(&["enhance", "--config", &cancelled]));
    assert!(csv.contains("# effective_eps_sq: 0"));
    for row in data_rows(&csv) {
        assert_eq!(row[3], "0", "delta column should cancel: {row:?}");
    }

    // Distinct frequencies: two cutoffs visible in the per-side columns.
    let two_tone = write_config(
        dir.path(),
        "twotone.json",
        r#"{
            "mirror": {"mu0": 1.0, "lambda0": 0.5},
            "drive": {"mode": "sources", "tau": 100.0, "sources": [
                {"eps": 0.01, "omega": 1.0, "phi": 0.0},
                {"eps": 0.01, "omega": 2.0, "phi": 0.0}
            ]},
            "grid": {"omega_min": 0.25, "omega_max": 2.25, "points": 5, "spacing": "linear"}
        }"#,
    );
    let csv = stdout_of(&run(&["enhance", "--config", &two_tone]));
    let rows = data_rows(&csv);
    let value = |i: usize, col: usize| rows[i][col].parse::<f64>().unwrap();
    // omega = 0.25 and 0.75: both sources contribute; 1.25 and 1.75: only
    // the higher one; 2.25: nothing.
    assert!(value(0, 1) > 0.0 && value(1, 1) > 0.0);
    assert!(value(2, 1) > 0.0 && value(3, 1) > 0.0);
    assert_eq!(value(4, 1), 0.0);
    assert_eq!(value(4, 2), 0.0);
}

#[test]
fn sweep_grid_rows_residuals_and_thread_cap() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(
        dir.path(),
        "sweep.json",
        r#"{
            "mirror": {"mu0": 1.0, "lambda0": 1.0},
            "drive": {"mode": "mono", "omega0": 1.0, "phi": 0.0, "eps": 0.001, "tau": 1000.0},
            "grid": {"omega_min": 0.0, "omega_max": 1.0, "points": 11, "spacing": "linear"},
            "sweep": {
                "mu0": [0.5, 1.0],
                "lambda0": [0.0, 1.0],
                "omega0": [1.0, 2.0],
                "phi": [0.0, 0.7853981633974483]
            }
        }"#,
    );
    let csv = stdout_of(&run(&["sweep", "--config", &config]));
    let rows = data_rows(&csv);
    assert_eq!(rows.len(), 16, "2x2x2x2 grid should emit 16 rows");
    for row in &rows {
        let lambda0: f64 = row[1].parse().unwrap();
        let resonance: f64 = row[10].parse().unwrap();
        assert!(resonance <= 1e-12, "resonance residual {resonance}");
        if lambda0 == 0.0 {
            assert_eq!(row[11], "none");
        } else {
            let double_slit: f64 = row[11].parse().unwrap();
            assert!(double_slit <= 1e-12, "double-slit residual {double_slit}");
        }
        let min_total: f64 = row[12].parse().unwrap();
        assert!(min_total >= -1e-12);
    }

    // A capped pool must give the same bytes in the same order.
    let capped = Command::new(bin())
        .args(["sweep", "--config", &config])
        .env("CASIMIR_SPECTRA_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(csv, stdout_of(&capped));

    let invalid = Command::new(bin())
        .args(["sweep", "--config", &config])
        .env("CASIMIR_SPECTRA_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(invalid.status.code(), Some(2));
}
