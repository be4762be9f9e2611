//! The generated header must stay in sync with the exported surface and
//! be consumable by a plain C compiler.

use std::path::PathBuf;
use std::process::Command;

fn header_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("include")
        .join("casimir_spectra.h")
}

#[test]
fn header_declares_the_exported_surface() {
    let header = std::fs::read_to_string(header_path()).expect("generated header present");
    for symbol in [
        "typedef struct CasimirMonoConfig CasimirMonoConfig;",
        "casimir_version",
        "casimir_mono_config_new",
        "casimir_mono_config_free",
        "casimir_spectrum_components",
        "casimir_difference_components",
        "casimir_rate_breakdown",
        "casimir_interference_roots",
        "casimir_diff_roots",
        "casimir_xi",
        "casimir_g_of_xi",
        "casimir_i_of_xi",
        "casimir_interference_null",
        "casimir_upsilon",
        "casimir_reflection",
        "casimir_transmission",
        "casimir_s0_matrix",
        "casimir_effective_eps_sq",
        "casimir_enhanced_delta_n_mu",
        "casimir_general_components",
        "CASIMIR_STATUS_NO_ROOTS",
        "CASIMIR_SIDE_LEFT",
    ] {
        assert!(header.contains(symbol), "header is missing {symbol}");
    }
}

#[test]
fn header_compiles_and_links_from_c() {
    let Ok(cc) = std::env::var("CC").or_else(|_| {
        if Command::new("cc").arg("--version").output().is_ok() {
            Ok("cc".to_string())
        } else {
            Err(std::env::VarError::NotPresent)
        }
    }) else {
        eprintln!("no C compiler found; skipping link check");
        return;
    };

    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("smoke.c");
    std::fs::write(
        &src,
        r#"
#include "casimir_spectra.h"
#include <stdio.h>
#include <math.h>

int main(void) {
    CasimirMonoConfig *cfg = NULL;
    if (casimir_mono_config_new(1.0, 1.0, 2.0, 0.0, 1.0, 1.0, &cfg) != CASIMIR_STATUS_OK)
        return 1;

    CasimirSpectrum s;
    if (casimir_spectrum_components(cfg, 0.5, CASIMIR_SIDE_RIGHT, &s) != CASIMIR_STATUS_OK)
        return 2;
    if (!(s.n_total >= -1e-12)) return 3;
    if (fabs(s.n_total - (s.n_q + s.n_mu + s.n_int)) > 1e-18) return 4;

    double lo = 0.0, hi = 0.0;
    if (casimir_interference_roots(cfg, &lo, &hi) != CASIMIR_STATUS_OK) return 5;
    if (fabs(lo + hi - 2.0) > 1e-12) return 6; /* roots are symmetric about omega0/2 */

    double xi_star = 0.0;
    if (casimir_interference_null(&xi_star) != CASIMIR_STATUS_OK) return 7;
    if (fabs(xi_star - 2.23) > 0.01) return 8;

    casimir_mono_config_free(cfg);
    printf("%s\n", casimir_version());
    return 0;
}
"#,
    )
    .unwrap();

    // The cdylib lives in the workspace target directory next to our own
    // test binary's profile folder.
    let profile_dir = std::env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf();
    let lib = profile_dir.join("libcasimir_spectra_ffi.so");
    if !lib.exists() {
        eprintln!("cdylib not found at {}; skipping link check", lib.display());
        return;
    }

    let exe = dir.path().join("smoke");
    let compile = Command::new(&cc)
        .arg(&src)
        .arg("-I")
        .arg(header_path().parent().unwrap())
        .arg(&lib)
        .arg("-lm")
        .arg("-o")
        .arg(&exe)
        .output()
        .unwrap();
    assert!(
        compile.status.success(),
        "C compilation failed: {}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&exe)
        .env("LD_LIBRARY_PATH", &profile_dir)
        .output()
        .unwrap();
    assert!(
        run.status.success(),
        "smoke binary exited with {:?}: {}",
        run.status.code(),
        String::from_utf8_lossy(&run.stderr)
    );
    let version = String::from_utf8_lossy(&run.stdout);
    assert_eq!(version.trim(), env!("CARGO_PKG_VERSION"));
}
