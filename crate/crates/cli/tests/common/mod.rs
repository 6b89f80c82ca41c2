#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

/// Top-level `*.dk` fixtures in name order; `lib/` holds included files only.
pub fn fixtures() -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = std::fs::read_dir(fixtures_dir())
        .expect("fixtures directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "dk"))
        .collect();
    v.sort();
    v
}

/// Runs `doublekit run` on a fixture and compares stdout with `.out`, stderr with `.err`
/// (empty if absent) and the exit status with the presence of `.err`. With
/// `DOUBLEKIT_BLESS=1` the expected files are rewritten instead.
pub fn check_fixture(dk: &Path) -> Result<(), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_doublekit"))
        .arg("run")
        .arg(dk.file_name().unwrap())
        .current_dir(dk.parent().unwrap())
        .env("DOUBLEKIT_THREADS", "2")
        .output()
        .map_err(|e| format!("cannot start doublekit: {e}"))?;
    let stdout = String::from_utf8_lossy(&out.stdout).into_owned();
    let stderr = String::from_utf8_lossy(&out.stderr).into_owned();
    let out_path = dk.with_extension("out");
    let err_path = dk.with_extension("err");
    if std::env::var("DOUBLEKIT_BLESS").is_ok_and(|v| v == "1") {
        std::fs::write(&out_path, &stdout).unwrap();
        if stderr.is_empty() {
            let _ = std::fs::remove_file(&err_path);
        } else {
            std::fs::write(&err_path, &stderr).unwrap();
        }
        return Ok(());
    }
    let want_out = std::fs::read_to_string(&out_path)
        .map_err(|e| format!("{}: {e}", out_path.display()))?;
    let want_err = std::fs::read_to_string(&err_path).unwrap_or_default();
    let name = dk.file_name().unwrap().to_string_lossy();
    if stdout != want_out {
        return Err(format!(
            "{name}: stdout differs\n--- expected\n{want_out}--- actual\n{stdout}"
        ));
    }
    if stderr != want_err {
        return Err(format!(
            "{name}: stderr differs\n--- expected\n{want_err}--- actual\n{stderr}"
        ));
    }
    let want_ok = !err_path.exists();
    if out.status.success() != want_ok {
        return Err(format!(
            "{name}: exit status {:?}, expected {}",
            out.status.code(),
            if want_ok { "success" } else { "failure" }
        ));
    }
    Ok(())
}
