use std::process::Command;

mod common;

fn doublekit(args: &[&str]) -> (bool, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_doublekit"))
        .args(args)
        .current_dir(common::fixtures_dir())
        .output()
        .unwrap();
    (
        out.status.success(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn subcommands_use_a_session_file() {
    let (ok, out, _) = doublekit(&["double", "M", "--session", "principal.dk"]);
    assert!(ok);
    assert_eq!(
        out,
        "ring R_D vars x y;\nmodule M_D in R_D^2 gens [(x, y), (0, (y - x)*y)];\n"
    );
    let (ok, out, _) = doublekit(&["member", "M_D", "(x^2, y^2)", "-s", "principal.dk"]);
    assert!(ok);
    assert_eq!(out, "true\n");
    let (ok, out, _) = doublekit(&["colength", "M3", "N", "-s", "colength.dk"]);
    assert!(ok);
    assert_eq!(out, "3\n");
    let (ok, out, _) = doublekit(&["exact", "K_D", "-s", "koszul.dk"]);
    assert!(ok);
    assert!(out.ends_with("exact: true\n"));
}

#[test]
fn verify_flags() {
    let (ok, out, _) = doublekit(&["verify", "P3.4-a", "--trials", "50", "--seed", "7", "--format", "text"]);
    assert!(ok);
    assert_eq!(out, "PROP P3.4-a trials=50 failures=0\n");
    let (ok, _, err) = doublekit(&["verify", "P9.99"]);
    assert!(!ok);
    assert!(err.contains("unknown property id"), "{err}");
    let (ok, _, _) = doublekit(&["verify", "P3.4-a", "--format", "json"]);
    assert!(!ok);
}

#[test]
fn errors_exit_nonzero() {
    let (ok, _, err) = doublekit(&["member", "Q", "(x)", "-s", "principal.dk"]);
    assert!(!ok);
    assert!(err.contains("unresolved name `Q`"), "{err}");
    let (ok, _, err) = doublekit(&["run", "missing.dk"]);
    assert!(!ok);
    assert!(err.starts_with("error: missing.dk:"), "{err}");
}

#[test]
fn print_inlines_includes() {
    let (ok, out, _) = doublekit(&["print", "include.dk"]);
    assert!(ok);
    assert!(out.starts_with("ring R vars x1 x2;\nmodule M in R^1 gens [(x1), (x2)];\n"));
    assert!(!out.contains("include"));
}
