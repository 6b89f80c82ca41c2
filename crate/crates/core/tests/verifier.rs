//! The property runner: determinism, seeding and report format.

use doublekit::verify::{run_property, InstanceSpec, COVERAGE, OUT_OF_SCOPE, PROPERTIES};
use doublekit::Error;

#[test]
fn reports_are_reproducible() {
    let spec = InstanceSpec::with_seed(11);
    let a = run_property("P3.1-a", &spec, 40).unwrap();
    let b = run_property("P3.1-a", &spec, 40).unwrap();
    assert_eq!(a.to_string(), b.to_string());
    assert!(a.to_string().starts_with("PROP P3.1-a trials=40 failures=0"));
}

#[test]
fn trial_seeds_replay_single_trials() {
    // trial t of a run with seed s is the single trial of a run with seed s + t
    let whole = run_property("P3.4-b", &InstanceSpec::with_seed(100), 8).unwrap();
    let mut total = std::collections::BTreeMap::new();
    for t in 0..8 {
        let one = run_property("P3.4-b", &InstanceSpec::with_seed(100 + t), 1).unwrap();
        for (k, v) in one.observations {
            *total.entry(k).or_insert(0) += v;
        }
    }
    assert_eq!(whole.observations, total);
}

#[test]
fn thread_cap_does_not_change_results() {
    let spec = InstanceSpec::with_seed(5);
    let free = run_property("C3.5-a", &spec, 30).unwrap().to_string();
    std::env::set_var("DOUBLEKIT_THREADS", "1");
    let capped = run_property("C3.5-a", &spec, 30).unwrap().to_string();
    std::env::remove_var("DOUBLEKIT_THREADS");
    assert_eq!(free, capped);
}

#[test]
fn catalog() {
    assert!(PROPERTIES.len() >= 38);
    assert!(COVERAGE.iter().all(|(_, ids)| !ids.is_empty()));
    assert_eq!(OUT_OF_SCOPE.len(), 1);
    assert!(matches!(
        run_property("X", &InstanceSpec::default(), 1),
        Err(Error::UnknownProperty(_))
    ));
    let bad = InstanceSpec {
        max_vars: 9,
        ..InstanceSpec::default()
    };
    assert!(run_property("P3.1-a", &bad, 1).is_err());
}

#[test]
fn every_suite_runs_clean() {
    let spec = InstanceSpec::with_seed(1000);
    for p in PROPERTIES {
        let r = run_property(p.id, &spec, 10).unwrap();
        assert!(r.passed(), "{r}");
    }
}
