//! Seeded random instances and the property suites run over them.

mod catalog;
mod gen;
mod props;
mod replay;
mod report;
mod spec;

use std::time::Instant;

use rayon::prelude::*;

pub use catalog::{find, Property, COVERAGE, OUT_OF_SCOPE, PROPERTIES};
pub use gen::{DrawnHom, Gen};
pub use replay::Replay;
pub use report::{Failure, PropertyReport, Trial};
pub use spec::InstanceSpec;

use crate::module::Submodule;
use crate::{Error, Result};

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "DOUBLEKIT_THREADS";

/// A random submodule drawn from `seed`; identical seeds give identical modules.
pub fn gen_submodule(spec: &InstanceSpec, seed: u64) -> Submodule {
    let mut g = Gen::new(spec, seed);
    let r = g.ring();
    let p = g.rank();
    let s = g.range(0, spec.max_gens);
    g.submodule_with(&r, p, s)
}

fn run_trial(prop: &Property, spec: &InstanceSpec, seed: u64) -> (Trial, String) {
    let mut g = Gen::new(spec, seed);
    let trial = match (prop.check)(&mut g) {
        Ok(t) => t,
        Err(e) => Trial::fail(format!("error: {e}")),
    };
    (trial, g.replay.text())
}

/// Runs `trials` fresh instances of the property `id`. Trial `t` uses seed `spec.seed + t`.
pub fn run_property(id: &str, spec: &InstanceSpec, trials: usize) -> Result<PropertyReport> {
    let prop = find(id).ok_or_else(|| Error::UnknownProperty(id.to_string()))?;
    spec.validate()?;
    let start = Instant::now();
    let work = || -> Vec<(u64, Trial, String)> {
        (0..trials as u64)
            .into_par_iter()
            .map(|t| {
                let seed = spec.trial_seed(t);
                let (trial, replay) = run_trial(prop, spec, seed);
                (seed, trial, replay)
            })
            .collect()
    };
    let results = match std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        Some(n) if n > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Shape(format!("cannot start worker threads: {e}")))?
            .install(work),
        _ => work(),
    };
    let mut report = PropertyReport {
        id: prop.id.to_string(),
        trials,
        failures: Vec::new(),
        observations: Default::default(),
        wall_time: Default::default(),
    };
    for (seed, trial, replay) in results {
        for o in trial.observations {
            *report.observations.entry(o).or_insert(0) += 1;
        }
        if let Some(detail) = trial.failure {
            report.failures.push(Failure {
                seed,
                detail,
                replay,
            });
        }
    }
    report.wall_time = start.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_complete() {
        for (_, ids) in COVERAGE {
            for id in *ids {
                assert!(find(id).is_some(), "{id} has no suite");
            }
        }
        for p in PROPERTIES {
            assert!(
                COVERAGE.iter().any(|(_, ids)| ids.contains(&p.id)),
                "{} is not mapped",
                p.id
            );
        }
        let mut ids: Vec<_> = PROPERTIES.iter().map(|p| p.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), PROPERTIES.len());
    }

    #[test]
    fn unknown_id() {
        assert!(matches!(
            run_property("NOPE", &InstanceSpec::default(), 1),
            Err(Error::UnknownProperty(_))
        ));
    }

    #[test]
    fn generation_is_deterministic_and_bounded() {
        let spec = InstanceSpec::default();
        for seed in 0..200 {
            let a = gen_submodule(&spec, seed);
            let b = gen_submodule(&spec, seed);
            assert_eq!(a.generators(), b.generators());
            assert!(a.ring().nvars() <= spec.max_vars);
            assert!(a.rank() <= spec.max_rank);
            assert!(a.generators().len() <= spec.max_gens);
            for g in a.generators() {
                for c in g.components() {
                    assert!(c.terms().len() <= spec.max_terms);
                    assert!(c.total_degree().unwrap_or(0) <= spec.max_degree);
                    for (_, q) in c.terms() {
                        assert!(
                            q.is_integer()
                                && q.numer().magnitude() <= &num_bigint::BigUint::from(5u32)
                        );
                    }
                }
            }
        }
        let empty = InstanceSpec {
            max_gens: 0,
            ..spec
        };
        assert!(gen_submodule(&empty, 0).is_zero());
    }
}
