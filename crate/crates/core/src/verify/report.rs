use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

/// One failing trial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    /// Seed that replays the trial with `trials = 1`.
    pub seed: u64,
    pub detail: String,
    /// The instance in session syntax.
    pub replay: String,
}

/// Outcome of a property suite.
#[derive(Debug, Clone)]
pub struct PropertyReport {
    pub id: String,
    pub trials: usize,
    pub failures: Vec<Failure>,
    /// Counts of logged observations (experiment tables, strict inclusions, skipped preconditions).
    pub observations: BTreeMap<String, usize>,
    pub wall_time: Duration,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// `PROP <id> trials=<n> failures=<k>`.
    pub fn summary_line(&self) -> String {
        format!(
            "PROP {} trials={} failures={}",
            self.id,
            self.trials,
            self.failures.len()
        )
    }
}

/// The summary line, then one line per observation and per failure. Wall time is left out so
/// that the text is reproducible.
impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.summary_line())?;
        for (k, v) in &self.observations {
            write!(f, "\n  observed {k} count={v}")?;
        }
        for fl in &self.failures {
            write!(f, "\n  failure seed={} {}", fl.seed, fl.detail)?;
        }
        Ok(())
    }
}

/// What a single trial produced.
#[derive(Debug, Clone, Default)]
pub struct Trial {
    pub failure: Option<String>,
    pub observations: Vec<String>,
}

impl Trial {
    pub fn pass() -> Self {
        Trial::default()
    }

    pub fn fail(msg: impl Into<String>) -> Self {
        Trial {
            failure: Some(msg.into()),
            observations: Vec::new(),
        }
    }

    pub fn observe(&mut self, what: impl Into<String>) {
        self.observations.push(what.into());
    }

    /// Records a failure unless one is already recorded.
    pub fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok && self.failure.is_none() {
            self.failure = Some(msg());
        }
    }
}
