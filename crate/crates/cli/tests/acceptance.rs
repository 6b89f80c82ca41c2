//! Acceptance run: every criterion at its stated trial count, one PASS/FAIL line each.
//! Run with `cargo test -p doublekit-cli --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::Duration;

use doublekit::verify::{run_property, InstanceSpec, PropertyReport};

const SEED: u64 = 0;
const SUITE_LIMIT: Duration = Duration::from_secs(60);

struct Criterion {
    name: &'static str,
    ok: bool,
    detail: Vec<String>,
    notes: Vec<String>,
}

impl Criterion {
    fn new(name: &'static str) -> Self {
        Criterion {
            name,
            ok: true,
            detail: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Runs a suite and records `id trials/failures (time)`.
    fn suite(&mut self, id: &str, trials: usize) -> Option<PropertyReport> {
        match run_property(id, &InstanceSpec::with_seed(SEED), trials) {
            Ok(r) => {
                let slow = r.wall_time > SUITE_LIMIT;
                self.ok &= r.passed() && !slow;
                self.detail.push(format!(
                    "{id} {}/{} failed in {:.2}s{}",
                    r.failures.len(),
                    trials,
                    r.wall_time.as_secs_f64(),
                    if slow { " (over the time limit)" } else { "" }
                ));
                for f in &r.failures {
                    self.notes
                        .push(format!("{id} failure seed={} {}", f.seed, f.detail));
                }
                Some(r)
            }
            Err(e) => {
                self.ok = false;
                self.detail.push(format!("{id} error: {e}"));
                None
            }
        }
    }

    fn require(&mut self, ok: bool, what: String) {
        self.ok &= ok;
        self.detail.push(what);
    }

    fn print(&self) {
        println!(
            "{} {}: {}",
            if self.ok { "PASS" } else { "FAIL" },
            self.name,
            self.detail.join("; ")
        );
        for n in &self.notes {
            println!("    {n}");
        }
    }
}

fn count(r: &Option<PropertyReport>, key: &str) -> usize {
    r.as_ref()
        .and_then(|r| r.observations.get(key).copied())
        .unwrap_or(0)
}

fn main() -> ExitCode {
    let mut all = Vec::new();

    let mut c = Criterion::new("membership, containment and equality transfer");
    for id in ["P3.1-a", "P3.1-b", "P3.1-c", "P3.1-d"] {
        c.suite(id, 200);
    }
    all.push(c);

    let mut c = Criterion::new("double-generation oracle");
    c.suite("DOUBLE-GEN", 50);
    all.push(c);

    let mut c = Criterion::new("functor laws");
    for id in [
        "T3.3",
        "P3.9-a",
        "P3.9-b",
        "P3.9-c",
        "T3.16-faithful",
        "T3.16-objects",
    ] {
        c.suite(id, 200);
    }
    all.push(c);

    let mut c = Criterion::new("image and kernel");
    c.suite("P3.4-a", 200);
    let k = c.suite("P3.4-b", 200);
    if let Some(r) = &k {
        let logged: Vec<String> = r
            .observations
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        c.detail.push(format!("kernel inclusions: {}", logged.join(", ")));
    }
    all.push(c);

    let mut c = Criterion::new("surjectivity, injectivity and zero transfer");
    for id in ["C3.5-a", "C3.5-b", "C3.5-c", "C3.5-d"] {
        c.suite(id, 200);
    }
    all.push(c);

    // Every doubled hom in the hom suites above also fails its trial if the block shape is off.
    let mut c = Criterion::new("block double");
    c.suite("P3.20", 200);
    all.push(c);

    let mut c = Criterion::new("direct sums");
    c.suite("T3.21", 100);
    c.suite("C3.22", 30);
    all.push(c);

    let mut c = Criterion::new("quotient doubles");
    c.suite("Q4-module", 100);
    c.suite("Q4-coset", 200);
    all.push(c);

    let mut c = Criterion::new("colength transfer");
    let r = c.suite("P3.1.13-b", 30);
    let finite = count(&r, "finite-instance");
    c.require(
        finite >= 30,
        format!("{finite} finite-colength instances checked"),
    );
    all.push(c);

    let mut c = Criterion::new("complex suite");
    let mut table = None;
    for id in [
        "P3.6", "L3.12", "P3.13", "C3.15", "P3.8", "P3.10", "C3.11", "C3.14",
    ] {
        let r = c.suite(id, 100);
        if id == "P3.8" {
            table = r;
        }
    }
    if let Some(t) = &table {
        c.notes.push("exactness table (C exact, C_D exact): count".into());
        for b in [true, false] {
            for d in [true, false] {
                let n = count(&table, &format!("C_exact={b} C_D_exact={d}"));
                c.notes.push(format!("  ({b}, {d}): {n}"));
            }
        }
        c.require(
            t.observations.values().sum::<usize>() == 100,
            "table covers every trial".into(),
        );
    }
    all.push(c);

    let mut c = Criterion::new("relative doubles");
    c.suite("L3.23", 50);
    c.suite("T3.24", 50);
    c.suite("P3.25", 30);
    all.push(c);

    let mut c = Criterion::new("generic-rank evenness");
    c.suite("RANK-EVEN", 200);
    all.push(c);

    let mut c = Criterion::new("CLI golden transcripts");
    let fixtures = common::fixtures();
    let mut bad = 0;
    for f in &fixtures {
        if let Err(e) = common::check_fixture(f) {
            bad += 1;
            c.notes.push(e);
        }
    }
    c.require(
        fixtures.len() >= 10 && bad == 0,
        format!("{} fixtures, {bad} mismatched", fixtures.len()),
    );
    all.push(c);

    for c in &all {
        c.print();
    }
    let failed = all.iter().filter(|c| !c.ok).count();
    println!(
        "acceptance: {} criteria, {} passed, {failed} failed",
        all.len(),
        all.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
