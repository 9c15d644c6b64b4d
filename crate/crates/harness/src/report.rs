//! Check results and the suite report.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use monopos::io::emit_graph6;
use monopos::{Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::checks::{manifest, CheckDef};
use crate::corpus::Instance;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOLKIT_VERSION: &str = env!("CARGO_PKG_VERSION");
pub const DEFAULT_SEEDS: [u64; 1] = [0];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AssertionKind {
    Equality,
    Inequality,
    Structural,
    Realization,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// One failed assertion with everything needed to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub label: String,
    pub graph6: String,
    pub what: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skip {
    pub label: String,
    pub graph6: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub kind: AssertionKind,
    pub corpus: String,
    pub seed: u64,
    pub status: Status,
    pub instances: usize,
    pub failures: Vec<Failure>,
    pub skipped: Vec<Skip>,
    pub notes: Vec<String>,
    pub observed: BTreeMap<String, serde_json::Value>,
    pub ms: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub checks: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub instances: usize,
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub toolkit_version: String,
    pub seeds: Vec<u64>,
    pub checks: Vec<CheckResult>,
    pub totals: Totals,
    pub wall_ms: f64,
}

impl RunReport {
    /// Zeroes every timing field; what remains is a function of the seeds
    /// and the toolkit version.
    pub fn without_timing(&self) -> RunReport {
        let mut r = self.clone();
        r.wall_ms = 0.0;
        for c in &mut r.checks {
            c.ms = 0.0;
        }
        r
    }

    pub fn passed(&self) -> bool {
        self.totals.fail == 0
    }

    pub fn results<'a>(&'a self, id: &'a str) -> impl Iterator<Item = &'a CheckResult> {
        self.checks.iter().filter(move |c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            s += &format!(
                "{:<6} {:<40} seed={} instances={} failures={} skipped={} {:.0}ms\n",
                c.status.to_string().to_uppercase(),
                c.id,
                c.seed,
                c.instances,
                c.failures.len(),
                c.skipped.len(),
                c.ms
            );
            for f in &c.failures {
                s += &format!(
                    "       {} [{}] {}: expected {}, got {}\n",
                    f.graph6, f.label, f.what, f.expected, f.actual
                );
            }
            for n in &c.notes {
                s += &format!("       note: {n}\n");
            }
        }
        let t = &self.totals;
        s += &format!(
            "{} checks: {} pass, {} fail, {} skipped; {} instances; {:.1}s\n",
            t.checks,
            t.pass,
            t.fail,
            t.skipped,
            t.instances,
            self.wall_ms / 1000.0
        );
        s
    }
}

/// One mismatched value inside an instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub what: String,
    pub expected: String,
    pub actual: String,
}

/// Accumulates the assertions made about one instance.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Verdict(pub Vec<Mismatch>);

impl Verdict {
    pub fn new() -> Self {
        Verdict::default()
    }

    pub fn eq<T: PartialEq + fmt::Display>(self, what: &str, expected: T, actual: T) -> Self {
        let ok = expected == actual;
        self.holds(ok, what, expected, actual)
    }

    pub fn holds(mut self, ok: bool, what: &str, expected: impl fmt::Display, actual: impl fmt::Display) -> Self {
        if !ok {
            self.0.push(Mismatch {
                what: what.to_string(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
        self
    }

    pub fn is_pass(&self) -> bool {
        self.0.is_empty()
    }
}

/// Something a check sweeps over: an instance, possibly with the data the
/// assertion needs.
pub trait Item {
    fn instance(&self) -> &Instance;
}

impl Item for Instance {
    fn instance(&self) -> &Instance {
        self
    }
}

impl<X> Item for (Instance, X) {
    fn instance(&self) -> &Instance {
        &self.0
    }
}

/// Mutable state of one running check.
pub struct Ctx {
    pub seed: u64,
    pub(crate) stream: u64,
    instances: usize,
    failures: Vec<Failure>,
    skipped: Vec<Skip>,
    notes: Vec<String>,
    observed: BTreeMap<String, serde_json::Value>,
}

impl Ctx {
    fn new(seed: u64, stream: u64) -> Self {
        Ctx {
            seed,
            stream,
            instances: 0,
            failures: Vec::new(),
            skipped: Vec::new(),
            notes: Vec::new(),
            observed: BTreeMap::new(),
        }
    }

    pub fn rng(&self) -> rand_chacha::ChaCha8Rng {
        crate::corpus::check_rng(self.seed, self.stream)
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn observe(&mut self, key: &str, v: impl Serialize) {
        self.observed
            .insert(key.to_string(), serde_json::to_value(v).expect("observation serializes"));
    }

    /// Runs `f` on every instance in parallel and records the outcomes in
    /// input order. Cap and limit errors skip the instance; any other error
    /// is a failure. Returns the side data of the instances that ran.
    pub fn sweep_with<T, R, F>(&mut self, items: &[T], f: F) -> Vec<Option<R>>
    where
        T: Item + Sync,
        R: Send,
        F: Fn(&T) -> Result<(Verdict, R)> + Sync,
    {
        let results: Vec<Result<(Verdict, R)>> = items.par_iter().map(&f).collect();
        let mut out = Vec::with_capacity(items.len());
        for (item, r) in items.iter().zip(results) {
            let inst = item.instance();
            self.instances += 1;
            let graph6 = || emit_graph6(&inst.graph);
            match r {
                Ok((v, data)) => {
                    for m in v.0 {
                        self.failures.push(Failure {
                            label: inst.label.clone(),
                            graph6: graph6(),
                            what: m.what,
                            expected: m.expected,
                            actual: m.actual,
                        });
                    }
                    out.push(Some(data));
                }
                Err(e) if e.is_resource_limit() => {
                    self.skipped.push(Skip {
                        label: inst.label.clone(),
                        graph6: graph6(),
                        reason: e.to_string(),
                    });
                    out.push(None);
                }
                Err(e) => {
                    self.failures.push(Failure {
                        label: inst.label.clone(),
                        graph6: graph6(),
                        what: "error".into(),
                        expected: "a result".into(),
                        actual: e.to_string(),
                    });
                    out.push(None);
                }
            }
        }
        out
    }

    pub fn sweep<T, F>(&mut self, items: &[T], f: F)
    where
        T: Item + Sync,
        F: Fn(&T) -> Result<Verdict> + Sync,
    {
        self.sweep_with(items, |i| f(i).map(|v| (v, ())));
    }

    fn finish(self, def: &CheckDef, ms: f64) -> CheckResult {
        let status = if !self.failures.is_empty() {
            Status::Fail
        } else if self.instances > 0 && self.skipped.len() == self.instances {
            Status::Skipped
        } else {
            Status::Pass
        };
        CheckResult {
            id: def.id.to_string(),
            kind: def.kind,
            corpus: def.corpus.to_string(),
            seed: self.seed,
            status,
            instances: self.instances,
            failures: self.failures,
            skipped: self.skipped,
            notes: self.notes,
            observed: self.observed,
            ms,
        }
    }
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1000.0
}

/// FNV-1a of the check id, so a check's random stream does not depend on its
/// position in the manifest.
pub(crate) fn stream_of(id: &str) -> u64 {
    id.bytes()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3))
}

pub fn run_check(def: &CheckDef, seed: u64) -> CheckResult {
    let start = Instant::now();
    let mut ctx = Ctx::new(seed, stream_of(def.id));
    (def.run)(&mut ctx);
    ctx.finish(def, elapsed_ms(start))
}

/// Runs the selected checks (all when `selection` is empty) once per seed.
/// Results are ordered by manifest position, then seed.
pub fn run_suite(selection: &[String], seeds: &[u64]) -> Result<RunReport> {
    let start = Instant::now();
    let defs: Vec<&CheckDef> = if selection.is_empty() {
        manifest().iter().collect()
    } else {
        for id in selection {
            if !manifest().iter().any(|d| d.id == id) {
                return Err(Error::InvalidArgument(format!("unknown check id '{id}'")));
            }
        }
        manifest().iter().filter(|d| selection.iter().any(|s| s == d.id)).collect()
    };
    let seeds: Vec<u64> = if seeds.is_empty() { DEFAULT_SEEDS.to_vec() } else { seeds.to_vec() };
    let jobs: Vec<(&CheckDef, u64)> = defs.iter().flat_map(|d| seeds.iter().map(move |&s| (*d, s))).collect();
    let checks: Vec<CheckResult> = jobs.par_iter().map(|(d, s)| run_check(d, *s)).collect();
    let mut totals = Totals {
        checks: checks.len(),
        ..Totals::default()
    };
    for c in &checks {
        match c.status {
            Status::Pass => totals.pass += 1,
            Status::Fail => totals.fail += 1,
            Status::Skipped => totals.skipped += 1,
        }
        totals.instances += c.instances;
        totals.failures += c.failures.len();
    }
    Ok(RunReport {
        schema_version: SCHEMA_VERSION,
        toolkit_version: TOOLKIT_VERSION.to_string(),
        seeds,
        checks,
        totals,
        wall_ms: elapsed_ms(start),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_collects_mismatches() {
        let v = Verdict::new().eq("mp", 3, 3).eq("gp", 6, 5).holds(false, "bound", "<= 4", 5);
        assert_eq!(v.0.len(), 2);
        assert_eq!(v.0[0].what, "gp");
        assert!(Verdict::new().eq("x", 1, 1).is_pass());
    }

    #[test]
    fn stream_ids_are_stable() {
        assert_eq!(stream_of(""), 0xcbf2_9ce4_8422_2325);
        assert_ne!(stream_of("cubic-cages"), stream_of("cubic-bound"));
    }

    #[test]
    fn unknown_check_is_rejected() {
        assert!(run_suite(&["no-such-check".to_string()], &[0]).is_err());
    }
}
