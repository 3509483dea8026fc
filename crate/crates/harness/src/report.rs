//! Aggregated suite results.

use std::fmt::Write as _;

use ringlab_core::{CheckResult, Outcome};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub version: String,
    pub catalog: Vec<String>,
    pub results: Vec<CheckResult>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Report {
    pub fn new(catalog: Vec<String>, mut results: Vec<CheckResult>) -> Self {
        results.sort_by(|a, b| (&a.check_id, &a.ring).cmp(&(&b.check_id, &b.ring)));
        Report {
            version: env!("CARGO_PKG_VERSION").to_string(),
            catalog,
            results,
        }
    }

    pub fn counts(&self) -> Counts {
        let mut c = Counts::default();
        for r in &self.results {
            match r.verdict {
                Outcome::Pass => c.pass += 1,
                Outcome::Fail => c.fail += 1,
                Outcome::Skipped(_) => c.skipped += 1,
            }
        }
        c
    }

    /// No result failed.
    pub fn passed(&self) -> bool {
        !self.results.iter().any(|r| r.verdict.is_fail())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| r.verdict.is_fail())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON with timings zeroed, identical across runs.
    pub fn to_stable_json(&self) -> String {
        let mut copy = self.clone();
        for r in &mut copy.results {
            r.ms = 0;
        }
        copy.to_json()
    }

    pub fn to_table(&self) -> String {
        let idw = self.results.iter().map(|r| r.check_id.len()).max().unwrap_or(5).max(5);
        let rw = self.results.iter().map(|r| r.ring.chars().count()).max().unwrap_or(4).max(4);
        let mut out = String::new();
        let _ = writeln!(out, "{:idw$}  {:rw$}  {:28}  {:>6}", "check", "ring", "verdict", "ms");
        for r in &self.results {
            let _ = writeln!(
                out,
                "{:idw$}  {:rw$}  {:28}  {:>6}",
                r.check_id,
                r.ring,
                r.verdict.to_string(),
                r.ms
            );
            for s in r.failed() {
                let _ = writeln!(
                    out,
                    "    failed: {}{}",
                    s.name,
                    s.witness.as_deref().map(|w| format!(" [{w}]")).unwrap_or_default()
                );
            }
        }
        let c = self.counts();
        let _ = writeln!(out, "{} pass, {} fail, {} skipped", c.pass, c.fail, c.skipped);
        out
    }
}
