//! Running registered checks over a catalog.

use std::collections::HashMap;
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use ringlab_core::funcfield::checks::exceptional_example_check;
use ringlab_core::{build_ring, AnyRing, CheckResult, Ring, RingSpec};

use crate::catalog::Catalog;
use crate::checks::{self, CheckDef, Halt, Scope, NON_ENUMERABLE, NOT_IN_CATALOG};
use crate::error::{HarnessError, Result};
use crate::facts::RingFacts;
use crate::report::Report;

enum Entry {
    Finite(Box<OnceLock<std::result::Result<RingFacts, String>>>, RingSpec),
    Infinite,
}

/// A catalog with lazily computed per-ring facts.
pub struct Suite {
    catalog: Catalog,
    specs: Vec<String>,
    entries: HashMap<String, Entry>,
}

impl Suite {
    pub fn new(catalog: Catalog) -> Result<Self> {
        let mut entries = HashMap::new();
        let mut specs = Vec::new();
        for spec in &catalog.rings {
            let key = spec.to_string();
            let entry = match build_ring(spec)? {
                AnyRing::Finite(_) => Entry::Finite(Box::default(), spec.clone()),
                AnyRing::Infinite(_) => Entry::Infinite,
            };
            specs.push(key.clone());
            entries.insert(key, entry);
        }
        Ok(Suite {
            catalog,
            specs,
            entries,
        })
    }

    pub fn catalog(&self) -> &Catalog {
        &self.catalog
    }

    /// Facts for a catalog ring; `None` for rings outside the catalog or
    /// infinite ones.
    pub fn facts(&self, spec: &str) -> Option<std::result::Result<&RingFacts, String>> {
        let key = spec.parse::<RingSpec>().ok()?.to_string();
        match self.entries.get(&key)? {
            Entry::Finite(cell, spec) => Some(
                cell.get_or_init(|| {
                    Ring::build(spec)
                        .and_then(RingFacts::new)
                        .map_err(|e| e.to_string())
                })
                    .as_ref()
                    .map_err(Clone::clone),
            ),
            Entry::Infinite => None,
        }
    }

    /// Computes the facts and Lie lattices of every finite ring up front,
    /// one ring per task, so that checks running in parallel only read them.
    pub fn prepare(&self) {
        self.specs.par_iter().for_each(|s| {
            if let Some(Ok(f)) = self.facts(s) {
                f.lie_family();
                f.blocks();
            }
        });
    }

    fn run_on(&self, def: &CheckDef, ring: &str) -> CheckResult {
        let start = Instant::now();
        let mut res = match def.scope {
            Scope::Example(case) => {
                if self.catalog.contains(ring) {
                    exceptional_example_check(case)
                } else {
                    CheckResult::skipped(def.id, ring, NOT_IN_CATALOG)
                }
            }
            Scope::OnRing(..) if !self.catalog.contains(ring) => {
                CheckResult::skipped(def.id, ring, NOT_IN_CATALOG)
            }
            Scope::PerRing(run) | Scope::OnRing(_, run) => match self.facts(ring) {
                None => CheckResult::skipped(def.id, ring, NON_ENUMERABLE),
                Some(Err(e)) => {
                    let mut res = CheckResult::new(def.id, ring);
                    res.assert("ring facts", false, Some(e));
                    res
                }
                Some(Ok(f)) => {
                    let mut res = CheckResult::new(def.id, ring);
                    match run(f, &mut res) {
                        Ok(()) => res,
                        Err(Halt::Skip(reason)) => CheckResult::skipped(def.id, ring, reason),
                        Err(Halt::Error(e)) => {
                            res.assert("evaluation", false, Some(e.to_string()));
                            res
                        }
                    }
                }
            },
        };
        res.ring = ring.to_string();
        res.ms = start.elapsed().as_millis() as u64;
        res
    }

    fn tasks<'a>(&self, defs: impl IntoIterator<Item = &'a CheckDef>) -> Vec<(&'a CheckDef, String)> {
        defs.into_iter()
            .flat_map(|d| d.targets(&self.specs).into_iter().map(move |r| (d, r)))
            .collect()
    }

    fn run_tasks(&self, tasks: Vec<(&CheckDef, String)>, parallel: bool) -> Vec<CheckResult> {
        self.prepare();
        let mut out: Vec<CheckResult> = if parallel {
            tasks.par_iter().map(|(d, r)| self.run_on(d, r)).collect()
        } else {
            tasks.iter().map(|(d, r)| self.run_on(d, r)).collect()
        };
        out.sort_by(|a, b| (&a.check_id, &a.ring).cmp(&(&b.check_id, &b.ring)));
        out
    }

    /// One result per target ring of the check.
    pub fn run_check(&self, id: &str) -> Result<Vec<CheckResult>> {
        let def = checks::lookup(id).ok_or_else(|| HarnessError::UnknownCheck(id.to_string()))?;
        Ok(self.run_tasks(self.tasks([def]), true))
    }

    pub fn run_all(&self, parallel: bool) -> Report {
        let results = self.run_tasks(self.tasks(checks::registry()), parallel);
        Report::new(self.catalog.spec_strings(), results)
    }
}

/// Runs one check over the default catalog.
pub fn run_check(id: &str) -> Result<Vec<CheckResult>> {
    Suite::new(Catalog::default())?.run_check(id)
}

/// Runs the whole registry over a catalog.
pub fn run_suite(catalog: Catalog, parallel: bool) -> Result<Report> {
    Ok(Suite::new(catalog)?.run_all(parallel))
}
