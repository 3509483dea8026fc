//! Outcome records for mechanical checks.

use std::fmt;

use serde::{Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    /// Not run; the reason is machine-readable, e.g. `non-enumerable`.
    Skipped(String),
}

impl Outcome {
    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail)
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Pass => f.write_str("pass"),
            Outcome::Fail => f.write_str("fail"),
            Outcome::Skipped(reason) => write!(f, "skipped({reason})"),
        }
    }
}

impl Serialize for Outcome {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubAssertion {
    pub name: String,
    pub ok: bool,
    /// Element or set expression reproducing the observation.
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub ring: String,
    pub verdict: Outcome,
    pub sub_assertions: Vec<SubAssertion>,
    pub predicted: Option<String>,
    pub observed: Option<String>,
    pub ms: u64,
}

impl CheckResult {
    pub fn new(check_id: impl Into<String>, ring: impl Into<String>) -> Self {
        CheckResult {
            check_id: check_id.into(),
            ring: ring.into(),
            verdict: Outcome::Pass,
            sub_assertions: Vec::new(),
            predicted: None,
            observed: None,
            ms: 0,
        }
    }

    pub fn skipped(check_id: impl Into<String>, ring: impl Into<String>, reason: &str) -> Self {
        let mut r = Self::new(check_id, ring);
        r.verdict = Outcome::Skipped(reason.to_string());
        r
    }

    /// Records a sub-assertion; a false one turns the verdict to fail.
    pub fn assert(&mut self, name: impl Into<String>, ok: bool, witness: Option<String>) -> bool {
        if !ok {
            self.verdict = Outcome::Fail;
        }
        self.sub_assertions.push(SubAssertion {
            name: name.into(),
            ok,
            witness,
        });
        ok
    }

    pub fn compare(&mut self, predicted: impl fmt::Display, observed: impl fmt::Display) {
        self.predicted = Some(predicted.to_string());
        self.observed = Some(observed.to_string());
    }

    pub fn failed(&self) -> impl Iterator<Item = &SubAssertion> {
        self.sub_assertions.iter().filter(|s| !s.ok)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_serializes_as_text() {
        let mut r = CheckResult::new("x", "Z(4)");
        assert_eq!(serde_json_like(&r.verdict), "pass");
        r.assert("a", false, Some("2".into()));
        assert_eq!(r.verdict, Outcome::Fail);
        assert_eq!(Outcome::Skipped("non-enumerable".into()).to_string(), "skipped(non-enumerable)");
    }

    fn serde_json_like(o: &Outcome) -> String {
        o.to_string()
    }
}
