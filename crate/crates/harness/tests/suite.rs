use ringlab_core::{CheckResult, Outcome};
use ringlab_harness::{run_check, run_suite, Catalog, HarnessError, Suite};

fn skipped(r: &CheckResult, reason: &str) -> bool {
    r.verdict == Outcome::Skipped(reason.to_string())
}

#[test]
fn unknown_check_is_an_error() {
    assert!(matches!(run_check("nosuch"), Err(HarnessError::UnknownCheck(id)) if id == "nosuch"));
}

#[test]
fn z4_skips_semiprime_hypotheses() {
    let rep = run_suite(Catalog::from_specs(["Z(4)"]).unwrap(), false).unwrap();
    assert!(rep.passed());
    for id in ["thm16", "thm13", "thm19", "thm2", "cor12", "thm1"] {
        let r = rep.results.iter().find(|r| r.check_id == id && r.ring == "Z(4)").unwrap();
        assert!(skipped(r, "hypotheses unmet"), "{id}: {}", r.verdict);
    }
    let def = rep.results.iter().find(|r| r.check_id == "def").unwrap();
    assert_eq!(def.verdict, Outcome::Pass);
    assert_eq!(def.observed.as_deref(), Some("reduced=no, domain=no"));
    let example3 = rep.results.iter().find(|r| r.check_id == "example3").unwrap();
    assert!(skipped(example3, "ring not in catalog"));
}

#[test]
fn infinite_ring_runs_only_criterion_checks() {
    let rep = run_suite(Catalog::from_specs(["M(2,FF(2))"]).unwrap(), true).unwrap();
    assert!(rep.passed());
    let ran: Vec<&str> = rep
        .results
        .iter()
        .filter(|r| r.verdict == Outcome::Pass)
        .map(|r| r.check_id.as_str())
        .collect();
    assert_eq!(ran, ["example4", "remark10ii"]);
    for r in rep.results.iter().filter(|r| r.ring == "M(2,FF(2))" && r.verdict != Outcome::Pass) {
        assert!(skipped(r, "non-enumerable"), "{}: {}", r.check_id, r.verdict);
    }
}

#[test]
fn thm16_exercises_the_failure_direction() {
    let results = run_check("thm16").unwrap();
    assert!(results.iter().all(|r| !r.verdict.is_fail()));
    let ex = results.iter().find(|r| r.ring == "prod(M(2,GF(2)),GF(2))").unwrap();
    assert_eq!(ex.verdict, Outcome::Pass);
    assert_eq!(ex.observed.as_deref(), Some("not [E,R]-semiprime"));
    assert!(ex.sub_assertions.iter().any(|s| s.name.contains("witness lies in")));
    let simple = results.iter().find(|r| r.ring == "M(2,GF(3))").unwrap();
    assert_eq!(simple.observed.as_deref(), Some("[E,R]-semiprime"));
}

#[test]
fn prop4_passes_on_products() {
    let results = run_check("prop4").unwrap();
    let ran: Vec<_> = results.iter().filter(|r| r.verdict == Outcome::Pass).collect();
    assert_eq!(ran.len(), 2);
    assert!(results.iter().all(|r| !r.verdict.is_fail()));
}

#[test]
fn fixed_ring_checks_report_missing_ring() {
    let suite = Suite::new(Catalog::from_specs(["GF(2)"]).unwrap()).unwrap();
    for id in ["example3", "remark10i", "example4"] {
        let res = suite.run_check(id).unwrap();
        assert_eq!(res.len(), 1);
        assert!(skipped(&res[0], "ring not in catalog"), "{id}");
    }
}

#[test]
fn default_catalog_passes_and_is_ordered() {
    let rep = run_suite(Catalog::default(), true).unwrap();
    let failures: Vec<_> = rep.failures().map(|r| (&r.check_id, &r.ring)).collect();
    assert!(failures.is_empty(), "{failures:?}");
    let keys: Vec<_> = rep.results.iter().map(|r| (&r.check_id, &r.ring)).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    for id in ringlab_harness::registry().iter().map(|d| d.id) {
        assert!(
            rep.results.iter().any(|r| r.check_id == id && r.verdict == Outcome::Pass),
            "{id} never ran"
        );
    }
    let json: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
    let first = &json["results"][0];
    for key in ["check_id", "ring", "verdict", "sub_assertions", "predicted", "observed", "ms"] {
        assert!(first.get(key).is_some(), "{key}");
    }
    assert_eq!(json["catalog"].as_array().unwrap().len(), 17);
}
