use std::collections::BTreeMap;

fn documented() -> BTreeMap<String, String> {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/checks.md")).unwrap();
    text.lines()
        .filter_map(|l| l.strip_prefix("| `"))
        .map(|l| {
            let (id, rest) = l.split_once("` | ").unwrap();
            (id.to_string(), rest.trim_end_matches(" |").to_string())
        })
        .collect()
}

#[test]
fn docs_table_matches_registry() {
    let docs = documented();
    let reg: BTreeMap<String, String> = ringlab_harness::registry()
        .iter()
        .map(|d| (d.id.to_string(), d.statement.to_string()))
        .collect();
    assert_eq!(docs, reg);
}

#[test]
fn registry_ids_are_unique() {
    let ids: Vec<_> = ringlab_harness::registry().iter().map(|d| d.id).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), ids.len());
    for id in ids {
        assert!(ringlab_harness::lookup(id).is_some());
    }
}
