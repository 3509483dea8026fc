use std::process::{Command, Output};

fn ringlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn ring_info_reports_classification() {
    let o = ringlab(&["ring", "info", "UT(2,GF(2))"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("cardinality            8"));
    assert!(text.contains("regular                no"));
    let o = ringlab(&["ring", "info", "M(2,FF(2))"]);
    assert!(stdout(&o).contains("infinite"));
}

#[test]
fn set_size_and_list() {
    let o = ringlab(&["set", "M(2,GF(2))", "--expr", "Id", "--size"]);
    assert_eq!(stdout(&o).trim(), "8");
    let o = ringlab(&["set", "Z(4)", "--expr", "N", "--list"]);
    assert_eq!(stdout(&o).lines().collect::<Vec<_>>(), ["0", "2"]);
}

#[test]
fn check_exit_codes_follow_verdict() {
    let o = ringlab(&["check", "xprime", "M(2,GF(2))", "--x", "add{I,[[0,1],[1,0]]}", "--witness"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness ([[1,1],[1,1]]; [[1,1],[1,1]])"));
    let o = ringlab(&["check", "xsemiprime", "M(2,GF(3))", "--x", "[E,R]"]);
    assert_eq!(o.status.code(), Some(0));
    let o = ringlab(&["check", "xsemiprime", "Z(4)", "--x", "{1}"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn derivation_criterion_and_oracle() {
    let o = ringlab(&["derivation", "M(2,GF(3))", "--b", "[[0,1],[2,0]]"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("criterion  d(R)-semiprime: yes"));
    assert!(text.contains("oracle     d(R)-semiprime: yes"));
    let o = ringlab(&["derivation", "M(2,GF(2))", "--b", "I", "--oracle"]);
    assert_eq!(o.status.code(), Some(1));
    let o = ringlab(&["derivation", "M(2,FF(2))", "--b", "[[1,1],[t,1]]", "--criterion"]);
    assert_eq!(o.status.code(), Some(0));
    let o = ringlab(&["derivation", "M(2,FF(2))", "--b", "[[1,1],[t,1]]", "--oracle"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn lattice_lists_lie_ideals() {
    let o = ringlab(&["lattice", "M(2,GF(2))", "--filter", "lie", "--classify-x", "L"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.ends_with("7 lie_ideals\n"));
    assert_eq!(text.matches("semiprime=yes prime=yes").count(), 2);
    let o = ringlab(&["lattice", "M(2,GF(2))", "--filter", "all"]);
    assert!(stdout(&o).ends_with("67 all\n"));
    let o = ringlab(&["lattice", "M(3,GF(2))", "--filter", "all"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_single_check_writes_json() {
    let dir = std::env::temp_dir().join(format!("ringlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let catalog = dir.join("catalog.txt");
    std::fs::write(&catalog, "# small\nZ(4)\nM(2,GF(2))\n").unwrap();
    let json = dir.join("report.json");
    let o = ringlab(&[
        "verify",
        "def",
        "--catalog",
        catalog.to_str().unwrap(),
        "--json",
        json.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let report = std::fs::read_to_string(&json).unwrap();
    assert!(report.contains("\"check_id\": \"def\""));
    assert!(report.contains("\"ring\": \"Z(4)\""));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(ringlab(&["verify", "nosuch"]).status.code(), Some(2));
    assert_eq!(ringlab(&["set", "M(2,GF(6))", "--expr", "R"]).status.code(), Some(2));
    assert_eq!(ringlab(&["lattice", "GF(2)", "--filter", "bogus"]).status.code(), Some(2));
    assert_eq!(ringlab(&["frobnicate"]).status.code(), Some(2));
}
