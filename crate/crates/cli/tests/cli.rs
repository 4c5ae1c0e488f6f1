use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use structa_cli::derive::OPS;
use structa_cli::doc::KINDS;
use structa_cli::fixtures::{fixture, FIXTURES};
use structa_core::catalogue;

fn fixture_path(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", &format!("{name}.json")].iter().collect();
    p.to_str().unwrap().to_string()
}

fn structa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_structa"))
        .args(args)
        .env_remove("STRUCTA_SEED")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn formats_lists_every_kind_and_operation() {
    let out = structa(&["formats"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for k in KINDS {
        assert!(text.contains(k.name()), "{} missing", k.name());
    }
    for (op, _, _) in OPS {
        assert!(text.contains(&format!("  {op} ")), "{op} missing");
    }
}

#[test]
fn check_reads_standard_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_structa"))
        .args(["check", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(fixture("group_z3").unwrap().text.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("group.associative"));
}

#[test]
fn json_report_parses_and_matches_exit_code() {
    for name in ["group_s3", "group_no_unit"] {
        let out = structa(&["--json", "check", &fixture_path(name)]);
        let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(v["suite"], "check group");
        let failed = v["summary"]["failed"].as_u64().unwrap();
        assert_eq!(out.status.code(), Some(if failed == 0 { 0 } else { 1 }), "{name}");
        for c in v["checks"].as_array().unwrap() {
            assert!(c["statement"].is_string());
        }
    }
}

#[test]
fn failing_check_names_a_witness() {
    let out = structa(&["check", &fixture_path("category_defect_z3")]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    let line = text.lines().find(|l| l.contains("cat.associative")).unwrap();
    assert!(line.contains("FAIL"), "{line}");
    assert!(text.contains("witness"), "{text}");
}

#[test]
fn syntax_errors_report_position() {
    let out = structa(&["check", &fixture_path("error_syntax")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err = stderr(&out);
    assert!(err.contains("line 3, column 25"), "{err}");
}

#[test]
fn semantic_errors_report_a_path() {
    let out = structa(&["check", &fixture_path("error_not_total")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("$.table"), "{}", stderr(&out));
}

#[test]
fn max_size_bounds_the_carrier() {
    let path = fixture_path("group_s3");
    let out = structa(&["--max-size", "5", "check", &path]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("bound 5"));
    assert_eq!(structa(&["--max-size", "6", "check", &path]).status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    let s3 = fixture_path("group_s3");
    let cases: &[&[&str]] = &[
        &["suite", "nothing"],
        &["derive", "nothing", &s3],
        &["derive", "opposite", &s3],
        &["derive", "quotient", &s3, "213"],
        &["--jobs", "0", "formats"],
        &["check", "/no/such/file.json"],
    ];
    for args in cases {
        let out = structa(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!stderr(&out).is_empty());
    }
}

#[test]
fn derive_writes_checkable_documents() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[(&str, &str, &[&str], &str, i32)] = &[
        ("opposite", "category_diamond", &[], "category", 0),
        ("opposite", "poset_diamond", &[], "poset", 0),
        ("quotient", "group_s3", &["123", "231", "312"], "group", 0),
        ("commutant", "group_s3", &[], "group", 0),
        ("center", "group_klein", &[], "group", 0),
        ("kernel", "hom_sign_s3", &[], "group", 0),
        ("image", "hom_z4_z2", &[], "group", 0),
        ("filter", "filterbase_a_ab", &[], "family", 0),
        ("topology", "base_overlap", &[], "topology", 0),
        ("closure", "topology_chain3", &[], "closure", 1),
        ("sigma", "family_a_ab", &[], "family", 0),
        ("order", "semilattice_chain3_join", &["meet"], "poset", 0),
        ("lattice", "poset_diamond", &[], "semilattice", 0),
        ("yoneda", "category_chain2", &["0"], "functor", 0),
        ("regular", "group_z3", &[], "action", 0),
    ];
    for (op, name, args, kind, code) in cases {
        let out_path = dir.path().join(format!("{op}-{name}.json"));
        let out_str = out_path.to_str().unwrap();
        let path = fixture_path(name);
        let mut argv = vec!["derive", op, &path];
        argv.extend(args.iter().copied());
        argv.extend(["-o", out_str]);
        let out = structa(&argv);
        assert_eq!(out.status.code(), Some(0), "{op} {name}: {}", stderr(&out));
        assert!(out.stdout.is_empty());
        let text = std::fs::read_to_string(&out_path).unwrap();
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["kind"], *kind, "{op} {name}");
        let checked = structa(&["check", out_str]);
        assert_eq!(checked.status.code(), Some(*code), "{op} {name}: {}", stdout(&checked));
    }
    let covered: std::collections::BTreeSet<&str> = cases.iter().map(|c| c.0).collect();
    assert_eq!(covered.len(), OPS.len());
}

#[test]
fn quotient_by_the_alternating_group_has_order_two() {
    let out = structa(&["derive", "quotient", &fixture_path("group_s3"), "123", "231", "312"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 2);
}

#[test]
fn seed_flag_and_environment_agree() {
    let by_flag = structa(&["--seed", "99", "suite", "integers"]);
    let by_env = Command::new(env!("CARGO_BIN_EXE_structa"))
        .args(["suite", "integers"])
        .env("STRUCTA_SEED", "99")
        .output()
        .unwrap();
    assert_eq!(by_flag.status.code(), Some(0));
    assert_eq!(by_flag.stdout, by_env.stdout);
    let again = structa(&["--seed", "99", "suite", "integers"]);
    assert_eq!(by_flag.stdout, again.stdout);
}

#[test]
fn every_reported_law_has_a_statement() {
    let mut laws = std::collections::BTreeSet::new();
    let all = structa(&["--json", "suite", "all"]);
    assert_eq!(all.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&all)).unwrap();
    for c in v["checks"].as_array().unwrap() {
        laws.insert(c["law"].as_str().unwrap().to_string());
    }
    for fx in FIXTURES {
        if let Ok(r) = structa_cli::check_text(fx.text, structa_cli::DEFAULT_MAX_SIZE) {
            laws.extend(r.checks().map(|c| c.law.to_string()));
        }
    }
    let missing: Vec<&String> = laws.iter().filter(|l| catalogue::statement(l).is_none()).collect();
    assert!(missing.is_empty(), "{missing:?}");
    assert!(laws.len() > 150);
}
