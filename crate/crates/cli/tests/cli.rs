use std::process::{Command, Output};

use serde_json::Value;

const ANTICHAIN_EMPTY: &str = r#"{"stem":"","schedule":{"table":[],"tail":["S","F0"]}}"#;
const FULL: &str = r#"{"stem":"","schedule":{"table":[],"tail":["S"]}}"#;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tforce"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let text = String::from_utf8(out.stdout).unwrap();
    let v = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{args:?}: {e}: {text}"));
    (out.status.code().unwrap(), v)
}

fn ok(args: &[&str]) -> Value {
    let (code, v) = json(args);
    assert_eq!(code, 0, "{args:?}: {v}");
    v
}

#[test]
fn validate_antichain_output() {
    let cond = ok(&["antichain", "--pred", r#"{"table":"01","tail":"1"}"#]).to_string();
    assert_eq!(ok(&["validate", "--cond", &cond, "--strict"]).to_string(), r#"{"valid":true}"#);
}

#[test]
fn validate_reports_violations() {
    let lenient = r#"{"stem":"","schedule":{"table":[],"tail":["S","F2"]}}"#;
    assert_eq!(ok(&["validate", "--cond", lenient])["valid"], true);
    let strict = ok(&["validate", "--cond", lenient, "--strict"]);
    assert_eq!(strict["valid"], false);
    assert!(strict["diagnostics"].is_array());
}

#[test]
fn conditions_round_trip() {
    let raw = r#"{"stem":"02","schedule":{"table":["F1","S"],"tail":["S","F0"]}}"#;
    let n = ok(&["normalize", "--cond", raw]).to_string();
    let again = ok(&["normalize", "--cond", &n]).to_string();
    assert_eq!(n, again);
    assert_eq!(ok(&["leq", "--cond", &n, "--other", &again])["leq"], true);
}

#[test]
fn reads_condition_files() {
    let dir = std::env::temp_dir().join(format!("tforce-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p.json");
    std::fs::write(&path, ANTICHAIN_EMPTY).unwrap();
    let v = ok(&["nodes", "--cond", path.to_str().unwrap(), "--depth", "3"]);
    assert_eq!(v["count"], 9);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn order_and_meet() {
    let odds = ok(&["antichain", "--pred", r#"{"table":"","tail":"1"}"#]).to_string();
    let m = ok(&["meet", "--cond", &odds, "--other", ANTICHAIN_EMPTY]);
    assert_eq!(m["compatible"], false);
    assert_eq!(m["incompatible"]["level"], 1);
    assert_eq!(ok(&["leq", "--cond", &odds, "--other", FULL, "--n", "0"])["leq_n"], true);
    let m = ok(&["meet", "--cond", &odds, "--other", FULL])["meet"].to_string();
    assert_eq!(ok(&["leq", "--cond", &m, "--other", &odds])["leq"], true);
}

#[test]
fn membership_forms() {
    assert_eq!(ok(&["member", "--cond", ANTICHAIN_EMPTY, "--node", "20"])["member"], true);
    assert_eq!(ok(&["member", "--cond", ANTICHAIN_EMPTY, "--node", "21"])["member"], false);
    let all2 = r#"{"prefix":"","tail":"2"}"#;
    assert_eq!(ok(&["member", "--set", "Mn", "--n", "3", "--real", all2])["member"], true);
    assert_eq!(ok(&["member-set", "--set", "Nn", "--n", "3", "--real", all2])["member"], false);
    let z = r#"{"prefix":"202","tail":"0"}"#;
    assert_eq!(ok(&["member-set", "--set", "Nn", "--n", "3", "--real", z])["member"], true);
}

#[test]
fn cohen_extension_and_refutation() {
    let v = ok(&["extend-cohen", "--cond", FULL, "--sigma", "0110"]);
    assert_eq!(v["decided"], "0110");
    assert_eq!(v["decided_matches"], true);
    assert_eq!(v["leq"], true);
    let v = ok(&["refute-pd", "--cond", FULL]);
    assert_eq!(v["k"], 0);
    assert_ne!(v["decided0"], v["decided1"]);
}

#[test]
fn restrict_branch_and_graft() {
    let r = ok(&["restrict", "--cond", FULL, "--node", "1"]);
    assert_eq!(r["stem"], "1");
    let b = ok(&["branch", "--cond", FULL, "--selector", r#"{"choices":"1","tailChoices":"2"}"#]);
    assert_eq!(b, serde_json::json!({"prefix":"1","tail":"2"}));
    let donor = r#"{"stem":"02","schedule":{"table":[],"tail":["S"]}}"#;
    let g = ok(&["graft", "--cond", FULL, "--k", "0", "--pj", donor]);
    assert_eq!(g["strict"], false);
    assert_eq!(g["leq_k"], true);
}

#[test]
fn fusion_drivers() {
    let v = ok(&["axiom-a", "--cond", FULL, "--k", "1", "--oracle", "next-split-0"]);
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 9);
    assert_eq!(v["leq_k"], true);
    let v = ok(&["quasi-pure", "--cond", FULL, "--stages", "3", "--oracle", "identity"]);
    assert_eq!(v["stages"].as_array().unwrap().len(), 4);
}

#[test]
fn ideal_witnesses() {
    let v = ok(&["witness", "--set", "Mn", "--n", "3", "--cond", FULL]);
    assert_eq!(v["leq"], true);
    let v = ok(&["witness", "--set", "Nn", "--n", "3", "--cond", FULL]);
    assert_eq!(v["leq"], true);
    let v = ok(&["comeager-branch", "--cond", ANTICHAIN_EMPTY]);
    assert_eq!(v["in_m"], true);
    assert_eq!(v["in_n"], true);
}

#[test]
fn isomorphism_commands() {
    assert_eq!(ok(&["iso-phi", "--word", "1202"])["incr"], serde_json::json!([2, 4]));
    assert_eq!(ok(&["iso-phi-inv", "--seq", r#"{"incr":[2,4]}"#])["word3"], "1202");
    assert_eq!(ok(&["iso-b", "--word", r#"{"word2":"00"}"#])["index"], 3);
    assert_eq!(ok(&["iso-b", "--index", "3"])["word2"], "00");
}

#[test]
fn coding_pair_checks() {
    for poset in ["t", "hechler"] {
        let v = ok(&["check-coding-pair", "--poset", poset, "--samples", "100"]);
        assert_eq!(v["passed"], true, "{poset}");
        for m in ["truncated-phi-star", "shifted-alignment", "flipped-realizer"] {
            let v = ok(&["check-coding-pair", "--poset", poset, "--samples", "100", "--mutation", m]);
            assert_eq!(v["passed"], false, "{poset} {m}");
        }
    }
}

#[test]
fn demos() {
    let v = ok(&["demo", "antichain", "--pairs", "50", "--seed", "7"]);
    assert_eq!(v["all_incompatible"], true);
    assert_eq!(v["results"].as_array().unwrap().len(), 50);
    let v = ok(&["demo", "lemma23", "--sigma", "0110", "--seed", "7"]);
    assert_eq!(v["decided_matches"], true);
    let v = ok(&["demo", "lemma24", "--n", "2", "--seed", "7"]);
    assert_eq!(v["m_witness"]["sampled_branches_in_set"], 0);
    assert_eq!(v["comeager_branch"]["in_m"], true);
    let v = ok(&["demo", "axiom-a", "--k", "2", "--seed", "7"]);
    assert_eq!(v["witnesses"], 27);
    assert_eq!(v["leq_k"], true);
    let v = ok(&["demo", "iso-roundtrip", "--seed", "7"]);
    assert_eq!(v["all_roundtrip"], true);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["demo", "antichain", "--pairs", "10", "--seed", "3"][..],
        &["check-coding-pair", "--poset", "t", "--seed", "3", "--samples", "50"],
        &["demo", "lemma24", "--seed", "3"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
}

#[test]
fn exit_codes() {
    let (code, v) = json(&["iso-phi", "--word", "0110"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], "no_two");
    let (code, v) = json(&["refute-pd", "--cond", r#"{"stem":"","schedule":{"table":[],"tail":["S","F2"]}}"#]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], "not_strict");
    let (code, v) = json(&["validate", "--cond", "{not json"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"], "parse");
    let (code, _) = json(&["axiom-a", "--cond", FULL, "--k", "0", "--oracle", "nope"]);
    assert_eq!(code, 2);
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}
