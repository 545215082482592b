use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn wrdom(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wrdom"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(args: &[&str], stdin: &str) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = wrdom(&full, stdin);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn gen_emits_graph6() {
    assert_eq!(stdout(&wrdom(&["gen", "path:4"], "")), "Ch\n");
    let c4 = json(&["gen", "prod:complete:2,complete:2"], "");
    assert_eq!(c4[0]["order"], 4);
    assert_eq!(c4[0]["edges"].as_array().unwrap().len(), 4);
    let corona = json(&["gen", "corona:cycle:3,1"], "");
    assert_eq!(corona[0]["order"], 6);
    assert_eq!(stdout(&wrdom(&["gen", "connected:4"], "")).lines().count(), 6);
}

#[test]
fn gen_is_deterministic_per_seed() {
    let a = stdout(&wrdom(&["--seed", "9", "gen", "gnp:12,0.4"], ""));
    let b = stdout(&wrdom(&["--seed", "9", "gen", "gnp:12,0.4"], ""));
    let c = stdout(&wrdom(&["--seed", "10", "gen", "gnp:12,0.4"], ""));
    assert_eq!(a, b);
    assert_ne!(a, c);
}

#[test]
fn solve_examples() {
    let p7 = json(&["solve", "--spec", "path:7", "--invariants", "gamma_r"], "");
    assert_eq!(p7[0]["results"][0]["invariant_id"], "gamma_r");
    assert_eq!(p7[0]["results"][0]["value"], 3);
    let k5e = json(&["solve", "--spec", "join:complete:3,empty:2", "--invariants", "gamma_s"], "");
    assert_eq!(k5e[0]["results"][0]["value"], 2);
    let k1 = json(&["solve", "--invariants", "gamma"], "@\n");
    assert_eq!(k1[0]["results"][0]["value"], 1);
    assert_eq!(k1[0]["results"][0]["witness"], "0");
}

#[test]
fn solve_continues_past_oversized_graphs() {
    let out = wrdom(&["--format", "json", "--limit-n", "5", "solve", "--invariants", "gamma"], "Ch\nE???\n");
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["results"][0]["value"], 2);
    assert!(v[1]["errors"]["gamma"].as_str().unwrap().contains("limit"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn verify_examples() {
    let tree = fixture("spider_tree6.edges");
    let ok = json(&["verify", "--edges", &tree, "--class", "wrdf", "--object", "2,0,1,0,0,0"], "");
    assert_eq!(ok["valid"], true);
    assert!(ok["failing_vertex"].is_null());
    let p3 = json(&["verify", "--spec", "path:3", "--class", "wrdf", "--object", "0,1,0"], "");
    assert_eq!((p3["valid"].as_bool(), p3["failing_vertex"].as_u64()), (Some(false), Some(0)));
    let zeros = json(&["verify", "--spec", "path:3", "--class", "wrdf", "--object", "0,0,0"], "");
    assert_eq!(zeros["valid"], false);
    assert!(zeros["failing_vertex"].is_u64());
    let secure = json(&["verify", "--edges", &tree, "--class", "secure", "--object", "0,1,2,4"], "");
    assert_eq!(secure["valid"], true);
    let text = stdout(&wrdom(&["verify", "--spec", "path:3", "--class", "secure", "--object", "1"], ""));
    assert!(text.contains("first failing vertex 0") && text.contains("move 1 -> 0"), "{text}");
    let kdom = json(&["verify", "--spec", "cycle:4", "--class", "k-dom", "--k", "2", "--object", "0,2"], "");
    assert_eq!(kdom["valid"], true);
}

#[test]
fn verify_rejects_malformed_objects() {
    let out = wrdom(&["verify", "--spec", "path:3", "--class", "wrdf", "--object", "0,3,0"], "");
    assert_eq!(out.status.code(), Some(3));
    let out = wrdom(&["verify", "--spec", "path:3", "--class", "df", "--object", "7"], "");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn construct_examples() {
    let two = json(&["--seed", "4", "construct", "--spec", "random-tree:20", "--algorithm", "two-thirds"], "");
    assert_eq!(two["theorem_id"], "two-thirds");
    assert!(two["claimed_bound"].as_u64().unwrap() <= 13);
    assert_eq!(two["valid"], true);
    let weight: u64 = two["object"].as_str().unwrap().split(',').map(|x| x.parse::<u64>().unwrap()).sum();
    assert!(weight <= 13);

    let k5e = json(&["construct", "--spec", "join:complete:3,empty:2", "--algorithm", "complement-secure"], "");
    assert_eq!(k5e["object"].as_str().unwrap().split(',').count(), 2);

    let broom = format!("@{}", fixture("broom9.edges"));
    let rows = json(
        &[
            "construct",
            "--spec",
            "complete:3",
            "--algorithm",
            "product-two-rows",
            "--with",
            &broom,
            "--function",
            "2,0,1,0,0,0,0,0,0",
        ],
        "",
    );
    assert_eq!((rows["claimed_bound"].as_u64(), rows["valid"].as_bool()), (Some(8), Some(true)));
    assert_eq!(rows["trusted_input"], false);

    let lift = json(&["construct", "--spec", "path:4", "--algorithm", "product-lift", "--with", "complete:3"], "");
    assert_eq!(lift["claimed_bound"], 6);
}

#[test]
fn construct_errors() {
    let unknown = wrdom(&["construct", "--spec", "path:4", "--algorithm", "nope"], "");
    assert_eq!(unknown.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&unknown.stderr).contains("two-thirds"));
    let missing = wrdom(&["construct", "--spec", "path:4", "--algorithm", "product-secure"], "");
    assert_eq!(missing.status.code(), Some(1));
    let complete = wrdom(&["construct", "--spec", "complete:4", "--algorithm", "complement-secure"], "");
    assert_eq!(complete.status.code(), Some(1));
}

#[test]
fn audit_examples() {
    let all6 = wrdom(&["--workers", "4", "audit", "--spec", "all:6"], "");
    assert_eq!(all6.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&all6.stderr).contains("156 graphs: 0 violations"));

    let c5 = json(&["audit", "--spec", "cycle:5"], "");
    let half = c5[0]["bounds"].as_array().unwrap().iter().find(|b| b["id"] == "secure-le-half-order").unwrap();
    assert_eq!(half["applicable"], false);
    assert!(half["reason"].is_string());
    assert!(c5[0]["invariants"]["gamma_s"].is_u64());
    assert!(c5[0]["conjectures"].is_array());

    let big = stdout(&wrdom(&["gen", "cycle:20"], ""));
    let mixed = wrdom(&["--format", "json", "--limit-n", "10", "audit"], &format!("Ch\n{big}"));
    assert_eq!(mixed.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&mixed.stdout).unwrap();
    assert_eq!((v[0]["complete"].as_bool(), v[1]["complete"].as_bool()), (Some(true), Some(false)));
    assert!(v[1]["skipped"].is_string());
    assert!(String::from_utf8_lossy(&mixed.stderr).contains("skipped"));
}

#[test]
fn audit_product_with_second_factor() {
    let v = json(&["audit", "--spec", "complete:3", "--with", "path:3"], "");
    let ids: Vec<&str> = v[0]["bounds"].as_array().unwrap().iter().map(|b| b["id"].as_str().unwrap()).collect();
    assert!(ids.iter().all(|id| id.starts_with("product.")), "{ids:?}");
}

#[test]
fn ng_examples() {
    let bull = json(&["ng", "--edges", &fixture("bull.edges")], "");
    assert_eq!((bull[0]["secure_sum"].as_u64(), bull[0]["secure_product"].as_u64()), (Some(6), Some(9)));
    let sc8 = json(&["ng", "--edges", &fixture("selfcomp8.edges")], "");
    assert_eq!((sc8[0]["secure_sum"].as_u64(), sc8[0]["weak_roman_product"].as_u64()), (Some(8), Some(16)));
    assert_eq!(sc8[0]["refined_side"], "both");
    // Same degree sequence, degree-2 vertices spread around the 4-cycle instead of paired.
    let cyclic = json(&["ng", "--edges", &fixture("selfcomp8_cyclic.edges")], "");
    assert_eq!((cyclic[0]["secure_sum"].as_u64(), cyclic[0]["secure_product"].as_u64()), (Some(6), Some(9)));
    let k1 = json(&["ng"], "@\n");
    assert_eq!(k1[0]["secure_sum"], 2);
}

#[test]
fn conjecture_table() {
    let v = json(&["conjecture", "--family", "path", "--t-max", "8"], "");
    let rows = v["conjectures"].as_array().unwrap();
    assert_eq!(rows.len(), 7);
    assert!(rows.iter().all(|r| r["matches"] == true));
    let text = stdout(&wrdom(&["conjecture", "--family", "cycle", "--t-max", "6"], ""));
    assert_eq!(text.lines().count(), 2 + 4);
    assert_eq!(wrdom(&["conjecture", "--t-max", "40"], "").status.code(), Some(1));
}

#[test]
fn exit_codes_and_help() {
    let help = wrdom(&["--help"], "");
    assert_eq!(help.status.code(), Some(0));
    assert!(stdout(&help).contains("Exit codes"));
    let gen_help = stdout(&wrdom(&["gen", "--help"], ""));
    assert!(gen_help.contains("corona") && gen_help.contains("spec    ="), "{gen_help}");
    assert_eq!(wrdom(&["--version"], "").status.code(), Some(0));
    assert_eq!(wrdom(&[], "").status.code(), Some(1));
    assert_eq!(wrdom(&["solve", "--format", "yaml"], "").status.code(), Some(1));
    assert_eq!(wrdom(&["solve"], "not graph6 ~~~\n").status.code(), Some(3));
    assert_eq!(wrdom(&["solve", "--graph6", "/no/such/file"], "").status.code(), Some(3));
    let bad_spec = wrdom(&["gen", "prod:path:x,path:2"], "");
    assert_eq!(bad_spec.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&bad_spec.stderr).contains("position 10"));
}

#[test]
fn text_and_json_carry_the_same_numbers() {
    let text = stdout(&wrdom(&["solve", "--spec", "cycle:7", "--invariants", "gamma_r,gamma_s"], ""));
    let v = json(&["solve", "--spec", "cycle:7", "--invariants", "gamma_r,gamma_s"], "");
    for r in v[0]["results"].as_array().unwrap() {
        let line = format!(
            "{} = {}  witness {}",
            r["invariant_id"].as_str().unwrap(),
            r["value"],
            r["witness"].as_str().unwrap()
        );
        assert!(text.contains(&line), "{line} not in {text}");
    }
}
