use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use wrr_core::identities::{self, verify, TheoremId};
use wrr_core::partitions::Partition;
use wrr_core::weights::{integer_weight, WeightKind};

fn wrr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wrr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = wrr(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(p).unwrap()
}

/// `n: value` rows as pairs.
fn rows(text: &str) -> Vec<(usize, String)> {
    text.lines()
        .map(|l| {
            let (n, v) = l.split_once(": ").unwrap();
            (n.parse().unwrap(), v.to_string())
        })
        .collect()
}

#[test]
fn verify_t1_golden() {
    let out = stdout(&["verify", "T1", "--max-n", "10"]);
    assert_eq!(out, golden("verify_t1_10.txt"));
    let r = verify(TheoremId::T1, 10);
    assert!(r.passed);
    assert_eq!(r.cases.len(), 11);
    for c in &r.cases {
        assert!(out.contains(&format!("{}: {} | {} [ok]", c.index, c.lhs, c.rhs)));
    }
}

#[test]
fn verify_json_golden_matches_library() {
    let out = stdout(&["verify", "T2", "--max-n", "4", "--format", "json"]);
    assert_eq!(out, golden("verify_t2_4.json"));
    let parsed: Value = serde_json::from_str(&out).unwrap();
    let lib = serde_json::to_value(verify(TheoremId::T2, 4)).unwrap();
    assert_eq!(parsed, lib);
    assert_eq!(parsed["cases"][4]["lhs"], "2");
    assert_eq!(parsed["cases"][4]["rhs"], "2");
}

#[test]
fn weights_golden() {
    let out = stdout(&["weights", "7,4,2", "--kind", "OMEGA4"]);
    assert_eq!(out, golden("weights_742_omega4.txt"));
    let p = Partition::new(vec![7, 4, 2]).unwrap();
    assert_eq!(
        out.trim(),
        integer_weight(&p, WeightKind::Omega4).unwrap().to_string()
    );
}

#[test]
fn table_goldens_match_library() {
    let out = stdout(&["table", "A_6_1", "--max-n", "4"]);
    assert_eq!(out, golden("table_a_6_1_4.txt"));
    for (n, v) in rows(&out) {
        assert_eq!(
            v,
            identities::modular_count(n as u32, 6, 1)
                .unwrap()
                .to_string()
        );
    }

    let out = stdout(&["table", "Q_7_3", "--max-n", "8", "--format", "tsv"]);
    assert_eq!(out, golden("table_q_7_3_8.tsv"));
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("n\tvalue"));
    for l in lines {
        let (n, v) = l.split_once('\t').unwrap();
        let n: u32 = n.parse().unwrap();
        assert_eq!(v, identities::rank_count(n, 7, 3).unwrap().to_string());
    }

    let out = stdout(&["table", "W_OMEGA_SYMBOLIC", "--max-n", "3"]);
    assert_eq!(out, golden("table_w_symbolic_3.txt"));
    for (n, v) in rows(&out) {
        assert_eq!(v, identities::theorem1_lhs(n as u32).to_string());
    }
}

#[test]
fn series_golden_matches_library() {
    let out = stdout(&["series", "A_6_3", "--order", "8"]);
    assert_eq!(out, golden("series_a_6_3_8.txt"));
    for (n, v) in rows(&out) {
        assert_eq!(v, identities::signed_unrestricted(n as u32).to_string());
    }
}

#[test]
fn json_and_text_carry_the_same_numbers() {
    for id in ["T5", "THM_R", "SYLVESTER"] {
        let text = stdout(&["verify", id, "--max-n", "8"]);
        let json: Value =
            serde_json::from_str(&stdout(&["verify", id, "--max-n", "8", "--format", "json"]))
                .unwrap();
        let cases = json["cases"].as_array().unwrap();
        assert_eq!(cases.len(), 9);
        for c in cases {
            let line = format!(
                "{}: {} | {} [ok]",
                c["index"],
                c["lhs"].as_str().unwrap(),
                c["rhs"].as_str().unwrap()
            );
            assert!(text.contains(&line), "{id}: {line}");
        }
    }
    let text = stdout(&["table", "D", "--max-n", "12"]);
    let json: Value = serde_json::from_str(&stdout(&[
        "table", "D", "--max-n", "12", "--format", "json",
    ]))
    .unwrap();
    let from_json: Vec<(usize, String)> = json["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            (
                r["n"].as_u64().unwrap() as usize,
                r["value"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    assert_eq!(rows(&text), from_json);
}

#[test]
fn sequential_and_parallel_outputs_are_identical() {
    let par = stdout(&["verify", "SURJECTION", "--max-n", "10", "--format", "json"]);
    let seq = stdout(&[
        "verify",
        "SURJECTION",
        "--max-n",
        "10",
        "--format",
        "json",
        "--sequential",
    ]);
    assert_eq!(par, seq);
}

#[test]
fn output_flag_writes_the_file() {
    let dir = std::env::temp_dir().join(format!("wrr-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t2.json");
    let out = wrr(&[
        "verify",
        "T2",
        "--max-n",
        "4",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        golden("verify_t2_4.json")
    );
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn full_default_run_exits_zero() {
    let out = wrr(&["verify", "all", "--format", "tsv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("theorem\tindex\tlhs\trhs\tmatch\n"));
    for id in TheoremId::ALL {
        assert!(text.contains(&format!("\n{}\t", id.name())), "{id} missing");
    }
    assert!(!text.contains("\tfalse\n"));
}

#[test]
fn usage_errors_exit_two() {
    let cases: [&[&str]; 8] = [
        &["verify", "T9"],
        &["verify", "T1", "--max-n", "-3"],
        &["weights", "4,7", "--kind", "OMEGA4"],
        &["weights", "4,x", "--kind", "OMEGA4"],
        &["weights", "4,1", "--kind", "OMEGA2"],
        &["weights", "4", "--kind", "OMEGA9"],
        &["table", "Z_1_1", "--max-n", "3"],
        &["table", "A_6_3", "--max-n", "-1"],
    ];
    for args in cases {
        let out = wrr(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    let out = wrr(&["table", "Q_6_4", "--max-n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = wrr(&["series", "NOPE", "--order", "3"]);
    assert_eq!(out.status.code(), Some(2));
}
