use std::process::{Command, Output};

use serde_json::Value;

fn stingy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stingy"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn claim<'a>(report: &'a Value, name: &str) -> Option<&'a Value> {
    let in_list = |v: &'a Value| {
        v.as_array()
            .and_then(|a| a.iter().find(|c| c["name"] == name))
    };
    in_list(&report["claims"]).or_else(|| {
        report["bounded"]
            .as_array()?
            .iter()
            .find_map(|b| in_list(&b["claims"]))
    })
}

#[test]
fn analyze_five_cycle() {
    let o = stingy(&["analyze", "--gen", "cycle:5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let lines = json_lines(&o);
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0]["inv"]["chi"], 3);
    assert_eq!(lines[0]["inv"]["iota"], 1);
    assert_eq!(lines[0]["inv"]["omega"], 2);
    // same graph through graph6
    let g6 = lines[0]["g6"].as_str().unwrap().to_string();
    let again = json_lines(&stingy(&["analyze", "--g6", &g6]));
    assert_eq!(again[0]["inv"], lines[0]["inv"]);
}

#[test]
fn analyze_single_vertex() {
    let o = stingy(&["analyze", "--g6", "@"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let inv = &json_lines(&o)[0]["inv"];
    assert_eq!(
        (inv["n"].as_u64(), inv["chi"].as_u64(), inv["iota"].as_u64()),
        (Some(1), Some(1), Some(1))
    );
}

#[test]
fn analyze_with_r1_reports_sanity_record() {
    let o = stingy(&["analyze", "--gen", "petersen", "--r", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let rep = &json_lines(&o)[0];
    assert_eq!(
        claim(rep, "r1-sanity[r=1]").unwrap()["verdict"],
        "checked-pass"
    );
}

#[test]
fn bad_graph6_is_an_error() {
    let o = stingy(&["analyze", "--g6", "~~~~"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("error"));
}

#[test]
fn exhaustive_sweep_of_four_vertices() {
    let o = stingy(&["sweep", "--exhaustive", "--min-n", "4", "--max-n", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(json_lines(&o).len(), 11);
}

#[test]
fn sweep_reports_conjecture_for_each_r() {
    let o = stingy(&[
        "sweep",
        "--exhaustive",
        "--min-n",
        "5",
        "--max-n",
        "5",
        "--r",
        "2,3",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let lines = json_lines(&o);
    assert_eq!(lines.len(), 34);
    for rep in &lines {
        for r in [2, 3] {
            assert!(
                claim(rep, &format!("generalized-reed[r={r}]")).is_some(),
                "{rep}"
            );
        }
    }
}

#[test]
fn malformed_input_lines_are_reported() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("graphs.g6");
    std::fs::write(&input, "Dhc\nnot a graph\n\nC~\n").unwrap();
    let o = stingy(&["sweep", "--input", input.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains(":2:"), "{}", stderr(&o));
    assert_eq!(json_lines(&o).len(), 2);
}

#[test]
fn unknown_claim_lists_valid_names() {
    let o = stingy(&["search", "--claim", "foo", "--max-n", "4"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(
        err.contains("foo") && err.contains("reed-disjunct") && err.contains("generalized-reed"),
        "{err}"
    );
}

#[test]
fn search_proved_claim_finds_nothing() {
    let o = stingy(&["search", "--claim", "reed-disjunct", "--max-n", "6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
}

#[test]
fn search_beyond_exhaustive_range_needs_seed() {
    let o = stingy(&["search", "--claim", "reed-disjunct", "--max-n", "8"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--seed"));
    let o = stingy(&[
        "search",
        "--claim",
        "reed-disjunct",
        "--max-n",
        "8",
        "--seed",
        "1",
        "--samples",
        "50",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn verify_suites_are_clean() {
    for suite in ["swap", "identities", "lonely-path"] {
        let o = stingy(&["verify", "--suite", suite, "--max-n", "5"]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stderr(&o));
        let rep = &json_lines(&o)[0];
        assert_eq!(rep["violations"], 0);
        assert_eq!(rep["suite"], suite);
    }
    assert_eq!(
        stingy(&["verify", "--suite", "nope", "--max-n", "3"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn csv_output_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.csv");
    let o = stingy(&[
        "--format",
        "csv",
        "--out",
        out.to_str().unwrap(),
        "sweep",
        "--exhaustive",
        "--max-n",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    let mut rows = csv::Reader::from_reader(text.as_bytes());
    let header = rows.headers().unwrap().clone();
    assert_eq!(&header[0], "g6");
    assert!(header.iter().any(|h| h == "very-stingy-reed"));
    assert_eq!(rows.records().count(), 7);
}
