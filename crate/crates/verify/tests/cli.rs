use std::io::Write;
use std::process::{Command, Output, Stdio};

use roman_core::canon::are_isomorphic;
use roman_core::families::{complete_bipartite, cycle_graph, figure3_graph, path_graph};
use roman_core::{graph6, Graph};
use serde_json::Value;

fn roman(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_roman"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn g6(g: &Graph) -> String {
    graph6::write(g).unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn stdout_lines(out: &Output) -> Vec<String> {
    String::from_utf8_lossy(&out.stdout).lines().map(str::to_owned).collect()
}

#[test]
fn compute_gamma_of_p6() {
    let out = roman(&["compute", "gamma"], &g6(&path_graph(6)));
    assert!(out.status.success());
    let v = &json_lines(&out)[0];
    assert_eq!(v["gamma"], 2);
    assert_eq!(v["sets"], serde_json::json!([[1, 4]]));
    assert_eq!(v["unique"], true);
}

#[test]
fn compute_each_invariant() {
    let input = format!("{}\n{}\n", g6(&path_graph(3)), g6(&cycle_graph(6).unwrap()));
    let gr = json_lines(&roman(&["compute", "gamma-r"], &input));
    assert_eq!((gr[0]["gamma_r"].clone(), gr[1]["gamma_r"].clone()), (2.into(), 4.into()));
    let d = json_lines(&roman(&["compute", "differential"], &input));
    assert_eq!((d[0]["differential"].clone(), d[1]["differential"].clone()), (1.into(), 2.into()));
    let b = json_lines(&roman(&["compute", "bondage"], &g6(&cycle_graph(3).unwrap())));
    assert_eq!(b[0]["bondage"], 2);
    let e = json_lines(&roman(&["compute", "eds"], &g6(&cycle_graph(4).unwrap())));
    assert_eq!(e[0]["sets"], serde_json::json!([]));
}

#[test]
fn classify_examples() {
    let input = [path_graph(6), path_graph(4), complete_bipartite(4, 4)].iter().map(g6).collect::<Vec<_>>().join("\n");
    let out = roman(&["classify", "--bondage"], &input);
    assert!(out.status.success());
    let rows = json_lines(&out);
    assert_eq!(rows[0]["in_r_uvr"], true);
    assert_eq!(rows[0]["bondage"], 1);
    assert_eq!(rows[1]["in_r_uvr"], false);
    assert_eq!(rows[2]["in_r_uvr"], true);
    assert_eq!(rows[0]["per_vertex_effect"].as_array().unwrap().len(), 6);
}

#[test]
fn classify_small_orders_make_no_class_claims() {
    let rows = json_lines(&roman(&["classify"], &g6(&path_graph(2))));
    assert_eq!(rows[0]["gamma_r"], 2);
    assert!(rows[0]["in_r_uvr"].is_null());
}

#[test]
fn generate_family_members() {
    let seven = stdout_lines(&roman(&["generate", "t-trees", "--max-n", "7"], ""));
    assert_eq!(seven.len(), 3);
    assert!(seven[0].ends_with(" ABA"));
    let eight = stdout_lines(&roman(&["generate", "t-trees", "--max-n", "8"], ""));
    assert_eq!(seven, eight);
}

#[test]
fn generate_free_trees_and_unicyclic() {
    assert_eq!(stdout_lines(&roman(&["generate", "free-trees", "--n", "5"], "")).len(), 3);
    assert_eq!(stdout_lines(&roman(&["generate", "unicyclic", "--n", "4"], "")).len(), 2);
    let out = roman(&["generate", "free-trees", "--n", "40"], "");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn explore_unicyclic() {
    let members = |n: &str| {
        let v = &json_lines(&roman(&["explore", "unicyclic", "--n", n], ""))[0];
        v["members"].as_array().unwrap().iter().map(|m| graph6::parse(m.as_str().unwrap()).unwrap()).collect::<Vec<_>>()
    };
    let three = members("3");
    assert_eq!(three.len(), 1);
    assert!(are_isomorphic(&three[0], &cycle_graph(3).unwrap()).unwrap());
    assert!(members("4").is_empty());
    let eight = members("8");
    assert_eq!(eight.len(), 1);
    assert!(are_isomorphic(&eight[0], &figure3_graph()).unwrap());
}

#[test]
fn explore_sizes() {
    let v = &json_lines(&roman(&["explore", "sizes", "--n", "4"], ""))[0];
    assert_eq!(v["exhaustive"], true);
    // order 4 members: K_4 (gamma_R 2) and K_2 join two isolated vertices (gamma_R 2)
    assert_eq!(v["rows"][0]["gamma_r"], 2);
    assert_eq!(v["rows"][0]["max_size"], 6);
    let v = &json_lines(&roman(&["explore", "sizes", "--n", "9"], ""))[0];
    assert_eq!(v["exhaustive"], false);
}

#[test]
fn verify_exit_codes() {
    let ok = roman(&["verify", "--suite", "EQ1", "--graphs-max-n", "5"], "");
    assert_eq!(ok.status.code(), Some(0));
    let summary = json_lines(&ok).pop().unwrap();
    assert_eq!(summary["summary"]["failed"], 0);

    let bad = roman(&["verify", "--suite", "OBS-EQUI", "--graphs-max-n", "3", "--trees-max-n", "3", "--unicyclic-n", "3"], "");
    assert_eq!(bad.status.code(), Some(1));
    let rows = json_lines(&bad);
    assert!(rows.iter().any(|r| r["verdict"] == "fail" && r["witness"].is_string()));

    assert_eq!(roman(&["verify", "--suite", "NOPE"], "").status.code(), Some(2));
    assert_eq!(roman(&["verify", "--graphs-max-n", "9"], "").status.code(), Some(2));
    assert_eq!(roman(&["frobnicate"], "").status.code(), Some(2));
}

#[test]
fn smoke_run_of_every_check() {
    let out = roman(&["verify", "--suite", "all", "--graphs-max-n", "3", "--trees-max-n", "3", "--unicyclic-n", "3"], "");
    let rows = json_lines(&out);
    let summary = &rows.last().unwrap()["summary"];
    assert!(summary["results"].as_u64().unwrap() > 0);
    let failing: std::collections::BTreeSet<&str> =
        rows.iter().filter(|r| r["verdict"] == "fail").map(|r| r["check"].as_str().unwrap()).collect();
    // only the differential-class statements are refuted at these sizes
    assert_eq!(failing.into_iter().collect::<Vec<_>>(), vec!["OBS-EQUI", "THM-MAIN"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn reports_are_reproducible() {
    let args = ["verify", "--suite", "EQ1,THM-DIFF-I,LEM-ON", "--trees-max-n", "8"];
    let a = roman(&args, "");
    let b = roman(&args, "");
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn table_output() {
    let out = roman(&["verify", "--suite", "EQ1", "--table", "--graphs-max-n", "4"], "");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().next().unwrap().starts_with("check"));
    assert!(text.lines().any(|l| l.starts_with("EQ1")));
}

#[test]
fn fault_injection_is_detected() {
    let out = roman(&["verify", "--suite", "THM-DIFF-I", "--fault-seed", "1", "--graphs-max-n", "5"], "");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn parse_errors_name_the_line() {
    let out = roman(&["compute", "gamma"], "Bg\nBw\nB!\n");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains(":3:"), "{err}");
}

#[test]
fn file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("three.g6");
    std::fs::write(&path, format!("Bg\nBw\n{}\n", g6(&path_graph(6)))).unwrap();
    let out = roman(&["compute", "gamma", path.to_str().unwrap()], "");
    assert_eq!(json_lines(&out).len(), 3);

    let empty = dir.path().join("empty.g6");
    std::fs::write(&empty, "").unwrap();
    let out = roman(&["compute", "gamma", empty.to_str().unwrap()], "");
    assert!(out.status.success());
    assert!(out.stdout.is_empty());

    let missing = dir.path().join("missing.g6");
    assert_eq!(roman(&["classify", missing.to_str().unwrap()], "").status.code(), Some(2));
}
