//! End-to-end tests against the built binary: output shapes, pinned
//! values, exit codes, and byte determinism.

use std::process::{Command, Output};

fn pytree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pytree"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = pytree(args);
    assert!(out.status.success(), "{args:?} failed: {:?}", out);
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn exit_code(args: &[&str]) -> i32 {
    pytree(args).status.code().expect("exit code")
}

#[test]
fn enumerate_depth_zero_is_the_root_record() {
    let out = stdout_of(&["enumerate", "--depth", "0"]);
    assert_eq!(
        out,
        "{\"s\":\"3\",\"c\":\"4\",\"n\":\"5\",\"m\":\"2\",\"n2\":\"1\",\"level\":0,\"path\":\"\",\"word\":\"L^2\"}\n"
    );
}

#[test]
fn enumerate_depth_one_emits_four_records_level_by_level() {
    let out = stdout_of(&["enumerate", "--depth", "1"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].contains("\"n\":\"5\""));
    assert!(lines[1].contains("\"n\":\"13\""));
    assert!(lines[2].contains("\"n\":\"17\""));
    assert!(lines[3].contains("\"n\":\"29\""));
}

#[test]
fn enumerate_csv_has_header_plus_records() {
    let out = stdout_of(&["enumerate", "--depth", "1", "--format", "csv"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "s,c,n,m,n2,level,path,word");
    assert_eq!(lines.len(), 1 + 4);
    assert_eq!(lines[1], "3,4,5,2,1,0,,L^2");
    // Paths and words contain commas, so they arrive quoted.
    assert_eq!(lines[2], "5,12,13,3,2,1,U-,\"U^-2,L^2\"");
}

#[test]
fn enumerate_dot_depth_two_has_13_nodes_12_edges() {
    let out = stdout_of(&["enumerate", "--depth", "2", "--format", "dot"]);
    assert!(out.starts_with("digraph pytree {"));
    assert!(out.trim_end().ends_with('}'));
    let nodes = out.lines().filter(|l| l.contains("[label=")).count();
    let edges = out.lines().filter(|l| l.contains(" -> ")).count();
    assert_eq!((nodes, edges), (13, 12));
    assert!(out.contains("[label=\"3,4,5\"]"));
    assert!(out.contains("t -> t0;"));
}

#[test]
fn children_of_the_neighbor_check_point() {
    let out = stdout_of(&["children", "33", "56", "65"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].contains("\"s\":\"51\"") && lines[0].contains("\"kind\":\"U-\""));
    assert!(lines[1].contains("\"s\":\"209\"") && lines[1].contains("\"kind\":\"L+\""));
    assert!(lines[2].contains("\"s\":\"275\"") && lines[2].contains("\"kind\":\"U+\""));
}

#[test]
fn parent_reports_kind_or_root() {
    let out = stdout_of(&["parent", "5", "12", "13"]);
    assert!(out.contains("\"s\":\"3\"") && out.contains("\"kind\":\"U-\""));
    assert_eq!(stdout_of(&["parent", "3", "4", "5"]), "root\n");
}

#[test]
fn diff_path_walks_the_invariant_direction() {
    let out = stdout_of(&["diff-path", "15", "8", "17", "--form", "R", "--steps", "3"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].contains("\"s\":\"15\"") && lines[0].contains("\"diff\":\"-7\""));
    assert!(lines[1].contains("\"s\":\"65\"") && lines[1].contains("\"diff\":\"7\""));
    assert!(lines[2].contains("\"s\":\"403\"") && lines[2].contains("\"diff\":\"-7\""));
}

#[test]
fn diff_root_and_solve_pell_pin_the_worked_examples() {
    assert!(stdout_of(&["diff-root", "17"]).contains("\"s\":\"45\",\"c\":\"28\",\"n\":\"53\""));
    assert!(stdout_of(&["diff-root", "-89"]).contains("\"s\":\"51\",\"c\":\"140\",\"n\":\"149\""));
    assert_eq!(stdout_of(&["solve-pell", "89"]), "11+4√2\n");
    assert_eq!(stdout_of(&["solve-pell", "17"]), "5+2√2\n");
}

#[test]
fn verify_matches_at_small_bounds() {
    let out = stdout_of(&["verify", "--max-n", "100"]);
    assert!(out.contains("16 triples"));
    assert!(out.trim_end().ends_with("match"));
    let out = stdout_of(&["verify", "--max-n", "5"]);
    assert!(out.contains("1 triples"));
}

#[test]
fn exit_codes_follow_the_contract() {
    assert_eq!(
        exit_code(&["enumerate", "--depth", "2", "--format", "xml"]),
        2
    );
    assert_eq!(exit_code(&["verify", "--max-n", "4"]), 2);
    assert_eq!(
        exit_code(&["diff-path", "3", "4", "5", "--form", "P", "--steps", "0"]),
        2
    );
    assert_eq!(exit_code(&["children", "6", "8", "10"]), 3);
    assert_eq!(exit_code(&["children", "4", "3", "5"]), 3);
    assert_eq!(exit_code(&["parent", "3", "4", "x"]), 3);
    assert_eq!(exit_code(&["diff-root", "4"]), 3);
    assert_eq!(exit_code(&["solve-pell", "6"]), 3);
    assert_eq!(exit_code(&["diff-root", "15"]), 4);
    assert_eq!(exit_code(&["diff-root", "7"]), 4);
    assert_eq!(exit_code(&["solve-pell", "3"]), 4);
}

#[test]
fn jsonl_records_round_trip_through_relocation() {
    let out = stdout_of(&["enumerate", "--depth", "3"]);
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("valid json");
        let get = |k: &str| v[k].as_str().unwrap().to_string();
        let t = pytree_core::PrimTriple::new(
            get("s").parse().unwrap(),
            get("c").parse().unwrap(),
            get("n").parse().unwrap(),
        )
        .expect("emitted triples are valid");
        let path = pytree_core::locate(&t);
        assert_eq!(path.to_string(), get("path"));
        assert_eq!(pytree_core::word_for(&path).to_string(), get("word"));
        assert_eq!(path.len() as u64, v["level"].as_u64().unwrap());
        let params = pytree_core::params_from_triple(&t);
        assert_eq!(params.m().to_string(), get("m"));
        assert_eq!(params.n().to_string(), get("n2"));
        // The serialized path parses back to the same node.
        let reparsed: pytree_core::TreePath = get("path").parse().unwrap();
        assert_eq!(pytree_core::node_at(&reparsed), t);
    }
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["enumerate", "--depth", "4"],
        vec!["enumerate", "--depth", "3", "--format", "csv"],
        vec!["enumerate", "--depth", "3", "--format", "dot"],
        vec!["diff-root", "-89"],
    ] {
        assert_eq!(pytree(&args).stdout, pytree(&args).stdout);
    }
}
