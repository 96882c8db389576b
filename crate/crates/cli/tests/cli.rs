use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

use pointpart::constructions::cycle;
use pointpart_cli::parse_graph;
use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn pointpart(args: &[&str], stdin: Option<&str>) -> Run {
    pointpart_env(args, stdin, &[])
}

fn pointpart_env(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_pointpart"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    cmd.env_remove(pointpart_cli::BUDGET_ENV);
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    }
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn construct(args: &[&str]) -> String {
    let mut full = vec!["construct"];
    full.extend_from_slice(args);
    let r = pointpart(&full, None);
    assert_eq!(r.code, 0, "{}", r.stderr);
    r.stdout
}

fn write_file(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn schema() -> jsonschema::Validator {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/schema.json")).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).expect("schema compiles")
}

#[test]
fn chi_examples() {
    let k5 = construct(&["complete", "5"]);
    let r = pointpart(&["chi", "--t", "2"], Some(&k5));
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("chi_t = 3\n"), "{}", r.stdout);

    assert_eq!(pointpart(&["chi", "--t", "1", "-"], Some("mgraph 0\n")).stdout, "chi_t = 0\n");

    let three_k4 = construct(&["s-clique", "3", "4"]);
    assert!(pointpart(&["chi", "--t", "3"], Some(&three_k4)).stdout.starts_with("chi_t = 4\n"));
}

#[test]
fn k3t_is_critical() {
    let g = construct(&["k3t", "3"]);
    let r = pointpart(&["check-critical", "--t", "3"], Some(&g));
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("critical, k = 2\n"), "{}", r.stdout);
}

#[test]
fn hajos_join_of_four_cycles() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write_file(dir.path(), "c4.mg", &construct(&["cycle", "4"]));
    let c4 = c4.to_str().unwrap();
    let r = pointpart(&["join", "hajos", "--l", "1", c4, c4, "--u1", "1", "--v1", "2", "--u2", "1", "--v2", "2"], None);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let g = parse_graph(&r.stdout).unwrap();
    assert!(g.is_isomorphic(&cycle(7).unwrap()).unwrap());
}

#[test]
fn complement_and_decompose() {
    // K_1 ⊞² K_3 at t = 2: the complement joins only the triangle's pairs.
    let dir = tempfile::tempdir().unwrap();
    let k1 = write_file(dir.path(), "k1.mg", "mgraph 1\n");
    let k3 = write_file(dir.path(), "k3.mg", &construct(&["complete", "3"]));
    let r = pointpart(&["join", "dirac", "--l", "2", k1.to_str().unwrap(), k3.to_str().unwrap()], None);
    assert_eq!(r.stdout, "mgraph 4\ne 1 2 2\ne 1 3 2\ne 1 4 2\ne 2 3 1\ne 2 4 1\ne 3 4 1\n");
    let c = pointpart(&["complement", "--t", "2"], Some(&r.stdout));
    assert_eq!(c.stdout, "mgraph 4\ne 2 3 1\ne 2 4 1\ne 3 4 1\n");
    let d = pointpart(&["decompose", "--t", "2"], Some(&r.stdout));
    assert!(d.stdout.starts_with("2 factors, p = 1, q = 1\n"), "{}", d.stdout);
}

#[test]
fn exit_codes() {
    // Verification violation: Ext_2(3,5) also contains 2C_5.
    let r = pointpart(&["verify", "--suite", "theoremB", "--t", "2", "--k", "3", "--n", "5"], None);
    assert_eq!(r.code, 1, "{}", r.stdout);
    assert!(r.stdout.contains("ext = 10"));
    assert_eq!(pointpart(&["verify", "--suite", "theoremB", "--t", "2", "--k", "3", "--n", "4"], None).code, 0);

    // Input errors: parse failure, missing file, unknown flag, bad value,
    // out-of-envelope request, missing suite parameters.
    for (args, stdin) in [
        (vec!["chi", "--t", "1"], Some("mgraph 2\ne 1 3\n")),
        (vec!["chi", "--t", "1", "/nonexistent/graph.mg"], None),
        (vec!["chi", "--t", "1", "--bogus"], None),
        (vec!["chi", "--t", "zero"], None),
        (vec!["chi", "--t", "0"], Some("mgraph 1\n")),
        (vec!["verify", "--suite", "brooks", "--t", "2", "--k", "3", "--n", "9"], None),
        (vec!["verify", "--suite", "brooks", "--t", "2"], None),
        (vec!["verify", "--suite", "nope"], None),
        (vec!["construct", "cycle"], None),
        (vec!["--jobs", "0", "construct", "cycle", "4"], None),
    ] {
        let r = pointpart(&args, stdin);
        assert_eq!(r.code, 2, "{args:?}: {}", r.stderr);
        assert!(!r.stderr.is_empty());
    }

    // Budget abort, from the flag and from the environment.
    let k9 = construct(&["complete", "9"]);
    assert_eq!(pointpart(&["--budget", "5", "chi", "--t", "1"], Some(&k9)).code, 3);
    let r = pointpart_env(&["chi", "--t", "1"], Some(&k9), &[(pointpart_cli::BUDGET_ENV, "5")]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("unknown"));
    assert_eq!(pointpart(&["--budget", "100", "enumerate", "--t", "2", "--k", "3", "--n", "5"], None).code, 3);

    assert_eq!(pointpart(&["--help"], None).code, 0);
}

#[test]
fn jobs_do_not_change_output() {
    let one = pointpart(&["--jobs", "1", "--json", "enumerate", "--t", "2", "--k", "3", "--n", "5"], None);
    let four = pointpart(&["--jobs", "4", "--json", "enumerate", "--t", "2", "--k", "3", "--n", "5"], None);
    assert_eq!(one.code, 0);
    assert_eq!(one.stdout, four.stdout);
    let r = pointpart(&["--jobs", "3", "verify", "--suite", "joins"], None);
    assert_eq!(r.code, 0, "{}", r.stdout);
}

#[test]
fn enumerate_text() {
    let r = pointpart(&["enumerate", "--t", "2", "--k", "3", "--n", "5", "--ext-only"], None);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("Cri_2(3,5) with multiplicity at most 2: 6 graphs\next = 10, 2 extremal\n"), "{}", r.stdout);
    let r = pointpart(&["enumerate", "--t", "1", "--k", "4", "--n", "5"], None);
    assert!(r.stdout.contains(": 0 graphs\nthe class is empty\n"), "{}", r.stdout);
}

#[test]
fn json_outputs_match_schema() {
    let validator = schema();
    let dir = tempfile::tempdir().unwrap();
    let c5 = construct(&["cycle", "5"]);
    let k5 = construct(&["complete", "5"]);
    let path = write_file(dir.path(), "c5.mg", &c5);
    let path = path.to_str().unwrap();
    let runs: Vec<(Vec<&str>, Option<&str>)> = vec![
        (vec!["chi", "--t", "2"], Some(&c5)),
        (vec!["chi", "--t", "1"], Some("mgraph 0\n")),
        (vec!["check-critical", "--t", "2", "--structure"], Some(&c5)),
        (vec!["check-critical", "--t", "2", "--structure"], Some(&k5)),
        (vec!["check-critical", "--t", "1", "--structure"], Some(&k5)),
        (vec!["check-critical", "--t", "3"], Some(&k5)),
        (vec!["decompose", "--t", "4"], Some(&k5)),
        (vec!["complement", "--t", "1"], Some(&c5)),
        (vec!["join", "dirac", "--l", "2", path, path], None),
        (vec!["join", "hajos", "--l", "1", path, path, "--u1", "1", "--v1", "2", "--u2", "2", "--v2", "3"], None),
        (vec!["construct", "gallai-dirac", "4", "1"], None),
        (vec!["enumerate", "--t", "2", "--k", "3", "--n", "5"], None),
        (vec!["enumerate", "--t", "1", "--k", "4", "--n", "5", "--ext-only"], None),
        (vec!["bounds", "--t", "1", "--k", "4", "--n", "6"], None),
        (vec!["bounds", "--t", "2", "--k", "3", "--n", "5"], None),
        (vec!["verify", "--suite", "theoremB", "--t", "2", "--k", "3", "--n", "5"], None),
        (vec!["verify", "--suite", "theoremA", "--t", "2", "--k", "3", "--n", "5"], None),
        (vec!["verify", "--suite", "brooks", "--t", "1", "--k", "3", "--n", "5"], None),
        (vec!["verify", "--suite", "lowvertex", "--t", "2", "--k", "3", "--n", "5"], None),
        (vec!["verify", "--suite", "extreme", "--t", "2", "--k", "3", "--n", "5"], None),
        (vec!["verify", "--suite", "thm71", "--t", "4", "--k", "2", "--n", "3"], None),
        (vec!["verify", "--suite", "thm85", "--t", "1", "--k", "4", "--n", "6"], None),
        (vec!["verify", "--suite", "joins"], None),
    ];
    let mut kinds = std::collections::BTreeSet::new();
    for (mut args, stdin) in runs {
        args.insert(0, "--json");
        let r = pointpart(&args, stdin);
        assert!(r.code == 0 || r.code == 1, "{args:?}: {}", r.stderr);
        let doc: Value = serde_json::from_str(&r.stdout).unwrap();
        let errors: Vec<String> = validator.iter_errors(&doc).map(|e| format!("{e} at {}", e.instance_path)).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}\n{}", r.stdout);
        kinds.insert(doc["kind"].as_str().unwrap().to_string());
    }
    assert_eq!(kinds.len(), 7, "{kinds:?}");

    // The schema is not vacuous.
    let bad = serde_json::json!({"format_version": 1, "kind": "graph", "graph": {"n": 2, "edges": [[0, 1, 1]]}});
    assert!(!validator.is_valid(&bad));
}
