//! The binary, driven as a user would.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use supermagic_cli::Certificate;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supermagic"))
        .args(args)
        .env_remove("SUPERMAGIC_NODE_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn generate(dir: &Path, name: &str, args: &[&str]) -> std::path::PathBuf {
    let path = dir.join(name);
    let mut full = vec!["generate"];
    full.extend(args);
    full.extend(["--out", path.to_str().unwrap()]);
    let o = run(&full);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

#[test]
fn generate_fans() {
    let dir = tempfile::tempdir().unwrap();
    let path = generate(dir.path(), "f.json", &["--family", "fans", "--m", "2", "--n", "3"]);
    let cert = Certificate::parse(&fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(cert.magic_constant, Some(57));
    assert!(cert.valid);
    assert_eq!(cert.typo_corrections, ["fans-even-vertex"]);
}

#[test]
fn generate_to_stdout_is_the_certificate() {
    let o = run(&["generate", "--family", "antiprism", "--l", "2", "--m", "3", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let cert = Certificate::parse(&stdout(&o)).unwrap();
    assert_eq!(cert.magic_constant, Some(141));
    assert!(String::from_utf8_lossy(&o.stderr).contains("c = 141"));
}

#[test]
fn generate_out_of_range() {
    let o = run(&["generate", "--family", "fans", "--m", "1", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("m >= 2"));
    assert!(o.stdout.is_empty());
}

#[test]
fn generate_is_byte_stable() {
    let a = run(&["generate", "--family", "books", "--m", "2", "--n", "3"]);
    let b = run(&["generate", "--family", "books", "--m", "2", "--n", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn generate_bad_family_and_params() {
    assert_eq!(run(&["generate", "--family", "prisms", "--m", "2", "--n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["generate", "--family", "fans", "--m", "2"]).status.code(), Some(2));
    assert_eq!(run(&["generate", "--family", "fans", "--m", "2", "--n", "3", "--s", "1"]).status.code(), Some(2));
}

#[test]
fn verify_round_trip_and_mutation() {
    let dir = tempfile::tempdir().unwrap();
    let path = generate(dir.path(), "f.json", &["--family", "fans", "--m", "2", "--n", "3"]);
    let o = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("c = 57"));

    // two edge labels exchanged: still bijective, but two triangles move
    let text = fs::read_to_string(&path).unwrap();
    let edited = text
        .replace("[\"c[1]\", \"v[1][1]\", 18]", "[\"c[1]\", \"v[1][1]\", @]")
        .replace("[\"c[1]\", \"v[2][1]\", 16]", "[\"c[1]\", \"v[2][1]\", 18]")
        .replace('@', "16");
    assert_ne!(edited, text);
    fs::write(&path, edited).unwrap();
    let o = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("bijective: true"));
    assert!(out.contains("first_violation: cycle (c[1] v[2][1] v[3][1]) has weight 59"), "{out}");
}

#[test]
fn verify_single_edited_label() {
    let dir = tempfile::tempdir().unwrap();
    let path = generate(dir.path(), "f.json", &["--family", "fans", "--m", "2", "--n", "3"]);
    let text = fs::read_to_string(&path).unwrap().replace("\"c[1]\": 8", "\"c[1]\": 7");
    fs::write(&path, text).unwrap();
    let o = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("first_violation: cycle ("));
}

#[test]
fn verify_w3_strict_notes_designated_claim() {
    let dir = tempfile::tempdir().unwrap();
    let path = generate(dir.path(), "w.json", &["--family", "wheels", "--m", "2", "--n", "3"]);
    assert_eq!(run(&["verify", path.to_str().unwrap()]).status.code(), Some(0));
    let o = run(&["verify", path.to_str().unwrap(), "--mode", "strict"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("designated_only_claim:"));
    assert!(out.contains("(v[1][1] v[2][1] v[3][1]) has weight 69"), "{out}");
}

#[test]
fn verify_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = generate(dir.path(), "l.json", &["--family", "ladders", "--m", "2", "--n", "2"]);
    let o = run(&["verify", path.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["magic_constant"], 68);
    assert_eq!(v["super"], true);
    assert_eq!(v["weights"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_rejects_bad_files() {
    let dir = tempfile::tempdir().unwrap();
    let junk = dir.path().join("junk.json");
    fs::write(&junk, "{ not json").unwrap();
    assert_eq!(run(&["verify", junk.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["verify", dir.path().join("missing.json").to_str().unwrap()]).status.code(), Some(2));

    // labels for a vertex the graph does not have
    let path = generate(dir.path(), "f.json", &["--family", "fans", "--m", "2", "--n", "3"]);
    let text = fs::read_to_string(&path).unwrap().replace("\"c[1]\": 8", "\"c[9]\": 8");
    fs::write(&path, text).unwrap();
    assert_eq!(run(&["verify", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn search_k3() {
    let o = run(&["search", "--k3", "--cycle", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("solutions: 36\n"));
    assert!(out.contains("constants_seen: 21\n"));
    assert!(out.contains("exhausted: true\n"));
}

#[test]
fn search_single_fan_with_limit_writes_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&[
        "search",
        "--family",
        "fans",
        "--m",
        "1",
        "--n",
        "3",
        "--cycle",
        "3",
        "--limit",
        "1",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("solutions: 1\n"));
    let cert = dir.path().join("solution-0001.json");
    let o = run(&["verify", cert.to_str().unwrap(), "--mode", "strict"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn search_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    let path2 = dir.path().join("path2.txt");
    fs::write(&path2, "a b\nb c\n").unwrap();
    let o = run(&["search", "--edge-list", path2.to_str().unwrap(), "--cycle", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no covering"));

    let tri = dir.path().join("tri.txt");
    fs::write(&tri, "# a triangle\na b\nb c\n\nc a  # closing edge\n").unwrap();
    let o =
        run(&["search", "--edge-list", tri.to_str().unwrap(), "--cycle", "3", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("solutions: 36\n"));
    let o = run(&["verify", dir.path().join("solution-0036.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn search_budget_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_supermagic"))
        .args(["search", "--k3", "--cycle", "3"])
        .env("SUPERMAGIC_NODE_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("exhausted: false\n"));
    assert!(out.contains("nodes: 5\n"), "{out}");
    // the flag wins over the environment
    let o = Command::new(env!("CARGO_BIN_EXE_supermagic"))
        .args(["search", "--k3", "--cycle", "3", "--budget", "100000"])
        .env("SUPERMAGIC_NODE_BUDGET", "5")
        .output()
        .unwrap();
    assert!(stdout(&o).contains("exhausted: true\n"));
}

#[test]
fn search_needs_an_input() {
    assert_eq!(run(&["search", "--cycle", "3"]).status.code(), Some(2));
    assert_eq!(run(&["search", "--k3", "--cycle", "5"]).status.code(), Some(2));
}

#[test]
fn sweep_ladders() {
    let o = run(&["sweep", "--family", "ladders", "--m", "2,3", "--n", "2..5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "m,n,v,e,c_predicted,c_verified,match");
    assert_eq!(lines.len(), 9);
    let constants: Vec<&str> = lines[1..].iter().map(|l| l.split(',').nth(5).unwrap()).collect();
    assert_eq!(constants, ["68", "102", "136", "170", "100", "151", "202", "253"]);
    assert!(lines[1..].iter().all(|l| l.ends_with(",true")));
}

#[test]
fn sweep_fans_json() {
    let o = run(&["sweep", "--family", "fans", "--m", "2", "--n", "3..4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let c: Vec<u64> = rows.as_array().unwrap().iter().map(|r| r["c_verified"].as_u64().unwrap()).collect();
    assert_eq!(c, [57, 73]);
}

#[test]
fn sweep_empty_range() {
    let o = run(&["sweep", "--family", "fans", "--m", "2", "--n", "5..4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "m,n,v,e,c_predicted,c_verified,match\n");
    let o = run(&["sweep", "--family", "fans", "--m", "2", "--n", "5..4", "--format", "json"]);
    assert_eq!(stdout(&o).trim(), "[]");
}

#[test]
fn sweep_reports_fractional_closed_form() {
    let o = run(&["sweep", "--family", "fan-union", "--s", "1", "--k", "2", "--n", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert_eq!(out.lines().nth(1).unwrap(), "1,2,3,10,11,133/2,66,false");
}

#[test]
fn sweep_usage_errors() {
    assert_eq!(run(&["sweep", "--family", "fans", "--m", "2"]).status.code(), Some(2));
    assert_eq!(run(&["sweep", "--family", "fans", "--m", "1..2", "--n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["sweep", "--family", "fans", "--m", "2", "--n", "3", "--l", "2"]).status.code(), Some(2));
    assert_eq!(run(&["sweep", "--family", "fans", "--m", "x", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn export_books() {
    let o = run(&["export", "--family", "books", "--m", "2", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("graph \"books_m2_n2\" {\n"));
    assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 14);
    assert_eq!(dot.lines().filter(|l| l.ends_with(';') && !l.contains(" -- ")).count(), 12);
}

#[test]
fn export_labels_match_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let path = generate(dir.path(), "f.json", &["--family", "fans", "--m", "2", "--n", "3"]);
    let cert = Certificate::parse(&fs::read_to_string(path).unwrap()).unwrap();
    let dot_path = dir.path().join("f.dot");
    let o =
        run(&["export", "--family", "fans", "--m", "2", "--n", "3", "--labels", "--out", dot_path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let dot = fs::read_to_string(dot_path).unwrap();
    for (x, l) in &cert.vertex_labels {
        assert!(dot.contains(&format!("  \"{x}\" [label=\"{l}\"];\n")), "{x}");
    }
    for (x, y, l) in &cert.edge_labels {
        assert!(dot.contains(&format!("  \"{x}\" -- \"{y}\" [label=\"{l}\"];\n")), "{x} {y}");
    }
}

#[test]
fn export_errors() {
    assert_eq!(run(&["export", "--family", "fans", "--m", "2", "--n", "3", "--format", "svg"]).status.code(), Some(2));
    assert_eq!(run(&["export", "--family", "fans", "--m", "0", "--n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["export", "--family", "fans", "--m", "1", "--n", "3", "--labels"]).status.code(), Some(2));
}
