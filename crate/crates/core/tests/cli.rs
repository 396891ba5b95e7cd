use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn qnewton(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qnewton"))
        .args(args)
        .env_remove("QNEWTON_JOBS")
        .output()
        .expect("binary runs")
}

fn poset_file(dir: &TempDir, name: &str, json: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, json).unwrap();
    path.to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn ehrhart_single_element() {
    let dir = TempDir::new().unwrap();
    let f = poset_file(&dir, "one.json", r#"{"m": 1, "covers": []}"#);
    let out = qnewton(&["ehrhart", &f]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["E_numerator"], "q*x + 1");
}

#[test]
fn ehrhart_antichain_phi() {
    let dir = TempDir::new().unwrap();
    let f = poset_file(&dir, "anti.json", r#"{"m": 2, "covers": []}"#);
    let out = qnewton(&["ehrhart", &f]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["phi"], "q + 1");
    assert_eq!(v["F"], "(q^3+q^2)*x^2 + (2*q^2+2*q)*x + (q+1)");
}

#[test]
fn ehrhart_output_file() {
    let dir = TempDir::new().unwrap();
    let f = poset_file(&dir, "anti.json", r#"{"m": 2, "covers": []}"#);
    let target = dir.path().join("out.json");
    let out = qnewton(&["ehrhart", &f, "--output", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(target).unwrap()).unwrap();
    assert_eq!(v["N"], "q^2*x^2 + 2*q*x + 1");
}

#[test]
fn malformed_json_exits_2() {
    let dir = TempDir::new().unwrap();
    let f = poset_file(&dir, "bad.json", "{\"m\": 2, \"covers\": [[1,");
    let out = qnewton(&["ehrhart", &f]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn cyclic_poset_exits_2() {
    let dir = TempDir::new().unwrap();
    let f = poset_file(&dir, "cyc.json", r#"{"m": 2, "covers": [[1,2],[2,1]]}"#);
    assert_eq!(qnewton(&["ehrhart", &f]).status.code(), Some(2));
}

#[test]
fn missing_input_exits_2() {
    assert_eq!(qnewton(&["ehrhart", "/nonexistent/p.json"]).status.code(), Some(2));
}

#[test]
fn unknown_flag_exits_2() {
    assert_eq!(qnewton(&["verify", "--bogus"]).status.code(), Some(2));
}

#[test]
fn verify_all_4() {
    let out = qnewton(&["verify", "--all", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines.len(), 219);
    for (i, line) in lines.iter().enumerate() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["index"], i);
        assert_eq!(v["pass"], true);
    }
}

#[test]
fn verify_chain_file() {
    let dir = TempDir::new().unwrap();
    let f = poset_file(&dir, "chain.json", r#"{"m": 4, "covers": [[1,2],[2,3],[3,4]]}"#);
    let out = qnewton(&["verify", &f]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["checks"].as_array().unwrap().len() >= 8);
    assert!(v.get("counterexample").is_none());
    assert!(v.get("elapsed_us").is_none());
}

#[test]
fn verify_all_6_exceeds_guard() {
    assert_eq!(qnewton(&["verify", "--all", "6"]).status.code(), Some(2));
}

#[test]
fn verify_without_source_exits_2() {
    assert_eq!(qnewton(&["verify"]).status.code(), Some(2));
}

#[test]
fn verify_random_is_deterministic_and_order_stable() {
    let a = qnewton(&["verify", "--random", "6", "5", "11", "--jobs", "1"]);
    let b = qnewton(&["verify", "--random", "6", "5", "11", "--jobs", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 6);
}

#[test]
fn jobs_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_qnewton"))
        .args(["verify", "--all", "2"])
        .env("QNEWTON_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let bad = Command::new(env!("CARGO_BIN_EXE_qnewton"))
        .args(["verify", "--all", "2"])
        .env("QNEWTON_JOBS", "0")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_bad_edge_probability() {
    let out = qnewton(&["verify", "--random", "2", "3", "1", "--edge-prob", "3/2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = qnewton(&["verify", "--random", "2", "3", "1", "--edge-prob", "half"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_lattice_limit_exits_2() {
    let dir = TempDir::new().unwrap();
    let f = poset_file(&dir, "big.json", r#"{"m": 9, "covers": []}"#);
    assert_eq!(qnewton(&["verify", &f]).status.code(), Some(2));
}

#[test]
fn verify_extension_budget_exits_2() {
    let dir = TempDir::new().unwrap();
    let f = poset_file(&dir, "a4.json", r#"{"m": 4, "covers": []}"#);
    assert_eq!(qnewton(&["verify", &f, "--max-extensions", "5"]).status.code(), Some(2));
}

#[test]
fn verify_report_file_and_replay() {
    let dir = TempDir::new().unwrap();
    let report = dir.path().join("r.jsonl");
    let out = qnewton(&["verify", "--random", "3", "4", "2", "--report", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let first = fs::read_to_string(&report).unwrap();

    let replayed = qnewton(&["verify", "--replay", report.to_str().unwrap()]);
    assert_eq!(replayed.status.code(), Some(0));
    assert_eq!(stdout(&replayed), first);

    // a single pretty-printed report replays too
    let one: serde_json::Value = serde_json::from_str(first.lines().next().unwrap()).unwrap();
    let single = dir.path().join("one.json");
    fs::write(&single, serde_json::to_string_pretty(&one).unwrap()).unwrap();
    let out = qnewton(&["verify", "--replay", single.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 1);
}

#[test]
fn replay_garbage_exits_2() {
    let dir = TempDir::new().unwrap();
    let f = poset_file(&dir, "junk.jsonl", "not a report\n");
    assert_eq!(qnewton(&["verify", "--replay", &f]).status.code(), Some(2));
}

#[test]
fn timings_only_on_request() {
    let out = qnewton(&["verify", "--all", "1", "--timings"]);
    assert!(json(&out)["elapsed_us"].is_u64());
}

#[test]
fn newton_tsv_for_antichain() {
    let dir = TempDir::new().unwrap();
    let f = poset_file(&dir, "anti.json", r#"{"m": 2, "covers": []}"#);
    let tsv = dir.path().join("poly.tsv");
    let out = qnewton(&["newton", &f, "--tsv", tsv.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&tsv).unwrap(), "0\t0\n1\t0\n3\t2\n2\t2\n");
    let num = dir.path().join("poly_numerator.tsv");
    assert_eq!(fs::read_to_string(num).unwrap(), "0\t0\n2\t2\n");
}

#[test]
fn newton_svg_has_axes() {
    let dir = TempDir::new().unwrap();
    let f = poset_file(&dir, "fan.json", r#"{"m": 3, "covers": [[1,3],[2,3]]}"#);
    let svg = dir.path().join("fig.svg");
    let out = qnewton(&["newton", &f, "--svg", svg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    for path in [svg.clone(), dir.path().join("fig_numerator.svg")] {
        let text = fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("<svg"));
        assert!(text.trim_end().ends_with("</svg>"));
        assert!(text.contains(">q</text>") && text.contains(">x</text>"));
        assert_eq!(text.matches("<polygon").count(), 1);
    }
}

#[test]
fn newton_missing_output_dir_exits_2() {
    let dir = TempDir::new().unwrap();
    let f = poset_file(&dir, "anti.json", r#"{"m": 2, "covers": []}"#);
    let target = dir.path().join("no/such/dir/out.tsv");
    assert!(!Path::new(&target).parent().unwrap().exists());
    assert_eq!(qnewton(&["newton", &f, "--tsv", target.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn extensions_of_fan() {
    let dir = TempDir::new().unwrap();
    let f = poset_file(&dir, "fan.json", r#"{"m": 3, "covers": [[1,3],[2,3]]}"#);
    let out = qnewton(&["extensions", &f]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows, ["123\t{}\t0\t0\t{1} {2} {3}", "213\t{1}\t1\t1\t{1,2} {3}"]);
}

#[test]
fn extensions_of_chain() {
    let dir = TempDir::new().unwrap();
    let f = poset_file(&dir, "chain.json", r#"{"m": 3, "covers": [[1,2],[2,3]]}"#);
    let text = stdout(&qnewton(&["extensions", &f]));
    assert_eq!(text.lines().skip(1).collect::<Vec<_>>(), ["123\t{}\t0\t0\t{1} {2} {3}"]);
}

#[test]
fn extensions_stats_for_antichain() {
    let dir = TempDir::new().unwrap();
    let f = poset_file(&dir, "a3.json", r#"{"m": 3, "covers": []}"#);
    let text = stdout(&qnewton(&["extensions", &f, "--stats"]));
    let header = text.lines().position(|l| l.starts_with("k\t")).unwrap();
    let row2: Vec<&str> = text.lines().nth(header + 3).unwrap().split('\t').collect();
    assert_eq!(row2[0], "2");
    assert_eq!(row2[1], "2");
    assert_eq!(row2[2], "2");
}

#[test]
fn extensions_budget_exits_2() {
    let dir = TempDir::new().unwrap();
    let f = poset_file(&dir, "a4.json", r#"{"m": 4, "covers": []}"#);
    assert_eq!(qnewton(&["extensions", &f, "--max-extensions", "3"]).status.code(), Some(2));
}

#[test]
fn extensions_stats_relabels_unnatural_input() {
    let dir = TempDir::new().unwrap();
    let f = poset_file(&dir, "inv.json", r#"{"m": 2, "covers": [[2,1]]}"#);
    let out = qnewton(&["extensions", &f, "--stats"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("# relabeled"));
}
