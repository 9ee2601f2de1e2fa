use std::fs;
use std::process::{Command, Output};

const C20_JSON: &str = r#"{"n":20,"rotations":[[4,13,1],[0,11,2],[1,9,3],[2,7,4],[3,6,0],[7,16,6],[5,14,4],[3,8,5],[9,17,7],[2,10,8],[11,18,9],[1,12,10],[13,19,11],[0,14,12],[6,15,13],[16,19,14],[5,17,15],[8,18,16],[10,19,17],[12,15,18]]}"#;

const C78: &str = "\
# the five isolated-pentagon isomers of C78
78 : 1 7 9 11 13 20 25 28 32 34 36 38 C78:1
78 : 1 7 9 11 13 24 27 30 32 36 38 40 C78:2
78 : 1 7 9 11 14 22 26 28 30 34 39 41 C78:3
78 : 1 7 9 11 15 18 22 25 33 37 39 41 C78:4
78 : 1 7 9 12 14 21 26 28 30 34 39 41 C78:5
";

fn clarion(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clarion")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn clar_numbers_of_c78_isomers() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c78.txt");
    fs::write(&path, C78).unwrap();
    let out = clarion(&["clar", "-i", path.to_str().unwrap(), "--format", "json", "--no-timing"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let clar: Vec<u64> = v.as_array().unwrap().iter().map(|r| r["clar_number"].as_u64().unwrap()).collect();
    assert_eq!(clar, [11, 10, 9, 11, 8]);
    assert!(v[0].get("wall_time_ms").is_none());
    assert_eq!(v[0]["bound"], 11);
    assert_eq!(v[0]["witness_faces"].as_array().unwrap().len(), 11);
}

#[test]
fn no_timing_output_is_reproducible() {
    let a = clarion(&["clar", "--named", "C70:1", "--no-timing"]);
    let b = clarion(&["clar", "--named", "C70:1", "--no-timing", "--threads", "1"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn dodecahedron_from_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c20.json");
    fs::write(&path, C20_JSON).unwrap();
    let out = clarion(&["clar", "-i", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &json(&out)[0];
    assert_eq!((r["n"].as_u64(), r["clar_number"].as_u64(), r["bound"].as_u64()), (Some(20), Some(0), Some(0)));

    let dot = clarion(&["clar", "-i", path.to_str().unwrap(), "--format", "dot"]);
    assert!(stdout(&dot).starts_with("graph G {"));
    assert_eq!(stdout(&dot).matches(" -- ").count(), 30);
}

#[test]
fn malformed_input_exits_with_parse_code() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, "{\"n\": 4, \"rotations\": [[1, 2]").unwrap();
    let out = clarion(&["clar", "-i", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bad.json"));

    // a cube is a fine graph but not a fullerene
    let cube = r#"{"n":8,"rotations":[[1,3,4],[2,0,5],[3,1,6],[0,2,7],[7,5,0],[4,6,1],[5,7,2],[6,4,3]]}"#;
    fs::write(&path, cube).unwrap();
    assert_eq!(clarion(&["clar", "-i", path.to_str().unwrap()]).status.code(), Some(2));

    assert_eq!(clarion(&["clar", "--named", "C99:9"]).status.code(), Some(2));
    assert_eq!(clarion(&["clar"]).status.code(), Some(2));
}

#[test]
fn node_budget_exits_with_budget_code() {
    let out = clarion(&["clar", "--named", "C78:5", "--budget-nodes", "5"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_bound_single_order() {
    let out = clarion(&["verify-bound", "--range", "26", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let o = &v["orders"][0];
    assert_eq!((o["n"].as_u64(), o["isomers"].as_u64(), o["bound"].as_u64()), (Some(26), Some(1), Some(1)));
    assert_eq!(o["extremal"], 1);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_bound_outside_budget() {
    let out = clarion(&["verify-bound", "--range", "20..200"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).is_empty());
}

#[test]
fn solution_counts() {
    for (m, rows) in [("7", 2), ("8", 6), ("10", 45)] {
        let out = clarion(&["solutions", "-m", m, "--format", "json"]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(json(&out).as_array().unwrap().len(), rows, "{m} edges");
    }
    let derived = clarion(&["solutions", "-m", "10", "--derived", "--format", "json"]);
    assert_eq!(json(&derived).as_array().unwrap().len(), 55);
    assert_eq!(clarion(&["solutions", "-m", "9"]).status.code(), Some(2));
}

#[test]
fn pipeline_round_trip_with_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let out = clarion(&["pipeline", "--named", "C70:1", "--out-dir", dir.path().to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["class"], "F4");
    assert_eq!(r["round_trip"], true);
    assert_eq!(r["non_extremal_outputs"], 0);
    for name in ["witness.json", "expansion.json", "expansion.dot", "parent.json", "parent.dot", "report.json"] {
        assert!(dir.path().join(name).exists(), "{name}");
    }
    let parent: serde_json::Value = serde_json::from_str(&fs::read_to_string(dir.path().join("parent.json")).unwrap()).unwrap();
    assert_eq!(parent["quads"].as_array().unwrap().len(), 8);
    assert_eq!(parent["diagonals"].as_array().unwrap().len(), 8);
    let lines = fs::read_to_string(dir.path().join("contractions.txt")).unwrap();
    assert_eq!(lines.lines().count(), r["distinct_fullerenes"].as_u64().unwrap() as usize);
    assert_eq!(lines.matches("input").count(), 1);
    assert!(lines.lines().all(|l| l.starts_with("70 : ")));
}

#[test]
fn pipeline_stops_for_non_extremal_input() {
    let out = clarion(&["pipeline", "--named", "C78:5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not extremal"));
    let r = json(&out);
    assert_eq!(r["extremal"], false);
    assert_eq!(r["diagonalizations"], 0);
}
