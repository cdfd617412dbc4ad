use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn dpx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dpx")).args(args).output().expect("run dpx")
}

fn stdout(args: &[&str]) -> String {
    let out = dpx(args);
    assert!(out.status.success(), "dpx {args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn schema(name: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/schemas").join(format!("{name}.v1.json"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Top-level keys: every required one present, nothing outside `properties`, `schema` tag matching.
fn conforms(doc: &Value, schema: &Value) {
    let obj = doc.as_object().expect("object");
    for k in schema["required"].as_array().unwrap() {
        assert!(obj.contains_key(k.as_str().unwrap()), "missing {k}");
    }
    let props = schema["properties"].as_object().unwrap();
    for k in obj.keys() {
        assert!(props.contains_key(k), "unexpected {k}");
    }
    assert_eq!(doc["schema"], schema["properties"]["schema"]["const"]);
}

#[test]
fn fvectors() {
    assert_eq!(stdout(&["fvector", "(perm:2 sh asso:3)"]), "1,108,219,140,29,1\n");
    assert_eq!(stdout(&["fvector", "perm:3"]), "1,6,6,1\n");
    assert_eq!(stdout(&["fvector", "(anti:3 sh asso:3)"]), "1,606,1549,1382,497,60,1\n");
}

#[test]
fn facet_and_vertex_listings() {
    assert_eq!(stdout(&["facets", "(anti:3 sh asso:3)"]).lines().count(), 60);
    let v = stdout(&["vertices", "--fibers", "asso:3"]);
    assert_eq!(v.lines().count(), 5);
    let fibers: usize = v.lines().map(|l| l.rsplit(' ').next().unwrap().parse::<usize>().unwrap()).sum();
    assert_eq!(fibers, 6);
    assert_eq!(stdout(&["facets", "perm:2"]), "x1 >= 1\nx2 >= 1\n");
}

#[test]
fn enumerations() {
    let count = |args: &[&str]| stdout(args).lines().count();
    assert_eq!(count(&["enum", "painted-trees", "1", "2", "--rank", "0"]), 6);
    assert_eq!(count(&["enum", "bitrees", "3", "3"]), 4095);
    assert_eq!(count(&["enum", "schroder-trees", "3"]), 11);
    assert_eq!(count(&["enum", "binary-trees", "4"]), 14);
    assert_eq!(count(&["enum", "ordered-partitions", "4"]), 75);
    assert_eq!(count(&["enum", "ordered-partitions", "4", "--rank", "3"]), 1);
    let first: Value = serde_json::from_str(stdout(&["enum", "bitrees", "1", "1"]).lines().next().unwrap()).unwrap();
    assert_eq!(first["m"], 1);
}

#[test]
fn tables() {
    let csv = stdout(&["tables", "--family", "verticesPointPoint", "--max", "4"]);
    assert_eq!(csv.lines().nth(3).unwrap(), "2,1,4,14");
    let csv = stdout(&["tables", "--family", "facetsPermCube", "--max", "5"]);
    assert_eq!(csv.lines().nth(3).unwrap().split(',').nth(4).unwrap(), "28");
    let csv = stdout(&["tables", "--family", "facesMultiplihedra", "--max", "4", "--verify"]);
    assert_eq!(csv.lines().nth(3).unwrap().split(',').nth(3).unwrap(), "75");
    let all = stdout(&["tables", "--max", "3"]);
    assert_eq!(all.lines().filter(|l| l.starts_with('#')).count(), 12);
}

#[test]
fn checks() {
    let out = stdout(&["check", "lattice", "(anti:3 sh asso:3)"]);
    assert!(out.starts_with("false\nno join:"), "{out}");
    assert_eq!(stdout(&["check", "lattice", "(perm:2 sh asso:3)"]), "true\n");
    assert!(stdout(&["check", "simple", "(perm:1 sh asso:3)"]).starts_with("false\n"));
    assert_eq!(stdout(&["check", "simple", "(perm:3 sh asso:2)"]), "true\n");
    assert_eq!(stdout(&["check", "congruence", "asso:4"]), "true\n");
    assert_eq!(stdout(&["check", "interval", "zono:3:1-3"]), "false\nfiber of (0,0,1) is not a weak order interval\n");
    assert_eq!(stdout(&["check", "interval", "zono:3:1-2"]), "true\n");
}

#[test]
fn json_outputs_follow_schemas() {
    let doc = |args: &[&str]| -> Value { serde_json::from_str(&stdout(args)).unwrap() };
    let f = doc(&["--format", "json", "fvector", "(perm:2 sh asso:3)"]);
    conforms(&f, &schema("fvector"));
    assert_eq!(f["dim"], 4);
    conforms(&doc(&["--format", "json", "vertices", "--fibers", "asso:3"]), &schema("vertices"));
    conforms(&doc(&["--format", "json", "facets", "asso:3"]), &schema("facets"));
    let c = doc(&["--format", "json", "check", "lattice", "(anti:3 sh asso:3)"]);
    conforms(&c, &schema("check"));
    assert_eq!(c["verdict"], false);
    assert_eq!(c["witness"]["missing"], "join");
}

#[test]
fn deterministic() {
    for args in [&["enum", "painted-trees", "2", "2"][..], &["vertices", "(anti:2 sh asso:3)"], &["tables", "--max", "6"]] {
        assert_eq!(dpx(args).stdout, dpx(args).stdout);
    }
    assert_eq!(dpx(&["--jobs", "1", "enum", "bitrees", "2", "2"]).stdout, dpx(&["enum", "bitrees", "2", "2"]).stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(dpx(&["fvector", "(perm:2 + perm:3)"]).status.code(), Some(2));
    assert_eq!(dpx(&["fvector", "cube:3"]).status.code(), Some(2));
    assert_eq!(dpx(&["tables", "--family", "nope"]).status.code(), Some(2));
    assert_eq!(dpx(&["enum", "bitrees", "3"]).status.code(), Some(2));
    assert_eq!(dpx(&["fvector", "perm:12"]).status.code(), Some(3));
    let bounded = Command::new(env!("CARGO_BIN_EXE_dpx")).env("DPX_MAX_N", "3").args(["fvector", "perm:4"]).output().unwrap();
    assert_eq!(bounded.status.code(), Some(3));
}
