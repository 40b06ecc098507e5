use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperconvex")).args(args).env_remove("HYPERCONVEX_SEED").output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

#[test]
fn hull_of_two_opposite_sign_points_is_the_plane() {
    let out = run(&["hull", "--hyperfield", "S", "--points", "(+,-);(-,+)"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["size"], 9);
    let lit = run(&["hull", "--hyperfield", "S", "--points", "(+,-);(-,+)", "--format", "literal"]);
    let again = run(&["hull", "--hyperfield", "S", "--points", String::from_utf8(lit.stdout).unwrap().trim()]);
    assert_eq!(json(&again)["size"], 9);
}

#[test]
fn instance_falls_back_to_literal_tag() {
    let out = run(&["member", "--points", "TR:(+1@0,-1@0);(-1@0,+1@0)", "--query", "TR:(+1@0,-1@0)"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["status"], "member");
    assert_eq!(v["lambda"].as_array().unwrap().len(), 3);
}

#[test]
fn farkas_certificate_replays() {
    let sys = data("rxz.sys");
    let out = run(&["fm", &sys, "--farkas"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["kind"], "separator");
    assert_eq!(v["vector"], serde_json::json!(["(-1,0)", "(-1,0)", "(1,0)"]));

    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    std::fs::write(&cert, &out.stdout).unwrap();
    let ok = run(&["fm", &sys, "--verify", cert.to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0), "{}", String::from_utf8_lossy(&ok.stderr));

    std::fs::write(&cert, r#"{"kind":"separator","vector":["(1,0)","(1,0)","(1,0)"]}"#).unwrap();
    let bad = run(&["fm", &sys, "--verify", cert.to_str().unwrap()]);
    assert_ne!(bad.status.code(), Some(0));
}

#[test]
fn halfspace_and_separation_over_signs() {
    let out = run(&["halfspace", "--hyperfield", "S", "--form", "S:1@X2 + 1", "--point", "S:(-,0)"]);
    assert_eq!(json(&out)["contains"], true);
    let t = "(-,+);(0,0);(0,+);(+,0);(+,+)";
    let open = run(&["separate", "--hyperfield", "S", "--points", t, "--query", "(-,0)"]);
    assert_eq!(json(&open)["status"], "no_separator");
    let closed = run(&["separate", "--hyperfield", "S", "--points", t, "--query", "(-,0)", "--closed"]);
    let v = json(&closed);
    assert_eq!(v["status"], "separated");
    assert_eq!(v["separator"]["form"], "+@X1 + +@X2");
}

#[test]
fn kakutani_hemispace_splits_the_pair() {
    let v = json(&run(&["kakutani", "--hyperfield", "S", "--a", "(+,+)", "--b", "(-,-)"]));
    let hemi: Vec<&str> = v["hemispace"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert!(hemi.contains(&"(+,+)"));
    assert!(!hemi.contains(&"(-,-)"));
}

#[test]
fn radon_suite_over_the_sign_plane() {
    let out = run(&["suite", "--name", "radon", "--hyperfield", "S", "--d", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["cases"], 6561);
    assert_eq!(v["failures"], serde_json::json!([]));
}

#[test]
fn suite_seed_comes_from_environment() {
    let args = ["suite", "--name", "farkas", "--hyperfield", "TR@Q", "--trials", "30", "--seed", "1"];
    let plain = json(&run(&args));
    assert_eq!(plain["seed"], 1);
    let env = Command::new(env!("CARGO_BIN_EXE_hyperconvex")).args(args).env("HYPERCONVEX_SEED", "77").output().unwrap();
    assert_eq!(json(&env)["seed"], 77);
    let explicit = json(&run(&["suite", "--name", "farkas", "--hyperfield", "TR@Q", "--trials", "30", "--seed", "77"]));
    assert_eq!(json(&env), explicit);
    let sequential = json(&run(&["suite", "--name", "farkas", "--hyperfield", "TR@Q", "--trials", "30", "--seed", "77", "--jobs", "1"]));
    assert_eq!(sequential, explicit);
}

#[test]
fn random_suite_refuses_discrete_instance() {
    let out = run(&["suite", "--name", "farkas", "--hyperfield", "S"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_axioms_on_h5_and_a_broken_table() {
    let ok = run(&["check-axioms", "--hyperfield", "H5"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["passed"], true);
    let table = format!("table:{}", Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data/h5.hf").display());
    assert_eq!(run(&["check-axioms", "--hyperfield", &table]).status.code(), Some(0));

    let src = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data/h5.hf")).unwrap();
    let broken = src.replace(r#""1,t" = ["1", "t"]"#, r#""1,t" = ["t"]"#);
    assert_ne!(broken, src);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.hf");
    std::fs::write(&path, broken).unwrap();
    let out = run(&["check-axioms", "--hyperfield", &format!("table:{}", path.display())]);
    assert_eq!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["passed"], false);
    assert!(!v["violations"].as_array().unwrap().is_empty());
}

#[test]
fn plot_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let files: Vec<_> = (0..2).map(|i| dir.path().join(format!("p{i}.svg"))).collect();
    for f in &files {
        let out = run(&["plot", "--hyperfield", "S", "--set", "T=(+,-);(-,+)", "--set", "E=", "--hulls", "--out", f.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    }
    let a = std::fs::read(&files[0]).unwrap();
    assert_eq!(a, std::fs::read(&files[1]).unwrap());
    assert!(String::from_utf8(a).unwrap().starts_with("<svg"));
}

#[test]
fn errors_and_usage() {
    let out = run(&["hull", "--hyperfield", "Q", "--points", "(1)"]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "unsupported");
    assert_eq!(run(&["bogus"]).status.code(), Some(64));
    assert_eq!(run(&["hull", "--points", "(+,"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
