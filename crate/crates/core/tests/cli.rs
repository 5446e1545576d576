use std::process::Command;

use serde_json::Value;

fn forestpoly(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_forestpoly"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn poly_golden_and_stable() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k3.json");
    std::fs::write(&path, r#"{"n":3,"edges":[[1,2],[1,3],[2,3]]}"#).unwrap();
    let path = path.to_str().unwrap();
    let (code, first, _) = forestpoly(&["poly", path]);
    assert_eq!(code, 0);
    assert_eq!(
        first,
        "x^2 + 2 * x * x1 + 2 * x * x2 + 2 * x * x3 + x1^2 + 2 * x1 * x2 + 2 * x1 * x3 + x2^2 \
         + 2 * x2 * x3 + x3^2\n"
    );
    let (_, second, _) = forestpoly(&["poly", path]);
    assert_eq!(first, second);
    let (_, value, _) = forestpoly(&["poly", path, "--at", "1,1,1,1"]);
    assert_eq!(value, "16\n");
}

#[test]
fn tpoly_path() {
    let (code, out, _) = forestpoly(&["tpoly", r#"{"n":3,"edges":[[1,2],[2,3]]}"#]);
    assert_eq!((code, out.as_str()), (0, "x2\n"));
}

#[test]
fn reciprocity_reports() {
    let (code, out, _) = forestpoly(&["reciprocity", "--all-n", "4"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["graphs_checked"], 64);
    assert_eq!(v["all_pass"], true);
    let (code, out, _) = forestpoly(&["reciprocity", r#"{"n":1,"edges":[]}"#]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"{"n":1,"graphs_checked":1,"all_pass":true,"counterexamples":[]}"#);
}

#[test]
fn encode_then_decode_reproduces_input() {
    let dir = tempfile::tempdir().unwrap();
    let a_path = dir.path().join("a.json");
    let input: Value = serde_json::from_str(
        r#"{"ops":[[1,4],[3,1]],"graph":{"n":4,"edges":[[1,4],[2,3]]},"tree":{"n":4,"parent":[4,0,1,0]}}"#,
    )
    .unwrap();
    std::fs::write(&a_path, input.to_string()).unwrap();
    let (code, b_text, err) = forestpoly(&["encode", a_path.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let b: Value = serde_json::from_str(&b_text).unwrap();
    assert_eq!(b["weights"].as_array().unwrap().len() + 1, {
        let parent = b["tree"]["parent"].as_array().unwrap();
        parent.iter().filter(|p| **p == 0).count()
    });
    let b_path = dir.path().join("b.json");
    std::fs::write(&b_path, &b_text).unwrap();
    let (code, a_text, _) = forestpoly(&["decode", b_path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let back: Value = serde_json::from_str(&a_text).unwrap();
    assert_eq!(back, input);
}

#[test]
fn decode_rejects_bad_weights() {
    let (code, out, err) = forestpoly(&[
        "decode",
        r#"{"graph":{"n":3,"edges":[]},"tree":{"n":3,"parent":[0,0,0]},"weights":[1]}"#,
    ]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn roundtrip_subcommand() {
    let (code, out, _) = forestpoly(&["roundtrip", "--graph", r#"{"n":4,"edges":[[1,2],[3,4]]}"#]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["a_count"], v["b_count"]);
    assert_eq!(v["all_pass"], true);
}

#[test]
fn prufer_subcommands() {
    let (code, out, _) = forestpoly(&["prufer", "encode", r#"{"n":4,"parent":[4,0,1,0]}"#]);
    assert_eq!(code, 0);
    let (code, tree, _) = forestpoly(&["prufer", "decode", out.trim(), "--n", "4"]);
    assert_eq!((code, tree.trim()), (0, r#"{"n":4,"parent":[4,0,1,0]}"#));
}

#[test]
fn count_subcommand() {
    let (code, out, _) = forestpoly(&["count", r#"{"n":4,"edges":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}"#]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["enumeration"], 125);
    assert_eq!(v["kirchhoff"], 125);
    assert_eq!(v["all_pass"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(forestpoly(&[]).0, 2);
    assert_eq!(forestpoly(&["poly"]).0, 2);
    assert_eq!(forestpoly(&["count", "missing.json"]).0, 2);
    assert_eq!(forestpoly(&["--help"]).0, 0);
}
