use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn hopfpi(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfpi")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn verify_data_files() {
    for f in ["sweedler.json", "z2.json", "sweedler_cocycle.json", "z2_graded.json"] {
        let (code, out, _) = hopfpi(&["verify", data(f).to_str().unwrap()]);
        assert_eq!(code, 0, "{f}");
        assert_eq!(json(&out)["violations"], Value::Array(vec![]));
    }
}

#[test]
fn discriminant_identity_from_the_command_line() {
    let expr = "(X[x]*X[y] + X[y]*X[x])^2 - 4*X[x]^2*X[y]^2";
    let (code, out, _) = hopfpi(&["check-identity", "--cleft", "sweedler", "--a", "1", "--b", "0", "--c", "0", "--expr", expr]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["is_identity"], Value::Bool(true));
}

#[test]
fn negative_parameters_are_accepted() {
    let (code, out, _) = hopfpi(&["demo", "--a", "2", "--b", "-1", "--c", "5"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(json(&out)["parameters"]["b"], "-1");
}

#[test]
fn non_identity_exits_one() {
    let (code, out, _) = hopfpi(&["check-identity", "--cleft", "sweedler", "--expr", "X[x]"]);
    assert_eq!(code, 1);
    let v = json(&out);
    assert_eq!(v["witness"]["t_x"], "1");
    assert_eq!(v["value_at_witness"]["u_x"], "1");
}

#[test]
fn parse_errors_exit_two_with_position() {
    let (code, out, err) = hopfpi(&["check-identity", "--cleft", "sweedler", "--expr", "X[x] * * X[y]"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("column"), "{err}");
    let (code, _, _) = hopfpi(&["verify", "--builtin", "nonsense"]);
    assert_eq!(code, 2);
    let (code, _, _) = hopfpi(&["frobnicate"]);
    assert_eq!(code, 2);
}

#[test]
fn corrupted_file_fails_verification() {
    let dir = std::env::temp_dir().join(format!("hopfpi-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let text = std::fs::read_to_string(data("sweedler.json")).unwrap();
    let broken = text.replace(r#""counit": ["1", "1", "0", "0"]"#, r#""counit": ["1", "1", "1", "0"]"#);
    assert_ne!(text, broken);
    let path = dir.join("broken.json");
    std::fs::write(&path, broken).unwrap();
    let (code, out, _) = hopfpi(&["verify", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    let report = json(&out);
    let axioms: Vec<&str> = report["violations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["axiom"].as_str().unwrap())
        .collect();
    assert!(axioms.contains(&"counit"), "{axioms:?}");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn sigma_and_tinv_reports() {
    let (code, out, _) = hopfpi(&["tinv", "--builtin", "sweedler"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["t_inverse"]["y"], "-t_y | t_1*t_x");
    let (code, out, _) = hopfpi(&["sigma", "--builtin", "group:z3"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["sigma"]["g,g"], "t_g^2 | t_g2");
    let (code, _, err) = hopfpi(&["sigma", "--cleft", "sweedler"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn graded_comodule_file() {
    let f = data("z2_graded.json");
    let (code, out, _) = hopfpi(&["kernel", f.to_str().unwrap(), "--degree", "2"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["display"][0], "X[1]*X[g] - X[g]*X[1]");
    let (code, out, _) = hopfpi(&["check-identity", f.to_str().unwrap(), "--expr", "X[1]*X[g]*X[g] - X[g]*X[g]*X[1]"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(json(&out)["method"], "general");
}

#[test]
fn general_and_universal_agree_from_the_command_line() {
    for expr in ["X[1]*X[x] - X[x]*X[1]", "X[x]*X[y]"] {
        let base = ["check-identity", "--cleft", "sweedler", "--expr", expr];
        let (a, _, _) = hopfpi(&base);
        let mut general = base.to_vec();
        general.push("--general");
        let (b, _, _) = hopfpi(&general);
        assert_eq!(a, b, "{expr}");
    }
}

#[test]
fn pretty_and_output_file() {
    let dir = std::env::temp_dir().join(format!("hopfpi-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("center.txt");
    let (code, out, _) = hopfpi(&["center", "--builtin", "sweedler", "--pretty", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("basis:\n"), "{text}");
    assert!(text.contains("dimension: 1"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn minimal_degree_of_the_sweedler_family() {
    let (code, out, _) = hopfpi(&["minimal-degree", "--cleft", "sweedler", "--max-degree", "3"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["degree"], 2);
}
