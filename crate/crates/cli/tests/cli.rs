use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hypermat::canonical::{
    bidegenerate_node_334, concise_224, degenerate_334, unequal_index_ranks_223, Form222, Form223,
};
use hypermat::tensor::Tensor3;
use hypermat_cli::TensorDocument;
use serde_json::Value;

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypermat")).args(args).output().unwrap()
}

fn run_path(cmd: &str, path: &Path, rest: &[&str]) -> Output {
    let mut args = vec![cmd, path.to_str().unwrap()];
    args.extend_from_slice(rest);
    run(&args)
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn corpus_tensors() -> Vec<(String, Tensor3)> {
    let mut v: Vec<(String, Tensor3)> = Form222::ALL
        .iter()
        .map(|f| (format!("type_{f:?}_222.json"), f.tensor()))
        .chain(Form223::ALL.iter().map(|f| (format!("type_{}_223.json", f.name()), f.tensor())))
        .collect();
    v.push(("concise_224.json".into(), concise_224()));
    v.push(("concise_224_padded_225.json".into(), concise_224().pad_z(5)));
    v.push(("unequal_index_ranks_223.json".into(), unequal_index_ranks_223()));
    v.push(("bidegenerate_node_334.json".into(), bidegenerate_node_334()));
    v.push(("degenerate_334.json".into(), degenerate_334()));
    v
}

#[test]
fn corpus_matches_constructors_and_round_trips() {
    let files = std::fs::read_dir(corpus("")).unwrap().count();
    let expected = corpus_tensors();
    assert_eq!(files, expected.len());
    for (name, tensor) in expected {
        let text = std::fs::read_to_string(corpus(&name)).unwrap();
        let doc = TensorDocument::from_json(&text).unwrap();
        assert_eq!(doc.tensor().unwrap(), tensor, "{name}");
        let again = TensorDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(again, doc, "{name}");
    }
}

#[test]
fn analyze_degenerate_334_replays_hints() {
    let v = json(&run_path("analyze", &corpus("degenerate_334.json"), &[]));
    assert_eq!(v["degenerate"], "certified");
    assert_eq!(v["certificate"]["T"], serde_json::json!(["0", "1", "1", "0"]));
    assert_eq!(v["hints"][0]["outcome"], "bidegenerate");
    assert_eq!(v["concise"], true);
    assert_eq!(v["trk"], Value::Null);
}

#[test]
fn analyze_bidegenerate_node_is_undetermined() {
    let v = json(&run_path("analyze", &corpus("bidegenerate_node_334.json"), &[]));
    assert_eq!(v["degenerate"], "undetermined");
    assert_eq!(v["det_zero"], Value::Null);
    assert_eq!(v["concise"], true);
}

#[test]
fn analyze_type_iv() {
    let v = json(&run_path("analyze", &corpus("type_IV_222.json"), &[]));
    assert_eq!(v["trk"], 2);
    assert_eq!(v["det_zero"], false);
    assert_eq!(v["canonical_type"], "IV");
}

#[test]
fn analyze_keys_in_stable_order() {
    let out = run_path("analyze", &corpus("type_VI_223.json"), &[]);
    let text = String::from_utf8(out.stdout).unwrap();
    let keys = ["\"tool\"", "\"format\"", "\"det_zero\"", "\"degenerate\"", "\"concise\"", "\"trk\"", "\"branch_trace\""];
    let pos: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{pos:?}");
    let again = run_path("analyze", &corpus("type_VI_223.json"), &[]);
    assert_eq!(text.as_bytes(), &again.stdout[..]);
}

#[test]
fn analyze_with_command_line_hint() {
    let doc = TensorDocument::from_tensor(&degenerate_334(), None, vec![]);
    let path = scratch("plain_334.json", &doc.to_json());
    let v = json(&run_path("analyze", &path, &[]));
    assert_eq!(v["degenerate"], "undetermined");
    let v = json(&run_path("analyze", &path, &["--hint", "z:0,1,1,0"]));
    assert_eq!(v["degenerate"], "certified");
}

#[test]
fn analyze_permuted_input() {
    let doc = TensorDocument::from_tensor(&concise_224().permute([2, 0, 1]), None, vec![]);
    let path = scratch("concise_422.json", &doc.to_json());
    let v = json(&run_path("analyze", &path, &[]));
    assert_eq!(v["input_format"], serde_json::json!([4, 2, 2]));
    assert_eq!(v["format"], serde_json::json!([2, 2, 4]));
    assert_eq!(v["trk"], 4);
}

#[test]
fn analyze_text_output() {
    let out = run_path("analyze", &corpus("type_III_222.json"), &["--text"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("canonical_type    III"), "{text}");
}

#[test]
fn input_errors_exit_2() {
    let bad_shape = scratch("bad_shape.json", r#"{"shape": [2, 2, 2], "entries": [[[1, 0], [0, 1]]]}"#);
    let out = run_path("analyze", &bad_shape, &[]);
    assert_eq!(out.status.code(), Some(2));

    let bad_json = scratch("bad_json.json", "{\"shape\": [1, 1, 1],\n\"entries\": [[[1]]\n");
    let out = run_path("analyze", &bad_json, &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));

    let out = run(&["analyze", "/nonexistent/tensor.json"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run_path("analyze", &corpus("degenerate_334.json"), &["--hint", "z:0,1,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn zero_tensor_exits_3() {
    let doc = TensorDocument::from_tensor(&Tensor3::zeros([2, 2, 2]), None, vec![]);
    let path = scratch("zero.json", &doc.to_json());
    assert_eq!(run_path("analyze", &path, &[]).status.code(), Some(3));
}

#[test]
fn scheme_diagnoses_points() {
    let v = json(&run_path(
        "scheme",
        &corpus("bidegenerate_node_334.json"),
        &["--axis", "z", "--point", "1,1,0,-1"],
    ));
    assert_eq!(v["bidegenerate"], true);
    assert_eq!(v["rank_at"], 1);
    let v = json(&run_path(
        "scheme",
        &corpus("degenerate_334.json"),
        &["--axis", "z", "--point", "0,1,1,0"],
    ));
    assert_eq!(v["degenerate"], true);
    assert_eq!(v["bidegenerate"], false);
}

#[test]
fn scheme_rejects_bad_points() {
    let path = corpus("degenerate_334.json");
    for point in ["0,0,0,0", "1,0", "1,a,0,0"] {
        let out = run_path("scheme", &path, &["--axis", "z", "--point", point]);
        assert_eq!(out.status.code(), Some(2), "{point}");
    }
    let out = run_path("scheme", &path, &["--axis", "w", "--point", "1,0,0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn hyperdet_values_and_unsupported_formats() {
    let out = run_path("hyperdet", &corpus("type_IV_222.json"), &[]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "1");
    let out = run_path("hyperdet", &corpus("type_III_222.json"), &[]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "0");

    let doc = TensorDocument::from_tensor(&Tensor3::from_ones([3, 3, 5], &[(1, 1, 1), (3, 3, 5)]), None, vec![]);
    let path = scratch("t335.json", &doc.to_json());
    let out = run_path("hyperdet", &path, &[]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("r <= p+q-1"));

    let out = run_path("hyperdet", &corpus("concise_224.json"), &[]);
    assert_eq!(out.status.code(), Some(4));
}
