use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

const Q: &str = r#"{"minpoly": ["0", "1"]}"#;
const QI: &str = r#"{"minpoly": ["1", "0", "1"]}"#;

fn universal() -> Value {
    json!({ "scalar_field": {"minpoly": ["0", "1"]}, "entry_field": {"minpoly": ["0", "1"]} })
}

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        Workspace {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn write(&self, name: &str, text: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        fs::write(&p, text).unwrap();
        p
    }

    fn write_json(&self, name: &str, v: &Value) -> PathBuf {
        self.write(name, &v.to_string())
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tensorideal")).args(args).output().unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn report(p: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(p).unwrap()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

/// Descriptor files for (Q,Q) ⊗ (Q,Q) and the tensor `1⊗e11 + e12⊗e22 + e21⊗e12`.
fn reduction_inputs(w: &Workspace) -> (PathBuf, PathBuf, PathBuf) {
    let u = w.write_json("u.json", &universal());
    let e = |r: u64, c: u64| json!({ "fin": [[r, c, ["1"]]] });
    let t = json!({ "pairs": [
        [{ "scalar": ["1"] }, e(1, 1)],
        [e(1, 2), e(2, 2)],
        [e(2, 1), e(1, 2)],
    ]});
    let t = w.write_json("t.json", &t);
    (u.clone(), u, t)
}

#[test]
fn gaussian_fields_split_in_two() {
    let w = Workspace::new();
    let (l, r, out) = (w.write("l.json", QI), w.write("r.json", QI), w.path("out.json"));
    let o = run(&["fields", "--left", s(&l), "--right", s(&r), "--out", s(&out)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let rep = report(&out);
    assert_eq!(rep["result"]["is_field"], json!(false));
    assert_eq!(rep["result"]["num_components"], json!(2));
    assert_eq!(rep["result"]["zero_divisors"].as_array().unwrap().len(), 2);
    assert!(String::from_utf8_lossy(&o.stdout).contains("not a field"));
}

#[test]
fn classify_one_tensor_e11() {
    let w = Workspace::new();
    let u = w.write_json("u.json", &universal());
    let t = w.write_json(
        "t.json",
        &json!({ "pairs": [[{ "scalar": ["1"] }, { "fin": [[1, 1, ["1"]]] }]] }),
    );
    let out = w.path("out.json");
    // camel-case flag aliases
    let o = run(&["classify", "--tensor", s(&t), "--descA", s(&u), "--descB", s(&u), "--oracle", "--out", s(&out)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let rep = report(&out);
    assert_eq!(rep["result"]["tag"], json!("A_IB"));
    assert_eq!(rep["result"]["oracle"]["tag"], json!("A_IB"));
}

#[test]
fn reports_echo_parameters_and_hashes() {
    let w = Workspace::new();
    let (l, r, out) = (w.write("l.json", QI), w.write("r.json", Q), w.path("out.json"));
    let o = run(&[
        "--seed", "17", "--truncation", "5", "--degree-bound", "6",
        "fields", "--left", s(&l), "--right", s(&r), "--out", s(&out),
    ]);
    assert_eq!(code(&o), 0);
    let rep = report(&out);
    assert_eq!(rep["seed"], json!(17));
    assert_eq!(rep["truncation"], json!(5));
    assert_eq!(rep["degree_bound"], json!(6));
    assert_eq!(rep["command"], json!("fields"));
    let inputs = rep["inputs"].as_array().unwrap();
    assert_eq!(inputs.len(), 2);
    let h = inputs[0]["sha256"].as_str().unwrap();
    assert_eq!(h.len(), 64);
    assert_ne!(h, inputs[1]["sha256"].as_str().unwrap());
}

#[test]
fn identical_jobs_give_identical_reports() {
    let w = Workspace::new();
    let (a, b, t) = reduction_inputs(&w);
    let mut texts = Vec::new();
    for name in ["r1.json", "r2.json"] {
        let out = w.path("out.json");
        let o = run(&["--seed", "9", "reduce", "--tensor", s(&t), "--desc-a", s(&a), "--desc-b", s(&b), "--out", s(&out)]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
        texts.push(fs::read(&out).unwrap());
        fs::rename(&out, w.path(name)).unwrap();
    }
    assert_eq!(texts[0], texts[1]);
    let mut st = Vec::new();
    for _ in 0..2 {
        let out = w.path("st.json");
        assert_eq!(code(&run(&["selftest", "--out", s(&out)])), 0);
        st.push(fs::read(&out).unwrap());
    }
    assert_eq!(st[0], st[1]);
}

#[test]
fn reduce_then_replay() {
    let w = Workspace::new();
    let (a, b, t) = reduction_inputs(&w);
    let cert = w.path("cert.json");
    let o = run(&["reduce", "--tensor", s(&t), "--desc-a", s(&a), "--desc-b", s(&b), "--oracle", "--out", s(&cert)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let rep = report(&cert);
    assert_eq!(rep["result"]["replayed"], json!(true));
    assert_eq!(rep["result"]["oracle_generates"], json!(true));
    assert_eq!(rep["result"]["claim_rank"], json!(1));

    let args = |c: &Path, t: &Path| {
        run(&["replay", "--cert", s(c), "--tensor", s(t), "--desc-a", s(&a), "--desc-b", s(&b)])
    };
    let o = args(&cert, &t);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));

    // the bare certificate replays as well
    let bare = w.write_json("bare.json", &rep["result"]["certificate"]);
    assert_eq!(code(&args(&bare, &t)), 0);

    // a different tensor no longer matches the recorded hash
    let other = w.write_json("other.json", &json!({ "pairs": [[{ "scalar": ["1"] }, { "fin": [[1, 1, ["2"]]] }]] }));
    assert_eq!(code(&args(&cert, &other)), 1);

    // a tampered claim fails the replay
    let mut bad = rep["result"]["certificate"].clone();
    bad["claim"] = json!({ "pairs": [[{ "scalar": ["1"] }, { "fin": [[1, 1, ["3"]]] }]] });
    let bad = w.write_json("bad.json", &bad);
    let o = args(&bad, &t);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("certificate invalid"));
}

#[test]
fn exit_codes() {
    let w = Workspace::new();
    let u = w.write_json("u.json", &universal());
    let qi = w.write("qi.json", QI);

    // domain errors
    assert_eq!(code(&run(&["witness", "--desc-a", s(&u), "--desc-b", s(&u)])), 1);
    let o = run(&["--degree-bound", "1", "fields", "--left", s(&qi), "--right", s(&qi)]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("exceeds the configured bound"));
    let reducible = w.write("red.json", r#"{"minpoly": ["-1", "0", "1"]}"#);
    assert_eq!(code(&run(&["fields", "--left", s(&reducible), "--right", s(&qi)])), 1);

    // I/O and parse errors
    let missing = w.path("missing.json");
    assert_eq!(code(&run(&["fields", "--left", s(&missing), "--right", s(&qi)])), 2);
    let garbage = w.write("garbage.json", "{not json");
    assert_eq!(code(&run(&["fields", "--left", s(&garbage), "--right", s(&qi)])), 2);
    let schema = w.write("schema.json", r#"{"poly": [1]}"#);
    assert_eq!(code(&run(&["fields", "--left", s(&schema), "--right", s(&qi)])), 2);
    let zero_index = w.write_json("t.json", &json!({ "pairs": [[{ "fin": [[0, 1, ["1"]]] }, { "scalar": ["1"] }]] }));
    assert_eq!(code(&run(&["classify", "--tensor", s(&zero_index), "--desc-a", s(&u), "--desc-b", s(&u)])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    let out = w.path("no/such/dir/out.json");
    assert_eq!(code(&run(&["fields", "--left", s(&qi), "--right", s(&qi), "--out", s(&out)])), 2);
}

#[test]
fn selftest_runs_the_corpus() {
    let w = Workspace::new();
    let out = w.path("st.json");
    let o = run(&["selftest", "--out", s(&out)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    let rep = report(&out);
    assert_eq!(rep["result"]["failed"], json!(0));
    let items = rep["result"]["items"].as_array().unwrap();
    assert!(items.len() >= 20);
    for file in ["complex_residue", "complex_centroid", "mixed_pair", "universal"] {
        assert!(items.iter().any(|i| i["file"] == json!(file)), "{file}");
    }

    // the shipped corpus directory runs the same items
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    let out2 = w.path("st2.json");
    assert_eq!(code(&run(&["selftest", "--corpus", s(&dir), "--out", s(&out2)])), 0);
    assert_eq!(report(&out2)["result"], rep["result"]);
}

#[test]
fn selftest_reports_a_wrong_expectation() {
    let w = Workspace::new();
    let doc = json!({ "name": "wrong", "items": [{
        "id": "claims_a_field", "command": "fields",
        "left": { "minpoly": ["1", "0", "1"] }, "right": { "minpoly": ["1", "0", "1"] },
        "expect": { "is_field": true },
    }]});
    let dir = w.dir.path().join("corpus");
    fs::create_dir(&dir).unwrap();
    fs::write(dir.join("wrong.json"), doc.to_string()).unwrap();
    let out = w.path("st.json");
    let o = run(&["selftest", "--corpus", s(&dir), "--out", s(&out)]);
    assert_eq!(code(&o), 1);
    let rep = report(&out);
    assert_eq!(rep["result"]["failed"], json!(1));
    assert_eq!(
        rep["result"]["items"][0]["mismatches"],
        json!(["/is_field: expected true, got false"])
    );
}
