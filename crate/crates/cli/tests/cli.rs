use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name);
    root.to_string_lossy().into_owned()
}

fn zonotopal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zonotopal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(contents: &str, suffix: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(suffix).tempfile().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn doubled_triangle_internal() {
    let o = zonotopal(&[
        "hilbert",
        "--kind",
        "internal",
        &data("dt.graph"),
        "--mode",
        "cographical",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 1\n");
}

#[test]
fn hilbert_kinds() {
    let dt = data("dt.graph");
    let expect = [
        ("otbar", "1 1\n"),
        ("central", "1 4 7\n"),
        ("external", "1 4 10 17 15 6 1\n"),
    ];
    for (kind, out) in expect {
        let o = zonotopal(&["hilbert", "--kind", kind, &dt, "--mode", "cographical"]);
        assert_eq!(stdout(&o), out, "{kind}");
    }
    let o = zonotopal(&["hilbert", "--kind", "srbar", &data("u23.mat")]);
    assert_eq!(stdout(&o), "1 2\n");
}

#[test]
fn verify_exits_zero() {
    let k3 = data("k3.graph");
    for theorem in ["internal", "central", "hr-internal"] {
        let o = zonotopal(&["verify", "--theorem", theorem, &k3, "--mode", "cographical"]);
        assert_eq!(o.status.code(), Some(0), "{theorem}: {}", stdout(&o));
        assert!(stdout(&o).ends_with("PASS\n"));
    }
    let o = zonotopal(&[
        "verify",
        "--theorem",
        "equivariant",
        "--auto",
        &data("dt.auto"),
        &data("dt.graph"),
        "--mode",
        "cographical",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn explicit_orderings() {
    let o = zonotopal(&[
        "verify",
        "--theorem",
        "hr-internal",
        "--order",
        "3,1,2",
        "--order",
        "2,3,1",
        &data("u23.mat"),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("order 3,1,2"));
    assert!(!text.starts_with("# seed"));
    let o = zonotopal(&[
        "verify",
        "--theorem",
        "hr-internal",
        "--order",
        "1,2",
        &data("u23.mat"),
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn euler_u23() {
    let o = zonotopal(&["euler", &data("u23.mat")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("8 - 1 = 7 : PASS"));
    let o = zonotopal(&[
        "euler",
        "--graded",
        &data("k3.graph"),
        "--mode",
        "cographical",
    ]);
    assert!(stdout(&o).contains("1 + t + t^2 + t^3 = 1 + t + t^2 + t^3 : PASS"));
}

#[test]
fn characters() {
    let o = zonotopal(&[
        "char",
        "--which",
        "pplus",
        "--deg",
        "3",
        "--auto",
        &data("k3.auto"),
        &data("k3.graph"),
        "--mode",
        "cographical",
    ]);
    assert_eq!(stdout(&o), "generator 1: -1\ngenerator 2: 1\n");
}

#[test]
fn betti_json_schema() {
    let o = zonotopal(&["betti", "--format", "json", &data("u23.mat")]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        v["result"],
        serde_json::json!({"entries": [{"i": 0, "S": [], "mult": 1}, {"i": 1, "S": ["1", "2", "3"], "mult": 1}]})
    );
    assert_eq!(v["command"], "betti");
    assert_eq!(v["seed"], 0);
}

#[test]
fn json_is_reproducible() {
    let dt = data("dt.graph");
    for args in [
        vec![
            "audit",
            "--k",
            "-1",
            "--trials",
            "20",
            "--seed",
            "5",
            "--format",
            "json",
            &dt,
            "--mode",
            "cographical",
        ],
        vec![
            "verify",
            "--theorem",
            "hr-internal",
            "--format",
            "json",
            &dt,
            "--mode",
            "cographical",
        ],
        vec!["matroid", "--format", "json", &dt, "--mode", "cographical"],
    ] {
        let first = zonotopal(&args);
        let second = zonotopal(&args);
        assert_eq!(first.status.code(), Some(0));
        assert_eq!(first.stdout, second.stdout);
    }
}

#[test]
fn seed_is_logged() {
    let o = zonotopal(&["audit", "--k", "0", "--seed", "7", &data("u23.mat")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("# seed: 7\n"));
}

#[test]
fn input_errors_exit_one() {
    let bad = temp_file("a b\n1 x\n", ".mat");
    let o = zonotopal(&[
        "hilbert",
        "--kind",
        "internal",
        bad.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let dependent = temp_file("a b\n1 1\n2 2\n", ".mat");
    let o = zonotopal(&[
        "hilbert",
        "--kind",
        "internal",
        dependent.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));

    let o = zonotopal(&["hilbert", "--kind", "internal", &data("dt.graph")]);
    assert_eq!(o.status.code(), Some(1));

    let o = zonotopal(&["audit", "--k", "-9", &data("u23.mat")]);
    assert_eq!(o.status.code(), Some(1));

    let o = zonotopal(&["hilbert", "--kind", "internal", "/nonexistent/file.mat"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn enumeration_guard_override() {
    let dt = data("dt.graph");
    let o = Command::new(env!("CARGO_BIN_EXE_zonotopal"))
        .args(["matroid", &dt, "--mode", "cographical"])
        .env("ZONOTOPAL_MAX_N", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let o = Command::new(env!("CARGO_BIN_EXE_zonotopal"))
        .args(["matroid", &dt, "--mode", "cographical"])
        .env("ZONOTOPAL_MAX_N", "6")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn matrix_from_tempfile() {
    let f = temp_file("# generic plane\na b c d\n1 0 1 1\n0 1 1 2\n", ".mat");
    let o = zonotopal(&["hilbert", "--kind", "central", f.path().to_str().unwrap()]);
    assert_eq!(stdout(&o), "1 2 3\n");
}
