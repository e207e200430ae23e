use std::path::Path;

use wildclass::cli::{run, CliVerdict};

fn wc(args: &[&str]) -> CliVerdict {
    let argv: Vec<String> = std::iter::once("wildclass")
        .chain(args.iter().copied())
        .map(String::from)
        .collect();
    run(&argv)
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn group_gen_and_iso() {
    let dir = tempfile::tempdir().unwrap();
    let (c4, v4, c6) = (
        path(dir.path(), "c4.grp"),
        path(dir.path(), "v4.grp"),
        path(dir.path(), "c6.grp"),
    );
    assert_eq!(
        wc(&["group", "gen", "--family", "cyclic", "--n", "4", "-o", &c4]).code,
        0
    );
    assert_eq!(
        wc(&[
            "group",
            "gen",
            "--family",
            "product",
            "--factors",
            "2,2",
            "-o",
            &v4
        ])
        .code,
        0
    );
    assert_eq!(
        wc(&["group", "gen", "--family", "cyclic", "--n", "6", "-o", &c6]).code,
        0
    );
    assert_eq!(wc(&["group", "iso", &c4, &v4]).code, 1);
    let v = wc(&["group", "iso", &c4, &c4, "--witness", "--json"]);
    assert_eq!(v.code, 0);
    assert_eq!(
        v.payload.unwrap()["mapping"],
        serde_json::json!([1, 2, 3, 4])
    );
    assert_eq!(wc(&["iso", "--kind", "group", &c4, &c6]).code, 1);
}

#[test]
fn reduction_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let s3 = path(dir.path(), "s3.grp");
    let cdg = path(dir.path(), "s3.cdg");
    let back = path(dir.path(), "back.grp");
    assert_eq!(
        wc(&[
            "group",
            "gen",
            "--family",
            "symmetric",
            "--n",
            "3",
            "-o",
            &s3
        ])
        .code,
        0
    );
    let v = wc(&["reduce", "gamma", &s3, "-o", &cdg, "--pruned", "--json"]);
    assert_eq!(v.code, 0);
    assert_eq!(v.payload.unwrap()["nodes"], 42);
    assert_eq!(wc(&["reduce", "gamma-inv", &cdg, "-o", &back]).code, 0);
    assert_eq!(wc(&["iso", "--kind", "group", &s3, &back]).code, 0);
}

#[test]
fn lattice_checks_on_p2() {
    let dir = tempfile::tempdir().unwrap();
    let graph = path(dir.path(), "p2.graph");
    std::fs::write(&graph, "2 1\n1 2\n").unwrap();
    let lat = path(dir.path(), "p2ext.lat");
    let v = wc(&["reduce", "incidence", &graph, "--extended", "-o", &lat]);
    assert_eq!(v.code, 0, "{}", v.message);
    assert!(dir.path().join("p2ext.roles.json").exists());

    let v = wc(&["lattice", "check", &lat, "--crosscheck", "--json"]);
    assert_eq!(v.code, 0);
    let payload = v.payload.unwrap();
    assert_eq!(payload["distributive"], false);
    assert_eq!(payload["modular"], false);

    assert_eq!(wc(&["lattice", "check", &lat, "--find", "n5"]).code, 1);
    assert_eq!(wc(&["lattice", "check", &lat, "--find", "m3"]).code, 0);
    assert_eq!(wc(&["lattice", "check", &lat, "--distributive"]).code, 1);
    assert_eq!(wc(&["lattice", "check", &lat]).code, 2);

    let plain = path(dir.path(), "p2.cdg");
    assert_eq!(wc(&["reduce", "incidence", &graph, "-o", &plain]).code, 0);
    assert_eq!(wc(&["iso", "--kind", "cdigraph", &plain, &plain]).code, 0);
}

#[test]
fn graph_iso_identity_witness() {
    let dir = tempfile::tempdir().unwrap();
    let a = path(dir.path(), "a.graph");
    std::fs::write(&a, "3 2\n1 2\n2 3\n").unwrap();
    let v = wc(&["iso", "--kind", "graph", &a, &a, "--witness"]);
    assert_eq!(v.code, 0);
    assert!(v.message.contains("1->1 2->2 3->3"));
}

#[test]
fn matrix_commands() {
    let dir = tempfile::tempdir().unwrap();
    let pairs = path(dir.path(), "pairs.json");
    // (A, B) and its conjugate by [[1,1],[0,1]] over F_2
    std::fs::write(
        &pairs,
        "[[[[1,0],[0,0]], [[0,1],[0,0]]], [[[1,1],[0,0]], [[0,1],[0,0]]]]",
    )
    .unwrap();
    let v = wc(&["matrix", "simsim", &pairs, "--p", "2", "--json"]);
    assert_eq!(v.code, 0, "{}", v.message);
    let zero = path(dir.path(), "zero.json");
    let skew = path(dir.path(), "skew.json");
    let sym = path(dir.path(), "sym.json");
    std::fs::write(&zero, "[[0,0],[0,0]]").unwrap();
    std::fs::write(&skew, "[[0,1],[-1,0]]").unwrap();
    std::fs::write(&sym, "[[1,0],[0,1]]").unwrap();
    assert_eq!(
        wc(&["matrix", "skewcong", &skew, &skew, "--p", "3"]).code,
        0
    );
    assert_eq!(
        wc(&["matrix", "skewcong", &zero, &skew, "--p", "3"]).code,
        1
    );
    assert_eq!(wc(&["matrix", "skewcong", &sym, &skew, "--p", "3"]).code, 2);
    assert_eq!(
        wc(&["matrix", "skewcong", &skew, &skew, "--p", "4"]).code,
        2
    );
}

#[test]
fn verify_reports_are_deterministic() {
    for theorem in ["theorem2", "theorem3", "theorem4"] {
        let a = wc(&["verify", theorem, "--scale", "4", "--json"]);
        let b = wc(&["verify", theorem, "--scale", "4", "--json"]);
        assert_eq!(a.stdout_text(), b.stdout_text());
        let expected = if theorem == "theorem4" { 1 } else { 0 };
        assert_eq!(a.code, expected, "{theorem}");
    }
    let v = wc(&["verify", "theorem3", "--scale", "4", "--json"]);
    let payload = v.payload.unwrap();
    assert_eq!(payload["per_vertex_count"]["4"]["lattice_classes"], 11);
    assert_eq!(wc(&["verify", "theorem3", "--scale", "9"]).code, 2);
}

#[test]
fn export_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let lat = path(dir.path(), "chain.lat");
    std::fs::write(&lat, "3 2\n1 2\n2 3\n").unwrap();
    let v = wc(&["export", &lat, "--to", "dot"]);
    assert_eq!(v.code, 0);
    assert!(v.message.contains("rankdir=BT"));
    let json = path(dir.path(), "chain.json");
    assert_eq!(wc(&["export", &lat, "--to", "json", "-o", &json]).code, 0);
    assert_eq!(wc(&["iso", "--kind", "lattice", &lat, &json]).code, 0);

    let bad = path(dir.path(), "bad.graph");
    std::fs::write(&bad, "2 1\n1 1\n").unwrap();
    let v = wc(&["iso", "--kind", "graph", &bad, &bad]);
    assert_eq!(v.code, 2);
    assert!(v.message.contains("line 2"));
    assert_eq!(wc(&["frobnicate"]).code, 2);
    assert_eq!(
        wc(&["iso", "--kind", "graph", "missing.graph", "missing.graph"]).code,
        2
    );
    assert_eq!(wc(&["--help"]).code, 0);
}
