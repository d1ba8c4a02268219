use std::process::Command;
use std::time::Duration;

use proptest::prelude::*;
use sbf_tools::bench::{emit_csv, parse_csv, BenchRow, Method};
use sbf_tools::cli::run;

fn sbf(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("sbf").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = sbf(args);
    assert_eq!(code, 0, "sbf {args:?} failed: {err}");
    out
}

#[test]
fn golden_vectors() {
    assert_eq!(
        ok(&["to-carrier", "--n", "6", "--indices", "2"]),
        "0011001\n"
    );
    assert_eq!(
        ok(&["to-carrier", "--n", "10", "--indices", "5,7,8"]),
        "00000100111\n"
    );
    assert_eq!(
        ok(&["to-spectrum", "--n", "7", "--indices", "2,3"]),
        "00100010\n"
    );
    assert_eq!(ok(&["transform", "--vector", "0010000"]), "0011001\n");
}

#[test]
fn inverse_direction_recovers_polynomial_numbers() {
    let out = ok(&["to-spectrum", "--vector", "00000100111", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["indices"], serde_json::json!([5, 7, 8]));
    assert_eq!(v["kind"], "polynomial");
    assert_eq!(v["vector"], "00000101100");
}

#[test]
fn json_output_feeds_back_as_spec_record() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pi.json");
    std::fs::write(
        &path,
        ok(&[
            "to-carrier",
            "--n",
            "10",
            "--indices",
            "5,7,8",
            "--format",
            "json",
        ]),
    )
    .unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(ok(&["to-spectrum", "--spec", p]), "00000101100\n");
    // the record says "valued"; to-carrier wants polynomial numbers
    let (code, _, err) = sbf(&["to-carrier", "--spec", p]);
    assert_eq!(code, 1);
    assert!(err.contains("kind"));
}

#[test]
fn eval_variants() {
    let args = ["eval", "--n", "6", "--indices", "2", "--kind", "polynomial"];
    assert_eq!(ok(&[&args[..], &["--weight", "6"]].concat()), "1\n");
    assert_eq!(ok(&[&args[..], &["--weight", "4"]].concat()), "0\n");
    assert_eq!(
        ok(&[&args[..], &["--assignment", "101101"]].concat()),
        "0\n"
    );
    assert_eq!(
        ok(&[&args[..], &["--assignment", "111111"]].concat()),
        "1\n"
    );
    assert_eq!(ok(&["eval", "--vector", "0010000", "--weight", "2"]), "1\n");
    let out = ok(&[
        "eval",
        "--vector",
        "00100010",
        "--kind",
        "polynomial",
        "--weight",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(out.trim(), r#"{"n":7,"weight":4,"value":0}"#);
    assert_eq!(
        sbf(&["eval", "--vector", "0010000", "--assignment", "11"]).0,
        1
    );
    assert_eq!(sbf(&["eval", "--vector", "0010000", "--weight", "9"]).0, 1);
}

#[test]
fn anf_output() {
    assert_eq!(
        ok(&["anf", "--n", "3", "--indices", "0,3"]),
        "1 ^ x1*x2*x3\n"
    );
    let out = ok(&[
        "anf",
        "--n",
        "7",
        "--indices",
        "2,3",
        "--kind",
        "valued",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["count"], 28);
    assert_eq!(v["terms"][0], serde_json::json!([1, 2]));
    let (code, _, err) = sbf(&[
        "anf",
        "--n",
        "7",
        "--indices",
        "2,3",
        "--kind",
        "valued",
        "--term-limit",
        "27",
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("28 terms"));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["to-carrier", "--n", "3", "--indices", "4"][..],
        &["to-carrier", "--n", "5", "--indices", "3,1"],
        &["to-carrier", "--indices", "2"],
        &[
            "to-carrier",
            "--n",
            "6",
            "--indices",
            "2",
            "--vector",
            "0010000",
        ],
        &["to-carrier", "--n", "5", "--vector", "0010000"],
        &["to-carrier", "--vector", "00x"],
        &["to-carrier"],
        &["nonsense"],
        &["verify", "--max-n", "20"],
    ] {
        let (code, out, err) = sbf(args);
        assert_eq!(code, 1, "{args:?}");
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }
    assert_eq!(sbf(&["--help"]).0, 0);
}

#[test]
fn output_is_byte_stable() {
    let a = ok(&["to-carrier", "--n", "300", "--indices", "3,17,200"]);
    let b = ok(&["to-carrier", "--n", "300", "--indices", "3,17,200"]);
    assert_eq!(a, b);
    assert_eq!(a.len(), 302);
}

#[test]
fn verify_small() {
    let out = ok(&[
        "verify",
        "--max-n",
        "9",
        "--random-sets",
        "50",
        "--seed",
        "4",
    ]);
    assert!(out.starts_with("ok: "));
}

#[test]
fn bench_writes_csv_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("b.csv");
    let svg = dir.path().join("b.svg");
    ok(&[
        "bench",
        "--n",
        "16,32,64",
        "--b",
        "4",
        "--reps",
        "1",
        "--out",
        csv.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    let rows = parse_csv(&std::fs::read(&csv).unwrap()).unwrap();
    assert_eq!(rows.len(), 6);
    assert!(rows
        .iter()
        .filter(|r| r.method == Method::Triangle)
        .all(|r| r.measured_ops == (r.n * (r.n + 1) / 2) as u64));
    assert!(std::fs::read_to_string(&svg).unwrap().contains("<polyline"));

    let out = ok(&[
        "bench",
        "--n",
        "32",
        "--random-size",
        "3",
        "--reps",
        "1",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);

    let table = ok(&["bench", "--table"]);
    assert!(table.starts_with("n,index_set,reported_s2,"));
    assert_eq!(table.lines().count(), 16);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_sbf");
    let out = Command::new(bin)
        .args(["to-carrier", "--n", "6", "--indices", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(out.stdout, b"0011001\n");
    let out = Command::new(bin)
        .args(["to-carrier", "--n", "2", "--indices", "5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
}

fn arb_row() -> impl Strategy<Value = BenchRow> {
    (
        1usize..5000,
        prop::collection::btree_set(0usize..5000, 0..6),
        any::<bool>(),
        any::<u64>(),
        prop::option::of(any::<u64>()),
        any::<u64>(),
    )
        .prop_map(|(n, set, tri, ops, formula, ns)| BenchRow {
            n,
            index_set: set.into_iter().collect(),
            method: if tri {
                Method::Triangle
            } else {
                Method::Combinatorial
            },
            measured_ops: ops,
            formula_ops: formula,
            wall_time: Duration::from_nanos(ns),
        })
}

proptest! {
    #[test]
    fn csv_round_trip(rows in prop::collection::vec(arb_row(), 0..20)) {
        prop_assert_eq!(parse_csv(&emit_csv(&rows).unwrap()).unwrap(), rows);
    }
}
