//! End-to-end runs of the `maxab` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use maxab_cli::commands::{write_counterexample, CounterexampleFile, ExitStatus};
use maxab_cli::formats::{read_table_file, write_table};
use maxab_cli::manifest::{read_manifest, Manifest};
use maxab_cli::AnalysisReport;
use maxab_core::verify::{Counterexample, TheoremReport};
use maxab_core::{family, FamilyKind, TheoremId, Verdict};
use serde_json::Value;

fn maxab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maxab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn verdict(report: &Value, theorem: &str) -> String {
    report["theorems"]
        .as_array()
        .unwrap()
        .iter()
        .find(|t| t["theorem"] == theorem)
        .unwrap_or_else(|| panic!("no {theorem}"))["verdict"]
        .as_str()
        .unwrap()
        .to_string()
}

#[test]
fn analyze_dihedral_4() {
    let o = maxab(&["analyze", "family", "dihedral", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r = json(&o);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["family"]["r"], 3);
    assert_eq!(r["z_classification"]["verdict"], "Z_INDEPENDENT");
    assert_eq!(verdict(&r, "T6"), "HOLDS");
    assert!(r.get("timings_ms").is_none());
}

#[test]
fn analyze_abelian_marks_checks_not_applicable() {
    let r = json(&maxab(&[
        "analyze", "family", "cyclic", "5", "--format", "json",
    ]));
    assert_eq!(r["group"]["abelian"], true);
    for t in ["T2i", "T2ii", "T2iii", "T2iv", "T2v", "T4", "T6"] {
        assert_eq!(verdict(&r, t), "NOT_APPLICABLE", "{t}");
    }
    assert_eq!(r["z_classification"]["verdict"], "NOT_APPLICABLE");
}

#[test]
fn text_and_json_agree_on_verdicts() {
    for spec in [
        &["family", "symmetric", "4"][..],
        &[
            "product",
            "family",
            "quaternion",
            "2",
            "family",
            "cyclic",
            "3",
        ],
    ] {
        let mut args = vec!["analyze"];
        args.extend_from_slice(spec);
        let text = stdout(&maxab(&args));
        args.extend_from_slice(&["--format", "json"]);
        let report: AnalysisReport = serde_json::from_slice(&maxab(&args).stdout).unwrap();
        let from_text: Vec<(String, String)> = text
            .lines()
            .skip_while(|l| *l != "theorems:")
            .skip(1)
            .filter(|l| !l.trim_start().starts_with("note:"))
            .map(|l| {
                let mut it = l.split_whitespace();
                (
                    it.next().unwrap().to_string(),
                    it.next().unwrap().to_string(),
                )
            })
            .collect();
        let from_json: Vec<(String, String)> = report
            .theorems
            .iter()
            .map(|r| (r.theorem.to_string(), r.verdict.to_string()))
            .chain(
                report
                    .t2iv_per_d
                    .iter()
                    .enumerate()
                    .map(|(i, r)| (format!("T2iv[D{}]", i + 1), r.verdict.to_string())),
            )
            .chain(
                report
                    .t5_per_member
                    .iter()
                    .enumerate()
                    .map(|(i, r)| (format!("T5[H{}]", i + 1), r.verdict.to_string())),
            )
            .collect();
        assert_eq!(from_text, from_json);
    }
}

#[test]
fn report_round_trips_through_json() {
    let o = maxab(&[
        "analyze",
        "family",
        "symmetric",
        "4",
        "--format",
        "json",
        "--timings",
    ]);
    let text = stdout(&o);
    let report: AnalysisReport = serde_json::from_str(&text).unwrap();
    assert!(report.timings_ms.is_some());
    assert_eq!(report.to_json(), text);
    assert_eq!(report.t2iv_per_d.len(), 3);
}

#[test]
fn ingest_errors_exit_1() {
    let tmp = tempfile::tempdir().unwrap();
    // A Latin square with identity 0 that is not associative.
    let loop5 = tmp.path().join("loop.table");
    fs::write(
        &loop5,
        "order 5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n",
    )
    .unwrap();
    let o = maxab(&["analyze", "table", loop5.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stderr(&o).contains("not associative: (1*1)*2 != 1*(1*2)"),
        "{}",
        stderr(&o)
    );

    let bad = tmp.path().join("bad.table");
    fs::write(&bad, "order 2\n0 1\n1 x\n").unwrap();
    let o = maxab(&["analyze", "table", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stderr(&o).contains("bad.table:3: `x` is not a non-negative integer"),
        "{}",
        stderr(&o)
    );

    let o = maxab(&[
        "analyze",
        "table",
        tmp.path().join("missing.table").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(
        maxab(&["analyze", "family", "dihedral", "2"]).status.code(),
        Some(1)
    );
}

#[test]
fn usage_errors_exit_1_and_help_exits_0() {
    assert_eq!(maxab(&[]).status.code(), Some(1));
    assert_eq!(maxab(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        maxab(&["verify", "--theorems", "t3"]).status.code(),
        Some(1)
    );
    assert_eq!(
        maxab(&["analyze", "family", "cyclic", "3", "--format", "xml"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(maxab(&["--help"]).status.code(), Some(0));
    assert_eq!(maxab(&["--version"]).status.code(), Some(0));
}

#[test]
fn failure_status_is_2_and_counterexamples_are_standalone() {
    assert_eq!(ExitStatus::Failure.code(), 2);
    let g = family(FamilyKind::Dihedral, 4).unwrap();
    let mut report = TheoremReport::new(TheoremId::T2iii, &g, Verdict::Fails);
    report.counterexample = Some(Counterexample::IntersectionAboveCenter {
        intersection: vec![0, 2],
        center: vec![0],
    });
    let tmp = tempfile::tempdir().unwrap();
    let file = CounterexampleFile::new(&g, vec![report]);
    let mut taken = Default::default();
    let a = write_counterexample(tmp.path(), &file, &mut taken).unwrap();
    let b = write_counterexample(tmp.path(), &file, &mut taken).unwrap();
    assert_ne!(a, b);
    let back: CounterexampleFile = serde_json::from_str(&fs::read_to_string(&a).unwrap()).unwrap();
    assert_eq!(back, file);
    assert_eq!(back.group().unwrap().rows(), g.rows());
}

#[test]
fn generators_file() {
    let tmp = tempfile::tempdir().unwrap();
    let path = tmp.path().join("s4.gens");
    fs::write(&path, "degree 4\n(1 2 3 4)\n(1 2)\n").unwrap();
    let r = json(&maxab(&[
        "analyze",
        "generators",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]));
    assert_eq!(r["group"]["name"], "s4");
    assert_eq!(r["group"]["order"], 24);
    assert_eq!(r["family"]["r"], 11);
}

fn manifest_of(dir: &Path) -> Manifest {
    read_manifest(dir).unwrap()
}

#[test]
fn catalog_small_orders() {
    let tmp = tempfile::tempdir().unwrap();
    let one = tmp.path().join("one");
    assert_eq!(
        maxab(&[
            "catalog",
            "--max-order",
            "1",
            "--out",
            one.to_str().unwrap()
        ])
        .status
        .code(),
        Some(0)
    );
    let m = manifest_of(&one);
    assert_eq!(m.entries.len(), 1);
    assert_eq!(fs::read_dir(&one).unwrap().count(), 2);

    let eight = tmp.path().join("eight");
    maxab(&[
        "catalog",
        "--max-order",
        "8",
        "--out",
        eight.to_str().unwrap(),
    ]);
    let m = manifest_of(&eight);
    assert_eq!(m.entries.iter().filter(|e| e.order == 8).count(), 5);
    for e in &m.entries {
        assert!(e.path.starts_with(&format!("{:03}-", e.order)));
    }
}

#[test]
fn catalog_files_round_trip() {
    let tmp = tempfile::tempdir().unwrap();
    maxab(&[
        "catalog",
        "--max-order",
        "24",
        "--out",
        tmp.path().to_str().unwrap(),
    ]);
    for e in manifest_of(tmp.path()).entries {
        let path = tmp.path().join(&e.path);
        let text = fs::read_to_string(&path).unwrap();
        let body: String = text
            .lines()
            .filter(|l| !l.starts_with('#'))
            .map(|l| format!("{l}\n"))
            .collect();
        assert_eq!(
            write_table(&read_table_file(&path).unwrap()),
            body,
            "{}",
            e.path
        );
    }
}

#[test]
fn input_labeling_is_re_emitted_unchanged() {
    let tmp = tempfile::tempdir().unwrap();
    let path = tmp.path().join("c3.table");
    let text = "order 3\n2 0 1\n0 1 2\n1 2 0\nlabels\n0 a\n1 e\n2 a^2\n";
    fs::write(&path, text).unwrap();
    assert_eq!(write_table(&read_table_file(&path).unwrap()), text);
    let r = json(&maxab(&[
        "analyze",
        "table",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]));
    assert_eq!(r["group"]["relabeling"], serde_json::json!([1, 0, 2]));
}

#[test]
fn verify_regenerates_an_empty_corpus_dir() {
    let tmp = tempfile::tempdir().unwrap();
    let corpus = tmp.path().join("corpus");
    fs::create_dir(&corpus).unwrap();
    let args = [
        "verify",
        "--corpus",
        corpus.to_str().unwrap(),
        "--max-order",
        "24",
        "--theorems",
        "t6",
        "--format",
        "json",
    ];
    let o = maxab(&args);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stderr(&o).contains("generating"));
    let s = json(&o);
    assert_eq!(s["theorems"].as_array().unwrap().len(), 1);
    assert_eq!(s["theorems"][0]["fails"], 0);
    let groups = s["groups"].as_u64().unwrap();
    assert_eq!(groups, manifest_of(&corpus).entries.len() as u64);

    // Second run loads the manifest instead of regenerating.
    let o = maxab(&args);
    assert!(!stderr(&o).contains("generating"));
    assert_eq!(json(&o)["groups"].as_u64().unwrap(), groups);
}

#[test]
fn verify_rejects_foreign_dirs_and_tampered_tables() {
    let tmp = tempfile::tempdir().unwrap();
    fs::write(tmp.path().join("notes.txt"), "x").unwrap();
    let o = maxab(&[
        "verify",
        "--corpus",
        tmp.path().to_str().unwrap(),
        "--max-order",
        "8",
    ]);
    assert_eq!(o.status.code(), Some(1));

    let corpus = tmp.path().join("corpus");
    maxab(&[
        "catalog",
        "--max-order",
        "8",
        "--out",
        corpus.to_str().unwrap(),
    ]);
    let c4 = manifest_of(&corpus)
        .entries
        .into_iter()
        .find(|e| e.name == "C4")
        .unwrap();
    let klein = "order 4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n";
    fs::write(corpus.join(&c4.path), klein).unwrap();
    let o = maxab(&[
        "verify",
        "--corpus",
        corpus.to_str().unwrap(),
        "--max-order",
        "8",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stderr(&o).contains("does not match the manifest"),
        "{}",
        stderr(&o)
    );
}

#[test]
fn verify_counts_sum_to_corpus_size() {
    let o = maxab(&[
        "verify",
        "--max-order",
        "16",
        "--theorems",
        "t2,t2v,cover",
        "--jobs",
        "2",
        "--oracle",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let s = json(&o);
    assert_eq!(s["groups"], 42);
    for c in s["theorems"].as_array().unwrap() {
        let total: u64 = ["holds", "not_applicable", "fails", "sampled", "skipped"]
            .iter()
            .map(|k| c[k].as_u64().unwrap())
            .sum();
        assert_eq!(total, 42);
        assert_eq!(c["sampled"], 0);
    }
    let text = stdout(&maxab(&["verify", "--max-order", "16", "--theorems", "t6"]));
    assert!(text.starts_with("verified 42 groups\n"), "{text}");
    assert!(text.contains("T6"));
}
