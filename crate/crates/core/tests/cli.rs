use std::io::Write;
use std::process::{Command, Output, Stdio};

use blockspec::families::FamilySpec;
use blockspec::spectral::{format_significant, spectral_radius, DEFAULT_TOL};
use blockspec::MatrixKind;

fn blockspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blockspec"))
        .args(args)
        .output()
        .unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_blockspec"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_writes_edge_lists() {
    let o = blockspec(&["gen", "path:5"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("5 4"));
    assert_eq!(stdout(&o).lines().count(), 5);

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bowtie.txt");
    let o = blockspec(&["gen", "cliquepath:3,3", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(std::fs::read_to_string(&out).unwrap().starts_with("5 6\n"));

    for bad in ["cliquepath:1,3", "nonsense:3", "path:"] {
        assert_eq!(blockspec(&["gen", bad]).status.code(), Some(1), "{bad}");
    }
}

#[test]
fn spectrum_prints_twelve_significant_digits() {
    let k5 = stdout(&blockspec(&["gen", "complete:5"]));
    let o = with_stdin(&["spectrum", "--matrix", "adjacency"], &k5);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("4.00000000000"));

    let p3 = stdout(&blockspec(&["gen", "path:3"]));
    let o = with_stdin(&["spectrum", "-", "--matrix", "distance"], &p3);
    assert_eq!(stdout(&o).lines().next(), Some("2.73205080757"));
    assert_eq!(stdout(&o).lines().nth(1).unwrap().split(' ').count(), 3);

    let o = with_stdin(&["spectrum", "--matrix", "cdistance"], &p3);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());

    let o = with_stdin(&["spectrum", "--matrix", "distance"], "3 1\n0 1\n");
    assert_eq!(o.status.code(), Some(1));
    let o = with_stdin(&["spectrum", "--matrix", "bogus"], &p3);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn gen_then_spectrum_matches_the_library() {
    let dir = tempfile::tempdir().unwrap();
    for spec in [
        "cliquepath:3,2,4",
        "cliquestar:2,3;3;2",
        "broom:7",
        "path:9",
    ] {
        let file = dir.path().join("g.txt");
        assert!(blockspec(&["gen", spec, "--out", file.to_str().unwrap()])
            .status
            .success());
        let g = spec.parse::<FamilySpec>().unwrap().build().unwrap();
        for kind in ["adjacency", "distance", "cadjacency", "cdistance"] {
            let o = blockspec(&["spectrum", file.to_str().unwrap(), "--matrix", kind]);
            let k: MatrixKind = kind.parse().unwrap();
            match spectral_radius(&g, k, DEFAULT_TOL) {
                Ok(p) => {
                    assert!(o.status.success());
                    assert_eq!(
                        stdout(&o).lines().next().unwrap(),
                        format_significant(p.value, 12)
                    );
                }
                Err(_) => assert_eq!(o.status.code(), Some(1)),
            }
        }
    }
}

#[test]
fn verify_exit_codes() {
    let o = blockspec(&["verify", "L4.1", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["theorem"], "L4.1");
    assert_eq!(report["violations"].as_array().unwrap().len(), 0);
    for key in [
        "params",
        "checked",
        "excluded",
        "ties",
        "witness",
        "tolerance",
    ] {
        assert!(report.get(key).is_some(), "{key}");
    }

    assert_eq!(blockspec(&["verify", "X9.9"]).status.code(), Some(1));
    assert_eq!(
        blockspec(&["verify", "T2.2", "--n", "40"]).status.code(),
        Some(1)
    );
    assert_eq!(
        blockspec(&["verify", "T2.2", "--format", "xml"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(blockspec(&["verify"]).status.code(), Some(1));
    assert_eq!(blockspec(&["--help"]).status.code(), Some(0));

    // the diameter-class claim for block graphs fails; that is exit 2, not a crash
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("l31.csv");
    let o = blockspec(&[
        "verify",
        "L3.1",
        "--n",
        "6",
        "--format",
        "csv",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    let csv = std::fs::read_to_string(&out).unwrap();
    assert!(csv.starts_with("theorem,instance,comparison,graph,lhs,rhs,margin,status,detail"));
    assert!(csv.contains("violated"));
}

#[test]
fn verify_t25_reports_tree_count() {
    let o = blockspec(&["verify", "T2.5", "--n", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    // 23 trees of order 8; the star and the three double stars have d <= 3
    assert_eq!(report["checked"], 19);
    assert_eq!(report["excluded"], 4);
}

#[test]
fn enumerate_counts_and_blocks() {
    let count = |args: &[&str]| stdout(&blockspec(args)).trim().to_string();
    assert_eq!(
        count(&["enumerate", "trees", "--n", "4", "--count-only"]),
        "2"
    );
    assert_eq!(
        count(&[
            "enumerate",
            "cliquetrees",
            "--n",
            "4",
            "--s",
            "2",
            "--count-only"
        ]),
        "1"
    );
    assert_eq!(
        count(&["enumerate", "trees", "--n", "8", "--count-only"]),
        "23"
    );
    assert_eq!(
        count(&["enumerate", "connected", "--n", "5", "--count-only"]),
        "21"
    );

    let text = stdout(&blockspec(&["enumerate", "trees", "--n", "5"]));
    let blocks: Vec<&str> = text.split("\n\n").collect();
    assert_eq!(blocks.len(), 3);
    for b in blocks {
        assert!(blockspec::graph::parse_edge_list(b).is_ok());
    }

    assert_eq!(
        blockspec(&["enumerate", "trees", "--n", "13"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        blockspec(&["enumerate", "connected", "--n", "9"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        blockspec(&["enumerate", "trees", "--n", "0"]).status.code(),
        Some(1)
    );
    assert_eq!(
        blockspec(&["enumerate", "forests", "--n", "3"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn jobs_do_not_change_output() {
    let strip = |o: Output| {
        let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v.to_string()
    };
    let a = strip(blockspec(&[
        "verify", "L2.1", "--n", "8", "--trials", "100", "--seed", "3", "--jobs", "1",
    ]));
    let b = strip(blockspec(&[
        "verify", "L2.1", "--n", "8", "--trials", "100", "--seed", "3", "--jobs", "4",
    ]));
    assert_eq!(a, b);
}
