use std::process::{Command, Output};

use cluster_dioph::dioph::SolutionTree;
use cluster_dioph::mutclass::SignEquivalentCatalog;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cluster-dioph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn classify_rank_three_json() {
    let text = ok(&["classify", "--rank", "3", "--bound", "4", "--json"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["found"].as_array().unwrap().len(), 3);
    let cat = SignEquivalentCatalog::from_json(&v).unwrap();
    assert_eq!(
        serde_json::to_string_pretty(&cat.to_json()).unwrap() + "\n",
        text
    );
}

#[test]
fn classify_empty_ranks() {
    for args in [
        ["classify", "--rank", "1", "--bound", "4", "--json"],
        ["classify", "--rank", "4", "--bound", "2", "--json"],
    ] {
        let v: Value = serde_json::from_str(&ok(&args)).unwrap();
        assert!(v["found"].as_array().unwrap().is_empty(), "{args:?}");
    }
}

#[test]
fn solve_reports_unsolvable_with_certificate() {
    let text = ok(&["solve", "--family", "markov3", "--k", "5"]);
    assert!(text.starts_with("markov3 k=5: unsolvable"), "{text}");
    assert!(text.contains("certificate: valid"));
    let v: Value =
        serde_json::from_str(&ok(&["solve", "--family", "lampe3", "--k", "7", "--json"])).unwrap();
    assert_eq!(v["solvable"], true);
    assert_eq!(v["fundamental"], serde_json::json!([1, 1, 1]));
}

#[test]
fn verify_invariant_from_a_file() {
    let dir = std::env::temp_dir().join(format!("cluster-dioph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("torus.mat");
    std::fs::write(&path, "0 2 -2\n-2 0 2\n2 -2 0\n").unwrap();
    let text = ok(&[
        "verify-invariant",
        "--matrix",
        path.to_str().unwrap(),
        "--expr",
        "(x1^2+x2^2+x3^2)/(x1*x2*x3)",
        "--depth",
        "1",
    ]);
    assert!(text.starts_with("invariant: true"), "{text}");
    let text = ok(&[
        "verify-invariant",
        "--matrix",
        path.to_str().unwrap(),
        "--expr",
        "x1*x2",
        "--depth",
        "1",
    ]);
    assert!(text.starts_with("invariant: false"), "{text}");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn tree_json_round_trips_and_is_deterministic() {
    let args = [
        "tree", "--family", "lampe3", "--k", "7", "--bound", "1000", "--json",
    ];
    let a = ok(&args);
    let b = ok(&[
        "--threads",
        "1",
        "tree",
        "--family",
        "lampe3",
        "--k",
        "7",
        "--bound",
        "1000",
        "--json",
    ]);
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["root"], serde_json::json!([1, 1, 1]));
    let tree = SolutionTree::from_json(&v).unwrap();
    assert_eq!(
        serde_json::to_string_pretty(&tree.to_json()).unwrap() + "\n",
        a
    );
}

#[test]
fn member_walks_down_to_the_root() {
    let text = ok(&[
        "member", "--family", "markov3", "--k", "3", "--tuple", "5,2,1",
    ]);
    assert!(text.starts_with("member: true"));
    assert!(text.contains("(1, 1, 1)  fundamental"));
}

#[test]
fn enumerate_counts() {
    for (ty, n) in [("A1xA1", 4), ("A2", 10), ("B2", 6), ("G2", 8)] {
        let v: Value = serde_json::from_str(&ok(&["enumerate", "--type", ty, "--json"])).unwrap();
        assert_eq!(v["ordered_count"], n, "{ty}");
    }
}

#[test]
fn mutate_twice_in_one_direction_is_the_identity() {
    let text = ok(&[
        "mutate",
        "--matrix",
        "0 1 -1; -4 0 2; 4 -2 0",
        "--word",
        "2,2",
    ]);
    assert_eq!(text.trim(), "0 1 -1; -4 0 2; 4 -2 0");
}

#[test]
fn solve_finite_matches_the_classic_count() {
    let v: Value = serde_json::from_str(&ok(&["solve-finite", "--type", "G2", "--json"])).unwrap();
    assert_eq!(v["solutions"].as_array().unwrap().len(), 8);
}

#[test]
fn exit_codes() {
    // Usage errors.
    assert_eq!(code(&["solve", "--family", "nope", "--k", "3"]), 2);
    assert_eq!(code(&["classify", "--rank", "3"]), 2);
    assert_eq!(code(&["classify", "--rank", "3", "--bound", "0"]), 2);
    assert_eq!(
        code(&[
            "verify-invariant",
            "--matrix",
            "0 1; -1 0",
            "--expr",
            "x1 +"
        ]),
        2
    );
    assert_eq!(
        code(&["tree", "--family", "markov3", "--k", "3", "--bound", "0"]),
        2
    );
    // Domain refusals.
    assert_eq!(
        code(&[
            "solve-finite",
            "--type",
            "A1xA1",
            "--phi",
            "e1",
            "--f",
            "x1^2"
        ]),
        1
    );
    assert_eq!(
        code(&[
            "solve",
            "--family",
            "rank2-markov",
            "--compose",
            "4*X^2-17*X+18",
            "--t",
            "2"
        ]),
        1
    );
    assert_eq!(
        code(&["member", "--family", "markov3", "--k", "3", "--tuple", "5,2,2"]),
        1
    );
    assert_eq!(code(&["classify", "--rank", "5", "--bound", "1"]), 1);
}

#[test]
fn composed_decision() {
    let text = ok(&[
        "solve",
        "--family",
        "rank2-markov",
        "--compose",
        "(X-3)*(X-4)",
        "--t",
        "4",
    ]);
    assert!(text.contains("solvable, generated by (1, 1)"), "{text}");
    let out = run(&[
        "solve",
        "--family",
        "rank2-markov",
        "--compose",
        "4*X^2-17*X+18",
        "--t",
        "2",
    ]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("monic"));
}
