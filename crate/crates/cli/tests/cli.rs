use std::process::{Command, Output};

use serde_json::Value;

const DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data");
const SAMPLE: &str = "(2,4) (4,5) (6,8)";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nctoggle"))
        .args(args)
        .env_remove("NCTOGGLE_MAX_N")
        .output()
        .expect("spawn nctoggle")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit status")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).expect("valid json")
}

fn data(name: &str) -> String {
    format!("{DATA}/{name}")
}

/// First line of text output: the arc list.
fn arcs_of(args: &[&str]) -> String {
    stdout(args).lines().next().unwrap_or_default().to_string()
}

#[test]
fn enumerate_counts_and_lists() {
    assert_eq!(stdout(&["enumerate", "4", "--count-only"]).trim(), "14");
    assert_eq!(stdout(&["enumerate", "3"]).lines().count(), 5);
    assert_eq!(code(&["enumerate", "20"]), 3);
    assert_eq!(code(&["--ceiling", "4", "enumerate", "5", "--count-only"]), 3);
    let out = Command::new(env!("CARGO_BIN_EXE_nctoggle"))
        .args(["enumerate", "5", "--count-only"])
        .env("NCTOGGLE_MAX_N", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn four_toggle_word_is_three_halves_mesic() {
    let args = ["homomesy", "4", "--word", "3,4 1,2 2,3 1,4", "--expect", "3/2"];
    assert_eq!(code(&args), 0);
    let v = json(&args);
    assert_eq!(v["exit_code"], 0);
    assert_eq!(v["result"]["orbit_count"], 5);
    assert_eq!(v["result"]["verdict"]["mean"], "3/2");
}

#[test]
fn coxeter_orbit_sizes() {
    let out = stdout(&["orbits", "6", "--word-file", &data("cox6.txt"), "--sizes-only"]);
    assert_eq!(out.trim(), "4 22 46 60");
}

#[test]
fn exit_codes() {
    // Falsified.
    assert_eq!(
        code(&["homomesy", "3", "--word", "1,3 2,3 1,2", "--stat", "chi:1,3"]),
        1
    );
    // Wrong expected mean.
    assert_eq!(
        code(&["homomesy", "4", "--word", "3,4 1,2 2,3 1,4", "--expect", "2"]),
        1
    );
    // Arc-count hypotheses unmet.
    assert_eq!(code(&["homomesy", "4", "--word", "1,2", "--arc-count"]), 2);
    // Not 2-cliquish: a path on four vertices.
    let path = std::env::temp_dir().join(format!("nctoggle-p4-{}.txt", std::process::id()));
    std::fs::write(&path, "a b\nb c\nc d\n").unwrap();
    // A graph that admits no certificate is a counterexample, not a usage error.
    assert_eq!(code(&["graph", "check-cliquish", path.to_str().unwrap()]), 1);
    // Skeletalization needs a 2-cliquish input.
    assert_eq!(code(&["graph", "skeletalize", path.to_str().unwrap()]), 2);
    std::fs::remove_file(&path).ok();
    // Usage and parse errors.
    assert_eq!(code(&["bogus"]), 3);
    assert_eq!(code(&["homomesy", "4", "--word", "1,x"]), 3);
    assert_eq!(code(&["toggle", "4", "-p", "(1,3) (2,4)", "--arc", "1,2"]), 3);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn json_is_deterministic_and_self_describing() {
    let args = [
        "--format",
        "json",
        "--seed",
        "7",
        "graph",
        "homomesy",
        &data("c6_triangles.txt"),
    ];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 7);
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["config"]["threads"], 1);
    assert_eq!(v["config"]["order"], "paper");
    assert_eq!(v["result"]["expected_mean"], "3");

    let other = run(&[
        "--format",
        "json",
        "--seed",
        "8",
        "graph",
        "homomesy",
        &data("c6_triangles.txt"),
    ]);
    let w: Value = serde_json::from_slice(&other.stdout).unwrap();
    assert_eq!(w["seed"], 8);
}

#[test]
fn errors_are_reported_in_json() {
    let v = json(&["enumerate", "99"]);
    assert_eq!(v["exit_code"], 3);
    assert!(v["error"].is_string());
}

#[test]
fn kreweras_maps() {
    assert_eq!(arcs_of(&["kreweras", "8", "-p", SAMPLE]), "(1,5) (2,3) (5,8) (6,7)");
    assert_eq!(
        arcs_of(&["kreweras", "8", "-p", SAMPLE, "--power", "2"]),
        "(1,3) (3,4) (5,7)"
    );
    assert_eq!(arcs_of(&["kreweras", "8", "-p", SAMPLE, "--power", "16"]), SAMPLE);
    assert_eq!(
        arcs_of(&["kreweras", "8", "-p", SAMPLE, "--oracle"]),
        arcs_of(&["kreweras", "8", "-p", SAMPLE])
    );
    assert_eq!(
        arcs_of(&["kreweras", "8", "-p", SAMPLE, "--power", "-1"]),
        arcs_of(&["kreweras", "8", "-p", SAMPLE, "--prime"])
    );
    // The Simion-Ullman involution.
    let once = arcs_of(&["kreweras", "8", "-p", SAMPLE, "--simion-ullman"]);
    assert_ne!(once, SAMPLE);
    assert_eq!(arcs_of(&["kreweras", "8", "-p", &once, "--simion-ullman"]), SAMPLE);
    assert!(stdout(&["kreweras", "8", "-p", SAMPLE, "--dot"]).starts_with("graph"));
}

#[test]
fn toggle_is_an_involution() {
    let p = "(1,3)";
    let once = arcs_of(&["toggle", "4", "-p", p, "--arc", "3,4"]);
    assert_eq!(once, "(1,3) (3,4)");
    assert_eq!(arcs_of(&["toggle", "4", "-p", p, "--arc", "3,4", "--times", "2"]), p);
    assert_ne!(once, p);
}

#[test]
fn word_order_flag_reverses() {
    let paper = arcs_of(&["toggle", "4", "-p", "(1,2)", "--word", "1,2 2,3"]);
    let eval = arcs_of(&[
        "--order",
        "evaluation",
        "toggle",
        "4",
        "-p",
        "(1,2)",
        "--word",
        "2,3 1,2",
    ]);
    assert_eq!(paper, eval);
}

#[test]
fn named_words_agree() {
    let row = stdout(&["orbits", "6", "--named", "row", "--sizes-only"]);
    let col = stdout(&["orbits", "6", "--named", "column", "--sizes-only"]);
    assert_eq!(row, col);
}

#[test]
fn graph_commands() {
    let v = json(&["graph", "check-cliquish", &data("k4me.txt")]);
    assert_eq!(v["exit_code"], 0);

    let gen = json(&["graph", "gen", "--from-skeletal", &data("two_pair_skeleton.txt")]);
    assert_eq!(gen["result"]["labelled"], 4);
    assert_eq!(gen["result"]["unlabelled"], 3);

    let out = stdout(&["graph", "to-multigraph", &data("double_edge_skeletal.txt")]);
    assert!(out.contains("|V|+|E| = 9"), "{out}");
    let back = stdout(&["graph", "from-multigraph", &data("double_edge.txt")]);
    assert!(back.starts_with("vertices: A B C D E v1 v2 v3 v4"), "{back}");

    // psi_u is 1-mesic for u in U; c1 lies outside U.
    assert_eq!(
        code(&["graph", "homomesy", &data("c6_triangles.txt"), "--stat", "psi:t1"]),
        0
    );
    assert_eq!(
        code(&["graph", "homomesy", &data("c6_triangles.txt"), "--stat", "psi:c1"]),
        1
    );
    assert_eq!(
        code(&["graph", "independent-sets", &data("k4me.txt"), "--count-only"]),
        0
    );
    assert_eq!(
        stdout(&["graph", "independent-sets", &data("k4me.txt"), "--count-only"]).trim(),
        "6"
    );
}

#[test]
fn verify_all_small() {
    let out = run(&["verify-all", "--max-n", "6", "--words", "5", "--only", "2,3,11"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("[PASS]")).count(), 3);
}
