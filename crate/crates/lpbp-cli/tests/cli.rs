//! End-to-end tests of the lpbp binary: output shapes, exit codes, JSON
//! envelope, bijection plumbing and render determinism.

use std::process::Command;

fn lpbp(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_lpbp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &std::process::Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(out: &std::process::Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn count_all_shifts_totals_to_full_grid_identity() {
    let out = lpbp(&["count", "--comp", "1,2,3", "--to", "6,3", "--all-shifts"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("shift 0 boundary (1,2,3): 18"));
    assert!(text.contains("shift 1 boundary (3,1,2): 9"));
    assert!(text.contains("shift 2 boundary (2,3,1): 9"));
    assert!(text.ends_with("total 36\n"));
}

#[test]
fn count_list_prints_dominated_words_in_order() {
    let out = lpbp(&["count", "--comp", "1,2,3", "--to", "2,1", "--list"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert_eq!(text, "shift 0 boundary (1,2,3): 2\nRRU\nRUR\n");
}

#[test]
fn theorem1_prints_all_bad_good() {
    let out = lpbp(&["formula", "theorem1", "--comp", "1,2,3", "--to", "6,3"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert_eq!(text, "all 252\nbad 216\ngood 36\n");
}

#[test]
fn hypothesis_violation_exits_one_with_message() {
    let out = lpbp(&["formula", "theorem1", "--comp", "0,2", "--to", "0,1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_of(&out).is_empty());
    assert!(stderr_of(&out).contains("error:"));
}

#[test]
fn usage_errors_exit_two() {
    let missing = lpbp(&["count", "--comp", "1,2,3"]);
    assert_eq!(missing.status.code(), Some(2));
    let unknown = lpbp(&["count", "--comp", "1,2,3", "--to", "1,1", "--bogus"]);
    assert_eq!(unknown.status.code(), Some(2));
    let malformed = lpbp(&["count", "--comp", "1,x", "--to", "1,1"]);
    assert_eq!(malformed.status.code(), Some(2));
}

#[test]
fn single_number_formulas_print_bare_counts() {
    for (args, want) in [
        (vec!["formula", "ballot", "1", "2", "2"], "2\n"),
        (vec!["formula", "gencat", "2", "3"], "12\n"),
        (vec!["formula", "kcat", "2", "2"], "10\n"),
        (vec!["formula", "halfslope", "3", "2"], "23\n"),
        (vec!["formula", "staircase", "2", "2", "2"], "10\n"),
        (vec!["formula", "avoid", "1", "2", "1"], "3\n"),
        (
            vec!["formula", "avoid-corners", "2", "2", "2", "--corners", "2"],
            "12\n",
        ),
        (
            vec!["formula", "corners", "--comp", "1,1", "--to", "2,2", "--corners", "1"],
            "2\n",
        ),
        (
            vec!["formula", "corners2", "--comp", "1,1", "--to", "2,2", "--corners", "1"],
            "2\n",
        ),
    ] {
        let out = lpbp(&args);
        assert!(out.status.success(), "args {:?}", args);
        assert_eq!(stdout_of(&out), want, "args {:?}", args);
    }
}

#[test]
fn periodic_prints_all_four_counts() {
    let out = lpbp(&["formula", "periodic", "2", "5", "3"]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "q_ab 388368\nq_ba 0\np_ab 79457\np_ba 39298\n"
    );
}

#[test]
fn cat_staircase_prints_three_counts() {
    let one = lpbp(&["formula", "cat-staircase", "1"]);
    assert!(one.status.success());
    assert_eq!(stdout_of(&one), "to_odd 10\nto_even 3\nunder_uurr 3\n");
    let zero = lpbp(&["formula", "cat-staircase", "0"]);
    assert!(zero.status.success());
    assert!(stdout_of(&zero).contains("under_uurr none"));
}

#[test]
fn right_up_corners_need_an_up_step() {
    let out = lpbp(&["formula", "corners2", "--comp", "0,0", "--to", "3,0", "--corners", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("error:"));
}

#[test]
fn json_envelope_is_canonical_and_round_trips() {
    let out = lpbp(&["--json", "formula", "theorem1", "--comp", "1,2,3", "--to", "6,3"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let doc: serde_json::Value = serde_json::from_str(&text).expect("valid json");
    for key in ["command", "input", "result", "elapsed_ms"] {
        assert!(doc.get(key).is_some(), "missing {}", key);
    }
    assert_eq!(doc["command"], "formula theorem1");
    assert_eq!(doc["result"]["all"], "252");
    assert_eq!(doc["result"]["bad"], "216");
    assert_eq!(doc["result"]["good"], "36");
    let again: serde_json::Value =
        serde_json::from_str(&doc.to_string()).expect("reserialized json parses");
    assert_eq!(doc, again);
}

#[test]
fn json_count_reports_decimal_strings() {
    let out = lpbp(&["--json", "count", "--comp", "1,2,3", "--to", "6,3", "--all-shifts"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["result"]["total"], "36");
    assert_eq!(doc["result"]["per_shift"].as_array().unwrap().len(), 3);
    assert!(doc["elapsed_ms"].is_u64());
}

#[test]
fn verify_small_sweep_holds() {
    let out = lpbp(&["verify", "--max-n", "4", "--max-m", "3"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("ok ")).count(), 11);
    assert!(!text.contains("FAIL"));
    assert!(text.ends_with("all identities hold\n"));
}

#[test]
fn sweep_agrees_and_samples_deterministically() {
    let full = lpbp(&["sweep", "--max-n", "3", "--max-m", "2"]);
    assert!(full.status.success());
    assert!(stdout_of(&full).ends_with("all comparisons agree\n"));

    let a = lpbp(&["sweep", "--max-n", "4", "--max-m", "3", "--sample", "25", "--seed", "9"]);
    let b = lpbp(&["sweep", "--max-n", "4", "--max-m", "3", "--sample", "25", "--seed", "9"]);
    assert!(a.status.success());
    assert_eq!(stdout_of(&a), stdout_of(&b));
    assert!(stdout_of(&a).contains("termini visited 25"));
}

#[test]
fn psi_and_phi_invert_each_other() {
    let there = lpbp(&[
        "bijection", "psi", "--comp", "1,2,3", "--shift", "0", "--path", "URURRR", "--to", "4,2",
        "--trace",
    ]);
    assert!(there.status.success());
    let text = stdout_of(&there);
    assert!(text.contains("bad step index 0, landing (0,1), column 0, rung 0"));
    assert!(text.contains("origin (-1,1)"));
    assert!(text.contains("word RRURRR"));

    let back = lpbp(&[
        "bijection", "phi", "--path", "RRURRR", "--comp", "1,2,3", "--column", "0", "--rung",
        "0", "--to", "4,2",
    ]);
    assert!(back.status.success());
    assert_eq!(stdout_of(&back), "shift 0\nword URURRR\n");
}

#[test]
fn omega_reproduces_the_reference_rotation() {
    let there = lpbp(&[
        "bijection", "omega", "--comp", "1,3,0,2,4,0,2", "--height", "4", "--word",
        "RRRURRRRRURRUURR", "--rank", "3", "--trace",
    ]);
    assert!(there.status.success());
    let text = stdout_of(&there);
    assert!(text.contains("s-values: [0, 2, 3]"));
    assert!(text.contains("shift 4"));
    assert!(text.contains("boundary (2,4,0,2,1,3,0)"));
    assert!(text.contains("word RRRRURRUURRRRRUR"));

    let back = lpbp(&[
        "bijection", "omega-inv", "--comp", "1,3,0,2,4,0,2", "--shift", "4", "--path",
        "RRRRURRUURRRRRUR",
    ]);
    assert!(back.status.success());
    assert_eq!(stdout_of(&back), "rank 3\nword RRRURRRRRURRUURR\n");
}

#[test]
fn render_output_is_deterministic() {
    let args = ["render", "--comp", "1,2,3,2", "--path", "RURU"];
    let first = lpbp(&args);
    let second = lpbp(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let text = stdout_of(&first);
    assert!(text.starts_with("<svg "));
    assert!(text.trim_end().ends_with("</svg>"));
    assert_eq!(text.matches("class=\"boundary\"").count(), 1);
    assert_eq!(text.matches("class=\"path\"").count(), 1);
}

#[test]
fn render_draws_coincident_shifted_boundaries_once() {
    let constant = lpbp(&["render", "--comp", "2,2,2", "--all-shifts"]);
    assert!(constant.status.success());
    assert_eq!(stdout_of(&constant).matches("class=\"boundary\"").count(), 1);

    let distinct = lpbp(&["render", "--comp", "1,2,3", "--all-shifts"]);
    assert!(distinct.status.success());
    assert_eq!(stdout_of(&distinct).matches("class=\"boundary\"").count(), 3);
}

#[test]
fn render_writes_the_out_file() {
    let target = std::env::temp_dir().join(format!("lpbp-render-{}.svg", std::process::id()));
    let out = lpbp(&[
        "render",
        "--comp",
        "1,1",
        "--path",
        "RURU",
        "--out",
        target.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout_of(&out).starts_with("wrote "));
    let written = std::fs::read_to_string(&target).expect("file written");
    assert!(written.starts_with("<svg "));
    std::fs::remove_file(&target).unwrap();
}

#[test]
fn render_rejects_paths_outside_the_grid() {
    let out = lpbp(&["render", "--comp", "1,1", "--path", "RRRRRR"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("outside"));
}
