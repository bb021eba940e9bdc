use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn corpus(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../presentations").join(format!("{name}.dcat")).display().to_string()
}

fn dcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dcat")).args(args).output().expect("runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)))
}

fn catalan(n: u64) -> u64 {
    (0..n).fold(1, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

/// E_1 and F_1 counts when every generator has equal left and right sides:
/// `classes[i]` generators share side i. Words are parenthesized sequences
/// within one class; paths are sequences of at least two words.
fn first_layer(classes: &[u64], word: u32) -> (u64, u64) {
    let words: Vec<u64> = (1..=word).map(|n| classes.iter().map(|c| c.pow(n)).sum::<u64>() * catalan(n as u64 - 1)).collect();
    // paths[n][m]: paths of m words with n letters in total.
    let w = word as usize;
    let mut paths = vec![vec![0u64; w + 1]; w + 1];
    paths[0][0] = 1;
    for n in 1..=w {
        for m in 1..=n {
            paths[n][m] = (1..=n).map(|k| words[k - 1] * paths[n - k][m - 1]).sum();
        }
    }
    let e = words.iter().sum();
    let f = (2..=w).map(|n| (2..=n).map(|m| paths[n][m]).sum::<u64>()).sum();
    (e, f)
}

#[test]
fn build_matches_the_first_layer_oracle() {
    let out = dcat(&["build", &corpus("omega_z2_2omega_z3"), "--depth", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let l = &r["universe"]["layers"][0];
    // Side g0: a0, a1, a2, i_g0. Side g1: i_g1.
    let (e, f) = first_layer(&[4, 1], 4);
    assert_eq!((l["e_new"].as_u64(), l["f_new"].as_u64()), (Some(e), Some(f)));
    assert_eq!((e, f), (1437, 3809));
    assert_eq!(r["universe"]["layers"][1]["e_new"], 4011);
    assert_eq!(r["universe"]["layers"][1]["f_new"], 1520);
    assert_eq!(r["truncation"]["squares"], 22);
    assert_eq!(r["seed"], 0);
    assert_eq!(r["bounds"]["word"], 4);
}

#[test]
fn trivial_input_has_one_square_per_layer() {
    let out = dcat(&["build", &corpus("trivial"), "--depth", "3", "--word-bound", "3"]);
    let r = report(&out);
    let layers = r["truncation"]["layers"].as_array().unwrap();
    assert_eq!(layers.len(), 3);
    assert!(layers.iter().all(|l| l["h"] == 1 && l["v"] == 1));
    assert_eq!(r["universe"]["layers"][0]["e_new"].as_u64(), Some(first_layer(&[2], 3).0));
}

#[test]
fn malformed_input_exits_2_with_line() {
    let dir = std::env::temp_dir().join(format!("dcat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.dcat");
    std::fs::write(&bad, "category x {\n  objects: [a];\n  morphisms: [f: a -> b];\n}\n").unwrap();
    let out = dcat(&["build", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    let out = dcat(&["validate", "/nonexistent/x.dcat"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn audit_passes_on_the_canonical_scenario() {
    let (b, c) = (corpus("omega_z2_2omega_z3__trivial__base"), corpus("omega_z2_2omega_z3__trivial__target"));
    let out = dcat(&["audit", &b, &c, "--word-bound", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["verdict"], "pass");
    assert_eq!(r["adjunction"]["triangle1"], "pass");
    assert_eq!(r["uniqueness"]["verdict"], "equal");
}

#[test]
fn swapped_generators_fail_strictness_with_witness() {
    let (b, c) = (corpus("omega_z2_2omega_z3__trivial__base"), corpus("omega_z2_2omega_z3__trivial__target"));
    let out = dcat(&["audit", &b, &c, "--word-bound", "3", "--swap", "a0,a1"]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    assert_eq!(r["summary"]["strictness"], "fail");
    assert!(!r["strictness"]["violations"][0]["terms"].as_array().unwrap().is_empty());
}

#[test]
fn wrong_base_is_out_of_hypothesis() {
    let out = dcat(&["audit", &corpus("omega_z3_2omega_z2"), &corpus("omega_z2_2omega_z3__trivial__target")]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(report(&out)["verdict"], "out-of-hypothesis");
}

#[test]
fn length_reports_both_numbers() {
    let out = dcat(&["length", &corpus("commuting_squares_arrow"), &corpus("arrow_commuting_squares__base")]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["inputs"]["commuting_squares_arrow"]["length"], 1);
    assert_eq!(r["length_bounded_by_evidence"], true);
    let out = dcat(&["length", &corpus("omega_z2_2omega_z3")]);
    assert_eq!(report(&out)["inputs"]["omega_z2_2omega_z3"]["evidence"]["consistent_with_length"], 1);
}

#[test]
fn project_and_render() {
    let (b, c) = (corpus("omega_z2_2omega_z3__trivial__base"), corpus("omega_z2_2omega_z3__trivial__target"));
    let out = dcat(&["project", &b, &c, "(v (g a1) (g a1))"]);
    assert_eq!(report(&out)["square"], "a2");
    assert_eq!(dcat(&["project", &b, &c, "(v (g a1)"]).status.code(), Some(2));
    let out = dcat(&["render", &corpus("arrow")]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), std::fs::read_to_string(corpus("arrow")).unwrap());
}

#[test]
fn validate_reports_each_block() {
    let out = dcat(&["validate", &corpus("omega_z2_2omega_z3"), "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("blocks.omega_z2_2omega_z3.valid = true"));
    assert!(s.contains("seed = 0"));
}

#[test]
fn reports_are_byte_identical() {
    let (b, c) = (corpus("walking_two_cell_quintets__base"), corpus("walking_two_cell_quintets__target"));
    let args = ["audit", &b, &c, "--word-bound", "3", "--seed", "9"];
    assert_eq!(dcat(&args).stdout, dcat(&args).stdout);
}
