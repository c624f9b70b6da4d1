use std::process::Command;

use catalan_tasep::cli::run;

fn call(args: &[&str]) -> (i32, String) {
    run(std::iter::once("catalan-tasep").chain(args.iter().copied()))
}

fn binary(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_catalan-tasep")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn table_block_is_character_exact() {
    let (code, out) = binary(&["table", "--n", "7", "--spec", "q1"]);
    assert_eq!(code, 0);
    let want = "7\t1\tq^6 + 2q^5 + 3q^4 + 4q^3 + 5q^2 + 6q + 7\n\
                7\t2\t21q^5 + 35q^4 + 42q^3 + 42q^2 + 35q + 21\n\
                7\t3\t105q^4 + 140q^3 + 126q^2 + 84q + 35\n\
                7\t4\t175q^3 + 175q^2 + 105q + 35\n\
                7\t5\t105q^2 + 70q + 21\n\
                7\t6\t21q + 7\n";
    assert_eq!(out, want);
}

#[test]
fn symbolic_prob_matches_genfun_and_partition_function() {
    let (code, out) = call(&["prob", "--state", "010110011", "--symbolic"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    let (_, g) = call(&["genfun", "--state", "010110011"]);
    let (_, z) = call(&["partition-function", "--n", "9"]);
    let numerator: catalan_tasep::BivarPoly = lines[0].strip_prefix("numerator\t").unwrap().parse().unwrap();
    let genfun: catalan_tasep::BivarPoly = g.trim().parse().unwrap();
    assert_eq!(numerator, genfun);
    assert_eq!(lines[1], format!("Z_9\t{}", z.trim()));
}

#[test]
fn concrete_prob_sums_to_one() {
    let mut total = catalan_tasep::Rat::from_integer(0.into());
    for s in ["000", "001", "010", "011", "100", "101", "110", "111"] {
        let (code, out) = call(&["prob", "--state", s, "--alpha", "2", "--beta", "1/3"]);
        assert_eq!(code, 0);
        total += catalan_tasep::poly::parse_rat(out.trim()).unwrap();
    }
    assert_eq!(total, catalan_tasep::Rat::from_integer(1.into()));
}

#[test]
fn solve_agrees_with_prob() {
    let (code, out) = call(&["solve", "--n", "3", "--alpha", "1/2", "--beta", "3"]);
    assert_eq!(code, 0);
    for line in out.lines() {
        let (state, p) = line.split_once('\t').unwrap();
        let (_, q) = call(&["prob", "--state", state, "--alpha", "1/2", "--beta", "3"]);
        assert_eq!(p, q.trim(), "{state}");
    }
}

#[test]
fn solve_json_lists_every_state() {
    let (code, out) = call(&["solve", "--n", "2", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pi"].as_object().unwrap().len(), 4);
    assert_eq!(v["pi"]["10"], "2/5");
}

#[test]
fn prob_k_and_locations() {
    assert_eq!(call(&["prob-k", "--n", "2", "--k", "1"]), (0, "3/5\n".into()));
    let (code, out) = call(&["prob-k", "--n", "2", "--k", "1", "--symbolic"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("numerator\t"));
    let (code, out) = call(&["prob-locations", "--n", "3", "--sites", "1,3"]);
    assert_eq!(code, 0);
    let p: catalan_tasep::BivarPoly = out.trim().parse().unwrap();
    assert!(p.has_nonnegative_coefficients());
    assert_eq!(call(&["prob-locations", "--n", "2", "--sites", ""]).0, 0);
}

#[test]
fn simulate_is_deterministic_given_seed() {
    let args = ["simulate", "--n", "2", "--horizon", "20000", "--seed", "11"];
    let first = call(&args);
    assert_eq!(first.0, 0);
    assert_eq!(first, call(&args));
    assert_ne!(first, call(&["simulate", "--n", "2", "--horizon", "20000", "--seed", "12"]));
}

#[test]
fn verify_passes_and_reports_in_order() {
    let (code, out) = binary(&["verify", "--max-semiperimeter", "6"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().next().unwrap().starts_with("PASS\tgenfun-matches-enumeration"));
    assert!(out.trim_end().ends_with("10/10 checks passed"));
    assert_eq!(out, binary(&["verify", "--max-semiperimeter", "6"]).1);
    let (code, out) = call(&["verify", "--max-semiperimeter", "6", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn usage_errors_exit_two_and_name_the_flag() {
    for (args, flag) in [
        (vec!["table", "--n", "6", "--spec", "qz"], "--spec"),
        (vec!["genfun", "--shape", "2,3/4"], "--shape"),
        (vec!["prob-locations", "--n", "3", "--sites", "1,x"], "--sites"),
        (vec!["solve", "--n", "3", "--alpha", "1/0"], "--alpha"),
        (vec!["verify", "--max-semiperimeter", "40"], "--max-semiperimeter"),
        (vec!["simulate", "--n", "2", "--horizon", "0"], "--horizon"),
        (vec!["solve", "--n", "3", "--gamma", "1"], "--gamma"),
    ] {
        let (code, out) = binary(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.contains(flag), "{args:?}: {out}");
    }
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&[]).0, 2);
}

#[test]
fn help_exits_zero() {
    let (code, out) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("partition-function"));
}
