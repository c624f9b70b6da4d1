//! The invariant suite behind `verify`: every algorithm checked against an
//! independent one on all small inputs.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::closedforms::{hook_recursion, n_mk, n_prime, narayana_number, relation_check, z_n, z_n_derrida};
use crate::determinants::{genfun, narayana_count};
use crate::error::{Error, Result};
use crate::paths::{enumerate_paths, path_to_tableau, tableau_to_modified, tableau_to_path};
use crate::poly::{parse_rat, BivarPoly, Rat};
use crate::shapes::{boundary_weight, state_to_shape, Shape, TasepState};
use crate::tableaux::{enumerate, enumerate_staircase, weight_sum, StaircaseTableau};
use crate::tasep::{formula_distribution, prob_k_particles, prob_locations, stationary, RateSpec};

/// Largest semi-perimeter `verify` accepts.
pub const MAX_VERIFY_SEMI_PERIMETER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub max_semi_perimeter: usize,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag}\t{}\t{}\n", c.name, c.detail));
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        out.push_str(&format!("{passed}/{} checks passed\n", self.checks.len()));
        out
    }
}

type Outcome = std::result::Result<String, String>;
type Check = (&'static str, fn(usize) -> Outcome);

fn shapes_up_to(max: usize) -> Vec<Shape> {
    (0..=max).flat_map(Shape::all_with_semi_perimeter).collect()
}

fn check_genfun(max: usize) -> Outcome {
    let shapes = shapes_up_to(max);
    for lambda in &shapes {
        if genfun(lambda) != weight_sum(lambda) {
            return Err(format!("determinant and enumeration differ on {lambda}"));
        }
    }
    Ok(format!("{} shapes", shapes.len()))
}

fn check_bijection(max: usize) -> Outcome {
    let mut pairs = 0usize;
    for lambda in shapes_up_to(max) {
        let boundary = boundary_weight(&lambda);
        let tableaux = enumerate(&lambda);
        if tableaux.len() != enumerate_paths(&lambda).len() {
            return Err(format!("tableau and path counts differ on {lambda}"));
        }
        for t in &tableaux {
            let path = tableau_to_path(t).map_err(|e| e.to_string())?;
            if &boundary * &path.weight() != t.weight() {
                return Err(format!("weight not preserved on {lambda}"));
            }
            if &path_to_tableau(&path).map_err(|e| e.to_string())? != t {
                return Err(format!("round trip fails on {lambda}"));
            }
            let modified = tableau_to_modified(t).map_err(|e| e.to_string())?;
            if let Err(p) = modified.check_properties() {
                return Err(format!("modified tableau on {lambda} breaks: {p}"));
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} tableau/path pairs"))
}

fn check_path_counts(max: usize) -> Outcome {
    let shapes: Vec<Shape> = shapes_up_to(max).into_iter().filter(|s| s.rows() > 0).collect();
    for lambda in &shapes {
        if narayana_count(lambda) != BigInt::from(enumerate_paths(lambda).len()) {
            return Err(format!("det and path count differ on {lambda}"));
        }
    }
    Ok(format!("{} shapes", shapes.len()))
}

fn check_staircase(max: usize) -> Outcome {
    let top = max.min(7);
    for n in 1..=top {
        let stairs = enumerate_staircase(n).map_err(|e| e.to_string())?;
        let catalan = narayana_sum(n);
        if BigInt::from(stairs.len()) != catalan {
            return Err(format!("{} staircase tableaux of size {n}, expected {catalan}", stairs.len()));
        }
        for s in &stairs {
            let t = s.to_condensed().map_err(|e| e.to_string())?;
            if t.weight() != s.weight() || t.type_word() != s.type_word() {
                return Err(format!("condensing changes weight or type at size {n}"));
            }
            if &StaircaseTableau::from_condensed(&t).map_err(|e| e.to_string())? != s {
                return Err(format!("condensing is not inverted at size {n}"));
            }
        }
    }
    Ok(format!("sizes 1..={top}"))
}

fn narayana_sum(n: usize) -> BigInt {
    (0..=n).map(|k| narayana_number(n, k).expect("k <= n")).sum()
}

fn check_narayana(max: usize) -> Outcome {
    let one = Rat::one();
    for n in 0..=max {
        for k in 0..=n {
            let v = n_mk(n - k, k).eval(&one, &one);
            if v != Rat::from_integer(narayana_number(n, k).expect("k <= n")) {
                return Err(format!("N at (1,1) differs from the Narayana number at n={n}, k={k}"));
            }
        }
    }
    Ok(format!("n <= {max}"))
}

fn check_rectangles(max: usize) -> Outcome {
    let mut cells = 0;
    for m in 0..=max {
        for k in 0..=max - m {
            let shapes = Shape::all_in_rectangle(k, m);
            let total: BivarPoly = shapes.iter().map(genfun).sum();
            if total != n_mk(m, k) {
                return Err(format!("rectangle sum differs at m={m}, k={k}"));
            }
            cells += 1;
        }
    }
    Ok(format!("{cells} rectangles"))
}

fn check_relations(_max: usize) -> Outcome {
    for m in 0..=5 {
        for k in 0..=5 {
            if !relation_check(m, k) {
                return Err(format!("first-row decomposition fails at m={m}, k={k}"));
            }
            if m >= 2 && k >= 2 {
                let rec = hook_recursion(m, k).map_err(|e| e.to_string())?;
                if rec != n_prime(m, k).map_err(|e| e.to_string())? {
                    return Err(format!("hook recursion fails at m={m}, k={k}"));
                }
            }
        }
    }
    Ok("m, k <= 5".into())
}

fn check_partition_function(max: usize) -> Outcome {
    let one = Rat::one();
    for n in 0..=max {
        let z = z_n(n);
        if z != z_n_derrida(n).map_err(|e| e.to_string())? {
            return Err(format!("the two partition functions differ at n={n}"));
        }
        if z.eval(&one, &one) != Rat::from_integer(narayana_sum(n)) {
            return Err(format!("Z_{n}(1,1) is not a Catalan number"));
        }
    }
    Ok(format!("n <= {max}"))
}

fn rate_pairs() -> Vec<(Rat, Rat)> {
    [("1", "1"), ("1/2", "1/3"), ("2", "5")]
        .iter()
        .map(|(a, b)| (parse_rat(a).expect("literal"), parse_rat(b).expect("literal")))
        .collect()
}

fn check_stationary(max: usize) -> Outcome {
    let top = max.min(6);
    for n in 1..=top {
        for (a, b) in rate_pairs() {
            let spec = RateSpec::new(n, a.clone(), b.clone()).map_err(|e| e.to_string())?;
            let exact = stationary(&spec).map_err(|e| e.to_string())?;
            if exact != formula_distribution(&spec).map_err(|e| e.to_string())? {
                return Err(format!("solver and formula differ at n={n}, alpha={a}, beta={b}"));
            }
            for k in 0..=n {
                if exact.particle_marginal(k) != prob_k_particles(n, k, &a, &b).map_err(|e| e.to_string())? {
                    return Err(format!("particle-count marginal differs at n={n}, k={k}"));
                }
            }
        }
    }
    Ok(format!("n <= {top}, 3 rate pairs"))
}

fn check_locations(max: usize) -> Outcome {
    let top = max.min(8);
    let mut count = 0;
    for n in 1..=top {
        for s in TasepState::all(n) {
            let shape = state_to_shape(&s);
            let det = prob_locations(n, &s.particle_positions()).map_err(|e| e.to_string())?;
            let via_genfun = genfun(&shape).div_exact(&boundary_weight(&shape));
            if via_genfun.as_ref() != Some(&det) {
                return Err(format!("location determinant differs for {s}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} states"))
}

/// Runs every check with sizes capped by `max_semi_perimeter`. The checks
/// run in parallel; the report lists them in a fixed order.
pub fn run(max_semi_perimeter: usize) -> Result<Report> {
    if max_semi_perimeter > MAX_VERIFY_SEMI_PERIMETER {
        return Err(Error::BoundExceeded {
            what: "max-semiperimeter",
            requested: max_semi_perimeter,
            bound: MAX_VERIFY_SEMI_PERIMETER,
        });
    }
    let checks: Vec<Check> = vec![
        ("genfun-matches-enumeration", check_genfun),
        ("path-bijection", check_bijection),
        ("narayana-path-counts", check_path_counts),
        ("staircase-condensing", check_staircase),
        ("narayana-specialization", check_narayana),
        ("rectangle-sums", check_rectangles),
        ("first-row-and-hook-relations", check_relations),
        ("partition-function", check_partition_function),
        ("stationary-vs-formula", check_stationary),
        ("location-determinants", check_locations),
    ];
    let results: BTreeMap<usize, CheckResult> = checks
        .par_iter()
        .enumerate()
        .map(|(i, (name, f))| {
            let outcome = f(max_semi_perimeter);
            let (passed, detail) = match outcome {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            (i, CheckResult { name, passed, detail })
        })
        .collect();
    let checks: Vec<CheckResult> = results.into_values().collect();
    Ok(Report {
        max_semi_perimeter,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}
