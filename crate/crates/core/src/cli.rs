//! Command-line front end. `run` parses argv, dispatches one verb and
//! returns the exit code together with the stdout payload.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand};
use num_traits::One;
use serde_json::json;

use crate::closedforms::{n_mk, q_table, z_n};
use crate::determinants::{genfun, narayana_count};
use crate::poly::{parse_rat, BivarPoly, Rat, Substitution};
use crate::shapes::{state_to_shape, Shape, TasepState};
use crate::tasep::{prob_k_particles, prob_locations, prob_state, prob_state_symbolic, simulate, stationary, RateSpec};
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "catalan-tasep", version, about = "Exact TASEP steady state through Catalan tableaux")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Rates {
    /// Entry rate, an integer or p/q.
    #[arg(long, value_parser = rat_arg)]
    alpha: Option<Rat>,
    /// Exit rate, an integer or p/q.
    #[arg(long, value_parser = rat_arg)]
    beta: Option<Rat>,
}

impl Rates {
    fn given(&self) -> bool {
        self.alpha.is_some() || self.beta.is_some()
    }

    fn values(&self) -> (Rat, Rat) {
        (
            self.alpha.clone().unwrap_or_else(Rat::one),
            self.beta.clone().unwrap_or_else(Rat::one),
        )
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stationary probability of one configuration.
    Prob {
        #[arg(long, value_parser = state_arg)]
        state: TasepState,
        /// Print the numerator and normalizer as polynomials.
        #[arg(long)]
        symbolic: bool,
        #[command(flatten)]
        rates: Rates,
    },
    /// Unnormalized probability that the given sites are exactly the occupied ones.
    ProbLocations {
        #[arg(long)]
        n: usize,
        /// Occupied sites, 1-based and comma separated.
        #[arg(long, value_parser = sites_arg)]
        sites: Sites,
    },
    /// Probability of exactly k particles.
    ProbK {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        symbolic: bool,
        #[command(flatten)]
        rates: Rates,
    },
    /// Weight generating function of a shape.
    Genfun {
        #[arg(long, value_parser = shape_arg, conflicts_with = "state", required_unless_present = "state")]
        shape: Option<Shape>,
        #[arg(long, value_parser = state_arg)]
        state: Option<TasepState>,
    },
    /// Number of tableaux of a shape, from the unweighted determinant.
    NarayanaCount {
        #[arg(long, value_parser = shape_arg)]
        shape: Shape,
    },
    /// Normalized q-specializations of the rectangle sums for one n.
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "qq", value_parser = spec_arg)]
        spec: Substitution,
    },
    /// The partition function Z_n, or its value at given rates.
    PartitionFunction {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        rates: Rates,
    },
    /// Exact stationary distribution of the Markov chain.
    Solve {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        rates: Rates,
    },
    /// Stochastic simulation from the empty lattice.
    Simulate {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        rates: Rates,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        horizon: u64,
    },
    /// Runs the invariant suite.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_semiperimeter: usize,
    },
}

#[derive(Debug, Clone)]
struct Sites(Vec<usize>);

fn rat_arg(s: &str) -> Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

fn state_arg(s: &str) -> Result<TasepState, String> {
    s.parse().map_err(|e: crate::Error| e.to_string())
}

fn shape_arg(s: &str) -> Result<Shape, String> {
    s.parse().map_err(|e: crate::Error| e.to_string())
}

fn spec_arg(s: &str) -> Result<Substitution, String> {
    s.parse().map_err(|e: crate::Error| e.to_string())
}

fn sites_arg(s: &str) -> Result<Sites, String> {
    if s.trim().is_empty() {
        return Ok(Sites(Vec::new()));
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| format!("not a site number: {t:?}")))
        .collect::<Result<Vec<_>, _>>()
        .map(Sites)
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(flag: &str, e: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: format!("error: invalid value for '--{flag}': {e}\n"),
    }
}

fn poly_json(p: &BivarPoly) -> serde_json::Value {
    json!({ "text": p.to_string(), "terms": p.to_json() })
}

fn rate_spec(n: usize, rates: &Rates) -> Result<RateSpec, Failure> {
    let (a, b) = rates.values();
    RateSpec::new(n, a, b).map_err(|e| {
        let flag = if n == 0 || e.to_string().contains("sites") { "n" } else { "alpha" };
        usage(flag, e)
    })
}

fn dispatch(cli: Cli) -> Result<String, Failure> {
    let as_json = cli.json;
    let out = match cli.command {
        Command::Prob { state, symbolic, rates } => {
            let (num, z) = prob_state_symbolic(&state);
            let n = state.len();
            if symbolic && !rates.given() {
                if as_json {
                    json!({ "state": state.to_string(), "numerator": poly_json(&num), "normalizer": poly_json(&z) })
                        .to_string()
                } else {
                    format!("numerator\t{num}\nZ_{n}\t{z}")
                }
            } else {
                let (a, b) = rates.values();
                let p = prob_state(&state, &a, &b);
                if as_json {
                    json!({ "state": state.to_string(), "alpha": a.to_string(), "beta": b.to_string(), "probability": p.to_string() })
                        .to_string()
                } else {
                    p.to_string()
                }
            }
        }
        Command::ProbLocations { n, sites } => {
            let p = prob_locations(n, &sites.0).map_err(|e| usage("sites", e))?;
            if as_json {
                json!({ "n": n, "sites": sites.0, "weight": poly_json(&p) }).to_string()
            } else {
                p.to_string()
            }
        }
        Command::ProbK { n, k, symbolic, rates } => {
            if k > n {
                return Err(usage("k", format!("must not exceed n={n}")));
            }
            if symbolic && !rates.given() {
                let (num, z) = (n_mk(n - k, k), z_n(n));
                if as_json {
                    json!({ "n": n, "k": k, "numerator": poly_json(&num), "normalizer": poly_json(&z) }).to_string()
                } else {
                    format!("numerator\t{num}\nZ_{n}\t{z}")
                }
            } else {
                let (a, b) = rates.values();
                let p = prob_k_particles(n, k, &a, &b).map_err(|e| usage("k", e))?;
                if as_json {
                    json!({ "n": n, "k": k, "alpha": a.to_string(), "beta": b.to_string(), "probability": p.to_string() })
                        .to_string()
                } else {
                    p.to_string()
                }
            }
        }
        Command::Genfun { shape, state } => {
            let shape = match (shape, state) {
                (Some(s), _) => s,
                (None, Some(t)) => state_to_shape(&t),
                (None, None) => return Err(usage("shape", "a shape or a state is required")),
            };
            let g = genfun(&shape);
            if as_json {
                json!({ "shape": shape.to_string(), "genfun": poly_json(&g) }).to_string()
            } else {
                g.to_string()
            }
        }
        Command::NarayanaCount { shape } => {
            let count = narayana_count(&shape);
            if as_json {
                json!({ "shape": shape.to_string(), "count": count.to_string() }).to_string()
            } else {
                count.to_string()
            }
        }
        Command::Table { n, spec } => {
            let rows = q_table(n, spec).map_err(|e| usage("n", e))?;
            if as_json {
                let rows: Vec<_> = rows.iter().map(|(k, p)| json!({ "k": k, "poly": p.to_string() })).collect();
                json!({ "n": n, "spec": spec.to_string(), "rows": rows }).to_string()
            } else {
                rows.iter()
                    .map(|(k, p)| format!("{n}\t{k}\t{p}"))
                    .collect::<Vec<_>>()
                    .join("\n")
            }
        }
        Command::PartitionFunction { n, rates } => {
            let z = z_n(n);
            if rates.given() {
                let (a, b) = rates.values();
                let v = z.eval(&a, &b);
                if as_json {
                    json!({ "n": n, "alpha": a.to_string(), "beta": b.to_string(), "value": v.to_string() }).to_string()
                } else {
                    v.to_string()
                }
            } else if as_json {
                json!({ "n": n, "partition_function": poly_json(&z) }).to_string()
            } else {
                z.to_string()
            }
        }
        Command::Solve { n, rates } => {
            let spec = rate_spec(n, &rates)?;
            let dist = stationary(&spec).map_err(|e| usage("n", e))?;
            if as_json {
                serde_json::to_string(&dist).expect("distribution serializes")
            } else {
                dist.to_string().trim_end().to_string()
            }
        }
        Command::Simulate { n, rates, seed, horizon } => {
            let spec = rate_spec(n, &rates)?;
            let report = simulate(&spec, horizon, seed).map_err(|e| {
                if horizon == 0 {
                    usage("horizon", e)
                } else {
                    usage("n", e)
                }
            })?;
            if as_json {
                report.to_json().to_string()
            } else {
                let mut lines = vec![format!(
                    "events\t{}\ntime\t{}\nbatches\t{}",
                    report.events, report.total_time, report.batches
                )];
                for (i, f) in report.frequencies.iter().enumerate() {
                    let state = TasepState::from_index(n, i);
                    match &report.standard_errors {
                        Some(se) => lines.push(format!("{state}\t{f:.6}\t{:.6}", se[i])),
                        None => lines.push(format!("{state}\t{f:.6}")),
                    }
                }
                lines.join("\n")
            }
        }
        Command::Verify { max_semiperimeter } => {
            let report = verify::run(max_semiperimeter).map_err(|e| usage("max-semiperimeter", e))?;
            let text = if as_json {
                serde_json::to_string(&report).expect("report serializes")
            } else {
                report.to_text().trim_end().to_string()
            };
            if !report.passed {
                return Err(Failure {
                    code: EXIT_VERIFY_FAILED,
                    message: text + "\n",
                });
            }
            text
        }
    };
    Ok(out + "\n")
}

/// Parses `argv` (program name first) and runs the verb. Returns the exit
/// code and everything meant for stdout, usage errors included.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    match dispatch(cli) {
        Ok(out) => (EXIT_OK, out),
        Err(f) => (f.code, f.message),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        run(std::iter::once("catalan-tasep").chain(args.iter().copied()))
    }

    #[test]
    fn unknown_flag_is_usage_error() {
        let (code, out) = call(&["prob", "--bogus"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.contains("--bogus"), "{out}");
    }

    #[test]
    fn bad_value_names_flag() {
        let (code, out) = call(&["prob", "--state", "01x"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.contains("--state"), "{out}");
        let (code, out) = call(&["prob-k", "--n", "3", "--k", "4"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.contains("--k"), "{out}");
    }

    #[test]
    fn small_verbs() {
        assert_eq!(call(&["narayana-count", "--shape", "1/1"]), (0, "2\n".into()));
        assert_eq!(call(&["prob-k", "--n", "1", "--k", "0"]), (0, "1/2\n".into()));
        assert_eq!(call(&["partition-function", "--n", "1"]).1, "a + b\n");
    }
}
