//! The open-boundary TASEP on `n` sites: the exact stationary distribution
//! by rational linear algebra, the tableau formulas for it, and a
//! continuous-time simulator.
//!
//! States are indexed by their word read as a binary number with site 1 as
//! the most significant bit, so the index order matches the text order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution as _, Exp};
use serde::Serialize;

use crate::closedforms::{n_mk, z_n};
use crate::determinants::{genfun, weighted_matrix};
use crate::error::{Error, Result};
use crate::poly::{BivarPoly, Rat};
use crate::shapes::{state_to_shape, Shape, TasepState};

/// Largest lattice for which the exact solver builds the generator.
pub const MAX_EXACT_SITES: usize = 10;

/// Number of batches the simulator splits its events into.
pub const SIMULATION_BATCHES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RateSpec {
    n: usize,
    alpha: Rat,
    beta: Rat,
}

impl RateSpec {
    pub fn new(n: usize, alpha: Rat, beta: Rat) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("the lattice needs at least one site".into()));
        }
        if !alpha.is_positive() || !beta.is_positive() {
            return Err(Error::Domain(format!("rates must be positive, got alpha={alpha}, beta={beta}")));
        }
        Ok(Self { n, alpha, beta })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> &Rat {
        &self.alpha
    }

    pub fn beta(&self) -> &Rat {
        &self.beta
    }

    pub fn num_states(&self) -> usize {
        1 << self.n
    }

    fn check_bound(&self) -> Result<()> {
        if self.n > MAX_EXACT_SITES {
            return Err(Error::BoundExceeded {
                what: "sites",
                requested: self.n,
                bound: MAX_EXACT_SITES,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Move {
    Enter,
    Exit,
    Hop,
}

/// Transitions out of `state` on `n` sites, as `(target, move)`.
fn moves(n: usize, state: usize) -> Vec<(usize, Move)> {
    let bit = |site: usize| 1usize << (n - site);
    let mut out = Vec::new();
    if state & bit(1) == 0 {
        out.push((state | bit(1), Move::Enter));
    }
    for i in 1..n {
        if state & bit(i) != 0 && state & bit(i + 1) == 0 {
            out.push((state ^ bit(i) ^ bit(i + 1), Move::Hop));
        }
    }
    if state & bit(n) != 0 {
        out.push((state ^ bit(n), Move::Exit));
    }
    out
}

/// The generator `Q` stored by rows.
#[derive(Debug, Clone)]
pub struct Generator {
    n: usize,
    rows: Vec<BTreeMap<usize, Rat>>,
}

impl Generator {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_states(&self) -> usize {
        self.rows.len()
    }

    /// `Q(from, to)`.
    pub fn rate(&self, from: &TasepState, to: &TasepState) -> Rat {
        self.rows[from.index()].get(&to.index()).cloned().unwrap_or_else(Rat::zero)
    }

    /// Nonzero entries of row `from`, diagonal included.
    pub fn row(&self, from: usize) -> &BTreeMap<usize, Rat> {
        &self.rows[from]
    }

    /// `π Q` for a vector indexed by state.
    pub fn left_multiply(&self, pi: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.rows.len()];
        for (i, row) in self.rows.iter().enumerate() {
            if pi[i].is_zero() {
                continue;
            }
            for (&j, q) in row {
                out[j] += &pi[i] * q;
            }
        }
        out
    }
}

pub fn generator(spec: &RateSpec) -> Result<Generator> {
    spec.check_bound()?;
    let n = spec.n;
    let rows = (0..spec.num_states())
        .map(|s| {
            let mut row = BTreeMap::new();
            let mut out_rate = Rat::zero();
            for (t, mv) in moves(n, s) {
                let r = match mv {
                    Move::Enter => spec.alpha.clone(),
                    Move::Exit => spec.beta.clone(),
                    Move::Hop => Rat::one(),
                };
                out_rate += &r;
                *row.entry(t).or_insert_with(Rat::zero) += r;
            }
            if !out_rate.is_zero() {
                row.insert(s, -out_rate);
            }
            row
        })
        .collect();
    Ok(Generator { n, rows })
}

/// A probability vector over the states of `n` sites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distribution {
    n: usize,
    alpha: Rat,
    beta: Rat,
    pi: Vec<Rat>,
}

impl Distribution {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, state: &TasepState) -> &Rat {
        &self.pi[state.index()]
    }

    pub fn values(&self) -> &[Rat] {
        &self.pi
    }

    pub fn iter(&self) -> impl Iterator<Item = (TasepState, &Rat)> {
        self.pi.iter().enumerate().map(|(i, p)| (TasepState::from_index(self.n, i), p))
    }

    pub fn total(&self) -> Rat {
        self.pi.iter().sum()
    }

    /// Probability of exactly `k` particles.
    pub fn particle_marginal(&self, k: usize) -> Rat {
        self.iter().filter(|(s, _)| s.particles() == k).map(|(_, p)| p.clone()).sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("distribution serializes")
    }
}

impl Serialize for Distribution {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Json {
            n: usize,
            alpha: String,
            beta: String,
            pi: BTreeMap<String, String>,
        }
        Json {
            n: self.n,
            alpha: self.alpha.to_string(),
            beta: self.beta.to_string(),
            pi: self.iter().map(|(s, p)| (s.to_string(), p.to_string())).collect(),
        }
        .serialize(serializer)
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (s, p) in self.iter() {
            writeln!(f, "{s}\t{p}")?;
        }
        Ok(())
    }
}

/// Rows of `Qᵀ` scaled to integers by a common denominator of the rates.
fn integer_balance_rows(q: &Generator) -> Vec<BTreeMap<usize, BigInt>> {
    let denom = q
        .rows
        .iter()
        .flat_map(|r| r.values())
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let mut rows = vec![BTreeMap::new(); q.num_states()];
    for (i, row) in q.rows.iter().enumerate() {
        for (&j, v) in row {
            rows[j].insert(i, (v * &denom).to_integer());
        }
    }
    rows
}

fn divide_by_content(row: &mut BTreeMap<usize, BigInt>) {
    let g = row.values().fold(BigInt::zero(), |g, v| g.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in row.values_mut() {
            *v /= &g;
        }
    }
}

/// A nonzero solution of `A x = 0` for an integer system with `dim`
/// columns whose null space is one-dimensional.
///
/// Fraction-free sparse elimination: at each step the pivot column is the
/// one with fewest remaining rows and the pivot row the shortest among them;
/// eliminated rows are divided by their content to keep entries small.
fn null_vector(mut rows: Vec<BTreeMap<usize, BigInt>>, dim: usize) -> Result<Vec<Rat>> {
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); dim];
    for (r, row) in rows.iter().enumerate() {
        for &c in row.keys() {
            col_rows[c].insert(r);
        }
    }
    let mut active_cols: BTreeSet<usize> = (0..dim).collect();
    let mut pivots: Vec<(usize, usize)> = Vec::with_capacity(rows.len());
    loop {
        // Markowitz choice: minimize (row length − 1)(column count − 1).
        let mut best: Option<(usize, usize, usize)> = None;
        for &c in &active_cols {
            let count = col_rows[c].len();
            if count == 0 {
                continue;
            }
            for &r in &col_rows[c] {
                let cost = (rows[r].len() - 1) * (count - 1);
                if best.is_none_or(|(b, _, _)| cost < b) {
                    best = Some((cost, r, c));
                }
            }
            if best.is_some_and(|(b, _, _)| b == 0) {
                break;
            }
        }
        let Some((_, r, c)) = best else {
            break;
        };
        for &j in rows[r].keys() {
            col_rows[j].remove(&r);
        }
        active_cols.remove(&c);
        pivots.push((r, c));
        let prow = std::mem::take(&mut rows[r]);
        let p = prow[&c].clone();
        let targets: Vec<usize> = col_rows[c].iter().copied().collect();
        for t in targets {
            let a = rows[t][&c].clone();
            let g = a.gcd(&p);
            let (fa, fb) = (&p / &g, &a / &g);
            let mut next: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (&j, v) in &rows[t] {
                next.insert(j, v * &fa);
            }
            for (&j, v) in &prow {
                let e = next.entry(j).or_insert_with(BigInt::zero);
                *e -= v * &fb;
            }
            next.retain(|_, v| !v.is_zero());
            divide_by_content(&mut next);
            for &j in rows[t].keys() {
                if !next.contains_key(&j) {
                    col_rows[j].remove(&t);
                }
            }
            for &j in next.keys() {
                col_rows[j].insert(t);
            }
            rows[t] = next;
        }
        rows[r] = prow;
    }
    if active_cols.len() != 1 {
        return Err(Error::Arithmetic(format!(
            "expected a one-dimensional null space, found {} free columns",
            active_cols.len()
        )));
    }
    let mut x = vec![Rat::zero(); dim];
    let free = *active_cols.first().expect("one free column");
    x[free] = Rat::one();
    for &(r, c) in pivots.iter().rev() {
        let mut acc = Rat::zero();
        for (&j, v) in &rows[r] {
            if j != c {
                acc -= &x[j] * Rat::from_integer(v.clone());
            }
        }
        x[c] = acc / Rat::from_integer(rows[r][&c].clone());
    }
    Ok(x)
}

/// The stationary distribution, solved from `Qᵀ π = 0` with the last
/// balance equation replaced by `Σ π = 1`. The remaining balance equations
/// determine `π` up to scale and the normalization fixes the scale. The
/// result is checked against `π Q = 0` before it is returned.
pub fn stationary(spec: &RateSpec) -> Result<Distribution> {
    let q = generator(spec)?;
    let dim = q.num_states();
    let mut rows = integer_balance_rows(&q);
    rows.pop();
    let x = null_vector(rows, dim)?;
    let total: Rat = x.iter().sum();
    let pi: Vec<Rat> = x.into_iter().map(|v| v / &total).collect();
    if !balance_residual(&q, &pi).iter().all(Zero::is_zero) {
        return Err(Error::Arithmetic("stationary vector fails global balance".into()));
    }
    Ok(Distribution {
        n: spec.n,
        alpha: spec.alpha.clone(),
        beta: spec.beta.clone(),
        pi,
    })
}

/// `π Q`, which vanishes exactly at stationarity.
pub fn balance_residual(q: &Generator, pi: &[Rat]) -> Vec<Rat> {
    q.left_multiply(pi)
}

/// Un-normalized weight of `state` and the normalizer `Z_n`.
pub fn prob_state_symbolic(state: &TasepState) -> (BivarPoly, BivarPoly) {
    (genfun(&state_to_shape(state)), z_n(state.len()))
}

/// Stationary probability of `state` at the given rates.
pub fn prob_state(state: &TasepState, alpha: &Rat, beta: &Rat) -> Rat {
    let (num, z) = prob_state_symbolic(state);
    num.eval(alpha, beta) / z.eval(alpha, beta)
}

/// The distribution predicted by the tableau formula.
pub fn formula_distribution(spec: &RateSpec) -> Result<Distribution> {
    spec.check_bound()?;
    let z = z_n(spec.n).eval(&spec.alpha, &spec.beta);
    let pi = TasepState::all(spec.n)
        .map(|s| genfun(&state_to_shape(&s)).eval(&spec.alpha, &spec.beta) / &z)
        .collect();
    Ok(Distribution {
        n: spec.n,
        alpha: spec.alpha.clone(),
        beta: spec.beta.clone(),
        pi,
    })
}

/// The shape of the state with particles at `sites`:
/// `λ_j = n − k + j − x_j`.
pub fn locations_shape(n: usize, sites: &[usize]) -> Result<Shape> {
    let k = sites.len();
    if k > n || sites.iter().any(|&x| x == 0 || x > n) || sites.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain(format!(
            "sites must be strictly increasing within 1..={n}, got {sites:?}"
        )));
    }
    let parts = sites.iter().enumerate().map(|(j, &x)| n - k + (j + 1) - x).collect();
    Shape::new(parts, n - k)
}

/// Un-normalized weight of the configurations with particles exactly at
/// `sites`, as the bare determinant `det A^{α,β}_λ`.
pub fn prob_locations(n: usize, sites: &[usize]) -> Result<BivarPoly> {
    let shape = locations_shape(n, sites)?;
    if shape.rows() == 0 {
        return Ok(BivarPoly::one());
    }
    Ok(weighted_matrix(&shape).det())
}

/// Stationary probability of exactly `k` particles among `n` sites.
pub fn prob_k_particles(n: usize, k: usize, alpha: &Rat, beta: &Rat) -> Result<Rat> {
    if k > n {
        return Err(Error::Domain(format!("need 0 <= k <= n, got n={n}, k={k}")));
    }
    Ok(n_mk(n - k, k).eval(alpha, beta) / z_n(n).eval(alpha, beta))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimulationReport {
    pub n: usize,
    pub seed: u64,
    pub events: u64,
    pub total_time: f64,
    /// Time-weighted occupation fraction per state.
    pub frequencies: Vec<f64>,
    /// Batch-means standard error per state; `None` with fewer than two
    /// batches.
    pub standard_errors: Option<Vec<f64>>,
    pub batches: usize,
}

impl SimulationReport {
    /// `½ Σ |p̂(s) − π(s)|`.
    pub fn total_variation(&self, exact: &Distribution) -> f64 {
        0.5 * self
            .frequencies
            .iter()
            .zip(exact.values())
            .map(|(f, p)| (f - p.to_f64().unwrap_or(f64::NAN)).abs())
            .sum::<f64>()
    }

    /// `½ Σ se(s)`, the standard-error scale of the total-variation
    /// distance.
    pub fn total_variation_standard_error(&self) -> Option<f64> {
        self.standard_errors.as_ref().map(|se| 0.5 * se.iter().sum::<f64>())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let freq: BTreeMap<String, f64> = self
            .frequencies
            .iter()
            .enumerate()
            .map(|(i, f)| (TasepState::from_index(self.n, i).to_string(), *f))
            .collect();
        let se: Option<BTreeMap<String, f64>> = self.standard_errors.as_ref().map(|se| {
            se.iter()
                .enumerate()
                .map(|(i, v)| (TasepState::from_index(self.n, i).to_string(), *v))
                .collect()
        });
        serde_json::json!({
            "n": self.n,
            "seed": self.seed,
            "events": self.events,
            "total_time": self.total_time,
            "batches": self.batches,
            "frequencies": freq,
            "standard_errors": se,
        })
    }
}

/// Simulates `horizon` transitions from the empty lattice with a
/// `ChaCha8Rng` seeded from `seed`.
///
/// Holding times are exponential with the total exit rate of the current
/// state, and each holding time is credited to that state. The events are
/// split into [`SIMULATION_BATCHES`] consecutive batches of equal size (fewer
/// when `horizon` is smaller) whose occupation fractions give the
/// batch-means standard errors.
pub fn simulate(spec: &RateSpec, horizon: u64, seed: u64) -> Result<SimulationReport> {
    if horizon == 0 {
        return Err(Error::Domain("horizon must be at least one event".into()));
    }
    let n = spec.n;
    if n > 24 {
        return Err(Error::BoundExceeded {
            what: "simulated sites",
            requested: n,
            bound: 24,
        });
    }
    let to_f64 = |r: &Rat| r.to_f64().expect("rate fits in f64");
    let (alpha, beta) = (to_f64(&spec.alpha), to_f64(&spec.beta));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let num_states = 1usize << n;
    let batches = SIMULATION_BATCHES.min(horizon as usize);
    let per_batch = horizon / batches as u64;

    let mut totals = vec![0.0f64; num_states];
    let mut batch_fracs: Vec<Vec<f64>> = Vec::with_capacity(batches);
    let mut current = vec![0.0f64; num_states];
    let mut state = 0usize;
    let mut batch_events = 0u64;
    for event in 0..horizon {
        let options = moves(n, state);
        let rates: Vec<f64> = options
            .iter()
            .map(|(_, mv)| match mv {
                Move::Enter => alpha,
                Move::Exit => beta,
                Move::Hop => 1.0,
            })
            .collect();
        let total: f64 = rates.iter().sum();
        let hold = Exp::new(total).expect("positive total rate").sample(&mut rng);
        current[state] += hold;
        let mut u = rng.random::<f64>() * total;
        let mut next = options[options.len() - 1].0;
        for ((target, _), r) in options.iter().zip(&rates) {
            if u < *r {
                next = *target;
                break;
            }
            u -= r;
        }
        state = next;
        batch_events += 1;
        let last_event = event + 1 == horizon;
        if (batch_events == per_batch && batch_fracs.len() + 1 < batches) || last_event {
            let t: f64 = current.iter().sum();
            for (tot, c) in totals.iter_mut().zip(&current) {
                *tot += c;
            }
            batch_fracs.push(current.iter().map(|c| c / t).collect());
            current.iter_mut().for_each(|c| *c = 0.0);
            batch_events = 0;
        }
    }
    let total_time: f64 = totals.iter().sum();
    let frequencies: Vec<f64> = totals.iter().map(|t| t / total_time).collect();
    let b = batch_fracs.len();
    let standard_errors = (b >= 2).then(|| {
        (0..num_states)
            .map(|s| {
                let mean = batch_fracs.iter().map(|f| f[s]).sum::<f64>() / b as f64;
                let var = batch_fracs.iter().map(|f| (f[s] - mean).powi(2)).sum::<f64>() / (b - 1) as f64;
                (var / b as f64).sqrt()
            })
            .collect()
    });
    Ok(SimulationReport {
        n,
        seed,
        events: horizon,
        total_time,
        frequencies,
        standard_errors,
        batches: b,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_rat;
    use crate::shapes::boundary_weight;
    use crate::tableaux::enumerate_staircase;

    fn rat(s: &str) -> Rat {
        parse_rat(s).unwrap()
    }

    fn spec(n: usize, a: &str, b: &str) -> RateSpec {
        RateSpec::new(n, rat(a), rat(b)).unwrap()
    }

    fn st(s: &str) -> TasepState {
        s.parse().unwrap()
    }

    #[test]
    fn one_site_generator_and_solution() {
        let s = spec(1, "2", "5");
        let q = generator(&s).unwrap();
        assert_eq!(q.rate(&st("0"), &st("1")), rat("2"));
        assert_eq!(q.rate(&st("1"), &st("0")), rat("5"));
        let pi = stationary(&s).unwrap();
        assert_eq!(pi.get(&st("1")), &rat("2/7"));
        assert_eq!(pi.get(&st("0")), &rat("5/7"));
    }

    #[test]
    fn two_site_transitions() {
        let q = generator(&spec(2, "1/2", "1/3")).unwrap();
        let row = q.row(st("10").index());
        assert_eq!(row.len(), 2);
        assert_eq!(q.rate(&st("10"), &st("01")), rat("1"));
        assert_eq!(q.rate(&st("10"), &st("10")), rat("-1"));
    }

    #[test]
    fn generator_rows_sum_to_zero() {
        for n in 1..=8 {
            let q = generator(&spec(n, "1/2", "1/3")).unwrap();
            for i in 0..q.num_states() {
                assert!(q.row(i).values().sum::<Rat>().is_zero());
            }
        }
        assert!(matches!(generator(&spec(11, "1", "1")), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn rate_spec_validation() {
        assert!(RateSpec::new(0, rat("1"), rat("1")).is_err());
        assert!(RateSpec::new(2, rat("0"), rat("1")).is_err());
        assert!(RateSpec::new(2, rat("1"), rat("-1")).is_err());
    }

    #[test]
    fn stationary_matches_formula() {
        for n in 1..=5 {
            for (a, b) in [("1", "1"), ("1/2", "1/3"), ("2", "5")] {
                let s = spec(n, a, b);
                let exact = stationary(&s).unwrap();
                assert!(exact.total().is_one());
                assert_eq!(exact, formula_distribution(&s).unwrap(), "n={n} a={a} b={b}");
                for k in 0..=n {
                    assert_eq!(exact.particle_marginal(k), prob_k_particles(n, k, &s.alpha, &s.beta).unwrap());
                }
            }
        }
    }

    #[test]
    fn staircase_sums_match_genfun() {
        for n in 1..=5 {
            let mut by_type: BTreeMap<TasepState, BivarPoly> = BTreeMap::new();
            for t in enumerate_staircase(n).unwrap() {
                *by_type.entry(t.type_word()).or_insert_with(BivarPoly::zero) += t.weight();
            }
            for s in TasepState::all(n) {
                let want = by_type.remove(&s).unwrap_or_else(BivarPoly::zero);
                assert_eq!(prob_state_symbolic(&s).0, want, "{s}");
            }
        }
    }

    #[test]
    fn symbolic_examples() {
        let (num, z) = prob_state_symbolic(&st("0000"));
        assert_eq!(num, BivarPoly::monomial(1, 0, 4));
        assert_eq!(z, z_n(4));
        let (num, _) = prob_state_symbolic(&st("010110011"));
        assert!(num.coeff(8, 5) >= BigInt::one());
    }

    #[test]
    fn prob_state_at_one_site() {
        assert_eq!(prob_state(&st("1"), &rat("2"), &rat("3")), rat("2/5"));
    }

    #[test]
    fn location_examples() {
        assert_eq!(prob_locations(2, &[1]).unwrap(), "a + b".parse().unwrap());
        for n in 1..=6 {
            let all: Vec<usize> = (1..=n).collect();
            assert!(prob_locations(n, &all).unwrap().is_one());
        }
        assert!(prob_locations(3, &[2, 2]).is_err());
        assert!(prob_locations(3, &[0]).is_err());
        assert!(prob_locations(3, &[4]).is_err());
    }

    #[test]
    fn locations_match_genfun_over_boundary() {
        for n in 1..=6 {
            for s in TasepState::all(n) {
                let sites = s.particle_positions();
                let shape = locations_shape(n, &sites).unwrap();
                assert_eq!(shape, state_to_shape(&s));
                let g = genfun(&shape);
                let b = boundary_weight(&shape);
                assert_eq!(prob_locations(n, &sites).unwrap(), g.div_exact(&b).unwrap(), "{s}");
            }
        }
    }

    #[test]
    fn k_particle_probabilities_sum_to_one() {
        for n in 1..=6 {
            let total: Rat = (0..=n).map(|k| prob_k_particles(n, k, &rat("1/2"), &rat("1/3")).unwrap()).sum();
            assert!(total.is_one());
        }
        assert_eq!(prob_k_particles(1, 1, &rat("2"), &rat("3")).unwrap(), rat("2/5"));
        assert!(prob_k_particles(2, 3, &rat("1"), &rat("1")).is_err());
    }

    #[test]
    fn distribution_json() {
        let d = stationary(&spec(1, "1/2", "1/3")).unwrap();
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"n":1,"alpha":"1/2","beta":"1/3","pi":{"0":"2/5","1":"3/5"}}"#
        );
    }

    #[test]
    fn simulation_is_deterministic() {
        let s = spec(3, "1", "1");
        let a = simulate(&s, 5000, 7).unwrap();
        let b = simulate(&s, 5000, 7).unwrap();
        assert_eq!(a, b);
        let c = simulate(&s, 5000, 8).unwrap();
        assert_ne!(a.frequencies, c.frequencies);
        assert_eq!(a.batches, SIMULATION_BATCHES);
        assert!((a.frequencies.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn single_event_horizon() {
        let r = simulate(&spec(3, "1", "1"), 1, 0).unwrap();
        assert_eq!(r.frequencies[0], 1.0);
        assert!((r.frequencies.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!(r.standard_errors.is_none());
        assert!(simulate(&spec(3, "1", "1"), 0, 0).is_err());
    }
}
