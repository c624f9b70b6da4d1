//! Closed forms for rectangle generating functions.
//!
//! `N_{m,k}` is the total weight of condensed tableaux whose diagram fits a
//! `k × m` rectangle (boundary included). `N'_{m,k}` restricts to diagrams
//! with exactly `k` nonzero rows and first row `m`. `Z_n = Σ_k N_{n−k,k}` is
//! the partition function of the TASEP on `n` sites.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::binom::binomial;
use crate::error::{Error, Result};
use crate::poly::{BivarPoly, Substitution, UniPoly};

/// Rectangle of width `m` (holes) and height `k` (particles).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridIndex {
    pub m: usize,
    pub k: usize,
}

impl GridIndex {
    pub fn new(m: usize, k: usize) -> Self {
        Self { m, k }
    }

    /// Number of TASEP sites, `m + k`.
    pub fn sites(self) -> usize {
        self.m + self.k
    }

    /// Every rectangle with `m + k = n`, ordered by `k`.
    pub fn with_sites(n: usize) -> impl Iterator<Item = GridIndex> {
        (0..=n).map(move |k| GridIndex { m: n - k, k })
    }
}

fn delta(a: i64, b: i64) -> i64 {
    i64::from(a == b)
}

/// `N'_{m,k}`, for `m, k >= 1`.
pub fn n_prime(m: usize, k: usize) -> Result<BivarPoly> {
    if m == 0 || k == 0 {
        return Err(Error::Domain(format!(
            "N' needs a nonempty first row and at least one row, got m={m}, k={k}"
        )));
    }
    let (mi, ki) = (m as i64, k as i64);
    let mut terms = Vec::new();
    for l in 0..=ki {
        for j in 0..=mi {
            let top_m = mi + l - 2 + delta(j, mi);
            let top_k = ki + j - 2 + delta(l, ki);
            let c = binomial(top_m, mi - 1) * binomial(top_k, ki - 1) - binomial(top_m, mi) * binomial(top_k, ki);
            terms.push(((k as u32 + j as u32, m as u32 + l as u32), c));
        }
    }
    Ok(BivarPoly::from_terms(terms))
}

/// `N_{m,k}`.
pub fn n_mk(m: usize, k: usize) -> BivarPoly {
    let (mi, ki) = (m as i64, k as i64);
    let mut terms = Vec::new();
    for j in 0..=mi {
        for l in 0..=ki {
            let c = binomial(ki + j - 1, j) * binomial(mi + l - 1, l)
                - binomial(ki + j - 1, j - 1) * binomial(mi + l - 1, l - 1);
            terms.push(((k as u32 + j as u32, m as u32 + l as u32), c));
        }
    }
    BivarPoly::from_terms(terms)
}

/// `N'_{m',k'}` extended to the degenerate indices: the empty diagram
/// (`m' = k' = 0`) contributes the monomial 1; other degenerate indices
/// describe no diagram and contribute 0.
fn n_prime_completed(m: usize, k: usize) -> BivarPoly {
    match (m, k) {
        (0, 0) => BivarPoly::one(),
        (0, _) | (_, 0) => BivarPoly::zero(),
        _ => n_prime(m, k).expect("indices are positive"),
    }
}

/// `α^k β^m Σ_{m'<=m} Σ_{k'<=k} N'_{m',k'} / (α^{k'} β^{m'})`.
pub fn n_mk_from_n_prime(m: usize, k: usize) -> BivarPoly {
    let mut inner = BivarPoly::zero();
    for mp in 0..=m {
        for kp in 0..=k {
            let term = n_prime_completed(mp, kp)
                .div_monomial(kp as u32, mp as u32)
                .expect("N' carries its boundary monomial");
            inner += term;
        }
    }
    &BivarPoly::monomial(1, k as u32, m as u32) * &inner
}

/// Whether `N_{m,k}` equals its decomposition by first row and row count.
pub fn relation_check(m: usize, k: usize) -> bool {
    n_mk(m, k) == n_mk_from_n_prime(m, k)
}

/// Total weight of the fillings of the `k–m` hook (a top row of length `m`
/// and a left column of length `k`) around an inner tableau of weight
/// `α^j β^ℓ`, i.e. with `k−1−ℓ` free rows and `m−1−j` free columns.
pub fn hook_weight(m: usize, k: usize, j: usize, l: usize) -> Result<BivarPoly> {
    if m == 0 || k == 0 || j >= m || l >= k {
        return Err(Error::Domain(format!(
            "hook weight needs m,k >= 1, j < m, l < k; got m={m}, k={k}, j={j}, l={l}"
        )));
    }
    let a_max = (m - j) as u32;
    let b_max = (k - l) as u32;
    let mut terms = Vec::new();
    for s in 0..b_max {
        terms.push(((a_max, s), 1));
    }
    for t in 0..a_max {
        terms.push(((t, b_max), 1));
    }
    for t in 1..a_max {
        for s in 1..b_max {
            terms.push(((t, s), 1));
        }
    }
    Ok(BivarPoly::from_terms(terms))
}

/// `N'_{m,k}` rebuilt by adding a hook to every tableau of the
/// `(k−1) × (m−1)` rectangle, for `m, k >= 2`.
pub fn hook_recursion(m: usize, k: usize) -> Result<BivarPoly> {
    if m < 2 || k < 2 {
        return Err(Error::Domain(format!("hook recursion needs m,k >= 2, got m={m}, k={k}")));
    }
    let inner = n_mk(m - 1, k - 1)
        .div_monomial(k as u32 - 1, m as u32 - 1)
        .expect("N carries its boundary monomial");
    let mut sum = BivarPoly::zero();
    for j in 0..m {
        for l in 0..k {
            let c = inner.coeff(j as u32, l as u32);
            if c.is_zero() {
                continue;
            }
            let h = hook_weight(m, k, j, l)?;
            sum += &h * &BivarPoly::monomial(c, j as u32, l as u32);
        }
    }
    Ok(&BivarPoly::monomial(1, k as u32, m as u32) * &sum)
}

/// `Z_n = Σ_{k=0}^{n} N_{n−k,k}`.
pub fn z_n(n: usize) -> BivarPoly {
    GridIndex::with_sites(n).map(|g| n_mk(g.m, g.k)).sum()
}

/// `p · C(2n−p, n) / (2n−p)`, asserting the division is exact.
pub fn derrida_coefficient(n: usize, p: usize) -> Result<BigInt> {
    if p == 0 || p > n {
        return Err(Error::Domain(format!("coefficient index p={p} outside 1..={n}")));
    }
    let denom = BigInt::from(2 * n - p);
    let num = BigInt::from(p) * binomial((2 * n - p) as i64, n as i64);
    let (q, r) = num.div_rem(&denom);
    if !r.is_zero() {
        return Err(Error::Arithmetic(format!("{num} is not divisible by {denom}")));
    }
    Ok(q)
}

/// `Z_n` from the Catalan-weighted geometric sums
/// `α^n β^n Σ_{p=1}^{n} c_p Σ_{i=0}^{p} α^{−i} β^{−(p−i)}`.
///
/// The sum over `p` is empty at `n = 0`; the empty lattice has the single
/// empty configuration, so `Z_0 = 1` is returned there.
pub fn z_n_derrida(n: usize) -> Result<BivarPoly> {
    if n == 0 {
        return Ok(BivarPoly::one());
    }
    let mut terms = Vec::new();
    for p in 1..=n {
        let c = derrida_coefficient(n, p)?;
        for i in 0..=p {
            terms.push((((n - i) as u32, (n - p + i) as u32), c.clone()));
        }
    }
    Ok(BivarPoly::from_terms(terms))
}

/// `(1/(n+1)) C(n+1, k) C(n+1, k+1)`, the count of tableaux of `n` sites with
/// `k` particles.
pub fn narayana_number(n: usize, k: usize) -> Result<BigInt> {
    if k > n {
        return Err(Error::Domain(format!("need 0 <= k <= n, got n={n}, k={k}")));
    }
    let (n1, k) = (n as i64 + 1, k as i64);
    let num = binomial(n1, k) * binomial(n1, k + 1);
    let (q, r) = num.div_rem(&BigInt::from(n1));
    debug_assert!(r.is_zero());
    Ok(q)
}

/// `N_{n−k,k}` under `spec`, divided by the image of the boundary
/// monomial `α^k β^{n−k}`, for `k = 1..n−1`.
pub fn q_table(n: usize, spec: Substitution) -> Result<Vec<(usize, UniPoly)>> {
    if n == 0 {
        return Err(Error::Domain("table needs n >= 1".into()));
    }
    (1..n)
        .map(|k| {
            let m = n - k;
            let image = n_mk(m, k).substitute(spec);
            let shift = spec.image_degree(k as u32, m as u32);
            let row = image
                .div_q_pow(shift)
                .ok_or_else(|| Error::Arithmetic(format!("q^{shift} does not divide row k={k}")))?;
            Ok((k, row))
        })
        .collect()
}
