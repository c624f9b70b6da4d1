//! Narayana's matrix `A_λ`, the weighted matrix `A^{α,β}_λ`, and their
//! determinants.
//!
//! Both matrices have ones on the subdiagonal and zeros below it. For such
//! matrices, expanding along the top row leaves minors that are
//! block-triangular. Each one factors into a unit upper-triangular block and
//! a bottom-right minor, which is itself the matrix of a suffix shape. So
//! `det` runs the recursion
//!
//! ```text
//! D_{k+1} = 1,   D_s = Σ_{j >= s} (-1)^{j-s} M_{sj} D_{j+1}
//! ```
//!
//! over suffixes with `O(k²)` polynomial products. Matrices without that
//! structure go through fraction-free (Bareiss) elimination instead.

use std::fmt;

use num_bigint::BigInt;

use crate::binom::binomial;
use crate::error::{Error, Result};
use crate::poly::{BivarPoly, Rat};
use crate::shapes::{boundary_weight, Shape};

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    entries: Vec<Vec<BivarPoly>>,
}

impl PolyMatrix {
    pub fn new(entries: Vec<Vec<BivarPoly>>) -> Result<Self> {
        let k = entries.len();
        if entries.iter().any(|row| row.len() != k) {
            return Err(Error::Domain("matrix must be square".into()));
        }
        Ok(Self { entries })
    }

    pub fn from_fn(k: usize, mut f: impl FnMut(usize, usize) -> BivarPoly) -> Self {
        Self {
            entries: (1..=k).map(|i| (1..=k).map(|j| f(i, j)).collect()).collect(),
        }
    }

    pub fn identity(k: usize) -> Self {
        Self::from_fn(k, |i, j| if i == j { BivarPoly::one() } else { BivarPoly::zero() })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// Entry `(i, j)`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> &BivarPoly {
        &self.entries[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<BivarPoly>] {
        &self.entries
    }

    /// The `m × m` bottom-right minor.
    pub fn bottom_right_minor(&self, m: usize) -> PolyMatrix {
        let k = self.dim();
        assert!(m <= k, "minor larger than matrix");
        Self {
            entries: self.entries[k - m..].iter().map(|row| row[k - m..].to_vec()).collect(),
        }
    }

    /// Entrywise evaluation at `α = a, β = b`, kept as constant polynomials.
    /// Panics if a value is not an integer.
    pub fn specialize(&self, a: &Rat, b: &Rat) -> PolyMatrix {
        Self {
            entries: self
                .entries
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|p| {
                            let v = p.eval(a, b);
                            assert!(v.is_integer(), "specialized entry {v} is not an integer");
                            BivarPoly::constant(v.to_integer())
                        })
                        .collect()
                })
                .collect(),
        }
    }

    /// Ones on the subdiagonal and zeros below it.
    pub fn is_unit_hessenberg(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter().take(i).enumerate().all(|(j, p)| if j + 1 == i { p.is_one() } else { p.is_zero() })
        })
    }

    pub fn det(&self) -> BivarPoly {
        self.det_suffix_expansion().unwrap_or_else(|| self.det_fraction_free())
    }

    /// Top-row expansion over suffix minors; `None` unless the matrix is
    /// unit Hessenberg.
    pub fn det_suffix_expansion(&self) -> Option<BivarPoly> {
        if !self.is_unit_hessenberg() {
            return None;
        }
        Some(self.suffix_determinants().swap_remove(0))
    }

    /// `out[s]` is the determinant of the bottom-right minor of size
    /// `k - s`, for `s = 0..=k`. Assumes unit Hessenberg structure.
    fn suffix_determinants(&self) -> Vec<BivarPoly> {
        let k = self.dim();
        let mut d = vec![BivarPoly::zero(); k + 1];
        d[k] = BivarPoly::one();
        for s in (0..k).rev() {
            let mut acc = BivarPoly::zero();
            for j in s..k {
                let entry = &self.entries[s][j];
                if entry.is_zero() || d[j + 1].is_zero() {
                    continue;
                }
                let term = entry * &d[j + 1];
                if (j - s) % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            d[s] = acc;
        }
        d
    }

    /// Bareiss fraction-free elimination with row pivoting.
    pub fn det_fraction_free(&self) -> BivarPoly {
        let k = self.dim();
        if k == 0 {
            return BivarPoly::one();
        }
        let mut m = self.entries.clone();
        let mut sign_negative = false;
        let mut prev = BivarPoly::one();
        for p in 0..k - 1 {
            if m[p][p].is_zero() {
                match (p + 1..k).find(|&r| !m[r][p].is_zero()) {
                    Some(r) => {
                        m.swap(p, r);
                        sign_negative = !sign_negative;
                    }
                    None => return BivarPoly::zero(),
                }
            }
            for i in p + 1..k {
                for j in p + 1..k {
                    let num = &(&m[p][p] * &m[i][j]) - &(&m[i][p] * &m[p][j]);
                    m[i][j] = num
                        .div_exact(&prev)
                        .expect("Bareiss quotient is exact in an integral domain");
                }
                m[i][p] = BivarPoly::zero();
            }
            prev = m[p][p].clone();
        }
        let det = m[k - 1][k - 1].clone();
        if sign_negative {
            -det
        } else {
            det
        }
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `(C(λ_j + 1, j − i + 1))_{i,j}`.
pub fn narayana_matrix(shape: &Shape) -> PolyMatrix {
    PolyMatrix::from_fn(shape.rows(), |i, j| {
        BivarPoly::constant(binomial(shape.part(j) as i64 + 1, j as i64 - i as i64 + 1))
    })
}

/// `c0 + c1·β` as a polynomial.
fn linear_in_beta(c0: BigInt, c1: BigInt) -> BivarPoly {
    BivarPoly::from_terms([((0, 0), c0), ((0, 1), c1)])
}

/// Multiplies by `α^da β^db`; the exponents may be negative only when the
/// polynomial is zero.
fn times_monomial(p: BivarPoly, da: i64, db: i64) -> BivarPoly {
    if p.is_zero() {
        return p;
    }
    p.shift(da, db).expect("negative exponent on a nonzero weighted-matrix term")
}

/// The weighted matrix: entry `(i, j)` is
///
/// ```text
/// β^{j−i} α^{λ_i−λ_{j+1}} (C(λ_{j+1}, j−i) + β C(λ_{j+1}, j−i+1))
///   + β^{j−i} α^{λ_i−λ_j} Σ_{ℓ=0}^{λ_j−λ_{j+1}−1} α^ℓ (C(λ_j−ℓ−1, j−i−1) + β C(λ_j−ℓ−1, j−i))
/// ```
///
/// with `λ_{k+1} = 0`.
pub fn weighted_matrix(shape: &Shape) -> PolyMatrix {
    let part = |r: usize| shape.part(r) as i64;
    PolyMatrix::from_fn(shape.rows(), |i, j| {
        let d = j as i64 - i as i64;
        let (li, lj, lnext) = (part(i), part(j), part(j + 1));
        let first = linear_in_beta(binomial(lnext, d), binomial(lnext, d + 1));
        let mut entry = times_monomial(first, li - lnext, d);
        for l in 0..(lj - lnext) {
            let top = lj - l - 1;
            let bracket = linear_in_beta(binomial(top, d - 1), binomial(top, d));
            entry += times_monomial(bracket, li - lj + l, d);
        }
        entry
    })
}

/// `P_λ(α,β) = α^k β^{cols} det A^{α,β}_λ`, the weight generating function
/// of the condensed tableaux of shape λ.
pub fn genfun(shape: &Shape) -> BivarPoly {
    let det = if shape.rows() == 0 {
        BivarPoly::one()
    } else {
        weighted_matrix(shape).det()
    };
    &boundary_weight(shape) * &det
}

/// Number of lattice paths inside λ obeying Rule 1, as `det A_λ`.
pub fn narayana_count(shape: &Shape) -> BigInt {
    let det = narayana_matrix(shape).det();
    assert!(det.total_degree().unwrap_or(0) == 0, "integer matrix has a constant determinant");
    det.coeff(0, 0)
}
