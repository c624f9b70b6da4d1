//! Staircase and condensed Catalan tableaux.
//!
//! Cells are addressed `(row, col)`, 1-based, row 1 on top. A filling obeys
//!
//! * (ii) every cell west of a `β` in its row is empty,
//! * (iii) every cell north of an `α` in its column is empty,
//! * (iv) a cell with no `α` below it and no `β` to its right is filled,
//!
//! and staircase fillings additionally require (i): diagonal cells are filled.
//!
//! Enumeration is exhaustive and serves as the ground truth the determinant
//! and closed-form results are checked against.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::BivarPoly;
use crate::shapes::{boundary_weight, shape_to_state, Shape, Site, TasepState};

/// Largest staircase size [`enumerate_staircase`] accepts.
pub const STAIRCASE_ORACLE_BOUND: usize = 10;

/// Content of one cell. The derived order `Empty < Alpha < Beta` is the
/// canonical enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Fill {
    #[default]
    Empty,
    Alpha,
    Beta,
}

impl Fill {
    pub fn as_char(self) -> char {
        match self {
            Fill::Empty => '.',
            Fill::Alpha => 'a',
            Fill::Beta => 'b',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    /// (i) diagonal cell of a staircase left empty
    DiagonalFilled,
    /// (ii) non-empty cell west of a `β`
    WestOfBeta,
    /// (iii) non-empty cell north of an `α`
    NorthOfAlpha,
    /// (iv) empty cell with neither `α` below nor `β` to the right
    MustBeFilled,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::DiagonalFilled => "(i) diagonal cells must be filled",
            Rule::WestOfBeta => "(ii) cells west of a beta must be empty",
            Rule::NorthOfAlpha => "(iii) cells north of an alpha must be empty",
            Rule::MustBeFilled => "(iv) cell with no alpha below and no beta right must be filled",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub row: usize,
    pub col: usize,
    pub rule: Rule,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cell ({}, {}) breaks rule {}", self.row, self.col, self.rule)
    }
}

/// First violation of rules (ii)–(iv) on a left-justified diagram, scanning
/// cells in column-major order.
fn first_violation(rows: &[Vec<Fill>]) -> Option<Violation> {
    let width = rows.first().map_or(0, Vec::len);
    for c in 0..width {
        for r in (0..rows.len()).take_while(|&r| c < rows[r].len()) {
            let cell = rows[r][c];
            let beta_right = rows[r][c + 1..].contains(&Fill::Beta);
            let alpha_below = rows[r + 1..]
                .iter()
                .take_while(|row| c < row.len())
                .any(|row| row[c] == Fill::Alpha);
            let rule = match cell {
                Fill::Empty if !beta_right && !alpha_below => Some(Rule::MustBeFilled),
                Fill::Empty => None,
                _ if beta_right => Some(Rule::WestOfBeta),
                _ if alpha_below => Some(Rule::NorthOfAlpha),
                _ => None,
            };
            if let Some(rule) = rule {
                return Some(Violation {
                    row: r + 1,
                    col: c + 1,
                    rule,
                });
            }
        }
    }
    None
}

fn count_symbols(rows: &[Vec<Fill>]) -> (u32, u32) {
    rows.iter().flatten().fold((0, 0), |(a, b), f| match f {
        Fill::Alpha => (a + 1, b),
        Fill::Beta => (a, b + 1),
        Fill::Empty => (a, b),
    })
}

/// Column-major reading, used as the canonical sort key.
fn column_major(rows: &[Vec<Fill>]) -> Vec<Fill> {
    let width = rows.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for c in 0..width {
        for row in rows.iter().take_while(|row| c < row.len()) {
            out.push(row[c]);
        }
    }
    out
}

/// Depth-first generation of every valid filling of a Young diagram.
///
/// Cells are decided from the rightmost column leftwards and bottom to top
/// within a column, so "β to the right" and "α below" are already known for
/// each cell: every cell is either forced empty or takes one of two symbols,
/// and no branch dead-ends.
fn for_each_filling(row_lengths: &[usize], mut visit: impl FnMut(&[Vec<Fill>])) {
    struct Search<'v, F: FnMut(&[Vec<Fill>])> {
        heights: Vec<usize>,
        grid: Vec<Vec<Fill>>,
        beta_in_row: Vec<bool>,
        visit: &'v mut F,
    }

    impl<F: FnMut(&[Vec<Fill>])> Search<'_, F> {
        // `col` and `row` are 0-based; `row` counts down from the column height.
        fn step(&mut self, col: usize, row: usize, alpha_below: bool) {
            if row == 0 {
                if col == 0 {
                    (self.visit)(&self.grid);
                } else {
                    let next = col - 1;
                    self.step(next, self.heights[next], false);
                }
                return;
            }
            let r = row - 1;
            if self.beta_in_row[r] || alpha_below {
                self.grid[r][col] = Fill::Empty;
                self.step(col, r, alpha_below);
                return;
            }
            self.grid[r][col] = Fill::Alpha;
            self.step(col, r, true);
            self.grid[r][col] = Fill::Beta;
            self.beta_in_row[r] = true;
            self.step(col, r, alpha_below);
            self.beta_in_row[r] = false;
            self.grid[r][col] = Fill::Empty;
        }
    }

    let width = row_lengths.first().copied().unwrap_or(0);
    let heights: Vec<usize> = (1..=width)
        .map(|c| row_lengths.iter().take_while(|&&p| p >= c).count())
        .collect();
    let mut search = Search {
        grid: row_lengths.iter().map(|&p| vec![Fill::Empty; p]).collect(),
        beta_in_row: vec![false; row_lengths.len()],
        heights,
        visit: &mut visit,
    };
    if width == 0 {
        (search.visit)(&search.grid);
    } else {
        search.step(width - 1, search.heights[width - 1], false);
    }
}

/// A filling of a partition inside its rectangle obeying rules (ii)–(iv).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CondensedTableau {
    shape: Shape,
    rows: Vec<Vec<Fill>>,
}

impl CondensedTableau {
    /// Wraps a filling without checking the rules; the grid must match the
    /// shape's cells. Use [`CondensedTableau::validate`] to check the rules.
    pub fn new(shape: Shape, rows: Vec<Vec<Fill>>) -> Result<Self> {
        let lengths_match = rows.len() == shape.rows()
            && rows.iter().zip(shape.parts()).all(|(row, &p)| row.len() == p);
        if !lengths_match {
            return Err(Error::InvalidTableau(format!(
                "filling does not cover exactly the cells of {shape}"
            )));
        }
        Ok(Self { shape, rows })
    }

    /// Builds a tableau from its non-empty cells.
    pub fn from_cells(shape: Shape, cells: impl IntoIterator<Item = ((usize, usize), Fill)>) -> Result<Self> {
        let mut rows: Vec<Vec<Fill>> = shape.parts().iter().map(|&p| vec![Fill::Empty; p]).collect();
        for ((r, c), fill) in cells {
            if !shape.contains(r, c) {
                return Err(Error::InvalidTableau(format!("cell ({r}, {c}) is outside {shape}")));
            }
            rows[r - 1][c - 1] = fill;
        }
        Ok(Self { shape, rows })
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Fill>] {
        &self.rows
    }

    /// Cell `(r, c)`, 1-based.
    pub fn get(&self, r: usize, c: usize) -> Option<Fill> {
        self.rows.get(r.checked_sub(1)?)?.get(c.checked_sub(1)?).copied()
    }

    pub fn validate(&self) -> std::result::Result<(), Violation> {
        first_violation(&self.rows).map_or(Ok(()), Err)
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// `(#α, #β)` in the filling.
    pub fn symbol_counts(&self) -> (u32, u32) {
        count_symbols(&self.rows)
    }

    /// Product of the filled symbols, without the boundary.
    pub fn filling_weight(&self) -> BivarPoly {
        let (a, b) = self.symbol_counts();
        BivarPoly::monomial(1, a, b)
    }

    /// `α^{k+j} β^{cols+ℓ}`.
    pub fn weight(&self) -> BivarPoly {
        &boundary_weight(&self.shape) * &self.filling_weight()
    }

    pub fn type_word(&self) -> TasepState {
        shape_to_state(&self.shape)
    }

    /// The canonical ordering key (column-major reading).
    pub fn canonical_key(&self) -> Vec<Fill> {
        column_major(&self.rows)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("tableau serializes")
    }
}

impl fmt::Display for CondensedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.shape)?;
        for row in &self.rows {
            let line: String = row.iter().map(|c| c.as_char()).collect();
            writeln!(f, "|{line}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct JsonCell {
    r: usize,
    c: usize,
    s: String,
}

#[derive(Serialize, Deserialize)]
struct JsonTableau {
    shape: Shape,
    cells: Vec<JsonCell>,
}

impl Serialize for CondensedTableau {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut cells = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            for (c, fill) in row.iter().enumerate() {
                if *fill != Fill::Empty {
                    cells.push(JsonCell {
                        r: r + 1,
                        c: c + 1,
                        s: fill.as_char().to_string(),
                    });
                }
            }
        }
        JsonTableau {
            shape: self.shape.clone(),
            cells,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CondensedTableau {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = JsonTableau::deserialize(deserializer)?;
        let mut cells = Vec::with_capacity(raw.cells.len());
        for cell in raw.cells {
            let fill = match cell.s.as_str() {
                "a" => Fill::Alpha,
                "b" => Fill::Beta,
                other => return Err(serde::de::Error::custom(format!("unknown symbol {other:?}"))),
            };
            cells.push(((cell.r, cell.c), fill));
        }
        CondensedTableau::from_cells(raw.shape, cells).map_err(serde::de::Error::custom)
    }
}

/// Every valid filling of `shape`, each exactly once, in canonical order:
/// lexicographic on the column-major reading with `Empty < Alpha < Beta`.
pub fn enumerate(shape: &Shape) -> Vec<CondensedTableau> {
    let mut out = Vec::new();
    for_each_filling(shape.parts(), |grid| {
        out.push(CondensedTableau {
            shape: shape.clone(),
            rows: grid.to_vec(),
        })
    });
    out.sort_by_cached_key(CondensedTableau::canonical_key);
    out
}

/// Number of valid fillings of `shape`.
pub fn count(shape: &Shape) -> u64 {
    let mut n = 0;
    for_each_filling(shape.parts(), |_| n += 1);
    n
}

/// `Σ weight(T)` over all valid fillings of `shape`, accumulated without
/// materializing the tableaux.
pub fn weight_sum(shape: &Shape) -> BivarPoly {
    let mut tally: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    for_each_filling(shape.parts(), |grid| {
        *tally.entry(count_symbols(grid)).or_default() += 1;
    });
    let filling = BivarPoly::from_terms(tally.into_iter().map(|(e, c)| (e, BigInt::from(c))));
    &boundary_weight(shape) * &filling
}

/// A filling of the staircase `(n, n−1, …, 1)` obeying rules (i)–(iv).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StaircaseTableau {
    rows: Vec<Vec<Fill>>,
}

impl StaircaseTableau {
    pub fn new(rows: Vec<Vec<Fill>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().enumerate().any(|(i, row)| row.len() != n - i) {
            return Err(Error::InvalidTableau(format!(
                "rows must have lengths {n}, {}, …, 1",
                n.saturating_sub(1)
            )));
        }
        Ok(Self { rows })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Fill>] {
        &self.rows
    }

    /// Diagonal entry of row `r` (1-based), i.e. its last cell.
    pub fn diagonal(&self, r: usize) -> Fill {
        *self.rows[r - 1].last().expect("staircase rows are non-empty")
    }

    pub fn validate(&self) -> std::result::Result<(), Violation> {
        for r in 1..=self.size() {
            if self.diagonal(r) == Fill::Empty {
                return Err(Violation {
                    row: r,
                    col: self.size() - r + 1,
                    rule: Rule::DiagonalFilled,
                });
            }
        }
        first_violation(&self.rows).map_or(Ok(()), Err)
    }

    /// Product of all symbols.
    pub fn weight(&self) -> BivarPoly {
        let (a, b) = count_symbols(&self.rows);
        BivarPoly::monomial(1, a, b)
    }

    /// Diagonal read top to bottom, `α` as a particle and `β` as a hole.
    pub fn type_word(&self) -> TasepState {
        TasepState::new(
            (1..=self.size())
                .map(|r| match self.diagonal(r) {
                    Fill::Alpha => Site::Particle,
                    _ => Site::Hole,
                })
                .collect(),
        )
    }

    /// Deletes rows whose diagonal holds `β` and columns whose bottom cell
    /// holds `α`, then packs the remaining cells to the northwest.
    pub fn to_condensed(&self) -> Result<CondensedTableau> {
        if let Err(v) = self.validate() {
            return Err(Error::InvalidTableau(format!("staircase is not valid: {v}")));
        }
        let n = self.size();
        // Column c's bottom cell is the diagonal of row n − c + 1.
        let kept_cols: Vec<usize> = (1..=n).filter(|&c| self.diagonal(n - c + 1) == Fill::Beta).collect();
        let mut rows = Vec::new();
        for r in (1..=n).filter(|&r| self.diagonal(r) == Fill::Alpha) {
            let row: Vec<Fill> = kept_cols
                .iter()
                .take_while(|&&c| c <= n - r)
                .map(|&c| self.rows[r - 1][c - 1])
                .collect();
            rows.push(row);
        }
        let shape = Shape::new(rows.iter().map(Vec::len).collect(), kept_cols.len())?;
        CondensedTableau::new(shape, rows)
    }

    /// Inverse of [`StaircaseTableau::to_condensed`].
    pub fn from_condensed(t: &CondensedTableau) -> Result<Self> {
        if let Err(v) = t.validate() {
            return Err(Error::InvalidTableau(format!("condensed tableau is not valid: {v}")));
        }
        let tau = t.type_word();
        let n = tau.len();
        let mut rows: Vec<Vec<Fill>> = (0..n).map(|i| vec![Fill::Empty; n - i]).collect();
        // Condensed column j is the j-th hole counted from the right; it
        // lives in staircase column n − pos + 1.
        let hole_cols: Vec<usize> = tau
            .sites()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, s)| **s == Site::Hole)
            .map(|(i, _)| n - i)
            .collect();
        let particle_rows: Vec<usize> = tau.particle_positions();
        for (pos, site) in tau.sites().iter().enumerate() {
            rows[pos][n - pos - 1] = match site {
                Site::Particle => Fill::Alpha,
                Site::Hole => Fill::Beta,
            };
        }
        for (i, row) in t.rows().iter().enumerate() {
            for (j, fill) in row.iter().enumerate() {
                rows[particle_rows[i] - 1][hole_cols[j] - 1] = *fill;
            }
        }
        Ok(Self { rows })
    }
}

impl fmt::Display for StaircaseTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let line: String = row.iter().map(|c| c.as_char()).collect();
            writeln!(f, "|{line}")?;
        }
        Ok(())
    }
}

/// Every valid staircase tableau of size `n`, in canonical order.
pub fn enumerate_staircase(n: usize) -> Result<Vec<StaircaseTableau>> {
    if n > STAIRCASE_ORACLE_BOUND {
        return Err(Error::BoundExceeded {
            what: "staircase size",
            requested: n,
            bound: STAIRCASE_ORACLE_BOUND,
        });
    }
    let lengths: Vec<usize> = (1..=n).rev().collect();
    let mut out = Vec::new();
    for_each_filling(&lengths, |grid| out.push(StaircaseTableau { rows: grid.to_vec() }));
    out.sort_by_cached_key(|t| column_major(&t.rows));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::BivarPoly;

    fn shape(s: &str) -> Shape {
        s.parse().unwrap()
    }

    fn p(s: &str) -> BivarPoly {
        s.parse().unwrap()
    }

    /// Plain brute force over all 3^cells fillings, filtered by `validate`.
    fn brute_force(shape: &Shape) -> Vec<CondensedTableau> {
        let cells: Vec<(usize, usize)> = (1..=shape.cols())
            .flat_map(|c| (1..=shape.column_height(c)).map(move |r| (r, c)))
            .collect();
        let total = 3usize.pow(cells.len() as u32);
        let mut out = Vec::new();
        for code in 0..total {
            let mut x = code;
            let fills = cells.iter().map(|&cell| {
                let f = [Fill::Empty, Fill::Alpha, Fill::Beta][x % 3];
                x /= 3;
                (cell, f)
            });
            let t = CondensedTableau::from_cells(shape.clone(), fills.collect::<Vec<_>>()).unwrap();
            if t.is_valid() {
                out.push(t);
            }
        }
        out.sort_by_cached_key(CondensedTableau::canonical_key);
        out
    }

    /// The reconstructed condensed tableau of type ◦•◦••◦◦••.
    pub(crate) fn condensed_example() -> CondensedTableau {
        CondensedTableau::from_cells(
            shape("3,2,2,0,0/4"),
            [((1, 3), Fill::Alpha), ((2, 1), Fill::Alpha), ((3, 1), Fill::Beta), ((3, 2), Fill::Alpha)],
        )
        .unwrap()
    }

    #[test]
    fn condensed_example_is_valid_with_weight_a8b5() {
        let t = condensed_example();
        assert_eq!(t.validate(), Ok(()));
        assert_eq!(t.weight(), BivarPoly::monomial(1, 8, 5));
        assert_eq!(t.type_word().to_string(), "010110011");
    }

    #[test]
    fn validate_reports_first_violation() {
        let lone = CondensedTableau::from_cells(shape("1/1"), []).unwrap();
        assert_eq!(
            lone.validate(),
            Err(Violation {
                row: 1,
                col: 1,
                rule: Rule::MustBeFilled
            })
        );
        let west = CondensedTableau::from_cells(shape("2/2"), [((1, 1), Fill::Alpha), ((1, 2), Fill::Beta)]).unwrap();
        assert_eq!(west.validate().unwrap_err().rule, Rule::WestOfBeta);
        let north = CondensedTableau::from_cells(shape("1,1/1"), [((1, 1), Fill::Beta), ((2, 1), Fill::Alpha)]).unwrap();
        assert_eq!(north.validate().unwrap_err().rule, Rule::NorthOfAlpha);
    }

    #[test]
    fn weight_examples() {
        let t = CondensedTableau::from_cells(shape("0,0,0/0"), []).unwrap();
        assert_eq!(t.weight(), BivarPoly::monomial(1, 3, 0));
        for t in enumerate(&shape("3,2,2,0,0/4")) {
            assert_eq!(t.weight(), &boundary_weight(t.shape()) * &t.filling_weight());
        }
    }

    #[test]
    fn enumerate_small_shapes() {
        let one = enumerate(&shape("1/1"));
        assert_eq!(one.len(), 2);
        assert_eq!(one[0].get(1, 1), Some(Fill::Alpha));
        assert_eq!(one[1].get(1, 1), Some(Fill::Beta));
        assert_eq!(weight_sum(&shape("1/1")), p("a^2*b + a*b^2"));
        let empty = enumerate(&Shape::empty(0));
        assert_eq!(empty.len(), 1);
    }

    #[test]
    fn enumerate_agrees_with_plain_brute_force() {
        for n in 0..=6 {
            for lambda in Shape::all_with_semi_perimeter(n) {
                let fast = enumerate(&lambda);
                assert_eq!(fast, brute_force(&lambda), "{lambda}");
                assert_eq!(count(&lambda), fast.len() as u64);
                let total: BivarPoly = fast.iter().map(CondensedTableau::weight).sum();
                assert_eq!(weight_sum(&lambda), total);
            }
        }
    }

    #[test]
    fn at_most_one_beta_per_row_and_one_alpha_per_column() {
        for n in 0..=8 {
            for lambda in Shape::all_with_semi_perimeter(n) {
                for t in enumerate(&lambda) {
                    for row in t.rows() {
                        assert!(row.iter().filter(|f| **f == Fill::Beta).count() <= 1);
                    }
                    for c in 1..=lambda.cols() {
                        let alphas = (1..=lambda.column_height(c)).filter(|&r| t.get(r, c) == Some(Fill::Alpha)).count();
                        assert!(alphas <= 1);
                    }
                }
            }
        }
    }

    #[test]
    fn staircase_counts_are_catalan() {
        let sizes: Vec<usize> = (1..=6).map(|n| enumerate_staircase(n).unwrap().len()).collect();
        assert_eq!(sizes, vec![2, 5, 14, 42, 132, 429]);
        assert!(matches!(enumerate_staircase(11), Err(Error::BoundExceeded { .. })));
        let ones = enumerate_staircase(1).unwrap();
        assert_eq!(ones[0].rows(), &[vec![Fill::Alpha]]);
        assert_eq!(ones[1].rows(), &[vec![Fill::Beta]]);
    }

    #[test]
    fn staircase_example_condenses_to_same_type_and_weight() {
        let condensed = CondensedTableau::from_cells(
            shape("3,2,2/4"),
            [((1, 3), Fill::Alpha), ((2, 1), Fill::Alpha), ((3, 1), Fill::Beta), ((3, 2), Fill::Alpha)],
        )
        .unwrap();
        let stair = StaircaseTableau::from_condensed(&condensed).unwrap();
        assert_eq!(stair.validate(), Ok(()));
        assert_eq!(stair.type_word().to_string(), "0101100");
        assert_eq!(stair.weight(), BivarPoly::monomial(1, 6, 5));
        let back = stair.to_condensed().unwrap();
        assert_eq!(back, condensed);
        assert_eq!(back.weight(), stair.weight());
    }

    #[test]
    fn single_alpha_staircase() {
        let s = StaircaseTableau::new(vec![vec![Fill::Alpha]]).unwrap();
        let t = s.to_condensed().unwrap();
        assert_eq!(t.shape(), &shape("0/0"));
        assert_eq!(t.weight(), BivarPoly::alpha());
    }

    #[test]
    fn condensing_is_a_weight_and_type_preserving_bijection() {
        for n in 1..=6 {
            let stairs = enumerate_staircase(n).unwrap();
            let mut images: Vec<CondensedTableau> = Vec::new();
            for s in &stairs {
                let t = s.to_condensed().unwrap();
                assert!(t.is_valid());
                assert_eq!(t.weight(), s.weight());
                assert_eq!(t.type_word(), s.type_word());
                assert_eq!(&StaircaseTableau::from_condensed(&t).unwrap(), s);
                images.push(t);
            }
            let mut all: Vec<CondensedTableau> =
                Shape::all_with_semi_perimeter(n).iter().flat_map(enumerate).collect();
            let key = |t: &CondensedTableau| (t.shape().clone(), t.canonical_key());
            images.sort_by_key(key);
            all.sort_by_key(key);
            assert_eq!(images, all, "n={n}");
        }
    }

    #[test]
    fn invalid_staircase_is_rejected() {
        let s = StaircaseTableau::new(vec![vec![Fill::Empty, Fill::Alpha], vec![Fill::Empty]]).unwrap();
        assert_eq!(s.validate().unwrap_err().rule, Rule::DiagonalFilled);
        assert!(s.to_condensed().is_err());
    }

    #[test]
    fn json_round_trip() {
        let t = condensed_example();
        let v = t.to_json();
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"shape":"3,2,2,0,0/4","cells":[{"r":1,"c":3,"s":"a"},{"r":2,"c":1,"s":"a"},{"r":3,"c":1,"s":"b"},{"r":3,"c":2,"s":"a"}]}"#
        );
        let back: CondensedTableau = serde_json::from_value(v).unwrap();
        assert_eq!(back, t);
    }
}
