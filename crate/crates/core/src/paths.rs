//! Weighted lattice paths inside a Young diagram and their bijection with
//! condensed tableaux.
//!
//! Lattice points are `(x, y)` with `x = 0..=cols` counted from the west
//! edge and `y = 0..=k` counted from the top. A path runs from `(cols, 0)` to
//! `(0, k)` with unit south and west steps, and is determined by the columns
//! `x_1 >= x_2 >= ... >= x_k` of its south steps. It stays inside the diagram
//! when `x_r <= λ_r` for every `r`.
//!
//! Labels: a south step at `x > 0` carries `β`, one on the west edge
//! carries 1. A west step along line `y` crossing column `c` carries `α`
//! when the box `(y + 1, c)` belongs to the diagram, 1 otherwise.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poly::BivarPoly;
use crate::shapes::{boundary_weight, Shape, Step};
use crate::tableaux::{CondensedTableau, Fill};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    One,
    Alpha,
    Beta,
}

impl Label {
    pub fn as_char(self) -> char {
        match self {
            Label::One => '1',
            Label::Alpha => 'a',
            Label::Beta => 'b',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedPath {
    shape: Shape,
    south_columns: Vec<usize>,
}

/// True when the south-step columns are weakly decreasing and every `x_r`
/// is at most `λ_r`.
pub fn satisfies_rule_one(shape: &Shape, south_columns: &[usize]) -> bool {
    south_columns.len() == shape.rows()
        && south_columns.windows(2).all(|w| w[0] >= w[1])
        && south_columns.iter().enumerate().all(|(r, &x)| x <= shape.part(r + 1))
}

impl WeightedPath {
    pub fn new(shape: Shape, south_columns: Vec<usize>) -> Result<Self> {
        if south_columns.len() != shape.rows() {
            return Err(Error::InvalidPath(format!(
                "expected {} south steps, got {}",
                shape.rows(),
                south_columns.len()
            )));
        }
        if !satisfies_rule_one(&shape, &south_columns) {
            return Err(Error::InvalidPath(format!(
                "south steps at columns {south_columns:?} leave {shape}"
            )));
        }
        Ok(Self { shape, south_columns })
    }

    /// Builds the path from a step word and checks that it starts at the
    /// north-east corner, ends at the south-west corner and stays inside.
    pub fn from_steps(shape: Shape, steps: &[Step]) -> Result<Self> {
        let mut x = shape.cols();
        let mut south = Vec::new();
        for (i, step) in steps.iter().enumerate() {
            match step {
                Step::South => south.push(x),
                Step::West => {
                    x = x.checked_sub(1).ok_or_else(|| {
                        Error::InvalidPath(format!("step {} leaves the diagram on the west", i + 1))
                    })?
                }
            }
        }
        if x != 0 || south.len() != shape.rows() {
            return Err(Error::InvalidPath(format!(
                "path must take {} south and {} west steps",
                shape.rows(),
                shape.cols()
            )));
        }
        Self::new(shape, south)
    }

    /// Like [`WeightedPath::from_steps`] but also checks a supplied labelling
    /// against the one the diagram forces.
    pub fn with_labels(shape: Shape, labelled: &[(Step, Label)]) -> Result<Self> {
        let steps: Vec<Step> = labelled.iter().map(|(s, _)| *s).collect();
        let path = Self::from_steps(shape, &steps)?;
        for (i, (expected, given)) in path.labelled_steps().iter().zip(labelled).enumerate() {
            if expected.1 != given.1 {
                return Err(Error::InvalidPath(format!(
                    "step {} is labelled {} but must carry {}",
                    i + 1,
                    given.1.as_char(),
                    expected.1.as_char()
                )));
            }
        }
        Ok(path)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn south_columns(&self) -> &[usize] {
        &self.south_columns
    }

    pub fn steps(&self) -> Vec<Step> {
        self.labelled_steps().into_iter().map(|(s, _)| s).collect()
    }

    pub fn labelled_steps(&self) -> Vec<(Step, Label)> {
        let mut out = Vec::with_capacity(self.shape.semi_perimeter());
        let mut x = self.shape.cols();
        let walk_west_to = |target: usize, y: usize, x: &mut usize, out: &mut Vec<(Step, Label)>| {
            while *x > target {
                let label = if *x <= self.shape.part(y + 1) {
                    Label::Alpha
                } else {
                    Label::One
                };
                out.push((Step::West, label));
                *x -= 1;
            }
        };
        for (y, &xs) in self.south_columns.iter().enumerate() {
            walk_west_to(xs, y, &mut x, &mut out);
            out.push((Step::South, if xs > 0 { Label::Beta } else { Label::One }));
        }
        walk_west_to(0, self.shape.rows(), &mut x, &mut out);
        out
    }

    /// `(#α, #β)` among the labels.
    pub fn label_counts(&self) -> (u32, u32) {
        self.labelled_steps().iter().fold((0, 0), |(a, b), (_, l)| match l {
            Label::Alpha => (a + 1, b),
            Label::Beta => (a, b + 1),
            Label::One => (a, b),
        })
    }

    /// Product of the labels.
    pub fn weight(&self) -> BivarPoly {
        let (a, b) = self.label_counts();
        BivarPoly::monomial(1, a, b)
    }

    pub fn step_word(&self) -> String {
        self.steps().iter().map(|s| s.as_char()).collect()
    }

    pub fn label_word(&self) -> String {
        self.labelled_steps().iter().map(|(_, l)| l.as_char()).collect()
    }
}

impl fmt::Display for WeightedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.step_word(), self.shape)
    }
}

impl FromStr for WeightedPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (word, shape) = s
            .split_once('@')
            .ok_or_else(|| Error::parse(0, "expected STEPS@SHAPE"))?;
        let shape: Shape = shape.trim().parse()?;
        let steps = word
            .trim()
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                'S' | 's' => Ok(Step::South),
                'W' | 'w' => Ok(Step::West),
                other => Err(Error::parse(i, format!("unexpected step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_steps(shape, &steps)
    }
}

/// Every path inside `shape`, in lexicographic order of step words with
/// `S < W`.
pub fn enumerate_paths(shape: &Shape) -> Vec<WeightedPath> {
    fn go(shape: &Shape, x: usize, current: &mut Vec<usize>, out: &mut Vec<WeightedPath>) {
        let y = current.len();
        if y == shape.rows() {
            // Only west steps remain.
            out.push(WeightedPath {
                shape: shape.clone(),
                south_columns: current.clone(),
            });
            return;
        }
        if x <= shape.part(y + 1) {
            current.push(x);
            go(shape, x, current, out);
            current.pop();
        }
        if x > 0 {
            go(shape, x - 1, current, out);
        }
    }
    let mut out = Vec::new();
    go(shape, shape.cols(), &mut Vec::new(), &mut out);
    out
}

/// `α^k β^cols · Σ weight(P)` over the paths inside `shape`.
pub fn weight_sum(shape: &Shape) -> BivarPoly {
    let total: BivarPoly = enumerate_paths(shape).iter().map(WeightedPath::weight).sum();
    &boundary_weight(shape) * &total
}

/// Number of `β`s each column of `t` holds, indexed by column `1..=cols`
/// (entry 0 unused).
fn betas_per_column(t: &CondensedTableau) -> Vec<usize> {
    let shape = t.shape();
    let mut out = vec![0; shape.cols() + 1];
    for (c, slot) in out.iter_mut().enumerate().skip(1) {
        *slot = (1..=shape.column_height(c))
            .filter(|&r| t.get(r, c) == Some(Fill::Beta))
            .count();
    }
    out
}

/// The path whose south steps sit at column `c` once per `β` in column `c`
/// of the tableau; the remaining south steps run down the west edge.
pub fn tableau_to_path(t: &CondensedTableau) -> Result<WeightedPath> {
    if let Err(v) = t.validate() {
        return Err(Error::InvalidTableau(format!("{v}")));
    }
    let per_col = betas_per_column(t);
    let shape = t.shape().clone();
    let mut south = Vec::with_capacity(shape.rows());
    for c in (1..=shape.cols()).rev() {
        south.extend(std::iter::repeat_n(c, per_col[c]));
    }
    south.resize(shape.rows(), 0);
    WeightedPath::new(shape, south)
}

/// Inverse of [`tableau_to_path`].
///
/// Columns are refilled right to left. The rows still free in column `c`
/// are those with no `β` further east; the lowest `t_c` of them receive `β`
/// and, if any free row is left, the next one up receives `α`.
pub fn path_to_tableau(path: &WeightedPath) -> Result<CondensedTableau> {
    let shape = path.shape().clone();
    let mut per_col = vec![0usize; shape.cols() + 1];
    for &x in path.south_columns() {
        per_col[x] += 1;
    }
    let mut cells = Vec::new();
    let mut free: Vec<usize> = Vec::new();
    let mut prev_height = 0;
    for c in (1..=shape.cols()).rev() {
        let h = shape.column_height(c);
        free.extend(prev_height + 1..=h);
        prev_height = h;
        let t = per_col[c];
        if t > free.len() {
            return Err(Error::InvalidPath(format!(
                "column {c} has {t} south steps but only {} free rows",
                free.len()
            )));
        }
        for r in free.drain(free.len() - t..) {
            cells.push(((r, c), Fill::Beta));
        }
        if let Some(&r) = free.last() {
            cells.push(((r, c), Fill::Alpha));
        }
    }
    let t = CondensedTableau::from_cells(shape, cells)?;
    if let Err(v) = t.validate() {
        return Err(Error::Arithmetic(format!("reconstructed tableau is invalid: {v}")));
    }
    Ok(t)
}

/// The intermediate filling in which every column's `β`s are stacked right
/// under those of the columns to its east, and its `α` (if any) drops to the
/// bottom box of the column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModifiedTableau {
    shape: Shape,
    rows: Vec<Vec<Fill>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModifiedProperty {
    /// at most one `β` in each row
    OneBetaPerRow,
    /// rows holding a `β` are `1..=m` for some `m`
    BetaRowsFromTop,
    /// no `β` strictly south-east of another
    NoBetaSouthEast,
    /// no `α` west of a `β` in the same row
    NoAlphaWestOfBeta,
    /// bottom boxes hold `α` exactly when not blocked; no other `α`
    AlphaInUnblockedBottoms,
}

impl fmt::Display for ModifiedProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModifiedProperty::OneBetaPerRow => "at most one beta per row",
            ModifiedProperty::BetaRowsFromTop => "beta rows are consecutive from the top",
            ModifiedProperty::NoBetaSouthEast => "no beta south-east of another beta",
            ModifiedProperty::NoAlphaWestOfBeta => "no alpha west of a beta in its row",
            ModifiedProperty::AlphaInUnblockedBottoms => "alphas sit exactly in the unblocked bottom boxes",
        })
    }
}

impl ModifiedTableau {
    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Fill>] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> Option<Fill> {
        self.rows.get(r.checked_sub(1)?)?.get(c.checked_sub(1)?).copied()
    }

    /// Boxes of column `c` strictly below its lowest `β` and above its `α`
    /// row inclusive, i.e. `h_c − #{β in columns >= c}` (zero when negative).
    pub fn boxes_below_betas(&self, c: usize) -> usize {
        let betas: usize = (c..=self.shape.cols())
            .map(|cc| self.column(cc).iter().filter(|f| **f == Fill::Beta).count())
            .sum();
        self.shape.column_height(c).saturating_sub(betas)
    }

    fn column(&self, c: usize) -> Vec<Fill> {
        (1..=self.shape.column_height(c)).map(|r| self.rows[r - 1][c - 1]).collect()
    }

    fn betas(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            for (c, f) in row.iter().enumerate() {
                if *f == Fill::Beta {
                    out.push((r + 1, c + 1));
                }
            }
        }
        out
    }

    pub fn check_properties(&self) -> std::result::Result<(), ModifiedProperty> {
        let betas = self.betas();
        for row in &self.rows {
            if row.iter().filter(|f| **f == Fill::Beta).count() > 1 {
                return Err(ModifiedProperty::OneBetaPerRow);
            }
        }
        let mut beta_rows: Vec<usize> = betas.iter().map(|b| b.0).collect();
        beta_rows.sort_unstable();
        if beta_rows.iter().enumerate().any(|(i, &r)| r != i + 1) {
            return Err(ModifiedProperty::BetaRowsFromTop);
        }
        for &(r1, c1) in &betas {
            if betas.iter().any(|&(r2, c2)| r2 > r1 && c2 > c1) {
                return Err(ModifiedProperty::NoBetaSouthEast);
            }
        }
        for row in &self.rows {
            if let Some(b) = row.iter().position(|f| *f == Fill::Beta) {
                if row[..b].contains(&Fill::Alpha) {
                    return Err(ModifiedProperty::NoAlphaWestOfBeta);
                }
            }
        }
        for c in 1..=self.shape.cols() {
            let h = self.shape.column_height(c);
            for r in 1..=h {
                let cell = self.rows[r - 1][c - 1];
                let blocked = cell == Fill::Beta || self.rows[r - 1][c..].contains(&Fill::Beta);
                let want_alpha = r == h && !blocked;
                if (cell == Fill::Alpha) != want_alpha {
                    return Err(ModifiedProperty::AlphaInUnblockedBottoms);
                }
            }
        }
        Ok(())
    }

    /// The path traced along the lower edges of the `β` staircase.
    pub fn to_path(&self) -> Result<WeightedPath> {
        let mut south = Vec::with_capacity(self.shape.rows());
        for c in (1..=self.shape.cols()).rev() {
            let betas = self.column(c).iter().filter(|f| **f == Fill::Beta).count();
            south.extend(std::iter::repeat_n(c, betas));
        }
        south.resize(self.shape.rows(), 0);
        WeightedPath::new(self.shape.clone(), south)
    }
}

impl fmt::Display for ModifiedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.shape)?;
        for row in &self.rows {
            let line: String = row.iter().map(|c| c.as_char()).collect();
            writeln!(f, "|{line}")?;
        }
        Ok(())
    }
}

pub fn tableau_to_modified(t: &CondensedTableau) -> Result<ModifiedTableau> {
    if let Err(v) = t.validate() {
        return Err(Error::InvalidTableau(format!("{v}")));
    }
    let shape = t.shape().clone();
    let per_col = betas_per_column(t);
    let mut rows: Vec<Vec<Fill>> = shape.parts().iter().map(|&p| vec![Fill::Empty; p]).collect();
    let mut above = 0;
    for c in (1..=shape.cols()).rev() {
        let h = shape.column_height(c);
        for r in above + 1..=above + per_col[c] {
            rows[r - 1][c - 1] = Fill::Beta;
        }
        above += per_col[c];
        if h > above {
            rows[h - 1][c - 1] = Fill::Alpha;
        }
    }
    Ok(ModifiedTableau { shape, rows })
}
