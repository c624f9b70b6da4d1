//! Partitions inside a bounding rectangle, TASEP state words, and the
//! boundary lattice path that links them.
//!
//! A state word of length `n` with `k` particles corresponds to the partition
//! whose `i`-th part counts the holes to the right of the `i`-th particle,
//! sitting in a `k × (n−k)` rectangle. Zero parts (trailing particles) and
//! empty leading columns (leading holes) are both kept: the rectangle carries
//! weight.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::BivarPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Site {
    Hole,
    Particle,
}

impl Site {
    pub fn as_char(self) -> char {
        match self {
            Site::Particle => '1',
            Site::Hole => '0',
        }
    }
}

/// A TASEP configuration, site 1 first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TasepState {
    sites: Vec<Site>,
}

impl TasepState {
    pub fn new(sites: Vec<Site>) -> Self {
        Self { sites }
    }

    /// Decodes the integer index used by the Markov-chain solver: site 1 is
    /// the most significant of `n` bits, so numeric order matches the order
    /// of the `'0'/'1'` strings.
    pub fn from_index(n: usize, index: usize) -> Self {
        let sites = (0..n)
            .map(|i| {
                if (index >> (n - 1 - i)) & 1 == 1 {
                    Site::Particle
                } else {
                    Site::Hole
                }
            })
            .collect();
        Self { sites }
    }

    pub fn index(&self) -> usize {
        self.sites
            .iter()
            .fold(0, |acc, s| (acc << 1) | usize::from(*s == Site::Particle))
    }

    /// All `2^n` states in index order.
    pub fn all(n: usize) -> impl Iterator<Item = TasepState> {
        (0..1usize << n).map(move |i| TasepState::from_index(n, i))
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    pub fn sites(&self) -> &[Site] {
        &self.sites
    }

    pub fn particles(&self) -> usize {
        self.sites.iter().filter(|s| **s == Site::Particle).count()
    }

    /// 1-based positions of the particles, increasing.
    pub fn particle_positions(&self) -> Vec<usize> {
        self.sites
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Site::Particle)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

impl fmt::Display for TasepState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.sites {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for TasepState {
    type Err = Error;

    /// Accepts `'1'`/`'0'` as well as `•`/`◦`.
    fn from_str(s: &str) -> Result<Self> {
        let mut sites = Vec::with_capacity(s.len());
        for (pos, c) in s.char_indices() {
            sites.push(match c {
                '1' | '•' => Site::Particle,
                '0' | '◦' => Site::Hole,
                other => return Err(Error::parse(pos, format!("unexpected {other:?} in state word"))),
            });
        }
        Ok(Self { sites })
    }
}

impl Serialize for TasepState {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TasepState {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A partition `λ_1 ≥ … ≥ λ_k ≥ 0` inside a `k × cols` rectangle.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape {
    parts: Vec<usize>,
    cols: usize,
}

impl Shape {
    pub fn new(parts: Vec<usize>, cols: usize) -> Result<Self> {
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!(
                "parts must be weakly decreasing, found {} before {}",
                w[0], w[1]
            )));
        }
        if let Some(&first) = parts.first() {
            if first > cols {
                return Err(Error::InvalidShape(format!(
                    "first part {first} exceeds the rectangle width {cols}"
                )));
            }
        }
        Ok(Self { parts, cols })
    }

    pub fn empty(cols: usize) -> Self {
        Self { parts: Vec::new(), cols }
    }

    /// The full `rows × cols` rectangle.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        Self {
            parts: vec![cols; rows],
            cols,
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of rows `k`, zero rows included.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// `n = k + cols`.
    pub fn semi_perimeter(&self) -> usize {
        self.rows() + self.cols
    }

    /// Length of row `r` (1-based); rows beyond `k` have length 0.
    pub fn part(&self, r: usize) -> usize {
        r.checked_sub(1).and_then(|i| self.parts.get(i)).copied().unwrap_or(0)
    }

    /// Height of column `c` (1-based): the number of rows reaching it.
    pub fn column_height(&self, c: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= c).count()
    }

    pub fn contains(&self, r: usize, c: usize) -> bool {
        r >= 1 && c >= 1 && c <= self.part(r)
    }

    pub fn num_cells(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Every shape whose rectangle has the given semi-perimeter, in the
    /// index order of the corresponding state words.
    pub fn all_with_semi_perimeter(n: usize) -> Vec<Shape> {
        TasepState::all(n).map(|t| state_to_shape(&t)).collect()
    }

    /// Every shape inside the `rows × cols` rectangle.
    pub fn all_in_rectangle(rows: usize, cols: usize) -> Vec<Shape> {
        fn rec(rows: usize, max: usize, prefix: &mut Vec<usize>, cols: usize, out: &mut Vec<Shape>) {
            if prefix.len() == rows {
                out.push(Shape {
                    parts: prefix.clone(),
                    cols,
                });
                return;
            }
            for p in (0..=max).rev() {
                prefix.push(p);
                rec(rows, p, prefix, cols, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(rows, cols, &mut Vec::new(), cols, &mut out);
        out
    }

    /// The suffix shape `(λ_{s+1}, …, λ_k)` in the same rectangle width.
    pub fn suffix(&self, s: usize) -> Shape {
        Shape {
            parts: self.parts[s.min(self.parts.len())..].to_vec(),
            cols: self.cols,
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}/{}", parts.join(","), self.cols)
    }
}

impl FromStr for Shape {
    type Err = Error;

    /// `"3,2,2,0,0/4"`; `"/3"` is the empty shape of width 3.
    fn from_str(s: &str) -> Result<Self> {
        let (parts_text, cols_text) = s
            .split_once('/')
            .ok_or_else(|| Error::parse(s.len(), "expected parts/cols"))?;
        let slash = parts_text.len();
        let cols = cols_text
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::parse(slash + 1, format!("bad column count {cols_text:?}")))?;
        let mut parts = Vec::new();
        if !parts_text.trim().is_empty() {
            let mut offset = 0;
            for piece in parts_text.split(',') {
                let value = piece
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(offset, format!("bad part {piece:?}")))?;
                parts.push(value);
                offset += piece.len() + 1;
            }
        }
        Shape::new(parts, cols)
    }
}

impl Serialize for Shape {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Shape {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    South,
    West,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::South => 'S',
            Step::West => 'W',
        }
    }
}

/// The southeast border of a shape, read from the northeast corner of its
/// rectangle to the southwest corner.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundaryPath {
    steps: Vec<Step>,
}

impl BoundaryPath {
    pub fn steps(&self) -> &[Step] {
        &self.steps
    }
}

impl fmt::Display for BoundaryPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

pub fn state_to_shape(state: &TasepState) -> Shape {
    let mut holes_right = state.sites().iter().filter(|s| **s == Site::Hole).count();
    let cols = holes_right;
    let mut parts = Vec::with_capacity(state.particles());
    for s in state.sites() {
        match s {
            Site::Hole => holes_right -= 1,
            Site::Particle => parts.push(holes_right),
        }
    }
    Shape { parts, cols }
}

pub fn shape_to_state(shape: &Shape) -> TasepState {
    let sites = boundary_path(shape)
        .steps
        .into_iter()
        .map(|s| match s {
            Step::South => Site::Particle,
            Step::West => Site::Hole,
        })
        .collect();
    TasepState { sites }
}

pub fn boundary_path(shape: &Shape) -> BoundaryPath {
    let mut steps = Vec::with_capacity(shape.semi_perimeter());
    let mut x = shape.cols();
    for &p in shape.parts() {
        steps.extend(std::iter::repeat_n(Step::West, x - p));
        steps.push(Step::South);
        x = p;
    }
    steps.extend(std::iter::repeat_n(Step::West, x));
    BoundaryPath { steps }
}

/// `α^k β^cols`, the weight carried by the boundary path.
pub fn boundary_weight(shape: &Shape) -> BivarPoly {
    BivarPoly::monomial(1, shape.rows() as u32, shape.cols() as u32)
}
