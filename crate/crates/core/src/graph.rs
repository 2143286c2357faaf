//! Paths, cycles and their lexicographic product `G1 ∘ G2`.
//!
//! The product is never materialised. A vertex is a `(column, row)` pair where
//! the column indexes the copy of `G2` (1-based, following `G2_1 .. G2_n`) and
//! the row is the position of the vertex along the path or cycle `G2`
//! (0-based). Two vertices are adjacent iff their columns are adjacent in `G1`,
//! or they share a column and their rows are adjacent in `G2`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `G2` order for which rows fit in a `u64` column mask.
pub const MAX_MASK_ROWS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FactorKind {
    Path,
    Cycle,
}

impl FactorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FactorKind::Path => "path",
            FactorKind::Cycle => "cycle",
        }
    }

    /// Single-letter tag used in combo names (`PC`, `CC`, ...).
    pub fn letter(self) -> char {
        match self {
            FactorKind::Path => 'P',
            FactorKind::Cycle => 'C',
        }
    }
}

impl fmt::Display for FactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FactorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "path" | "p" => Ok(FactorKind::Path),
            "cycle" | "c" => Ok(FactorKind::Cycle),
            other => Err(Error::invalid(format!("unknown factor kind `{other}`"))),
        }
    }
}

/// A path `P_k` (k ≥ 2) or a cycle `C_k` (k ≥ 3).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFactor")]
pub struct FactorSpec {
    kind: FactorKind,
    order: usize,
}

#[derive(Deserialize)]
struct RawFactor {
    kind: FactorKind,
    order: usize,
}

impl TryFrom<RawFactor> for FactorSpec {
    type Error = Error;

    fn try_from(raw: RawFactor) -> Result<Self> {
        FactorSpec::new(raw.kind, raw.order)
    }
}

impl FactorSpec {
    pub fn new(kind: FactorKind, order: usize) -> Result<Self> {
        let min = match kind {
            FactorKind::Path => 2,
            FactorKind::Cycle => 3,
        };
        if order < min {
            return Err(Error::invalid(format!(
                "{kind} order must be at least {min}, got {order}"
            )));
        }
        Ok(FactorSpec { kind, order })
    }

    pub fn path(order: usize) -> Result<Self> {
        Self::new(FactorKind::Path, order)
    }

    pub fn cycle(order: usize) -> Result<Self> {
        Self::new(FactorKind::Cycle, order)
    }

    pub fn kind(&self) -> FactorKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Neighbours of vertex `index` (0-based) inside the factor.
    pub fn neighbors0(&self, index: usize) -> Vec<usize> {
        let k = self.order;
        match self.kind {
            FactorKind::Path => {
                let mut out = Vec::with_capacity(2);
                if index > 0 {
                    out.push(index - 1);
                }
                if index + 1 < k {
                    out.push(index + 1);
                }
                out
            }
            FactorKind::Cycle => {
                let mut out = vec![(index + k - 1) % k, (index + 1) % k];
                out.sort_unstable();
                out
            }
        }
    }

    pub fn degree0(&self, index: usize) -> usize {
        match self.kind {
            FactorKind::Cycle => 2,
            FactorKind::Path => {
                if index == 0 || index + 1 == self.order {
                    1
                } else {
                    2
                }
            }
        }
    }

    /// Bitmask of the closed neighbourhood of row `index`; requires order ≤ 64.
    pub fn closed_row_mask(&self, index: usize) -> u64 {
        self.neighbors0(index)
            .into_iter()
            .fold(1u64 << index, |acc, j| acc | (1u64 << j))
    }

    pub fn full_mask(&self) -> u64 {
        if self.order >= 64 {
            u64::MAX
        } else {
            (1u64 << self.order) - 1
        }
    }
}

impl fmt::Display for FactorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.kind, self.order)
    }
}

/// Parses `path:20`, `cycle:15`, `P20`, `C15`.
impl FromStr for FactorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, order) = match s.split_once(':') {
            Some((k, o)) => (k.parse::<FactorKind>()?, o),
            None => {
                let mut chars = s.chars();
                let head = chars
                    .next()
                    .ok_or_else(|| Error::invalid("empty factor description"))?;
                (head.to_string().parse::<FactorKind>()?, chars.as_str())
            }
        };
        let order = order
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::invalid(format!("bad factor order in `{s}`")))?;
        FactorSpec::new(kind, order)
    }
}

/// The product `F = G1 ∘ G2` with `G1` the outer (column) factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawProduct")]
pub struct ProductSpec {
    g1: FactorSpec,
    g2: FactorSpec,
}

#[derive(Deserialize)]
struct RawProduct {
    g1: FactorSpec,
    g2: FactorSpec,
}

impl TryFrom<RawProduct> for ProductSpec {
    type Error = Error;

    fn try_from(raw: RawProduct) -> Result<Self> {
        ProductSpec::new(raw.g1, raw.g2)
    }
}

impl ProductSpec {
    /// `G2` must have order at least 3; `P_2` is complete and excluded.
    pub fn new(g1: FactorSpec, g2: FactorSpec) -> Result<Self> {
        if g2.order < 3 {
            return Err(Error::invalid(format!(
                "inner factor {g2} is complete; order must be at least 3"
            )));
        }
        Ok(ProductSpec { g1, g2 })
    }

    /// Shorthand for tests and examples: `ProductSpec::of(Path, 20, Cycle, 15)`.
    pub fn of(k1: FactorKind, n: usize, k2: FactorKind, m: usize) -> Result<Self> {
        Self::new(FactorSpec::new(k1, n)?, FactorSpec::new(k2, m)?)
    }

    pub fn g1(&self) -> FactorSpec {
        self.g1
    }

    pub fn g2(&self) -> FactorSpec {
        self.g2
    }

    pub fn n(&self) -> usize {
        self.g1.order
    }

    pub fn m(&self) -> usize {
        self.g2.order
    }

    pub fn vertex_count(&self) -> usize {
        self.n() * self.m()
    }

    pub fn combo(&self) -> ComboKind {
        ComboKind {
            g1: self.g1.kind,
            g2: self.g2.kind,
        }
    }

    pub fn vertex(&self, column: usize, row: usize) -> Result<VertexId> {
        let v = VertexId { column, row };
        self.check_vertex(v)?;
        Ok(v)
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        self.check_column(v.column)?;
        if v.row >= self.m() {
            return Err(Error::invalid(format!(
                "row {} out of range 0..{}",
                v.row,
                self.m()
            )));
        }
        Ok(())
    }

    fn check_column(&self, column: usize) -> Result<()> {
        if column == 0 || column > self.n() {
            return Err(Error::invalid(format!(
                "column {column} out of range 1..={}",
                self.n()
            )));
        }
        Ok(())
    }

    /// Columns adjacent to `column` in `G1` (1-based, sorted).
    pub fn g1_neighbors(&self, column: usize) -> Result<Vec<usize>> {
        self.check_column(column)?;
        Ok(self
            .g1
            .neighbors0(column - 1)
            .into_iter()
            .map(|c| c + 1)
            .collect())
    }

    /// Number of `G1`-neighbours of `column`; 1 at path ends, 2 elsewhere.
    pub(crate) fn adjacent_column_count(&self, column: usize) -> usize {
        self.g1.degree0(column - 1)
    }

    /// `N[v]`: `v`, every vertex of the adjacent columns, and the in-column neighbours.
    pub fn closed_neighborhood(&self, v: VertexId) -> Result<Vec<VertexId>> {
        self.check_vertex(v)?;
        let m = self.m();
        let mut out = Vec::new();
        for c in self.g1_neighbors(v.column)? {
            out.extend((0..m).map(|row| VertexId { column: c, row }));
        }
        out.push(v);
        out.extend(
            self.g2
                .neighbors0(v.row)
                .into_iter()
                .map(|row| VertexId { column: v.column, row }),
        );
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adjacent_column_count(v.column) * self.m() + self.g2.degree0(v.row))
    }
}

/// `P20∘C15`; `x` or `*` may stand in for `∘`.
impl FromStr for ProductSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once('∘')
            .or_else(|| s.split_once(['x', '*']))
            .ok_or_else(|| Error::invalid(format!("expected G1∘G2, got `{s}`")))?;
        ProductSpec::new(a.parse()?, b.parse()?)
    }
}

impl fmt::Display for ProductSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}∘{}{}",
            self.g1.kind.letter(),
            self.n(),
            self.g2.kind.letter(),
            self.m()
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexId {
    pub column: usize,
    pub row: usize,
}

/// The four product classes `PC`, `CC`, `PP`, `CP` (outer letter first).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ComboKind {
    pub g1: FactorKind,
    pub g2: FactorKind,
}

impl ComboKind {
    pub const PC: ComboKind = ComboKind { g1: FactorKind::Path, g2: FactorKind::Cycle };
    pub const CC: ComboKind = ComboKind { g1: FactorKind::Cycle, g2: FactorKind::Cycle };
    pub const PP: ComboKind = ComboKind { g1: FactorKind::Path, g2: FactorKind::Path };
    pub const CP: ComboKind = ComboKind { g1: FactorKind::Cycle, g2: FactorKind::Path };

    pub const ALL: [ComboKind; 4] = [Self::PC, Self::CC, Self::PP, Self::CP];
}

impl fmt::Display for ComboKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.g1.letter(), self.g2.letter())
    }
}
