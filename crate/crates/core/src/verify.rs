//! Defence, domination and alliance checks on column-encoded vertex sets,
//! plus the spectrum of an alliance.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{FactorKind, ProductSpec, VertexId, MAX_MASK_ROWS};
use crate::parts::PartSequence;

/// A vertex set `S` of `G1 ∘ G2`, one row bitmask per column.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColumnSet {
    spec: ProductSpec,
    masks: Vec<u64>,
}

impl ColumnSet {
    pub fn empty(spec: ProductSpec) -> Result<Self> {
        if spec.m() > MAX_MASK_ROWS {
            return Err(Error::unsupported(format!(
                "column sets support G2 order up to {MAX_MASK_ROWS}"
            )));
        }
        Ok(ColumnSet {
            spec,
            masks: vec![0; spec.n()],
        })
    }

    pub fn full(spec: ProductSpec) -> Result<Self> {
        let mut s = Self::empty(spec)?;
        let full = spec.g2().full_mask();
        s.masks.iter_mut().for_each(|m| *m = full);
        Ok(s)
    }

    pub fn from_masks(spec: ProductSpec, masks: Vec<u64>) -> Result<Self> {
        let mut s = Self::empty(spec)?;
        if masks.len() != spec.n() {
            return Err(Error::invalid(format!(
                "expected {} column masks, got {}",
                spec.n(),
                masks.len()
            )));
        }
        let full = spec.g2().full_mask();
        if let Some(bad) = masks.iter().position(|&m| m & !full != 0) {
            return Err(Error::invalid(format!(
                "mask of column {} uses rows beyond {}",
                bad + 1,
                spec.m()
            )));
        }
        s.masks = masks;
        Ok(s)
    }

    pub fn spec(&self) -> ProductSpec {
        self.spec
    }

    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    /// Mask of column `column` (1-based).
    pub fn mask(&self, column: usize) -> u64 {
        self.masks[column - 1]
    }

    pub fn set_mask(&mut self, column: usize, mask: u64) {
        self.masks[column - 1] = mask & self.spec.g2().full_mask();
    }

    pub fn fill_column(&mut self, column: usize) {
        self.set_mask(column, self.spec.g2().full_mask());
    }

    pub fn insert(&mut self, v: VertexId) -> Result<()> {
        self.spec.check_vertex(v)?;
        self.masks[v.column - 1] |= 1 << v.row;
        Ok(())
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.column >= 1
            && v.column <= self.masks.len()
            && v.row < self.spec.m()
            && self.masks[v.column - 1] >> v.row & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.masks.iter().map(|m| m.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.iter().all(|&m| m == 0)
    }

    pub fn members(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.masks.iter().enumerate().flat_map(|(i, &mask)| {
            (0..64)
                .filter(move |r| mask >> r & 1 == 1)
                .map(move |row| VertexId { column: i + 1, row })
        })
    }
}

/// Per-row data of `G2` needed by the column-local alliance test.
#[derive(Debug, Clone)]
pub(crate) struct RowRules {
    pub m: usize,
    pub closed: Vec<u64>,
    pub degree: Vec<usize>,
}

impl RowRules {
    pub fn new(spec: &ProductSpec) -> Self {
        let g2 = spec.g2();
        RowRules {
            m: g2.order(),
            closed: (0..g2.order()).map(|j| g2.closed_row_mask(j)).collect(),
            degree: (0..g2.order()).map(|j| g2.degree0(j)).collect(),
        }
    }

    /// Smallest total cardinality the adjacent columns must provide so that
    /// every member of `mask` is defended and the column is dominated, when the
    /// column has `adjacent` neighbouring columns.
    pub fn requirement(&self, mask: u64, adjacent: usize) -> usize {
        if mask == 0 {
            return 1;
        }
        let mut need = 0usize;
        let mut dominated = mask;
        let mut bits = mask;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            dominated |= self.closed[j];
            let closed_size = 1 + self.degree[j] + adjacent * self.m;
            let inside = (self.closed[j] & mask).count_ones() as usize;
            // 2 * (inside + from_adjacent) >= closed_size
            let want = closed_size.div_ceil(2);
            need = need.max(want.saturating_sub(inside));
        }
        let full = if self.m >= 64 { u64::MAX } else { (1u64 << self.m) - 1 };
        if dominated != full {
            need = need.max(1);
        }
        need
    }
}

/// Column-arithmetic alliance test shared by the brute-force oracle.
pub(crate) fn masks_are_gda(spec: &ProductSpec, rules: &RowRules, masks: &[u64]) -> bool {
    if masks.iter().all(|&m| m == 0) {
        return false;
    }
    let n = spec.n();
    let count = |c: usize| masks[c].count_ones() as usize;
    for i in 0..n {
        let (adjacent, from_adjacent) = match spec.g1().kind() {
            FactorKind::Path => {
                let mut a = 0;
                let mut s = 0;
                if i > 0 {
                    a += 1;
                    s += count(i - 1);
                }
                if i + 1 < n {
                    a += 1;
                    s += count(i + 1);
                }
                (a, s)
            }
            FactorKind::Cycle => (2, count((i + n - 1) % n) + count((i + 1) % n)),
        };
        if from_adjacent < rules.requirement(masks[i], adjacent) {
            return false;
        }
    }
    true
}

/// Closed-neighbourhood majority test for a member `v` of `set`.
pub fn is_defended(set: &ColumnSet, v: VertexId) -> Result<bool> {
    let spec = set.spec();
    spec.check_vertex(v)?;
    if !set.contains(v) {
        return Err(Error::invalid(format!(
            "vertex {v:?} is not a member; defence is defined only for members"
        )));
    }
    let closed = spec.closed_neighborhood(v)?;
    let inside = closed.iter().filter(|u| set.contains(**u)).count();
    Ok(inside >= closed.len() - inside)
}

/// Nonempty, every member defended, every vertex in `S` or adjacent to it.
pub fn is_gda(set: &ColumnSet) -> bool {
    let spec = set.spec();
    masks_are_gda(&spec, &RowRules::new(&spec), set.masks())
}

/// Same predicate evaluated vertex by vertex from explicit neighbourhoods.
pub fn is_gda_by_definition(set: &ColumnSet) -> bool {
    if set.is_empty() {
        return false;
    }
    let spec = set.spec();
    for column in 1..=spec.n() {
        for row in 0..spec.m() {
            let v = VertexId { column, row };
            let closed = spec.closed_neighborhood(v).expect("in range");
            if set.contains(v) {
                let inside = closed.iter().filter(|u| set.contains(**u)).count();
                if inside < closed.len() - inside {
                    return false;
                }
            } else if !closed.iter().any(|u| set.contains(*u)) {
                return false;
            }
        }
    }
    true
}

/// `(s_1, ..., s_n)`.
pub fn column_profile(set: &ColumnSet) -> Vec<usize> {
    set.masks().iter().map(|m| m.count_ones() as usize).collect()
}

/// Sum of parts is `n`, first part at least 2, every later part at least 3.
pub fn is_feasible(w: &PartSequence, n: usize) -> bool {
    let parts = w.parts();
    !parts.is_empty()
        && parts[0] >= 2
        && parts[1..].iter().all(|&k| k >= 3)
        && w.total() == n
}

/// Cuts a column profile read left to right into sections.
///
/// The first empty column at position `i ≥ 3` closes the current section; the
/// section keeps that column when the next one is empty too. Without such a
/// column the remainder is one section.
fn cut_profile(profile: &[usize]) -> Vec<usize> {
    let mut parts = Vec::new();
    let mut rest = profile;
    while !rest.is_empty() {
        let len = rest.len();
        match (3..len).find(|&i| rest[i - 1] == 0) {
            None => {
                parts.push(len);
                break;
            }
            Some(i) => {
                let k = if rest[i] == 0 { i } else { i - 1 };
                parts.push(k);
                rest = &rest[k..];
            }
        }
    }
    parts
}

/// Spectrum of a GDA.
///
/// For a cycle `G1` every rotation that puts an empty column last is cut; the
/// lexicographically smallest feasible result is reported (or the smallest
/// result if none is feasible).
pub fn spectrum(set: &ColumnSet) -> Result<PartSequence> {
    if !is_gda(set) {
        return Err(Error::Precondition(
            "spectrum is defined only for global defensive alliances".into(),
        ));
    }
    let profile = column_profile(set);
    let n = profile.len();
    let parts = match set.spec().g1().kind() {
        FactorKind::Path => cut_profile(&profile),
        FactorKind::Cycle => {
            let mut candidates: Vec<Vec<usize>> = (0..n)
                .filter(|&r| profile[(r + n - 1) % n] == 0)
                .map(|r| {
                    let rotated: Vec<usize> = (0..n).map(|k| profile[(k + r) % n]).collect();
                    cut_profile(&rotated)
                })
                .collect();
            if candidates.is_empty() {
                vec![n]
            } else {
                candidates.sort();
                candidates.dedup();
                let feasible = candidates.iter().find(|p| {
                    p[0] >= 2 && p[1..].iter().all(|&k| k >= 3)
                });
                feasible.unwrap_or(&candidates[0]).clone()
            }
        }
    };
    PartSequence::new(parts)
}
