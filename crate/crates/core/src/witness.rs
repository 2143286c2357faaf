//! Explicit alliances: the section recipe for a feasible sequence and the
//! small-order constructions for `n ≤ 7`.

use crate::error::{Error, Result};
use crate::graph::{FactorKind, ProductSpec};
use crate::parts::PartSequence;
use crate::verify::{is_feasible, is_gda, ColumnSet};

/// A GDA whose spectrum is `w`.
///
/// Each section of length `k ≥ 4` gets its interior columns filled; a section
/// of length 3 gets its last two columns; a leading section of length 2 gets
/// both.
pub fn witness_from_sequence(spec: ProductSpec, w: &PartSequence) -> Result<ColumnSet> {
    if !is_feasible(w, spec.n()) {
        return Err(Error::invalid(format!(
            "{w} is not a feasible sequence for n = {}",
            spec.n()
        )));
    }
    let mut set = ColumnSet::empty(spec)?;
    let mut start = 1;
    for &k in w.parts() {
        let cols = match k {
            2 => start..=start + 1,
            3 => start + 1..=start + 2,
            _ => start + 1..=start + k - 2,
        };
        for c in cols {
            set.fill_column(c);
        }
        start += k;
    }
    Ok(set)
}

/// Content of one column in a construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    Empty,
    Full,
    /// `len` consecutive rows.
    Run(usize),
    /// Every row but one.
    AllBut,
    /// An explicit row mask.
    Rows(u64),
}

use Shape::*;

impl Shape {
    fn base_mask(self, m: usize) -> u64 {
        let full = (1u64 << m) - 1;
        match self {
            Empty => 0,
            Full => full,
            Run(len) => (1u64 << len.min(m)) - 1,
            AllBut => full >> 1,
            Rows(mask) => mask & full,
        }
    }

    fn is_partial(self, m: usize) -> bool {
        let c = self.base_mask(m).count_ones() as usize;
        c != 0 && c != m
    }
}

/// Moves `mask` by `offset` rows: rotation on a cycle, a shift without overflow on a path.
fn place(mask: u64, offset: usize, m: usize, kind: FactorKind) -> Option<u64> {
    let full = (1u64 << m) - 1;
    match kind {
        FactorKind::Cycle => Some(((mask << offset) | (mask >> ((m - offset) % m))) & full),
        FactorKind::Path => {
            let moved = mask << offset;
            (moved & !full == 0).then_some(moved)
        }
    }
}

/// Tries the shape with canonical rows first, then every placement of the partial columns.
fn realise(spec: ProductSpec, shape: &[Shape]) -> Option<ColumnSet> {
    let m = spec.m();
    let kind = spec.g2().kind();
    let base: Vec<u64> = shape.iter().map(|s| s.base_mask(m)).collect();
    let partial: Vec<usize> = (0..shape.len()).filter(|&i| shape[i].is_partial(m)).collect();
    let mut offsets = vec![0usize; partial.len()];
    loop {
        let mut masks = base.clone();
        let mut valid = true;
        for (slot, &col) in partial.iter().enumerate() {
            match place(base[col], offsets[slot], m, kind) {
                Some(mask) => masks[col] = mask,
                None => valid = false,
            }
        }
        if valid {
            let set = ColumnSet::from_masks(spec, masks).ok()?;
            if is_gda(&set) {
                return Some(set);
            }
        }
        // odometer over the placements
        let mut pos = 0;
        loop {
            if pos == offsets.len() {
                return None;
            }
            offsets[pos] += 1;
            if offsets[pos] < m {
                break;
            }
            offsets[pos] = 0;
            pos += 1;
        }
    }
}

/// Constructions for `P_n ∘ C_m`.
fn x_shapes(n: usize, m: usize) -> Vec<Vec<Shape>> {
    let shape = match (n, m) {
        (2, 3) => vec![Full, Empty],
        (2, _) => vec![Run(m / 2), Run(m / 2)],
        (3, _) => vec![Empty, Run(2.max((m - 2) / 2)), Full],
        (4, _) => vec![Empty, AllBut, Full, Empty],
        (5, _) => vec![Empty, Run(2), Full, Run(2.max(m - 3)), Empty],
        (6, 3) => vec![Full, Empty, Empty, Run(2), Full, Empty],
        (6, _) => vec![Empty, Run(2), Full, Full, Run(2), Empty],
        _ => vec![Empty, Run(2), Full, Run(m - 3), Full, Run(2), Empty],
    };
    vec![shape]
}

/// Constructions for `P_n ∘ P_m`, with a corrected fallback where the stated set fails.
fn y_shapes(n: usize, m: usize) -> Vec<Vec<Shape>> {
    match (n, m) {
        (2, 3) => vec![vec![Rows(0b011), Rows(0b010)]],
        (2, _) => vec![vec![Run(m / 2), Run(m / 2)]],
        (3, 3 | 4) => vec![vec![Empty, Run(1), Full]],
        (3, 5) => vec![
            vec![Empty, Run(2), AllBut],
            vec![Empty, Run(2), Full],
        ],
        (3, _) => vec![
            vec![Empty, Run((m - 2) / 2), Full],
            vec![Empty, Run((m - 1) / 2), Full],
        ],
        (4, _) => vec![vec![Empty, AllBut, Full, Empty]],
        (5, 3) => vec![
            vec![Run(1), Empty, Full, Run(1), Empty],
            vec![Empty, Run(1), Full, Run(1), Empty],
        ],
        (5, 4) => vec![vec![Empty, Run(1), Full, Run(2), Empty]],
        (5, _) => x_shapes(5, m),
        (6, _) => vec![vec![Empty, Run(1), Full, Full, Run(1), Empty]],
        _ => vec![vec![Empty, Run(1), Full, Run(m - 2), Full, Run(1), Empty]],
    }
}

fn cycle_shapes(n: usize, m: usize, g2: FactorKind) -> Vec<Vec<Shape>> {
    match (n, m, g2) {
        // balanced columns; the third may be one smaller
        (3, _, _) => vec![
            vec![Run(m.div_ceil(2)), Run(m.div_ceil(2)), Run(m / 2)],
            vec![Empty, Run(2), Full],
        ],
        (6, 3, FactorKind::Cycle) => x_shapes(6, 4),
        (_, _, FactorKind::Cycle) => x_shapes(n, m),
        (_, _, FactorKind::Path) => y_shapes(n, m),
    }
}

/// A small-order GDA for `n ≤ 7` built from the explicit constructions.
///
/// Partial columns start at row 0; if that placement fails every other
/// placement of the same shape is tried before the next listed shape.
pub fn witness_table(spec: ProductSpec) -> Result<ColumnSet> {
    let (n, m) = (spec.n(), spec.m());
    if n > 7 {
        return Err(Error::unsupported(format!(
            "explicit constructions cover n ≤ 7, got n = {n}"
        )));
    }
    let g2 = spec.g2().kind();
    let shapes = match (spec.g1().kind(), g2) {
        (FactorKind::Path, FactorKind::Cycle) => x_shapes(n, m),
        (FactorKind::Path, FactorKind::Path) => y_shapes(n, m),
        (FactorKind::Cycle, _) => cycle_shapes(n, m, g2),
    };
    shapes
        .iter()
        .find_map(|s| realise(spec, s))
        .ok_or_else(|| Error::Internal(format!("no listed construction is a GDA of {spec}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FactorKind::*;
    use crate::verify::{column_profile, spectrum};

    fn spec(k1: FactorKind, n: usize, k2: FactorKind, m: usize) -> ProductSpec {
        ProductSpec::of(k1, n, k2, m).unwrap()
    }

    #[test]
    fn recipe_examples() {
        let w = PartSequence::new(vec![4, 4]).unwrap();
        let s = witness_from_sequence(spec(Path, 8, Cycle, 4), &w).unwrap();
        assert_eq!(column_profile(&s), vec![0, 4, 4, 0, 0, 4, 4, 0]);
        assert!(is_gda(&s));

        let w = PartSequence::new(vec![2]).unwrap();
        let s = witness_from_sequence(spec(Path, 2, Cycle, 3), &w).unwrap();
        assert_eq!(column_profile(&s), vec![3, 3]);
        assert!(is_gda(&s));

        let w = PartSequence::new(vec![4, 5]).unwrap();
        let s = witness_from_sequence(spec(Cycle, 9, Path, 5), &w).unwrap();
        assert!(is_gda(&s));
        assert_eq!(spectrum(&s).unwrap(), w);
    }

    #[test]
    fn recipe_rejects_infeasible() {
        let w = PartSequence::new(vec![3, 2]).unwrap();
        assert!(witness_from_sequence(spec(Path, 5, Cycle, 3), &w).is_err());
    }

    #[test]
    fn table_examples() {
        let x = witness_table(spec(Path, 2, Cycle, 3)).unwrap();
        assert_eq!(column_profile(&x), vec![3, 0]);
        let x = witness_table(spec(Path, 4, Cycle, 6)).unwrap();
        assert_eq!(column_profile(&x), vec![0, 5, 6, 0]);
        let y = witness_table(spec(Path, 5, Path, 3)).unwrap();
        assert_eq!(y.len(), 5);
    }

    #[test]
    fn table_rejects_large_n() {
        assert!(matches!(
            witness_table(spec(Path, 8, Cycle, 3)),
            Err(Error::Unsupported(_))
        ));
    }
}
