//! Exact minimum GDA by dynamic programming over columns.
//!
//! Whether column `i` is valid depends only on its own mask and on the
//! cardinalities of its neighbouring columns: every vertex of an adjacent copy
//! is adjacent to every vertex of column `i`. For a mask `M` let `req(M)` be
//! the least total cardinality the neighbouring columns must supply so that
//! all members of `M` are defended and `M`'s column is dominated. The column is
//! valid iff `s_{i-1} + s_{i+1} >= req(M_i)`.
//!
//! Smaller `req` is never worse, so for each cardinality only the mask with the
//! smallest requirement matters. The search then runs over cardinality
//! profiles alone, with state `(s_{i-1}, s_i)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::graph::{FactorKind, FactorSpec, ProductSpec};
use crate::result::{GammaResult, Method};
use crate::verify::{ColumnSet, RowRules};

/// Largest `G2` order the column DP accepts.
pub const COLUMN_DP_MAX_M: usize = 20;

const INF: usize = usize::MAX / 4;

/// Best mask per cardinality, for one and for two neighbouring columns.
#[derive(Debug)]
pub(crate) struct CardinalityRules {
    pub m: usize,
    /// `best[a - 1][c] = (req, mask)` with the smallest requirement, ties to the smallest mask.
    best: [Vec<(usize, u64)>; 2],
}

impl CardinalityRules {
    fn build(g2: FactorSpec) -> Self {
        let m = g2.order();
        let spec = ProductSpec::new(FactorSpec::path(2).expect("valid"), g2).expect("valid");
        let rules = RowRules::new(&spec);
        let mut best = [vec![(INF, 0u64); m + 1], vec![(INF, 0u64); m + 1]];
        for mask in 0u64..(1u64 << m) {
            let c = mask.count_ones() as usize;
            for a in 1..=2 {
                let req = rules.requirement(mask, a);
                if req < best[a - 1][c].0 {
                    best[a - 1][c] = (req, mask);
                }
            }
        }
        CardinalityRules { m, best }
    }

    pub fn shared(g2: FactorSpec) -> Arc<Self> {
        static CACHE: OnceLock<Mutex<HashMap<FactorSpec, Arc<CardinalityRules>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(hit) = cache.lock().expect("poisoned").get(&g2) {
            return hit.clone();
        }
        let built = Arc::new(Self::build(g2));
        cache
            .lock()
            .expect("poisoned")
            .entry(g2)
            .or_insert(built)
            .clone()
    }

    #[inline]
    pub fn req(&self, adjacent: usize, c: usize) -> usize {
        self.best[adjacent - 1][c].0
    }

    #[inline]
    pub fn mask(&self, adjacent: usize, c: usize) -> u64 {
        self.best[adjacent - 1][c].1
    }
}

/// One instance of the column problem: a line or ring of columns, some pinned empty.
pub(crate) struct ColumnProblem<'a> {
    pub rules: &'a CardinalityRules,
    pub kind: FactorKind,
    pub n: usize,
    pub pinned_empty: Vec<bool>,
}

impl ColumnProblem<'_> {
    fn adjacent(&self, i: usize) -> usize {
        match self.kind {
            FactorKind::Cycle => 2,
            FactorKind::Path if i == 0 || i + 1 == self.n => 1,
            FactorKind::Path => 2,
        }
    }

    fn allowed(&self, i: usize, c: usize) -> bool {
        !self.pinned_empty[i] || c == 0
    }

    /// Backward tables `g[i][p][c]`: cheapest cost of columns after `i`, given
    /// `s_{i-1} = p` and `s_i = c`, with all columns from `i` on satisfied.
    /// `tail` decides the last column: it returns whether `(p, c)` is an
    /// acceptable end state.
    fn backward(&self, tail: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
        let w = self.rules.m + 1;
        let n = self.n;
        let mut g = vec![vec![INF; w * w]; n];
        for p in 0..w {
            for c in 0..w {
                if self.allowed(n - 1, c) && tail(p, c) {
                    g[n - 1][p * w + c] = 0;
                }
            }
        }
        for i in (0..n - 1).rev() {
            let a = self.adjacent(i);
            for c in 0..w {
                if !self.allowed(i, c) {
                    continue;
                }
                let req = self.rules.req(a, c);
                if req == INF {
                    continue;
                }
                for p in 0..w {
                    let mut best = INF;
                    for d in req.saturating_sub(p)..w {
                        let rest = g[i + 1][c * w + d];
                        if rest < INF && d + rest < best {
                            best = d + rest;
                        }
                    }
                    g[i][p * w + c] = best;
                }
            }
        }
        g
    }

    /// Walks the tables forward choosing the smallest cardinality at each step.
    fn reconstruct(&self, g: &[Vec<usize>], before_first: usize, first: usize) -> Vec<usize> {
        let w = self.rules.m + 1;
        let mut profile = vec![first];
        let (mut p, mut c) = (before_first, first);
        for i in 0..self.n - 1 {
            let target = g[i][p * w + c];
            let req = self.rules.req(self.adjacent(i), c);
            let d = (req.saturating_sub(p)..w)
                .find(|&d| {
                    let rest = g[i + 1][c * w + d];
                    rest < INF && d + rest == target
                })
                .expect("consistent tables");
            profile.push(d);
            p = c;
            c = d;
        }
        profile
    }

    /// Minimum total cardinality and the lexicographically smallest optimal profile.
    pub fn solve(&self) -> Option<(usize, Vec<usize>)> {
        let w = self.rules.m + 1;
        match self.kind {
            FactorKind::Path => {
                let last_a = self.adjacent(self.n - 1);
                let g = self.backward(|p, c| p >= self.rules.req(last_a, c));
                let (total, first) = (0..w)
                    .filter(|&c| self.allowed(0, c))
                    .map(|c| (c.saturating_add(g[0][c]), c))
                    .min()?;
                (total < INF).then(|| (total, self.reconstruct(&g, 0, first)))
            }
            FactorKind::Cycle => {
                let mut best: Option<(usize, Vec<usize>)> = None;
                for last in 0..w {
                    let req_last = self.rules.req(2, last);
                    if req_last == INF {
                        continue;
                    }
                    for first in 0..w {
                        let g = self.backward(|p, c| c == last && p + first >= req_last);
                        let cost = g[0][last * w + first];
                        if cost >= INF {
                            continue;
                        }
                        let total = first + cost;
                        let better = match &best {
                            None => true,
                            Some((b, _)) => total <= *b,
                        };
                        if better {
                            let profile = self.reconstruct(&g, last, first);
                            match &best {
                                Some((b, bp)) if *b == total && *bp <= profile => {}
                                _ => best = Some((total, profile)),
                            }
                        }
                    }
                }
                best
            }
        }
    }

    pub fn masks_for(&self, profile: &[usize]) -> Vec<u64> {
        profile
            .iter()
            .enumerate()
            .map(|(i, &c)| self.rules.mask(self.adjacent(i), c))
            .collect()
    }
}

fn check_caps(spec: &ProductSpec) -> Result<()> {
    if spec.m() > COLUMN_DP_MAX_M {
        return Err(Error::unsupported(format!(
            "column DP supports G2 order up to {COLUMN_DP_MAX_M}, got {}",
            spec.m()
        )));
    }
    Ok(())
}

/// Exact `γ_a(G1 ∘ G2)` with a witness.
pub fn min_gda_columns(spec: &ProductSpec) -> Result<GammaResult> {
    check_caps(spec)?;
    let rules = CardinalityRules::shared(spec.g2());
    let problem = ColumnProblem {
        rules: &rules,
        kind: spec.g1().kind(),
        n: spec.n(),
        pinned_empty: vec![false; spec.n()],
    };
    let (value, profile) = problem
        .solve()
        .ok_or_else(|| Error::Internal(format!("no GDA found for {spec}")))?;
    let witness = ColumnSet::from_masks(*spec, problem.masks_for(&profile))?;
    Ok(GammaResult::new(value, Method::ColumnDp).with_witness(witness))
}

/// Minimum GDA of `P_k ∘ G2` with the listed columns (0-based) forced empty.
pub(crate) fn min_gda_path_pinned(
    g2: FactorSpec,
    k: usize,
    pinned: &[usize],
) -> Result<Option<(usize, ColumnSet)>> {
    let spec = ProductSpec::new(FactorSpec::path(k)?, g2)?;
    check_caps(&spec)?;
    let rules = CardinalityRules::shared(g2);
    let mut pinned_empty = vec![false; k];
    for &i in pinned {
        pinned_empty[i] = true;
    }
    let problem = ColumnProblem {
        rules: &rules,
        kind: FactorKind::Path,
        n: k,
        pinned_empty,
    };
    match problem.solve() {
        None => Ok(None),
        Some((value, profile)) => {
            let set = ColumnSet::from_masks(spec, problem.masks_for(&profile))?;
            Ok(Some((value, set)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FactorKind::*;
    use crate::verify::{column_profile, is_gda};

    fn gamma(k1: FactorKind, n: usize, k2: FactorKind, m: usize) -> GammaResult {
        min_gda_columns(&ProductSpec::of(k1, n, k2, m).unwrap()).unwrap()
    }

    #[test]
    fn table_values() {
        assert_eq!(gamma(Path, 7, Cycle, 3).value, 10);
        assert_eq!(gamma(Cycle, 6, Cycle, 3).value, 10);
        assert_eq!(gamma(Path, 2, Cycle, 3).value, 3);
        assert_eq!(gamma(Cycle, 3, Cycle, 3).value, 5);
    }

    #[test]
    fn witness_is_valid() {
        for (k1, n, k2, m) in [(Path, 9, Path, 5), (Cycle, 8, Cycle, 4), (Cycle, 3, Path, 6)] {
            let r = gamma(k1, n, k2, m);
            let w = r.witness.unwrap();
            assert!(is_gda(&w));
            assert_eq!(w.len(), r.value);
        }
    }

    #[test]
    fn pinned_columns_stay_empty() {
        let g2 = FactorSpec::cycle(5).unwrap();
        let (v, set) = min_gda_path_pinned(g2, 5, &[0, 4]).unwrap().unwrap();
        let prof = column_profile(&set);
        assert_eq!(prof[0], 0);
        assert_eq!(prof[4], 0);
        assert_eq!(v, set.len());
        assert!(is_gda(&set));
    }

    #[test]
    fn cap_is_enforced() {
        let s = ProductSpec::of(Path, 4, Cycle, 21).unwrap();
        assert!(matches!(min_gda_columns(&s), Err(Error::Unsupported(_))));
    }
}
