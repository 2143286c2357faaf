//! Shared helpers for the integration tests and the acceptance run.
#![allow(dead_code)]

use std::ops::RangeInclusive;

use gda_lex::verify::{column_profile, is_gda};
use gda_lex::{ColumnSet, ComboKind, FactorKind, ProductSpec};

pub const KINDS: [FactorKind; 2] = [FactorKind::Path, FactorKind::Cycle];

/// Every valid product over the ranges, all four combos; cycles start at `n = 3`.
pub fn sweep(ns: RangeInclusive<usize>, ms: RangeInclusive<usize>) -> Vec<ProductSpec> {
    let mut out = Vec::new();
    for combo in ComboKind::ALL {
        for n in ns.clone() {
            for m in ms.clone() {
                if let Ok(s) = ProductSpec::of(combo.g1, n, combo.g2, m) {
                    out.push(s);
                }
            }
        }
    }
    out
}

/// Every valid product with `n·m ≤ max_vertices`.
pub fn small_specs(max_vertices: usize) -> Vec<ProductSpec> {
    sweep(2..=max_vertices / 3, 3..=max_vertices / 2)
        .into_iter()
        .filter(|s| s.vertex_count() <= max_vertices)
        .collect()
}

/// Calls `f` on every GDA of `spec`. Only sensible for `n·m ≤ 20`.
pub fn for_each_gda(spec: ProductSpec, mut f: impl FnMut(&ColumnSet)) {
    let (n, m) = (spec.n(), spec.m());
    let total = n * m;
    assert!(total <= 20, "{spec} is too large to enumerate");
    let row = (1u64 << m) - 1;
    for bits in 1u64..(1 << total) {
        let masks = (0..n).map(|c| (bits >> (c * m)) & row).collect();
        let set = ColumnSet::from_masks(spec, masks).unwrap();
        if is_gda(&set) {
            f(&set);
        }
    }
}

/// A violated part of the basic column inequalities.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BasicViolation {
    pub part: &'static str,
    pub spec: String,
    pub profile: Vec<usize>,
    /// 1-based column.
    pub column: usize,
}

/// Checks the four column inequalities at every column `2 ≤ i ≤ n - 1` holding
/// at least one vertex.
pub fn basic_violations(set: &ColumnSet) -> Vec<BasicViolation> {
    let spec = set.spec();
    let s = column_profile(set);
    let (n, m) = (spec.n(), spec.m());
    if n < 3 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for i in 1..n - 1 {
        let (a, b, c) = (s[i - 1], s[i], s[i + 1]);
        if b == 0 {
            continue;
        }
        let mut flag = |part| {
            out.push(BasicViolation {
                part,
                spec: spec.to_string(),
                profile: s.clone(),
                column: i + 1,
            })
        };
        let inner_cycle_like = spec.g2().kind() == FactorKind::Cycle || m == 3;
        if inner_cycle_like && a + b + c < m + 2 {
            flag("i");
        }
        if !inner_cycle_like && a + b + c < m + 1 {
            flag("ii");
        }
        if a + c < m - 1 {
            flag("iii");
        }
        if b < m && a + c < m {
            flag("iv");
        }
    }
    out
}

/// Whether every interior column is nonempty, the hypothesis of the lower bounds.
pub fn lower_applies(set: &ColumnSet) -> bool {
    let s = column_profile(set);
    s.len() >= 3 && s[1..s.len() - 1].iter().all(|&x| x >= 1)
}

/// Parts of the size lower bounds violated by `set`, as `(part, bound)`.
pub fn lower_violations(set: &ColumnSet) -> Vec<(&'static str, usize)> {
    if !lower_applies(set) {
        return Vec::new();
    }
    let spec = set.spec();
    let (n, m) = (spec.n(), spec.m());
    let size = set.len();
    let r = n % 4;
    let cycle = spec.g2().kind() == FactorKind::Cycle;
    let mut bounds = Vec::new();
    if r == 0 {
        bounds.push(("i", (2 * m - 1) * n / 4));
    }
    if r != 0 && n >= 8 {
        let t = match r {
            3 if cycle => m + 2,
            3 => m + 1,
            _ => r,
        };
        bounds.push(("ii", (2 * m - 1) * (n / 4) + t));
    }
    if n >= 6 && m == 3 {
        let t = if r == 0 { 0 } else { r + 2 };
        bounds.push(("iii", 6 * (n / 4) + t));
    }
    if n >= 9 && m == 4 {
        bounds.push(("iv", if cycle { 2 * n } else { 2 * n - 2 }));
    }
    bounds.into_iter().filter(|&(_, b)| size < b).collect()
}
