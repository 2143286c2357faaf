//! Constant-time formulas for `γ_a`.
//!
//! Orders `n ≤ 7` come from per-row formulas in `m`, `m = 3` from residue
//! formulas in `n`, and the general case is the cheapest of at most four
//! candidate part sequences. The threshold tables pick the winning candidate
//! without evaluating all four.

use std::collections::BTreeMap;

use crate::engine::{sequence_value, SequenceValueContext};
use crate::error::{Error, Result};
use crate::graph::{ComboKind, FactorKind, FactorSpec, ProductSpec};
use crate::oracle::ValueTable;
use crate::parts::PartSequence;
use crate::result::{GammaResult, Method};

/// `m = 3` columns of the four small-order tables, indexed by `n`.
const PC_M3: [usize; 6] = [3, 5, 5, 7, 8, 10];
const CC_M3: [usize; 5] = [5, 5, 7, 10, 10];
const PP_M3: [usize; 6] = [3, 4, 5, 5, 8, 9];
const CP_M3: [usize; 5] = [5, 5, 5, 8, 9];

/// `γ_a(P_n ∘ C_m)` for `2 ≤ n ≤ 7`, `m ≥ 4`.
fn small_pc(n: usize, m: usize) -> usize {
    match n {
        2 => 2 * (m / 2),
        3 => m + 2.max((m - 2) / 2),
        4 => 2 * m - 1,
        5 if m == 4 => 8,
        5 => 2 * m - 1,
        6 => 2 * m + 4,
        _ => 3 * m + 1,
    }
}

/// `γ_a(P_n ∘ P_m)` for `2 ≤ n ≤ 7`, `m ≥ 4`.
fn small_pp(n: usize, m: usize) -> usize {
    match n {
        2 => 2 * (m / 2),
        3 => m + (m - 1) / 2,
        4 | 5 => 2 * m - 1,
        6 => 2 * m + 2,
        _ => 3 * m,
    }
}

/// Both `C_3 ∘ C_m` and `C_3 ∘ P_m` for `m ≥ 4`.
fn small_c3(m: usize) -> usize {
    (3 * m + 1) / 2
}

fn check_small(spec: &ProductSpec) -> Result<()> {
    let n = spec.n();
    if n > 7 {
        return Err(Error::unsupported(format!(
            "small-order formulas cover n ≤ 7, got n = {n}"
        )));
    }
    Ok(())
}

/// `γ_a` for `n ≤ 7`.
pub fn gamma_small(spec: &ProductSpec) -> Result<usize> {
    check_small(spec)?;
    let (n, m) = (spec.n(), spec.m());
    let combo = spec.combo();
    if m == 3 {
        let value = match combo {
            ComboKind::PC => PC_M3[n - 2],
            ComboKind::CC => CC_M3[n - 3],
            ComboKind::PP => PP_M3[n - 2],
            _ => CP_M3[n - 3],
        };
        return Ok(value);
    }
    let value = match (combo.g1, combo.g2) {
        (FactorKind::Cycle, _) if n == 3 => small_c3(m),
        (_, FactorKind::Cycle) => small_pc(n, m),
        (_, FactorKind::Path) => small_pp(n, m),
    };
    Ok(value)
}

/// `f(n,3)` for a `C_3` inner factor and `f'(n,3)` for `P_3`; the outer kind does not matter.
pub fn gamma_m3(n: usize, g2_kind: FactorKind) -> Result<usize> {
    if n < 8 {
        return Err(Error::unsupported(format!(
            "residue formulas need n ≥ 8, got n = {n}"
        )));
    }
    let value = match g2_kind {
        FactorKind::Cycle => match n % 4 {
            0 => 5 * n / 4,
            1 => 5 * (n - 5) / 4 + 7,
            2 => 5 * (n - 6) / 4 + 8,
            _ => 5 * (n - 3) / 4 + 5,
        },
        FactorKind::Path => match n % 5 {
            0 => n,
            1 => n - 6 + 8,
            r @ (2 | 3) => n - r + 4,
            _ => n - 4 + 5,
        },
    };
    Ok(value)
}

/// Section costs implied by the small-order formulas, for `m ≥ 4` and `k ≤ 7`.
///
/// A minimum GDA of `P_k ∘ G2` with `4 ≤ k ≤ 7` already leaves both end
/// columns empty, so `val_I(k) = val_E(k) = γ_a(P_k ∘ G2)` there, and
/// `val_E(3) = γ_a(P_3 ∘ G2)`.
pub fn closed_value_table(g2: FactorSpec) -> Result<ValueTable> {
    let m = g2.order();
    if m < 4 {
        return Err(Error::unsupported(format!(
            "closed section costs need m ≥ 4, got m = {m}"
        )));
    }
    let small = |k: usize| -> Result<usize> {
        gamma_small(&ProductSpec::new(FactorSpec::path(k)?, g2)?)
    };
    let mut val_i = Vec::with_capacity(6);
    let mut val_e = Vec::with_capacity(6);
    for k in 2..=7 {
        val_i.push(small(k.max(4))?);
        val_e.push(small(k.max(3))?);
    }
    ValueTable::from_values(g2, val_i, val_e)
}

/// The four candidate sequences for `n ≥ 8`, keyed by family index; absent families are `None`.
pub fn candidate_sequences(n: usize) -> Result<BTreeMap<usize, Option<PartSequence>>> {
    if n < 8 {
        return Err(Error::unsupported(format!(
            "candidate families need n ≥ 8, got n = {n}"
        )));
    }
    let fives_sixes = |p: usize, q: usize| PartSequence::from_runs(&[(p, 5), (q, 6)]);
    let compositions: Vec<(usize, usize)> = (0..=n / 6)
        .filter(|q| (n - 6 * q) % 5 == 0)
        .map(|q| ((n - 6 * q) / 5, q))
        .collect();

    let (p, r) = (n / 5, n % 5);
    let f1 = match r {
        0 => fives_sixes(p, 0)?,
        1 => fives_sixes(p - 1, 1)?,
        _ => PartSequence::from_runs(&[(1, r), (p, 5)])?,
    };
    let f2 = if n == 19 {
        Some(PartSequence::from_runs(&[(1, 3), (2, 5), (1, 6)])?)
    } else {
        compositions
            .iter()
            .max_by_key(|c| c.0)
            .map(|&(p, q)| fives_sixes(p, q))
            .transpose()?
    };
    let f3 = compositions
        .iter()
        .max_by_key(|c| c.1)
        .map(|&(p, q)| fives_sixes(p, q))
        .transpose()?;
    let (q, s) = (n / 6, n % 6);
    let f4 = match s {
        0 => fives_sixes(0, q)?,
        1 => PartSequence::from_runs(&[(q - 1, 6), (1, 7)])?,
        2 => PartSequence::from_runs(&[(1, 3), (1, 5), (q - 1, 6)])?,
        4 => fives_sixes(2, q - 1)?,
        _ => PartSequence::from_runs(&[(1, s), (q, 6)])?,
    };
    Ok(BTreeMap::from([
        (1, Some(f1)),
        (2, f2),
        (3, f3),
        (4, Some(f4)),
    ]))
}

fn check_general(spec: &ProductSpec, table: &ValueTable) -> Result<()> {
    if spec.n() < 8 || spec.m() < 4 {
        return Err(Error::unsupported(format!(
            "candidate families need n ≥ 8 and m ≥ 4, got {spec}"
        )));
    }
    if table.g2() != spec.g2() {
        return Err(Error::invalid(format!(
            "value table is for {}, product uses {}",
            table.g2(),
            spec.g2()
        )));
    }
    Ok(())
}

fn family_value(spec: &ProductSpec, table: &ValueTable, w: &PartSequence) -> Result<usize> {
    let ctx = SequenceValueContext::new(spec.g1().kind(), spec.n(), table);
    sequence_value(&ctx, w)
}

fn family_result(
    spec: &ProductSpec,
    table: &ValueTable,
    family: usize,
    w: PartSequence,
) -> Result<GammaResult> {
    let value = family_value(spec, table, &w)?;
    let mut result = GammaResult::new(value, Method::ClosedForm).with_sequence(w);
    result.family = Some(family);
    Ok(result)
}

/// Cheapest of the candidate families; ties go to the lower family index.
pub fn gamma_min_of_four(spec: &ProductSpec, table: &ValueTable) -> Result<GammaResult> {
    check_general(spec, table)?;
    let mut best: Option<GammaResult> = None;
    for (family, w) in candidate_sequences(spec.n())? {
        let Some(w) = w else { continue };
        let r = family_result(spec, table, family, w)?;
        if best.as_ref().is_none_or(|b| r.value < b.value) {
            best = Some(r);
        }
    }
    best.ok_or_else(|| Error::Internal(format!("no candidate family for n = {}", spec.n())))
}

/// Thresholds `(t_{n,1}, t_{n,2}, t_{n,3})`; `None` means undefined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Thresholds {
    pub t1: Option<usize>,
    pub t2: Option<usize>,
    pub t3: Option<usize>,
}

fn combo_index(combo: ComboKind) -> usize {
    match combo {
        ComboKind::PC => 0,
        ComboKind::CC => 1,
        ComboKind::PP => 2,
        _ => 3,
    }
}

/// Threshold lookup for `n ≥ 8`.
pub fn thresholds(n: usize, combo: ComboKind) -> Result<Thresholds> {
    if n < 8 {
        return Err(Error::unsupported(format!(
            "thresholds need n ≥ 8, got n = {n}"
        )));
    }
    let col = combo_index(combo);
    const NONE: [Option<usize>; 4] = [None; 4];
    let t1_row: [Option<usize>; 4] = match n % 5 {
        0 => [Some(13), Some(13), Some(8), Some(8)],
        1 => NONE,
        2 => [Some(8), Some(6), Some(5), Some(4)],
        3 => [Some(9), Some(8), Some(7), Some(5)],
        _ if n == 19 => [Some(9), None, Some(5), None],
        _ => [Some(11), Some(11), Some(7), Some(7)],
    };
    let t3_row: [Option<usize>; 4] = match n % 6 {
        1 => [Some(18), Some(18), Some(11), Some(11)],
        2 | 3 => [Some(19), None, Some(6), None],
        _ => NONE,
    };
    let families = candidate_sequences(n)?;
    let t2 = match (&families[&2], &families[&3]) {
        (Some(a), Some(b)) if a != b => Some(if combo.g2 == FactorKind::Cycle { 13 } else { 8 }),
        _ => None,
    };
    Ok(Thresholds {
        t1: t1_row[col],
        t2,
        t3: t3_row[col],
    })
}

/// Which family the case split selects.
///
/// The split is read as a chain `f1 → f2 → f3 → f4`: crossing a defined
/// threshold `t_{n,i} ≤ m` moves to `f_{i+1}`, and an undefined threshold never
/// moves. With every threshold defined and increasing this is exactly
/// `m < min{t1,t2} → f1`, `t1 ≤ m ≤ t2 → f2`, `t2 ≤ m < t3 → f3`,
/// `m ≥ max{t3,t2} → f4` (equalities are ties).
pub fn select_family(m: usize, t: Thresholds) -> usize {
    [t.t1, t.t2, t.t3]
        .iter()
        .enumerate()
        .filter(|(_, ti)| ti.is_some_and(|ti| m >= ti))
        .map(|(i, _)| i + 2)
        .max()
        .unwrap_or(1)
}

/// `γ_a` through the threshold case split.
///
/// When the selected family does not exist for this `n` the split cannot be
/// resolved; the result then falls back to [`gamma_min_of_four`] and is flagged.
pub fn gamma_via_thresholds(spec: &ProductSpec, table: &ValueTable) -> Result<GammaResult> {
    check_general(spec, table)?;
    let t = thresholds(spec.n(), spec.combo())?;
    let mut families = candidate_sequences(spec.n())?;
    let family = select_family(spec.m(), t);
    let chosen = families.remove(&family).flatten().map(|w| (family, w));
    match chosen {
        Some((family, w)) => family_result(spec, table, family, w),
        None => {
            log::debug!("threshold split unresolved for {spec}, using min-of-four");
            let mut r = gamma_min_of_four(spec, table)?;
            r.dispatch_fallback = true;
            Ok(r)
        }
    }
}

/// Closed-form `γ_a` for any valid product.
pub fn gamma(spec: &ProductSpec) -> Result<GammaResult> {
    gamma_with(spec, false)
}

/// As [`gamma`]; with `use_thresholds` the general case goes through the case split.
pub fn gamma_with(spec: &ProductSpec, use_thresholds: bool) -> Result<GammaResult> {
    let (n, m) = (spec.n(), spec.m());
    if n <= 7 {
        return Ok(GammaResult::new(gamma_small(spec)?, Method::ClosedForm));
    }
    if m == 3 {
        return Ok(GammaResult::new(
            gamma_m3(n, spec.g2().kind())?,
            Method::ClosedForm,
        ));
    }
    let table = closed_value_table(spec.g2())?;
    if use_thresholds {
        gamma_via_thresholds(spec, &table)
    } else {
        gamma_min_of_four(spec, &table)
    }
}
