//! Cost of a part sequence and its minimisation over feasible sequences.
//!
//! With `G1` a cycle every section is internal: `val(w) = Σ val_I(k_i)`. With
//! `G1` a path the two end sections are external:
//! `val(w) = val_E(k_1) + Σ_{1<i<t} val_I(k_i) + val_E(k_t)`, and a lone
//! section costs `val_E(k_1)`.

use crate::error::{Error, Result};
use crate::graph::FactorKind;
use crate::oracle::ValueTable;
use crate::parts::PartSequence;
use crate::result::{GammaResult, Method};
use crate::verify::is_feasible;

/// Largest part allowed when `m = 3`.
pub const MAX_PART_M3: usize = 6;
/// Largest part allowed when `m ≥ 4`.
pub const MAX_PART_M4: usize = 7;

/// Default bound on section length for a given inner order.
pub fn default_max_part(m: usize) -> usize {
    if m == 3 {
        MAX_PART_M3
    } else {
        MAX_PART_M4
    }
}

#[derive(Debug, Clone)]
pub struct SequenceValueContext<'a> {
    pub g1_kind: FactorKind,
    pub n: usize,
    pub table: &'a ValueTable,
}

impl<'a> SequenceValueContext<'a> {
    pub fn new(g1_kind: FactorKind, n: usize, table: &'a ValueTable) -> Self {
        SequenceValueContext { g1_kind, n, table }
    }

    fn internal(&self, k: usize) -> Result<usize> {
        self.table.val_i(k).ok_or_else(|| oversized(k, self.table))
    }

    fn external(&self, k: usize) -> Result<usize> {
        self.table.val_e(k).ok_or_else(|| oversized(k, self.table))
    }
}

fn oversized(k: usize, table: &ValueTable) -> Error {
    Error::invalid(format!(
        "part {k} exceeds the value table (k_max = {})",
        table.k_max()
    ))
}

/// `val(w)` for the outer factor kind in `ctx`.
pub fn sequence_value(ctx: &SequenceValueContext<'_>, w: &PartSequence) -> Result<usize> {
    if !is_feasible(w, ctx.n) {
        return Err(Error::invalid(format!(
            "{w} is not a feasible sequence for n = {}",
            ctx.n
        )));
    }
    let parts = w.parts();
    match ctx.g1_kind {
        FactorKind::Cycle => parts.iter().map(|&k| ctx.internal(k)).sum(),
        FactorKind::Path => {
            let t = parts.len();
            if t == 1 {
                return ctx.external(parts[0]);
            }
            let middle: usize = parts[1..t - 1]
                .iter()
                .map(|&k| ctx.internal(k))
                .sum::<Result<usize>>()?;
            Ok(ctx.external(parts[0])? + middle + ctx.external(parts[t - 1])?)
        }
    }
}

/// Best prefix for a given (covered columns, part count).
#[derive(Clone)]
struct Prefix {
    value: usize,
    parts: Vec<usize>,
}

/// Minimum of `val(w)` over feasible `w` with all parts at most `max_part`.
///
/// Ties go to fewer parts, then to the lexicographically smallest sequence.
pub fn min_sequence_value(ctx: &SequenceValueContext<'_>, max_part: usize) -> Result<GammaResult> {
    let n = ctx.n;
    let min_n = match ctx.g1_kind {
        FactorKind::Path => 2,
        FactorKind::Cycle => 3,
    };
    if n < min_n {
        return Err(Error::invalid(format!("n = {n} is too small for a {}", ctx.g1_kind)));
    }
    if max_part > ctx.table.k_max() {
        return Err(Error::invalid(format!(
            "max part {max_part} exceeds table k_max {}",
            ctx.table.k_max()
        )));
    }
    // Cost of a part that is not the last one: the first part is external on a path.
    let leading = |k: usize, first: bool| -> Result<usize> {
        match (ctx.g1_kind, first) {
            (FactorKind::Path, true) => ctx.external(k),
            _ => ctx.internal(k),
        }
    };
    let closing = |k: usize| -> Result<usize> {
        match ctx.g1_kind {
            FactorKind::Path => ctx.external(k),
            FactorKind::Cycle => ctx.internal(k),
        }
    };

    // prefix[pos][count]: cheapest non-final prefix covering `pos` columns with `count` parts
    let max_count = n / 2 + 1;
    let mut prefix: Vec<Vec<Option<Prefix>>> = vec![vec![None; max_count + 1]; n + 1];
    for k in 2..=max_part.min(n) {
        prefix[k][1] = Some(Prefix {
            value: leading(k, true)?,
            parts: vec![k],
        });
    }
    for pos in 2..=n {
        for count in 1..max_count {
            let Some(base) = prefix[pos][count].clone() else {
                continue;
            };
            for k in 3..=max_part {
                let next = pos + k;
                if next > n {
                    break;
                }
                let value = base.value + leading(k, false)?;
                let mut parts = base.parts.clone();
                parts.push(k);
                let slot = &mut prefix[next][count + 1];
                let better = match slot {
                    None => true,
                    Some(cur) => (value, &parts) < (cur.value, &cur.parts),
                };
                if better {
                    *slot = Some(Prefix { value, parts });
                }
            }
        }
    }

    let mut best: Option<(usize, usize, Vec<usize>)> = None;
    let mut consider = |value: usize, parts: Vec<usize>| {
        let key = (value, parts.len(), parts);
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    };
    if (2..=max_part).contains(&n) {
        let single = match ctx.g1_kind {
            FactorKind::Path => ctx.external(n)?,
            FactorKind::Cycle => ctx.internal(n)?,
        };
        consider(single, vec![n]);
    }
    for k in 3..=max_part.min(n) {
        for count in 1..=max_count {
            if let Some(p) = &prefix[n - k][count] {
                let mut parts = p.parts.clone();
                parts.push(k);
                consider(p.value + closing(k)?, parts);
            }
        }
    }
    let (value, _, parts) = best.ok_or_else(|| {
        Error::Infeasible(format!(
            "no feasible sequence for n = {n} with parts ≤ {max_part}"
        ))
    })?;
    Ok(GammaResult::new(value, Method::SequenceDp).with_sequence(PartSequence::new(parts)?))
}
