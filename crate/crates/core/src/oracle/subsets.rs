use crate::error::{Error, Result};
use crate::graph::ProductSpec;
use crate::result::{GammaResult, Method};
use crate::verify::{masks_are_gda, ColumnSet, RowRules};

/// Largest `n·m` the exhaustive oracle accepts.
pub const SUBSETS_MAX_VERTICES: usize = 20;

/// Exact `γ_a` by enumerating vertex sets in order of cardinality, then
/// numerically (vertex `(i, j)` is bit `(i-1)·m + j`). The first alliance found
/// is returned as the witness.
pub fn min_gda_subsets(spec: &ProductSpec) -> Result<GammaResult> {
    let total = spec.vertex_count();
    if total > SUBSETS_MAX_VERTICES {
        return Err(Error::unsupported(format!(
            "subset enumeration is capped at n·m ≤ {SUBSETS_MAX_VERTICES}, got {total}"
        )));
    }
    let m = spec.m();
    let n = spec.n();
    let rules = RowRules::new(spec);
    let row_mask = (1u64 << m) - 1;
    let mut masks = vec![0u64; n];

    // A defended member needs at least half of a closed neighbourhood of size ≥ m + 2.
    let lower = (m + 1).div_ceil(2).max(1);
    for k in lower..=total {
        let mut bits: u64 = (1u64 << k) - 1;
        let limit = 1u64 << total;
        while bits < limit {
            for (c, slot) in masks.iter_mut().enumerate() {
                *slot = bits >> (c * m) & row_mask;
            }
            if masks_are_gda(spec, &rules, &masks) {
                let witness = ColumnSet::from_masks(*spec, masks.clone())?;
                return Ok(GammaResult::new(k, Method::Subsets).with_witness(witness));
            }
            // next integer with the same popcount
            let low = bits & bits.wrapping_neg();
            let ripple = bits + low;
            bits = (((ripple ^ bits) >> 2) / low) | ripple;
        }
    }
    Err(Error::Internal(format!("{spec} has no GDA")))
}
