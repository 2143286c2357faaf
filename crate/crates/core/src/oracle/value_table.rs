//! Section costs `val_I(k)` and `val_E(k)` for a fixed inner factor.
//!
//! `val_I(k)` is the minimum GDA of `P_k ∘ G2` whose first and last columns are
//! empty; `val_E(k)` only forces the first column empty. Below their defining
//! ranges they are clamped: `val_I(2) = val_I(3) = val_I(4)` and
//! `val_E(2) = val_E(3)`.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::columns::min_gda_path_pinned;
use crate::error::{Error, Result};
use crate::graph::{FactorKind, FactorSpec};

pub const TOOL_VERSION: &str = concat!("gda-lex ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueTable {
    g2: FactorSpec,
    k_max: usize,
    /// Indexed from `k = 2`.
    val_i: Vec<usize>,
    val_e: Vec<usize>,
}

impl ValueTable {
    /// Builds a table from explicit values indexed from `k = 2`.
    pub fn from_values(g2: FactorSpec, val_i: Vec<usize>, val_e: Vec<usize>) -> Result<Self> {
        if val_i.len() != val_e.len() || val_i.len() < 3 {
            return Err(Error::invalid(
                "value table needs equal-length val_I/val_E covering at least k = 2..=4",
            ));
        }
        if g2.order() < 3 {
            return Err(Error::invalid("inner factor must have order ≥ 3"));
        }
        Ok(ValueTable {
            g2,
            k_max: val_i.len() + 1,
            val_i,
            val_e,
        })
    }

    pub fn g2(&self) -> FactorSpec {
        self.g2
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    /// Cost of an internal section of length `k`.
    pub fn val_i(&self, k: usize) -> Option<usize> {
        (2..=self.k_max).contains(&k).then(|| self.val_i[k - 2])
    }

    /// Cost of an external section of length `k`.
    pub fn val_e(&self, k: usize) -> Option<usize> {
        (2..=self.k_max).contains(&k).then(|| self.val_e[k - 2])
    }

    pub fn val_i_slice(&self) -> &[usize] {
        &self.val_i
    }

    pub fn val_e_slice(&self) -> &[usize] {
        &self.val_e
    }

    /// Truncates or rejects: the result covers `k ≤ k_max`.
    pub fn truncated(&self, k_max: usize) -> Result<Self> {
        if k_max > self.k_max || k_max < 4 {
            return Err(Error::invalid(format!(
                "cannot truncate table with k_max {} to {k_max}",
                self.k_max
            )));
        }
        Self::from_values(
            self.g2,
            self.val_i[..k_max - 1].to_vec(),
            self.val_e[..k_max - 1].to_vec(),
        )
    }

    pub fn to_cache(&self) -> ValueTableFile {
        ValueTableFile {
            g2_kind: self.g2.kind(),
            m: self.g2.order(),
            k_max: self.k_max,
            val_i: self.val_i.clone(),
            val_e: self.val_e.clone(),
            tool_version: TOOL_VERSION.to_string(),
        }
    }

    pub fn from_cache(file: ValueTableFile) -> Result<Self> {
        let g2 = FactorSpec::new(file.g2_kind, file.m)?;
        if file.val_i.len() + 1 != file.k_max {
            return Err(Error::Cache(format!(
                "k_max {} disagrees with {} stored values",
                file.k_max,
                file.val_i.len()
            )));
        }
        Self::from_values(g2, file.val_i, file.val_e)
    }

    /// Reads a cache file written by [`ValueTable::save`].
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        let file: ValueTableFile = serde_json::from_str(&text)?;
        Self::from_cache(file)
    }

    /// Writes the cache file atomically (temporary file in the same directory, then rename).
    pub fn save(&self, path: &Path) -> Result<()> {
        let dir = match path.parent() {
            Some(p) if !p.as_os_str().is_empty() => p,
            _ => Path::new("."),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        let json = serde_json::to_string_pretty(&self.to_cache())?;
        tmp.write_all(json.as_bytes())?;
        tmp.write_all(b"\n")?;
        tmp.as_file().sync_all()?;
        tmp.persist(path).map_err(|e| Error::Cache(e.to_string()))?;
        Ok(())
    }
}

/// On-disk layout of a value table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueTableFile {
    pub g2_kind: FactorKind,
    pub m: usize,
    pub k_max: usize,
    #[serde(rename = "val_I")]
    pub val_i: Vec<usize>,
    #[serde(rename = "val_E")]
    pub val_e: Vec<usize>,
    pub tool_version: String,
}

/// Computes `val_I` / `val_E` for `k ≤ k_max` with the column DP, pinning the
/// boundary columns empty.
pub fn compute_value_table(g2: FactorSpec, k_max: usize) -> Result<ValueTable> {
    if k_max < 4 {
        return Err(Error::invalid(format!("k_max must be at least 4, got {k_max}")));
    }
    if g2.order() < 3 {
        return Err(Error::invalid(format!("inner factor {g2} must have order ≥ 3")));
    }
    let solve = |k: usize, pinned: &[usize]| -> Result<usize> {
        min_gda_path_pinned(g2, k, pinned)?
            .map(|(v, _)| v)
            .ok_or_else(|| Error::Internal(format!("no pinned GDA for P{k} ∘ {g2}")))
    };
    let mut val_i = vec![0; k_max - 1];
    let mut val_e = vec![0; k_max - 1];
    for k in 4..=k_max {
        val_i[k - 2] = solve(k, &[0, k - 1])?;
    }
    for k in 3..=k_max {
        val_e[k - 2] = solve(k, &[0])?;
    }
    val_i[0] = val_i[2];
    val_i[1] = val_i[2];
    val_e[0] = val_e[1];
    ValueTable::from_values(g2, val_i, val_e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clamps_hold() {
        for g2 in [FactorSpec::cycle(3).unwrap(), FactorSpec::path(6).unwrap()] {
            let t = compute_value_table(g2, 7).unwrap();
            assert_eq!(t.val_i(2), t.val_i(4));
            assert_eq!(t.val_i(3), t.val_i(4));
            assert_eq!(t.val_e(2), t.val_e(3));
            assert_eq!(t.val_i(8), None);
            assert_eq!(t.val_e(1), None);
        }
    }

    #[test]
    fn rejects_small_k_max() {
        assert!(compute_value_table(FactorSpec::cycle(4).unwrap(), 3).is_err());
    }

    #[test]
    fn cache_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c7.json");
        let t = compute_value_table(FactorSpec::cycle(7).unwrap(), 7).unwrap();
        t.save(&path).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        let raw: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(raw["g2_kind"], "cycle");
        assert_eq!(raw["m"], 7);
        assert_eq!(raw["val_I"].as_array().unwrap().len(), 6);
        assert_eq!(ValueTable::load(&path).unwrap(), t);
    }

    #[test]
    fn malformed_cache_is_rejected() {
        let file = ValueTableFile {
            g2_kind: FactorKind::Path,
            m: 5,
            k_max: 9,
            val_i: vec![1, 2, 3],
            val_e: vec![1, 2, 3],
            tool_version: String::new(),
        };
        assert!(ValueTable::from_cache(file).is_err());
    }
}
