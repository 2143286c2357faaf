//! Method selection, range cross-checks and output rendering.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::closed_form::{gamma, gamma_small};
use crate::engine::{default_max_part, min_sequence_value, SequenceValueContext};
use crate::error::{Error, Result};
use crate::graph::{FactorKind, FactorSpec, ProductSpec};
use crate::oracle::{
    compute_value_table, min_gda_columns, min_gda_subsets, ValueTable, COLUMN_DP_MAX_M,
    SUBSETS_MAX_VERTICES,
};
use crate::result::{GammaResult, Method};
use crate::verify::column_profile;

/// Table size used when no cached table is available.
pub const DEFAULT_K_MAX: usize = 7;

/// What the user asked for; `Auto` is the closed form with a sequence-DP sanity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MethodChoice {
    Auto,
    Closed,
    SequenceDp,
    ColumnDp,
    Subsets,
}

impl MethodChoice {
    pub fn as_str(self) -> &'static str {
        match self {
            MethodChoice::Auto => "auto",
            MethodChoice::Closed => "closed",
            MethodChoice::SequenceDp => "sequence-dp",
            MethodChoice::ColumnDp => "column-dp",
            MethodChoice::Subsets => "subsets",
        }
    }

    /// Rejects specs outside this method's caps.
    pub fn check_caps(self, spec: &ProductSpec) -> Result<()> {
        match self {
            MethodChoice::Subsets if spec.vertex_count() > SUBSETS_MAX_VERTICES => {
                Err(Error::Unsupported(format!(
                    "{spec}: subsets is capped at n·m ≤ {SUBSETS_MAX_VERTICES}"
                )))
            }
            MethodChoice::ColumnDp if spec.m() > COLUMN_DP_MAX_M => Err(Error::Unsupported(
                format!("{spec}: column-dp is capped at m ≤ {COLUMN_DP_MAX_M}"),
            )),
            MethodChoice::SequenceDp | MethodChoice::Auto if spec.m() > COLUMN_DP_MAX_M => {
                Err(Error::Unsupported(format!(
                    "{spec}: value tables are capped at m ≤ {COLUMN_DP_MAX_M}"
                )))
            }
            _ => Ok(()),
        }
    }
}

impl FromStr for MethodChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "auto" => Ok(MethodChoice::Auto),
            "closed" | "closed-form" => Ok(MethodChoice::Closed),
            "sequence-dp" => Ok(MethodChoice::SequenceDp),
            "column-dp" => Ok(MethodChoice::ColumnDp),
            "subsets" => Ok(MethodChoice::Subsets),
            other => Err(Error::invalid(format!("unknown method `{other}`"))),
        }
    }
}

/// Optional user-supplied value table, used when its inner factor matches.
#[derive(Debug, Clone, Default)]
pub struct TableSource {
    cached: Option<ValueTable>,
}

impl TableSource {
    pub fn new(cached: Option<ValueTable>) -> Self {
        TableSource { cached }
    }

    pub fn cached_for(&self, g2: FactorSpec) -> Option<&ValueTable> {
        self.cached.as_ref().filter(|t| t.g2() == g2)
    }

    fn table(&self, g2: FactorSpec, k_max: usize) -> Result<ValueTable> {
        match self.cached_for(g2) {
            Some(t) if t.k_max() >= k_max => Ok(t.clone()),
            _ => compute_value_table(g2, k_max.max(DEFAULT_K_MAX)),
        }
    }
}

fn sequence_dp(spec: &ProductSpec, tables: &TableSource) -> Result<GammaResult> {
    let max_part = default_max_part(spec.m());
    let table = tables.table(spec.g2(), max_part)?;
    let ctx = SequenceValueContext::new(spec.g1().kind(), spec.n(), &table);
    min_sequence_value(&ctx, max_part)
}

/// Runs one method on one spec.
pub fn compute(spec: &ProductSpec, method: MethodChoice, tables: &TableSource) -> Result<GammaResult> {
    method.check_caps(spec)?;
    match method {
        MethodChoice::Closed => gamma(spec),
        MethodChoice::SequenceDp => sequence_dp(spec, tables),
        MethodChoice::ColumnDp => min_gda_columns(spec),
        MethodChoice::Subsets => min_gda_subsets(spec),
        MethodChoice::Auto => {
            let r = gamma(spec)?;
            if spec.n() >= 8 && tables.cached_for(spec.g2()).is_some() {
                let check = sequence_dp(spec, tables)?;
                if check.value != r.value {
                    log::warn!(
                        "{spec}: closed form gives {}, sequence-dp gives {}",
                        r.value,
                        check.value
                    );
                }
            }
            Ok(r)
        }
    }
}

/// Machine-readable form of a single result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub g1: FactorSpec,
    pub g2: FactorSpec,
    pub gamma: usize,
    pub method: Method,
    pub sequence: Option<Vec<usize>>,
    pub witness_profile: Option<Vec<usize>>,
}

impl ResultRecord {
    pub fn new(spec: &ProductSpec, r: &GammaResult) -> Self {
        ResultRecord {
            g1: spec.g1(),
            g2: spec.g2(),
            gamma: r.value,
            method: r.method,
            sequence: r.sequence.as_ref().map(|w| w.parts().to_vec()),
            witness_profile: r.witness.as_ref().map(column_profile),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serialises")
    }
}

/// Human-readable form; with `witness` the column profile and masks follow.
pub fn render_text(spec: &ProductSpec, r: &GammaResult, witness: bool) -> String {
    let mut out = format!("γ_a({spec}) = {} [{}]\n", r.value, r.method);
    if let Some(w) = &r.sequence {
        let _ = writeln!(out, "sequence: {w}");
    }
    if let Some(f) = r.family {
        let _ = writeln!(out, "family: f{f}");
    }
    if r.dispatch_fallback {
        out.push_str("threshold split unresolved; min-of-four used\n");
    }
    if witness {
        if let Some(set) = &r.witness {
            let _ = writeln!(out, "profile: {:?}", column_profile(set));
            let m = spec.m();
            for (i, mask) in set.masks().iter().enumerate() {
                let rows: String = (0..m).map(|j| if mask >> j & 1 == 1 { '#' } else { '.' }).collect();
                let _ = writeln!(out, "  column {:>3}: {rows}", i + 1);
            }
        }
    }
    out
}

/// One cell of a regenerated small-order table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: usize,
    pub m: usize,
    pub g1_kind: FactorKind,
    pub g2_kind: FactorKind,
    pub gamma: usize,
    pub method: Method,
}

/// Small-order values from the stored formulas.
pub fn small_table(specs: &[ProductSpec]) -> Result<Vec<TableRow>> {
    specs
        .iter()
        .map(|s| {
            Ok(TableRow {
                n: s.n(),
                m: s.m(),
                g1_kind: s.g1().kind(),
                g2_kind: s.g2().kind(),
                gamma: gamma_small(s)?,
                method: Method::ClosedForm,
            })
        })
        .collect()
}

pub fn render_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("n,m,g1_kind,g2_kind,gamma,method\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{},{},{},{}", r.n, r.m, r.g1_kind, r.g2_kind, r.gamma, r.method);
    }
    out
}

/// Markdown grid with one row per `n` and one column per `m`.
pub fn render_md(rows: &[TableRow]) -> String {
    let mut ms: Vec<usize> = rows.iter().map(|r| r.m).collect();
    ms.sort_unstable();
    ms.dedup();
    let mut keys: Vec<(FactorKind, FactorKind, usize)> =
        rows.iter().map(|r| (r.g1_kind, r.g2_kind, r.n)).collect();
    keys.sort_unstable();
    keys.dedup();
    let mut out = String::from("| product |");
    for m in &ms {
        let _ = write!(out, " m={m} |");
    }
    out.push_str("\n|---|");
    out.push_str(&"---|".repeat(ms.len()));
    out.push('\n');
    for (k1, k2, n) in keys {
        let _ = write!(out, "| {}{n}∘{}m |", k1.letter(), k2.letter());
        for &m in &ms {
            let cell = rows
                .iter()
                .find(|r| (r.g1_kind, r.g2_kind, r.n, r.m) == (k1, k2, n, m))
                .map(|r| r.gamma.to_string())
                .unwrap_or_default();
            let _ = write!(out, " {cell} |");
        }
        out.push('\n');
    }
    out
}

pub fn render_table_json(rows: &[TableRow]) -> String {
    serde_json::to_string_pretty(rows).expect("plain data serialises") + "\n"
}

/// Per-method outcome in a cross-check cell: a value or the error text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellValue {
    pub method: String,
    pub value: std::result::Result<usize, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub spec: String,
    pub values: Vec<CellValue>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CrosscheckReport {
    pub cells: usize,
    pub mismatches: Vec<Mismatch>,
    pub wall_time: Duration,
}

impl CrosscheckReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for mm in &self.mismatches {
            let vals: Vec<String> = mm
                .values
                .iter()
                .map(|c| match &c.value {
                    Ok(v) => format!("{}={v}", c.method),
                    Err(e) => format!("{}=error({e})", c.method),
                })
                .collect();
            let _ = writeln!(out, "MISMATCH {}: {}", mm.spec, vals.join(" "));
        }
        let _ = writeln!(
            out,
            "{} cells, {} mismatches, {:.2?}",
            self.cells,
            self.mismatches.len(),
            self.wall_time
        );
        out
    }
}

/// Every method on every cell; a cell mismatches if the values differ or a method fails.
pub fn crosscheck(specs: &[ProductSpec], methods: &[MethodChoice], tables: &TableSource) -> Result<CrosscheckReport> {
    if methods.len() < 2 {
        return Err(Error::invalid("crosscheck needs at least two methods"));
    }
    if specs.is_empty() {
        return Err(Error::invalid("crosscheck range is empty"));
    }
    for s in specs {
        for m in methods {
            m.check_caps(s)?;
        }
    }
    let start = Instant::now();
    let mut mismatches: Vec<(ProductSpec, Mismatch)> = specs
        .par_iter()
        .filter_map(|s| {
            let values: Vec<CellValue> = methods
                .iter()
                .map(|&m| CellValue {
                    method: m.as_str().to_string(),
                    value: compute(s, m, tables).map(|r| r.value).map_err(|e| e.to_string()),
                })
                .collect();
            let first = &values[0].value;
            let agree = first.is_ok() && values.iter().all(|c| &c.value == first);
            (!agree).then(|| (*s, Mismatch { spec: s.to_string(), values }))
        })
        .collect();
    mismatches.sort_by_key(|(s, _)| (s.combo(), s.n(), s.m()));
    Ok(CrosscheckReport {
        cells: specs.len(),
        mismatches: mismatches.into_iter().map(|(_, m)| m).collect(),
        wall_time: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use FactorKind::*;

    fn spec(k1: FactorKind, n: usize, k2: FactorKind, m: usize) -> ProductSpec {
        ProductSpec::of(k1, n, k2, m).unwrap()
    }

    #[test]
    fn json_roundtrip() {
        let tables = TableSource::default();
        for (s, method) in [
            (spec(Path, 20, Cycle, 15), MethodChoice::Closed),
            (spec(Cycle, 6, Cycle, 3), MethodChoice::Subsets),
            (spec(Path, 9, Path, 5), MethodChoice::SequenceDp),
            (spec(Cycle, 4, Path, 3), MethodChoice::ColumnDp),
        ] {
            let rec = ResultRecord::new(&s, &compute(&s, method, &tables).unwrap());
            let back: ResultRecord = serde_json::from_str(&rec.to_json()).unwrap();
            assert_eq!(back, rec);
        }
    }

    #[test]
    fn json_schema() {
        let s = spec(Path, 20, Cycle, 15);
        let rec = ResultRecord::new(&s, &compute(&s, MethodChoice::Closed, &TableSource::default()).unwrap());
        let v: serde_json::Value = serde_json::from_str(&rec.to_json()).unwrap();
        assert_eq!(v["g1"]["kind"], "path");
        assert_eq!(v["g1"]["order"], 20);
        assert_eq!(v["g2"]["kind"], "cycle");
        assert_eq!(v["gamma"], 116);
        assert_eq!(v["method"], "closed-form");
        assert_eq!(v["sequence"], serde_json::json!([5, 5, 5, 5]));
        assert!(v["witness_profile"].is_null());
    }

    #[test]
    fn csv_layout() {
        let specs: Vec<_> = (2..=7).map(|n| spec(Path, n, Cycle, 3)).collect();
        let csv = render_csv(&small_table(&specs).unwrap());
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "n,m,g1_kind,g2_kind,gamma,method");
        assert_eq!(lines[1], "2,3,path,cycle,3,closed-form");
        let column: Vec<&str> = lines[1..].iter().map(|l| l.split(',').nth(4).unwrap()).collect();
        assert_eq!(column, ["3", "5", "5", "7", "8", "10"]);
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn markdown_grid() {
        let specs: Vec<_> = (4..=5).flat_map(|n| (3..=5).map(move |m| spec(Path, n, Path, m))).collect();
        let md = render_md(&small_table(&specs).unwrap());
        assert!(md.starts_with("| product | m=3 | m=4 | m=5 |"));
        assert!(md.contains("| P4∘Pm | 5 | 7 | 9 |"));
        assert!(md.contains("| P5∘Pm | 5 | 7 | 9 |"));
    }

    #[test]
    fn caps() {
        assert!(MethodChoice::Subsets.check_caps(&spec(Path, 7, Cycle, 3)).is_err());
        assert!(MethodChoice::ColumnDp.check_caps(&spec(Path, 7, Cycle, 21)).is_err());
        assert!(MethodChoice::Closed.check_caps(&spec(Path, 7, Cycle, 21)).is_ok());
    }

    #[test]
    fn crosscheck_flags_corrupted_cache() {
        let g2 = FactorSpec::cycle(4).unwrap();
        let good = compute_value_table(g2, 7).unwrap();
        let mut vi = good.val_i_slice().to_vec();
        vi[3] -= 1; // val_I(5)
        let bad = ValueTable::from_values(g2, vi, good.val_e_slice().to_vec()).unwrap();
        let specs: Vec<_> = (8..=10).map(|n| spec(Cycle, n, Cycle, 4)).collect();
        let methods = [MethodChoice::ColumnDp, MethodChoice::SequenceDp];
        let clean = crosscheck(&specs, &methods, &TableSource::new(Some(good))).unwrap();
        assert!(clean.ok());
        let report = crosscheck(&specs, &methods, &TableSource::new(Some(bad))).unwrap();
        assert!(!report.ok());
        // C9 = (4,5) and C10 = (5,5) use val_I(5); C8 = (4,4) does not
        let named: Vec<&str> = report.mismatches.iter().map(|m| m.spec.as_str()).collect();
        assert_eq!(named, ["C9∘C4", "C10∘C4"]);
    }

    #[test]
    fn crosscheck_needs_two_methods() {
        let specs = [spec(Path, 3, Cycle, 3)];
        assert!(crosscheck(&specs, &[MethodChoice::Closed], &TableSource::default()).is_err());
    }
}
