mod common;

use std::collections::BTreeMap;

use gda_lex::closed_form::{closed_value_table, gamma, gamma_min_of_four, gamma_via_thresholds};
use gda_lex::oracle::{compute_value_table, min_gda_columns};
use gda_lex::{FactorKind, FactorSpec, ProductSpec};

use common::{sweep, KINDS};

fn spec(k1: FactorKind, n: usize, k2: FactorKind, m: usize) -> ProductSpec {
    ProductSpec::of(k1, n, k2, m).unwrap()
}

fn exact(s: &ProductSpec) -> usize {
    min_gda_columns(s).unwrap().value
}

/// Cells where the closed form and the oracle disagree, as (spec, formula, oracle).
const FORMULA_MISMATCHES: [(&str, usize, usize); 30] = [
    ("P12∘C4", 22, 21), ("P17∘C4", 30, 29), ("P22∘C4", 38, 37),
    ("C8∘C4", 15, 14), ("C10∘C3", 13, 14), ("C12∘C4", 23, 21), ("C12∘C5", 27, 25),
    ("C12∘C6", 32, 30), ("C12∘C7", 36, 35), ("C13∘C4", 23, 22), ("C14∘C3", 18, 19),
    ("C17∘C4", 31, 29), ("C17∘C5", 36, 34), ("C17∘C6", 43, 41), ("C17∘C7", 49, 48),
    ("C18∘C3", 23, 24), ("C18∘C4", 31, 30), ("C22∘C3", 28, 29), ("C22∘C4", 39, 37),
    ("C22∘C5", 45, 43), ("C22∘C6", 54, 52), ("C22∘C7", 62, 61), ("C23∘C4", 39, 38),
    ("C8∘P3", 9, 10), ("C12∘P4", 20, 19), ("C13∘P3", 14, 15), ("C17∘P4", 27, 26),
    ("C18∘P3", 19, 20), ("C22∘P4", 34, 33), ("C23∘P3", 24, 25),
];

#[test]
fn closed_form_against_oracle() {
    let mut got = Vec::new();
    for s in sweep(2..=24, 3..=8) {
        let f = gamma(&s).unwrap().value;
        let e = exact(&s);
        if f != e {
            got.push((s.to_string(), f, e));
        }
    }
    let mut want: Vec<(String, usize, usize)> =
        FORMULA_MISMATCHES.iter().map(|&(s, f, e)| (s.to_string(), f, e)).collect();
    got.sort();
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn small_orders_match_oracle_to_m_20() {
    for s in sweep(2..=7, 3..=20) {
        assert_eq!(gamma(&s).unwrap().value, exact(&s), "{s}");
    }
}

#[test]
fn closed_table_matches_oracle_table() {
    for k in KINDS {
        for m in 4..=20 {
            let g2 = FactorSpec::new(k, m).unwrap();
            assert_eq!(closed_value_table(g2).unwrap(), compute_value_table(g2, 7).unwrap(), "{g2}");
        }
    }
}

#[test]
fn hierarchy() {
    use FactorKind::*;
    let mut path_inner_above = Vec::new();
    for n in 3..=24 {
        for m in 3..=8 {
            let pp = exact(&spec(Path, n, Path, m));
            let cp = exact(&spec(Cycle, n, Path, m));
            let pc = exact(&spec(Path, n, Cycle, m));
            let cc = exact(&spec(Cycle, n, Cycle, m));
            assert!(pp <= cp && cp <= cc && pc <= cc, "n={n} m={m}");
            if pp > pc {
                path_inner_above.push((n, m, pp, pc));
            }
        }
    }
    assert_eq!(path_inner_above, vec![(3, 7, 10, 9), (8, 7, 23, 22), (13, 7, 36, 35)]);
}

#[test]
fn non_comparability() {
    use FactorKind::*;
    let p5c3 = gamma(&spec(Path, 5, Cycle, 3)).unwrap().value;
    let c5p3 = gamma(&spec(Cycle, 5, Path, 3)).unwrap().value;
    assert_eq!((p5c3, c5p3), (7, 5));
    // the larger pair ties: both are 116
    let p20c15 = spec(Path, 20, Cycle, 15);
    let c20p15 = spec(Cycle, 20, Path, 15);
    assert_eq!(exact(&p20c15), 116);
    assert_eq!(exact(&c20p15), 116);
    assert_eq!(gamma(&p20c15).unwrap().value, 116);
    assert_eq!(gamma(&c20p15).unwrap().value, 116);
}

#[test]
fn threshold_dispatch_disagreements_are_confined() {
    let mut by_combo: BTreeMap<String, Vec<(usize, usize)>> = BTreeMap::new();
    let mut fallbacks = 0;
    for k in KINDS {
        for m in 4..=20 {
            let t = compute_value_table(FactorSpec::new(k, m).unwrap(), 7).unwrap();
            for g1 in KINDS {
                for n in 8..=60 {
                    let s = spec(g1, n, k, m);
                    let via = gamma_via_thresholds(&s, &t).unwrap();
                    let four = gamma_min_of_four(&s, &t).unwrap();
                    assert!(via.value >= four.value, "{s}");
                    fallbacks += usize::from(via.dispatch_fallback);
                    if via.value != four.value {
                        by_combo.entry(s.combo().to_string()).or_default().push((n, m));
                    }
                }
            }
        }
    }
    assert_eq!(fallbacks, 132);
    let total: usize = by_combo.values().map(Vec::len).sum();
    assert_eq!(total, 115);
    assert_eq!(by_combo["CC"], vec![(19, 14), (19, 15), (19, 16), (19, 17)]);
    assert_eq!(by_combo["CP"], vec![(19, 9), (19, 10)]);
    // t1 for PC at n ≡ 3 (mod 5) should be 11
    assert!(by_combo["PC"].iter().all(|&(n, m)| n % 5 == 3 && (m == 9 || m == 10)));
    // t3 for PP at n ≡ 2, 3 (mod 6) should be 12; n = 19 is the other special
    assert!(by_combo["PP"]
        .iter()
        .all(|&(n, m)| (matches!(n % 6, 2 | 3) && (6..=11).contains(&m)) || (n, m) == (19, 5)));
}
