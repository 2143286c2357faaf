//! The two exact oracles agree wherever both apply.

use std::time::Instant;

use gda_lex::oracle::{min_gda_columns, min_gda_subsets, SUBSETS_MAX_VERTICES};
use gda_lex::{ComboKind, ProductSpec};

fn main() -> gda_lex::Result<()> {
    let mut compared = 0;
    for combo in ComboKind::ALL {
        for n in 2..=6 {
            for m in 3..=5 {
                let Ok(spec) = ProductSpec::of(combo.g1, n, combo.g2, m) else { continue };
                if spec.vertex_count() > SUBSETS_MAX_VERTICES {
                    continue;
                }
                let a = min_gda_subsets(&spec)?.value;
                let b = min_gda_columns(&spec)?.value;
                assert_eq!(a, b, "{spec}");
                compared += 1;
            }
        }
    }
    println!("subsets and column DP agree on {compared} products");

    // the column DP alone scales to long outer factors
    let spec: ProductSpec = "C60∘P12".parse()?;
    let t = Instant::now();
    let r = min_gda_columns(&spec)?;
    println!("{spec}: {} in {:?}", r.value, t.elapsed());
    Ok(())
}
