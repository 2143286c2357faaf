//! Cross-check methods over a grid and render the result as JSON, CSV and Markdown.

use gda_lex::report::{crosscheck, render_csv, render_md, small_table, MethodChoice, TableSource};
use gda_lex::{ComboKind, ProductSpec};

fn main() -> gda_lex::Result<()> {
    let mut specs = Vec::new();
    for combo in ComboKind::ALL {
        for n in 8..=16 {
            for m in 4..=7 {
                specs.push(ProductSpec::of(combo.g1, n, combo.g2, m)?);
            }
        }
    }
    let methods = [MethodChoice::Closed, MethodChoice::SequenceDp, MethodChoice::ColumnDp];
    let report = crosscheck(&specs, &methods, &TableSource::new(None))?;
    print!("{}", report.render_text());

    let small: Vec<ProductSpec> = (2..=7)
        .flat_map(|n| (3..=6).map(move |m| ProductSpec::of(ComboKind::PP.g1, n, ComboKind::PP.g2, m)))
        .collect::<gda_lex::Result<_>>()?;
    let rows = small_table(&small)?;
    print!("{}", render_md(&rows));
    print!("{}", render_csv(&rows[..4]));
    Ok(())
}
