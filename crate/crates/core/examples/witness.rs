//! Concrete alliances from a part sequence and from the small-order tables.

use gda_lex::verify::{column_profile, is_gda, spectrum};
use gda_lex::witness::{witness_from_sequence, witness_table};
use gda_lex::{PartSequence, ProductSpec};

fn show(label: &str, set: &gda_lex::ColumnSet) {
    println!("{label}: {} vertices, alliance {}", set.len(), is_gda(set));
    for (i, mask) in set.masks().iter().enumerate() {
        let m = set.spec().m();
        let row: String = (0..m).map(|r| if mask >> r & 1 == 1 { '#' } else { '.' }).collect();
        println!("  {:>3} {row}", i + 1);
    }
}

fn main() -> gda_lex::Result<()> {
    let spec: ProductSpec = "P13∘C5".parse()?;
    let w = PartSequence::new(vec![4, 5, 4])?;
    let set = witness_from_sequence(spec, &w)?;
    show(&format!("{spec} from {w}"), &set);
    println!("  spectrum {}", spectrum(&set)?);

    let spec: ProductSpec = "C5∘P4".parse()?;
    let set = witness_table(spec)?;
    show(&format!("{spec} table construction"), &set);
    println!("  profile {:?}", column_profile(&set));
    Ok(())
}
