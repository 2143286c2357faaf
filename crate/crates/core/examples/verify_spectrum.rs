//! Build a vertex set by hand, check it, and read off its spectrum.

use gda_lex::verify::{column_profile, is_gda, is_gda_by_definition, spectrum};
use gda_lex::{ColumnSet, ProductSpec};

fn main() -> gda_lex::Result<()> {
    let spec: ProductSpec = "P6∘C4".parse()?;
    // rows 0..4 as bits; a full column, three rows, empty, empty, three rows, a full column
    let set = ColumnSet::from_masks(spec, vec![0b1111, 0b0111, 0, 0, 0b0111, 0b1111])?;
    println!("{spec}: {} vertices, profile {:?}", set.len(), column_profile(&set));
    println!("column check: {}, neighbourhood check: {}", is_gda(&set), is_gda_by_definition(&set));
    if is_gda(&set) {
        println!("spectrum {}", spectrum(&set)?);
    }

    let mut thin = set.clone();
    thin.set_mask(1, 0b0011);
    println!("dropping a row from column 2: alliance = {}", is_gda(&thin));
    Ok(())
}
