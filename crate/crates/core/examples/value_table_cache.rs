//! Section cost tables: compute, save, reload.

use gda_lex::closed_form::closed_value_table;
use gda_lex::oracle::compute_value_table;
use gda_lex::{FactorSpec, ValueTable};

fn main() -> gda_lex::Result<()> {
    let g2 = FactorSpec::cycle(6)?;
    let table = compute_value_table(g2, 9)?;
    println!("k  val_I  val_E   ({g2})");
    for k in 2..=table.k_max() {
        println!("{k}  {:>5}  {:>5}", table.val_i(k).unwrap(), table.val_e(k).unwrap());
    }

    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("cycle6.json");
    table.save(&path)?;
    let back = ValueTable::load(&path)?;
    assert_eq!(back, table);
    println!("reloaded from {}", path.display());

    // the closed expressions cover k up to 7
    let closed = closed_value_table(g2)?;
    assert_eq!(closed, table.truncated(7)?);
    println!("closed expressions match for k ≤ 7");
    Ok(())
}
