//! Closed-form evaluation: candidate families, min-of-four and threshold dispatch.

use gda_lex::closed_form::{
    candidate_sequences, closed_value_table, gamma_min_of_four, gamma_via_thresholds, select_family, thresholds,
};
use gda_lex::ProductSpec;

fn main() -> gda_lex::Result<()> {
    let spec: ProductSpec = "C23∘P9".parse()?;
    for (family, w) in candidate_sequences(spec.n())? {
        match w {
            Some(w) => println!("family {family}: {w}"),
            None => println!("family {family}: undefined"),
        }
    }
    let table = closed_value_table(spec.g2())?;
    let four = gamma_min_of_four(&spec, &table)?;
    println!("min of four: {} (family {:?})", four.value, four.family);

    let t = thresholds(spec.n(), spec.combo())?;
    println!("thresholds {:?} {:?} {:?} pick family {}", t.t1, t.t2, t.t3, select_family(spec.m(), t));
    let th = gamma_via_thresholds(&spec, &table)?;
    println!("dispatch: {} fallback={}", th.value, th.dispatch_fallback);
    Ok(())
}
