//! γ_a of a single product through the default dispatcher.

use gda_lex::closed_form::gamma;
use gda_lex::{FactorKind, ProductSpec};

fn main() -> gda_lex::Result<()> {
    for (k1, n, k2, m) in [
        (FactorKind::Path, 20, FactorKind::Cycle, 15),
        (FactorKind::Cycle, 20, FactorKind::Path, 15),
        (FactorKind::Cycle, 9, FactorKind::Cycle, 5),
        (FactorKind::Path, 6, FactorKind::Path, 3),
    ] {
        let spec = ProductSpec::of(k1, n, k2, m)?;
        let r = gamma(&spec)?;
        match &r.sequence {
            Some(w) => println!("{spec}: {} via {w} [{}]", r.value, r.method),
            None => println!("{spec}: {} [{}]", r.value, r.method),
        }
    }
    Ok(())
}
