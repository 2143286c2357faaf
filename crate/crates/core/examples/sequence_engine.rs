//! Price individual part sequences, then minimise over all of them.

use gda_lex::engine::{default_max_part, min_sequence_value, sequence_value, SequenceValueContext};
use gda_lex::oracle::compute_value_table;
use gda_lex::{FactorKind, FactorSpec, PartSequence};

fn main() -> gda_lex::Result<()> {
    let g2 = FactorSpec::cycle(4)?;
    let table = compute_value_table(g2, 9)?;
    let ctx = SequenceValueContext::new(FactorKind::Path, 12, &table);
    for parts in [vec![4, 4, 4], vec![5, 7], vec![3, 3, 3, 3], vec![6, 6]] {
        let w = PartSequence::new(parts)?;
        println!("P12∘C4 {w}: {}", sequence_value(&ctx, &w)?);
    }
    let best = min_sequence_value(&ctx, default_max_part(4))?;
    println!("minimum {} via {}", best.value, best.sequence.expect("sequence result"));

    let ctx = SequenceValueContext::new(FactorKind::Cycle, 40, &table);
    let best = min_sequence_value(&ctx, default_max_part(4))?;
    println!("C40∘C4: {} via {}", best.value, best.sequence.expect("sequence result"));
    Ok(())
}
