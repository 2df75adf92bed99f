//! Constrained transversal search: counting, requiring and forbidding cells,
//! and the suitable-diagonal relaxation.
//!
//! ```bash
//! cargo run --example transversal_search
//! ```

use latin_transversals::engine::{count, find};
use latin_transversals::{cayley_table, Entry, FamilySpec, Result, SearchConstraints};

fn main() -> Result<()> {
    for n in 1..=9 {
        let c = count(&cayley_table(n)?, &SearchConstraints::transversal())?;
        println!("cyclic square of order {n}: {c} transversals");
    }

    let t12 = FamilySpec::for_even_order(12)?.build()?;
    let all = count(&t12, &SearchConstraints::transversal())?;
    let through = count(&t12, &SearchConstraints::transversal().require(Entry::new(1, 0, 3)))?;
    println!("T12: {all} transversals, {through} through (1,0,3)");

    let avoiding = SearchConstraints::suitable_diagonal().forbid(1, 0);
    println!("T12 suitable diagonal avoiding (1,0): {:?}", find(&t12, &avoiding)?);

    // The Δ bound refutes large even cyclic squares at the root.
    let tight = SearchConstraints::transversal().budget(Some(1));
    println!("cyclic 20 with a one-node budget: {:?}", find(&cayley_table(20)?, &tight)?);
    Ok(())
}
