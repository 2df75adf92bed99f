//! The explicit sets of transversal-free entries and how their union compares
//! with the closed-form bound, for a range of orders.
//!
//! ```bash
//! cargo run --example lower_bounds
//! ```

use latin_transversals::bounds::{bound_sets, verify_bound};
use latin_transversals::{classify, ClassifyOptions, Family, FamilySpec, Result};

fn main() -> Result<()> {
    println!("{:<6} {:>5} {:>5} {:>5} {:>7} {:>9}", "square", "|N|", "|O|", "|M|", "union", "bound");
    for n in (10..=60).step_by(2) {
        let spec = FamilySpec::for_even_order(n)?;
        let sets = bound_sets(&spec)?;
        println!(
            "{:<6} {:>5} {:>5} {:>5} {:>7} {:>9.2}",
            spec.label(),
            sets.n_set.len(),
            sets.o_set.len(),
            sets.m_set.len(),
            sets.union_size(),
            sets.formula_value()
        );
    }

    let spec = FamilySpec::new(Family::U, 14)?;
    let report = classify(&spec.build()?, &ClassifyOptions::default())?;
    let check = verify_bound(&bound_sets(&spec)?, &report)?;
    println!("{}", serde_json::to_string_pretty(&check)?);
    Ok(())
}
