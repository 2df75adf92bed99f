//! Builds one square from each family, checks its explicit transversal, and
//! prints the smallest ones.
//!
//! ```bash
//! cargo run --example construct_families
//! ```

use latin_transversals::constructions::known_transversal;
use latin_transversals::format::to_text;
use latin_transversals::{Family, FamilySpec, Result};

fn main() -> Result<()> {
    let specs = [
        FamilySpec::new(Family::V, 10)?,
        FamilySpec::new(Family::T, 12)?,
        FamilySpec::new(Family::U, 14)?,
        FamilySpec::block(3)?,
        FamilySpec::new(Family::Ex6, 6)?,
    ];
    for spec in specs {
        let square = spec.build()?;
        let t = known_transversal(&spec, &square)?;
        println!("{} (order {}), transversal columns {:?}", spec.label(), square.order(), t.cols());
        if square.order() <= 9 {
            print!("{}", to_text(&square));
        }
    }

    // Orders outside a family's residue class are rejected.
    println!("T13: {}", FamilySpec::new(Family::T, 13).unwrap_err());
    Ok(())
}
