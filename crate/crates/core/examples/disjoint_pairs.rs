//! Pairs of transversals with no entry in common, and the parity of
//! transversal counts at even order.
//!
//! ```bash
//! cargo run --example disjoint_pairs
//! ```

use latin_transversals::constructions::build_exceptional;
use latin_transversals::engine::{count_parity_check, find_disjoint_pair};
use latin_transversals::{cayley_table, Result};

fn main() -> Result<()> {
    for n in [3, 5, 7] {
        match find_disjoint_pair(&cayley_table(n)?, None)? {
            Some((a, b)) => println!("cyclic {n}: {:?} and {:?}", a.cols(), b.cols()),
            None => println!("cyclic {n}: no disjoint pair"),
        }
    }
    for (name, sq) in [("EX6", build_exceptional(6)?), ("EX8", build_exceptional(8)?), ("cyclic 6", cayley_table(6)?)] {
        let (total, even) = count_parity_check(&sq, None)?;
        println!("{name}: {total} transversals, even: {even}");
    }
    Ok(())
}
