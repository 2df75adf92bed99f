//! Transversal-free counts for the family squares of even order 10 to 24,
//! next to the closed-form lower bound.
//!
//! ```bash
//! cargo run --release --example table1
//! ```

use latin_transversals::report::{table1, EXPECTED_TABLE1};
use latin_transversals::ClassifyOptions;

fn main() {
    let (rows, err) = table1(24, &ClassifyOptions::default());
    println!("{:<6} {:>11} {:>10}", "square", "lower bound", "actual tau");
    for (row, expected) in rows.iter().zip(EXPECTED_TABLE1) {
        let mark = if row.actual_tau == expected.2 { "" } else { "  (differs)" };
        println!("{:<6} {:>11} {:>10}{mark}", row.label, row.lower_bound, row.actual_tau);
    }
    if let Some(e) = err {
        eprintln!("stopped early: {e}");
    }
}
