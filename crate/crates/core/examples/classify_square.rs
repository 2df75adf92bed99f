//! Classifies every cell of a square read from a file (text or JSON), or of
//! the order-10 family square when no file is given.
//!
//! ```bash
//! cargo run --example classify_square
//! cargo run --example classify_square -- square.txt
//! ```

use latin_transversals::format::parse_any;
use latin_transversals::{classify, CellStatus, ClassifyOptions, FamilySpec, Result};

fn main() -> Result<()> {
    let square = match std::env::args().nth(1) {
        Some(path) => parse_any(&std::fs::read_to_string(path)?)?,
        None => FamilySpec::for_even_order(10)?.build()?,
    };
    let report = classify(&square, &ClassifyOptions::default())?;

    let n = square.order();
    for r in 0..n {
        let line: String = (0..n)
            .map(|c| match report.status(r, c) {
                CellStatus::Free => " .",
                CellStatus::Covered => " o",
                CellStatus::Pinned => " P",
                CellStatus::Unknown => " ?",
            })
            .collect();
        println!("{line}");
    }
    println!("tau = {}, pinned = {:?}", report.tau, report.pinned.iter().map(|e| e.to_string()).collect::<Vec<_>>());
    Ok(())
}
