//! The Δ-sum certificate: the row maxima of `Δ = s - r - c` add up to `n/2`
//! and the `-n/2` side is ruled out, so every transversal takes each unique
//! row maximum.
//!
//! ```bash
//! cargo run --example delta_certificate -- 14
//! ```

use latin_transversals::delta::{delta_profile, forced_entry_certificate};
use latin_transversals::engine::is_pinned;
use latin_transversals::{FamilySpec, Result};

fn main() -> Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(14);
    let spec = FamilySpec::for_even_order(n)?;
    let square = spec.build()?;

    let profile = delta_profile(&square);
    for (r, row) in profile.rows.iter().enumerate() {
        println!("row {r:>2}: min {:>2}  max {:>2}  argmax {:?}", row.min, row.max, row.argmax.iter().map(|e| e.col).collect::<Vec<_>>());
    }

    let cert = forced_entry_certificate(&square)?;
    println!("{}: max sum {}, min sum {}, {:?}", spec.label(), cert.max_sum, cert.min_sum, cert.refutation);
    if let Some((a, b)) = cert.clash {
        println!("unique row minima {a} and {b} share a column");
    }
    for e in &cert.forced {
        println!("forced {e}, pinned by search: {}", is_pinned(&square, *e, None)?);
    }
    Ok(())
}
