//! Every transversal of the block square meets all nine blocks. Enumerates
//! them for the given `m` (default 3; `m = 5` takes a few minutes).
//!
//! ```bash
//! cargo run --release --example block_theorem -- 3
//! ```

use latin_transversals::blocks::verify_hit_theorem;
use latin_transversals::Result;

fn main() -> Result<()> {
    let m: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let check = verify_hit_theorem(m, None)?;
    println!("{}", serde_json::to_string_pretty(&check)?);
    println!("proven: {}", check.proven());
    Ok(())
}
