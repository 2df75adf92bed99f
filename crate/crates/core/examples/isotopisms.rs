//! Relabelling rows, columns and symbols moves transversals along with the
//! square.
//!
//! ```bash
//! cargo run --example isotopisms
//! ```

use latin_transversals::engine::find_transversal;
use latin_transversals::isotopism::map_transversal;
use latin_transversals::{apply_isotopism, cayley_table, Isotopism, Permutation, Result, SearchConstraints};

fn main() -> Result<()> {
    let square = cayley_table(5)?;
    let iso = Isotopism::new(
        Permutation::new(vec![4, 0, 3, 1, 2])?,
        Permutation::from_transpositions(5, [(0, 1), (2, 4)])?,
        Permutation::new(vec![1, 2, 3, 4, 0])?,
    )?;
    let image = apply_isotopism(&square, &iso)?;
    println!("{image:?}");

    let t = find_transversal(&square, &SearchConstraints::transversal())?.expect("odd cyclic squares have transversals");
    let moved = map_transversal(&image, &t, &iso)?;
    println!("{:?} maps to {:?}", t.cols(), moved.cols());
    Ok(())
}
