//! The two symmetries of the block square and the blocks they exchange.
//!
//! ```bash
//! cargo run --example autotopisms
//! ```

use latin_transversals::blocks::{autotopism_phi, automorphism_tau, verify_block_maps, PHI_BLOCK_MAPS, TAU_BLOCK_MAPS};
use latin_transversals::constructions::build_l;
use latin_transversals::isotopism::is_autotopism;
use latin_transversals::Result;

fn main() -> Result<()> {
    let tau = automorphism_tau(3)?;
    let phi = autotopism_phi(3)?;
    println!("tau rows/cols/symbols: {:?}", tau.alpha.images());
    println!("phi rows {:?}", phi.alpha.images());
    println!("phi cols {:?}", phi.beta.images());
    println!("phi symbols {:?}", phi.gamma.images());
    for (from, to) in TAU_BLOCK_MAPS {
        println!("tau: block ({},{}) -> ({},{})", from.i, from.j, to.i, to.j);
    }
    for (from, to) in PHI_BLOCK_MAPS {
        println!("phi: block ({},{}) -> ({},{})", from.i, from.j, to.i, to.j);
    }

    for m in (3..=21).step_by(2) {
        let sq = build_l(m)?;
        let fixed = is_autotopism(&sq, &automorphism_tau(m)?)? && is_autotopism(&sq, &autotopism_phi(m)?)?;
        let maps = verify_block_maps(&sq, &automorphism_tau(m)?, m, &TAU_BLOCK_MAPS)?
            && verify_block_maps(&sq, &autotopism_phi(m)?, m, &PHI_BLOCK_MAPS)?;
        println!("m = {m:>2}: fixed {fixed}, block maps {maps}");
    }
    Ok(())
}
