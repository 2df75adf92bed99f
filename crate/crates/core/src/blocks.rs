//! The 3x3 block structure of the block square of order `3m`.
//!
//! Every transversal meets all nine `m x m` blocks. The search engine checks
//! this directly for small `m`, together with the two facts that drive it:
//! no transversal avoids block (2,2), and none avoids block (1,1). Two
//! symmetries of the square move those blocks around, which is what turns
//! the two facts into all nine.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::constructions::build_l;
use crate::delta::special_symbol_pattern;
use crate::diagonal::Transversal;
use crate::engine::{enumerate, find, SearchConstraints};
use crate::error::{Error, Result};
use crate::isotopism::{is_autotopism, Isotopism, Permutation};
use crate::square::LatinSquare;

/// A block position, 1-based: `i` counts row bands, `j` column bands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BlockIndex {
    pub i: usize,
    pub j: usize,
}

impl BlockIndex {
    pub const fn new(i: usize, j: usize) -> Self {
        BlockIndex { i, j }
    }

    pub fn cells(self, m: usize) -> impl Iterator<Item = (usize, usize)> {
        let (r0, c0) = ((self.i - 1) * m, (self.j - 1) * m);
        (r0..r0 + m).flat_map(move |r| (c0..c0 + m).map(move |c| (r, c)))
    }
}

pub fn block_of(row: usize, col: usize, m: usize) -> BlockIndex {
    BlockIndex::new(row / m + 1, col / m + 1)
}

/// `hits[i][j]` counts the transversal's entries in block `(i+1, j+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BlockHitVector {
    pub hits: [[usize; 3]; 3],
}

impl BlockHitVector {
    pub fn get(&self, b: BlockIndex) -> usize {
        self.hits[b.i - 1][b.j - 1]
    }

    pub fn min(&self) -> usize {
        self.hits.iter().flatten().copied().min().unwrap_or(0)
    }
}

fn check_order(n: usize, m: usize) -> Result<()> {
    if n != 3 * m || m == 0 {
        return Err(Error::NotBlockSquare(format!("order {n} is not 3 x {m}")));
    }
    Ok(())
}

/// Counts block hits from a column vector. Each band holds `m` rows and `m`
/// columns, so every row and column of the hit matrix must sum to `m`.
pub fn block_hits_of_cols(cols: &[usize], m: usize) -> Result<BlockHitVector> {
    check_order(cols.len(), m)?;
    let mut hits = [[0usize; 3]; 3];
    for (r, &c) in cols.iter().enumerate() {
        hits[r / m][c / m] += 1;
    }
    for band in 0..3 {
        let row: usize = hits[band].iter().sum();
        let col: usize = hits.iter().map(|h| h[band]).sum();
        if row != m || col != m {
            return Err(Error::SumViolation(format!("band {} has row sum {row} and column sum {col}, expected {m}", band + 1)));
        }
    }
    Ok(BlockHitVector { hits })
}

pub fn block_hits(square: &LatinSquare, t: &Transversal, m: usize) -> Result<BlockHitVector> {
    check_order(square.order(), m)?;
    block_hits_of_cols(t.cols(), m)
}

/// True iff every block holds exactly `m` distinct symbols, each `m` times.
pub fn blocks_are_latin_subarrays(square: &LatinSquare, m: usize) -> Result<bool> {
    check_order(square.order(), m)?;
    for i in 1..=3 {
        for j in 1..=3 {
            let mut syms: Vec<usize> = BlockIndex::new(i, j).cells(m).map(|(r, c)| square.get(r, c)).collect();
            syms.sort_unstable();
            syms.dedup();
            if syms.len() != m {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn band_swap(m: usize, a: usize, b: usize) -> Result<Permutation> {
    Permutation::from_transpositions(3 * m, (0..m).map(|x| (a * m + x, b * m + x)))
}

/// The automorphism swapping the second and third bands of rows, columns and
/// symbols.
pub fn automorphism_tau(m: usize) -> Result<Isotopism> {
    Ok(Isotopism::automorphism(band_swap(m, 1, 2)?))
}

/// The autotopism swapping row bands 1 and 2 and column bands 1 and 3.
/// Symbols swap `0` with `2m - 1` and bands 2 and 3 except their top symbols.
pub fn autotopism_phi(m: usize) -> Result<Isotopism> {
    let n = 3 * m;
    let gamma = Permutation::from_transpositions(
        n,
        std::iter::once((0, 2 * m - 1)).chain((0..m - 1).map(|x| (m + x, 2 * m + x))),
    )?;
    Isotopism::new(band_swap(m, 0, 1)?, band_swap(m, 0, 2)?, gamma)
}

pub const TAU_BLOCK_MAPS: [(BlockIndex, BlockIndex); 4] = [
    (BlockIndex::new(2, 2), BlockIndex::new(3, 3)),
    (BlockIndex::new(1, 2), BlockIndex::new(1, 3)),
    (BlockIndex::new(3, 1), BlockIndex::new(2, 1)),
    (BlockIndex::new(2, 3), BlockIndex::new(3, 2)),
];

pub const PHI_BLOCK_MAPS: [(BlockIndex, BlockIndex); 3] = [
    (BlockIndex::new(1, 1), BlockIndex::new(2, 3)),
    (BlockIndex::new(2, 2), BlockIndex::new(1, 2)),
    (BlockIndex::new(3, 3), BlockIndex::new(3, 1)),
];

/// Checks that `iso` fixes the square and carries each source block onto its
/// target block.
pub fn verify_block_maps(
    square: &LatinSquare,
    iso: &Isotopism,
    m: usize,
    maps: &[(BlockIndex, BlockIndex)],
) -> Result<bool> {
    check_order(square.order(), m)?;
    if !is_autotopism(square, iso)? {
        return Err(Error::NotAutotopism);
    }
    Ok(maps.iter().all(|&(from, to)| {
        from.cells(m).all(|(r, c)| block_of(iso.alpha.apply(r), iso.beta.apply(c), m) == to)
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TheoremCheck {
    pub m: usize,
    /// Transversals visited; a lower bound when the budget ran out.
    pub transversal_count: u64,
    /// Smallest block hit over the visited transversals.
    pub min_block_hits: Option<usize>,
    pub pass: bool,
    /// No transversal avoids block (2,2); `None` if the budget ran out.
    #[serde(rename = "lemma31OK")]
    pub avoids_centre_refuted: Option<bool>,
    /// No transversal avoids block (1,1); `None` if the budget ran out.
    #[serde(rename = "lemma32OK")]
    pub avoids_corner_refuted: Option<bool>,
    /// Every visited transversal shows the special-symbol Δ_m pattern.
    pub delta_pattern_ok: bool,
    pub budget_exhausted: bool,
}

impl TheoremCheck {
    /// The full verdict: complete enumeration and both avoidance refutations.
    pub fn proven(&self) -> bool {
        self.pass
            && !self.budget_exhausted
            && self.avoids_centre_refuted == Some(true)
            && self.avoids_corner_refuted == Some(true)
    }
}

fn block_avoidance_refuted(square: &LatinSquare, block: BlockIndex, m: usize, budget: Option<u64>) -> Result<Option<bool>> {
    let c = SearchConstraints::transversal().budget(budget).forbid_cells(block.cells(m));
    match find(square, &c) {
        Ok(found) => Ok(Some(found.is_none())),
        Err(Error::BudgetExceeded(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Enumerates the transversals of the block square of order `3m` and records
/// the smallest block hit. `budget` caps each of the three searches.
pub fn verify_hit_theorem(m: usize, budget: Option<u64>) -> Result<TheoremCheck> {
    let square = build_l(m)?;
    let mut visited = 0u64;
    let mut min_hits: Option<usize> = None;
    let mut pattern_ok = true;
    let mut inner_err = None;
    let outcome = enumerate(&square, &SearchConstraints::transversal().budget(budget), |cols| {
        visited += 1;
        let step = block_hits_of_cols(cols, m).map(|h| {
            let entries = cols.iter().enumerate().map(|(r, &c)| square.entry(r, c));
            (h.min(), special_symbol_pattern(entries, m))
        });
        match step {
            Ok((low, pattern)) => {
                min_hits = Some(min_hits.map_or(low, |v| v.min(low)));
                pattern_ok &= pattern;
                ControlFlow::Continue(())
            }
            Err(e) => {
                inner_err = Some(e);
                ControlFlow::Break(())
            }
        }
    });
    if let Some(e) = inner_err {
        return Err(e);
    }
    let budget_exhausted = match outcome {
        Ok(_) => false,
        Err(Error::BudgetExceeded(_)) => true,
        Err(e) => return Err(e),
    };
    Ok(TheoremCheck {
        m,
        transversal_count: visited,
        min_block_hits: min_hits,
        pass: min_hits.is_some_and(|v| v >= 1),
        avoids_centre_refuted: block_avoidance_refuted(&square, BlockIndex::new(2, 2), m, budget)?,
        avoids_corner_refuted: block_avoidance_refuted(&square, BlockIndex::new(1, 1), m, budget)?,
        delta_pattern_ok: pattern_ok,
        budget_exhausted,
    })
}
