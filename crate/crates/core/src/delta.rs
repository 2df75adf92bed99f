//! The `Δ(r, c, s) = s - r - c (mod n)` function and what it proves.
//!
//! Over any transversal the Δ-values sum to `0 (mod n)` for odd `n` and to
//! `n/2 (mod n)` for even `n`. For even orders a *suitable diagonal* is any
//! diagonal with that Δ-sum; every transversal is one. When the row maxima of
//! Δ add up to exactly `n/2` and the sum `-n/2` is out of reach, a suitable
//! diagonal has to take a row maximum in every row, so a row whose maximum is
//! attained once forces that entry into every transversal.

use serde::Serialize;

use crate::constructions::build_l;
use crate::diagonal::{Diagonal, Transversal};
use crate::error::{Error, Result};
use crate::square::{Entry, LatinSquare};

/// Δ in the half-open window `(-n/2, n/2]`.
#[inline]
pub fn delta(e: Entry, n: usize) -> i64 {
    let n_i = n as i64;
    let v = (e.sym as i64 - e.row as i64 - e.col as i64).rem_euclid(n_i);
    if v > n_i / 2 {
        v - n_i
    } else {
        v
    }
}

/// Target residue of a transversal's Δ-sum.
pub fn transversal_delta_residue(n: usize) -> usize {
    if n % 2 == 0 {
        n / 2
    } else {
        0
    }
}

/// Sum of Δ over the diagonal's entries, reduced mod `n`.
pub fn delta_sum(diagonal: &Diagonal, square: &LatinSquare) -> usize {
    let n = square.order();
    let total: i64 = diagonal.entries(square).map(|e| delta(e, n)).sum();
    total.rem_euclid(n as i64) as usize
}

/// True iff `cols` is a diagonal whose Δ-sum is `n/2 (mod n)`.
pub fn is_suitable_diagonal(square: &LatinSquare, cols: &[usize]) -> Result<bool> {
    let n = square.order();
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    if cols.len() != n {
        return Ok(false);
    }
    match Diagonal::new(cols.to_vec()) {
        Ok(d) => Ok(delta_sum(&d, square) == n / 2),
        Err(_) => Ok(false),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowExtrema {
    pub min: i64,
    pub max: i64,
    pub argmin: Vec<Entry>,
    pub argmax: Vec<Entry>,
}

/// Per-row extrema of Δ and their totals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DeltaProfile {
    pub rows: Vec<RowExtrema>,
    pub min_sum: i64,
    pub max_sum: i64,
}

pub fn delta_profile(square: &LatinSquare) -> DeltaProfile {
    let n = square.order();
    let rows: Vec<RowExtrema> = (0..n)
        .map(|r| {
            let entries: Vec<(Entry, i64)> = (0..n).map(|c| square.entry(r, c)).map(|e| (e, delta(e, n))).collect();
            let min = entries.iter().map(|&(_, d)| d).min().expect("order >= 1");
            let max = entries.iter().map(|&(_, d)| d).max().expect("order >= 1");
            RowExtrema {
                min,
                max,
                argmin: entries.iter().filter(|&&(_, d)| d == min).map(|&(e, _)| e).collect(),
                argmax: entries.iter().filter(|&&(_, d)| d == max).map(|&(e, _)| e).collect(),
            }
        })
        .collect();
    DeltaProfile {
        min_sum: rows.iter().map(|r| r.min).sum(),
        max_sum: rows.iter().map(|r| r.max).sum(),
        rows,
    }
}

/// How the Δ-sum `-n/2` was ruled out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MinSideRefutation {
    /// The row minima add up to more than `-n/2`.
    MinSumAboveThreshold,
    /// The row minima add up to exactly `-n/2`, but two rows have unique
    /// minima in the same column.
    ForcedColumnClash,
    NotRefuted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ForcedCertificate {
    pub valid: bool,
    pub forced: Vec<Entry>,
    pub max_sum: i64,
    pub min_sum: i64,
    pub refutation: MinSideRefutation,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clash: Option<(Entry, Entry)>,
}

/// Proves, when it can, that certain entries lie in every suitable diagonal.
///
/// `valid` needs the row maxima to sum to exactly `n/2` and one of the two
/// min-side refutations to apply. `forced` always lists the unique row
/// maxima; it only carries meaning when `valid` is set.
pub fn forced_entry_certificate(square: &LatinSquare) -> Result<ForcedCertificate> {
    let n = square.order();
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    let half = (n / 2) as i64;
    let profile = delta_profile(square);

    let mut clash = None;
    let refutation = if profile.min_sum > -half {
        MinSideRefutation::MinSumAboveThreshold
    } else if profile.min_sum == -half {
        let unique_minima: Vec<Entry> =
            profile.rows.iter().filter(|r| r.argmin.len() == 1).map(|r| r.argmin[0]).collect();
        clash = unique_minima.iter().enumerate().find_map(|(i, a)| {
            unique_minima[i + 1..].iter().find(|b| b.col == a.col).map(|b| (*a, *b))
        });
        if clash.is_some() {
            MinSideRefutation::ForcedColumnClash
        } else {
            MinSideRefutation::NotRefuted
        }
    } else {
        MinSideRefutation::NotRefuted
    };

    let forced = profile.rows.iter().filter(|r| r.argmax.len() == 1).map(|r| r.argmax[0]).collect();
    Ok(ForcedCertificate {
        valid: profile.max_sum == half && refutation != MinSideRefutation::NotRefuted,
        forced,
        max_sum: profile.max_sum,
        min_sum: profile.min_sum,
        refutation,
        clash,
    })
}

/// `Δ_m(r, c, s) = (r + c) mod m`.
#[inline]
pub fn delta_m(e: Entry, m: usize) -> usize {
    (e.row + e.col) % m
}

/// Checks the Δ_m pattern forced on a transversal of the block square: the
/// three entries carrying `0`, `2m - 1`, `3m - 1` have Δ_m values `{0, m-1, m-1}`
/// and every other symbol sits at the Δ_m value fixed by its band.
pub fn special_symbol_delta_check(square: &LatinSquare, t: &Transversal, m: usize) -> Result<bool> {
    if square.order() != 3 * m || m < 3 || m % 2 == 0 || *square != build_l(m)? {
        return Err(Error::NotBlockSquare(format!("order {} is not the block square with m = {m}", square.order())));
    }
    if t.order() != square.order() {
        return Err(Error::InvalidDiagonal("transversal order does not match".into()));
    }
    Ok(special_symbol_pattern(t.entries(square), m))
}

/// The pattern test alone, for callers that already know the square.
pub(crate) fn special_symbol_pattern(entries: impl Iterator<Item = Entry>, m: usize) -> bool {
    let (mut zeros, mut tops) = (0, 0);
    for e in entries {
        let dm = delta_m(e, m);
        let s = e.sym;
        if s == 0 || s == 2 * m - 1 || s == 3 * m - 1 {
            if dm == 0 {
                zeros += 1;
            } else if dm == m - 1 {
                tops += 1;
            } else {
                return false;
            }
            continue;
        }
        let expected = if s < m {
            s
        } else if s < 2 * m - 1 {
            s - m
        } else {
            s - 2 * m
        };
        if dm != expected {
            return false;
        }
    }
    zeros == 1 && tops == 2
}
