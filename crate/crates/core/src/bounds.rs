//! Explicit sets of transversal-free entries in the T, U and V squares.
//!
//! `F` is the set of forced entries, `C` and `S` their columns and symbols.
//! `N` and `O` are the other entries sharing a column or symbol with `F`;
//! `P`, `Q`, `R` are entries in fixed row bands whose Δ is not the row
//! maximum, and `M = P ∪ Q ∪ R`. Everything in `M ∪ N ∪ O` is
//! transversal-free. Its size is computed by a literal union and compared
//! with the closed-form lower bound for the family.

use serde::Serialize;

use crate::classify::ClassificationReport;
use crate::constructions::{claimed_pinned_entries, FamilySpec};
use crate::delta::delta;
use crate::error::{Error, Result};
use crate::square::{Entry, Family, LatinSquare};

/// Membership mask over the cells of a square. A cell determines its entry,
/// so a set of entries is a set of cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntrySet {
    order: usize,
    mask: Vec<bool>,
}

impl EntrySet {
    fn empty(order: usize) -> Self {
        EntrySet { order, mask: vec![false; order * order] }
    }

    fn from_filter(square: &LatinSquare, keep: impl Fn(Entry) -> bool) -> Self {
        let mut set = Self::empty(square.order());
        for e in square.entries() {
            if keep(e) {
                set.mask[e.row * set.order + e.col] = true;
            }
        }
        set
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        self.mask[row * self.order + col]
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn union(&self, other: &EntrySet) -> EntrySet {
        EntrySet { order: self.order, mask: self.mask.iter().zip(&other.mask).map(|(a, b)| *a || *b).collect() }
    }

    pub fn intersection(&self, other: &EntrySet) -> EntrySet {
        EntrySet { order: self.order, mask: self.mask.iter().zip(&other.mask).map(|(a, b)| *a && *b).collect() }
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.order;
        self.mask.iter().enumerate().filter(|(_, &b)| b).map(move |(i, _)| (i / n, i % n))
    }
}

#[derive(Clone, Debug)]
pub struct BoundSets {
    pub spec: FamilySpec,
    pub forced: Vec<Entry>,
    pub columns: Vec<usize>,
    pub symbols: Vec<usize>,
    pub n_set: EntrySet,
    pub o_set: EntrySet,
    pub p_set: EntrySet,
    pub q_set: EntrySet,
    pub r_set: EntrySet,
    pub m_set: EntrySet,
    pub union: EntrySet,
}

impl BoundSets {
    pub fn union_size(&self) -> usize {
        self.union.len()
    }

    /// `36 ×` the closed-form lower bound.
    pub fn formula_numerator(&self) -> i64 {
        formula_numerator(self.spec.family(), self.spec.order())
    }

    pub fn formula_value(&self) -> f64 {
        self.formula_numerator() as f64 / 36.0
    }

    /// Smallest integer not below the closed form.
    pub fn lower_bound(&self) -> i64 {
        lower_bound(self.spec.family(), self.spec.order())
    }

    pub fn meets_formula(&self) -> bool {
        36 * self.union_size() as i64 >= self.formula_numerator()
    }

    /// Whether `C` and `S` are exactly the columns and symbols of `F`.
    pub fn generators_match_forced(&self) -> bool {
        let mut cols: Vec<usize> = self.forced.iter().map(|e| e.col).collect();
        let mut syms: Vec<usize> = self.forced.iter().map(|e| e.sym).collect();
        cols.sort_unstable();
        syms.sort_unstable();
        cols == self.columns && syms == self.symbols
    }
}

/// `36 ×` the closed-form lower bound on the number of transversal-free
/// entries.
pub fn formula_numerator(family: Family, n: usize) -> i64 {
    let n = n as i64;
    match family {
        Family::T => 19 * n * n - 51 * n + 36,
        Family::V => 19 * n * n - 86 * n - 68,
        Family::U => 19 * n * n - 73 * n - 182,
        _ => 0,
    }
}

pub fn lower_bound(family: Family, n: usize) -> i64 {
    let num = formula_numerator(family, n);
    num.div_euclid(36) + i64::from(num.rem_euclid(36) != 0)
}

fn sorted_mod(values: impl IntoIterator<Item = usize>, n: usize) -> Vec<usize> {
    let mut v: Vec<usize> = values.into_iter().map(|x| x % n).collect();
    v.sort_unstable();
    v.dedup();
    v
}

pub fn bound_sets(spec: &FamilySpec) -> Result<BoundSets> {
    let family = spec.family();
    if !matches!(family, Family::T | Family::U | Family::V) {
        return Err(Error::Domain(format!("no lower-bound sets for family {family}")));
    }
    let n = spec.order();
    let k = spec.k();
    let square = spec.build()?;
    let forced = claimed_pinned_entries(spec)?;

    let (columns, symbols) = match family {
        Family::T => (
            sorted_mod((2..=k).map(|u| 6 * u).chain([1]), n),
            sorted_mod((k + 3..=2 * k + 1).map(|u| 3 * u).chain([4]), n),
        ),
        Family::V => (
            sorted_mod((1..=k).map(|u| 6 * (k - u + 1) + 4), n),
            sorted_mod((k + 3..=2 * k + 1).map(|u| 3 * u + 1).chain([3]), n),
        ),
        _ => (
            sorted_mod((2..k).map(|u| 6 * u + 2).chain([3, 4]), n),
            sorted_mod((k + 4..=2 * k + 1).map(|u| 3 * u).chain([5, 8]), n),
        ),
    };

    // (rows, Δ-value excluded) for P, Q, R.
    let (p_rows, q_rows, r_rows): (Vec<usize>, Vec<usize>, Vec<usize>) = match family {
        Family::T => (
            (1..k).map(|u| 3 * u - 2).collect(),
            (1..k).map(|u| 3 * u - 1).collect(),
            (2..k).map(|u| 3 * u).collect(),
        ),
        Family::V => (
            (1..=k).map(|u| 3 * u - 2).collect(),
            (2..=k).map(|u| 3 * u - 1).collect(),
            (2..=k).map(|u| 3 * u).collect(),
        ),
        _ => (
            (2..k).map(|u| 3 * u - 1).collect(),
            std::iter::once(1).chain((1..k).map(|u| 3 * u)).collect(),
            (2..k).map(|u| 3 * u + 1).collect(),
        ),
    };

    let is_forced = |e: Entry| forced.contains(&e);
    let n_set = EntrySet::from_filter(&square, |e| columns.contains(&e.col) && !is_forced(e));
    let o_set = EntrySet::from_filter(&square, |e| symbols.contains(&e.sym) && !is_forced(e));
    let band = |rows: &[usize], skip: i64| {
        EntrySet::from_filter(&square, |e| rows.contains(&e.row) && delta(e, n) != skip)
    };
    let p_set = band(&p_rows, 2);
    let q_set = band(&q_rows, 1);
    let r_set = band(&r_rows, 0);
    let m_set = p_set.union(&q_set).union(&r_set);
    let union = m_set.union(&n_set).union(&o_set);

    Ok(BoundSets { spec: *spec, forced, columns, symbols, n_set, o_set, p_set, q_set, r_set, m_set, union })
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundCheck {
    pub family: Family,
    pub n: usize,
    pub union_size: usize,
    pub formula_value: f64,
    pub lower_bound: i64,
    pub meets_formula: bool,
    #[serde(rename = "subsetOK")]
    pub subset_ok: Option<bool>,
    pub tau: Option<usize>,
    pub tau_in_range: Option<bool>,
}

impl BoundCheck {
    /// The set-arithmetic part only, for orders too large to classify.
    pub fn sets_only(sets: &BoundSets) -> Self {
        BoundCheck {
            family: sets.spec.family(),
            n: sets.spec.order(),
            union_size: sets.union_size(),
            formula_value: sets.formula_value(),
            lower_bound: sets.lower_bound(),
            meets_formula: sets.meets_formula(),
            subset_ok: None,
            tau: None,
            tau_in_range: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.meets_formula && self.subset_ok != Some(false) && self.tau_in_range != Some(false)
    }
}

/// Checks the union against the closed form, against the classification's
/// free cells, and places τ between the closed form and `n^2`.
pub fn verify_bound(sets: &BoundSets, report: &ClassificationReport) -> Result<BoundCheck> {
    let n = sets.spec.order();
    if report.order != n {
        return Err(Error::Domain(format!("report is for order {}, sets for {n}", report.order)));
    }
    if report.is_partial() {
        return Err(Error::PartialReport(report.count(crate::classify::CellStatus::Unknown)));
    }
    let subset_ok = sets.union.cells().all(|(r, c)| report.is_free(r, c));
    let tau_in_range = 36 * report.tau as i64 >= sets.formula_numerator() && report.tau < n * n;
    Ok(BoundCheck {
        subset_ok: Some(subset_ok),
        tau: Some(report.tau),
        tau_in_range: Some(tau_in_range),
        ..BoundCheck::sets_only(sets)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify, ClassifyOptions};

    #[test]
    fn closed_forms() {
        assert_eq!(lower_bound(Family::V, 10), 27);
        assert_eq!(lower_bound(Family::T, 12), 60);
        assert_eq!(lower_bound(Family::U, 14), 70);
        assert_eq!(lower_bound(Family::T, 18), 147);
        assert_eq!(lower_bound(Family::U, 20), 166);
        assert_eq!(lower_bound(Family::T, 24), 271);
    }

    #[test]
    fn t12_generators_include_column_zero() {
        let sets = bound_sets(&FamilySpec::new(Family::T, 12).unwrap()).unwrap();
        assert_eq!(sets.columns, vec![0, 1]);
        assert_eq!(sets.symbols, vec![3, 4]);
        assert!(sets.generators_match_forced());
    }

    #[test]
    fn t18_n_and_o_sizes() {
        let sets = bound_sets(&FamilySpec::new(Family::T, 18).unwrap()).unwrap();
        assert_eq!(sets.n_set.len(), 51);
        assert_eq!(sets.o_set.len(), 51);
    }

    #[test]
    fn v10_formula_and_subset() {
        let spec = FamilySpec::new(Family::V, 10).unwrap();
        let sets = bound_sets(&spec).unwrap();
        assert_eq!(sets.formula_numerator(), 27 * 36);
        let report = classify(&spec.build().unwrap(), &ClassifyOptions::default()).unwrap();
        let check = verify_bound(&sets, &report).unwrap();
        assert_eq!(check.subset_ok, Some(true));
        assert_eq!(check.tau, Some(34));
        assert!(check.passed());
    }

    #[test]
    fn non_family_is_rejected() {
        assert!(bound_sets(&FamilySpec::block(3).unwrap()).is_err());
    }
}
