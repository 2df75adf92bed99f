//! Exhaustive row-by-row search for transversals and suitable diagonals.
//!
//! Rows are filled in ascending order, columns tried in ascending order, with
//! bitmasks for used columns and symbols. Enumeration therefore visits
//! solutions in lexicographic order of `(col(0), col(1), ..)`.
//!
//! Δ-pruning: a completed search target has Δ-sum congruent to `n/2` (even
//! `n`) or `0` (odd `n`, transversals only). Before descending, the partial
//! Δ-sum plus the per-row minimum and maximum Δ of the remaining rows gives an
//! integer interval; if no value in it has the target residue the branch is
//! cut. The per-row extrema are taken over each row's admissible cells after
//! the constraints are applied, so required and forbidden cells tighten the
//! bound.

use std::ops::ControlFlow;

use crate::delta::{delta, transversal_delta_residue};
use crate::diagonal::{Diagonal, Transversal};
use crate::error::{Error, Result};
use crate::square::{Entry, LatinSquare};

/// Largest order the bitmask kernel handles.
pub const MAX_SEARCH_ORDER: usize = 64;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SearchMode {
    /// Distinct rows, columns and symbols.
    #[default]
    Transversal,
    /// Distinct rows and columns with Δ-sum `n/2 (mod n)`; even orders only.
    SuitableDiagonal,
}

/// What a search must include, must avoid, and how much work it may do.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConstraints {
    pub required: Vec<Entry>,
    pub forbidden: Vec<(usize, usize)>,
    pub mode: SearchMode,
    /// Maximum number of placements before giving up with `BudgetExceeded`.
    pub node_budget: Option<u64>,
    pub delta_pruning: bool,
}

impl Default for SearchConstraints {
    fn default() -> Self {
        SearchConstraints {
            required: Vec::new(),
            forbidden: Vec::new(),
            mode: SearchMode::Transversal,
            node_budget: None,
            delta_pruning: true,
        }
    }
}

impl SearchConstraints {
    pub fn transversal() -> Self {
        Self::default()
    }

    pub fn suitable_diagonal() -> Self {
        SearchConstraints { mode: SearchMode::SuitableDiagonal, ..Self::default() }
    }

    pub fn require(mut self, e: Entry) -> Self {
        self.required.push(e);
        self
    }

    pub fn forbid(mut self, row: usize, col: usize) -> Self {
        self.forbidden.push((row, col));
        self
    }

    pub fn forbid_cells(mut self, cells: impl IntoIterator<Item = (usize, usize)>) -> Self {
        self.forbidden.extend(cells);
        self
    }

    pub fn budget(mut self, budget: Option<u64>) -> Self {
        self.node_budget = budget;
        self
    }

    pub fn without_delta_pruning(mut self) -> Self {
        self.delta_pruning = false;
        self
    }

    fn validate(&self, square: &LatinSquare) -> Result<()> {
        let n = square.order();
        if n > MAX_SEARCH_ORDER {
            return Err(Error::OrderTooLarge { order: n, max: MAX_SEARCH_ORDER });
        }
        if self.mode == SearchMode::SuitableDiagonal && n % 2 == 1 {
            return Err(Error::OddOrder(n));
        }
        for (i, e) in self.required.iter().enumerate() {
            if !square.contains(e) {
                return Err(Error::InvalidConstraints(format!("{e} is not an entry of the square")));
            }
            if self.forbidden.contains(&e.cell()) {
                return Err(Error::InvalidConstraints(format!("{e} is both required and forbidden")));
            }
            if let Some(o) = self.required[..i].iter().find(|o| o.row == e.row || o.col == e.col || o.sym == e.sym) {
                return Err(Error::InvalidConstraints(format!("required entries {o} and {e} collide")));
            }
        }
        if let Some(&(r, c)) = self.forbidden.iter().find(|&&(r, c)| r >= n || c >= n) {
            return Err(Error::InvalidConstraints(format!("forbidden cell ({r}, {c}) is outside the square")));
        }
        Ok(())
    }
}

#[derive(Clone, Copy)]
struct Candidate {
    col: u8,
    sym: u8,
    delta: i8,
}

struct Kernel {
    n: usize,
    check_symbols: bool,
    target: i64,
    prune: bool,
    rows: Vec<Vec<Candidate>>,
    min_suffix: Vec<i64>,
    max_suffix: Vec<i64>,
    budget: Option<u64>,
    nodes: u64,
    path: Vec<usize>,
}

impl Kernel {
    fn new(square: &LatinSquare, constraints: &SearchConstraints) -> Result<Self> {
        constraints.validate(square)?;
        let n = square.order();
        let check_symbols = constraints.mode == SearchMode::Transversal;

        let mut pinned_row: Vec<Option<Entry>> = vec![None; n];
        let (mut req_cols, mut req_syms) = (0u64, 0u64);
        for e in &constraints.required {
            pinned_row[e.row] = Some(*e);
            req_cols |= 1 << e.col;
            req_syms |= 1 << e.sym;
        }
        let mut forbidden = vec![false; n * n];
        for &(r, c) in &constraints.forbidden {
            forbidden[r * n + c] = true;
        }

        let rows: Vec<Vec<Candidate>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| square.entry(r, c))
                    .filter(|e| match pinned_row[r] {
                        Some(req) => *e == req,
                        None => {
                            !forbidden[r * n + e.col]
                                && req_cols & (1 << e.col) == 0
                                && (!check_symbols || req_syms & (1 << e.sym) == 0)
                        }
                    })
                    .map(|e| Candidate { col: e.col as u8, sym: e.sym as u8, delta: delta(e, n) as i8 })
                    .collect()
            })
            .collect();

        let mut min_suffix = vec![0i64; n + 1];
        let mut max_suffix = vec![0i64; n + 1];
        for r in (0..n).rev() {
            let ds = rows[r].iter().map(|c| c.delta as i64);
            min_suffix[r] = min_suffix[r + 1] + ds.clone().min().unwrap_or(0);
            max_suffix[r] = max_suffix[r + 1] + ds.max().unwrap_or(0);
        }

        Ok(Kernel {
            n,
            check_symbols,
            target: transversal_delta_residue(n) as i64,
            prune: constraints.delta_pruning,
            rows,
            min_suffix,
            max_suffix,
            budget: constraints.node_budget,
            nodes: 0,
            path: vec![0; n],
        })
    }

    /// Does `[partial + min_suffix[row], partial + max_suffix[row]]` hold a
    /// value congruent to the target?
    #[inline]
    fn reachable(&self, row: usize, partial: i64) -> bool {
        let lo = partial + self.min_suffix[row];
        let first = lo + (self.target - lo).rem_euclid(self.n as i64);
        first <= partial + self.max_suffix[row]
    }

    fn run<F>(&mut self, visit: &mut F) -> Result<ControlFlow<()>>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if self.rows.iter().any(Vec::is_empty) {
            return Ok(ControlFlow::Continue(()));
        }
        if self.prune && !self.reachable(0, 0) {
            return Ok(ControlFlow::Continue(()));
        }
        self.descend(0, 0, 0, 0, visit)
    }

    fn descend<F>(&mut self, row: usize, cols: u64, syms: u64, partial: i64, visit: &mut F) -> Result<ControlFlow<()>>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if row == self.n {
            if !self.check_symbols && (partial - self.target).rem_euclid(self.n as i64) != 0 {
                return Ok(ControlFlow::Continue(()));
            }
            return Ok(visit(&self.path));
        }
        for i in 0..self.rows[row].len() {
            let cand = self.rows[row][i];
            if cols & (1 << cand.col) != 0 || (self.check_symbols && syms & (1 << cand.sym) != 0) {
                continue;
            }
            let next = partial + cand.delta as i64;
            if self.prune && !self.reachable(row + 1, next) {
                continue;
            }
            self.nodes += 1;
            if let Some(b) = self.budget {
                if self.nodes > b {
                    return Err(Error::BudgetExceeded(b));
                }
            }
            self.path[row] = cand.col as usize;
            let flow = self.descend(row + 1, cols | 1 << cand.col, syms | 1 << cand.sym, next, visit)?;
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

/// First solution in lexicographic column order, or `None` if there is none.
pub fn find(square: &LatinSquare, constraints: &SearchConstraints) -> Result<Option<Diagonal>> {
    let mut kernel = Kernel::new(square, constraints)?;
    let mut found = None;
    let _ = kernel.run(&mut |cols: &[usize]| {
        found = Some(cols.to_vec());
        ControlFlow::Break(())
    })?;
    Ok(found.map(|cols| Diagonal::new(cols).expect("kernel emits permutations")))
}

/// `find` in transversal mode, returning a checked transversal.
pub fn find_transversal(square: &LatinSquare, constraints: &SearchConstraints) -> Result<Option<Transversal>> {
    let constraints = SearchConstraints { mode: SearchMode::Transversal, ..constraints.clone() };
    find(square, &constraints)?.map(|d| Transversal::from_diagonal(square, d)).transpose()
}

/// Visits every solution once, in lexicographic column order. The visitor may
/// stop early with `ControlFlow::Break`; the count then includes the solution
/// that stopped it.
pub fn enumerate<F>(square: &LatinSquare, constraints: &SearchConstraints, mut visitor: F) -> Result<u64>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let mut kernel = Kernel::new(square, constraints)?;
    let mut count = 0u64;
    let _ = kernel.run(&mut |cols: &[usize]| {
        count += 1;
        visitor(cols)
    })?;
    Ok(count)
}

pub fn count(square: &LatinSquare, constraints: &SearchConstraints) -> Result<u64> {
    enumerate(square, constraints, |_| ControlFlow::Continue(()))
}

/// All solutions, in enumeration order.
pub fn collect(square: &LatinSquare, constraints: &SearchConstraints) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    enumerate(square, constraints, |cols| {
        out.push(cols.to_vec());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// True iff the square has a transversal and none avoids the entry's cell.
pub fn is_pinned(square: &LatinSquare, e: Entry, budget: Option<u64>) -> Result<bool> {
    if !square.contains(&e) {
        return Err(Error::InvalidConstraints(format!("{e} is not an entry of the square")));
    }
    let base = SearchConstraints::transversal().budget(budget);
    if find(square, &base)?.is_none() {
        return Ok(false);
    }
    Ok(find(square, &base.forbid(e.row, e.col))?.is_none())
}

/// Two transversals sharing no entry: the first in enumeration order that
/// has a partner, paired with the partner's first solution. The budget
/// applies to each individual search.
pub fn find_disjoint_pair(square: &LatinSquare, budget: Option<u64>) -> Result<Option<(Transversal, Transversal)>> {
    let base = SearchConstraints::transversal().budget(budget);
    let mut pair = None;
    let mut inner_err = None;
    let _ = enumerate(square, &base, |cols| {
        let avoid = base.clone().forbid_cells(cols.iter().enumerate().map(|(r, &c)| (r, c)));
        match find(square, &avoid) {
            Ok(Some(other)) => {
                pair = Some((cols.to_vec(), other));
                ControlFlow::Break(())
            }
            Ok(None) => ControlFlow::Continue(()),
            Err(e) => {
                inner_err = Some(e);
                ControlFlow::Break(())
            }
        }
    })?;
    if let Some(e) = inner_err {
        return Err(e);
    }
    pair.map(|(a, b)| Ok((Transversal::new(square, a)?, Transversal::from_diagonal(square, b)?)))
        .transpose()
}

/// Number of transversals of an even-order square and whether it is even.
pub fn count_parity_check(square: &LatinSquare, budget: Option<u64>) -> Result<(u64, bool)> {
    if square.order() % 2 == 1 {
        return Err(Error::OddOrder(square.order()));
    }
    let total = count(square, &SearchConstraints::transversal().budget(budget))?;
    Ok((total, total % 2 == 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_t, FamilySpec};
    use crate::square::{cayley_table, Family};

    #[test]
    fn even_cayley_has_no_transversal() {
        let c6 = cayley_table(6).unwrap();
        assert!(find(&c6, &SearchConstraints::transversal()).unwrap().is_none());
        assert_eq!(count(&cayley_table(4).unwrap(), &SearchConstraints::transversal()).unwrap(), 0);
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(&cayley_table(3).unwrap(), &SearchConstraints::transversal()).unwrap(), 3);
        assert_eq!(count(&cayley_table(1).unwrap(), &SearchConstraints::transversal()).unwrap(), 1);
        assert_eq!(count(&cayley_table(5).unwrap(), &SearchConstraints::transversal()).unwrap(), 15);
    }

    #[test]
    fn lexicographic_order() {
        let all = collect(&cayley_table(5).unwrap(), &SearchConstraints::transversal()).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0], vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn t12_required_and_forbidden() {
        let sq = build_t(12).unwrap();
        let through = find_transversal(&sq, &SearchConstraints::transversal().require(Entry::new(1, 0, 3))).unwrap();
        assert!(through.unwrap().contains_cell(1, 0));
        assert!(find(&sq, &SearchConstraints::transversal().forbid(1, 0)).unwrap().is_none());
    }

    #[test]
    fn pinned_verdicts() {
        let sq = build_t(12).unwrap();
        assert!(is_pinned(&sq, Entry::new(1, 0, 3), None).unwrap());
        assert!(!is_pinned(&sq, Entry::new(0, 0, 0), None).unwrap());
        let c6 = cayley_table(6).unwrap();
        assert!(!is_pinned(&c6, Entry::new(0, 0, 0), None).unwrap());
        assert!(is_pinned(&sq, Entry::new(1, 0, 4), None).is_err());
    }

    #[test]
    fn disjoint_pairs() {
        let (a, b) = find_disjoint_pair(&cayley_table(5).unwrap(), None).unwrap().unwrap();
        assert!(a.is_disjoint_from(&b));
        assert!(find_disjoint_pair(&cayley_table(4).unwrap(), None).unwrap().is_none());
        assert!(find_disjoint_pair(&cayley_table(1).unwrap(), None).unwrap().is_none());
    }

    #[test]
    fn parity() {
        assert_eq!(count_parity_check(&cayley_table(4).unwrap(), None).unwrap(), (0, true));
        let ex6 = FamilySpec::new(Family::Ex6, 6).unwrap().build().unwrap();
        assert!(count_parity_check(&ex6, None).unwrap().1);
        assert!(count_parity_check(&cayley_table(5).unwrap(), None).is_err());
    }

    #[test]
    fn budget_is_reported() {
        let c7 = cayley_table(7).unwrap();
        let err = count(&c7, &SearchConstraints::transversal().budget(Some(10))).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded(10)));
    }

    #[test]
    fn invalid_constraints() {
        let sq = cayley_table(5).unwrap();
        let clash = SearchConstraints::transversal().require(Entry::new(0, 0, 0)).require(Entry::new(1, 0, 1));
        assert!(matches!(find(&sq, &clash), Err(Error::InvalidConstraints(_))));
        let both = SearchConstraints::transversal().require(Entry::new(0, 0, 0)).forbid(0, 0);
        assert!(matches!(find(&sq, &both), Err(Error::InvalidConstraints(_))));
        let wrong = SearchConstraints::transversal().require(Entry::new(0, 0, 3));
        assert!(matches!(find(&sq, &wrong), Err(Error::InvalidConstraints(_))));
        assert!(matches!(find(&sq, &SearchConstraints::suitable_diagonal()), Err(Error::OddOrder(5))));
    }

    #[test]
    fn suitable_diagonal_mode() {
        let sq = build_t(12).unwrap();
        let d = find(&sq, &SearchConstraints::suitable_diagonal()).unwrap().unwrap();
        assert!(crate::delta::is_suitable_diagonal(&sq, d.cols()).unwrap());
        assert!(find(&sq, &SearchConstraints::suitable_diagonal().forbid(2, 1)).unwrap().is_none());
    }
}
