//! Per-cell classification: transversal-free, covered, or pinned.
//!
//! Every cell gets its own "transversal through this entry" search; these run
//! on a rayon pool and are merged by cell index, so the report does not depend
//! on the worker count. A cell can only be pinned if it lies in every witness
//! found in the first pass, so the "avoid this cell" search runs just for that
//! intersection.

use rayon::prelude::*;
use serde::Serialize;

use crate::engine::{find, SearchConstraints};
use crate::error::{Error, Result};
use crate::square::{Entry, Family, LatinSquare};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum CellStatus {
    /// In no transversal.
    Free,
    /// In some transversal, but not all.
    Covered,
    /// In every transversal.
    Pinned,
    /// Search budget ran out before a verdict.
    Unknown,
}

#[derive(Clone, Debug, Default)]
pub struct ClassifyOptions {
    pub node_budget: Option<u64>,
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
    pub keep_witnesses: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub order: usize,
    pub family: Family,
    pub status: Vec<CellStatus>,
    pub has_transversal: bool,
    pub tau: usize,
    pub pinned: Vec<Entry>,
    /// Column vector of a transversal through each non-free cell, if kept.
    pub witnesses: Vec<Option<Vec<usize>>>,
}

impl ClassificationReport {
    pub fn status(&self, row: usize, col: usize) -> CellStatus {
        self.status[row * self.order + col]
    }

    pub fn count(&self, status: CellStatus) -> usize {
        self.status.iter().filter(|&&s| s == status).count()
    }

    pub fn free_cells(&self) -> Vec<(usize, usize)> {
        self.cells_with(CellStatus::Free)
    }

    pub fn cells_with(&self, status: CellStatus) -> Vec<(usize, usize)> {
        let n = self.order;
        self.status
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == status)
            .map(|(i, _)| (i / n, i % n))
            .collect()
    }

    pub fn is_partial(&self) -> bool {
        self.status.contains(&CellStatus::Unknown)
    }

    pub fn is_free(&self, row: usize, col: usize) -> bool {
        self.status(row, col) == CellStatus::Free
    }

    pub fn to_json(&self) -> ReportJson {
        ReportJson {
            order: self.order,
            family: self.family,
            tau: self.tau,
            has_transversal: self.has_transversal,
            pinned: self.pinned.clone(),
            free_cells: self.free_cells().into_iter().map(|(r, c)| [r, c]).collect(),
            counts: Counts {
                free: self.count(CellStatus::Free),
                covered: self.count(CellStatus::Covered),
                pinned: self.count(CellStatus::Pinned),
                unknown: self.count(CellStatus::Unknown),
            },
            partial: self.is_partial(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportJson {
    pub order: usize,
    pub family: Family,
    pub tau: usize,
    pub has_transversal: bool,
    pub pinned: Vec<Entry>,
    pub free_cells: Vec<[usize; 2]>,
    pub counts: Counts,
    pub partial: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Counts {
    pub free: usize,
    pub covered: usize,
    pub pinned: usize,
    pub unknown: usize,
}

enum Verdict {
    Found(Vec<usize>),
    None,
    Unknown,
}

fn search(square: &LatinSquare, constraints: &SearchConstraints) -> Result<Verdict> {
    match find(square, constraints) {
        Ok(Some(d)) => Ok(Verdict::Found(d.cols().to_vec())),
        Ok(None) => Ok(Verdict::None),
        Err(Error::BudgetExceeded(_)) => Ok(Verdict::Unknown),
        Err(e) => Err(e),
    }
}

pub fn classify(square: &LatinSquare, opts: &ClassifyOptions) -> Result<ClassificationReport> {
    match opts.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::Domain(format!("cannot start worker pool: {e}")))?
            .install(|| classify_inner(square, opts)),
        None => classify_inner(square, opts),
    }
}

fn classify_inner(square: &LatinSquare, opts: &ClassifyOptions) -> Result<ClassificationReport> {
    let n = square.order();
    let base = SearchConstraints::transversal().budget(opts.node_budget);

    let any = search(square, &base)?;
    if let Verdict::None = any {
        return Ok(ClassificationReport {
            order: n,
            family: square.family(),
            status: vec![CellStatus::Free; n * n],
            has_transversal: false,
            tau: n * n,
            pinned: Vec::new(),
            witnesses: vec![None; n * n],
        });
    }

    let through: Vec<Verdict> = (0..n * n)
        .into_par_iter()
        .map(|i| search(square, &base.clone().require(square.entry(i / n, i % n))))
        .collect::<Result<_>>()?;

    let mut status: Vec<CellStatus> = through
        .iter()
        .map(|v| match v {
            Verdict::Found(_) => CellStatus::Covered,
            Verdict::None => CellStatus::Free,
            Verdict::Unknown => CellStatus::Unknown,
        })
        .collect();
    let has_transversal = matches!(any, Verdict::Found(_)) || status.contains(&CellStatus::Covered);

    // cells lying in every witness found so far
    let mut in_all = vec![true; n * n];
    for v in &through {
        if let Verdict::Found(cols) = v {
            let mut hit = vec![false; n * n];
            for (r, &c) in cols.iter().enumerate() {
                hit[r * n + c] = true;
            }
            for (keep, h) in in_all.iter_mut().zip(hit) {
                *keep &= h;
            }
        }
    }
    let candidates: Vec<usize> =
        (0..n * n).filter(|&i| status[i] == CellStatus::Covered && in_all[i]).collect();
    let avoid: Vec<(usize, Verdict)> = candidates
        .into_par_iter()
        .map(|i| Ok((i, search(square, &base.clone().forbid(i / n, i % n))?)))
        .collect::<Result<_>>()?;
    for (i, v) in avoid {
        status[i] = match v {
            Verdict::None => CellStatus::Pinned,
            Verdict::Found(_) => CellStatus::Covered,
            Verdict::Unknown => CellStatus::Unknown,
        };
    }

    let pinned = (0..n * n)
        .filter(|&i| status[i] == CellStatus::Pinned)
        .map(|i| square.entry(i / n, i % n))
        .collect();
    let witnesses = if opts.keep_witnesses {
        through.into_iter().map(|v| if let Verdict::Found(c) = v { Some(c) } else { None }).collect()
    } else {
        vec![None; n * n]
    };
    Ok(ClassificationReport {
        order: n,
        family: square.family(),
        tau: status.iter().filter(|&&s| s == CellStatus::Free).count(),
        status,
        has_transversal,
        pinned,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_exceptional, build_v, EX6_FREE_CELLS};
    use crate::square::cayley_table;

    #[test]
    fn exceptional_six() {
        let report = classify(&build_exceptional(6).unwrap(), &ClassifyOptions::default()).unwrap();
        assert_eq!(report.tau, 16);
        let mut expected = EX6_FREE_CELLS.to_vec();
        expected.sort();
        assert_eq!(report.free_cells(), expected);
    }

    #[test]
    fn cayley_six_is_all_free() {
        let report = classify(&cayley_table(6).unwrap(), &ClassifyOptions::default()).unwrap();
        assert_eq!(report.tau, 36);
        assert!(!report.has_transversal);
        assert!(report.pinned.is_empty());
    }

    #[test]
    fn v10() {
        let opts = ClassifyOptions { keep_witnesses: true, ..Default::default() };
        let report = classify(&build_v(10).unwrap(), &opts).unwrap();
        assert_eq!(report.tau, 34);
        assert_eq!(report.pinned, vec![Entry::new(1, 0, 3)]);
        for (i, w) in report.witnesses.iter().enumerate() {
            assert_eq!(w.is_some(), report.status[i] != CellStatus::Free);
            if let Some(cols) = w {
                assert_eq!(cols[i / 10], i % 10);
            }
        }
    }

    #[test]
    fn worker_count_does_not_change_the_report() {
        let sq = build_v(10).unwrap();
        let one = classify(&sq, &ClassifyOptions { jobs: Some(1), ..Default::default() }).unwrap();
        let four = classify(&sq, &ClassifyOptions { jobs: Some(4), ..Default::default() }).unwrap();
        assert_eq!(one, four);
    }

    #[test]
    fn budget_gives_partial_report() {
        let sq = cayley_table(9).unwrap();
        let report = classify(&sq, &ClassifyOptions { node_budget: Some(3), ..Default::default() }).unwrap();
        assert!(report.is_partial());
    }
}
