//! The latin square data model.
//!
//! Rows, columns and symbols are always the integers `0..n`. Squares are
//! validated once on construction and never mutated afterwards, so they can be
//! shared freely between search workers.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Line, Result};

/// Where a square came from. Carried along for reporting only.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    T,
    U,
    V,
    L,
    #[serde(rename = "EX6")]
    Ex6,
    #[serde(rename = "EX8")]
    Ex8,
    #[serde(rename = "CAYLEY")]
    Cayley,
    #[default]
    #[serde(rename = "CUSTOM")]
    Custom,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::T => "T",
            Family::U => "U",
            Family::V => "V",
            Family::L => "L",
            Family::Ex6 => "EX6",
            Family::Ex8 => "EX8",
            Family::Cayley => "CAYLEY",
            Family::Custom => "CUSTOM",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "T" => Family::T,
            "U" => Family::U,
            "V" => Family::V,
            "L" => Family::L,
            "EX6" => Family::Ex6,
            "EX8" => Family::Ex8,
            "CAYLEY" => Family::Cayley,
            "CUSTOM" => Family::Custom,
            other => return Err(Error::Domain(format!("unknown family `{other}`"))),
        })
    }
}

/// A `(row, column, symbol)` triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Entry {
    pub row: usize,
    pub col: usize,
    pub sym: usize,
}

impl Entry {
    pub const fn new(row: usize, col: usize, sym: usize) -> Self {
        Entry { row, col, sym }
    }

    pub fn cell(&self) -> (usize, usize) {
        (self.row, self.col)
    }

    pub fn to_array(self) -> [usize; 3] {
        [self.row, self.col, self.sym]
    }
}

impl From<(usize, usize, usize)> for Entry {
    fn from((row, col, sym): (usize, usize, usize)) -> Self {
        Entry { row, col, sym }
    }
}

// Entries appear in reports as `[r, c, s]`.
impl Serialize for Entry {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_array().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [row, col, sym] = <[usize; 3]>::deserialize(deserializer)?;
        Ok(Entry { row, col, sym })
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.sym)
    }
}

/// A validated latin square of order `n`, stored row-major.
///
/// Equality compares the grid only; the family tag is metadata.
#[derive(Clone)]
pub struct LatinSquare {
    order: usize,
    cells: Vec<usize>,
    family: Family,
}

impl LatinSquare {
    /// Validates an `n x n` grid of symbols in `0..n`.
    pub fn new(order: usize, grid: Vec<Vec<usize>>) -> Result<Self> {
        if order == 0 {
            return Err(Error::BadShape { order, detail: "order must be positive".into() });
        }
        if grid.len() != order {
            return Err(Error::BadShape {
                order,
                detail: format!("expected {order} rows, got {}", grid.len()),
            });
        }
        let mut cells = Vec::with_capacity(order * order);
        for (r, row) in grid.into_iter().enumerate() {
            if row.len() != order {
                return Err(Error::BadShape {
                    order,
                    detail: format!("row {r} has {} entries", row.len()),
                });
            }
            cells.extend(row);
        }
        Self::from_cells(order, cells)
    }

    /// Validates a flat row-major cell vector of length `n * n`.
    pub fn from_cells(order: usize, cells: Vec<usize>) -> Result<Self> {
        if order == 0 || cells.len() != order * order {
            return Err(Error::BadShape {
                order,
                detail: format!("expected {} cells, got {}", order * order, cells.len()),
            });
        }
        for (i, &value) in cells.iter().enumerate() {
            if value >= order {
                return Err(Error::BadSymbol { row: i / order, col: i % order, value, order });
            }
        }
        let mut seen = vec![usize::MAX; order];
        for r in 0..order {
            for c in 0..order {
                let s = cells[r * order + c];
                if seen[s] == r {
                    return Err(Error::NotLatin { line: Line::Row, index: r, symbol: s });
                }
                seen[s] = r;
            }
        }
        seen.fill(usize::MAX);
        for c in 0..order {
            for r in 0..order {
                let s = cells[r * order + c];
                if seen[s] == c {
                    return Err(Error::NotLatin { line: Line::Column, index: c, symbol: s });
                }
                seen[s] = c;
            }
        }
        Ok(LatinSquare { order, cells, family: Family::Custom })
    }

    pub fn with_family(mut self, family: Family) -> Self {
        self.family = family;
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn family(&self) -> Family {
        self.family
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> usize {
        self.cells[row * self.order + col]
    }

    pub fn entry(&self, row: usize, col: usize) -> Entry {
        Entry::new(row, col, self.get(row, col))
    }

    pub fn row(&self, row: usize) -> &[usize] {
        &self.cells[row * self.order..(row + 1) * self.order]
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.cells.chunks(self.order)
    }

    pub fn to_grid(&self) -> Vec<Vec<usize>> {
        self.rows().map(<[usize]>::to_vec).collect()
    }

    /// All `n^2` entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = Entry> + '_ {
        let n = self.order;
        self.cells.iter().enumerate().map(move |(i, &s)| Entry::new(i / n, i % n, s))
    }

    pub fn contains(&self, e: &Entry) -> bool {
        e.row < self.order && e.col < self.order && self.get(e.row, e.col) == e.sym
    }
}

impl PartialEq for LatinSquare {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.cells == other.cells
    }
}

impl Eq for LatinSquare {}

impl fmt::Debug for LatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LatinSquare(order={}, family={})", self.order, self.family)?;
        for row in self.rows() {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

/// The addition table of the integers mod `n`.
pub fn cayley_table(n: usize) -> Result<LatinSquare> {
    if n == 0 {
        return Err(Error::Domain("cayley table needs n >= 1".into()));
    }
    let cells = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
    Ok(LatinSquare::from_cells(n, cells)?.with_family(Family::Cayley))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_one_and_two() {
        let one = LatinSquare::new(1, vec![vec![0]]).unwrap();
        assert_eq!(one.order(), 1);
        let two = LatinSquare::new(2, vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(two.get(1, 0), 1);
    }

    #[test]
    fn repeated_column_symbol() {
        let err = LatinSquare::new(2, vec![vec![0, 1], vec![0, 1]]).unwrap_err();
        assert!(matches!(err, Error::NotLatin { line: Line::Column, index: 0, symbol: 0 }));
    }

    #[test]
    fn repeated_row_symbol() {
        let err = LatinSquare::new(2, vec![vec![0, 0], vec![1, 1]]).unwrap_err();
        assert!(matches!(err, Error::NotLatin { line: Line::Row, index: 0, .. }));
    }

    #[test]
    fn symbol_out_of_range() {
        let err = LatinSquare::new(2, vec![vec![0, 2], vec![1, 0]]).unwrap_err();
        assert!(matches!(err, Error::BadSymbol { row: 0, col: 1, value: 2, .. }));
    }

    #[test]
    fn ragged_grid() {
        assert!(matches!(
            LatinSquare::new(2, vec![vec![0, 1], vec![1]]),
            Err(Error::BadShape { .. })
        ));
        assert!(LatinSquare::new(0, vec![]).is_err());
    }

    #[test]
    fn cayley_tables() {
        assert_eq!(cayley_table(3).unwrap().to_grid(), vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]);
        assert_eq!(cayley_table(2).unwrap().to_grid(), vec![vec![0, 1], vec![1, 0]]);
        let c4 = cayley_table(4).unwrap();
        assert!(c4.entries().all(|e| (e.sym + 2 * 4 - e.row - e.col) % 4 == 0));
        assert!(cayley_table(0).is_err());
    }

    #[test]
    fn family_names_round_trip() {
        for f in [Family::T, Family::U, Family::V, Family::L, Family::Ex6, Family::Ex8, Family::Cayley, Family::Custom] {
            assert_eq!(f.as_str().parse::<Family>().unwrap(), f);
        }
    }
}
