//! Diagonals and transversals, stored row-indexed: `cols[r]` is the column
//! picked in row `r`.

use crate::error::{Error, Result};
use crate::square::{Entry, LatinSquare};

/// `n` cells from distinct rows and distinct columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagonal {
    cols: Vec<usize>,
}

impl Diagonal {
    pub fn new(cols: Vec<usize>) -> Result<Self> {
        let n = cols.len();
        let mut seen = vec![false; n];
        for (r, &c) in cols.iter().enumerate() {
            if c >= n {
                return Err(Error::InvalidDiagonal(format!("row {r} picks column {c} outside 0..{n}")));
            }
            if std::mem::replace(&mut seen[c], true) {
                return Err(Error::InvalidDiagonal(format!("column {c} used twice")));
            }
        }
        Ok(Diagonal { cols })
    }

    /// Builds from explicit entries, which must cover every row once.
    pub fn from_entries(order: usize, entries: &[Entry]) -> Result<Self> {
        let mut cols = vec![usize::MAX; order];
        if entries.len() != order {
            return Err(Error::InvalidDiagonal(format!("expected {order} entries, got {}", entries.len())));
        }
        for e in entries {
            if e.row >= order || cols[e.row] != usize::MAX {
                return Err(Error::InvalidDiagonal(format!("row {} missing or repeated", e.row)));
            }
            cols[e.row] = e.col;
        }
        Diagonal::new(cols)
    }

    pub fn order(&self) -> usize {
        self.cols.len()
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn col(&self, row: usize) -> usize {
        self.cols[row]
    }

    pub fn entries<'a>(&'a self, square: &'a LatinSquare) -> impl Iterator<Item = Entry> + 'a {
        self.cols.iter().enumerate().map(move |(r, &c)| square.entry(r, c))
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        self.cols.get(row) == Some(&col)
    }

    /// True if the picked symbols are all distinct.
    pub fn is_transversal_of(&self, square: &LatinSquare) -> bool {
        if square.order() != self.order() {
            return false;
        }
        let mut seen = vec![false; self.order()];
        self.cols
            .iter()
            .enumerate()
            .all(|(r, &c)| !std::mem::replace(&mut seen[square.get(r, c)], true))
    }
}

/// A diagonal whose symbols are also all distinct, checked against a square.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Transversal {
    diagonal: Diagonal,
}

impl Transversal {
    pub fn new(square: &LatinSquare, cols: Vec<usize>) -> Result<Self> {
        let diagonal = Diagonal::new(cols)?;
        Self::from_diagonal(square, diagonal)
    }

    pub fn from_diagonal(square: &LatinSquare, diagonal: Diagonal) -> Result<Self> {
        if diagonal.order() != square.order() {
            return Err(Error::InvalidDiagonal(format!(
                "diagonal of order {} on a square of order {}",
                diagonal.order(),
                square.order()
            )));
        }
        if !diagonal.is_transversal_of(square) {
            return Err(Error::InvalidDiagonal("symbols are not distinct".into()));
        }
        Ok(Transversal { diagonal })
    }

    pub fn from_entries(square: &LatinSquare, entries: &[Entry]) -> Result<Self> {
        if let Some(e) = entries.iter().find(|e| !square.contains(e)) {
            return Err(Error::InvalidDiagonal(format!("{e} is not an entry of the square")));
        }
        Self::from_diagonal(square, Diagonal::from_entries(square.order(), entries)?)
    }

    pub fn diagonal(&self) -> &Diagonal {
        &self.diagonal
    }

    pub fn cols(&self) -> &[usize] {
        self.diagonal.cols()
    }

    pub fn col(&self, row: usize) -> usize {
        self.diagonal.col(row)
    }

    pub fn order(&self) -> usize {
        self.diagonal.order()
    }

    pub fn entries<'a>(&'a self, square: &'a LatinSquare) -> impl Iterator<Item = Entry> + 'a {
        self.diagonal.entries(square)
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        self.diagonal.contains_cell(row, col)
    }

    /// True if the two transversals share no cell.
    pub fn is_disjoint_from(&self, other: &Transversal) -> bool {
        self.cols().iter().zip(other.cols()).all(|(a, b)| a != b)
    }
}
