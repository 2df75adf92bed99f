use crate::diagonal::Transversal;
use crate::error::{Error, Result};
use crate::square::LatinSquare;

/// A bijection on `0..n`, stored as its image vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &x) in images.iter().enumerate() {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::BadPermutation { order: n, detail: format!("image of {i} is {x}") });
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Product of the given transpositions, which must be pairwise disjoint.
    pub fn from_transpositions(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut moved = vec![false; n];
        for (a, b) in pairs {
            if a >= n || b >= n || a == b || moved[a] || moved[b] {
                return Err(Error::BadPermutation {
                    order: n,
                    detail: format!("transposition ({a} {b}) is not disjoint from the others"),
                });
            }
            moved[a] = true;
            moved[b] = true;
            images.swap(a, b);
        }
        Ok(Permutation(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }
}

/// Permutations of rows, columns and symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isotopism {
    pub alpha: Permutation,
    pub beta: Permutation,
    pub gamma: Permutation,
}

impl Isotopism {
    pub fn new(alpha: Permutation, beta: Permutation, gamma: Permutation) -> Result<Self> {
        let n = alpha.len();
        if beta.len() != n || gamma.len() != n {
            return Err(Error::BadPermutation {
                order: n,
                detail: format!("component lengths {}, {}, {} differ", n, beta.len(), gamma.len()),
            });
        }
        Ok(Isotopism { alpha, beta, gamma })
    }

    pub fn identity(n: usize) -> Self {
        Isotopism { alpha: Permutation::identity(n), beta: Permutation::identity(n), gamma: Permutation::identity(n) }
    }

    /// `(p, p, p)`.
    pub fn automorphism(p: Permutation) -> Self {
        Isotopism { alpha: p.clone(), beta: p.clone(), gamma: p }
    }

    pub fn order(&self) -> usize {
        self.alpha.len()
    }
}

/// `result[alpha(r)][beta(c)] = gamma(square[r][c])`.
pub fn apply_isotopism(square: &LatinSquare, iso: &Isotopism) -> Result<LatinSquare> {
    let n = square.order();
    if iso.order() != n {
        return Err(Error::BadPermutation {
            order: n,
            detail: format!("isotopism acts on {} points", iso.order()),
        });
    }
    let mut cells = vec![0; n * n];
    for e in square.entries() {
        cells[iso.alpha.apply(e.row) * n + iso.beta.apply(e.col)] = iso.gamma.apply(e.sym);
    }
    Ok(LatinSquare::from_cells(n, cells)?.with_family(square.family()))
}

/// Image of a transversal of `square` in `apply_isotopism(square, iso)`.
pub fn map_transversal(image: &LatinSquare, t: &Transversal, iso: &Isotopism) -> Result<Transversal> {
    let n = t.order();
    let mut cols = vec![0; n];
    for (r, &c) in t.cols().iter().enumerate() {
        cols[iso.alpha.apply(r)] = iso.beta.apply(c);
    }
    Transversal::new(image, cols)
}

pub fn is_autotopism(square: &LatinSquare, iso: &Isotopism) -> Result<bool> {
    Ok(apply_isotopism(square, iso)? == *square)
}
