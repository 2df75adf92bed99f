#![allow(dead_code)]

use latin_transversals::{LatinSquare, Permutation};

/// splitmix64, enough to drive shuffles from a proptest seed.
pub struct Mix(pub u64);

impl Mix {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }

    pub fn shuffle<T>(&mut self, v: &mut [T]) {
        for i in (1..v.len()).rev() {
            v.swap(i, self.below(i + 1));
        }
    }

    pub fn permutation(&mut self, n: usize) -> Permutation {
        let mut v: Vec<usize> = (0..n).collect();
        self.shuffle(&mut v);
        Permutation::new(v).unwrap()
    }
}

/// A random latin square from a randomized backtracking fill.
pub fn random_latin(n: usize, seed: u64) -> LatinSquare {
    let mut rng = Mix(seed);
    let mut cells = vec![usize::MAX; n * n];
    assert!(fill(n, 0, &mut cells, &mut rng));
    LatinSquare::from_cells(n, cells).unwrap()
}

fn fill(n: usize, i: usize, cells: &mut [usize], rng: &mut Mix) -> bool {
    if i == n * n {
        return true;
    }
    let (r, c) = (i / n, i % n);
    let mut options: Vec<usize> = (0..n)
        .filter(|&s| (0..c).all(|x| cells[r * n + x] != s) && (0..r).all(|y| cells[y * n + c] != s))
        .collect();
    rng.shuffle(&mut options);
    for s in options {
        cells[i] = s;
        if fill(n, i + 1, cells, rng) {
            return true;
        }
    }
    cells[i] = usize::MAX;
    false
}

/// Every permutation of `0..n`, the independent oracle for the engine.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    heap(n, &mut cur, &mut out);
    out.sort();
    out
}

fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(a.clone());
        return;
    }
    heap(k - 1, a, out);
    for i in 0..k - 1 {
        if k % 2 == 0 {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
        heap(k - 1, a, out);
    }
}

/// Naive transversal test: distinct symbols along the permutation.
pub fn naive_is_transversal(square: &LatinSquare, cols: &[usize]) -> bool {
    let mut seen = vec![false; square.order()];
    cols.iter().enumerate().all(|(r, &c)| !std::mem::replace(&mut seen[square.get(r, c)], true))
}
