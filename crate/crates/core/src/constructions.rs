//! The square families with pinned entries (orders 0, 2 and 4 mod 6), the two
//! small exceptional squares, and the 3x3 block square of order `3m`.
//!
//! Case lists are evaluated top to bottom and the first match wins. Every
//! listed case (other than the fallback) is also checked against the rest, and
//! a cell matched by two of them is reported as an error rather than resolved
//! silently. All arithmetic is over the integers, reduced mod `n` at the end;
//! mod-2 and mod-3 guards look at the integer representatives `0..n`.

use crate::delta::forced_entry_certificate;
use crate::diagonal::Transversal;
use crate::error::{Error, Result};
use crate::square::{Entry, Family, LatinSquare};

/// Upper order used by the exhaustive construction sweeps.
pub const DEFAULT_ORDER_CAP: usize = 600;
/// Upper block size `m` used by the block-square sweeps.
pub const DEFAULT_BLOCK_CAP: usize = 199;

/// A family together with an order it is defined for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    family: Family,
    order: usize,
}

impl FamilySpec {
    pub fn new(family: Family, order: usize) -> Result<Self> {
        let ok = match family {
            Family::T => order % 6 == 0 && order >= 12,
            Family::U => order % 6 == 2 && order >= 14,
            Family::V => order % 6 == 4 && order >= 10,
            Family::L => order % 3 == 0 && (order / 3) % 2 == 1 && order >= 9,
            Family::Ex6 => order == 6,
            Family::Ex8 => order == 8,
            Family::Cayley => order >= 1,
            Family::Custom => false,
        };
        if ok {
            Ok(FamilySpec { family, order })
        } else {
            Err(Error::Domain(format!("family {family} is not defined at order {order}")))
        }
    }

    /// The block square with blocks of size `m`.
    pub fn block(m: usize) -> Result<Self> {
        if m < 3 || m % 2 == 0 {
            return Err(Error::Domain(format!("block squares need odd m >= 3, got {m}")));
        }
        FamilySpec::new(Family::L, 3 * m)
    }

    /// The family used at an even order `n >= 10`, by `n mod 6`.
    pub fn for_even_order(n: usize) -> Result<Self> {
        let family = match n % 6 {
            0 => Family::T,
            2 => Family::U,
            4 => Family::V,
            _ => return Err(Error::Domain(format!("order {n} is odd"))),
        };
        FamilySpec::new(family, n)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `floor(n / 6)`.
    pub fn k(&self) -> usize {
        self.order / 6
    }

    /// Block size for family L.
    pub fn m(&self) -> usize {
        self.order / 3
    }

    /// Label such as `T12`.
    pub fn label(&self) -> String {
        format!("{}{}", self.family, self.order)
    }

    pub fn build(&self) -> Result<LatinSquare> {
        match self.family {
            Family::T => build_t(self.order),
            Family::U => build_u(self.order),
            Family::V => build_v(self.order),
            Family::L => build_l(self.m()),
            Family::Ex6 | Family::Ex8 => build_exceptional(self.order),
            Family::Cayley => crate::square::cayley_table(self.order),
            Family::Custom => unreachable!("rejected by FamilySpec::new"),
        }
    }
}

#[inline]
fn reduce(x: i64, n: usize) -> usize {
    x.rem_euclid(n as i64) as usize
}

/// Picks the first matching offset; errors if two listed cases match.
fn first_case(cases: &[(bool, i64)], family: Family, a: i64, b: i64) -> Result<i64> {
    let mut hits = cases.iter().filter(|(hit, _)| *hit);
    match (hits.next(), hits.next()) {
        (Some(_), Some(_)) => Err(Error::Domain(format!(
            "cases of family {family} overlap at cell ({a}, {b})"
        ))),
        (Some(&(_, offset)), None) => Ok(offset),
        (None, _) => Ok(0),
    }
}

fn build_from_offsets(
    n: usize,
    family: Family,
    offset: impl Fn(i64, i64) -> Result<i64>,
) -> Result<LatinSquare> {
    let mut cells = Vec::with_capacity(n * n);
    for a in 0..n as i64 {
        for b in 0..n as i64 {
            cells.push(reduce(a + b + offset(a, b)?, n));
        }
    }
    Ok(LatinSquare::from_cells(n, cells)?.with_family(family))
}

/// The order `6k` square, `k >= 2`.
pub fn build_t(n: usize) -> Result<LatinSquare> {
    let k = FamilySpec::new(Family::T, n)?.k() as i64;
    let ni = n as i64;
    build_from_offsets(n, Family::T, |a, b| {
        let is = |pairs: &[(i64, i64)]| pairs.contains(&(a, b));
        let band = (4..=3 * k - 3).contains(&a);
        let cases = [
            (is(&[(0, 2), (1, 0)]), 2),
            (is(&[(0, 1), (2, 1)]), 1),
            (is(&[(1, 1), (1, 2), (2, 2), (3, 1)]), -1),
            (is(&[(3, 0)]), -2),
            (b > 1 && b % 3 == 1 && a == 0, 3),
            (b > 1 && b % 3 == 1 && a == 3, -3),
            (band && a % 3 == 0 && b % 2 == 0, -2),
            (band && a % 3 == 1 && b % 2 == 0 && b != ni - 2 * a + 2, 2),
            (band && a % 3 == 1 && (b == ni - 2 * a + 3 || b == ni - 2 * a + 2), 1),
            (band && a % 3 == 2 && b == ni - 2 * a + 4, 1),
            (band && a % 3 == 2 && b == ni - 2 * a + 5, -1),
        ];
        first_case(&cases, Family::T, a, b)
    })
}

/// The order `6k + 2` square, `k >= 2`.
pub fn build_u(n: usize) -> Result<LatinSquare> {
    let k = FamilySpec::new(Family::U, n)?.k() as i64;
    let ni = n as i64;
    build_from_offsets(n, Family::U, |a, b| {
        let is = |pairs: &[(i64, i64)]| pairs.contains(&(a, b));
        let band = (5..=3 * k - 2).contains(&a);
        let cases = [
            (is(&[(1, 3), (2, 5), (3, 4)]), 1),
            (is(&[(1, 4), (2, 4), (3, 5), (4, 3), (4, 4)]), -1),
            (is(&[(0, 4), (2, 3)]), 2),
            (b != 4 && b % 2 == 0 && a == 2, 2),
            ((b > 3 && b % 3 == 0 && a == 0) || is(&[(0, 1)]), 3),
            ((b > 3 && b % 3 == 0 && a == 3) || is(&[(3, 1)]), -3),
            ((b != 4 && b % 2 == 0 && a == 4) || is(&[(3, 3)]), -2),
            (band && a % 3 == 2 && b % 2 == 0 && b != ni - 2 * a + 4, 2),
            (band && a % 3 == 2 && (b == ni - 2 * a + 4 || b == ni - 2 * a + 5), 1),
            (band && a % 3 == 0 && b == ni - 2 * a + 6, 1),
            (band && a % 3 == 0 && b == ni - 2 * a + 7, -1),
            (band && a % 3 == 1 && b % 2 == 0, -2),
        ];
        first_case(&cases, Family::U, a, b)
    })
}

/// The order `6k + 4` square, `k >= 1`.
pub fn build_v(n: usize) -> Result<LatinSquare> {
    let k = FamilySpec::new(Family::V, n)?.k() as i64;
    let ni = n as i64;
    build_from_offsets(n, Family::V, |a, b| {
        let is = |pairs: &[(i64, i64)]| pairs.contains(&(a, b));
        let band = (4..=3 * k).contains(&a);
        let cases = [
            (is(&[(1, 1), (1, 2)]), -1),
            (is(&[(3, 0), (3, 2)]), -2),
            (is(&[(0, 1)]), 1),
            (is(&[(1, 0)]), 2),
            (b % 3 == 2 && a == 0, 3),
            (b > 2 && b % 3 == 2 && a == 3, -3),
            (band && a % 3 == 0 && b % 2 == 0, -2),
            (band && a % 3 == 1 && b % 2 == 0 && b != ni - 2 * a + 2, 2),
            (band && a % 3 == 1 && (b == ni - 2 * a + 2 || b == ni - 2 * a + 3), 1),
            (band && a % 3 == 2 && b == ni - 2 * a + 4, 1),
            (band && a % 3 == 2 && b == ni - 2 * a + 5, -1),
        ];
        first_case(&cases, Family::V, a, b)
    })
}

const EX6: [[usize; 6]; 6] = [
    [0, 1, 2, 3, 4, 5],
    [1, 0, 3, 4, 5, 2],
    [2, 3, 1, 5, 0, 4],
    [3, 5, 4, 1, 2, 0],
    [4, 2, 5, 0, 1, 3],
    [5, 4, 0, 2, 3, 1],
];

/// Column of the highlighted transversal in each row of the order-6 square.
pub const EX6_TRANSVERSAL: [usize; 6] = [0, 2, 5, 1, 4, 3];

/// Cells of the order-6 square highlighted as transversal-free.
pub const EX6_FREE_CELLS: [(usize, usize); 16] = [
    (0, 3), (0, 5),
    (1, 1), (1, 4), (1, 5),
    (2, 2), (2, 3), (2, 4),
    (3, 0), (3, 2), (3, 3),
    (4, 0), (4, 1), (4, 5),
    (5, 1), (5, 2),
];

const EX8: [[usize; 8]; 8] = [
    [0, 1, 2, 3, 4, 5, 6, 7],
    [1, 0, 3, 2, 5, 4, 7, 6],
    [2, 3, 1, 0, 7, 6, 4, 5],
    [3, 2, 6, 7, 0, 1, 5, 4],
    [4, 7, 5, 1, 6, 3, 2, 0],
    [5, 4, 7, 6, 3, 2, 0, 1],
    [6, 5, 0, 4, 2, 7, 1, 3],
    [7, 6, 4, 5, 1, 0, 3, 2],
];

/// Column of the highlighted transversal in each row of the order-8 square.
pub const EX8_TRANSVERSAL: [usize; 8] = [4, 7, 1, 6, 3, 5, 2, 0];

/// Cells of the order-8 square highlighted as transversal-free. Exhaustive
/// search shows `(7, 1)` and `(7, 2)` do lie on transversals, and that the
/// square has 28 transversal-free cells in all.
pub const EX8_MARKED_CELLS: [(usize, usize); 25] = [
    (2, 2), (2, 3), (2, 4), (2, 5),
    (3, 2), (3, 3), (3, 4), (3, 5),
    (4, 0), (4, 1), (4, 2), (4, 5), (4, 7),
    (5, 0), (5, 1), (5, 2), (5, 3),
    (6, 0), (6, 1), (6, 3), (6, 4), (6, 6), (6, 7),
    (7, 1), (7, 2),
];

/// The literal order-6 or order-8 square.
pub fn build_exceptional(n: usize) -> Result<LatinSquare> {
    match n {
        6 => Ok(LatinSquare::new(6, EX6.iter().map(|r| r.to_vec()).collect())?.with_family(Family::Ex6)),
        8 => Ok(LatinSquare::new(8, EX8.iter().map(|r| r.to_vec()).collect())?.with_family(Family::Ex8)),
        _ => Err(Error::Domain(format!("no exceptional square of order {n}"))),
    }
}

/// Symbol of block `(i, j)` (1-based) at local cell `(a, b)` of the block
/// square with block size `m`.
///
/// The offsets `0`, `m`, `2m` are added to `(a + b) mod m`, so each block uses
/// one band of `m - 1` ordinary symbols plus one of the special symbols
/// `0`, `2m - 1`, `3m - 1`.
pub fn block_symbol(m: usize, i: usize, j: usize, a: usize, b: usize) -> Result<usize> {
    let t = (a + b) % m;
    let ij = (i, j);
    let cases = [
        (t != 0 && (i + j) % 3 == 2, t),
        (t != m - 1 && (i + j) % 3 == 0, t + m),
        (t != m - 1 && (i + j) % 3 == 1, t + 2 * m),
        (t == 0 && ij == (1, 1), 0),
        (t == 0 && ij == (2, 3), 2 * m - 1),
        (t == 0 && ij == (3, 2), 3 * m - 1),
        (t == m - 1 && matches!(ij, (2, 2) | (3, 3)), 0),
        (t == m - 1 && matches!(ij, (1, 2) | (3, 1)), 2 * m - 1),
        (t == m - 1 && matches!(ij, (1, 3) | (2, 1)), 3 * m - 1),
    ];
    let mut hits = cases.iter().filter(|(hit, _)| *hit);
    match (hits.next(), hits.next()) {
        (Some(&(_, s)), None) => Ok(s),
        (Some(_), Some(_)) => Err(Error::Domain(format!("block cases overlap at block ({i},{j}) cell ({a},{b})"))),
        (None, _) => Err(Error::Domain(format!("no block case covers block ({i},{j}) cell ({a},{b})"))),
    }
}

/// The block square of order `n = 3m`, `m` odd and at least 3.
pub fn build_l(m: usize) -> Result<LatinSquare> {
    FamilySpec::block(m)?;
    let n = 3 * m;
    let mut cells = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            cells.push(block_symbol(m, r / m + 1, c / m + 1, r % m, c % m)?);
        }
    }
    Ok(LatinSquare::from_cells(n, cells)?.with_family(Family::L))
}

/// The explicit column formula for the family's known transversal.
pub fn transversal_columns(spec: &FamilySpec) -> Result<Vec<usize>> {
    let n = spec.order();
    let cols: Vec<i64> = match spec.family() {
        Family::T => (0..n as i64).map(|a| t_col(n as i64, spec.k() as i64, a)).collect(),
        Family::U => (0..n as i64).map(|a| u_col(n as i64, spec.k() as i64, a)).collect(),
        Family::V => (0..n as i64).map(|a| v_col(n as i64, spec.k() as i64, a)).collect(),
        Family::L => l_cols(spec.m() as i64),
        Family::Ex6 => EX6_TRANSVERSAL.iter().map(|&c| c as i64).collect(),
        Family::Ex8 => EX8_TRANSVERSAL.iter().map(|&c| c as i64).collect(),
        f => return Err(Error::Domain(format!("no explicit transversal for family {f}"))),
    };
    Ok(cols.into_iter().map(|c| reduce(c, n)).collect())
}

fn t_col(n: i64, k: i64, a: i64) -> i64 {
    match a {
        0 => 4,
        1..=3 => a - 1,
        _ if a <= 3 * k - 1 && a % 3 != 0 => n - 2 * a + 4,
        _ if a <= 3 * k - 1 => n - 2 * a + 7,
        _ if a % 3 == 0 => n - 2 * a + 3,
        _ if a >= 3 * k + 2 && a % 3 == 1 => n - 2 * a + 6,
        // a % 3 == 2 from 3k + 2 on, or a == 3k + 1
        _ => n - 2 * a + 9,
    }
}

fn u_col(n: i64, k: i64, a: i64) -> i64 {
    match a {
        0 | 3 | 4 => a + 1,
        1 => 3,
        2 => 8,
        _ if a == 3 * k + 6 => 2,
        _ if a == 3 * k + 1 => 6,
        _ if a == 3 * k + 3 => 7,
        _ if a == 6 * k - 1 => 9,
        _ if a == 3 * k => 11,
        _ if (a < 3 * k && a % 3 != 1) || a == 3 * k + 4 => n - 2 * a + 6,
        _ if a < 3 * k => n - 2 * a + 9,
        _ if a >= 3 * k + 7 && a % 3 == 0 => n - 2 * a + 13,
        _ if a >= 3 * k + 7 && a % 3 == 1 => n - 2 * a + 10,
        // 3k + 2 <= a <= 6k - 4 and a % 3 == 2
        _ => n - 2 * a + 1,
    }
}

fn v_col(n: i64, k: i64, a: i64) -> i64 {
    match a {
        0 => 2,
        1 => 0,
        2 => 6,
        3 => 1,
        _ if a == 3 * k + 5 => 4,
        _ if (3 * k + 1..=3 * k + 3).contains(&a) => n - 2 * a + 5,
        _ if a <= 3 * k && a % 3 != 0 => n - 2 * a + 4,
        _ if a <= 3 * k => n - 2 * a + 7,
        _ if a % 3 == 0 => n - 2 * a + 6,
        _ if a % 3 == 1 => n - 2 * a + 3,
        _ => n - 2 * a + 9,
    }
}

const L9_TRANSVERSAL: [(usize, usize, usize); 9] =
    [(0, 1, 1), (1, 4, 5), (2, 7, 6), (3, 8, 2), (4, 0, 4), (5, 3, 0), (6, 6, 3), (7, 5, 8), (8, 2, 7)];

fn l_cols(m: i64) -> Vec<i64> {
    let n = 3 * m;
    if n == 9 {
        return L9_TRANSVERSAL.iter().map(|&(_, c, _)| c as i64).collect();
    }
    if m % 3 == 0 {
        let t = m / 3;
        (0..n)
            .map(|a| match a {
                _ if a < t => 2 * t - 2 * (a + 1),
                _ if a < 2 * t => 4 * t + a,
                _ if a < m => 4 * m - 2 * a - 1,
                _ if a < 4 * t => a - t,
                _ if a < 5 * t => 13 * t - 2 * a - 1,
                _ if a < 2 * m => 6 * m - 2 * (a + 1),
                _ if a < 7 * t => 14 * t - 2 * a - 1,
                _ if a < 8 * t => 19 * t - 2 * (a + 1),
                _ => a,
            })
            .collect()
    } else {
        let h = (m + 1) / 2;
        (0..n)
            .map(|a| match a % 3 {
                0 => -a * h,
                1 => -2 * a,
                _ => m - a * h,
            })
            .collect()
    }
}

/// The family's explicit transversal, verified against the built square.
pub fn known_transversal(spec: &FamilySpec, square: &LatinSquare) -> Result<Transversal> {
    Transversal::new(square, transversal_columns(spec)?)
}

/// Pinned entries given by each family's closed-form pattern: the leading
/// terms that exist at this order, plus the closing term once `k >= 4` (below
/// that the closing term collides with the leading ones).
pub fn pattern_pinned_entries(spec: &FamilySpec) -> Result<Vec<Entry>> {
    let n = spec.order();
    let k = spec.k();
    let leading: [(usize, usize, usize); 4];
    let closing: (usize, usize, usize);
    // Each leading term is written with offsets from n; terms beyond k do not exist.
    match spec.family() {
        Family::T => {
            leading = [(1, 0, 3), (2, 1, 4), (5, n - 6, 0), (8, n.saturating_sub(12), n - 3)];
            closing = (3 * k - 4, 12, 3 * k + 9);
        }
        Family::U => {
            leading = [(1, 3, 5), (3, 4, 8), (6, n - 6, 1), (9, n.saturating_sub(12), n - 2)];
            closing = (3 * k - 3, 14, 3 * k + 12);
        }
        Family::V => {
            leading = [(1, 0, 3), (5, n - 6, 0), (8, n.saturating_sub(12), n - 3), (11, n.saturating_sub(18), n - 6)];
            closing = (3 * k - 1, 10, 3 * k + 10);
        }
        f => return Err(Error::Domain(format!("family {f} has no pinned sequence"))),
    }
    let mut out: Vec<Entry> = leading.iter().take(k).map(|&(r, c, s)| Entry::new(r, c % n, s % n)).collect();
    if k >= 4 {
        let (r, c, s) = closing;
        let e = Entry::new(r, c % n, s % n);
        if !out.contains(&e) {
            out.push(e);
        }
    }
    Ok(out)
}

/// The `floor(n / 6)` entries every suitable diagonal must use, as produced by
/// the forced-entry certificate. Errors if the certificate fails or does not
/// produce exactly `k` entries.
pub fn claimed_pinned_entries(spec: &FamilySpec) -> Result<Vec<Entry>> {
    if !matches!(spec.family(), Family::T | Family::U | Family::V) {
        return Err(Error::Domain(format!("family {} has no pinned entries", spec.family())));
    }
    let square = spec.build()?;
    let cert = forced_entry_certificate(&square)?;
    if !cert.valid {
        return Err(Error::Domain(format!("forced-entry certificate fails for {}", spec.label())));
    }
    if cert.forced.len() != spec.k() {
        return Err(Error::Domain(format!(
            "{} has {} forced entries, expected {}",
            spec.label(),
            cert.forced.len(),
            spec.k()
        )));
    }
    Ok(cert.forced)
}
