//! Exact integer kernels: binomial coefficients, determinants and Pfaffians.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer used for every value in the crate.
pub type Integer = BigInt;

/// Parses the canonical decimal form: optional leading `-`, then ASCII digits.
pub fn parse_integer(s: &str) -> Result<Integer> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse {
            what: "integer",
            input: s.to_owned(),
        });
    }
    s.parse().map_err(|_| Error::Parse {
        what: "integer",
        input: s.to_owned(),
    })
}

/// Canonical decimal rendering (no separators, leading `-` for negatives).
pub fn render_integer(x: &Integer) -> String {
    x.to_str_radix(10)
}

/// `C(n, k)`, zero when `k` lies outside `0..=n`.
pub fn binomial(n: u64, k: i64) -> Integer {
    if k < 0 || k as u64 > n {
        return Integer::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Integer::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// Square skew-symmetric integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewMatrix {
    dim: usize,
    entries: Vec<Integer>,
}

impl SkewMatrix {
    /// Validates squareness, a zero diagonal and `a[k][l] = -a[l][k]`.
    pub fn new(rows: Vec<Vec<Integer>>) -> Result<Self> {
        let dim = rows.len();
        for (row, r) in rows.iter().enumerate() {
            if r.len() != dim {
                return Err(Error::NotSquare { row, len: r.len(), dim });
            }
        }
        for (k, row) in rows.iter().enumerate() {
            for (l, v) in row.iter().enumerate().skip(k) {
                if *v != -&rows[l][k] {
                    return Err(Error::NotSkew { row: k, col: l });
                }
            }
        }
        Ok(Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds the matrix from its strict upper triangle, given row by row
    /// (`a[0][1], a[0][2], .., a[1][2], ..`).
    pub fn from_upper(dim: usize, upper: &[Integer]) -> Self {
        assert_eq!(upper.len(), dim * dim.saturating_sub(1) / 2);
        let mut entries = vec![Integer::zero(); dim * dim];
        let mut it = upper.iter();
        for k in 0..dim {
            for l in k + 1..dim {
                let v = it.next().unwrap();
                entries[k * dim + l] = v.clone();
                entries[l * dim + k] = -v;
            }
        }
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Integer {
        &self.entries[row * self.dim + col]
    }

    pub fn rows(&self) -> Vec<Vec<Integer>> {
        self.entries
            .chunks(self.dim.max(1))
            .take(self.dim)
            .map(<[_]>::to_vec)
            .collect()
    }

    /// Swaps rows `a`, `b` and columns `a`, `b` simultaneously.
    pub fn swap_indices(&mut self, a: usize, b: usize) {
        let d = self.dim;
        for c in 0..d {
            self.entries.swap(a * d + c, b * d + c);
        }
        for r in 0..d {
            self.entries.swap(r * d + a, r * d + b);
        }
    }
}

/// Pfaffian by expansion along the first active row, memoized on the set of
/// still-active indices. `Pf` of the empty matrix is 1.
pub fn pfaffian(m: &SkewMatrix) -> Result<Integer> {
    if !m.dim.is_multiple_of(2) {
        return Err(Error::OddDimension(m.dim));
    }
    let words = m.dim.div_ceil(64).max(1);
    let mut active = vec![0u64; words];
    for k in 0..m.dim {
        active[k / 64] |= 1 << (k % 64);
    }
    let mut memo = HashMap::new();
    Ok(pfaffian_rec(m, active, &mut memo))
}

fn pfaffian_rec(m: &SkewMatrix, active: Vec<u64>, memo: &mut HashMap<Vec<u64>, Integer>) -> Integer {
    let members: Vec<usize> = active
        .iter()
        .enumerate()
        .flat_map(|(w, &bits)| (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| w * 64 + b))
        .collect();
    if members.is_empty() {
        return Integer::one();
    }
    if let Some(v) = memo.get(&active) {
        return v.clone();
    }
    let first = members[0];
    let mut total = Integer::zero();
    for (pos, &l) in members.iter().enumerate().skip(1) {
        let a = m.get(first, l);
        if a.is_zero() {
            continue;
        }
        let mut rest = active.clone();
        rest[first / 64] &= !(1 << (first % 64));
        rest[l / 64] &= !(1 << (l % 64));
        let sub = pfaffian_rec(m, rest, memo);
        // position 1 (the second active index) carries a plus sign
        if pos % 2 == 1 {
            total += a * sub;
        } else {
            total -= a * sub;
        }
    }
    memo.insert(active, total.clone());
    total
}

/// Exact determinant by fraction-free (Bareiss) elimination. The empty
/// matrix has determinant 1.
///
/// Panics if `m` is not square.
pub fn determinant(m: &[Vec<Integer>]) -> Integer {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    if n == 0 {
        return Integer::one();
    }
    let mut a = m.to_vec();
    let mut negate = false;
    let mut prev = Integer::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Integer::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Convenience for tests and callers holding small machine integers.
pub fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<Integer>> {
    rows.iter()
        .map(|r| r.iter().map(|&v| Integer::from(v)).collect())
        .collect()
}
