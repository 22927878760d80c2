//! The coefficient function ψ on index sequences.
//!
//! Two independent evaluations are provided:
//!
//! * [`psi_closed`]: ψ of a single index is `2^(i-1)`, ψ of a pair is a
//!   partial row sum of binomial coefficients, and longer sequences take the
//!   Pfaffian of the skew matrix of pair values. Odd lengths are padded with a
//!   virtual leading index whose pairings are the single-index values.
//! * [`psi_oracle`]: the sum of all minors of the lower-triangular Pascal
//!   matrix with rows taken from the sequence.
//!
//! Pfaffian expansion along the first row only ever produces principal
//! sub-Pfaffians, and the principal sub-Pfaffian on a subsequence is ψ of that
//! subsequence. [`psi_closed`] therefore recurses through the shared
//! [`PsiCache`], so one table serves every sequence in a degree sum.

mod cache;

pub use cache::PsiCache;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{binomial, determinant, pfaffian, Integer, SkewMatrix};
use crate::indexseq::IndexSequence;

/// `ψ_i = 2^(i-1)`.
pub fn psi_single(i: u32) -> Result<Integer> {
    if i < 1 {
        return Err(Error::NonPositiveIndex(i));
    }
    Ok(Integer::one() << (i - 1))
}

/// `ψ_{i,j} = Σ_{k=i}^{j-1} C(i+j-2, k)` for `1 <= i < j`.
pub fn psi_pair(i: u32, j: u32) -> Result<Integer> {
    if i < 1 {
        return Err(Error::NonPositiveIndex(i));
    }
    if i >= j {
        return Err(Error::InvalidSequence(vec![i, j]));
    }
    let top = u64::from(i) + u64::from(j) - 2;
    Ok((i..j).map(|k| binomial(top, i64::from(k))).sum())
}

/// ψ via the Pfaffian closed form, memoized in `cache`.
pub fn psi_closed(seq: &IndexSequence, cache: &PsiCache) -> Integer {
    if seq.is_empty() {
        return Integer::one();
    }
    if let Some(v) = cache.get(seq) {
        return v;
    }
    let e = seq.entries();
    let value = match e.len() {
        1 => psi_single(e[0]).expect("validated sequence"),
        2 => psi_pair(e[0], e[1]).expect("validated sequence"),
        len if len % 2 == 0 => {
            let mut acc = Integer::zero();
            for l in 1..len {
                let pair = psi_closed(&IndexSequence::from_sorted_unchecked(vec![e[0], e[l]]), cache);
                let term = pair * psi_closed(&seq.without_pair(0, l), cache);
                if l % 2 == 1 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
        _ => {
            // row of the virtual index: pairings are ψ_{i_l}
            let mut acc = Integer::zero();
            for (l, &i) in e.iter().enumerate() {
                let term = psi_single(i).expect("validated sequence") * psi_closed(&seq.without(l), cache);
                if l % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    };
    cache.insert(seq.clone(), value.clone());
    value
}

/// The skew matrix whose Pfaffian is ψ of `seq`. For odd lengths the virtual
/// index occupies row and column 0.
pub fn psi_matrix(seq: &IndexSequence) -> SkewMatrix {
    let mut labels: Vec<Option<u32>> = seq.entries().iter().copied().map(Some).collect();
    if labels.len() % 2 == 1 {
        labels.insert(0, None);
    }
    let mut upper = Vec::new();
    for k in 0..labels.len() {
        for l in k + 1..labels.len() {
            let v = match (labels[k], labels[l]) {
                (None, Some(j)) => psi_single(j),
                (Some(i), Some(j)) => psi_pair(i, j),
                _ => unreachable!("virtual index only in position 0"),
            };
            upper.push(v.expect("validated sequence"));
        }
    }
    SkewMatrix::from_upper(labels.len(), &upper)
}

/// ψ as the Pfaffian of the explicitly assembled [`psi_matrix`], without
/// sharing any subresults.
pub fn psi_closed_explicit(seq: &IndexSequence) -> Integer {
    pfaffian(&psi_matrix(seq)).expect("psi matrix has even dimension")
}

/// Entry `C(row-1, col-1)` of the 1-based lower-triangular Pascal matrix.
pub fn pascal_entry(row: u32, col: u32) -> Integer {
    if row == 0 || col == 0 {
        return Integer::zero();
    }
    binomial(u64::from(row - 1), i64::from(col) - 1)
}

/// Minor of the Pascal matrix on rows `rows` and columns `cols`.
pub fn pascal_minor(rows: &IndexSequence, cols: &IndexSequence) -> Result<Integer> {
    if rows.len() != cols.len() {
        return Err(Error::LengthMismatch {
            rows: rows.len(),
            cols: cols.len(),
        });
    }
    // a column beyond its row forces a zero block in the lower-triangular matrix
    if rows.entries().iter().zip(cols.entries()).any(|(i, j)| j > i) {
        return Ok(Integer::zero());
    }
    let m: Vec<Vec<Integer>> = rows
        .entries()
        .iter()
        .map(|&i| cols.entries().iter().map(|&j| pascal_entry(i, j)).collect())
        .collect();
    Ok(determinant(&m))
}

/// ψ as the sum of Pascal minors over every column sequence `J` of the same
/// length. Only `J` with `j_k <= i_k` contribute and only those are visited.
pub fn psi_oracle(seq: &IndexSequence) -> Integer {
    let rows = seq.entries();
    let mut cols = Vec::with_capacity(rows.len());
    let mut total = Integer::zero();
    visit_dominated(rows, &mut cols, &mut |cols| {
        let j = IndexSequence::from_sorted_unchecked(cols.to_vec());
        total += pascal_minor(seq, &j).expect("equal lengths");
    });
    total
}

fn visit_dominated(rows: &[u32], cols: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    let k = cols.len();
    if k == rows.len() {
        f(cols);
        return;
    }
    let lo = cols.last().map_or(1, |&c| c + 1);
    for j in lo..=rows[k] {
        cols.push(j);
        visit_dominated(rows, cols, f);
        cols.pop();
    }
}
