//! Determinant and Pfaffian kernels against brute-force definitions.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use sdp_degree::{determinant, pfaffian, Integer, SkewMatrix};

/// Leibniz-style cofactor expansion along the first row.
fn cofactor_det(m: &[Vec<Integer>]) -> Integer {
    if m.is_empty() {
        return Integer::one();
    }
    let mut total = Integer::zero();
    for c in 0..m.len() {
        let minor: Vec<Vec<Integer>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != c)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][c] * cofactor_det(&minor);
        if c % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Signed sum over perfect matchings, no memoization.
fn matching_pfaffian(m: &SkewMatrix, active: &[usize]) -> Integer {
    if active.is_empty() {
        return Integer::one();
    }
    let first = active[0];
    let mut total = Integer::zero();
    for k in 1..active.len() {
        let rest: Vec<usize> = active[1..].iter().copied().filter(|&x| x != active[k]).collect();
        let term = m.get(first, active[k]) * matching_pfaffian(m, &rest);
        if k % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn square_matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = Vec<Vec<Integer>>> {
    (0..=max_dim).prop_flat_map(move |d| {
        prop::collection::vec(prop::collection::vec((-bound..=bound).prop_map(BigInt::from), d), d)
    })
}

fn skew_matrix(max_half: usize, bound: i64) -> impl Strategy<Value = SkewMatrix> {
    skew_matrix_from(0, max_half, bound)
}

fn skew_matrix_from(min_half: usize, max_half: usize, bound: i64) -> impl Strategy<Value = SkewMatrix> {
    (min_half..=max_half).prop_flat_map(move |h| {
        let d = 2 * h;
        prop::collection::vec((-bound..=bound).prop_map(BigInt::from), d * d.saturating_sub(1) / 2)
            .prop_map(move |upper| SkewMatrix::from_upper(d, &upper))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1500))]

    #[test]
    fn bareiss_matches_cofactor_expansion(m in square_matrix(4, 10)) {
        prop_assert_eq!(determinant(&m), cofactor_det(&m));
    }

    #[test]
    fn pfaffian_squared_is_determinant(m in skew_matrix(4, 100)) {
        let pf = pfaffian(&m).unwrap();
        prop_assert_eq!(&pf * &pf, determinant(&m.rows()));
    }

    #[test]
    fn pfaffian_matches_matching_sum(m in skew_matrix(4, 100)) {
        let all: Vec<usize> = (0..m.dim()).collect();
        prop_assert_eq!(pfaffian(&m).unwrap(), matching_pfaffian(&m, &all));
    }

    #[test]
    fn swapping_two_indices_negates_pfaffian(m in skew_matrix_from(1, 4, 100), a in 0usize..8, step in 1usize..8) {
        let a = a % m.dim();
        let b = (a + 1 + step % (m.dim() - 1)) % m.dim();
        prop_assume!(a != b);
        let mut swapped = m.clone();
        swapped.swap_indices(a, b);
        prop_assert!(SkewMatrix::new(swapped.rows()).is_ok());
        prop_assert_eq!(pfaffian(&swapped).unwrap(), -pfaffian(&m).unwrap());
    }
}

#[test]
fn large_entries_stay_exact() {
    // entries near 2^300 exercise multi-limb arithmetic in both kernels
    let big = BigInt::one() << 300;
    let upper: Vec<Integer> = (1..=15).map(|k| &big * k - k * k).collect();
    let m = SkewMatrix::from_upper(6, &upper);
    let pf = pfaffian(&m).unwrap();
    let all: Vec<usize> = (0..6).collect();
    assert_eq!(pf, matching_pfaffian(&m, &all));
    assert_eq!(&pf * &pf, determinant(&m.rows()));
    assert_eq!(determinant(&m.rows()), cofactor_det(&m.rows()));
}
