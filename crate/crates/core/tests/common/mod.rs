#![allow(dead_code)]

use sdp_degree::IndexSequence;

/// Reference ψ values for every nonempty proper subsequence of {1..5}.
pub const PSI_TABLE_N5: [(&str, u64); 30] = [
    ("1", 1),
    ("2", 2),
    ("3", 4),
    ("4", 8),
    ("5", 16),
    ("1,2", 1),
    ("1,3", 3),
    ("1,4", 7),
    ("1,5", 15),
    ("2,3", 3),
    ("2,4", 10),
    ("2,5", 25),
    ("3,4", 10),
    ("3,5", 35),
    ("4,5", 35),
    ("1,2,3", 1),
    ("1,2,4", 4),
    ("1,2,5", 11),
    ("1,3,4", 6),
    ("1,3,5", 23),
    ("1,4,5", 27),
    ("2,3,4", 4),
    ("2,3,5", 18),
    ("2,4,5", 30),
    ("3,4,5", 20),
    ("1,2,3,4", 1),
    ("1,2,3,5", 5),
    ("1,2,4,5", 10),
    ("1,3,4,5", 10),
    ("2,3,4,5", 5),
];

/// Reference δ(m, 5, r) values as (m, r, δ).
pub const DELTA_TABLE_N5: [(u64, u32, u64); 12] = [
    (1, 4, 5),
    (2, 4, 20),
    (3, 4, 40),
    (4, 4, 40),
    (5, 4, 16),
    (3, 3, 20),
    (4, 3, 90),
    (5, 3, 207),
    (6, 3, 290),
    (7, 3, 260),
    (8, 3, 140),
    (9, 3, 35),
];

pub const DELTA_105_20_10: &str = "167223927145503062075691969268936976274880";

pub fn seq(v: &[u32]) -> IndexSequence {
    IndexSequence::new(v.to_vec()).unwrap()
}

/// Every strictly increasing subsequence of {1..n} with at most `max_len` entries.
pub fn subsequences(n: u32, max_len: usize) -> Vec<IndexSequence> {
    (0u32..1 << n)
        .filter(|mask| mask.count_ones() as usize <= max_len)
        .map(|mask| seq(&(1..=n).filter(|k| mask >> (k - 1) & 1 == 1).collect::<Vec<_>>()))
        .collect()
}
