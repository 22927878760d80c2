//! The algebraic degree δ(m, n, r) of semidefinite programming.
//!
//! δ(m, n, r) is the sum of `ψ(I)·ψ(I^c)` over all strictly increasing
//! `I ⊆ {1..n}` of length `n - r` and weight `m`, where `I^c` is the
//! complement in `{1..n}`.

use std::num::NonZeroUsize;
use std::thread;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::Integer;
use crate::indexseq::{enumerate, split_contiguous, EnumerationQuery, IndexSequence};
use crate::psi::{psi_closed, psi_oracle, PsiCache};

/// Below this many terms the sum is evaluated on the calling thread.
const PARALLEL_THRESHOLD: usize = 64;

/// One δ(m, n, r) problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DegreeQuery {
    pub m: u64,
    pub n: u32,
    pub r: u32,
}

impl DegreeQuery {
    pub fn new(m: u64, n: u32, r: u32) -> Result<Self> {
        if n < 1 || r > n {
            return Err(Error::InvalidQuery { m, n, r });
        }
        Ok(Self { m, n, r })
    }

    fn enumeration(&self) -> EnumerationQuery {
        EnumerationQuery::new(self.n, self.n - self.r, self.m).expect("n - r <= n")
    }

    fn in_range(&self) -> bool {
        allowable_range(self.n, self.r).is_ok_and(|(lo, hi)| (lo..=hi).contains(&self.m))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeResult {
    pub value: Integer,
    /// Number of index sequences in the sum.
    pub term_count: u64,
    /// Whether `m` lies in [`allowable_range`], i.e. the dual variety is a
    /// hypersurface and the sum is guaranteed nonempty.
    pub in_range: bool,
}

/// `(m_min, m_max)` for which δ(m, n, r) is nonzero, `1 <= r <= n - 1`:
/// `m_min = C(n-r+1, 2)` and `m_max = C(n+1, 2) - C(r+1, 2)`.
pub fn allowable_range(n: u32, r: u32) -> Result<(u64, u64)> {
    if r < 1 || r >= n {
        return Err(Error::RankOutOfRange { n, r });
    }
    let tri = |k: u32| u64::from(k) * (u64::from(k) + 1) / 2;
    Ok((tri(n - r), tri(n) - tri(r)))
}

fn default_workers() -> usize {
    thread::available_parallelism().map_or(1, NonZeroUsize::get)
}

/// δ(m, n, r) on the calling thread.
pub fn degree(q: DegreeQuery, cache: &PsiCache) -> DegreeResult {
    degree_with_workers(q, cache, 1)
}

/// δ(m, n, r) using the machine's available parallelism.
pub fn degree_parallel(q: DegreeQuery, cache: &PsiCache) -> DegreeResult {
    degree_with_workers(q, cache, default_workers())
}

/// δ(m, n, r) with the index sequences split into `workers` contiguous
/// chunks. Partial sums are combined in chunk order.
pub fn degree_with_workers(q: DegreeQuery, cache: &PsiCache, workers: usize) -> DegreeResult {
    let terms: Vec<IndexSequence> = enumerate(q.enumeration()).collect();
    let term = |seq: &IndexSequence| -> Integer {
        let comp = seq.complement(q.n).expect("enumerated within 1..=n");
        psi_closed(seq, cache) * psi_closed(&comp, cache)
    };
    let value = if workers <= 1 || terms.len() < PARALLEL_THRESHOLD {
        terms.iter().map(term).sum()
    } else {
        let chunks = split_contiguous(&terms, workers);
        let partials: Vec<Integer> = thread::scope(|s| {
            let handles: Vec<_> = chunks
                .iter()
                .map(|chunk| s.spawn(move || chunk.iter().map(term).sum::<Integer>()))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("degree worker panicked"))
                .collect()
        });
        partials.into_iter().fold(Integer::zero(), |acc, p| acc + p)
    };
    DegreeResult {
        value,
        term_count: terms.len() as u64,
        in_range: q.in_range(),
    }
}

/// δ(m, n, r) by both the Pfaffian closed form and the Pascal-minor sum,
/// returning the common result or the first sequence whose terms disagree.
pub fn degree_verified(q: DegreeQuery) -> Result<DegreeResult> {
    let cache = PsiCache::new();
    verify_with(q, |s| psi_closed(s, &cache), psi_oracle)
}

pub(crate) fn verify_with(
    q: DegreeQuery,
    closed: impl Fn(&IndexSequence) -> Integer,
    oracle: impl Fn(&IndexSequence) -> Integer,
) -> Result<DegreeResult> {
    let mut closed_sum = Integer::zero();
    let mut oracle_sum = Integer::zero();
    let mut first = None;
    let mut term_count = 0;
    for seq in enumerate(q.enumeration()) {
        let comp = seq.complement(q.n).expect("enumerated within 1..=n");
        let a = closed(&seq) * closed(&comp);
        let b = oracle(&seq) * oracle(&comp);
        if a != b && first.is_none() {
            first = Some(seq);
        }
        closed_sum += a;
        oracle_sum += b;
        term_count += 1;
    }
    if first.is_some() || closed_sum != oracle_sum {
        return Err(Error::OracleMismatch {
            closed: closed_sum,
            oracle: oracle_sum,
            first,
        });
    }
    Ok(DegreeResult {
        value: closed_sum,
        term_count,
        in_range: q.in_range(),
    })
}

/// The coefficients δ(m, n, r) over the whole allowable range of `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BidegreeTable {
    pub n: u32,
    pub r: u32,
    pub rows: Vec<(u64, DegreeResult)>,
}

impl BidegreeTable {
    pub fn values(&self) -> Vec<(u64, Integer)> {
        self.rows.iter().map(|(m, d)| (*m, d.value.clone())).collect()
    }
}

pub fn bidegree_coefficients(n: u32, r: u32, cache: &PsiCache, workers: usize) -> Result<BidegreeTable> {
    let (lo, hi) = allowable_range(n, r)?;
    let rows = (lo..=hi)
        .map(|m| {
            let q = DegreeQuery::new(m, n, r)?;
            Ok((m, degree_with_workers(q, cache, workers)))
        })
        .collect::<Result<_>>()?;
    Ok(BidegreeTable { n, r, rows })
}
