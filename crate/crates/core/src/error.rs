use thiserror::Error;

use crate::exactnum::Integer;
use crate::indexseq::IndexSequence;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square: row {row} has {len} entries, expected {dim}")]
    NotSquare { row: usize, len: usize, dim: usize },
    #[error("matrix is not skew-symmetric at ({row}, {col})")]
    NotSkew { row: usize, col: usize },
    #[error("pfaffian needs an even dimension, got {0}")]
    OddDimension(usize),
    #[error("index {index} is outside 1..={n}")]
    IndexOutOfRange { index: u32, n: u32 },
    #[error("index sequence must be strictly increasing with entries >= 1: {0:?}")]
    InvalidSequence(Vec<u32>),
    #[error("cannot choose {length} distinct indices from 1..={n}")]
    InvalidEnumeration { n: u32, length: u32 },
    #[error("sequence lengths differ: {rows} rows vs {cols} columns")]
    LengthMismatch { rows: usize, cols: usize },
    #[error("rank {r} outside 1..={max} for n = {n}", max = n.saturating_sub(1))]
    RankOutOfRange { n: u32, r: u32 },
    #[error("invalid query (m={m}, n={n}, r={r}): need n >= 1 and r <= n")]
    InvalidQuery { m: u64, n: u32, r: u32 },
    #[error("psi index must be >= 1, got {0}")]
    NonPositiveIndex(u32),
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("cache line {line}: {reason}")]
    CacheFormat { line: usize, reason: String },
    #[error("cached psi{key} = {stored} does not match recomputed value {expected}")]
    CacheIncoherent {
        key: IndexSequence,
        stored: Integer,
        expected: Integer,
    },
    #[error(
        "oracle mismatch: closed form gives {closed}, minor sum gives {oracle} (first differing sequence: {first:?})"
    )]
    OracleMismatch {
        closed: Integer,
        oracle: Integer,
        first: Option<IndexSequence>,
    },
}
