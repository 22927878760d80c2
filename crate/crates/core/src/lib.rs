//! Exact algebraic degree of semidefinite programming.
//!
//! δ(m, n, r) counts the hyperplanes in a general pencil tangent to the
//! variety of symmetric `n×n` matrices of rank at most `r`, inside a general
//! `m`-dimensional linear space of symmetric matrices. It is evaluated
//! exactly as a sum of products of coefficients ψ over index sequences,
//! where each ψ is a Pfaffian of binomial sums.
//!
//! ```
//! use sdp_degree::{degree, DegreeQuery, PsiCache};
//!
//! let cache = PsiCache::new();
//! let d = degree(DegreeQuery::new(5, 5, 3).unwrap(), &cache);
//! assert_eq!(d.value.to_string(), "207");
//! ```

pub mod cli;
pub mod degree;
pub mod error;
pub mod exactnum;
#[doc(hidden)]
pub mod fuzzing;
pub mod indexseq;
pub mod psi;

pub use degree::{
    allowable_range, bidegree_coefficients, degree, degree_parallel, degree_verified, degree_with_workers,
    BidegreeTable, DegreeQuery, DegreeResult,
};
pub use error::{Error, Result};
pub use exactnum::{binomial, determinant, parse_integer, pfaffian, render_integer, Integer, SkewMatrix};
pub use indexseq::{enumerate, EnumerationQuery, IndexSequence};
pub use psi::{pascal_minor, psi_closed, psi_oracle, psi_pair, psi_single, PsiCache};
