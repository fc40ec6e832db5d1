//! Exact-arithmetic models of Lagrangian quasimap spaces.
//!
//! The library is organized around one indexing combinatorics and three
//! computational pipelines built on top of it:
//!
//! - [`seq`]: signed sequences over `⟨n⟩ = {-n,…,-1,1,…,n}`, symmetric
//!   partitions in the `n × n` square, their lattice-path bijection,
//!   transposes, signs, Northeast representatives and fibers.
//! - [`poset`] / [`doset`]: the ranked lattice of level-tagged symmetric
//!   partitions, its three cover types, and the doset of admissible pairs,
//!   with DOT export and a JSON persistence format.
//! - [`hilbert`]: chain enumeration over any finite ranked doset, the
//!   chain-count matrix, and Hilbert polynomial / degree / dimension of the
//!   associated graded algebra.
//! - [`quantum`]: Schubert-class arithmetic — classical and quantum Pieri
//!   products realized as weighted cover sums, hook removal, and degree
//!   identities.
//! - [`exterior`]: exact models of `∧^k C^{2n}` and its dual — contraction
//!   against the symplectic form, the spaces of linear coefficient relations,
//!   hypercube kernel elements, and the Northeast reduced normal form.
//! - [`straightening`]: generation of the quadratic coordinate ideal by exact
//!   evaluation, reduction to Northeast coordinates, the resulting
//!   straightening relations, and their verification.
//!
//! All arithmetic is exact: `num_bigint::BigInt` for counts and
//! `num_rational::BigRational` for linear algebra. No floating point is used
//! anywhere.

pub mod cache;
pub mod doset;
pub mod exterior;
pub mod hilbert;
pub mod linalg;
pub mod poset;
pub mod quantum;
pub mod seq;
pub mod straightening;

use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed sequence, partition or pair data.
    #[error("invalid input: {0}")]
    Invalid(String),
    /// Operation applied outside its domain (wrong context, non-admissible input, …).
    #[error("domain error: {0}")]
    Domain(String),
    /// A configured resource cap would be exceeded.
    #[error("resource cap exceeded: needed {needed}, cap {cap}")]
    ResourceLimit { needed: u64, cap: u64 },
    /// A structure that must be ranked is not.
    #[error("unranked structure: {0}")]
    Unranked(String),
    /// A verification pass failed; the payload names the offending object.
    #[error("verification failed: {0}")]
    Verification(String),
    /// An internal consistency check failed. This signals a bug, not a data condition.
    #[error("internal error: {0}")]
    Internal(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
