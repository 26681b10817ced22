//! Exact computational representation theory at desk scale: Schur Q-functions,
//! character tables of a twisted hyperoctahedral group algebra, queer-superalgebra
//! tensor actions, and the duality checks tying them together — all over the
//! cyclotomic field Q(ζ₈) with zero numerical tolerance.
//!
//! The crate is organized around five building blocks:
//!
//! - [`field`]: arithmetic in Q(ζ₈) ([`field::Cyclo8`]), dense exact matrices
//!   ([`field::FMatrix`]), fraction-free nullspace solving and algebra spans.
//! - [`combinatorics`]: strict/odd partitions, bipartition labels, sign/type
//!   maps, and the normal-form group words indexing conjugacy classes.
//! - [`symfunc`]: sparse exact polynomials in two variable banks; power sums,
//!   the q_r series, Schur Q-functions via Pfaffians, basis expansions, and
//!   the ι substitution.
//! - [`characters`]: the character table extracted from the power-sum /
//!   Q-function identity, its Stembridge-form cross-check, Sergeev-type
//!   characters, and branching multiplicities.
//! - [`superrep`]: explicit graded matrix representations — Clifford
//!   generators, the tensor-space actions, eigenspace splittings,
//!   supercommutants, graded traces, and structured verification reports.
//!
//! Start with the `examples/` directory: each file is a runnable walkthrough
//! of one capability (`cargo run --example character_table`, …). The `qduality`
//! binary wraps the same entry points behind a small CLI.

pub mod characters;
pub mod combinatorics;
pub mod field;
pub mod report;
pub mod superrep;
pub mod symfunc;

use thiserror::Error;

/// Unified error type for all exact-computation entry points.
#[derive(Debug, Error)]
pub enum QdError {
    #[error("division by zero in Q(zeta8)")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("polynomial outside the expansion span; residual has {residual_terms} terms, first {first_term}")]
    ResidualNonzero {
        residual_terms: usize,
        first_term: String,
    },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}
