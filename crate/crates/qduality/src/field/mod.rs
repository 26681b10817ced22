//! Exact arithmetic in Q and Q(ζ₈) plus dense exact linear algebra
//! (products, traces, nullspaces, spans) used by every other module.

mod cyclo;
mod matrix;
mod solve;

pub use cyclo::{Cyclo8, Rational};
pub use matrix::FMatrix;
pub use solve::{algebra_span, mat_solve, nullspace_sparse, Eliminator, OpConstraint, SpanBasis, SparseVec};
