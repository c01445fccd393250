//! Exact rational scalars, vectors, dense matrices and elimination.

mod echelon;
mod matrix;
mod rational;
pub mod vector;

pub use echelon::{sparse_from_dense, sparse_rank, EchelonBasis, SparseVec};
pub use matrix::{kernel_basis, rank, solve, Matrix};
pub use rational::{q, qr, ParseRationalError, Rational};
