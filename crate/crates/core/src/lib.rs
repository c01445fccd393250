//! Exact structure-constant computations for Lie Yamaguti algebras.
//!
//! All arithmetic is over the rationals. Algebras are given by structure
//! constants on a fixed basis; identity checkers evaluate every basis tuple
//! and report failing tuples as witnesses.

pub mod cochain;
pub mod cohom;
pub mod compat;
pub mod error;
pub mod exact;
pub mod io;
pub mod lya;
pub mod rb;
pub mod rep;
pub mod report;

pub use error::{Error, Result};
pub use exact::{Matrix, Rational};
pub use report::{all_hold, CheckReport, Witness};
