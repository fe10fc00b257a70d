//! Exact construction and verification of set-theoretic solutions of the
//! Yang-Baxter equation built from racks, quandles and skew braces, together
//! with their linearizations, Baxterizations, twists and spin chains.
//!
//! Carriers are always `{0, .., n-1}`. All arithmetic is exact.

pub mod baxter;
pub mod braces;
pub mod chain;
pub mod error;
pub mod io;
pub mod linalg;
pub mod magma;
pub mod poly;
pub mod repalgebra;
pub mod settheoretic;
pub mod table;
pub mod twist;
pub mod verdict;

pub use braces::{FiniteGroup, SkewBrace};
pub use error::{Error, Result};
pub use linalg::ExactMatrix;
pub use poly::PolyMatrix;
pub use magma::Magma;
pub use settheoretic::STSolution;
pub use table::Table;
pub use verdict::{Check, Verdict};
