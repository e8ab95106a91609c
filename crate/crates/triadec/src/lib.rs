//! Exact triangular decomposition of parametric zero-dimensional polynomial
//! systems over the rationals.
//!
//! Systems live in `K[U][X]` where `U = u1 ≺ … ≺ ud` are parameters and
//! `X = x1 ≺ … ≺ xn` are variables. The pipeline computes a set of
//! zero-dimensional regular chains whose union of zeros equals the zeros of
//! the input system over the algebraic closure of `K(U)`, together with a set
//! of parameter-only factors (the RDU factors). Off the variety of those
//! factors the decomposition specializes: substituting any parameter point
//! preserves both the solution set and the shape (rank) of every chain.
//!
//! The main entry points are [`decompose::rdu_for_zd`] (decomposition plus
//! RDU factors), [`decompose::nonredundant_wu`] (non-redundant characteristic
//! set decomposition), [`wrsd::wrsd`] (splitting a single regular chain by a
//! polynomial) and the numeric referee in [`oracle`].

pub mod chains;
pub mod context;
pub mod decompose;
pub mod detpoly;
pub mod error;
pub mod factor;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod subres;
pub mod sysfile;
pub mod wrsd;
pub mod wu;

pub use chains::{AscendingChain, RegularChainZD, TriangularSet};
pub use context::{Context, ParameterPoint};
pub use decompose::{rdu_for_zd, zd_to_rc, Decomposition};
pub use error::{Error, Result};
pub use factor::FactorSet;
pub use poly::Polynomial;
pub use wrsd::{wrsd, WrsdResult};
pub use wu::{wu_decompose, WuDecomposition};


