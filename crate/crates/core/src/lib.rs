//! Exact q-Clebsch–Gordan rules for the rank-two symplectic algebra C₂.
//!
//! Two independent constructions of the same polynomials live here:
//!
//! * [`fermionic`] sums Gaussian binomials over Bethe-string configurations;
//! * [`fusion`] sums `q^energy` over fusion paths built from the crystals of
//!   the 4- and 5-dimensional representations ([`crystal`]).
//!
//! [`spinon`] assembles affine characters from the restricted tables, and
//! [`oracle`] recomputes tensor multiplicities and affine branching data by
//! brute force so that every construction can be checked against something
//! that shares no code with it.
//!
//! The `book/` directory at the repository root walks through each module;
//! its code snippets are compiled as doc-tests of this crate.

pub mod algebra;
pub mod cli;
pub mod crystal;
pub mod error;
pub mod fermionic;
pub mod fusion;
pub mod golden;
pub mod oracle;
pub mod spinon;

pub use algebra::{LaurentPoly, Weight};
pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/algebra.md")]
    mod algebra {}
    #[doc = include_str!("../../../book/src/fermionic.md")]
    mod fermionic {}
    #[doc = include_str!("../../../book/src/crystal.md")]
    mod crystal {}
    #[doc = include_str!("../../../book/src/fusion.md")]
    mod fusion {}
    #[doc = include_str!("../../../book/src/spinon.md")]
    mod spinon {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
