//! Weight arithmetic for C₂ and exact polynomials in `q`.
//!
//! Everything downstream works in the fundamental-weight basis; see
//! [`Weight`] for the root data and the chart coordinates.

mod label;
mod poly;
mod weight;

pub use label::{label, weyl_dim, IrrepLabel};
pub use poly::{q_pochhammer, series_inverse_pochhammer, LaurentPoly};
pub use weight::{pairing, Weight};
