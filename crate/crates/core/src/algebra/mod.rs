//! Exact polynomial and tensor arithmetic over ℚ on generators indexed by
//! isomorphism types, with the singleton type identified with 1.

mod key;
mod poly;
pub mod render;

pub use key::{SpeciesTag, TypeKey};
pub use poly::{coeff_string, frac, parse_coeff, rat, Coeff, Monomial, Polynomial, Tensor2, Tensor3};
