//! Exact computations in the natural Hopf algebra of a set operad.

pub mod algebra;
pub mod antipode;
pub mod ck;
pub mod error;
pub mod hopf;
pub mod operads;
pub mod posets;
pub mod schroeder;
pub mod series;
pub mod structures;
pub mod verify;

pub use error::{Error, Result};
