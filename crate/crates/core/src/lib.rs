//! Drinfeld doubles of finite groups and the quadratic algebras they act on.

pub mod error;
pub mod exactnum;

pub use error::{Error, Result};
pub use exactnum::{Cyclotomic, Rational};
pub mod group;
pub mod linalg;
pub mod double;
pub mod fusion;
pub mod faithful;
pub mod ncalg;
pub mod double_ore;
pub mod koszul;
pub mod invariants;
pub mod pipeline;
