//! Exact rational and cyclotomic arithmetic.

mod cyclotomic;
pub(crate) mod parse;
mod rational;

pub use cyclotomic::Cyclotomic;
pub use rational::Rational;

/// `ζ_n^k` in canonical form.
pub fn cyc_root(n: u32, k: i64) -> Result<Cyclotomic, crate::Error> {
    Cyclotomic::root(n, k)
}
