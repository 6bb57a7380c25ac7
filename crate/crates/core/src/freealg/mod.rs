//! The free monoid on a finite alphabet and the free algebra over it.

mod ncpoly;
mod word;

pub use ncpoly::NcPoly;
pub use word::{overlap_lengths, Alphabet, Word};
