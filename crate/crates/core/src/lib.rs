//! Factorization of polynomials in free (non-commutative) algebras over
//! F_p and Q.
//!
//! A polynomial `F` of degree `n` is split into `G·H` with prescribed
//! degrees `h + k = n`. The highest homogeneous part is factored first
//! ([`homog`]); lower parts are then peeled off degree by degree, and each
//! possible cancellation between `G_h·H_{k-j}` and `G_{h-j}·H_k` becomes a
//! fresh extension symbol whose admissible values are cut out by a
//! commutative polynomial system ([`factor`]).

pub mod commalg;
mod error;
pub mod factor;
pub mod freealg;
pub mod homog;
pub mod oracle;

pub use commalg::{CPoly, CRing, ConstraintSystem, Field, FieldElement};
pub use error::Error;
pub use factor::{
    factor_all, factor_bidegree, factor_completely, knapsack_splits, DegreeSplit, FactorChain,
    FactorOptions, SymbolicFactorization,
};
pub use freealg::{Alphabet, NcPoly, Word};
