//! Exact field arithmetic and commutative polynomial algebra: the
//! coefficient layer under the free algebra, and the solver for the
//! symbol systems produced during factorization.

mod cpoly;
mod field;
mod groebner;
mod solve;

pub use cpoly::{CPoly, CRing, Monomial};
pub use field::{Field, FieldElement};
pub use groebner::{buchberger, is_groebner, normal_form, reduce_gb, reduced_groebner_basis, s_polynomial};
pub use solve::{Assignment, ConstraintSystem, DEFAULT_ENUMERATION_CAP};
