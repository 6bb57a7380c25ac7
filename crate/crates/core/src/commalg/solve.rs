//! Polynomial constraint systems over the extension symbols and their
//! solution sets.

use std::fmt;

use super::cpoly::{CPoly, CRing};
use super::field::{Field, FieldElement};
use super::groebner::reduced_groebner_basis;
use crate::Error;

/// Default cap on `p^s` evaluations when enumerating solutions.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

/// One value per symbol, in the system's symbol order.
pub type Assignment = Vec<FieldElement>;

/// Equations `eq = 0` in a fixed ordered set of symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConstraintSystem {
    ring: CRing,
    equations: Vec<CPoly>,
}

impl ConstraintSystem {
    pub fn new(ring: CRing, equations: Vec<CPoly>) -> Result<Self, Error> {
        if equations.iter().any(|e| !e.ring().same_as(&ring)) {
            return Err(Error::ContextMismatch);
        }
        Ok(ConstraintSystem { ring, equations })
    }

    pub fn ring(&self) -> &CRing {
        &self.ring
    }

    pub fn symbols(&self) -> &[String] {
        &self.ring.vars
    }

    pub fn equations(&self) -> &[CPoly] {
        &self.equations
    }

    pub fn is_empty(&self) -> bool {
        self.equations.is_empty()
    }

    /// True when some equation is a nonzero constant.
    pub fn is_trivially_inconsistent(&self) -> bool {
        self.equations
            .iter()
            .any(|e| !e.is_zero() && e.is_constant())
    }

    pub fn is_satisfied_by(&self, point: &[FieldElement]) -> bool {
        let field = self.ring.field;
        self.equations.iter().all(|e| field.is_zero(&e.eval(point)))
    }

    pub fn reduced_basis(&self) -> Result<Vec<CPoly>, Error> {
        reduced_groebner_basis(&self.equations)
    }

    /// Every point of F_p^s satisfying all equations, in lex order of the
    /// value tuples (first symbol most significant).
    pub fn enumerate_solutions(&self, cap: u64) -> Result<Vec<Assignment>, Error> {
        let p = match self.ring.field {
            Field::Prime(p) => p,
            Field::Rational => return Err(Error::UnsupportedField),
        };
        let s = self.ring.nvars();
        let size = (p as u64)
            .checked_pow(s as u32)
            .filter(|&n| n <= cap)
            .ok_or(Error::SearchSpaceTooLarge {
                needed: format!("{p}^{s}"),
                cap,
            })?;
        let mut out = Vec::new();
        let mut digits = vec![0u32; s];
        for _ in 0..size {
            let point: Assignment = digits.iter().map(|&d| FieldElement::Mod(d)).collect();
            if self.is_satisfied_by(&point) {
                out.push(point);
            }
            // odometer, last symbol fastest
            for d in digits.iter_mut().rev() {
                *d += 1;
                if *d < p {
                    break;
                }
                *d = 0;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for ConstraintSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let eqs: Vec<String> = self.equations.iter().map(|e| format!("{e} = 0")).collect();
        write!(f, "{{{}}}", eqs.join(", "))
    }
}
