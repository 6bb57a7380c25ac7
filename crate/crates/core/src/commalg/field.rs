//! Exact coefficient fields: prime fields F_p (p < 2^31) and the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Error;

/// The coefficient field of every polynomial in a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    /// Integers modulo a prime `p < 2^31`.
    Prime(u32),
    Rational,
}

/// A value in some [`Field`].
///
/// Residues are kept in `[0, p)`; rationals are kept reduced with a positive
/// denominator (guaranteed by `BigRational`). The element does not record
/// its modulus, arithmetic always goes through the owning [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldElement {
    Mod(u32),
    Rat(BigRational),
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = n as u64;
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// Builds F_p, rejecting composite or oversized moduli.
    pub fn prime(p: u32) -> Result<Self, Error> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> Option<u32> {
        match self {
            Field::Prime(p) => Some(*p),
            Field::Rational => None,
        }
    }

    pub fn zero(&self) -> FieldElement {
        match self {
            Field::Prime(_) => FieldElement::Mod(0),
            Field::Rational => FieldElement::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> FieldElement {
        match self {
            Field::Prime(_) => FieldElement::Mod(1),
            Field::Rational => FieldElement::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(&self, v: i64) -> FieldElement {
        match self {
            Field::Prime(p) => FieldElement::Mod(v.rem_euclid(*p as i64) as u32),
            Field::Rational => FieldElement::Rat(BigRational::from_integer(BigInt::from(v))),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldElement {
        match self {
            Field::Prime(p) => {
                let r = ((v % BigInt::from(*p)) + BigInt::from(*p)) % BigInt::from(*p);
                FieldElement::Mod(r.to_u32().expect("residue below modulus"))
            }
            Field::Rational => FieldElement::Rat(BigRational::from_integer(v.clone())),
        }
    }

    /// Every element of F_p in increasing residue order; `None` over Q.
    pub fn elements(&self) -> Option<impl Iterator<Item = FieldElement>> {
        self.characteristic()
            .map(|p| (0..p).map(FieldElement::Mod))
    }

    pub fn is_zero(&self, a: &FieldElement) -> bool {
        match a {
            FieldElement::Mod(v) => *v == 0,
            FieldElement::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self, a: &FieldElement) -> bool {
        match a {
            FieldElement::Mod(v) => *v == 1,
            FieldElement::Rat(r) => r.is_one(),
        }
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match (self, a, b) {
            (Field::Prime(p), FieldElement::Mod(x), FieldElement::Mod(y)) => {
                FieldElement::Mod(((*x as u64 + *y as u64) % *p as u64) as u32)
            }
            (Field::Rational, FieldElement::Rat(x), FieldElement::Rat(y)) => FieldElement::Rat(x + y),
            _ => panic!("field element does not belong to {self}"),
        }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        match (self, a) {
            (Field::Prime(p), FieldElement::Mod(x)) => {
                FieldElement::Mod(if *x == 0 { 0 } else { p - x })
            }
            (Field::Rational, FieldElement::Rat(x)) => FieldElement::Rat(-x),
            _ => panic!("field element does not belong to {self}"),
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match (self, a, b) {
            (Field::Prime(p), FieldElement::Mod(x), FieldElement::Mod(y)) => {
                FieldElement::Mod(((*x as u64 * *y as u64) % *p as u64) as u32)
            }
            (Field::Rational, FieldElement::Rat(x), FieldElement::Rat(y)) => FieldElement::Rat(x * y),
            _ => panic!("field element does not belong to {self}"),
        }
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &FieldElement) -> Option<FieldElement> {
        if self.is_zero(a) {
            return None;
        }
        match (self, a) {
            // Fermat: a^(p-2)
            (Field::Prime(p), FieldElement::Mod(_)) => Some(self.pow(a, *p as u64 - 2)),
            (Field::Rational, FieldElement::Rat(x)) => Some(FieldElement::Rat(x.recip())),
            _ => panic!("field element does not belong to {self}"),
        }
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Option<FieldElement> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    /// True when `a` is a valid representative for this field.
    pub fn contains(&self, a: &FieldElement) -> bool {
        match (self, a) {
            (Field::Prime(p), FieldElement::Mod(x)) => x < p,
            (Field::Rational, FieldElement::Rat(_)) => true,
            _ => false,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "F_{p}"),
            Field::Rational => write!(f, "Q"),
        }
    }
}

impl FieldElement {
    /// True for rationals below zero; residues are never negative.
    pub fn is_negative(&self) -> bool {
        matches!(self, FieldElement::Rat(r) if r.is_negative())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Mod(v) => write!(f, "{v}"),
            FieldElement::Rat(r) => write!(f, "{r}"),
        }
    }
}
