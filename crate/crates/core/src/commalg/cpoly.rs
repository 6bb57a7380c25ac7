//! Sparse commutative polynomials over a [`Field`] in named variables.
//!
//! Monomials compare purely lexicographically in the declared variable
//! order: the first declared variable is the most significant.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::field::{Field, FieldElement};
use crate::Error;

/// Exponent vector, one slot per variable of the owning ring.
///
/// The derived `Ord` on the exponent vector is exactly pure lex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Coefficient field plus ordered variable names.
///
/// Cheap to clone; the names are shared.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CRing {
    pub field: Field,
    pub vars: Arc<Vec<String>>,
}

impl CRing {
    pub fn new<S: Into<String>>(field: Field, vars: impl IntoIterator<Item = S>) -> Self {
        CRing {
            field,
            vars: Arc::new(vars.into_iter().map(Into::into).collect()),
        }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn zero(&self) -> CPoly {
        CPoly {
            ring: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(&self, c: FieldElement) -> CPoly {
        let mut p = self.zero();
        if !self.field.is_zero(&c) {
            p.terms.insert(Monomial::one(self.nvars()), c);
        }
        p
    }

    pub fn one(&self) -> CPoly {
        self.constant(self.field.one())
    }

    pub fn int(&self, v: i64) -> CPoly {
        self.constant(self.field.from_i64(v))
    }

    /// The `i`-th variable.
    pub fn var(&self, i: usize) -> CPoly {
        let mut p = self.zero();
        p.terms.insert(Monomial::var(self.nvars(), i), self.field.one());
        p
    }

    pub fn var_named(&self, name: &str) -> Option<CPoly> {
        self.vars.iter().position(|v| v == name).map(|i| self.var(i))
    }

    pub fn term(&self, m: Monomial, c: FieldElement) -> CPoly {
        let mut p = self.zero();
        if !self.field.is_zero(&c) {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn same_as(&self, other: &CRing) -> bool {
        self.field == other.field && (Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars)
    }
}

/// Sparse commutative polynomial; no stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CPoly {
    ring: CRing,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl CPoly {
    pub fn ring(&self) -> &CRing {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> FieldElement {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.field.zero())
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &FieldElement)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.terms.values().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant value, when the polynomial has no variable terms.
    pub fn as_constant(&self) -> Option<FieldElement> {
        if self.is_constant() {
            Some(self.coeff(&Monomial::one(self.ring.nvars())))
        } else {
            None
        }
    }

    fn check(&self, other: &CPoly) -> Result<(), Error> {
        if self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    fn add_term(&mut self, m: Monomial, c: FieldElement) {
        let field = self.ring.field;
        if field.is_zero(&c) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = field.add(e.get(), &c);
                if field.is_zero(&s) {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn try_add(&self, other: &CPoly) -> Result<CPoly, Error> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &CPoly) -> Result<CPoly, Error> {
        self.check(other)?;
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &CPoly) -> Result<CPoly, Error> {
        self.check(other)?;
        let field = self.ring.field;
        let mut out = self.ring.zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), field.mul(ca, cb));
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> CPoly {
        let field = self.ring.field;
        CPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn scale(&self, s: &FieldElement) -> CPoly {
        let field = self.ring.field;
        if field.is_zero(s) {
            return self.ring.zero();
        }
        CPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.mul(c, s)))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &FieldElement) -> CPoly {
        let field = self.ring.field;
        if field.is_zero(c) {
            return self.ring.zero();
        }
        CPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), field.mul(cc, c)))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> CPoly {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> CPoly {
        match self.leading_coeff() {
            Some(lc) => {
                let inv = self.ring.field.inv(lc).expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Evaluates at a point given as one value per variable.
    pub fn eval(&self, point: &[FieldElement]) -> FieldElement {
        assert_eq!(point.len(), self.ring.nvars(), "point dimension");
        let field = self.ring.field;
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = field.mul(&t, &field.pow(v, e as u64));
                }
            }
            acc = field.add(&acc, &t);
        }
        acc
    }

    /// Re-expresses the polynomial in `target`, whose variable list must
    /// contain every variable of this ring (matched by name).
    pub fn embed(&self, target: &CRing) -> Result<CPoly, Error> {
        if self.ring.field != target.field {
            return Err(Error::ContextMismatch);
        }
        let map: Vec<usize> = self
            .ring
            .vars
            .iter()
            .map(|v| target.vars.iter().position(|t| t == v).ok_or(Error::ContextMismatch))
            .collect::<Result<_, _>>()?;
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let mut e = vec![0; target.nvars()];
            for (i, &x) in m.0.iter().enumerate() {
                e[map[i]] += x;
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Builds from raw terms, summing repeated monomials and dropping zeros.
    pub fn from_terms(ring: &CRing, terms: impl IntoIterator<Item = (Monomial, FieldElement)>) -> CPoly {
        let mut out = ring.zero();
        for (m, c) in terms {
            assert_eq!(m.0.len(), ring.nvars(), "monomial arity");
            out.add_term(m, c);
        }
        out
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl std::ops::$tr<&CPoly> for &CPoly {
            type Output = CPoly;
            /// Panics when the operands live in different rings.
            fn $method(self, rhs: &CPoly) -> CPoly {
                self.$inner(rhs).expect("polynomials from different rings")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl std::ops::Neg for &CPoly {
    type Output = CPoly;
    fn neg(self) -> CPoly {
        CPoly::neg(self)
    }
}

fn fmt_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (name, &e) in names.iter().zip(&m.0) {
        match e {
            0 => {}
            1 => parts.push(name.clone()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

impl CPoly {
    /// True when printing needs parentheses to be used as a factor.
    pub fn is_compound(&self) -> bool {
        self.terms.len() > 1
    }
}

impl fmt::Display for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field;
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = if c.is_negative() {
                (true, field.neg(c))
            } else {
                (false, c.clone())
            };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mono = fmt_monomial(m, &self.ring.vars);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if field.is_one(&mag) {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> CRing {
        CRing::new(Field::Prime(5), ["a"])
    }

    #[test]
    fn like_terms_collect() {
        let r = f5();
        let a = r.var(0);
        let sum = &(&a + &r.one()) + &(&a - &r.one());
        assert_eq!(sum, a.scale(&r.field.from_i64(2)));
        assert_eq!(sum.to_string(), "2*a");
    }

    #[test]
    fn difference_of_squares() {
        let r = f5();
        let a = r.var(0);
        let prod = &(&a - &r.one()) * &(&a + &r.one());
        assert_eq!(prod, &a.pow(2) + &r.int(4));
        assert_eq!(prod.to_string(), "a^2 + 4");
    }

    #[test]
    fn scaling_by_zero_empties() {
        let r = f5();
        let p = &r.var(0).pow(2) + &r.int(4);
        let z = p.scale(&r.field.zero());
        assert!(z.is_zero());
        assert_eq!(z.terms().count(), 0);
    }

    #[test]
    fn mismatched_contexts_error() {
        let a = f5().var(0);
        let b = CRing::new(Field::Prime(7), ["a"]).var(0);
        assert!(matches!(a.try_add(&b), Err(Error::ContextMismatch)));
        let c = CRing::new(Field::Prime(5), ["a", "b"]).var(0);
        assert!(matches!(a.try_mul(&c), Err(Error::ContextMismatch)));
    }

    #[test]
    fn lex_leading_term() {
        let r = CRing::new(Field::Rational, ["a", "b"]);
        let p = &(&r.var(1).pow(5) + &r.var(0)) - &r.int(3);
        assert_eq!(p.leading_monomial(), Some(&Monomial(vec![1, 0])));
        assert_eq!(p.to_string(), "a + b^5 - 3");
    }

    #[test]
    fn embed_reorders_variables() {
        let small = CRing::new(Field::Prime(5), ["b"]);
        let big = CRing::new(Field::Prime(5), ["a", "b"]);
        let p = &small.var(0).pow(2) + &small.one();
        let q = p.embed(&big).unwrap();
        assert_eq!(q, &big.var(1).pow(2) + &big.one());
    }
}
