use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::word::{Alphabet, Word};
use crate::commalg::{Assignment, CPoly, CRing, Field, FieldElement, Monomial};
use crate::Error;

/// Sparse polynomial in the free algebra over `alphabet`.
///
/// Coefficients are commutative polynomials in the extension symbols of
/// `coeffs`; a ring with no symbols gives ordinary constant coefficients.
/// No stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NcPoly {
    alphabet: Arc<Alphabet>,
    coeffs: CRing,
    terms: BTreeMap<Word, CPoly>,
}

impl NcPoly {
    pub fn zero(alphabet: Arc<Alphabet>, coeffs: CRing) -> Self {
        NcPoly {
            alphabet,
            coeffs,
            terms: BTreeMap::new(),
        }
    }

    /// Zero polynomial with constant coefficients in `field`.
    pub fn zero_over(alphabet: Arc<Alphabet>, field: Field) -> Self {
        Self::zero(alphabet, CRing::new(field, Vec::<String>::new()))
    }

    pub fn term(alphabet: Arc<Alphabet>, coeffs: CRing, w: Word, c: CPoly) -> Self {
        let mut p = Self::zero(alphabet, coeffs);
        p.add_term(w, c);
        p
    }

    /// Polynomial with constant integer coefficients from `(coeff, word)`
    /// pairs, words spelled as in [`Alphabet::word`].
    pub fn from_int_terms(alphabet: &Arc<Alphabet>, field: Field, terms: &[(i64, &str)]) -> Result<Self, Error> {
        let mut p = Self::zero_over(alphabet.clone(), field);
        for (c, w) in terms {
            let w = alphabet.word(w)?;
            let c = p.coeffs.int(*c);
            p.add_term(w, c);
        }
        Ok(p)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn coeff_ring(&self) -> &CRing {
        &self.coeffs
    }

    pub fn field(&self) -> Field {
        self.coeffs.field
    }

    pub fn zero_like(&self) -> Self {
        Self::zero(self.alphabet.clone(), self.coeffs.clone())
    }

    pub fn one_like(&self) -> Self {
        Self::term(self.alphabet.clone(), self.coeffs.clone(), Word::empty(), self.coeffs.one())
    }

    pub fn word_like(&self, w: Word) -> Self {
        Self::term(self.alphabet.clone(), self.coeffs.clone(), w, self.coeffs.one())
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

    /// Terms in increasing deglex order of their words.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &CPoly)> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl DoubleEndedIterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn coeff(&self, w: &Word) -> CPoly {
        self.terms.get(w).cloned().unwrap_or_else(|| self.coeffs.zero())
    }

    pub(crate) fn add_term(&mut self, w: Word, c: CPoly) {
        if c.is_zero() {
            return;
        }
        debug_assert!(c.ring().same_as(&self.coeffs));
        debug_assert!(w.letters().iter().all(|&l| (l as usize) < self.alphabet.len()));
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn same_context(&self, other: &NcPoly) -> bool {
        (Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet)
            && self.coeffs.same_as(&other.coeffs)
    }

    fn check(&self, other: &NcPoly) -> Result<(), Error> {
        if self.same_context(other) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// Largest word length with a nonzero coefficient.
    pub fn degree(&self) -> Result<usize, Error> {
        self.terms.keys().next_back().map(Word::len).ok_or(Error::ZeroPolynomial)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut lens = self.terms.keys().map(Word::len);
        match lens.next() {
            Some(first) => lens.all(|l| l == first),
            None => true,
        }
    }

    /// Sum of the terms whose word has length exactly `d`.
    pub fn homogeneous_part(&self, d: usize) -> NcPoly {
        NcPoly {
            alphabet: self.alphabet.clone(),
            coeffs: self.coeffs.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == d)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Deglex-largest word with a nonzero coefficient.
    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&CPoly> {
        self.terms.values().next_back()
    }

    /// True when no coefficient mentions an extension symbol.
    pub fn has_constant_coeffs(&self) -> bool {
        self.terms.values().all(CPoly::is_constant)
    }

    pub fn try_add(&self, other: &NcPoly) -> Result<NcPoly, Error> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &NcPoly) -> Result<NcPoly, Error> {
        self.check(other)?;
        self.try_add(&other.neg())
    }

    /// Product in the free algebra: words concatenate, coefficients
    /// multiply in the commutative coefficient ring.
    pub fn try_mul(&self, other: &NcPoly) -> Result<NcPoly, Error> {
        self.check(other)?;
        let mut out = self.zero_like();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> NcPoly {
        NcPoly {
            alphabet: self.alphabet.clone(),
            coeffs: self.coeffs.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn try_scale(&self, c: &CPoly) -> Result<NcPoly, Error> {
        if !c.ring().same_as(&self.coeffs) {
            return Err(Error::ContextMismatch);
        }
        let mut out = self.zero_like();
        for (w, a) in &self.terms {
            out.add_term(w.clone(), a * c);
        }
        Ok(out)
    }

    pub fn scale_const(&self, c: &FieldElement) -> NcPoly {
        let mut out = self.zero_like();
        if self.coeffs.field.is_zero(c) {
            return out;
        }
        out.terms = self.terms.iter().map(|(w, a)| (w.clone(), a.scale(c))).collect();
        out
    }

    /// `c · g · self · h` for words `g`, `h`.
    pub fn sandwich(&self, c: &CPoly, g: &Word, h: &Word) -> NcPoly {
        let mut out = self.zero_like();
        if c.is_zero() {
            return out;
        }
        for (w, a) in &self.terms {
            out.add_term(g.concat(w).concat(h), a * c);
        }
        out
    }

    /// Divides by the constant leading coefficient, returning the scaled
    /// polynomial and the factor that was divided out.
    pub fn monic(&self) -> Result<(NcPoly, FieldElement), Error> {
        let lc = self.leading_coeff().ok_or(Error::ZeroPolynomial)?;
        let lc = lc.as_constant().ok_or(Error::SymbolicCoefficients)?;
        let inv = self.coeffs.field.inv(&lc).expect("nonzero leading coefficient");
        Ok((self.scale_const(&inv), lc))
    }

    /// Moves the coefficients into `target`, a symbol ring containing all
    /// current symbols.
    pub fn with_coeff_ring(&self, target: &CRing) -> Result<NcPoly, Error> {
        let mut out = NcPoly::zero(self.alphabet.clone(), target.clone());
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.embed(target)?);
        }
        Ok(out)
    }

    /// Substitutes a value for every symbol, yielding constant
    /// coefficients (in a ring without symbols).
    pub fn substitute(&self, values: &Assignment) -> NcPoly {
        let target = CRing::new(self.coeffs.field, Vec::<String>::new());
        let mut out = NcPoly::zero(self.alphabet.clone(), target.clone());
        for (w, c) in &self.terms {
            out.add_term(w.clone(), target.constant(c.eval(values)));
        }
        out
    }

    /// Drops the (necessarily empty) symbol list of a constant-coefficient
    /// polynomial.
    pub fn constant_part(&self) -> Result<NcPoly, Error> {
        if !self.has_constant_coeffs() {
            return Err(Error::SymbolicCoefficients);
        }
        let zeros = vec![self.coeffs.field.zero(); self.coeffs.nvars()];
        Ok(self.substitute(&zeros))
    }

    /// Image under the homomorphism letting all letters commute: each word
    /// maps to the monomial of its letter multiset.
    pub fn commutative_image(&self) -> Result<CPoly, Error> {
        if !self.has_constant_coeffs() {
            return Err(Error::SymbolicCoefficients);
        }
        let ring = CRing::new(self.coeffs.field, self.alphabet.names().iter().cloned());
        let n = self.alphabet.len();
        Ok(CPoly::from_terms(
            &ring,
            self.terms.iter().map(|(w, c)| {
                (Monomial(w.letter_counts(n)), c.as_constant().expect("constant"))
            }),
        ))
    }

    /// Homogenizes by right-padding each term with powers of a new letter
    /// `z`: `c·w ↦ c·w·z^(n-|w|)`, `n` the degree.
    ///
    /// This is one of several homogenizations in the free algebra (the
    /// padding could go on the left or be spread through the word); only
    /// right padding is provided.
    pub fn homogenize(&self, z: &str) -> Result<NcPoly, Error> {
        if self.alphabet.index_of(z).is_some() {
            return Err(Error::InvalidAlphabet(format!("`{z}` already in the alphabet")));
        }
        let n = self.degree()?;
        let mut names = self.alphabet.names().to_vec();
        names.push(z.to_string());
        let alphabet = Arc::new(Alphabet::new(names)?);
        let zl = (alphabet.len() - 1) as u8;
        let mut out = NcPoly::zero(alphabet, self.coeffs.clone());
        for (w, c) in &self.terms {
            let pad = Word(vec![zl; n - w.len()]);
            out.add_term(w.concat(&pad), c.clone());
        }
        Ok(out)
    }

    /// Sets letter `name` to 1, moving into `target` (which must list the
    /// remaining letters in the same order).
    pub fn set_letter_to_one(&self, name: &str, target: &Arc<Alphabet>) -> Result<NcPoly, Error> {
        let z = self.alphabet.index_of(name).ok_or_else(|| Error::UnknownVariable(name.into()))?;
        let remap: Vec<Option<u8>> = self
            .alphabet
            .names()
            .iter()
            .map(|n| if n == name { Ok(None) } else { target.index_of(n).map(Some).ok_or(Error::ContextMismatch) })
            .collect::<Result<_, _>>()?;
        let mut out = NcPoly::zero(target.clone(), self.coeffs.clone());
        for (w, c) in &self.terms {
            let letters = w.letters().iter().filter(|&&l| l != z).map(|&l| remap[l as usize].unwrap()).collect();
            out.add_term(Word(letters), c.clone());
        }
        Ok(out)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl std::ops::$tr<&NcPoly> for &NcPoly {
            type Output = NcPoly;
            /// Panics when the operands live in different contexts.
            fn $method(self, rhs: &NcPoly) -> NcPoly {
                self.$inner(rhs).expect("polynomials from different contexts")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl std::ops::Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly::neg(self)
    }
}

/// Canonical printer: terms by decreasing deglex word, letters joined by
/// `*`, coefficient 1 omitted. Constant-coefficient output parses back to
/// the same polynomial.
impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.coeffs.field;
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            let word = if w.is_empty() { String::new() } else { self.alphabet.render(w) };
            let (neg, coeff) = if c.is_compound() {
                (false, format!("({c})"))
            } else {
                let (m, v) = c.leading_term().expect("nonzero coefficient");
                let neg = v.is_negative();
                let mag = if neg { field.neg(v) } else { v.clone() };
                let mono = c.ring().term(m.clone(), field.one());
                let mono = if m.is_one() { String::new() } else { mono.to_string() };
                let s = match (field.is_one(&mag), mono.is_empty()) {
                    (true, true) => String::new(),
                    (true, false) => mono,
                    (false, true) => mag.to_string(),
                    (false, false) => format!("{mag}*{mono}"),
                };
                (neg, s)
            };
            let body = match (coeff.is_empty(), word.is_empty()) {
                (true, true) => "1".to_string(),
                (true, false) => word,
                (false, true) => coeff,
                (false, false) => format!("{coeff}*{word}"),
            };
            if i == 0 {
                write!(f, "{}{body}", if neg { "-" } else { "" })?;
            } else {
                write!(f, " {} {body}", if neg { "-" } else { "+" })?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Arc<Alphabet> {
        Arc::new(Alphabet::new(["x", "y"]).unwrap())
    }

    fn poly(field: Field, terms: &[(i64, &str)]) -> NcPoly {
        NcPoly::from_int_terms(&xy(), field, terms).unwrap()
    }

    const F5: Field = Field::Prime(5);

    #[test]
    fn head_example_product() {
        let g = poly(F5, &[(1, "yx"), (-1, "")]);
        let h = poly(F5, &[(1, "yxy"), (1, "y")]);
        assert_eq!(&g * &h, poly(F5, &[(1, "yxyxy"), (-1, "y")]));
    }

    #[test]
    fn non_commuting_expansion() {
        let a = poly(Field::Rational, &[(1, "x"), (-1, "y")]);
        let b = poly(Field::Rational, &[(1, "x"), (1, "y")]);
        let expect = poly(Field::Rational, &[(1, "xx"), (1, "xy"), (-1, "yx"), (-1, "yy")]);
        assert_eq!(&a * &b, expect);
        assert_eq!(expect.to_string(), "-y*y - y*x + x*y + x*x");
    }

    #[test]
    fn printer_output() {
        let f = poly(F5, &[(1, "yxyxy"), (-1, "y")]);
        assert_eq!(f.to_string(), "y*x*y*x*y + 4*y");
        let q = poly(Field::Rational, &[(1, "xx"), (-1, "yy"), (3, "")]);
        assert_eq!(q.to_string(), "-y*y + x*x + 3");
        assert_eq!(poly(F5, &[]).to_string(), "0");
        assert_eq!(poly(F5, &[(2, "")]).to_string(), "2");
    }

    #[test]
    fn zero_scaling() {
        let f = poly(F5, &[(1, "yxyxy"), (-1, "y")]);
        assert!(f.scale_const(&F5.zero()).is_zero());
        assert!(f.try_scale(&f.coeff_ring().zero()).unwrap().is_zero());
    }

    #[test]
    fn homogeneous_parts_and_degree() {
        let f = poly(F5, &[(1, "yxyxy"), (-1, "y")]);
        assert_eq!(f.homogeneous_part(5), poly(F5, &[(1, "yxyxy")]));
        assert!(f.homogeneous_part(3).is_zero());
        assert_eq!(f.degree().unwrap(), 5);
        assert!(matches!(poly(F5, &[]).degree(), Err(Error::ZeroPolynomial)));
        let total = (0..=5).fold(f.zero_like(), |acc, d| &acc + &f.homogeneous_part(d));
        assert_eq!(total, f);
        assert!(!f.is_homogeneous());
    }

    #[test]
    fn commutative_images() {
        let q = Field::Rational;
        let img = poly(q, &[(1, "xy"), (1, "yx")]).commutative_image().unwrap();
        let r = img.ring().clone();
        assert_eq!(img, (&r.var(0) * &r.var(1)).scale(&q.from_i64(2)));
        let img = poly(q, &[(1, "yxyxy"), (-1, "y")]).commutative_image().unwrap();
        assert_eq!(img, &(&r.var(0).pow(2) * &r.var(1).pow(3)) - &r.var(1));
        let img = poly(q, &[(1, "xx"), (-1, "yy")]).commutative_image().unwrap();
        assert_eq!(img, &r.var(0).pow(2) - &r.var(1).pow(2));
    }

    #[test]
    fn homogenization() {
        let x = Arc::new(Alphabet::new(["x"]).unwrap());
        let f = NcPoly::from_int_terms(&x, Field::Rational, &[(1, "xx"), (-1, "")]).unwrap();
        let h = f.homogenize("y").unwrap();
        assert_eq!(h.to_string(), "-y*y + x*x");
        assert_eq!(h.set_letter_to_one("y", &x).unwrap(), f);

        let g = poly(F5, &[(1, "yx"), (-1, "")]);
        let hz = g.homogenize("z").unwrap();
        assert_eq!(hz.to_string(), "4*z*z + y*x");
        assert!(hz.is_homogeneous());
        let zz = hz.alphabet().word("zz").unwrap();
        assert_eq!(hz.coeff(&zz), hz.coeff_ring().int(-1));

        let already = poly(F5, &[(1, "xy"), (2, "yy")]);
        let same = already.homogenize("z").unwrap();
        assert_eq!(same.set_letter_to_one("z", &xy()).unwrap(), already);
        assert_eq!(same.len(), already.len());
        assert!(matches!(already.homogenize("x"), Err(Error::InvalidAlphabet(_))));
    }

    #[test]
    fn symbolic_printing() {
        let r = CRing::new(F5, ["a1"]);
        let a = r.var(0);
        let mut p = NcPoly::zero(xy(), r.clone());
        p.add_term(xy().word("yx").unwrap(), r.one());
        p.add_term(Word::empty(), a.clone());
        assert_eq!(p.to_string(), "y*x + a1");
        let mut q = NcPoly::zero(xy(), r.clone());
        q.add_term(xy().word("y").unwrap(), &a + &r.int(2));
        q.add_term(Word::empty(), a.scale(&F5.from_i64(3)));
        assert_eq!(q.to_string(), "(a1 + 2)*y + 3*a1");
    }
}
