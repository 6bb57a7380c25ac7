use std::cmp::Ordering;
use std::fmt;

use crate::Error;

/// Ordered, distinct variable names of the free monoid.
///
/// The declaration order fixes letter comparison for the session.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, Error> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() || names.len() > u8::MAX as usize {
            return Err(Error::InvalidAlphabet(format!("{} letters", names.len())));
        }
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::InvalidAlphabet(format!("`{n}` is not an identifier")));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidAlphabet(format!("`{n}` declared twice")));
            }
        }
        Ok(Alphabet { names })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<u8> {
        self.names.iter().position(|n| n == name).map(|i| i as u8)
    }

    pub fn name(&self, letter: u8) -> &str {
        &self.names[letter as usize]
    }

    /// Parses a word written as juxtaposed single-character letter names,
    /// e.g. `"yxy"`. The empty string is the empty word.
    pub fn word(&self, letters: &str) -> Result<Word, Error> {
        letters
            .chars()
            .map(|c| {
                self.index_of(c.encode_utf8(&mut [0; 4]))
                    .ok_or_else(|| Error::UnknownVariable(c.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }

    /// Renders a word with `*` between letters; the empty word is `1`.
    pub fn render(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.letters().iter().map(|&l| self.name(l)).collect::<Vec<_>>().join("*")
    }
}

/// Element of the free monoid: a sequence of letter indices.
///
/// Words compare by length first, then lexicographically by letter index
/// (deglex). The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n].to_vec())
    }

    pub fn suffix(&self, n: usize) -> Word {
        Word(self.0[self.len() - n..].to_vec())
    }

    pub fn has_prefix(&self, g: &Word) -> bool {
        self.0.starts_with(&g.0)
    }

    pub fn has_suffix(&self, h: &Word) -> bool {
        self.0.ends_with(&h.0)
    }

    /// `w` with `self = g·w`, if `g` is a prefix of `self`.
    pub fn left_quotient(&self, g: &Word) -> Option<Word> {
        self.0.strip_prefix(g.0.as_slice()).map(|r| Word(r.to_vec()))
    }

    /// `w` with `self = w·h`, if `h` is a suffix of `self`.
    pub fn right_quotient(&self, h: &Word) -> Option<Word> {
        self.0.strip_suffix(h.0.as_slice()).map(|r| Word(r.to_vec()))
    }

    /// Multiset of letters as an exponent vector over `nletters` letters.
    pub fn letter_counts(&self, nletters: usize) -> Vec<u32> {
        let mut e = vec![0; nletters];
        for &l in &self.0 {
            e[l as usize] += 1;
        }
        e
    }
}

/// Every `j ≥ 1` for which the length-`j` suffix of `g` equals the
/// length-`j` prefix of `h`, ascending.
pub fn overlap_lengths(g: &Word, h: &Word) -> Vec<usize> {
    (1..=g.len().min(h.len()))
        .filter(|&j| g.0[g.len() - j..] == h.0[..j])
        .collect()
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "[{}]", s.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Alphabet {
        Alphabet::new(["x", "y"]).unwrap()
    }

    #[test]
    fn alphabet_validation() {
        assert!(Alphabet::new(["x", "x"]).is_err());
        assert!(Alphabet::new(Vec::<String>::new()).is_err());
        assert!(Alphabet::new(["1x"]).is_err());
        assert!(Alphabet::new(["x1", "_y"]).is_ok());
    }

    #[test]
    fn quotients_of_the_head_word() {
        let a = xy();
        let m = a.word("yxyxy").unwrap();
        assert_eq!(m.left_quotient(&a.word("yx").unwrap()), Some(a.word("yxy").unwrap()));
        assert_eq!(m.right_quotient(&a.word("yxy").unwrap()), Some(a.word("yx").unwrap()));
        let xy_ = a.word("xy").unwrap();
        assert_eq!(xy_.left_quotient(&a.word("yx").unwrap()), None);
    }

    #[test]
    fn overlaps() {
        let a = xy();
        let w = |s| a.word(s).unwrap();
        assert_eq!(overlap_lengths(&w("yx"), &w("yxy")), vec![2]);
        assert_eq!(overlap_lengths(&w("xy"), &w("yx")), vec![1]);
        assert!(overlap_lengths(&w("xx"), &w("yy")).is_empty());
        assert_eq!(overlap_lengths(&w("xx"), &w("xx")), vec![1, 2]);
        assert!(overlap_lengths(&w(""), &w("x")).is_empty());
    }

    #[test]
    fn deglex_order() {
        let a = xy();
        let w = |s| a.word(s).unwrap();
        assert!(w("y") < w("xx"));
        assert!(w("xy") < w("yx"));
        assert!(w("") < w("x"));
    }

    fn all_words(max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut frontier = vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for l in 0..2u8 {
                    let mut v = w.0.clone();
                    v.push(l);
                    next.push(Word(v));
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    #[test]
    fn monoid_laws_exhaustive() {
        let words = all_words(3);
        let e = Word::empty();
        for u in &words {
            assert_eq!(u.concat(&e), *u);
            assert_eq!(e.concat(u), *u);
            for v in &words {
                for w in &words {
                    assert_eq!(u.concat(v).concat(w), u.concat(&v.concat(w)));
                }
            }
        }
    }

    #[test]
    fn quotient_inverts_concat_exhaustive() {
        let words = all_words(3);
        for g in &words {
            for w in &words {
                let m = g.concat(w);
                assert_eq!(m.left_quotient(g).as_ref(), Some(w));
                assert_eq!(m.right_quotient(w).as_ref(), Some(g));
            }
        }
    }
}
