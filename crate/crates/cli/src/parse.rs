//! Expression parser.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! `*` is the non-commutative product, so `x*y` and `y*x` differ. Whitespace
//! is ignored. Positions in errors are 1-based character columns.

use std::fmt;
use std::sync::Arc;

use ncfactor::{Alphabet, Field, NcPoly, Word};
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Star,
    Plus,
    Minus,
    Caret,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(v) => write!(f, "integer {v}"),
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Star => f.write_str("'*'"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("column {column}: unexpected character '{found}'")]
    BadCharacter { column: usize, found: char },
    #[error("column {column}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        column: usize,
        expected: Vec<&'static str>,
        found: String,
    },
    #[error("column {column}: unknown variable `{name}`")]
    UnknownVariable { column: usize, name: String },
    #[error("column {column}: exponent {exponent} is too large")]
    Exponent { column: usize, exponent: BigInt },
}

const MAX_EXPONENT: u32 = 1024;

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((column, Tok::Int(digits.parse().expect("decimal digits"))));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((column, Tok::Ident(chars[start..i].iter().collect())));
            continue;
        }
        let tok = match c {
            '*' => Tok::Star,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return Err(ParseError::BadCharacter { column, found: c }),
        };
        out.push((column, tok));
        i += 1;
    }
    out.push((chars.len() + 1, Tok::End));
    Ok(out)
}

/// Distinct identifiers of `text` in sorted order, the default variable
/// list.
pub fn identifiers(text: &str) -> Result<Vec<String>, ParseError> {
    let mut names: Vec<String> = tokenize(text)?
        .into_iter()
        .filter_map(|(_, t)| match t {
            Tok::Ident(s) => Some(s),
            _ => None,
        })
        .collect();
    names.sort();
    names.dedup();
    Ok(names)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    alphabet: &'a Arc<Alphabet>,
    field: Field,
}

const ATOM_START: &[&str] = &["integer", "variable", "'('", "'+'", "'-'"];

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn column(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError::Syntax {
            column: self.column(),
            expected: expected.to_vec(),
            found: self.peek().to_string(),
        }
    }

    fn constant(&self, v: &BigInt) -> NcPoly {
        NcPoly::zero_over(self.alphabet.clone(), self.field)
            .one_like()
            .scale_const(&self.field.from_bigint(v))
    }

    fn expr(&mut self) -> Result<NcPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<NcPoly, ParseError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<NcPoly, ParseError> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-&self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<NcPoly, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let column = self.column();
        let Tok::Int(e) = self.peek().clone() else {
            return Err(self.error(&["integer"]));
        };
        self.bump();
        let exponent = u32::try_from(&e)
            .ok()
            .filter(|&v| v <= MAX_EXPONENT)
            .ok_or(ParseError::Exponent { column, exponent: e })?;
        let mut acc = base.one_like();
        for _ in 0..exponent {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<NcPoly, ParseError> {
        let column = self.column();
        match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                Ok(self.constant(&v))
            }
            Tok::Ident(name) => {
                self.bump();
                let letter = self
                    .alphabet
                    .index_of(&name)
                    .ok_or(ParseError::UnknownVariable { column, name })?;
                let zero = NcPoly::zero_over(self.alphabet.clone(), self.field);
                Ok(zero.word_like(Word(vec![letter])))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error(&["')'", "'*'", "'+'", "'-'"]));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error(ATOM_START)),
        }
    }
}

/// Parses `text` into a polynomial over `field` in the letters of
/// `alphabet`.
pub fn parse_expression(text: &str, alphabet: &Arc<Alphabet>, field: Field) -> Result<NcPoly, ParseError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
        alphabet,
        field,
    };
    let poly = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["'*'", "'+'", "'-'", "end of input"]));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Arc<Alphabet> {
        Arc::new(Alphabet::new(["x", "y"]).unwrap())
    }

    fn parse(text: &str) -> Result<String, ParseError> {
        parse_expression(text, &xy(), Field::Prime(5)).map(|p| p.to_string())
    }

    #[test]
    fn examples() {
        assert_eq!(parse("y*x*y*x*y - y").unwrap(), "y*x*y*x*y + 4*y");
        assert_eq!(parse("x*y - y*x").unwrap(), "4*y*x + x*y");
        assert_eq!(parse("(x + 1)^2").unwrap(), "x*x + 2*x + 1");
        assert_eq!(parse("-(-x)").unwrap(), "x");
        assert_eq!(parse("7*x").unwrap(), "2*x");
        assert_eq!(parse("x^0").unwrap(), "1");
        assert_eq!(parse("x*x - x^2").unwrap(), "0");
        let a = Arc::new(Alphabet::new(["x"]).unwrap());
        assert_eq!(parse_expression("x^2 - 1", &a, Field::Rational).unwrap().to_string(), "x*x - 1");
    }

    #[test]
    fn big_coefficients_reduce() {
        assert_eq!(parse("100000000000000000000001*x").unwrap(), "x");
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse("x + * y"),
            Err(ParseError::Syntax {
                column: 5,
                expected: ATOM_START.to_vec(),
                found: "'*'".into()
            })
        );
        assert_eq!(parse("x*z"), Err(ParseError::UnknownVariable { column: 3, name: "z".into() }));
        assert_eq!(parse("x $"), Err(ParseError::BadCharacter { column: 3, found: '$' }));
        assert!(matches!(parse("(x"), Err(ParseError::Syntax { column: 3, .. })));
        assert!(matches!(parse("x y"), Err(ParseError::Syntax { column: 3, .. })));
        assert!(matches!(parse("x^y"), Err(ParseError::Syntax { column: 3, .. })));
        assert!(matches!(parse("x^99999"), Err(ParseError::Exponent { column: 3, .. })));
        assert!(matches!(parse(""), Err(ParseError::Syntax { column: 1, .. })));
        assert_eq!(
            parse("x + * y").unwrap_err().to_string(),
            "column 5: expected integer or variable or '(' or '+' or '-', found '*'"
        );
    }

    #[test]
    fn default_identifiers_are_sorted() {
        assert_eq!(identifiers("y*x + y + b2").unwrap(), vec!["b2", "x", "y"]);
    }
}
