//! Text syntax for polynomials.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := '-' factor | base ('^' uint)?
//! base     := rational | var | '(' expr ')'
//! rational := uint ('/' uint)?
//! ```
//!
//! Whitespace between tokens is ignored. Multiplication is always written
//! out, so `2x0` is rejected.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::polyring::{MPoly, Monomial, Rational, VarSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    UnknownVariable,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{}", self.describe())]
pub struct ParseError {
    /// Byte offset of the offending token.
    pub offset: usize,
    pub expected: String,
    pub found: String,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn describe(&self) -> String {
        match self.kind {
            ParseErrorKind::Syntax => format!(
                "parse error at offset {}: expected {}, found {}",
                self.offset, self.expected, self.found
            ),
            ParseErrorKind::UnknownVariable => format!(
                "unknown variable {} at offset {} (expected one of {})",
                self.found, self.offset, self.expected
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(String),
    Ident(String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(s) => write!(f, "number `{s}`"),
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    vars: &'a VarSet,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    /// Next token and its offset, without consuming it.
    fn peek(&mut self) -> (Tok, usize) {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[start..];
        let Some(c) = rest.chars().next() else {
            return (Tok::End, start);
        };
        let tok = if c.is_ascii_digit() {
            let n = rest.find(|ch: char| !ch.is_ascii_digit()).unwrap_or(rest.len());
            Tok::Num(rest[..n].to_string())
        } else if c.is_alphabetic() || c == '_' {
            let n = rest
                .find(|ch: char| !(ch.is_alphanumeric() || ch == '_'))
                .unwrap_or(rest.len());
            Tok::Ident(rest[..n].to_string())
        } else {
            Tok::Sym(c)
        };
        (tok, start)
    }

    fn bump(&mut self, tok: &Tok) {
        self.pos += match tok {
            Tok::Num(s) | Tok::Ident(s) => s.len(),
            Tok::Sym(c) => c.len_utf8(),
            Tok::End => 0,
        };
    }

    fn error(&self, offset: usize, expected: &str, found: &Tok) -> ParseError {
        ParseError {
            offset,
            expected: expected.to_string(),
            found: found.to_string(),
            kind: ParseErrorKind::Syntax,
        }
    }

    fn eat_sym(&mut self, sym: char) -> bool {
        let (tok, _) = self.peek();
        if tok == Tok::Sym(sym) {
            self.bump(&tok);
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat_sym('+') {
                acc = &acc + &self.term()?;
            } else if self.eat_sym('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MPoly, ParseError> {
        let mut acc = self.factor()?;
        while self.eat_sym('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MPoly, ParseError> {
        if self.eat_sym('-') {
            return Ok(-self.factor()?);
        }
        let base = self.base()?;
        if !self.eat_sym('^') {
            return Ok(base);
        }
        let (tok, at) = self.peek();
        let Tok::Num(digits) = &tok else {
            return Err(self.error(at, "exponent digits", &tok));
        };
        let e: u32 = digits
            .parse()
            .map_err(|_| self.error(at, "exponent that fits in 32 bits", &tok))?;
        self.bump(&tok);
        Ok(base.pow(e))
    }

    fn uint(&mut self, what: &str) -> Result<BigInt, ParseError> {
        let (tok, at) = self.peek();
        match &tok {
            Tok::Num(d) => {
                self.bump(&tok);
                Ok(d.parse().expect("ascii digits"))
            }
            _ => Err(self.error(at, what, &tok)),
        }
    }

    fn base(&mut self) -> Result<MPoly, ParseError> {
        let (tok, at) = self.peek();
        match &tok {
            Tok::Num(_) => {
                let n = self.uint("number")?;
                let mut d = BigInt::one();
                if self.eat_sym('/') {
                    let (dt, dat) = self.peek();
                    d = self.uint("denominator digits")?;
                    if d.is_zero() {
                        return Err(self.error(dat, "nonzero denominator", &dt));
                    }
                }
                Ok(MPoly::constant(self.vars, Rational::new(n, d)))
            }
            Tok::Ident(name) => match self.vars.index_of(name) {
                Some(i) => {
                    self.bump(&tok);
                    Ok(MPoly::var(self.vars, i))
                }
                None => Err(ParseError {
                    offset: at,
                    expected: self.vars.names().join(", "),
                    found: format!("`{name}`"),
                    kind: ParseErrorKind::UnknownVariable,
                }),
            },
            Tok::Sym('(') => {
                self.bump(&tok);
                let inner = self.expr()?;
                let (close, cat) = self.peek();
                if close != Tok::Sym(')') {
                    return Err(self.error(cat, "`)`", &close));
                }
                self.bump(&close);
                Ok(inner)
            }
            _ => Err(self.error(at, "number, variable or `(`", &tok)),
        }
    }
}

/// Parses `text` as a polynomial in `vars`.
pub fn parse_poly(text: &str, vars: &VarSet) -> Result<MPoly, ParseError> {
    let mut p = Parser { text, pos: 0, vars };
    let poly = p.expr()?;
    let (tok, at) = p.peek();
    if tok != Tok::End {
        return Err(p.error(at, "operator or end of input", &tok));
    }
    Ok(poly)
}

fn write_monomial(out: &mut String, vars: &VarSet, m: &Monomial) {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(vars.name(i));
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

/// Renders terms in the given order with the canonical term syntax.
pub fn format_terms<'a, I>(vars: &VarSet, terms: I) -> String
where
    I: IntoIterator<Item = (&'a Monomial, &'a Rational)>,
{
    let mut out = String::new();
    for (m, c) in terms {
        let negative = c.is_negative();
        match (out.is_empty(), negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        let a = c.abs();
        if m.is_one() {
            out.push_str(&a.to_string());
        } else {
            if !a.is_one() {
                out.push_str(&a.to_string());
                out.push('*');
            }
            write_monomial(&mut out, vars, m);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Canonical rendering: graded lexicographic order, highest term first.
pub fn print_poly(p: &MPoly) -> String {
    format_terms(p.vars(), p.terms().rev())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::ratio;

    #[test]
    fn literals() {
        let v = VarSet::projective();
        let f = parse_poly("x0^3 + x1^3 + x2^3", &v).unwrap();
        assert_eq!(f.num_terms(), 3);
        assert_eq!(print_poly(&f), "x0^3 + x1^3 + x2^3");
        let c = VarSet::chart();
        let g = parse_poly("2/3*u1^2*u2 - u2", &c).unwrap();
        assert_eq!(g.coeff_of(&[2, 1]), ratio(2, 3));
        assert_eq!(g.coeff_of(&[0, 1]), ratio(-1, 1));
        assert_eq!(print_poly(&g), "2/3*u1^2*u2 - u2");
    }

    #[test]
    fn errors() {
        let v = VarSet::projective();
        let e = parse_poly("x0^", &v).unwrap_err();
        assert_eq!(e.offset, 3);
        assert_eq!(e.expected, "exponent digits");
        assert_eq!(e.kind, ParseErrorKind::Syntax);
        let e = parse_poly("2x0", &v).unwrap_err();
        assert_eq!(e.offset, 1);
        let e = parse_poly("x0 + y", &v).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownVariable);
        assert_eq!(e.offset, 5);
        assert!(parse_poly("1/0", &v).is_err());
        assert!(parse_poly("(x0", &v).is_err());
        assert!(parse_poly("", &v).is_err());
    }

    #[test]
    fn precedence_and_unary_minus() {
        let c = VarSet::chart();
        let p = |s| parse_poly(s, &c).unwrap();
        assert_eq!(p("-u1^2"), -p("u1^2"));
        assert_eq!(p("u1 - u2 - u1"), -p("u2"));
        assert_eq!(p("2*u1^2*3"), p("6*u1^2"));
        assert_eq!(p("(u1+u2)^2"), p("u1^2 + 2*u1*u2 + u2^2"));
        assert_eq!(p("  u1\t*\nu2 "), p("u1*u2"));
    }

    #[test]
    fn printing() {
        let c = VarSet::chart();
        assert_eq!(print_poly(&MPoly::zero(&c)), "0");
        assert_eq!(print_poly(&parse_poly("u1^2-u2^2", &c).unwrap()), "u1^2 - u2^2");
        assert_eq!(print_poly(&parse_poly("-1/2 - u1", &c).unwrap()), "-u1 - 1/2");
    }
}
