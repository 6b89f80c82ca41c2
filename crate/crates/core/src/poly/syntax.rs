//! Tokens and expression parsing shared by polynomial literals and session files.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{PolyRing, Polynomial, Rational};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    Ident(String),
    Int(BigInt),
    Str(String),
    Arrow,
    Punct(char),
    Eof,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub line: usize,
    pub col: usize,
}

const PUNCT: &str = ";:,[]()+-*/^=";

/// Splits text into tokens. `#` starts a comment running to the end of the line.
pub fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        let advance = |i: &mut usize, n: usize, line: &mut usize, col: &mut usize| {
            for _ in 0..n {
                if chars[*i] == '\n' {
                    *line += 1;
                    *col = 1;
                } else {
                    *col += 1;
                }
                *i += 1;
            }
        };
        if c.is_whitespace() {
            advance(&mut i, 1, &mut line, &mut col);
        } else if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                advance(&mut i, 1, &mut line, &mut col);
            }
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            let mut j = i;
            while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                j += 1;
            }
            let s: String = chars[start..j].iter().collect();
            advance(&mut i, j - start, &mut line, &mut col);
            out.push(Token {
                kind: TokenKind::Ident(s),
                line: tl,
                col: tc,
            });
        } else if c.is_ascii_digit() {
            let start = i;
            let mut j = i;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            let s: String = chars[start..j].iter().collect();
            advance(&mut i, j - start, &mut line, &mut col);
            let n: BigInt = s.parse().expect("digits parse as an integer");
            out.push(Token {
                kind: TokenKind::Int(n),
                line: tl,
                col: tc,
            });
        } else if c == '"' {
            let mut j = i + 1;
            while j < chars.len() && chars[j] != '"' && chars[j] != '\n' {
                j += 1;
            }
            if j >= chars.len() || chars[j] != '"' {
                return Err(Error::Syntax {
                    line: tl,
                    col: tc,
                    msg: "unterminated string".into(),
                });
            }
            let s: String = chars[i + 1..j].iter().collect();
            let n = j + 1 - i;
            advance(&mut i, n, &mut line, &mut col);
            out.push(Token {
                kind: TokenKind::Str(s),
                line: tl,
                col: tc,
            });
        } else if c == '-' && chars.get(i + 1) == Some(&'>') {
            advance(&mut i, 2, &mut line, &mut col);
            out.push(Token {
                kind: TokenKind::Arrow,
                line: tl,
                col: tc,
            });
        } else if PUNCT.contains(c) {
            advance(&mut i, 1, &mut line, &mut col);
            out.push(Token {
                kind: TokenKind::Punct(c),
                line: tl,
                col: tc,
            });
        } else {
            return Err(Error::Syntax {
                line: tl,
                col: tc,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    out.push(Token {
        kind: TokenKind::Eof,
        line,
        col,
    });
    Ok(out)
}

/// A position in a token stream with the usual peek/expect helpers.
#[derive(Debug, Clone)]
pub struct Cursor {
    tokens: Vec<Token>,
    pos: usize,
}

impl Cursor {
    pub fn new(text: &str) -> Result<Self> {
        Ok(Cursor {
            tokens: tokenize(text)?,
            pos: 0,
        })
    }

    pub fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    pub fn peek_kind(&self) -> &TokenKind {
        &self.tokens[self.pos].kind
    }

    pub fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if !matches!(t.kind, TokenKind::Eof) {
            self.pos += 1;
        }
        t
    }

    pub fn at_eof(&self) -> bool {
        matches!(self.peek_kind(), TokenKind::Eof)
    }

    pub fn at_punct(&self, c: char) -> bool {
        self.peek_kind() == &TokenKind::Punct(c)
    }

    pub fn at_keyword(&self, kw: &str) -> bool {
        matches!(self.peek_kind(), TokenKind::Ident(s) if s == kw)
    }

    pub fn eat_punct(&mut self, c: char) -> bool {
        if self.at_punct(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn error_here(&self, msg: impl Into<String>) -> Error {
        let t = self.peek();
        Error::Syntax {
            line: t.line,
            col: t.col,
            msg: msg.into(),
        }
    }

    pub fn expect_punct(&mut self, c: char) -> Result<()> {
        if self.eat_punct(c) {
            Ok(())
        } else {
            Err(self.error_here(format!(
                "expected `{c}`, found {}",
                describe(self.peek_kind())
            )))
        }
    }

    pub fn expect_arrow(&mut self) -> Result<()> {
        if self.peek_kind() == &TokenKind::Arrow {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error_here(format!(
                "expected `->`, found {}",
                describe(self.peek_kind())
            )))
        }
    }

    pub fn expect_ident(&mut self) -> Result<(String, usize, usize)> {
        let t = self.peek().clone();
        match t.kind {
            TokenKind::Ident(s) => {
                self.pos += 1;
                Ok((s, t.line, t.col))
            }
            other => Err(self.error_here(format!("expected a name, found {}", describe(&other)))),
        }
    }

    pub fn expect_keyword(&mut self, kw: &str) -> Result<()> {
        if self.at_keyword(kw) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error_here(format!(
                "expected `{kw}`, found {}",
                describe(self.peek_kind())
            )))
        }
    }

    pub fn expect_usize(&mut self) -> Result<usize> {
        match self.peek_kind().clone() {
            TokenKind::Int(n) => {
                let v = n
                    .to_usize()
                    .ok_or_else(|| self.error_here("integer too large"))?;
                self.pos += 1;
                Ok(v)
            }
            other => {
                Err(self.error_here(format!("expected an integer, found {}", describe(&other))))
            }
        }
    }

    pub fn expect_i64(&mut self) -> Result<i64> {
        let neg = self.eat_punct('-');
        match self.peek_kind().clone() {
            TokenKind::Int(n) => {
                let v = n
                    .to_i64()
                    .ok_or_else(|| self.error_here("integer too large"))?;
                self.pos += 1;
                Ok(if neg { -v } else { v })
            }
            other => {
                Err(self.error_here(format!("expected an integer, found {}", describe(&other))))
            }
        }
    }

    pub fn expect_str(&mut self) -> Result<String> {
        match self.peek_kind().clone() {
            TokenKind::Str(s) => {
                self.pos += 1;
                Ok(s)
            }
            other => Err(self.error_here(format!("expected a string, found {}", describe(&other)))),
        }
    }

    /// Parses `expr := ['+'|'-'] term (('+'|'-') term)*` with products, powers,
    /// division by constants and parenthesised subexpressions.
    pub fn parse_polynomial(&mut self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        let neg = if self.eat_punct('-') {
            true
        } else {
            self.eat_punct('+');
            false
        };
        let mut acc = self.parse_term(ring)?;
        if neg {
            acc = -acc;
        }
        loop {
            if self.eat_punct('+') {
                acc = &acc + &self.parse_term(ring)?;
            } else if self.eat_punct('-') {
                acc = &acc - &self.parse_term(ring)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn parse_term(&mut self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        let mut acc = self.parse_factor(ring)?;
        loop {
            if self.eat_punct('*') {
                acc = &acc * &self.parse_factor(ring)?;
            } else if self.at_punct('/') {
                let (line, col) = (self.peek().line, self.peek().col);
                self.next();
                let d = self.parse_factor(ring)?;
                match d.constant_value() {
                    Some(c) if c != Rational::from_integer(0.into()) => acc = acc.scale(&c.recip()),
                    _ => {
                        return Err(Error::Syntax {
                            line,
                            col,
                            msg: "division is only allowed by a nonzero constant".into(),
                        })
                    }
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn parse_factor(&mut self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        let base = self.parse_atom(ring)?;
        if self.eat_punct('^') {
            let e = self.expect_usize()?;
            let e = u32::try_from(e).map_err(|_| self.error_here("exponent too large"))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn parse_atom(&mut self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        let t = self.peek().clone();
        match t.kind {
            TokenKind::Int(n) => {
                self.next();
                Ok(Polynomial::constant(ring, Rational::from_integer(n)))
            }
            TokenKind::Ident(name) => match ring.var_index(&name) {
                Some(i) => {
                    self.next();
                    Ok(Polynomial::var(ring, i))
                }
                None => Err(self.error_here(format!("`{name}` is not a variable of {ring}"))),
            },
            TokenKind::Punct('(') => {
                self.next();
                let p = self.parse_polynomial(ring)?;
                self.expect_punct(')')?;
                Ok(p)
            }
            TokenKind::Punct('-') => {
                self.next();
                Ok(-self.parse_factor(ring)?)
            }
            other => {
                Err(self.error_here(format!("expected a polynomial, found {}", describe(&other))))
            }
        }
    }
}

pub fn describe(kind: &TokenKind) -> String {
    match kind {
        TokenKind::Ident(s) => format!("`{s}`"),
        TokenKind::Int(n) => format!("`{n}`"),
        TokenKind::Str(s) => format!("\"{s}\""),
        TokenKind::Arrow => "`->`".into(),
        TokenKind::Punct(c) => format!("`{c}`"),
        TokenKind::Eof => "end of input".into(),
    }
}

pub(crate) fn parse_polynomial_str(ring: &Arc<PolyRing>, text: &str) -> Result<Polynomial> {
    let mut cur = Cursor::new(text)?;
    let p = cur.parse_polynomial(ring)?;
    if !cur.at_eof() {
        return Err(cur.error_here(format!("unexpected {}", describe(cur.peek_kind()))));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_grammar_and_superset() {
        let r = PolyRing::new(["x1", "x2"]).unwrap();
        let a = Polynomial::parse(&r, "3*x1^2*x2 - 1/2*x2 + 7").unwrap();
        assert_eq!(a.to_string(), "3*x1^2*x2 - 1/2*x2 + 7");
        let b = Polynomial::parse(&r, "(x2 - x1)*x2").unwrap();
        assert_eq!(b.to_string(), "-x1*x2 + x2^2");
        let c = Polynomial::parse(&r, "-(x1 + 1)^2").unwrap();
        assert_eq!(c.to_string(), "-x1^2 - 2*x1 - 1");
    }

    #[test]
    fn errors_carry_positions() {
        let r = PolyRing::new(["x"]).unwrap();
        match Polynomial::parse(&r, "x +\n  z") {
            Err(Error::Syntax { line, col, .. }) => assert_eq!((line, col), (2, 3)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(Polynomial::parse(&r, "x / x").is_err());
        assert!(Polynomial::parse(&r, "x x").is_err());
    }
}
