//! Recursive-descent parser for cyclotomic expressions.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' int]
//! atom   := int ['/' int] | 'z(' int ')' | 'i' | 'sqrt2' | '(' expr ')' | '-' factor
//! ```

use num_bigint::BigInt;

use super::{Cyclotomic, Rational};
use crate::error::Error;

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in `{}`", self.pos, self.src))
    }

    pub(crate) fn integer(&mut self) -> Result<BigInt, Error> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek_raw() {
            if c.is_ascii_digit() {
                self.pos += 1;
            } else {
                break;
            }
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.error("bad integer"))
    }

    pub(crate) fn small_integer(&mut self) -> Result<i64, Error> {
        let neg = self.eat('-');
        let v = self.integer()?;
        let v: i64 = v.try_into().map_err(|_| self.error("integer out of range"))?;
        Ok(if neg { -v } else { v })
    }

    pub(crate) fn identifier(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        let mut first = true;
        while let Some(c) = self.peek_raw() {
            if c.is_ascii_alphabetic() || c == '_' || (!first && c.is_ascii_digit()) {
                self.pos += 1;
                first = false;
            } else {
                break;
            }
        }
        (start != self.pos).then(|| &self.src[start..self.pos])
    }

    pub(crate) fn save(&self) -> usize {
        self.pos
    }

    pub(crate) fn restore(&mut self, pos: usize) {
        self.pos = pos;
    }
}

pub(crate) fn parse_cyclotomic(s: &str) -> Result<Cyclotomic, Error> {
    let mut cur = Cursor::new(s);
    let v = expr(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.error("trailing input"));
    }
    Ok(v)
}

pub(crate) fn expr(cur: &mut Cursor<'_>) -> Result<Cyclotomic, Error> {
    let mut acc = if cur.eat('-') { -term(cur)? } else { term(cur)? };
    loop {
        if cur.eat('+') {
            acc = &acc + &term(cur)?;
        } else if cur.eat('-') {
            acc = &acc - &term(cur)?;
        } else {
            return Ok(acc);
        }
    }
}

fn term(cur: &mut Cursor<'_>) -> Result<Cyclotomic, Error> {
    let mut acc = factor(cur)?;
    while cur.eat('*') {
        acc = &acc * &factor(cur)?;
    }
    Ok(acc)
}

fn factor(cur: &mut Cursor<'_>) -> Result<Cyclotomic, Error> {
    let base = atom(cur)?;
    if cur.eat('^') {
        let e = cur.small_integer()?;
        return base.pow(e);
    }
    Ok(base)
}

/// A scalar literal: integer, fraction, root of unity or parenthesized
/// expression. Shared with the polynomial parser.
pub(crate) fn atom(cur: &mut Cursor<'_>) -> Result<Cyclotomic, Error> {
    if cur.eat('-') {
        return Ok(-factor(cur)?);
    }
    if cur.eat('(') {
        let v = expr(cur)?;
        if !cur.eat(')') {
            return Err(cur.error("expected `)`"));
        }
        return Ok(v);
    }
    if matches!(cur.peek(), Some(c) if c.is_ascii_digit()) {
        let n = cur.integer()?;
        let save = cur.save();
        if cur.eat('/') {
            if matches!(cur.peek(), Some(c) if c.is_ascii_digit()) {
                let d = cur.integer()?;
                return Ok(Cyclotomic::from_rational(Rational::from_bigints(n, d)?));
            }
            cur.restore(save);
        }
        return Ok(Cyclotomic::from_rational(Rational::from(n)));
    }
    if cur.eat_str("z(") {
        let n = cur.small_integer()?;
        if !cur.eat(')') {
            return Err(cur.error("expected `)`"));
        }
        let n = u32::try_from(n).map_err(|_| cur.error("bad root order"))?;
        return Cyclotomic::root(n, 1);
    }
    let save = cur.save();
    match cur.identifier() {
        Some("i") => Ok(Cyclotomic::i()),
        Some("sqrt2") => Ok(Cyclotomic::sqrt2()),
        _ => {
            cur.restore(save);
            Err(cur.error("expected scalar"))
        }
    }
}
