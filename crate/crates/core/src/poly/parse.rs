//! Text grammar for polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | ('X' | 'x') integer | '(' expr ')'
//! ```
//!
//! Whitespace is ignored. Juxtaposition (`2X1`) is rejected.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

use super::polynomial::{Polynomial, Ring, RingKind};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, column);
        let err = |message: String| Error::Parse {
            line: l0,
            column: c0,
            message,
        };
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Spanned { tok, line, column });
            i += 1;
            column += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            column += i - start;
            out.push(Spanned {
                tok: Tok::Int(digits.parse().expect("digits")),
                line: l0,
                column: c0,
            });
            continue;
        }
        if c == 'X' || c == 'x' {
            let start = i + 1;
            i = start;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i == start {
                return Err(err("variable name needs an index, e.g. X1".into()));
            }
            let digits: String = chars[start..i].iter().collect();
            let idx = digits
                .parse::<usize>()
                .map_err(|_| err(format!("variable index {digits} is too large")))?;
            column += i - start + 1;
            out.push(Spanned {
                tok: Tok::Var(idx),
                line: l0,
                column: c0,
            });
            continue;
        }
        return Err(err(format!("unexpected character {c:?}")));
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser<'a> {
    ring: Ring,
    toks: &'a [Spanned],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, at: &Spanned, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            line: at.line,
            column: at.column,
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
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

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while self.peek().tok == Tok::Star {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek().tok {
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

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let t = self.bump();
        match t.tok.clone() {
            Tok::Int(e) => match u16::try_from(e) {
                Ok(e) => Ok(base.pow(e as u32)),
                Err(_) => self.error(&t, "exponent is too large"),
            },
            _ => self.error(&t, "expected a non-negative integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let t = self.bump();
        match t.tok.clone() {
            Tok::Int(num) => {
                let den = if self.peek().tok == Tok::Slash {
                    self.bump();
                    let d = self.bump();
                    match d.tok {
                        Tok::Int(d) if d != BigInt::from(0) => d,
                        Tok::Int(_) => return self.error(&d, "zero denominator"),
                        _ => return self.error(&d, "expected an integer denominator"),
                    }
                } else {
                    BigInt::from(1)
                };
                let c = self
                    .ring
                    .field
                    .from_rational(&BigRational::new(num, den))
                    .or_else(|e| self.error(&t, e.to_string()))?;
                Ok(self.ring.constant(c))
            }
            Tok::Var(i) => {
                if i >= self.ring.nvars {
                    return self.error(&t, format!("X{i} is not a variable of this ring"));
                }
                if i == 0 && self.ring.kind == RingKind::Affine {
                    return self.error(&t, "X0 is not available in the affine chart");
                }
                Ok(self.ring.var(i))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.bump();
                if close.tok != Tok::RParen {
                    return self.error(&close, "expected ')'");
                }
                Ok(inner)
            }
            Tok::End => self.error(&t, "unexpected end of input"),
            _ => self.error(&t, "expected a number, a variable or '('"),
        }
    }
}

/// Parses a polynomial in `ring`.
pub fn parse_polynomial(ring: Ring, text: &str) -> Result<Polynomial> {
    let toks = lex(text)?;
    let mut p = Parser {
        ring,
        toks: &toks,
        pos: 0,
    };
    let out = p.expr()?;
    let t = p.peek().clone();
    if t.tok != Tok::End {
        return p.error(&t, "expected an operator (implicit multiplication is not allowed)");
    }
    Ok(out)
}
