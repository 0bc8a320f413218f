//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar: integer literals, symbols `[a-zA-Z][a-zA-Z0-9_]*`, `*`, `+`,
//! `-`, `^` with nonnegative integer exponents, and parentheses.
//! Whitespace-insensitive. Errors carry line and column.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Sym(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

fn tokenize(src: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, col);
        let bump = |c: char, line: &mut usize, col: &mut usize| {
            if c == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
        };
        match c {
            c if c.is_whitespace() => {
                chars.next();
                bump(c, &mut line, &mut col);
            }
            '0'..='9' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        s.push(d);
                        chars.next();
                        bump(d, &mut line, &mut col);
                    } else {
                        break;
                    }
                }
                let n: BigInt = s.parse().expect("digits parse");
                out.push(Spanned { tok: Tok::Int(n), line: tl, col: tc });
            }
            c if c.is_ascii_alphabetic() => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        s.push(d);
                        chars.next();
                        bump(d, &mut line, &mut col);
                    } else {
                        break;
                    }
                }
                out.push(Spanned { tok: Tok::Sym(s), line: tl, col: tc });
            }
            '+' | '-' | '*' | '^' | '(' | ')' => {
                chars.next();
                bump(c, &mut line, &mut col);
                let tok = match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    _ => Tok::RParen,
                };
                out.push(Spanned { tok, line: tl, col: tc });
            }
            other => return Err(err(tl, tc, format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn end_pos(&self) -> (usize, usize) {
        self.toks
            .last()
            .map(|s| (s.line, s.col + 1))
            .unwrap_or((1, 1))
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        if let Some(s) = self.peek() {
            match s.tok {
                Tok::Minus => {
                    self.pos += 1;
                    negate = true;
                }
                Tok::Plus => {
                    self.pos += 1;
                }
                _ => {}
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        while let Some(s) = self.peek() {
            match s.tok {
                Tok::Plus => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Tok::Minus => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while let Some(s) = self.peek() {
            if s.tok == Tok::Star {
                self.pos += 1;
                let f = self.factor()?;
                acc = acc.mul(&f);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(s) = self.peek() {
            if s.tok == Tok::Caret {
                self.pos += 1;
                let Some(next) = self.peek().cloned() else {
                    let (l, c) = self.end_pos();
                    return Err(err(l, c, "expected exponent after ^"));
                };
                let Tok::Int(n) = next.tok else {
                    return Err(err(next.line, next.col, "malformed exponent: expected a nonnegative integer"));
                };
                self.pos += 1;
                let e: u32 = n
                    .to_string()
                    .parse()
                    .map_err(|_| err(next.line, next.col, "malformed exponent: too large"))?;
                return Ok(base.pow(e));
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let Some(s) = self.peek().cloned() else {
            let (l, c) = self.end_pos();
            return Err(err(l, c, "unexpected end of input"));
        };
        match s.tok {
            Tok::Int(n) => {
                self.pos += 1;
                Ok(Polynomial::constant(n))
            }
            Tok::Sym(name) => {
                self.pos += 1;
                Ok(Polynomial::var(&name))
            }
            Tok::LParen => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(t) if t.tok == Tok::RParen => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    Some(t) => Err(err(t.line, t.col, "expected )")),
                    None => {
                        let (l, c) = self.end_pos();
                        Err(err(l, c, "expected )"))
                    }
                }
            }
            _ => Err(err(s.line, s.col, "expected a number, symbol, or (")),
        }
    }
}

/// Parse a polynomial expression.
pub fn parse_poly(src: &str) -> Result<Polynomial> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks, pos: 0 };
    let poly = p.expr()?;
    if let Some(s) = p.peek() {
        return Err(err(s.line, s.col, "trailing input after expression"));
    }
    Ok(poly)
}
