//! Expressions over the tensor algebra and over the coefficient field.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('-' | '+') unary | power
//! power := atom ('^' integer)?
//! atom  := integer | identifier | 'X[' label ']' | '(' expr ')'
//! ```
//!
//! Division is only allowed by scalars. The identifier `q` is the primitive
//! root of a cyclotomic field; over the rationals every identifier is an
//! indeterminate of the rational function field.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exact::{Cyclotomic, Field, Scalar};
use crate::freealg::FreeElement;
use crate::hopf::HopfAlgebra;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Gen(String),
    Op(char),
    End,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn tokenize(src: &str) -> Result<Vec<Spanned>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        let push = |out: &mut Vec<Spanned>, tok| out.push(Spanned { tok, line: l0, column: c0 });
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            push(&mut out, Tok::Num(s.parse().expect("digits")));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let name: String = chars[start..i].iter().collect();
            col += i - start;
            if name == "X" && chars.get(i) == Some(&'[') {
                let open = i;
                i += 1;
                while i < chars.len() && chars[i] != ']' {
                    if chars[i] == '\n' {
                        return Err(syntax(l0, c0, "unterminated generator label"));
                    }
                    i += 1;
                }
                if i == chars.len() {
                    return Err(syntax(l0, c0, "unterminated generator label"));
                }
                let label: String = chars[open + 1..i].iter().collect();
                i += 1;
                col += i - open;
                push(&mut out, Tok::Gen(label.trim().to_string()));
            } else {
                push(&mut out, Tok::Ident(name));
            }
            continue;
        }
        if "+-*/^()".contains(c) {
            i += 1;
            col += 1;
            push(&mut out, Tok::Op(c));
            continue;
        }
        return Err(syntax(l0, c0, format!("unexpected character `{c}`")));
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        column: col,
    });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    field: &'a Field,
    labels: &'a [String],
    limit: usize,
}

impl Parser<'_> {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn here(&self, message: impl Into<String>) -> Error {
        let t = self.peek();
        syntax(t.line, t.column, message)
    }

    fn n(&self) -> usize {
        self.labels.len()
    }

    fn constant(&self, s: Scalar) -> FreeElement {
        FreeElement::constant(self.n(), s).with_limit(self.limit)
    }

    fn expr(&mut self) -> Result<FreeElement> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Op('+') => {
                    self.next();
                    acc = acc.add(&self.term()?);
                }
                Tok::Op('-') => {
                    self.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<FreeElement> {
        let mut acc = self.unary()?;
        loop {
            match self.peek().tok {
                Tok::Op('*') => {
                    self.next();
                    let rhs = self.unary()?;
                    acc = acc.mul(&rhs)?;
                }
                Tok::Op('/') => {
                    let at = self.next();
                    let rhs = self.unary()?;
                    let d = rhs
                        .as_constant()
                        .ok_or_else(|| syntax(at.line, at.column, "division by a non-scalar"))?;
                    let inv = d.inv().map_err(|_| syntax(at.line, at.column, "division by zero"))?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<FreeElement> {
        match self.peek().tok {
            Tok::Op('-') => {
                self.next();
                Ok(self.unary()?.neg())
            }
            Tok::Op('+') => {
                self.next();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<FreeElement> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Op('^') {
            return Ok(base);
        }
        self.next();
        let t = self.next();
        let Tok::Num(e) = t.tok else {
            return Err(syntax(t.line, t.column, "expected a nonnegative integer exponent"));
        };
        let e: u32 = e
            .try_into()
            .map_err(|_| syntax(t.line, t.column, "exponent too large"))?;
        if let Some(c) = base.as_constant() {
            return Ok(self.constant(c.pow(e)));
        }
        base.pow(e)
    }

    fn atom(&mut self) -> Result<FreeElement> {
        let t = self.next();
        match t.tok {
            Tok::Num(v) => Ok(self.constant(self.field.rational(BigRational::from_integer(v)))),
            Tok::Ident(name) => {
                let s = identifier(&name, self.field).map_err(|m| syntax(t.line, t.column, m))?;
                Ok(self.constant(s))
            }
            Tok::Gen(label) => {
                let i = self
                    .labels
                    .iter()
                    .position(|l| *l == label)
                    .ok_or(Error::UnknownLabel(label))?;
                Ok(FreeElement::basis_generator(self.n(), i).with_limit(self.limit))
            }
            Tok::Op('(') => {
                let inner = self.expr()?;
                if self.peek().tok != Tok::Op(')') {
                    return Err(self.here("expected `)`"));
                }
                self.next();
                Ok(inner)
            }
            Tok::End => Err(syntax(t.line, t.column, "unexpected end of input")),
            Tok::Op(c) => Err(syntax(t.line, t.column, format!("unexpected `{c}`"))),
        }
    }
}

fn identifier(name: &str, field: &Field) -> std::result::Result<Scalar, String> {
    match field {
        Field::Cyclotomic(k) if name == "q" => Ok(Scalar::Cyc(Cyclotomic::generator(k))),
        Field::Rationals => Ok(Scalar::var(name)),
        _ => Err(format!("unknown identifier `{name}` over {field}")),
    }
}

fn run(src: &str, field: &Field, labels: &[String], limit: usize) -> Result<FreeElement> {
    let mut p = Parser {
        toks: tokenize(src)?,
        pos: 0,
        field,
        labels,
        limit,
    };
    let out = p.expr()?;
    if p.peek().tok != Tok::End {
        return Err(p.here("unexpected trailing input"));
    }
    Ok(out)
}

/// Parses an element of `T(X_H)`; generators are written `X[label]`.
pub fn parse_expression(src: &str, h: &HopfAlgebra) -> Result<FreeElement> {
    parse_expression_with_limit(src, h, crate::freealg::DEFAULT_DEGREE_LIMIT)
}

pub fn parse_expression_with_limit(src: &str, h: &HopfAlgebra, limit: usize) -> Result<FreeElement> {
    run(src, &h.field, h.labels(), limit)
}

/// Parses a scalar such as `3/2`, `q^2 + 1` or `a*b - 4`.
pub fn parse_scalar(src: &str, field: &Field) -> Result<Scalar> {
    let e = run(src, field, &[], 0)?;
    Ok(e.as_constant().expect("no generators without labels"))
}
