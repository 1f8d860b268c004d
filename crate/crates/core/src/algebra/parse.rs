//! Literal syntax for rational functions, e.g. `1/(z*zeta - 2) + 3/4*i`.
//!
//! Grammar: numbers, `z`, `zeta`, `X` (the main variable), `i`, `+ - * / ^`
//! with integer exponents, parentheses, and juxtaposition for products.

use super::rational::BivarRational;
use super::ring::Field;
use super::scalar::Scalar;
use super::xpoly::{MainVar, XFraction, XPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            out.push(Tok::Num(chars[start..k].iter().collect()));
        } else if c.is_ascii_alphabetic() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_alphabetic() {
                k += 1;
            }
            out.push(Tok::Ident(chars[start..k].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            k += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser<'a, T> {
    toks: Vec<Tok>,
    pos: usize,
    ident: &'a dyn Fn(&str) -> Option<T>,
    constant: &'a dyn Fn(Scalar) -> T,
}

impl<T: Field> Parser<'_, T> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<T> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('('))
        )
    }

    fn term(&mut self) -> Result<T> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc * self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                acc = acc.checked_div(&d)?;
            } else if self.starts_atom() {
                acc = acc * self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<T> {
        if self.eat('-') {
            Ok(-self.unary()?)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<T> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let e: u32 = match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                n.parse()
                    .map_err(|_| Error::Parse(format!("exponent {n} too large")))?
            }
            _ => return Err(Error::Parse("expected integer exponent".into())),
        };
        let p = base.pow(e);
        if neg {
            p.inv()
        } else {
            Ok(p)
        }
    }

    fn atom(&mut self) -> Result<T> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let s: Scalar = n.parse()?;
                Ok((self.constant)(s))
            }
            Some(Tok::Ident(id)) => {
                self.pos += 1;
                if id == "i" {
                    return Ok((self.constant)(Scalar::i()));
                }
                (self.ident)(&id).ok_or_else(|| Error::Parse(format!("unknown identifier '{id}'")))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(v)
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

fn parse_with<T: Field>(
    src: &str,
    ident: &dyn Fn(&str) -> Option<T>,
    constant: &dyn Fn(Scalar) -> T,
) -> Result<T> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
        ident,
        constant,
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {:?}",
            p.toks[p.pos]
        )));
    }
    Ok(v)
}

/// Parses a rational-function literal; `X` expands to the given main variable.
pub fn parse_rational_function(src: &str, var: MainVar) -> Result<BivarRational> {
    let x = var.as_bivar();
    parse_with(
        src,
        &|id| match id {
            "z" => Some(BivarRational::z()),
            "zeta" => Some(BivarRational::zeta()),
            "X" => Some(x.clone()),
            _ => None,
        },
        &BivarRational::constant,
    )
}

/// Parses a literal as a rational function of the formal variable `X`.
///
/// With `X = z` the letters `z` and `X` both denote the main variable and
/// `zeta` is a coefficient; with `X = z*zeta` both `z` and `zeta` are
/// coefficients and only `X` is formal.
pub fn parse_x_fraction(src: &str, var: MainVar) -> Result<XFraction<BivarRational>> {
    let c = |r: BivarRational| XFraction::constant(r);
    parse_with(
        src,
        &|id| match (id, var) {
            ("X", _) | ("z", MainVar::Z) => Some(XFraction {
                num: XPoly::x(),
                den: XPoly::one(),
            }),
            ("z", MainVar::ZZeta) => Some(c(BivarRational::z())),
            ("zeta", _) => Some(c(BivarRational::zeta())),
            _ => None,
        },
        &|s| c(BivarRational::constant(s)),
    )
}
