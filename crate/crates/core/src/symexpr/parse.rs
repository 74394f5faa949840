//! Recursive-descent reader for the scalar expression grammar:
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('+' | '-') unary | power
//! power := atom ('^' integer)?
//! atom  := integer | ident | func '(' expr ')' | '(' expr ')'
//! func  := exp | sin | cos | sinh | cosh
//! ```

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{Context, Rational, Scalar, Symbol};
use crate::error::ParseError;

/// Parses `text` against the symbols declared in `ctx`.
pub fn parse_scalar(text: &str, ctx: &Context) -> Result<Scalar, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ctx,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(ParseError::new(p.pos, "unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ctx: &'a Context,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<(), ParseError> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError::new(
                self.pos,
                format!("expected `{}`", char::from(b)),
            ))
        }
    }

    fn expr(&mut self) -> Result<Scalar, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc += self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc -= self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let divisor = self.unary()?;
                    if divisor.is_zero() {
                        return Err(ParseError::new(at, "division by zero"));
                    }
                    let inv = divisor
                        .try_inverse()
                        .map_err(|_| ParseError::new(at, "divisor is not a unit"))?;
                    acc = &acc * &inv;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar, ParseError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Scalar, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = self.pos;
            match self.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let n = self.integer()?;
                    let n = u32::try_from(n)
                        .map_err(|_| ParseError::new(at, "exponent too large"))?;
                    Ok(base.pow(n))
                }
                _ => Err(ParseError::new(
                    at,
                    "exponent must be a non-negative integer literal",
                )),
            }
        } else {
            Ok(base)
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let digits = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits
            .parse::<BigInt>()
            .map_err(|_| ParseError::new(start, "expected an integer"))
    }

    fn ident(&mut self) -> &str {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        core::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier")
    }

    fn atom(&mut self) -> Result<Scalar, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b) if b.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Scalar::constant(Rational::from_integer(n)))
            }
            Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                let start = self.pos;
                let name = alloc::string::String::from(self.ident());
                let is_call = self.peek() == Some(b'(');
                match name.as_str() {
                    "exp" | "sin" | "cos" | "sinh" | "cosh" if is_call => {
                        self.pos += 1;
                        let arg_at = self.pos;
                        let arg = self.expr()?;
                        self.expect(b')')?;
                        apply_function(&name, &arg, arg_at)
                    }
                    _ => match self.ctx.get(&name) {
                        Some(sym) => Ok(Scalar::var(sym)),
                        None => Err(ParseError::new(
                            start,
                            format!("undeclared identifier `{name}`"),
                        )),
                    },
                }
            }
            Some(c) => Err(ParseError::new(
                self.pos,
                format!("unexpected character `{}`", char::from(c)),
            )),
            None => Err(ParseError::new(self.pos, "unexpected end of input")),
        }
    }
}

fn apply_function(name: &str, arg: &Scalar, at: usize) -> Result<Scalar, ParseError> {
    let lin: Vec<(Symbol, i64)> = arg.as_integer_linear().ok_or_else(|| {
        ParseError::new(
            at,
            if name == "exp" {
                "non-integer exponent of e: argument must be an integer combination of symbols"
            } else {
                "function argument must be an integer combination of symbols"
            },
        )
    })?;
    match name {
        "exp" => Ok(Scalar::exp_linear(&lin)),
        "sinh" | "cosh" => {
            let neg: Vec<(Symbol, i64)> = lin.iter().map(|(s, k)| (s.clone(), -k)).collect();
            let (a, b) = (Scalar::exp_linear(&lin), Scalar::exp_linear(&neg));
            let half = super::rational(1, 2);
            Ok(if name == "sinh" { a - b } else { a + b }.scale(&half))
        }
        _ => match lin.as_slice() {
            [] => Ok(if name == "sin" {
                Scalar::zero()
            } else {
                Scalar::one()
            }),
            [(sym, k)] => Ok(if name == "sin" {
                Scalar::sin(sym, *k)
            } else {
                Scalar::cos(sym, *k)
            }),
            _ => Err(ParseError::new(
                at,
                "trigonometric argument must be an integer multiple of one symbol",
            )),
        },
    }
}
