//! Text grammar for Laurent polynomials.
//!
//! Accepts sums and products of integers, variables and parenthesized groups,
//! e.g. `t - 1 + t^-1`, `-(t1-1)(t2-1)`, `t1^(-1/2)*t2^(1/2)`.

use std::iter::Peekable;
use std::str::Chars;
use std::str::FromStr;

use super::laurent::{Exponent, Laurent};
use crate::error::{Error, Result};

struct Parser<'a> {
    chars: Peekable<Chars<'a>>,
}

fn err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse(msg.into()))
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> Option<char> {
        while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
            self.chars.next();
        }
        self.chars.peek().copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.chars.next();
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<i64> {
        let mut digits = String::new();
        self.peek();
        while let Some(&c) = self.chars.peek() {
            if c.is_ascii_digit() {
                digits.push(c);
                self.chars.next();
            } else {
                break;
            }
        }
        if digits.is_empty() {
            return err("expected integer");
        }
        digits.parse().or_else(|_| err(format!("integer out of range: {digits}")))
    }

    fn expr<E: Exponent>(&mut self) -> Result<Laurent<E>> {
        let mut acc = Laurent::zero();
        let mut sign = if self.eat('-') {
            -1
        } else {
            self.eat('+');
            1
        };
        loop {
            let t = self.term::<E>()?;
            acc = &acc + &t.scale(sign);
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<E: Exponent>(&mut self) -> Result<Laurent<E>> {
        let mut acc = self.factor::<E>()?;
        loop {
            if self.eat('*') || matches!(self.peek(), Some('(') | Some('t')) {
                acc = &acc * &self.factor::<E>()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor<E: Exponent>(&mut self) -> Result<Laurent<E>> {
        match self.peek() {
            Some('(') => {
                self.chars.next();
                let inner = self.expr::<E>()?;
                if !self.eat(')') {
                    return err("unbalanced parenthesis");
                }
                if self.eat('^') {
                    let (num, den) = self.exponent()?;
                    if den != 1 || num < 0 {
                        return err("groups take only nonnegative integer powers");
                    }
                    let mut out = Laurent::constant(1);
                    for _ in 0..num {
                        out = &out * &inner;
                    }
                    return Ok(out);
                }
                Ok(inner)
            }
            Some('t') => {
                self.chars.next();
                let mut name = String::from("t");
                if let Some(&c) = self.chars.peek() {
                    if c.is_ascii_digit() {
                        name.push(c);
                        self.chars.next();
                    }
                }
                let Some(slot) = E::VARS.iter().position(|v| *v == name) else {
                    return err(format!("unknown variable {name}, expected one of {:?}", E::VARS));
                };
                let doubled = if self.eat('^') {
                    let (num, den) = self.exponent()?;
                    match den {
                        1 => 2 * num,
                        2 => num,
                        _ => return err("exponents must be integers or halves"),
                    }
                } else {
                    2
                };
                let mut parts = vec![0; E::VARS.len()];
                parts[slot] = doubled;
                Ok(Laurent::monomial(1, E::from_doubled(&parts)))
            }
            Some(c) if c.is_ascii_digit() => Ok(Laurent::constant(self.integer()?)),
            Some(c) => err(format!("unexpected character '{c}'")),
            None => err("unexpected end of input"),
        }
    }

    fn exponent(&mut self) -> Result<(i64, i64)> {
        let paren = self.eat('(');
        let neg = self.eat('-');
        let mut num = self.integer()?;
        if neg {
            num = -num;
        }
        let mut den = 1;
        if paren {
            if self.eat('/') {
                den = self.integer()?;
            }
            if !self.eat(')') {
                return err("unbalanced parenthesis in exponent");
            }
        }
        if den == 0 {
            return err("zero denominator");
        }
        if num % den == 0 {
            Ok((num / den, 1))
        } else {
            Ok((num, den))
        }
    }
}

/// Parse a polynomial in the variables of `E` (`t`, or `t1` and `t2`).
pub fn parse<E: Exponent>(s: &str) -> Result<Laurent<E>> {
    let mut p = Parser { chars: s.chars().peekable() };
    let out = p.expr::<E>()?;
    match p.peek() {
        None => Ok(out),
        Some(c) => err(format!("trailing input at '{c}'")),
    }
}

impl<E: Exponent> FromStr for Laurent<E> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}
