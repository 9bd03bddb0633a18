//! Parser for rational expressions in `x1..xn`.
//!
//! Grammar: `+ - * / ^`, parentheses, integer literals and variables
//! `x1`, `x2`, ... Exponents are (possibly negative) integer literals.
//! Unary minus binds looser than `^`, so `-x1^2` is `-(x1^2)`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::{Error, QRationalFn};

/// Parse into the ring with `nvars` variables.
pub fn parse_expr(src: &str, nvars: usize) -> Result<QRationalFn, Error> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        nvars,
    };
    let r = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(r)
}

/// Highest variable index mentioned (1-based), or 0 if none.
pub fn max_variable(src: &str) -> usize {
    let b = src.as_bytes();
    let mut best = 0;
    let mut i = 0;
    while i < b.len() {
        if b[i] == b'x' {
            let start = i + 1;
            let mut j = start;
            while j < b.len() && b[j].is_ascii_digit() {
                j += 1;
            }
            if let Ok(v) = src[start..j].parse::<usize>() {
                best = best.max(v);
            }
            i = j;
        } else {
            i += 1;
        }
    }
    best
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<QRationalFn, Error> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<QRationalFn, Error> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                let d = self.unary()?;
                acc = acc.checked_div(&d)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<QRationalFn, Error> {
        if self.eat(b'-') {
            return Ok(-&self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<QRationalFn, Error> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let neg = self.eat(b'-');
        let digits = self
            .digits()
            .ok_or_else(|| self.err("expected integer exponent"))?;
        let e: i32 = digits.parse().map_err(|_| self.err("exponent too large"))?;
        base.pow(if neg { -e } else { e })
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn atom(&mut self) -> Result<QRationalFn, Error> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let r = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(r)
            }
            Some(b'x') => {
                self.pos += 1;
                let d = self
                    .digits()
                    .ok_or_else(|| self.err("expected variable index"))?;
                let i: usize = d.parse().map_err(|_| self.err("bad variable index"))?;
                if i == 0 || i > self.nvars {
                    return Err(self.err(&format!("variable x{i} outside x1..x{}", self.nvars)));
                }
                Ok(QRationalFn::var(self.nvars, i - 1))
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits().expect("peeked a digit");
                let v: BigInt = d.parse().expect("digits parse as integer");
                Ok(QRationalFn::from_poly(crate::QPoly::constant(
                    self.nvars,
                    BigRational::from_integer(v),
                )))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_markov_invariant() {
        let t = parse_expr("(x1^2+x2^2+x3^2)/(x1*x2*x3)", 3).unwrap();
        assert_eq!(t.to_string(), "(x1^2 + x2^2 + x3^2)/(x1*x2*x3)");
    }

    #[test]
    fn precedence_and_unary_minus() {
        let a = parse_expr("-x1^2 + 2*x2", 2).unwrap();
        let b = parse_expr("2*x2 - (x1*x1)", 2).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn negative_exponent_inverts() {
        assert_eq!(
            parse_expr("x1^-1", 1).unwrap(),
            parse_expr("1/x1", 1).unwrap()
        );
    }

    #[test]
    fn rejects_out_of_range_variable() {
        assert!(parse_expr("x3", 2).is_err());
        assert!(parse_expr("x1 +", 2).is_err());
        assert_eq!(max_variable("x1*x12 + x3"), 12);
    }
}
