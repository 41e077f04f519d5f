//! Text parser for polynomial expressions.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr    := ['-'] term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := primary ['^' uint]
//! primary := number | variable | '(' expr ')'
//! number  := uint ['/' uint]          (the '/' form is what the printer
//!                                      emits for non-integer coefficients)
//! variable:= 'x' uint                 (index must be < nvars)
//! ```
//!
//! Implicit multiplication is rejected. Errors carry the byte offset at
//! which parsing failed. Round trip: `parse_poly(p.to_string(), n) == p`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::Zero;

use crate::poly::{Poly, Rational};
use crate::Error;

#[derive(Debug, Clone, thiserror::Error)]
#[error("parse error at byte {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
    nvars: usize,
}

/// Parse `text` into the canonical expanded sparse form over `nvars`
/// variables `x0..x{nvars-1}`.
pub fn parse_poly(text: &str, nvars: usize) -> Result<Poly, ParseError> {
    let mut p = Parser {
        text: text.as_bytes(),
        pos: 0,
        nvars,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos < p.text.len() {
        return Err(p.err_here(
            "unexpected trailing input (implicit multiplication is not supported; write `*`)",
        ));
    }
    Ok(poly)
}

impl<'a> Parser<'a> {
    fn err_here(&self, message: &str) -> ParseError {
        ParseError {
            pos: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.bump();
                -&self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.factor()?;
        while let Some(b'*') = self.peek() {
            self.bump();
            let rhs = self.factor()?;
            acc = acc.checked_mul(&rhs).map_err(|e| self.cap_err(e))?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, ParseError> {
        let base = self.primary()?;
        if let Some(b'^') = self.peek() {
            self.bump();
            let at = self.pos;
            let e = self.uint()?;
            let e: u32 = e.try_into().map_err(|_| ParseError {
                pos: at,
                message: "exponent too large".into(),
            })?;
            return base.checked_pow(e).map_err(|e| self.cap_err(e));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let inner = self.expr()?;
                match self.peek() {
                    Some(b')') => {
                        self.bump();
                        Ok(inner)
                    }
                    _ => Err(self.err_here("expected `)`")),
                }
            }
            Some(b'x') => {
                self.pos += 1;
                let at = self.pos;
                let idx = self.uint()?;
                if idx >= self.nvars as u64 {
                    return Err(ParseError {
                        pos: at,
                        message: format!(
                            "variable index {idx} out of range (nvars = {})",
                            self.nvars
                        ),
                    });
                }
                Ok(Poly::variable(self.nvars, idx as usize))
            }
            Some(c) if c.is_ascii_digit() => {
                let numer = self.bigint()?;
                if let Some(b'/') = self.peek() {
                    self.bump();
                    let at = self.pos;
                    let denom = self.bigint()?;
                    if denom.is_zero() {
                        return Err(ParseError {
                            pos: at,
                            message: "zero denominator".into(),
                        });
                    }
                    return Ok(Poly::constant(self.nvars, BigRational::new(numer, denom)));
                }
                Ok(Poly::constant(self.nvars, Rational::from_integer(numer)))
            }
            _ => Err(self.err_here("expected a number, a variable `x<i>`, or `(`")),
        }
    }

    fn uint(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err_here("expected digits"));
        }
        std::str::from_utf8(&self.text[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|_| ParseError {
                pos: start,
                message: "integer too large".into(),
            })
    }

    fn bigint(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err_here("expected digits"));
        }
        Ok(std::str::from_utf8(&self.text[start..self.pos])
            .unwrap()
            .parse::<BigInt>()
            .unwrap())
    }

    fn cap_err(&self, e: Error) -> ParseError {
        ParseError {
            pos: self.pos,
            message: e.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;
    use num::traits::One;

    #[test]
    fn parses_fermat_quartic() {
        let f = parse_poly("x0^4+x1^4+x2^4", 3).unwrap();
        assert_eq!(f.num_terms(), 3);
        assert_eq!(f.homogeneous_degree().unwrap(), 4);
        assert_eq!(f.to_string(), "x0^4+x1^4+x2^4");
    }

    #[test]
    fn parses_zero_and_constants() {
        assert!(parse_poly("0", 3).unwrap().is_zero());
        let c = parse_poly("5/10", 2).unwrap();
        assert_eq!(c.constant_value(), crate::poly::rat(1, 2));
    }

    #[test]
    fn expands_binomial_square() {
        let f = parse_poly("(x0+x1)^2", 2).unwrap();
        assert_eq!(f, parse_poly("x0^2+2*x0*x1+x1^2", 2).unwrap());
    }

    #[test]
    fn reports_position_of_errors() {
        let e = parse_poly("x0^4+ x9^2", 3).unwrap_err();
        assert_eq!(e.pos, 7);
        assert!(e.message.contains("out of range"));

        let e = parse_poly("x0 x1", 2).unwrap_err();
        assert!(e.message.contains("implicit multiplication"));

        assert!(parse_poly("x0^", 2).is_err());
        assert!(parse_poly("(x0+x1", 2).is_err());
        assert!(parse_poly("1/0", 2).is_err());
    }

    #[test]
    fn unary_minus_binds_to_whole_term() {
        let f = parse_poly("-x0^2+x1^2", 2).unwrap();
        assert_eq!(
            &f + &parse_poly("x0^2", 2).unwrap(),
            parse_poly("x1^2", 2).unwrap()
        );
        assert_eq!(f.to_string(), "-x0^2+x1^2");
    }

    #[test]
    fn print_parse_round_trip_on_random_polys() {
        // Seeded LCG over small coefficient/exponent space; includes
        // fractional coefficients, which print with `/`.
        let mut state: u64 = 0x9e3779b97f4a7c15;
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (state >> 33) as i64
        };
        for _ in 0..200 {
            let nvars = 1 + (next() % 4).unsigned_abs() as usize;
            let mut f = Poly::zero(nvars);
            for _ in 0..(1 + next().rem_euclid(6)) {
                let exps: Vec<u16> = (0..nvars).map(|_| next().rem_euclid(5) as u16).collect();
                let num = next().rem_euclid(21) - 10;
                let den = 1 + next().rem_euclid(9);
                f.add_term(
                    Monomial::new(exps),
                    BigRational::new(BigInt::from(num), BigInt::from(den)),
                );
            }
            let printed = f.to_string();
            let reparsed = parse_poly(&printed, nvars).unwrap();
            assert_eq!(reparsed, f, "round trip failed for `{printed}`");
        }
        let one = Poly::one(2);
        assert!(one.constant_value().is_one());
        assert_eq!(parse_poly(&one.to_string(), 2).unwrap(), one);
    }
}
