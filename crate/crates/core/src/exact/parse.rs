//! Parser for the human-readable rational-function syntax, e.g.
//! `"(q^2 - 1)/(q + 1)"`, `"3/2*q^2 + 1"`, `"q^-1"`.
//!
//! The grammar is a small arithmetic expression language over one variable;
//! it accepts everything `Display` produces. Sizes are capped so hostile
//! inputs cannot blow up memory or time.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{ExactError, LaurentPolynomial, RationalFunction, Var};

const MAX_DEPTH: usize = 64;
const MAX_TERMS: usize = 4096;
const MAX_MONOMIAL_EXP: i64 = 1_000_000;
const MAX_GENERAL_EXP: i64 = 64;

pub fn parse_rational_function(var: Var, input: &str) -> Result<RationalFunction, ExactError> {
    let mut p = Parser {
        var,
        bytes: input.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let value = p.expr(0)?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(err(format!("unexpected trailing input at byte {}", p.pos)));
    }
    Ok(value)
}

fn err(msg: impl Into<String>) -> ExactError {
    ExactError::Parse(msg.into())
}

struct Parser<'a> {
    var: Var,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    // expr := term (('+' | '-') term)*
    fn expr(&mut self, depth: usize) -> Result<RationalFunction, ExactError> {
        if depth > MAX_DEPTH {
            return Err(err("expression nested too deeply"));
        }
        let mut acc = self.term(depth)?;
        loop {
            self.skip_ws();
            if self.eat(b'+') {
                let rhs = self.term(depth)?;
                acc = checked(&acc + &rhs)?;
            } else if self.eat(b'-') {
                let rhs = self.term(depth)?;
                acc = checked(&acc - &rhs)?;
            } else {
                return Ok(acc);
            }
        }
    }

    // term := factor (('*' | '/') factor)*
    fn term(&mut self, depth: usize) -> Result<RationalFunction, ExactError> {
        let mut acc = self.factor(depth)?;
        loop {
            self.skip_ws();
            if self.eat(b'*') {
                let rhs = self.factor(depth)?;
                acc = checked(&acc * &rhs)?;
            } else if self.eat(b'/') {
                let rhs = self.factor(depth)?;
                acc = checked(acc.checked_div(&rhs)?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    // factor := ('-')* atom ('^' exponent)?
    fn factor(&mut self, depth: usize) -> Result<RationalFunction, ExactError> {
        self.skip_ws();
        let mut negate = false;
        while self.eat(b'-') {
            negate = !negate;
            self.skip_ws();
        }
        let atom = self.atom(depth)?;
        self.skip_ws();
        let value = if self.eat(b'^') {
            let e = self.exponent()?;
            let cap = if atom.numerator().num_terms() <= 1 && atom.denominator().num_terms() <= 1 {
                MAX_MONOMIAL_EXP
            } else {
                MAX_GENERAL_EXP
            };
            if e.abs() > cap {
                return Err(err(format!("exponent {} too large", e)));
            }
            checked(atom.pow(e)?)?
        } else {
            atom
        };
        Ok(if negate { -&value } else { value })
    }

    fn atom(&mut self, depth: usize) -> Result<RationalFunction, ExactError> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr(depth + 1)?;
                self.skip_ws();
                if !self.eat(b')') {
                    return Err(err("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RationalFunction::constant(
                    self.var,
                    BigRational::from_integer(n),
                ))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let sym = self.var.symbol().as_bytes()[0];
                if c == sym {
                    self.pos += 1;
                    Ok(RationalFunction::from_laurent(LaurentPolynomial::variable(
                        self.var,
                    )))
                } else {
                    Err(err(format!(
                        "unknown symbol '{}', expected '{}'",
                        c as char, self.var
                    )))
                }
            }
            Some(c) => Err(err(format!("unexpected character '{}'", c as char))),
            None => Err(err("unexpected end of input")),
        }
    }

    fn exponent(&mut self) -> Result<i64, ExactError> {
        self.skip_ws();
        let negative = self.eat(b'-');
        self.skip_ws();
        let n = self.integer()?;
        let cap = BigInt::from(MAX_MONOMIAL_EXP);
        if n > cap {
            return Err(err("exponent out of range"));
        }
        let v: i64 = n.try_into().map_err(|_| err("exponent out of range"))?;
        Ok(if negative { -v } else { v })
    }

    fn integer(&mut self) -> Result<BigInt, ExactError> {
        let start = self.pos;
        while self.peek().map_or(false, |c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(err("expected an integer"));
        }
        if self.pos - start > 4096 {
            return Err(err("integer literal too long"));
        }
        BigInt::parse_bytes(&self.bytes[start..self.pos], 10).ok_or_else(|| err("bad integer"))
    }
}

fn checked(v: RationalFunction) -> Result<RationalFunction, ExactError> {
    if v.numerator().num_terms() + v.denominator().num_terms() > MAX_TERMS {
        return Err(err("expression too large"));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::big;

    #[test]
    fn parses_display_forms() {
        let f = parse_rational_function(Var::Q, "(q^2 - 1)/(q + 1)").unwrap();
        assert_eq!(f.to_string(), "q - 1");
        let g = parse_rational_function(Var::Q, "3/2*q^2 + 1").unwrap();
        assert_eq!(g.numerator().coefficient(2), super::super::big_frac(3, 2));
        let h = parse_rational_function(Var::T, "t^-3").unwrap();
        assert_eq!(h.as_monomial().map(|(e, _)| e), Some(-3));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational_function(Var::Q, "").is_err());
        assert!(parse_rational_function(Var::Q, "q +").is_err());
        assert!(parse_rational_function(Var::Q, "x + 1").is_err());
        assert!(parse_rational_function(Var::Q, "1/0").is_err());
        assert!(parse_rational_function(Var::Q, "(q+1").is_err());
        assert!(parse_rational_function(Var::Q, "(q+1)^9999").is_err());
    }

    #[test]
    fn division_is_field_division() {
        let f = parse_rational_function(Var::Q, "1/(q - 1) + 1/(q + 1)").unwrap();
        assert_eq!(f.to_string(), "2*q/(q^2 - 1)");
        assert_eq!(f.evaluate(&big(2)).unwrap(), super::super::big_frac(4, 3));
    }
}
