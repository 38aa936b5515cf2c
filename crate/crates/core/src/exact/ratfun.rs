//! Elements of the fraction field of Laurent polynomials, kept in a canonical
//! form so that equality is structural comparison.
//!
//! Canonical form: the denominator is a monic ordinary polynomial with a
//! nonzero constant term and is coprime to the polynomial part of the
//! numerator; every pure power of the variable lives in the numerator's
//! Laurent exponents.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::LaurentPolynomial;
use super::{ExactError, Var};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    var: Var,
    num: LaurentPolynomial,
    den: LaurentPolynomial,
}

impl RationalFunction {
    pub fn zero(var: Var) -> Self {
        Self {
            var,
            num: LaurentPolynomial::zero(var),
            den: LaurentPolynomial::one(var),
        }
    }

    pub fn one(var: Var) -> Self {
        Self::from_laurent(LaurentPolynomial::one(var))
    }

    pub fn constant(var: Var, c: BigRational) -> Self {
        Self::from_laurent(LaurentPolynomial::constant(var, c))
    }

    pub fn integer(var: Var, n: i64) -> Self {
        Self::constant(var, super::big(n))
    }

    /// The monomial `c * x^e`.
    pub fn monomial(var: Var, exp: i64, c: BigRational) -> Self {
        Self::from_laurent(LaurentPolynomial::monomial(var, exp, c))
    }

    pub fn variable(var: Var) -> Self {
        Self::from_laurent(LaurentPolynomial::variable(var))
    }

    pub fn from_laurent(num: LaurentPolynomial) -> Self {
        let var = num.var();
        Self {
            var,
            num,
            den: LaurentPolynomial::one(var),
        }
    }

    /// Build `num / den`, reducing to canonical form.
    pub fn new(num: LaurentPolynomial, den: LaurentPolynomial) -> Result<Self, ExactError> {
        if num.var() != den.var() {
            return Err(ExactError::VariableMismatch(num.var(), den.var()));
        }
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    /// Canonicalize a fraction of Laurent polynomials with nonzero denominator.
    fn reduced(num: LaurentPolynomial, den: LaurentPolynomial) -> Self {
        let var = num.var();
        if num.is_zero() {
            return Self::zero(var);
        }
        // Shift all pure variable powers out of both parts.
        let a = num.low_degree().unwrap();
        let b = den.low_degree().unwrap();
        let one = BigRational::one();
        let n0 = num.scale(-a, &one);
        let d0 = den.scale(-b, &one);
        let g = n0.gcd(&d0);
        let (mut n1, mut d1) = if g.is_one() {
            (n0, d0)
        } else {
            (n0.div_exact(&g), d0.div_exact(&g))
        };
        let lc = d1.leading_coefficient().expect("nonzero denominator").clone();
        if !lc.is_one() {
            let inv = lc.recip();
            n1 = n1.scale(0, &inv);
            d1 = d1.scale(0, &inv);
        }
        Self {
            var,
            num: n1.scale(a - b, &one),
            den: d1,
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value is a Laurent polynomial (unit denominator).
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a Laurent polynomial, if the denominator is one.
    pub fn as_laurent(&self) -> Option<&LaurentPolynomial> {
        self.is_laurent().then_some(&self.num)
    }

    /// `Some((e, c))` when the value is the single term `c * x^e`.
    pub fn as_monomial(&self) -> Option<(i64, &BigRational)> {
        if !self.is_laurent() {
            return None;
        }
        self.num.as_monomial()
    }

    /// `Some(c)` when the value is the constant `c`.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        match self.as_monomial() {
            Some((0, c)) => Some(c.clone()),
            _ => None,
        }
    }

    fn check_var(&self, other: &Self) {
        assert_eq!(
            self.var, other.var,
            "variable mismatch: {} vs {}",
            self.var, other.var
        );
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ExactError> {
        if self.var != rhs.var {
            return Err(ExactError::VariableMismatch(self.var, rhs.var));
        }
        if rhs.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(self * &rhs.inverse()?)
    }

    pub fn inverse(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i64) -> Result<Self, ExactError> {
        if e == 0 {
            return Ok(Self::one(self.var));
        }
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one(self.var);
        let mut b = base;
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            n >>= 1;
        }
        Ok(acc)
    }

    /// Exact evaluation; a vanishing denominator is a pole error and is never
    /// silently cancelled here (cancellation already happened in canonical
    /// form).
    pub fn evaluate(&self, x: &BigRational) -> Result<BigRational, ExactError> {
        let d = self.den.evaluate(x)?;
        if d.is_zero() {
            return Err(ExactError::PoleAtPoint(x.to_string()));
        }
        let n = self.num.evaluate(x)?;
        Ok(n / d)
    }

    /// Replace `q` by `t^d`. Canonical form is preserved verbatim: coprimality
    /// and the denominator normalization survive the substitution.
    pub fn substitute_power(&self, d: u32) -> Self {
        assert_eq!(self.var, Var::Q, "substitute_power expects a value in q");
        Self {
            var: Var::T,
            num: self.num.substitute_power(d),
            den: self.den.substitute_power(d),
        }
    }

    /// Replace the variable `x` by `x^{-1}` (recanonicalizes).
    pub fn substitute_inverse(&self) -> Self {
        Self::reduced(self.num.substitute_inverse(), self.den.substitute_inverse())
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        self.check_var(rhs);
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::reduced(num, &self.den * &rhs.den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        self.check_var(rhs);
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero(self.var);
        }
        // Cross-cancel before multiplying to keep degrees down.
        RationalFunction::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            var: self.var,
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.num_terms() > 1 {
            write!(f, "({})/({})", self.num, self.den)
        } else {
            write!(f, "{}/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{big, parse_rational_function};

    fn lp(pairs: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(Var::Q, pairs.iter().map(|&(e, c)| (e, big(c))))
    }

    #[test]
    fn canonical_gcd_cancellation() {
        // (q-1)/(q^2-1) -> 1/(q+1)
        let f = RationalFunction::new(lp(&[(1, 1), (0, -1)]), lp(&[(2, 1), (0, -1)])).unwrap();
        assert_eq!(f.numerator(), &lp(&[(0, 1)]));
        assert_eq!(f.denominator(), &lp(&[(1, 1), (0, 1)]));
        assert_eq!(f.to_string(), "1/(q + 1)");
    }

    #[test]
    fn field_inverse() {
        // a * a^-1 = 1 for a = (q^3-q)/(q+2)
        let a = RationalFunction::new(lp(&[(3, 1), (1, -1)]), lp(&[(1, 1), (0, 2)])).unwrap();
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_one());
    }

    #[test]
    fn identity_collapses_regardless_of_substitution() {
        let a = RationalFunction::new(lp(&[(1, 1), (0, -1)]), lp(&[(1, 1), (0, -1)])).unwrap();
        assert!(a.is_one());
        assert!(a.substitute_power(4).is_one());
    }

    #[test]
    fn substitute_power_examples() {
        let q2 = RationalFunction::monomial(Var::Q, 2, big(1));
        let s = q2.substitute_power(5);
        assert_eq!(s.as_monomial().map(|(e, _)| e), Some(10));
        let f = RationalFunction::new(lp(&[(0, 1)]), lp(&[(1, 1), (0, 1)])).unwrap();
        let g = f.substitute_power(2);
        assert_eq!(g.to_string(), "1/(t^2 + 1)");
    }

    #[test]
    fn evaluation_and_poles() {
        let f = RationalFunction::from_laurent(lp(&[(1, 1), (0, 1)]));
        assert_eq!(f.evaluate(&big(1)).unwrap(), big(2));
        let g = RationalFunction::new(lp(&[(0, 1)]), lp(&[(1, 1), (0, -1)])).unwrap();
        assert!(matches!(
            g.evaluate(&big(1)),
            Err(ExactError::PoleAtPoint(_))
        ));
        let h = RationalFunction::monomial(Var::T, 10, big(1));
        assert_eq!(h.evaluate(&big(-1)).unwrap(), big(1));
    }

    #[test]
    fn pure_powers_live_in_numerator() {
        // q / (q^2 + q) = 1/(q+1): denominator keeps nonzero constant term
        let f = RationalFunction::new(lp(&[(1, 1)]), lp(&[(2, 1), (1, 1)])).unwrap();
        assert_eq!(f.to_string(), "1/(q + 1)");
        // 1 / q = q^-1
        let g = RationalFunction::new(lp(&[(0, 1)]), lp(&[(1, 1)])).unwrap();
        assert!(g.is_laurent());
        assert_eq!(g.to_string(), "q^-1");
    }

    #[test]
    fn division_errors() {
        let z = RationalFunction::zero(Var::Q);
        let a = RationalFunction::one(Var::Q);
        assert_eq!(a.checked_div(&z), Err(ExactError::DivisionByZero));
        let t = RationalFunction::one(Var::T);
        assert_eq!(
            a.checked_div(&t),
            Err(ExactError::VariableMismatch(Var::Q, Var::T))
        );
    }

    #[test]
    fn display_roundtrip() {
        let f = RationalFunction::new(lp(&[(2, 1), (0, -1)]), lp(&[(1, 1), (0, 1)])).unwrap();
        // canonical form divides out q+1
        assert_eq!(f.to_string(), "q - 1");
        let g = RationalFunction::new(lp(&[(2, 1), (0, -1)]), lp(&[(1, 2), (0, 1)])).unwrap();
        let back = parse_rational_function(Var::Q, &g.to_string()).unwrap();
        assert_eq!(back, g);
    }
}
