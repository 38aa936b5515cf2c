//! Laurent polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{ExactError, Var};

/// A Laurent polynomial `sum c_e x^e` in a single named variable.
///
/// Invariants: no stored coefficient is zero; exponents are distinct (the map
/// keys). The zero polynomial has an empty term map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    var: Var,
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPolynomial {
    pub fn zero(var: Var) -> Self {
        Self { var, terms: BTreeMap::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, BigRational::one())
    }

    pub fn constant(var: Var, c: BigRational) -> Self {
        Self::monomial(var, 0, c)
    }

    pub fn monomial(var: Var, exp: i64, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { var, terms }
    }

    /// The variable `x` itself.
    pub fn variable(var: Var) -> Self {
        Self::monomial(var, 1, BigRational::one())
    }

    pub fn from_terms(var: Var, iter: impl IntoIterator<Item = (i64, BigRational)>) -> Self {
        let mut p = Self::zero(var);
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map_or(false, |c| c.is_one())
    }

    /// True when the polynomial is `c * x^e` for a single term (or zero).
    pub fn as_monomial(&self) -> Option<(i64, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest exponent; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Smallest exponent; `None` for the zero polynomial.
    pub fn low_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.terms.values().next_back()
    }

    pub fn coefficient(&self, exp: i64) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    /// True when all exponents are nonnegative (an ordinary polynomial).
    pub fn is_ordinary(&self) -> bool {
        self.low_degree().map_or(true, |d| d >= 0)
    }

    fn add_term(&mut self, exp: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_var(&self, other: &Self) {
        assert_eq!(
            self.var, other.var,
            "variable mismatch: {} vs {}",
            self.var, other.var
        );
    }

    /// Multiply by `c * x^e` in place.
    pub fn scale(&self, exp: i64, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.var);
        }
        Self {
            var: self.var,
            terms: self.terms.iter().map(|(e, k)| (e + exp, k * c)).collect(),
        }
    }

    pub fn evaluate(&self, x: &BigRational) -> Result<BigRational, ExactError> {
        if x.is_zero() && self.low_degree().map_or(false, |d| d < 0) {
            return Err(ExactError::ZeroNegativeExponent);
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            acc += c * rational_pow(x, *e);
        }
        Ok(acc)
    }

    /// Replace the variable by `t^d` (with `d >= 1`), retagging to `t`.
    pub fn substitute_power(&self, d: u32) -> Self {
        assert!(d >= 1);
        Self {
            var: Var::T,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e * d as i64, c.clone()))
                .collect(),
        }
    }

    /// Replace the variable `x` by `x^{-1}`.
    pub fn substitute_inverse(&self) -> Self {
        Self {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Divide every coefficient by the leading one.
    pub fn make_monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                Self {
                    var: self.var,
                    terms: self.terms.iter().map(|(e, c)| (*e, c * &inv)).collect(),
                }
            }
        }
    }

    /// Quotient of ordinary polynomials, requiring an exact division.
    pub(crate) fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Euclidean division of ordinary polynomials.
    pub(crate) fn div_rem(&self, d: &Self) -> (Self, Self) {
        self.check_var(d);
        assert!(!d.is_zero(), "division by zero polynomial");
        assert!(self.is_ordinary() && d.is_ordinary());
        let dd = d.degree().unwrap();
        let dlc = d.leading_coefficient().unwrap().clone();
        let mut rem = self.clone();
        let mut quo = Self::zero(self.var);
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading_coefficient().unwrap() / &dlc;
            let e = rd - dd;
            quo.add_term(e, c.clone());
            let sub = d.scale(e, &c);
            rem = &rem - &sub;
        }
        (quo, rem)
    }

    /// Monic gcd of two ordinary polynomials over the rationals.
    ///
    /// Computed with a primitive polynomial remainder sequence over the
    /// integers to keep intermediate coefficients small.
    pub(crate) fn gcd(&self, other: &Self) -> Self {
        self.check_var(other);
        if self.is_zero() {
            return other.make_monic();
        }
        if other.is_zero() {
            return self.make_monic();
        }
        let mut a = to_primitive_int(self);
        let mut b = to_primitive_int(other);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = int_pseudo_rem(&a, &b);
            if r.is_empty() {
                return from_int_poly(self.var, &b).make_monic();
            }
            a = b;
            b = int_primitive_part(r);
        }
    }
}

/// Exact integer power of a rational; negative exponents invert (caller must
/// exclude zero beforehand).
fn rational_pow(x: &BigRational, e: i64) -> BigRational {
    if e == 0 {
        return BigRational::one();
    }
    let mut base = x.clone();
    let mut n = e.unsigned_abs();
    let mut acc = BigRational::one();
    while n > 0 {
        if n & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        n >>= 1;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

// ---- integer polynomial helpers for the gcd ----
// Dense representation: coefficient of x^i at index i, no trailing zeros.

fn to_primitive_int(p: &LaurentPolynomial) -> Vec<BigInt> {
    assert!(p.is_ordinary());
    let deg = p.degree().unwrap_or(0) as usize;
    let mut denom_lcm = BigInt::one();
    for (_, c) in p.terms() {
        denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
    }
    let mut out = vec![BigInt::zero(); deg + 1];
    for (e, c) in p.terms() {
        out[e as usize] = c.numer() * (&denom_lcm / c.denom());
    }
    trim(&mut out);
    int_primitive_part(out)
}

fn from_int_poly(var: Var, p: &[BigInt]) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(
        var,
        p.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64, BigRational::from_integer(c.clone()))),
    )
}

fn trim(p: &mut Vec<BigInt>) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn int_primitive_part(mut p: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut p);
    let mut g = BigInt::zero();
    for c in &p {
        g = num_integer::gcd(g, c.abs());
        if g.is_one() {
            return p;
        }
    }
    if g.is_zero() || g.is_one() {
        return p;
    }
    for c in &mut p {
        *c = &*c / &g;
    }
    p
}

/// Pseudo-remainder of `a` by `b` (both nonempty, deg a >= deg b allowed to fail softly).
fn int_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() >= b.len() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        // r := lb * r - lr * x^(dr-db) * b
        for c in &mut r {
            *c = &*c * lb;
        }
        for (i, bc) in b.iter().enumerate() {
            let idx = dr - db + i;
            let sub = &lr * bc;
            r[idx] = &r[idx] - sub;
        }
        trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.check_var(rhs);
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.check_var(rhs);
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.check_var(rhs);
        let mut out = LaurentPolynomial::zero(self.var);
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let sym = self.var.symbol();
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
                first = false;
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let show_coeff = !abs.is_one() || *e == 0;
            if show_coeff {
                write!(f, "{}", abs)?;
            }
            if *e != 0 {
                if show_coeff {
                    f.write_str("*")?;
                }
                if *e == 1 {
                    f.write_str(sym)?;
                } else {
                    write!(f, "{}^{}", sym, e)?;
                }
            }
        }
        Ok(())
    }
}
