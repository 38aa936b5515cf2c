//! Dense exact matrices over the rational-function field.

use std::fmt;

use num_rational::BigRational;

use super::numeric::RatMatrix;
use super::{ExactError, RationalFunction, Var};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    var: Var,
    rows: usize,
    cols: usize,
    entries: Vec<RationalFunction>,
}

impl ExactMatrix {
    pub fn zero(var: Var, rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0);
        Self {
            var,
            rows,
            cols,
            entries: vec![RationalFunction::zero(var); rows * cols],
        }
    }

    pub fn identity(var: Var, n: usize) -> Self {
        let mut m = Self::zero(var, n, n);
        for i in 0..n {
            m.set(i, i, RationalFunction::one(var));
        }
        m
    }

    pub fn from_fn(
        var: Var,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> RationalFunction,
    ) -> Self {
        let mut m = Self::zero(var, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                let v = f(r, c);
                assert_eq!(v.var(), var, "entry variable mismatch");
                m.set(r, c, v);
            }
        }
        m
    }

    pub fn diagonal(var: Var, diag: &[RationalFunction]) -> Self {
        let mut m = Self::zero(var, diag.len(), diag.len());
        for (i, v) in diag.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &RationalFunction {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: RationalFunction) {
        assert_eq!(v.var(), self.var);
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    if r == c {
                        self.get(r, c).is_one()
                    } else {
                        self.get(r, c).is_zero()
                    }
                })
            })
    }

    /// When the matrix is `c * I`, returns the scalar `c`.
    pub fn is_scalar(&self) -> Option<RationalFunction> {
        if self.rows != self.cols {
            return None;
        }
        let c = self.get(0, 0);
        for r in 0..self.rows {
            for s in 0..self.cols {
                let e = self.get(r, s);
                if r == s {
                    if e != c {
                        return None;
                    }
                } else if !e.is_zero() {
                    return None;
                }
            }
        }
        Some(c.clone())
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self, ExactError> {
        if self.cols != rhs.rows {
            return Err(ExactError::ShapeMismatch(
                self.rows, self.cols, rhs.rows, rhs.cols,
            ));
        }
        if self.var != rhs.var {
            return Err(ExactError::VariableMismatch(self.var, rhs.var));
        }
        let mut out = Self::zero(self.var, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(r, c);
                    let v = cur + &(a * b);
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, ExactError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(ExactError::ShapeMismatch(
                self.rows, self.cols, rhs.rows, rhs.cols,
            ));
        }
        if self.var != rhs.var {
            return Err(ExactError::VariableMismatch(self.var, rhs.var));
        }
        let mut out = self.clone();
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c) + rhs.get(r, c));
            }
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, ExactError> {
        self.add(&rhs.scalar_mul(&RationalFunction::integer(self.var, -1)))
    }

    pub fn scalar_mul(&self, c: &RationalFunction) -> Self {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = &*e * c;
        }
        out
    }

    pub fn trace(&self) -> Result<RationalFunction, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::ShapeMismatch(
                self.rows, self.cols, self.cols, self.rows,
            ));
        }
        let mut acc = RationalFunction::zero(self.var);
        for i in 0..self.rows {
            acc = &acc + self.get(i, i);
        }
        Ok(acc)
    }

    /// Size heuristic used for pivot selection: prefer structurally small
    /// entries of low degree.
    fn pivot_weight(v: &RationalFunction) -> (usize, i64) {
        let n = v.numerator();
        let d = v.denominator();
        let span = n.degree().unwrap_or(0) - n.low_degree().unwrap_or(0)
            + d.degree().unwrap_or(0);
        (n.num_terms() + d.num_terms(), span)
    }

    /// Exact rank by Gaussian elimination over the fraction field, pivoting
    /// on the smallest nonzero entry in each column.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..m.cols {
            // find best pivot in rows row..
            let mut best: Option<(usize, (usize, i64))> = None;
            for r in row..m.rows {
                let v = m.get(r, col);
                if v.is_zero() {
                    continue;
                }
                let w = Self::pivot_weight(v);
                if best.as_ref().map_or(true, |(_, bw)| w < *bw) {
                    best = Some((r, w));
                }
            }
            let Some((prow, _)) = best else { continue };
            m.swap_rows(row, prow);
            let pivot = m.get(row, col).clone();
            let pinv = pivot.inverse().expect("nonzero pivot");
            for r in (row + 1)..m.rows {
                let factor = m.get(r, col);
                if factor.is_zero() {
                    continue;
                }
                let scale = factor * &pinv;
                for c in col..m.cols {
                    let v = m.get(r, c) - &(&scale * m.get(row, c));
                    m.set(r, c, v);
                }
            }
            rank += 1;
            row += 1;
            if row == m.rows {
                break;
            }
        }
        rank
    }

    /// Exact determinant via fraction-field elimination.
    pub fn det(&self) -> Result<RationalFunction, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::ShapeMismatch(
                self.rows, self.cols, self.cols, self.rows,
            ));
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = RationalFunction::one(self.var);
        for col in 0..n {
            let mut best: Option<(usize, (usize, i64))> = None;
            for r in col..n {
                let v = m.get(r, col);
                if v.is_zero() {
                    continue;
                }
                let w = Self::pivot_weight(v);
                if best.as_ref().map_or(true, |(_, bw)| w < *bw) {
                    best = Some((r, w));
                }
            }
            let Some((prow, _)) = best else {
                return Ok(RationalFunction::zero(self.var));
            };
            if prow != col {
                m.swap_rows(col, prow);
                det = -&det;
            }
            let pivot = m.get(col, col).clone();
            det = &det * &pivot;
            let pinv = pivot.inverse().expect("nonzero pivot");
            for r in (col + 1)..n {
                let factor = m.get(r, col);
                if factor.is_zero() {
                    continue;
                }
                let scale = factor * &pinv;
                for c in col..n {
                    let v = m.get(r, c) - &(&scale * m.get(col, c));
                    m.set(r, c, v);
                }
            }
        }
        Ok(det)
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::ShapeMismatch(
                self.rows, self.cols, self.cols, self.rows,
            ));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = Self::identity(self.var, n);
        for col in 0..n {
            let mut best: Option<(usize, (usize, i64))> = None;
            for r in col..n {
                let v = m.get(r, col);
                if v.is_zero() {
                    continue;
                }
                let w = Self::pivot_weight(v);
                if best.as_ref().map_or(true, |(_, bw)| w < *bw) {
                    best = Some((r, w));
                }
            }
            let Some((prow, _)) = best else {
                return Err(ExactError::SingularMatrix);
            };
            m.swap_rows(col, prow);
            inv.swap_rows(col, prow);
            let pinv = m.get(col, col).inverse().expect("nonzero pivot");
            for c in 0..n {
                let v = m.get(col, c) * &pinv;
                m.set(col, c, v);
                let w = inv.get(col, c) * &pinv;
                inv.set(col, c, w);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let v = m.get(r, c) - &(&factor * m.get(col, c));
                    m.set(r, c, v);
                    let w = inv.get(r, c) - &(&factor * inv.get(col, c));
                    inv.set(r, c, w);
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Entry-wise `q -> t^d`.
    pub fn substitute_power(&self, d: u32) -> Self {
        Self {
            var: Var::T,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.substitute_power(d)).collect(),
        }
    }

    /// Exact numeric evaluation of every entry.
    pub fn evaluate(&self, x: &BigRational) -> Result<RatMatrix, ExactError> {
        let mut vals = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            vals.push(e.evaluate(x)?);
        }
        Ok(RatMatrix::from_vec(self.rows, self.cols, vals))
    }

    /// Rows of display strings, the JSON wire form.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).to_string()).collect())
            .collect()
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            f.write_str("[ ")?;
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            f.write_str(" ]")?;
            if r + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::big;

    fn rf_q(e: i64, c: i64) -> RationalFunction {
        RationalFunction::monomial(Var::Q, e, big(c))
    }

    #[test]
    fn rank_of_identity_plus_diag() {
        // rank(I2 + diag(q, -1)) = 1
        let d = ExactMatrix::diagonal(Var::Q, &[rf_q(1, 1), rf_q(0, -1)]);
        let m = ExactMatrix::identity(Var::Q, 2).add(&d).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn inverse_of_diagonal() {
        let d = ExactMatrix::diagonal(Var::Q, &[rf_q(1, 1), rf_q(0, -1)]);
        let inv = d.inverse().unwrap();
        assert_eq!(inv.get(0, 0), &rf_q(-1, 1));
        assert_eq!(inv.get(1, 1), &rf_q(0, -1));
        assert!(d.matmul(&inv).unwrap().is_identity());
    }

    #[test]
    fn scalar_detection() {
        let m = ExactMatrix::diagonal(Var::Q, &[rf_q(3, 1), rf_q(3, 1)]);
        assert_eq!(m.is_scalar(), Some(rf_q(3, 1)));
        let n = ExactMatrix::diagonal(Var::Q, &[rf_q(3, 1), rf_q(2, 1)]);
        assert_eq!(n.is_scalar(), None);
    }

    #[test]
    fn inverse_of_dense_matrix_roundtrips() {
        let one = RationalFunction::one(Var::Q);
        let q = RationalFunction::variable(Var::Q);
        let mut m = ExactMatrix::zero(Var::Q, 2, 2);
        m.set(0, 0, q.clone());
        m.set(0, 1, one.clone());
        m.set(1, 0, one.clone());
        m.set(1, 1, q.clone());
        let inv = m.inverse().unwrap();
        assert!(m.matmul(&inv).unwrap().is_identity());
        // det = q^2 - 1
        assert_eq!(m.det().unwrap().to_string(), "q^2 - 1");
    }

    #[test]
    fn singular_matrix_rejected() {
        let one = RationalFunction::one(Var::Q);
        let mut m = ExactMatrix::zero(Var::Q, 2, 2);
        m.set(0, 0, one.clone());
        m.set(0, 1, one.clone());
        m.set(1, 0, one.clone());
        m.set(1, 1, one.clone());
        assert_eq!(m.inverse(), Err(ExactError::SingularMatrix));
        assert_eq!(m.rank(), 1);
        assert!(m.det().unwrap().is_zero());
    }

    #[test]
    fn shape_mismatch_errors() {
        let a = ExactMatrix::identity(Var::Q, 2);
        let b = ExactMatrix::identity(Var::Q, 3);
        assert!(matches!(
            a.matmul(&b),
            Err(ExactError::ShapeMismatch(2, 2, 3, 3))
        ));
    }
}
