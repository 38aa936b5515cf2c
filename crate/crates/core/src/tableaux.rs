//! Young diagrams and standard Young tableaux: the combinatorics that index
//! and dimension the Hecke irreducibles.
//!
//! Diagrams are stored row-wise; box coordinates are 1-based (row, column).

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

/// A partition of `n`: weakly decreasing positive row lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("rows must be weakly decreasing and positive")]
    InvalidShape,
    #[error("cannot parse diagram from {0:?}; expected e.g. \"[3,3]\"")]
    Parse(String),
}

impl YoungDiagram {
    pub fn new(rows: Vec<usize>) -> Result<Self, DiagramError> {
        if rows.is_empty() || rows.iter().any(|&r| r == 0) {
            return Err(DiagramError::InvalidShape);
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(DiagramError::InvalidShape);
        }
        Ok(Self { rows })
    }

    /// Text syntax `"[3,3]"`.
    pub fn parse(s: &str) -> Result<Self, DiagramError> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| DiagramError::Parse(s.to_string()))?;
        let mut rows = Vec::new();
        for part in inner.split(',') {
            let p = part.trim();
            // Accept the exponent shorthand [2^3] for [2,2,2].
            if let Some((base, exp)) = p.split_once('^') {
                let b: usize = base.trim().parse().map_err(|_| DiagramError::Parse(s.into()))?;
                let e: usize = exp.trim().parse().map_err(|_| DiagramError::Parse(s.into()))?;
                if e == 0 || e > 64 {
                    return Err(DiagramError::Parse(s.into()));
                }
                rows.extend(std::iter::repeat(b).take(e));
            } else {
                rows.push(p.parse().map_err(|_| DiagramError::Parse(s.into()))?);
            }
        }
        if rows.iter().sum::<usize>() > 64 {
            return Err(DiagramError::Parse(s.into()));
        }
        Self::new(rows).map_err(|_| DiagramError::Parse(s.to_string()))
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Column lengths (the transpose's rows).
    pub fn column_lengths(&self) -> Vec<usize> {
        let mut cols = vec![0usize; self.rows[0]];
        for &r in &self.rows {
            for c in cols.iter_mut().take(r) {
                *c += 1;
            }
        }
        cols
    }

    pub fn transpose(&self) -> Self {
        Self { rows: self.column_lengths() }
    }

    pub fn is_rectangular(&self) -> bool {
        self.rows.iter().all(|&r| r == self.rows[0])
    }

    /// All diagrams obtained by removing a single corner box, in row order.
    pub fn removable_corners(&self) -> Vec<YoungDiagram> {
        let mut out = Vec::new();
        for i in 0..self.rows.len() {
            let removable = if i + 1 < self.rows.len() {
                self.rows[i] > self.rows[i + 1]
            } else {
                true
            };
            if !removable {
                continue;
            }
            let mut rows = self.rows.clone();
            rows[i] -= 1;
            if rows[i] == 0 {
                rows.remove(i);
            }
            if rows.is_empty() {
                continue;
            }
            out.push(Self { rows });
        }
        out
    }

    /// Hook-length dimension of the associated irreducible.
    pub fn dimension(&self) -> u64 {
        let n = self.size();
        let cols = self.column_lengths();
        let mut numer = BigUint::one();
        for k in 1..=n {
            numer *= BigUint::from(k);
        }
        let mut denom = BigUint::one();
        for (r, &len) in self.rows.iter().enumerate() {
            for c in 0..len {
                let arm = len - c - 1;
                let leg = cols[c] - r - 1;
                denom *= BigUint::from(arm + leg + 1);
            }
        }
        let d = numer / denom;
        u64::try_from(d).expect("dimension fits in u64 at desk scale")
    }

    /// All partitions of `n`, in the deterministic order produced by the
    /// largest-first recursive enumeration.
    pub fn all(n: usize) -> Vec<YoungDiagram> {
        fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
            if n == 0 {
                out.push(YoungDiagram { rows: prefix.clone() });
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                rec(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Enumerate the standard tableaux of this shape, sorted by the reversed
    /// reading word (rows read bottom-to-top, then reversed), ascending.
    pub fn standard_tableaux(&self) -> Vec<StandardTableau> {
        let n = self.size();
        let shape = &self.rows;
        let mut results = Vec::new();
        // row_fill[r] = number of boxes already placed in row r
        let mut row_fill = vec![0usize; shape.len()];
        let mut filling: Vec<(usize, usize)> = Vec::with_capacity(n); // entry k-1 -> (row, col)
        fn place(
            k: usize,
            n: usize,
            shape: &[usize],
            row_fill: &mut Vec<usize>,
            filling: &mut Vec<(usize, usize)>,
            out: &mut Vec<StandardTableau>,
            diagram: &YoungDiagram,
        ) {
            if k > n {
                out.push(StandardTableau {
                    shape: diagram.clone(),
                    positions: filling.clone(),
                });
                return;
            }
            for r in 0..shape.len() {
                let c = row_fill[r];
                if c >= shape[r] {
                    continue;
                }
                // column condition: box above must already be filled
                if r > 0 && row_fill[r - 1] <= c {
                    continue;
                }
                row_fill[r] += 1;
                filling.push((r + 1, c + 1));
                place(k + 1, n, shape, row_fill, filling, out, diagram);
                filling.pop();
                row_fill[r] -= 1;
            }
        }
        place(1, n, shape, &mut row_fill, &mut filling, &mut results, self);
        results.sort_by_key(|t| t.reversed_reading_word());
        results
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", r)?;
        }
        f.write_str("]")
    }
}

/// A standard filling of a Young diagram: entries 1..n strictly increasing
/// along rows and down columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: YoungDiagram,
    /// positions[k-1] = (row, col) of entry k, both 1-based.
    positions: Vec<(usize, usize)>,
}

impl StandardTableau {
    pub fn shape(&self) -> &YoungDiagram {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.positions.len()
    }

    /// (row, col), 1-based, of entry `k`.
    pub fn position_of(&self, k: usize) -> (usize, usize) {
        self.positions[k - 1]
    }

    /// content(box) = column - row.
    pub fn content_of(&self, k: usize) -> i64 {
        let (r, c) = self.position_of(k);
        c as i64 - r as i64
    }

    /// Axial distance `content(i+1) - content(i)`; drives the seminormal
    /// block entries. `|axial| = 1` exactly when i and i+1 share a row or
    /// column.
    pub fn axial(&self, i: usize) -> i64 {
        assert!(i >= 1 && i < self.size());
        self.content_of(i + 1) - self.content_of(i)
    }

    /// Swap the entries i and i+1. The result is standard iff `|axial| >= 2`.
    pub fn swap(&self, i: usize) -> StandardTableau {
        let mut positions = self.positions.clone();
        positions.swap(i - 1, i);
        StandardTableau {
            shape: self.shape.clone(),
            positions,
        }
    }

    /// Rows of entries, for rendering.
    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        let mut rows: Vec<Vec<usize>> = self
            .shape
            .rows()
            .iter()
            .map(|&len| vec![0; len])
            .collect();
        for (k, &(r, c)) in self.positions.iter().enumerate() {
            rows[r - 1][c - 1] = k + 1;
        }
        rows
    }

    /// Reading word of the rows bottom-to-top, then reversed: the basis
    /// order key.
    pub fn reversed_reading_word(&self) -> Vec<usize> {
        let rows = self.to_rows();
        let mut word: Vec<usize> = rows.into_iter().rev().flatten().collect();
        word.reverse();
        word
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.to_rows().iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            let strs: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            f.write_str(&strs.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(rows: &[usize]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(YoungDiagram::parse("[3,3]").unwrap(), d(&[3, 3]));
        assert_eq!(YoungDiagram::parse(" [2, 1] ").unwrap(), d(&[2, 1]));
        assert_eq!(YoungDiagram::parse("[2^3]").unwrap(), d(&[2, 2, 2]));
        assert_eq!(d(&[2, 2, 2]).to_string(), "[2,2,2]");
        assert!(YoungDiagram::parse("[1,2]").is_err());
        assert!(YoungDiagram::parse("[]").is_err());
        assert!(YoungDiagram::parse("3,3").is_err());
        assert!(YoungDiagram::parse("[0]").is_err());
    }

    #[test]
    fn single_column_has_one_tableau() {
        assert_eq!(d(&[1, 1, 1]).standard_tableaux().len(), 1);
    }

    #[test]
    fn enumeration_matches_hook_length_formula() {
        // exhaustive enumeration is the independent oracle for the formula
        for n in 1..=7 {
            for shape in YoungDiagram::all(n) {
                let enumerated = shape.standard_tableaux().len() as u64;
                assert_eq!(enumerated, shape.dimension(), "shape {}", shape);
            }
        }
        assert_eq!(d(&[2, 2, 2]).dimension(), 5);
        assert_eq!(d(&[2, 1]).dimension(), 2);
        assert_eq!(d(&[2, 2, 1]).dimension(), 5);
        assert_eq!(d(&[3, 3]).dimension(), 5);
        assert_eq!(d(&[6]).dimension(), 1);
    }

    #[test]
    fn removable_corners_examples() {
        assert_eq!(d(&[2, 2, 2]).removable_corners(), vec![d(&[2, 2, 1])]);
        assert_eq!(d(&[2, 1]).removable_corners(), vec![d(&[1, 1]), d(&[2])]);
        assert_eq!(d(&[4]).removable_corners(), vec![d(&[3])]);
        // rectangular diagrams have exactly one corner
        for shape in [d(&[3, 3]), d(&[2, 2, 2]), d(&[5])] {
            assert_eq!(shape.removable_corners().len(), 1);
        }
    }

    #[test]
    fn branching_dimension_consistency() {
        for n in 2..=7 {
            for shape in YoungDiagram::all(n) {
                let total: u64 = shape
                    .removable_corners()
                    .iter()
                    .map(|c| c.dimension())
                    .sum();
                assert_eq!(total, shape.dimension(), "shape {}", shape);
            }
        }
    }

    #[test]
    fn transpose_and_rectangularity() {
        assert!(d(&[2, 2, 2]).is_rectangular());
        assert!(!d(&[2, 1]).is_rectangular());
        assert_eq!(d(&[3, 3]).transpose(), d(&[2, 2, 2]));
        for n in 1..=7 {
            for shape in YoungDiagram::all(n) {
                assert_eq!(shape.dimension(), shape.transpose().dimension());
            }
        }
    }

    #[test]
    fn axial_distance_basics() {
        let row2 = d(&[2]).standard_tableaux();
        assert_eq!(row2[0].axial(1), 1);
        // |axial| = 1 iff same row or column
        for n in 2..=6 {
            for shape in YoungDiagram::all(n) {
                for t in shape.standard_tableaux() {
                    for i in 1..n {
                        let a = t.axial(i);
                        assert!(a != 0);
                        let (r1, c1) = t.position_of(i);
                        let (r2, c2) = t.position_of(i + 1);
                        let shared = r1 == r2 || c1 == c2;
                        assert_eq!(a.abs() == 1, shared);
                    }
                }
            }
        }
    }

    #[test]
    fn basis_order_is_reversed_reading_word() {
        // fixes the [2,2] order: row tableau 12/34 comes first
        let ts = d(&[2, 2]).standard_tableaux();
        assert_eq!(ts[0].to_rows(), vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(ts[1].to_rows(), vec![vec![1, 3], vec![2, 4]]);
    }
}
