//! Irreducible Hecke-algebra representations of the braid group in seminormal
//! form over Q(q), one per Young diagram with n boxes.
//!
//! Generator images satisfy the quadratic relation (G - qI)(G + I) = 0, i.e.
//! the eigenvalues of every generator are {q, -1}: the single-row diagram is
//! the scalar representation s -> q and the single-column diagram is the sign
//! representation s -> -1.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::braid::{BraidError, BraidWord};
use crate::exact::{big, ExactError, ExactMatrix, LaurentPolynomial, RatMatrix, RationalFunction, Var};
use crate::tableaux::YoungDiagram;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HeckeError {
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("strand count {0} does not match representation on {1} strands")]
    StrandMismatch(usize, usize),
    #[error("trace of {word} under {diagram} is not a Laurent polynomial")]
    NonPolynomialCharacter { diagram: String, word: String },
    #[error("full twist image is not scalar under {0}")]
    FullTwistNotScalar(String),
    #[error("full twist scalar exponent {found} differs from r*n*(n-1)/d = {expected}")]
    FullTwistExponent { found: i64, expected: i64 },
    #[error("r*n*(n-1) = {0} is not divisible by d = {1}")]
    NonIntegralExponent(i64, u64),
}

/// The seminormal representation attached to one Young diagram.
#[derive(Debug, Clone)]
pub struct HeckeRep {
    diagram: YoungDiagram,
    n: usize,
    dim: usize,
    rank_r: usize,
    gens: Vec<ExactMatrix>,
    gen_invs: Vec<ExactMatrix>,
}

fn q_power_minus_one(k: i64) -> LaurentPolynomial {
    // q^k - 1
    &LaurentPolynomial::monomial(Var::Q, k, big(1)) - &LaurentPolynomial::one(Var::Q)
}

fn q_minus_one() -> LaurentPolynomial {
    q_power_minus_one(1)
}

/// Diagonal-side seminormal entry for axial distance rho >= 2:
/// a = (q-1)/(1 - q^-rho) = q^rho (q-1)/(q^rho - 1).
fn entry_a(rho: i64) -> RationalFunction {
    let num = q_minus_one().scale(rho, &big(1));
    RationalFunction::new(num, q_power_minus_one(rho)).expect("rho >= 2 keeps denominator nonzero")
}

/// a' = (q-1)/(1 - q^rho) = -(q-1)/(q^rho - 1).
fn entry_a_prime(rho: i64) -> RationalFunction {
    RationalFunction::new(-&q_minus_one(), q_power_minus_one(rho)).expect("nonzero denominator")
}

/// Off-diagonal return entry c = q (q^{rho+1}-1)(q^{rho-1}-1)/(q^rho-1)^2.
fn entry_c(rho: i64) -> RationalFunction {
    let num = &(&q_power_minus_one(rho + 1) * &q_power_minus_one(rho - 1))
        * &LaurentPolynomial::variable(Var::Q);
    let den = &q_power_minus_one(rho) * &q_power_minus_one(rho);
    RationalFunction::new(num, den).expect("nonzero denominator")
}

impl HeckeRep {
    pub fn build(diagram: &YoungDiagram) -> Self {
        let n = diagram.size();
        let basis = diagram.standard_tableaux();
        let dim = basis.len();
        let index: HashMap<_, usize> = basis
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        let q = RationalFunction::variable(Var::Q);
        let minus_one = RationalFunction::integer(Var::Q, -1);

        let mut gens = Vec::with_capacity(n.saturating_sub(1));
        for i in 1..n {
            let mut m = ExactMatrix::zero(Var::Q, dim, dim);
            for (j, tab) in basis.iter().enumerate() {
                let rho = tab.axial(i);
                if rho == 1 {
                    m.set(j, j, q.clone());
                } else if rho == -1 {
                    m.set(j, j, minus_one.clone());
                } else if rho >= 2 {
                    let k = index[&tab.swap(i)];
                    m.set(j, j, entry_a(rho));
                    m.set(k, j, RationalFunction::one(Var::Q));
                } else {
                    let k = index[&tab.swap(i)];
                    m.set(j, j, entry_a_prime(-rho));
                    m.set(k, j, entry_c(-rho));
                }
            }
            gens.push(m);
        }

        // inverse letters via the quadratic relation: G^-1 = q^-1 G - (1 - q^-1) I
        let q_inv = RationalFunction::monomial(Var::Q, -1, big(1));
        let shift = &RationalFunction::one(Var::Q) - &q_inv; // 1 - q^-1
        let gen_invs: Vec<ExactMatrix> = gens
            .iter()
            .map(|g| {
                let scaled = g.scalar_mul(&q_inv);
                let id = ExactMatrix::identity(Var::Q, dim).scalar_mul(&shift);
                scaled.sub(&id).expect("same shape")
            })
            .collect();

        let rank_r = if n < 2 {
            0
        } else {
            ExactMatrix::identity(Var::Q, dim)
                .add(&gens[0])
                .expect("same shape")
                .rank()
        };

        Self {
            diagram: diagram.clone(),
            n,
            dim,
            rank_r,
            gens,
            gen_invs,
        }
    }

    pub fn diagram(&self) -> &YoungDiagram {
        &self.diagram
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[ExactMatrix] {
        &self.gens
    }

    pub fn generator_inverses(&self) -> &[ExactMatrix] {
        &self.gen_invs
    }

    /// rank(I + pi(s)), the rescaling exponent datum. Zero exactly for the
    /// single-column diagram.
    pub fn rank_r(&self) -> usize {
        self.rank_r
    }

    /// Independent combinatorial route to `rank_r`: the number of standard
    /// tableaux with 2 in the first row.
    pub fn rank_r_combinatorial(&self) -> usize {
        if self.n < 2 {
            return 0;
        }
        self.diagram
            .standard_tableaux()
            .iter()
            .filter(|t| t.position_of(2).0 == 1)
            .count()
    }

    pub fn evaluate(&self, word: &BraidWord) -> Result<ExactMatrix, HeckeError> {
        if word.strands() != self.n {
            return Err(HeckeError::StrandMismatch(word.strands(), self.n));
        }
        let mut m = ExactMatrix::identity(Var::Q, self.dim);
        for &l in word.letters() {
            let g = if l > 0 {
                &self.gens[l as usize - 1]
            } else {
                &self.gen_invs[(-l) as usize - 1]
            };
            m = m.matmul(g)?;
        }
        Ok(m)
    }

    /// Trace of the word image, asserted to be a Laurent polynomial.
    pub fn character(&self, word: &BraidWord) -> Result<LaurentPolynomial, HeckeError> {
        let tr = self.evaluate(word)?.trace()?;
        tr.as_laurent()
            .cloned()
            .ok_or_else(|| HeckeError::NonPolynomialCharacter {
                diagram: self.diagram.to_string(),
                word: word.to_string(),
            })
    }

    /// Checks the full twist maps to the scalar q^e with e = r n(n-1)/d and
    /// returns e.
    pub fn full_twist_scalar_exponent(&self) -> Result<i64, HeckeError> {
        let rn = (self.rank_r * self.n * (self.n - 1)) as i64;
        if rn % self.dim as i64 != 0 {
            return Err(HeckeError::NonIntegralExponent(rn, self.dim as u64));
        }
        let expected = rn / self.dim as i64;
        let image = self.evaluate(&BraidWord::full_twist(self.n))?;
        let scalar = image
            .is_scalar()
            .ok_or_else(|| HeckeError::FullTwistNotScalar(self.diagram.to_string()))?;
        match scalar.as_monomial() {
            Some((e, c)) if c.is_one() => {
                if e == expected {
                    Ok(e)
                } else {
                    Err(HeckeError::FullTwistExponent { found: e, expected })
                }
            }
            _ => Err(HeckeError::FullTwistNotScalar(self.diagram.to_string())),
        }
    }

    /// Exact relation check: quadratic relation for every generator, braid
    /// relation for adjacent pairs, commutation for distant pairs.
    pub fn check_relations(&self) -> Result<(), String> {
        let q = RationalFunction::variable(Var::Q);
        let id = ExactMatrix::identity(Var::Q, self.dim);
        for (i, g) in self.gens.iter().enumerate() {
            let lhs = g
                .sub(&id.scalar_mul(&q))
                .and_then(|a| a.matmul(&g.add(&id.clone()).unwrap()))
                .map_err(|e| e.to_string())?;
            if lhs != ExactMatrix::zero(Var::Q, self.dim, self.dim) {
                return Err(format!("quadratic relation fails at generator {}", i + 1));
            }
            let prod = g.matmul(&self.gen_invs[i]).map_err(|e| e.to_string())?;
            if !prod.is_identity() {
                return Err(format!("inverse formula fails at generator {}", i + 1));
            }
        }
        for i in 0..self.gens.len().saturating_sub(1) {
            let a = &self.gens[i];
            let b = &self.gens[i + 1];
            let lhs = a.matmul(b).and_then(|m| m.matmul(a)).map_err(|e| e.to_string())?;
            let rhs = b.matmul(a).and_then(|m| m.matmul(b)).map_err(|e| e.to_string())?;
            if lhs != rhs {
                return Err(format!("braid relation fails at ({}, {})", i + 1, i + 2));
            }
        }
        for i in 0..self.gens.len() {
            for j in (i + 2)..self.gens.len() {
                let a = &self.gens[i];
                let b = &self.gens[j];
                if a.matmul(b).map_err(|e| e.to_string())? != b.matmul(a).map_err(|e| e.to_string())? {
                    return Err(format!("commutation fails at ({}, {})", i + 1, j + 1));
                }
            }
        }
        Ok(())
    }

    /// det pi(s_i) = q^r (-1)^(d-r) for every generator, checked exactly.
    pub fn check_generator_determinants(&self) -> Result<(), String> {
        let sign = if (self.dim - self.rank_r) % 2 == 0 { 1 } else { -1 };
        let expected = RationalFunction::monomial(Var::Q, self.rank_r as i64, big(sign));
        for (i, g) in self.gens.iter().enumerate() {
            let det = g.det().map_err(|e| e.to_string())?;
            if det != expected {
                return Err(format!(
                    "generator {} determinant {} differs from {}",
                    i + 1,
                    det,
                    expected
                ));
            }
        }
        Ok(())
    }

    /// Restriction to one fewer strand agrees with the direct sum over the
    /// removable corners: compares characters exactly on the given words
    /// (words over n-1 strands).
    pub fn branching_check(&self, samples: &[BraidWord]) -> Result<bool, HeckeError> {
        assert!(self.n >= 3);
        let corners: Vec<HeckeRep> = self
            .diagram
            .removable_corners()
            .iter()
            .map(HeckeRep::build)
            .collect();
        for w in samples {
            if w.strands() != self.n - 1 {
                return Err(HeckeError::StrandMismatch(w.strands(), self.n - 1));
            }
            let lhs = self.character(&w.include())?;
            let mut rhs = LaurentPolynomial::zero(Var::Q);
            for corner in &corners {
                rhs = &rhs + &corner.character(w)?;
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Generator images specialized at q = 1; a pole here would be a
    /// construction bug, surfaced as an error.
    pub fn generators_at_one(&self) -> Result<Vec<RatMatrix>, HeckeError> {
        let one = big(1);
        self.gens
            .iter()
            .map(|g| g.evaluate(&one).map_err(HeckeError::from))
            .collect()
    }

    /// q = 1 specialization checks: every specialized generator is an
    /// involution, and (for n <= 5) the character-norm sum over the whole
    /// symmetric group equals n!, the irreducibility criterion for these
    /// self-dual rational characters.
    pub fn q1_specialization_check(&self) -> Result<Q1Report, HeckeError> {
        let gens = self.generators_at_one()?;
        let id = RatMatrix::identity(self.dim);
        let involutions_ok = gens.iter().all(|g| g.matmul(g) == id);
        let sum_matches = if self.n >= 2 && self.n <= 5 {
            let mut sum = BigRational::zero();
            for m in symmetric_group_images(self.n, &gens) {
                let t = m.trace();
                sum += &t * &t;
            }
            let factorial: u64 = (1..=self.n as u64).product();
            Some(sum == BigRational::from_integer(factorial.into()))
        } else {
            None
        };
        Ok(Q1Report { involutions_ok, sum_matches })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Q1Report {
    pub involutions_ok: bool,
    /// None when n > 5 (full enumeration is only run at desk scale).
    pub sum_matches: Option<bool>,
}

impl Q1Report {
    pub fn passed(&self) -> bool {
        self.involutions_ok && self.sum_matches.unwrap_or(true)
    }
}

/// Matrices of all n! symmetric-group elements, built by breadth-first search
/// over coset-representative words in the specialized generators.
fn symmetric_group_images(n: usize, gens: &[RatMatrix]) -> Vec<RatMatrix> {
    let start: Vec<u8> = (0..n as u8).collect();
    let mut index: HashMap<Vec<u8>, usize> = HashMap::new();
    index.insert(start.clone(), 0);
    let mut perms = vec![start];
    let mut mats = vec![RatMatrix::identity(gens[0].rows())];
    let mut head = 0;
    while head < perms.len() {
        let p = perms[head].clone();
        let m = mats[head].clone();
        for (gi, g) in gens.iter().enumerate() {
            let mut next = p.clone();
            next.swap(gi, gi + 1);
            if !index.contains_key(&next) {
                index.insert(next.clone(), perms.len());
                perms.push(next);
                mats.push(m.matmul(g));
            }
        }
        head += 1;
    }
    debug_assert_eq!(perms.len(), (1..=n).product::<usize>());
    mats
}
