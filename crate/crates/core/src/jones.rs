//! Rescaled representations over Q(t): substitute q = t^d into the Hecke
//! representation of a rectangular diagram with d its dimension, and twist by
//! the abelianization character w -> t^(-r e(w)). The full twist then dies,
//! and the sphere relator dies exactly when the diagram is rectangular, so
//! the representation descends to the mapping class group of the punctured
//! sphere. Includes the kernel-element search.

use num_rational::BigRational;
use num_traits::One;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::braid::{enumerate_words_with_first_rank, BraidError, BraidWord};
use crate::exact::{big, ExactError, ExactMatrix, LaurentPolynomial, RatMatrix, RationalFunction, Var};
use crate::hecke::{HeckeError, HeckeRep};
use crate::symplectic;
use crate::tableaux::YoungDiagram;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JonesError {
    #[error("diagram {0} is not rectangular")]
    NotRectangular(String),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error("no pole-free specialization point found from seed {0}")]
    NoScreeningPoint(u64),
}

/// The rescaled representation of the sphere mapping class group attached to
/// a rectangular diagram.
#[derive(Debug, Clone)]
pub struct JonesRep {
    hecke: HeckeRep,
    gens: Vec<ExactMatrix>,
    gen_invs: Vec<ExactMatrix>,
    degenerate: bool,
}

impl JonesRep {
    pub fn build(diagram: &YoungDiagram) -> Result<Self, JonesError> {
        if !diagram.is_rectangular() {
            return Err(JonesError::NotRectangular(diagram.to_string()));
        }
        let hecke = HeckeRep::build(diagram);
        let d = hecke.dim() as u32;
        let r = hecke.rank_r() as i64;
        let alpha = RationalFunction::monomial(Var::T, -r, big(1));
        let alpha_inv = RationalFunction::monomial(Var::T, r, big(1));
        let gens = hecke
            .generators()
            .iter()
            .map(|g| g.substitute_power(d).scalar_mul(&alpha))
            .collect();
        let gen_invs = hecke
            .generator_inverses()
            .iter()
            .map(|g| g.substitute_power(d).scalar_mul(&alpha_inv))
            .collect();
        // trivial cases: the scalar and sign representations
        let degenerate = diagram.num_rows() == 1 || diagram.rows()[0] == 1;
        Ok(Self { hecke, gens, gen_invs, degenerate })
    }

    pub fn diagram(&self) -> &YoungDiagram {
        self.hecke.diagram()
    }

    pub fn strands(&self) -> usize {
        self.hecke.strands()
    }

    pub fn dim(&self) -> usize {
        self.hecke.dim()
    }

    pub fn rank_r(&self) -> usize {
        self.hecke.rank_r()
    }

    /// True for the single-row and single-column diagrams, whose rescaled
    /// representations are trivial resp. a sign with trivial twist.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    pub fn hecke(&self) -> &HeckeRep {
        &self.hecke
    }

    pub fn generators(&self) -> &[ExactMatrix] {
        &self.gens
    }

    /// Rescale a Hecke image: substitute q = t^d, then multiply by
    /// t^(-r e), with e the exponent sum of the word evaluated.
    fn rescale(&self, m: &ExactMatrix, exponent_sum: i64) -> ExactMatrix {
        let d = self.hecke.dim() as u32;
        let r = self.hecke.rank_r() as i64;
        let twist = RationalFunction::monomial(Var::T, -r * exponent_sum, big(1));
        m.substitute_power(d).scalar_mul(&twist)
    }

    /// Image of the mapping class of a word, computed by evaluating the
    /// Hecke representation over Q(q) and rescaling the final matrix. The
    /// independent route `evaluate_via_generators` cross-checks this one.
    pub fn evaluate_mcg(&self, word: &BraidWord) -> Result<ExactMatrix, JonesError> {
        let m = self.hecke.evaluate(word)?;
        Ok(self.rescale(&m, word.exponent_sum()))
    }

    /// Image as the product of the stored generator matrices over Q(t).
    pub fn evaluate_via_generators(&self, word: &BraidWord) -> Result<ExactMatrix, JonesError> {
        if word.strands() != self.strands() {
            return Err(HeckeError::StrandMismatch(word.strands(), self.strands()).into());
        }
        let mut m = ExactMatrix::identity(Var::T, self.dim());
        for &l in word.letters() {
            let g = if l > 0 {
                &self.gens[l as usize - 1]
            } else {
                &self.gen_invs[(-l) as usize - 1]
            };
            m = m.matmul(g).map_err(JonesError::Exact)?;
        }
        Ok(m)
    }

    /// Trace of the word image over Q(t), a Laurent polynomial.
    pub fn character(&self, word: &BraidWord) -> Result<LaurentPolynomial, JonesError> {
        let chi_q = self.hecke.character(word)?;
        let d = self.hecke.dim() as u32;
        let r = self.hecke.rank_r() as i64;
        Ok(chi_q
            .substitute_power(d)
            .scale(-r * word.exponent_sum(), &BigRational::one()))
    }

    /// Both relator images must be the identity, exactly.
    pub fn check_relators(&self) -> Result<(), JonesError> {
        let n = self.strands();
        let twist = self.evaluate_mcg(&BraidWord::full_twist(n))?;
        if !twist.is_identity() {
            return Err(JonesError::Hecke(HeckeError::FullTwistNotScalar(
                self.diagram().to_string(),
            )));
        }
        let sphere = self.evaluate_mcg(&BraidWord::sphere_relator(n))?;
        if !sphere.is_identity() {
            return Err(JonesError::NotRectangular(self.diagram().to_string()));
        }
        Ok(())
    }

    /// Search all freely reduced words up to `max_len` whose image is the
    /// identity: screened by exact evaluation at a random rational t0 (sound
    /// to reject, probabilistic to accept), then confirmed symbolically when
    /// `confirm` is set.
    pub fn kernel_search(&self, config: &KernelSearchConfig) -> Result<KernelReport, JonesError> {
        let (t0, gens0, invs0) = self.screening_data(config.seed)?;
        let alphabet = 2 * (self.strands() - 1);
        let shards: Vec<usize> = (0..alphabet).collect();

        let run_shard = |&first_rank: &usize| -> Vec<BraidWord> {
            let mut hits = Vec::new();
            let mut stack: Vec<RatMatrix> = vec![RatMatrix::identity(self.dim())];
            let mut letters: Vec<i32> = Vec::new();
            for word in
                enumerate_words_with_first_rank(self.strands(), config.max_len, first_rank)
            {
                // rewind to the shared prefix of the DFS path
                let common = letters
                    .iter()
                    .zip(word.letters())
                    .take_while(|(a, b)| a == b)
                    .count();
                letters.truncate(common);
                stack.truncate(common + 1);
                for &l in &word.letters()[common..] {
                    let g = if l > 0 {
                        &gens0[l as usize - 1]
                    } else {
                        &invs0[(-l) as usize - 1]
                    };
                    let next = stack.last().expect("nonempty stack").matmul(g);
                    stack.push(next);
                    letters.push(l);
                }
                if stack.last().expect("nonempty stack").is_identity() {
                    hits.push(word);
                }
            }
            hits
        };

        let mut candidates: Vec<BraidWord> = if config.threads > 1 {
            use rayon::prelude::*;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(config.threads)
                .build()
                .expect("thread pool");
            pool.install(|| shards.par_iter().map(run_shard).collect::<Vec<_>>())
                .into_iter()
                .flatten()
                .collect()
        } else {
            shards.iter().flat_map(run_shard).collect()
        };
        candidates.sort_by_key(|w| w.order_key());

        let mut hits = Vec::with_capacity(candidates.len());
        for word in candidates {
            let screen = self
                .evaluate_screen(&word, &gens0, &invs0)
                .canonical_string();
            let fingerprint = hex_fingerprint(&screen);
            let confirmed = if config.confirm {
                Some(self.evaluate_mcg(&word)?.is_identity())
            } else {
                None
            };
            let lift_central =
                (self.strands() == 6).then(|| torelli_up_to_involution(&word));
            let permutation = word.permutation();
            hits.push(KernelHit {
                word: word.to_string(),
                permutation: permutation.to_string(),
                cycle_type: permutation.cycle_type(),
                exponent_sum: word.exponent_sum(),
                screen_fingerprint: fingerprint,
                confirmed,
                lift_central,
            });
        }
        // drop screen-only false positives once confirmed
        if config.confirm {
            hits.retain(|h| h.confirmed == Some(true));
        }

        Ok(KernelReport {
            schema: REPORT_SCHEMA.to_string(),
            diagram: self.diagram().to_string(),
            strands: self.strands(),
            dim: self.dim(),
            rank_r: self.rank_r(),
            max_len: config.max_len,
            seed: config.seed,
            specialization: t0.to_string(),
            confirmed_symbolically: config.confirm,
            hits,
        })
    }

    fn evaluate_screen(
        &self,
        word: &BraidWord,
        gens0: &[RatMatrix],
        invs0: &[RatMatrix],
    ) -> RatMatrix {
        let mut m = RatMatrix::identity(self.dim());
        for &l in word.letters() {
            let g = if l > 0 {
                &gens0[l as usize - 1]
            } else {
                &invs0[(-l) as usize - 1]
            };
            m = m.matmul(g);
        }
        m
    }

    /// Choose a pole-free rational specialization point from the seed and
    /// evaluate all generator matrices there; reseeds past poles.
    fn screening_data(
        &self,
        seed: u64,
    ) -> Result<(BigRational, Vec<RatMatrix>, Vec<RatMatrix>), JonesError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..64 {
            let numer: i64 = rng.gen_range(2..=19);
            let denom: i64 = rng.gen_range(1..=9);
            let sign: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
            let t0 = BigRational::new((sign * numer).into(), denom.into());
            if t0.is_one() || (-&t0).is_one() {
                continue;
            }
            let gens0: Result<Vec<RatMatrix>, ExactError> =
                self.gens.iter().map(|g| g.evaluate(&t0)).collect();
            let invs0: Result<Vec<RatMatrix>, ExactError> =
                self.gen_invs.iter().map(|g| g.evaluate(&t0)).collect();
            if let (Ok(gens0), Ok(invs0)) = (gens0, invs0) {
                return Ok((t0, gens0, invs0));
            }
        }
        Err(JonesError::NoScreeningPoint(seed))
    }
}

pub const REPORT_SCHEMA: &str = "jonesrep-kernel-report/1";

#[derive(Debug, Clone, Copy)]
pub struct KernelSearchConfig {
    pub max_len: usize,
    pub seed: u64,
    pub confirm: bool,
    pub threads: usize,
}

impl Default for KernelSearchConfig {
    fn default() -> Self {
        Self { max_len: 4, seed: 0, confirm: true, threads: 1 }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct KernelHit {
    pub word: String,
    pub permutation: String,
    pub cycle_type: Vec<usize>,
    pub exponent_sum: i64,
    pub screen_fingerprint: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub confirmed: Option<bool>,
    /// For six strands: whether the homology image of the word read in the
    /// twist generators is +-I (membership in the Torelli group up to the
    /// hyperelliptic involution).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lift_central: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct KernelReport {
    pub schema: String,
    pub diagram: String,
    pub strands: usize,
    pub dim: usize,
    pub rank_r: usize,
    pub max_len: usize,
    pub seed: u64,
    pub specialization: String,
    pub confirmed_symbolically: bool,
    pub hits: Vec<KernelHit>,
}

fn hex_fingerprint(payload: &str) -> String {
    let digest = Sha256::digest(payload.as_bytes());
    digest.iter().take(8).map(|b| format!("{:02x}", b)).collect()
}

/// Descent data for an arbitrary diagram, rescaled with its own r and d:
/// the full twist must die for every diagram; the sphere relator dies
/// exactly for rectangular ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DescentReport {
    pub twist_ok: bool,
    pub sphere_ok: bool,
}

pub fn descent_report(diagram: &YoungDiagram) -> Result<DescentReport, JonesError> {
    let hecke = HeckeRep::build(diagram);
    let n = hecke.strands();
    let d = hecke.dim() as u32;
    let r = hecke.rank_r() as i64;
    let rescaled = |word: &BraidWord| -> Result<ExactMatrix, JonesError> {
        let m = hecke.evaluate(word)?;
        let twist = RationalFunction::monomial(Var::T, -r * word.exponent_sum(), big(1));
        Ok(m.substitute_power(d).scalar_mul(&twist))
    };
    let twist_ok = rescaled(&BraidWord::full_twist(n))?.is_identity();
    let sphere_ok = rescaled(&BraidWord::sphere_relator(n))?.is_identity();
    Ok(DescentReport { twist_ok, sphere_ok })
}

/// Whether the homology image of a six-strand word, read in the Dehn twist
/// generators, is +-I: a kernel word of the six-puncture representation must
/// lift into the Torelli group up to the hyperelliptic involution.
pub fn torelli_up_to_involution(word: &BraidWord) -> bool {
    symplectic::evaluate_word(word).is_plus_or_minus_identity()
}

/// The specialization identity at t = -1 for the genus-2 representation: for
/// each sample word w in the twist generators, the character of the
/// six-strand rectangular-diagram representation evaluated at t = -1 equals
/// sgn(w) times the trace of the exterior-square action of the homology
/// image. Characters must be pole-free there (they are Laurent).
pub fn t_minus_one_check(rep: &JonesRep, samples: &[BraidWord]) -> Result<bool, JonesError> {
    assert_eq!(rep.strands(), 6);
    let minus_one = big(-1);
    for w in samples {
        let chi = rep.character(w)?;
        let lhs = chi
            .evaluate(&minus_one)
            .expect("Laurent characters have no pole at -1");
        let lam = symplectic::evaluate_word(w).lambda();
        let rhs = big(symplectic::sgn_of_word(w) * lam.trace());
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(rows: &[usize]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_rectangular() {
        assert!(matches!(
            JonesRep::build(&d(&[2, 1])),
            Err(JonesError::NotRectangular(_))
        ));
    }

    #[test]
    fn two_by_two_generator_shape() {
        // gen_1 = t^-1 diag(t^2, -1) = diag(t, -t^-1); d = 2, r = 1
        let rep = JonesRep::build(&d(&[2, 2])).unwrap();
        assert_eq!(rep.dim(), 2);
        assert_eq!(rep.rank_r(), 1);
        let expected = ExactMatrix::diagonal(
            Var::T,
            &[
                RationalFunction::monomial(Var::T, 1, big(1)),
                RationalFunction::monomial(Var::T, -1, big(-1)),
            ],
        );
        assert_eq!(rep.generators()[0], expected);
        assert!(!rep.is_degenerate());
    }

    #[test]
    fn degenerate_diagrams() {
        // single column: sign representation with trivial twist (r = 0)
        let sgn = JonesRep::build(&d(&[1, 1, 1])).unwrap();
        assert!(sgn.is_degenerate());
        assert_eq!(sgn.rank_r(), 0);
        let m = sgn.evaluate_mcg(&w(3, &[1])).unwrap();
        assert_eq!(m.is_scalar().unwrap(), RationalFunction::integer(Var::T, -1));
        // single row: everything dies after rescaling (d = 1, r = 1)
        let triv = JonesRep::build(&d(&[3])).unwrap();
        assert!(triv.is_degenerate());
        assert!(triv.evaluate_mcg(&w(3, &[1, 2])).unwrap().is_identity());
    }

    #[test]
    fn relators_die_for_rectangular_diagrams() {
        for rows in [vec![2usize, 2], vec![3, 3], vec![2, 2, 2]] {
            let rep = JonesRep::build(&d(&rows)).unwrap();
            rep.check_relators().unwrap();
        }
    }

    #[test]
    fn descent_table() {
        for (rows, sphere) in [
            (vec![2usize, 2], true),
            (vec![2, 1], false),
            (vec![3, 3], true),
            (vec![3, 1], false),
            (vec![2, 2, 1], false),
        ] {
            let report = descent_report(&d(&rows)).unwrap();
            assert!(report.twist_ok, "twist must die for {:?}", rows);
            assert_eq!(report.sphere_ok, sphere, "sphere descent for {:?}", rows);
        }
    }

    #[test]
    fn evaluation_routes_agree() {
        let rep = JonesRep::build(&d(&[2, 2])).unwrap();
        for letters in [vec![1, -3], vec![2, 1], vec![-2, 3, 3], vec![1, 2, -1]] {
            let word = w(4, &letters);
            assert_eq!(
                rep.evaluate_mcg(&word).unwrap(),
                rep.evaluate_via_generators(&word).unwrap()
            );
        }
        let r222 = JonesRep::build(&d(&[2, 2, 2])).unwrap();
        for letters in [vec![1, 2], vec![5, -4, 3]] {
            let word = w(6, &letters);
            assert_eq!(
                r222.evaluate_mcg(&word).unwrap(),
                r222.evaluate_via_generators(&word).unwrap()
            );
        }
    }

    #[test]
    fn swap_of_distant_strands_is_killed_for_four_punctures() {
        let rep = JonesRep::build(&d(&[2, 2])).unwrap();
        assert!(rep.evaluate_mcg(&w(4, &[1, -3])).unwrap().is_identity());
    }

    #[test]
    fn generator_determinant_is_minus_one_for_six_punctures() {
        let rep = JonesRep::build(&d(&[2, 2, 2])).unwrap();
        for g in rep.generators() {
            assert_eq!(g.det().unwrap(), RationalFunction::integer(Var::T, -1));
        }
    }

    #[test]
    fn kernel_search_four_punctures() {
        let rep = JonesRep::build(&d(&[2, 2])).unwrap();
        let report = rep
            .kernel_search(&KernelSearchConfig {
                max_len: 2,
                seed: 42,
                confirm: true,
                threads: 1,
            })
            .unwrap();
        let words: Vec<&str> = report.hits.iter().map(|h| h.word.as_str()).collect();
        assert_eq!(words, vec!["s1 -s3", "-s1 s3", "s3 -s1", "-s3 s1"]);
        for hit in &report.hits {
            assert_eq!(hit.permutation, "(1 2)(3 4)");
            assert_eq!(hit.exponent_sum, 0);
            assert_eq!(hit.confirmed, Some(true));
        }
    }

    #[test]
    fn kernel_search_is_thread_count_invariant() {
        let rep = JonesRep::build(&d(&[2, 2])).unwrap();
        let base = KernelSearchConfig { max_len: 3, seed: 7, confirm: false, threads: 1 };
        let a = rep.kernel_search(&base).unwrap();
        let b = rep
            .kernel_search(&KernelSearchConfig { threads: 4, ..base })
            .unwrap();
        assert_eq!(
            serde_json::to_string(&a.hits).unwrap(),
            serde_json::to_string(&b.hits).unwrap()
        );
    }

    #[test]
    fn lift_check_examples() {
        assert!(torelli_up_to_involution(&BraidWord::empty(6)));
        assert!(torelli_up_to_involution(&BraidWord::hyperelliptic_involution()));
        assert!(!torelli_up_to_involution(&w(6, &[1])));
    }

    #[test]
    fn t_minus_one_identity_spot_checks() {
        let rep = JonesRep::build(&d(&[2, 2, 2])).unwrap();
        let words = vec![
            BraidWord::empty(6),
            w(6, &[1]),
            w(6, &[1, 2]),
            w(6, &[2, -3, 4]),
            w(6, &[1, 2, 3, 4, 5, 1, 2, 3, 4, 5, 1, 2, 3, 4, 5]),
            BraidWord::hyperelliptic_involution(),
        ];
        assert!(t_minus_one_check(&rep, &words).unwrap());
    }

    #[test]
    fn character_twist_consistency() {
        // character route agrees with the matrix trace route
        let rep = JonesRep::build(&d(&[2, 2, 2])).unwrap();
        for letters in [vec![1], vec![1, -2], vec![3, 4, 5]] {
            let word = w(6, &letters);
            let chi = rep.character(&word).unwrap();
            let tr = rep.evaluate_mcg(&word).unwrap().trace().unwrap();
            assert_eq!(tr.as_laurent().unwrap(), &chi);
        }
    }
}
