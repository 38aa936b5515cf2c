//! Words in the braid generators, the structural maps into the symmetric
//! group and the integers, and the named relator words.
//!
//! A word doubles as a word in the punctured-sphere mapping class group (via
//! the generator correspondence half twist <-> s_i) or in the genus-2 mapping
//! class group (Dehn twist generators t_i <-> s_i). There is no normal-form
//! solver for those quotients here: triviality is only ever certified through
//! representation images or permutation/abelianization obstructions.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraidError {
    #[error("strand mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("cannot parse braid word from {0:?}; expected e.g. \"s1 -s2\"")]
    Parse(String),
    #[error("letter {0} out of range for {1} strands")]
    LetterOutOfRange(i32, usize),
}

/// A word in the generators s_1 .. s_{n-1} and their inverses.
///
/// Letters are nonzero integers `i` with `|i| <= n-1`; a negative sign means
/// the inverse generator. Words are kept as written; the freely reduced form
/// is available on demand.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        assert!(strands >= 2);
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize > strands - 1 {
                return Err(BraidError::LetterOutOfRange(l, strands));
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn empty(strands: usize) -> Self {
        assert!(strands >= 2);
        Self { strands, letters: Vec::new() }
    }

    /// Single generator s_i (1-based), or its inverse for negative i.
    pub fn generator(strands: usize, i: i32) -> Self {
        Self::new(strands, vec![i]).expect("generator index in range")
    }

    /// Parse the text syntax `"s1 s2 -s3"`.
    pub fn parse(strands: usize, input: &str) -> Result<Self, BraidError> {
        let mut letters = Vec::new();
        for tok in input.split_whitespace() {
            let (neg, rest) = match tok.strip_prefix('-') {
                Some(r) => (true, r),
                None => (false, tok),
            };
            let idx = rest
                .strip_prefix('s')
                .ok_or_else(|| BraidError::Parse(input.to_string()))?;
            let i: u32 = idx
                .parse()
                .map_err(|_| BraidError::Parse(input.to_string()))?;
            if i == 0 || i > i32::MAX as u32 {
                return Err(BraidError::Parse(input.to_string()));
            }
            let mut l = i as i32;
            if neg {
                l = -l;
            }
            letters.push(l);
        }
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn compose(&self, other: &Self) -> Result<Self, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { strands: self.strands, letters })
    }

    pub fn invert(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    /// Cancel adjacent inverse pairs to a fixed point.
    pub fn free_reduce(&self) -> Self {
        let mut stack: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last() == Some(&-l) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Self { strands: self.strands, letters: stack }
    }

    /// Image under the abelianization of the braid group.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| if l > 0 { 1 } else { -1 }).sum()
    }

    /// Image under the puncture-permutation homomorphism, letters acting as
    /// adjacent transpositions.
    pub fn permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.strands).collect();
        // images[p] = final position of the strand starting at p; compose
        // left-to-right.
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            // each letter swaps positions i, i+1 regardless of sign
            for img in images.iter_mut() {
                if *img == i {
                    *img = i + 1;
                } else if *img == i + 1 {
                    *img = i;
                }
            }
        }
        Permutation { images }
    }

    /// The central full twist `(s_1 ... s_{n-1})^n`, length n(n-1).
    pub fn full_twist(strands: usize) -> Self {
        assert!(strands >= 2);
        let mut letters = Vec::with_capacity(strands * (strands - 1));
        for _ in 0..strands {
            letters.extend((1..strands as i32).map(|i| i));
        }
        Self { strands, letters }
    }

    /// The sphere relator `s_1 ... s_{n-1} s_{n-1} ... s_1`, length 2(n-1),
    /// killed in the mapping class group of the n-punctured sphere.
    pub fn sphere_relator(strands: usize) -> Self {
        assert!(strands >= 2);
        let mut letters: Vec<i32> = (1..strands as i32).collect();
        letters.extend((1..strands as i32).rev());
        Self { strands, letters }
    }

    /// The hyperelliptic involution word `t_1 .. t_5 t_5 .. t_1` over six
    /// strands; its sphere image is the relator class.
    pub fn hyperelliptic_involution() -> Self {
        Self::sphere_relator(6)
    }

    /// Reinterpret over one more strand, letters unchanged.
    pub fn include(&self) -> Self {
        Self {
            strands: self.strands + 1,
            letters: self.letters.clone(),
        }
    }

    /// Rank of a letter in the enumeration alphabet s1 < -s1 < s2 < -s2 < ...
    fn letter_rank(l: i32) -> usize {
        (l.unsigned_abs() as usize - 1) * 2 + usize::from(l < 0)
    }

    fn letter_from_rank(rank: usize) -> i32 {
        let i = (rank / 2 + 1) as i32;
        if rank % 2 == 0 {
            i
        } else {
            -i
        }
    }

    /// Sort key giving the deterministic (length, lexicographic) stream order.
    pub fn order_key(&self) -> (usize, Vec<usize>) {
        (
            self.letters.len(),
            self.letters.iter().map(|&l| Self::letter_rank(l)).collect(),
        )
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("(empty)");
        }
        for (i, &l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if l < 0 {
                write!(f, "-s{}", -l)?;
            } else {
                write!(f, "s{}", l)?;
            }
        }
        Ok(())
    }
}

/// A bijection of {1..n}, the image of a braid word in the symmetric group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    /// images[i] = image of point i, 0-based internally.
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// 0-based image.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// Disjoint cycles on 1-based points, fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start + 1];
            seen[start] = true;
            let mut cur = self.images[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur + 1);
                cur = self.images[cur];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Cycle type as weakly decreasing lengths (fixed points omitted).
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("id");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Optional filters for the word stream.
#[derive(Debug, Clone, Copy, Default)]
pub struct WordFilter {
    pub zero_exponent_sum: bool,
    pub trivial_permutation: bool,
}

impl WordFilter {
    pub fn accepts(&self, w: &BraidWord) -> bool {
        if self.zero_exponent_sum && w.exponent_sum() != 0 {
            return false;
        }
        if self.trivial_permutation && !w.permutation().is_identity() {
            return false;
        }
        true
    }
}

/// Stream of all freely reduced words up to `max_len`, each exactly once, in
/// (length, lexicographic) order over the alphabet s1 < -s1 < s2 < -s2 < ...
///
/// The stream can be partitioned by first letter for parallel consumers; the
/// merged, sorted output order is the contract.
pub fn enumerate_words(
    strands: usize,
    max_len: usize,
    filter: WordFilter,
) -> impl Iterator<Item = BraidWord> {
    WordStream::new(strands, max_len, None).filter(move |w| filter.accepts(w))
}

/// The sub-stream of `enumerate_words` whose first letter has the given
/// alphabet rank (`0 .. 2*(strands-1)`).
pub fn enumerate_words_with_first_rank(
    strands: usize,
    max_len: usize,
    first_rank: usize,
) -> impl Iterator<Item = BraidWord> {
    WordStream::new(strands, max_len, Some(first_rank))
}

struct WordStream {
    strands: usize,
    max_len: usize,
    alphabet: usize,
    // current word as letter ranks; empty = not started
    current: Vec<usize>,
    current_len: usize,
    first_rank: Option<usize>,
    done: bool,
}

impl WordStream {
    fn new(strands: usize, max_len: usize, first_rank: Option<usize>) -> Self {
        assert!(strands >= 2);
        Self {
            strands,
            max_len,
            alphabet: 2 * (strands - 1),
            current: Vec::new(),
            current_len: 1,
            first_rank,
            done: max_len == 0,
        }
    }

    fn cancels(prev: i32, next: i32) -> bool {
        prev == -next
    }

    /// Smallest admissible rank at a position, given the previous letter.
    fn first_admissible(&self, prev: Option<i32>, from: usize) -> Option<usize> {
        (from..self.alphabet).find(|&rank| {
            let l = BraidWord::letter_from_rank(rank);
            prev.map_or(true, |p| !Self::cancels(p, l))
        })
    }

    fn emit(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self
                .current
                .iter()
                .map(|&r| BraidWord::letter_from_rank(r))
                .collect(),
        }
    }

    /// Advance `current` to the next word of length `current_len`; false when
    /// exhausted.
    fn advance(&mut self) -> bool {
        // increment like an odometer from the last position
        loop {
            let Some(&last) = self.current.last() else {
                return false;
            };
            let pos = self.current.len() - 1;
            if self.first_rank.is_some() && pos == 0 {
                // pinned first letter never advances
                self.current.pop();
                continue;
            }
            let prev = if pos == 0 {
                None
            } else {
                Some(BraidWord::letter_from_rank(self.current[pos - 1]))
            };
            self.current.pop();
            if let Some(next) = self.first_admissible(prev, last + 1) {
                self.current.push(next);
                return self.refill();
            }
            // exhausted this position: carry
        }
    }

    /// Extend `current` with smallest admissible letters up to current_len.
    fn refill(&mut self) -> bool {
        while self.current.len() < self.current_len {
            let prev = self
                .current
                .last()
                .map(|&r| BraidWord::letter_from_rank(r));
            match self.first_admissible(prev, 0) {
                Some(rank) => self.current.push(rank),
                None => return false,
            }
        }
        true
    }

    fn start_length(&mut self) -> bool {
        self.current.clear();
        if let Some(fr) = self.first_rank {
            self.current.push(fr);
        }
        self.refill()
    }
}

impl Iterator for WordStream {
    type Item = BraidWord;

    fn next(&mut self) -> Option<BraidWord> {
        if self.done {
            return None;
        }
        loop {
            if self.current.is_empty() || self.current.len() != self.current_len {
                if !self.start_length() {
                    self.done = true;
                    return None;
                }
                return Some(self.emit());
            }
            if self.advance() {
                return Some(self.emit());
            }
            self.current_len += 1;
            self.current.clear();
            if self.current_len > self.max_len {
                self.done = true;
                return None;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn free_reduction() {
        assert_eq!(w(2, &[1, -1]).free_reduce(), BraidWord::empty(2));
        assert_eq!(w(3, &[1, 2, -2, -1, 2]).free_reduce(), w(3, &[2]));
        // reduction preserves exponent sum and permutation
        let v = w(4, &[1, 3, -3, 2, -2, -1, 3]);
        let r = v.free_reduce();
        assert_eq!(v.exponent_sum(), r.exponent_sum());
        assert_eq!(v.permutation(), r.permutation());
    }

    #[test]
    fn invert_and_compose() {
        assert_eq!(w(3, &[1, 2]).invert(), w(3, &[-2, -1]));
        let c = w(4, &[1]).compose(&w(4, &[3])).unwrap();
        assert_eq!(c.len(), 2);
        assert!(matches!(
            w(3, &[1]).compose(&w(4, &[1])),
            Err(BraidError::StrandMismatch(3, 4))
        ));
        let v = w(4, &[1, -2, 3]);
        assert!(v.compose(&v.invert()).unwrap().free_reduce().is_empty());
    }

    #[test]
    fn exponent_sum_examples() {
        assert_eq!(BraidWord::full_twist(4).exponent_sum(), 12);
        for n in 2..=7 {
            assert_eq!(
                BraidWord::full_twist(n).exponent_sum(),
                (n * (n - 1)) as i64
            );
        }
        assert_eq!(w(4, &[1, -3]).exponent_sum(), 0);
        assert_eq!(BraidWord::empty(3).exponent_sum(), 0);
    }

    #[test]
    fn permutation_examples() {
        let p = w(4, &[1, -3]).permutation();
        assert_eq!(p.cycle_type(), vec![2, 2]);
        assert_eq!(p.to_string(), "(1 2)(3 4)");
        assert!(BraidWord::full_twist(5).permutation().is_identity());
        assert_eq!(w(3, &[1, 2]).permutation().cycle_type(), vec![3]);
    }

    #[test]
    fn relator_words() {
        assert_eq!(BraidWord::full_twist(3).len(), 6);
        assert_eq!(BraidWord::sphere_relator(4), w(4, &[1, 2, 3, 3, 2, 1]));
        assert!(BraidWord::sphere_relator(6).permutation().is_identity());
        assert_eq!(BraidWord::hyperelliptic_involution().len(), 10);
        let inc = w(3, &[1, 2]).include();
        assert_eq!(inc, w(4, &[1, 2]));
    }

    #[test]
    fn homomorphism_properties() {
        let samples = [
            (w(4, &[1, 2]), w(4, &[3, -1])),
            (w(4, &[-2, -2, 1]), w(4, &[3])),
            (w(4, &[1, -3, 2, 2]), w(4, &[-1, -2, -3])),
        ];
        for (a, b) in samples {
            let ab = a.compose(&b).unwrap();
            assert_eq!(ab.exponent_sum(), a.exponent_sum() + b.exponent_sum());
            let pa = a.permutation();
            let pb = b.permutation();
            let pab = ab.permutation();
            for i in 0..4 {
                assert_eq!(pab.apply(i), pb.apply(pa.apply(i)));
            }
            // include commutes with compose
            let inc = a.include().compose(&b.include()).unwrap();
            assert_eq!(inc, ab.include());
            assert_eq!(inc.exponent_sum(), ab.exponent_sum());
        }
    }

    #[test]
    fn enumeration_order_and_dedup() {
        let words: Vec<BraidWord> =
            enumerate_words(2, 2, WordFilter::default()).collect();
        assert_eq!(
            words,
            vec![w(2, &[1]), w(2, &[-1]), w(2, &[1, 1]), w(2, &[-1, -1])]
        );
        // no duplicates, all freely reduced, sorted
        let all: Vec<BraidWord> = enumerate_words(3, 4, WordFilter::default()).collect();
        let mut seen = std::collections::HashSet::new();
        for v in &all {
            assert_eq!(&v.free_reduce(), v);
            assert!(seen.insert(v.clone()), "duplicate {}", v);
        }
        let mut sorted = all.clone();
        sorted.sort_by_key(|x| x.order_key());
        assert_eq!(all, sorted);
        // count check: freely reduced words of length L over rank-2 free group
        // on 2 generators: 4*3^(L-1)
        let count_len = |l: usize| all.iter().filter(|v| v.len() == l).count();
        assert_eq!(count_len(1), 4);
        assert_eq!(count_len(2), 12);
        assert_eq!(count_len(3), 36);
    }

    #[test]
    fn enumeration_filters() {
        let words: Vec<BraidWord> = enumerate_words(
            4,
            2,
            WordFilter { zero_exponent_sum: true, trivial_permutation: false },
        )
        .collect();
        assert!(words.contains(&w(4, &[1, -3])));
        assert!(words.iter().all(|v| v.exponent_sum() == 0));
    }

    #[test]
    fn sharded_enumeration_matches_merged() {
        let merged: Vec<BraidWord> = enumerate_words(3, 3, WordFilter::default()).collect();
        let mut sharded: Vec<BraidWord> = (0..4)
            .flat_map(|rank| enumerate_words_with_first_rank(3, 3, rank).collect::<Vec<_>>())
            .collect();
        sharded.sort_by_key(|x| x.order_key());
        assert_eq!(merged, sharded);
    }

    #[test]
    fn word_parse_roundtrip() {
        let v = BraidWord::parse(4, "s1 -s2 s3").unwrap();
        assert_eq!(v, w(4, &[1, -2, 3]));
        assert_eq!(v.to_string(), "s1 -s2 s3");
        assert!(BraidWord::parse(3, "s9").is_err());
        assert!(BraidWord::parse(3, "x1").is_err());
        assert!(BraidWord::parse(3, "s0").is_err());
        assert_eq!(BraidWord::parse(3, "").unwrap(), BraidWord::empty(3));
    }
}
