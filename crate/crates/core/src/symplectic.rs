//! The genus-2 symplectic side: the homology representation of the mapping
//! class group by transvections, its induced action on the quotient of the
//! second exterior power by the symplectic class, the sign character, mod-p
//! reduction, and brute-force certificates for the finite symplectic groups.

use std::collections::HashMap;
use std::fmt;

use crate::braid::BraidWord;

/// 4x4 integer matrix preserving the standard symplectic form on the basis
/// (a1, b1, a2, b2) with <a_i, b_i> = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpMatrix {
    entries: [[i64; 4]; 4],
}

/// The symplectic Gram matrix J on (a1, b1, a2, b2).
const FORM: [[i64; 4]; 4] = [
    [0, 1, 0, 0],
    [-1, 0, 0, 0],
    [0, 0, 0, 1],
    [0, 0, -1, 0],
];

fn pairing(x: &[i64; 4], y: &[i64; 4]) -> i64 {
    let mut acc = 0i64;
    for i in 0..4 {
        for j in 0..4 {
            acc += x[i] * FORM[i][j] * y[j];
        }
    }
    acc
}

impl SpMatrix {
    pub fn identity() -> Self {
        let mut entries = [[0; 4]; 4];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = 1;
        }
        Self { entries }
    }

    pub fn minus_identity() -> Self {
        let mut m = Self::identity();
        for i in 0..4 {
            m.entries[i][i] = -1;
        }
        m
    }

    pub fn from_rows(entries: [[i64; 4]; 4]) -> Self {
        Self { entries }
    }

    pub fn entries(&self) -> &[[i64; 4]; 4] {
        &self.entries
    }

    /// The transvection x -> x + <x, c> c along a primitive class c.
    pub fn transvection(c: [i64; 4]) -> Self {
        let mut entries = [[0i64; 4]; 4];
        for col in 0..4 {
            let mut e = [0i64; 4];
            e[col] = 1;
            let coeff = pairing(&e, &c);
            for r in 0..4 {
                entries[r][col] = i64::from(r == col) + coeff * c[r];
            }
        }
        Self { entries }
    }

    /// The inverse transvection x -> x - <x, c> c.
    pub fn transvection_inverse(c: [i64; 4]) -> Self {
        let t = Self::transvection(c);
        let mut entries = [[0i64; 4]; 4];
        for r in 0..4 {
            for col in 0..4 {
                entries[r][col] = 2 * i64::from(r == col) - t.entries[r][col];
            }
        }
        Self { entries }
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        let mut out = [[0i64; 4]; 4];
        for r in 0..4 {
            for k in 0..4 {
                let a = self.entries[r][k];
                if a == 0 {
                    continue;
                }
                for c in 0..4 {
                    out[r][c] = out[r][c]
                        .checked_add(a.checked_mul(rhs.entries[k][c]).expect("entry overflow"))
                        .expect("entry overflow");
                }
            }
        }
        Self { entries: out }
    }

    /// Inverse from the symplectic structure: X^-1 = -J X^T J.
    pub fn inverse(&self) -> Self {
        let j = Self { entries: FORM };
        let mut xt = [[0i64; 4]; 4];
        for r in 0..4 {
            for c in 0..4 {
                xt[r][c] = self.entries[c][r];
            }
        }
        let m = j.matmul(&Self { entries: xt }).matmul(&j);
        let mut out = m;
        for row in &mut out.entries {
            for e in row.iter_mut() {
                *e = -*e;
            }
        }
        out
    }

    /// X^T J X = J.
    pub fn is_symplectic(&self) -> bool {
        let mut lhs = [[0i64; 4]; 4];
        for (i, lhs_row) in lhs.iter_mut().enumerate() {
            for (j, out) in lhs_row.iter_mut().enumerate() {
                let mut acc = 0i64;
                for k in 0..4 {
                    for l in 0..4 {
                        acc += self.entries[k][i] * FORM[k][l] * self.entries[l][j];
                    }
                }
                *out = acc;
            }
        }
        lhs == FORM
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn is_plus_or_minus_identity(&self) -> bool {
        *self == Self::identity() || *self == Self::minus_identity()
    }

    /// Largest |X_ij - delta_ij|, the quantity controlling which mod-p
    /// reductions can hide a nontrivial matrix.
    pub fn max_deviation_from_identity(&self) -> i64 {
        let mut best = 0;
        for r in 0..4 {
            for c in 0..4 {
                let delta = i64::from(r == c);
                best = best.max((self.entries[r][c] - delta).abs());
            }
        }
        best
    }

    /// Entry-wise reduction mod p.
    pub fn mod_p(&self, p: u8) -> SpModP {
        let mut entries = [0u8; 16];
        for r in 0..4 {
            for c in 0..4 {
                entries[r * 4 + c] = self.entries[r][c].rem_euclid(p as i64) as u8;
            }
        }
        SpModP { p, entries }
    }

    /// Induced action on the quotient of the second exterior power of the
    /// homology by the symplectic class.
    pub fn lambda(&self) -> Lambda5 {
        Lambda5::from_sp(self)
    }
}

impl fmt::Display for SpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "[ {} {} {} {} ]", row[0], row[1], row[2], row[3])?;
        }
        Ok(())
    }
}

/// The homology images of the five Dehn twist generators of the genus-2
/// mapping class group: transvections along a chain of primitive classes
/// c_1..c_5 with <c_i, c_{i+1}> = 1 and <c_i, c_j> = 0 for |i-j| >= 2.
///
/// Concretely c = (a1, b1, -a1-a2, -b2, a2); a transvection is insensitive to
/// the sign of its class, so the pairing normalization costs nothing.
pub const CHAIN_CLASSES: [[i64; 4]; 5] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [-1, 0, -1, 0],
    [0, 0, 0, -1],
    [0, 0, 1, 0],
];

pub fn twist_generators() -> [SpMatrix; 5] {
    CHAIN_CLASSES.map(SpMatrix::transvection)
}

/// Evaluate a word in the twist generators t_1..t_5 (and inverses) in the
/// integral symplectic group.
pub fn evaluate_word(word: &BraidWord) -> SpMatrix {
    assert_eq!(word.strands(), 6, "twist words live over six strands");
    let gens = twist_generators();
    let invs: [SpMatrix; 5] = CHAIN_CLASSES.map(SpMatrix::transvection_inverse);
    let mut m = SpMatrix::identity();
    for &l in word.letters() {
        let g = if l > 0 {
            &gens[l as usize - 1]
        } else {
            &invs[(-l) as usize - 1]
        };
        m = m.matmul(g);
    }
    m
}

/// The sign character on words in the twist generators: -1 per letter. It
/// depends only on the parity of the exponent sum and is evaluated on words
/// only, never on bare symplectic matrices.
pub fn sgn_of_word(word: &BraidWord) -> i64 {
    if word.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Torelli membership certificate for a word: trivial homology action.
pub fn is_torelli(word: &BraidWord) -> bool {
    evaluate_word(word).is_identity()
}

/// 5x5 integer matrix acting on the quotient basis
/// e1 = a1^a2, e2 = a1^b2, e3 = b1^a2, e4 = b1^b2, e5 = a1^b1,
/// where a2^b2 = -a1^b1 modulo the symplectic class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Lambda5 {
    entries: [[i64; 5]; 5],
}

/// Index pairs of the quotient basis inside the standard wedge basis; the
/// sixth pair (a2, b2) folds onto minus the fifth.
const WEDGE_PAIRS: [(usize, usize); 5] = [(0, 2), (0, 3), (1, 2), (1, 3), (0, 1)];

impl Lambda5 {
    pub fn identity() -> Self {
        let mut entries = [[0; 5]; 5];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = 1;
        }
        Self { entries }
    }

    fn from_sp(x: &SpMatrix) -> Self {
        // The lift must fix the symplectic class omega = a1^b1 + a2^b2; the
        // quotient action is only defined because it does.
        let w1 = wedge_image(x, 0, 1);
        let w2 = wedge_image(x, 2, 3);
        let omega: Vec<i64> = w1.iter().zip(w2.iter()).map(|(u, v)| u + v).collect();
        assert_eq!(omega, vec![0, 0, 0, 0, 1, 1], "symplectic class not preserved");

        let mut entries = [[0i64; 5]; 5];
        for (col, &(i, j)) in WEDGE_PAIRS.iter().enumerate() {
            let img = wedge_image(x, i, j);
            for (row, entry_row) in entries.iter_mut().enumerate() {
                entry_row[col] = img[row];
            }
            // fold a2^b2 onto -a1^b1
            entries[4][col] -= img[5];
        }
        Self { entries }
    }

    pub fn entries(&self) -> &[[i64; 5]; 5] {
        &self.entries
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        let mut out = [[0i64; 5]; 5];
        for r in 0..5 {
            for k in 0..5 {
                let a = self.entries[r][k];
                if a == 0 {
                    continue;
                }
                for c in 0..5 {
                    out[r][c] += a * rhs.entries[k][c];
                }
            }
        }
        Self { entries: out }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn trace(&self) -> i64 {
        (0..5).map(|i| self.entries[i][i]).sum()
    }
}

/// Coordinates of (X e_i) ^ (X e_j) in the six-element wedge basis ordered
/// a1^a2, a1^b2, b1^a2, b1^b2, a1^b1, a2^b2.
fn wedge_image(x: &SpMatrix, i: usize, j: usize) -> [i64; 6] {
    let e = x.entries();
    let coeff = |k: usize, l: usize| e[k][i] * e[l][j] - e[l][i] * e[k][j];
    [
        coeff(0, 2),
        coeff(0, 3),
        coeff(1, 2),
        coeff(1, 3),
        coeff(0, 1),
        coeff(2, 3),
    ]
}

// ---------------------------------------------------------------------------
// Finite symplectic groups mod p
// ---------------------------------------------------------------------------

/// 4x4 matrix over Z/pZ satisfying the symplectic condition mod p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpModP {
    p: u8,
    entries: [u8; 16],
}

impl SpModP {
    pub fn identity(p: u8) -> Self {
        let mut entries = [0u8; 16];
        for i in 0..4 {
            entries[i * 4 + i] = 1;
        }
        Self { p, entries }
    }

    pub fn minus_identity(p: u8) -> Self {
        let mut entries = [0u8; 16];
        for i in 0..4 {
            entries[i * 4 + i] = p - 1;
        }
        Self { p, entries }
    }

    pub fn p(&self) -> u8 {
        self.p
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.entries[r * 4 + c]
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        let p = self.p as u32;
        let mut out = [0u8; 16];
        for r in 0..4 {
            for c in 0..4 {
                let mut acc = 0u32;
                for k in 0..4 {
                    acc += self.entries[r * 4 + k] as u32 * rhs.entries[k * 4 + c] as u32;
                }
                out[r * 4 + c] = (acc % p) as u8;
            }
        }
        Self { p: self.p, entries: out }
    }

    /// X^-1 = -J X^T J mod p.
    pub fn inverse(&self) -> Self {
        let p = self.p as i64;
        let mut out = [0u8; 16];
        for r in 0..4 {
            for c in 0..4 {
                let mut acc = 0i64;
                for k in 0..4 {
                    for l in 0..4 {
                        acc += FORM[r][k] * self.entries[l * 4 + k] as i64 * FORM[l][c];
                    }
                }
                out[r * 4 + c] = (-acc).rem_euclid(p) as u8;
            }
        }
        Self { p: self.p, entries: out }
    }

    pub fn is_symplectic(&self) -> bool {
        let p = self.p as i64;
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = 0i64;
                for k in 0..4 {
                    for l in 0..4 {
                        acc += self.entries[k * 4 + i] as i64
                            * FORM[k][l]
                            * self.entries[l * 4 + j] as i64;
                    }
                }
                if acc.rem_euclid(p) != FORM[i][j].rem_euclid(p) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.p)
    }

    pub fn negate(&self) -> Self {
        let p = self.p;
        let mut out = [0u8; 16];
        for (i, &e) in self.entries.iter().enumerate() {
            out[i] = if e == 0 { 0 } else { p - e };
        }
        Self { p, entries: out }
    }

    /// Packed 64-bit key (4 bits per entry; p <= 13).
    pub fn key(&self) -> u64 {
        let mut k = 0u64;
        for &e in &self.entries {
            k = (k << 4) | e as u64;
        }
        k
    }

    /// Induced 5x5 action mod p on the exterior-square quotient.
    pub fn lambda_p(&self) -> [[u8; 5]; 5] {
        let p = self.p as i64;
        let e = |r: usize, c: usize| self.entries[r * 4 + c] as i64;
        let coeff = |k: usize, l: usize, i: usize, j: usize| e(k, i) * e(l, j) - e(l, i) * e(k, j);
        let mut out = [[0u8; 5]; 5];
        for (col, &(i, j)) in WEDGE_PAIRS.iter().enumerate() {
            let img = [
                coeff(0, 2, i, j),
                coeff(0, 3, i, j),
                coeff(1, 2, i, j),
                coeff(1, 3, i, j),
                coeff(0, 1, i, j) - coeff(2, 3, i, j),
            ];
            for (row, value) in img.iter().enumerate() {
                out[row][col] = value.rem_euclid(p) as u8;
            }
        }
        out
    }

    pub fn lambda_p_is_identity(&self) -> bool {
        let l = self.lambda_p();
        (0..5).all(|r| (0..5).all(|c| l[r][c] == u8::from(r == c)))
    }
}

impl fmt::Display for SpModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..4 {
            if r > 0 {
                f.write_str("\n")?;
            }
            write!(
                f,
                "[ {} {} {} {} ]",
                self.get(r, 0),
                self.get(r, 1),
                self.get(r, 2),
                self.get(r, 3)
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpError {
    #[error("p = {0} exceeds the enumeration resource budget")]
    BudgetExceeded(u8),
    #[error("p = {0} is not a supported odd prime")]
    BadPrime(u8),
}

/// |Sp(4, Z/p)| = p^4 (p^2 - 1)(p^4 - 1).
pub fn sp4_order(p: u64) -> u64 {
    p.pow(4) * (p * p - 1) * (p.pow(4) - 1)
}

/// The element table of Sp(4, Z/p), generated by breadth-first search from
/// the twist generator images (which generate, since the homology
/// representation and the mod-p reduction are both onto). Records one
/// shortest word per element.
pub struct GroupTable {
    p: u8,
    elements: Vec<SpModP>,
    index: HashMap<u64, u32>,
    /// (parent element, generator letter) per element; letters 1..=5, with
    /// negatives for inverses and 0 at the identity root.
    parents: Vec<(u32, i8)>,
}

impl GroupTable {
    /// BFS enumeration. The memory budget restricts this to p <= 5.
    pub fn enumerate(p: u8) -> Result<Self, SpError> {
        if !ESCAPE_PRIMES.contains(&p) {
            return Err(SpError::BadPrime(p));
        }
        if p > 5 {
            return Err(SpError::BudgetExceeded(p));
        }
        let gens: Vec<SpModP> = twist_generators().iter().map(|t| t.mod_p(p)).collect();
        let invs: Vec<SpModP> = CHAIN_CLASSES
            .iter()
            .map(|&c| SpMatrix::transvection_inverse(c).mod_p(p))
            .collect();
        let id = SpModP::identity(p);
        let mut elements = vec![id];
        let mut index = HashMap::new();
        index.insert(id.key(), 0u32);
        let mut parents = vec![(0u32, 0i8)];
        let mut head = 0usize;
        while head < elements.len() {
            let current = elements[head];
            for (gi, g) in gens.iter().enumerate() {
                for (sign, gen) in [(1i8, g), (-1i8, &invs[gi])] {
                    let next = current.matmul(gen);
                    let key = next.key();
                    if !index.contains_key(&key) {
                        index.insert(key, elements.len() as u32);
                        elements.push(next);
                        parents.push((head as u32, sign * (gi as i8 + 1)));
                    }
                }
            }
            head += 1;
        }
        Ok(Self { p, elements, index, parents })
    }

    pub fn p(&self) -> u8 {
        self.p
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn elements(&self) -> &[SpModP] {
        &self.elements
    }

    pub fn contains(&self, m: &SpModP) -> bool {
        self.index.contains_key(&m.key())
    }

    pub fn index_of(&self, m: &SpModP) -> Option<u32> {
        self.index.get(&m.key()).copied()
    }

    /// Shortest word (letters 1..=5, negatives for inverses) reaching the
    /// element from the identity.
    pub fn word_for(&self, m: &SpModP) -> Option<Vec<i8>> {
        let mut i = self.index_of(m)?;
        let mut letters = Vec::new();
        while i != 0 {
            let (parent, letter) = self.parents[i as usize];
            letters.push(letter);
            i = parent;
        }
        letters.reverse();
        Some(letters)
    }

    /// Kernel of the induced exterior-square action: all X with
    /// lambda_p(X) = I.
    pub fn kernel_of_lambda(&self) -> Vec<SpModP> {
        self.elements
            .iter()
            .filter(|m| m.lambda_p_is_identity())
            .copied()
            .collect()
    }
}

/// Certificates for the projective quotient PSp(4, Z/p) = Sp / {+-I}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PspChecks {
    pub order: u64,
    pub center_trivial: bool,
    pub simple: bool,
    pub conjugacy_classes: usize,
}

/// Canonical representative of {X, -X}: the one with the smaller packed key.
fn psp_key(m: &SpModP) -> u64 {
    m.key().min(m.negate().key())
}

fn psp_rep(m: &SpModP) -> SpModP {
    let n = m.negate();
    if m.key() <= n.key() {
        *m
    } else {
        n
    }
}

/// Center triviality and simplicity of PSp(4, Z/p), certified by brute force
/// over the enumerated table: the center by commutation against generators,
/// simplicity by checking that the normal closure of a representative of
/// every nontrivial conjugacy class is the whole group.
pub fn psp_checks(table: &GroupTable) -> PspChecks {
    let p = table.p();
    let gens: Vec<SpModP> = twist_generators().iter().map(|t| t.mod_p(p)).collect();

    let mut psp_index: HashMap<u64, u32> = HashMap::new();
    let mut psp_elems: Vec<SpModP> = Vec::new();
    for m in table.elements() {
        let key = psp_key(m);
        if !psp_index.contains_key(&key) {
            psp_index.insert(key, psp_elems.len() as u32);
            psp_elems.push(psp_rep(m));
        }
    }
    let order = psp_elems.len() as u64;

    // Center: an element commuting with every generator (up to sign) is
    // central, since the generators generate.
    let mut central = 0usize;
    for m in &psp_elems {
        let inv = m.inverse();
        let is_central = gens.iter().all(|g| {
            let comm = m.matmul(g).matmul(&inv).matmul(&g.inverse());
            comm.is_identity() || comm == SpModP::minus_identity(p)
        });
        if is_central {
            central += 1;
        }
    }
    let center_trivial = central == 1;

    // Conjugacy classes by orbit search under generator conjugation.
    let n = psp_elems.len();
    let mut class_of = vec![u32::MAX; n];
    let mut class_reps: Vec<u32> = Vec::new();
    let gen_invs: Vec<SpModP> = gens.iter().map(|g| g.inverse()).collect();
    for start in 0..n {
        if class_of[start] != u32::MAX {
            continue;
        }
        let class_id = class_reps.len() as u32;
        class_reps.push(start as u32);
        class_of[start] = class_id;
        let mut stack = vec![start as u32];
        while let Some(i) = stack.pop() {
            let m = psp_elems[i as usize];
            for (g, ginv) in gens.iter().zip(&gen_invs) {
                let conj = psp_rep(&g.matmul(&m).matmul(ginv));
                let j = psp_index[&psp_key(&conj)];
                if class_of[j as usize] == u32::MAX {
                    class_of[j as usize] = class_id;
                    stack.push(j);
                }
            }
        }
    }

    let identity_class = class_of[psp_index[&psp_key(&SpModP::identity(p))] as usize];
    let mut simple = true;
    for (cid, &rep_idx) in class_reps.iter().enumerate() {
        if cid as u32 == identity_class {
            continue;
        }
        if normal_closure_order(p, &psp_elems[rep_idx as usize], &gens) != order {
            simple = false;
            break;
        }
    }

    PspChecks {
        order,
        center_trivial,
        simple,
        conjugacy_classes: class_reps.len(),
    }
}

/// Order of the normal closure of `seed` in PSp(4, Z/p): generate the
/// subgroup, then close under conjugation by the group generators until
/// normal.
fn normal_closure_order(p: u8, seed: &SpModP, gens: &[SpModP]) -> u64 {
    let mut closure_gens: Vec<SpModP> = vec![*seed];
    loop {
        let identity = SpModP::identity(p);
        let mut index: HashMap<u64, u32> = HashMap::new();
        let mut elems: Vec<SpModP> = vec![identity];
        index.insert(psp_key(&identity), 0);
        let with_invs: Vec<SpModP> = closure_gens
            .iter()
            .flat_map(|g| [*g, g.inverse()])
            .collect();
        let mut head = 0usize;
        while head < elems.len() {
            let current = elems[head];
            for g in &with_invs {
                let next = psp_rep(&current.matmul(g));
                let key = psp_key(&next);
                if !index.contains_key(&key) {
                    index.insert(key, elems.len() as u32);
                    elems.push(next);
                }
            }
            head += 1;
        }
        let mut added = false;
        for g in gens {
            let ginv = g.inverse();
            for s in closure_gens.clone() {
                let conj = psp_rep(&g.matmul(&s).matmul(&ginv));
                if !index.contains_key(&psp_key(&conj)) {
                    closure_gens.push(conj);
                    added = true;
                }
            }
        }
        if !added {
            return elems.len() as u64;
        }
    }
}

/// Primes used by the escape check: any nonidentity integral matrix is
/// visible mod p once p exceeds twice its largest deviation from the
/// identity.
pub const ESCAPE_PRIMES: [u8; 5] = [3, 5, 7, 11, 13];

/// Smallest listed prime whose reduction detects `x`, if any.
pub fn escape_prime(x: &SpMatrix) -> Option<u8> {
    ESCAPE_PRIMES.into_iter().find(|&p| !x.mod_p(p).is_identity())
}

/// True iff every nonidentity sample escapes at some listed prime; returns
/// the per-sample witnesses.
pub fn intersection_escape_check(samples: &[SpMatrix]) -> (bool, Vec<Option<u8>>) {
    let witnesses: Vec<Option<u8>> = samples.iter().map(escape_prime).collect();
    let ok = samples
        .iter()
        .zip(&witnesses)
        .all(|(x, w)| x.is_identity() || w.is_some());
    (ok, witnesses)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(letters: &[i32]) -> BraidWord {
        BraidWord::new(6, letters.to_vec()).unwrap()
    }

    #[test]
    fn chain_classes_have_chain_pairings() {
        for i in 0..4 {
            assert_eq!(pairing(&CHAIN_CLASSES[i], &CHAIN_CLASSES[i + 1]), 1);
        }
        for i in 0..5 {
            for j in (i + 2)..5 {
                assert_eq!(pairing(&CHAIN_CLASSES[i], &CHAIN_CLASSES[j]), 0);
            }
        }
    }

    #[test]
    fn transvections_are_symplectic_and_invertible() {
        for t in twist_generators() {
            assert!(t.is_symplectic());
            assert!(t.matmul(&t.inverse()).is_identity());
        }
        for c in CHAIN_CLASSES {
            let t = SpMatrix::transvection(c);
            let ti = SpMatrix::transvection_inverse(c);
            assert!(t.matmul(&ti).is_identity());
        }
    }

    #[test]
    fn braid_and_commutation_relations() {
        let t = twist_generators();
        for i in 0..4 {
            let lhs = t[i].matmul(&t[i + 1]).matmul(&t[i]);
            let rhs = t[i + 1].matmul(&t[i]).matmul(&t[i + 1]);
            assert_eq!(lhs, rhs, "braid relation at {}", i + 1);
        }
        for i in 0..5 {
            for j in (i + 2)..5 {
                assert_eq!(t[i].matmul(&t[j]), t[j].matmul(&t[i]));
            }
        }
    }

    #[test]
    fn hyperelliptic_involution_maps_to_minus_identity() {
        let iota = BraidWord::hyperelliptic_involution();
        assert_eq!(evaluate_word(&iota), SpMatrix::minus_identity());
    }

    #[test]
    fn chain_product_powers() {
        // (T1..T5)^6 = I, while the cube is a noncentral involution: the
        // cube's word permutes the six punctures as (1 4)(2 5)(3 6), so its
        // mod-2 class is not central and the cube cannot equal +-I.
        let p = evaluate_word(&word(&[1, 2, 3, 4, 5]));
        let p3 = p.matmul(&p).matmul(&p);
        assert_eq!(p3.matmul(&p3), SpMatrix::identity());
        assert!(!p3.is_plus_or_minus_identity());
        assert_eq!(
            p3,
            SpMatrix::from_rows([
                [0, 0, 0, -1],
                [0, 0, 1, 0],
                [0, 1, 0, 0],
                [-1, 0, 0, 0]
            ])
        );
    }

    #[test]
    fn sgn_examples() {
        assert_eq!(sgn_of_word(&word(&[1])), -1);
        assert_eq!(sgn_of_word(&BraidWord::empty(6)), 1);
        let fifteen = word(&[1, 2, 3, 4, 5, 1, 2, 3, 4, 5, 1, 2, 3, 4, 5]);
        assert_eq!(sgn_of_word(&fifteen), -1);
        assert_eq!(sgn_of_word(&BraidWord::hyperelliptic_involution()), 1);
        assert_eq!(sgn_of_word(&word(&[1, -2, 3])), -1);
    }

    #[test]
    fn torelli_sample_from_two_chain() {
        // (t1 t2)^6 is a separating twist: trivial homology action
        let mut letters = Vec::new();
        for _ in 0..6 {
            letters.extend([1, 2]);
        }
        let w = word(&letters);
        assert!(is_torelli(&w));
        assert!(evaluate_word(&w).lambda().is_identity());
    }

    #[test]
    fn lambda_basics() {
        assert!(SpMatrix::identity().lambda().is_identity());
        assert!(SpMatrix::minus_identity().lambda().is_identity());
        let t1 = twist_generators()[0];
        assert!(!t1.lambda().is_identity());
        assert_eq!(t1.lambda().trace(), 5);
    }

    #[test]
    fn lambda_is_multiplicative() {
        let t = twist_generators();
        let pairs = [
            (t[0].matmul(&t[2]), t[1].matmul(&t[4])),
            (t[3], t[2].matmul(&t[2])),
            (
                evaluate_word(&word(&[1, -2, 5])),
                evaluate_word(&word(&[4, 4, -3])),
            ),
        ];
        for (a, b) in pairs {
            assert_eq!(a.matmul(&b).lambda(), a.lambda().matmul(&b.lambda()));
        }
    }

    #[test]
    fn mod_p_reduction_and_keys() {
        let t = twist_generators()[2];
        let m = t.mod_p(3);
        assert!(m.is_symplectic());
        assert!(m.matmul(&m.inverse()).is_identity());
        assert_ne!(SpModP::identity(3).key(), SpModP::minus_identity(3).key());
    }

    #[test]
    fn escape_examples() {
        // transvection cubed has an off-diagonal entry 3: invisible mod 3
        let t = twist_generators()[0];
        let t3 = t.matmul(&t).matmul(&t);
        assert_eq!(escape_prime(&t3), Some(5));
        assert_eq!(escape_prime(&SpMatrix::minus_identity()), Some(3));
        assert_eq!(escape_prime(&SpMatrix::identity()), None);
        let (ok, witnesses) = intersection_escape_check(&[t3, SpMatrix::minus_identity()]);
        assert!(ok);
        assert_eq!(witnesses, vec![Some(5), Some(3)]);
    }
}
