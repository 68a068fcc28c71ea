//! Real Clifford modules for `Cl(n, 0)` (all generators squaring to `+1`),
//! realized by signed-permutation gamma matrices.
//!
//! Every gamma is a tensor product of the real 2×2 matrices
//! `I`, `X` (swap), `Z` (diagonal flip) and `E = [[0, 1], [-1, 0]]`. Small
//! cases come from a deterministic search over such products; larger ones
//! from the standard recursions
//!
//! * `Cl(9,0)` on 16: `E⊗A_a` (a = 1..7), `X⊗I`, `Z⊗I`, where `A_a` are seven
//!   anticommuting antisymmetric 8×8 products;
//! * `Cl(8+m,0)`: `g_a⊗I` (a = 1..8) and `g_9⊗h_j` (j = 1..m) with `h` the
//!   minimal `Cl(m,0)` module.
//!
//! The resulting module has the minimal real dimension for every
//! `n ≤ 16`, and whenever `n ≡ 0 (mod 4)` the chirality operator is diagonal,
//! so the half-spinors are coordinate subspaces.

use crate::linalg::{frac, Rational, SparseMatrix};

use super::BuildError;

/// Largest supported number of generators.
pub const MAX_GENERATORS: usize = 16;

/// Letters of a tensor-product word: `I`, `X`, `Z`, `E`.
type Word = Vec<u8>;

const I: u8 = 0;
const X: u8 = 1;
const Z: u8 = 2;
const E: u8 = 3;

fn letters_anticommute(a: u8, b: u8) -> bool {
    a != I && b != I && a != b
}

fn words_anticommute(a: &[u8], b: &[u8]) -> bool {
    a.iter().zip(b).filter(|(x, y)| letters_anticommute(**x, **y)).count() % 2 == 1
}

fn word_is_symmetric(w: &[u8]) -> bool {
    w.iter().filter(|&&l| l == E).count() % 2 == 0
}

/// A signed permutation matrix: `M e_s = sign[s] e_{target[s]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    target: Vec<u32>,
    sign: Vec<i8>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm {
            target: (0..n as u32).collect(),
            sign: vec![1; n],
        }
    }

    fn letter(l: u8) -> Self {
        match l {
            I => SignedPerm::identity(2),
            X => SignedPerm {
                target: vec![1, 0],
                sign: vec![1, 1],
            },
            Z => SignedPerm {
                target: vec![0, 1],
                sign: vec![1, -1],
            },
            E => SignedPerm {
                target: vec![1, 0],
                sign: vec![-1, 1],
            },
            _ => unreachable!("unknown letter"),
        }
    }

    fn from_word(w: &[u8]) -> Self {
        w.iter()
            .fold(SignedPerm::identity(1), |acc, &l| acc.tensor(&SignedPerm::letter(l)))
    }

    pub fn dim(&self) -> usize {
        self.target.len()
    }

    /// Image of the basis vector `e_s` as `(index, sign)`.
    pub fn apply(&self, s: usize) -> (usize, i8) {
        (self.target[s] as usize, self.sign[s])
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        assert_eq!(self.dim(), other.dim());
        let mut target = Vec::with_capacity(self.dim());
        let mut sign = Vec::with_capacity(self.dim());
        for s in 0..other.dim() {
            let (t, a) = other.apply(s);
            let (u, b) = self.apply(t);
            target.push(u as u32);
            sign.push(a * b);
        }
        SignedPerm { target, sign }
    }

    pub fn tensor(&self, other: &SignedPerm) -> SignedPerm {
        let n = other.dim();
        let mut target = Vec::with_capacity(self.dim() * n);
        let mut sign = Vec::with_capacity(self.dim() * n);
        for s in 0..self.dim() {
            for t in 0..n {
                target.push(self.target[s] * n as u32 + other.target[t]);
                sign.push(self.sign[s] * other.sign[t]);
            }
        }
        SignedPerm { target, sign }
    }

    pub fn transpose(&self) -> SignedPerm {
        let mut target = vec![0u32; self.dim()];
        let mut sign = vec![0i8; self.dim()];
        for s in 0..self.dim() {
            let (t, g) = self.apply(s);
            target[t] = s as u32;
            sign[t] = g;
        }
        SignedPerm { target, sign }
    }

    pub fn negate(&self) -> SignedPerm {
        SignedPerm {
            target: self.target.clone(),
            sign: self.sign.iter().map(|s| -s).collect(),
        }
    }

    pub fn is_diagonal(&self) -> bool {
        self.target.iter().enumerate().all(|(s, &t)| s == t as usize)
    }

    pub fn is_identity(&self) -> bool {
        *self == SignedPerm::identity(self.dim())
    }

    /// Restriction to a coordinate subspace that the matrix preserves.
    /// `subspace` lists the kept coordinates in increasing order.
    pub fn restrict(&self, subspace: &[usize]) -> Option<SignedPerm> {
        let mut position = vec![usize::MAX; self.dim()];
        for (p, &s) in subspace.iter().enumerate() {
            position[s] = p;
        }
        let mut target = Vec::with_capacity(subspace.len());
        let mut sign = Vec::with_capacity(subspace.len());
        for &s in subspace {
            let (t, g) = self.apply(s);
            if position[t] == usize::MAX {
                return None;
            }
            target.push(position[t] as u32);
            sign.push(g);
        }
        Some(SignedPerm { target, sign })
    }

    pub fn to_sparse(&self) -> SparseMatrix {
        let mut m = SparseMatrix::zeros(self.dim(), self.dim());
        for s in 0..self.dim() {
            let (t, g) = self.apply(s);
            m.set(t, s, Rational::from_integer(g.into())).expect("in bounds");
        }
        m
    }
}

/// Real Clifford module of `Cl(n, 0)`.
#[derive(Clone, Debug)]
pub struct CliffordRep {
    pub n: usize,
    pub dim_spinor: usize,
    pub gammas: Vec<SignedPerm>,
    words: Vec<Word>,
}

/// Chirality data for even `n`.
#[derive(Clone, Debug)]
pub struct Chirality {
    /// `γ_1 γ_2 ⋯ γ_n`.
    pub omega: SignedPerm,
    /// `ω² = +1` (n ≡ 0 mod 4) or `-1` (n ≡ 2 mod 4).
    pub omega_squared: i8,
    /// `(1 + ω)/2` and `(1 - ω)/2`, present when `ω² = +1`.
    pub projectors: Option<(SparseMatrix, SparseMatrix)>,
}

/// Builds the minimal real module of `Cl(n, 0)` for `1 ≤ n ≤ 16`.
pub fn clifford(n: usize) -> Result<CliffordRep, BuildError> {
    if n == 0 || n > MAX_GENERATORS {
        return Err(BuildError::Unsupported(format!(
            "clifford({n}): need 1 <= n <= {MAX_GENERATORS}"
        )));
    }
    let words = clifford_words(n);
    let gammas: Vec<SignedPerm> = words.iter().map(|w| SignedPerm::from_word(w)).collect();
    Ok(CliffordRep {
        n,
        dim_spinor: gammas[0].dim(),
        gammas,
        words,
    })
}

fn clifford_words(n: usize) -> Vec<Word> {
    match n {
        1..=5 => {
            let qubits = [0, 0, 1, 2, 3, 3][n];
            // For n = 4 the chirality must be diagonal (see module docs).
            search_anticommuting(qubits, n, true, n == 4)
                .expect("small Clifford module exists")
        }
        6..=9 => nine_words()[..n].to_vec(),
        _ => {
            let base = nine_words();
            let inner = clifford_words(n - 8);
            let width = inner[0].len();
            let mut out: Vec<Word> = base[..8]
                .iter()
                .map(|g| g.iter().copied().chain(std::iter::repeat_n(I, width)).collect())
                .collect();
            for h in &inner {
                out.push(base[8].iter().chain(h.iter()).copied().collect());
            }
            out
        }
    }
}

/// `E⊗A_1, …, E⊗A_7, X⊗I, Z⊗I` on four qubits.
fn nine_words() -> Vec<Word> {
    let seven = search_anticommuting(3, 7, false, true).expect("Cl(0,7) module on R^8 exists");
    let mut out: Vec<Word> = seven
        .into_iter()
        .map(|a| std::iter::once(E).chain(a).collect())
        .collect();
    out.push(vec![X, I, I, I]);
    out.push(vec![Z, I, I, I]);
    out
}

/// Product of words up to sign, as a word.
fn word_product(words: &[Word]) -> Word {
    let bits = |l: u8| match l {
        I => (0, 0),
        X => (1, 0),
        Z => (0, 1),
        _ => (1, 1),
    };
    let from_bits = |b: (u8, u8)| match b {
        (0, 0) => I,
        (1, 0) => X,
        (0, 1) => Z,
        _ => E,
    };
    let mut acc = vec![I; words[0].len()];
    for w in words {
        for (a, &l) in acc.iter_mut().zip(w) {
            let (x1, z1) = bits(*a);
            let (x2, z2) = bits(l);
            *a = from_bits((x1 ^ x2, z1 ^ z2));
        }
    }
    acc
}

/// Deterministic backtracking search for `count` mutually anticommuting
/// words on `qubits` qubits, all symmetric or all antisymmetric. With
/// `diagonal_product` the product of the chosen words must be diagonal.
fn search_anticommuting(
    qubits: usize,
    count: usize,
    symmetric: bool,
    diagonal_product: bool,
) -> Option<Vec<Word>> {
    if qubits == 0 {
        return (symmetric && count == 1).then(|| vec![vec![]]);
    }
    let candidates: Vec<Word> = all_words(qubits)
        .into_iter()
        .filter(|w| w.iter().any(|&l| l != I) && word_is_symmetric(w) == symmetric)
        .collect();
    let mut chosen = Vec::new();
    fn go(
        cands: &[Word],
        start: usize,
        count: usize,
        diag: bool,
        chosen: &mut Vec<Word>,
    ) -> bool {
        if chosen.len() == count {
            return !diag || word_product(chosen).iter().all(|&l| l == I || l == Z);
        }
        for idx in start..cands.len() {
            if chosen.iter().all(|c| words_anticommute(c, &cands[idx])) {
                chosen.push(cands[idx].clone());
                if go(cands, idx + 1, count, diag, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    go(&candidates, 0, count, diagonal_product, &mut chosen).then_some(chosen)
}

fn all_words(qubits: usize) -> Vec<Word> {
    let mut out = vec![vec![]];
    for _ in 0..qubits {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..4u8).map(move |l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
    }
    out
}

impl CliffordRep {
    /// `γ_i γ_j` for 0-based generator indices.
    pub fn gamma_product(&self, i: usize, j: usize) -> SignedPerm {
        self.gammas[i].compose(&self.gammas[j])
    }

    pub fn omega(&self) -> SignedPerm {
        self.gammas[1..]
            .iter()
            .fold(self.gammas[0].clone(), |acc, g| acc.compose(g))
    }

    /// Chirality operator and half-spinor projectors; `None` for odd `n`.
    pub fn chirality(&self) -> Option<Chirality> {
        if self.n % 2 == 1 {
            return None;
        }
        let omega = self.omega();
        let sq = omega.compose(&omega);
        let omega_squared = if sq.is_identity() { 1 } else { -1 };
        let projectors = (omega_squared == 1).then(|| {
            let half = frac(1, 2);
            let mut plus = SparseMatrix::zeros(self.dim_spinor, self.dim_spinor);
            let mut minus = SparseMatrix::zeros(self.dim_spinor, self.dim_spinor);
            for s in 0..self.dim_spinor {
                plus.add_to(s, s, &half).unwrap();
                minus.add_to(s, s, &half).unwrap();
                let (t, g) = omega.apply(s);
                let v = &half * Rational::from_integer(g.into());
                plus.add_to(t, s, &v).unwrap();
                minus.add_to(t, s, &-v).unwrap();
            }
            (plus, minus)
        });
        Some(Chirality {
            omega,
            omega_squared,
            projectors,
        })
    }

    /// Coordinates spanning the `ω = sign` eigenspace, when `ω` is diagonal
    /// with `ω² = +1`.
    pub fn half_spinor_coordinates(&self, sign: i8) -> Option<Vec<usize>> {
        let ch = self.chirality()?;
        if ch.omega_squared != 1 || !ch.omega.is_diagonal() {
            return None;
        }
        Some(
            (0..self.dim_spinor)
                .filter(|&s| ch.omega.apply(s).1 == sign)
                .collect(),
        )
    }

    /// Antisymmetric signed permutations commuting with every gamma: complex
    /// structures of the module that commute with the whole spin action.
    /// For `Cl(12,0)` these are three anticommuting units `J_1, J_2, J_3`
    /// with `J_1 J_2 = J_3`, i.e. a quaternionic structure.
    pub fn commuting_complex_structures(&self) -> Vec<SignedPerm> {
        let qubits = self.words[0].len();
        let found: Vec<Word> = all_words(qubits)
            .into_iter()
            .filter(|w| !word_is_symmetric(w))
            .filter(|w| self.words.iter().all(|g| !words_anticommute(g, w)))
            .collect();
        if found.len() == 3 {
            // The third word is ±J_1 J_2; fix its sign so that J_1 J_2 = J_3.
            let j1 = SignedPerm::from_word(&found[0]);
            let j2 = SignedPerm::from_word(&found[1]);
            let j3 = j1.compose(&j2);
            vec![j1, j2, j3]
        } else {
            found.iter().map(|w| SignedPerm::from_word(w)).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MIN_DIMS: [usize; 17] = [0, 1, 2, 4, 8, 8, 16, 16, 16, 16, 32, 64, 128, 128, 256, 256, 256];

    #[test]
    fn anticommutation_for_every_n() {
        for n in 1..=MAX_GENERATORS {
            let c = clifford(n).unwrap();
            assert_eq!(c.dim_spinor, MIN_DIMS[n], "n = {n}");
            let id = SignedPerm::identity(c.dim_spinor);
            for i in 0..n {
                assert_eq!(c.gammas[i].transpose(), c.gammas[i], "symmetric");
                assert_eq!(c.gamma_product(i, i), id);
                for j in i + 1..n {
                    assert_eq!(c.gamma_product(i, j), c.gamma_product(j, i).negate(), "n={n} {i},{j}");
                }
            }
        }
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(clifford(0).is_err());
        assert!(clifford(17).is_err());
    }

    #[test]
    fn spin9_has_dimension_16() {
        assert_eq!(clifford(9).unwrap().dim_spinor, 16);
    }

    #[test]
    fn chirality_splits_when_n_is_0_mod_4() {
        for n in [4, 8, 12, 16] {
            let c = clifford(n).unwrap();
            let ch = c.chirality().unwrap();
            assert_eq!(ch.omega_squared, 1);
            assert!(ch.omega.is_diagonal(), "n = {n}");
            let plus = c.half_spinor_coordinates(1).unwrap();
            assert_eq!(plus.len(), c.dim_spinor / 2);
            let (p, m) = ch.projectors.unwrap();
            assert_eq!(crate::linalg::rank(&p), c.dim_spinor / 2);
            assert_eq!(crate::linalg::rank(&m), c.dim_spinor / 2);
        }
        assert_eq!(clifford(16).unwrap().half_spinor_coordinates(1).unwrap().len(), 128);
    }

    #[test]
    fn chirality_is_complex_structure_when_n_is_2_mod_4() {
        let c = clifford(10).unwrap();
        let ch = c.chirality().unwrap();
        assert_eq!(ch.omega_squared, -1);
        assert!(ch.projectors.is_none());
        assert_eq!(ch.omega.transpose(), ch.omega.negate());
    }

    #[test]
    fn spin12_carries_a_quaternionic_structure() {
        let c = clifford(12).unwrap();
        let js = c.commuting_complex_structures();
        assert_eq!(js.len(), 3);
        let minus_id = SignedPerm::identity(c.dim_spinor).negate();
        for j in &js {
            assert_eq!(j.compose(j), minus_id);
            assert_eq!(j.transpose(), j.negate());
        }
        assert_eq!(js[0].compose(&js[1]), js[2]);
        assert_eq!(js[1].compose(&js[0]), js[2].negate());
        let half = c.half_spinor_coordinates(1).unwrap();
        assert_eq!(half.len(), 64);
        for j in &js {
            assert!(j.restrict(&half).is_some());
        }
    }
}
