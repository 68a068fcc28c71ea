//! Equal-rank pairs `H ⊂ G`, Euler numbers and Kostant multiplets.
//!
//! For an equal-rank pair the spin module of the tangent space of `G/H`
//! splits into `χ = |W(G)| / |W(H)|` irreducible `H`-modules, one for each
//! `w ∈ W(G)` with `w ρ_G` strictly `H`-dominant. The `H`-highest weight is
//! `w ρ_G - ρ_H` and the sign is `(-1)^ℓ(w)`. Entries are listed by
//! decreasing length of `w`, with signs normalized so the first one is `+1`.

use std::collections::BTreeSet;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{nullspace, Rational, SparseMatrix};
use crate::rootsys::{
    build_root_system, weyl_dim, weyl_orbit, Family, GroupId, RootError, RootSystem, Weight,
};

type Components = Vec<(GroupId, usize)>;
type PieceKey = (usize, usize, Vec<Vec<i64>>);

pub const DEFAULT_CAP: usize = 5_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KostantError {
    #[error("rank(H) = {small} + {torus} torus factor(s) differs from rank(G) = {big}")]
    NotEqualRank { big: usize, small: usize, torus: usize },
    #[error("|W(G)| = {big} is not divisible by |W(H)| = {small}")]
    NotDivisible { big: u64, small: u64 },
    #[error("invalid subsystem: {0}")]
    InvalidSubsystem(String),
    #[error("Weyl orbit exceeds the cap of {cap} points")]
    CapExceeded { cap: usize },
    #[error("unknown pair {0:?}")]
    UnknownPair(String),
    #[error(transparent)]
    Root(RootError),
}

impl From<RootError> for KostantError {
    fn from(e: RootError) -> Self {
        match e {
            RootError::CapExceeded { cap } => KostantError::CapExceeded { cap },
            other => KostantError::Root(other),
        }
    }
}

/// A root of `G` used as a simple root of `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootRef {
    /// `α_i`, 1-based Bourbaki index.
    Simple(usize),
    /// `-θ`, the lowest root.
    LowestRoot,
    /// Explicit simple-root coordinates.
    Coords(Vec<i64>),
}

#[derive(Clone, Debug)]
pub struct EqualRankPair {
    pub big: RootSystem,
    /// Simple roots of `H` in simple-root coordinates of `G`, canonically
    /// ordered.
    pub small_simple_roots: Vec<Vec<i64>>,
    pub torus: usize,
    pub small: RootSystem,
    /// Cartan labels of the simple factors of `H`, in root order.
    pub components: Vec<(GroupId, usize)>,
    pub chi: u64,
}

/// Cartan matrix `2(α_i, α_j)/(α_i, α_i)` of a Gram matrix.
fn cartan_from_gram(gram: &[Vec<i64>]) -> Vec<Vec<i64>> {
    (0..gram.len())
        .map(|i| (0..gram.len()).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
        .collect()
}

/// Families tried when naming a component; `A3 = D3` is named `A3`, a double
/// bond of rank 2 is named `C2`.
const FAMILY_ORDER: [Family; 7] = [
    Family::A,
    Family::D,
    Family::E,
    Family::G,
    Family::F,
    Family::C,
    Family::B,
];

/// All bijections `p` with `c[p[i]][p[j]] == target[i][j]`.
fn matchings(c: &[Vec<i64>], target: &[Vec<i64>]) -> Vec<Vec<usize>> {
    fn go(c: &[Vec<i64>], t: &[Vec<i64>], p: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let i = p.len();
        if i == t.len() {
            out.push(p.clone());
            return;
        }
        for v in 0..c.len() {
            if used[v] || (0..i).any(|j| c[v][p[j]] != t[i][j] || c[p[j]][v] != t[j][i]) {
                continue;
            }
            used[v] = true;
            p.push(v);
            go(c, t, p, used, out);
            p.pop();
            used[v] = false;
        }
    }
    let mut out = Vec::new();
    if c.len() == target.len() {
        go(c, target, &mut Vec::new(), &mut vec![false; c.len()], &mut out);
    }
    out
}

/// Connected components of the Dynkin diagram, each as sorted node indices.
fn components(gram: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = gram.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut head = 0;
        while head < comp.len() {
            let u = comp[head];
            head += 1;
            for v in 0..n {
                if !seen[v] && gram[u][v] != 0 {
                    seen[v] = true;
                    comp.push(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Reorders `roots` component by component into Bourbaki order. Among the
/// matchings (diagram automorphisms) the lexicographically smallest list of
/// root vectors is kept, so the result depends only on the set of roots.
fn canonicalize(
    big: &RootSystem,
    roots: &[Vec<i64>],
) -> Result<(Vec<Vec<i64>>, Components), KostantError> {
    let gram: Vec<Vec<i64>> = roots
        .iter()
        .map(|a| roots.iter().map(|b| big.pair_roots(a, b)).collect())
        .collect();
    let mut pieces: Vec<(PieceKey, GroupId)> = Vec::new();
    for comp in components(&gram) {
        let sub: Vec<Vec<i64>> = comp
            .iter()
            .map(|&i| comp.iter().map(|&j| gram[i][j]).collect())
            .collect();
        let c = cartan_from_gram(&sub);
        let r = comp.len();
        let mut found = None;
        for (fi, fam) in FAMILY_ORDER.iter().enumerate() {
            let Ok(id) = GroupId::new(*fam, r) else { continue };
            let ms = matchings(&c, &cartan_from_gram(&id.gram()));
            let best = ms
                .into_iter()
                .map(|p| p.iter().map(|&k| roots[comp[k]].clone()).collect::<Vec<_>>())
                .min();
            if let Some(b) = best {
                found = Some(((fi, r, b), id));
                break;
            }
        }
        let piece = found.ok_or_else(|| {
            KostantError::InvalidSubsystem(format!("component of rank {r} is not a Dynkin diagram"))
        })?;
        pieces.push(piece);
    }
    pieces.sort();
    let mut ordered = Vec::new();
    let mut labels = Vec::new();
    for ((_, r, rs), id) in pieces {
        ordered.extend(rs);
        labels.push((id, r));
    }
    Ok((ordered, labels))
}

impl EqualRankPair {
    pub fn new(big: GroupId, refs: &[RootRef], torus: usize) -> Result<Self, KostantError> {
        let big = build_root_system(big)?;
        let rank = big.rank();
        let mut roots = Vec::with_capacity(refs.len());
        for r in refs {
            let v = match r {
                RootRef::Simple(i) if (1..=rank).contains(i) => {
                    let mut v = vec![0; rank];
                    v[i - 1] = 1;
                    v
                }
                RootRef::Simple(i) => {
                    return Err(KostantError::InvalidSubsystem(format!(
                        "simple root index {i} outside 1..={rank}"
                    )))
                }
                RootRef::LowestRoot => big.highest_root().iter().map(|x| -x).collect(),
                RootRef::Coords(v) => v.clone(),
            };
            if v.len() != rank || !big.is_root(&v) {
                return Err(KostantError::InvalidSubsystem(format!("{v:?} is not a root of G")));
            }
            roots.push(v);
        }
        if roots.len() + torus != rank {
            return Err(KostantError::NotEqualRank {
                big: rank,
                small: roots.len(),
                torus,
            });
        }
        for (i, a) in roots.iter().enumerate() {
            for b in &roots[i + 1..] {
                if big.pair_roots(a, b) > 0 || a == b {
                    return Err(KostantError::InvalidSubsystem(
                        "simple roots of H must pairwise have non-positive inner products".into(),
                    ));
                }
            }
        }
        let (roots, components) = canonicalize(&big, &roots)?;
        let gram: Vec<Vec<i64>> = roots
            .iter()
            .map(|a| roots.iter().map(|b| big.pair_roots(a, b)).collect())
            .collect();
        let small = RootSystem::from_gram(gram, None);
        let (wg, wh) = (big.weyl_order, small.weyl_order);
        if wg % wh != 0 {
            return Err(KostantError::NotDivisible { big: wg, small: wh });
        }
        Ok(EqualRankPair {
            chi: wg / wh,
            big,
            small_simple_roots: roots,
            torus,
            small,
            components,
        })
    }

    /// `G` itself.
    pub fn identity(big: GroupId) -> Result<Self, KostantError> {
        let refs: Vec<RootRef> = (1..=big.rank()).map(RootRef::Simple).collect();
        Self::new(big, &refs, 0)
    }

    /// `U(n) ⊂ SU(n+1)`, i.e. `(A_n, A_{n-1} + torus)`.
    pub fn unitary_in_special_unitary(n: usize) -> Result<Self, KostantError> {
        let big = GroupId::new(Family::A, n)?;
        Self::new(big, &(1..n).map(RootRef::Simple).collect::<Vec<_>>(), 1)
    }

    /// `U(n) ⊂ SO(2n)`, i.e. `(D_n, A_{n-1} + torus)`.
    pub fn unitary_in_orthogonal(n: usize) -> Result<Self, KostantError> {
        let big = GroupId::new(Family::D, n)?;
        Self::new(big, &(1..n).map(RootRef::Simple).collect::<Vec<_>>(), 1)
    }

    /// Named pairs: `F4/B4`, `A4/A3+t`, `C3/C1xC2`.
    pub fn preset(name: &str) -> Result<Self, KostantError> {
        match name {
            "F4/B4" => Self::new(
                "F4".parse()?,
                &[RootRef::LowestRoot, RootRef::Simple(1), RootRef::Simple(2), RootRef::Simple(3)],
                0,
            ),
            "A4/A3+t" => Self::unitary_in_special_unitary(4),
            "C3/C1xC2" => Self::new(
                "C3".parse()?,
                &[RootRef::LowestRoot, RootRef::Simple(2), RootRef::Simple(3)],
                0,
            ),
            other => Err(KostantError::UnknownPair(other.to_string())),
        }
    }

    /// e.g. `B4` or `A1 + C2 + T1`.
    pub fn small_label(&self) -> String {
        let mut parts: Vec<String> = self.components.iter().map(|(id, _)| id.to_string()).collect();
        if self.torus > 0 {
            parts.push(format!("T{}", self.torus));
        }
        if parts.is_empty() {
            "trivial".into()
        } else {
            parts.join(" + ")
        }
    }

    pub fn label(&self) -> String {
        format!("{}/{}", self.big.label(), self.small_label())
    }

    /// `dim G - dim H`.
    pub fn coset_dim(&self) -> usize {
        self.big.dim() - self.small.dim() - self.torus
    }

    /// Primitive integer directions of the torus factors, in simple-root
    /// coordinates of `G`, orthogonal to every simple root of `H`.
    pub fn torus_directions(&self) -> Vec<Vec<i64>> {
        let rank = self.big.rank();
        let mut m = SparseMatrix::zeros(self.small_simple_roots.len(), rank);
        for (i, b) in self.small_simple_roots.iter().enumerate() {
            for j in 0..rank {
                let mut e = vec![0; rank];
                e[j] = 1;
                let v = self.big.pair_roots(b, &e);
                if v != 0 {
                    m.set(i, j, Rational::from_integer(v.into())).expect("in bounds");
                }
            }
        }
        nullspace(&m).into_iter().map(|v| primitive(&v.0)).collect()
    }
}

fn primitive(v: &[Rational]) -> Vec<i64> {
    use num_integer::Integer;
    let lcm = v.iter().fold(num_bigint::BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<num_bigint::BigInt> = v.iter().map(|x| (x * Ratio::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(x));
    let sign = ints.iter().find(|x| !x.is_zero()).map_or(1, |x| if x.sign() == num_bigint::Sign::Minus { -1 } else { 1 });
    ints.iter()
        .map(|x| (x / &g).to_i64().expect("small direction") * sign)
        .collect()
}

pub fn euler_number(p: &EqualRankPair) -> u64 {
    p.chi
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultipletEntry {
    pub sign: i8,
    /// Dynkin labels of the `H`-highest weight, in canonical root order.
    pub weight: Weight,
    pub dimension: u64,
    /// Pairing of `w ρ_G` with each torus direction.
    pub charges: Vec<i64>,
    pub length: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Multiplet {
    pub pair: String,
    pub chi: u64,
    pub entries: Vec<MultipletEntry>,
}

impl Multiplet {
    pub fn signed_sum(&self) -> i128 {
        self.entries
            .iter()
            .map(|e| e.sign as i128 * e.dimension as i128)
            .sum()
    }

    pub fn unsigned_sum(&self) -> u128 {
        self.entries.iter().map(|e| e.dimension as u128).sum()
    }
}

/// Kostant multiplet of the trivial `G`-module, enumerating at most `cap`
/// Weyl-orbit points.
pub fn multiplets(p: &EqualRankPair, cap: usize) -> Result<Multiplet, KostantError> {
    let big = &p.big;
    let orbit = weyl_orbit(big, &big.rho, cap)?;
    let norms: Vec<i64> = p.small_simple_roots.iter().map(|b| big.pair_roots(b, b)).collect();
    let directions = p.torus_directions();
    let d = big.symmetrizer();
    let mut entries = Vec::new();
    for pt in orbit {
        let mut labels = Vec::with_capacity(norms.len());
        let mut dominant = true;
        for (b, nb) in p.small_simple_roots.iter().zip(&norms) {
            let pairing = 2 * big.pair_weight_root(&pt.weight, b);
            assert!(pairing % nb == 0, "coroot pairing is integral");
            let c = pairing / nb;
            assert!(c != 0, "w ρ is regular");
            if c < 0 {
                dominant = false;
                break;
            }
            labels.push((c - 1) as u64);
        }
        if !dominant {
            continue;
        }
        let weight = Weight::new(labels);
        let dim = weyl_dim(&p.small, &weight)?;
        let charges = directions
            .iter()
            .map(|v| (0..big.rank()).map(|j| v[j] * pt.weight[j] * d[j]).sum())
            .collect();
        entries.push(MultipletEntry {
            sign: if pt.length % 2 == 0 { 1 } else { -1 },
            dimension: dim.to_u64().ok_or_else(|| {
                KostantError::Root(RootError::NonIntegerResult(dim.to_string()))
            })?,
            weight,
            charges,
            length: pt.length,
        });
    }
    entries.sort_by(|a, b| (b.length, &b.weight, &b.charges).cmp(&(a.length, &a.weight, &a.charges)));
    // Which half-spinor counts as positive is a convention: the first entry
    // is given sign +1.
    if entries.first().is_some_and(|e| e.sign < 0) {
        for e in &mut entries {
            e.sign = -e.sign;
        }
    }
    Ok(Multiplet {
        pair: p.label(),
        chi: p.chi,
        entries,
    })
}

/// `(degree, dimension, sign)` of the exterior powers `Λ^p C^n`, which is the
/// spin module of `Spin(2n)` restricted to `U(n)` graded by `(-1)^p`.
pub fn spin_split_under_u(n: usize) -> Vec<(usize, u64, i8)> {
    let mut out = Vec::with_capacity(n + 1);
    let mut c: u64 = 1;
    for p in 0..=n {
        out.push((p, c, if p % 2 == 0 { 1 } else { -1 }));
        c = c * (n - p) as u64 / (p as u64 + 1);
    }
    out
}

/// Distinct `H`-labels of a pair, for display.
pub fn weight_set(m: &Multiplet) -> BTreeSet<Vec<u64>> {
    m.entries.iter().map(|e| e.weight.labels.clone()).collect()
}
