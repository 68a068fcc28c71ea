//! Root systems of the simple types A–G.
//!
//! Simple roots are numbered in Bourbaki order. Roots are integer vectors in
//! the simple-root basis and weights are Dynkin labels in the fundamental
//! weight basis. Inner products go through the Gram matrix of the simple
//! roots, scaled so that the shortest simple root has squared length 2; the
//! symmetrizer `d_i = (α_i, α_i) / 2` is then the minimal integral one.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

mod orbit;

pub use orbit::{weyl_orbit, OrbitPoint};

/// Tag recorded in every report that lists per-node data.
pub const NODE_CONVENTION: &str = "bourbaki";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("invalid group id {0}")]
    InvalidGroupId(String),
    #[error("weight has {got} labels, expected {expected}")]
    WeightLength { expected: usize, got: usize },
    #[error("Weyl dimension formula produced a non-integer ({0}); internal inconsistency")]
    NonIntegerResult(String),
    #[error("orbit enumeration exceeded cap of {cap} points")]
    CapExceeded { cap: usize },
    #[error("orbit enumeration supports rank <= 16 and coordinates within i8, got {0}")]
    OrbitUnsupported(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// Cartan label of a compact simple Lie group, e.g. `F4` or `D8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupId {
    family: Family,
    rank: usize,
}

impl GroupId {
    /// Validates the label. `D2` and `D1` are rejected because they are not
    /// simple.
    pub fn new(family: Family, rank: usize) -> Result<Self, RootError> {
        let ok = match family {
            Family::A | Family::B | Family::C => rank >= 1,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(GroupId { family, rank })
        } else {
            Err(RootError::InvalidGroupId(format!("{}{}", family.letter(), rank)))
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Real dimension of the group, from the classical closed forms.
    /// [`RootSystem::dim`] computes the same number from the roots.
    pub fn dim(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 2),
            Family::B | Family::C => n * (2 * n + 1),
            Family::D => n * (2 * n - 1),
            Family::E => [78, 133, 248][n - 6],
            Family::F => 52,
            Family::G => 14,
        }
    }

    /// Gram matrix `(α_i, α_j)` of the simple roots.
    pub fn gram(self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut g = vec![vec![0i64; n]; n];
        let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match self.family {
            Family::A => {
                for i in 0..n {
                    g[i][i] = 2;
                    if i + 1 < n {
                        link(&mut g, i, i + 1, -1);
                    }
                }
            }
            Family::B => {
                for i in 0..n {
                    g[i][i] = if i + 1 == n { 2 } else { 4 };
                    if i + 1 < n {
                        link(&mut g, i, i + 1, -2);
                    }
                }
            }
            Family::C => {
                for i in 0..n {
                    g[i][i] = if i + 1 == n && n > 1 { 4 } else { 2 };
                    if i + 1 < n {
                        link(&mut g, i, i + 1, if i + 2 == n { -2 } else { -1 });
                    }
                }
            }
            Family::D => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                for i in 0..n - 2 {
                    link(&mut g, i, i + 1, -1);
                }
                link(&mut g, n - 3, n - 1, -1);
            }
            Family::E => {
                // 1-3-4-5-6(-7-8) with 2 attached to 4 (Bourbaki labels).
                for i in 0..n {
                    g[i][i] = 2;
                }
                link(&mut g, 0, 2, -1);
                link(&mut g, 1, 3, -1);
                for i in 2..n - 1 {
                    link(&mut g, i, i + 1, -1);
                }
            }
            Family::F => {
                g[0][0] = 4;
                g[1][1] = 4;
                g[2][2] = 2;
                g[3][3] = 2;
                link(&mut g, 0, 1, -2);
                link(&mut g, 1, 2, -2);
                link(&mut g, 2, 3, -1);
            }
            Family::G => {
                g[0][0] = 2;
                g[1][1] = 6;
                link(&mut g, 0, 1, -3);
            }
        }
        g
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for GroupId {
    type Err = RootError;

    /// Parses bare Cartan labels such as `E8` or `b4`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || RootError::InvalidGroupId(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        GroupId::new(family, rank).map_err(|_| bad())
    }
}

impl Serialize for GroupId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Highest weight in Dynkin labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Weight {
    pub labels: Vec<u64>,
}

impl Weight {
    pub fn new(labels: Vec<u64>) -> Self {
        Weight { labels }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            labels: vec![0; rank],
        }
    }

    /// The i-th fundamental weight (0-based node index).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut labels = vec![0; rank];
        labels[i] = 1;
        Weight { labels }
    }
}

/// Root data for one root system (simple, or a reducible subsystem used as
/// the small group of an equal-rank pair).
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub id: Option<GroupId>,
    /// Inner products of the simple roots.
    pub gram: Vec<Vec<i64>>,
    /// `cartan[i][j] = <α_j, α_i^∨> = 2 (α_i, α_j) / (α_i, α_i)`.
    pub cartan: Vec<Vec<i64>>,
    /// Sorted by height, then lexicographically.
    pub positive_roots: Vec<Vec<i64>>,
    /// Weyl vector in fundamental-weight coordinates (all ones).
    pub rho: Vec<i64>,
    pub exponents: Vec<u64>,
    pub degrees: Vec<u64>,
    pub weyl_order: u64,
    /// Largest degree; equals `(dim - rank) / rank` for simple systems.
    pub coxeter_number: u64,
}

/// Builds the root system of a simple type.
pub fn build_root_system(id: GroupId) -> Result<RootSystem, RootError> {
    let id = GroupId::new(id.family, id.rank)?;
    Ok(RootSystem::from_gram(id.gram(), Some(id)))
}

pub fn exponents_of(rs: &RootSystem) -> Vec<u64> {
    rs.exponents.clone()
}

pub fn weyl_order_of(rs: &RootSystem) -> u64 {
    rs.degrees.iter().product()
}

/// Dimension of the irreducible module with highest weight `w`.
pub fn weyl_dim(rs: &RootSystem, w: &Weight) -> Result<BigInt, RootError> {
    if w.labels.len() != rs.rank() {
        return Err(RootError::WeightLength {
            expected: rs.rank(),
            got: w.labels.len(),
        });
    }
    let shifted: Vec<i64> = w.labels.iter().map(|&l| l as i64 + 1).collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for alpha in &rs.positive_roots {
        num *= rs.pair_weight_root(&shifted, alpha);
        den *= rs.pair_weight_root(&rs.rho, alpha);
    }
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(RootError::NonIntegerResult(format!("{num}/{den}")));
    }
    Ok(q)
}

/// Dimensions of the fundamental modules in Bourbaki node order.
pub fn fundamental_dims(id: GroupId) -> Result<Vec<u64>, RootError> {
    let rs = build_root_system(id)?;
    (0..rs.rank())
        .map(|i| {
            let d = weyl_dim(&rs, &Weight::fundamental(rs.rank(), i))?;
            d.to_u64()
                .ok_or_else(|| RootError::NonIntegerResult(d.to_string()))
        })
        .collect()
}

impl RootSystem {
    /// Builds all derived data from the Gram matrix of a set of simple roots.
    /// The Gram matrix may describe a reducible system.
    pub fn from_gram(gram: Vec<Vec<i64>>, id: Option<GroupId>) -> RootSystem {
        let rank = gram.len();
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        let v = 2 * gram[i][j];
                        assert_eq!(v % gram[i][i], 0, "Gram matrix is not crystallographic");
                        v / gram[i][i]
                    })
                    .collect()
            })
            .collect();
        let positive_roots = close_positive_roots(&cartan);
        let exponents = exponents_from_heights(&positive_roots);
        let degrees: Vec<u64> = exponents.iter().map(|m| m + 1).collect();
        let weyl_order = degrees.iter().product();
        let coxeter_number = degrees.iter().copied().max().unwrap_or(1);
        RootSystem {
            id,
            gram,
            cartan,
            positive_roots,
            rho: vec![1; rank],
            exponents,
            degrees,
            weyl_order,
            coxeter_number,
        }
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    /// `rank + 2 |Φ⁺|`, the dimension of the adjoint representation.
    pub fn dim(&self) -> usize {
        self.rank() + 2 * self.positive_roots.len()
    }

    pub fn label(&self) -> String {
        match self.id {
            Some(id) => id.to_string(),
            None => format!("rank-{} subsystem", self.rank()),
        }
    }

    /// `(α_i, α_i) / 2`.
    pub fn symmetrizer(&self) -> Vec<i64> {
        (0..self.rank()).map(|i| self.gram[i][i] / 2).collect()
    }

    /// `(λ, β)` for a weight in fundamental coordinates and a root in
    /// simple-root coordinates.
    pub fn pair_weight_root(&self, weight: &[i64], root: &[i64]) -> i64 {
        weight
            .iter()
            .zip(root)
            .enumerate()
            .map(|(j, (l, b))| l * b * self.gram[j][j] / 2)
            .sum()
    }

    /// `(β, γ)` for two vectors in simple-root coordinates.
    pub fn pair_roots(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for (i, ai) in a.iter().enumerate() {
            if *ai == 0 {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                s += ai * bj * self.gram[i][j];
            }
        }
        s
    }

    /// Simple root `α_i` expressed in fundamental-weight coordinates.
    pub fn simple_root_as_weight(&self, i: usize) -> Vec<i64> {
        (0..self.rank()).map(|j| self.cartan[j][i]).collect()
    }

    /// Converts a root from simple-root to fundamental-weight coordinates.
    pub fn root_as_weight(&self, root: &[i64]) -> Vec<i64> {
        (0..self.rank())
            .map(|j| (0..self.rank()).map(|i| root[i] * self.cartan[j][i]).sum())
            .collect()
    }

    pub fn highest_root(&self) -> Vec<i64> {
        self.positive_roots
            .last()
            .cloned()
            .unwrap_or_else(|| vec![0; self.rank()])
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        self.positive_roots.iter().any(|r| r == v || *r == neg)
    }

    /// Number of positive roots at each height, starting at height 1.
    pub fn height_distribution(&self) -> Vec<usize> {
        height_distribution(&self.positive_roots)
    }
}

fn height(root: &[i64]) -> i64 {
    root.iter().sum()
}

fn height_distribution(roots: &[Vec<i64>]) -> Vec<usize> {
    let max_h = roots.iter().map(|r| height(r)).max().unwrap_or(0) as usize;
    let mut counts = vec![0usize; max_h];
    for r in roots {
        counts[height(r) as usize - 1] += 1;
    }
    counts
}

/// Positive roots by closure of the simple roots under addition of simple
/// roots, using root strings: `β + α_i` is a root iff `p - <β, α_i^∨> > 0`,
/// where `p` is how far the string extends below `β`.
fn close_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rank = cartan.len();
    let mut known: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut layer: Vec<Vec<i64>> = (0..rank)
        .map(|i| {
            let mut e = vec![0; rank];
            e[i] = 1;
            e
        })
        .collect();
    let mut all = Vec::new();
    for r in &layer {
        known.insert(r.clone(), ());
    }
    while !layer.is_empty() {
        layer.sort();
        all.extend(layer.iter().cloned());
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..rank {
                let mut p = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if known.contains_key(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..rank).map(|j| beta[j] * cartan[i][j]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !known.contains_key(&up) {
                        known.insert(up.clone(), ());
                        next.push(up);
                    }
                }
            }
        }
        layer = next;
    }
    all
}

/// Exponents as the dual partition of the height distribution: the number of
/// exponents equal to `k` is `n_k - n_{k+1}`.
fn exponents_from_heights(roots: &[Vec<i64>]) -> Vec<u64> {
    let counts = height_distribution(roots);
    let mut exps = Vec::new();
    for (k, &n) in counts.iter().enumerate() {
        let next = counts.get(k + 1).copied().unwrap_or(0);
        for _ in 0..n - next {
            exps.push(k as u64 + 1);
        }
    }
    exps
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        build_root_system(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn rejects_invalid_ids() {
        for bad in ["D2", "D1", "E5", "E9", "F3", "G3", "A0", "X4", "B", "C-1"] {
            assert!(bad.parse::<GroupId>().is_err(), "{bad}");
        }
    }

    #[test]
    fn small_examples() {
        let a1 = rs("A1");
        assert_eq!(a1.positive_roots.len(), 1);
        assert_eq!(a1.dim(), 3);
        let g2 = rs("G2");
        assert_eq!(g2.positive_roots.len(), 6);
        assert_eq!(g2.dim(), 14);
        assert_eq!(g2.highest_root(), vec![3, 2]);
        let e8 = rs("E8");
        assert_eq!(e8.positive_roots.len(), 120);
        assert_eq!(e8.dim(), 248);
    }

    #[test]
    fn exceptional_exponents() {
        assert_eq!(exponents_of(&rs("E6")), vec![1, 4, 5, 7, 8, 11]);
        assert_eq!(exponents_of(&rs("E7")), vec![1, 5, 7, 9, 11, 13, 17]);
        assert_eq!(exponents_of(&rs("E8")), vec![1, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(exponents_of(&rs("F4")), vec![1, 5, 7, 11]);
        assert_eq!(exponents_of(&rs("G2")), vec![1, 5]);
    }

    #[test]
    fn classical_exponents() {
        assert_eq!(exponents_of(&rs("A4")), vec![1, 2, 3, 4]);
        assert_eq!(exponents_of(&rs("B3")), vec![1, 3, 5]);
        assert_eq!(exponents_of(&rs("C3")), vec![1, 3, 5]);
        assert_eq!(exponents_of(&rs("D4")), vec![1, 3, 3, 5]);
        assert_eq!(exponents_of(&rs("D5")), vec![1, 3, 4, 5, 7]);
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(weyl_order_of(&rs("F4")), 1152);
        assert_eq!(weyl_order_of(&rs("B4")), 384);
        assert_eq!(weyl_order_of(&rs("E6")), 51840);
        assert_eq!(weyl_order_of(&rs("E8")), 696_729_600);
        assert_eq!(weyl_order_of(&rs("A4")), 120);
    }

    #[test]
    fn zero_weight_is_trivial() {
        for s in ["A3", "E7", "G2"] {
            let r = rs(s);
            assert_eq!(weyl_dim(&r, &Weight::zero(r.rank())).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn weight_length_is_checked() {
        let r = rs("A2");
        assert!(matches!(
            weyl_dim(&r, &Weight::new(vec![1])),
            Err(RootError::WeightLength { .. })
        ));
    }

    #[test]
    fn fundamental_dims_in_node_order() {
        let g = |s: &str| fundamental_dims(s.parse().unwrap()).unwrap();
        assert_eq!(g("G2"), vec![7, 14]);
        assert_eq!(g("F4"), vec![52, 1274, 273, 26]);
        assert_eq!(g("E6"), vec![27, 78, 351, 2925, 351, 27]);
        assert_eq!(g("E7"), vec![133, 912, 8645, 365750, 27664, 1539, 56]);
        assert_eq!(g("E8"), vec![3875, 147250, 6696000, 6899079264, 146325270, 2450240, 30380, 248]);
        assert_eq!(g("B3"), vec![7, 21, 8]);
        assert_eq!(g("C3"), vec![6, 14, 14]);
    }
}
