//! Real homology of compact simple groups as products of odd spheres,
//! torsion reference data and homogeneous-space dimension bookkeeping.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::rootsys::{build_root_system, Family, GroupId, RootError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TopolError {
    #[error("{space}: dim(big) - dim(small) = {computed}, declared {declared}")]
    DimensionMismatch {
        space: String,
        computed: i64,
        declared: usize,
    },
    #[error("unknown coset {0:?}")]
    UnknownCoset(String),
    #[error(transparent)]
    Root(#[from] RootError),
}

/// Tag attached to data looked up rather than computed.
pub const REFERENCE_DATA: &str = "paper-reference-data";
pub const COMPUTED: &str = "computed";

fn exponents(id: GroupId) -> Vec<u64> {
    build_root_system(id)
        .expect("GroupId is validated on construction")
        .exponents
}

/// `2m + 1` for every exponent `m`, ascending.
pub fn sphere_dims(id: GroupId) -> Vec<u64> {
    exponents(id).iter().map(|m| 2 * m + 1).collect()
}

/// Betti numbers `b_0 … b_dim` of `∏ (1 + t^(2m+1))`.
pub fn poincare_poly(id: GroupId) -> Vec<u64> {
    let mut poly = vec![1u64];
    for d in sphere_dims(id) {
        let d = d as usize;
        let mut next = vec![0u64; poly.len() + d];
        for (k, &c) in poly.iter().enumerate() {
            next[k] += c;
            next[k + d] += c;
        }
        poly = next;
    }
    poly
}

/// Human-readable factored form, e.g. `(1+t^3)(1+t^11)`.
pub fn factored(id: GroupId) -> String {
    sphere_dims(id)
        .iter()
        .map(|d| format!("(1+t^{d})"))
        .collect()
}

/// First differences of the exponents and whether they read the same
/// backwards.
pub fn capicua(id: GroupId) -> (Vec<u64>, bool) {
    let e = exponents(id);
    let diffs: Vec<u64> = e.windows(2).map(|w| w[1] - w[0]).collect();
    let palindrome = diffs.iter().eq(diffs.iter().rev());
    (diffs, palindrome)
}

/// Primes with torsion in the integral cohomology of the simply connected
/// group. Reference data, not computed.
pub fn torsion_primes(id: GroupId) -> BTreeSet<u64> {
    let primes: &[u64] = match (id.family(), id.rank()) {
        (Family::A | Family::C, _) => &[],
        // Spin(5) = Sp(2) and Spin(6) = SU(4).
        (Family::B, n) if n >= 3 => &[2],
        (Family::D, n) if n >= 4 => &[2],
        (Family::B | Family::D, _) => &[],
        (Family::G, _) => &[2],
        (Family::F, _) | (Family::E, 6) | (Family::E, 7) => &[2, 3],
        (Family::E, _) => &[2, 3, 5],
    };
    primes.iter().copied().collect()
}

/// A product of simple factors and circles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupSpec {
    pub factors: Vec<GroupId>,
    pub torus: usize,
    /// Conventional name, e.g. `Spin(10)·U(1)`.
    pub name: String,
}

impl GroupSpec {
    pub fn new(name: &str, factors: &[&str], torus: usize) -> Result<Self, TopolError> {
        Ok(GroupSpec {
            factors: factors
                .iter()
                .map(|f| f.parse())
                .collect::<Result<_, RootError>>()?,
            torus,
            name: name.to_string(),
        })
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim()).sum::<usize>() + self.torus
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetEntry {
    pub big: GroupSpec,
    pub small: GroupSpec,
    pub space_name: String,
    pub space_dim: usize,
}

/// `dim(big) - dim(small)`, checked against the declared dimension.
pub fn coset_dim(e: &CosetEntry) -> Result<usize, TopolError> {
    let computed = e.big.dim() as i64 - e.small.dim() as i64;
    if computed != e.space_dim as i64 {
        return Err(TopolError::DimensionMismatch {
            space: e.space_name.clone(),
            computed,
            declared: e.space_dim,
        });
    }
    Ok(e.space_dim)
}

type Row = (&'static str, (&'static str, &'static [&'static str], usize), (&'static str, &'static [&'static str], usize), usize);

// Disconnected factors (O(1)) and finite quotients do not change dimensions.
const COSETS: &[Row] = &[
    ("RP2", ("O(3)", &["B1"], 0), ("O(1)×O(2)", &[], 1), 2),
    ("CP2", ("U(3)", &["A2"], 1), ("U(2)×U(1)", &["A1"], 2), 4),
    ("HP2", ("Sp(3)", &["C3"], 0), ("Sp(2)×Sp(1)", &["C2", "C1"], 0), 8),
    ("OP2", ("F4", &["F4"], 0), ("Spin(9)", &["B4"], 0), 16),
    ("CP2 (complexified row)", ("SU(3)", &["A2"], 0), ("U(2)", &["A1"], 1), 4),
    ("(CP2)^2", ("SU(3)·SU(3)", &["A2", "A2"], 0), ("U(2)^2", &["A1", "A1"], 2), 8),
    ("Gr(2,C6)", ("SU(6)", &["A5"], 0), ("S[U(2)·U(4)]", &["A1", "A3"], 1), 16),
    ("X", ("E6", &["E6"], 0), ("Spin(10)·U(1)", &["D5"], 1), 32),
];

/// Space names accepted by [`coset_preset`].
pub fn coset_names() -> Vec<&'static str> {
    COSETS.iter().map(|r| r.0).collect()
}

pub fn coset_preset(name: &str) -> Result<CosetEntry, TopolError> {
    let (space, big, small, dim) = COSETS
        .iter()
        .find(|r| r.0.eq_ignore_ascii_case(name))
        .ok_or_else(|| TopolError::UnknownCoset(name.to_string()))?;
    Ok(CosetEntry {
        big: GroupSpec::new(big.0, big.1, big.2)?,
        small: GroupSpec::new(small.0, small.1, small.2)?,
        space_name: space.to_string(),
        space_dim: *dim,
    })
}

pub fn all_cosets() -> Vec<CosetEntry> {
    COSETS
        .iter()
        .map(|r| coset_preset(r.0).expect("built-in rows are consistent"))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FibrationNote {
    pub fiber: String,
    pub total: String,
    pub base: String,
    pub remark: String,
}

fn note(fiber: &str, total: &str, base: &str, remark: &str) -> FibrationNote {
    FibrationNote {
        fiber: fiber.into(),
        total: total.into(),
        base: base.into(),
        remark: remark.into(),
    }
}

/// Curated facts for the groups where they apply.
pub fn fibration_notes(id: GroupId) -> Vec<FibrationNote> {
    match (id.family(), id.rank()) {
        (Family::A, 1) => vec![note("", "SU(2)", "", "SU(2) = Sp(1) = Spin(3) is the sphere S^3")],
        (Family::A, 2) => vec![note(
            "SU(2)",
            "SU(3)",
            "S^5",
            "unique non-trivial SU(2)-bundle over S^5; real homology of S^3 × S^5",
        )],
        (Family::A, 3) => vec![note("", "SU(4)", "", "Spin(6) = SU(4)")],
        (Family::C, 2) => vec![note("", "Sp(2)", "", "Spin(5) = Sp(2)")],
        (Family::B, 2) => vec![note("", "Spin(5)", "", "Spin(5) = Sp(2)")],
        (Family::B, 1) => vec![note("", "Spin(3)", "", "Spin(3) = Sp(1) = SU(2)")],
        (Family::C, 1) => vec![note("", "Sp(1)", "", "Sp(1) = SU(2) = Spin(3)")],
        (Family::D, 3) => vec![note("", "Spin(6)", "", "Spin(6) = SU(4)")],
        (Family::G, 2) => vec![note(
            "S^3",
            "G2",
            "M11",
            "real homology of S^3 × S^11; M11 is a Stiefel manifold and carries the 2-torsion",
        )],
        (Family::F, 4) => vec![note(
            "Spin(9)",
            "F4",
            "OP2",
            "3-torsion and Euler(OP2) = 3 are both present; no causal link is asserted",
        )],
        _ => Vec::new(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopologyReport {
    pub id: GroupId,
    pub sphere_dims: Vec<u64>,
    pub poincare: Vec<u64>,
    pub factored: String,
    pub torsion_primes: BTreeSet<u64>,
    pub capicua_diffs: Vec<u64>,
    pub capicua_palindrome: bool,
    pub fibration_notes: Vec<FibrationNote>,
}

pub fn sphere_structure_report(id: GroupId) -> TopologyReport {
    let (capicua_diffs, capicua_palindrome) = capicua(id);
    TopologyReport {
        id,
        sphere_dims: sphere_dims(id),
        poincare: poincare_poly(id),
        factored: factored(id),
        torsion_primes: torsion_primes(id),
        capicua_diffs,
        capicua_palindrome,
        fibration_notes: fibration_notes(id),
    }
}

/// Every simple type of rank at most `max_rank`.
pub fn simple_types(max_rank: usize) -> Vec<GroupId> {
    let mut out = Vec::new();
    for family in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
        for r in 1..=max_rank {
            if let Ok(id) = GroupId::new(family, r) {
                out.push(id);
            }
        }
    }
    out
}
