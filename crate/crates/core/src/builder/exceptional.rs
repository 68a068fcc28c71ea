//! The five exceptional algebras as symmetric extensions.
//!
//! | target | k                    | m                                  |
//! |--------|----------------------|------------------------------------|
//! | G2     | su(3)                | C³ (realified), plus `C(u,v) = conj(u × v)` |
//! | F4     | so(9)                | spinor, 16                         |
//! | E6     | so(10) ⊕ u(1)        | spinor, 32; `z` acts by `ω`          |
//! | E7     | so(12) ⊕ sp(1)       | half-spinor, 64; `q_a` act by `½J_a` |
//! | E8     | so(16)               | half-spinor, 128                   |
//!
//! `so(n)` acts on spinors by `L_ij ↦ ½ γ_i γ_j`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::linalg::{frac, rat, Rational};

use super::clifford::{clifford, CliffordRep};
use super::extension::{extend, rep_from_intmat, rep_from_perm, ExtensionSpec, RepMatrix, Summand};
use super::matrices::{so_table, su_basis, su_table};
use super::table::{JacobiReport, StructureTable};
use super::BuildError;

pub const EXCEPTIONAL: [&str; 5] = ["G2", "F4", "E6", "E7", "E8"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BuildRecipe {
    pub target: String,
    /// `(role, dimension)` in basis order.
    pub summands: Vec<(String, usize)>,
    pub free_coefficients: Vec<String>,
}

impl BuildRecipe {
    pub fn dim(&self) -> usize {
        self.summands.iter().map(|(_, d)| d).sum()
    }
}

#[derive(Clone, Debug)]
pub struct ExceptionalBuild {
    pub recipe: BuildRecipe,
    pub table: StructureTable,
    pub report: JacobiReport,
    /// Solved free coefficients, named as in the recipe.
    pub coefficients: Vec<(String, Rational)>,
}

/// `½ γ_i γ_j` for the `so(n)` basis, optionally restricted to `coords`.
fn spin_rep(cl: &CliffordRep, coords: Option<&[usize]>) -> Vec<RepMatrix> {
    let half = frac(1, 2);
    let mut out = Vec::new();
    for j in 0..cl.n {
        for i in 0..j {
            out.push(rep_from_perm(&cl.gamma_product(i, j), &half, coords));
        }
    }
    out
}

fn psi_labels(d: usize) -> Vec<String> {
    (0..d).map(|a| format!("psi_{a}")).collect()
}

fn so_summand(n: usize) -> Summand {
    Summand {
        label: format!("so({n})"),
        indices: (0..n * (n - 1) / 2).collect(),
        divisor: 2,
    }
}

/// `C(u, v) = conj(u × v)` on realified `C³` with `re_a, im_a` at `2a, 2a+1`.
fn conjugate_cross() -> BTreeMap<(usize, usize), Vec<(usize, Rational)>> {
    let mut out = BTreeMap::new();
    let eps = |a: usize, b: usize| -> Option<(usize, i64)> {
        match (a, b) {
            (0, 1) => Some((2, 1)),
            (1, 2) => Some((0, 1)),
            (2, 0) => Some((1, 1)),
            (1, 0) => Some((2, -1)),
            (2, 1) => Some((0, -1)),
            (0, 2) => Some((1, -1)),
            _ => None,
        }
    };
    for s in 0..6 {
        for t in s + 1..6 {
            let (a, ia) = (s / 2, s % 2 == 1);
            let (b, ib) = (t / 2, t % 2 == 1);
            let Some((c, e)) = eps(a, b) else { continue };
            // conj(i^ia · i^ib): 1, -i, -i, -1.
            let (coord, sign) = match (ia, ib) {
                (false, false) => (2 * c, e),
                (false, true) | (true, false) => (2 * c + 1, -e),
                (true, true) => (2 * c, -e),
            };
            out.insert((s, t), vec![(coord, rat(sign))]);
        }
    }
    out
}

fn spec_for(name: &str) -> Result<(ExtensionSpec, BuildRecipe), BuildError> {
    let recipe = |summands: &[(&str, usize)], free: &[&str]| BuildRecipe {
        target: name.to_string(),
        summands: summands.iter().map(|(r, d)| (r.to_string(), *d)).collect(),
        free_coefficients: free.iter().map(|s| s.to_string()).collect(),
    };
    Ok(match name {
        "G2" => {
            let k = su_table(3);
            let spec = ExtensionSpec {
                name: "G2".into(),
                summands: vec![Summand {
                    label: "su(3)".into(),
                    indices: (0..8).collect(),
                    divisor: 4,
                }],
                rho: su_basis(3).iter().map(|(_, m)| rep_from_intmat(m)).collect(),
                k,
                m_labels: psi_labels(6),
                m_piece: conjugate_cross(),
            };
            (
                spec,
                recipe(&[("adjoint", 8), ("vector", 3), ("covector", 3)], &["x_su3"]),
            )
        }
        "F4" => {
            let cl = clifford(9)?;
            let spec = ExtensionSpec {
                name: "F4".into(),
                k: so_table(9),
                summands: vec![so_summand(9)],
                rho: spin_rep(&cl, None),
                m_labels: psi_labels(16),
                m_piece: BTreeMap::new(),
            };
            (spec, recipe(&[("adjoint", 36), ("spinor", 16)], &["x_so9"]))
        }
        "E6" => {
            let cl = clifford(10)?;
            let mut rho = spin_rep(&cl, None);
            rho.push(rep_from_perm(&cl.omega(), &rat(1), None));
            let z = StructureTable::abelian("u(1)", vec!["z".into()]);
            let spec = ExtensionSpec {
                name: "E6".into(),
                k: so_table(10).direct_sum(&z, "so(10) + u(1)"),
                summands: vec![
                    so_summand(10),
                    Summand {
                        label: "u(1)".into(),
                        indices: vec![45],
                        divisor: 1,
                    },
                ],
                rho,
                m_labels: psi_labels(32),
                m_piece: BTreeMap::new(),
            };
            (
                spec,
                recipe(&[("adjoint", 45), ("u(1)", 1), ("spinor", 32)], &["x_so10", "x_u1"]),
            )
        }
        "E7" => {
            let cl = clifford(12)?;
            let plus = cl
                .half_spinor_coordinates(1)
                .ok_or_else(|| BuildError::Unsupported("no diagonal chirality for n = 12".into()))?;
            let js = cl.commuting_complex_structures();
            if js.len() != 3 {
                return Err(BuildError::Unsupported(
                    "no quaternionic structure on the n = 12 spinor".into(),
                ));
            }
            let mut rho = spin_rep(&cl, Some(&plus));
            for j in &js {
                rho.push(rep_from_perm(j, &frac(1, 2), Some(&plus)));
            }
            let mut sp1 = StructureTable::new(
                "sp(1)",
                vec!["q_1".into(), "q_2".into(), "q_3".into()],
            );
            for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
                sp1.set_bracket(a, b, vec![(c, rat(1))])?;
            }
            let spec = ExtensionSpec {
                name: "E7".into(),
                k: so_table(12).direct_sum(&sp1, "so(12) + sp(1)"),
                summands: vec![
                    so_summand(12),
                    Summand {
                        label: "sp(1)".into(),
                        indices: (66..69).collect(),
                        divisor: 1,
                    },
                ],
                rho,
                m_labels: psi_labels(plus.len()),
                m_piece: BTreeMap::new(),
            };
            (
                spec,
                recipe(&[("adjoint", 66), ("sp(1)", 3), ("spinor", 64)], &["x_so12", "x_sp1"]),
            )
        }
        "E8" => {
            let cl = clifford(16)?;
            let plus = cl
                .half_spinor_coordinates(1)
                .ok_or_else(|| BuildError::Unsupported("no diagonal chirality for n = 16".into()))?;
            let spec = ExtensionSpec {
                name: "E8".into(),
                k: so_table(16),
                summands: vec![so_summand(16)],
                rho: spin_rep(&cl, Some(&plus)),
                m_labels: psi_labels(plus.len()),
                m_piece: BTreeMap::new(),
            };
            (spec, recipe(&[("adjoint", 120), ("half-spinor", 128)], &["x_so16"]))
        }
        other => {
            return Err(BuildError::Unsupported(format!(
                "no exceptional recipe for {other:?}; expected one of G2, F4, E6, E7, E8"
            )))
        }
    })
}

/// Recipe of an exceptional target without building it.
pub fn recipe(name: &str) -> Result<BuildRecipe, BuildError> {
    spec_for(name).map(|(_, r)| r)
}

/// Builds and fully verifies `name` on `workers` sweep threads.
pub fn build_exceptional(name: &str, workers: usize) -> Result<ExceptionalBuild, BuildError> {
    let (spec, recipe) = spec_for(name)?;
    let ext = extend(&spec, workers)?;
    let coefficients = recipe
        .free_coefficients
        .iter()
        .cloned()
        .zip(ext.scales)
        .collect();
    Ok(ExceptionalBuild {
        recipe,
        table: ext.table,
        report: ext.report,
        coefficients,
    })
}

/// `so(n) ⊕ Δ` with the minimal real Clifford module as `Δ`, or its
/// positive half when the chirality is diagonal. For `3 <= n <= 16` this
/// closes only at `n = 8` (triality, giving `so(9)`), `n = 9` and `n = 16`.
pub fn spinor_extension(n: usize, workers: usize) -> Result<ExceptionalBuild, BuildError> {
    if n < 3 {
        return Err(BuildError::Unsupported(format!("so({n}) + spin needs n >= 3")));
    }
    let cl = clifford(n)?;
    let coords = cl.half_spinor_coordinates(1);
    let rho = spin_rep(&cl, coords.as_deref());
    let dm = coords.as_ref().map_or(cl.dim_spinor, Vec::len);
    let spec = ExtensionSpec {
        name: format!("so({n})+spin"),
        k: so_table(n),
        summands: vec![so_summand(n)],
        rho,
        m_labels: psi_labels(dm),
        m_piece: BTreeMap::new(),
    };
    let recipe = BuildRecipe {
        target: spec.name.clone(),
        summands: vec![("adjoint".into(), n * (n - 1) / 2), ("spinor".into(), dm)],
        free_coefficients: vec![format!("x_so{n}")],
    };
    let ext = extend(&spec, workers)?;
    Ok(ExceptionalBuild {
        coefficients: vec![(recipe.free_coefficients[0].clone(), ext.scales[0].clone())],
        recipe,
        table: ext.table,
        report: ext.report,
    })
}
