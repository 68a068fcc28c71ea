//! Inductive steps `so(n) → so(n+1)`, `su(n) → su(n+1)`, `sp(n) → sp(n+1)`.
//!
//! Each step accepts only the canonical table of its input (as produced by
//! [`super::matrices`]) and returns the canonical table of the next algebra,
//! with basis `[input basis, new centre of k, m basis]`.

use std::collections::BTreeMap;

use crate::linalg::rat;

use super::extension::{extend, rep_from_intmat, Extension, ExtensionSpec, RepMatrix, Summand};
use super::matrices::{complex_unit, right_mult, so_basis, so_table, sp_basis, sp_table, su_basis, su_table, Q_I, Q_J, Q_K};
use super::table::StructureTable;
use super::BuildError;

fn same_table(a: &StructureTable, b: &StructureTable) -> bool {
    a.basis_labels == b.basis_labels && a.iter().eq(b.iter())
}

fn rank_from_dim(dim: usize, f: impl Fn(usize) -> usize, what: &str) -> Result<usize, BuildError> {
    (0..=64)
        .find(|&n| f(n) == dim)
        .ok_or_else(|| BuildError::NonCanonical(format!("no {what} has dimension {dim}")))
}

fn check_canonical(input: &StructureTable, want: &StructureTable) -> Result<(), BuildError> {
    if same_table(input, want) {
        Ok(())
    } else {
        Err(BuildError::NonCanonical(format!(
            "input differs from the canonical {} table",
            want.name
        )))
    }
}

fn relabel_t(mut t: StructureTable) -> StructureTable {
    t.basis_labels = (0..t.dim()).map(|i| format!("T_{i}")).collect();
    t
}

/// `so(n) ⊕ R^n → so(n+1)`.
pub fn extend_orthogonal(input: &StructureTable, workers: usize) -> Result<Extension, BuildError> {
    let n = rank_from_dim(input.dim(), |n| n * n.saturating_sub(1) / 2, "so(n)")?;
    // so(0) and so(1) are both zero; take the larger.
    let n = if n == 0 { 1 } else { n };
    check_canonical(input, &so_table(n))?;
    let spec = ExtensionSpec {
        name: format!("so({})", n + 1),
        k: input.clone(),
        summands: vec![Summand {
            label: format!("so({n})"),
            indices: (0..input.dim()).collect(),
            divisor: 2,
        }],
        rho: so_basis(n).iter().map(|(_, m)| rep_from_intmat(m)).collect(),
        m_labels: (1..=n).map(|i| format!("L_{i}_{}", n + 1)).collect(),
        m_piece: BTreeMap::new(),
    };
    extend(&spec, workers)
}

/// `su(n) ⊕ u(1) ⊕ C^n → su(n+1)`.
pub fn extend_unitary(input: &StructureTable, workers: usize) -> Result<Extension, BuildError> {
    let n = rank_from_dim(input.dim(), |n| (n * n).saturating_sub(1), "su(n)")?;
    let n = if n == 0 { 1 } else { n };
    check_canonical(input, &su_table(n))?;
    let dk = input.dim();
    let z = StructureTable::abelian("u(1)", vec!["z".into()]);
    let k = input.direct_sum(&z, format!("su({n}) + u(1)"));
    let mut rho: Vec<RepMatrix> = su_basis(n).iter().map(|(_, m)| rep_from_intmat(m)).collect();
    rho.push(rep_from_intmat(&complex_unit(n).scaled(n as i64 + 1)));
    let spec = ExtensionSpec {
        name: format!("su({})", n + 1),
        k,
        summands: vec![
            Summand {
                label: format!("su({n})"),
                indices: (0..dk).collect(),
                divisor: 4,
            },
            Summand {
                label: "u(1)".into(),
                indices: vec![dk],
                divisor: 4 * (n as i64 + 1),
            },
        ],
        rho,
        m_labels: (0..n).flat_map(|k| [format!("re_{k}"), format!("im_{k}")]).collect(),
        m_piece: BTreeMap::new(),
    };
    let mut ext = extend(&spec, workers)?;
    ext.table = relabel_t(ext.table);
    Ok(ext)
}

/// Table of `sp(1)` in the basis `q_i, q_j, q_k` with `[q_i, q_j] = 2 q_k`.
pub fn sp1_table() -> StructureTable {
    let mut t = StructureTable::new("sp(1)", vec!["q_i".into(), "q_j".into(), "q_k".into()]);
    for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        t.set_bracket(a, b, vec![(c, rat(2))]).expect("in range");
    }
    t
}

/// `sp(n) ⊕ sp(1) ⊕ H^n → sp(n+1)`.
pub fn extend_symplectic(input: &StructureTable, workers: usize) -> Result<Extension, BuildError> {
    let n = rank_from_dim(input.dim(), |n| n * (2 * n + 1), "sp(n)")?;
    check_canonical(input, &sp_table(n))?;
    let dk = input.dim();
    let k = input.direct_sum(&sp1_table(), format!("sp({n}) + sp(1)"));
    let mut rho: Vec<RepMatrix> = sp_basis(n).iter().map(|(_, m)| rep_from_intmat(m)).collect();
    for u in [Q_I, Q_J, Q_K] {
        rho.push(rep_from_intmat(&right_mult(n, u).scaled(-1)));
    }
    let spec = ExtensionSpec {
        name: format!("sp({})", n + 1),
        k,
        summands: vec![
            Summand {
                label: format!("sp({n})"),
                indices: (0..dk).collect(),
                divisor: 8,
            },
            Summand {
                label: "sp(1)".into(),
                indices: (dk..dk + 3).collect(),
                divisor: 8,
            },
        ],
        rho,
        m_labels: (0..n)
            .flat_map(|k| ["1", "i", "j", "k"].map(|u| format!("{u}_{k}")))
            .collect(),
        m_piece: BTreeMap::new(),
    };
    let mut ext = extend(&spec, workers)?;
    ext.table = relabel_t(ext.table);
    Ok(ext)
}

/// Reports of every step from the smallest case up to `so(n)`.
pub fn so_chain(n: usize, workers: usize) -> Result<Vec<Extension>, BuildError> {
    chain(so_table(2), n.saturating_sub(2), extend_orthogonal, workers)
}

pub fn su_chain(n: usize, workers: usize) -> Result<Vec<Extension>, BuildError> {
    chain(su_table(1), n.saturating_sub(1), extend_unitary, workers)
}

pub fn sp_chain(n: usize, workers: usize) -> Result<Vec<Extension>, BuildError> {
    chain(sp_table(0), n, extend_symplectic, workers)
}

fn chain(
    mut t: StructureTable,
    steps: usize,
    step: fn(&StructureTable, usize) -> Result<Extension, BuildError>,
    workers: usize,
) -> Result<Vec<Extension>, BuildError> {
    let mut out = Vec::with_capacity(steps);
    for _ in 0..steps {
        let ext = step(&t, workers)?;
        t = ext.table.clone();
        out.push(ext);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_canonical(got: &StructureTable, want: &StructureTable) {
        assert_eq!(got.basis_labels, want.basis_labels);
        let diff: Vec<_> = got
            .iter()
            .zip(want.iter())
            .filter(|(a, b)| a != b)
            .take(3)
            .collect();
        assert!(same_table(got, want), "{}: first differences {diff:?}", want.name);
    }

    #[test]
    fn unitary_steps_are_canonical() {
        for n in 1..5 {
            let ext = extend_unitary(&su_table(n), 1).unwrap();
            assert_canonical(&ext.table, &su_table(n + 1));
        }
    }

    #[test]
    fn symplectic_steps_are_canonical() {
        for n in 0..3 {
            let ext = extend_symplectic(&sp_table(n), 1).unwrap();
            assert_canonical(&ext.table, &sp_table(n + 1));
        }
    }

    #[test]
    fn orthogonal_chain_reaches_so9() {
        let steps = so_chain(9, 2).unwrap();
        assert_eq!(steps.len(), 7);
        assert_canonical(&steps.last().unwrap().table, &so_table(9));
    }

    #[test]
    fn non_canonical_input_is_rejected() {
        let mut t = so_table(4);
        t.set_bracket(0, 1, vec![]).unwrap();
        assert!(matches!(extend_orthogonal(&t, 1), Err(BuildError::NonCanonical(_))));
        assert!(matches!(
            extend_unitary(&so_table(4), 1),
            Err(BuildError::NonCanonical(_))
        ));
    }
}
