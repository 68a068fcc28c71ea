//! Killing form and a Cartan-subalgebra check on a structure table.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::linalg::{is_negative_definite, rank, Rational, SparseMatrix};

use super::table::StructureTable;
use super::BuildError;

/// `K_ab = Tr(ad e_a · ad e_b) = Σ_{c,d} c_ad^c c_bc^d`.
pub fn killing_form(t: &StructureTable) -> Result<SparseMatrix, BuildError> {
    let it = t.to_integer()?;
    let n = it.dim;
    let coeff = |b: usize, c: usize, d: usize| -> i64 {
        it.bracket(b, c)
            .iter()
            .find(|(k, _)| *k as usize == d)
            .map_or(0, |(_, v)| *v)
    };
    let rows: Vec<Vec<(usize, i128)>> = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut row = Vec::new();
            for b in a..n {
                let mut s: i128 = 0;
                for d in 0..n {
                    for &(c, v) in it.bracket(a, d) {
                        let w = coeff(b, c as usize, d);
                        s += v as i128 * w as i128;
                    }
                }
                if s != 0 {
                    row.push((b, s));
                }
            }
            row
        })
        .collect();
    let scale2 = &it.scale * &it.scale;
    let mut k = SparseMatrix::zeros(n, n);
    for (a, row) in rows.into_iter().enumerate() {
        for (b, s) in row {
            let v = Rational::new(BigInt::from(s), scale2.clone());
            k.set(a, b, v.clone())?;
            k.set(b, a, v)?;
        }
    }
    Ok(k)
}

/// Negative definiteness of the Killing form, i.e. compactness and
/// semisimplicity of the real algebra.
pub fn is_compact_semisimple(t: &StructureTable) -> Result<bool, BuildError> {
    let k = killing_form(t)?;
    let n = k.rows();
    let diagonal = k.iter().all(|(i, j, _)| i == j);
    if diagonal {
        return Ok(k.nnz() == n && (0..n).all(|i| k.get(i, i) < Rational::zero()));
    }
    Ok(is_negative_definite(&k)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanCheck {
    /// Mutually commuting basis elements, chosen greedily in basis order.
    pub elements: Vec<usize>,
    pub rank: usize,
    /// The centralizer of a generic element of their span is the span itself.
    pub self_centralizing: bool,
}

/// Greedy abelian subalgebra spanned by basis vectors, and whether it is a
/// Cartan subalgebra.
pub fn cartan_subalgebra(t: &StructureTable) -> Result<CartanCheck, BuildError> {
    let n = t.dim();
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..n {
        if chosen.iter().all(|&j| t.bracket(j, i).is_empty()) {
            chosen.push(i);
        }
    }
    // h = Σ 97^p e_{chosen[p]}: no root of a rank ≤ 8 system vanishes on it.
    let mut h = vec![Rational::zero(); n];
    let mut w = Rational::one();
    for &c in &chosen {
        h[c] = w.clone();
        w *= Rational::from_integer(97.into());
    }
    let mut ad = SparseMatrix::zeros(n, n);
    for d in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[d] = Rational::one();
        for (c, v) in t.bracket_vectors(&h, &e).into_iter().enumerate() {
            if !v.is_zero() {
                ad.set(c, d, v)?;
            }
        }
    }
    let nullity = n - rank(&ad);
    Ok(CartanCheck {
        rank: chosen.len(),
        self_centralizing: nullity == chosen.len(),
        elements: chosen,
    })
}
