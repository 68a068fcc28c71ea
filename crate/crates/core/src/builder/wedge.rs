//! Decomposition of `Λ²Δ` into form degrees.
//!
//! Antisymmetric bilinear forms on the spinor module are spanned by
//! `(s, t) ↦ ⟨γ_I s, t⟩` for the antisymmetric products `γ_I`. Distinct
//! (up to sign) restricted products are trace-orthogonal signed
//! permutations, so counting them per degree gives the dimension of each
//! `p`-form component. A product equal to one already seen at a lower
//! degree (its Hodge partner via `ω`) is not counted again.

use std::collections::HashSet;

use super::clifford::{clifford, CliffordRep, SignedPerm};
use super::BuildError;

fn up_to_sign(p: SignedPerm) -> SignedPerm {
    if p.apply(0).1 < 0 {
        p.negate()
    } else {
        p
    }
}

/// Restricted antisymmetric `γ_I` with their degrees, in subset order.
fn antisymmetric_products(cl: &CliffordRep, coords: Option<&[usize]>) -> Vec<(usize, SignedPerm)> {
    let mut out = Vec::new();
    let mut stack = vec![(0usize, 0usize, SignedPerm::identity(cl.dim_spinor))];
    while let Some((next, degree, prod)) = stack.pop() {
        let restricted = match coords {
            Some(sub) => prod.restrict(sub),
            None => Some(prod.clone()),
        };
        if let Some(r) = restricted {
            if r.transpose() == r.negate() {
                out.push((degree, up_to_sign(r)));
            }
        }
        for j in next..cl.n {
            stack.push((j + 1, degree + 1, prod.compose(&cl.gammas[j])));
        }
    }
    out
}

/// `(degree, dimension)` of each form component of `Λ²Δ`, where `Δ` is the
/// positive half-spinor when the chirality is diagonal and the full module
/// otherwise.
pub fn spin_wedge_decomposition(n: usize) -> Result<Vec<(usize, usize)>, BuildError> {
    let cl = clifford(n)?;
    let coords = cl.half_spinor_coordinates(1);
    let mut products = antisymmetric_products(&cl, coords.as_deref());
    products.sort_by_key(|(d, _)| *d);
    let mut seen: HashSet<SignedPerm> = HashSet::new();
    let mut out: Vec<(usize, usize)> = Vec::new();
    for (d, p) in products {
        if seen.insert(p) {
            match out.last_mut() {
                Some((deg, count)) if *deg == d => *count += 1,
                _ => out.push((d, 1)),
            }
        }
    }
    Ok(out)
}

/// Dimension of the module whose antisymmetric square is decomposed.
pub fn wedge_module_dim(n: usize) -> Result<usize, BuildError> {
    let cl = clifford(n)?;
    Ok(cl
        .half_spinor_coordinates(1)
        .map_or(cl.dim_spinor, |c| c.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rank, Rational, SparseMatrix};

    #[test]
    fn spin9() {
        assert_eq!(spin_wedge_decomposition(9).unwrap(), vec![(2, 36), (3, 84)]);
    }

    #[test]
    fn totals_match_binomial() {
        // Module types where the products span all of End(Δ).
        for n in [1, 2, 8, 9, 10] {
            let d = wedge_module_dim(n).unwrap();
            let total: usize = spin_wedge_decomposition(n).unwrap().iter().map(|x| x.1).sum();
            assert_eq!(total, d * (d - 1) / 2, "n = {n}");
        }
    }

    #[test]
    fn counts_agree_with_rank() {
        // Flatten every antisymmetric product and compare the span's rank.
        for n in [5, 7, 9] {
            let cl = clifford(n).unwrap();
            let prods = antisymmetric_products(&cl, None);
            let d = cl.dim_spinor;
            let mut m = SparseMatrix::zeros(prods.len(), d * d);
            for (r, (_, p)) in prods.iter().enumerate() {
                for s in 0..d {
                    let (t, g) = p.apply(s);
                    m.set(r, t * d + s, Rational::from_integer(g.into())).unwrap();
                }
            }
            let total: usize = spin_wedge_decomposition(n).unwrap().iter().map(|x| x.1).sum();
            assert_eq!(rank(&m), total, "n = {n}");
        }
    }
}
