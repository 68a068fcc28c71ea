//! Compact symmetric extensions `g = k ⊕ m`.
//!
//! `k` is a reductive algebra split into summands `σ`, acting on `m` by an
//! orthogonal representation `ρ`. The brackets are
//!
//! * `[X, Y]` from the table of `k`,
//! * `[X, s] = ρ(X) s`,
//! * `[s, t] = Σ_σ x_σ Σ_{a∈σ} ⟨ρ(X_a) s, t⟩ / G_aa · X_a + C(s, t)`,
//!
//! with `G_aa = -Tr_m(ρ(X_a)²) / divisor_σ` and an optional fixed `m`-valued
//! piece `C`. The scalars `x_σ` enter every Jacobi defect affinely; they are
//! solved from a sample of triples and the result is then checked in full.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::linalg::{solve_linear, DenseVector, Rational, Solution, SparseMatrix};

use super::clifford::SignedPerm;
use super::matrices::IntMat;
use super::table::{verify_jacobi_with, JacobiReport, StructureTable};
use super::BuildError;

/// Sparse columns of a linear map on `m`: `ρ e_s = Σ (t, c) e_t`.
pub type RepMatrix = Vec<Vec<(usize, Rational)>>;

/// A block of `k` sharing one unknown scale.
#[derive(Clone, Debug)]
pub struct Summand {
    pub label: String,
    pub indices: Vec<usize>,
    pub divisor: i64,
}

#[derive(Clone, Debug)]
pub struct ExtensionSpec {
    pub name: String,
    pub k: StructureTable,
    pub summands: Vec<Summand>,
    /// One matrix per basis element of `k`.
    pub rho: Vec<RepMatrix>,
    pub m_labels: Vec<String>,
    /// `C(s, t)` for `s < t`, in `m` coordinates.
    pub m_piece: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
}

#[derive(Clone, Debug)]
pub struct Extension {
    pub table: StructureTable,
    /// Solved `x_σ`, one per summand.
    pub scales: Vec<Rational>,
    pub report: JacobiReport,
}

pub fn rep_from_intmat(m: &IntMat) -> RepMatrix {
    m.columns()
}

/// `c · P` restricted to `coords` (renumbered), for a signed permutation `P`
/// preserving that coordinate set.
pub fn rep_from_perm(p: &SignedPerm, c: &Rational, coords: Option<&[usize]>) -> RepMatrix {
    let p = match coords {
        Some(sub) => p.restrict(sub).expect("subspace is invariant"),
        None => p.clone(),
    };
    (0..p.dim())
        .map(|s| {
            let (t, sign) = p.apply(s);
            vec![(t, c * Rational::from_integer(sign.into()))]
        })
        .collect()
}

/// Affine form `a_0 + Σ_p a_p x_p`.
type Aff = Vec<Rational>;
type AffVec = BTreeMap<usize, Aff>;

fn aff_const(n: usize, c: Rational) -> Aff {
    let mut a = vec![Rational::zero(); n + 1];
    a[0] = c;
    a
}

fn is_param_free(a: &Aff) -> bool {
    a[1..].iter().all(Zero::is_zero)
}

fn aff_mul(a: &Aff, b: &Aff) -> Result<Aff, BuildError> {
    if is_param_free(a) {
        Ok(b.iter().map(|y| &a[0] * y).collect())
    } else if is_param_free(b) {
        Ok(a.iter().map(|x| x * &b[0]).collect())
    } else {
        Err(BuildError::NormalizationUnsolvable(
            "unknown scales multiply each other".into(),
        ))
    }
}

fn aff_add(acc: &mut AffVec, k: usize, v: Aff) {
    let e = acc.entry(k).or_insert_with(|| vec![Rational::zero(); v.len()]);
    for (x, y) in e.iter_mut().zip(v) {
        *x += y;
    }
    if e.iter().all(Zero::is_zero) {
        acc.remove(&k);
    }
}

struct Engine<'a> {
    spec: &'a ExtensionSpec,
    dk: usize,
    nparams: usize,
    /// `(s, t) ↦ [(a, ⟨ρ(X_a)s,t⟩ / G_aa)]`.
    pairs: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
    param_of: Vec<usize>,
}

impl<'a> Engine<'a> {
    fn new(spec: &'a ExtensionSpec) -> Result<Self, BuildError> {
        let dk = spec.k.dim();
        let dm = spec.m_labels.len();
        if spec.rho.len() != dk || spec.rho.iter().any(|r| r.len() != dm) {
            return Err(BuildError::Format("representation shape mismatch".into()));
        }
        let mut param_of = vec![usize::MAX; dk];
        for (p, s) in spec.summands.iter().enumerate() {
            for &a in &s.indices {
                param_of[a] = p;
            }
        }
        if param_of.contains(&usize::MAX) {
            return Err(BuildError::Format("summands do not cover k".into()));
        }
        let mut pairs: BTreeMap<(usize, usize), Vec<(usize, Rational)>> = BTreeMap::new();
        for (a, r) in spec.rho.iter().enumerate() {
            // -Tr(ρ²) = -Σ_s Σ_t ρ_ts ρ_st.
            let mut tr = Rational::zero();
            for (s, col) in r.iter().enumerate() {
                for (t, c) in col {
                    if let Some((_, d)) = r[*t].iter().find(|(u, _)| *u == s) {
                        tr -= c * d;
                    }
                }
            }
            if tr.is_zero() {
                continue;
            }
            let div = Rational::from_integer(spec.summands[param_of[a]].divisor.into());
            let g = tr / div;
            for (s, col) in r.iter().enumerate() {
                for (t, c) in col {
                    pairs.entry((s, *t)).or_default().push((a, c / &g));
                }
            }
        }
        Ok(Engine {
            spec,
            dk,
            nparams: spec.summands.len(),
            pairs,
            param_of,
        })
    }

    fn dim(&self) -> usize {
        self.dk + self.spec.m_labels.len()
    }

    fn bracket(&self, i: usize, j: usize) -> Vec<(usize, Aff)> {
        let (dk, n) = (self.dk, self.nparams);
        match (i < dk, j < dk) {
            (true, true) => self
                .spec
                .k
                .bracket(i, j)
                .into_iter()
                .map(|(l, c)| (l, aff_const(n, c)))
                .collect(),
            (true, false) => self.spec.rho[i][j - dk]
                .iter()
                .map(|(t, c)| (dk + t, aff_const(n, c.clone())))
                .collect(),
            (false, true) => self.spec.rho[j][i - dk]
                .iter()
                .map(|(t, c)| (dk + t, aff_const(n, -c.clone())))
                .collect(),
            (false, false) => {
                let (s, t) = (i - dk, j - dk);
                let mut out: Vec<(usize, Aff)> = Vec::new();
                if let Some(list) = self.pairs.get(&(s, t)) {
                    for (a, c) in list {
                        let mut aff = vec![Rational::zero(); n + 1];
                        aff[1 + self.param_of[*a]] = c.clone();
                        out.push((*a, aff));
                    }
                }
                let (lo, hi, sign) = if s < t { (s, t, 1) } else { (t, s, -1) };
                if let Some(list) = self.spec.m_piece.get(&(lo, hi)) {
                    for (u, c) in list {
                        out.push((dk + u, aff_const(n, c * Rational::from_integer(sign.into()))));
                    }
                }
                out
            }
        }
    }

    fn bracket_vec(&self, i: usize, v: &AffVec) -> Result<AffVec, BuildError> {
        let mut out = AffVec::new();
        for (j, a) in v {
            for (l, b) in self.bracket(i, *j) {
                aff_add(&mut out, l, aff_mul(a, &b)?);
            }
        }
        Ok(out)
    }

    fn basis_bracket(&self, i: usize, j: usize) -> AffVec {
        let mut out = AffVec::new();
        for (l, a) in self.bracket(i, j) {
            aff_add(&mut out, l, a);
        }
        out
    }

    fn jacobi(&self, i: usize, j: usize, k: usize) -> Result<AffVec, BuildError> {
        let mut total = AffVec::new();
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            for (l, v) in self.bracket_vec(a, &self.basis_bracket(b, c))? {
                aff_add(&mut total, l, v);
            }
        }
        Ok(total)
    }

    fn sample(&self) -> Vec<(usize, usize, usize)> {
        let dk = self.dk;
        let dm = self.spec.m_labels.len();
        let mut out = Vec::new();
        for s in 0..dm.min(2) {
            for a in 0..dm {
                for b in a + 1..dm {
                    out.push((dk + s, dk + a, dk + b));
                }
            }
        }
        for sm in self.spec.summands.iter().skip(1) {
            for &x in &sm.indices {
                for a in 0..dm {
                    for b in a + 1..dm {
                        out.push((x, dk + a, dk + b));
                    }
                }
            }
        }
        if let Some(&x0) = self.spec.summands.first().and_then(|s| s.indices.first()) {
            if dm >= 2 {
                out.push((x0, dk, dk + 1));
            }
        }
        out
    }

    fn solve_scales(&self) -> Result<Vec<Rational>, BuildError> {
        let n = self.nparams;
        if self.spec.m_labels.len() < 2 {
            // No bracket of two elements of `m`: the scales are never used.
            return Ok(vec![Rational::one(); n]);
        }
        // Rows `[a_1 … a_n | -a_0]`, scaled so the first nonzero entry is 1.
        let mut rows: BTreeSet<Vec<Rational>> = BTreeSet::new();
        let mut push = |coeffs: Vec<Rational>, rhs: Rational| {
            let mut row = coeffs;
            row.push(rhs);
            if let Some(lead) = row.iter().find(|x| !x.is_zero()).cloned() {
                rows.insert(row.iter().map(|x| x / &lead).collect());
            }
        };
        let acts: Vec<bool> = self
            .spec
            .summands
            .iter()
            .map(|s| s.indices.iter().any(|&a| self.spec.rho[a].iter().any(|c| !c.is_empty())))
            .collect();
        // Scales of summands acting trivially never appear; pin them to 1.
        for (p, _) in acts.iter().enumerate().filter(|(_, a)| !**a) {
            let mut e = vec![Rational::zero(); n];
            e[p] = Rational::one();
            push(e, Rational::one());
        }
        if self.spec.m_piece.is_empty() {
            let first = acts.iter().position(|&a| a).ok_or_else(|| {
                BuildError::NormalizationUnsolvable("k acts trivially on m".into())
            })?;
            let mut e = vec![Rational::zero(); n];
            e[first] = Rational::one();
            push(e, Rational::one());
        }
        for (i, j, k) in self.sample() {
            for (_, a) in self.jacobi(i, j, k)? {
                push(a[1..].to_vec(), -a[0].clone());
            }
        }
        let mut a = SparseMatrix::zeros(rows.len(), n);
        let mut b = DenseVector::zeros(rows.len());
        for (r, row) in rows.iter().enumerate() {
            for (c, v) in row[..n].iter().enumerate() {
                if !v.is_zero() {
                    a.set(r, c, v.clone())?;
                }
            }
            b.0[r] = row[n].clone();
        }
        match solve_linear(&a, &b)? {
            Solution::Unique(x) => Ok(x.0),
            Solution::Underdetermined { free, .. } => Err(BuildError::NormalizationUnsolvable(
                format!("{free} scale(s) left free by the Jacobi constraints"),
            )),
            Solution::Inconsistent => Err(BuildError::NormalizationUnsolvable(
                "Jacobi constraints on the scales are inconsistent".into(),
            )),
        }
    }

    fn assemble(&self, x: &[Rational]) -> Result<StructureTable, BuildError> {
        let mut labels = self.spec.k.basis_labels.clone();
        labels.extend(self.spec.m_labels.iter().cloned());
        let mut t = StructureTable::new(self.spec.name.clone(), labels);
        let eval = |a: &Aff| -> Rational {
            a[1..]
                .iter()
                .zip(x)
                .fold(a[0].clone(), |acc, (c, v)| acc + c * v)
        };
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                let v: Vec<(usize, Rational)> = self
                    .basis_bracket(i, j)
                    .iter()
                    .map(|(l, a)| (*l, eval(a)))
                    .collect();
                if !v.is_empty() {
                    t.set_bracket(i, j, v)?;
                }
            }
        }
        Ok(t)
    }
}

/// Solves the scales, assembles the table and runs the full Jacobi sweep on
/// `workers` threads. Violations are reported as [`BuildError::JacobiFailure`].
pub fn extend(spec: &ExtensionSpec, workers: usize) -> Result<Extension, BuildError> {
    let engine = Engine::new(spec)?;
    let scales = engine.solve_scales()?;
    let table = engine.assemble(&scales)?;
    let report = verify_jacobi_with(&table, workers)?;
    if !report.is_lie_algebra() {
        return Err(BuildError::JacobiFailure(Box::new(report)));
    }
    Ok(Extension {
        table,
        scales,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::matrices::{so_basis, so_table};
    use crate::linalg::rat;

    fn so_step(n: usize) -> ExtensionSpec {
        let k = so_table(n);
        let dk = k.dim();
        ExtensionSpec {
            name: format!("so({})", n + 1),
            k,
            summands: vec![Summand {
                label: format!("so({n})"),
                indices: (0..dk).collect(),
                divisor: 2,
            }],
            rho: so_basis(n).iter().map(|(_, m)| rep_from_intmat(m)).collect(),
            m_labels: (1..=n).map(|i| format!("L_{i}_{}", n + 1)).collect(),
            m_piece: BTreeMap::new(),
        }
    }

    #[test]
    fn so_step_reproduces_matrix_table() {
        for n in 2..6 {
            let ext = extend(&so_step(n), 1).unwrap();
            assert_eq!(ext.scales, vec![rat(1)]);
            let mut want = so_table(n + 1);
            want.name = ext.table.name.clone();
            assert_eq!(ext.table, want, "so({})", n + 1);
        }
    }

    #[test]
    fn wrong_piece_is_rejected() {
        let mut spec = so_step(3);
        spec.m_piece.insert((0, 1), vec![(2, rat(1))]);
        assert!(matches!(
            extend(&spec, 1),
            Err(BuildError::NormalizationUnsolvable(_)) | Err(BuildError::JacobiFailure(_))
        ));
    }
}
