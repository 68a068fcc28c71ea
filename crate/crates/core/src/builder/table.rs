use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::linalg::Rational;

use super::BuildError;

/// Sparse antisymmetric bracket table `[e_i, e_j] = Σ_k c_ij^k e_k`.
///
/// Only pairs `i < j` are stored; coefficient lists are sorted by `k` and
/// never contain zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTable {
    pub name: String,
    pub basis_labels: Vec<String>,
    brackets: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
}

impl StructureTable {
    pub fn new(name: impl Into<String>, basis_labels: Vec<String>) -> Self {
        StructureTable {
            name: name.into(),
            basis_labels,
            brackets: BTreeMap::new(),
        }
    }

    /// Abelian algebra with the given labels.
    pub fn abelian(name: impl Into<String>, labels: Vec<String>) -> Self {
        Self::new(name, labels)
    }

    pub fn dim(&self) -> usize {
        self.basis_labels.len()
    }

    /// Sets `[e_i, e_j]`; `i > j` stores the negated value under `(j, i)`.
    pub fn set_bracket(
        &mut self,
        i: usize,
        j: usize,
        value: Vec<(usize, Rational)>,
    ) -> Result<(), BuildError> {
        let d = self.dim();
        if i >= d || j >= d || value.iter().any(|(k, _)| *k >= d) {
            return Err(BuildError::Format(format!("bracket index out of range (dim {d})")));
        }
        let value = normalize(value);
        if i == j {
            return if value.is_empty() {
                Ok(())
            } else {
                Err(BuildError::Format(format!("[e_{i}, e_{i}] must vanish")))
            };
        }
        let (key, value) = if i < j {
            ((i, j), value)
        } else {
            ((j, i), value.into_iter().map(|(k, c)| (k, -c)).collect())
        };
        if value.is_empty() {
            self.brackets.remove(&key);
        } else {
            self.brackets.insert(key, value);
        }
        Ok(())
    }

    /// `[e_i, e_j]` for any ordered pair.
    pub fn bracket(&self, i: usize, j: usize) -> Vec<(usize, Rational)> {
        if i == j {
            return Vec::new();
        }
        if i < j {
            self.brackets.get(&(i, j)).cloned().unwrap_or_default()
        } else {
            self.brackets
                .get(&(j, i))
                .map(|v| v.iter().map(|(k, c)| (*k, -c)).collect())
                .unwrap_or_default()
        }
    }

    /// Bracket of two vectors given in coordinates.
    pub fn bracket_vectors(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (&(i, j), v) in &self.brackets {
            let w = &x[i] * &y[j] - &x[j] * &y[i];
            if w.is_zero() {
                continue;
            }
            for (k, c) in v {
                out[*k] += &w * c;
            }
        }
        out
    }

    /// Stored brackets in `(i, j)` order, `i < j`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &[(usize, Rational)])> {
        self.brackets.iter().map(|(&(i, j), v)| (i, j, v.as_slice()))
    }

    /// Number of stored structure constants.
    pub fn nnz(&self) -> usize {
        self.brackets.values().map(Vec::len).sum()
    }

    /// Direct sum; the second summand's indices are shifted by `self.dim()`.
    pub fn direct_sum(&self, other: &StructureTable, name: impl Into<String>) -> StructureTable {
        let shift = self.dim();
        let mut labels = self.basis_labels.clone();
        labels.extend(other.basis_labels.iter().cloned());
        let mut out = StructureTable::new(name, labels);
        out.brackets = self.brackets.clone();
        for (i, j, v) in other.iter() {
            out.brackets.insert(
                (i + shift, j + shift),
                v.iter().map(|(k, c)| (k + shift, c.clone())).collect(),
            );
        }
        out
    }

    /// Integer copy of the table scaled by the lcm of all denominators.
    pub fn to_integer(&self) -> Result<IntTable, BuildError> {
        let mut scale = BigInt::one();
        for v in self.brackets.values() {
            for (_, c) in v {
                scale = scale.lcm(c.denom());
            }
        }
        let d = self.dim();
        let mut rows: Vec<Vec<(u32, i64)>> = vec![Vec::new(); d * d];
        for (&(i, j), v) in &self.brackets {
            let mut fwd = Vec::with_capacity(v.len());
            for (k, c) in v {
                let n = c.numer() * (&scale / c.denom());
                let n = n
                    .to_i64()
                    .filter(|n| n.unsigned_abs() < 1 << 24)
                    .ok_or_else(|| BuildError::Format("structure constant too large".into()))?;
                fwd.push((*k as u32, n));
            }
            rows[j * d + i] = fwd.iter().map(|&(k, n)| (k, -n)).collect();
            rows[i * d + j] = fwd;
        }
        let mut offsets = Vec::with_capacity(d * d + 1);
        let mut entries = Vec::new();
        offsets.push(0u32);
        for r in rows {
            entries.extend(r);
            offsets.push(entries.len() as u32);
        }
        Ok(IntTable {
            dim: d,
            scale,
            offsets,
            entries,
        })
    }
}

fn normalize(value: Vec<(usize, Rational)>) -> Vec<(usize, Rational)> {
    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
    for (k, c) in value {
        *acc.entry(k).or_insert_with(Rational::zero) += c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Integer structure constants `scale · c_ij^k` for every ordered pair, in a
/// compressed row layout. This is the inner-loop representation for the
/// Jacobi sweep and the Killing form.
#[derive(Clone, Debug)]
pub struct IntTable {
    pub dim: usize,
    pub scale: BigInt,
    offsets: Vec<u32>,
    entries: Vec<(u32, i64)>,
}

impl IntTable {
    #[inline]
    pub fn bracket(&self, i: usize, j: usize) -> &[(u32, i64)] {
        let p = i * self.dim + j;
        &self.entries[self.offsets[p] as usize..self.offsets[p + 1] as usize]
    }
}

/// One violated Jacobi triple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// Nonzero components of `[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]`.
    #[serde(serialize_with = "serialize_defect")]
    pub defect: Vec<(usize, Rational)>,
}

fn serialize_defect<S: serde::Serializer>(
    d: &[(usize, Rational)],
    s: S,
) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(d.len()))?;
    for (k, c) in d {
        seq.serialize_element(&(k, c.to_string()))?;
    }
    seq.end()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobiReport {
    pub dim: usize,
    pub triples_checked: u64,
    pub violations: u64,
    /// Lexicographically smallest violated triple.
    pub first_violation: Option<Violation>,
}

impl JacobiReport {
    pub fn is_lie_algebra(&self) -> bool {
        self.violations == 0
    }
}

/// Full Jacobi sweep on a single thread.
pub fn verify_jacobi(t: &StructureTable) -> JacobiReport {
    verify_jacobi_with(t, 1).expect("table fits the integer lattice")
}

/// `(i, j, k, defect)` of the smallest violated triple seen.
type FirstViolation = (usize, usize, usize, Vec<(usize, i64)>);

struct Partial {
    triples: u64,
    violations: u64,
    first: Option<FirstViolation>,
}

fn sweep_block(t: &IntTable, outer: std::ops::Range<usize>) -> Partial {
    let d = t.dim;
    let mut acc = vec![0i64; d];
    let mut touched: Vec<usize> = Vec::with_capacity(d);
    let mut out = Partial {
        triples: 0,
        violations: 0,
        first: None,
    };
    let add = |acc: &mut Vec<i64>, touched: &mut Vec<usize>, a: usize, inner: &[(u32, i64)]| {
        for &(l, c) in inner {
            for &(m, e) in t.bracket(a, l as usize) {
                let m = m as usize;
                if acc[m] == 0 {
                    touched.push(m);
                }
                acc[m] += c * e;
            }
        }
    };
    for i in outer {
        for j in i + 1..d {
            let bij = t.bracket(i, j);
            for k in j + 1..d {
                add(&mut acc, &mut touched, i, t.bracket(j, k));
                add(&mut acc, &mut touched, j, t.bracket(k, i));
                add(&mut acc, &mut touched, k, bij);
                out.triples += 1;
                let mut bad = false;
                for &m in &touched {
                    if acc[m] != 0 {
                        bad = true;
                        break;
                    }
                }
                if bad {
                    out.violations += 1;
                    if out.first.is_none() {
                        let mut defect: Vec<(usize, i64)> = touched
                            .iter()
                            .filter(|&&m| acc[m] != 0)
                            .map(|&m| (m, acc[m]))
                            .collect();
                        defect.sort();
                        defect.dedup();
                        out.first = Some((i, j, k, defect));
                    }
                }
                for &m in &touched {
                    acc[m] = 0;
                }
                touched.clear();
            }
        }
    }
    out
}

/// Splits `0..dim` into at most `blocks` contiguous ranges of outer indices
/// carrying roughly equal numbers of triples.
fn outer_blocks(dim: usize, blocks: usize) -> Vec<std::ops::Range<usize>> {
    let count = |i: usize| {
        let r = (dim - i - 1) as u64;
        r * r.saturating_sub(1) / 2
    };
    let total: u64 = (0..dim).map(count).sum();
    let target = total.div_ceil(blocks.max(1) as u64).max(1);
    let mut out = Vec::new();
    let mut start = 0;
    let mut acc = 0;
    for i in 0..dim {
        acc += count(i);
        if acc >= target {
            out.push(start..i + 1);
            start = i + 1;
            acc = 0;
        }
    }
    if start < dim {
        out.push(start..dim);
    }
    out
}

/// Jacobi sweep over every triple `i < j < k`, fanned out over `workers`
/// threads by blocks of the outer index. The report does not depend on the
/// worker count.
pub fn verify_jacobi_with(t: &StructureTable, workers: usize) -> Result<JacobiReport, BuildError> {
    let it = t.to_integer()?;
    let d = it.dim;
    let partials: Vec<Partial> = if workers <= 1 {
        vec![sweep_block(&it, 0..d)]
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| BuildError::Unsupported(e.to_string()))?;
        let blocks = outer_blocks(d, workers * 4);
        pool.install(|| blocks.into_par_iter().map(|b| sweep_block(&it, b)).collect())
    };
    let mut report = JacobiReport {
        dim: d,
        triples_checked: 0,
        violations: 0,
        first_violation: None,
    };
    let mut first: Option<FirstViolation> = None;
    for p in partials {
        report.triples_checked += p.triples;
        report.violations += p.violations;
        if let Some(f) = p.first {
            if first.as_ref().is_none_or(|g| (f.0, f.1, f.2) < (g.0, g.1, g.2)) {
                first = Some(f);
            }
        }
    }
    let sq = &it.scale * &it.scale;
    report.first_violation = first.map(|(i, j, k, defect)| Violation {
        i,
        j,
        k,
        defect: defect
            .into_iter()
            .map(|(m, v)| (m, Rational::new(BigInt::from(v), sq.clone())))
            .collect(),
    });
    Ok(report)
}

/// Antisymmetry is structural in [`StructureTable`]; this checks the weaker
/// property that matters after import: no diagonal or duplicate keys and all
/// indices in range.
pub fn check_well_formed(t: &StructureTable) -> bool {
    t.iter().all(|(i, j, v)| {
        i < j && j < t.dim() && v.iter().all(|(k, c)| *k < t.dim() && !c.is_zero())
            && v.windows(2).all(|w| w[0].0 < w[1].0)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn so3(sign_flip: bool) -> StructureTable {
        // Basis (e, x, y) with [x, y] = e, [e, x] = y, [e, y] = -x.
        let mut t = StructureTable::new("so3", vec!["e".into(), "x".into(), "y".into()]);
        t.set_bracket(1, 2, vec![(0, rat(1))]).unwrap();
        t.set_bracket(0, 1, vec![(2, rat(1))]).unwrap();
        t.set_bracket(0, 2, vec![(1, rat(if sign_flip { 1 } else { -1 }))]).unwrap();
        t
    }

    #[test]
    fn so3_has_one_triple_and_no_violation() {
        let r = verify_jacobi(&so3(false));
        assert_eq!(r.triples_checked, 1);
        assert_eq!(r.violations, 0);
    }

    #[test]
    fn sign_flipped_so3_is_still_a_lie_algebra() {
        // [x,y] = e, [e,x] = y, [e,y] = x. Every double bracket of three
        // distinct elements of a 3-dim cyclic table lands in [a, a] = 0:
        // [e,[x,y]] = [e,e], [x,[y,e]] = [x,-x], [y,[e,x]] = [y,y].
        // The table is the split real form sl(2,R).
        let r = verify_jacobi(&so3(true));
        assert_eq!(r.triples_checked, 1);
        assert_eq!(r.violations, 0);
    }

    #[test]
    fn inconsistent_bracket_is_reported() {
        // [x,y] = e + x: [e,[x,y]] = [e,x] = y, [x,[y,e]] = [x,x] = 0,
        // [y,[e,x]] = [y,y] = 0, so the defect is exactly y.
        let mut broken = so3(false);
        broken.set_bracket(1, 2, vec![(0, rat(1)), (1, rat(1))]).unwrap();
        let r = verify_jacobi(&broken);
        assert_eq!(r.violations, 1);
        let v = r.first_violation.unwrap();
        assert_eq!((v.i, v.j, v.k), (0, 1, 2));
        assert_eq!(v.defect, vec![(2, rat(1))]);
    }

    #[test]
    fn abelian_table_is_lie() {
        let t = StructureTable::abelian("ab", vec!["a".into(), "b".into(), "c".into()]);
        assert!(verify_jacobi(&t).is_lie_algebra());
    }

    #[test]
    fn blocks_cover_range() {
        for d in [1, 2, 3, 10, 57] {
            for b in [1, 3, 8, 32] {
                let blocks = outer_blocks(d, b);
                let flat: Vec<usize> = blocks.iter().flat_map(|r| r.clone()).collect();
                assert_eq!(flat, (0..d).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn set_bracket_antisymmetrizes() {
        let mut t = StructureTable::new("t", vec!["a".into(), "b".into()]);
        t.set_bracket(1, 0, vec![(0, rat(2))]).unwrap();
        assert_eq!(t.bracket(0, 1), vec![(0, rat(-2))]);
        assert!(t.set_bracket(0, 0, vec![(1, rat(1))]).is_err());
    }
}
