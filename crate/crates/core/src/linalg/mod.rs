//! Exact rational scalars and the small amount of sparse linear algebra the
//! rest of the crate needs: rank, Sylvester definiteness and linear solves.
//!
//! Everything is done by fraction-free (Bareiss) elimination over integers
//! after clearing row denominators. Pivots are always the first nonzero entry
//! in row-major order, so results and intermediate states are reproducible.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision exact fraction, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is not symmetric")]
    NonSymmetric,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("index ({row}, {col}) out of bounds for {rows}x{cols} matrix")]
    OutOfBounds {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
}

/// Sparse matrix with rational entries. Zero entries are never stored and
/// iteration is row-major.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries.insert((i, i), Rational::one());
        }
        m
    }

    /// Builds a matrix from dense integer rows.
    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                if v != 0 {
                    m.entries.insert((i, j), rat(v));
                }
            }
        }
        m
    }

    pub fn diagonal(values: &[Rational]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, v) in values.iter().enumerate() {
            m.set(i, i, v.clone()).expect("in bounds");
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Stores `value` at `(row, col)`; storing zero removes the entry.
    pub fn set(&mut self, row: usize, col: usize, value: Rational) -> Result<(), LinalgError> {
        if row >= self.rows || col >= self.cols {
            return Err(LinalgError::OutOfBounds {
                row,
                col,
                rows: self.rows,
                cols: self.cols,
            });
        }
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
        Ok(())
    }

    /// Adds `value` to the entry at `(row, col)`.
    pub fn add_to(&mut self, row: usize, col: usize, value: &Rational) -> Result<(), LinalgError> {
        let cur = self.get(row, col);
        self.set(row, col, cur + value)
    }

    /// Row-major iteration over the stored (nonzero) entries.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for (&(i, j), v) in &self.entries {
            t.entries.insert((j, i), v.clone());
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && self
                .entries
                .iter()
                .all(|(&(i, j), v)| self.entries.get(&(j, i)) == Some(v))
    }

    pub fn mul_vec(&self, x: &DenseVector) -> Result<DenseVector, LinalgError> {
        if x.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                got: x.len(),
            });
        }
        let mut out = vec![Rational::zero(); self.rows];
        for (&(i, j), v) in &self.entries {
            out[i] += v * &x.0[j];
        }
        Ok(DenseVector(out))
    }

    /// Dense integer rows, each row scaled by the lcm of its denominators.
    /// Positive row scalings preserve rank, solution sets (when applied to the
    /// augmented system) and the signs of leading principal minors.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::zero(); self.cols]; self.rows];
        let mut lcms = vec![BigInt::one(); self.rows];
        for (&(i, _), v) in &self.entries {
            lcms[i] = lcms[i].lcm(v.denom());
        }
        for (&(i, j), v) in &self.entries {
            out[i][j] = v.numer() * (&lcms[i] / v.denom());
        }
        out
    }
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseMatrix({}x{}, {{", self.rows, self.cols)?;
        for (k, (i, j, v)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({i},{j}): {v}")?;
        }
        write!(f, "}})")
    }
}

/// Fixed-length vector of rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseVector(pub Vec<Rational>);

impl DenseVector {
    pub fn zeros(n: usize) -> Self {
        DenseVector(vec![Rational::zero(); n])
    }

    pub fn from_i64(values: &[i64]) -> Self {
        DenseVector(values.iter().map(|&v| rat(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn components(&self) -> &[Rational] {
        &self.0
    }
}

/// Outcome of [`solve_linear`]: inconsistency is an ordinary value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(DenseVector),
    /// A particular solution (free variables set to zero) plus the number of
    /// free variables.
    Underdetermined { particular: DenseVector, free: usize },
    Inconsistent,
}

impl Solution {
    pub fn vector(&self) -> Option<&DenseVector> {
        match self {
            Solution::Unique(v) | Solution::Underdetermined { particular: v, .. } => Some(v),
            Solution::Inconsistent => None,
        }
    }
}

/// Bareiss row echelon form in place. Returns the pivot columns.
///
/// Column skipping keeps every division exact: each surviving entry is a
/// minor of the original matrix.
fn bareiss_echelon(a: &mut [Vec<BigInt>], ncols: usize) -> Vec<usize> {
    let nrows = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&p| !a[p][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        for row in bottom.iter_mut() {
            let factor = std::mem::take(&mut row[c]);
            for j in c + 1..ncols {
                let lhs = &pivot * &row[j];
                let val = if factor.is_zero() {
                    lhs
                } else {
                    lhs - &factor * &pivot_row[j]
                };
                if val.is_zero() {
                    row[j] = val;
                } else {
                    let (q, rem) = val.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                    row[j] = q;
                }
            }
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Exact rank over the rationals.
pub fn rank(m: &SparseMatrix) -> usize {
    if m.nnz() == 0 {
        return 0;
    }
    let mut a = m.integer_rows();
    bareiss_echelon(&mut a, m.cols).len()
}

/// Leading principal minors of a square matrix, up to positive factors.
///
/// Computed by Bareiss elimination without row exchanges; stops at the first
/// vanishing minor, so the returned list may be shorter than `n`.
fn leading_minor_signs(m: &SparseMatrix) -> Vec<i8> {
    let n = m.rows;
    let mut a = m.integer_rows();
    let mut prev = BigInt::one();
    let mut signs = Vec::with_capacity(n);
    for k in 0..n {
        let pivot = a[k][k].clone();
        if pivot.is_zero() {
            signs.push(0);
            return signs;
        }
        signs.push(if pivot.is_positive() { 1 } else { -1 });
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            let factor = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                if factor.is_zero() && row[j].is_zero() {
                    continue;
                }
                let val = &pivot * &row[j] - &factor * &pivot_row[j];
                row[j] = val / &prev;
            }
        }
        prev = pivot;
    }
    signs
}

/// Sylvester's criterion for negative definiteness: the k-th leading principal
/// minor must have sign (-1)^k.
pub fn is_negative_definite(m: &SparseMatrix) -> Result<bool, LinalgError> {
    if !m.is_symmetric() {
        return Err(LinalgError::NonSymmetric);
    }
    let signs = leading_minor_signs(m);
    Ok(signs.len() == m.rows
        && signs
            .iter()
            .enumerate()
            .all(|(k, &s)| s == if k % 2 == 0 { -1 } else { 1 }))
}

/// Positive definiteness by the same criterion.
pub fn is_positive_definite(m: &SparseMatrix) -> Result<bool, LinalgError> {
    if !m.is_symmetric() {
        return Err(LinalgError::NonSymmetric);
    }
    let signs = leading_minor_signs(m);
    Ok(signs.len() == m.rows && signs.iter().all(|&s| s == 1))
}

/// One exact solution of `a x = b`, with free variables set to zero.
pub fn solve_linear(a: &SparseMatrix, b: &DenseVector) -> Result<Solution, LinalgError> {
    if b.len() != a.rows {
        return Err(LinalgError::DimensionMismatch {
            expected: a.rows,
            got: b.len(),
        });
    }
    let n = a.cols;
    let mut aug = SparseMatrix::zeros(a.rows, n + 1);
    aug.entries = a.entries.clone();
    for (i, v) in b.0.iter().enumerate() {
        aug.set(i, n, v.clone())?;
    }
    let mut rows = aug.integer_rows();
    let pivots = bareiss_echelon(&mut rows, n + 1);
    if pivots.last() == Some(&n) {
        return Ok(Solution::Inconsistent);
    }
    let mut x = vec![Rational::zero(); n];
    for (r, &c) in pivots.iter().enumerate().rev() {
        let row = &rows[r];
        let mut acc = Rational::from_integer(row[n].clone());
        for j in c + 1..n {
            if !row[j].is_zero() {
                acc -= Rational::from_integer(row[j].clone()) * &x[j];
            }
        }
        x[c] = acc / Rational::from_integer(row[c].clone());
    }
    let free = n - pivots.len();
    let v = DenseVector(x);
    Ok(if free == 0 {
        Solution::Unique(v)
    } else {
        Solution::Underdetermined { particular: v, free }
    })
}

/// Basis of the right null space `{x : a x = 0}`, one vector per free column.
pub fn nullspace(a: &SparseMatrix) -> Vec<DenseVector> {
    let n = a.cols;
    let mut rows = a.integer_rows();
    let pivots = bareiss_echelon(&mut rows, n);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); n];
            x[f] = Rational::one();
            for (r, &c) in pivots.iter().enumerate().rev() {
                let row = &rows[r];
                let mut acc = Rational::zero();
                for j in c + 1..n {
                    if !row[j].is_zero() {
                        acc -= Rational::from_integer(row[j].clone()) * &x[j];
                    }
                }
                x[c] = acc / Rational::from_integer(row[c].clone());
            }
            DenseVector(x)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&SparseMatrix::identity(3)), 3);
        assert_eq!(rank(&SparseMatrix::zeros(2, 2)), 0);
        assert_eq!(rank(&SparseMatrix::from_rows_i64(&[vec![1, 2], vec![2, 4]])), 1);
    }

    #[test]
    fn rank_with_skipped_columns() {
        let m = SparseMatrix::from_rows_i64(&[
            vec![0, 1, 2, 3],
            vec![0, 2, 4, 7],
            vec![0, 3, 6, 10],
            vec![1, 0, 0, 0],
        ]);
        assert_eq!(rank(&m), 3);
    }

    #[test]
    fn definiteness_examples() {
        let neg = SparseMatrix::diagonal(&[rat(-1), rat(-1)]);
        assert_eq!(is_negative_definite(&neg), Ok(true));
        assert_eq!(is_negative_definite(&SparseMatrix::identity(2)), Ok(false));
        let degenerate = SparseMatrix::diagonal(&[rat(-1), rat(0)]);
        assert_eq!(is_negative_definite(&degenerate), Ok(false));
        let nonsym = SparseMatrix::from_rows_i64(&[vec![-1, 1], vec![0, -1]]);
        assert_eq!(is_negative_definite(&nonsym), Err(LinalgError::NonSymmetric));
        // -[[2,1],[1,2]] is negative definite; -[[1,2],[2,1]] is indefinite.
        let a = SparseMatrix::from_rows_i64(&[vec![-2, -1], vec![-1, -2]]);
        assert_eq!(is_negative_definite(&a), Ok(true));
        let b = SparseMatrix::from_rows_i64(&[vec![-1, -2], vec![-2, -1]]);
        assert_eq!(is_negative_definite(&b), Ok(false));
    }

    #[test]
    fn solve_examples() {
        let id = SparseMatrix::identity(2);
        assert_eq!(
            solve_linear(&id, &DenseVector::from_i64(&[3, 5])).unwrap(),
            Solution::Unique(DenseVector::from_i64(&[3, 5]))
        );
        let zero = SparseMatrix::zeros(1, 1);
        assert_eq!(
            solve_linear(&zero, &DenseVector::from_i64(&[1])).unwrap(),
            Solution::Inconsistent
        );
        let diag = SparseMatrix::from_rows_i64(&[vec![2, 0], vec![0, 4]]);
        assert_eq!(
            solve_linear(&diag, &DenseVector::from_i64(&[1, 1])).unwrap(),
            Solution::Unique(DenseVector(vec![frac(1, 2), frac(1, 4)]))
        );
    }

    #[test]
    fn nullspace_of_rank_one() {
        let m = SparseMatrix::from_rows_i64(&[vec![1, 2, 3]]);
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(m.mul_vec(&v).unwrap().0.iter().all(Zero::is_zero));
        }
    }

    fn small_matrix() -> impl Strategy<Value = SparseMatrix> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(
                prop_oneof![3 => Just(0i64), 2 => -4i64..5],
                r * c,
            )
            .prop_map(move |vals| {
                let rows: Vec<Vec<i64>> = vals.chunks(c).map(|ch| ch.to_vec()).collect();
                SparseMatrix::from_rows_i64(&rows)
            })
        })
    }

    proptest! {
        #[test]
        fn rational_round_trips(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
            let x = frac(a, b);
            let y = frac(c, d);
            prop_assert_eq!(&(&x + &y) - &y, x.clone());
            if !y.is_zero() {
                prop_assert_eq!(&(&x * &y) / &y, x);
            }
        }

        #[test]
        fn rank_is_transpose_invariant(m in small_matrix()) {
            prop_assert_eq!(rank(&m), rank(&m.transpose()));
        }

        #[test]
        fn solutions_satisfy_system(m in small_matrix(), seed in proptest::collection::vec(-3i64..4, 6)) {
            let b = DenseVector::from_i64(&seed[..m.rows()]);
            if let Some(x) = solve_linear(&m, &b).unwrap().vector() {
                prop_assert_eq!(m.mul_vec(x).unwrap(), b);
            }
        }
    }
}
