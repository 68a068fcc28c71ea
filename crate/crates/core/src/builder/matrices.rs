//! Canonical bases of the classical compact algebras as explicit real
//! matrices, and structure constants read off from matrix commutators.
//!
//! These give an independent route to `so(n)`, `su(n)` and `sp(n)`: the
//! inductive extension steps must reproduce exactly these tables.
//!
//! * `so(n)`: `L_i_j = E_ij - E_ji`, `i < j`, ordered by `j` then `i` so that
//!   `so(n+1) = so(n) ⊕ {L_i_(n+1)}`.
//! * `su(n)`: complex `n×n` matrices realified to `2n×2n`, basis built
//!   recursively: `su(m+1) = su(m) ⊕ z_m ⊕ {re_k, im_k}` with
//!   `z_m = i·diag(1,…,1,-m)`, `re_k = E_km - E_mk`, `im_k = i(E_km + E_mk)`.
//! * `sp(n)`: quaternionic `n×n` matrices realified to `4n×4n` (left
//!   multiplication), basis `sp(m+1) = sp(m) ⊕ {i,j,k}·E_mm ⊕
//!   {u E_km - ū E_mk : u ∈ 1,i,j,k}`.

use crate::linalg::Rational;

use super::table::StructureTable;

/// Dense square integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMat {
    pub n: usize,
    pub data: Vec<i64>,
}

impl IntMat {
    pub fn zeros(n: usize) -> Self {
        IntMat {
            n,
            data: vec![0; n * n],
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn add(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] += v;
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        let n = self.n;
        let mut out = IntMat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &IntMat) -> IntMat {
        let ab = self.mul(other);
        let ba = other.mul(self);
        IntMat {
            n: self.n,
            data: ab.data.iter().zip(&ba.data).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn scaled(&self, c: i64) -> IntMat {
        IntMat {
            n: self.n,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// `-Tr(self · other)`, positive definite on antisymmetric matrices.
    pub fn trace_form(&self, other: &IntMat) -> i64 {
        let n = self.n;
        let mut s = 0;
        for i in 0..n {
            for k in 0..n {
                s += self.get(i, k) * other.get(k, i);
            }
        }
        -s
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Columns as sparse lists: `M e_s = Σ (t, M_ts) e_t`.
    pub fn columns(&self) -> Vec<Vec<(usize, Rational)>> {
        (0..self.n)
            .map(|s| {
                (0..self.n)
                    .filter(|&t| self.get(t, s) != 0)
                    .map(|t| (t, Rational::from_integer(self.get(t, s).into())))
                    .collect()
            })
            .collect()
    }
}

/// Quaternion `a + b i + c j + d k`.
pub type Quat = [i64; 4];

pub const Q_ONE: Quat = [1, 0, 0, 0];
pub const Q_I: Quat = [0, 1, 0, 0];
pub const Q_J: Quat = [0, 0, 1, 0];
pub const Q_K: Quat = [0, 0, 0, 1];

pub fn qmul(p: Quat, q: Quat) -> Quat {
    let [a1, b1, c1, d1] = p;
    let [a2, b2, c2, d2] = q;
    [
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ]
}

pub fn qconj(q: Quat) -> Quat {
    [q[0], -q[1], -q[2], -q[3]]
}

const UNITS: [Quat; 4] = [Q_ONE, Q_I, Q_J, Q_K];

/// Adds the 4×4 real block of left multiplication by `q` at block `(p, r)`.
fn add_left_block(m: &mut IntMat, p: usize, r: usize, q: Quat) {
    for (col, u) in UNITS.iter().enumerate() {
        let img = qmul(q, *u);
        for (row, v) in img.iter().enumerate() {
            m.add(4 * p + row, 4 * r + col, *v);
        }
    }
}

/// Right multiplication `v ↦ v·u` on `H^n`, realified.
pub fn right_mult(n: usize, u: Quat) -> IntMat {
    let mut m = IntMat::zeros(4 * n);
    for p in 0..n {
        for (col, e) in UNITS.iter().enumerate() {
            let img = qmul(*e, u);
            for (row, v) in img.iter().enumerate() {
                m.add(4 * p + row, 4 * p + col, *v);
            }
        }
    }
    m
}

/// Adds the 2×2 real block of the complex number `re + i·im` at block `(p, r)`.
fn add_complex_block(m: &mut IntMat, p: usize, r: usize, re: i64, im: i64) {
    m.add(2 * p, 2 * r, re);
    m.add(2 * p, 2 * r + 1, -im);
    m.add(2 * p + 1, 2 * r, im);
    m.add(2 * p + 1, 2 * r + 1, re);
}

/// Multiplication by `i` on `C^n`, realified.
pub fn complex_unit(n: usize) -> IntMat {
    let mut m = IntMat::zeros(2 * n);
    for p in 0..n {
        add_complex_block(&mut m, p, p, 0, 1);
    }
    m
}

pub fn so_basis(n: usize) -> Vec<(String, IntMat)> {
    let mut out = Vec::new();
    for j in 0..n {
        for i in 0..j {
            let mut m = IntMat::zeros(n);
            m.add(i, j, 1);
            m.add(j, i, -1);
            out.push((format!("L_{}_{}", i + 1, j + 1), m));
        }
    }
    out
}

pub fn su_basis(n: usize) -> Vec<(String, IntMat)> {
    let mut mats = Vec::new();
    for m in 1..n {
        let mut z = IntMat::zeros(2 * n);
        for p in 0..m {
            add_complex_block(&mut z, p, p, 0, 1);
        }
        add_complex_block(&mut z, m, m, 0, -(m as i64));
        mats.push(z);
        for k in 0..m {
            let mut re = IntMat::zeros(2 * n);
            add_complex_block(&mut re, k, m, 1, 0);
            add_complex_block(&mut re, m, k, -1, 0);
            mats.push(re);
            let mut im = IntMat::zeros(2 * n);
            add_complex_block(&mut im, k, m, 0, 1);
            add_complex_block(&mut im, m, k, 0, 1);
            mats.push(im);
        }
    }
    mats.into_iter()
        .enumerate()
        .map(|(i, m)| (format!("T_{i}"), m))
        .collect()
}

pub fn sp_basis(n: usize) -> Vec<(String, IntMat)> {
    let mut mats = Vec::new();
    for m in 0..n {
        for u in [Q_I, Q_J, Q_K] {
            let mut d = IntMat::zeros(4 * n);
            add_left_block(&mut d, m, m, u);
            mats.push(d);
        }
        for k in 0..m {
            for u in UNITS {
                let mut x = IntMat::zeros(4 * n);
                add_left_block(&mut x, k, m, u);
                add_left_block(&mut x, m, k, qconj(u).map(|c| -c));
                mats.push(x);
            }
        }
    }
    mats.into_iter()
        .enumerate()
        .map(|(i, m)| (format!("T_{i}"), m))
        .collect()
}

/// Structure constants of the span of `basis`, which must be orthogonal for
/// the trace form and closed under commutators.
pub fn table_from_matrices(name: &str, basis: &[(String, IntMat)]) -> StructureTable {
    let norms: Vec<i64> = basis.iter().map(|(_, m)| m.trace_form(m)).collect();
    let mut t = StructureTable::new(name, basis.iter().map(|(l, _)| l.clone()).collect());
    for a in 0..basis.len() {
        for b in a + 1..basis.len() {
            let c = basis[a].1.commutator(&basis[b].1);
            if c.is_zero() {
                continue;
            }
            let mut coeffs = Vec::new();
            for (k, (_, m)) in basis.iter().enumerate() {
                let p = c.trace_form(m);
                if p != 0 {
                    coeffs.push((k, p, norms[k]));
                }
            }
            // Check closure: lcm · c must equal Σ (lcm · p / norm) m.
            let lcm = coeffs
                .iter()
                .fold(1i64, |acc, &(_, _, nk)| num_integer::lcm(acc, nk));
            let mut rebuilt = IntMat::zeros(c.n);
            for &(k, p, nk) in &coeffs {
                let s = basis[k].1.scaled(p * (lcm / nk));
                for (x, y) in rebuilt.data.iter_mut().zip(&s.data) {
                    *x += y;
                }
            }
            let c = c.scaled(lcm);
            assert_eq!(rebuilt, c, "basis of {name} not closed or not orthogonal");
            let coeffs = coeffs
                .into_iter()
                .map(|(k, p, nk)| (k, Rational::new(p.into(), nk.into())))
                .collect();
            t.set_bracket(a, b, coeffs).expect("indices in range");
        }
    }
    t
}

pub fn so_table(n: usize) -> StructureTable {
    table_from_matrices(&format!("so({n})"), &so_basis(n))
}

pub fn su_table(n: usize) -> StructureTable {
    table_from_matrices(&format!("su({n})"), &su_basis(n))
}

pub fn sp_table(n: usize) -> StructureTable {
    table_from_matrices(&format!("sp({n})"), &sp_basis(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::table::verify_jacobi;

    #[test]
    fn dimensions() {
        assert_eq!(so_basis(9).len(), 36);
        assert_eq!(su_basis(5).len(), 24);
        assert_eq!(sp_basis(3).len(), 21);
    }

    #[test]
    fn bases_are_orthogonal() {
        for basis in [so_basis(5), su_basis(4), sp_basis(3)] {
            for a in 0..basis.len() {
                assert!(basis[a].1.trace_form(&basis[a].1) > 0);
                for b in a + 1..basis.len() {
                    assert_eq!(basis[a].1.trace_form(&basis[b].1), 0);
                }
            }
        }
    }

    #[test]
    fn quaternion_units() {
        assert_eq!(qmul(Q_I, Q_J), Q_K);
        assert_eq!(qmul(Q_J, Q_I), [0, 0, 0, -1]);
        assert_eq!(qmul(Q_K, Q_K), [-1, 0, 0, 0]);
    }

    #[test]
    fn matrix_tables_are_lie() {
        for t in [so_table(5), su_table(4), sp_table(2)] {
            assert!(verify_jacobi(&t).is_lie_algebra(), "{}", t.name);
        }
    }

    #[test]
    fn so_convention() {
        // Basis order L_1_2, L_1_3, L_2_3; [L_12, L_23] = L_13.
        let t = so_table(3);
        assert_eq!(t.bracket(0, 2), vec![(1, Rational::from_integer(1.into()))]);
        // [L_13, L_23] = -L_12.
        assert_eq!(t.bracket(1, 2), vec![(0, Rational::from_integer((-1).into()))]);
    }
}
