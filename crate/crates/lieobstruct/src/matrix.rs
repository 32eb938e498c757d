//! Dense exact linear algebra over the prime field F_p.
//!
//! Everything downstream (cohomology dimensions, coboundary solving,
//! structure predicates) reduces to rank, kernel, and solve on these
//! matrices. Elimination is plain Gauss-Jordan with a fixed pivot order, so
//! every derived object (kernel basis, minimal solution, echelon
//! representatives) is deterministic.

use crate::error::{Error, Result};

/// a^(p-2) mod p, the inverse of a nonzero residue.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "zero has no inverse");
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc: u64 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Row-major dense matrix over F_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatFp {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl MatFp {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        MatFp {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(p, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.p;
    }

    /// Adds v into entry (i, j) mod p.
    pub fn add(&mut self, i: usize, j: usize, v: u64) {
        let cur = self.get(i, j);
        self.set(i, j, (cur + v % self.p) % self.p);
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> MatFp {
        let mut t = Self::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, rhs: &MatFp) -> MatFp {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        assert_eq!(self.p, rhs.p, "modulus mismatch in matrix product");
        let p = self.p as u128;
        let mut out = Self::zeros(self.p, self.rows, rhs.cols);
        // Entries below 2^32 cannot overflow a u128 accumulator over any
        // feasible inner dimension; larger primes reduce per term.
        let small = self.p < (1u64 << 32);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc: u128 = 0;
                for t in 0..self.cols {
                    let prod = self.get(i, t) as u128 * rhs.get(t, j) as u128;
                    acc += if small { prod } else { prod % p };
                    if !small {
                        acc %= p;
                    }
                }
                out.set(i, j, (acc % p) as u64);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        let p = self.p as u128;
        let small = self.p < (1u64 << 32);
        (0..self.rows)
            .map(|i| {
                let mut acc: u128 = 0;
                for t in 0..self.cols {
                    let prod = self.get(i, t) as u128 * v[t] as u128;
                    acc += if small { prod } else { prod % p };
                    if !small {
                        acc %= p;
                    }
                }
                (acc % p) as u64
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form together with the pivot columns, in order.
    pub fn rref(&self) -> (MatFp, Vec<usize>) {
        let mut m = self.clone();
        let p = m.p;
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(pr, r);
            let inv = inv_mod(m.get(r, c), p);
            for j in c..m.cols {
                let v = (m.get(r, j) as u128 * inv as u128 % p as u128) as u64;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c) == 0 {
                    continue;
                }
                let f = m.get(i, c);
                for j in c..m.cols {
                    let sub = (f as u128 * m.get(r, j) as u128 % p as u128) as u64;
                    let v = (m.get(i, j) + p - sub) % p;
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel {x : Ax = 0}, one vector per free column in
    /// ascending column order.
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let (r, pivots) = self.rref();
        let p = self.p;
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut x = vec![0u64; self.cols];
            x[free] = 1;
            for (row, &c) in pivots.iter().enumerate() {
                x[c] = (p - r.get(row, free)) % p;
            }
            basis.push(x);
        }
        basis
    }

    /// Solves Ax = b. Returns the minimal solution under the elimination
    /// pivot order (all free variables zero), or None when inconsistent.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let mut aug = MatFp::zeros(self.p, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i]);
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![0u64; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            x[c] = r.get(row, self.cols);
        }
        Some(x)
    }

    /// Inverse of a square matrix, or None when singular.
    pub fn inverse(&self) -> Option<MatFp> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = MatFp::zeros(self.p, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = MatFp::zeros(self.p, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j));
            }
        }
        Some(inv)
    }
}

/// A growing subspace of F_p^n kept in reduced echelon form.
///
/// Rows are sorted by pivot column, each pivot is 1 and is the only nonzero
/// entry in its column among the stored rows, so reduction against the space
/// is canonical.
#[derive(Clone, Debug)]
pub struct EchelonSpace {
    p: u64,
    cols: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl EchelonSpace {
    pub fn new(p: u64, cols: usize) -> Self {
        EchelonSpace {
            p,
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// The canonical representative of v modulo the stored span.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let p = self.p;
        let mut out: Vec<u64> = v.iter().map(|&x| x % p).collect();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let f = out[c];
            if f == 0 {
                continue;
            }
            for j in c..self.cols {
                let sub = (f as u128 * row[j] as u128 % p as u128) as u64;
                out[j] = (out[j] + p - sub) % p;
            }
        }
        out
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Inserts v; returns true when the dimension grew.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        let mut red = self.reduce(v);
        let Some(c) = red.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(red[c], self.p);
        for x in red.iter_mut() {
            *x = (*x as u128 * inv as u128 % self.p as u128) as u64;
        }
        // Clear column c in the existing rows, then keep rows ordered by pivot.
        for row in self.rows.iter_mut() {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for j in 0..self.cols {
                let sub = (f as u128 * red[j] as u128 % self.p as u128) as u64;
                row[j] = (row[j] + self.p - sub) % self.p;
            }
        }
        let at = self.pivots.partition_point(|&x| x < c);
        self.pivots.insert(at, c);
        self.rows.insert(at, red);
        true
    }

    /// The stored echelon rows, sorted by pivot column.
    pub fn basis(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
}

/// Guard helper shared by the feasibility checks: p^e as u64 if it stays
/// within the budget bound, None otherwise.
pub fn checked_power(p: u64, e: u32, bound: u64) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..e {
        acc = acc.checked_mul(p)?;
        if acc > bound {
            return None;
        }
    }
    Some(acc)
}

/// p^e <= bound enforced as a guard, reported through Error::GuardExceeded.
pub fn guarded_power(p: u64, e: u32, bound: u64, what: &'static str) -> Result<u64> {
    checked_power(p, e, bound).ok_or(Error::GuardExceeded {
        what,
        bound,
        actual: format!("{p}^{e}"),
    })
}
