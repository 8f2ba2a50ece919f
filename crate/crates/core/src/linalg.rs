//! Dense matrices over an exact field and the subspace calculus built on
//! reduced row echelon forms.
//!
//! Subspaces of `k^d` are passed around as `d x r` matrices whose columns
//! form a basis (full column rank).

use std::fmt;

use crate::field::Field;

#[derive(Clone, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|e| self.field.format(e)).collect();
            write!(f, "[{}]", row.join(","))?;
        }
        write!(f, "]")
    }
}

/// Result of reducing a matrix to reduced row echelon form.
pub struct Echelon<F: Field> {
    pub rref: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: &F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Self {
        assert_eq!(rows * cols, data.len(), "matrix data has wrong length");
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn from_row_vecs(field: &F, cols: usize, rows: &[Vec<F::Elem>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend(r.iter().cloned());
        }
        Matrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: &F, rows: usize, columns: &[Vec<F::Elem>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, v) in col.iter().enumerate() {
                m.data[r * m.cols + c] = v.clone();
            }
        }
        m
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<F::Elem>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| self.field.is_zero(e))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                let orow = other.row(k);
                let base = i * other.cols;
                for (j, b) in orow.iter().enumerate() {
                    if !f.is_zero(b) {
                        let cur = &out.data[base + j];
                        out.data[base + j] = f.add(cur, &f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                let mut acc = f.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        acc = f.add(&acc, &f.mul(a, b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape());
        let f = &self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| f.add(a, b))
            .collect();
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape());
        let f = &self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| f.sub(a, b))
            .collect();
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let f = &self.field;
        let data = self.data.iter().map(|a| f.mul(a, s)).collect();
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols,
            data,
        }
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn block_diag(&self, other: &Self) -> Self {
        let mut m = Self::zeros(&self.field, self.rows + other.rows, self.cols + other.cols);
        m.paste(0, 0, self);
        m.paste(self.rows, self.cols, other);
        m
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Self) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let mut m = Self::zeros(&self.field, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                m.set(r, j, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        Matrix {
            field: self.field.clone(),
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn sub_matrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let mut m = Self::zeros(&self.field, rows.len(), cols.len());
        for (i, r) in rows.clone().enumerate() {
            for (j, c) in cols.clone().enumerate() {
                m.set(i, j, self.get(r, c).clone());
            }
        }
        m
    }

    /// Reduced row echelon form with the list of pivot columns.
    pub fn echelon(&self) -> Echelon<F> {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for c in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let Some(r) = (prow..m.rows).find(|&r| !f.is_zero(m.get(r, c))) else {
                continue;
            };
            m.swap_rows(prow, r);
            let inv = f.inv(m.get(prow, c)).expect("pivot is nonzero");
            if !f.is_one(&inv) {
                for j in c..m.cols {
                    let v = f.mul(m.get(prow, j), &inv);
                    m.set(prow, j, v);
                }
            }
            let pivot_row: Vec<F::Elem> = m.row(prow)[c..].to_vec();
            for r in 0..m.rows {
                if r == prow {
                    continue;
                }
                let factor = m.get(r, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                let base = r * m.cols;
                for (off, pv) in pivot_row.iter().enumerate() {
                    if !f.is_zero(pv) {
                        let idx = base + c + off;
                        m.data[idx] = f.sub(&m.data[idx], &f.mul(&factor, pv));
                    }
                }
            }
            pivots.push(c);
            prow += 1;
        }
        Echelon { rref: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of the kernel, as columns of a `cols x k` matrix.
    pub fn nullspace(&self) -> Self {
        let f = &self.field;
        let Echelon { rref, pivots } = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut basis = Self::zeros(f, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            basis.set(fc, j, f.one());
            for (i, &pc) in pivots.iter().enumerate() {
                let v = rref.get(i, fc);
                if !f.is_zero(v) {
                    basis.set(pc, j, f.neg(v));
                }
            }
        }
        basis
    }

    /// Basis of the column space, chosen among the original columns.
    pub fn column_space(&self) -> Self {
        let pivots = self.echelon().pivots;
        self.select_columns(&pivots)
    }

    /// Solves `self * X = rhs`; `None` if inconsistent.
    pub fn solve(&self, rhs: &Self) -> Option<Self> {
        assert_eq!(self.rows, rhs.rows);
        let f = &self.field;
        let aug = self.hstack(rhs);
        let Echelon { rref, pivots } = aug.echelon();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Self::zeros(f, self.cols, rhs.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, rref.get(i, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve(&Self::identity(&self.field, self.rows))?;
        if self.rank() == self.rows {
            Some(x)
        } else {
            None
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// `self^n` for a square matrix.
    pub fn pow(&self, mut n: usize) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut acc = Self::identity(&self.field, self.rows);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// Basis of the span of the columns of `a` and `b`.
pub fn span_sum<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    a.hstack(b).column_space()
}

/// Basis of the intersection of two column spaces in the same ambient space.
pub fn intersect<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    assert_eq!(a.rows(), b.rows());
    if a.cols() == 0 || b.cols() == 0 {
        return Matrix::zeros(a.field(), a.rows(), 0);
    }
    // a x = b y  <=>  [a | -b] (x; y) = 0
    let neg_b = b.scale(&a.field().neg(&a.field().one()));
    let null = a.hstack(&neg_b).nullspace();
    let x = null.sub_matrix(0..a.cols(), 0..null.cols());
    a.mul(&x).column_space()
}

/// Coordinates of the columns of `v` in the basis `basis`; `None` when some
/// column lies outside the span.
pub fn coordinates<F: Field>(basis: &Matrix<F>, v: &Matrix<F>) -> Option<Matrix<F>> {
    basis.solve(v)
}

pub fn contains<F: Field>(basis: &Matrix<F>, v: &Matrix<F>) -> bool {
    if v.cols() == 0 {
        return true;
    }
    basis.hstack(v).rank() == basis.rank()
}

/// Standard basis vectors completing the columns of `basis` (assumed
/// independent) to a basis of the ambient space.
pub fn complement<F: Field>(basis: &Matrix<F>) -> Matrix<F> {
    let d = basis.rows();
    let ident = Matrix::identity(basis.field(), d);
    let ech = basis.hstack(&ident).echelon();
    let extra: Vec<usize> = ech
        .pivots
        .iter()
        .filter(|&&p| p >= basis.cols())
        .map(|&p| p - basis.cols())
        .collect();
    ident.select_columns(&extra)
}

/// A projection `k^d -> k^q` whose kernel is the span of `basis`, together
/// with a section `k^q -> k^d` (columns are the chosen complement vectors).
pub fn quotient_maps<F: Field>(basis: &Matrix<F>) -> (Matrix<F>, Matrix<F>) {
    let comp = complement(basis);
    let full = basis.hstack(&comp);
    let inv = full.inverse().expect("basis plus complement is invertible");
    let proj = inv.sub_matrix(basis.cols()..full.cols(), 0..full.rows());
    (proj, comp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn m(f: &PrimeField, rows: usize, cols: usize, d: &[u32]) -> Matrix<PrimeField> {
        Matrix::from_rows(f, rows, cols, d.to_vec())
    }

    #[test]
    fn nullspace_of_rank_one() {
        let f = PrimeField::new(5).unwrap();
        let a = m(&f, 2, 3, &[1, 2, 3, 2, 4, 1]);
        let n = a.nullspace();
        assert_eq!(n.cols(), 3 - a.rank());
        assert!(a.mul(&n).is_zero());
    }

    #[test]
    fn inverse_round_trip() {
        let f = PrimeField::new(7).unwrap();
        let a = m(&f, 3, 3, &[1, 2, 0, 0, 1, 4, 5, 0, 1]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(&f, 3));
        let s = m(&f, 2, 2, &[1, 2, 2, 4]);
        assert!(s.inverse().is_none());
    }

    #[test]
    fn intersection_and_complement() {
        let f = PrimeField::new(3).unwrap();
        let a = m(&f, 3, 2, &[1, 0, 0, 1, 0, 0]);
        let b = m(&f, 3, 2, &[0, 0, 1, 0, 0, 1]);
        let i = intersect(&a, &b);
        assert_eq!(i.cols(), 1);
        assert!(contains(&a, &i) && contains(&b, &i));
        let c = complement(&a);
        assert_eq!(c.cols(), 1);
        assert_eq!(a.hstack(&c).rank(), 3);
        let (p, s) = quotient_maps(&a);
        assert!(p.mul(&a).is_zero());
        assert_eq!(p.mul(&s), Matrix::identity(&f, 1));
    }

    #[test]
    fn solve_inconsistent() {
        let f = PrimeField::new(2).unwrap();
        let a = m(&f, 2, 1, &[1, 1]);
        let b = m(&f, 2, 1, &[1, 0]);
        assert!(a.solve(&b).is_none());
        let b2 = m(&f, 2, 1, &[1, 1]);
        assert_eq!(a.solve(&b2).unwrap(), m(&f, 1, 1, &[1]));
    }
}
