use std::fmt;

use super::{FfError, PrimeField, Subspace};

/// Dense row-major matrix over GF(p).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Matrix {}x{} over GF({})",
            self.rows,
            self.cols,
            self.field.p()
        )?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Build from integer rows, reducing every entry mod p.
    pub fn from_i64_rows(field: PrimeField, rows: &[Vec<i64>]) -> Result<Self, FfError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(field, rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(FfError::Shape {
                    expected: cols,
                    found: row.len(),
                });
            }
            for (c, &x) in row.iter().enumerate() {
                m.data[r * cols + c] = field.reduce_i64(x);
            }
        }
        Ok(m)
    }

    /// Build from rows that are already reduced residues.
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u8>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "row length mismatch");
            data.extend(row.iter().map(|&x| (x as u32 % field.p()) as u8));
        }
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u8>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (r, &x) in col.iter().enumerate() {
                m.data[r * m.cols + c] = x;
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, x: u8) {
        self.data[r * self.cols + c] = x;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [u8] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u8> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let p = self.field.p();
        let n = other.cols;
        let mut out = Matrix::zeros(self.field, self.rows, n);
        let mut acc = vec![0u32; n];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|x| *x = 0);
            let mut pending = 0u32;
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k] as u32;
                if a == 0 {
                    continue;
                }
                for (slot, &b) in acc.iter_mut().zip(other.row(k)) {
                    *slot += a * b as u32;
                }
                pending += 1;
                // keep the accumulators well inside u32
                if pending == 60_000 {
                    acc.iter_mut().for_each(|x| *x %= p);
                    pending = 0;
                }
            }
            for (dst, &x) in out.row_mut(r).iter_mut().zip(&acc) {
                *dst = (x % p) as u8;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(
            self.cols,
            v.len(),
            "dimension mismatch in matrix-vector product"
        );
        (0..self.rows)
            .map(|r| self.field.dot(self.row(r), v))
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(
            self.rows,
            v.len(),
            "dimension mismatch in vector-matrix product"
        );
        let mut out = vec![0u8; self.cols];
        for (r, &c) in v.iter().enumerate() {
            self.field.axpy(&mut out, c, self.row(r));
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (x, &y) in out.data.iter_mut().zip(&other.data) {
            *x = self.field.add(*x, y);
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (x, &y) in out.data.iter_mut().zip(&other.data) {
            *x = self.field.sub(*x, y);
        }
        out
    }

    pub fn scaled(&self, c: u8) -> Matrix {
        let mut out = self.clone();
        self.field.scale(&mut out.data, c);
        out
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: u8, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.field.axpy(&mut self.data, c, &other.data);
    }

    /// `self * other - other * self`
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    /// Subtract `lambda` times the identity.
    pub fn shift(&self, lambda: u8) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut out = self.clone();
        for i in 0..self.rows {
            let x = out.get(i, i);
            out.set(i, i, self.field.sub(x, lambda));
        }
        out
    }

    /// Reduced row-echelon form, its rank, and the pivot columns.
    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for k in 0..m.cols {
                    m.data.swap(pr * m.cols + k, r * m.cols + k);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            f.scale(m.row_mut(r), inv);
            let pivot_row = m.row(r).to_vec();
            for i in 0..m.rows {
                if i != r {
                    let x = m.get(i, c);
                    if x != 0 {
                        f.axpy(m.row_mut(i), f.neg(x), &pivot_row);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rref(&self) -> (Matrix, usize) {
        let (m, piv) = self.rref_with_pivots();
        (m, piv.len())
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Right kernel `{x : self * x = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref_with_pivots();
        kernel_from_rref(&r, &pivots)
    }

    /// Row space as a canonical subspace of `GF(p)^cols`.
    pub fn row_space(&self) -> Subspace {
        Subspace::from_vectors(self.field, self.cols, self.row_vecs())
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for r in 0..n {
            aug.row_mut(r)[..n].copy_from_slice(self.row(r));
            aug.set(r, n + r, 1);
        }
        let (red, pivots) = aug.rref_with_pivots();
        if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
            return None;
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for r in 0..n {
            inv.row_mut(r).copy_from_slice(&red.row(r)[n..]);
        }
        Some(inv)
    }
}

/// Null space read off from a reduced row-echelon matrix.
pub(crate) fn kernel_from_rref(r: &Matrix, pivots: &[usize]) -> Subspace {
    let f = r.field();
    let n = r.cols();
    let mut is_pivot = vec![usize::MAX; n];
    for (row, &c) in pivots.iter().enumerate() {
        is_pivot[c] = row;
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|&c| is_pivot[c] == usize::MAX) {
        let mut v = vec![0u8; n];
        v[free] = 1;
        for (row, &c) in pivots.iter().enumerate() {
            v[c] = f.neg(r.get(row, free));
        }
        basis.push(v);
    }
    Subspace::from_vectors(f, n, basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = Matrix::identity(gf3(), 2);
        let (r, rank) = id.rref();
        assert_eq!(r, id);
        assert_eq!(rank, 2);
    }

    #[test]
    fn rref_dependent_rows() {
        // second row is twice the first mod 3
        let m = Matrix::from_i64_rows(gf3(), &[vec![1, 2], vec![2, 1]]).unwrap();
        let (r, rank) = m.rref();
        assert_eq!(rank, 1);
        assert_eq!(
            r,
            Matrix::from_i64_rows(gf3(), &[vec![1, 2], vec![0, 0]]).unwrap()
        );
    }

    #[test]
    fn rref_zero() {
        let z = Matrix::zeros(gf3(), 3, 3);
        assert_eq!(z.rref(), (z.clone(), 0));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(gf3(), 2).kernel().dim(), 0);
        assert_eq!(Matrix::zeros(gf3(), 1, 3).kernel().dim(), 3);
        let k = Matrix::from_i64_rows(gf3(), &[vec![1, 2]])
            .unwrap()
            .kernel();
        // brute force: x + 2y = 0 over GF(3)
        let solutions: Vec<(u8, u8)> = (0..3u8)
            .flat_map(|x| (0..3u8).map(move |y| (x, y)))
            .filter(|&(x, y)| (x as u32 + 2 * y as u32).is_multiple_of(3))
            .collect();
        assert_eq!(solutions, vec![(0, 0), (1, 1), (2, 2)]);
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[1, 1]));
    }

    #[test]
    fn inverse_roundtrip() {
        let f = PrimeField::new(5).unwrap();
        let m = Matrix::from_i64_rows(f, &[vec![1, 2, 0], vec![0, 1, 4], vec![3, 0, 2]]).unwrap();
        let inv = m.inverse().expect("invertible");
        assert_eq!(m.mul(&inv), Matrix::identity(f, 3));
        let sing = Matrix::from_i64_rows(f, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert!(sing.inverse().is_none());
    }
}
