use super::{FfError, Matrix, PrimeField};

/// A subspace of `GF(p)^n` stored by its reduced row-echelon basis.
///
/// The representation is canonical: pivots strictly increase, each pivot
/// entry is 1 and every other entry in a pivot column is 0. Two subspaces are
/// equal exactly when their stored bases are identical, so `==` is a
/// subspace equality test.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        let mut s = Self::zero(field, ambient);
        for i in 0..ambient {
            let mut v = vec![0; ambient];
            v[i] = 1;
            s.rows.push(v);
            s.pivots.push(i);
        }
        s
    }

    /// Span of the given vectors.
    pub fn from_vectors<I>(field: PrimeField, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator,
        I::Item: AsRef<[u8]>,
    {
        let mut s = Self::zero(field, ambient);
        for v in vectors {
            s.insert(v.as_ref());
        }
        s
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(
        field: PrimeField,
        ambient: usize,
        indices: impl IntoIterator<Item = usize>,
    ) -> Self {
        Self::from_vectors(
            field,
            ambient,
            indices.into_iter().map(|i| {
                let mut v = vec![0u8; ambient];
                v[i] = 1;
                v
            }),
        )
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as the rows of a matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.ambient, &self.rows)
    }

    /// Remainder of `v` after eliminating the pivot coordinates.
    pub fn reduce(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(
            v.len(),
            self.ambient,
            "vector length does not match ambient dimension"
        );
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        w
    }

    fn reduce_in_place(&self, w: &mut [u8]) {
        let f = self.field;
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let x = w[c];
            if x != 0 {
                f.axpy(w, f.neg(x), row);
            }
        }
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    /// Add a vector to the span, keeping the canonical form.
    /// Returns `true` when the dimension grew.
    pub fn insert(&mut self, v: &[u8]) -> bool {
        assert_eq!(
            v.len(),
            self.ambient,
            "vector length does not match ambient dimension"
        );
        let f = self.field;
        let mut w: Vec<u8> = v.iter().map(|&x| (x as u32 % f.p()) as u8).collect();
        self.reduce_in_place(&mut w);
        let Some(lead) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(w[lead]).expect("nonzero leading entry");
        f.scale(&mut w, inv);
        for row in self.rows.iter_mut() {
            let x = row[lead];
            if x != 0 {
                f.axpy(row, f.neg(x), &w);
            }
        }
        let at = self.pivots.partition_point(|&c| c < lead);
        self.pivots.insert(at, lead);
        self.rows.insert(at, w);
        true
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[u8]) -> Option<Vec<u8>> {
        let coords: Vec<u8> = self.pivots.iter().map(|&c| v[c]).collect();
        let mut w = vec![0u8; self.ambient];
        for (row, &c) in self.rows.iter().zip(&coords) {
            self.field.axpy(&mut w, c, row);
        }
        (w == v).then_some(coords)
    }

    /// Vector with the given coordinates in the canonical basis.
    pub fn combination(&self, coords: &[u8]) -> Vec<u8> {
        assert_eq!(coords.len(), self.dim());
        let mut w = vec![0u8; self.ambient];
        for (row, &c) in self.rows.iter().zip(coords) {
            self.field.axpy(&mut w, c, row);
        }
        w
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), FfError> {
        if self.ambient != other.ambient || self.field != other.field {
            return Err(FfError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, FfError> {
        self.check_ambient(other)?;
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v);
        }
        Ok(s)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, FfError> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field, self.ambient));
        }
        // c * A lies in B  <=>  c * (A mod B) = 0
        let remainders: Vec<Vec<u8>> = self.rows.iter().map(|v| other.reduce(v)).collect();
        let rem = Matrix::from_rows(self.field, self.ambient, &remainders);
        let coeffs = rem.transpose().kernel();
        Ok(Subspace::from_vectors(
            self.field,
            self.ambient,
            coeffs.basis().iter().map(|c| self.combination(c)),
        ))
    }

    /// True when `self + other` is direct.
    pub fn is_independent_of(&self, other: &Subspace) -> Result<bool, FfError> {
        Ok(self.sum(other)?.dim() == self.dim() + other.dim())
    }

    /// Indices of the standard basis vectors complementing this subspace.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Coordinates of the image of `v` in the quotient by this subspace,
    /// relative to [`Subspace::complement_indices`].
    pub fn quotient_coordinates(&self, v: &[u8]) -> Vec<u8> {
        let r = self.reduce(v);
        self.complement_indices()
            .into_iter()
            .map(|c| r[c])
            .collect()
    }

    /// `{w : w . v = 0 for all v in self}`.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.field, self.ambient);
        }
        self.basis_matrix().kernel()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    fn unit(n: usize, i: usize) -> Vec<u8> {
        let mut v = vec![0; n];
        v[i] = 1;
        v
    }

    #[test]
    fn intersect_examples() {
        let f = gf3();
        let a = Subspace::from_vectors(f, 3, [vec![1, 0, 0], vec![0, 1, 1]]);
        assert_eq!(a.intersect(&a).unwrap(), a);
        let e1 = Subspace::from_vectors(f, 2, [unit(2, 0)]);
        let e2 = Subspace::from_vectors(f, 2, [unit(2, 1)]);
        assert!(e1.intersect(&e2).unwrap().is_zero());
        let b = Subspace::from_vectors(f, 3, [vec![0, 1, 0], vec![0, 0, 1]]);
        let i = a.intersect(&b).unwrap();
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[0, 1, 1]));
    }

    #[test]
    fn sum_examples() {
        let f = gf3();
        let z = Subspace::zero(f, 3);
        let b = Subspace::from_vectors(f, 3, [vec![1, 2, 0]]);
        assert_eq!(z.sum(&b).unwrap(), b);
        assert_eq!(b.sum(&b).unwrap(), b);
        assert!(z.sum(&Subspace::zero(f, 4)).is_err());
    }

    #[test]
    fn complementary_coordinate_blocks() {
        let f = gf3();
        let a = Subspace::coordinate(f, 26, 0..18);
        let b = Subspace::coordinate(f, 26, 18..26);
        assert!(a.sum(&b).unwrap().is_full());
        assert!(a.intersect(&b).unwrap().is_zero());
        assert!(a.is_independent_of(&b).unwrap());
    }

    #[test]
    fn coordinates_roundtrip() {
        let f = gf3();
        let a = Subspace::from_vectors(f, 4, [vec![1, 1, 0, 2], vec![0, 0, 1, 1]]);
        let v = a.combination(&[2, 1]);
        assert_eq!(a.coordinates(&v), Some(vec![2, 1]));
        assert_eq!(a.coordinates(&[0, 1, 0, 0]), None);
    }
}
