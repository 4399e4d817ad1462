//! Finite-dimensional Lie algebras over GF(p) given by structure constants.
//!
//! A [`StructureTable`] is any bilinear bracket on an indexed basis. A
//! [`LieAlgebra`] is a table that has passed the antisymmetry and Jacobi
//! scans over every basis pair and triple.

mod radical;
mod subalgebra;

pub use radical::RADICAL_DIMENSION_CAP;
pub use subalgebra::{ClosureBuilder, Quotient, Subalgebra};

use serde::Serialize;
use thiserror::Error;

use crate::ffalg::{FfError, Matrix, PrimeField, Subspace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("bracket is not antisymmetric on basis pair ({0}, {1})")]
    NotAntisymmetric(usize, usize),
    #[error("Jacobi identity fails on basis triple ({}, {}, {})", .0.i, .0.j, .0.k)]
    NotJacobi(JacobiWitness),
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
    #[error("cannot parse element `{0}`")]
    Parse(String),
    #[error("subspace is not closed under the bracket")]
    NotClosed,
    #[error("subspace is not an ideal")]
    NotIdeal,
    #[error("dimension {found} exceeds the cap of {cap}")]
    DimensionCap { found: usize, cap: usize },
    #[error("enumeration would visit {0} points, over the cap")]
    EnumerationCap(u128),
    #[error("vector length {found} does not match algebra dimension {expected}")]
    Length { expected: usize, found: usize },
    #[error(transparent)]
    Field(#[from] FfError),
    #[error("module computation failed: {0}")]
    Module(String),
}

/// A basis triple on which the Jacobi sum is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobiWitness {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: Vec<u8>,
}

/// Bilinear bracket `[b_i, b_j] = Σ c_ij^k b_k` on a labelled basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTable {
    field: PrimeField,
    labels: Vec<String>,
    products: Vec<Vec<(usize, u8)>>,
}

impl StructureTable {
    pub fn zero(field: PrimeField, labels: Vec<String>) -> Self {
        let n = labels.len();
        StructureTable {
            field,
            labels,
            products: vec![Vec::new(); n * n],
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Set `[b_i, b_j]`, dropping zero coefficients.
    pub fn set_product(&mut self, i: usize, j: usize, terms: &[(usize, u8)]) {
        let n = self.dim();
        let mut dense: Vec<(usize, u8)> = Vec::new();
        for &(k, c) in terms {
            let c = (c as u32 % self.field.p()) as u8;
            match dense.iter_mut().find(|(idx, _)| *idx == k) {
                Some(slot) => slot.1 = self.field.add(slot.1, c),
                None => dense.push((k, c)),
            }
        }
        dense.retain(|&(_, c)| c != 0);
        dense.sort_unstable();
        self.products[i * n + j] = dense;
    }

    /// Set `[b_i, b_j]` from a dense vector.
    pub fn set_product_dense(&mut self, i: usize, j: usize, v: &[u8]) {
        let terms: Vec<(usize, u8)> = v
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k, c))
            .collect();
        self.set_product(i, j, &terms);
    }

    #[inline]
    pub fn product(&self, i: usize, j: usize) -> &[(usize, u8)] {
        &self.products[i * self.dim() + j]
    }

    pub fn bracket(&self, x: &[u8], y: &[u8]) -> Vec<u8> {
        let n = self.dim();
        let f = self.field;
        let p = f.p();
        let mut acc = vec![0u32; n];
        let ys: Vec<(usize, u8)> = y
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| (j, c))
            .collect();
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for &(j, yj) in &ys {
                let c = f.mul(xi, yj) as u32;
                for &(k, s) in self.product(i, j) {
                    acc[k] = (acc[k] + c * s as u32) % p;
                }
            }
        }
        acc.into_iter().map(|x| x as u8).collect()
    }

    fn bracket_basis_with(&self, i: usize, y: &[(usize, u8)]) -> Vec<u8> {
        let f = self.field;
        let mut out = vec![0u8; self.dim()];
        for &(j, c) in y {
            for &(k, s) in self.product(i, j) {
                out[k] = f.add(out[k], f.mul(c, s));
            }
        }
        out
    }

    pub fn antisymmetry_violation(&self) -> Option<(usize, usize)> {
        let n = self.dim();
        let f = self.field;
        for i in 0..n {
            if !self.product(i, i).is_empty() {
                return Some((i, i));
            }
            for j in i + 1..n {
                let a = self.product(i, j);
                let b = self.product(j, i);
                let ok = a.len() == b.len()
                    && a.iter()
                        .zip(b)
                        .all(|(x, y)| x.0 == y.0 && f.add(x.1, y.1) == 0);
                if !ok {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Jacobi sum `[b_i,[b_j,b_k]] + [b_j,[b_k,b_i]] + [b_k,[b_i,b_j]]`.
    pub fn jacobi_sum(&self, i: usize, j: usize, k: usize) -> Vec<u8> {
        let f = self.field;
        let mut total = vec![0u8; self.dim()];
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            let part = self.bracket_basis_with(a, self.product(b, c));
            for (t, x) in total.iter_mut().zip(part) {
                *t = f.add(*t, x);
            }
        }
        total
    }

    /// First basis triple `i < j < k` with a nonzero Jacobi sum.
    pub fn jacobi_violation(&self) -> Option<JacobiWitness> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let value = self.jacobi_sum(i, j, k);
                    if value.iter().any(|&x| x != 0) {
                        return Some(JacobiWitness { i, j, k, value });
                    }
                }
            }
        }
        None
    }
}

/// A structure table verified to define a Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    table: StructureTable,
}

impl LieAlgebra {
    /// Validate antisymmetry and the Jacobi identity on all basis triples.
    pub fn new(table: StructureTable) -> Result<Self, LieError> {
        if let Some((i, j)) = table.antisymmetry_violation() {
            return Err(LieError::NotAntisymmetric(i, j));
        }
        if let Some(w) = table.jacobi_violation() {
            return Err(LieError::NotJacobi(w));
        }
        Ok(LieAlgebra { table })
    }

    /// Abelian algebra of the given dimension with labels `a1..an`.
    pub fn abelian(field: PrimeField, dim: usize) -> Self {
        let labels = (1..=dim).map(|i| format!("a{i}")).collect();
        LieAlgebra {
            table: StructureTable::zero(field, labels),
        }
    }

    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    pub fn field(&self) -> PrimeField {
        self.table.field
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.table.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.table.labels[i]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u8> {
        let mut v = vec![0u8; self.dim()];
        v[i] = 1;
        v
    }

    pub fn zero_vector(&self) -> Vec<u8> {
        vec![0u8; self.dim()]
    }

    pub fn bracket(&self, x: &[u8], y: &[u8]) -> Vec<u8> {
        self.table.bracket(x, y)
    }

    /// Matrix of `ad x`; column `j` holds `[x, b_j]`.
    pub fn ad_matrix(&self, x: &[u8]) -> Matrix {
        let n = self.dim();
        let f = self.field();
        let mut m = Matrix::zeros(f, n, n);
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for j in 0..n {
                for &(k, c) in self.table.product(i, j) {
                    let cur = m.get(k, j);
                    m.set(k, j, f.add(cur, f.mul(xi, c)));
                }
            }
        }
        m
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        self.ad_matrix(&self.basis_vector(i))
    }

    pub fn index_of_label(&self, label: &str) -> Result<usize, LieError> {
        self.labels()
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| LieError::UnknownLabel(label.to_string()))
    }

    /// Coordinate vector of `Σ c_i b_{label_i}`.
    pub fn element(&self, terms: &[(i64, &str)]) -> Result<Vec<u8>, LieError> {
        let f = self.field();
        let mut v = self.zero_vector();
        for &(c, label) in terms {
            let i = self.index_of_label(label)?;
            v[i] = f.add(v[i], f.reduce_i64(c));
        }
        Ok(v)
    }

    /// Parse sums such as `e1000+e0100-2f1232`.
    pub fn parse_element(&self, text: &str) -> Result<Vec<u8>, LieError> {
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() || text == "0" {
            return Ok(self.zero_vector());
        }
        let mut terms: Vec<(i64, String)> = Vec::new();
        let mut sign = 1i64;
        let mut current = String::new();
        let push =
            |terms: &mut Vec<(i64, String)>, sign: i64, token: &str| -> Result<(), LieError> {
                if token.is_empty() {
                    return Err(LieError::Parse(text.clone()));
                }
                let digits: String = token.chars().take_while(|c| c.is_ascii_digit()).collect();
                let rest = token[digits.len()..].trim_start_matches('*');
                let coeff: i64 = if digits.is_empty() || rest.is_empty() {
                    1
                } else {
                    digits
                        .parse()
                        .map_err(|_| LieError::Parse(token.to_string()))?
                };
                let label = if rest.is_empty() { token } else { rest };
                terms.push((sign * coeff, label.to_string()));
                Ok(())
            };
        for (pos, ch) in text.char_indices() {
            if (ch == '+' || ch == '-') && pos > 0 && !current.is_empty() {
                push(&mut terms, sign, &current)?;
                current.clear();
                sign = if ch == '-' { -1 } else { 1 };
            } else if (ch == '+' || ch == '-') && current.is_empty() {
                sign = if ch == '-' { -sign } else { sign };
            } else {
                current.push(ch);
            }
        }
        push(&mut terms, sign, &current)?;
        let refs: Vec<(i64, &str)> = terms.iter().map(|(c, l)| (*c, l.as_str())).collect();
        self.element(&refs)
    }

    /// Human-readable sum, coefficients shown as signed residues.
    pub fn format_element(&self, v: &[u8]) -> String {
        let f = self.field();
        let mut out = String::new();
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let s = f.signed(c);
            let mag = s.abs();
            if out.is_empty() {
                if s < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if s < 0 { " - " } else { " + " });
            }
            if mag != 1 {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(self.label(i));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Indices of a subset of the basis generating the whole algebra.
    pub fn generating_subset(&self) -> Vec<usize> {
        let mut builder = ClosureBuilder::new(self);
        let mut gens = Vec::new();
        for i in 0..self.dim() {
            if builder.space().is_full() {
                break;
            }
            let b = self.basis_vector(i);
            if !builder.space().contains(&b) {
                builder.add(&b);
                gens.push(i);
            }
        }
        gens
    }

    /// Check that a linear map (columns are images of the basis) preserves brackets.
    /// Returns the first failing basis pair.
    pub fn verify_homomorphism(
        &self,
        target: &LieAlgebra,
        map: &Matrix,
    ) -> Result<(), (usize, usize)> {
        assert_eq!(map.cols(), self.dim());
        assert_eq!(map.rows(), target.dim());
        let images: Vec<Vec<u8>> = (0..self.dim()).map(|j| map.column(j)).collect();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                let lhs = map.mul_vec(
                    &self.bracket(&images_basis(self.dim(), i), &images_basis(self.dim(), j)),
                );
                let rhs = target.bracket(&images[i], &images[j]);
                if lhs != rhs {
                    return Err((i, j));
                }
            }
        }
        Ok(())
    }

    /// Span of `[a, b]` for `a` in `left`, `b` in `right`.
    pub fn bracket_spaces(&self, left: &Subspace, right: &Subspace) -> Subspace {
        let mut s = Subspace::zero(self.field(), self.dim());
        for a in left.basis() {
            for b in right.basis() {
                s.insert(&self.bracket(a, b));
            }
        }
        s
    }

    /// `{x : [x, s] = 0 for all s in space}`.
    pub fn centralizer_of_space(&self, space: &Subspace) -> Subspace {
        let n = self.dim();
        let mut rows = Subspace::zero(self.field(), n);
        for s in space.basis() {
            // [x, s] = -ad(s) x
            let ad = self.ad_matrix(s);
            for r in 0..n {
                rows.insert(ad.row(r));
            }
        }
        rows.annihilator()
    }
}

fn images_basis(n: usize, i: usize) -> Vec<u8> {
    let mut v = vec![0u8; n];
    v[i] = 1;
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn sl2(p: u32) -> LieAlgebra {
        let f = PrimeField::new(p).unwrap();
        let mut t = StructureTable::zero(f, vec!["e".into(), "f".into(), "h".into()]);
        t.set_product(0, 1, &[(2, 1)]);
        t.set_product(1, 0, &[(2, f.neg(1))]);
        t.set_product(2, 0, &[(0, 2 % p as u8)]);
        t.set_product(0, 2, &[(0, f.neg(2 % p as u8))]);
        t.set_product(2, 1, &[(1, f.neg(2 % p as u8))]);
        t.set_product(1, 2, &[(1, 2 % p as u8)]);
        LieAlgebra::new(t).unwrap()
    }

    #[test]
    fn bracket_with_self_vanishes() {
        let g = sl2(3);
        let x = vec![1, 2, 1];
        assert_eq!(g.bracket(&x, &x), vec![0, 0, 0]);
    }

    #[test]
    fn rejects_non_jacobi_tables() {
        let f = PrimeField::new(5).unwrap();
        // [a,b] = c, [b,c] = a, [a,c] = b with a wrong sign breaks Jacobi over GF(5)
        let mut t = StructureTable::zero(f, vec!["a".into(), "b".into(), "c".into()]);
        t.set_product(0, 1, &[(0, 1)]);
        t.set_product(1, 0, &[(0, 4)]);
        t.set_product(1, 2, &[(1, 1)]);
        t.set_product(2, 1, &[(1, 4)]);
        assert!(matches!(LieAlgebra::new(t), Err(LieError::NotJacobi(_))));
        let mut bad = StructureTable::zero(f, vec!["a".into(), "b".into()]);
        bad.set_product(0, 1, &[(0, 1)]);
        assert_eq!(LieAlgebra::new(bad), Err(LieError::NotAntisymmetric(0, 1)));
    }

    #[test]
    fn parse_and_format_elements() {
        let g = sl2(3);
        assert_eq!(g.parse_element("e+h").unwrap(), vec![1, 0, 1]);
        assert_eq!(g.parse_element("e - f").unwrap(), vec![1, 2, 0]);
        assert_eq!(g.parse_element("-2h").unwrap(), vec![0, 0, 1]);
        assert_eq!(g.parse_element("").unwrap(), vec![0, 0, 0]);
        assert!(g.parse_element("e+q").is_err());
        assert_eq!(g.format_element(&[1, 2, 0]), "e - f");
        assert_eq!(g.format_element(&[0, 0, 0]), "0");
    }

    #[test]
    fn generating_subset_of_sl2() {
        let g = sl2(3);
        assert_eq!(g.generating_subset(), vec![0, 1]);
        let a = LieAlgebra::abelian(PrimeField::new(3).unwrap(), 3);
        assert_eq!(a.generating_subset(), vec![0, 1, 2]);
    }

    #[test]
    fn identity_is_a_homomorphism() {
        let g = sl2(5);
        let id = Matrix::identity(g.field(), 3);
        assert_eq!(g.verify_homomorphism(&g, &id), Ok(()));
        let swap = Matrix::from_i64_rows(g.field(), &[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]])
            .unwrap();
        assert!(g.verify_homomorphism(&g, &swap).is_err());
    }
}
