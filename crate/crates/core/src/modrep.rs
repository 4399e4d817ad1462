//! Matrix representations over GF(p): spinning, a Norton-style MeatAxe,
//! hom spaces, commutants and invariant bilinear forms.
//!
//! Vectors are columns and a generator `g` acts by `v ↦ g v`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::ffalg::{Matrix, PrimeField, Subspace};
use crate::liecore::{LieAlgebra, Subalgebra};

/// Random elements tried before the deterministic fallback.
pub const NORTON_ATTEMPTS: usize = 200;

// Largest kernel (as p^nullity) whose projective points we are willing to spin.
const KERNEL_POINT_LIMIT: u128 = 729;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModRepError {
    #[error("representation of degree 0")]
    ZeroDegree,
    #[error("generator {index} is {rows}x{cols}, expected square of size {degree}")]
    Shape {
        index: usize,
        rows: usize,
        cols: usize,
        degree: usize,
    },
    #[error("subspace is not invariant under the action")]
    NotInvariant,
    #[error("representations have different numbers of generators ({0} vs {1})")]
    GeneratorCount(usize, usize),
    #[error("no decisive algebra element found after {0} attempts")]
    Undecided(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRepresentation {
    field: PrimeField,
    degree: usize,
    generators: Vec<Matrix>,
}

/// Outcome of [`MatrixRepresentation::is_irreducible`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    /// Certified by an element `θ` whose kernel vectors, and those of `θ^T`
    /// on the dual side, all spin to the whole space.
    Irreducible {
        theta_nullity: usize,
        attempts: usize,
    },
    /// A proper nonzero invariant subspace.
    Reducible { witness: Subspace },
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbsoluteIrreducibility {
    pub irreducible: bool,
    pub commutant_dim: usize,
    pub absolutely_irreducible: bool,
}

enum NortonOutcome {
    Proper(Subspace),
    Certified,
    Inconclusive,
}

impl MatrixRepresentation {
    pub fn new(
        field: PrimeField,
        degree: usize,
        generators: Vec<Matrix>,
    ) -> Result<Self, ModRepError> {
        if degree == 0 {
            return Err(ModRepError::ZeroDegree);
        }
        for (index, g) in generators.iter().enumerate() {
            if g.rows() != degree || g.cols() != degree {
                return Err(ModRepError::Shape {
                    index,
                    rows: g.rows(),
                    cols: g.cols(),
                    degree,
                });
            }
        }
        Ok(MatrixRepresentation {
            field,
            degree,
            generators,
        })
    }

    /// `ad b_i` for every basis element.
    pub fn adjoint(alg: &LieAlgebra) -> Self {
        let gens = (0..alg.dim()).map(|i| alg.ad_basis(i)).collect();
        MatrixRepresentation {
            field: alg.field(),
            degree: alg.dim(),
            generators: gens,
        }
    }

    /// `ad g` for a generating subset of the basis. Same submodules and
    /// commutant as [`MatrixRepresentation::adjoint`], far fewer matrices.
    pub fn adjoint_on_generators(alg: &LieAlgebra) -> Self {
        let gens = alg
            .generating_subset()
            .into_iter()
            .map(|i| alg.ad_basis(i))
            .collect();
        MatrixRepresentation {
            field: alg.field(),
            degree: alg.dim(),
            generators: gens,
        }
    }

    /// Adjoint action of a subalgebra on itself, in its canonical basis.
    pub fn of_subalgebra(s: &Subalgebra) -> Self {
        Self::adjoint(&s.to_algebra())
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    /// Contragredient module, `g ↦ -g^T`.
    pub fn dual(&self) -> Self {
        let f = self.field;
        MatrixRepresentation {
            field: f,
            degree: self.degree,
            generators: self
                .generators
                .iter()
                .map(|g| g.transpose().scaled(f.neg(1)))
                .collect(),
        }
    }

    fn transposed(&self) -> Self {
        MatrixRepresentation {
            field: self.field,
            degree: self.degree,
            generators: self.generators.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Smallest invariant subspace containing `v`.
    pub fn spin(&self, v: &[u8]) -> Subspace {
        let mut space = Subspace::zero(self.field, self.degree);
        let mut queue = Vec::new();
        if space.insert(v) {
            queue.push(v.to_vec());
        }
        while let Some(x) = queue.pop() {
            if space.is_full() {
                break;
            }
            for g in &self.generators {
                let y = g.mul_vec(&x);
                if space.insert(&y) {
                    queue.push(y);
                }
            }
        }
        space
    }

    pub fn is_invariant(&self, s: &Subspace) -> bool {
        s.basis()
            .iter()
            .all(|v| self.generators.iter().all(|g| s.contains(&g.mul_vec(v))))
    }

    /// Action on an invariant subspace, in its canonical basis.
    pub fn restrict(&self, s: &Subspace) -> Result<Self, ModRepError> {
        let d = s.dim();
        let mut gens = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let mut cols = Vec::with_capacity(d);
            for v in s.basis() {
                cols.push(
                    s.coordinates(&g.mul_vec(v))
                        .ok_or(ModRepError::NotInvariant)?,
                );
            }
            gens.push(Matrix::from_columns(self.field, d, &cols));
        }
        MatrixRepresentation::new(self.field, d, gens)
    }

    fn kernel_points_limit_ok(&self, nullity: usize) -> bool {
        (self.field.p() as u128).pow(nullity as u32) <= KERNEL_POINT_LIMIT
    }

    fn norton(&self, theta: &Matrix, transposed: &Self) -> NortonOutcome {
        let k = theta.kernel();
        if k.is_zero() || !self.kernel_points_limit_ok(k.dim()) {
            return NortonOutcome::Inconclusive;
        }
        let kt = theta.transpose().kernel();
        for c in self.field.projective_points(k.dim()) {
            let s = self.spin(&k.combination(&c));
            if !s.is_full() {
                return NortonOutcome::Proper(s);
            }
        }
        for c in self.field.projective_points(kt.dim()) {
            let s = transposed.spin(&kt.combination(&c));
            if !s.is_full() {
                return NortonOutcome::Proper(s.annihilator());
            }
        }
        NortonOutcome::Certified
    }

    fn random_element(&self, rng: &mut ChaCha8Rng) -> Matrix {
        let f = self.field;
        let p = f.p() as u8;
        let mut theta = Matrix::zeros(f, self.degree, self.degree);
        let words = rng.gen_range(1..=3);
        for _ in 0..words {
            let len = rng.gen_range(1..=3);
            let mut w = self.generators[rng.gen_range(0..self.generators.len())].clone();
            for _ in 1..len {
                w = w.mul(&self.generators[rng.gen_range(0..self.generators.len())]);
            }
            theta.add_scaled(rng.gen_range(1..p), &w);
        }
        theta.shift(rng.gen_range(0..p))
    }

    /// Decide irreducibility with a certificate or a witness submodule.
    pub fn is_irreducible(&self, seed: u64) -> Result<Irreducibility, ModRepError> {
        if self.degree == 1 {
            return Ok(Irreducibility::Irreducible {
                theta_nullity: 1,
                attempts: 0,
            });
        }
        if self.generators.iter().all(Matrix::is_zero) {
            // trivial action: every line is a submodule
            let mut v = vec![0u8; self.degree];
            v[0] = 1;
            return Ok(Irreducibility::Reducible {
                witness: Subspace::from_vectors(self.field, self.degree, [v]),
            });
        }
        let transposed = self.transposed();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for attempt in 1..=NORTON_ATTEMPTS {
            let theta = self.random_element(&mut rng);
            match self.norton(&theta, &transposed) {
                NortonOutcome::Proper(witness) => return Ok(Irreducibility::Reducible { witness }),
                NortonOutcome::Certified => {
                    return Ok(Irreducibility::Irreducible {
                        theta_nullity: theta.kernel().dim(),
                        attempts: attempt,
                    })
                }
                NortonOutcome::Inconclusive => {}
            }
        }
        // deterministic fallback: shifted generators g - λ
        for g in &self.generators {
            for lambda in 0..self.field.p() as u8 {
                let theta = g.shift(self.field.neg(lambda));
                match self.norton(&theta, &transposed) {
                    NortonOutcome::Proper(witness) => {
                        return Ok(Irreducibility::Reducible { witness })
                    }
                    NortonOutcome::Certified => {
                        return Ok(Irreducibility::Irreducible {
                            theta_nullity: theta.kernel().dim(),
                            attempts: NORTON_ATTEMPTS,
                        })
                    }
                    NortonOutcome::Inconclusive => {}
                }
            }
        }
        Err(ModRepError::Undecided(NORTON_ATTEMPTS))
    }

    /// Basis of `Hom(self, other)`: matrices `φ` with `φ g_i = h_i φ`.
    pub fn hom_space(&self, other: &Self) -> Result<Vec<Matrix>, ModRepError> {
        if self.generators.len() != other.generators.len() {
            return Err(ModRepError::GeneratorCount(
                self.generators.len(),
                other.generators.len(),
            ));
        }
        let f = self.field;
        let n = self.degree;
        let m = other.degree;
        // Cyclic decomposition: b_k = W_k v_{s(k)}; then φ(b_k) = W'_k φ(v_{s(k)}).
        let mut basis: Vec<Vec<u8>> = Vec::with_capacity(n);
        let mut words: Vec<Matrix> = Vec::with_capacity(n);
        let mut source: Vec<usize> = Vec::with_capacity(n);
        // (parent k, generator g) for vectors found by spinning
        let mut origin: Vec<Option<(usize, usize)>> = Vec::with_capacity(n);
        let mut span = Subspace::zero(f, n);
        let mut sources = 0;
        for start in 0..n {
            let mut e = vec![0u8; n];
            e[start] = 1;
            if !span.insert(&e) {
                continue;
            }
            let s = sources;
            sources += 1;
            let first = basis.len();
            basis.push(e);
            words.push(Matrix::identity(f, m));
            source.push(s);
            origin.push(None);
            let mut k = first;
            while k < basis.len() {
                for (gi, g) in self.generators.iter().enumerate() {
                    let v = g.mul_vec(&basis[k]);
                    if span.insert(&v) {
                        basis.push(v);
                        words.push(other.generators[gi].mul(&words[k]));
                        source.push(s);
                        origin.push(Some((k, gi)));
                    }
                }
                k += 1;
            }
        }
        let b = Matrix::from_columns(f, n, &basis);
        let b_inv = b.inverse().expect("spun vectors form a basis");
        let unknowns = sources * m;
        let mut rows = Subspace::zero(f, unknowns);
        let children: std::collections::HashSet<(usize, usize)> =
            origin.iter().flatten().copied().collect();
        'outer: for (gi, g) in self.generators.iter().enumerate() {
            for k in 0..n {
                if children.contains(&(k, gi)) {
                    continue;
                }
                let c = b_inv.mul_vec(&g.mul_vec(&basis[k]));
                // h W_k u_{s(k)} - Σ c_l W_l u_{s(l)} = 0
                let mut block = vec![vec![0u8; unknowns]; m];
                let lhs = other.generators[gi].mul(&words[k]);
                let off = source[k] * m;
                for (r, row) in block.iter_mut().enumerate() {
                    row[off..off + m].copy_from_slice(lhs.row(r));
                }
                for (l, &cl) in c.iter().enumerate() {
                    if cl == 0 {
                        continue;
                    }
                    let off = source[l] * m;
                    let neg = f.neg(cl);
                    for (r, row) in block.iter_mut().enumerate() {
                        f.axpy(&mut row[off..off + m], neg, words[l].row(r));
                    }
                }
                for row in &block {
                    rows.insert(row);
                }
                if rows.is_full() {
                    break 'outer;
                }
            }
        }
        let solutions = rows.annihilator();
        let mut out = Vec::with_capacity(solutions.dim());
        for u in solutions.basis() {
            let cols: Vec<Vec<u8>> = (0..n)
                .map(|k| words[k].mul_vec(&u[source[k] * m..(source[k] + 1) * m]))
                .collect();
            out.push(Matrix::from_columns(f, m, &cols).mul(&b_inv));
        }
        Ok(out)
    }

    /// Dimension of `{X : X g_i = g_i X}`.
    pub fn commutant_dimension(&self) -> usize {
        self.hom_space(self).expect("same generator count").len()
    }

    pub fn is_absolutely_irreducible(
        &self,
        seed: u64,
    ) -> Result<AbsoluteIrreducibility, ModRepError> {
        let irreducible = self.is_irreducible(seed)?.is_irreducible();
        let commutant_dim = self.commutant_dimension();
        Ok(AbsoluteIrreducibility {
            irreducible,
            commutant_dim,
            absolutely_irreducible: irreducible && commutant_dim == 1,
        })
    }

    /// A minimal nonzero submodule. Kernel vectors of the generators are
    /// spun first so that small summands are preferred.
    pub fn socle_minimal_submodule(&self, seed: u64) -> Result<Subspace, ModRepError> {
        let f = self.field;
        let mut current = self.clone();
        let mut embed: Vec<Vec<u8>> = Subspace::full(f, self.degree).basis().to_vec();
        loop {
            if current.degree == 1 {
                break;
            }
            let mut best: Option<Subspace> = None;
            for g in &current.generators {
                let k = g.kernel();
                if k.is_zero() || !current.kernel_points_limit_ok(k.dim()) {
                    continue;
                }
                for c in f.projective_points(k.dim()) {
                    let s = current.spin(&k.combination(&c));
                    if !s.is_full() && best.as_ref().is_none_or(|b| s.dim() < b.dim()) {
                        best = Some(s);
                    }
                }
            }
            let sub = match best {
                Some(s) => s,
                None => match current.is_irreducible(seed)? {
                    Irreducibility::Irreducible { .. } => break,
                    Irreducibility::Reducible { witness } => witness,
                },
            };
            embed = sub
                .basis()
                .iter()
                .map(|c| {
                    let mut v = vec![0u8; self.degree];
                    for (row, &ck) in embed.iter().zip(c) {
                        f.axpy(&mut v, ck, row);
                    }
                    v
                })
                .collect();
            current = current.restrict(&sub)?;
        }
        Ok(Subspace::from_vectors(f, self.degree, embed))
    }
}

/// A bilinear form `B(x, y) = x^T G y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Matrix,
}

impl BilinearForm {
    pub fn new(gram: Matrix) -> Self {
        assert_eq!(gram.rows(), gram.cols(), "Gram matrix must be square");
        BilinearForm { gram }
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn eval(&self, x: &[u8], y: &[u8]) -> u8 {
        self.gram.field().dot(x, &self.gram.mul_vec(y))
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram == self.gram.transpose()
    }

    pub fn rank(&self) -> usize {
        self.gram.rank()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.rank() == self.gram.rows()
    }

    /// Gram matrix pulled back to the canonical basis of `s`.
    pub fn restrict(&self, s: &Subspace) -> BilinearForm {
        let f = self.gram.field();
        let d = s.dim();
        let mut g = Matrix::zeros(f, d, d);
        let images: Vec<Vec<u8>> = s.basis().iter().map(|v| self.gram.mul_vec(v)).collect();
        for (i, x) in s.basis().iter().enumerate() {
            for (j, gy) in images.iter().enumerate() {
                g.set(i, j, f.dot(x, gy));
            }
        }
        BilinearForm { gram: g }
    }

    pub fn is_totally_isotropic(&self, s: &Subspace) -> bool {
        self.restrict(s).gram.is_zero()
    }

    /// First basis triple with `B([b_i,b_j],b_k) != B(b_i,[b_j,b_k])`.
    pub fn invariance_violation(&self, alg: &LieAlgebra) -> Option<(usize, usize, usize)> {
        let n = alg.dim();
        let ads: Vec<Matrix> = (0..n).map(|j| alg.ad_basis(j)).collect();
        // B([b_i,b_j],b_k) = -(ad_j b_i)^T G b_k ; B(b_i,[b_j,b_k]) = b_i^T G ad_j b_k
        let f = alg.field();
        for (j, ad) in ads.iter().enumerate() {
            let left = ad.transpose().mul(&self.gram).scaled(f.neg(1));
            let right = self.gram.mul(ad);
            if left != right {
                for i in 0..n {
                    for k in 0..n {
                        if left.get(i, k) != right.get(i, k) {
                            return Some((i, j, k));
                        }
                    }
                }
            }
        }
        None
    }
}

/// Basis of the space of invariant symmetric forms, in canonical order.
pub fn invariant_symmetric_forms(alg: &LieAlgebra) -> Vec<BilinearForm> {
    let f = alg.field();
    let n = alg.dim();
    let rep = MatrixRepresentation::adjoint_on_generators(alg);
    let homs = rep.hom_space(&rep.dual()).expect("same generator count");
    // keep combinations with Σ c_i (Φ_i - Φ_i^T) = 0
    let cols: Vec<Vec<u8>> = homs
        .iter()
        .map(|h| {
            let d = h.sub(&h.transpose());
            (0..n).flat_map(|r| d.row(r).to_vec()).collect()
        })
        .collect();
    let coeffs = if homs.is_empty() {
        Subspace::zero(f, 0)
    } else {
        Matrix::from_columns(f, n * n, &cols).kernel()
    };
    let mut space = Subspace::zero(f, n * n);
    for c in coeffs.basis() {
        let mut v = vec![0u8; n * n];
        for (h, &ci) in homs.iter().zip(c) {
            for r in 0..n {
                f.axpy(&mut v[r * n..(r + 1) * n], ci, h.row(r));
            }
        }
        space.insert(&v);
    }
    space
        .basis()
        .iter()
        .map(|v| {
            let rows: Vec<Vec<u8>> = v.chunks(n).map(<[u8]>::to_vec).collect();
            BilinearForm::new(Matrix::from_rows(f, n, &rows))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecore::StructureTable;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn sl2(p: u32) -> LieAlgebra {
        let f = gf(p);
        let two = f.reduce_i64(2);
        let mut t = StructureTable::zero(f, vec!["e".into(), "h".into(), "f".into()]);
        t.set_product(0, 2, &[(1, 1)]);
        t.set_product(2, 0, &[(1, f.neg(1))]);
        t.set_product(1, 0, &[(0, two)]);
        t.set_product(0, 1, &[(0, f.neg(two))]);
        t.set_product(1, 2, &[(2, f.neg(two))]);
        t.set_product(2, 1, &[(2, two)]);
        LieAlgebra::new(t).unwrap()
    }

    fn rotation() -> MatrixRepresentation {
        // x^2 + 1 is irreducible over GF(3)
        let f = gf(3);
        let r = Matrix::from_i64_rows(f, &[vec![0, -1], vec![1, 0]]).unwrap();
        MatrixRepresentation::new(f, 2, vec![r]).unwrap()
    }

    #[test]
    fn adjoint_examples() {
        let f = gf(3);
        let one = LieAlgebra::abelian(f, 1);
        let rep = MatrixRepresentation::adjoint(&one);
        assert_eq!(rep.generators().len(), 1);
        assert!(rep.generators()[0].is_zero());
        let g = sl2(3);
        let adh = MatrixRepresentation::adjoint(&g).generators()[1].clone();
        let expect =
            Matrix::from_i64_rows(f, &[vec![2, 0, 0], vec![0, 0, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(adh, expect);
    }

    #[test]
    fn spin_examples() {
        let g = sl2(5);
        let rep = MatrixRepresentation::adjoint(&g);
        assert!(rep.spin(&[0, 0, 0]).is_zero());
        assert!(rep.spin(&[1, 0, 0]).is_full());
    }

    #[test]
    fn irreducibility_examples() {
        let g = sl2(5);
        let rep = MatrixRepresentation::adjoint(&g);
        assert!(rep.is_irreducible(1).unwrap().is_irreducible());
        let a = LieAlgebra::abelian(gf(3), 2);
        match MatrixRepresentation::adjoint(&a).is_irreducible(1).unwrap() {
            Irreducibility::Reducible { witness } => assert_eq!(witness.dim(), 1),
            other => panic!("expected reducible, got {other:?}"),
        }
    }

    #[test]
    fn rotation_is_not_absolutely_irreducible() {
        let v = rotation().is_absolutely_irreducible(7).unwrap();
        assert!(v.irreducible);
        assert_eq!(v.commutant_dim, 2);
        assert!(!v.absolutely_irreducible);
        let s = MatrixRepresentation::adjoint(&sl2(5))
            .is_absolutely_irreducible(7)
            .unwrap();
        assert!(s.absolutely_irreducible);
    }

    #[test]
    fn socle_prefers_trivial_summand() {
        let f = gf(3);
        let r = Matrix::from_i64_rows(f, &[vec![0, -1, 0], vec![1, 0, 0], vec![0, 0, 0]]).unwrap();
        let rep = MatrixRepresentation::new(f, 3, vec![r]).unwrap();
        let s = rep.socle_minimal_submodule(0).unwrap();
        assert_eq!(s, Subspace::coordinate(f, 3, [2]));
        assert!(rotation().socle_minimal_submodule(0).unwrap().is_full());
    }

    #[test]
    fn hom_space_sizes() {
        let rot = rotation();
        assert_eq!(rot.hom_space(&rot).unwrap().len(), 2);
        let g = sl2(5);
        let rep = MatrixRepresentation::adjoint(&g);
        let homs = rep.hom_space(&rep).unwrap();
        assert_eq!(homs.len(), 1);
        for h in &homs {
            for gen in rep.generators() {
                assert_eq!(h.mul(gen), gen.mul(h));
            }
        }
    }

    #[test]
    fn forms_examples() {
        let g = sl2(3);
        let forms = invariant_symmetric_forms(&g);
        assert_eq!(forms.len(), 1);
        assert_eq!(forms[0].rank(), 3);
        assert!(forms[0].is_symmetric());
        assert_eq!(forms[0].invariance_violation(&g), None);
        let a = LieAlgebra::abelian(gf(3), 3);
        assert_eq!(invariant_symmetric_forms(&a).len(), 6);
        assert!(forms[0].is_totally_isotropic(&Subspace::zero(gf(3), 3)));
        assert!(forms[0].is_totally_isotropic(&Subspace::coordinate(gf(3), 3, [0])));
        assert!(!forms[0].is_totally_isotropic(&Subspace::coordinate(gf(3), 3, [0, 2])));
    }
}
