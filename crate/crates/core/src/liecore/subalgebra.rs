use super::{LieAlgebra, LieError};
use crate::ffalg::{Matrix, Subspace};

/// Incremental bracket closure.
///
/// Keeps a list of spanning vectors, each independent of its predecessors,
/// and brackets every new vector against all earlier ones.
pub struct ClosureBuilder<'a> {
    alg: &'a LieAlgebra,
    space: Subspace,
    vectors: Vec<Vec<u8>>,
    done: usize,
}

impl<'a> ClosureBuilder<'a> {
    pub fn new(alg: &'a LieAlgebra) -> Self {
        ClosureBuilder {
            alg,
            space: Subspace::zero(alg.field(), alg.dim()),
            vectors: Vec::new(),
            done: 0,
        }
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    /// Add a generator and close again.
    pub fn add(&mut self, v: &[u8]) {
        if self.space.insert(v) {
            self.vectors.push(v.to_vec());
        }
        while self.done < self.vectors.len() {
            let q = self.done;
            for r in 0..q {
                let w = self.alg.bracket(&self.vectors[q], &self.vectors[r]);
                if self.space.insert(&w) {
                    self.vectors.push(w);
                }
            }
            self.done += 1;
        }
    }

    pub fn finish(self) -> Subspace {
        self.space
    }
}

/// A bracket-closed subspace of a parent algebra.
#[derive(Clone, Debug)]
pub struct Subalgebra<'a> {
    parent: &'a LieAlgebra,
    space: Subspace,
}

impl<'a> Subalgebra<'a> {
    /// Wrap a subspace after checking closure on basis pairs.
    pub fn new(parent: &'a LieAlgebra, space: Subspace) -> Result<Self, LieError> {
        let b = space.basis();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                if !space.contains(&parent.bracket(&b[i], &b[j])) {
                    return Err(LieError::NotClosed);
                }
            }
        }
        Ok(Subalgebra { parent, space })
    }

    pub fn full(parent: &'a LieAlgebra) -> Self {
        Subalgebra {
            parent,
            space: Subspace::full(parent.field(), parent.dim()),
        }
    }

    pub fn parent(&self) -> &'a LieAlgebra {
        self.parent
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis(&self) -> &[Vec<u8>] {
        self.space.basis()
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        self.space.contains(v)
    }

    /// Structure constants in the canonical basis of the subspace.
    ///
    /// A basis vector that is a single parent basis element keeps its label;
    /// other vectors are labelled `v1, v2, ...`.
    pub fn to_algebra(&self) -> LieAlgebra {
        let f = self.parent.field();
        let basis = self.space.basis();
        let labels = basis
            .iter()
            .enumerate()
            .map(|(k, v)| {
                let nz: Vec<usize> = (0..v.len()).filter(|&i| v[i] != 0).collect();
                if nz.len() == 1 && v[nz[0]] == 1 {
                    self.parent.label(nz[0]).to_string()
                } else {
                    format!("v{}", k + 1)
                }
            })
            .collect();
        let mut table = super::StructureTable::zero(f, labels);
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                if i == j {
                    continue;
                }
                let c = self
                    .space
                    .coordinates(&self.parent.bracket(&basis[i], &basis[j]))
                    .expect("subalgebra is closed");
                table.set_product_dense(i, j, &c);
            }
        }
        LieAlgebra { table }
    }

    /// Map coordinates in [`Subalgebra::to_algebra`] back to the parent.
    pub fn lift(&self, coords: &[u8]) -> Vec<u8> {
        self.space.combination(coords)
    }

    pub fn lift_space(&self, local: &Subspace) -> Subspace {
        Subspace::from_vectors(
            self.parent.field(),
            self.parent.dim(),
            local.basis().iter().map(|c| self.lift(c)),
        )
    }

    /// Coordinates of a parent vector in the canonical basis, if inside.
    pub fn local_coordinates(&self, v: &[u8]) -> Option<Vec<u8>> {
        self.space.coordinates(v)
    }

    pub fn is_ideal_of(&self, outer: &Subalgebra) -> bool {
        outer.basis().iter().all(|x| {
            self.basis()
                .iter()
                .all(|y| self.contains(&self.parent.bracket(x, y)))
        })
    }

    /// `[s, s]`.
    pub fn derived(&self) -> Subalgebra<'a> {
        Subalgebra {
            parent: self.parent,
            space: self.parent.bracket_spaces(&self.space, &self.space),
        }
    }

    /// `s, [s,s], [[s,s],[s,s]], ...` up to and including the stable term.
    pub fn derived_series(&self) -> Vec<Subalgebra<'a>> {
        let mut out = vec![self.clone()];
        loop {
            let next = out.last().unwrap().derived();
            if next.space == out.last().unwrap().space {
                break;
            }
            let stop = next.dim() == 0;
            out.push(next);
            if stop {
                break;
            }
        }
        out
    }

    /// `s, [s,s], [s,[s,s]], ...` up to and including the stable term.
    pub fn lower_central_series(&self) -> Vec<Subalgebra<'a>> {
        let mut out = vec![self.clone()];
        loop {
            let prev = out.last().unwrap();
            let next = Subalgebra {
                parent: self.parent,
                space: self.parent.bracket_spaces(&self.space, &prev.space),
            };
            if next.space == prev.space {
                break;
            }
            let stop = next.dim() == 0;
            out.push(next);
            if stop {
                break;
            }
        }
        out
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series()
            .last()
            .map(|s| s.dim() == 0)
            .unwrap_or(true)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series()
            .last()
            .map(|s| s.dim() == 0)
            .unwrap_or(true)
    }

    pub fn is_perfect(&self) -> bool {
        self.derived().space == self.space
    }

    /// `{x ∈ s : [x, s] = 0}`.
    pub fn center(&self) -> Subspace {
        self.parent
            .centralizer_of_space(&self.space)
            .intersect(&self.space)
            .expect("same ambient space")
    }
}

/// A quotient algebra `s / I` with an explicit section.
///
/// Quotient basis vector `i` is the image of parent basis vector
/// `section[i]` (a standard basis vector outside the pivots of `I`).
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    pub ideal: Subspace,
    pub section: Vec<usize>,
}

impl Quotient {
    pub fn project(&self, v: &[u8]) -> Vec<u8> {
        self.ideal.quotient_coordinates(v)
    }

    /// A preimage of a quotient vector.
    pub fn lift(&self, q: &[u8]) -> Vec<u8> {
        let mut v = vec![0u8; self.ideal.ambient_dim()];
        for (&i, &c) in self.section.iter().zip(q) {
            v[i] = c;
        }
        v
    }

    /// Full preimage of a quotient subspace.
    pub fn preimage(&self, s: &Subspace) -> Subspace {
        let mut out = self.ideal.clone();
        for q in s.basis() {
            out.insert(&self.lift(q));
        }
        out
    }
}

impl LieAlgebra {
    pub fn subalgebra_closure(&self, gens: &[Vec<u8>]) -> Subalgebra<'_> {
        let mut b = ClosureBuilder::new(self);
        for g in gens {
            b.add(g);
        }
        Subalgebra {
            parent: self,
            space: b.finish(),
        }
    }

    pub fn centralizer_of_element(&self, x: &[u8]) -> Subalgebra<'_> {
        Subalgebra {
            parent: self,
            space: self.ad_matrix(x).kernel(),
        }
    }

    /// `{x : [x, s] ⊆ s}` as the kernel of `x ↦ ([x, s_j] mod s)_j`.
    pub fn normalizer(&self, s: &Subalgebra) -> Subalgebra<'_> {
        let n = self.dim();
        let comp = s.space().complement_indices();
        let mut rows = Subspace::zero(self.field(), n);
        for sj in s.basis() {
            // column i of this block is [b_i, s_j] mod s
            let ad = self.ad_matrix(sj);
            let cols: Vec<Vec<u8>> = (0..n).map(|i| s.space().reduce(&ad.column(i))).collect();
            for &c in &comp {
                let row: Vec<u8> = cols.iter().map(|v| v[c]).collect();
                rows.insert(&row);
            }
        }
        Subalgebra {
            parent: self,
            space: rows.annihilator(),
        }
    }

    /// Quotient by an ideal of the whole algebra.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient, LieError> {
        for x in ideal.basis() {
            for i in 0..self.dim() {
                if !ideal.contains(&self.bracket(&self.basis_vector(i), x)) {
                    return Err(LieError::NotIdeal);
                }
            }
        }
        let section = ideal.complement_indices();
        let labels = section.iter().map(|&i| self.label(i).to_string()).collect();
        let mut table = super::StructureTable::zero(self.field(), labels);
        for (a, &i) in section.iter().enumerate() {
            for (b, &j) in section.iter().enumerate() {
                if a != b {
                    let prod = self.bracket(&self.basis_vector(i), &self.basis_vector(j));
                    table.set_product_dense(a, b, &ideal.quotient_coordinates(&prod));
                }
            }
        }
        Ok(Quotient {
            algebra: LieAlgebra { table },
            ideal: ideal.clone(),
            section,
        })
    }

    /// Smallest `k` with `(ad x)^k = 0`, or `None` if `ad x` is not nilpotent.
    pub fn is_ad_nilpotent(&self, x: &[u8]) -> Option<usize> {
        let ad = self.ad_matrix(x);
        let mut power = ad.clone();
        for k in 1..=self.dim().max(1) {
            if power.is_zero() {
                return Some(k);
            }
            power = power.mul(&ad);
        }
        None
    }

    /// Projective representatives `v` of `candidates` with `dim ⟨e, v⟩ = target_dim`.
    pub fn scan_partners(
        &self,
        e: &[u8],
        candidates: &Subspace,
        target_dim: usize,
    ) -> Result<Vec<Vec<u8>>, LieError> {
        let count = (self.field().p() as u128).pow(candidates.dim() as u32);
        if candidates.dim() > 4 && count > 100_000 {
            return Err(LieError::EnumerationCap(count));
        }
        let mut out = Vec::new();
        for c in self.field().projective_points(candidates.dim()) {
            let v = candidates.combination(&c);
            if self.subalgebra_closure(&[e.to_vec(), v.clone()]).dim() == target_dim {
                out.push(v);
            }
        }
        Ok(out)
    }

    /// Ideal of this algebra generated by `x`.
    pub fn ideal_generated(&self, x: &[u8]) -> Subspace {
        let mut space = Subspace::zero(self.field(), self.dim());
        let mut queue = Vec::new();
        if space.insert(x) {
            queue.push(x.to_vec());
        }
        let ads: Vec<Matrix> = (0..self.dim()).map(|i| self.ad_basis(i)).collect();
        while let Some(v) = queue.pop() {
            for ad in &ads {
                let w = ad.mul_vec(&v);
                if space.insert(&w) {
                    queue.push(w);
                }
            }
        }
        space
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::sl2;
    use super::*;
    use crate::ffalg::PrimeField;
    use crate::liecore::StructureTable;

    fn nonabelian2(p: u32) -> LieAlgebra {
        let f = PrimeField::new(p).unwrap();
        let mut t = StructureTable::zero(f, vec!["x".into(), "y".into()]);
        t.set_product(0, 1, &[(1, 1)]);
        t.set_product(1, 0, &[(1, f.neg(1))]);
        LieAlgebra::new(t).unwrap()
    }

    #[test]
    fn closure_examples() {
        let g = sl2(3);
        assert_eq!(g.subalgebra_closure(&[g.basis_vector(0)]).dim(), 1);
        assert_eq!(
            g.subalgebra_closure(&[g.basis_vector(0), g.basis_vector(1)])
                .dim(),
            3
        );
        let s = g.subalgebra_closure(&[g.basis_vector(0), g.basis_vector(2)]);
        assert_eq!(s.dim(), 2);
        let again = g.subalgebra_closure(s.basis());
        assert_eq!(again.space(), s.space());
    }

    #[test]
    fn centralizers_and_normalizers() {
        let g = sl2(5);
        assert_eq!(g.centralizer_of_element(&g.zero_vector()).dim(), 3);
        let ch = g.centralizer_of_element(&g.basis_vector(2));
        assert_eq!(ch.space(), &Subspace::coordinate(g.field(), 3, [2]));
        let full = Subalgebra::full(&g);
        assert_eq!(g.normalizer(&full).dim(), 3);
        let borel = g.subalgebra_closure(&[g.basis_vector(0), g.basis_vector(2)]);
        assert_eq!(g.normalizer(&borel).space(), borel.space());
    }

    #[test]
    fn series_and_center() {
        let g = sl2(3);
        let full = Subalgebra::full(&g);
        assert!(full.is_perfect());
        assert_eq!(full.center().dim(), 0);
        let a = LieAlgebra::abelian(g.field(), 2);
        let fa = Subalgebra::full(&a);
        assert_eq!(fa.derived().dim(), 0);
        assert_eq!(fa.center().dim(), 2);
        let n = nonabelian2(3);
        let fn_ = Subalgebra::full(&n);
        assert!(fn_.is_solvable());
        assert!(!fn_.is_nilpotent());
        let dims: Vec<usize> = fn_.derived_series().iter().map(|s| s.dim()).collect();
        assert_eq!(dims, vec![2, 1, 0]);
    }

    #[test]
    fn ad_nilpotency() {
        let g = sl2(3);
        assert_eq!(g.is_ad_nilpotent(&g.zero_vector()), Some(1));
        assert_eq!(g.is_ad_nilpotent(&g.basis_vector(0)), Some(3));
        assert_eq!(g.is_ad_nilpotent(&g.basis_vector(2)), None);
    }

    #[test]
    fn quotient_of_nonabelian() {
        let n = nonabelian2(5);
        let ideal = Subspace::coordinate(n.field(), 2, [1]);
        let q = n.quotient(&ideal).unwrap();
        assert_eq!(q.algebra.dim(), 1);
        assert_eq!(q.section, vec![0]);
        let bad = Subspace::coordinate(n.field(), 2, [0]);
        assert!(n.quotient(&bad).is_err());
    }

    #[test]
    fn scan_partners_examples() {
        let g = sl2(3);
        let e = g.basis_vector(0);
        let zero = Subspace::zero(g.field(), 3);
        assert!(g.scan_partners(&e, &zero, 3).unwrap().is_empty());
        let cand = Subspace::coordinate(g.field(), 3, [1, 2]);
        let hits = g.scan_partners(&e, &cand, 3).unwrap();
        assert!(hits.contains(&g.basis_vector(1)));
        assert!(!hits.contains(&g.basis_vector(2)));
    }

    #[test]
    fn to_algebra_keeps_labels() {
        let g = sl2(3);
        let b = g.subalgebra_closure(&[g.basis_vector(0), g.basis_vector(2)]);
        let a = b.to_algebra();
        assert_eq!(a.labels(), &["e".to_string(), "h".to_string()]);
        assert_eq!(a.bracket(&[0, 1], &[1, 0]), vec![2, 0]);
    }
}
