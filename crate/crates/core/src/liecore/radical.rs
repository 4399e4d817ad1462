//! Solvable radical by peeling minimal abelian ideals.
//!
//! Trace forms are useless in characteristic 3, so the radical is built as a
//! chain `0 = R_0 < R_1 < ...` where each `R_{k+1}/R_k` is a minimal abelian
//! ideal of `s/R_k`. The chain stops when the quotient has no abelian ideal.

use super::{LieAlgebra, LieError, Subalgebra};
use crate::ffalg::Subspace;
use crate::modrep::MatrixRepresentation;

/// Largest subalgebra dimension accepted by [`LieAlgebra::solvable_radical`].
pub const RADICAL_DIMENSION_CAP: usize = 12;

// p^dim bound for the exhaustive ideal search
const EXHAUSTIVE_LIMIT: u128 = 59_049;

impl LieAlgebra {
    pub fn solvable_radical<'a>(&'a self, s: &Subalgebra<'a>) -> Result<Subalgebra<'a>, LieError> {
        if s.dim() > RADICAL_DIMENSION_CAP {
            return Err(LieError::DimensionCap {
                found: s.dim(),
                cap: RADICAL_DIMENSION_CAP,
            });
        }
        let local = s.to_algebra().radical()?;
        Subalgebra::new(self, s.lift_space(&local))
    }

    /// Radical of the whole algebra, as a subspace.
    pub fn radical(&self) -> Result<Subspace, LieError> {
        let mut acc = Subspace::zero(self.field(), self.dim());
        loop {
            let q = self.quotient(&acc)?;
            if q.algebra.dim() == 0 {
                break;
            }
            match q.algebra.minimal_abelian_ideal()? {
                Some(i) => acc = q.preimage(&i),
                None => break,
            }
        }
        Ok(acc)
    }

    fn is_abelian_space(&self, s: &Subspace) -> bool {
        self.bracket_spaces(s, s).is_zero()
    }

    /// A minimal abelian ideal, or `None` if the algebra has no nonzero abelian ideal.
    pub fn minimal_abelian_ideal(&self) -> Result<Option<Subspace>, LieError> {
        let full = Subalgebra::full(self);
        let mut candidates: Vec<Vec<u8>> = full.center().basis().to_vec();
        if let Some(last) = full.derived_series().last() {
            candidates.extend(last.basis().iter().cloned());
        }
        for i in 0..self.dim() {
            candidates.extend(self.ad_basis(i).kernel().basis().iter().cloned());
        }
        for x in &candidates {
            let ideal = self.ideal_generated(x);
            if !ideal.is_zero() && self.is_abelian_space(&ideal) {
                return self.minimize_ideal(&ideal).map(Some);
            }
        }
        let count = (self.field().p() as u128).pow(self.dim() as u32);
        if count > EXHAUSTIVE_LIMIT {
            return Err(LieError::EnumerationCap(count));
        }
        for c in self.field().projective_points(self.dim()) {
            let ideal = self.ideal_generated(&c);
            if self.is_abelian_space(&ideal) {
                return self.minimize_ideal(&ideal).map(Some);
            }
        }
        Ok(None)
    }

    // Any nonzero submodule of an abelian ideal is again an abelian ideal.
    fn minimize_ideal(&self, ideal: &Subspace) -> Result<Subspace, LieError> {
        let mats = (0..self.dim()).map(|i| self.ad_basis(i)).collect();
        let rep = MatrixRepresentation::new(self.field(), self.dim(), mats)
            .and_then(|r| r.restrict(ideal))
            .map_err(|e| LieError::Module(e.to_string()))?;
        let local = rep
            .socle_minimal_submodule(0)
            .map_err(|e| LieError::Module(e.to_string()))?;
        Ok(Subspace::from_vectors(
            self.field(),
            self.dim(),
            local.basis().iter().map(|c| ideal.combination(c)),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::sl2;
    use super::*;
    use crate::ffalg::PrimeField;
    use crate::liecore::StructureTable;

    #[test]
    fn radical_of_simple_is_zero() {
        let g = sl2(3);
        let full = Subalgebra::full(&g);
        assert_eq!(g.solvable_radical(&full).unwrap().dim(), 0);
    }

    #[test]
    fn radical_of_solvable_is_everything() {
        let f = PrimeField::new(3).unwrap();
        let mut t = StructureTable::zero(f, vec!["x".into(), "y".into()]);
        t.set_product(0, 1, &[(1, 1)]);
        t.set_product(1, 0, &[(1, 2)]);
        let n = LieAlgebra::new(t).unwrap();
        assert_eq!(n.solvable_radical(&Subalgebra::full(&n)).unwrap().dim(), 2);
    }

    #[test]
    fn radical_of_gl2_like_sum() {
        // sl2 ⊕ k over GF(5): radical is the central line
        let f = PrimeField::new(5).unwrap();
        let mut t = StructureTable::zero(f, vec!["e".into(), "f".into(), "h".into(), "z".into()]);
        t.set_product(0, 1, &[(2, 1)]);
        t.set_product(1, 0, &[(2, 4)]);
        t.set_product(2, 0, &[(0, 2)]);
        t.set_product(0, 2, &[(0, 3)]);
        t.set_product(2, 1, &[(1, 3)]);
        t.set_product(1, 2, &[(1, 2)]);
        let g = LieAlgebra::new(t).unwrap();
        let r = g.solvable_radical(&Subalgebra::full(&g)).unwrap();
        assert_eq!(r.space(), &Subspace::coordinate(f, 4, [3]));
        let q = g.quotient(r.space()).unwrap();
        assert_eq!(q.algebra.radical().unwrap().dim(), 0);
    }

    #[test]
    fn cap_is_enforced() {
        let a = LieAlgebra::abelian(PrimeField::new(3).unwrap(), 13);
        assert!(matches!(
            a.solvable_radical(&Subalgebra::full(&a)),
            Err(LieError::DimensionCap { .. })
        ));
    }
}
