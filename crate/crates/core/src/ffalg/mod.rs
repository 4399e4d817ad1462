//! Exact arithmetic and linear algebra over prime fields.
//!
//! Everything downstream (structure constants, modules, gradings) is reduced
//! to dense matrices over GF(p) and canonical echelon subspaces.

mod field;
mod matrix;
mod solve;
mod subspace;

pub use field::{binomial_mod, PrimeField, ProjectivePoints, MAX_PRIME};
pub use matrix::Matrix;
pub use solve::{solve_simultaneous, LinearSolution};
pub use subspace::Subspace;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FfError {
    #[error("{0} is not a supported prime (need 2 <= p <= {MAX_PRIME})")]
    NotPrime(u32),
    #[error("subspaces live in different ambient spaces ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },
    #[error("shape mismatch: expected {expected}, found {found}")]
    Shape { expected: usize, found: usize },
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn matrix_strategy(p: u32, max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
        (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
            prop::collection::vec(0..p as u8, r * c).prop_map(move |data| {
                let f = PrimeField::new(p).unwrap();
                let rows: Vec<Vec<u8>> = data.chunks(c).map(|ch| ch.to_vec()).collect();
                Matrix::from_rows(f, c, &rows)
            })
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in matrix_strategy(3, 7, 7)) {
            let (r, rank) = m.rref();
            let (rr, rank2) = r.rref();
            prop_assert_eq!(&r, &rr);
            prop_assert_eq!(rank, rank2);
        }

        #[test]
        fn rank_nullity(m in matrix_strategy(5, 6, 8)) {
            prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
            for v in m.kernel().basis() {
                prop_assert!(m.mul_vec(v).iter().all(|&x| x == 0));
            }
        }

        #[test]
        fn canonical_form_ignores_spanning_set(m in matrix_strategy(3, 5, 6), mix in prop::collection::vec(0u8..3, 25)) {
            let f = m.field();
            let a = m.row_space();
            // random recombination of the rows spans a subspace of a; add the rows back to get a again
            let mut combos = Vec::new();
            for i in 0..m.rows() {
                let mut v = vec![0u8; m.cols()];
                for j in 0..m.rows() {
                    f.axpy(&mut v, mix[(i * 5 + j) % 25], m.row(j));
                }
                combos.push(v);
            }
            let b = Subspace::from_vectors(f, m.cols(), combos.iter().chain(m.row_vecs().iter().rev()));
            prop_assert_eq!(a, b);
        }

        #[test]
        fn dimension_formula((cols, ra, rb) in (1usize..=6, 1usize..=5, 1usize..=5), data in prop::collection::vec(0u8..3, 60)) {
            let f = PrimeField::new(3).unwrap();
            let rows = |n: usize, off: usize| -> Vec<Vec<u8>> {
                (0..n).map(|r| (0..cols).map(|c| data[off + r * cols + c]).collect()).collect()
            };
            let sa = Subspace::from_vectors(f, cols, rows(ra, 0));
            let sb = Subspace::from_vectors(f, cols, rows(rb, 30));
            let s = sa.sum(&sb).unwrap();
            let i = sa.intersect(&sb).unwrap();
            prop_assert_eq!(s.dim() + i.dim(), sa.dim() + sb.dim());
            prop_assert!(sa.contains_subspace(&i) && sb.contains_subspace(&i));
        }
    }
}
