//! Exact computations with finite-dimensional Lie algebras over prime fields.
//!
//! The crate builds Chevalley-basis algebras from root data, Cartan-type and
//! Ermolaev algebras from divided powers, and answers structural questions
//! (closures, radicals, irreducibility, invariant forms, gradings) with
//! exact arithmetic over GF(p). The [`pipeline`] module chains these into a
//! certificate report for the 26-dimensional Ermolaev subalgebra of F4 in
//! characteristic 3.

pub mod cartantype;
pub mod ffalg;
pub mod grading;
pub mod liecore;
pub mod modrep;
pub mod pipeline;
pub mod rootdata;
