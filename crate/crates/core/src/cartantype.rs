//! Divided powers `O(2;n)`, the Witt algebra `W(2;n)` and the Ermolaev
//! algebras `Er(n1,n2) = W(2;n) ⊕ O(2;n)` with the divergence-twisted action.
//!
//! Monomials are divided powers `x^(a)` with `x^(a) x^(b) = C(a+b, a) x^(a+b)`
//! (componentwise, zero on overflow), and `∂_i x^(a) = x^(a - ε_i)`.
//! At `n = (1,1)` the ordinary monomial `x1^a x2^b` equals `a! b! x^(a,b)`.
//!
//! The Ermolaev product is a Lie bracket only in characteristic 3. Tables for
//! other primes can be built with [`ErmolaevTable::build`] for the Jacobi
//! defect experiment, but [`Ermolaev::build`] refuses them.

use serde::Serialize;
use thiserror::Error;

use crate::ffalg::{binomial_mod, FfError, Matrix, PrimeField, Subspace};
use crate::grading::Grading;
use crate::liecore::{JacobiWitness, LieAlgebra, LieError, StructureTable, Subalgebra};
use crate::modrep::MatrixRepresentation;

/// Largest supported `p^(n1+n2)`, keeping the algebra dimension below ~800.
pub const MAX_MONOMIALS: usize = 243;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CartanError {
    #[error("exponent bounds n = ({0}, {1}) must be positive")]
    ZeroExponent(u32, u32),
    #[error("p^(n1+n2) = {0} is too large")]
    TooLarge(u128),
    #[error("the Ermolaev product is not a Lie bracket over GF({p}): Jacobi fails on ({}, {}, {})", .witness.i, .witness.j, .witness.k)]
    NotLie { p: u32, witness: JacobiWitness },
    #[error(transparent)]
    Field(#[from] FfError),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// The truncated divided-power algebra `O(2; (n1, n2))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DividedPowers {
    field: PrimeField,
    n: [u32; 2],
    bounds: [usize; 2],
}

impl DividedPowers {
    pub fn new(field: PrimeField, n1: u32, n2: u32) -> Result<Self, CartanError> {
        if n1 == 0 || n2 == 0 {
            return Err(CartanError::ZeroExponent(n1, n2));
        }
        let p = field.p() as u128;
        let total = p.pow(n1 + n2);
        if total > MAX_MONOMIALS as u128 {
            return Err(CartanError::TooLarge(total));
        }
        Ok(DividedPowers {
            field,
            n: [n1, n2],
            bounds: [p.pow(n1) as usize, p.pow(n2) as usize],
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n(&self) -> (u32, u32) {
        (self.n[0], self.n[1])
    }

    pub fn dim(&self) -> usize {
        self.bounds[0] * self.bounds[1]
    }

    pub fn index(&self, a: [usize; 2]) -> Option<usize> {
        (a[0] < self.bounds[0] && a[1] < self.bounds[1]).then(|| a[0] * self.bounds[1] + a[1])
    }

    pub fn exponent(&self, idx: usize) -> [usize; 2] {
        [idx / self.bounds[1], idx % self.bounds[1]]
    }

    /// Total degree `a1 + a2` of a basis monomial.
    pub fn degree(&self, idx: usize) -> usize {
        let a = self.exponent(idx);
        a[0] + a[1]
    }

    /// Index of the top monomial `x^(p^n1 - 1, p^n2 - 1)`.
    pub fn top(&self) -> usize {
        self.dim() - 1
    }

    pub fn monomial(&self, a: [usize; 2]) -> Vec<u8> {
        let mut v = vec![0u8; self.dim()];
        v[self.index(a).expect("exponent in range")] = 1;
        v
    }

    pub fn one(&self) -> Vec<u8> {
        self.monomial([0, 0])
    }

    pub fn monomial_label(&self, idx: usize) -> String {
        let a = self.exponent(idx);
        let mut s = String::new();
        for (i, &ai) in a.iter().enumerate() {
            match ai {
                0 => {}
                1 => s.push_str(&format!("x{}", i + 1)),
                _ => s.push_str(&format!("x{}^({})", i + 1, ai)),
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }

    pub fn mul(&self, f: &[u8], g: &[u8]) -> Vec<u8> {
        let fl = self.field;
        let mut out = vec![0u8; self.dim()];
        for (i, &fi) in f.iter().enumerate() {
            if fi == 0 {
                continue;
            }
            let a = self.exponent(i);
            for (j, &gj) in g.iter().enumerate() {
                if gj == 0 {
                    continue;
                }
                let b = self.exponent(j);
                let Some(k) = self.index([a[0] + b[0], a[1] + b[1]]) else {
                    continue;
                };
                let c = fl.mul(
                    binomial_mod(fl, (a[0] + b[0]) as u64, a[0] as u64),
                    binomial_mod(fl, (a[1] + b[1]) as u64, a[1] as u64),
                );
                out[k] = fl.add(out[k], fl.mul(c, fl.mul(fi, gj)));
            }
        }
        out
    }

    /// `∂_i` for `i` in `{0, 1}`.
    pub fn partial(&self, i: usize, f: &[u8]) -> Vec<u8> {
        let mut out = vec![0u8; self.dim()];
        for (idx, &c) in f.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mut a = self.exponent(idx);
            if a[i] == 0 {
                continue;
            }
            a[i] -= 1;
            out[self.index(a).unwrap()] = c;
        }
        out
    }

    fn add(&self, f: &[u8], g: &[u8]) -> Vec<u8> {
        f.iter()
            .zip(g)
            .map(|(&a, &b)| self.field.add(a, b))
            .collect()
    }

    fn sub(&self, f: &[u8], g: &[u8]) -> Vec<u8> {
        f.iter()
            .zip(g)
            .map(|(&a, &b)| self.field.sub(a, b))
            .collect()
    }

    fn scale(&self, f: &[u8], c: u8) -> Vec<u8> {
        f.iter().map(|&a| self.field.mul(a, c)).collect()
    }
}

/// `f1 ∂1 + f2 ∂2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittDerivation {
    pub parts: [Vec<u8>; 2],
}

impl WittDerivation {
    pub fn new(f1: Vec<u8>, f2: Vec<u8>) -> Self {
        WittDerivation { parts: [f1, f2] }
    }

    /// `x^(a) ∂_i`.
    pub fn basis(o: &DividedPowers, a: [usize; 2], i: usize) -> Self {
        let mut parts = [vec![0u8; o.dim()], vec![0u8; o.dim()]];
        parts[i] = o.monomial(a);
        WittDerivation { parts }
    }

    /// `D(f)`.
    pub fn apply(&self, o: &DividedPowers, f: &[u8]) -> Vec<u8> {
        let a = o.mul(&self.parts[0], &o.partial(0, f));
        let b = o.mul(&self.parts[1], &o.partial(1, f));
        o.add(&a, &b)
    }
}

/// `div(f1 ∂1 + f2 ∂2) = ∂1 f1 + ∂2 f2`.
pub fn divergence(o: &DividedPowers, d: &WittDerivation) -> Vec<u8> {
    o.add(&o.partial(0, &d.parts[0]), &o.partial(1, &d.parts[1]))
}

/// `[D, E] = (D(e1) - E(d1)) ∂1 + (D(e2) - E(d2)) ∂2`.
pub fn witt_bracket(o: &DividedPowers, d: &WittDerivation, e: &WittDerivation) -> WittDerivation {
    let part = |i: usize| o.sub(&d.apply(o, &e.parts[i]), &e.apply(o, &d.parts[i]));
    WittDerivation::new(part(0), part(1))
}

/// `D · f = D(f) + α div(D) f`.
pub fn twisted_action(o: &DividedPowers, d: &WittDerivation, f: &[u8], alpha: u8) -> Vec<u8> {
    let twist = o.scale(&o.mul(&divergence(o, d), f), alpha);
    o.add(&d.apply(o, f), &twist)
}

/// `[f, g] = (f ∂2 g - g ∂2 f) ∂1 + (g ∂1 f - f ∂1 g) ∂2`.
pub fn o_bracket(o: &DividedPowers, f: &[u8], g: &[u8]) -> WittDerivation {
    let first = o.sub(&o.mul(f, &o.partial(1, g)), &o.mul(g, &o.partial(1, f)));
    let second = o.sub(&o.mul(g, &o.partial(0, f)), &o.mul(f, &o.partial(0, g)));
    WittDerivation::new(first, second)
}

/// The Ermolaev product on `W(2;n) ⊕ O(2;n)` as a raw structure table,
/// not necessarily satisfying Jacobi.
///
/// Basis order: `x^(a) ∂1` for all `a`, then `x^(a) ∂2`, then `x^(a)`.
#[derive(Clone, Debug)]
pub struct ErmolaevTable {
    divided: DividedPowers,
    alpha: u8,
    table: StructureTable,
}

impl ErmolaevTable {
    pub fn build(n1: u32, n2: u32, p: u32, alpha: i64) -> Result<Self, CartanError> {
        let field = PrimeField::new(p)?;
        let o = DividedPowers::new(field, n1, n2)?;
        let alpha = field.reduce_i64(alpha);
        let m = o.dim();
        let mut labels = Vec::with_capacity(3 * m);
        for i in 0..2 {
            for idx in 0..m {
                let mono = o.monomial_label(idx);
                let prefix = if mono == "1" { String::new() } else { mono };
                labels.push(format!("{prefix}d{}", i + 1));
            }
        }
        labels.extend((0..m).map(|idx| o.monomial_label(idx)));
        let mut table = StructureTable::zero(field, labels);
        let witt = |k: usize| WittDerivation::basis(&o, o.exponent(k % m), k / m);
        let to_vec = |d: &WittDerivation| -> Vec<u8> {
            let mut v = Vec::with_capacity(3 * m);
            v.extend_from_slice(&d.parts[0]);
            v.extend_from_slice(&d.parts[1]);
            v.extend(std::iter::repeat_n(0u8, m));
            v
        };
        let o_vec = |f: &[u8]| -> Vec<u8> {
            let mut v = vec![0u8; 2 * m];
            v.extend_from_slice(f);
            v
        };
        for i in 0..3 * m {
            for j in 0..3 * m {
                if i == j {
                    continue;
                }
                let product = match (i < 2 * m, j < 2 * m) {
                    (true, true) => to_vec(&witt_bracket(&o, &witt(i), &witt(j))),
                    (true, false) => o_vec(&twisted_action(
                        &o,
                        &witt(i),
                        &o.monomial(o.exponent(j - 2 * m)),
                        alpha,
                    )),
                    (false, true) => {
                        let v =
                            twisted_action(&o, &witt(j), &o.monomial(o.exponent(i - 2 * m)), alpha);
                        o_vec(&o.scale(&v, field.neg(1)))
                    }
                    (false, false) => to_vec(&o_bracket(
                        &o,
                        &o.monomial(o.exponent(i - 2 * m)),
                        &o.monomial(o.exponent(j - 2 * m)),
                    )),
                };
                table.set_product_dense(i, j, &product);
            }
        }
        Ok(ErmolaevTable {
            divided: o,
            alpha,
            table,
        })
    }

    pub fn divided(&self) -> &DividedPowers {
        &self.divided
    }

    pub fn alpha(&self) -> u8 {
        self.alpha
    }

    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    /// Index of `x^(a) ∂_i` (`i` in `{0,1}`).
    pub fn witt_index(&self, a: [usize; 2], i: usize) -> usize {
        i * self.divided.dim() + self.divided.index(a).expect("exponent in range")
    }

    /// Index of the O-monomial `x^(a)`.
    pub fn o_index(&self, a: [usize; 2]) -> usize {
        2 * self.divided.dim() + self.divided.index(a).expect("exponent in range")
    }

    pub fn witt_dim(&self) -> usize {
        2 * self.divided.dim()
    }

    pub fn unit(&self, idx: usize) -> Vec<u8> {
        let mut v = vec![0u8; self.dim()];
        v[idx] = 1;
        v
    }

    /// `[a,[b,c]] + [b,[c,a]] + [c,[a,b]]`.
    pub fn jacobi_sum(&self, a: &[u8], b: &[u8], c: &[u8]) -> Vec<u8> {
        let t = &self.table;
        let f = t.field();
        let x = t.bracket(a, &t.bracket(b, c));
        let y = t.bracket(b, &t.bracket(c, a));
        let z = t.bracket(c, &t.bracket(a, b));
        (0..self.dim())
            .map(|k| f.add(f.add(x[k], y[k]), z[k]))
            .collect()
    }

    /// Er-degree of each basis vector: `|a| - 1` for both `x^(a) ∂_i` and `x^(a)`.
    pub fn degrees(&self) -> Vec<i64> {
        let m = self.divided.dim();
        (0..3 * m)
            .map(|k| self.divided.degree(k % m) as i64 - 1)
            .collect()
    }
}

/// Result of evaluating `J(x1∂1, x1, x2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobiDefect {
    pub p: u32,
    pub value: String,
    pub is_zero: bool,
    /// Residue `c` with `J = c (x1∂1 + x2∂2)`, when `J` has that form.
    pub euler_multiple: Option<u8>,
}

/// Evaluate `J(x1∂1, x1, x2)` in the would-be `Er(1,1)` over GF(p) with `α = 1`.
pub fn jacobi_defect(p: u32) -> Result<JacobiDefect, CartanError> {
    let er = ErmolaevTable::build(1, 1, p, 1)?;
    let a = er.unit(er.witt_index([1, 0], 0));
    let b = er.unit(er.o_index([1, 0]));
    let c = er.unit(er.o_index([0, 1]));
    let j = er.jacobi_sum(&a, &b, &c);
    let e1 = er.witt_index([1, 0], 0);
    let e2 = er.witt_index([0, 1], 1);
    let coeff = j[e1];
    let mut euler = vec![0u8; er.dim()];
    euler[e1] = coeff;
    euler[e2] = coeff;
    let value = LieAlgebraView(&er.table).format(&j);
    Ok(JacobiDefect {
        p,
        is_zero: j.iter().all(|&x| x == 0),
        euler_multiple: (euler == j).then_some(coeff),
        value,
    })
}

struct LieAlgebraView<'a>(&'a StructureTable);

impl LieAlgebraView<'_> {
    fn format(&self, v: &[u8]) -> String {
        let f = self.0.field();
        let mut out = String::new();
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let s = f.signed(c);
            if !out.is_empty() {
                out.push_str(if s < 0 { " - " } else { " + " });
            } else if s < 0 {
                out.push('-');
            }
            if s.abs() != 1 {
                out.push_str(&format!("{}*", s.abs()));
            }
            out.push_str(&self.0.labels()[i]);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// A verified Ermolaev Lie algebra in characteristic 3.
#[derive(Clone, Debug)]
pub struct Ermolaev {
    raw: ErmolaevTable,
    algebra: LieAlgebra,
}

impl Ermolaev {
    /// Build with `α = 1`; fails with a Jacobi witness outside characteristic 3.
    pub fn build(n1: u32, n2: u32, p: u32) -> Result<Self, CartanError> {
        Self::build_with_alpha(n1, n2, p, 1)
    }

    pub fn build_with_alpha(n1: u32, n2: u32, p: u32, alpha: i64) -> Result<Self, CartanError> {
        let raw = ErmolaevTable::build(n1, n2, p, alpha)?;
        let algebra = match LieAlgebra::new(raw.table.clone()) {
            Ok(a) => a,
            Err(LieError::NotJacobi(witness)) => return Err(CartanError::NotLie { p, witness }),
            Err(e) => return Err(e.into()),
        };
        Ok(Ermolaev { raw, algebra })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn raw(&self) -> &ErmolaevTable {
        &self.raw
    }

    pub fn divided(&self) -> &DividedPowers {
        &self.raw.divided
    }

    pub fn derived(&self) -> Subalgebra<'_> {
        Subalgebra::full(&self.algebra).derived()
    }

    /// The Witt summand `W(2;n)` as a subspace of the algebra.
    pub fn witt_space(&self) -> Subspace {
        Subspace::coordinate(
            self.algebra.field(),
            self.algebra.dim(),
            0..self.raw.witt_dim(),
        )
    }

    /// `W(2;n) ⊕ O'` inside the algebra.
    pub fn witt_plus_o_prime(&self) -> Subspace {
        let w = self.raw.witt_dim();
        let mut s = self.witt_space();
        for v in o_prime_submodule(&self.raw.divided, self.raw.alpha).basis() {
            let mut full = vec![0u8; self.algebra.dim()];
            full[w..].copy_from_slice(v);
            s.insert(&full);
        }
        s
    }

    /// Native grading of the whole algebra.
    pub fn grading(&self) -> Grading {
        Grading::from_basis_degrees(self.algebra.field(), &self.raw.degrees())
    }
}

/// Twisted action matrices of the Witt basis on `O(2;n)`.
pub fn twisted_module(o: &DividedPowers, alpha: u8) -> MatrixRepresentation {
    let m = o.dim();
    let mut gens = Vec::with_capacity(2 * m);
    for i in 0..2 {
        for k in 0..m {
            let d = WittDerivation::basis(o, o.exponent(k), i);
            let cols: Vec<Vec<u8>> = (0..m)
                .map(|j| twisted_action(o, &d, &o.monomial(o.exponent(j)), alpha))
                .collect();
            gens.push(Matrix::from_columns(o.field(), m, &cols));
        }
    }
    MatrixRepresentation::new(o.field(), m, gens).expect("square generators")
}

/// The `W`-submodule of `O(2;n)` generated by `1` under the twisted action.
pub fn o_prime_submodule(o: &DividedPowers, alpha: u8) -> Subspace {
    twisted_module(o, alpha).spin(&o.one())
}

/// Graded profile of the Witt algebra `W(2;n)` in its natural grading.
pub fn witt_profile(o: &DividedPowers) -> Vec<(i64, usize)> {
    let degrees: Vec<i64> = (0..2 * o.dim())
        .map(|k| o.degree(k % o.dim()) as i64 - 1)
        .collect();
    Grading::from_basis_degrees(o.field(), &degrees).profile()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o11(p: u32) -> DividedPowers {
        DividedPowers::new(PrimeField::new(p).unwrap(), 1, 1).unwrap()
    }

    #[test]
    fn divided_power_algebra_is_associative_and_commutative() {
        let o = o11(3);
        let m = o.dim();
        let mono = |k: usize| o.monomial(o.exponent(k));
        for a in 0..m {
            for b in 0..m {
                assert_eq!(o.mul(&mono(a), &mono(b)), o.mul(&mono(b), &mono(a)));
                for c in 0..m {
                    let left = o.mul(&o.mul(&mono(a), &mono(b)), &mono(c));
                    let right = o.mul(&mono(a), &o.mul(&mono(b), &mono(c)));
                    assert_eq!(left, right);
                }
            }
        }
        // x1 * x1 = 2 x^(2,0)
        let x1 = o.monomial([1, 0]);
        assert_eq!(o.mul(&x1, &x1), o.scale(&o.monomial([2, 0]), 2));
    }

    #[test]
    fn divergence_examples() {
        let o = o11(3);
        let zero = vec![0u8; 9];
        assert_eq!(
            divergence(&o, &WittDerivation::basis(&o, [1, 0], 0)),
            o.one()
        );
        assert_eq!(divergence(&o, &WittDerivation::basis(&o, [0, 0], 0)), zero);
        // x1 x2 ∂1 + x2^2 ∂2 with x2^2 = 2 x^(0,2): x2 + 2 x2 = 0
        let d = WittDerivation::new(o.monomial([1, 1]), o.scale(&o.monomial([0, 2]), 2));
        assert_eq!(divergence(&o, &d), zero);
    }

    #[test]
    fn witt_bracket_examples() {
        let o = o11(3);
        let d1 = WittDerivation::basis(&o, [0, 0], 0);
        let x1d1 = WittDerivation::basis(&o, [1, 0], 0);
        let x2d2 = WittDerivation::basis(&o, [0, 1], 1);
        assert_eq!(witt_bracket(&o, &d1, &x1d1), d1);
        assert_eq!(
            witt_bracket(&o, &x1d1, &x2d2),
            WittDerivation::new(vec![0; 9], vec![0; 9])
        );
        let x1x2d2 = WittDerivation::basis(&o, [1, 1], 1);
        assert_eq!(witt_bracket(&o, &d1, &x1x2d2), x2d2);
    }

    #[test]
    fn twisted_action_examples() {
        let o = o11(3);
        let d1 = WittDerivation::basis(&o, [0, 0], 0);
        let x1d1 = WittDerivation::basis(&o, [1, 0], 0);
        for alpha in 0..3 {
            assert_eq!(twisted_action(&o, &d1, &o.monomial([1, 0]), alpha), o.one());
        }
        assert_eq!(twisted_action(&o, &x1d1, &o.one(), 1), o.one());
        assert_eq!(twisted_action(&o, &x1d1, &o.one(), 0), vec![0; 9]);
    }

    #[test]
    fn o_bracket_examples() {
        let o = o11(3);
        let one = o.one();
        assert_eq!(
            o_bracket(&o, &one, &o.monomial([0, 1])),
            WittDerivation::basis(&o, [0, 0], 0)
        );
        // (x1 ∂1(1) - 1 ∂1(x1)) ∂2 = -∂2
        let minus_d2 = WittDerivation::new(vec![0; 9], o.scale(&o.one(), 2));
        assert_eq!(o_bracket(&o, &one, &o.monomial([1, 0])), minus_d2);
        let f = o.monomial([1, 1]);
        assert_eq!(
            o_bracket(&o, &f, &f),
            WittDerivation::new(vec![0; 9], vec![0; 9])
        );
    }

    #[test]
    fn twisted_module_axiom() {
        let o = o11(3);
        let m = o.dim();
        for alpha in 0..3 {
            for a in 0..2 * m {
                let d = WittDerivation::basis(&o, o.exponent(a % m), a / m);
                for b in 0..2 * m {
                    let e = WittDerivation::basis(&o, o.exponent(b % m), b / m);
                    let de = witt_bracket(&o, &d, &e);
                    for k in 0..m {
                        let f = o.monomial(o.exponent(k));
                        let left = twisted_action(&o, &de, &f, alpha);
                        let right = o.sub(
                            &twisted_action(&o, &d, &twisted_action(&o, &e, &f, alpha), alpha),
                            &twisted_action(&o, &e, &twisted_action(&o, &d, &f, alpha), alpha),
                        );
                        assert_eq!(left, right);
                    }
                }
            }
        }
    }

    #[test]
    fn er11_structure() {
        let er = Ermolaev::build(1, 1, 3).unwrap();
        assert_eq!(er.algebra().dim(), 27);
        let derived = er.derived();
        assert_eq!(derived.dim(), 26);
        assert_eq!(derived.space(), &er.witt_plus_o_prime());
        assert_eq!(er.algebra().label(0), "d1");
        assert_eq!(er.algebra().label(26), "x1^(2)x2^(2)");
    }

    #[test]
    fn o_prime_examples() {
        let o = o11(3);
        let s = o_prime_submodule(&o, 1);
        assert_eq!(s.dim(), 8);
        assert!(s.contains(&o.one()));
        assert!(s.basis().iter().all(|v| v[o.top()] == 0));
        let plain = o_prime_submodule(&o, 0);
        assert_eq!(plain, Subspace::from_vectors(o.field(), 9, [o.one()]));
    }

    #[test]
    fn o_brackets_land_in_witt_part() {
        let er = ErmolaevTable::build(1, 1, 3, 1).unwrap();
        let w = er.witt_dim();
        for i in w..er.dim() {
            for j in w..er.dim() {
                assert!(er.table().product(i, j).iter().all(|&(k, _)| k < w));
            }
            for j in 0..w {
                assert!(er.table().product(j, i).iter().all(|&(k, _)| k >= w));
            }
        }
    }

    #[test]
    fn jacobi_defect_by_characteristic() {
        assert!(jacobi_defect(3).unwrap().is_zero);
        for p in [5, 7] {
            let d = jacobi_defect(p).unwrap();
            assert!(!d.is_zero);
            let f = PrimeField::new(p).unwrap();
            assert_eq!(d.euler_multiple, Some(f.reduce_i64(-3)));
        }
        assert!(matches!(
            Ermolaev::build(1, 1, 5),
            Err(CartanError::NotLie { p: 5, .. })
        ));
    }

    #[test]
    fn witt_profile_matches_monomial_count() {
        assert_eq!(
            witt_profile(&o11(3)),
            vec![(-1, 2), (0, 4), (1, 6), (2, 4), (3, 2)]
        );
    }
}
