//! Root systems of finite type and integral Chevalley bases.
//!
//! Simple roots follow the Bourbaki numbering. Positive roots are listed by
//! height, and within one height in decreasing lexicographic order of their
//! coefficient vectors, so the simple roots come first as `α1, α2, ...`.
//!
//! Structure constants are computed over ℤ with a fixed extraspecial-pair
//! sign convention: for every non-simple positive root ξ, the pair (α, ξ-α)
//! with α the earliest root in the ordering gets `N = +(r+1)`. All other
//! constants follow from the Chevalley relations. The convention is tagged
//! [`SIGN_CONVENTION`] in every emitted table.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::ffalg::PrimeField;
use crate::liecore::{LieAlgebra, LieError, StructureTable};

/// Version tag of the structure-constant sign convention.
pub const SIGN_CONVENTION: &str = "extraspecial-plus/v1";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootDataError {
    #[error("unsupported Cartan type `{0}`")]
    UnsupportedType(String),
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
}

/// Finite Cartan types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl CartanType {
    pub fn rank(self) -> usize {
        match self {
            CartanType::A(n)
            | CartanType::B(n)
            | CartanType::C(n)
            | CartanType::D(n)
            | CartanType::E(n) => n,
            CartanType::F4 => 4,
            CartanType::G2 => 2,
        }
    }

    fn validate(self) -> Result<Self, RootDataError> {
        let ok = match self {
            CartanType::A(n) => n >= 1,
            CartanType::B(n) => n >= 2,
            CartanType::C(n) => n >= 2,
            CartanType::D(n) => n >= 4,
            CartanType::E(n) => (6..=8).contains(&n),
            CartanType::F4 | CartanType::G2 => true,
        };
        if ok {
            Ok(self)
        } else {
            Err(RootDataError::UnsupportedType(self.to_string()))
        }
    }

    /// Inner products of the simple roots, scaled so short roots have norm 2.
    fn gram(self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut g = vec![vec![0i64; n]; n];
        let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match self {
            CartanType::A(_) => {
                for i in 0..n {
                    g[i][i] = 2;
                    if i + 1 < n {
                        link(&mut g, i, i + 1, -1);
                    }
                }
            }
            CartanType::B(_) => {
                // α1..α(n-1) long, αn short
                for i in 0..n {
                    g[i][i] = if i + 1 < n { 4 } else { 2 };
                    if i + 1 < n {
                        link(&mut g, i, i + 1, -2);
                    }
                }
            }
            CartanType::C(_) => {
                // α1..α(n-1) short, αn long
                for i in 0..n {
                    g[i][i] = if i + 1 < n { 2 } else { 4 };
                    if i + 1 < n {
                        link(&mut g, i, i + 1, if i + 2 == n { -2 } else { -1 });
                    }
                }
            }
            CartanType::D(_) => {
                for (i, row) in g.iter_mut().enumerate() {
                    row[i] = 2;
                }
                for i in 0..n - 2 {
                    link(&mut g, i, i + 1, -1);
                }
                link(&mut g, n - 3, n - 1, -1);
            }
            CartanType::E(_) => {
                for (i, row) in g.iter_mut().enumerate() {
                    row[i] = 2;
                }
                link(&mut g, 0, 2, -1);
                link(&mut g, 1, 3, -1);
                for i in 2..n - 1 {
                    link(&mut g, i, i + 1, -1);
                }
            }
            CartanType::F4 => {
                g[0][0] = 4;
                g[1][1] = 4;
                g[2][2] = 2;
                g[3][3] = 2;
                link(&mut g, 0, 1, -2);
                link(&mut g, 1, 2, -2);
                link(&mut g, 2, 3, -1);
            }
            CartanType::G2 => {
                // α1 short, α2 long
                g[0][0] = 2;
                g[1][1] = 6;
                link(&mut g, 0, 1, -3);
            }
        }
        g
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::B(n) => write!(f, "B{n}"),
            CartanType::C(n) => write!(f, "C{n}"),
            CartanType::D(n) => write!(f, "D{n}"),
            CartanType::E(n) => write!(f, "E{n}"),
            CartanType::F4 => write!(f, "F4"),
            CartanType::G2 => write!(f, "G2"),
        }
    }
}

impl FromStr for CartanType {
    type Err = RootDataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || RootDataError::UnsupportedType(s.to_string());
        let mut chars = s.chars();
        let family = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let n: usize = chars.as_str().parse().map_err(|_| bad())?;
        let t = match (family, n) {
            ('A', n) => CartanType::A(n),
            ('B', n) => CartanType::B(n),
            ('C', n) => CartanType::C(n),
            ('D', n) => CartanType::D(n),
            ('E', n) => CartanType::E(n),
            ('F', 4) => CartanType::F4,
            ('G', 2) => CartanType::G2,
            _ => return Err(bad()),
        };
        t.validate()
    }
}

/// A root as its coefficient vector over the simple roots.
pub type Root = Vec<i64>;

fn neg(r: &[i64]) -> Root {
    r.iter().map(|x| -x).collect()
}

fn add(a: &[i64], b: &[i64]) -> Root {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn is_positive(r: &[i64]) -> bool {
    r.iter().all(|&x| x >= 0)
}

/// Compact label such as `2342`, separated by dots if a coefficient exceeds 9.
pub fn root_label(r: &[i64]) -> String {
    if r.iter().all(|&x| (0..=9).contains(&x)) {
        r.iter().map(|x| x.to_string()).collect()
    } else {
        r.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }
}

/// Root system data for one Cartan type.
#[derive(Clone, Debug)]
pub struct RootDatum {
    cartan_type: CartanType,
    gram: Vec<Vec<i64>>,
    positive: Vec<Root>,
    positive_index: HashMap<Root, usize>,
}

impl RootDatum {
    pub fn new(cartan_type: CartanType) -> Result<Self, RootDataError> {
        let cartan_type = cartan_type.validate()?;
        let gram = cartan_type.gram();
        let n = cartan_type.rank();
        let simple: Vec<Root> = (0..n)
            .map(|i| {
                let mut r = vec![0; n];
                r[i] = 1;
                r
            })
            .collect();

        let mut datum = RootDatum {
            cartan_type,
            gram,
            positive: Vec::new(),
            positive_index: HashMap::new(),
        };
        // closure of the simple roots under simple reflections
        let mut seen: HashSet<Root> = simple.iter().cloned().collect();
        let mut queue: VecDeque<Root> = simple.iter().cloned().collect();
        while let Some(r) = queue.pop_front() {
            for i in 0..n {
                let s = datum.reflect(i, &r);
                if seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        let mut positive: Vec<Root> = seen.into_iter().filter(|r| is_positive(r)).collect();
        positive.sort_by(|a, b| {
            let (ha, hb): (i64, i64) = (a.iter().sum(), b.iter().sum());
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        datum.positive_index = positive
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, r)| (r, i))
            .collect();
        datum.positive = positive;
        Ok(datum)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    /// `(a, b)` for the invariant form scaled so that short roots have norm 2.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                s += x * y * self.gram[i][j];
            }
        }
        s
    }

    pub fn norm(&self, a: &[i64]) -> i64 {
        self.inner(a, a)
    }

    /// `<a, α_i^∨> = 2(a, α_i)/(α_i, α_i)`.
    pub fn pairing(&self, a: &[i64], i: usize) -> i64 {
        let s: i64 = a
            .iter()
            .enumerate()
            .map(|(j, &x)| x * self.gram[j][i])
            .sum();
        2 * s / self.gram[i][i]
    }

    fn reflect(&self, i: usize, r: &[i64]) -> Root {
        let c = self.pairing(r, i);
        let mut s = r.to_vec();
        s[i] -= c;
        s
    }

    /// Cartan matrix with entries `<α_j, α_i^∨>` in row `i`, column `j`
    /// (so `a_{23} = -2` for F4).
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| 2 * self.gram[j][i] / self.gram[j][j])
                    .collect()
            })
            .collect()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// Positive roots followed by their negatives.
    pub fn all_roots(&self) -> Vec<Root> {
        self.positive
            .iter()
            .cloned()
            .chain(self.positive.iter().map(|r| neg(r)))
            .collect()
    }

    pub fn positive_root_index(&self, r: &[i64]) -> Option<usize> {
        self.positive_index.get(r).copied()
    }

    pub fn is_root(&self, r: &[i64]) -> bool {
        self.positive_index.contains_key(r) || self.positive_index.contains_key(&neg(r))
    }

    pub fn height(r: &[i64]) -> i64 {
        r.iter().sum()
    }

    pub fn highest_root(&self) -> &Root {
        self.positive.last().expect("root systems are nonempty")
    }

    /// Largest `r` with `b - r a` a root.
    fn string_below(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut r = 0;
        let mut cur = b.to_vec();
        loop {
            cur = cur.iter().zip(a).map(|(x, y)| x - y).collect();
            if self.is_root(&cur) {
                r += 1;
            } else {
                return r;
            }
        }
    }

    /// Coefficients of the coroot `h_α` on the simple coroots `h_i`.
    pub fn coroot_coefficients(&self, a: &[i64]) -> Vec<i64> {
        let na = self.norm(a);
        a.iter()
            .enumerate()
            .map(|(i, &c)| c * self.gram[i][i] / na)
            .collect()
    }
}

/// An integral structure table: `[b_i, b_j] = Σ_k c_ij^k b_k`, stored sparsely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerTable {
    dim: usize,
    products: Vec<Vec<(usize, i64)>>,
}

impl IntegerTable {
    pub fn zero(dim: usize) -> Self {
        IntegerTable {
            dim,
            products: vec![Vec::new(); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn product(&self, i: usize, j: usize) -> &[(usize, i64)] {
        &self.products[i * self.dim + j]
    }

    fn set(&mut self, i: usize, j: usize, terms: Vec<(usize, i64)>) {
        let mut terms: Vec<_> = terms.into_iter().filter(|&(_, c)| c != 0).collect();
        terms.sort_unstable();
        self.products[i * self.dim + j] = terms;
    }

    fn bracket_sparse(&self, i: usize, v: &HashMap<usize, i64>) -> HashMap<usize, i64> {
        let mut out: HashMap<usize, i64> = HashMap::new();
        for (&j, &c) in v {
            for &(k, d) in self.product(i, j) {
                *out.entry(k).or_insert(0) += c * d;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.dim).all(|i| {
            (i..self.dim).all(|j| {
                let ij = self.product(i, j);
                let ji = self.product(j, i);
                ij.len() == ji.len() && ij.iter().zip(ji).all(|(a, b)| a.0 == b.0 && a.1 == -b.1)
            })
        })
    }

    /// First basis triple `i < j < k` violating the Jacobi identity over ℤ.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut total: HashMap<usize, i64> = HashMap::new();
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let inner: HashMap<usize, i64> =
                            self.product(b, c).iter().copied().collect();
                        for (idx, v) in self.bracket_sparse(a, &inner) {
                            *total.entry(idx).or_insert(0) += v;
                        }
                    }
                    if total.values().any(|&v| v != 0) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Reduce every constant mod p.
    pub fn reduce_mod(&self, field: PrimeField, labels: Vec<String>) -> StructureTable {
        let mut t = StructureTable::zero(field, labels);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let terms: Vec<(usize, u8)> = self
                    .product(i, j)
                    .iter()
                    .map(|&(k, c)| (k, field.reduce_i64(c)))
                    .collect();
                t.set_product(i, j, &terms);
            }
        }
        t
    }
}

/// Which kind of Chevalley basis vector a label names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BasisTag {
    /// `e_α` for the positive root with this index.
    Positive(usize),
    /// `f_α = e_{-α}` for the positive root with this index.
    Negative(usize),
    /// `h_i` for simple root `i`.
    Cartan(usize),
}

/// A Chevalley basis with its integral structure constants.
///
/// Basis order: `e_α` for positive α, then `f_α` in the same order, then
/// `h_1..h_rank`.
#[derive(Clone, Debug)]
pub struct ChevalleyBasis {
    datum: RootDatum,
    labels: Vec<String>,
    table: IntegerTable,
}

impl ChevalleyBasis {
    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn table(&self) -> &IntegerTable {
        &self.table
    }

    pub fn index_of_label(&self, label: &str) -> Result<usize, RootDataError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| RootDataError::UnknownLabel(label.to_string()))
    }

    pub fn tag(&self, index: usize) -> BasisTag {
        let n = self.datum.positive.len();
        if index < n {
            BasisTag::Positive(index)
        } else if index < 2 * n {
            BasisTag::Negative(index - n)
        } else {
            BasisTag::Cartan(index - 2 * n)
        }
    }

    /// Root of a basis vector (`None` for Cartan elements).
    pub fn root_of(&self, index: usize) -> Option<Root> {
        match self.tag(index) {
            BasisTag::Positive(i) => Some(self.datum.positive[i].clone()),
            BasisTag::Negative(i) => Some(neg(&self.datum.positive[i])),
            BasisTag::Cartan(_) => None,
        }
    }

    /// Basis index of `e_r` for any root `r`.
    pub fn root_vector_index(&self, r: &[i64]) -> Option<usize> {
        let n = self.datum.positive.len();
        if let Some(i) = self.datum.positive_root_index(r) {
            Some(i)
        } else {
            self.datum.positive_root_index(&neg(r)).map(|i| n + i)
        }
    }

    /// Structure constant `N_{α,β}` (zero when α+β is not a root).
    pub fn n_constant(&self, a: &[i64], b: &[i64]) -> i64 {
        let (Some(i), Some(j)) = (self.root_vector_index(a), self.root_vector_index(b)) else {
            return 0;
        };
        let sum = add(a, b);
        match self.root_vector_index(&sum) {
            Some(k) => self
                .table
                .product(i, j)
                .iter()
                .find(|&&(idx, _)| idx == k)
                .map_or(0, |&(_, c)| c),
            None => 0,
        }
    }

    /// Reduce the table mod p and validate it as a Lie algebra.
    pub fn reduce_mod_p(&self, field: PrimeField) -> Result<LieAlgebra, LieError> {
        LieAlgebra::new(self.table.reduce_mod(field, self.labels.clone()))
    }
}

type Q = Ratio<i64>;

struct ConstantBuilder<'a> {
    datum: &'a RootDatum,
    positive_pairs: HashMap<(usize, usize), i64>,
}

impl ConstantBuilder<'_> {
    fn n_positive(&self, a: &[i64], b: &[i64]) -> Q {
        let i = self.datum.positive_index[a];
        let j = self.datum.positive_index[b];
        Q::from_integer(
            *self
                .positive_pairs
                .get(&(i, j))
                .expect("constants for lower sums are filled first"),
        )
    }

    /// `N_{a,b}` for arbitrary roots with `a + b` a root, reduced to positive pairs
    /// through `N_{-a,-b} = -N_{a,b}` and the cyclic relation for `a + b + c = 0`.
    fn n_any(&self, a: &[i64], b: &[i64]) -> Q {
        let d = self.datum;
        match (is_positive(a), is_positive(b)) {
            (true, true) => self.n_positive(a, b),
            (false, false) => -self.n_any(&neg(a), &neg(b)),
            (true, false) => {
                let s = add(a, b);
                if is_positive(&s) {
                    // a + b + (-s) = 0:  N_{a,b}/(s,s) = N_{b,-s}/(a,a) = -N_{-b,s}/(a,a)
                    -Q::new(d.norm(&s), d.norm(a)) * self.n_any(&neg(b), &s)
                } else {
                    // c = -s > 0:  N_{a,b}/(c,c) = N_{c,a}/(b,b)
                    let c = neg(&s);
                    Q::new(d.norm(&c), d.norm(b)) * self.n_any(&c, a)
                }
            }
            (false, true) => -self.n_any(b, a),
        }
    }

    fn build(mut self) -> HashMap<(usize, usize), i64> {
        let d = self.datum;
        let pos = &d.positive;
        for (xi_index, xi) in pos.iter().enumerate() {
            if RootDatum::height(xi) == 1 {
                continue;
            }
            let mut pairs: Vec<(usize, usize)> = Vec::new();
            for (i, a) in pos.iter().enumerate().take(xi_index) {
                let b: Root = xi.iter().zip(a).map(|(x, y)| x - y).collect();
                if let Some(j) = d.positive_root_index(&b) {
                    if i < j {
                        pairs.push((i, j));
                    }
                }
            }
            pairs.sort_unstable();
            let (ei, ej) = pairs[0];
            let (ea, eb) = (pos[ei].clone(), pos[ej].clone());
            let extra = d.string_below(&ea, &eb) + 1;
            self.positive_pairs.insert((ei, ej), extra);
            self.positive_pairs.insert((ej, ei), -extra);
            let xi_norm = d.norm(xi);
            for &(i, j) in &pairs[1..] {
                let (a, b) = (&pos[i], &pos[j]);
                let mut total = Q::from_integer(0);
                let b_minus = add(b, &neg(&ea));
                if d.is_root(&b_minus) {
                    total += self.n_any(b, &neg(&ea)) * self.n_any(a, &neg(&eb))
                        / Q::from_integer(d.norm(&b_minus));
                }
                let a_minus = add(a, &neg(&ea));
                if d.is_root(&a_minus) {
                    total += self.n_any(&neg(&ea), a) * self.n_any(b, &neg(&eb))
                        / Q::from_integer(d.norm(&a_minus));
                }
                let value = total * Q::from_integer(xi_norm) / Q::from_integer(extra);
                assert!(value.is_integer(), "non-integral structure constant");
                let v = value.to_integer();
                self.positive_pairs.insert((i, j), v);
                self.positive_pairs.insert((j, i), -v);
            }
        }
        self.positive_pairs
    }
}

/// Build the root datum for a type label such as `"F4"`.
pub fn build_root_datum(label: &str) -> Result<RootDatum, RootDataError> {
    RootDatum::new(label.parse()?)
}

/// Chevalley basis and integral structure constants for a root datum.
pub fn chevalley_structure_constants(datum: &RootDatum) -> ChevalleyBasis {
    let n = datum.positive.len();
    let rank = datum.rank();
    let dim = 2 * n + rank;
    let pairs = ConstantBuilder {
        datum,
        positive_pairs: HashMap::new(),
    }
    .build();
    let builder = ConstantBuilder {
        datum,
        positive_pairs: pairs,
    };

    let mut labels = Vec::with_capacity(dim);
    labels.extend(datum.positive.iter().map(|r| format!("e{}", root_label(r))));
    labels.extend(datum.positive.iter().map(|r| format!("f{}", root_label(r))));
    labels.extend((1..=rank).map(|i| format!("h{i}")));

    let roots = datum.all_roots();
    let index_of = |r: &[i64]| -> usize {
        datum
            .positive_root_index(r)
            .unwrap_or_else(|| n + datum.positive_index[&neg(r)])
    };

    let mut table = IntegerTable::zero(dim);
    for a in &roots {
        let ia = index_of(a);
        for b in &roots {
            let ib = index_of(b);
            let s = add(a, b);
            if s.iter().all(|&x| x == 0) {
                let (sign, base) = if is_positive(a) {
                    (1, a.clone())
                } else {
                    (-1, b.clone())
                };
                let terms = datum
                    .coroot_coefficients(&base)
                    .into_iter()
                    .enumerate()
                    .map(|(i, c)| (2 * n + i, sign * c))
                    .collect();
                table.set(ia, ib, terms);
            } else if datum.is_root(&s) {
                let c = builder.n_any(a, b);
                assert!(c.is_integer());
                table.set(ia, ib, vec![(index_of(&s), c.to_integer())]);
            }
        }
        for i in 0..rank {
            let c = datum.pairing(a, i);
            table.set(2 * n + i, ia, vec![(ia, c)]);
            table.set(ia, 2 * n + i, vec![(ia, -c)]);
        }
    }
    ChevalleyBasis {
        datum: datum.clone(),
        labels,
        table,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_two_closures() {
        let a2 = build_root_datum("A2").unwrap();
        assert_eq!(a2.positive_roots(), &[vec![1, 0], vec![0, 1], vec![1, 1]]);
        let a1 = build_root_datum("A1").unwrap();
        assert_eq!(a1.positive_roots().len(), 1);
        assert_eq!(build_root_datum("B2").unwrap().positive_roots().len(), 4);
        let g2 = build_root_datum("G2").unwrap();
        assert_eq!(g2.positive_roots().len(), 6);
        assert_eq!(g2.highest_root(), &vec![3, 2]);
    }

    #[test]
    fn f4_roots() {
        let f4 = build_root_datum("F4").unwrap();
        assert_eq!(f4.positive_roots().len(), 24);
        assert_eq!(f4.highest_root(), &vec![2, 3, 4, 2]);
        assert_eq!(
            &f4.positive_roots()[..4],
            &[
                vec![1, 0, 0, 0],
                vec![0, 1, 0, 0],
                vec![0, 0, 1, 0],
                vec![0, 0, 0, 1]
            ]
        );
        assert_eq!(f4.cartan_matrix()[1][2], -2);
        assert_eq!(f4.cartan_matrix()[2][1], -1);
        for r in [
            "0120", "1232", "1222", "1242", "0111", "1110", "0121", "1120", "1231",
        ] {
            let v: Root = r.chars().map(|c| c.to_digit(10).unwrap() as i64).collect();
            assert!(f4.positive_root_index(&v).is_some(), "{r} should be a root");
        }
        let all = f4.all_roots();
        assert_eq!(all.len(), 48);
        assert!(all.iter().all(|r| f4.is_root(&neg(r))));
    }

    #[test]
    fn unsupported_types() {
        assert!(build_root_datum("F5").is_err());
        assert!(build_root_datum("E9").is_err());
        assert!(build_root_datum("D3").is_err());
        assert!(build_root_datum("").is_err());
    }

    #[test]
    fn sl2_relations() {
        let cb = chevalley_structure_constants(&build_root_datum("A1").unwrap());
        assert_eq!(cb.labels(), &["e1", "f1", "h1"]);
        let t = cb.table();
        assert_eq!(t.product(0, 1), &[(2, 1)]);
        assert_eq!(t.product(2, 0), &[(0, 2)]);
        assert_eq!(t.product(2, 1), &[(1, -2)]);
    }

    #[test]
    fn a2_constants_have_unit_magnitude() {
        let rd = build_root_datum("A2").unwrap();
        let cb = chevalley_structure_constants(&rd);
        assert_eq!(cb.n_constant(&[1, 0], &[0, 1]).abs(), 1);
        assert_eq!(cb.n_constant(&[1, 0], &[0, 1]), 1);
    }

    fn check_type(label: &str) {
        let rd = build_root_datum(label).unwrap();
        let cb = chevalley_structure_constants(&rd);
        assert_eq!(cb.dim(), rd.all_roots().len() + rd.rank());
        let t = cb.table();
        assert!(t.is_antisymmetric(), "{label}");
        assert_eq!(t.jacobi_violation(), None, "{label}");
        // |N_{a,b}| = r + 1, zero exactly off the root system
        let roots = rd.all_roots();
        for a in &roots {
            for b in &roots {
                let s = add(a, b);
                let n = cb.n_constant(a, b);
                if rd.is_root(&s) {
                    assert_eq!(n.abs(), rd.string_below(a, b) + 1, "{label} {a:?} {b:?}");
                } else {
                    assert_eq!(n, 0);
                }
            }
        }
    }

    #[test]
    fn chevalley_tables_satisfy_jacobi() {
        for label in ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4", "F4"] {
            check_type(label);
        }
    }
}
