//! Integer gradings: cocharacter gradings of Chevalley algebras, graded
//! subalgebras, regrading through a degree table, sl2 triples and the
//! hypothesis checklists for depth-one recognition.

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::ffalg::{solve_simultaneous, FfError, Matrix, PrimeField, Subspace};
use crate::liecore::{LieAlgebra, LieError, Subalgebra};
use crate::modrep::{MatrixRepresentation, ModRepError};
use crate::rootdata::{BasisTag, ChevalleyBasis, RootDatum};

/// Largest `p^d` searched for `h` in [`find_sl2_triple`].
pub const SL2_SEARCH_LIMIT: u128 = 59_049;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GradingError {
    #[error("the cocharacter equations are inconsistent")]
    InconsistentCocharacter,
    #[error("the cocharacter solution {0:?} is not integral")]
    NonIntegral(Vec<String>),
    #[error("subspace is not homogeneous: graded pieces have total dimension {graded}, expected {expected}")]
    NotHomogeneous { graded: usize, expected: usize },
    #[error("graded components are not independent")]
    NotDirect,
    #[error("ker(ad e) ∩ L(4) has dimension {0}, expected 1")]
    KernelDimension(usize),
    #[error("no new degree assigned to component of degree {0}")]
    MissingTableEntry(i64),
    #[error("induced degrees are ill-defined: {0}")]
    IllDefined(String),
    #[error("search space of size {0} exceeds the cap")]
    SearchCap(u128),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Module(#[from] ModRepError),
    #[error(transparent)]
    Field(#[from] FfError),
}

/// Weights `(t_1, ..., t_r)` on the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cocharacter {
    pub weights: Vec<i64>,
}

impl Cocharacter {
    pub fn new(weights: Vec<i64>) -> Self {
        Cocharacter { weights }
    }

    pub fn root_degree(&self, root: &[i64]) -> i64 {
        root.iter().zip(&self.weights).map(|(c, t)| c * t).sum()
    }

    /// Degree of each Chevalley basis vector: `e_α ↦ ⟨α,τ⟩`, `f_α ↦ -⟨α,τ⟩`, `h_i ↦ 0`.
    pub fn basis_degrees(&self, basis: &ChevalleyBasis) -> Vec<i64> {
        (0..basis.dim())
            .map(|i| match basis.tag(i) {
                BasisTag::Cartan(_) => 0,
                _ => self.root_degree(&basis.root_of(i).expect("root vector")),
            })
            .collect()
    }

    pub fn grading(&self, basis: &ChevalleyBasis, field: PrimeField) -> Grading {
        Grading::from_basis_degrees(field, &self.basis_degrees(basis))
    }
}

/// Solutions of `⟨α, t⟩ = target` for the given roots, over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CocharacterSolution {
    Unique(Cocharacter),
    Underdetermined {
        particular: Vec<Ratio<i64>>,
        directions: Vec<Vec<Ratio<i64>>>,
    },
}

pub fn derive_cocharacter(
    datum: &RootDatum,
    roots: &[Vec<i64>],
    target: i64,
) -> Result<CocharacterSolution, GradingError> {
    let r = datum.rank();
    let mut rows: Vec<Vec<Ratio<i64>>> = roots
        .iter()
        .map(|a| {
            let mut row: Vec<Ratio<i64>> = a.iter().map(|&c| Ratio::from_integer(c)).collect();
            row.push(Ratio::from_integer(target));
            row
        })
        .collect();
    // reduced row echelon form over Q
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..r {
        let Some(pr) = (next..rows.len()).find(|&i| rows[i][col] != Ratio::from_integer(0)) else {
            continue;
        };
        rows.swap(next, pr);
        let lead = rows[next][col];
        for x in rows[next].iter_mut() {
            *x /= lead;
        }
        for i in 0..rows.len() {
            if i != next && rows[i][col] != Ratio::from_integer(0) {
                let c = rows[i][col];
                let pivot_row = rows[next].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot_row) {
                    *x -= c * y;
                }
            }
        }
        pivots.push(col);
        next += 1;
    }
    if rows[next..]
        .iter()
        .any(|row| row[r] != Ratio::from_integer(0))
    {
        return Err(GradingError::InconsistentCocharacter);
    }
    let mut particular = vec![Ratio::from_integer(0); r];
    for (row, &c) in rows.iter().zip(&pivots) {
        particular[c] = row[r];
    }
    if pivots.len() == r {
        if particular.iter().any(|x| !x.is_integer()) {
            return Err(GradingError::NonIntegral(
                particular.iter().map(|x| x.to_string()).collect(),
            ));
        }
        return Ok(CocharacterSolution::Unique(Cocharacter::new(
            particular.iter().map(|x| x.to_integer()).collect(),
        )));
    }
    let directions = (0..r)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut d = vec![Ratio::from_integer(0); r];
            d[free] = Ratio::from_integer(1);
            for (row, &c) in rows.iter().zip(&pivots) {
                d[c] = -row[free];
            }
            d
        })
        .collect();
    Ok(CocharacterSolution::Underdetermined {
        particular,
        directions,
    })
}

/// The same system over GF(p), as a cross-check of [`derive_cocharacter`].
pub fn cocharacter_mod_p(
    field: PrimeField,
    roots: &[Vec<i64>],
    target: i64,
) -> Result<Option<Vec<u8>>, GradingError> {
    let r = roots.first().map_or(0, Vec::len);
    let constraints: Vec<(Matrix, Vec<u8>)> = roots
        .iter()
        .map(|a| {
            Ok((
                Matrix::from_i64_rows(field, std::slice::from_ref(a))?,
                vec![field.reduce_i64(target)],
            ))
        })
        .collect::<Result<_, FfError>>()?;
    let sol = solve_simultaneous(field, r, &constraints)?;
    Ok(sol.unique().map(<[u8]>::to_vec))
}

/// A direct-sum decomposition into subspaces indexed by integer degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    field: PrimeField,
    ambient: usize,
    components: BTreeMap<i64, Subspace>,
}

impl Grading {
    /// Grading in which basis vector `i` has degree `degrees[i]`.
    pub fn from_basis_degrees(field: PrimeField, degrees: &[i64]) -> Self {
        let n = degrees.len();
        let mut components: BTreeMap<i64, Subspace> = BTreeMap::new();
        for (i, &d) in degrees.iter().enumerate() {
            let mut v = vec![0u8; n];
            v[i] = 1;
            components
                .entry(d)
                .or_insert_with(|| Subspace::zero(field, n))
                .insert(&v);
        }
        Grading {
            field,
            ambient: n,
            components,
        }
    }

    /// Build from components, checking that their sum is direct.
    pub fn from_components(
        field: PrimeField,
        ambient: usize,
        components: BTreeMap<i64, Subspace>,
    ) -> Result<Self, GradingError> {
        let components: BTreeMap<i64, Subspace> = components
            .into_iter()
            .filter(|(_, s)| !s.is_zero())
            .collect();
        let g = Grading {
            field,
            ambient,
            components,
        };
        let total: usize = g.components.values().map(Subspace::dim).sum();
        if g.space().dim() != total {
            return Err(GradingError::NotDirect);
        }
        Ok(g)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn components(&self) -> &BTreeMap<i64, Subspace> {
        &self.components
    }

    pub fn component(&self, d: i64) -> Subspace {
        self.components
            .get(&d)
            .cloned()
            .unwrap_or_else(|| Subspace::zero(self.field, self.ambient))
    }

    pub fn dim_of(&self, d: i64) -> usize {
        self.components.get(&d).map_or(0, Subspace::dim)
    }

    /// `(degree, dimension)` for every nonzero component, ascending.
    pub fn profile(&self) -> Vec<(i64, usize)> {
        self.components.iter().map(|(&d, s)| (d, s.dim())).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.components.values().map(Subspace::dim).sum()
    }

    /// The graded space, i.e. the sum of all components.
    pub fn space(&self) -> Subspace {
        let mut s = Subspace::zero(self.field, self.ambient);
        for c in self.components.values() {
            for v in c.basis() {
                s.insert(v);
            }
        }
        s
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.components.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.components.keys().next_back().copied()
    }

    /// `-min_degree`, so a grading starting in degree -1 has depth 1.
    pub fn depth(&self) -> i64 {
        -self.min_degree().unwrap_or(0)
    }

    /// Degree of a nonzero homogeneous vector.
    pub fn degree_of(&self, v: &[u8]) -> Option<i64> {
        if v.iter().all(|&x| x == 0) {
            return None;
        }
        self.components
            .iter()
            .find(|(_, s)| s.contains(v))
            .map(|(&d, _)| d)
    }

    /// Homogeneous basis vectors with their degrees.
    pub fn homogeneous_basis(&self) -> Vec<(i64, Vec<u8>)> {
        self.components
            .iter()
            .flat_map(|(&d, s)| s.basis().iter().map(move |v| (d, v.clone())))
            .collect()
    }

    /// Induced grading on a subspace, which must be spanned by its homogeneous pieces.
    pub fn restrict(&self, s: &Subspace) -> Result<Grading, GradingError> {
        let mut comps = BTreeMap::new();
        for (&d, c) in &self.components {
            let piece = c.intersect(s)?;
            if !piece.is_zero() {
                comps.insert(d, piece);
            }
        }
        let g = Grading {
            field: self.field,
            ambient: self.ambient,
            components: comps,
        };
        if g.total_dim() != s.dim() {
            return Err(GradingError::NotHomogeneous {
                graded: g.total_dim(),
                expected: s.dim(),
            });
        }
        Ok(g)
    }

    /// First pair of degrees `(i, j)` with `[G_i, G_j] ⊄ G_{i+j}`.
    pub fn axiom_violation(&self, alg: &LieAlgebra) -> Option<(i64, i64)> {
        for (&i, a) in &self.components {
            for (&j, b) in self.components.range(i..) {
                let target = self.component(i + j);
                for x in a.basis() {
                    for y in b.basis() {
                        if !target.contains(&alg.bracket(x, y)) {
                            return Some((i, j));
                        }
                    }
                }
            }
        }
        None
    }
}

/// `w`, `V = span(w) + [W, w]` and its graded pieces.
#[derive(Clone, Debug)]
pub struct VDecomposition {
    pub w: Vec<u8>,
    pub kernel_dim: usize,
    pub space: Subspace,
    pub components: BTreeMap<i64, Subspace>,
    /// `W ∩ V = 0` and `W + V = L`.
    pub complements_w: bool,
    /// `span{[u, v] : u, v ∈ V}`.
    pub square: Subspace,
}

/// Build `V` from the `τ`-grading of `L` and the subalgebra `W`.
pub fn build_v_decomposition(
    alg: &LieAlgebra,
    l: &Subalgebra,
    w_sub: &Subalgebra,
    l_grading: &Grading,
    e: &[u8],
) -> Result<VDecomposition, GradingError> {
    let kernel = alg
        .centralizer_of_element(e)
        .space()
        .intersect(&l_grading.component(4))?;
    if kernel.dim() != 1 {
        return Err(GradingError::KernelDimension(kernel.dim()));
    }
    let w = kernel.basis()[0].clone();
    let w_grading = l_grading.restrict(w_sub.space())?;
    let mut space = Subspace::from_vectors(alg.field(), alg.dim(), [&w]);
    for (_, x) in w_grading.homogeneous_basis() {
        space.insert(&alg.bracket(&x, &w));
    }
    let v_grading = l_grading.restrict(&space)?;
    let complements_w =
        w_sub.space().is_independent_of(&space)? && w_sub.space().sum(&space)? == *l.space();
    let square = alg.bracket_spaces(&space, &space);
    Ok(VDecomposition {
        w,
        kernel_dim: kernel.dim(),
        space,
        components: v_grading.components().clone(),
        complements_w,
        square,
    })
}

/// The regraded `L` together with the induced grading on `W`.
#[derive(Clone, Debug)]
pub struct Regrading {
    pub grading: Grading,
    pub w_grading: Grading,
    pub v_grading: Grading,
}

/// Assign `V(τ,i)` the degree `table[i]` and give `[u, v]` the degree
/// `d(u) + d(v)`. The products grouped by degree must decompose `W` directly.
pub fn regrade_by_table(
    alg: &LieAlgebra,
    l_space: &Subspace,
    w_space: &Subspace,
    v: &VDecomposition,
    table: &BTreeMap<i64, i64>,
) -> Result<Regrading, GradingError> {
    let f = alg.field();
    let n = alg.dim();
    let mut v_new: BTreeMap<i64, Subspace> = BTreeMap::new();
    let mut pieces: Vec<(i64, Vec<u8>)> = Vec::new();
    for (&i, comp) in &v.components {
        let d = *table.get(&i).ok_or(GradingError::MissingTableEntry(i))?;
        let entry = v_new.entry(d).or_insert_with(|| Subspace::zero(f, n));
        for x in comp.basis() {
            entry.insert(x);
            pieces.push((d, x.clone()));
        }
    }
    let mut products: BTreeMap<i64, Subspace> = BTreeMap::new();
    for (a, (da, x)) in pieces.iter().enumerate() {
        for (db, y) in &pieces[a + 1..] {
            let z = alg.bracket(x, y);
            if !w_space.contains(&z) {
                return Err(GradingError::IllDefined(format!(
                    "a product of V elements of degrees {da} and {db} leaves W"
                )));
            }
            products
                .entry(da + db)
                .or_insert_with(|| Subspace::zero(f, n))
                .insert(&z);
        }
    }
    let w_grading = Grading::from_components(f, n, products).map_err(|_| {
        GradingError::IllDefined("products of different induced degrees overlap in W".into())
    })?;
    if w_grading.space() != *w_space {
        return Err(GradingError::IllDefined(format!(
            "products span {} of the {} dimensions of W",
            w_grading.total_dim(),
            w_space.dim()
        )));
    }
    let v_grading = Grading::from_components(f, n, v_new)?;
    let mut combined = w_grading.components().clone();
    for (&d, s) in v_grading.components() {
        let entry = combined.entry(d).or_insert_with(|| Subspace::zero(f, n));
        for x in s.basis() {
            entry.insert(x);
        }
    }
    let grading = Grading::from_components(f, n, combined)?;
    if grading.space() != *l_space {
        return Err(GradingError::IllDefined(
            "regraded pieces do not span L".into(),
        ));
    }
    Ok(Regrading {
        grading,
        w_grading,
        v_grading,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    pub e: Vec<u8>,
    pub h: Vec<u8>,
    pub f: Vec<u8>,
}

impl Sl2Triple {
    /// `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`, `h ≠ 0`.
    pub fn holds_in(&self, alg: &LieAlgebra) -> bool {
        let fl = alg.field();
        let two = fl.reduce_i64(2);
        let scale = |v: &[u8], c: u8| -> Vec<u8> { v.iter().map(|&x| fl.mul(x, c)).collect() };
        self.h.iter().any(|&x| x != 0)
            && alg.bracket(&self.h, &self.e) == scale(&self.e, two)
            && alg.bracket(&self.h, &self.f) == scale(&self.f, fl.neg(two))
            && alg.bracket(&self.e, &self.f) == self.h
    }
}

/// Search the derived algebra for `h`, then `e` in the 2-eigenspace and
/// `f` in the -2-eigenspace with `[e, f] = h`.
pub fn find_sl2_triple(alg: &LieAlgebra) -> Result<Option<Sl2Triple>, GradingError> {
    let fl = alg.field();
    let two = fl.reduce_i64(2);
    let derived = Subalgebra::full(alg).derived();
    let d = derived.dim();
    let count = (fl.p() as u128).pow(d as u32);
    if count > SL2_SEARCH_LIMIT {
        return Err(GradingError::SearchCap(count));
    }
    let mut coords = vec![0u8; d];
    for _ in 1..count {
        // next vector in lexicographic order
        for c in coords.iter_mut().rev() {
            *c = (*c + 1) % fl.p() as u8;
            if *c != 0 {
                break;
            }
        }
        let h = derived.lift(&coords);
        let ad = alg.ad_matrix(&h);
        let up = ad.shift(two).kernel();
        let down = ad.shift(fl.neg(two)).kernel();
        if up.is_zero() || down.is_zero() {
            continue;
        }
        for ec in fl.projective_points(up.dim()) {
            let e = up.combination(&ec);
            let cols: Vec<Vec<u8>> = down.basis().iter().map(|b| alg.bracket(&e, b)).collect();
            let m = Matrix::from_columns(fl, alg.dim(), &cols);
            let sol = solve_simultaneous(fl, down.dim(), &[(m, h.clone())])?;
            if let crate::ffalg::LinearSolution::Affine { particular, .. } = sol {
                let f = down.combination(&particular);
                return Ok(Some(Sl2Triple { e, h, f }));
            }
        }
    }
    Ok(None)
}

/// [`find_sl2_triple`] inside a subalgebra, returned in parent coordinates.
pub fn find_sl2_triple_in(s: &Subalgebra) -> Result<Option<Sl2Triple>, GradingError> {
    Ok(find_sl2_triple(&s.to_algebra())?.map(|t| Sl2Triple {
        e: s.lift(&t.e),
        h: s.lift(&t.h),
        f: s.lift(&t.f),
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RecognitionKind {
    /// Depth one, zero component with a non-central nilpotent radical.
    Ermolaev,
    /// Depth one, zero component classical simple modulo its center.
    Witt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisCheck {
    pub name: String,
    pub holds: bool,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroComponentSummary {
    pub dim: usize,
    pub radical_dim: usize,
    pub radical_nilpotent: bool,
    pub radical_central: bool,
    pub center_dim: usize,
    pub quotient_dim: usize,
    pub quotient_is_sl2: bool,
    pub sl2_triple: Option<[String; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecognitionReport {
    pub kind: RecognitionKind,
    pub depth: i64,
    pub component_dims: Vec<(i64, usize)>,
    pub zero_component: ZeroComponentSummary,
    /// Reported, not required: whether `G_{-1}` is irreducible under `G_0`.
    pub minus_one_irreducible: Option<bool>,
    pub checklist: Vec<HypothesisCheck>,
    pub feeds: String,
}

impl RecognitionReport {
    pub fn all_hold(&self) -> bool {
        self.checklist.iter().all(|c| c.holds)
    }

    pub fn check(&self, name: &str) -> Option<&HypothesisCheck> {
        self.checklist.iter().find(|c| c.name == name)
    }
}

fn check(name: &str, holds: bool, witness: impl Into<String>) -> HypothesisCheck {
    HypothesisCheck {
        name: name.to_string(),
        holds,
        witness: witness.into(),
    }
}

/// Collect the hypotheses of a depth-one recognition theorem for a graded
/// subalgebra. Nothing here proves an isomorphism.
pub fn recognition_certificate(
    alg: &LieAlgebra,
    grading: &Grading,
    kind: RecognitionKind,
    reference_profile: &[(i64, usize)],
    seed: u64,
) -> Result<RecognitionReport, GradingError> {
    let whole = Subalgebra::new(alg, grading.space())?;
    let zero = Subalgebra::new(alg, grading.component(0))?;
    let depth = grading.depth();
    let profile = grading.profile();

    let radical = alg.solvable_radical(&zero)?;
    let center = zero.center();
    let radical_central = center.contains_subspace(radical.space());
    let ideal = match kind {
        RecognitionKind::Ermolaev => radical.space().clone(),
        RecognitionKind::Witt => center.clone(),
    };
    let local = zero.to_algebra();
    let local_ideal = Subspace::from_vectors(
        alg.field(),
        zero.dim(),
        ideal.basis().iter().map(|v| {
            zero.local_coordinates(v)
                .expect("ideal lies in the zero component")
        }),
    );
    let quotient = local.quotient(&local_ideal)?;
    let quotient_triple = find_sl2_triple(&quotient.algebra)?;
    let quotient_is_sl2 = quotient.algebra.dim() == 3 && quotient_triple.is_some();
    let triple = find_sl2_triple_in(&zero)?;
    let summary = ZeroComponentSummary {
        dim: zero.dim(),
        radical_dim: radical.dim(),
        radical_nilpotent: radical.is_nilpotent(),
        radical_central,
        center_dim: center.dim(),
        quotient_dim: quotient.algebra.dim(),
        quotient_is_sl2,
        sl2_triple: triple.as_ref().map(|t| {
            [
                alg.format_element(&t.e),
                alg.format_element(&t.h),
                alg.format_element(&t.f),
            ]
        }),
    };

    let minus_one = grading.component(-1);
    let minus_one_irreducible = if minus_one.is_zero() {
        None
    } else {
        let mats: Vec<Matrix> = zero.basis().iter().map(|x| alg.ad_matrix(x)).collect();
        let rep = MatrixRepresentation::new(alg.field(), alg.dim(), mats)?.restrict(&minus_one)?;
        Some(rep.is_irreducible(seed)?.is_irreducible())
    };

    let simple = MatrixRepresentation::adjoint_on_generators(&whole.to_algebra())
        .is_absolutely_irreducible(seed)?;

    let mut checklist = vec![
        check("depth one", depth == 1, format!("lowest degree {}", -depth)),
        check(
            "graded dimensions match the reference",
            profile == reference_profile,
            format!("{profile:?}"),
        ),
    ];
    match kind {
        RecognitionKind::Ermolaev => {
            checklist.push(check(
                "zero component has a nonzero radical",
                summary.radical_dim > 0,
                format!("radical dimension {}", summary.radical_dim),
            ));
            checklist.push(check(
                "radical is nilpotent",
                summary.radical_nilpotent,
                "lower central series reaches 0",
            ));
            checklist.push(check(
                "radical is not central",
                !summary.radical_central,
                format!("center dimension {}", summary.center_dim),
            ));
            checklist.push(check(
                "zero component modulo its radical is sl2",
                summary.quotient_is_sl2,
                format!("quotient dimension {}", summary.quotient_dim),
            ));
        }
        RecognitionKind::Witt => {
            checklist.push(check(
                "zero component has a one-dimensional center",
                summary.center_dim == 1,
                format!("center dimension {}", summary.center_dim),
            ));
            checklist.push(check(
                "zero component modulo its center is sl2",
                summary.quotient_is_sl2,
                format!("quotient dimension {}", summary.quotient_dim),
            ));
            let derived = zero.derived();
            let split = derived.space().is_independent_of(&center)?
                && derived.dim() + center.dim() == zero.dim();
            checklist.push(check(
                "zero component is its derived algebra plus its center",
                split,
                format!("derived dimension {}", derived.dim()),
            ));
        }
    }
    checklist.push(check(
        "zero component contains an sl2 triple",
        triple.as_ref().is_some_and(|t| t.holds_in(alg)),
        summary
            .sl2_triple
            .as_ref()
            .map(|t| t.join(", "))
            .unwrap_or_default(),
    ));
    checklist.push(check(
        "graded algebra is absolutely simple",
        simple.absolutely_irreducible,
        format!("commutant dimension {}", simple.commutant_dim),
    ));
    let feeds = match kind {
        RecognitionKind::Ermolaev => {
            "recognition of depth-one graded simple algebras whose zero component has a non-central nilpotent radical"
        }
        RecognitionKind::Witt => {
            "recognition of depth-one graded simple algebras whose zero component is classical simple modulo its center"
        }
    };
    Ok(RecognitionReport {
        kind,
        depth,
        component_dims: profile,
        zero_component: summary,
        minus_one_irreducible,
        checklist,
        feeds: feeds.to_string(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub bottom_degree: i64,
    pub bottom_dim: usize,
    pub top_degree: i64,
    pub top_dim: usize,
    /// Unequal dimensions rule out `G_bottom ≅ (G_top)*`.
    pub dims_differ: bool,
}

pub fn duality_check(grading: &Grading) -> DualityReport {
    let bottom = grading.min_degree().unwrap_or(0);
    let top = grading.max_degree().unwrap_or(0);
    let (bd, td) = (grading.dim_of(bottom), grading.dim_of(top));
    DualityReport {
        bottom_degree: bottom,
        bottom_dim: bd,
        top_degree: top,
        top_dim: td,
        dims_differ: bd != td,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecore::StructureTable;
    use crate::rootdata::build_root_datum;

    fn sl2(p: u32) -> LieAlgebra {
        let f = PrimeField::new(p).unwrap();
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

    #[test]
    fn cocharacter_for_subregular_representative() {
        let datum = build_root_datum("F4").unwrap();
        let roots = vec![
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 0, 1],
            vec![0, 1, 2, 0],
        ];
        let sol = derive_cocharacter(&datum, &roots, 2).unwrap();
        let tau = Cocharacter::new(vec![2, 2, 0, 2]);
        assert_eq!(sol, CocharacterSolution::Unique(tau.clone()));
        assert_eq!(-tau.root_degree(&[1, 2, 3, 2]), -10);
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(
            cocharacter_mod_p(f3, &roots, 2).unwrap(),
            Some(vec![2, 2, 0, 2])
        );
    }

    #[test]
    fn single_root_is_underdetermined() {
        let datum = build_root_datum("F4").unwrap();
        match derive_cocharacter(&datum, &[vec![1, 0, 0, 0]], 2).unwrap() {
            CocharacterSolution::Underdetermined {
                particular,
                directions,
            } => {
                assert_eq!(particular[0], Ratio::from_integer(2));
                assert_eq!(directions.len(), 3);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            derive_cocharacter(&datum, &[vec![1, 0, 0, 0], vec![2, 0, 0, 0]], 2),
            Err(GradingError::InconsistentCocharacter)
        );
    }

    #[test]
    fn sl2_triples() {
        let g = sl2(3);
        let t = find_sl2_triple(&g).unwrap().expect("sl2 has a triple");
        assert!(t.holds_in(&g));
        let a = LieAlgebra::abelian(PrimeField::new(3).unwrap(), 3);
        assert_eq!(find_sl2_triple(&a).unwrap(), None);
    }

    #[test]
    fn grading_basics() {
        let g = sl2(5);
        let gr = Grading::from_basis_degrees(g.field(), &[2, 0, -2]);
        assert_eq!(gr.profile(), vec![(-2, 1), (0, 1), (2, 1)]);
        assert_eq!(gr.axiom_violation(&g), None);
        let bad = Grading::from_basis_degrees(g.field(), &[1, 0, 1]);
        assert!(bad.axiom_violation(&g).is_some());
        let d = duality_check(&gr);
        assert!(!d.dims_differ);
        assert_eq!(gr.depth(), 2);
        let mixed = Subspace::from_vectors(g.field(), 3, [vec![1, 1, 0]]);
        assert!(matches!(
            gr.restrict(&mixed),
            Err(GradingError::NotHomogeneous { .. })
        ));
    }
}
