//! Ermolaev reports, grade tables and structure-constant dumps.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use super::{assemble, CertificateReport, ConfigSummary, PipelineError, Recorder, Source};
use crate::cartantype::{jacobi_defect, o_prime_submodule, CartanError, Ermolaev, ErmolaevTable};
use crate::ffalg::{PrimeField, Subspace};
use crate::grading::{recognition_certificate, Cocharacter, RecognitionKind};
use crate::modrep::MatrixRepresentation;
use crate::rootdata::{build_root_datum, chevalley_structure_constants, SIGN_CONVENTION};

fn config_error<E: std::fmt::Display>(e: E) -> PipelineError {
    PipelineError::Config(e.to_string())
}

/// Quick facts about `Er(n1,n2)` over GF(p) with the given `α`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErmolaevSummary {
    pub n: (u32, u32),
    pub p: u32,
    pub alpha: i64,
    pub dimension: usize,
    pub is_lie: bool,
    pub jacobi_witness: Option<String>,
    pub derived_dim: Option<usize>,
    pub graded_dims: Option<Vec<(i64, usize)>>,
    pub absolutely_simple: Option<bool>,
}

impl ErmolaevSummary {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "Er({},{}) over GF({}), alpha = {}",
            self.n.0, self.n.1, self.p, self.alpha
        );
        let _ = writeln!(out, "dimension: {}", self.dimension);
        match &self.jacobi_witness {
            None => {
                let _ = writeln!(out, "Jacobi identity: holds");
            }
            Some(w) => {
                let _ = writeln!(out, "Jacobi identity: fails ({w})");
            }
        }
        if let Some(d) = self.derived_dim {
            let _ = writeln!(out, "derived algebra dimension: {d}");
        }
        if let Some(g) = &self.graded_dims {
            let cells: Vec<String> = g.iter().map(|(d, n)| format!("{d}:{n}")).collect();
            let _ = writeln!(
                out,
                "graded dimensions of the derived algebra: {}",
                cells.join(" ")
            );
        }
        if let Some(s) = self.absolutely_simple {
            let _ = writeln!(out, "derived algebra absolutely simple: {s}");
        }
        out
    }
}

pub fn ermolaev_summary(
    n1: u32,
    n2: u32,
    p: u32,
    alpha: i64,
    seed: u64,
) -> Result<ErmolaevSummary, PipelineError> {
    let raw = ErmolaevTable::build(n1, n2, p, alpha).map_err(config_error)?;
    let mut s = ErmolaevSummary {
        n: (n1, n2),
        p,
        alpha,
        dimension: raw.dim(),
        is_lie: false,
        jacobi_witness: None,
        derived_dim: None,
        graded_dims: None,
        absolutely_simple: None,
    };
    match Ermolaev::build_with_alpha(n1, n2, p, alpha) {
        Ok(er) => {
            s.is_lie = true;
            let derived = er.derived();
            s.derived_dim = Some(derived.dim());
            s.graded_dims = er
                .grading()
                .restrict(derived.space())
                .ok()
                .map(|g| g.profile());
            let abs = MatrixRepresentation::adjoint_on_generators(&derived.to_algebra())
                .is_absolutely_irreducible(seed)
                .map_err(|e| PipelineError::Computation(e.to_string()))?;
            s.absolutely_simple = Some(abs.absolutely_irreducible);
        }
        Err(CartanError::NotLie { witness, .. }) => {
            let t = raw.table();
            let labels = t.labels();
            s.jacobi_witness = Some(format!(
                "J({}, {}, {}) ≠ 0",
                labels[witness.i], labels[witness.j], labels[witness.k]
            ));
        }
        Err(e) => return Err(PipelineError::Computation(e.to_string())),
    }
    Ok(s)
}

/// Certificate for `Er(n1,n2)` on its own. Outside characteristic 3 the
/// expected outcome is a Jacobi failure, and the report checks exactly that.
pub fn verify_ermolaev_standalone(
    n1: u32,
    n2: u32,
    p: u32,
    seed: u64,
) -> Result<CertificateReport, PipelineError> {
    let overrides = BTreeMap::new();
    let mut rec = Recorder::new(&overrides);
    let anchor = format!("Ermolaev algebra Er({n1},{n2})");
    let summary = ermolaev_summary(n1, n2, p, 1, seed)?;
    let o_dim = 3usize.pow(n1 + n2);
    let expected_dim = 3 * o_dim;
    rec.check(
        "er.dimension",
        "dim Er = 3 p^(n1+n2) as a vector space",
        &anchor,
        Source::Definition,
        summary.dimension,
        3 * (p as usize).pow(n1 + n2),
        Value::Null,
    );
    rec.check(
        "er.jacobi",
        "the bracket satisfies Jacobi exactly when p = 3",
        &anchor,
        Source::ReferenceValue,
        summary.is_lie,
        p == 3,
        json!(summary.jacobi_witness),
    );
    if summary.is_lie {
        let er =
            Ermolaev::build(n1, n2, p).map_err(|e| PipelineError::Computation(e.to_string()))?;
        rec.check(
            "er.derived_dim",
            "dim Er' = 3^(n1+n2+1) - 1",
            &anchor,
            Source::ReferenceValue,
            summary.derived_dim,
            expected_dim - 1,
            Value::Null,
        );
        rec.check(
            "er.derived_is_W_plus_O_prime",
            "Er' = W(2;n) ⊕ O'",
            &anchor,
            Source::IndependentComputation,
            er.derived().space() == &er.witt_plus_o_prime(),
            true,
            Value::Null,
        );
        let o = er.divided();
        let o_prime = o_prime_submodule(o, er.raw().alpha());
        let top = o.monomial(o.exponent(o.top()));
        rec.check(
            "er.o_prime",
            "O' has codimension one and misses the top monomial",
            &anchor,
            Source::ReferenceValue,
            json!({ "codim": o.dim() - o_prime.dim(), "contains_top": o_prime.contains(&top) }),
            json!({ "codim": 1, "contains_top": false }),
            Value::Null,
        );
        let grading = er.grading();
        rec.check(
            "er.axiom",
            "the native grading satisfies the grading axiom",
            &anchor,
            Source::Definition,
            grading.axiom_violation(er.algebra()).is_none(),
            true,
            Value::Null,
        );
        rec.check(
            "er.simple",
            "Er' is absolutely simple",
            &anchor,
            Source::ReferenceValue,
            summary.absolutely_simple,
            Some(true),
            Value::Null,
        );
        if (n1, n2) == (1, 1) {
            let native = grading
                .restrict(er.derived().space())
                .map_err(|e| PipelineError::Computation(e.to_string()))?;
            let reference = [(-1, 3), (0, 6), (1, 9), (2, 6), (3, 2)];
            let rep = recognition_certificate(
                er.algebra(),
                &native,
                RecognitionKind::Ermolaev,
                &reference,
                seed,
            )
            .map_err(|e| PipelineError::Computation(e.to_string()))?;
            rec.check(
                "er.profile",
                "graded dimensions are (3, 6, 9, 6, 2)",
                &anchor,
                Source::IndependentComputation,
                json!(native.profile()),
                json!(reference),
                Value::Null,
            );
            rec.check(
                "er.recognition",
                "every depth-one recognition hypothesis holds",
                &anchor,
                Source::IndependentComputation,
                rep.all_hold(),
                true,
                json!(rep
                    .checklist
                    .iter()
                    .filter(|c| !c.holds)
                    .map(|c| &c.name)
                    .collect::<Vec<_>>()),
            );
        }
    }
    for q in [3u32, 5, 7] {
        let d = jacobi_defect(q).map_err(|e| PipelineError::Computation(e.to_string()))?;
        rec.check(
            &format!("er.jacobi_defect_p{q}"),
            &format!(
                "J(x1∂1, x1, x2) {} at p = {q}",
                if q == 3 { "vanishes" } else { "is nonzero" }
            ),
            "witness triple",
            Source::ReferenceValue,
            d.is_zero,
            q == 3,
            json!(d.value),
        );
    }
    let config = ConfigSummary {
        p,
        type_label: format!("Er({n1},{n2})"),
        sign_convention: SIGN_CONVENTION.to_string(),
        seed,
        f_label: String::new(),
    };
    Ok(assemble(
        "Ermolaev algebra certificate",
        config,
        Vec::new(),
        rec.finish(),
        Vec::new(),
    ))
}

/// Graded dimensions of `g` or of a subalgebra under a cocharacter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradeTable {
    pub type_label: String,
    pub p: u32,
    pub cocharacter: Vec<i64>,
    pub subalgebra: Option<String>,
    pub total_dim: usize,
    pub homogeneous: bool,
    pub rows: Vec<(i64, usize)>,
}

impl GradeTable {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} over GF({}), cocharacter {:?}{}",
            self.type_label,
            self.p,
            self.cocharacter,
            self.subalgebra
                .as_ref()
                .map(|s| format!(", subalgebra <{s}>"))
                .unwrap_or_default()
        );
        let _ = writeln!(out, "total dimension {}", self.total_dim);
        if !self.homogeneous {
            let _ = writeln!(out, "the subalgebra is not spanned by homogeneous elements");
        }
        let _ = writeln!(out, "{:>6}  {:>4}", "degree", "dim");
        for (d, n) in &self.rows {
            let _ = writeln!(out, "{d:>6}  {n:>4}");
        }
        out
    }
}

/// `subalgebra` is a comma-separated list of generators such as `e1000+e0100,f1232`.
pub fn grade_table(
    type_label: &str,
    p: u32,
    cocharacter: &[i64],
    subalgebra: Option<&str>,
) -> Result<GradeTable, PipelineError> {
    let field = PrimeField::new(p).map_err(config_error)?;
    let datum = build_root_datum(type_label).map_err(config_error)?;
    if cocharacter.len() != datum.rank() {
        return Err(PipelineError::Config(format!(
            "cocharacter needs {} weights, got {}",
            datum.rank(),
            cocharacter.len()
        )));
    }
    let basis = chevalley_structure_constants(&datum);
    let g = basis
        .reduce_mod_p(field)
        .map_err(|e| PipelineError::Computation(e.to_string()))?;
    let grading = Cocharacter::new(cocharacter.to_vec()).grading(&basis, field);
    let (space, homogeneous, rows) = match subalgebra {
        None => (Subspace::full(field, g.dim()), true, grading.profile()),
        Some(list) => {
            let gens = list
                .split(',')
                .map(|s| g.parse_element(s.trim()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(config_error)?;
            let s = g.subalgebra_closure(&gens);
            match grading.restrict(s.space()) {
                Ok(r) => (s.space().clone(), true, r.profile()),
                Err(_) => (s.space().clone(), false, Vec::new()),
            }
        }
    };
    Ok(GradeTable {
        type_label: type_label.to_string(),
        p,
        cocharacter: cocharacter.to_vec(),
        subalgebra: subalgebra.map(str::to_string),
        total_dim: space.dim(),
        homogeneous,
        rows,
    })
}

/// Plain-text structure constants: a `#` header with the basis labels in
/// order, then one `i j k c` line per nonzero `c` in `[b_i, b_j] = Σ c b_k`, `i < j`.
pub fn dump_structure_constants(type_label: &str, p: u32) -> Result<String, PipelineError> {
    let field = PrimeField::new(p).map_err(config_error)?;
    let datum = build_root_datum(type_label).map_err(config_error)?;
    let basis = chevalley_structure_constants(&datum);
    let g = basis
        .reduce_mod_p(field)
        .map_err(|e| PipelineError::Computation(e.to_string()))?;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# {type_label} over GF({p}), sign convention {SIGN_CONVENTION}"
    );
    let _ = writeln!(out, "# labels: {}", g.labels().join(" "));
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let mut terms = g.table().product(i, j).to_vec();
            terms.sort_unstable();
            for (k, c) in terms {
                if c != 0 {
                    let _ = writeln!(out, "{i} {j} {k} {c}");
                }
            }
        }
    }
    Ok(out)
}
