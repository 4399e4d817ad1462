//! Acceptance criteria, one line per criterion. Exits nonzero on any failure.

mod common;

use std::process::ExitCode;

use modlie::pipeline::{verify_theorem, CertificateReport, VerificationConfig};

struct Criterion {
    number: u32,
    title: &'static str,
    checks: &'static [&'static str],
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        number: 1,
        title: "dim F4 = 52, Jacobi over Z and mod 3, dim L = dim g / 2",
        checks: &[
            "g.dimension",
            "g.integral_jacobi",
            "g.modular_jacobi",
            "L.half_dimension",
        ],
    },
    Criterion {
        number: 2,
        title: "dim <e,f> = 26, irreducible and absolutely irreducible",
        checks: &["L.dimension", "L.irreducible", "L.absolutely_irreducible"],
    },
    Criterion {
        number: 3,
        title: "dim <e,f'> = 18, irreducible and absolutely irreducible",
        checks: &["W.dimension", "W.irreducible", "W.absolutely_irreducible"],
    },
    Criterion {
        number: 4,
        title: "dim g_e = 6",
        checks: &["e.centralizer"],
    },
    Criterion {
        number: 5,
        title: "tau gives deg f = -10 and the tau-profile of L",
        checks: &["tau.weights", "tau.f_degree", "tau.L_profile"],
    },
    Criterion {
        number: 6,
        title: "kernel line, dim V = 8, L = W + V, [V,V] = W",
        checks: &["V.kernel_dim", "V.dimension", "V.complement", "V.square"],
    },
    Criterion {
        number: 7,
        title: "regraded L matches Er(1,1)' including the zero component",
        checks: &[
            "regrade.L_depth",
            "regrade.L_profile",
            "regrade.L_zero",
            "L.zero_component",
            "L.sl2_triple",
            "er11.profile",
            "er11.profile_matches_L",
            "er11.zero_component",
            "er11.sl2_triple",
            "recognition.same_zero_component",
        ],
    },
    Criterion {
        number: 8,
        title: "regraded W: depth 1, dim W(-1) = 2, W(0) = sl2 + center, total 18",
        checks: &[
            "regrade.W_depth",
            "regrade.W_minus_one",
            "W.zero_component",
            "regrade.W_total",
        ],
    },
    Criterion {
        number: 9,
        title: "Ermolaev series dims, O' misses the top monomial, Jacobi defect by p",
        checks: &[
            "er11.derived_dim",
            "series.er12_derived_dim",
            "er11.o_prime",
            "series.er12_o_prime",
            "series.jacobi_defect_p3",
            "series.jacobi_defect_p5",
            "series.jacobi_defect_p7",
        ],
    },
    Criterion {
        number: 10,
        title: "dim L(-1) = 3 differs from dim L(3) = 2",
        checks: &["duality.L"],
    },
    Criterion {
        number: 11,
        title: "one invariant form, rank 52, L isotropic, normalizer(L) = L",
        checks: &[
            "forms.dimension",
            "forms.rank",
            "forms.L_isotropic",
            "L.normalizer",
        ],
    },
];

// Structural invariants checked inside the pipeline run for criterion 12.
const INVARIANTS: &[&str] = &[
    "L.closure_idempotent",
    "W.closure_idempotent",
    "tau.g_axiom",
    "tau.L_axiom",
    "regrade.L_axiom",
    "regrade.W_axiom",
    "er11.axiom",
    "forms.invariant",
];

const ORACLE_INSTANCES: u64 = 60;

fn line(number: u32, ok: bool, title: &str, detail: &str) -> bool {
    println!(
        "criterion {number:>2}: {} {title}{detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    ok
}

fn from_report(report: &CertificateReport, c: &Criterion) -> bool {
    let missing: Vec<&str> = c
        .checks
        .iter()
        .copied()
        .filter(|id| !report.passed(id))
        .collect();
    let detail = if missing.is_empty() {
        String::new()
    } else {
        format!(" (failing: {})", missing.join(", "))
    };
    line(c.number, missing.is_empty(), c.title, &detail)
}

fn property_suites(report: &CertificateReport) -> bool {
    let mut r = common::rng(12);
    let mut disagreements = Vec::new();
    for case in 0..ORACLE_INSTANCES {
        let m = common::random_module(&mut r);
        if let Err(e) = common::agrees_with_oracle(&m, case) {
            disagreements.push(format!("case {case}: {e}"));
        }
    }
    let broken: Vec<&str> = INVARIANTS
        .iter()
        .copied()
        .filter(|id| !report.passed(id))
        .collect();
    let ok = disagreements.is_empty() && broken.is_empty();
    let detail = if ok {
        format!(" ({ORACLE_INSTANCES} random modules agree with the oracle)")
    } else {
        format!(
            " ({} disagreements; failing invariants: {})",
            disagreements.len(),
            broken.join(", ")
        )
    };
    line(
        12,
        ok,
        "MeatAxe agrees with spin-all; closure, grading and form invariants hold",
        &detail,
    )
}

fn determinism(first: &CertificateReport) -> bool {
    let again = verify_theorem(&VerificationConfig::default()).map(|r| r.to_json());
    let ok = again.as_deref().ok() == Some(first.to_json().as_str());
    line(
        13,
        ok,
        "repeated default runs give byte-identical reports",
        "",
    )
}

fn main() -> ExitCode {
    let report = match verify_theorem(&VerificationConfig::default()) {
        Ok(r) => r,
        Err(e) => {
            println!("pipeline failed to start: {e}");
            return ExitCode::FAILURE;
        }
    };
    let mut all = true;
    for c in CRITERIA {
        all &= from_report(&report, c);
    }
    all &= property_suites(&report);
    all &= determinism(&report);
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
