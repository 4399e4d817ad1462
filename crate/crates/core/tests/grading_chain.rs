use std::collections::BTreeMap;

use modlie::cartantype::Ermolaev;
use modlie::ffalg::PrimeField;
use modlie::grading::{
    build_v_decomposition, derive_cocharacter, duality_check, recognition_certificate,
    regrade_by_table, CocharacterSolution, RecognitionKind,
};
use modlie::modrep::MatrixRepresentation;
use modlie::rootdata::{build_root_datum, chevalley_structure_constants};

#[test]
fn f4_regrading_chain() {
    let field = PrimeField::new(3).unwrap();
    let datum = build_root_datum("F4").unwrap();
    let basis = chevalley_structure_constants(&datum);
    let g = basis.reduce_mod_p(field).unwrap();
    let e = g.parse_element("e1000+e0100+e0001+e0120").unwrap();
    let f = g.parse_element("f1232").unwrap();
    let fp = g.parse_element("f1222+f1242").unwrap();
    let l = g.subalgebra_closure(&[e.clone(), f]);
    let w = g.subalgebra_closure(&[e.clone(), fp]);
    assert_eq!((l.dim(), w.dim()), (26, 18));

    let roots: Vec<Vec<i64>> = ["e1000", "e0100", "e0001", "e0120"]
        .iter()
        .map(|s| basis.root_of(basis.index_of_label(s).unwrap()).unwrap())
        .collect();
    let CocharacterSolution::Unique(tau) = derive_cocharacter(&datum, &roots, 2).unwrap() else {
        panic!("cocharacter not unique");
    };
    let l_tau = tau.grading(&basis, field).restrict(l.space()).unwrap();
    let v = build_v_decomposition(&g, &l, &w, &l_tau, &e).unwrap();
    assert_eq!((v.kernel_dim, v.space.dim()), (1, 8));
    assert!(v.complements_w);
    assert_eq!(&v.square, w.space());

    let table: BTreeMap<i64, i64> = [
        (4, -1),
        (2, 0),
        (0, 1),
        (-2, 0),
        (-4, 1),
        (-6, 2),
        (-8, 1),
        (-10, 2),
    ]
    .into();
    let r = regrade_by_table(&g, l.space(), w.space(), &v, &table).unwrap();
    assert_eq!(
        r.grading.profile(),
        vec![(-1, 3), (0, 6), (1, 9), (2, 6), (3, 2)]
    );
    assert_eq!(
        r.w_grading.profile(),
        vec![(-1, 2), (0, 4), (1, 6), (2, 4), (3, 2)]
    );
    assert!(r.grading.axiom_violation(&g).is_none());

    let rep = recognition_certificate(
        &g,
        &r.grading,
        RecognitionKind::Ermolaev,
        &r.grading.profile(),
        3,
    )
    .unwrap();
    assert!(rep.all_hold(), "{:?}", rep.checklist);
    assert_eq!(rep.minus_one_irreducible, Some(true));
    let d = duality_check(&r.grading);
    assert_eq!((d.bottom_dim, d.top_dim), (3, 2));

    // a table entry that breaks additivity is rejected
    let mut bad = table.clone();
    bad.insert(0, 0);
    assert!(regrade_by_table(&g, l.space(), w.space(), &v, &bad).is_err());
}

#[test]
fn ermolaev_one_two_is_simple() {
    let er = Ermolaev::build(1, 2, 3).unwrap();
    assert_eq!(er.algebra().dim(), 81);
    let d = er.derived();
    assert_eq!(d.dim(), 80);
    assert_eq!(d.space(), &er.witt_plus_o_prime());
    let abs = MatrixRepresentation::adjoint_on_generators(&d.to_algebra())
        .is_absolutely_irreducible(5)
        .unwrap();
    assert!(abs.absolutely_irreducible);
    assert!(er.grading().axiom_violation(er.algebra()).is_none());
}
