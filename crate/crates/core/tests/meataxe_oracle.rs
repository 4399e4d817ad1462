mod common;

use common::{agrees_with_oracle, random_module, rng, spin_all_irreducible};

#[test]
fn meataxe_matches_spin_all_on_random_modules() {
    let mut r = rng(7);
    let (mut irreducible, mut reducible) = (0, 0);
    for case in 0..120 {
        let m = random_module(&mut r);
        match agrees_with_oracle(&m, case) {
            Ok(true) => irreducible += 1,
            Ok(false) => reducible += 1,
            Err(e) => panic!("case {case} (degree {}): {e}", m.degree()),
        }
    }
    // the generator must exercise both verdicts
    assert!(
        irreducible >= 10 && reducible >= 10,
        "{irreducible} irreducible, {reducible} reducible"
    );
}

#[test]
fn oracle_sanity() {
    use modlie::ffalg::{Matrix, PrimeField};
    use modlie::modrep::MatrixRepresentation;
    let f = PrimeField::new(3).unwrap();
    // rotation by 90 degrees has no eigenvector over GF(3)
    let rot = Matrix::from_i64_rows(f, &[vec![0, -1], vec![1, 0]]).unwrap();
    assert!(spin_all_irreducible(
        &MatrixRepresentation::new(f, 2, vec![rot]).unwrap()
    ));
    let jordan = Matrix::from_i64_rows(f, &[vec![1, 1], vec![0, 1]]).unwrap();
    assert!(!spin_all_irreducible(
        &MatrixRepresentation::new(f, 2, vec![jordan]).unwrap()
    ));
}
