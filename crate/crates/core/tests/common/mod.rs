//! Shared test oracles.

use modlie::ffalg::{Matrix, PrimeField};
use modlie::modrep::{Irreducibility, MatrixRepresentation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Brute force: irreducible iff every nonzero vector spins to the whole space.
pub fn spin_all_irreducible(rep: &MatrixRepresentation) -> bool {
    let n = rep.degree();
    rep.field()
        .projective_points(n)
        .all(|v| rep.spin(&v).dim() == n)
}

fn random_matrix(rng: &mut ChaCha8Rng, f: PrimeField, n: usize) -> Matrix {
    let rows: Vec<Vec<u8>> = (0..n)
        .map(|_| (0..n).map(|_| rng.gen_range(0..f.p()) as u8).collect())
        .collect();
    Matrix::from_rows(f, n, &rows)
}

fn random_invertible(rng: &mut ChaCha8Rng, f: PrimeField, n: usize) -> (Matrix, Matrix) {
    loop {
        let m = random_matrix(rng, f, n);
        if let Some(inv) = m.inverse() {
            return (m, inv);
        }
    }
}

/// A random module of degree 1..=8 over GF(3). Roughly half the instances are
/// built reducible (block triangular or block diagonal, then conjugated).
pub fn random_module(rng: &mut ChaCha8Rng) -> MatrixRepresentation {
    let f = PrimeField::new(3).unwrap();
    let n = rng.gen_range(1..=8usize);
    let k = rng.gen_range(1..=3usize);
    let shape = rng.gen_range(0..4u8);
    let mut gens: Vec<Matrix> = (0..k).map(|_| random_matrix(rng, f, n)).collect();
    if n > 1 && shape > 0 {
        let a = rng.gen_range(1..n);
        for g in &mut gens {
            for r in a..n {
                for c in 0..a {
                    g.set(r, c, 0);
                    if shape == 2 {
                        g.set(c, r, 0);
                    }
                }
            }
        }
        let (p, pinv) = random_invertible(rng, f, n);
        gens = gens.iter().map(|g| p.mul(g).mul(&pinv)).collect();
    }
    MatrixRepresentation::new(f, n, gens).unwrap()
}

/// Compare the MeatAxe verdict with the oracle; `Err` describes a disagreement.
pub fn agrees_with_oracle(rep: &MatrixRepresentation, seed: u64) -> Result<bool, String> {
    let truth = spin_all_irreducible(rep);
    match rep.is_irreducible(seed).map_err(|e| e.to_string())? {
        Irreducibility::Irreducible { .. } if truth => Ok(true),
        Irreducibility::Reducible { witness } if !truth => {
            let proper = witness.dim() > 0 && witness.dim() < rep.degree();
            if proper && rep.is_invariant(&witness) {
                Ok(false)
            } else {
                Err(format!("bad witness of dimension {}", witness.dim()))
            }
        }
        other => Err(format!(
            "MeatAxe said {other:?}, oracle says irreducible = {truth}"
        )),
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
