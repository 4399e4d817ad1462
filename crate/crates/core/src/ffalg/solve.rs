use super::matrix::kernel_from_rref;
use super::{FfError, Matrix, PrimeField, Subspace};

/// Solution set of an inhomogeneous linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    Inconsistent,
    /// `particular + directions`
    Affine {
        particular: Vec<u8>,
        directions: Subspace,
    },
}

impl LinearSolution {
    pub fn is_consistent(&self) -> bool {
        matches!(self, LinearSolution::Affine { .. })
    }

    /// The single solution, when the system determines the unknowns.
    pub fn unique(&self) -> Option<&[u8]> {
        match self {
            LinearSolution::Affine {
                particular,
                directions,
            } if directions.is_zero() => Some(particular),
            _ => None,
        }
    }
}

/// Solve the stacked system `A_1 x = b_1, ..., A_k x = b_k` in `unknowns` variables.
pub fn solve_simultaneous(
    field: PrimeField,
    unknowns: usize,
    constraints: &[(Matrix, Vec<u8>)],
) -> Result<LinearSolution, FfError> {
    let mut rows = Subspace::zero(field, unknowns + 1);
    for (a, b) in constraints {
        if a.cols() != unknowns {
            return Err(FfError::Shape {
                expected: unknowns,
                found: a.cols(),
            });
        }
        if a.rows() != b.len() {
            return Err(FfError::Shape {
                expected: a.rows(),
                found: b.len(),
            });
        }
        for (r, &rhs) in b.iter().enumerate() {
            let mut row = a.row(r).to_vec();
            row.push(rhs);
            rows.insert(&row);
        }
    }
    if rows.pivots().last() == Some(&unknowns) {
        return Ok(LinearSolution::Inconsistent);
    }
    let mut particular = vec![0u8; unknowns];
    let mut coefficient_rows = Vec::with_capacity(rows.dim());
    for (row, &c) in rows.basis().iter().zip(rows.pivots()) {
        particular[c] = row[unknowns];
        coefficient_rows.push(row[..unknowns].to_vec());
    }
    let reduced = Matrix::from_rows(field, unknowns, &coefficient_rows);
    let directions = kernel_from_rref(&reduced, rows.pivots());
    Ok(LinearSolution::Affine {
        particular,
        directions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_system_is_everything() {
        let f = PrimeField::new(3).unwrap();
        let sol = solve_simultaneous(f, 4, &[]).unwrap();
        match sol {
            LinearSolution::Affine {
                particular,
                directions,
            } => {
                assert_eq!(particular, vec![0; 4]);
                assert!(directions.is_full());
            }
            LinearSolution::Inconsistent => panic!("empty system is consistent"),
        }
    }

    #[test]
    fn contradictory_equations() {
        let f = PrimeField::new(3).unwrap();
        let one = Matrix::identity(f, 1);
        let sol = solve_simultaneous(f, 1, &[(one.clone(), vec![1]), (one, vec![2])]).unwrap();
        assert_eq!(sol, LinearSolution::Inconsistent);
    }

    #[test]
    fn unique_solution() {
        let f = PrimeField::new(5).unwrap();
        // x + y = 3, x - y = 1  ->  x = 2, y = 1
        let a = Matrix::from_i64_rows(f, &[vec![1, 1], vec![1, -1]]).unwrap();
        let sol = solve_simultaneous(f, 2, &[(a, vec![3, 1])]).unwrap();
        assert_eq!(sol.unique(), Some(&[2u8, 1][..]));
    }
}
