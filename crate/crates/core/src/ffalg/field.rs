//! Arithmetic in the prime field GF(p).
//!
//! Scalars are plain `u8` residues in `0..p`. Every operation goes through a
//! [`PrimeField`] value so the modulus travels with the computation.

use serde::Serialize;

use super::FfError;

/// Largest supported modulus. Residues must fit in a `u8`.
pub const MAX_PRIME: u32 = 251;

/// The field GF(p) for a prime `2 <= p <= 251`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PrimeField {
    p: u32,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, FfError> {
        if !(2..=MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(FfError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    /// Number of elements, as a `usize` for enumeration loops.
    #[inline]
    pub fn order(self) -> usize {
        self.p as usize
    }

    #[inline]
    pub fn reduce_i64(self, x: i64) -> u8 {
        x.rem_euclid(self.p as i64) as u8
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        ((a as u32 + b as u32) % self.p) as u8
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        ((a as u32 + self.p - b as u32) % self.p) as u8
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            (self.p - a as u32) as u8
        }
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((a as u32 * b as u32) % self.p) as u8
    }

    pub fn pow(self, a: u8, mut e: u64) -> u8 {
        let mut base = a as u32 % self.p;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc as u8
    }

    /// Multiplicative inverse by Fermat: `a^(p-2)`.
    pub fn inv(self, a: u8) -> Option<u8> {
        if (a as u32).is_multiple_of(self.p) {
            None
        } else {
            Some(self.pow(a, (self.p - 2) as u64))
        }
    }

    /// The residue as a signed representative in `(-p/2, p/2]`, used for display.
    pub fn signed(self, a: u8) -> i64 {
        let a = a as i64;
        let p = self.p as i64;
        if a > p / 2 {
            a - p
        } else {
            a
        }
    }

    /// `y += c * x` on dense vectors.
    #[inline]
    pub fn axpy(self, y: &mut [u8], c: u8, x: &[u8]) {
        if c == 0 {
            return;
        }
        let p = self.p;
        let c = c as u32;
        for (yi, &xi) in y.iter_mut().zip(x) {
            if xi != 0 {
                *yi = ((*yi as u32 + c * xi as u32) % p) as u8;
            }
        }
    }

    #[inline]
    pub fn scale(self, v: &mut [u8], c: u8) {
        for x in v.iter_mut() {
            *x = self.mul(*x, c);
        }
    }

    pub fn dot(self, a: &[u8], b: &[u8]) -> u8 {
        let mut acc: u64 = 0;
        for (&x, &y) in a.iter().zip(b) {
            acc += x as u64 * y as u64;
        }
        (acc % self.p as u64) as u8
    }

    /// Iterate over all vectors of `GF(p)^dim` whose first nonzero entry is 1,
    /// i.e. one representative per point of projective space.
    pub fn projective_points(self, dim: usize) -> ProjectivePoints {
        ProjectivePoints {
            field: self,
            dim,
            lead: 0,
            tail: vec![0; dim],
            done: dim == 0,
        }
    }
}

/// Iterator produced by [`PrimeField::projective_points`].
pub struct ProjectivePoints {
    field: PrimeField,
    dim: usize,
    lead: usize,
    tail: Vec<u8>,
    done: bool,
}

impl Iterator for ProjectivePoints {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        if self.done {
            return None;
        }
        let mut v = vec![0u8; self.dim];
        v[self.lead] = 1;
        v[self.lead + 1..].copy_from_slice(&self.tail[self.lead + 1..]);
        // advance the free coordinates after the leading 1
        let p = self.field.p() as u8;
        let mut i = self.lead + 1;
        loop {
            if i >= self.dim {
                self.lead += 1;
                if self.lead >= self.dim {
                    self.done = true;
                }
                self.tail.iter_mut().for_each(|x| *x = 0);
                break;
            }
            self.tail[i] += 1;
            if self.tail[i] < p {
                break;
            }
            self.tail[i] = 0;
            i += 1;
        }
        Some(v)
    }
}

/// Binomial coefficient modulo a prime via Lucas' theorem.
pub fn binomial_mod(field: PrimeField, mut n: u64, mut k: u64) -> u8 {
    let p = field.p() as u64;
    let mut acc: u8 = 1;
    while n > 0 || k > 0 {
        let (ni, ki) = (n % p, k % p);
        if ki > ni {
            return 0;
        }
        // small binomial by multiplicative formula in GF(p)
        let mut num = 1u8;
        let mut den = 1u8;
        for j in 0..ki {
            num = field.mul(num, ((ni - j) % p) as u8);
            den = field.mul(den, ((j + 1) % p) as u8);
        }
        acc = field.mul(
            acc,
            field.mul(num, field.inv(den).expect("nonzero denominator")),
        );
        n /= p;
        k /= p;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(257).is_err());
        assert!(PrimeField::new(251).is_ok());
    }

    #[test]
    fn inverses_exhaustive_small_primes() {
        for p in [2u32, 3, 5, 7, 11, 13] {
            let f = PrimeField::new(p).unwrap();
            assert_eq!(f.inv(0), None);
            for a in 1..p as u8 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "p={p} a={a}");
            }
        }
    }

    #[test]
    fn projective_point_count() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(f.projective_points(3).count(), 13);
        assert_eq!(f.projective_points(1).count(), 1);
        assert_eq!(f.projective_points(0).count(), 0);
        let pts: Vec<_> = f.projective_points(2).collect();
        assert_eq!(pts, vec![vec![1, 0], vec![1, 1], vec![1, 2], vec![0, 1]]);
    }

    #[test]
    fn lucas_binomials() {
        let f = PrimeField::new(3).unwrap();
        // C(4,2) = 6 = 0 mod 3; C(3,1) = 3 = 0; C(2,1) = 2
        assert_eq!(binomial_mod(f, 4, 2), 0);
        assert_eq!(binomial_mod(f, 3, 1), 0);
        assert_eq!(binomial_mod(f, 2, 1), 2);
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(binomial_mod(f7, 10, 3), (120 % 7) as u8);
    }
}
