//! m-adic residue classes modulo a prime and the multiplier permutations
//! that cycle them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nt;
use crate::poly::{CoeffRing, Poly};

/// `Q_0` is the set of nonzero m-th powers modulo `p` and `Q_i = b^i Q_0`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ResidueSystem {
    p: u64,
    m: usize,
    b: u64,
    classes: Vec<Vec<u64>>,
    /// `class_of[x]` is the class index of `x`, `None` at 0.
    class_of: Vec<Option<usize>>,
    a: u64,
    a_class: usize,
}

impl ResidueSystem {
    /// `b` defaults to the smallest primitive root mod `p`, `a` to the
    /// smallest element of `Q_1`.
    pub fn new(p: u64, m: usize, b: Option<u64>, a: Option<u64>) -> Result<Self> {
        if !nt::is_prime(p) {
            return Err(Error::NonPrimeModulus(p));
        }
        if m < 2 || !(p - 1).is_multiple_of(m as u64) {
            return Err(Error::InvalidM { p, m: m as u64 });
        }
        let b = match b {
            Some(b) if nt::is_primitive_root(b, p) => b % p,
            Some(b) => return Err(Error::NotPrimitiveRoot { b, p }),
            None => nt::smallest_primitive_root(p).expect("p is prime"),
        };
        let mut q0: Vec<u64> = (1..p).map(|x| nt::mod_pow(x, m as u64, p)).collect();
        q0.sort_unstable();
        q0.dedup();
        let mut classes = Vec::with_capacity(m);
        let mut class_of = vec![None; p as usize];
        let mut shift = 1u64;
        for i in 0..m {
            let mut qi: Vec<u64> = q0.iter().map(|&x| x * shift % p).collect();
            qi.sort_unstable();
            for &x in &qi {
                class_of[x as usize] = Some(i);
            }
            classes.push(qi);
            shift = shift * b % p;
        }
        let mut sys = ResidueSystem {
            p,
            m,
            b,
            classes,
            class_of,
            a: 0,
            a_class: 0,
        };
        let a = a.unwrap_or(sys.classes[1][0]);
        let a_class = sys.class_index(a).ok_or(Error::NotCoprime { a, p })?;
        if nt::gcd(a_class as u64, m as u64) != 1 {
            return Err(Error::MultiplierNotCyclic { a, class: a_class, m });
        }
        sys.a = a % p;
        sys.a_class = a_class;
        Ok(sys)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn classes(&self) -> &[Vec<u64>] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &[u64] {
        &self.classes[i]
    }

    /// The multiplier `a` of the system's `mu_a`.
    pub fn multiplier(&self) -> u64 {
        self.a
    }

    /// The `j` with `a` in `Q_j`.
    pub fn multiplier_class(&self) -> usize {
        self.a_class
    }

    /// Index of the class containing `x`, or `None` when `p | x`.
    pub fn class_index(&self, x: u64) -> Option<usize> {
        self.class_of[(x % self.p) as usize]
    }

    pub fn is_madic_residue(&self, x: u64) -> bool {
        self.class_index(x) == Some(0)
    }

    /// `mu_a` on a set of exponents: `k -> a k mod p`. Sorted output.
    pub fn mu_set(&self, a: u64, exponents: &[u64]) -> Result<Vec<u64>> {
        self.check_multiplier(a)?;
        let mut out: Vec<u64> = exponents.iter().map(|&k| k % self.p * (a % self.p) % self.p).collect();
        out.sort_unstable();
        Ok(out)
    }

    /// `mu_a` as a coordinate permutation of a word of length `p`: position
    /// `i` of the image takes the coefficient at position `a i mod p`.
    /// Under this action the spectral support of a cyclic code (the exponents
    /// `k` where its idempotent is nonzero at `alpha^k`) moves by `k -> a k`,
    /// the same map `mu_set` applies, so `mu_a` carries the code with
    /// nonzeros `Q_i` to the one with nonzeros `Q_{i+j}` when `a` is in `Q_j`.
    pub fn mu_poly<R: CoeffRing>(&self, a: u64, f: &Poly<R::Elem>, ring: &R) -> Result<Poly<R::Elem>> {
        self.check_multiplier(a)?;
        let p = self.p as usize;
        let word = f.mod_xn_minus_1(p, ring).to_vector(p, ring);
        let a = (a % self.p) as usize;
        Ok(Poly::new((0..p).map(|i| word[a * i % p].clone()).collect()))
    }

    fn check_multiplier(&self, a: u64) -> Result<()> {
        if a.is_multiple_of(self.p) {
            Err(Error::NotCoprime { a, p: self.p })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;

    #[test]
    fn three_classes_mod_thirteen() {
        let sys = ResidueSystem::new(13, 3, Some(2), None).unwrap();
        assert_eq!(sys.class(0), &[1, 5, 8, 12]);
        assert_eq!(sys.class(1), &[2, 3, 10, 11]);
        assert_eq!(sys.class(2), &[4, 6, 7, 9]);
    }

    #[test]
    fn four_classes_mod_thirteen() {
        let sys = ResidueSystem::new(13, 4, Some(2), None).unwrap();
        assert_eq!(sys.class(0), &[1, 3, 9]);
        assert_eq!(sys.class(1), &[2, 5, 6]);
        assert_eq!(sys.multiplier(), 2);
    }

    #[test]
    fn sixth_powers_mod_nineteen() {
        let sys = ResidueSystem::new(19, 6, None, None).unwrap();
        assert_eq!(sys.b(), 2);
        assert_eq!(sys.class(0), &[1, 7, 11]);
        let brute: std::collections::BTreeSet<u64> = (1..19u64).map(|x| x.pow(6) % 19).collect();
        assert_eq!(brute.into_iter().collect::<Vec<_>>(), sys.class(0));
        assert!(sys.classes().iter().all(|c| c.len() == 3));
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            ResidueSystem::new(13, 5, None, None),
            Err(Error::InvalidM { p: 13, m: 5 })
        );
        assert_eq!(
            ResidueSystem::new(13, 4, Some(3), None),
            Err(Error::NotPrimitiveRoot { b: 3, p: 13 })
        );
        // 4 lies in Q_2 for m = 4, and gcd(2, 4) = 2.
        assert_eq!(
            ResidueSystem::new(13, 4, Some(2), Some(4)),
            Err(Error::MultiplierNotCyclic { a: 4, class: 2, m: 4 })
        );
        assert_eq!(
            ResidueSystem::new(13, 4, Some(2), Some(26)),
            Err(Error::NotCoprime { a: 26, p: 13 })
        );
        assert!(ResidueSystem::new(15, 2, None, None).is_err());
    }

    #[test]
    fn multiplier_on_sets() {
        let sys = ResidueSystem::new(13, 4, Some(2), Some(7)).unwrap();
        assert_eq!(sys.multiplier_class(), 3);
        assert_eq!(sys.mu_set(7, sys.class(0)).unwrap(), vec![7, 8, 11]);
        assert_eq!(sys.mu_set(1, sys.class(2)).unwrap(), sys.class(2));
        assert!(sys.mu_set(13, sys.class(0)).is_err());
        // m applications return every class to itself.
        for i in 0..4 {
            let mut set = sys.class(i).to_vec();
            for _ in 0..4 {
                set = sys.mu_set(7, &set).unwrap();
            }
            assert_eq!(set, sys.class(i));
        }
    }

    #[test]
    fn multiplier_on_polynomials() {
        let k = FieldCtx::prime(3).unwrap();
        let sys = ResidueSystem::new(13, 4, Some(2), Some(7)).unwrap();
        let f = Poly::from_ints(&k, &[1, 2, 0, 1]);
        assert_eq!(sys.mu_poly(1, &f, &k).unwrap(), f);
        // Position i receives the coefficient at 7 i: x^3 (old) lands at 3 * 2 = 6.
        let g = sys.mu_poly(7, &f, &k).unwrap();
        let mut expect = vec![0u64; 13];
        expect[0] = 1;
        expect[2] = 2; // 7 * 2 = 14 = 1
        expect[6] = 1; // 7 * 6 = 42 = 3
        assert_eq!(g, Poly::from_ints(&k, &expect));
    }
}
