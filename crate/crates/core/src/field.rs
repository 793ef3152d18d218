//! Prime fields `F_q` and their extensions `F_{q^t} = F_q[y]/(f(y))`.

use crate::error::{Error, Result};
use crate::nt;
use crate::poly::{gcd_ext, CoeffRing, Coefficient, Poly};

const MAX_FIELD_ORDER: u64 = 1 << 31;

/// Field element stored as its reduced coefficient vector `(c_0, .., c_{t-1})`
/// packed in base `q`: the value is `c_0 + c_1 q + ... + c_{t-1} q^{t-1}`.
/// In a prime field this is just the residue.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct FieldElt(pub u32);

impl Coefficient for FieldElt {
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl FieldElt {
    pub fn value(self) -> u32 {
        self.0
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FieldCtx {
    q: u64,
    t: u32,
    order: u64,
    /// Monic, ascending degree, length `t + 1`. `x` when `t = 1`.
    modulus: Vec<u64>,
    primitive: FieldElt,
}

impl FieldCtx {
    /// The prime field `F_q` with its smallest primitive root.
    pub fn prime(q: u64) -> Result<Self> {
        if !nt::is_prime(q) {
            return Err(Error::NonPrimeModulus(q));
        }
        if q > MAX_FIELD_ORDER {
            return Err(Error::FieldTooLarge { q, t: 1 });
        }
        let primitive = if q == 2 {
            1
        } else {
            nt::smallest_primitive_root(q).expect("prime modulus has a primitive root")
        };
        Ok(FieldCtx {
            q,
            t: 1,
            order: q,
            modulus: vec![0, 1],
            primitive: FieldElt(primitive as u32),
        })
    }

    /// `F_{q^t}` with the lexicographically smallest monic irreducible modulus
    /// and the lexicographically smallest generator of the unit group.
    /// Coefficient vectors are compared constant term first.
    pub fn extension(q: u64, t: u32) -> Result<Self> {
        if t == 0 {
            return Err(Error::ZeroDegree);
        }
        let base = FieldCtx::prime(q)?;
        if t == 1 {
            return Ok(base);
        }
        let order = q
            .checked_pow(t)
            .filter(|&n| n <= MAX_FIELD_ORDER)
            .ok_or(Error::FieldTooLarge { q, t })?;
        let modulus = lex_vectors(q, t as usize)
            .map(|mut low| {
                low.push(1);
                low
            })
            .find(|f| is_irreducible(&base, f))
            .expect("irreducible polynomials exist in every degree");
        let mut ctx = FieldCtx {
            q,
            t,
            order,
            modulus,
            primitive: FieldElt(0),
        };
        let group = order - 1;
        let factors = nt::prime_factors(group);
        ctx.primitive = lex_vectors(q, t as usize)
            .map(|c| ctx.from_coeffs(&c))
            .filter(|a| !a.is_zero())
            .find(|&a| factors.iter().all(|&r| !ctx.is_one_elem(ctx.pow(a, group / r))))
            .expect("unit group is cyclic");
        Ok(ctx)
    }

    pub fn characteristic(&self) -> u64 {
        self.q
    }

    pub fn degree(&self) -> u32 {
        self.t
    }

    /// Number of elements `q^t`.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn primitive_element(&self) -> FieldElt {
        self.primitive
    }

    pub fn is_prime_field(&self) -> bool {
        self.t == 1
    }

    pub fn coeffs(&self, a: FieldElt) -> Vec<u64> {
        let mut v = a.0 as u64;
        (0..self.t)
            .map(|_| {
                let c = v % self.q;
                v /= self.q;
                c
            })
            .collect()
    }

    /// Packs a coefficient vector (reduced mod `q`, at most `t` entries).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> FieldElt {
        debug_assert!(coeffs.len() <= self.t as usize);
        let v = coeffs.iter().rev().fold(0u64, |acc, &c| acc * self.q + c % self.q);
        FieldElt(v as u32)
    }

    /// The residue in `[0, q)` when `a` lies in the prime subfield.
    pub fn prime_subfield_value(&self, a: FieldElt) -> Option<u64> {
        let v = a.0 as u64;
        (v < self.q).then_some(v)
    }

    fn is_one_elem(&self, a: FieldElt) -> bool {
        a.0 == 1
    }

    pub fn pow(&self, a: FieldElt, mut e: u64) -> FieldElt {
        let mut base = a;
        let mut acc = FieldElt(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Least `k >= 1` with `a^k = 1`, searched over divisors of `q^t - 1`.
    pub fn multiplicative_order(&self, a: FieldElt) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(nt::divisors(self.order - 1)
            .into_iter()
            .find(|&k| self.is_one_elem(self.pow(a, k)))
            .expect("a^(q^t - 1) = 1"))
    }

    /// Every element, in lexicographic coefficient order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElt> + '_ {
        lex_vectors(self.q, self.t as usize).map(move |c| self.from_coeffs(&c))
    }

    fn mul_ext(&self, a: FieldElt, b: FieldElt) -> FieldElt {
        let t = self.t as usize;
        let (x, y) = (self.coeffs(a), self.coeffs(b));
        let mut prod = vec![0u64; 2 * t - 1];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi * yj) % self.q;
            }
        }
        for k in (t..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (j, &m) in self.modulus[..t].iter().enumerate() {
                let idx = k - t + j;
                prod[idx] = (prod[idx] + (self.q - c) * m) % self.q;
            }
        }
        self.from_coeffs(&prod[..t])
    }
}

impl CoeffRing for FieldCtx {
    type Elem = FieldElt;

    fn zero(&self) -> FieldElt {
        FieldElt(0)
    }

    fn one(&self) -> FieldElt {
        FieldElt(1)
    }

    fn add(&self, a: &FieldElt, b: &FieldElt) -> FieldElt {
        if self.t == 1 {
            return FieldElt(((a.0 as u64 + b.0 as u64) % self.q) as u32);
        }
        let (x, y) = (self.coeffs(*a), self.coeffs(*b));
        let sum: Vec<u64> = x.iter().zip(&y).map(|(p, r)| (p + r) % self.q).collect();
        self.from_coeffs(&sum)
    }

    fn neg(&self, a: &FieldElt) -> FieldElt {
        if self.t == 1 {
            return FieldElt(((self.q - a.0 as u64) % self.q) as u32);
        }
        let c: Vec<u64> = self.coeffs(*a).iter().map(|&v| (self.q - v) % self.q).collect();
        self.from_coeffs(&c)
    }

    fn mul(&self, a: &FieldElt, b: &FieldElt) -> FieldElt {
        if self.t == 1 {
            FieldElt(((a.0 as u64 * b.0 as u64) % self.q) as u32)
        } else {
            self.mul_ext(*a, *b)
        }
    }

    fn inv(&self, a: &FieldElt) -> Option<FieldElt> {
        if a.is_zero() {
            None
        } else {
            Some(self.pow(*a, self.order - 2))
        }
    }

    fn from_u64(&self, n: u64) -> FieldElt {
        FieldElt((n % self.q) as u32)
    }

    fn render(&self, a: &FieldElt) -> (String, bool) {
        if self.t == 1 {
            return (a.0.to_string(), true);
        }
        let c = self.coeffs(*a);
        let terms: Vec<String> = c
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(i, &v)| match (i, v) {
                (0, v) => v.to_string(),
                (1, 1) => "y".into(),
                (1, v) => format!("{v}*y"),
                (i, 1) => format!("y^{i}"),
                (i, v) => format!("{v}*y^{i}"),
            })
            .collect();
        let atomic = terms.len() == 1 && c[1..].iter().all(|&v| v == 0);
        (terms.join("+"), atomic)
    }
}

/// Vectors in `[0, q)^len`, ordered with the first coordinate most significant.
fn lex_vectors(q: u64, len: usize) -> impl Iterator<Item = Vec<u64>> {
    let total = q.pow(len as u32);
    (0..total).map(move |mut n| {
        let mut v = vec![0u64; len];
        for slot in v.iter_mut().rev() {
            *slot = n % q;
            n /= q;
        }
        v
    })
}

/// Rabin's test over the prime field `base` for a monic `f` (ascending coefficients).
fn is_irreducible(base: &FieldCtx, f: &[u64]) -> bool {
    let t = f.len() - 1;
    let f = Poly::from_ints(base, f);
    let x = Poly::from_ints(base, &[0, 1]);
    let q = base.characteristic() as u128;
    let frob = |k: usize| -> Poly<FieldElt> { x.pow_mod(q.pow(k as u32), &f, base).expect("monic modulus") };
    if frob(t) != x.rem(&f, base).expect("monic modulus") {
        return false;
    }
    nt::prime_factors(t as u64).into_iter().all(|r| {
        let h = frob(t / r as usize).sub(&x, base);
        match gcd_ext(&h, &f, base) {
            Ok((g, _, _)) => g.degree() == Some(0),
            Err(_) => false,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force: every nonzero element's order divides the group order,
    /// and the generator reaches all of them.
    fn generates_unit_group(k: &FieldCtx) -> bool {
        let mut seen = std::collections::HashSet::new();
        let mut x = k.one();
        for _ in 0..k.order() - 1 {
            seen.insert(x);
            x = k.mul(&x, &k.primitive_element());
        }
        seen.len() as u64 == k.order() - 1 && x == k.one()
    }

    #[test]
    fn prime_field_generators() {
        assert_eq!(FieldCtx::prime(7).unwrap().primitive_element(), FieldElt(3));
        assert_eq!(FieldCtx::prime(2).unwrap().primitive_element(), FieldElt(1));
        assert_eq!(FieldCtx::prime(3).unwrap().primitive_element(), FieldElt(2));
        assert_eq!(FieldCtx::prime(9), Err(Error::NonPrimeModulus(9)));
    }

    #[test]
    fn exhaustive_smallest_primitive_root_of_seven() {
        let k = FieldCtx::prime(7).unwrap();
        let orders: Vec<u64> = (2..7).map(|a| k.multiplicative_order(FieldElt(a)).unwrap()).collect();
        // 2 has order 3, 3 has order 6.
        assert_eq!(orders, vec![3, 6, 3, 6, 2]);
    }

    #[test]
    fn arithmetic_in_small_prime_fields() {
        let k = FieldCtx::prime(7).unwrap();
        assert_eq!(k.inv(&FieldElt(2)), Some(FieldElt(4)));
        assert_eq!(k.pow(FieldElt(3), 6), FieldElt(1));
        assert_eq!(k.inv(&FieldElt(0)), None);
        let k3 = FieldCtx::prime(3).unwrap();
        assert_eq!(k3.inv(&FieldElt(2)), Some(FieldElt(2)));
    }

    #[test]
    fn orders_modulo_primes() {
        let k19 = FieldCtx::prime(19).unwrap();
        assert_eq!(k19.multiplicative_order(FieldElt(7)).unwrap(), 3);
        assert_eq!(k19.multiplicative_order(FieldElt(1)).unwrap(), 1);
        let k13 = FieldCtx::prime(13).unwrap();
        assert_eq!(k13.multiplicative_order(FieldElt(3)).unwrap(), 3);
        assert_eq!(k13.multiplicative_order(FieldElt(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn extensions_are_fields_with_cyclic_unit_groups() {
        for (q, t, size) in [(7u64, 3u32, 343u64), (3, 3, 27), (2, 4, 16), (5, 2, 25)] {
            let k = FieldCtx::extension(q, t).unwrap();
            assert_eq!(k.order(), size);
            assert_eq!(k.multiplicative_order(k.primitive_element()).unwrap(), size - 1);
            assert!(generates_unit_group(&k));
            // No root in F_q, so no linear factor; for t <= 3 that is irreducibility.
            let m = k.modulus().to_vec();
            for r in 0..q {
                let v = m.iter().rev().fold(0u64, |acc, &c| (acc * r + c) % q);
                assert_ne!(v, 0, "modulus {m:?} has root {r}");
            }
        }
    }

    #[test]
    fn degenerate_extension_is_prime_field() {
        assert_eq!(FieldCtx::extension(3, 1).unwrap(), FieldCtx::prime(3).unwrap());
        assert_eq!(FieldCtx::extension(3, 0), Err(Error::ZeroDegree));
        assert!(matches!(FieldCtx::extension(2, 40), Err(Error::FieldTooLarge { .. })));
    }

    #[test]
    fn extension_modulus_is_lexicographically_first() {
        let k = FieldCtx::extension(3, 3).unwrap();
        let first = k.modulus().to_vec();
        // Every lexicographically earlier monic cubic has a root in F_3.
        for low in lex_vectors(3, 3) {
            if low[..] == first[..3] {
                break;
            }
            let has_root = (0..3u64).any(|r| {
                let mut f = low.clone();
                f.push(1);
                f.iter().rev().fold(0u64, |acc, &c| (acc * r + c) % 3) == 0
            });
            assert!(has_root, "{low:?} should be reducible");
        }
        assert_eq!(FieldCtx::extension(3, 3).unwrap(), k);
    }
}
