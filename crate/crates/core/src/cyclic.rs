//! Arithmetic in `F_q[x]/(x^p - 1)`: splitting `x^p - 1` over cyclotomic
//! cosets and extracting idempotent generators of cyclic codes.

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElt};
use crate::nt;
use crate::poly::{gcd_ext, CoeffRing, Poly};

/// `1 + x + ... + x^{p-1}`.
pub fn all_ones<R: CoeffRing>(p: usize, ring: &R) -> Poly<R::Elem> {
    Poly::new(vec![ring.one(); p])
}

/// Idempotent generator of the cyclic code `<g>` of length `p`.
///
/// With `g_bar = (x^p - 1)/g` and `u g + w g_bar = 1`, the idempotent is
/// `u g mod (x^p - 1)`.
pub fn idempotent_of_cyclic(g: &Poly<FieldElt>, p: usize, field: &FieldCtx) -> Result<Poly<FieldElt>> {
    let modulus = Poly::x_pow_minus_one(field, p);
    if g.is_zero() {
        return Err(Error::NotADivisor { p });
    }
    let (g_bar, rem) = modulus.divmod(g, field)?;
    if !rem.is_zero() {
        return Err(Error::NotADivisor { p });
    }
    if g.degree() == Some(p) {
        return Err(Error::ZeroCode { p });
    }
    let (d, u, _) = gcd_ext(g, &g_bar, field)?;
    if d.degree() != Some(0) {
        // x^p - 1 is not squarefree, i.e. the characteristic divides p.
        return Err(Error::NotCoprime {
            a: field.characteristic(),
            p: p as u64,
        });
    }
    Ok(u.mul(g, field).mod_xn_minus_1(p, field))
}

/// `x^p - 1` split over `F_{q^t}`, `t = ord_p(q)`, with `alpha` a fixed
/// primitive p-th root of unity.
#[derive(Clone, Debug)]
pub struct Splitting {
    base: FieldCtx,
    ext: FieldCtx,
    p: u64,
    root_power: u64,
    alpha: FieldElt,
    cosets: Vec<Vec<u64>>,
}

impl Splitting {
    /// `alpha = (primitive element)^((q^t - 1)/p)` raised to `root_power`;
    /// `root_power = 1` is the canonical choice.
    pub fn new(base: &FieldCtx, p: u64, root_power: u64) -> Result<Self> {
        let q = base.characteristic();
        if !base.is_prime_field() {
            return Err(Error::Inconsistent("splitting requires a prime base field".into()));
        }
        if !nt::is_prime(p) {
            return Err(Error::NonPrimeModulus(p));
        }
        if q.is_multiple_of(p) {
            return Err(Error::NotCoprime { a: q, p });
        }
        if root_power.is_multiple_of(p) {
            return Err(Error::NotCoprime { a: root_power, p });
        }
        let t = nt::order_mod(q, p).expect("gcd(q, p) = 1") as u32;
        let ext = FieldCtx::extension(q, t)?;
        let zeta_p = ext.pow(ext.primitive_element(), (ext.order() - 1) / p);
        let alpha = ext.pow(zeta_p, root_power % p);
        debug_assert_eq!(ext.multiplicative_order(alpha), Ok(p));
        let mut cosets: Vec<Vec<u64>> = Vec::new();
        let mut seen = vec![false; p as usize];
        for start in 0..p {
            if seen[start as usize] {
                continue;
            }
            let mut coset = Vec::new();
            let mut k = start;
            while !seen[k as usize] {
                seen[k as usize] = true;
                coset.push(k);
                k = k * q % p;
            }
            coset.sort_unstable();
            cosets.push(coset);
        }
        Ok(Splitting {
            base: base.clone(),
            ext,
            p,
            root_power: root_power % p,
            alpha,
            cosets,
        })
    }

    pub fn extension(&self) -> &FieldCtx {
        &self.ext
    }

    pub fn alpha(&self) -> FieldElt {
        self.alpha
    }

    pub fn root_power(&self) -> u64 {
        self.root_power
    }

    /// q-cyclotomic cosets mod p, ordered by least element (so `{0}` first).
    pub fn cosets(&self) -> &[Vec<u64>] {
        &self.cosets
    }

    /// `prod_{k in exponents} (x - alpha^k)`, which must have coefficients in
    /// the base field (true exactly when `exponents` is a union of cosets).
    pub fn product_over(&self, exponents: &[u64]) -> Result<Poly<FieldElt>> {
        let ext = &self.ext;
        let prod = exponents.iter().fold(Poly::one(ext), |acc, &k| {
            let root = ext.pow(self.alpha, k % self.p);
            acc.mul(&Poly::linear_root(ext, &root), ext)
        });
        let coeffs = prod
            .coeffs()
            .iter()
            .map(|&c| {
                ext.prime_subfield_value(c)
                    .map(|v| self.base.from_u64(v))
                    .ok_or_else(|| {
                        Error::Inconsistent(format!(
                            "product over {exponents:?} has a coefficient outside F_{}",
                            self.base.characteristic()
                        ))
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(coeffs))
    }

    /// Monic irreducible factors of `x^p - 1`, one per coset, in coset order.
    pub fn factors(&self) -> Result<Vec<Poly<FieldElt>>> {
        self.cosets.iter().map(|c| self.product_over(c)).collect()
    }
}

/// Monic irreducible factorization of `x^p - 1` over the prime field `field`,
/// starting with `x - 1`.
pub fn factor_xp_minus_1(field: &FieldCtx, p: u64) -> Result<Vec<Poly<FieldElt>>> {
    Splitting::new(field, p, 1)?.factors()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(q: u64) -> FieldCtx {
        FieldCtx::prime(q).unwrap()
    }

    #[test]
    fn factor_degrees() {
        let f7 = k(7);
        let fs = factor_xp_minus_1(&f7, 19).unwrap();
        assert_eq!(fs.len(), 7);
        assert_eq!(fs[0], Poly::from_ints(&f7, &[6, 1]));
        assert!(fs[1..].iter().all(|f| f.degree() == Some(3)));

        let f3 = k(3);
        let fs = factor_xp_minus_1(&f3, 13).unwrap();
        assert_eq!(fs.len(), 5);
        assert!(fs[1..].iter().all(|f| f.degree() == Some(3)));

        let f2 = k(2);
        let fs = factor_xp_minus_1(&f2, 3).unwrap();
        assert_eq!(
            fs,
            vec![Poly::from_ints(&f2, &[1, 1]), Poly::from_ints(&f2, &[1, 1, 1])]
        );
    }

    #[test]
    fn factors_multiply_back() {
        for (q, p) in [(7u64, 19u64), (3, 13), (2, 7), (5, 11), (2, 23)] {
            let f = k(q);
            let prod = factor_xp_minus_1(&f, p)
                .unwrap()
                .iter()
                .fold(Poly::one(&f), |acc, g| acc.mul(g, &f));
            assert_eq!(prod, Poly::x_pow_minus_one(&f, p as usize));
        }
    }

    #[test]
    fn characteristic_dividing_length_is_rejected() {
        assert_eq!(
            factor_xp_minus_1(&k(3), 3).unwrap_err(),
            Error::NotCoprime { a: 3, p: 3 }
        );
    }

    #[test]
    fn trivial_idempotents() {
        let f = k(3);
        assert_eq!(idempotent_of_cyclic(&Poly::one(&f), 13, &f).unwrap(), Poly::one(&f));
        let zero_code = Poly::x_pow_minus_one(&f, 13);
        assert_eq!(idempotent_of_cyclic(&zero_code, 13, &f), Err(Error::ZeroCode { p: 13 }));
        let not_divisor = Poly::from_ints(&f, &[1, 0, 1]);
        assert_eq!(
            idempotent_of_cyclic(&not_divisor, 13, &f),
            Err(Error::NotADivisor { p: 13 })
        );
    }

    #[test]
    fn all_ones_identities() {
        let f = k(3);
        assert_eq!(all_ones(3, &f), Poly::from_ints(&f, &[1, 1, 1]));
        let h = all_ones(13, &f);
        assert!(h.mul_cyclic(&Poly::from_ints(&f, &[2, 1]), 13, &f).is_zero());
        // h^2 = p h
        let f7 = k(7);
        let h = all_ones(19, &f7);
        assert_eq!(h.mul_cyclic(&h, 19, &f7), h.scale(&f7.from_u64(19), &f7));
    }
}
