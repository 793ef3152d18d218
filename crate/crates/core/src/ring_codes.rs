//! m-adic residue codes of length `p` over `R = F_q[v]/(v^s - v)`.
//!
//! A code over `R` is fixed by an s-tuple of field-code indices (its slots):
//! component `k` of the code is the field code with index `slots[k]`, and
//! the idempotent generator is `sum_k eta_k e_{slots[k]}`.
//!
//! With `E` the even-like class-I idempotent and `u = p^{-1} h` the
//! idempotent of the repetition code, the other families are
//! `E' = 1 - E`, `D = 1 - u - E` and `D' = u + E`. When `p = 1 (mod q)`,
//! `u = h` and these are the familiar `1 - h - E` and `h + E`.

use crate::error::{Error, Result};
use crate::families::{CyclicCode, Family, FieldFamilies};
use crate::field::FieldElt;
use crate::poly::{CoeffRing, Poly};
use crate::residue::ResidueSystem;
use crate::ring::{RingCtx, RingElt};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingCode {
    pub ring: RingCtx,
    pub system: ResidueSystem,
    pub family: Family,
    pub slots: Vec<usize>,
    /// Idempotent generator over `R`.
    pub idempotent: Poly<RingElt>,
    /// Slotwise CRT combination of the component generator polynomials,
    /// padded to the largest component degree.
    pub generator: Poly<RingElt>,
    pub components: Vec<CyclicCode>,
}

impl RingCode {
    /// Builds the code of `family` with the given slot assignment.
    pub fn build(ring: &RingCtx, fams: &FieldFamilies, family: Family, slots: &[usize]) -> Result<Self> {
        check_compatible(ring, fams)?;
        if slots.len() != ring.s() {
            return Err(Error::SlotCount {
                expected: ring.s(),
                got: slots.len(),
            });
        }
        let m = fams.m();
        if let Some(&index) = slots.iter().find(|&&i| i >= m) {
            return Err(Error::BadSlotIndex { index, m });
        }
        let components = slots
            .iter()
            .map(|&i| fams.code(family, i))
            .collect::<Result<Vec<_>>>()?;
        let idems: Vec<Poly<FieldElt>> = components.iter().map(|c| c.idempotent.clone()).collect();
        let gens: Vec<Poly<FieldElt>> = components.iter().map(|c| c.generator.clone()).collect();
        let idempotent = ring.combine(&idems);
        let p = fams.p();
        if idempotent.mul_cyclic(&idempotent, p, ring) != idempotent {
            return Err(Error::Inconsistent("combined idempotent is not idempotent".into()));
        }
        Ok(RingCode {
            ring: ring.clone(),
            system: fams.system().clone(),
            family,
            slots: slots.to_vec(),
            idempotent,
            generator: ring.poly_from_components(&gens),
            components,
        })
    }

    pub fn p(&self) -> usize {
        self.system.p() as usize
    }

    pub fn s(&self) -> usize {
        self.ring.s()
    }

    /// Component ranks, one per slot.
    pub fn component_ranks(&self) -> Vec<usize> {
        self.components.iter().map(CyclicCode::dimension).collect()
    }

    /// The common component rank when all slots agree (the code is then
    /// free of that rank).
    pub fn free_rank(&self) -> Option<usize> {
        let ranks = self.component_ranks();
        ranks.windows(2).all(|w| w[0] == w[1]).then(|| ranks[0])
    }

    /// Membership `c E = c (mod x^p - 1)`.
    pub fn contains(&self, word: &Poly<RingElt>) -> bool {
        let p = self.p();
        let c = word.mod_xn_minus_1(p, &self.ring);
        c.mul_cyclic(&self.idempotent, p, &self.ring) == c
    }

    /// Membership decided through the CRT components.
    pub fn contains_componentwise(&self, word: &Poly<RingElt>) -> bool {
        self.components
            .iter()
            .enumerate()
            .all(|(k, code)| code.contains(&self.ring.poly_component(word, k)))
    }
}

fn check_compatible(ring: &RingCtx, fams: &FieldFamilies) -> Result<()> {
    if ring.field() != fams.field() {
        return Err(Error::Inconsistent(
            "ring and field families use different base fields".into(),
        ));
    }
    Ok(())
}

/// `u = p^{-1} h`, the idempotent of the repetition code, lifted to `R`.
pub fn repetition_idempotent(ring: &RingCtx, p: usize) -> Poly<RingElt> {
    let f = ring.field();
    let inv_p = f.inv(&f.from_u64(p as u64)).expect("gcd(p, q) = 1");
    Poly::new(vec![ring.from_field(inv_p); p])
}

/// Even-like class-I code with idempotent `sum_k eta_k e_{slots[k]}`.
pub fn ring_even_like_i(ring: &RingCtx, fams: &FieldFamilies, slots: &[usize]) -> Result<RingCode> {
    RingCode::build(ring, fams, Family::EvenI, slots)
}

fn derived(code: &RingCode, fams: &FieldFamilies, family: Family, expected: Poly<RingElt>) -> Result<RingCode> {
    if code.family != Family::EvenI {
        return Err(Error::Inconsistent(format!(
            "{family} codes are derived from an even-I code, got {}",
            code.family
        )));
    }
    let out = RingCode::build(&code.ring, fams, family, &code.slots)?;
    if out.idempotent != expected {
        return Err(Error::Inconsistent(format!(
            "{family} idempotent disagrees with its closed form"
        )));
    }
    Ok(out)
}

/// Odd-like class-I complement, idempotent `1 - E`.
pub fn ring_odd_like_i(code: &RingCode, fams: &FieldFamilies) -> Result<RingCode> {
    let r = &code.ring;
    let expected = Poly::one(r).sub(&code.idempotent, r);
    derived(code, fams, Family::OddI, expected)
}

/// Even-like class-II code, idempotent `1 - u - E`.
pub fn ring_even_like_ii(code: &RingCode, fams: &FieldFamilies) -> Result<RingCode> {
    let r = &code.ring;
    let u = repetition_idempotent(r, code.p());
    let expected = Poly::one(r).sub(&u, r).sub(&code.idempotent, r);
    derived(code, fams, Family::EvenII, expected)
}

/// Odd-like class-II code, idempotent `u + E`.
pub fn ring_odd_like_ii(code: &RingCode, fams: &FieldFamilies) -> Result<RingCode> {
    let r = &code.ring;
    let u = repetition_idempotent(r, code.p());
    let expected = u.add(&code.idempotent, r);
    derived(code, fams, Family::OddII, expected)
}

/// `(E_0, .., E_{s-1})` with `E_0 = code.idempotent` and
/// `E_{r+1} = mu_a(E_r)`.
pub fn ring_mu_chain(code: &RingCode, fams: &FieldFamilies, a: u64) -> Result<Vec<RingCode>> {
    ring_mu_orbit(code, fams, a, code.s())
}

/// The first `len` codes of the `mu_a` orbit of `code`. The slot assignment
/// of each image is recovered from its CRT components and the image is
/// rebuilt from those slots as a cross-check.
pub fn ring_mu_orbit(code: &RingCode, fams: &FieldFamilies, a: u64, len: usize) -> Result<Vec<RingCode>> {
    let sys = fams.system();
    let class = sys.class_index(a).ok_or(Error::NotCoprime { a, p: sys.p() })?;
    if crate::nt::gcd(class as u64, sys.m() as u64) != 1 {
        return Err(Error::MultiplierNotCyclic { a, class, m: sys.m() });
    }
    let family_idems: Vec<Poly<FieldElt>> = fams.family(code.family)?.into_iter().map(|c| c.idempotent).collect();
    let ring = &code.ring;
    let mut chain = vec![code.clone()];
    while chain.len() < len {
        let last = chain.last().expect("chain is nonempty");
        let image = sys.mu_poly(a, &last.idempotent, ring)?;
        let slots = (0..ring.s())
            .map(|k| {
                let part = ring.poly_component(&image, k);
                family_idems.iter().position(|e| *e == part).ok_or_else(|| {
                    Error::Inconsistent(format!(
                        "mu_{a} image component {k} is not a {} idempotent",
                        code.family
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let next = RingCode::build(ring, fams, code.family, &slots)?;
        if next.idempotent != image {
            return Err(Error::Inconsistent(format!(
                "mu_{a} image differs from its rebuilt code"
            )));
        }
        chain.push(next);
    }
    Ok(chain)
}
