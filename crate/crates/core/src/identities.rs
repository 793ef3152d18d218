//! Algebraic identities among the idempotent generators of ring codes along
//! a `mu_a` orbit.
//!
//! Each identity is evaluated exactly in `R[x]/(x^p - 1)` in two forms: as
//! usually stated with the all-ones polynomial `h`, and in a corrected form
//! with the repetition idempotent `u = p^{-1} h` (and `+` in the sum of the
//! `D'`). Each carries the hypotheses under which it is a theorem:
//!
//! * distinct slots: along the orbit no slot repeats a class, i.e. `s <= m`;
//! * covering: every slot runs through all `m` classes, i.e. `s >= m`;
//! * full coverage: every slot meets each class exactly once, i.e. `s = m`;
//! * `h` idempotent: `p = 1 (mod q)`, so `u = h`.

use std::fmt;

use serde::Serialize;

use crate::cyclic::all_ones;
use crate::error::Result;
use crate::families::{Family, FieldFamilies};
use crate::field::FieldCtx;
use crate::poly::{CoeffRing, Poly};
use crate::residue::ResidueSystem;
use crate::ring::{RingCtx, RingElt};
use crate::ring_codes::{repetition_idempotent, ring_even_like_i, ring_mu_chain, RingCode};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Hypothesis {
    DistinctSlots,
    Covering,
    FullCoverage,
    HIdempotent,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Hypothesis::DistinctSlots => "s <= m",
            Hypothesis::Covering => "s >= m",
            Hypothesis::FullCoverage => "s = m",
            Hypothesis::HIdempotent => "p = 1 mod q",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Form {
    /// Stated with `h`, `D = 1 - h - E`, `D' = h + E`.
    Stated,
    /// Stated with `u = p^{-1} h`, `D = 1 - u - E`, `D' = u + E`.
    Corrected,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct IdentityCheck {
    pub statement: String,
    pub form: Form,
    pub requires: Vec<Hypothesis>,
    /// All of `requires` hold for this configuration.
    pub applicable: bool,
    pub holds: bool,
}

/// Parameters of one orbit: the residue system, ring and starting slots.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct OrbitConfig {
    pub q: u64,
    pub p: u64,
    pub m: usize,
    pub s: usize,
    pub b: Option<u64>,
    pub a: Option<u64>,
    pub root_power: u64,
    pub slots: Vec<usize>,
}

impl OrbitConfig {
    /// Default system and slots `(0, 1, .., s - 1) mod m`.
    pub fn diagonal(q: u64, p: u64, m: usize, s: usize) -> Self {
        OrbitConfig {
            q,
            p,
            m,
            s,
            b: None,
            a: None,
            root_power: 1,
            slots: (0..s).map(|k| k % m).collect(),
        }
    }

    pub fn label(&self) -> String {
        format!("(q,p,m,s)=({},{},{},{})", self.q, self.p, self.m, self.s)
    }
}

#[derive(Clone, Debug)]
pub struct Orbit {
    pub config: OrbitConfig,
    pub ring: RingCtx,
    pub families: FieldFamilies,
    pub chain: Vec<RingCode>,
}

impl Orbit {
    /// Fails when the configuration is invalid (q not a residue, `(s-1) | (q-1)`
    /// violated, and so on).
    pub fn build(config: &OrbitConfig) -> Result<Self> {
        let field = FieldCtx::prime(config.q)?;
        let sys = ResidueSystem::new(config.p, config.m, config.b, config.a)?;
        let ring = RingCtx::new(&field, config.s)?;
        let families = FieldFamilies::new(&field, &sys, config.root_power)?;
        let start = ring_even_like_i(&ring, &families, &config.slots)?;
        let chain = ring_mu_chain(&start, &families, sys.multiplier())?;
        Ok(Orbit {
            config: config.clone(),
            ring,
            families,
            chain,
        })
    }

    fn hypothesis_holds(&self, h: Hypothesis) -> bool {
        let (q, p, m, s) = (self.config.q, self.config.p, self.config.m, self.config.s);
        match h {
            Hypothesis::DistinctSlots => s <= m,
            Hypothesis::Covering => s >= m,
            Hypothesis::FullCoverage => s == m,
            Hypothesis::HIdempotent => p % q == 1,
        }
    }

    /// Evaluates every identity in both forms.
    pub fn check(&self) -> Result<Vec<IdentityCheck>> {
        use Hypothesis::*;
        let r = &self.ring;
        let p = self.config.p as usize;
        let s = self.config.s;
        let a = self.families.system().multiplier();
        let sys = self.families.system();
        let mul = |x: &Poly<RingElt>, y: &Poly<RingElt>| x.mul_cyclic(y, p, r);
        let one = Poly::one(r);
        let e: Vec<Poly<RingElt>> = self.chain.iter().map(|c| c.idempotent.clone()).collect();
        let h = all_ones(p, r);
        let u = repetition_idempotent(r, p);

        let mut out = Vec::new();
        let mut push = |statement: &str, form: Form, requires: Vec<Hypothesis>, holds: bool| {
            let applicable = requires.iter().all(|&x| self.hypothesis_holds(x));
            out.push(IdentityCheck {
                statement: statement.to_string(),
                form,
                requires,
                applicable,
                holds,
            });
        };
        let pairs: Vec<(usize, usize)> = (0..s)
            .flat_map(|i| (0..s).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect();
        let product = |xs: &[Poly<RingElt>]| xs.iter().fold(one.clone(), |acc, x| mul(&acc, x));
        let sum = |xs: &[Poly<RingElt>]| xs.iter().fold(Poly::zero(), |acc, x| acc.add(x, r));
        let is_idem = |x: &Poly<RingElt>| mul(x, x) == *x;

        push("E_r^2 = E_r", Form::Stated, vec![], e.iter().all(is_idem));
        let mut mu_ok = true;
        for x in &e {
            mu_ok &= is_idem(&sys.mu_poly(a, x, r)?);
        }
        push("mu_a(E_r) is idempotent", Form::Stated, vec![], mu_ok);
        push(
            "E_r E_t = 0 for r != t",
            Form::Stated,
            vec![DistinctSlots],
            pairs.iter().all(|&(i, j)| mul(&e[i], &e[j]).is_zero()),
        );

        for (form, hh) in [(Form::Stated, &h), (Form::Corrected, &u)] {
            let needs = |mut v: Vec<Hypothesis>| {
                if form == Form::Stated {
                    v.push(HIdempotent);
                }
                v
            };
            let e_prime: Vec<Poly<RingElt>> = e.iter().map(|x| one.sub(x, r)).collect();
            let d: Vec<Poly<RingElt>> = e.iter().map(|x| one.sub(hh, r).sub(x, r)).collect();
            let d_prime: Vec<Poly<RingElt>> = e.iter().map(|x| hh.add(x, r)).collect();
            let name = |base: &str| match form {
                Form::Stated => base.to_string(),
                Form::Corrected => base.replace('h', "u"),
            };

            if form == Form::Stated {
                let mut mu_cycles = true;
                for w in e_prime.windows(2) {
                    mu_cycles &= sys.mu_poly(a, &w[0], r)? == w[1];
                }
                push("mu_a(E'_r) = E'_{r+1}", form, vec![], mu_cycles);
                push(
                    "E'_i + E'_j - E'_i E'_j = 1 for i != j",
                    form,
                    vec![DistinctSlots],
                    pairs
                        .iter()
                        .all(|&(i, j)| e_prime[i].add(&e_prime[j], r).sub(&mul(&e_prime[i], &e_prime[j]), r) == one),
                );
            }
            push(
                &name("sum_r E_r = 1 - h"),
                form,
                needs(vec![FullCoverage]),
                sum(&e) == one.sub(hh, r),
            );
            push(
                &name("prod_r E'_r = h"),
                form,
                needs(vec![Covering]),
                product(&e_prime) == *hh,
            );
            push(&name("D_r^2 = D_r"), form, needs(vec![]), d.iter().all(is_idem));
            let mut d_cycles = true;
            for w in d.windows(2) {
                d_cycles &= sys.mu_poly(a, &w[0], r)? == w[1];
            }
            push(&name("mu_a(D_r) = D_{r+1}"), form, vec![], d_cycles);
            push(
                &name("D_i + D_j - D_i D_j = 1 - h for i != j"),
                form,
                needs(vec![DistinctSlots]),
                pairs
                    .iter()
                    .all(|&(i, j)| d[i].add(&d[j], r).sub(&mul(&d[i], &d[j]), r) == one.sub(hh, r)),
            );
            push(
                &name("prod_r D_r = 0"),
                form,
                needs(vec![Covering]),
                product(&d).is_zero(),
            );
            push(&name("D'_r^2 = D'_r"), form, needs(vec![]), d_prime.iter().all(is_idem));
            push(
                &name("D'_i D'_j = h for i != j"),
                form,
                needs(vec![DistinctSlots]),
                pairs.iter().all(|&(i, j)| mul(&d_prime[i], &d_prime[j]) == *hh),
            );
            let s_minus_1 = r.from_u64(s as u64 - 1);
            match form {
                Form::Stated => push(
                    "sum_r D'_r = 1 - (s-1) h",
                    form,
                    needs(vec![FullCoverage]),
                    sum(&d_prime) == one.sub(&hh.scale(&s_minus_1, r), r),
                ),
                Form::Corrected => push(
                    "sum_r D'_r = 1 + (s-1) u",
                    form,
                    vec![FullCoverage],
                    sum(&d_prime) == one.add(&hh.scale(&s_minus_1, r), r),
                ),
            }
        }
        Ok(out)
    }

    /// The other three families along the same orbit, built from the field
    /// idempotents and cross-checked against their closed forms.
    pub fn derived_families(&self) -> Result<Vec<(Family, Vec<RingCode>)>> {
        use crate::ring_codes::{ring_even_like_ii, ring_odd_like_i, ring_odd_like_ii};
        let f = &self.families;
        Ok(vec![
            (
                Family::OddI,
                self.chain
                    .iter()
                    .map(|c| ring_odd_like_i(c, f))
                    .collect::<Result<_>>()?,
            ),
            (
                Family::EvenII,
                self.chain
                    .iter()
                    .map(|c| ring_even_like_ii(c, f))
                    .collect::<Result<_>>()?,
            ),
            (
                Family::OddII,
                self.chain
                    .iter()
                    .map(|c| ring_odd_like_ii(c, f))
                    .collect::<Result<_>>()?,
            ),
        ])
    }
}

/// The grid of `(q, p, m, s)` configurations exercised by the built-in
/// verification. The first entry reproduces the published length-13
/// example (`b = 2`, `a = 7`, `alpha` the square of the canonical root).
pub fn standard_grid() -> Vec<OrbitConfig> {
    vec![
        OrbitConfig {
            b: Some(2),
            a: Some(7),
            root_power: 2,
            ..OrbitConfig::diagonal(3, 13, 4, 3)
        },
        OrbitConfig::diagonal(7, 19, 6, 3),
        OrbitConfig::diagonal(7, 19, 3, 4),
        OrbitConfig::diagonal(3, 13, 2, 2),
        OrbitConfig::diagonal(5, 11, 5, 5),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_ring_case_satisfies_everything_but_the_sign() {
        let orbit = Orbit::build(&OrbitConfig::diagonal(3, 13, 2, 2)).unwrap();
        for c in orbit.check().unwrap() {
            assert!(c.applicable, "{}", c.statement);
            let expect = c.statement != "sum_r D'_r = 1 - (s-1) h";
            assert_eq!(c.holds, expect, "{}", c.statement);
        }
    }

    #[test]
    fn invalid_grid_entry_is_rejected() {
        // 5 is not a 5-adic residue modulo 11.
        assert!(Orbit::build(&OrbitConfig::diagonal(5, 11, 5, 5)).is_err());
    }
}
