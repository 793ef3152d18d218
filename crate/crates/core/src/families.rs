//! The four families of m-adic residue codes of prime length `p` over `F_q`.
//!
//! With `g_hat_i = prod_{k in Q_i} (x - alpha^k)` and `g_i = (x^p - 1)/g_hat_i`:
//!
//! | family   | generator              | dimension         |
//! |----------|------------------------|-------------------|
//! | even-I   | `g_i`                  | `(p-1)/m`         |
//! | odd-I    | `g_hat_i`              | `p - (p-1)/m`     |
//! | even-II  | `(x - 1) g_hat_i`      | `p - (p-1)/m - 1` |
//! | odd-II   | `g_i / (x - 1)`        | `(p-1)/m + 1`     |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cyclic::{all_ones, idempotent_of_cyclic, Splitting};
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElt};
use crate::poly::{CoeffRing, Poly};
use crate::residue::ResidueSystem;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "even-I")]
    EvenI,
    #[serde(rename = "odd-I")]
    OddI,
    #[serde(rename = "even-II")]
    EvenII,
    #[serde(rename = "odd-II")]
    OddII,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::EvenI, Family::OddI, Family::EvenII, Family::OddII];

    pub fn name(self) -> &'static str {
        match self {
            Family::EvenI => "even-I",
            Family::OddI => "odd-I",
            Family::EvenII => "even-II",
            Family::OddII => "odd-II",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown family `{s}` (expected even-I, odd-I, even-II or odd-II)"))
    }
}

/// A cyclic code of length `p` over a prime field, carried with both its
/// monic generator polynomial and its idempotent generator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclicCode {
    pub field: FieldCtx,
    pub p: usize,
    pub family: Family,
    pub index: usize,
    pub generator: Poly<FieldElt>,
    pub idempotent: Poly<FieldElt>,
}

impl CyclicCode {
    pub fn q(&self) -> u64 {
        self.field.characteristic()
    }

    pub fn dimension(&self) -> usize {
        self.p - self.generator.degree().expect("generator is nonzero")
    }

    /// Membership test `c e = c (mod x^p - 1)`.
    pub fn contains(&self, word: &Poly<FieldElt>) -> bool {
        let c = word.mod_xn_minus_1(self.p, &self.field);
        c.mul_cyclic(&self.idempotent, self.p, &self.field) == c
    }
}

/// All four families for one residue system over one prime field.
#[derive(Clone, Debug)]
pub struct FieldFamilies {
    field: FieldCtx,
    sys: ResidueSystem,
    splitting: Splitting,
    /// `g_hat_i` for each class.
    class_polys: Vec<Poly<FieldElt>>,
}

impl FieldFamilies {
    /// Requires `gcd(p, q) = 1` and `q` an m-adic residue mod `p`; `root_power`
    /// selects `alpha` as a power of the canonical primitive p-th root.
    pub fn new(field: &FieldCtx, sys: &ResidueSystem, root_power: u64) -> Result<Self> {
        let q = field.characteristic();
        let p = sys.p();
        match sys.class_index(q) {
            None => return Err(Error::NotCoprime { a: q, p }),
            Some(0) => {}
            Some(class) => return Err(Error::QNotResidue { q, p, class }),
        }
        let splitting = Splitting::new(field, p, root_power)?;
        let class_polys = sys
            .classes()
            .iter()
            .map(|c| splitting.product_over(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(FieldFamilies {
            field: field.clone(),
            sys: sys.clone(),
            splitting,
            class_polys,
        })
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn system(&self) -> &ResidueSystem {
        &self.sys
    }

    pub fn splitting(&self) -> &Splitting {
        &self.splitting
    }

    pub fn p(&self) -> usize {
        self.sys.p() as usize
    }

    pub fn m(&self) -> usize {
        self.sys.m()
    }

    /// `x^p - 1`.
    pub fn modulus(&self) -> Poly<FieldElt> {
        Poly::x_pow_minus_one(&self.field, self.p())
    }

    /// `h = 1 + x + ... + x^{p-1}`.
    pub fn all_ones(&self) -> Poly<FieldElt> {
        all_ones(self.p(), &self.field)
    }

    fn x_minus_one(&self) -> Poly<FieldElt> {
        Poly::linear_root(&self.field, &self.field.one())
    }

    pub fn generator(&self, family: Family, index: usize) -> Result<Poly<FieldElt>> {
        let m = self.m();
        let g_hat = self.class_polys.get(index).ok_or(Error::BadSlotIndex { index, m })?;
        let f = &self.field;
        let g = || self.modulus().exact_div(g_hat, f);
        Ok(match family {
            Family::OddI => g_hat.clone(),
            Family::EvenI => g()?,
            Family::EvenII => self.x_minus_one().mul(g_hat, f),
            Family::OddII => g()?
                .exact_div(&self.x_minus_one(), f)
                .map_err(|_| Error::Inconsistent(format!("x - 1 does not divide g_{index}")))?,
        })
    }

    pub fn code(&self, family: Family, index: usize) -> Result<CyclicCode> {
        let generator = self.generator(family, index)?;
        let idempotent = idempotent_of_cyclic(&generator, self.p(), &self.field)?;
        Ok(CyclicCode {
            field: self.field.clone(),
            p: self.p(),
            family,
            index,
            generator,
            idempotent,
        })
    }

    pub fn family(&self, family: Family) -> Result<Vec<CyclicCode>> {
        (0..self.m()).map(|i| self.code(family, i)).collect()
    }

    pub fn even_like_i(&self) -> Result<Vec<CyclicCode>> {
        self.family(Family::EvenI)
    }

    pub fn odd_like_i(&self) -> Result<Vec<CyclicCode>> {
        self.family(Family::OddI)
    }

    pub fn even_like_ii(&self) -> Result<Vec<CyclicCode>> {
        self.family(Family::EvenII)
    }

    pub fn odd_like_ii(&self) -> Result<Vec<CyclicCode>> {
        self.family(Family::OddII)
    }
}
