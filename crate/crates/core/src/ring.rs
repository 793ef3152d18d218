//! The ring `R = F_q[v]/(v^s - v)` with `(s - 1) | (q - 1)`.
//!
//! `R` is isomorphic to `F_q^s` through evaluation of `v` at `0` and at the
//! `s - 1` roots of `v^{s-1} = 1`, which are the powers of `zeta`, an element
//! of order `s - 1`. The orthogonal idempotents `eta_0, .., eta_{s-1}` are the
//! preimages of the standard basis vectors:
//!
//! ```text
//! eta_0     = 1 - v^{s-1}                                     (v = 0)
//! eta_{j+1} = (s-1)^{-1} (sum_{k=1}^{s-2} zeta^{jk} v^k + v^{s-1})   (v = zeta^{-j})
//! ```

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElt};
use crate::poly::{CoeffRing, Coefficient, Poly};

/// Element of `R` in the basis `1, v, .., v^{s-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RingElt(pub Vec<FieldElt>);

impl Coefficient for RingElt {
    fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.0 == 0)
    }
}

impl RingElt {
    pub fn coeffs(&self) -> &[FieldElt] {
        &self.0
    }

    pub fn to_ints(&self) -> Vec<u32> {
        self.0.iter().map(|c| c.0).collect()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingCtx {
    field: FieldCtx,
    s: usize,
    zeta: FieldElt,
    eta: Vec<RingElt>,
    points: Vec<FieldElt>,
}

impl RingCtx {
    pub fn new(field: &FieldCtx, s: usize) -> Result<Self> {
        let q = field.characteristic();
        if !field.is_prime_field() || s < 2 || !(q - 1).is_multiple_of(s as u64 - 1) {
            return Err(Error::IncompatibleS { q, s });
        }
        let f = field;
        let zeta = f.pow(f.primitive_element(), (q - 1) / (s as u64 - 1));
        if f.multiplicative_order(zeta)? != s as u64 - 1 {
            return Err(Error::Inconsistent("zeta does not have order s - 1".into()));
        }
        let zeta_inv = f.inv(&zeta).expect("zeta is a unit");
        let scale = f.inv(&f.from_u64(s as u64 - 1)).ok_or(Error::IncompatibleS { q, s })?;

        let mut eta = Vec::with_capacity(s);
        let mut first = vec![f.zero(); s];
        first[0] = f.one();
        first[s - 1] = f.neg(&f.one());
        eta.push(RingElt(first));
        for j in 0..s as u64 - 1 {
            let mut c = vec![f.zero(); s];
            for (k, slot) in c.iter_mut().enumerate().take(s - 1).skip(1) {
                *slot = f.mul(&scale, &f.pow(zeta, j * k as u64));
            }
            c[s - 1] = scale;
            eta.push(RingElt(c));
        }
        let mut points = vec![f.zero()];
        points.extend((0..s as u64 - 1).map(|j| f.pow(zeta_inv, j)));

        let ring = RingCtx {
            field: field.clone(),
            s,
            zeta,
            eta,
            points,
        };
        ring.validate()?;
        Ok(ring)
    }

    fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::Inconsistent(format!("eta idempotents: {what}")));
        for (i, a) in self.eta.iter().enumerate() {
            if self.mul(a, a) != *a {
                return bad("eta_i^2 != eta_i");
            }
            for b in &self.eta[i + 1..] {
                if !self.mul(a, b).is_zero() {
                    return bad("eta_i eta_j != 0");
                }
            }
        }
        let total = self.eta.iter().fold(self.zero(), |acc, e| self.add(&acc, e));
        if total != self.one() {
            return bad("sum of eta_i != 1");
        }
        let f = &self.field;
        if self.s > 2 {
            let geometric = (0..self.s as u64 - 1).fold(f.zero(), |acc, k| f.add(&acc, &f.pow(self.zeta, k)));
            if geometric.0 != 0 {
                return bad("1 + zeta + .. + zeta^{s-2} != 0");
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn zeta(&self) -> FieldElt {
        self.zeta
    }

    pub fn eta(&self) -> &[RingElt] {
        &self.eta
    }

    /// Evaluation points of `v`: `0, 1, zeta^{-1}, .., zeta^{-(s-2)}`;
    /// `eta_k` is the indicator of point `k`.
    pub fn crt_points(&self) -> &[FieldElt] {
        &self.points
    }

    pub fn from_field(&self, c: FieldElt) -> RingElt {
        let mut v = vec![self.field.zero(); self.s];
        v[0] = c;
        RingElt(v)
    }

    pub fn from_ints(&self, coeffs: &[u64]) -> Result<RingElt> {
        if coeffs.len() != self.s {
            return Err(Error::Parse(format!(
                "ring element needs {} coefficients, got {}",
                self.s,
                coeffs.len()
            )));
        }
        Ok(RingElt(coeffs.iter().map(|&c| self.field.from_u64(c)).collect()))
    }

    /// The `s` base-field components of `r`.
    pub fn crt(&self, r: &RingElt) -> Vec<FieldElt> {
        let f = &self.field;
        self.points
            .iter()
            .map(|pt| r.0.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, pt), c)))
            .collect()
    }

    /// Inverse of `crt`: `sum_k eta_k values_k`.
    pub fn from_crt(&self, values: &[FieldElt]) -> RingElt {
        debug_assert_eq!(values.len(), self.s);
        values
            .iter()
            .zip(&self.eta)
            .fold(self.zero(), |acc, (v, e)| self.add(&acc, &self.scale(e, *v)))
    }

    fn scale(&self, r: &RingElt, c: FieldElt) -> RingElt {
        RingElt(r.0.iter().map(|x| self.field.mul(x, &c)).collect())
    }

    /// Component `k` of a polynomial over `R`, coefficientwise.
    pub fn poly_component(&self, f: &Poly<RingElt>, k: usize) -> Poly<FieldElt> {
        f.map(|c| self.crt(c)[k])
    }

    /// The polynomial over `R` whose component `k` is `parts[k]`.
    pub fn poly_from_components(&self, parts: &[Poly<FieldElt>]) -> Poly<RingElt> {
        debug_assert_eq!(parts.len(), self.s);
        let len = parts.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
        Poly::new(
            (0..len)
                .map(|i| {
                    let values: Vec<FieldElt> = parts.iter().map(|p| p.coeff(&self.field, i)).collect();
                    self.from_crt(&values)
                })
                .collect(),
        )
    }

    /// Embeds a polynomial over `F_q` as a polynomial over `R`.
    pub fn lift_poly(&self, f: &Poly<FieldElt>) -> Poly<RingElt> {
        f.map(|&c| self.from_field(c))
    }

    /// `sum_k eta_k f_k`.
    pub fn combine(&self, parts: &[Poly<FieldElt>]) -> Poly<RingElt> {
        parts.iter().zip(&self.eta).fold(Poly::zero(), |acc, (f, e)| {
            acc.add(&self.lift_poly(f).scale(e, self), self)
        })
    }
}

impl CoeffRing for RingCtx {
    type Elem = RingElt;

    fn zero(&self) -> RingElt {
        RingElt(vec![self.field.zero(); self.s])
    }

    fn one(&self) -> RingElt {
        self.from_field(self.field.one())
    }

    fn add(&self, a: &RingElt, b: &RingElt) -> RingElt {
        RingElt(a.0.iter().zip(&b.0).map(|(x, y)| self.field.add(x, y)).collect())
    }

    fn neg(&self, a: &RingElt) -> RingElt {
        RingElt(a.0.iter().map(|x| self.field.neg(x)).collect())
    }

    /// Product in the `v`-basis using `v^k = v^{k-(s-1)}` for `k >= s`.
    fn mul(&self, a: &RingElt, b: &RingElt) -> RingElt {
        let f = &self.field;
        let s = self.s;
        let mut out = vec![f.zero(); s];
        for (i, x) in a.0.iter().enumerate() {
            if x.0 == 0 {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                let mut k = i + j;
                if k >= s {
                    k -= s - 1;
                }
                out[k] = f.add(&out[k], &f.mul(x, y));
            }
        }
        RingElt(out)
    }

    fn inv(&self, a: &RingElt) -> Option<RingElt> {
        let parts = self
            .crt(a)
            .iter()
            .map(|c| self.field.inv(c))
            .collect::<Option<Vec<_>>>()?;
        Some(self.from_crt(&parts))
    }

    fn from_u64(&self, n: u64) -> RingElt {
        self.from_field(self.field.from_u64(n))
    }

    fn render(&self, a: &RingElt) -> (String, bool) {
        let terms: Vec<String> =
            a.0.iter()
                .enumerate()
                .filter(|(_, c)| c.0 != 0)
                .map(|(i, c)| match (i, c.0) {
                    (0, v) => v.to_string(),
                    (1, 1) => "v".into(),
                    (1, v) => format!("{v}*v"),
                    (i, 1) => format!("v^{i}"),
                    (i, v) => format!("{v}*v^{i}"),
                })
                .collect();
        if terms.is_empty() {
            return ("0".into(), true);
        }
        let atomic = terms.len() == 1 && a.0[1..].iter().all(|c| c.0 == 0);
        (terms.join("+"), atomic)
    }
}
