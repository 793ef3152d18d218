//! Dense univariate polynomials over a coefficient ring.
//!
//! Coefficients are stored in ascending degree order with trailing zeros
//! trimmed, so the zero polynomial is the empty list. Every operation takes
//! the coefficient ring explicitly; the same code serves prime fields,
//! extension fields and `F_q[v]/(v^s - v)`.

use std::fmt::Debug;

use crate::error::{Error, Result};

/// A coefficient value that can recognize zero without its ring.
pub trait Coefficient: Clone + PartialEq + Eq + Debug {
    fn is_zero(&self) -> bool;
}

/// Commutative ring with identity whose elements are polynomial coefficients.
pub trait CoeffRing {
    type Elem: Coefficient;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero and for zero divisors.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Image of the integer `n` under the unique ring map from `Z`.
    fn from_u64(&self, n: u64) -> Self::Elem;
    /// Text rendering of one coefficient; `atomic` is true when the text
    /// needs no parentheses in front of `*x^k`.
    fn render(&self, a: &Self::Elem) -> (String, bool);

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E: Coefficient> Poly<E> {
    pub fn new(mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(Coefficient::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: E) -> Self {
        Poly::new(vec![c])
    }

    pub fn one<R: CoeffRing<Elem = E>>(ring: &R) -> Self {
        Poly::constant(ring.one())
    }

    /// `c * x^k`.
    pub fn monomial<R: CoeffRing<Elem = E>>(ring: &R, c: E, k: usize) -> Self {
        let mut coeffs = vec![ring.zero(); k];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one<R: CoeffRing<Elem = E>>(ring: &R, n: usize) -> Self {
        let mut coeffs = vec![ring.zero(); n + 1];
        coeffs[0] = ring.neg(&ring.one());
        coeffs[n] = ring.add(&coeffs[n], &ring.one());
        Poly::new(coeffs)
    }

    /// `x - c`.
    pub fn linear_root<R: CoeffRing<Elem = E>>(ring: &R, c: &E) -> Self {
        Poly::new(vec![ring.neg(c), ring.one()])
    }

    /// Builds a polynomial from integer coefficients mapped into the ring.
    pub fn from_ints<R: CoeffRing<Elem = E>>(ring: &R, coeffs: &[u64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| ring.from_u64(c)).collect())
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff<R: CoeffRing<Elem = E>>(&self, ring: &R, i: usize) -> E {
        self.coeffs.get(i).cloned().unwrap_or_else(|| ring.zero())
    }

    pub fn add<R: CoeffRing<Elem = E>>(&self, other: &Self, ring: &R) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| ring.add(&self.coeff(ring, i), &other.coeff(ring, i)))
                .collect(),
        )
    }

    pub fn sub<R: CoeffRing<Elem = E>>(&self, other: &Self, ring: &R) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| ring.sub(&self.coeff(ring, i), &other.coeff(ring, i)))
                .collect(),
        )
    }

    pub fn neg<R: CoeffRing<Elem = E>>(&self, ring: &R) -> Self {
        Poly::new(self.coeffs.iter().map(|c| ring.neg(c)).collect())
    }

    pub fn scale<R: CoeffRing<Elem = E>>(&self, c: &E, ring: &R) -> Self {
        Poly::new(self.coeffs.iter().map(|a| ring.mul(a, c)).collect())
    }

    pub fn mul<R: CoeffRing<Elem = E>>(&self, other: &Self, ring: &R) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = ring.add(&out[i + j], &ring.mul(a, b));
            }
        }
        Poly::new(out)
    }

    /// Euclidean division `self = quot * divisor + rem` with `deg rem < deg divisor`.
    pub fn divmod<R: CoeffRing<Elem = E>>(&self, divisor: &Self, ring: &R) -> Result<(Self, Self)> {
        let lead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let lead_inv = ring.inv(lead).ok_or(Error::NonUnitLeadingCoefficient)?;
        let dlen = divisor.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dlen {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![ring.zero(); rem.len() - dlen + 1];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let c = ring.mul(top, &lead_inv);
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] = ring.sub(&rem[shift + j], &ring.mul(&c, d));
            }
            quot[shift] = c;
        }
        rem.truncate(dlen - 1);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem<R: CoeffRing<Elem = E>>(&self, divisor: &Self, ring: &R) -> Result<Self> {
        Ok(self.divmod(divisor, ring)?.1)
    }

    /// Exact quotient; fails with `NotADivisor` style inconsistency when the
    /// remainder is nonzero.
    pub fn exact_div<R: CoeffRing<Elem = E>>(&self, divisor: &Self, ring: &R) -> Result<Self> {
        let (q, r) = self.divmod(divisor, ring)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Inconsistent("division left a nonzero remainder".into()))
        }
    }

    pub fn divides<R: CoeffRing<Elem = E>>(&self, other: &Self, ring: &R) -> Result<bool> {
        Ok(other.rem(self, ring)?.is_zero())
    }

    pub fn eval<R: CoeffRing<Elem = E>>(&self, x: &E, ring: &R) -> E {
        self.coeffs
            .iter()
            .rev()
            .fold(ring.zero(), |acc, c| ring.add(&ring.mul(&acc, x), c))
    }

    /// Scales to leading coefficient one.
    pub fn monic<R: CoeffRing<Elem = E>>(&self, ring: &R) -> Result<Self> {
        match self.leading() {
            None => Ok(Poly::zero()),
            Some(l) => {
                let inv = ring.inv(l).ok_or(Error::NonUnitLeadingCoefficient)?;
                Ok(self.scale(&inv, ring))
            }
        }
    }

    /// `self^e mod modulus` by square-and-multiply.
    pub fn pow_mod<R: CoeffRing<Elem = E>>(&self, mut e: u128, modulus: &Self, ring: &R) -> Result<Self> {
        let mut base = self.rem(modulus, ring)?;
        let mut acc = Poly::one(ring).rem(modulus, ring)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, ring).rem(modulus, ring)?;
            }
            base = base.mul(&base, ring).rem(modulus, ring)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Reduction modulo `x^n - 1`: the coefficient of `x^i` lands on `x^(i mod n)`.
    pub fn mod_xn_minus_1<R: CoeffRing<Elem = E>>(&self, n: usize, ring: &R) -> Self {
        if self.coeffs.len() <= n {
            return self.clone();
        }
        let mut out = vec![ring.zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i % n] = ring.add(&out[i % n], c);
        }
        Poly::new(out)
    }

    /// Product in `ring[x]/(x^n - 1)`.
    pub fn mul_cyclic<R: CoeffRing<Elem = E>>(&self, other: &Self, n: usize, ring: &R) -> Self {
        let mut out = vec![ring.zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let k = (i + j) % n;
                out[k] = ring.add(&out[k], &ring.mul(a, b));
            }
        }
        Poly::new(out)
    }

    /// Coefficient vector of length exactly `n` (zero padded).
    pub fn to_vector<R: CoeffRing<Elem = E>>(&self, n: usize, ring: &R) -> Vec<E> {
        (0..n).map(|i| self.coeff(ring, i)).collect()
    }

    /// Applies a ring map coefficientwise.
    pub fn map<F: Coefficient>(&self, f: impl Fn(&E) -> F) -> Poly<F> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Text form: ascending degree, zero terms omitted, unit coefficients elided.
    pub fn to_text<R: CoeffRing<Elem = E>>(&self, ring: &R) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (text, atomic) = ring.render(c);
            let var = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            let term = if k == 0 {
                text
            } else if ring.is_one(c) {
                var
            } else if atomic {
                format!("{text}*{var}")
            } else {
                format!("({text})*{var}")
            };
            terms.push(term);
        }
        terms.join("+")
    }
}

/// Extended Euclid over a field: returns `(g, u, w)` with `g` monic,
/// `g = gcd(a, b) = u*a + w*b`.
pub fn gcd_ext<R: CoeffRing>(
    a: &Poly<R::Elem>,
    b: &Poly<R::Elem>,
    ring: &R,
) -> Result<(Poly<R::Elem>, Poly<R::Elem>, Poly<R::Elem>)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Poly::one(ring), Poly::zero());
    let (mut t0, mut t1) = (Poly::zero(), Poly::one(ring));
    while !r1.is_zero() {
        let (q, r) = r0.divmod(&r1, ring)?;
        let s2 = s0.sub(&q.mul(&s1, ring), ring);
        let t2 = t0.sub(&q.mul(&t1, ring), ring);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let lead_inv = ring
        .inv(r0.leading().expect("nonzero gcd"))
        .ok_or(Error::NonUnitLeadingCoefficient)?;
    Ok((
        r0.scale(&lead_inv, ring),
        s0.scale(&lead_inv, ring),
        t0.scale(&lead_inv, ring),
    ))
}

/// Parses the `c*x^k + ...` (or `cx^k + ...`) text form into integer coefficients
/// (ascending degree, repeated exponents summed). Reduction into a ring is
/// left to the caller.
pub fn parse_int_poly(text: &str) -> Result<Vec<u64>> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let mut coeffs: Vec<u64> = Vec::new();
    for term in compact.split('+') {
        if term.is_empty() {
            return Err(Error::Parse(format!("empty term in `{text}`")));
        }
        let (coef, exp) = parse_term(term)?;
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, 0);
        }
        coeffs[exp] = coeffs[exp]
            .checked_add(coef)
            .ok_or_else(|| Error::Parse(format!("coefficient overflow in `{term}`")))?;
    }
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    Ok(coeffs)
}

fn parse_term(term: &str) -> Result<(u64, usize)> {
    let bad = || Error::Parse(format!("malformed term `{term}`"));
    let parse_num = |s: &str| -> Result<u64> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse::<u64>().map_err(|_| bad())
    };
    let (coef_part, var_part) = match term.find('x') {
        None => return Ok((parse_num(term)?, 0)),
        Some(0) => (None, term),
        Some(pos) => {
            let head = &term[..pos];
            let head = head.strip_suffix('*').unwrap_or(head);
            (Some(head), &term[pos..])
        }
    };
    let coef = match coef_part {
        None => 1,
        Some(c) => parse_num(c)?,
    };
    let exp = match var_part {
        "x" => 1,
        v => {
            let e = v.strip_prefix("x^").ok_or_else(bad)?;
            usize::try_from(parse_num(e)?).map_err(|_| bad())?
        }
    };
    Ok((coef, exp))
}
