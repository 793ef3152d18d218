//! Exact minimum distances, weight distributions and Griesmer checks.
//!
//! Distances are computed by enumerating the whole message space in
//! lexicographic order; `cap` bounds the number of codewords visited.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::CyclicCode;
use crate::field::FieldElt;
use crate::poly::CoeffRing;
use crate::ring_codes::RingCode;

pub const DEFAULT_CAP: u64 = 1 << 24;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exhaustive,
    ComponentMin,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DistanceReport {
    pub n: usize,
    /// Rank of each component (a single entry for a field code).
    pub ranks: Vec<usize>,
    /// Common rank when every component agrees.
    pub free_rank: Option<usize>,
    /// `None` for the zero code.
    pub d_min: Option<usize>,
    pub weight_distribution: Option<Vec<u64>>,
    pub method: Method,
    /// Codewords visited.
    pub enumerated: u64,
}

impl DistanceReport {
    /// `[n,k,d]` when the rank is well defined.
    pub fn brackets(&self) -> String {
        let d = self.d_min.map_or("-".to_string(), |d| d.to_string());
        match self.free_rank {
            Some(k) => format!("[{},{},{}]", self.n, k, d),
            None => format!("n={} ranks={:?} d={}", self.n, self.ranks, d),
        }
    }
}

/// A linear code over a prime field given by generator rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearCode {
    pub q: u64,
    pub n: usize,
    pub rows: Vec<Vec<u32>>,
}

impl LinearCode {
    /// Rows `x^r g(x)` for `r < k`.
    pub fn from_cyclic(code: &CyclicCode) -> Self {
        let g: Vec<u32> = code.generator.coeffs().iter().map(|c| c.0).collect();
        let k = code.dimension();
        let rows = (0..k)
            .map(|r| {
                let mut row = vec![0u32; code.p];
                row[r..r + g.len()].copy_from_slice(&g);
                row
            })
            .collect();
        LinearCode {
            q: code.q(),
            n: code.p,
            rows,
        }
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> u128 {
        (self.q as u128).saturating_pow(self.rows.len() as u32)
    }

    fn check_cap(&self, cap: u64) -> Result<()> {
        let size = self.size();
        if size > cap as u128 {
            return Err(Error::TooLarge { size, cap });
        }
        Ok(())
    }

    /// Every codeword, messages in lexicographic order.
    pub fn codewords(&self, cap: u64) -> Result<Vec<Vec<u32>>> {
        self.check_cap(cap)?;
        Ok(self
            .for_each_codeword(Vec::new, |acc: &mut Vec<Vec<u32>>, w| acc.push(w.to_vec()))
            .into_iter()
            .flatten()
            .collect())
    }

    /// Calls `visit` on every codeword, messages in lexicographic order
    /// (first coordinate slowest), split across workers by first coordinate.
    fn for_each_codeword<T, F>(&self, init: impl Fn() -> T + Sync + Send, visit: F) -> Vec<T>
    where
        T: Send,
        F: Fn(&mut T, &[u32]) + Sync + Send,
    {
        let q = self.q as u32;
        let k = self.rows.len();
        if k == 0 {
            let mut acc = init();
            visit(&mut acc, &vec![0u32; self.n]);
            return vec![acc];
        }
        let add = |word: &mut [u32], row: &[u32]| {
            for (w, r) in word.iter_mut().zip(row) {
                *w = (*w + r) % q;
            }
        };
        (0..q)
            .into_par_iter()
            .map(|lead| {
                let mut acc = init();
                let mut word = vec![0u32; self.n];
                for _ in 0..lead {
                    add(&mut word, &self.rows[0]);
                }
                // Odometer over rows 1..k, last row fastest.
                let mut digits = vec![0u32; k];
                'outer: loop {
                    visit(&mut acc, &word);
                    let mut i = k - 1;
                    loop {
                        if i == 0 {
                            break 'outer;
                        }
                        digits[i] += 1;
                        add(&mut word, &self.rows[i]);
                        if digits[i] == q {
                            // q additions of a row cancel out.
                            digits[i] = 0;
                            i -= 1;
                            continue;
                        }
                        break;
                    }
                }
                acc
            })
            .collect()
    }
}

/// `A_0, .., A_n` by exhaustive enumeration.
pub fn weight_enumerator(code: &LinearCode, cap: u64) -> Result<Vec<u64>> {
    code.check_cap(cap)?;
    let n = code.n;
    let parts = code.for_each_codeword(
        || vec![0u64; n + 1],
        |hist, word| hist[word.iter().filter(|&&c| c != 0).count()] += 1,
    );
    Ok(parts.into_iter().fold(vec![0u64; n + 1], |mut acc, h| {
        acc.iter_mut().zip(h).for_each(|(a, b)| *a += b);
        acc
    }))
}

fn min_nonzero_weight(dist: &[u64]) -> Option<usize> {
    dist.iter().skip(1).position(|&c| c > 0).map(|w| w + 1)
}

pub fn min_distance_linear(code: &LinearCode, cap: u64) -> Result<DistanceReport> {
    let dist = weight_enumerator(code, cap)?;
    Ok(DistanceReport {
        n: code.n,
        ranks: vec![code.k()],
        free_rank: Some(code.k()),
        d_min: min_nonzero_weight(&dist),
        enumerated: dist.iter().sum(),
        weight_distribution: Some(dist),
        method: Method::Exhaustive,
    })
}

pub fn min_distance_field(code: &CyclicCode, cap: u64) -> Result<DistanceReport> {
    min_distance_linear(&LinearCode::from_cyclic(code), cap)
}

/// Ring distance as the minimum over component distances. A ring codeword
/// is nonzero at a position iff some component is, so its weight is the size
/// of the union of component supports, and the minimum is reached with a
/// single nonzero component.
pub fn min_distance_ring(code: &RingCode, cap: u64) -> Result<DistanceReport> {
    let mut best: Option<usize> = None;
    let mut enumerated = 0u64;
    let mut seen: Vec<usize> = Vec::new();
    for comp in &code.components {
        if seen.contains(&comp.index) {
            continue;
        }
        seen.push(comp.index);
        let report = min_distance_field(comp, cap)?;
        enumerated += report.enumerated;
        best = match (best, report.d_min) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
    }
    Ok(DistanceReport {
        n: code.p(),
        ranks: code.component_ranks(),
        free_rank: code.free_rank(),
        d_min: best,
        weight_distribution: None,
        method: Method::ComponentMin,
        enumerated,
    })
}

/// Ring distance by enumerating every tuple of component codewords,
/// assembling each ring codeword with ring arithmetic and counting its
/// nonzero coordinates.
pub fn ring_distance_exhaustive(code: &RingCode, cap: u64) -> Result<DistanceReport> {
    let ring = &code.ring;
    let p = code.p();
    let size: u128 = code
        .components
        .iter()
        .fold(1u128, |acc, c| acc.saturating_mul(LinearCode::from_cyclic(c).size()));
    if size > cap as u128 {
        return Err(Error::TooLarge { size, cap });
    }
    let words: Vec<Vec<Vec<u32>>> = code
        .components
        .iter()
        .map(|c| {
            let lin = LinearCode::from_cyclic(c);
            lin.for_each_codeword(Vec::new, |acc: &mut Vec<Vec<u32>>, w| acc.push(w.to_vec()))
                .into_iter()
                .flatten()
                .collect()
        })
        .collect();
    let q = ring.field().characteristic() as u32;
    let eta = ring.eta();
    let s = code.s();
    // terms[k][w]: eta_k * (codeword w of component k), flattened to p
    // blocks of s coefficients on 1, v, .., v^{s-1}.
    let terms: Vec<Vec<Vec<u32>>> = words
        .iter()
        .enumerate()
        .map(|(k, list)| {
            list.iter()
                .map(|w| {
                    w.iter()
                        .flat_map(|&c| ring.mul(&eta[k], &ring.from_field(FieldElt(c))).to_ints())
                        .collect()
                })
                .collect()
        })
        .collect();
    let width = p * s;
    let hist = (0..words[0].len())
        .into_par_iter()
        .map(|first| {
            let mut hist = vec![0u64; p + 1];
            let mut idx = vec![0usize; s];
            idx[0] = first;
            // partial[k] = sum_{j <= k} terms[j][idx[j]], coefficientwise
            // addition in R.
            let mut partial = vec![vec![0u32; width]; s];
            partial[0].copy_from_slice(&terms[0][first]);
            let mut dirty = 1;
            loop {
                for k in dirty..s {
                    let (done, rest) = partial.split_at_mut(k);
                    let term = &terms[k][idx[k]];
                    for ((out, &a), &b) in rest[0].iter_mut().zip(&done[k - 1]).zip(term) {
                        *out = (a + b) % q;
                    }
                }
                let word = &partial[s - 1];
                let weight = word.chunks(s).filter(|elt| elt.iter().any(|&c| c != 0)).count();
                hist[weight] += 1;
                let mut k = s - 1;
                loop {
                    if k == 0 {
                        return hist;
                    }
                    idx[k] += 1;
                    if idx[k] == words[k].len() {
                        idx[k] = 0;
                        k -= 1;
                        continue;
                    }
                    break;
                }
                dirty = k;
            }
        })
        .reduce(
            || vec![0u64; p + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(DistanceReport {
        n: p,
        ranks: code.component_ranks(),
        free_rank: code.free_rank(),
        d_min: min_nonzero_weight(&hist),
        enumerated: hist.iter().sum(),
        weight_distribution: Some(hist),
        method: Method::Exhaustive,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GriesmerCheck {
    pub n: u64,
    pub k: u64,
    pub d: u64,
    pub q: u64,
    pub bound_n: u64,
    pub attained: bool,
}

/// `bound_n = sum_{i<k} ceil(d / q^i)`; attained iff `n = bound_n`.
pub fn griesmer_check(n: u64, k: u64, d: u64, q: u64) -> GriesmerCheck {
    let mut bound = 0u64;
    let mut power = 1u64;
    for _ in 0..k {
        bound += d.div_ceil(power);
        // Once q^i exceeds d every further term is 1.
        power = power.saturating_mul(q);
    }
    GriesmerCheck {
        n,
        k,
        d,
        q,
        bound_n: bound,
        attained: n == bound,
    }
}
