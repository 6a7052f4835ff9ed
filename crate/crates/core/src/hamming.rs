//! The Hamming graph `H(n, q)` on words `[q]^n`, handled implicitly.
//!
//! Words are indexed little-endian in base `q`: coordinate 0 is the least
//! significant digit. All volumes and counts are exact big integers.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::ExplicitGraph;

/// Default vertex cap for [`materialize`].
pub const DEFAULT_MATERIALIZE_CAP: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HammingParams {
    pub n: u32,
    pub q: u32,
}

impl HammingParams {
    pub fn new(n: u32, q: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("word length n must be at least 1".into()));
        }
        if q < 2 {
            return Err(Error::Input("alphabet size q must be at least 2".into()));
        }
        Ok(Self { n, q })
    }

    /// `q^n`, the number of vertices.
    pub fn vertex_count(&self) -> BigUint {
        BigUint::from(self.q).pow(self.n)
    }

    /// `q^n` if it is at most `cap`.
    pub fn vertex_count_within(&self, cap: usize) -> Option<usize> {
        let mut total: usize = 1;
        for _ in 0..self.n {
            total = total.checked_mul(self.q as usize).filter(|&t| t <= cap)?;
        }
        Some(total)
    }
}

/// A word of `[q]^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(params: HammingParams, coords: Vec<u32>) -> Result<Self> {
        if coords.len() != params.n as usize {
            return Err(Error::Input(format!(
                "word has {} coordinates, expected {}",
                coords.len(),
                params.n
            )));
        }
        if let Some(bad) = coords.iter().find(|&&c| c >= params.q) {
            return Err(Error::Input(format!(
                "symbol {bad} is outside [0, {})",
                params.q
            )));
        }
        Ok(Self(coords))
    }

    /// The constant word `(symbol, ..., symbol)`.
    pub fn constant(params: HammingParams, symbol: u32) -> Result<Self> {
        Self::new(params, vec![symbol; params.n as usize])
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn encode(&self, q: u32) -> usize {
        self.0
            .iter()
            .rev()
            .fold(0usize, |acc, &c| acc * q as usize + c as usize)
    }

    pub fn decode(params: HammingParams, mut index: usize) -> Self {
        let q = params.q as usize;
        let coords = (0..params.n)
            .map(|_| {
                let c = index % q;
                index /= q;
                c as u32
            })
            .collect();
        Self(coords)
    }

    /// Occurrences of each symbol.
    pub fn counts(&self, q: u32) -> Vec<u32> {
        let mut counts = vec![0; q as usize];
        for &c in &self.0 {
            counts[c as usize] += 1;
        }
        counts
    }
}

/// Number of coordinates where `x` and `y` differ.
pub fn hamming_distance(x: &Word, y: &Word) -> Result<usize> {
    if x.len() != y.len() {
        return Err(Error::Input(format!(
            "words have different lengths {} and {}",
            x.len(),
            y.len()
        )));
    }
    Ok(x.0.iter().zip(&y.0).filter(|(a, b)| a != b).count())
}

/// `|Γ_k(x)| = Σ_{i ≤ k} (q-1)^i C(n, i)`; zero for negative `k` and `q^n`
/// once `k ≥ n`.
pub fn ball_volume(p: HammingParams, k: i64) -> BigUint {
    if k < 0 {
        return BigUint::zero();
    }
    let n = p.n as u64;
    let top = (k as u64).min(n);
    let mut term = BigUint::one(); // (q-1)^i C(n, i)
    let mut total = BigUint::one();
    for i in 0..top {
        term = term * (n - i) * (p.q - 1) / (i + 1);
        total += &term;
    }
    total
}

/// Per-symbol counts `(c_0, ..., c_{q-1})` of a word, summing to `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CountVector {
    counts: Vec<u32>,
}

impl CountVector {
    pub fn new(params: HammingParams, counts: Vec<u32>) -> Result<Self> {
        if counts.len() != params.q as usize {
            return Err(Error::Input(format!(
                "count vector has {} entries, expected q = {}",
                counts.len(),
                params.q
            )));
        }
        let sum: u64 = counts.iter().map(|&c| c as u64).sum();
        if sum != params.n as u64 {
            return Err(Error::Input(format!(
                "counts sum to {sum}, expected n = {}",
                params.n
            )));
        }
        Ok(Self { counts })
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn n(&self) -> u32 {
        self.counts.iter().sum()
    }
}

/// Multinomial coefficient `n! / (c_0! ... c_{q-1}!)`: how many words share
/// this count vector.
pub fn multiplicity(c: &CountVector) -> BigUint {
    let mut remaining = c.n() as u64;
    let mut total = BigUint::one();
    for &ci in &c.counts {
        total *= binomial(remaining, ci as u64);
        remaining -= ci as u64;
    }
    total
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Minimum symbol counts: `t_i` is the least number of `i` coordinates a word
/// needs to be burned by the `i`-th constant source.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ThresholdVector(pub Vec<i64>);

/// Count vectors with `Σ c_i = n` and `c_i ≤ caps[i]`, in lexicographic order.
pub fn bounded_compositions(n: u32, caps: &[i64]) -> Vec<Vec<u32>> {
    fn walk(
        i: usize,
        left: i64,
        caps: &[i64],
        suffix: &[i64],
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if i == caps.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // The remaining parts must still be able to absorb what is left.
        let low = (left - suffix[i + 1]).max(0);
        let high = caps[i].min(left);
        for c in low..=high {
            cur.push(c as u32);
            walk(i + 1, left - c, caps, suffix, cur, out);
            cur.pop();
        }
    }
    if caps.iter().any(|&c| c < 0) {
        return Vec::new();
    }
    let suffix = suffix_sums(caps);
    let mut out = Vec::new();
    walk(0, n as i64, caps, &suffix, &mut Vec::new(), &mut out);
    out
}

fn suffix_sums(caps: &[i64]) -> Vec<i64> {
    let mut suffix = vec![0i64; caps.len() + 1];
    for i in (0..caps.len()).rev() {
        suffix[i] = suffix[i + 1].saturating_add(caps[i].max(0));
    }
    suffix
}

/// Exact number of words `y` with `count_i(y) < t_i` for every symbol `i`,
/// i.e. the words lying in none of the sets `{x : count_i(x) ≥ t_i}`.
///
/// Sums multinomial coefficients over the bounded compositions of `n`, one
/// symbol at a time: `ways(i, m) = Σ_c C(m, c) · ways(i + 1, m - c)` counts
/// the fillings of `m` free coordinates by symbols `i..q`. Entries that the
/// remaining caps cannot reach are never formed, so an unsatisfiable system
/// costs nothing. The `c_0` range of the last step is split across threads.
pub fn count_with_thresholds_violated(p: HammingParams, t: &ThresholdVector) -> BigUint {
    let q = p.q as usize;
    assert_eq!(t.0.len(), q, "threshold vector must have q entries");
    let n = p.n as i64;
    let caps: Vec<i64> = t.0.iter().map(|&ti| (ti - 1).min(n)).collect();
    if caps.iter().any(|&c| c < 0) {
        return BigUint::zero();
    }
    let suffix = suffix_sums(&caps);
    if suffix[0] < n {
        return BigUint::zero();
    }
    let binom = BinomialRows::new(p.n as usize);

    // ways[m] for the symbols i..q, valid for m in [lo, hi].
    let mut lo = 0i64;
    let mut hi = 0i64;
    let mut ways = vec![BigUint::one()];
    for i in (1..q).rev() {
        let new_hi = suffix[i].min(n);
        let new_lo = 0;
        let next: Vec<BigUint> = (new_lo..=new_hi)
            .map(|m| {
                let c_lo = (m - hi).max(0);
                let c_hi = caps[i].min(m - lo);
                let mut acc = BigUint::zero();
                for c in c_lo..=c_hi {
                    acc += binom.get(m as usize, c as usize) * &ways[(m - c - lo) as usize];
                }
                acc
            })
            .collect();
        ways = next;
        lo = new_lo;
        hi = new_hi;
    }
    // Last step only needs m = n.
    let c_lo = (n - hi).max(0);
    let c_hi = caps[0].min(n - lo);
    if c_lo > c_hi {
        return BigUint::zero();
    }
    (c_lo..=c_hi)
        .into_par_iter()
        .map(|c| binom.get(n as usize, c as usize) * &ways[(n - c - lo) as usize])
        .reduce(BigUint::zero, |a, b| a + b)
}

/// Pascal's triangle up to row `n`.
struct BinomialRows {
    rows: Vec<Vec<BigUint>>,
}

impl BinomialRows {
    fn new(n: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n + 1);
        for m in 0..=n {
            let mut row = vec![BigUint::one(); m + 1];
            for c in 1..m {
                row[c] = &rows[m - 1][c - 1] + &rows[m - 1][c];
            }
            rows.push(row);
        }
        Self { rows }
    }

    fn get(&self, m: usize, c: usize) -> &BigUint {
        &self.rows[m][c]
    }
}

/// Builds `H(n, q)` explicitly, refusing when `q^n` exceeds `cap`.
pub fn materialize(p: HammingParams, cap: usize) -> Result<ExplicitGraph> {
    let count = p.vertex_count_within(cap).ok_or_else(|| {
        Error::Resource(format!(
            "H({}, {}) has {} vertices, above the cap of {cap}",
            p.n,
            p.q,
            p.vertex_count()
        ))
    })?;
    let q = p.q as usize;
    let mut edges = Vec::with_capacity(count * p.n as usize * (q - 1) / 2);
    for index in 0..count {
        let mut place = 1usize;
        for _ in 0..p.n {
            let digit = index / place % q;
            // Only raise the digit so each edge appears once.
            for higher in digit + 1..q {
                edges.push((index, index + (higher - digit) * place));
            }
            place *= q;
        }
    }
    ExplicitGraph::from_edges(count, &edges)
}
