//! Burning `H(n, q)` with the constant words `(i, ..., i)`.
//!
//! Write `n = qk + r` with `0 ≤ r < q` and
//! `s = ⌈(2r(q-1) + q² - q + 1) / 2q⌉`. The schedule has length
//! `b + 1 = (q-1)k + s`, its `i`-th source is the constant word of symbol `i`
//! with radius `b - i`, and a word lies in that ball exactly when it has at
//! least `t_i = k + r - s + 1 + i` coordinates equal to `i`. No word can miss
//! every threshold because `Σ (t_i - 1) < n`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{verify_schedule, BurningSchedule};
use crate::hamming::{
    count_with_thresholds_violated, materialize, HammingParams, ThresholdVector, Word,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionPlan {
    pub params: HammingParams,
    pub k: i64,
    pub r: i64,
    pub s: i64,
    /// Schedule length is `b + 1`.
    pub b: i64,
    pub thresholds: ThresholdVector,
    /// Symbol of the constant word at each schedule position.
    symbols: Vec<u32>,
}

/// JSON form of a plan: `{n, q, k, r, s, length, thresholds, sources}`.
/// `sources[j]` is the symbol `i` of the constant word `(i, ..., i)` at
/// position `j`.
#[derive(Serialize)]
pub struct PlanJson<'a> {
    pub n: u32,
    pub q: u32,
    pub k: i64,
    pub r: i64,
    pub s: i64,
    pub length: i64,
    pub thresholds: &'a ThresholdVector,
    pub sources: &'a [u32],
}

impl ConstructionPlan {
    /// Length of the burning schedule, `b + 1`.
    pub fn length(&self) -> i64 {
        self.b + 1
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    /// The source words in schedule order.
    pub fn sources(&self) -> Vec<Word> {
        self.symbols
            .iter()
            .map(|&i| Word::constant(self.params, i).expect("symbol is below q"))
            .collect()
    }

    /// Radius `b - i` of each source position.
    pub fn radii(&self) -> Vec<i64> {
        (0..self.length()).map(|i| self.b - i).collect()
    }

    pub fn to_json(&self) -> PlanJson<'_> {
        PlanJson {
            n: self.params.n,
            q: self.params.q,
            k: self.k,
            r: self.r,
            s: self.s,
            length: self.length(),
            thresholds: &self.thresholds,
            sources: &self.symbols,
        }
    }

    /// Same plan with `s` lowered by one, which shortens the schedule and
    /// raises every threshold. Coverage is then no longer guaranteed.
    pub fn weakened(&self) -> Self {
        Self::assemble(self.params, self.k, self.r, self.s - 1)
    }

    fn assemble(params: HammingParams, k: i64, r: i64, s: i64) -> Self {
        let q = params.q as i64;
        let b = (q - 1) * k + s - 1;
        let thresholds = ThresholdVector((0..q).map(|i| k + r - s + 1 + i).collect());
        // Symbols 0..q while they fit; any remaining positions reuse symbol 0.
        let symbols = (0..(b + 1).max(0))
            .map(|j| if j < q { j as u32 } else { 0 })
            .collect();
        Self {
            params,
            k,
            r,
            s,
            b,
            thresholds,
            symbols,
        }
    }
}

/// Builds the constant-word plan for `H(n, q)` in integer arithmetic.
pub fn plan(p: HammingParams) -> ConstructionPlan {
    let q = p.q as i64;
    let (k, r) = (p.n as i64).div_rem(&q);
    let s = Integer::div_ceil(&(2 * r * (q - 1) + q * q - q + 1), &(2 * q));
    ConstructionPlan::assemble(p, k, r, s)
}

/// Counts the words the plan leaves unburned; zero certifies coverage.
///
/// A word is burned by the source of symbol `i` (radius `b - i`) iff it has
/// at least `n - b + i = t_i` coordinates equal to `i`. Positions past `q`
/// repeat symbol 0 with smaller radii and burn nothing new. When `b + 1 < q`
/// the symbols `i > b` have `t_i > n`, so they are correctly never met.
pub fn verify_plan_analytic(c: &ConstructionPlan) -> BigUint {
    count_with_thresholds_violated(c.params, &c.thresholds)
}

/// Materializes `H(n, q)` and checks the plan's schedule directly.
pub fn verify_plan_exhaustive(c: &ConstructionPlan, cap: usize) -> Result<bool> {
    let graph = materialize(c.params, cap)?;
    if c.length() < 1 {
        return Ok(false);
    }
    let sources = c.sources().iter().map(|w| w.encode(c.params.q)).collect();
    let schedule = BurningSchedule::new(sources)?;
    Ok(verify_schedule(&graph, &schedule)?.covers())
}

/// Words left unburned by the plan, counted by brute force over `[q]^n`
/// with Hamming distances. Only for tests and small instances.
pub fn uncovered_by_enumeration(c: &ConstructionPlan, cap: usize) -> Result<u64> {
    let total = c
        .params
        .vertex_count_within(cap)
        .ok_or_else(|| Error::Resource(format!("q^n above the cap of {cap}")))?;
    let sources = c.sources();
    let radii = c.radii();
    let mut missed = 0;
    for index in 0..total {
        let w = Word::decode(c.params, index);
        let hit = sources.iter().zip(&radii).any(|(x, &rad)| {
            crate::hamming::hamming_distance(&w, x).expect("same length") as i64 <= rad
        });
        if !hit {
            missed += 1;
        }
    }
    Ok(missed)
}

/// True when the plan certifies coverage analytically.
pub fn covers(c: &ConstructionPlan) -> bool {
    verify_plan_analytic(c).is_zero()
}
