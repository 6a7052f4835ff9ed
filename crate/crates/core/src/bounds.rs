//! Closed-form bounds on the burning number of `H(n, q)` and exact
//! certificates behind the lower bound.
//!
//! With `p = 1 - 1/q`, the lower bound is `β > pn - √(2pn ln n)`. Its proof
//! shows that the binomial tail `P[X ≤ b] = q^{-n} |Γ_b|` is at most `1/n`
//! for `b = ⌊pn - √(2pn ln n)⌋`, so `b + 1` balls of radius `b` cannot cover
//! `q^n` words. Both facts are checked here in exact integer arithmetic; the
//! floating-point value only chooses `b`.

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::Result;
use crate::hamming::{ball_volume, HammingParams};

/// `⌊((q-1)·2n + q(q+1)) / 2q⌋`, the length of the constant-word schedule.
pub fn upper_bound(n: u32, q: u32) -> u64 {
    let (n, q) = (n as u64, q as u64);
    ((q - 1) * 2 * n + q * (q + 1)) / (2 * q)
}

/// Exact burning number of the hypercube `H(n, 2)`: `⌈n/2⌉ + 1`.
pub fn alon_exact(n: u32) -> u64 {
    let value = (n as u64).div_ceil(2) + 1;
    debug_assert_eq!(value, upper_bound(n, 2));
    value
}

/// `(pn - √(2pn ln n), smallest integer strictly above it, at least 1)`.
pub fn lower_bound(n: u32, q: u32) -> (f64, u64) {
    let p = (q - 1) as f64 / q as f64;
    let mean = p * n as f64;
    let real = mean - (2.0 * mean * (n as f64).ln()).sqrt();
    // β > real strictly, so an integral `real` still moves up by one.
    let int = if real < 0.0 {
        1
    } else {
        (real.floor() as u64 + 1).max(1)
    };
    (real, int)
}

/// `⌊pn - √(2pn ln n)⌋` when it is nonnegative.
pub fn b_star(n: u32, q: u32) -> Option<u64> {
    let (real, _) = lower_bound(n, q);
    (real >= 0.0).then(|| real.floor() as u64)
}

/// Exact test of `(b+1)·|Γ_b| < q^n`. When true, no schedule of length
/// `b + 1` covers `H(n, q)`, so `β > b`.
pub fn volume_certificate(n: u32, q: u32, b: u64) -> bool {
    let p = HammingParams { n, q };
    let volume = ball_volume(p, b.min(n as u64) as i64);
    volume * (b + 1) < p.vertex_count()
}

/// Exact test of `n·|Γ_{b*}| ≤ q^n`, i.e. `P[X ≤ b*] ≤ 1/n` for the binomial
/// variable `X ~ Bin(n, p)`. `None` when `b*` is negative.
pub fn exact_tail_le_inv_n(n: u32, q: u32) -> Option<bool> {
    let b = b_star(n, q)?;
    let p = HammingParams { n, q };
    Some(ball_volume(p, b as i64) * n <= p.vertex_count())
}

/// Exact test of `(b+1)/n < p`, the last step `(b+1)|V|/n < p|V|` of the
/// lower-bound argument, as `(b+1)·q < (q-1)·n`.
pub fn final_chain_holds(n: u32, q: u32, b: u64) -> bool {
    (b + 1) * (q as u64) < (q as u64 - 1) * (n as u64)
}

/// Everything known about `β(H(n, q))` from the closed forms.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsReport {
    pub n: u32,
    pub q: u32,
    /// `1 - 1/q` as the reduced fraction `"num/den"`.
    pub p: String,
    pub upper: u64,
    pub lower_real: f64,
    pub lower_int: u64,
    pub alon_exact: Option<u64>,
    pub b_star: Option<u64>,
    /// Volume certificate at `b = lower_int - 1`.
    pub volume_certificate_ok: bool,
    /// `None` when `b*` is negative.
    pub tail_le_inv_n: Option<bool>,
}

pub fn bounds_report(n: u32, q: u32) -> Result<BoundsReport> {
    HammingParams::new(n, q)?;
    let (lower_real, lower_int) = lower_bound(n, q);
    let upper = upper_bound(n, q);
    let alon = (q == 2).then(|| alon_exact(n));
    let report = BoundsReport {
        n,
        q,
        p: format!("{}/{}", q - 1, q),
        upper,
        lower_real,
        lower_int,
        alon_exact: alon,
        b_star: b_star(n, q),
        volume_certificate_ok: volume_certificate(n, q, lower_int - 1),
        tail_le_inv_n: exact_tail_le_inv_n(n, q),
    };
    assert!(
        report.lower_int <= report.upper,
        "lower bound above upper bound: {report:?}"
    );
    if let Some(exact) = alon {
        assert!(
            lower_int <= exact && exact == upper,
            "hypercube value out of range: {report:?}"
        );
    }
    Ok(report)
}

/// `Σ_{k ≤ b} C(n, k) (q-1)^k` computed from factorials, independent of
/// [`ball_volume`]'s recurrence.
pub fn tail_numerator_by_factorials(n: u32, q: u32, b: u64) -> BigUint {
    let fact = |m: u64| (1..=m).fold(BigUint::from(1u32), |acc, i| acc * i);
    let top = b.min(n as u64);
    (0..=top)
        .map(|k| {
            fact(n as u64) / (fact(k) * fact(n as u64 - k)) * BigUint::from(q - 1).pow(k as u32)
        })
        .sum()
}
