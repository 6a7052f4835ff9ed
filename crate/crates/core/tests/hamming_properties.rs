use burning::graph::{all_pairs_distances, ball};
use burning::hamming::{
    ball_volume, bounded_compositions, count_with_thresholds_violated, hamming_distance,
    materialize, multiplicity, CountVector, HammingParams, ThresholdVector, Word,
};
use num_bigint::BigUint;
use proptest::prelude::*;

fn params(n: u32, q: u32) -> HammingParams {
    HammingParams::new(n, q).unwrap()
}

/// Every `(n, q)` with `q^n ≤ limit` and `q ≤ max_q`.
fn small_instances(limit: usize, max_q: u32) -> Vec<HammingParams> {
    let mut out = Vec::new();
    for q in 2..=max_q {
        let mut n = 1;
        while params(n, q).vertex_count_within(limit).is_some() {
            out.push(params(n, q));
            n += 1;
        }
    }
    out
}

#[test]
fn multiplicities_sum_to_all_words() {
    for q in 2..=6u32 {
        for n in 1..=30u32 {
            let p = params(n, q);
            let caps = vec![n as i64; q as usize];
            let total: BigUint = bounded_compositions(n, &caps)
                .into_iter()
                .map(|c| multiplicity(&CountVector::new(p, c).unwrap()))
                .sum();
            assert_eq!(total, p.vertex_count(), "n = {n}, q = {q}");
        }
    }
}

#[test]
fn volumes_match_count_vectors() {
    // Γ_k(0...0) is the set of words with at least n - k zeros.
    for q in 2..=5u32 {
        for n in 1..=20u32 {
            let p = params(n, q);
            let all = bounded_compositions(n, &vec![n as i64; q as usize]);
            for k in 0..=n {
                let by_counts: BigUint = all
                    .iter()
                    .filter(|c| c[0] >= n - k)
                    .map(|c| multiplicity(&CountVector::new(p, c.clone()).unwrap()))
                    .sum();
                assert_eq!(
                    by_counts,
                    ball_volume(p, k as i64),
                    "n = {n}, q = {q}, k = {k}"
                );
            }
        }
    }
}

#[test]
fn materialized_balls_have_formula_volume() {
    for p in small_instances(1024, 32) {
        let g = materialize(p, 1024).unwrap();
        let dist = all_pairs_distances(&g);
        for x in 0..g.vertex_count() {
            for k in 0..=p.n {
                let size = dist.row(x).iter().filter(|&&d| d <= k).count();
                assert_eq!(BigUint::from(size), ball_volume(p, k as i64));
            }
        }
        // ball() itself, from one vertex per instance.
        for k in 0..=p.n {
            assert_eq!(
                BigUint::from(ball(&g, 0, k).unwrap().count()),
                ball_volume(p, k as i64)
            );
        }
    }
}

#[test]
fn hamming_distance_is_graph_distance() {
    for p in small_instances(729, 9) {
        let g = materialize(p, 729).unwrap();
        let dist = all_pairs_distances(&g);
        let words: Vec<Word> = (0..g.vertex_count()).map(|i| Word::decode(p, i)).collect();
        for (u, wu) in words.iter().enumerate() {
            for (v, wv) in words.iter().enumerate() {
                assert_eq!(hamming_distance(wu, wv).unwrap() as u32, dist.get(u, v));
            }
        }
    }
}

#[test]
fn h33_distance_example() {
    let p = params(3, 3);
    let g = materialize(p, 27).unwrap();
    let a = Word::new(p, vec![0, 0, 0]).unwrap().encode(3);
    let b = Word::new(p, vec![1, 2, 1]).unwrap().encode(3);
    assert_eq!(all_pairs_distances(&g).get(a, b), 3);
    for x in 0..27 {
        assert_eq!(ball(&g, x, 2).unwrap().count(), 19);
    }
}

fn thresholds() -> impl Strategy<Value = (u32, u32, Vec<i64>, usize)> {
    (1u32..=14, 2u32..=5).prop_flat_map(|(n, q)| {
        let t = prop::collection::vec(-1i64..=(n as i64 + 2), q as usize);
        (Just(n), Just(q), t, 0..q as usize)
    })
}

proptest! {
    #[test]
    fn threshold_count_is_monotone((n, q, t, i) in thresholds()) {
        let p = params(n, q);
        let base = count_with_thresholds_violated(p, &ThresholdVector(t.clone()));
        let mut lowered = t.clone();
        lowered[i] -= 1;
        let lower = count_with_thresholds_violated(p, &ThresholdVector(lowered));
        prop_assert!(lower <= base);
    }

    #[test]
    fn threshold_count_matches_brute_force((n, q, t, _) in thresholds()) {
        let p = params(n, q);
        prop_assume!(p.vertex_count_within(4096).is_some());
        let total = p.vertex_count_within(4096).unwrap();
        let brute = (0..total)
            .filter(|&i| {
                let counts = Word::decode(p, i).counts(q);
                counts.iter().zip(&t).all(|(&c, &ti)| (c as i64) < ti)
            })
            .count();
        prop_assert_eq!(
            count_with_thresholds_violated(p, &ThresholdVector(t)),
            BigUint::from(brute)
        );
    }

    #[test]
    fn encoding_round_trips(n in 1u32..8, q in 2u32..6, seed in any::<u64>()) {
        let p = params(n, q);
        let total = p.vertex_count_within(usize::MAX).unwrap();
        let index = (seed % total as u64) as usize;
        prop_assert_eq!(Word::decode(p, index).encode(q), index);
    }
}
