//! Randomized invariants over generated inputs. Each property is a theorem,
//! so any counterexample proptest finds is an implementation bug.

use biascube::function::{BooleanFunction, FunctionSpec, GameFunction};
use biascube::measures::mu;
use biascube::noise::{correlation_boolean, NoisePair};
use biascube::power::{banzhaf, shapley_exact, shapley_exact_game, shapley_sampled};
use biascube::spectral::{inverse_transform, transform, RealFunction};
use biascube::threshold::p_alpha;
use proptest::prelude::*;

fn arb_table(n: usize) -> impl Strategy<Value = Vec<bool>> {
    prop::collection::vec(any::<bool>(), 1 << n)
}

fn arb_monotone(n: usize) -> impl Strategy<Value = BooleanFunction> {
    // Weighted majorities are monotone by construction and sweep a wide
    // range of thresholds as the quota moves.
    (prop::collection::vec(0.05f64..1.0, n), 0.05f64..0.95).prop_map(move |(weights, frac)| {
        let total: f64 = weights.iter().sum();
        FunctionSpec::WeightedMajority {
            n,
            weights,
            quota: frac * total,
        }
        .build()
        .expect("positive weights, quota inside (0, total)")
    })
}

proptest! {
    #[test]
    fn hex_round_trip(table in arb_table(6)) {
        let f = BooleanFunction::from_fn(6, |x| table[x as usize]).unwrap();
        let back = BooleanFunction::from_hex(6, &f.to_hex()).unwrap();
        for x in 0..1u64 << 6 {
            prop_assert_eq!(f.evaluate(x), back.evaluate(x));
        }
    }

    #[test]
    fn transform_round_trip(values in prop::collection::vec(-1.0f64..1.0, 32), p in 0.02f64..0.98) {
        let f = RealFunction::from_values(5, values).unwrap();
        let back = inverse_transform(&transform(&f, p).unwrap());
        for (a, b) in f.values().iter().zip(back.values()) {
            prop_assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn efficiency_on_random_games(payoff in prop::collection::vec(-10.0f64..10.0, 32)) {
        let mut payoff = payoff;
        payoff[0] = 0.0;
        let grand = payoff[31];
        let g = GameFunction::new(5, payoff).unwrap();
        let psi = shapley_exact_game(&g).unwrap();
        prop_assert!((psi.total() - grand).abs() < 1e-9);
    }

    #[test]
    fn mu_is_increasing_in_p_for_monotone(f in arb_monotone(6), a in 0.05f64..0.9) {
        let b = a + 0.05;
        prop_assert!(mu(&f, a).unwrap() <= mu(&f, b).unwrap() + 1e-12);
    }

    #[test]
    fn threshold_locations_are_ordered(f in arb_monotone(6)) {
        let lo = p_alpha(&f, 0.25).unwrap();
        let mid = p_alpha(&f, 0.5).unwrap();
        let hi = p_alpha(&f, 0.75).unwrap();
        prop_assert!(0.0 < lo && lo <= mid + 1e-9 && mid <= hi + 1e-9 && hi < 1.0);
        // The located bias reproduces its level.
        prop_assert!((mu(&f, mid).unwrap() - 0.5).abs() < 1e-9);
    }

    #[test]
    fn banzhaf_bounds_and_symmetry_under_flip(table in arb_table(5)) {
        let f = BooleanFunction::from_fn(5, |x| table[x as usize]).unwrap();
        let b = banzhaf(&f).unwrap();
        for &v in &b.values {
            prop_assert!((0.0..=1.0).contains(&v));
        }
        // Flipping all inputs permutes pivotal pairs, leaving each count.
        let g = BooleanFunction::from_fn(5, |x| table[(x ^ 31) as usize]).unwrap();
        let bg = banzhaf(&g).unwrap();
        for (x, y) in b.values.iter().zip(&bg.values) {
            prop_assert_eq!(x, y);
        }
    }

    #[test]
    fn sampled_total_telescopes_exactly(table in arb_table(5), seed in any::<u64>()) {
        let f = BooleanFunction::from_fn(5, |x| table[x as usize]).unwrap();
        let grand = f.value01(31) - f.value01(0);
        let est = shapley_sampled(|x| f.value01(x), 5, 256, seed).unwrap();
        prop_assert_eq!(est.total(), grand);
    }

    #[test]
    fn monotone_noise_correlation_identity(f in arb_monotone(6), p in 0.05f64..0.5, gap in 0.01f64..0.4) {
        let q = p + gap;
        let pair = NoisePair::new(p, q).unwrap();
        let got = correlation_boolean(&f, &f, pair).unwrap();
        let want = mu(&f, p).unwrap();
        prop_assert!((got - want).abs() < 1e-10);
    }

    #[test]
    fn shapley_is_permutation_equivariant(table in arb_table(4)) {
        let f = BooleanFunction::from_fn(4, |x| table[x as usize]).unwrap();
        // Swap coordinates 1 and 2 (bits 0 and 1).
        let swapped = BooleanFunction::from_fn(4, |x| {
            let swapped_x = (x & !3) | (x & 1) << 1 | (x >> 1 & 1);
            table[swapped_x as usize]
        })
        .unwrap();
        let a = shapley_exact(&f).unwrap();
        let b = shapley_exact(&swapped).unwrap();
        prop_assert!((a.values[0] - b.values[1]).abs() < 1e-12);
        prop_assert!((a.values[1] - b.values[0]).abs() < 1e-12);
        prop_assert!((a.values[2] - b.values[2]).abs() < 1e-12);
        prop_assert!((a.values[3] - b.values[3]).abs() < 1e-12);
    }
}
