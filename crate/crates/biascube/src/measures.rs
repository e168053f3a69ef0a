//! Biased measures of Boolean functions: mu_p, per-coordinate influences,
//! total influence, the analytic derivative of mu_p, and a seeded sampling
//! estimator for functions available only through an evaluation callback.
//!
//! Everything exact here is a polynomial in the bias evaluated from cached
//! layer or pivot counts, so a single O(2^n) table build buys O(n) per query
//! afterwards. All polynomial sums are compensated: layer counts reach 2^24
//! and the terms they multiply can cancel heavily.

use crate::error::{Error, Result};
use crate::function::BooleanFunction;
use crate::numeric::KahanSum;
use crate::sampling::{biased_point, stream_rng, SAMPLE_STREAM_LEN};
use serde::Serialize;

pub(crate) fn check_bias_open(p: f64) -> Result<()> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::BiasOutOfRange(p, "(0, 1)"));
    }
    Ok(())
}

/// Power tables p^0..p^hi and (1-p)^0..(1-p)^hi.
fn power_tables(p: f64, hi: usize) -> (Vec<f64>, Vec<f64>) {
    let mut pp = Vec::with_capacity(hi + 1);
    let mut qq = Vec::with_capacity(hi + 1);
    let q = 1.0 - p;
    let (mut a, mut b) = (1.0, 1.0);
    for _ in 0..=hi {
        pp.push(a);
        qq.push(b);
        a *= p;
        b *= q;
    }
    (pp, qq)
}

/// mu_p(f): probability that f = 1 under independent p-biased coordinates.
pub fn mu(f: &BooleanFunction, p: f64) -> Result<f64> {
    check_bias_open(p)?;
    let n = f.n();
    let (pp, qq) = power_tables(p, n);
    let mut acc = KahanSum::new();
    for (k, &count) in f.layer_counts().iter().enumerate() {
        if count != 0 {
            acc.add(count as f64 * pp[k] * qq[n - k]);
        }
    }
    Ok(acc.value())
}

/// Influence of coordinate k at bias p: the mu_p-measure of points whose
/// value flips when coordinate k flips. Each pivotal pair is counted once
/// via its x_k = 0 endpoint and weighted by the measure of the common
/// (n-1)-coordinate prefix.
pub fn influence(f: &BooleanFunction, k: usize, p: f64) -> Result<f64> {
    check_bias_open(p)?;
    let counts = f.pivot_counts(k)?;
    let n = f.n();
    let (pp, qq) = power_tables(p, n.saturating_sub(1));
    let mut acc = KahanSum::new();
    for (j, &c) in counts.iter().enumerate() {
        if c != 0 {
            acc.add(c as f64 * pp[j] * qq[n - 1 - j]);
        }
    }
    Ok(acc.value())
}

/// Sum of all n coordinate influences at bias p.
pub fn total_influence(f: &BooleanFunction, p: f64) -> Result<f64> {
    check_bias_open(p)?;
    let mut acc = KahanSum::new();
    for k in 1..=f.n() {
        acc.add(influence(f, k, p)?);
    }
    Ok(acc.value())
}

/// Analytic derivative of the layer polynomial
/// d/dp sum_k N_k p^k (1-p)^(n-k). For monotone f this equals the total
/// influence (the lemma relating the two is checked, not assumed).
pub fn mu_derivative(f: &BooleanFunction, p: f64) -> Result<f64> {
    check_bias_open(p)?;
    let n = f.n();
    let (pp, qq) = power_tables(p, n);
    let mut acc = KahanSum::new();
    for (k, &count) in f.layer_counts().iter().enumerate() {
        if count == 0 {
            continue;
        }
        let c = count as f64;
        if k > 0 {
            acc.add(c * k as f64 * pp[k - 1] * qq[n - k]);
        }
        if n - k > 0 {
            acc.add(-c * (n - k) as f64 * pp[k] * qq[n - k - 1]);
        }
    }
    Ok(acc.value())
}

/// Exact per-bias summary of a Boolean function.
#[derive(Clone, Debug, Serialize)]
pub struct BiasedMoments {
    pub p: f64,
    pub mu: f64,
    pub influences: Vec<f64>,
    pub total_influence: f64,
    pub mu_derivative: f64,
}

impl BiasedMoments {
    pub fn compute(f: &BooleanFunction, p: f64) -> Result<Self> {
        check_bias_open(p)?;
        let influences: Vec<f64> = (1..=f.n())
            .map(|k| influence(f, k, p))
            .collect::<Result<_>>()?;
        let mut acc = KahanSum::new();
        for &v in &influences {
            acc.add(v);
        }
        Ok(Self {
            p,
            mu: mu(f, p)?,
            influences,
            total_influence: acc.value(),
            mu_derivative: mu_derivative(f, p)?,
        })
    }
}

/// A sampled mean with its standard error.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SampleEstimate {
    pub estimate: f64,
    pub stderr: f64,
    pub samples: u64,
}

/// Monte-Carlo estimate of mu_p for an oracle-only function on up to 64
/// coordinates. Samples are drawn in fixed-size streams seeded by
/// (seed, stream index), so the result depends only on (n, p, samples, seed)
/// and never on scheduling. Standard error is sample stddev / sqrt(samples).
pub fn sample_mu(
    oracle: impl Fn(u64) -> f64,
    n: usize,
    p: f64,
    samples: u64,
    seed: u64,
) -> Result<SampleEstimate> {
    if n == 0 || n > 64 {
        return Err(Error::InvalidParameter(format!(
            "sampling needs 1 <= n <= 64, got {n}"
        )));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BiasOutOfRange(p, "[0, 1]"));
    }
    if samples == 0 {
        return Err(Error::InvalidParameter("samples must be >= 1".into()));
    }
    let mut total = KahanSum::new();
    let mut total_sq = KahanSum::new();
    let streams = samples.div_ceil(SAMPLE_STREAM_LEN);
    for stream in 0..streams {
        let mut rng = stream_rng(seed, stream);
        let in_stream = SAMPLE_STREAM_LEN.min(samples - stream * SAMPLE_STREAM_LEN);
        for _ in 0..in_stream {
            let x = biased_point(&mut rng, n, p);
            let v = oracle(x);
            total.add(v);
            total_sq.add(v * v);
        }
    }
    let m = samples as f64;
    let mean = total.value() / m;
    let stderr = if samples > 1 {
        let var = ((total_sq.value() - m * mean * mean) / (m - 1.0)).max(0.0);
        (var / m).sqrt()
    } else {
        0.0
    };
    Ok(SampleEstimate {
        estimate: mean,
        stderr,
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function::FunctionSpec;
    use crate::tolerances;

    fn build(spec: FunctionSpec) -> BooleanFunction {
        spec.build().unwrap()
    }

    #[test]
    fn mu_closed_forms() {
        let and2 = build(FunctionSpec::And { n: 2 });
        assert!((mu(&and2, 0.5).unwrap() - 0.25).abs() < 1e-15);
        assert!((mu(&and2, 0.3).unwrap() - 0.09).abs() < 1e-15);

        let tribes = build(FunctionSpec::Tribes { n: 4, m: 2, w: 2 });
        assert!((mu(&tribes, 0.5).unwrap() - 7.0 / 16.0).abs() < 1e-15);

        let maj3 = build(FunctionSpec::Majority { n: 3 });
        assert!((mu(&maj3, 0.5).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn mu_rejects_boundary_bias() {
        let and2 = build(FunctionSpec::And { n: 2 });
        assert!(mu(&and2, 0.0).is_err());
        assert!(mu(&and2, 1.0).is_err());
        assert!(mu(&and2, -0.1).is_err());
        assert!(mu(&and2, f64::NAN).is_err());
    }

    #[test]
    fn influence_closed_forms() {
        let maj3 = build(FunctionSpec::Majority { n: 3 });
        assert!((influence(&maj3, 1, 0.5).unwrap() - 0.5).abs() < 1e-15);

        let and2 = build(FunctionSpec::And { n: 2 });
        assert!((influence(&and2, 1, 0.3).unwrap() - 0.3).abs() < 1e-15);

        let dict = build(FunctionSpec::Dictator { n: 5, k: 1 });
        for p in [0.1, 0.5, 0.9] {
            assert_eq!(influence(&dict, 3, p).unwrap(), 0.0);
            assert!((influence(&dict, 1, p).unwrap() - 1.0).abs() < 1e-15);
        }
        assert!(influence(&maj3, 0, 0.5).is_err());
        assert!(influence(&maj3, 4, 0.5).is_err());
    }

    #[test]
    fn total_influence_closed_forms() {
        let and2 = build(FunctionSpec::And { n: 2 });
        assert!((total_influence(&and2, 0.5).unwrap() - 1.0).abs() < 1e-15);

        let maj3 = build(FunctionSpec::Majority { n: 3 });
        assert!((total_influence(&maj3, 0.5).unwrap() - 1.5).abs() < 1e-15);

        for n in [2usize, 3, 4] {
            let par = build(FunctionSpec::Parity { n });
            for p in [0.3, 0.5, 0.8] {
                assert!(
                    (total_influence(&par, p).unwrap() - n as f64).abs() < 1e-12,
                    "parity_{n} at p={p}"
                );
            }
        }
    }

    #[test]
    fn mu_derivative_closed_forms() {
        let and2 = build(FunctionSpec::And { n: 2 });
        assert!((mu_derivative(&and2, 0.5).unwrap() - 1.0).abs() < 1e-15);

        let maj3 = build(FunctionSpec::Majority { n: 3 });
        assert!((mu_derivative(&maj3, 0.5).unwrap() - 1.5).abs() < 1e-14);

        let or2 = build(FunctionSpec::Or { n: 2 });
        assert!((mu_derivative(&or2, 0.25).unwrap() - 1.5).abs() < 1e-15);
    }

    #[test]
    fn derivative_matches_total_influence_for_monotone() {
        let f = build(FunctionSpec::Tribes { n: 6, m: 2, w: 3 });
        for i in 1..99 {
            let p = i as f64 / 99.0;
            let d = mu_derivative(&f, p).unwrap();
            let t = total_influence(&f, p).unwrap();
            assert!(
                (d - t).abs() <= tolerances::DERIVATIVE_MATCH,
                "p={p}: {d} vs {t}"
            );
        }
    }

    #[test]
    fn influence_matches_exact_rational_brute_force() {
        // Brute force with integer arithmetic: at p = a/4, the pair weight
        // p^j (1-p)^(n-1-j) is a^j (4-a)^(n-1-j) / 4^(n-1) exactly.
        let f =
            BooleanFunction::from_fn(8, |x| (x.wrapping_mul(0x2545_f491_4f6c_dd1d) >> 5) & 1 == 1)
                .unwrap();
        let n = f.n();
        for a in [1u128, 2, 3] {
            let p = a as f64 / 4.0;
            for k in 1..=n {
                let mut num: u128 = 0;
                for x in 0..1u64 << n {
                    if x >> (k - 1) & 1 == 1 {
                        continue;
                    }
                    if f.evaluate(x) != f.evaluate(x | 1 << (k - 1)) {
                        let j = x.count_ones();
                        num += a.pow(j) * (4 - a).pow(n as u32 - 1 - j);
                    }
                }
                let exact = num as f64 / 4f64.powi(n as i32 - 1);
                let got = influence(&f, k, p).unwrap();
                assert!(
                    (got - exact).abs() <= tolerances::RATIONAL_MATCH,
                    "k={k} p={p}: {got} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn majority_influences_are_all_equal_exactly() {
        let f = build(FunctionSpec::Majority { n: 9 });
        for p in [0.2, 0.5, 0.77] {
            let base = influence(&f, 1, p).unwrap();
            for k in 2..=9 {
                assert_eq!(influence(&f, k, p).unwrap(), base);
            }
        }
    }

    #[test]
    fn moments_bundle_is_consistent() {
        let f = build(FunctionSpec::Judge { n: 9, g: 5 });
        let m = BiasedMoments::compute(&f, 0.4).unwrap();
        assert!((m.mu - mu(&f, 0.4).unwrap()).abs() < 1e-15);
        let s: f64 = m.influences.iter().sum();
        assert!((m.total_influence - s).abs() < 1e-12);
        assert!((m.mu_derivative - m.total_influence).abs() < tolerances::DERIVATIVE_MATCH);
    }

    #[test]
    fn sample_mu_constant_oracle() {
        let est = sample_mu(|_| 1.0, 10, 0.37, 1000, 99).unwrap();
        assert_eq!(est.estimate, 1.0);
        assert_eq!(est.stderr, 0.0);
    }

    #[test]
    fn sample_mu_and2_within_four_stderr() {
        let and2 = build(FunctionSpec::And { n: 2 });
        let est = sample_mu(|x| and2.value01(x), 2, 0.5, 100_000, 12345).unwrap();
        assert!(est.stderr > 0.0);
        assert!(
            (est.estimate - 0.25).abs() <= 4.0 * est.stderr,
            "estimate {} stderr {}",
            est.estimate,
            est.stderr
        );
    }

    #[test]
    fn sample_mu_majority_9_within_four_stderr() {
        let f = build(FunctionSpec::Majority { n: 9 });
        let exact = mu(&f, 0.6).unwrap();
        let est = sample_mu(|x| f.value01(x), 9, 0.6, 100_000, 777).unwrap();
        assert!((est.estimate - exact).abs() <= 4.0 * est.stderr);
    }

    #[test]
    fn sample_mu_is_deterministic() {
        let f = build(FunctionSpec::Majority { n: 5 });
        let a = sample_mu(|x| f.value01(x), 5, 0.45, 10_000, 2024).unwrap();
        let b = sample_mu(|x| f.value01(x), 5, 0.45, 10_000, 2024).unwrap();
        assert_eq!(a.estimate.to_bits(), b.estimate.to_bits());
        assert_eq!(a.stderr.to_bits(), b.stderr.to_bits());
    }

    #[test]
    fn sample_mu_validates_input() {
        assert!(sample_mu(|_| 0.0, 0, 0.5, 10, 1).is_err());
        assert!(sample_mu(|_| 0.0, 65, 0.5, 10, 1).is_err());
        assert!(sample_mu(|_| 0.0, 3, 1.5, 10, 1).is_err());
        assert!(sample_mu(|_| 0.0, 3, 0.5, 0, 1).is_err());
    }
}
