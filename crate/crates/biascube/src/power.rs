//! Power indices: exact Shapley values for games and Boolean functions,
//! Shapley values by quadrature of the influence polynomial, Banzhaf values,
//! a permutation-sampling estimator, and an axiom checker.
//!
//! The subset-weight route and the quadrature route deliberately share no
//! code: the first one folds pivot counts against exact coalition weights,
//! the second integrates the influence polynomial numerically. Their
//! agreement on monotone functions is the module's core oracle test.

use crate::error::{Error, Result};
use crate::function::{BooleanFunction, GameFunction, GAME_N_CAP};
use crate::measures::influence;
use crate::numeric::{binomial, gauss_legendre_unit, KahanSum};
use crate::sampling::{random_permutation, stream_rng, PERMUTATION_STREAM_LEN};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PowerMethod {
    SubsetExact,
    OwenQuadrature,
    PermutationSampled,
    Banzhaf,
}

/// Per-player index values with provenance.
#[derive(Clone, Debug, Serialize)]
pub struct PowerVector {
    pub method: PowerMethod,
    pub values: Vec<f64>,
    /// Per-entry standard errors; present for the sampled method only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stderr: Option<Vec<f64>>,
}

impl PowerVector {
    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn total(&self) -> f64 {
        let mut acc = KahanSum::new();
        for &v in &self.values {
            acc.add(v);
        }
        acc.value()
    }
}

/// Ordering weights w(s) = s!(n-1-s)!/n! = 1 / (n * C(n-1, s)): the
/// probability that a uniformly random ordering places exactly the members
/// of a fixed s-set before a fixed player. Evaluated as one division of
/// exact integers, so each weight carries at most one rounding.
pub fn shapley_weights(n: usize) -> Result<Vec<f64>> {
    check_shapley_n(n)?;
    Ok((0..n)
        .map(|s| 1.0 / (n as u128 * binomial(n - 1, s)) as f64)
        .collect())
}

fn check_shapley_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if n > GAME_N_CAP {
        return Err(Error::TooLarge {
            n,
            cap: GAME_N_CAP,
            what: "exact ordering weights",
        });
    }
    Ok(())
}

/// Exact Shapley vector of a Boolean function.
///
/// psi_k = sum over s of (rising - falling pivot pairs at layer s) * w(s),
/// grouped as (1/n) * sum_s signed_s / C(n-1, s). This equals the
/// average-marginal-contribution definition: orderings are grouped by the
/// set preceding player k, and a marginal contribution of a 0/1 function is
/// +1 on rising pivot pairs and -1 on falling ones. Costs O(n^2) after the
/// table's O(n 2^n) cache build.
pub fn shapley_exact(f: &BooleanFunction) -> Result<PowerVector> {
    let n = f.n();
    check_shapley_n(n)?;
    let values = (1..=n)
        .map(|k| {
            let up = f.pivot_counts_rising(k)?;
            let down = f.pivot_counts_falling(k)?;
            let mut acc = KahanSum::new();
            for s in 0..n {
                let signed = up[s] as i64 - down[s] as i64;
                if signed != 0 {
                    acc.add(signed as f64 / binomial(n - 1, s) as f64);
                }
            }
            Ok(acc.value() / n as f64)
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(PowerVector {
        method: PowerMethod::SubsetExact,
        values,
        stderr: None,
    })
}

/// Exact Shapley vector of a general game by direct subset enumeration:
/// psi_k = sum over coalitions S avoiding k of w(|S|) (v(S + k) - v(S)).
/// Costs O(n 2^n); coordinates are processed in parallel.
pub fn shapley_exact_game(g: &GameFunction) -> Result<PowerVector> {
    let n = g.n();
    let w = shapley_weights(n)?;
    let values: Vec<f64> = (0..n)
        .into_par_iter()
        .map(|k| {
            let bit = 1u64 << k;
            let mut acc = KahanSum::new();
            for x in 0..1u64 << n {
                if x & bit == 0 {
                    let marginal = g.payoff(x | bit) - g.payoff(x);
                    if marginal != 0.0 {
                        acc.add(w[x.count_ones() as usize] * marginal);
                    }
                }
            }
            acc.value()
        })
        .collect();
    Ok(PowerVector {
        method: PowerMethod::SubsetExact,
        values,
        stderr: None,
    })
}

/// Shapley values as the integral over p of the influence polynomial,
/// by Gauss-Legendre quadrature on [0, 1]. The integrand has degree n-1, so
/// any rule with at least ceil(n/2) nodes integrates it exactly; fewer nodes
/// are refused because exactness is the contract. For non-monotone f this
/// integral is a different functional (it weighs falling edges positively).
pub fn shapley_owen(f: &BooleanFunction, nodes: usize) -> Result<PowerVector> {
    let n = f.n();
    let required = n.div_ceil(2);
    if nodes < required {
        return Err(Error::QuadratureTooCoarse {
            nodes,
            degree: n - 1,
            required,
        });
    }
    let rule = gauss_legendre_unit(nodes);
    let values = (1..=n)
        .map(|k| {
            let mut acc = KahanSum::new();
            for &(x, w) in &rule {
                acc.add(w * influence(f, k, x)?);
            }
            Ok(acc.value())
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(PowerVector {
        method: PowerMethod::OwenQuadrature,
        values,
        stderr: None,
    })
}

/// Banzhaf vector: b_k is the influence of coordinate k at bias 1/2. At that
/// bias the influence polynomial collapses to (total pivot pairs) / 2^(n-1),
/// computed in integers and scaled by an exact power of two.
pub fn banzhaf(f: &BooleanFunction) -> Result<PowerVector> {
    let n = f.n();
    let scale = (2f64).powi(-(n as i32 - 1));
    let values = (1..=n)
        .map(|k| {
            let total: u64 = f.pivot_counts(k)?.iter().sum();
            Ok(total as f64 * scale)
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(PowerVector {
        method: PowerMethod::Banzhaf,
        values,
        stderr: None,
    })
}

/// Monte-Carlo Shapley for an oracle-only function on up to 64 players:
/// sample random orderings, add each player's marginal contribution as the
/// coalition grows. Permutations are partitioned into fixed-size streams
/// seeded by (seed, stream index), so estimates are reproducible and
/// scheduling-independent; streams run in parallel and merge in index order.
///
/// Marginals telescope along each ordering, so for a 0/1 oracle the sum of
/// all n estimates equals f(full) - f(empty) exactly whenever the
/// permutation count is a power of two (integer sums, dyadic division).
pub fn shapley_sampled(
    oracle: impl Fn(u64) -> f64 + Sync,
    n: usize,
    permutations: u64,
    seed: u64,
) -> Result<PowerVector> {
    if n == 0 || n > 64 {
        return Err(Error::InvalidParameter(format!(
            "sampling needs 1 <= n <= 64, got {n}"
        )));
    }
    if permutations == 0 {
        return Err(Error::InvalidParameter("permutations must be >= 1".into()));
    }
    let streams = permutations.div_ceil(PERMUTATION_STREAM_LEN);
    let partials: Vec<(Vec<f64>, Vec<f64>)> = (0..streams)
        .into_par_iter()
        .map(|stream| {
            let mut rng = stream_rng(seed, stream);
            let in_stream =
                PERMUTATION_STREAM_LEN.min(permutations - stream * PERMUTATION_STREAM_LEN);
            let mut sums = vec![0.0f64; n];
            let mut sums_sq = vec![0.0f64; n];
            for _ in 0..in_stream {
                let perm = random_permutation(&mut rng, n);
                let mut coalition = 0u64;
                let mut before = oracle(0);
                for &k in &perm {
                    coalition |= 1 << k;
                    let after = oracle(coalition);
                    let marginal = after - before;
                    sums[k] += marginal;
                    sums_sq[k] += marginal * marginal;
                    before = after;
                }
            }
            (sums, sums_sq)
        })
        .collect();
    let mut sums = vec![KahanSum::new(); n];
    let mut sums_sq = vec![KahanSum::new(); n];
    for (s, ss) in partials {
        for k in 0..n {
            sums[k].add(s[k]);
            sums_sq[k].add(ss[k]);
        }
    }
    let m = permutations as f64;
    let values: Vec<f64> = sums.iter().map(|s| s.value() / m).collect();
    let stderr: Vec<f64> = values
        .iter()
        .zip(&sums_sq)
        .map(|(&mean, sq)| {
            if permutations > 1 {
                let var = ((sq.value() - m * mean * mean) / (m - 1.0)).max(0.0);
                (var / m).sqrt()
            } else {
                0.0
            }
        })
        .collect();
    Ok(PowerVector {
        method: PowerMethod::PermutationSampled,
        values,
        stderr: Some(stderr),
    })
}

/// Maximum deviations observed for each Shapley axiom on a pair of games.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub n: usize,
    /// |sum psi - v(full)|, worst of the two games.
    pub efficiency_dev: f64,
    /// ||psi(g1 + g2) - psi(g1) - psi(g2)||_inf.
    pub additivity_dev: f64,
    /// Players k with v(S + k) = v(S) for every S, per game.
    pub null_players: Vec<(usize, usize)>,
    /// max |psi_k| over detected null players (0 when none).
    pub null_player_dev: f64,
    /// Pairs (i, j) with v(S + i) = v(S + j) for all S avoiding both, in g1.
    pub symmetric_pairs: Vec<(usize, usize)>,
    /// max |psi_i - psi_j| over detected pairs (0 when none).
    pub symmetry_dev: f64,
    /// ||psi(a g1 + b) - (a psi(g1) + b)||_inf.
    pub affine_dev: f64,
}

impl AxiomReport {
    pub fn max_deviation(&self) -> f64 {
        [
            self.efficiency_dev,
            self.additivity_dev,
            self.null_player_dev,
            self.symmetry_dev,
            self.affine_dev,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// Recomputes both sides of each Shapley axiom on (g1, g2) and the affine
/// transform S -> a g1(S) + sum_{i in S} b_i, reporting worst deviations.
/// Null players and interchangeable pairs are detected exactly from payoffs.
pub fn verify_shapley_axioms(
    g1: &GameFunction,
    g2: &GameFunction,
    a: f64,
    b: &[f64],
) -> Result<AxiomReport> {
    if g1.n() != g2.n() {
        return Err(Error::ArityMismatch(g1.n(), g2.n()));
    }
    let n = g1.n();
    let psi1 = shapley_exact_game(g1)?;
    let psi2 = shapley_exact_game(g2)?;

    let efficiency_dev = [(g1, &psi1), (g2, &psi2)]
        .into_iter()
        .map(|(g, psi)| (psi.total() - g.payoff(g.full_mask())).abs())
        .fold(0.0, f64::max);

    let psi_sum = shapley_exact_game(&g1.add(g2)?)?;
    let additivity_dev = (0..n)
        .map(|k| (psi_sum.values[k] - psi1.values[k] - psi2.values[k]).abs())
        .fold(0.0, f64::max);

    let mut null_players = Vec::new();
    let mut null_player_dev: f64 = 0.0;
    for (game_idx, (g, psi)) in [(g1, &psi1), (g2, &psi2)].into_iter().enumerate() {
        for k in 0..n {
            let bit = 1u64 << k;
            let is_null = (0..1u64 << n).all(|x| x & bit != 0 || g.payoff(x | bit) == g.payoff(x));
            if is_null {
                null_players.push((game_idx + 1, k + 1));
                null_player_dev = null_player_dev.max(psi.values[k].abs());
            }
        }
    }

    let mut symmetric_pairs = Vec::new();
    let mut symmetry_dev: f64 = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            let (bi, bj) = (1u64 << i, 1u64 << j);
            let interchangeable = (0..1u64 << n)
                .all(|x| x & (bi | bj) != 0 || g1.payoff(x | bi) == g1.payoff(x | bj));
            if interchangeable {
                symmetric_pairs.push((i + 1, j + 1));
                symmetry_dev = symmetry_dev.max((psi1.values[i] - psi1.values[j]).abs());
            }
        }
    }

    let transformed = g1.affine(a, b)?;
    let psi_affine = shapley_exact_game(&transformed)?;
    let affine_dev = (0..n)
        .map(|k| (psi_affine.values[k] - (a * psi1.values[k] + b[k])).abs())
        .fold(0.0, f64::max);

    Ok(AxiomReport {
        n,
        efficiency_dev,
        additivity_dev,
        null_players,
        null_player_dev,
        symmetric_pairs,
        symmetry_dev,
        affine_dev,
    })
}
