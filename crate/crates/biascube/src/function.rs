//! Boolean functions on the cube and cooperative games, plus generators for
//! the built-in example families.
//!
//! Bit convention, fixed across the whole crate: coordinate `i` (1-based)
//! occupies bit `i - 1` of an input index, so the input `x` with coordinates
//! (x_1, .., x_n) is the integer `sum x_i * 2^(i-1)`. Truth tables are bit
//! vectors indexed by that integer.

use crate::error::{Error, Result};
use crate::numeric::binomial;
use serde::{Deserialize, Serialize};

/// Exact-mode cap for bit tables (a 2^24-entry table is 2 MiB).
pub const BOOLEAN_N_CAP: usize = 24;
/// Exact-mode cap for dense payoff vectors (2^20 doubles is 8 MiB).
pub const GAME_N_CAP: usize = 20;

/// A Boolean function {0,1}^n -> {0,1} stored as a bit-packed truth table
/// with cached layer counts and per-coordinate pivot counts.
///
/// Immutable after construction; all cached statistics are derived from the
/// table during the O(n 2^n) build and never change.
#[derive(Clone, Debug)]
pub struct BooleanFunction {
    n: usize,
    words: Vec<u64>,
    /// layer_counts[k] = #{x : |x| = k, f(x) = 1}.
    layer_counts: Vec<u64>,
    /// pivot_up[i][k] = #{x : x_{i+1} = 0, |x| = k, f(x) = 0 < f(x + e_{i+1})}.
    pivot_up: Vec<Vec<u64>>,
    /// pivot_down[i][k]: same pairs but with f falling across the edge.
    pivot_down: Vec<Vec<u64>>,
    monotone: bool,
}

impl BooleanFunction {
    /// Builds a function from an evaluation closure over input bitmasks.
    /// Costs O(n 2^n): one pass for the table, one edge scan for the caches.
    pub fn from_fn(n: usize, f: impl Fn(u64) -> bool) -> Result<Self> {
        check_n(n)?;
        let size: u64 = 1 << n;
        let words_len = (size as usize).div_ceil(64);
        let mut words = vec![0u64; words_len];
        for x in 0..size {
            if f(x) {
                words[(x / 64) as usize] |= 1 << (x % 64);
            }
        }
        Ok(Self::from_words(n, words))
    }

    /// Builds from a packed bit table; bit x of the vector is f(x).
    pub fn from_bits(n: usize, words: Vec<u64>) -> Result<Self> {
        check_n(n)?;
        let size = 1u64 << n;
        let words_len = (size as usize).div_ceil(64);
        if words.len() != words_len {
            return Err(Error::InvalidParameter(format!(
                "bit table has {} words, expected {words_len}",
                words.len()
            )));
        }
        let mut words = words;
        if n < 6 {
            words[0] &= (1u64 << size) - 1;
        }
        Ok(Self::from_words(n, words))
    }

    fn from_words(n: usize, words: Vec<u64>) -> Self {
        let size: u64 = 1 << n;
        let bit = |x: u64| (words[(x / 64) as usize] >> (x % 64)) & 1 == 1;
        let mut layer_counts = vec![0u64; n + 1];
        let mut pivot_up = vec![vec![0u64; n]; n];
        let mut pivot_down = vec![vec![0u64; n]; n];
        for x in 0..size {
            let k = x.count_ones() as usize;
            let fx = bit(x);
            if fx {
                layer_counts[k] += 1;
            }
            for i in 0..n {
                if x >> i & 1 == 0 {
                    let fy = bit(x | 1 << i);
                    if fx != fy {
                        if fy {
                            pivot_up[i][k] += 1;
                        } else {
                            pivot_down[i][k] += 1;
                        }
                    }
                }
            }
        }
        let monotone = pivot_down.iter().all(|row| row.iter().all(|&c| c == 0));
        Self {
            n,
            words,
            layer_counts,
            pivot_up,
            pivot_down,
            monotone,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Bitmask of the full coalition [n].
    pub fn full_mask(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    /// f(x) as a bit. The input must satisfy x < 2^n.
    pub fn evaluate(&self, x: u64) -> bool {
        assert!(x < 1 << self.n, "input {x} out of range for n = {}", self.n);
        (self.words[(x / 64) as usize] >> (x % 64)) & 1 == 1
    }

    /// f(x) as 0.0 or 1.0.
    pub fn value01(&self, x: u64) -> f64 {
        if self.evaluate(x) {
            1.0
        } else {
            0.0
        }
    }

    /// Number of inputs on layer k (|x| = k) where f is 1.
    pub fn layer_counts(&self) -> &[u64] {
        &self.layer_counts
    }

    pub fn count_ones(&self) -> u64 {
        self.layer_counts.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        let ones = self.count_ones();
        ones == 0 || ones == 1 << self.n
    }

    /// Pivot counts for coordinate k (1-based): entry j counts pairs
    /// (x, x + e_k) with x_k = 0, |x| = j and f differing across the edge.
    pub fn pivot_counts(&self, k: usize) -> Result<Vec<u64>> {
        self.check_coordinate(k)?;
        Ok(self.pivot_up[k - 1]
            .iter()
            .zip(&self.pivot_down[k - 1])
            .map(|(a, b)| a + b)
            .collect())
    }

    /// Pivot pairs where f rises across the k-edge (f(x)=0, f(x+e_k)=1).
    pub fn pivot_counts_rising(&self, k: usize) -> Result<&[u64]> {
        self.check_coordinate(k)?;
        Ok(&self.pivot_up[k - 1])
    }

    /// Pivot pairs where f falls across the k-edge. All-zero for monotone f.
    pub fn pivot_counts_falling(&self, k: usize) -> Result<&[u64]> {
        self.check_coordinate(k)?;
        Ok(&self.pivot_down[k - 1])
    }

    pub(crate) fn check_coordinate(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.n {
            return Err(Error::CoordinateOutOfRange { k, n: self.n });
        }
        Ok(())
    }

    /// True iff f(x) <= f(y) whenever x <= y coordinatewise; equivalently,
    /// no cube edge sees f fall. Precomputed during construction.
    pub fn is_monotone(&self) -> bool {
        self.monotone
    }

    /// The dual rule x -> 1 - f(complement of x). An involution that
    /// preserves monotonicity; odd rules are exactly the self-dual ones.
    pub fn dualize(&self) -> BooleanFunction {
        let full = self.full_mask();
        BooleanFunction::from_fn(self.n, |x| !self.evaluate(!x & full))
            .expect("arity already validated")
    }

    /// True iff f(complement of x) = 1 - f(x) for every x, the defining
    /// property of an odd voting rule.
    pub fn is_odd_rule(&self) -> bool {
        let full = self.full_mask();
        (0..1u64 << self.n).all(|x| self.evaluate(!x & full) != self.evaluate(x))
    }

    /// Recomputes every cached statistic from the bit table and compares.
    /// Returns true when all caches are consistent.
    pub fn audit(&self) -> bool {
        let rebuilt = Self::from_words(self.n, self.words.clone());
        rebuilt.layer_counts == self.layer_counts
            && rebuilt.pivot_up == self.pivot_up
            && rebuilt.pivot_down == self.pivot_down
            && rebuilt.monotone == self.monotone
            && self.layer_counts.iter().sum::<u64>() == self.count_ones()
            && self
                .layer_counts
                .iter()
                .enumerate()
                .all(|(k, &c)| (c as u128) <= binomial(self.n, k))
    }

    /// Truth table as lowercase hex; bit 0 of the encoded integer is f(0).
    pub fn to_hex(&self) -> String {
        let digits = hex_digits(self.n);
        let mut out = String::with_capacity(digits);
        for d in (0..digits).rev() {
            let bit_base = (d * 4) as u64;
            let mut nib = 0u8;
            for b in 0..4 {
                let x = bit_base + b;
                if x < (1 << self.n) && self.evaluate(x) {
                    nib |= 1 << b;
                }
            }
            out.push(char::from_digit(nib as u32, 16).unwrap());
        }
        out
    }

    /// Parses a lowercase-hex truth table of exactly ceil(2^n / 4) digits.
    pub fn from_hex(n: usize, hex: &str) -> Result<Self> {
        check_n(n)?;
        let digits = hex_digits(n);
        if hex.len() != digits {
            return Err(Error::InvalidParameter(format!(
                "hex table for n = {n} must have exactly {digits} digits, got {}",
                hex.len()
            )));
        }
        let size = 1u64 << n;
        let mut words = vec![0u64; (size as usize).div_ceil(64)];
        for (pos, ch) in hex.chars().rev().enumerate() {
            let nib = match ch {
                '0'..='9' => ch as u64 - '0' as u64,
                'a'..='f' => ch as u64 - 'a' as u64 + 10,
                _ => {
                    return Err(Error::InvalidParameter(format!(
                        "hex table must be lowercase hex, found {ch:?}"
                    )))
                }
            };
            for b in 0..4 {
                if nib >> b & 1 == 1 {
                    let x = (pos * 4 + b) as u64;
                    if x >= size {
                        return Err(Error::InvalidParameter(
                            "hex table sets bits above 2^n".into(),
                        ));
                    }
                    words[(x / 64) as usize] |= 1 << (x % 64);
                }
            }
        }
        Ok(Self::from_words(n, words))
    }
}

fn hex_digits(n: usize) -> usize {
    (1usize << n).div_ceil(4).max(1)
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if n > BOOLEAN_N_CAP {
        return Err(Error::TooLarge {
            n,
            cap: BOOLEAN_N_CAP,
            what: "exact bit tables",
        });
    }
    Ok(())
}

/// A cooperative game: a payoff for every coalition, with payoff(empty) = 0.
#[derive(Clone, Debug)]
pub struct GameFunction {
    n: usize,
    payoff: Vec<f64>,
}

impl GameFunction {
    pub fn new(n: usize, payoff: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        if n > GAME_N_CAP {
            return Err(Error::TooLarge {
                n,
                cap: GAME_N_CAP,
                what: "dense payoff vectors",
            });
        }
        if payoff.len() != 1 << n {
            return Err(Error::InvalidParameter(format!(
                "payoff vector has {} entries, expected 2^{n}",
                payoff.len()
            )));
        }
        if payoff[0] != 0.0 {
            return Err(Error::NonzeroEmptyPayoff(payoff[0]));
        }
        if let Some(bad) = payoff.iter().find(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter(format!("non-finite payoff {bad}")));
        }
        Ok(Self { n, payoff })
    }

    /// Views a Boolean function as a 0/1 game. Requires f(empty) = 0.
    pub fn from_boolean(f: &BooleanFunction) -> Result<Self> {
        if f.n() > GAME_N_CAP {
            return Err(Error::TooLarge {
                n: f.n(),
                cap: GAME_N_CAP,
                what: "dense payoff vectors",
            });
        }
        if f.evaluate(0) {
            return Err(Error::NonzeroEmptyPayoff(1.0));
        }
        let payoff = (0..1u64 << f.n()).map(|x| f.value01(x)).collect();
        Ok(Self { n: f.n(), payoff })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full_mask(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    /// Payoff of the coalition with bitmask s; s must be < 2^n.
    pub fn payoff(&self, s: u64) -> f64 {
        self.payoff[s as usize]
    }

    /// Pointwise sum of two games on the same players.
    pub fn add(&self, other: &GameFunction) -> Result<GameFunction> {
        if self.n != other.n {
            return Err(Error::ArityMismatch(self.n, other.n));
        }
        let payoff = self
            .payoff
            .iter()
            .zip(&other.payoff)
            .map(|(a, b)| a + b)
            .collect();
        GameFunction::new(self.n, payoff)
    }

    /// The game S -> a * payoff(S) + sum_{i in S} b_i.
    pub fn affine(&self, a: f64, b: &[f64]) -> Result<GameFunction> {
        if b.len() != self.n {
            return Err(Error::ArityMismatch(self.n, b.len()));
        }
        let payoff = (0..1u64 << self.n)
            .map(|s| {
                let shift: f64 = (0..self.n).filter(|i| s >> i & 1 == 1).map(|i| b[i]).sum();
                a * self.payoff[s as usize] + shift
            })
            .collect();
        GameFunction::new(self.n, payoff)
    }
}

fn default_dictator_coordinate() -> usize {
    1
}

/// Serializable description of a built-in function family.
///
/// JSON form: `{"kind": "majority", "n": 3}` and so on; truth tables ride
/// along as lowercase hex with bit 0 = f(0).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum FunctionSpec {
    TruthTable {
        n: usize,
        table: String,
    },
    Majority {
        n: usize,
    },
    Dictator {
        n: usize,
        #[serde(default = "default_dictator_coordinate")]
        k: usize,
    },
    And {
        n: usize,
    },
    Or {
        n: usize,
    },
    Parity {
        n: usize,
    },
    Tribes {
        n: usize,
        m: usize,
        w: usize,
    },
    Judge {
        n: usize,
        g: usize,
    },
    JudgeOrTribes {
        n: usize,
        delta: f64,
        m: usize,
        w: usize,
    },
    WeightedMajority {
        n: usize,
        weights: Vec<f64>,
        quota: f64,
    },
}

impl FunctionSpec {
    pub fn n(&self) -> usize {
        match *self {
            FunctionSpec::TruthTable { n, .. }
            | FunctionSpec::Majority { n }
            | FunctionSpec::Dictator { n, .. }
            | FunctionSpec::And { n }
            | FunctionSpec::Or { n }
            | FunctionSpec::Parity { n }
            | FunctionSpec::Tribes { n, .. }
            | FunctionSpec::Judge { n, .. }
            | FunctionSpec::JudgeOrTribes { n, .. }
            | FunctionSpec::WeightedMajority { n, .. } => n,
        }
    }

    /// Builds the truth table described by this spec.
    pub fn build(&self) -> Result<BooleanFunction> {
        match self {
            FunctionSpec::TruthTable { n, table } => BooleanFunction::from_hex(*n, table),
            FunctionSpec::Majority { n } => {
                if n % 2 == 0 {
                    return Err(Error::InvalidParameter(format!(
                        "majority requires odd n, got {n}"
                    )));
                }
                let half = *n as u32 / 2;
                BooleanFunction::from_fn(*n, |x| x.count_ones() > half)
            }
            FunctionSpec::Dictator { n, k } => {
                if *k == 0 || k > n {
                    return Err(Error::CoordinateOutOfRange { k: *k, n: *n });
                }
                let bit = *k - 1;
                BooleanFunction::from_fn(*n, |x| x >> bit & 1 == 1)
            }
            FunctionSpec::And { n } => {
                check_n(*n)?;
                let full = (1u64 << n) - 1;
                BooleanFunction::from_fn(*n, |x| x == full)
            }
            FunctionSpec::Or { n } => BooleanFunction::from_fn(*n, |x| x != 0),
            FunctionSpec::Parity { n } => BooleanFunction::from_fn(*n, |x| x.count_ones() % 2 == 1),
            FunctionSpec::Tribes { n, m, w } => {
                if *m == 0 || *w == 0 || m * w != *n {
                    return Err(Error::InvalidParameter(format!(
                        "tribes requires m*w = n, got m={m} w={w} n={n}"
                    )));
                }
                let (m, w) = (*m, *w);
                let tribe_full = (1u64 << w) - 1;
                BooleanFunction::from_fn(*n, move |x| {
                    (0..m).any(|t| x >> (t * w) & tribe_full == tribe_full)
                })
            }
            FunctionSpec::Judge { n, g } => {
                if g > n {
                    return Err(Error::InvalidParameter(format!(
                        "judge gap must satisfy 0 <= g <= n, got g={g} n={n}"
                    )));
                }
                let (n_i, g_i) = (*n as i64, *g as i64);
                BooleanFunction::from_fn(*n, move |x| {
                    let votes = x.count_ones() as i64;
                    if (2 * votes - n_i).abs() >= g_i {
                        2 * votes > n_i
                    } else {
                        x & 1 == 1
                    }
                })
            }
            FunctionSpec::JudgeOrTribes { n, delta, m, w } => {
                if *m == 0 || *w == 0 || m * w != *n {
                    return Err(Error::InvalidParameter(format!(
                        "judge_or_tribes requires m*w = n, got m={m} w={w} n={n}"
                    )));
                }
                if !delta.is_finite() || *delta < 0.0 {
                    return Err(Error::InvalidParameter(format!(
                        "judge_or_tribes margin must be a finite nonnegative fraction, got {delta}"
                    )));
                }
                let cutoff = (0.5 + delta) * *n as f64;
                let (m, w) = (*m, *w);
                let tribe_full = (1u64 << w) - 1;
                BooleanFunction::from_fn(*n, move |x| {
                    let judge = x & 1 == 1 && x.count_ones() as f64 > cutoff;
                    judge || (0..m).any(|t| x >> (t * w) & tribe_full == tribe_full)
                })
            }
            FunctionSpec::WeightedMajority { n, weights, quota } => {
                if weights.len() != *n {
                    return Err(Error::ArityMismatch(*n, weights.len()));
                }
                if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
                    return Err(Error::InvalidParameter(
                        "weighted_majority weights must be finite and nonnegative".into(),
                    ));
                }
                if !quota.is_finite() {
                    return Err(Error::InvalidParameter("quota must be finite".into()));
                }
                let weights = weights.clone();
                let quota = *quota;
                BooleanFunction::from_fn(*n, move |x| {
                    let total: f64 = weights
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| x >> i & 1 == 1)
                        .map(|(_, w)| w)
                        .sum();
                    total >= quota
                })
            }
        }
    }
}

/// Suggested tribe width for a given n: round(log2 n - log2 log2 n),
/// clamped to [1, n]. A convenience only; callers pick explicit (m, w).
pub fn suggested_tribe_width(n: usize) -> usize {
    let lg = (n as f64).log2();
    let w = (lg - lg.log2()).round();
    (w.max(1.0) as usize).min(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn maj3() -> BooleanFunction {
        FunctionSpec::Majority { n: 3 }.build().unwrap()
    }

    #[test]
    fn majority_3_table() {
        let f = maj3();
        // 1 on index bitmasks {3, 5, 6, 7}: binary 11101000.
        assert_eq!(f.to_hex(), "e8");
        assert_eq!(f.count_ones(), 4);
        assert!(f.evaluate(0b110));
        assert!(!f.evaluate(0b100));
        assert_eq!(f.layer_counts(), &[0, 0, 3, 1]);
    }

    #[test]
    fn and_evaluation() {
        let f = FunctionSpec::And { n: 2 }.build().unwrap();
        assert!(f.evaluate(0b11));
        assert!(!f.evaluate(0b01));
        assert!(!f.evaluate(0b00));
    }

    #[test]
    fn tribes_2x2_shape() {
        let f = FunctionSpec::Tribes { n: 4, m: 2, w: 2 }.build().unwrap();
        for x in 0..16u64 {
            let want = (x & 0b0011 == 0b0011) || (x & 0b1100 == 0b1100);
            assert_eq!(f.evaluate(x), want, "x={x:04b}");
        }
        assert_eq!(f.count_ones(), 7);
    }

    #[test]
    fn tribes_ones_count_identity() {
        for (m, w) in [(2usize, 2usize), (3, 3), (2, 3), (3, 2), (4, 4)] {
            let n = m * w;
            let f = FunctionSpec::Tribes { n, m, w }.build().unwrap();
            let want = (1u64 << n) - ((1u64 << w) - 1).pow(m as u32);
            assert_eq!(f.count_ones(), want, "m={m} w={w}");
        }
    }

    #[test]
    fn judge_with_full_gap_is_dictator() {
        let j = FunctionSpec::Judge { n: 5, g: 5 }.build().unwrap();
        let d = FunctionSpec::Dictator { n: 5, k: 1 }.build().unwrap();
        assert_eq!(j.to_hex(), d.to_hex());
        assert!(j.is_monotone());
    }

    #[test]
    fn monotonicity_checks() {
        assert!(maj3().is_monotone());
        assert!(!FunctionSpec::Parity { n: 2 }.build().unwrap().is_monotone());
        assert!(FunctionSpec::Judge { n: 9, g: 3 }
            .build()
            .unwrap()
            .is_monotone());
        assert!(FunctionSpec::Judge { n: 9, g: 5 }
            .build()
            .unwrap()
            .is_monotone());
        assert!(FunctionSpec::JudgeOrTribes {
            n: 16,
            delta: 0.1,
            m: 4,
            w: 4
        }
        .build()
        .unwrap()
        .is_monotone());
        assert!(FunctionSpec::WeightedMajority {
            n: 5,
            weights: vec![3.0, 2.0, 1.0, 1.0, 1.0],
            quota: 5.0
        }
        .build()
        .unwrap()
        .is_monotone());
    }

    #[test]
    fn dualize_examples() {
        // Dictators are self-dual.
        let d = FunctionSpec::Dictator { n: 1, k: 1 }.build().unwrap();
        let dd = d.dualize();
        assert!(!dd.evaluate(0));
        assert!(dd.evaluate(1));

        // The dual of AND is OR.
        let and2 = FunctionSpec::And { n: 2 }.build().unwrap();
        let dual = and2.dualize();
        for x in 0..4u64 {
            assert_eq!(dual.evaluate(x), x != 0);
        }
        assert!(dual.is_monotone());
    }

    #[test]
    fn dualize_is_involution() {
        // Deterministic scrambled table on n = 6.
        let f =
            BooleanFunction::from_fn(6, |x| (x.wrapping_mul(0x9e37_79b9) >> 3) & 1 == 1).unwrap();
        let back = f.dualize().dualize();
        assert_eq!(f.to_hex(), back.to_hex());
    }

    #[test]
    fn odd_rule_checks() {
        assert!(maj3().is_odd_rule());
        assert!(!FunctionSpec::And { n: 2 }.build().unwrap().is_odd_rule());
        assert!(FunctionSpec::Parity { n: 3 }.build().unwrap().is_odd_rule());
        assert!(!FunctionSpec::Parity { n: 2 }.build().unwrap().is_odd_rule());
    }

    #[test]
    fn generator_outputs_pass_audit() {
        let specs = vec![
            FunctionSpec::Majority { n: 5 },
            FunctionSpec::Dictator { n: 4, k: 2 },
            FunctionSpec::And { n: 3 },
            FunctionSpec::Or { n: 3 },
            FunctionSpec::Parity { n: 4 },
            FunctionSpec::Tribes { n: 6, m: 2, w: 3 },
            FunctionSpec::Judge { n: 7, g: 4 },
            FunctionSpec::JudgeOrTribes {
                n: 9,
                delta: 0.2,
                m: 3,
                w: 3,
            },
            FunctionSpec::WeightedMajority {
                n: 3,
                weights: vec![2.0, 1.0, 1.0],
                quota: 3.0,
            },
        ];
        for spec in specs {
            let f = spec.build().unwrap();
            assert!(f.audit(), "audit failed for {spec:?}");
        }
    }

    #[test]
    fn pivot_counts_match_hand_enumeration() {
        // AND_2, coordinate 1: pivotal only against x = 01 (layer 1).
        let and2 = FunctionSpec::And { n: 2 }.build().unwrap();
        assert_eq!(and2.pivot_counts(1).unwrap(), vec![0, 1]);
        assert_eq!(and2.pivot_counts_rising(1).unwrap(), &[0, 1]);
        assert_eq!(and2.pivot_counts_falling(1).unwrap(), &[0, 0]);
    }

    #[test]
    fn hex_round_trip() {
        let f = FunctionSpec::Tribes { n: 6, m: 3, w: 2 }.build().unwrap();
        let hex = f.to_hex();
        assert_eq!(hex.len(), 16);
        let g = BooleanFunction::from_hex(6, &hex).unwrap();
        assert_eq!(g.to_hex(), hex);
        assert!(g.audit());

        // n = 1 pads to a single digit.
        let d = FunctionSpec::Dictator { n: 1, k: 1 }.build().unwrap();
        assert_eq!(d.to_hex(), "2");
        assert_eq!(BooleanFunction::from_hex(1, "2").unwrap().to_hex(), "2");
    }

    #[test]
    fn hex_rejects_bad_input() {
        assert!(BooleanFunction::from_hex(2, "E8").is_err());
        assert!(BooleanFunction::from_hex(3, "e").is_err());
        assert!(BooleanFunction::from_hex(1, "4").is_err());
        assert!(BooleanFunction::from_hex(2, "g").is_err());
    }

    #[test]
    fn spec_json_round_trip() {
        let spec: FunctionSpec = serde_json::from_str(r#"{"kind":"majority","n":3}"#).unwrap();
        assert_eq!(spec, FunctionSpec::Majority { n: 3 });
        let jot = FunctionSpec::JudgeOrTribes {
            n: 16,
            delta: 0.1,
            m: 4,
            w: 4,
        };
        let text = serde_json::to_string(&jot).unwrap();
        let back: FunctionSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(jot, back);

        let dict: FunctionSpec = serde_json::from_str(r#"{"kind":"dictator","n":4}"#).unwrap();
        assert_eq!(dict, FunctionSpec::Dictator { n: 4, k: 1 });
    }

    #[test]
    fn invalid_specs_are_refused() {
        assert!(FunctionSpec::Majority { n: 4 }.build().is_err());
        assert!(FunctionSpec::Tribes { n: 5, m: 2, w: 2 }.build().is_err());
        assert!(FunctionSpec::Judge { n: 5, g: 6 }.build().is_err());
        assert!(FunctionSpec::Dictator { n: 4, k: 5 }.build().is_err());
        assert!(FunctionSpec::Dictator { n: 4, k: 0 }.build().is_err());
        assert!(FunctionSpec::Majority { n: 25 }.build().is_err());
        assert!(FunctionSpec::And { n: 0 }.build().is_err());
        assert!(FunctionSpec::WeightedMajority {
            n: 2,
            weights: vec![1.0, -1.0],
            quota: 1.0
        }
        .build()
        .is_err());
        assert!(FunctionSpec::JudgeOrTribes {
            n: 4,
            delta: -0.1,
            m: 2,
            w: 2
        }
        .build()
        .is_err());
    }

    #[test]
    fn game_construction_rules() {
        assert!(GameFunction::new(2, vec![0.0, 1.0, 2.0, 3.0]).is_ok());
        assert!(matches!(
            GameFunction::new(2, vec![0.5, 1.0, 2.0, 3.0]),
            Err(Error::NonzeroEmptyPayoff(_))
        ));
        assert!(GameFunction::new(2, vec![0.0, 1.0]).is_err());
        assert!(GameFunction::new(21, vec![0.0; 1 << 21]).is_err());

        let or2 = FunctionSpec::Or { n: 2 }.build().unwrap();
        let g = GameFunction::from_boolean(&or2).unwrap();
        assert_eq!(g.payoff(0b11), 1.0);

        let all = BooleanFunction::from_fn(2, |_| true).unwrap();
        assert!(GameFunction::from_boolean(&all).is_err());
    }

    #[test]
    fn game_affine_and_add() {
        let g = GameFunction::new(2, vec![0.0, 1.0, 2.0, 4.0]).unwrap();
        let sum = g.add(&g).unwrap();
        assert_eq!(sum.payoff(0b11), 8.0);
        let shifted = g.affine(2.0, &[10.0, 20.0]).unwrap();
        assert_eq!(shifted.payoff(0b01), 12.0);
        assert_eq!(shifted.payoff(0b11), 38.0);
        assert_eq!(shifted.payoff(0), 0.0);
    }

    #[test]
    fn suggested_width_is_sane() {
        assert_eq!(suggested_tribe_width(2), 1);
        let w = suggested_tribe_width(1024);
        assert!((6..=8).contains(&w));
    }
}
