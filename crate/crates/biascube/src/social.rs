//! Voting over m candidates: preference profiles, pairwise tournaments
//! under an odd monotone rule, Condorcet analysis, and the classical
//! profile construction realizing any target tournament under majority.

use crate::error::{Error, Result};
use crate::function::BooleanFunction;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Rankings of m candidates by n voters, most-preferred first.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PreferenceProfile {
    m: usize,
    rankings: Vec<Vec<usize>>,
}

impl PreferenceProfile {
    /// Each ranking must be a permutation of 0..m-1.
    pub fn new(m: usize, rankings: Vec<Vec<usize>>) -> Result<PreferenceProfile> {
        if m < 2 {
            return Err(Error::InvalidParameter(format!(
                "need at least two candidates, got {m}"
            )));
        }
        if rankings.is_empty() {
            return Err(Error::InvalidParameter("no voters".into()));
        }
        for (v, ranking) in rankings.iter().enumerate() {
            let mut seen = vec![false; m];
            if ranking.len() != m {
                return Err(Error::InvalidParameter(format!(
                    "voter {v} ranks {} candidates, expected {m}",
                    ranking.len()
                )));
            }
            for &c in ranking {
                if c >= m || seen[c] {
                    return Err(Error::InvalidParameter(format!(
                        "voter {v}'s ranking is not a permutation of 0..{m}"
                    )));
                }
                seen[c] = true;
            }
        }
        Ok(PreferenceProfile { m, rankings })
    }

    pub fn candidates(&self) -> usize {
        self.m
    }

    pub fn voters(&self) -> usize {
        self.rankings.len()
    }

    pub fn rankings(&self) -> &[Vec<usize>] {
        &self.rankings
    }

    /// True iff voter v ranks candidate a above candidate b.
    pub fn prefers(&self, v: usize, a: usize, b: usize) -> bool {
        let ranking = &self.rankings[v];
        let pos = |c| {
            ranking
                .iter()
                .position(|&x| x == c)
                .expect("validated permutation")
        };
        pos(a) < pos(b)
    }

    /// Renames candidate c to relabel[c] in every ranking.
    pub fn relabel(&self, relabel: &[usize]) -> Result<PreferenceProfile> {
        if relabel.len() != self.m {
            return Err(Error::InvalidParameter(format!(
                "relabeling has {} entries, expected {}",
                relabel.len(),
                self.m
            )));
        }
        let rankings = self
            .rankings
            .iter()
            .map(|r| r.iter().map(|&c| relabel[c]).collect())
            .collect();
        PreferenceProfile::new(self.m, rankings)
    }
}

/// A complete asymmetric preference relation: exactly one winner per
/// unordered candidate pair. Pairs are indexed lexicographically:
/// (0,1), (0,2), ..., (0,m-1), (1,2), ...
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tournament {
    m: usize,
    /// Entry for pair (a, b) with a < b is true when a beats b.
    low_wins: Vec<bool>,
}

impl Tournament {
    pub fn new(m: usize, low_wins: Vec<bool>) -> Result<Tournament> {
        if m < 2 {
            return Err(Error::InvalidParameter(format!(
                "need at least two candidates, got {m}"
            )));
        }
        if low_wins.len() != m * (m - 1) / 2 {
            return Err(Error::InvalidParameter(format!(
                "expected {} edges, got {}",
                m * (m - 1) / 2,
                low_wins.len()
            )));
        }
        Ok(Tournament { m, low_wins })
    }

    pub fn candidates(&self) -> usize {
        self.m
    }

    fn pair_index(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < b && b < self.m);
        // Pairs (a, *) start after all pairs with smaller first element.
        a * self.m - a * (a + 1) / 2 + (b - a - 1)
    }

    /// The winner among candidates a and b.
    pub fn winner(&self, a: usize, b: usize) -> Result<usize> {
        if a >= self.m || b >= self.m || a == b {
            return Err(Error::InvalidParameter(format!(
                "invalid candidate pair ({a}, {b}) for m={}",
                self.m
            )));
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        Ok(if self.low_wins[self.pair_index(lo, hi)] {
            lo
        } else {
            hi
        })
    }

    fn beats(&self, a: usize, b: usize) -> bool {
        self.winner(a, b).is_ok_and(|w| w == a)
    }

    /// The candidate beating every other, when one exists.
    pub fn condorcet_winner(&self) -> Option<usize> {
        (0..self.m).find(|&c| (0..self.m).all(|other| other == c || self.beats(c, other)))
    }

    /// True iff some triple of candidates forms a preference cycle.
    /// A tournament is transitive exactly when no 3-cycle exists.
    pub fn has_cycle(&self) -> bool {
        for a in 0..self.m {
            for b in 0..self.m {
                for c in 0..self.m {
                    if a != b
                        && b != c
                        && a != c
                        && self.beats(a, b)
                        && self.beats(b, c)
                        && self.beats(c, a)
                    {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Edge list, one "a>b" string per pair in lexicographic pair order.
    pub fn edge_lines(&self) -> Vec<String> {
        let mut out = Vec::with_capacity(self.low_wins.len());
        for a in 0..self.m {
            for b in a + 1..self.m {
                let w = self.winner(a, b).expect("valid pair");
                let l = a + b - w;
                out.push(format!("{w}>{l}"));
            }
        }
        out
    }
}

/// Runs one pairwise election per candidate pair: voter i's bit is 1 when
/// they rank the lexicographically smaller candidate higher, and the rule
/// decides the winner. The rule must be monotone and odd — oddness makes
/// the outcome asymmetric (complementing every vote flips the winner), so
/// no pair can tie.
pub fn pairwise_tournament(
    profile: &PreferenceProfile,
    rule: &BooleanFunction,
) -> Result<Tournament> {
    if rule.n() != profile.voters() {
        return Err(Error::ArityMismatch(rule.n(), profile.voters()));
    }
    if !rule.is_monotone() {
        return Err(Error::NotMonotone);
    }
    if !rule.is_odd_rule() {
        return Err(Error::NotOddRule);
    }
    tournament_under(profile, |votes| Ok(rule.evaluate(votes)))
}

/// Pairwise tournament under simple majority for any voter count, with an
/// explicit error on tied pairs instead of an arity gate. This is the
/// verifier for profile constructions whose voter count is even.
pub fn majority_tournament(profile: &PreferenceProfile) -> Result<Tournament> {
    let n = profile.voters() as u32;
    tournament_under(profile, |votes| {
        let ones = votes.count_ones();
        if 2 * ones == n {
            return Err(Error::TiedPair { a: 0, b: 0 });
        }
        Ok(2 * ones > n)
    })
}

fn tournament_under(
    profile: &PreferenceProfile,
    decide: impl Fn(u64) -> Result<bool>,
) -> Result<Tournament> {
    let m = profile.candidates();
    let mut low_wins = Vec::with_capacity(m * (m - 1) / 2);
    for a in 0..m {
        for b in a + 1..m {
            let mut votes = 0u64;
            for v in 0..profile.voters() {
                if profile.prefers(v, a, b) {
                    votes |= 1 << v;
                }
            }
            low_wins.push(decide(votes).map_err(|e| match e {
                Error::TiedPair { .. } => Error::TiedPair { a, b },
                other => other,
            })?);
        }
    }
    Tournament::new(m, low_wins)
}

/// Builds a profile of 2 * C(m, 2) voters whose pairwise majorities realize
/// the target exactly. Per edge w -> l the two voters are
///   (w, l, rest ascending)  and  (rest descending, w, l):
/// together they give w two votes over l while every other pair gets one
/// vote each way, so each edge's margin is exactly +2 and independent of
/// all other edges.
pub fn mcgarvey_construct(target: &Tournament) -> Result<PreferenceProfile> {
    let m = target.candidates();
    let mut rankings = Vec::with_capacity(m * (m - 1));
    for a in 0..m {
        for b in a + 1..m {
            let w = target.winner(a, b)?;
            let l = a + b - w;
            let rest: Vec<usize> = (0..m).filter(|&c| c != w && c != l).collect();

            let mut first = vec![w, l];
            first.extend(&rest);
            rankings.push(first);

            let mut second: Vec<usize> = rest.into_iter().rev().collect();
            second.push(w);
            second.push(l);
            rankings.push(second);
        }
    }
    PreferenceProfile::new(m, rankings)
}

/// Whether the profile reproduces the target under the given odd rule.
pub fn verify_realization(
    profile: &PreferenceProfile,
    rule: &BooleanFunction,
    target: &Tournament,
) -> Result<bool> {
    Ok(pairwise_tournament(profile, rule)? == *target)
}

/// Whether the profile reproduces the target under simple majority.
pub fn verify_majority_realization(
    profile: &PreferenceProfile,
    target: &Tournament,
) -> Result<bool> {
    Ok(majority_tournament(profile)? == *target)
}

/// Constructs and verifies every one of the 2^C(m,2) tournaments on m
/// candidates; returns the number realized. Parallel over targets.
pub fn mcgarvey_exhaustive(m: usize) -> Result<usize> {
    let pairs = m * (m - 1) / 2;
    let realized = (0..1u64 << pairs)
        .into_par_iter()
        .map(|mask| {
            let low_wins = (0..pairs).map(|i| mask >> i & 1 == 1).collect();
            let target = Tournament::new(m, low_wins)?;
            let profile = mcgarvey_construct(&target)?;
            Ok(verify_majority_realization(&profile, &target)? as usize)
        })
        .collect::<Result<Vec<usize>>>()?;
    Ok(realized.iter().sum())
}
