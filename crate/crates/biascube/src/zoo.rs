//! The named collection of built-in functions that sweeps, verification
//! suites, and regression tests iterate over. Sizes are desk-scale on
//! purpose: every entry enumerates in well under a second, so cross-method
//! comparisons stay exact and fast.

use crate::function::{BooleanFunction, FunctionSpec};

/// A named built-in with its generator and monotonicity tag.
#[derive(Clone, Debug)]
pub struct ZooEntry {
    pub name: &'static str,
    pub spec: FunctionSpec,
    pub monotone: bool,
}

impl ZooEntry {
    pub fn build(&self) -> BooleanFunction {
        let f = self
            .spec
            .build()
            .expect("zoo entries are valid by construction");
        debug_assert_eq!(f.is_monotone(), self.monotone, "{} tag is wrong", self.name);
        f
    }
}

/// Every built-in, including the non-monotone parity rules.
pub fn all() -> Vec<ZooEntry> {
    vec![
        entry("dictator_1", FunctionSpec::Dictator { n: 1, k: 1 }, true),
        entry(
            "dictator_1_of_5",
            FunctionSpec::Dictator { n: 5, k: 1 },
            true,
        ),
        entry("and_2", FunctionSpec::And { n: 2 }, true),
        entry("and_4", FunctionSpec::And { n: 4 }, true),
        entry("or_2", FunctionSpec::Or { n: 2 }, true),
        entry("majority_3", FunctionSpec::Majority { n: 3 }, true),
        entry("majority_5", FunctionSpec::Majority { n: 5 }, true),
        entry("majority_9", FunctionSpec::Majority { n: 9 }, true),
        entry(
            "tribes_2x2",
            FunctionSpec::Tribes { n: 4, m: 2, w: 2 },
            true,
        ),
        entry(
            "tribes_3x3",
            FunctionSpec::Tribes { n: 9, m: 3, w: 3 },
            true,
        ),
        entry("judge_9_5", FunctionSpec::Judge { n: 9, g: 5 }, true),
        entry("judge_15_7", FunctionSpec::Judge { n: 15, g: 7 }, true),
        entry(
            "judge_or_tribes_16",
            FunctionSpec::JudgeOrTribes {
                n: 16,
                delta: 0.1,
                m: 4,
                w: 4,
            },
            true,
        ),
        entry(
            "weighted_majority_5",
            FunctionSpec::WeightedMajority {
                n: 5,
                weights: vec![3.0, 2.0, 1.0, 1.0, 1.0],
                quota: 5.0,
            },
            true,
        ),
        entry("parity_2", FunctionSpec::Parity { n: 2 }, false),
        entry("parity_3", FunctionSpec::Parity { n: 3 }, false),
    ]
}

/// The monotone built-ins only — the domain of threshold windows, Russo
/// grids, and the integral representation of ordering power.
pub fn monotone() -> Vec<ZooEntry> {
    all().into_iter().filter(|e| e.monotone).collect()
}

fn entry(name: &'static str, spec: FunctionSpec, monotone: bool) -> ZooEntry {
    ZooEntry {
        name,
        spec,
        monotone,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_builds_and_matches_its_tag() {
        let entries = all();
        assert_eq!(entries.len(), 16);
        for e in &entries {
            let f = e.build();
            assert_eq!(f.is_monotone(), e.monotone, "{}", e.name);
            assert!(f.audit(), "{}", e.name);
            assert!(f.n() <= 16, "{} too large for desk scale", e.name);
        }
    }

    #[test]
    fn monotone_subset_is_consistent() {
        let m = monotone();
        assert_eq!(m.len(), 14);
        assert!(m.iter().all(|e| e.monotone));
        let names: Vec<&str> = m.iter().map(|e| e.name).collect();
        assert!(!names.contains(&"parity_2"));
        assert!(names.contains(&"judge_or_tribes_16"));
    }

    #[test]
    fn names_are_unique() {
        let entries = all();
        let mut names: Vec<&str> = entries.iter().map(|e| e.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), entries.len());
    }

    #[test]
    fn no_entry_is_constant() {
        for e in all() {
            assert!(!e.build().is_constant(), "{}", e.name);
        }
    }
}
