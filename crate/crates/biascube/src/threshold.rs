//! Critical biases and threshold windows of monotone functions: where the
//! acceptance probability crosses given levels, how influences behave inside
//! the window, and reports relating window length to power indices.

use crate::error::{Error, Result};
use crate::function::BooleanFunction;
use crate::measures::{influence, mu, total_influence};
use crate::power::{banzhaf, shapley_exact};
use crate::tolerances::BISECTION_P;
use rayon::prelude::*;
use serde::Serialize;

/// Default number of grid points over a threshold window.
pub const DEFAULT_GRID: usize = 101;

/// The bias where the acceptance probability equals alpha. Requires a
/// monotone non-constant function, so p -> mu(f, p) is strictly increasing
/// and the crossing is unique; found by bisection to 1e-12 in p.
pub fn p_alpha(f: &BooleanFunction, alpha: f64) -> Result<f64> {
    if !f.is_monotone() {
        return Err(Error::NotMonotone);
    }
    if f.is_constant() {
        return Err(Error::ConstantFunction);
    }
    if !(alpha > 0.0 && alpha < 1.0) || !alpha.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "level must lie strictly between 0 and 1, got {alpha}"
        )));
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while hi - lo > BISECTION_P {
        let mid = 0.5 * (lo + hi);
        if mu(f, mid)? < alpha {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// One sampled bias inside a threshold window.
#[derive(Clone, Debug, Serialize)]
pub struct GridRow {
    pub p: f64,
    pub max_influence: f64,
    /// 1-based coordinate attaining the max; ties break to the lowest.
    pub argmax_coordinate: usize,
    pub total_influence: f64,
}

/// The window [p_lo, p_hi] where acceptance rises from epsilon to
/// 1 - epsilon, with an influence profile sampled across it.
#[derive(Clone, Debug, Serialize)]
pub struct ThresholdReport {
    pub epsilon: f64,
    pub p_lo: f64,
    pub p_hi: f64,
    pub length: f64,
    /// Reciprocal window length.
    pub s: f64,
    pub grid: Vec<GridRow>,
    /// Sorted union of the per-row argmax coordinates.
    pub witness_set: Vec<usize>,
    /// Worst case over the grid of the best single-coordinate influence.
    pub min_max_influence: f64,
    /// Exponent c solving min_max_influence = epsilon^(c * s).
    pub empirical_exponent: f64,
}

/// The threshold window with the default grid resolution.
pub fn threshold_interval(f: &BooleanFunction, epsilon: f64) -> Result<ThresholdReport> {
    influence_profile_scan(f, epsilon, DEFAULT_GRID)
}

/// The threshold window with a caller-chosen grid resolution. Grid rows are
/// computed in parallel and assembled in grid order, so output is
/// deterministic.
pub fn influence_profile_scan(
    f: &BooleanFunction,
    epsilon: f64,
    grid_size: usize,
) -> Result<ThresholdReport> {
    if !(epsilon > 0.0 && epsilon < 0.5) {
        return Err(Error::InvalidParameter(format!(
            "window level must lie in (0, 1/2), got {epsilon}"
        )));
    }
    if grid_size < 2 {
        return Err(Error::InvalidParameter(format!(
            "grid needs at least the two endpoints, got {grid_size}"
        )));
    }
    let p_lo = p_alpha(f, epsilon)?;
    let p_hi = p_alpha(f, 1.0 - epsilon)?;
    let length = p_hi - p_lo;
    let s = 1.0 / length;
    let n = f.n();
    let grid: Vec<GridRow> = (0..grid_size)
        .into_par_iter()
        .map(|idx| {
            let frac = idx as f64 / (grid_size - 1) as f64;
            let p = p_lo + frac * length;
            let mut max_influence = f64::NEG_INFINITY;
            let mut argmax_coordinate = 1;
            for k in 1..=n {
                let inf = influence(f, k, p)?;
                if inf > max_influence {
                    max_influence = inf;
                    argmax_coordinate = k;
                }
            }
            Ok(GridRow {
                p,
                max_influence,
                argmax_coordinate,
                total_influence: total_influence(f, p)?,
            })
        })
        .collect::<Result<_>>()?;
    let mut witness_set: Vec<usize> = grid.iter().map(|r| r.argmax_coordinate).collect();
    witness_set.sort_unstable();
    witness_set.dedup();
    let min_max_influence = grid
        .iter()
        .map(|r| r.max_influence)
        .fold(f64::INFINITY, f64::min);
    let empirical_exponent = min_max_influence.ln() / (s * epsilon.ln());
    Ok(ThresholdReport {
        epsilon,
        p_lo,
        p_hi,
        length,
        s,
        grid,
        witness_set,
        min_max_influence,
        empirical_exponent,
    })
}

/// A grid point of [a, b] minimizing total influence, with the averaging
/// bound 6 / (b - a) it is compared against.
#[derive(Clone, Debug, Serialize)]
pub struct LowInfluencePoint {
    pub p: f64,
    pub total_influence: f64,
    pub budget: f64,
    pub within_budget: bool,
}

/// Scans a uniform grid of [a, b] for the bias with the smallest total
/// influence. When acceptance moves by at most one over [a, b], averaging
/// guarantees some bias with total influence at most 6 / (b - a); the
/// report states whether the found point clears that budget.
pub fn low_influence_point(
    f: &BooleanFunction,
    a: f64,
    b: f64,
    points: usize,
) -> Result<LowInfluencePoint> {
    if !(a > 0.0 && b < 1.0 && a < b) {
        return Err(Error::InvalidParameter(format!(
            "need 0 < a < b < 1, got a={a}, b={b}"
        )));
    }
    if points < 2 {
        return Err(Error::InvalidParameter(format!(
            "grid needs at least the two endpoints, got {points}"
        )));
    }
    let mut best_p = a;
    let mut best = f64::INFINITY;
    for idx in 0..points {
        let p = a + (b - a) * idx as f64 / (points - 1) as f64;
        let total = total_influence(f, p)?;
        if total < best {
            best = total;
            best_p = p;
        }
    }
    let budget = 6.0 / (b - a);
    Ok(LowInfluencePoint {
        p: best_p,
        total_influence: best,
        budget,
        within_budget: best <= budget,
    })
}

/// Window length against the largest Shapley value, with the empirical
/// constant that would make length = C ln(1/epsilon) / ln(1/t) exact.
#[derive(Clone, Debug, Serialize)]
pub struct ShapleyIntervalReport {
    pub epsilon: f64,
    pub length: f64,
    /// t: the largest Shapley value.
    pub max_shapley: f64,
    pub argmax_shapley: usize,
    /// length * ln(1/t) / ln(1/epsilon); absent when t = 1 makes the
    /// comparison vacuous.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio: Option<f64>,
    pub vacuous: bool,
    pub witness_set: Vec<usize>,
    /// Sum of Shapley values over the witness set...
    pub witness_psi_sum: f64,
    /// ...which must dominate length * min_max_influence.
    pub witness_bound: f64,
    pub witness_inequality_holds: bool,
}

pub fn shapley_interval_report(f: &BooleanFunction, epsilon: f64) -> Result<ShapleyIntervalReport> {
    let report = threshold_interval(f, epsilon)?;
    let psi = shapley_exact(f)?;
    let (argmax, max_shapley) = argmax_1based(&psi.values);
    let vacuous = max_shapley >= 1.0;
    let ratio = if vacuous {
        None
    } else {
        Some(report.length * (1.0 / max_shapley).ln() / (1.0 / epsilon).ln())
    };
    let witness_psi_sum: f64 = report.witness_set.iter().map(|&k| psi.values[k - 1]).sum();
    let witness_bound = report.length * report.min_max_influence;
    Ok(ShapleyIntervalReport {
        epsilon,
        length: report.length,
        max_shapley,
        argmax_shapley: argmax,
        ratio,
        vacuous,
        witness_set: report.witness_set,
        witness_psi_sum,
        witness_bound,
        witness_inequality_holds: witness_psi_sum >= witness_bound - 1e-12,
    })
}

/// Largest Banzhaf value t against the largest Shapley value, with both
/// candidate upper bounds (taking C = 1) and the C that would make the
/// stronger one tight.
#[derive(Clone, Debug, Serialize)]
pub struct BanzhafShapleyReport {
    pub epsilon: f64,
    pub mu_half: f64,
    /// t: the largest Banzhaf value.
    pub max_banzhaf: f64,
    pub argmax_banzhaf: usize,
    pub max_shapley: f64,
    pub argmax_shapley: usize,
    /// ln ln(1/t) / ln(1/t); absent when t = 1.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_loglog: Option<f64>,
    /// ln(1/epsilon) / ln(1/t); absent when t = 1.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_eps: Option<f64>,
    /// max_shapley / max(bound_loglog, bound_eps); absent when t = 1.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub empirical_c: Option<f64>,
    pub vacuous: bool,
}

/// Requires the function to be roughly balanced at bias 1/2:
/// epsilon <= mu_(1/2) <= 1 - epsilon.
pub fn banzhaf_shapley_report(f: &BooleanFunction, epsilon: f64) -> Result<BanzhafShapleyReport> {
    if !(epsilon > 0.0 && epsilon < 0.5) {
        return Err(Error::InvalidParameter(format!(
            "balance level must lie in (0, 1/2), got {epsilon}"
        )));
    }
    let mu_half = mu(f, 0.5)?;
    if mu_half < epsilon || mu_half > 1.0 - epsilon {
        return Err(Error::HypothesisViolated(format!(
            "needs {epsilon} <= mu_half <= {}, but mu_half = {mu_half}",
            1.0 - epsilon
        )));
    }
    let b = banzhaf(f)?;
    let psi = shapley_exact(f)?;
    let (argmax_banzhaf, max_banzhaf) = argmax_1based(&b.values);
    let (argmax_shapley, max_shapley) = argmax_1based(&psi.values);
    let vacuous = max_banzhaf >= 1.0;
    let (bound_loglog, bound_eps, empirical_c) = if vacuous {
        (None, None, None)
    } else {
        let log_t = (1.0 / max_banzhaf).ln();
        let loglog = log_t.ln() / log_t;
        let eps_bound = (1.0 / epsilon).ln() / log_t;
        let best = loglog.max(eps_bound);
        let c = if best > 0.0 {
            Some(max_shapley / best)
        } else {
            None
        };
        (Some(loglog), Some(eps_bound), c)
    };
    Ok(BanzhafShapleyReport {
        epsilon,
        mu_half,
        max_banzhaf,
        argmax_banzhaf,
        max_shapley,
        argmax_shapley,
        bound_loglog,
        bound_eps,
        empirical_c,
        vacuous,
    })
}

fn argmax_1based(values: &[f64]) -> (usize, f64) {
    let mut best = (1, f64::NEG_INFINITY);
    for (idx, &v) in values.iter().enumerate() {
        if v > best.1 {
            best = (idx + 1, v);
        }
    }
    best
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
    fn crossing_biases_match_closed_forms() {
        let and2 = build(FunctionSpec::And { n: 2 });
        assert!((p_alpha(&and2, 0.5).unwrap() - 0.5f64.sqrt()).abs() < 1e-11);

        let or2 = build(FunctionSpec::Or { n: 2 });
        assert!((p_alpha(&or2, 0.75).unwrap() - 0.5).abs() < 1e-11);

        for n in [3, 5, 9] {
            let maj = build(FunctionSpec::Majority { n });
            assert!((p_alpha(&maj, 0.5).unwrap() - 0.5).abs() < 1e-11);
        }

        let d = build(FunctionSpec::Dictator { n: 4, k: 2 });
        for alpha in [0.1, 0.37, 0.9] {
            assert!((p_alpha(&d, alpha).unwrap() - alpha).abs() < 1e-11);
        }
    }

    #[test]
    fn crossing_refusals() {
        let parity = build(FunctionSpec::Parity { n: 3 });
        assert!(matches!(p_alpha(&parity, 0.5), Err(Error::NotMonotone)));

        let zero = BooleanFunction::from_fn(3, |_| false).unwrap();
        assert!(matches!(p_alpha(&zero, 0.5), Err(Error::ConstantFunction)));

        let and2 = build(FunctionSpec::And { n: 2 });
        assert!(p_alpha(&and2, 0.0).is_err());
        assert!(p_alpha(&and2, 1.0).is_err());
    }

    #[test]
    fn crossing_is_consistent_with_measure() {
        let tribes = build(FunctionSpec::Tribes { n: 9, m: 3, w: 3 });
        for alpha in [0.1, 0.25, 0.5, 0.75, 0.93] {
            let p = p_alpha(&tribes, alpha).unwrap();
            assert!((mu(&tribes, p).unwrap() - alpha).abs() <= 1e-10);
        }
    }

    #[test]
    fn crossing_is_monotone_in_level_and_windows_nest() {
        let f = build(FunctionSpec::Tribes { n: 6, m: 2, w: 3 });
        let levels = [0.05, 0.2, 0.5, 0.8, 0.95];
        let ps: Vec<f64> = levels.iter().map(|&a| p_alpha(&f, a).unwrap()).collect();
        assert!(ps.windows(2).all(|w| w[0] <= w[1]));

        let wide = threshold_interval(&f, 0.1).unwrap();
        let narrow = threshold_interval(&f, 0.3).unwrap();
        assert!(wide.p_lo <= narrow.p_lo && narrow.p_hi <= wide.p_hi);
    }

    #[test]
    fn dictator_window_is_symmetric() {
        let f = build(FunctionSpec::Dictator { n: 3, k: 1 });
        let report = threshold_interval(&f, 0.1).unwrap();
        assert!((report.p_lo - 0.1).abs() < 1e-9);
        assert!((report.p_hi - 0.9).abs() < 1e-9);
        assert!((report.length - 0.8).abs() < 1e-9);
        assert!((report.s - 1.25).abs() < 1e-8);
        assert_eq!(report.witness_set, vec![1]);
        assert!((report.min_max_influence - 1.0).abs() < 1e-12);
        assert_eq!(report.grid.len(), DEFAULT_GRID);
        assert!(report.empirical_exponent.abs() < 1e-12);
    }

    #[test]
    fn tribes_window_matches_closed_form_root() {
        // mu_p = 1 - (1 - p^3)^3 crosses 1/4 at p = (1 - 0.75^(1/3))^(1/3).
        let f = build(FunctionSpec::Tribes { n: 9, m: 3, w: 3 });
        let report = threshold_interval(&f, 0.25).unwrap();
        let root_lo = (1.0 - 0.75f64.powf(1.0 / 3.0)).powf(1.0 / 3.0);
        let root_hi = (1.0 - 0.25f64.powf(1.0 / 3.0)).powf(1.0 / 3.0);
        assert!((report.p_lo - root_lo).abs() < 1e-11);
        assert!((report.p_hi - root_hi).abs() < 1e-11);
        assert!((report.p_lo - 0.450517435386).abs() < 1e-9);
        assert!((report.p_hi - 0.717930965249).abs() < 1e-9);
        assert!((report.length - 0.267413529863).abs() < 1e-9);
    }

    #[test]
    fn majority_window_shrinks_like_inverse_sqrt() {
        let len5 = threshold_interval(&build(FunctionSpec::Majority { n: 5 }), 1.0 / 3.0)
            .unwrap()
            .length;
        let len9 = threshold_interval(&build(FunctionSpec::Majority { n: 9 }), 1.0 / 3.0)
            .unwrap()
            .length;
        assert!((len5 * 5f64.sqrt() - 0.406382921595).abs() < 1e-9);
        assert!((len9 * 3.0 - 0.416899015264).abs() < 1e-9);
        let p_lo5 = p_alpha(&build(FunctionSpec::Majority { n: 5 }), 1.0 / 3.0).unwrap();
        assert!((p_lo5 - 0.409130016242).abs() < 1e-9);
    }

    #[test]
    fn majority_scan_minimum_sits_at_window_edge() {
        let f = build(FunctionSpec::Majority { n: 9 });
        let report = influence_profile_scan(&f, 1.0 / 3.0, 101).unwrap();
        let edge = influence(&f, 1, report.p_lo).unwrap();
        assert!(report.min_max_influence >= edge - 1e-12);
        assert!((report.min_max_influence - edge).abs() < 1e-12);
        assert!(report.witness_set.iter().all(|&k| (1..=9).contains(&k)));
        assert!(report.empirical_exponent > 0.0);
    }

    #[test]
    fn small_tribes_scan_populates_profile() {
        let f = build(FunctionSpec::Tribes { n: 4, m: 2, w: 2 });
        let report = influence_profile_scan(&f, 0.3, 51).unwrap();
        assert_eq!(report.grid.len(), 51);
        assert!(!report.witness_set.is_empty());
        assert!(report.witness_set.iter().all(|&k| (1..=4).contains(&k)));
        for row in &report.grid {
            assert!(row.max_influence > 0.0 && row.max_influence <= 1.0);
            assert!(row.total_influence >= row.max_influence);
        }
    }

    #[test]
    fn low_influence_search_examples() {
        let d = build(FunctionSpec::Dictator { n: 2, k: 1 });
        let found = low_influence_point(&d, 0.2, 0.8, 101).unwrap();
        assert!((found.total_influence - 1.0).abs() < 1e-12);
        assert!((found.budget - 10.0).abs() < 1e-12);
        assert!(found.within_budget);

        // Total influence of AND_2 is 2p: increasing, so the left endpoint wins.
        let and2 = build(FunctionSpec::And { n: 2 });
        let found = low_influence_point(&and2, 0.5, 0.9, 101).unwrap();
        assert_eq!(found.p, 0.5);
        assert!((found.total_influence - 1.0).abs() < 1e-12);

        let maj9 = build(FunctionSpec::Majority { n: 9 });
        let window = threshold_interval(&maj9, 1.0 / 3.0).unwrap();
        let found = low_influence_point(&maj9, window.p_lo, window.p_hi, 101).unwrap();
        assert!(found.total_influence <= 6.0 * window.s);

        assert!(low_influence_point(&d, 0.8, 0.2, 101).is_err());
    }

    #[test]
    fn shapley_window_report_examples() {
        let d = build(FunctionSpec::Dictator { n: 3, k: 1 });
        let report = shapley_interval_report(&d, 0.1).unwrap();
        assert!(report.vacuous);
        assert!(report.ratio.is_none());
        assert_eq!(report.max_shapley, 1.0);

        let tribes = build(FunctionSpec::Tribes { n: 9, m: 3, w: 3 });
        let report = shapley_interval_report(&tribes, 1.0 / 3.0).unwrap();
        assert!((report.max_shapley - 1.0 / 9.0).abs() < 1e-12);
        assert!(!report.vacuous);
        let ratio = report.ratio.unwrap();
        assert!(ratio.is_finite() && ratio > 0.0);
        assert!(report.witness_inequality_holds);

        let maj9 = build(FunctionSpec::Majority { n: 9 });
        let report = shapley_interval_report(&maj9, 1.0 / 3.0).unwrap();
        assert!(report.witness_inequality_holds);
        assert!((report.witness_psi_sum - 1.0 / 9.0).abs() < 1e-10);
        assert!(report.witness_bound < report.witness_psi_sum);
    }

    #[test]
    fn shapley_values_bounded_by_window() {
        // psi_i <= 2 epsilon + window length, for every coordinate.
        let monotone = [
            FunctionSpec::And { n: 2 },
            FunctionSpec::Majority { n: 5 },
            FunctionSpec::Tribes { n: 4, m: 2, w: 2 },
            FunctionSpec::Judge { n: 9, g: 5 },
            FunctionSpec::WeightedMajority {
                n: 5,
                weights: vec![3.0, 2.0, 1.0, 1.0, 1.0],
                quota: 5.0,
            },
        ];
        for spec in monotone {
            let f = spec.build().unwrap();
            let psi = shapley_exact(&f).unwrap();
            for epsilon in [0.05, 0.1, 0.2] {
                let report = threshold_interval(&f, epsilon).unwrap();
                let cap = 2.0 * epsilon + report.length + tolerances::INEQUALITY_SLACK;
                for (k, &v) in psi.values.iter().enumerate() {
                    assert!(v <= cap, "{spec:?} coordinate {}: {v} > {cap}", k + 1);
                }
            }
        }
    }

    #[test]
    fn banzhaf_shapley_reports() {
        let maj9 = build(FunctionSpec::Majority { n: 9 });
        let report = banzhaf_shapley_report(&maj9, 0.25).unwrap();
        assert_eq!(report.max_banzhaf, influence(&maj9, 1, 0.5).unwrap());
        assert!((report.max_shapley - 1.0 / 9.0).abs() < 1e-12);
        assert!(!report.vacuous);
        assert!(report.empirical_c.unwrap() > 0.0);

        let jt = build(FunctionSpec::JudgeOrTribes {
            n: 16,
            delta: 0.1,
            m: 4,
            w: 4,
        });
        let report = banzhaf_shapley_report(&jt, 0.25).unwrap();
        assert_eq!(report.max_banzhaf, 0.226531982421875);
        assert_eq!(report.argmax_banzhaf, 1);
        assert!((report.max_shapley - 0.12823426573426575).abs() < 1e-12);
        assert_eq!(report.argmax_shapley, 1);
        assert!((report.mu_half - 18959.0 / 65536.0).abs() < 1e-15);

        let and4 = build(FunctionSpec::And { n: 4 });
        assert!(matches!(
            banzhaf_shapley_report(&and4, 0.25),
            Err(Error::HypothesisViolated(_))
        ));

        let d = build(FunctionSpec::Dictator { n: 1, k: 1 });
        let report = banzhaf_shapley_report(&d, 0.25).unwrap();
        assert!(report.vacuous);
        assert!(report.bound_eps.is_none());
    }
}
