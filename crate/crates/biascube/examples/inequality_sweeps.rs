//! Randomized stress sweeps over the proved inequalities. A violation is an
//! implementation bug by definition, so the interesting output is the slack
//! distribution and how often the correlation hypothesis actually fires.

use biascube::bounds::{
    correlation_sweep, derivative_bound_sweep, hypercontractivity_sweep, reports_to_csv,
};

fn main() {
    let seed = 2026;

    let norm = hypercontractivity_sweep(seed, 400);
    let violations = norm.iter().filter(|r| !r.holds).count();
    let min_slack = norm.iter().map(|r| r.slack).fold(f64::INFINITY, f64::min);
    println!(
        "norm bound: {} instances, {violations} violations, tightest slack {min_slack:.3e}",
        norm.len()
    );

    let deriv = derivative_bound_sweep(seed + 1, 400);
    let violations = deriv.iter().filter(|r| !r.holds).count();
    let min_slack = deriv.iter().map(|r| r.slack).fold(f64::INFINITY, f64::min);
    println!(
        "derivative bound: {} instances, {violations} violations, tightest slack {min_slack:.3e}",
        deriv.len()
    );

    let corr = correlation_sweep(seed + 2, 400);
    let fired: Vec<_> = corr
        .iter()
        .filter(|r| r.parameter("hypothesis_holds") == Some(1.0))
        .collect();
    let broken = fired.iter().filter(|r| !r.holds).count();
    println!(
        "correlation lemma: {} instances, hypothesis fired on {}, conclusion broken on {broken}",
        corr.len(),
        fired.len()
    );
    let gaps: Vec<f64> = fired.iter().filter_map(|r| r.parameter("gap")).collect();
    if !gaps.is_empty() {
        let max_gap = gaps.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        println!("  largest correlation excess over the product bound: {max_gap:.3e}");
    }

    // Reports serialize to CSV rows for offline analysis; show the shape.
    println!("\nfirst rows of the norm-bound CSV:");
    for line in reports_to_csv(&norm).lines().take(4) {
        println!("  {line}");
    }
}
