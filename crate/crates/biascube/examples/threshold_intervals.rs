//! Threshold windows [p_eps, p_{1-eps}] and what lives inside them: the
//! influence profile across the window, the 1/sqrt(n) scaling for
//! majorities, and the window-length bound on every Shapley value.

use biascube::function::FunctionSpec;
use biascube::power::shapley_exact;
use biascube::threshold::{influence_profile_scan, p_alpha};

fn main() {
    // Majorities sharpen like 1/sqrt(n): the normalized length is flat.
    println!("majority window at eps = 1/3, scaled by sqrt(n):");
    for n in [5usize, 9, 13, 17, 21] {
        let f = FunctionSpec::Majority { n }.build().unwrap();
        let lo = p_alpha(&f, 1.0 / 3.0).unwrap();
        let hi = p_alpha(&f, 2.0 / 3.0).unwrap();
        println!(
            "  n = {n:>2}: [{lo:.6}, {hi:.6}]  length = {:.6}  length*sqrt(n) = {:.6}",
            hi - lo,
            (hi - lo) * (n as f64).sqrt()
        );
    }

    // A full scan: window, per-bias argmax influence, witness coordinates.
    let f = FunctionSpec::Tribes { n: 9, m: 3, w: 3 }.build().unwrap();
    let report = influence_profile_scan(&f, 0.25, 7).unwrap();
    println!("\ntribes_3x3, eps = 0.25:");
    println!(
        "  window [{:.6}, {:.6}]  length {:.6}  s = 1/length = {:.4}",
        report.p_lo, report.p_hi, report.length, report.s
    );
    println!("      p      max influence  argmax");
    for row in &report.grid {
        println!(
            "  {:.6}   {:>12.8}  {:>5}",
            row.p, row.max_influence, row.argmax_coordinate
        );
    }
    println!(
        "  min-over-window max influence = {:.8}, empirical exponent = {:.4}",
        report.min_max_influence, report.empirical_exponent
    );
    println!("  witness coordinates: {:?}", report.witness_set);

    // Every Shapley value is trapped by the window: psi_i <= 2 eps + length.
    println!("\nwindow bound psi_i <= 2*eps + length, eps = 0.1:");
    for (name, spec) in [
        ("majority_9", FunctionSpec::Majority { n: 9 }),
        ("tribes_3x3", FunctionSpec::Tribes { n: 9, m: 3, w: 3 }),
        ("judge_15_7", FunctionSpec::Judge { n: 15, g: 7 }),
    ] {
        let f = spec.build().unwrap();
        let lo = p_alpha(&f, 0.1).unwrap();
        let hi = p_alpha(&f, 0.9).unwrap();
        let psi = shapley_exact(&f).unwrap();
        let max_psi = psi.values.iter().cloned().fold(0.0f64, f64::max);
        println!(
            "  {name:>11}: max psi = {max_psi:.6} <= {:.6}",
            0.2 + (hi - lo)
        );
    }
}
