//! The asymptotic statements come with unknown constants; this example
//! measures them on concrete rules. Nothing here passes or fails — the
//! point is to see how far the small-n world sits from the limit shape.

use biascube::bounds::kkl_max_influence_check;
use biascube::function::FunctionSpec;
use biascube::threshold::{banzhaf_shapley_report, shapley_interval_report};
use biascube::zoo;

fn main() {
    // How tight is max_i I_i >= c * t(1-t) ln(n)/n at p = 1/2?
    println!("max-influence lower bound, p = 1/2 (c = max_influence / (t(1-t)ln(n)/n)):");
    println!(
        "  {:<20} {:>12} {:>14} {:>10}",
        "rule", "benchmark", "max influence", "c"
    );
    for e in zoo::monotone() {
        let f = e.build();
        let r = kkl_max_influence_check(&f).unwrap();
        let c = r
            .parameter("empirical_constant")
            .map(|c| format!("{c:.3}"))
            .unwrap_or_else(|| "-".into());
        println!("  {:<20} {:>12.6} {:>14.6} {:>10}", e.name, r.lhs, r.rhs, c);
    }

    // Window-length constants: length = C(eps) ln(1/eps) / ln(1/t) would
    // make `ratio` the constant C(eps).
    println!("\nwindow length vs ln(1/eps)/ln(1/t) (t = max shapley):");
    for (name, spec) in [
        ("majority_9", FunctionSpec::Majority { n: 9 }),
        ("tribes_3x3", FunctionSpec::Tribes { n: 9, m: 3, w: 3 }),
        (
            "judge_or_tribes_16",
            FunctionSpec::JudgeOrTribes {
                n: 16,
                delta: 0.1,
                m: 4,
                w: 4,
            },
        ),
    ] {
        let f = spec.build().unwrap();
        for eps in [0.1, 0.2] {
            let r = shapley_interval_report(&f, eps).unwrap();
            let ratio = r
                .ratio
                .map(|v| format!("{v:.4}"))
                .unwrap_or_else(|| "vacuous".into());
            println!(
                "  {name:<18} eps = {eps}: length = {:.6}, max psi = {:.6}, C = {ratio}",
                r.length, r.max_shapley
            );
        }
    }

    // Banzhaf-vs-Shapley at the half point: the report compares max psi to
    // both candidate bounds and backs out the constant the data supports.
    println!("\nbalance-point comparison (eps = 0.2):");
    for (name, spec) in [
        ("majority_9", FunctionSpec::Majority { n: 9 }),
        (
            "judge_or_tribes_16",
            FunctionSpec::JudgeOrTribes {
                n: 16,
                delta: 0.1,
                m: 4,
                w: 4,
            },
        ),
    ] {
        let f = spec.build().unwrap();
        let r = banzhaf_shapley_report(&f, 0.2).unwrap();
        println!(
            "  {name}: mu_1/2 = {:.6}, max banzhaf = {:.6} (coord {}), max psi = {:.6} (coord {})",
            r.mu_half, r.max_banzhaf, r.argmax_banzhaf, r.max_shapley, r.argmax_shapley
        );
        if let (Some(a), Some(b), Some(c)) = (r.bound_loglog, r.bound_eps, r.empirical_c) {
            println!(
                "    candidate bounds lnln(1/t)/ln(1/t) = {a:.4}, ln(1/eps)/ln(1/t) = {b:.4}; empirical multiple = {c:.4}"
            );
        }
    }
}
