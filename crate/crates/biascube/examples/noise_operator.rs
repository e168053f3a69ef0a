//! The one-sided noise operator T^{p->q}: apply it by direct resampling and
//! by spectral decay, watch the two agree, and verify the monotone fixed
//! point <Tf, f>_q = mu_p(f) that makes the operator the right bridge
//! between two biases.

use biascube::function::FunctionSpec;
use biascube::measures::mu;
use biascube::noise::{apply_direct, apply_spectral, correlation_boolean, NoisePair};
use biascube::spectral::RealFunction;

fn main() {
    let pair = NoisePair::new(0.25, 0.5).unwrap();
    println!(
        "operator T^{{{} -> {}}}: level decay rho = {:.10} (rho^2 = 1/3)",
        pair.lower(),
        pair.upper(),
        pair.rho()
    );

    let f = FunctionSpec::Majority { n: 5 }.build().unwrap();
    let table = RealFunction::from_boolean(&f).unwrap();
    let direct = apply_direct(&table, pair).unwrap();
    let spectral = apply_spectral(&table, pair).unwrap();
    let worst = direct
        .values()
        .iter()
        .zip(spectral.values())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);
    println!("majority_5: route disagreement = {worst:.3e}");
    // The operator resamples downward only: all-zeros is a fixed point,
    // while all-ones averages f over kept-bit subsets (here mu at p/q = 1/2).
    println!(
        "  Tf(00000) = {:.8}  (no subset below it)",
        direct.evaluate(0).unwrap()
    );
    println!(
        "  Tf(11111) = {:.8}  (averaged down to mu_{{p/q}})",
        direct.evaluate(31).unwrap()
    );

    println!("\nmonotone identity <T^{{p->q}} f, f>_q = mu_p(f):");
    for name_spec in [
        ("majority_5", FunctionSpec::Majority { n: 5 }),
        ("tribes_3x3", FunctionSpec::Tribes { n: 9, m: 3, w: 3 }),
        ("and_4", FunctionSpec::And { n: 4 }),
    ] {
        let (name, spec) = name_spec;
        let g = spec.build().unwrap();
        let corr = correlation_boolean(&g, &g, pair).unwrap();
        let base = mu(&g, pair.lower()).unwrap();
        println!(
            "  {name:>11}: {corr:.12} vs {base:.12}  (diff {:.1e})",
            (corr - base).abs()
        );
    }

    // Parity is the counterexample: the identity needs monotonicity.
    let parity = FunctionSpec::Parity { n: 3 }.build().unwrap();
    let corr = correlation_boolean(&parity, &parity, pair).unwrap();
    let base = mu(&parity, pair.lower()).unwrap();
    println!(
        "  {:>11}: {corr:.12} vs {base:.12}  (breaks by {:.3})",
        "parity_3",
        (corr - base).abs()
    );
}
