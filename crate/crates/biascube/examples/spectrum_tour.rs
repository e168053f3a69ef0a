//! A walk through the biased Fourier basis: transform a rule at p != 1/2,
//! read off mean and level weights, check Parseval, and tie the spectrum
//! back to combinatorial influence through Inf_i = p(1-p) I_i.

use biascube::function::FunctionSpec;
use biascube::measures::influence;
use biascube::spectral::{fourier_influence, inner_product, transform_boolean, RealFunction};

fn main() {
    let f = FunctionSpec::Tribes { n: 4, m: 2, w: 2 }.build().unwrap();
    let p = 0.3;
    let spectrum = transform_boolean(&f, p).unwrap();

    println!("tribes_2x2 at p = {p}:");
    println!("  subset  level  coefficient");
    for (s, &c) in spectrum.coeffs().iter().enumerate() {
        if c.abs() > 1e-12 {
            println!("  {s:#06b}  {:>5}  {c:>12.8}", (s as u32).count_ones());
        }
    }
    println!(
        "  mean coefficient = mu_p = {:.8}",
        spectrum.coeff(0).unwrap()
    );
    println!("  degree           = {}", spectrum.degree());

    let table = RealFunction::from_boolean(&f).unwrap();
    let energy = inner_product(&table, &table, p).unwrap();
    println!(
        "  Parseval: sum of squared coefficients = {:.12}, pointwise energy = {energy:.12}",
        spectrum.squared_norm()
    );

    println!("\n  spectral vs combinatorial influence (times p(1-p)):");
    for i in 1..=4 {
        let lhs = fourier_influence(&spectrum, i).unwrap();
        let rhs = p * (1.0 - p) * influence(&f, i, p).unwrap();
        println!("  coordinate {i}: {lhs:.10} = {rhs:.10}");
    }

    // Weights by level: a monotone rule at its threshold keeps most energy low.
    println!("\n  energy by level:");
    for level in 0..=4u32 {
        let w: f64 = spectrum
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(s, _)| (*s as u32).count_ones() == level)
            .map(|(_, c)| c * c)
            .sum();
        println!("  level {level}: {w:.8}");
    }
}
