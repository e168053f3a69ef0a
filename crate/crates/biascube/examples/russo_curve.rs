//! The acceptance curve p -> mu_p(f) and its two derivatives: the analytic
//! derivative of the layer polynomial and the total influence. For a
//! monotone rule they coincide pointwise; parity shows how non-monotone
//! rules break the identity while keeping both quantities well defined.

use biascube::function::FunctionSpec;
use biascube::measures::{mu, mu_derivative, total_influence};

fn main() {
    let f = FunctionSpec::Majority { n: 9 }.build().unwrap();
    println!("majority_9:");
    println!("     p        mu_p     d(mu)/dp   total influence");
    for i in 1..10 {
        let p = i as f64 / 10.0;
        println!(
            "  {:4.2}  {:>9.6}  {:>9.6}  {:>9.6}",
            p,
            mu(&f, p).unwrap(),
            mu_derivative(&f, p).unwrap(),
            total_influence(&f, p).unwrap()
        );
    }

    let worst = (1..=99)
        .map(|i| {
            let p = i as f64 / 100.0;
            (mu_derivative(&f, p).unwrap() - total_influence(&f, p).unwrap()).abs()
        })
        .fold(0.0f64, f64::max);
    println!("  max |derivative - influence| on the 99-point grid: {worst:.3e}");

    let parity = FunctionSpec::Parity { n: 3 }.build().unwrap();
    let p = 0.3;
    println!(
        "\nparity_3 at p = {p}: d(mu)/dp = {:.6} but total influence = {:.6}",
        mu_derivative(&parity, p).unwrap(),
        total_influence(&parity, p).unwrap()
    );
    println!("(falling pivots subtract from the derivative and add to influence)");
}
