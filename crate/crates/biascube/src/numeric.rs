//! Small numeric building blocks: compensated summation, exact binomial
//! coefficients, and Gauss-Legendre rules on [0, 1].

/// Neumaier compensated accumulator. Polynomial evaluations over layer and
/// pivot counts run through this so cancellation between large terms does
/// not eat the accuracy budget.
#[derive(Clone, Copy, Debug, Default)]
pub struct KahanSum {
    sum: f64,
    c: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.c += (self.sum - t) + x;
        } else {
            self.c += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.c
    }
}

/// Sums an iterator with compensation.
pub fn compensated_sum(it: impl IntoIterator<Item = f64>) -> f64 {
    let mut acc = KahanSum::new();
    for x in it {
        acc.add(x);
    }
    acc.value()
}

/// Exact binomial coefficient; requires the result to fit in u128.
/// Large enough for every table size this crate supports (n <= 64).
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Gauss-Legendre nodes and weights on [0, 1]. Nodes of the m-point rule are
/// the roots of the m-th Legendre polynomial found by Newton iteration from
/// the Chebyshev initial guesses; the rule integrates polynomials up to
/// degree 2m - 1 exactly.
pub fn gauss_legendre_unit(m: usize) -> Vec<(f64, f64)> {
    assert!(m >= 1, "quadrature needs at least one node");
    let mut rule = Vec::with_capacity(m);
    for i in 0..m {
        // Root of P_m on (-1, 1), descending.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (m as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(m, x);
            let step = p / d;
            x -= step;
            if step.abs() < 1e-15 {
                break;
            }
        }
        let d = legendre_with_derivative(m, x).1;
        let w = 2.0 / ((1.0 - x * x) * d * d);
        rule.push(((x + 1.0) / 2.0, w / 2.0));
    }
    rule.sort_by(|a, b| a.0.total_cmp(&b.0));
    rule
}

fn legendre_with_derivative(m: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if m == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=m {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = m as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}
