//! Fourier analysis in the p-biased orthonormal basis: the transform and
//! its inverse, degree truncations, discrete derivatives, coordinate
//! influences read off the spectrum, and L_q norms under the biased measure.
//!
//! Basis convention: the level-1 character of coordinate i sends x_i to
//! (x_i - p) / sqrt(p(1-p)), and higher characters are products. The
//! butterfly applies, per coordinate, the 2x2 change of basis between the
//! point values (f at x_i=0, f at x_i=1) and (mean part, character part):
//!
//!   forward:  (a, b) -> ((1-p) a + p b,  sigma (b - a))
//!   inverse:  (m, c) -> (m - p c/sigma,  m + (1-p) c/sigma)
//!
//! with sigma = sqrt(p(1-p)). Spelling this out matters: the biased case is
//! easy to transpose. Coefficients are indexed by subset bitmask under the
//! same convention as truth tables (coordinate i = bit i-1).

use crate::error::{Error, Result};
use crate::function::BooleanFunction;
use crate::measures::check_bias_open;
use crate::numeric::KahanSum;
use crate::tolerances::DEGREE_DETECT;
use serde::Serialize;

/// Hard cap on arity for point-value tables of reals (8 MiB of f64).
pub const REAL_N_CAP: usize = 20;

/// A real-valued function on the n-cube as a table of point values.
#[derive(Clone, Debug, Serialize)]
pub struct RealFunction {
    n: usize,
    values: Vec<f64>,
}

impl RealFunction {
    pub fn from_values(n: usize, values: Vec<f64>) -> Result<RealFunction> {
        check_real_n(n)?;
        if values.len() != 1 << n {
            return Err(Error::InvalidParameter(format!(
                "expected 2^{n} = {} values, got {}",
                1u64 << n,
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter(format!("non-finite value {v}")));
        }
        Ok(RealFunction { n, values })
    }

    /// The 0/1 point values of a Boolean function.
    pub fn from_boolean(f: &BooleanFunction) -> Result<RealFunction> {
        check_real_n(f.n())?;
        let values = (0..1u64 << f.n()).map(|x| f.value01(x)).collect();
        Ok(RealFunction { n: f.n(), values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn evaluate(&self, x: u64) -> Result<f64> {
        if x >= 1 << self.n {
            return Err(Error::PointOutOfRange { x, n: self.n });
        }
        Ok(self.values[x as usize])
    }
}

fn check_real_n(n: usize) -> Result<()> {
    if n == 0 || n > REAL_N_CAP {
        return Err(Error::TooLarge {
            n,
            cap: REAL_N_CAP,
            what: "real point-value table",
        });
    }
    Ok(())
}

/// Fourier coefficients of a function at a fixed bias: entry at bitmask S
/// is the inner product of f with the S-character under the p-biased
/// product measure.
#[derive(Clone, Debug, Serialize)]
pub struct PBiasedSpectrum {
    n: usize,
    p: f64,
    coeffs: Vec<f64>,
}

impl PBiasedSpectrum {
    /// Assembles a spectrum from explicit coefficients, one per bitmask.
    pub fn from_coeffs(n: usize, p: f64, coeffs: Vec<f64>) -> Result<PBiasedSpectrum> {
        check_real_n(n)?;
        check_bias_open(p)?;
        if coeffs.len() != 1 << n {
            return Err(Error::InvalidParameter(format!(
                "expected 2^{n} = {} coefficients, got {}",
                1u64 << n,
                coeffs.len()
            )));
        }
        if let Some(c) = coeffs.iter().find(|c| !c.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "non-finite coefficient {c}"
            )));
        }
        Ok(PBiasedSpectrum { n, p, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bias(&self) -> f64 {
        self.p
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, s: u64) -> Result<f64> {
        if s >= 1 << self.n {
            return Err(Error::PointOutOfRange { x: s, n: self.n });
        }
        Ok(self.coeffs[s as usize])
    }

    /// Sum of squared coefficients: the squared L_2(mu_p) norm of the
    /// represented function, by orthonormality.
    pub fn squared_norm(&self) -> f64 {
        let mut acc = KahanSum::new();
        for &c in &self.coeffs {
            acc.add(c * c);
        }
        acc.value()
    }

    /// Largest |S| carrying a coefficient above the detection threshold;
    /// 0 for (numerically) constant functions. Independent of the bias.
    pub fn degree(&self) -> usize {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.abs() > DEGREE_DETECT)
            .map(|(s, _)| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }
}

/// Forward transform in O(n 2^n) by the per-coordinate butterfly.
pub fn transform(f: &RealFunction, p: f64) -> Result<PBiasedSpectrum> {
    check_bias_open(p)?;
    let n = f.n;
    let sigma = (p * (1.0 - p)).sqrt();
    let q = 1.0 - p;
    let mut c = f.values.clone();
    for i in 0..n {
        let bit = 1usize << i;
        for base in (0..c.len()).step_by(bit << 1) {
            for lo in base..base + bit {
                let (a, b) = (c[lo], c[lo + bit]);
                c[lo] = q * a + p * b;
                c[lo + bit] = sigma * (b - a);
            }
        }
    }
    Ok(PBiasedSpectrum { n, p, coeffs: c })
}

/// Forward transform of a Boolean function's 0/1 values.
pub fn transform_boolean(f: &BooleanFunction, p: f64) -> Result<PBiasedSpectrum> {
    transform(&RealFunction::from_boolean(f)?, p)
}

/// Pointwise reconstruction: runs the butterfly backwards coordinate by
/// coordinate, so it is exact up to rounding whatever the coefficients.
pub fn inverse_transform(spec: &PBiasedSpectrum) -> RealFunction {
    let (p, sigma) = (spec.p, (spec.p * (1.0 - spec.p)).sqrt());
    let q = 1.0 - p;
    let mut v = spec.coeffs.clone();
    for i in 0..spec.n {
        let bit = 1usize << i;
        for base in (0..v.len()).step_by(bit << 1) {
            for lo in base..base + bit {
                let (m, c) = (v[lo], v[lo + bit]);
                let t = c / sigma;
                v[lo] = m - p * t;
                v[lo + bit] = m + q * t;
            }
        }
    }
    RealFunction {
        n: spec.n,
        values: v,
    }
}

/// Zeroes every coefficient at a set larger than d.
pub fn truncate(spec: &PBiasedSpectrum, d: usize) -> PBiasedSpectrum {
    filter_levels(spec, |level| level <= d)
}

/// Keeps only the coefficients at sets of size exactly d.
pub fn level_part(spec: &PBiasedSpectrum, d: usize) -> PBiasedSpectrum {
    filter_levels(spec, |level| level == d)
}

fn filter_levels(spec: &PBiasedSpectrum, keep: impl Fn(usize) -> bool) -> PBiasedSpectrum {
    let coeffs = spec
        .coeffs
        .iter()
        .enumerate()
        .map(|(s, &c)| {
            if keep(s.count_ones() as usize) {
                c
            } else {
                0.0
            }
        })
        .collect();
    PBiasedSpectrum {
        n: spec.n,
        p: spec.p,
        coeffs,
    }
}

/// Discrete derivative in coordinate i as a spectrum shift: the output
/// coefficient at S (with i not in S) is the input coefficient at S + i.
/// Pointwise this equals sqrt(p(1-p)) (f with x_i set minus f with x_i
/// cleared), which the tests verify against direct evaluation.
pub fn derivative(spec: &PBiasedSpectrum, i: usize) -> Result<PBiasedSpectrum> {
    check_spectrum_coordinate(spec, i)?;
    let bit = 1u64 << (i - 1);
    let coeffs = (0..1u64 << spec.n)
        .map(|s| {
            if s & bit == 0 {
                spec.coeffs[(s | bit) as usize]
            } else {
                0.0
            }
        })
        .collect();
    Ok(PBiasedSpectrum {
        n: spec.n,
        p: spec.p,
        coeffs,
    })
}

/// Fourier-side influence of coordinate i: the sum of squared coefficients
/// over sets containing i. Equals p(1-p) times the pivot-probability
/// influence for 0/1 functions.
pub fn fourier_influence(spec: &PBiasedSpectrum, i: usize) -> Result<f64> {
    check_spectrum_coordinate(spec, i)?;
    let bit = 1u64 << (i - 1);
    let mut acc = KahanSum::new();
    for s in 0..1u64 << spec.n {
        if s & bit != 0 {
            let c = spec.coeffs[s as usize];
            acc.add(c * c);
        }
    }
    Ok(acc.value())
}

fn check_spectrum_coordinate(spec: &PBiasedSpectrum, i: usize) -> Result<()> {
    if i == 0 || i > spec.n {
        return Err(Error::CoordinateOutOfRange { k: i, n: spec.n });
    }
    Ok(())
}

/// L_q norm under the p-biased measure: (E |f|^q)^(1/q), q >= 1.
pub fn lq_norm(f: &RealFunction, p: f64, q: f64) -> Result<f64> {
    check_bias_open(p)?;
    if !q.is_finite() || q < 1.0 {
        return Err(Error::InvalidParameter(format!(
            "norm order must be >= 1, got {q}"
        )));
    }
    let mut acc = KahanSum::new();
    for (x, &v) in f.values.iter().enumerate() {
        acc.add(point_weight(x as u64, f.n, p) * v.abs().powf(q));
    }
    Ok(acc.value().powf(1.0 / q))
}

/// Inner product under the p-biased measure, summed pointwise.
pub fn inner_product(f: &RealFunction, g: &RealFunction, p: f64) -> Result<f64> {
    check_bias_open(p)?;
    if f.n != g.n {
        return Err(Error::ArityMismatch(f.n, g.n));
    }
    let mut acc = KahanSum::new();
    for (x, (&a, &b)) in f.values.iter().zip(&g.values).enumerate() {
        acc.add(point_weight(x as u64, f.n, p) * a * b);
    }
    Ok(acc.value())
}

fn point_weight(x: u64, n: usize, p: f64) -> f64 {
    let k = x.count_ones() as i32;
    p.powi(k) * (1.0 - p).powi(n as i32 - k)
}
