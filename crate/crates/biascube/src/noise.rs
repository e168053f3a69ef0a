//! The one-sided noise operator between two biases and its correlation
//! functionals.
//!
//! For biases p <= q, noise acts on x drawn at bias q by independently
//! keeping each set bit with probability p/q and clearing it otherwise, so
//! the noised point is distributed at bias p. Two implementations are kept
//! deliberately separate as a two-route oracle: a probabilistic form that
//! sums over sub-bitmasks, and a spectral form that contracts level-k
//! coefficients by rho^k between the two biases.

use crate::error::{Error, Result};
use crate::function::BooleanFunction;
use crate::numeric::KahanSum;
use crate::spectral::{inner_product, inverse_transform, transform, PBiasedSpectrum, RealFunction};
use rayon::prelude::*;
use serde::Serialize;

/// Hard cap for the sub-bitmask route (3^16 terms total).
pub const NOISE_DIRECT_N_CAP: usize = 16;

/// A validated bias pair p <= q with its contraction factor
/// rho = sqrt(p(1-q) / (q(1-p))).
#[derive(Clone, Copy, Debug, Serialize)]
pub struct NoisePair {
    p: f64,
    q: f64,
    rho: f64,
}

impl NoisePair {
    /// Requires 0 < p <= q < 1. A reversed pair is an error, not a swap:
    /// the downward operator is reached through dualize instead.
    pub fn new(p: f64, q: f64) -> Result<NoisePair> {
        if !(p > 0.0 && p < 1.0) || !p.is_finite() {
            return Err(Error::BiasOutOfRange(p, "lower bias"));
        }
        if !(q > 0.0 && q < 1.0) || !q.is_finite() {
            return Err(Error::BiasOutOfRange(q, "upper bias"));
        }
        if p > q {
            return Err(Error::InvalidParameter(format!(
                "noise pair needs p <= q, got p={p} > q={q}"
            )));
        }
        let rho = (p * (1.0 - q) / (q * (1.0 - p))).sqrt();
        Ok(NoisePair { p, q, rho })
    }

    pub fn lower(&self) -> f64 {
        self.p
    }

    pub fn upper(&self) -> f64 {
        self.q
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }
}

/// Exact expectation over the noise kernel by sub-bitmask enumeration:
/// (Tf)(x) = sum over y <= x of (p/q)^|y| ((q-p)/q)^(|x|-|y|) f(y).
/// O(3^n) total work, parallel over output points.
pub fn apply_direct(f: &RealFunction, pair: NoisePair) -> Result<RealFunction> {
    let n = f.n();
    if n > NOISE_DIRECT_N_CAP {
        return Err(Error::TooLarge {
            n,
            cap: NOISE_DIRECT_N_CAP,
            what: "sub-bitmask noise",
        });
    }
    let stay = pair.p / pair.q;
    let drop = (pair.q - pair.p) / pair.q;
    let stay_pow: Vec<f64> = (0..=n).map(|k| stay.powi(k as i32)).collect();
    let drop_pow: Vec<f64> = (0..=n).map(|k| drop.powi(k as i32)).collect();
    let values: Vec<f64> = (0..1u64 << n)
        .into_par_iter()
        .map(|x| {
            let bits = x.count_ones() as usize;
            let mut acc = KahanSum::new();
            let mut y = x;
            loop {
                let kept = y.count_ones() as usize;
                acc.add(stay_pow[kept] * drop_pow[bits - kept] * f.values()[y as usize]);
                if y == 0 {
                    break;
                }
                y = (y - 1) & x;
            }
            acc.value()
        })
        .collect();
    RealFunction::from_values(n, values)
}

/// The same operator through the Fourier side: transform at the lower bias,
/// scale each level-k coefficient by rho^k, reconstruct at the upper bias.
pub fn apply_spectral(f: &RealFunction, pair: NoisePair) -> Result<RealFunction> {
    let spec = transform(f, pair.p)?;
    let n = f.n();
    let rho_pow: Vec<f64> = (0..=n).map(|k| pair.rho.powi(k as i32)).collect();
    let coeffs: Vec<f64> = spec
        .coeffs()
        .iter()
        .enumerate()
        .map(|(s, &c)| rho_pow[s.count_ones() as usize] * c)
        .collect();
    Ok(inverse_transform(&PBiasedSpectrum::from_coeffs(
        n, pair.q, coeffs,
    )?))
}

/// The noisy correlation <T f, g> under the upper-bias measure, computed on
/// the Fourier side as sum over S of rho^|S| fhat_p(S) ghat_q(S).
pub fn correlation(f: &RealFunction, g: &RealFunction, pair: NoisePair) -> Result<f64> {
    if f.n() != g.n() {
        return Err(Error::ArityMismatch(f.n(), g.n()));
    }
    let sf = transform(f, pair.p)?;
    let sg = transform(g, pair.q)?;
    let n = f.n();
    let rho_pow: Vec<f64> = (0..=n).map(|k| pair.rho.powi(k as i32)).collect();
    let mut acc = KahanSum::new();
    for (s, (a, b)) in sf.coeffs().iter().zip(sg.coeffs()).enumerate() {
        acc.add(rho_pow[s.count_ones() as usize] * a * b);
    }
    Ok(acc.value())
}

/// The same correlation through the kernel route: apply the sub-bitmask
/// operator, then integrate the product pointwise at the upper bias. Kept
/// as a fully independent cross-check of `correlation`.
pub fn correlation_pointwise(f: &RealFunction, g: &RealFunction, pair: NoisePair) -> Result<f64> {
    inner_product(&apply_direct(f, pair)?, g, pair.q)
}

/// Convenience for 0/1 tables: correlation of two Boolean functions.
pub fn correlation_boolean(
    f: &BooleanFunction,
    g: &BooleanFunction,
    pair: NoisePair,
) -> Result<f64> {
    correlation(
        &RealFunction::from_boolean(f)?,
        &RealFunction::from_boolean(g)?,
        pair,
    )
}
