//! Exact and sampled analysis of monotone Boolean functions and cooperative
//! games on the p-biased cube.
//!
//! A Boolean function is held as a bit table (n ≤ 24), from which layer and
//! pivot counts make every bias-dependent quantity — acceptance probability,
//! influences, power indices, threshold locations — an O(n) polynomial
//! evaluation. Past the table cap, a seeded permutation sampler estimates
//! Shapley values through an evaluation callback alone.
//!
//! ```
//! use biascube::function::FunctionSpec;
//! use biascube::power::shapley_exact;
//!
//! let f = FunctionSpec::Majority { n: 5 }.build().unwrap();
//! let psi = shapley_exact(&f).unwrap();
//! assert!((psi.values[0] - 0.2).abs() < 1e-12);
//! assert!((psi.total() - 1.0).abs() < 1e-12);
//! ```
//!
//! The examples directory is the guided tour, one runnable program per
//! capability:
//!
//! - `power_indices` — Shapley three ways, Banzhaf, and where they disagree.
//! - `russo_curve` — the acceptance curve and its derivative-vs-influence
//!   identity, plus the parity counterexample.
//! - `spectrum_tour` — biased Fourier coefficients, Parseval, energy by level.
//! - `noise_operator` — one-sided noise by direct resampling and by spectral
//!   decay, with the monotone correlation identity.
//! - `threshold_intervals` — threshold windows, the 1/sqrt(n) majority
//!   scaling, and the window bound on Shapley values.
//! - `theorem_constants` — empirical constants behind the asymptotic bounds.
//! - `inequality_sweeps` — randomized stress tests of the proved inequalities.
//! - `condorcet_mcgarvey` — pairwise tournaments, the Condorcet cycle, and
//!   the McGarvey construction.
//! - `sampled_large_n` — seeded Shapley estimation at n = 40.
//!
//! A thin `biascube` binary exposes the same analyses as subcommands (power,
//! curve, threshold, verify, spectrum) with JSON/CSV output and a manifest
//! for reproducibility; see [`cli`].

pub mod bounds;
pub mod cli;
pub mod error;
pub mod function;
pub mod measures;
pub mod noise;
pub mod numeric;
pub mod power;
pub mod sampling;
pub mod social;
pub mod spectral;
pub mod threshold;
pub mod tolerances;
pub mod zoo;

pub use error::{Error, Result};
pub use function::{BooleanFunction, FunctionSpec, GameFunction};
pub use noise::NoisePair;
pub use power::{PowerMethod, PowerVector};
pub use spectral::{PBiasedSpectrum, RealFunction};
