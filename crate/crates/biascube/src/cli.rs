//! Command-line front end: every analysis as a reproducible, scriptable
//! command with JSON or CSV output.
//!
//! Output contract: JSON mode prints one object {"manifest": ..., "data":
//! ...}; CSV mode prints the manifest as leading "# key=value" comment
//! lines followed by a header and rows, floats at 17 significant digits.
//! Given the same command line (and seed), the data portion is
//! byte-identical across runs — only the manifest's duration field varies.
//!
//! Exit codes: 0 success, 2 unreadable/unparsable input, 3 infeasible
//! size, 4 domain error (non-monotone where monotonicity is required,
//! biases out of range, violated hypotheses). Verification failures in
//! `verify` exit 1.

use crate::bounds::{
    correlation_sweep, derivative_bound_sweep, hypercontractivity_sweep, kkl_max_influence_check,
};
use crate::error::Error;
use crate::function::{FunctionSpec, GameFunction};
use crate::measures::{mu, mu_derivative, total_influence};
use crate::noise::{apply_direct, apply_spectral, correlation_boolean, NoisePair};
use crate::power::{
    banzhaf, shapley_exact, shapley_owen, shapley_sampled, verify_shapley_axioms, PowerVector,
};
use crate::sampling::stream_rng;
use crate::social::mcgarvey_exhaustive;
use crate::spectral::{
    fourier_influence, inverse_transform, transform, transform_boolean, RealFunction,
};
use crate::threshold::{banzhaf_shapley_report, influence_profile_scan, shapley_interval_report};
use crate::zoo;
use clap::{Parser, Subcommand, ValueEnum};
use rand::Rng;
use serde::Serialize;
use serde_json::json;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

#[derive(Parser, Debug)]
#[command(
    name = "biascube",
    version,
    about = "Exact analysis of voting rules on the biased cube"
)]
pub struct Cli {
    /// Cap the worker-thread count; never changes results.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Power indices of a function given as a JSON spec file.
    Power {
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Exact)]
        method: MethodArg,
        /// Permutation count for the sampled method.
        #[arg(long, default_value_t = 1 << 17)]
        samples: u64,
        /// Required by the sampled method.
        #[arg(long)]
        seed: Option<u64>,
        /// Quadrature nodes for the owen method (default: smallest exact).
        #[arg(long)]
        nodes: Option<usize>,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Acceptance probability, total influence, and its derivative on a bias grid.
    Curve {
        spec: PathBuf,
        #[arg(long, default_value_t = 101)]
        points: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Threshold window bundle: window report, ordering-power report,
    /// bias-1/2-power report.
    Threshold {
        spec: PathBuf,
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
        #[arg(long, default_value_t = 101)]
        grid: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run invariant suites; exits nonzero iff a provable check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Fourier coefficients of a function at one bias.
    Spectrum {
        spec: PathBuf,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Exact,
    Owen,
    Sampled,
    Banzhaf,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Axioms,
    Spectral,
    Noise,
    Bounds,
    Mcgarvey,
    All,
}

/// Provenance block attached to every output artifact.
#[derive(Serialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub version: String,
    pub duration_ms: u64,
}

#[derive(Debug)]
enum CliFailure {
    /// Unreadable or unparsable input: exit 2.
    Parse(String),
    /// Library error: exit 3 for size, 4 for domain.
    Lib(Error),
    /// Provable verification checks failed: exit 1.
    ChecksFailed(usize),
}

impl CliFailure {
    fn exit_code(&self) -> i32 {
        match self {
            CliFailure::Parse(_) => 2,
            CliFailure::Lib(Error::TooLarge { .. }) => 3,
            CliFailure::Lib(_) => 4,
            CliFailure::ChecksFailed(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            CliFailure::Parse(m) => format!("input error: {m}"),
            CliFailure::Lib(e) => format!("error: {e}"),
            CliFailure::ChecksFailed(k) => format!("{k} check(s) failed"),
        }
    }
}

impl From<Error> for CliFailure {
    fn from(e: Error) -> CliFailure {
        CliFailure::Lib(e)
    }
}

/// Parses the process arguments, runs the command, prints output, and
/// returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        // Ignore failure: the global pool may already exist (second call),
        // which only affects parallelism, never results.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match execute(&cli.command) {
        Ok(()) => 0,
        Err(failure) => {
            eprintln!("{}", failure.message());
            failure.exit_code()
        }
    }
}

fn execute(command: &Command) -> Result<(), CliFailure> {
    let started = Instant::now();
    match command {
        Command::Power {
            spec,
            method,
            samples,
            seed,
            nodes,
            format,
            out,
        } => {
            let function_spec = load_spec(spec)?;
            let mut params = BTreeMap::new();
            params.insert("spec".into(), spec.display().to_string());
            params.insert("method".into(), format!("{method:?}").to_lowercase());
            params.insert("samples".into(), samples.to_string());
            if let Some(n) = nodes {
                params.insert("nodes".into(), n.to_string());
            }
            let (vector, nodes_used) = run_power(&function_spec, *method, *samples, *seed, *nodes)?;
            if let Some(n) = nodes_used {
                params.insert("nodes_used".into(), n.to_string());
            }
            let manifest = manifest("power", params, *seed, started);
            let data = power_data(&vector);
            emit(
                *format,
                &manifest,
                &data,
                power_csv(&vector),
                out.as_deref(),
            )
        }
        Command::Curve {
            spec,
            points,
            format,
            out,
        } => {
            let function_spec = load_spec(spec)?;
            let mut params = BTreeMap::new();
            params.insert("spec".into(), spec.display().to_string());
            params.insert("points".into(), points.to_string());
            let rows = run_curve(&function_spec, *points)?;
            let manifest = manifest("curve", params, None, started);
            let data = json!(rows);
            emit(*format, &manifest, &data, curve_csv(&rows), out.as_deref())
        }
        Command::Threshold {
            spec,
            eps,
            grid,
            format,
            out,
        } => {
            let function_spec = load_spec(spec)?;
            let mut params = BTreeMap::new();
            params.insert("spec".into(), spec.display().to_string());
            params.insert("eps".into(), format!("{eps}"));
            params.insert("grid".into(), grid.to_string());
            let bundle = run_threshold(&function_spec, *eps, *grid)?;
            let manifest = manifest("threshold", params, None, started);
            let csv = threshold_csv(&bundle);
            emit(*format, &manifest, &json!(bundle), csv, out.as_deref())
        }
        Command::Verify { suite, seed } => {
            let mut params = BTreeMap::new();
            params.insert("suite".into(), format!("{suite:?}").to_lowercase());
            let checks = run_verify(*suite, *seed);
            let manifest = manifest("verify", params, Some(*seed), started);
            print_manifest_comments(&manifest);
            let mut failures = 0;
            for check in &checks {
                println!("{check}");
                if check.starts_with("FAIL") {
                    failures += 1;
                }
            }
            let passes = checks.iter().filter(|c| c.starts_with("PASS")).count();
            println!(
                "summary: {passes} passed, {failures} failed, {} reported",
                checks.len() - passes - failures
            );
            if failures > 0 {
                return Err(CliFailure::ChecksFailed(failures));
            }
            Ok(())
        }
        Command::Spectrum {
            spec,
            p,
            format,
            out,
        } => {
            let function_spec = load_spec(spec)?;
            let mut params = BTreeMap::new();
            params.insert("spec".into(), spec.display().to_string());
            params.insert("p".into(), format!("{p}"));
            let (rows, parseval) = run_spectrum(&function_spec, *p)?;
            let manifest = manifest("spectrum", params, None, started);
            let data = json!({ "rows": rows, "parseval_total": parseval });
            emit(
                *format,
                &manifest,
                &data,
                spectrum_csv(&rows, parseval),
                out.as_deref(),
            )
        }
    }
}

fn load_spec(path: &Path) -> Result<FunctionSpec, CliFailure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliFailure::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliFailure::Parse(format!("{}: {e}", path.display())))
}

fn manifest(
    command: &str,
    parameters: BTreeMap<String, String>,
    seed: Option<u64>,
    started: Instant,
) -> RunManifest {
    RunManifest {
        command: command.to_string(),
        parameters,
        seed,
        version: env!("CARGO_PKG_VERSION").to_string(),
        duration_ms: started.elapsed().as_millis() as u64,
    }
}

fn print_manifest_comments(m: &RunManifest) {
    print!("{}", manifest_comments(m));
}

fn manifest_comments(m: &RunManifest) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# command={}", m.command);
    for (k, v) in &m.parameters {
        let _ = writeln!(out, "# {k}={v}");
    }
    if let Some(seed) = m.seed {
        let _ = writeln!(out, "# seed={seed}");
    }
    let _ = writeln!(out, "# version={}", m.version);
    let _ = writeln!(out, "# duration_ms={}", m.duration_ms);
    out
}

fn emit(
    format: FormatArg,
    manifest: &RunManifest,
    data: &serde_json::Value,
    csv_rows: String,
    out: Option<&Path>,
) -> Result<(), CliFailure> {
    let text = match format {
        FormatArg::Json => {
            let combined = json!({ "manifest": manifest, "data": data });
            let mut s = serde_json::to_string_pretty(&combined).expect("serializable");
            s.push('\n');
            s
        }
        FormatArg::Csv => format!("{}{csv_rows}", manifest_comments(manifest)),
    };
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliFailure::Parse(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_power(
    spec: &FunctionSpec,
    method: MethodArg,
    samples: u64,
    seed: Option<u64>,
    nodes: Option<usize>,
) -> Result<(PowerVector, Option<usize>), CliFailure> {
    let f = spec.build()?;
    match method {
        MethodArg::Exact => Ok((shapley_exact(&f)?, None)),
        MethodArg::Banzhaf => Ok((banzhaf(&f)?, None)),
        MethodArg::Owen => {
            let used = nodes.unwrap_or_else(|| f.n().div_ceil(2));
            Ok((shapley_owen(&f, used)?, Some(used)))
        }
        MethodArg::Sampled => {
            let seed = seed.ok_or_else(|| {
                CliFailure::Parse("--seed is required for the sampled method".into())
            })?;
            let vector = shapley_sampled(|x| f.value01(x), f.n(), samples, seed)?;
            Ok((vector, None))
        }
    }
}

fn power_data(v: &PowerVector) -> serde_json::Value {
    let rows: Vec<serde_json::Value> = v
        .values
        .iter()
        .enumerate()
        .map(|(i, value)| match &v.stderr {
            Some(s) => json!({ "player": i + 1, "value": value, "stderr": s[i] }),
            None => json!({ "player": i + 1, "value": value }),
        })
        .collect();
    json!({ "method": v.method, "rows": rows, "total": v.total() })
}

fn power_csv(v: &PowerVector) -> String {
    let mut out = String::from("player,value,stderr\n");
    for (i, value) in v.values.iter().enumerate() {
        match &v.stderr {
            Some(s) => {
                let _ = writeln!(out, "{},{value:.16e},{:.16e}", i + 1, s[i]);
            }
            None => {
                let _ = writeln!(out, "{},{value:.16e},", i + 1);
            }
        }
    }
    out
}

#[derive(Serialize)]
struct CurveRow {
    p: f64,
    mu: f64,
    total_influence: f64,
    mu_derivative: f64,
}

fn run_curve(spec: &FunctionSpec, points: usize) -> Result<Vec<CurveRow>, CliFailure> {
    if points == 0 {
        return Err(CliFailure::Lib(Error::InvalidParameter(
            "need at least one grid point".into(),
        )));
    }
    let f = spec.build()?;
    let rows = (1..=points)
        .map(|i| {
            let p = i as f64 / (points + 1) as f64;
            Ok(CurveRow {
                p,
                mu: mu(&f, p)?,
                total_influence: total_influence(&f, p)?,
                mu_derivative: mu_derivative(&f, p)?,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(rows)
}

fn curve_csv(rows: &[CurveRow]) -> String {
    let mut out = String::from("p,mu,total_influence,mu_derivative\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{:.16e},{:.16e},{:.16e},{:.16e}",
            r.p, r.mu, r.total_influence, r.mu_derivative
        );
    }
    out
}

#[derive(Serialize)]
struct ThresholdBundle {
    threshold: crate::threshold::ThresholdReport,
    shapley_interval: crate::threshold::ShapleyIntervalReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    banzhaf_shapley: Option<crate::threshold::BanzhafShapleyReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hypothesis_note: Option<String>,
}

fn run_threshold(
    spec: &FunctionSpec,
    eps: f64,
    grid: usize,
) -> Result<ThresholdBundle, CliFailure> {
    let f = spec.build()?;
    let threshold = influence_profile_scan(&f, eps, grid)?;
    let shapley_interval = shapley_interval_report(&f, eps)?;
    // A lopsided function legitimately fails the balance hypothesis; the
    // rest of the bundle is still valid, so report instead of aborting.
    let (banzhaf_shapley, hypothesis_note) = match banzhaf_shapley_report(&f, eps) {
        Ok(r) => (Some(r), None),
        Err(Error::HypothesisViolated(msg)) => (None, Some(msg)),
        Err(e) => return Err(e.into()),
    };
    Ok(ThresholdBundle {
        threshold,
        shapley_interval,
        banzhaf_shapley,
        hypothesis_note,
    })
}

fn threshold_csv(bundle: &ThresholdBundle) -> String {
    let t = &bundle.threshold;
    let mut out = String::new();
    let _ = writeln!(out, "# epsilon={:.16e}", t.epsilon);
    let _ = writeln!(out, "# p_lo={:.16e}", t.p_lo);
    let _ = writeln!(out, "# p_hi={:.16e}", t.p_hi);
    let _ = writeln!(out, "# length={:.16e}", t.length);
    let _ = writeln!(out, "# s={:.16e}", t.s);
    let _ = writeln!(out, "# min_max_influence={:.16e}", t.min_max_influence);
    let _ = writeln!(
        out,
        "# max_shapley={:.16e}",
        bundle.shapley_interval.max_shapley
    );
    out.push_str("p,max_influence,argmax_coordinate,total_influence\n");
    for row in &t.grid {
        let _ = writeln!(
            out,
            "{:.16e},{:.16e},{},{:.16e}",
            row.p, row.max_influence, row.argmax_coordinate, row.total_influence
        );
    }
    out
}

#[derive(Serialize)]
struct SpectrumRow {
    bitmask: u64,
    level: u32,
    coefficient: f64,
}

fn run_spectrum(spec: &FunctionSpec, p: f64) -> Result<(Vec<SpectrumRow>, f64), CliFailure> {
    let f = spec.build()?;
    let spectrum = transform_boolean(&f, p)?;
    let rows = spectrum
        .coeffs()
        .iter()
        .enumerate()
        .map(|(s, &coefficient)| SpectrumRow {
            bitmask: s as u64,
            level: (s as u64).count_ones(),
            coefficient,
        })
        .collect();
    Ok((rows, spectrum.squared_norm()))
}

fn spectrum_csv(rows: &[SpectrumRow], parseval: f64) -> String {
    let mut out = String::from("bitmask,level,coefficient\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{:.16e}", r.bitmask, r.level, r.coefficient);
    }
    let _ = writeln!(out, "# parseval_total={parseval:.16e}");
    out
}

fn run_verify(suite: SuiteArg, seed: u64) -> Vec<String> {
    let mut checks = Vec::new();
    if matches!(suite, SuiteArg::Axioms | SuiteArg::All) {
        verify_axioms(seed, &mut checks);
    }
    if matches!(suite, SuiteArg::Spectral | SuiteArg::All) {
        verify_spectral(seed, &mut checks);
    }
    if matches!(suite, SuiteArg::Noise | SuiteArg::All) {
        verify_noise(seed, &mut checks);
    }
    if matches!(suite, SuiteArg::Bounds | SuiteArg::All) {
        verify_bounds(seed, &mut checks);
    }
    if matches!(suite, SuiteArg::Mcgarvey | SuiteArg::All) {
        verify_mcgarvey(&mut checks);
    }
    checks
}

fn check_line(checks: &mut Vec<String>, name: &str, ok: bool, detail: String) {
    let status = if ok { "PASS" } else { "FAIL" };
    checks.push(format!("{status} {name}: {detail}"));
}

fn report_line(checks: &mut Vec<String>, name: &str, detail: String) {
    checks.push(format!("REPORT {name}: {detail}"));
}

fn verify_axioms(seed: u64, checks: &mut Vec<String>) {
    // Two independent routes to ordering power on the monotone built-ins.
    let mut worst = 0f64;
    for e in zoo::monotone() {
        let f = e.build();
        let exact = shapley_exact(&f).expect("zoo sizes fit");
        let owen = shapley_owen(&f, f.n().div_ceil(2)).expect("zoo sizes fit");
        for (a, b) in exact.values.iter().zip(&owen.values) {
            worst = worst.max((a - b).abs());
        }
    }
    check_line(
        checks,
        "exact-vs-quadrature",
        worst <= 1e-9,
        format!("max deviation {worst:.3e}"),
    );

    let mut worst = 0f64;
    for e in zoo::all() {
        let f = e.build();
        let psi = shapley_exact(&f).expect("zoo sizes fit");
        let want = f.value01(f.full_mask()) - f.value01(0);
        worst = worst.max((psi.total() - want).abs());
    }
    check_line(
        checks,
        "efficiency",
        worst <= 1e-10,
        format!("max deviation {worst:.3e}"),
    );

    let n = 8;
    let mut rng = stream_rng(seed, 0);
    let mut random_game = || {
        let mut payoff: Vec<f64> = (0..1u64 << n).map(|_| rng.random::<f64>()).collect();
        payoff[0] = 0.0;
        GameFunction::new(n, payoff).expect("valid payoff")
    };
    let g1 = random_game();
    let g2 = random_game();
    let b: Vec<f64> = (0..n).map(|i| 0.5 * i as f64 - 1.0).collect();
    let report = verify_shapley_axioms(&g1, &g2, 2.0, &b).expect("same arity");
    let dev = report.max_deviation();
    check_line(
        checks,
        "axioms-random-games",
        dev <= 1e-9,
        format!("max deviation {dev:.3e}"),
    );
}

fn verify_spectral(seed: u64, checks: &mut Vec<String>) {
    let mut rng = stream_rng(seed, 1);
    let mut worst_round = 0f64;
    let mut worst_parseval = 0f64;
    for _ in 0..100 {
        let n = rng.random_range(4..=12usize);
        let values: Vec<f64> = (0..1u64 << n)
            .map(|_| rng.random::<f64>() * 2.0 - 1.0)
            .collect();
        let f = RealFunction::from_values(n, values).expect("sized");
        for p in [0.1, 0.5, 0.9] {
            let spec = transform(&f, p).expect("bias ok");
            let back = inverse_transform(&spec);
            for (a, b) in f.values().iter().zip(back.values()) {
                worst_round = worst_round.max((a - b).abs());
            }
            let energy = crate::spectral::inner_product(&f, &f, p).expect("same n");
            worst_parseval = worst_parseval.max((spec.squared_norm() - energy).abs());
        }
    }
    check_line(
        checks,
        "transform-round-trip",
        worst_round <= 1e-10,
        format!("max deviation {worst_round:.3e} over 100 random functions"),
    );
    check_line(
        checks,
        "parseval",
        worst_parseval <= 1e-10,
        format!("max deviation {worst_parseval:.3e}"),
    );

    let mut worst = 0f64;
    for e in zoo::all() {
        let f = e.build();
        for p in [0.2, 0.5, 0.8] {
            let spec = transform_boolean(&f, p).expect("bias ok");
            for i in 1..=f.n() {
                let lhs = fourier_influence(&spec, i).expect("coordinate ok");
                let rhs = p * (1.0 - p) * crate::measures::influence(&f, i, p).expect("ok");
                worst = worst.max((lhs - rhs).abs());
            }
        }
    }
    check_line(
        checks,
        "influence-identity",
        worst <= 1e-10,
        format!("max deviation {worst:.3e} across built-ins"),
    );
}

fn verify_noise(seed: u64, checks: &mut Vec<String>) {
    let mut rng = stream_rng(seed, 2);
    let mut worst = 0f64;
    for _ in 0..50 {
        let n = rng.random_range(3..=10usize);
        let values: Vec<f64> = (0..1u64 << n)
            .map(|_| rng.random::<f64>() * 2.0 - 1.0)
            .collect();
        let f = RealFunction::from_values(n, values).expect("sized");
        for (p, q) in [(0.2, 0.5), (0.3, 0.7), (0.49, 0.51)] {
            let pair = NoisePair::new(p, q).expect("ordered");
            let a = apply_direct(&f, pair).expect("size ok");
            let b = apply_spectral(&f, pair).expect("size ok");
            for (x, y) in a.values().iter().zip(b.values()) {
                worst = worst.max((x - y).abs());
            }
        }
    }
    check_line(
        checks,
        "noise-two-routes",
        worst <= 1e-10,
        format!("max pointwise deviation {worst:.3e} over 50 random functions"),
    );

    let mut worst = 0f64;
    for e in zoo::monotone() {
        let f = e.build();
        for (p, q) in [(0.2, 0.5), (0.3, 0.6), (0.1, 0.2), (0.45, 0.55), (0.5, 0.9)] {
            let pair = NoisePair::new(p, q).expect("ordered");
            let got = correlation_boolean(&f, &f, pair).expect("sized");
            let want = mu(&f, p).expect("bias ok");
            worst = worst.max((got - want).abs());
        }
    }
    check_line(
        checks,
        "monotone-correlation-identity",
        worst <= 1e-10,
        format!("max deviation {worst:.3e} across monotone built-ins"),
    );
}

fn verify_bounds(seed: u64, checks: &mut Vec<String>) {
    let reports = hypercontractivity_sweep(seed, 1000);
    let violations = reports.iter().filter(|r| !r.holds).count();
    check_line(
        checks,
        "hypercontractivity-sweep",
        violations == 0,
        format!("{violations} violations in {} instances", reports.len()),
    );

    let reports = derivative_bound_sweep(seed.wrapping_add(1), 1000);
    let violations = reports.iter().filter(|r| !r.holds).count();
    check_line(
        checks,
        "derivative-bound-sweep",
        violations == 0,
        format!("{violations} violations in {} instances", reports.len()),
    );

    let reports = correlation_sweep(seed.wrapping_add(2), 1000);
    let mut hypothesis_true = 0usize;
    let mut implication_broken = 0usize;
    for r in &reports {
        if r.parameter("hypothesis_holds") == Some(1.0) {
            hypothesis_true += 1;
            if !r.holds {
                implication_broken += 1;
            }
        }
    }
    check_line(
        checks,
        "correlation-implication",
        implication_broken == 0,
        format!(
            "{implication_broken} broken implications; hypothesis held in {hypothesis_true}/{} instances",
            reports.len()
        ),
    );

    for e in zoo::all() {
        let f = e.build();
        let report = kkl_max_influence_check(&f).expect("bias 1/2 ok");
        let c = report
            .parameter("empirical_constant")
            .map(|c| format!("{c:.4}"))
            .unwrap_or_else(|| "n/a".into());
        report_line(
            checks,
            "max-influence-constant",
            format!(
                "{}: lhs={:.4e} max_influence={:.4e} empirical_c={c}",
                e.name, report.lhs, report.rhs
            ),
        );
    }
}

fn verify_mcgarvey(checks: &mut Vec<String>) {
    for m in [2usize, 3, 4] {
        let targets = 1usize << (m * (m - 1) / 2);
        let realized = mcgarvey_exhaustive(m).expect("valid m");
        check_line(
            checks,
            "tournament-realization",
            realized == targets,
            format!("{realized}/{targets} tournaments realized (m={m})"),
        );
    }
}
