//! Evaluation harness for the `mwsht` transforms: seeded random test
//! signals, round-trip accuracy and timing sweeps, and the CSV tables behind
//! the `mwsht` command-line tool.
//!
//! Random coefficients come from ChaCha8 (`rand_chacha`) seeded with
//! `seed + trial`, so a given invocation reproduces the same signals on any
//! platform.

use std::f64::consts::PI;
use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::Instant;

use mwsht::grid::{fmt_f64, sample_counts};
use mwsht::quadrature::{integrate, QuadWeights};
use mwsht::wigner::row_three_term;
use mwsht::{GlGrid, GlTransform, HarmonicCoeffs, MwTransform, Result};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sampling {
    Mw,
    Gl,
}

impl fmt::Display for Sampling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sampling::Mw => "mw",
            Sampling::Gl => "gl",
        })
    }
}

impl FromStr for Sampling {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "mw" => Ok(Sampling::Mw),
            "gl" => Ok(Sampling::Gl),
            other => Err(format!("unknown sampling '{other}' (expected mw or gl)")),
        }
    }
}

/// Coefficients with real and imaginary parts uniform on [−1, 1] for ℓ ≥ |s|
/// and zero below. With `real`, m < 0 is filled from f_{ℓ,−m} = (−1)^m f*_{ℓm}
/// and f_{ℓ0} is made real.
pub fn gen_random_coeffs(
    band_limit: usize,
    spin: i32,
    seed: u64,
    real: bool,
) -> Result<HarmonicCoeffs> {
    let mut c = HarmonicCoeffs::zeros(band_limit, spin)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for ell in spin.unsigned_abs() as usize..band_limit {
        let e = ell as i32;
        for m in -e..=e {
            let v = Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0));
            c.set(ell, m, v);
        }
        if real {
            let f0 = c.get(ell, 0);
            c.set(ell, 0, Complex64::new(f0.re, 0.0));
            for m in 1..=e {
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                let v = c.get(ell, m).conj() * sign;
                c.set(ell, -m, v);
            }
        }
    }
    Ok(c)
}

/// A round-trip transform prepared for one (L, sampling, real) combination.
pub enum RoundTrip {
    Mw(MwTransform),
    MwReal(MwTransform),
    Gl(GlTransform),
}

impl RoundTrip {
    pub fn new(
        band_limit: usize,
        sampling: Sampling,
        real: bool,
        gl_override: bool,
    ) -> Result<Self> {
        match (sampling, real) {
            (Sampling::Mw, false) => Ok(RoundTrip::Mw(MwTransform::new(band_limit)?)),
            (Sampling::Mw, true) => Ok(RoundTrip::MwReal(MwTransform::new(band_limit)?)),
            (Sampling::Gl, false) => Ok(RoundTrip::Gl(GlTransform::with_override(
                band_limit,
                gl_override,
            )?)),
            (Sampling::Gl, true) => Err(mwsht::Error::Format(
                "the real fast path is only available on the mw sampling".into(),
            )),
        }
    }

    /// inverse then forward.
    pub fn run(&self, coeffs: &HarmonicCoeffs) -> Result<HarmonicCoeffs> {
        match self {
            RoundTrip::Mw(t) => t.forward(&t.inverse(coeffs)?),
            RoundTrip::MwReal(t) => t.forward_real(&t.inverse_real(coeffs)?),
            RoundTrip::Gl(t) => t.forward(&t.inverse(coeffs)?),
        }
    }

    pub fn is_real(&self) -> bool {
        matches!(self, RoundTrip::MwReal(_))
    }
}

/// Maximum absolute coefficient error and wall time of one round trip.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Trial {
    pub epsilon: f64,
    pub seconds: f64,
}

pub fn time_round_trip(rt: &RoundTrip, coeffs: &HarmonicCoeffs) -> Result<Trial> {
    let start = Instant::now();
    let back = rt.run(coeffs)?;
    let seconds = start.elapsed().as_secs_f64();
    Ok(Trial {
        epsilon: back.max_abs_diff(coeffs),
        seconds,
    })
}

#[derive(Debug, Clone)]
pub struct RoundTripConfig {
    pub band_limits: Vec<usize>,
    pub spins: Vec<i32>,
    pub sampling: Sampling,
    pub trials: usize,
    pub seed: u64,
    pub real: bool,
    pub warmup: usize,
    pub parallel_trials: bool,
    pub gl_unstable_override: bool,
}

impl Default for RoundTripConfig {
    fn default() -> Self {
        Self {
            band_limits: vec![64],
            spins: vec![0],
            sampling: Sampling::Mw,
            trials: 5,
            seed: 0,
            real: false,
            warmup: 0,
            parallel_trials: false,
            gl_unstable_override: false,
        }
    }
}

/// One (L, s) row of a sweep. `outcome` holds the per-trial results, or the
/// reason the combination could not run.
#[derive(Debug, Clone)]
pub struct TrialReport {
    pub band_limit: usize,
    pub spin: i32,
    pub sampling: Sampling,
    pub real: bool,
    pub seed: u64,
    pub outcome: std::result::Result<Vec<Trial>, String>,
}

impl TrialReport {
    pub fn trials(&self) -> &[Trial] {
        self.outcome.as_deref().unwrap_or(&[])
    }

    pub fn epsilon(&self) -> Stats {
        Stats::of(self.trials().iter().map(|t| t.epsilon))
    }

    pub fn seconds(&self) -> Stats {
        Stats::of(self.trials().iter().map(|t| t.seconds))
    }
}

/// Mean and population standard deviation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Stats {
    pub mean: f64,
    pub std: f64,
    pub min: f64,
    pub max: f64,
}

impl Stats {
    pub fn of<I: IntoIterator<Item = f64>>(values: I) -> Self {
        let v: Vec<f64> = values.into_iter().collect();
        if v.is_empty() {
            return Stats {
                mean: f64::NAN,
                std: f64::NAN,
                min: f64::NAN,
                max: f64::NAN,
            };
        }
        let n = v.len() as f64;
        let mean = v.iter().sum::<f64>() / n;
        let var = v.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n;
        Stats {
            mean,
            std: var.sqrt(),
            min: v.iter().copied().fold(f64::INFINITY, f64::min),
            max: v.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        }
    }
}

fn run_cell(
    cfg: &RoundTripConfig,
    band_limit: usize,
    spin: i32,
) -> std::result::Result<Vec<Trial>, String> {
    if spin.unsigned_abs() as usize >= band_limit {
        return Err(format!(
            "|s| = {} is not below L = {band_limit}",
            spin.unsigned_abs()
        ));
    }
    if cfg.real && spin != 0 {
        return Err("the real fast path requires spin 0".into());
    }
    let rt = RoundTrip::new(band_limit, cfg.sampling, cfg.real, cfg.gl_unstable_override)
        .map_err(|e| e.to_string())?;
    let signal = |trial: usize| {
        gen_random_coeffs(
            band_limit,
            spin,
            cfg.seed.wrapping_add(trial as u64),
            cfg.real,
        )
    };
    for w in 0..cfg.warmup {
        let c = signal(w).map_err(|e| e.to_string())?;
        rt.run(&c).map_err(|e| e.to_string())?;
    }
    let one = |trial: usize| -> std::result::Result<Trial, String> {
        let c = signal(trial).map_err(|e| e.to_string())?;
        time_round_trip(&rt, &c).map_err(|e| e.to_string())
    };
    if cfg.parallel_trials {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..cfg.trials)
                .map(|i| scope.spawn(move || one(i)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("trial thread panicked"))
                .collect()
        })
    } else {
        (0..cfg.trials).map(one).collect()
    }
}

/// Round trips for every (L, s) pair in the configuration, rows ordered by
/// L then s. Failures are recorded per row and the sweep continues.
pub fn run_roundtrip(cfg: &RoundTripConfig) -> Vec<TrialReport> {
    let mut cells: Vec<(usize, i32)> = cfg
        .band_limits
        .iter()
        .flat_map(|&l| cfg.spins.iter().map(move |&s| (l, s)))
        .collect();
    cells.sort_unstable();
    cells.dedup();
    cells
        .into_iter()
        .map(|(band_limit, spin)| TrialReport {
            band_limit,
            spin,
            sampling: cfg.sampling,
            real: cfg.real,
            seed: cfg.seed,
            outcome: run_cell(cfg, band_limit, spin),
        })
        .collect()
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub const ROUNDTRIP_HEADER: &str =
    "band_limit,spin,sampling,real,seed,trials,epsilon_mean,epsilon_std,epsilon_max,seconds_mean,seconds_std,error";

pub fn roundtrip_csv(reports: &[TrialReport], trials: usize) -> String {
    let mut out = format!("{ROUNDTRIP_HEADER}\n");
    for r in reports {
        let prefix = format!(
            "{},{},{},{},{},{}",
            r.band_limit, r.spin, r.sampling, r.real, r.seed, trials
        );
        match &r.outcome {
            Ok(_) => {
                let (e, t) = (r.epsilon(), r.seconds());
                let _ = writeln!(
                    out,
                    "{prefix},{},{},{},{},{},",
                    fmt_f64(e.mean),
                    fmt_f64(e.std),
                    fmt_f64(e.max),
                    fmt_f64(t.mean),
                    fmt_f64(t.std)
                );
            }
            Err(msg) => {
                let _ = writeln!(out, "{prefix},,,,,,{}", csv_field(msg));
            }
        }
    }
    out
}

pub const TRIALS_HEADER: &str = "band_limit,spin,sampling,real,seed,trial,epsilon,seconds";

/// One row per trial; combinations that failed are omitted.
pub fn trials_csv(reports: &[TrialReport]) -> String {
    let mut out = format!("{TRIALS_HEADER}\n");
    for r in reports {
        for (i, t) in r.trials().iter().enumerate() {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                r.band_limit,
                r.spin,
                r.sampling,
                r.real,
                r.seed,
                i,
                fmt_f64(t.epsilon),
                fmt_f64(t.seconds)
            );
        }
    }
    out
}

pub fn counts_csv(band_limits: &[usize]) -> Result<String> {
    let mut out = String::from("L,n_mw,n_gl,n_dh\n");
    for &l in band_limits {
        let c = sample_counts(l)?;
        let _ = writeln!(out, "{l},{},{},{}", c.n_mw, c.n_gl, c.n_dh);
    }
    Ok(out)
}

/// ∫ f dΩ of the signal with coefficients `c`, from the m = 0 part by a
/// Gauss-Legendre rule in θ with enough nodes to integrate
/// F₀(θ) sin θ exactly for any spin.
pub fn reference_integral(c: &HarmonicCoeffs) -> Result<Complex64> {
    let l = c.band_limit();
    let s = c.spin();
    let lo = s.unsigned_abs() as usize;
    let rule = GlGrid::new(2 * l + 8)?;
    let sign = if s % 2 == 0 { 1.0 } else { -1.0 };
    let mut acc = Complex64::new(0.0, 0.0);
    for (&x, &w) in rule.nodes().iter().zip(rule.weights()) {
        let theta = 0.5 * PI * (x + 1.0);
        let d = row_three_term(l, 0, -s, theta);
        let mut f0 = Complex64::new(0.0, 0.0);
        for (k, dv) in d.iter().enumerate() {
            let ell = lo + k;
            let norm = ((2 * ell + 1) as f64 / (4.0 * PI)).sqrt();
            f0 += c.get(ell, 0) * (sign * norm * dv);
        }
        acc += f0 * (w * 0.5 * PI * theta.sin());
    }
    Ok(acc * (2.0 * PI))
}

/// Integration error on random band-limited functions for one (L, s).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegrateReport {
    pub band_limit: usize,
    pub spin: i32,
    pub functions: usize,
    /// max |I − I_ref| / (1 + |I_ref|) over the functions.
    pub max_error: f64,
    /// Σ_t Σ_p q(θ_t) − 4π, the error on the constant function.
    pub unit_error: f64,
}

/// The reference is √(4π) f₀₀ for spin 0 and [`reference_integral`] otherwise.
pub fn run_integrate(
    band_limit: usize,
    spin: i32,
    functions: usize,
    seed: u64,
) -> Result<IntegrateReport> {
    let t = MwTransform::new(band_limit)?;
    let w = QuadWeights::new(band_limit, spin)?;
    let mut max_error = 0.0f64;
    for i in 0..functions {
        let c = gen_random_coeffs(band_limit, spin, seed.wrapping_add(i as u64), false)?;
        let got = integrate(&t.inverse_quadrature_grid(&c)?, &w)?;
        let expect = if spin == 0 {
            c.get(0, 0) * (4.0 * PI).sqrt()
        } else {
            reference_integral(&c)?
        };
        max_error = max_error.max((got - expect).norm() / (1.0 + expect.norm()));
    }
    let ones = vec![Complex64::new(1.0, 0.0); band_limit * band_limit];
    let unit = integrate(&ones, &QuadWeights::new(band_limit, 0)?)?;
    Ok(IntegrateReport {
        band_limit,
        spin,
        functions,
        max_error,
        unit_error: (unit - 4.0 * PI).norm(),
    })
}

pub fn integrate_csv(reports: &[IntegrateReport], seed: u64) -> String {
    let mut out = String::from("band_limit,spin,functions,seed,max_rel_error,unit_error\n");
    for r in reports {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.band_limit,
            r.spin,
            r.functions,
            seed,
            fmt_f64(r.max_error),
            fmt_f64(r.unit_error)
        );
    }
    out
}

/// Least-squares slope of log y against log x.
pub fn log_log_slope(x: &[f64], y: &[f64]) -> f64 {
    let lx: Vec<f64> = x.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = y.iter().map(|v| v.ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let num: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let den: f64 = lx.iter().map(|a| (a - mx).powi(2)).sum();
    num / den
}

/// Parses `4`, `4,16,64`, `1-8` or combinations such as `1-4,16`.
pub fn parse_list<T: TryFrom<i64>>(s: &str) -> std::result::Result<Vec<T>, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let bad = || format!("invalid list entry '{part}'");
        let num = |x: &str| x.trim().parse::<i64>().map_err(|_| bad());
        let split = part
            .char_indices()
            .skip(1)
            .find(|&(_, c)| c == '-')
            .map(|(i, _)| i);
        let (a, b) = match split {
            Some(i) => (num(&part[..i])?, num(&part[i + 1..])?),
            None => (num(part)?, num(part)?),
        };
        if a > b {
            return Err(format!("empty range '{part}'"));
        }
        for v in a..=b {
            out.push(T::try_from(v).map_err(|_| bad())?);
        }
    }
    if out.is_empty() {
        return Err("empty list".into());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists_and_ranges() {
        assert_eq!(parse_list::<u32>("4").unwrap(), vec![4]);
        assert_eq!(parse_list::<u32>("1-3,8").unwrap(), vec![1, 2, 3, 8]);
        assert_eq!(parse_list::<i32>("-2,0,10").unwrap(), vec![-2, 0, 10]);
        assert_eq!(parse_list::<i32>("-2-1").unwrap(), vec![-2, -1, 0, 1]);
        assert!(parse_list::<u32>("5-2").is_err());
        assert!(parse_list::<u32>("x").is_err());
        assert!(parse_list::<u32>("").is_err());
    }

    #[test]
    fn stats_are_population_moments() {
        let s = Stats::of([1.0, 3.0]);
        assert_eq!((s.mean, s.std, s.min, s.max), (2.0, 1.0, 1.0, 3.0));
        assert!(Stats::of([]).mean.is_nan());
    }

    #[test]
    fn slope_of_a_power_law() {
        let x = [2.0, 4.0, 8.0, 16.0];
        let y: Vec<f64> = x.iter().map(|v: &f64| 3.0 * v.powi(3)).collect();
        assert!((log_log_slope(&x, &y) - 3.0).abs() < 1e-12);
    }
}
