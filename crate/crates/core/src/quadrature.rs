//! Quadrature weights of the equiangular sampling.
//!
//! * w(m′) = ∫₀^π sin θ e^{im′θ} dθ, the harmonic weights used by the forward
//!   transform's reflected convolution.
//! * v(θ_t), t ∈ 0..2L−1: inverse DFT of w(−m′) over |m′| ≤ L−1. These are
//!   2π/(2L−1) times the samples of the band-limited projection of
//!   sin θ·1_{[0,π]}.
//! * q(θ_t), t ∈ 0..L: v folded back onto [0, π] with a (−1)^s sign, scaled
//!   by 2π/L. Integrates any band-limited function exactly from samples on
//!   the L × L grid (θ_t, φ′_p = 2πp/L).

use std::f64::consts::PI;
use std::fmt::Write as _;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{extended_theta, fmt_f64, reflect_index};

/// w(m′) = ∫₀^π sin θ e^{im′θ} dθ.
pub fn weight_w(m_prime: i64) -> Complex64 {
    match m_prime {
        1 => Complex64::new(0.0, PI / 2.0),
        -1 => Complex64::new(0.0, -PI / 2.0),
        k if k % 2 != 0 => Complex64::new(0.0, 0.0),
        k => Complex64::new(2.0 / (1.0 - (k * k) as f64), 0.0),
    }
}

/// v(θ_t) for t ∈ 0..=2L−2.
pub fn ring_weights_v(band_limit: usize) -> Result<Vec<Complex64>> {
    if band_limit == 0 {
        return Err(Error::InvalidBandLimit);
    }
    let n = 2 * band_limit - 1;
    let lm = band_limit as i64 - 1;
    let scale = 1.0 / n as f64;
    (0..n)
        .map(|t| {
            let theta = extended_theta(band_limit, t)?;
            let mut acc = Complex64::new(0.0, 0.0);
            for mp in -lm..=lm {
                acc += weight_w(-mp) * Complex64::from_polar(1.0, mp as f64 * theta);
            }
            Ok(acc * scale)
        })
        .collect()
}

/// q(θ_t) for t ∈ 0..L and spin parity `spin`.
pub fn quad_weights_q(band_limit: usize, spin: i32) -> Result<Vec<Complex64>> {
    let v = ring_weights_v(band_limit)?;
    Ok(fold_weights(band_limit, spin, &v))
}

fn fold_weights(band_limit: usize, spin: i32, v: &[Complex64]) -> Vec<Complex64> {
    let sign = if spin % 2 == 0 { 1.0 } else { -1.0 };
    let scale = 2.0 * PI / band_limit as f64;
    (0..band_limit)
        .map(|t| {
            let folded = if t + 1 == band_limit {
                Complex64::new(0.0, 0.0)
            } else {
                sign * v[reflect_index(band_limit, t)]
            };
            (v[t] + folded) * scale
        })
        .collect()
}

/// All weights needed for the explicit quadrature at one (L, s).
#[derive(Debug, Clone, PartialEq)]
pub struct QuadWeights {
    band_limit: usize,
    spin: i32,
    w: Vec<Complex64>,
    v: Vec<Complex64>,
    q: Vec<Complex64>,
}

impl QuadWeights {
    pub fn new(band_limit: usize, spin: i32) -> Result<Self> {
        let v = ring_weights_v(band_limit)?;
        let q = fold_weights(band_limit, spin, &v);
        let wmax = 2 * (band_limit as i64 - 1);
        let w = (-wmax..=wmax).map(weight_w).collect();
        let weights = Self {
            band_limit,
            spin,
            w,
            v,
            q,
        };
        debug_assert!(weights.max_imag() < 1e-13, "{}", weights.max_imag());
        Ok(weights)
    }

    pub fn band_limit(&self) -> usize {
        self.band_limit
    }

    pub fn spin(&self) -> i32 {
        self.spin
    }

    /// w(m′) for |m′| ≤ 2(L−1).
    pub fn w(&self, m_prime: i64) -> Complex64 {
        let off = 2 * (self.band_limit as i64 - 1);
        self.w[(m_prime + off) as usize]
    }

    pub fn v(&self) -> &[Complex64] {
        &self.v
    }

    pub fn q(&self) -> &[Complex64] {
        &self.q
    }

    /// Largest imaginary part over v and q.
    pub fn max_imag(&self) -> f64 {
        self.v
            .iter()
            .chain(&self.q)
            .map(|z| z.im.abs())
            .fold(0.0, f64::max)
    }
}

/// Number of distinct sphere points in the L × L quadrature grid: the L
/// entries on the θ = π ring coincide, leaving L(L−1)+1.
pub fn quadrature_point_count(band_limit: usize) -> usize {
    band_limit * (band_limit - 1) + 1
}

/// (θ_t, φ′_p) of the quadrature grid, ring-major, φ′_p = 2πp/L.
pub fn quadrature_points(band_limit: usize) -> Result<Vec<(f64, f64)>> {
    if band_limit == 0 {
        return Err(Error::InvalidBandLimit);
    }
    let mut out = Vec::with_capacity(band_limit * band_limit);
    for t in 0..band_limit {
        let theta = extended_theta(band_limit, t)?;
        for p in 0..band_limit {
            out.push((theta, 2.0 * PI * p as f64 / band_limit as f64));
        }
    }
    Ok(out)
}

/// I = Σ_t Σ_p f(θ_t, φ′_p) q(θ_t) for samples on the L × L grid.
pub fn integrate(samples: &[Complex64], weights: &QuadWeights) -> Result<Complex64> {
    let l = weights.band_limit;
    if samples.len() != l * l {
        return Err(Error::DimensionMismatch {
            expected: l * l,
            found: samples.len(),
        });
    }
    Ok(samples
        .chunks_exact(l)
        .zip(&weights.q)
        .map(|(ring, &q)| ring.iter().sum::<Complex64>() * q)
        .sum())
}

/// CSV of `theta,v,q,sin_theta,q_minus_sin` over t ∈ 0..2L−1.
///
/// `sin_theta` is sin θ on [0, π) and 0 beyond. `q` and `q_minus_sin` are
/// blank for t ≥ L. `q_minus_sin` is q̂ − sin θ with q̂ = q·L(2L−1)/(4π²), the
/// weight rescaled so that it tends to sin θ.
pub fn weights_csv(weights: &QuadWeights) -> Result<String> {
    let l = weights.band_limit;
    let mut out = String::from("theta,v,q,sin_theta,q_minus_sin\n");
    for (t, v) in weights.v.iter().enumerate() {
        let theta = extended_theta(l, t)?;
        let sin = if theta < PI { theta.sin() } else { 0.0 };
        if t < l {
            let q = weights.q[t].re;
            let diff = q * (l * (2 * l - 1)) as f64 / (4.0 * PI * PI) - sin;
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                fmt_f64(theta),
                fmt_f64(v.re),
                fmt_f64(q),
                fmt_f64(sin),
                fmt_f64(diff)
            );
        } else {
            let _ = writeln!(
                out,
                "{},{},,{},",
                fmt_f64(theta),
                fmt_f64(v.re),
                fmt_f64(sin)
            );
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Composite Gauss-Legendre (8 points per panel) on [0, π] for the real
    /// and imaginary parts of sin θ e^{im′θ}.
    fn numeric_w(m_prime: i64) -> Complex64 {
        const X: [f64; 4] = [
            0.183_434_642_495_649_8,
            0.525_532_409_916_329,
            0.796_666_477_413_626_7,
            0.960_289_856_497_536_3,
        ];
        const W: [f64; 4] = [
            0.362_683_783_378_362,
            0.313_706_645_877_887_3,
            0.222_381_034_453_374_5,
            0.101_228_536_290_376_3,
        ];
        let panels = 64;
        let h = PI / panels as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 0..panels {
            let mid = (k as f64 + 0.5) * h;
            for (x, w) in X.iter().zip(W) {
                for th in [mid - 0.5 * h * x, mid + 0.5 * h * x] {
                    acc += 0.5 * h * w * th.sin() * Complex64::from_polar(1.0, m_prime as f64 * th);
                }
            }
        }
        acc
    }

    #[test]
    fn closed_form_weights() {
        assert_eq!(weight_w(0), Complex64::new(2.0, 0.0));
        assert_eq!(weight_w(1), Complex64::new(0.0, PI / 2.0));
        assert_eq!(weight_w(-1), Complex64::new(0.0, -PI / 2.0));
        assert!((weight_w(2) - Complex64::new(-2.0 / 3.0, 0.0)).norm() < 1e-16);
        assert_eq!(weight_w(3), Complex64::new(0.0, 0.0));
        assert_eq!(weight_w(-7), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn weights_match_numerical_integral() {
        for k in -20..=20 {
            let d = (weight_w(k) - numeric_w(k)).norm();
            assert!(d < 1e-12, "w({k}) off by {d:e}");
        }
    }

    #[test]
    fn weights_conjugate_symmetric() {
        for k in 0..50 {
            assert_eq!(weight_w(-k), weight_w(k).conj());
        }
    }

    #[test]
    fn single_sample_rule() {
        let v = ring_weights_v(1).unwrap();
        assert_eq!(v, vec![Complex64::new(2.0, 0.0)]);
        let w = QuadWeights::new(1, 0).unwrap();
        assert!((w.q()[0].re - 4.0 * PI).abs() < 1e-15);
        let i = integrate(&[Complex64::new(1.0, 0.0)], &w).unwrap();
        assert!((i.re - 4.0 * PI).abs() < 1e-15);
    }

    #[test]
    fn kronecker_guard_and_spin_sign() {
        for l in [2usize, 5, 17] {
            let v = ring_weights_v(l).unwrap();
            let q0 = quad_weights_q(l, 0).unwrap();
            let q1 = quad_weights_q(l, 1).unwrap();
            let last = l - 1;
            let expect = v[last] * (2.0 * PI / l as f64);
            assert!((q0[last] - expect).norm() < 1e-15);
            assert!((q1[last] - expect).norm() < 1e-15);
            for t in 0..last {
                let sum = q0[t] + q1[t];
                assert!((sum - v[t] * (4.0 * PI / l as f64)).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn v_is_real_and_recovers_w() {
        let l = 64;
        let v = ring_weights_v(l).unwrap();
        let n = 2 * l - 1;
        assert!(v.iter().all(|z| z.im.abs() <= 1e-14));
        // Forward DFT on the offset grid recovers w(−m′).
        let lm = l as i64 - 1;
        for mp in -lm..=lm {
            let mut acc = Complex64::new(0.0, 0.0);
            for (t, vt) in v.iter().enumerate() {
                let th = extended_theta(l, t).unwrap();
                acc += vt * Complex64::from_polar(1.0, -(mp as f64) * th);
            }
            assert!((acc - weight_w(-mp)).norm() < 1e-13, "m' {mp}");
        }
        assert_eq!(v.len(), n);
    }

    #[test]
    fn unity_integrates_to_sphere_area() {
        for l in 1..=64 {
            let w = QuadWeights::new(l, 0).unwrap();
            let total: f64 = w.q().iter().map(|z| z.re).sum::<f64>() * l as f64;
            assert!((total - 4.0 * PI).abs() < 1e-12, "L={l}");
            let ones = vec![Complex64::new(1.0, 0.0); l * l];
            let i = integrate(&ones, &w).unwrap();
            assert!((i - Complex64::new(4.0 * PI, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn v_tracks_sine_profile() {
        let mean_err = |l: usize| {
            let v = ring_weights_v(l).unwrap();
            let scale = (2 * l - 1) as f64 / (2.0 * PI);
            let mut acc = 0.0;
            for (t, vt) in v.iter().enumerate() {
                let th = extended_theta(l, t).unwrap();
                let target = if th < PI { th.sin() } else { 0.0 };
                acc += (vt.re * scale - target).abs();
            }
            acc / v.len() as f64
        };
        let e4 = mean_err(4);
        let e16 = mean_err(16);
        let e64 = mean_err(64);
        assert!(e16 < e4 && e64 < e16, "{e4} {e16} {e64}");
    }

    #[test]
    fn shape_errors() {
        let w = QuadWeights::new(4, 0).unwrap();
        assert!(matches!(
            integrate(&[Complex64::new(0.0, 0.0); 15], &w),
            Err(Error::DimensionMismatch {
                expected: 16,
                found: 15
            })
        ));
        assert!(ring_weights_v(0).is_err());
        assert_eq!(quadrature_point_count(4), 13);
        assert_eq!(quadrature_points(4).unwrap().len(), 16);
    }

    #[test]
    fn csv_layout() {
        let csv = weights_csv(&QuadWeights::new(4, 0).unwrap()).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "theta,v,q,sin_theta,q_minus_sin");
        assert_eq!(lines.len(), 1 + 7);
        let with_q = lines[1..].iter().filter(|l| !l.contains(",,")).count();
        assert_eq!(with_q, 4);
    }
}
