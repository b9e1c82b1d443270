//! Gauss-Legendre sampling: L rings at the roots of P_L(cos θ), 2L−1 equispaced
//! longitudes, and the separation-of-variables transforms built on it.
//!
//! Used as the comparator for the equiangular transforms. The d-functions
//! come from the pointwise three-term recursion in ℓ, which loses accuracy
//! somewhere between L = 1024 and L = 2048; larger band-limits are refused
//! unless explicitly allowed.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::coeffs::{check_spin, HarmonicCoeffs, RingSamples};
use crate::error::{Error, Result};
use crate::wigner::row_three_term;

/// Largest band-limit accepted without an explicit override.
pub const GL_STABLE_LIMIT: usize = 1024;

const MAX_NEWTON_ITERATIONS: usize = 100;
const NEWTON_TOLERANCE: f64 = 1e-15;

/// Samples on the Gauss-Legendre grid, θ outer, φ inner.
pub type GlSignal = RingSamples;

/// (P_L(x), P′_L(x)) from the upward recurrence.
fn legendre_with_derivative(degree: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if degree == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=degree {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = degree as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Nodes x_i = cos θ_i (decreasing) and weights λ_i of L-point Gauss-Legendre
/// quadrature, with θ_i and the longitudes φ_p = 2πp/(2L−1).
#[derive(Debug, Clone, PartialEq)]
pub struct GlGrid {
    band_limit: usize,
    nodes: Vec<f64>,
    weights: Vec<f64>,
    thetas: Vec<f64>,
    phis: Vec<f64>,
}

impl GlGrid {
    /// Newton refinement from the Chebyshev-angle guess cos(π(i + ¾)/(L + ½)).
    pub fn new(band_limit: usize) -> Result<Self> {
        if band_limit == 0 {
            return Err(Error::InvalidBandLimit);
        }
        let l = band_limit;
        let mut nodes = vec![0.0; l];
        let mut weights = vec![0.0; l];
        for i in 0..l.div_ceil(2) {
            let mut x = (PI * (i as f64 + 0.75) / (l as f64 + 0.5)).cos();
            let mut converged = false;
            for _ in 0..MAX_NEWTON_ITERATIONS {
                let (p, dp) = legendre_with_derivative(l, x);
                let step = p / dp;
                x -= step;
                if step.abs() <= NEWTON_TOLERANCE || p.abs() <= NEWTON_TOLERANCE {
                    converged = true;
                    break;
                }
            }
            if !converged {
                return Err(Error::NonConvergence {
                    index: i,
                    band_limit: l,
                });
            }
            let (_, dp) = legendre_with_derivative(l, x);
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = x;
            nodes[l - 1 - i] = -x;
            weights[i] = w;
            weights[l - 1 - i] = w;
        }
        if l % 2 == 1 {
            nodes[l / 2] = 0.0;
        }
        let n = 2 * l - 1;
        Ok(Self {
            band_limit,
            thetas: nodes.iter().map(|x| x.acos()).collect(),
            phis: (0..n).map(|p| 2.0 * PI * p as f64 / n as f64).collect(),
            nodes,
            weights,
        })
    }

    pub fn band_limit(&self) -> usize {
        self.band_limit
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn thetas(&self) -> &[f64] {
        &self.thetas
    }

    pub fn phis(&self) -> &[f64] {
        &self.phis
    }

    /// (θ, φ) pairs, ring-major.
    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.thetas
            .iter()
            .flat_map(move |&th| self.phis.iter().map(move |&ph| (th, ph)))
    }

    /// Σ_i λ_i g(x_i).
    pub fn integrate<F: Fn(f64) -> f64>(&self, g: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * g(x))
            .sum()
    }
}

/// Forward and inverse spin transforms on the Gauss-Legendre grid.
#[derive(Clone)]
pub struct GlTransform {
    grid: GlGrid,
    fft: Arc<dyn Fft<f64>>,
    ifft: Arc<dyn Fft<f64>>,
    norms: Vec<f64>,
}

impl std::fmt::Debug for GlTransform {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GlTransform")
            .field("band_limit", &self.grid.band_limit)
            .finish()
    }
}

impl GlTransform {
    /// Fails with [`Error::UnstableBandLimit`] above [`GL_STABLE_LIMIT`].
    pub fn new(band_limit: usize) -> Result<Self> {
        Self::with_override(band_limit, false)
    }

    /// As [`new`](Self::new), optionally accepting band-limits beyond the
    /// stable range of the d-recursion.
    pub fn with_override(band_limit: usize, allow_unstable: bool) -> Result<Self> {
        if band_limit > GL_STABLE_LIMIT && !allow_unstable {
            return Err(Error::UnstableBandLimit {
                band_limit,
                limit: GL_STABLE_LIMIT,
            });
        }
        let grid = GlGrid::new(band_limit)?;
        let n = 2 * band_limit - 1;
        let mut planner = FftPlanner::new();
        Ok(Self {
            grid,
            fft: planner.plan_fft_forward(n),
            ifft: planner.plan_fft_inverse(n),
            norms: (0..band_limit)
                .map(|l| ((2 * l + 1) as f64 / (4.0 * PI)).sqrt())
                .collect(),
        })
    }

    pub fn grid(&self) -> &GlGrid {
        &self.grid
    }

    fn check(&self, band_limit: usize, spin: i32) -> Result<()> {
        check_spin(band_limit, spin)?;
        if band_limit != self.grid.band_limit {
            return Err(Error::DimensionMismatch {
                expected: self.grid.band_limit,
                found: band_limit,
            });
        }
        Ok(())
    }

    /// f_{ℓm} = (−1)^s √((2ℓ+1)/4π) Σ_i λ_i d^ℓ_{m,−s}(θ_i) G_m(θ_i).
    pub fn forward(&self, signal: &GlSignal) -> Result<HarmonicCoeffs> {
        let l = self.grid.band_limit;
        let s = signal.spin();
        self.check(signal.band_limit(), s)?;
        let n = 2 * l - 1;
        let mut rings = signal.samples().to_vec();
        self.fft.process(&mut rings);
        let spin_sign = if s % 2 == 0 { 1.0 } else { -1.0 };
        let ring_scale = 2.0 * PI / n as f64;
        let mut out = HarmonicCoeffs::zeros(l, s)?;
        let lm = l as i32 - 1;
        for m in -lm..=lm {
            let k = m.rem_euclid(n as i32) as usize;
            let start = m.unsigned_abs().max(s.unsigned_abs()) as usize;
            for (i, (&theta, &weight)) in
                self.grid.thetas.iter().zip(&self.grid.weights).enumerate()
            {
                let g = rings[i * n + k] * (weight * ring_scale * spin_sign);
                let d = row_three_term(l, m, -s, theta);
                for (off, dv) in d.iter().enumerate() {
                    let ell = start + off;
                    let cur = out.get(ell, m);
                    out.set(ell, m, cur + g * (dv * self.norms[ell]));
                }
            }
        }
        Ok(out)
    }

    /// f(θ_i, φ_p) = Σ_m e^{imφ_p} Σ_ℓ f_{ℓm} (−1)^s √((2ℓ+1)/4π) d^ℓ_{m,−s}(θ_i).
    pub fn inverse(&self, coeffs: &HarmonicCoeffs) -> Result<GlSignal> {
        let l = self.grid.band_limit;
        let s = coeffs.spin();
        self.check(coeffs.band_limit(), s)?;
        coeffs.check_below_spin()?;
        let n = 2 * l - 1;
        let spin_sign = if s % 2 == 0 { 1.0 } else { -1.0 };
        let mut samples = vec![Complex64::new(0.0, 0.0); l * n];
        let lm = l as i32 - 1;
        for m in -lm..=lm {
            let k = m.rem_euclid(n as i32) as usize;
            let start = m.unsigned_abs().max(s.unsigned_abs()) as usize;
            for (i, &theta) in self.grid.thetas.iter().enumerate() {
                let d = row_three_term(l, m, -s, theta);
                let mut acc = Complex64::new(0.0, 0.0);
                for (off, dv) in d.iter().enumerate() {
                    let ell = start + off;
                    acc += coeffs.get(ell, m) * (dv * self.norms[ell]);
                }
                samples[i * n + k] = acc * spin_sign;
            }
        }
        self.ifft.process(&mut samples);
        GlSignal::from_samples(l, s, samples)
    }
}

/// One-shot [`GlTransform::forward`].
pub fn gl_forward(signal: &GlSignal) -> Result<HarmonicCoeffs> {
    GlTransform::new(signal.band_limit())?.forward(signal)
}

/// One-shot [`GlTransform::inverse`].
pub fn gl_inverse(coeffs: &HarmonicCoeffs) -> Result<GlSignal> {
    GlTransform::new(coeffs.band_limit())?.inverse(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rules() {
        let g = GlGrid::new(1).unwrap();
        assert_eq!(g.nodes(), &[0.0]);
        assert!((g.weights()[0] - 2.0).abs() < 1e-15);

        let g = GlGrid::new(2).unwrap();
        let r = 1.0 / 3f64.sqrt();
        assert!((g.nodes()[0] - r).abs() < 1e-15);
        assert!((g.nodes()[1] + r).abs() < 1e-15);
        assert!(g.weights().iter().all(|w| (w - 1.0).abs() < 1e-14));
    }

    #[test]
    fn grid_invariants() {
        for l in [3usize, 10, 64, 255] {
            let g = GlGrid::new(l).unwrap();
            assert!((g.weights().iter().sum::<f64>() - 2.0).abs() < 1e-13);
            assert!((g.integrate(|x| x * x) - 2.0 / 3.0).abs() < 1e-13);
            for i in 0..l {
                assert!(g.nodes()[i].abs() < 1.0);
                assert!((g.nodes()[i] + g.nodes()[l - 1 - i]).abs() < 1e-13);
                if i + 1 < l {
                    assert!(g.nodes()[i] > g.nodes()[i + 1]);
                }
                // Near x = ±1, |P′_L| grows like L², so the residual of the
                // correctly rounded root scales with it; check the Newton step.
                let (p, dp) = legendre_with_derivative(l, g.nodes()[i]);
                assert!((p / dp).abs() <= 1e-15, "L={l} i={i} P={p:e}");
                if l <= 10 {
                    assert!(p.abs() <= 1e-14);
                }
            }
        }
    }

    #[test]
    fn unstable_band_limit_refused() {
        assert!(matches!(
            GlTransform::new(1025),
            Err(Error::UnstableBandLimit {
                band_limit: 1025,
                limit: 1024
            })
        ));
    }

    #[test]
    fn monopole_and_dipole() {
        let l = 6;
        let t = GlTransform::new(l).unwrap();
        let f = t
            .inverse(&HarmonicCoeffs::unit(l, 0, 0, 0).unwrap())
            .unwrap();
        let y00 = 1.0 / (4.0 * PI).sqrt();
        assert!(f.samples().iter().all(|z| (z - y00).norm() < 1e-14));
        let f = t
            .inverse(&HarmonicCoeffs::unit(l, 0, 1, 0).unwrap())
            .unwrap();
        for (i, x) in t.grid().nodes().iter().enumerate() {
            let expect = (3.0 / (4.0 * PI)).sqrt() * x;
            assert!(f.ring(i).iter().all(|z| (z - expect).norm() < 1e-14));
        }
        let ones =
            GlSignal::from_samples(l, 0, vec![Complex64::new(1.0, 0.0); l * (2 * l - 1)]).unwrap();
        let c = t.forward(&ones).unwrap();
        assert!((c.get(0, 0).re - (4.0 * PI).sqrt()).abs() < 1e-11);
        assert!(c.values()[1..].iter().all(|z| z.norm() < 1e-11));
    }
}
