mod common;

use std::f64::consts::PI;

use common::random_coeffs;
use mwsht::grid::extended_theta;
use mwsht::oracle::naive_basis_value;
use mwsht::quadrature::{integrate, quadrature_point_count, quadrature_points};
use mwsht::{GlGrid, HarmonicCoeffs, MwTransform, QuadWeights};
use num_complex::Complex64;

/// Samples of the band-limited signal on the L × L grid (θ_t, 2πp/L).
fn sample_reduced_grid(t: &MwTransform, c: &HarmonicCoeffs) -> Vec<Complex64> {
    let l = c.band_limit();
    let rings = t.theta_ifft(&t.compute_fmm(c).unwrap()).unwrap();
    let lm = l as i32 - 1;
    let mut out = Vec::with_capacity(l * l);
    for tt in 0..l {
        for p in 0..l {
            let phi = 2.0 * PI * p as f64 / l as f64;
            let mut acc = Complex64::new(0.0, 0.0);
            for m in -lm..=lm {
                acc += rings.get(m, tt) * Complex64::from_polar(1.0, m as f64 * phi);
            }
            out.push(acc);
        }
    }
    out
}

#[test]
fn fft_sampling_matches_direct_sum() {
    for l in [1usize, 2, 5, 12] {
        let t = MwTransform::new(l).unwrap();
        for s in [0i32, 1] {
            if s as usize >= l {
                continue;
            }
            let c = random_coeffs(l, s, 3);
            let fast = t.inverse_quadrature_grid(&c).unwrap();
            let slow = sample_reduced_grid(&t, &c);
            let err = fast
                .iter()
                .zip(&slow)
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max);
            assert!(err < 1e-12, "L={l} s={s}: {err}");
        }
    }
}

#[test]
fn scalar_integrals_are_exact() {
    for l in [4usize, 16, 32] {
        let t = MwTransform::new(l).unwrap();
        let w = QuadWeights::new(l, 0).unwrap();
        for seed in 0..10 {
            let c = random_coeffs(l, 0, seed);
            let got = integrate(&t.inverse_quadrature_grid(&c).unwrap(), &w).unwrap();
            let expect = c.get(0, 0) * (4.0 * PI).sqrt();
            assert!((got - expect).norm() <= 1e-11 * (1.0 + c.get(0, 0).norm()));
        }
    }
}

#[test]
fn dipole_integrates_to_zero() {
    let l = 8;
    let t = MwTransform::new(l).unwrap();
    let f = sample_reduced_grid(&t, &HarmonicCoeffs::unit(l, 0, 1, 0).unwrap());
    let got = integrate(&f, &QuadWeights::new(l, 0).unwrap()).unwrap();
    assert!(got.norm() < 1e-12);
}

/// ∫ f dΩ = 2π ∫₀^π F₀(θ) sin θ dθ for the m = 0 part, by high-order
/// Gauss-Legendre in θ (the integrand is a trigonometric polynomial in θ,
/// not a polynomial in cos θ, when s is odd).
fn reference_integral(c: &HarmonicCoeffs) -> Complex64 {
    let l = c.band_limit();
    let s = c.spin();
    let gl = GlGrid::new(4 * l + 16).unwrap();
    let mut acc = Complex64::new(0.0, 0.0);
    for (&x, &w) in gl.nodes().iter().zip(gl.weights()) {
        let theta = 0.5 * PI * (x + 1.0);
        let mut f0 = Complex64::new(0.0, 0.0);
        for ell in s.unsigned_abs() as usize..l {
            f0 += c.get(ell, 0) * naive_basis_value(ell, 0, s, theta, 0.0).unwrap().re;
        }
        acc += f0 * (w * 0.5 * PI * theta.sin());
    }
    acc * (2.0 * PI)
}

#[test]
fn spin_weights_integrate_spin_signals() {
    let l = 12;
    let t = MwTransform::new(l).unwrap();
    for s in [-3i32, -1, 1, 2, 3] {
        let w = QuadWeights::new(l, s).unwrap();
        for seed in 0..5 {
            let c = random_coeffs(l, s, 40 + seed);
            let got = integrate(&sample_reduced_grid(&t, &c), &w).unwrap();
            let expect = reference_integral(&c);
            assert!(
                (got - expect).norm() < 1e-11 * (1.0 + expect.norm()),
                "s={s}: {got} vs {expect}"
            );
        }
    }
}

#[test]
fn reduced_grid_shape() {
    for l in [1usize, 2, 5, 9] {
        let pts = quadrature_points(l).unwrap();
        assert_eq!(pts.len(), l * l);
        let south = pts.iter().filter(|(th, _)| *th == PI).count();
        assert_eq!(south, l);
        assert_eq!(pts.len() - south + 1, quadrature_point_count(l));
        assert_eq!(extended_theta(l, l - 1).unwrap(), PI);
    }
}
