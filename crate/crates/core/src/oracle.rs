//! Slow reference transforms for validating the FFT pipeline at small L.
//!
//! Nothing here calls into the transform code: DFTs are explicit loops, the
//! weighted convolution is a literal double sum, and every d-function value
//! comes from the Jacobi closed form.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::coeffs::{HarmonicCoeffs, MwSignal};
use crate::error::{Error, Result};
use crate::wigner::{jacobi_value, JACOBI_MAX_DEGREE};

/// Largest band-limit accepted by [`naive_inverse`] and [`naive_forward`].
pub const ORACLE_MAX_BAND_LIMIT: usize = 32;

fn check_band_limit(band_limit: usize) -> Result<()> {
    if band_limit > ORACLE_MAX_BAND_LIMIT {
        return Err(Error::UnsupportedDegree {
            ell: band_limit - 1,
            max: ORACLE_MAX_BAND_LIMIT - 1,
        });
    }
    Ok(())
}

fn sign(k: i32) -> f64 {
    if k.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

fn theta(band_limit: usize, t: usize) -> f64 {
    PI * (2 * t + 1) as f64 / (2 * band_limit - 1) as f64
}

fn phi(band_limit: usize, p: usize) -> f64 {
    2.0 * PI * p as f64 / (2 * band_limit - 1) as f64
}

/// ₛY_{ℓm}(θ, φ) = (−1)^s √((2ℓ+1)/4π) e^{imφ} d^ℓ_{m,−s}(θ).
pub fn naive_basis_value(ell: usize, m: i32, spin: i32, theta: f64, phi: f64) -> Result<Complex64> {
    if ell > JACOBI_MAX_DEGREE {
        return Err(Error::UnsupportedDegree {
            ell,
            max: JACOBI_MAX_DEGREE,
        });
    }
    let bound = m.unsigned_abs().max(spin.unsigned_abs()) as usize;
    if bound > ell {
        return Err(Error::IndexOutOfRange {
            index: bound,
            max: ell,
        });
    }
    let d = jacobi_value(ell, m, -spin, theta)?;
    let norm = ((2 * ell + 1) as f64 / (4.0 * PI)).sqrt();
    Ok(Complex64::from_polar(sign(spin) * norm * d, m as f64 * phi))
}

/// Direct evaluation of Σ_{ℓm} f_{ℓm} ₛY_{ℓm} at every equiangular grid point.
pub fn naive_inverse(coeffs: &HarmonicCoeffs) -> Result<MwSignal> {
    let l = coeffs.band_limit();
    check_band_limit(l)?;
    let s = coeffs.spin();
    let n = 2 * l - 1;
    let mut samples = Vec::with_capacity(l * n);
    for t in 0..l {
        let th = theta(l, t);
        // Basis values at φ = 0 for this ring; the φ dependence is e^{imφ}.
        let mut ring_basis = Vec::new();
        for ell in s.unsigned_abs() as usize..l {
            let e = ell as i32;
            for m in -e..=e {
                ring_basis.push((ell, m, naive_basis_value(ell, m, s, th, 0.0)?.re));
            }
        }
        for p in 0..n {
            let ph = phi(l, p);
            let mut acc = Complex64::new(0.0, 0.0);
            for &(ell, m, y) in &ring_basis {
                acc += coeffs.get(ell, m) * Complex64::from_polar(y, m as f64 * ph);
            }
            samples.push(acc);
        }
    }
    MwSignal::from_samples(l, s, samples)
}

/// ∫₀^π sin θ e^{ikθ} dθ.
fn sine_weight(k: i32) -> Complex64 {
    if k.abs() == 1 {
        Complex64::new(0.0, k as f64 * PI / 2.0)
    } else if k % 2 != 0 {
        Complex64::new(0.0, 0.0)
    } else {
        Complex64::new(2.0 / (1.0 - (k * k) as f64), 0.0)
    }
}

/// Forward transform by the same chain of sums as the fast transform, each
/// evaluated directly.
pub fn naive_forward(signal: &MwSignal) -> Result<HarmonicCoeffs> {
    let l = signal.band_limit();
    check_band_limit(l)?;
    let s = signal.spin();
    let n = 2 * l - 1;
    let lm = l as i32 - 1;
    let side = n;
    let idx = |m: i32| (m + lm) as usize;

    // G_m(θ_t), t on the extended range.
    let mut g = vec![Complex64::new(0.0, 0.0); side * n];
    for t in 0..l {
        for m in -lm..=lm {
            let mut acc = Complex64::new(0.0, 0.0);
            for p in 0..n {
                acc += signal.get(t, p) * Complex64::from_polar(1.0, -(m as f64) * phi(l, p));
            }
            g[idx(m) * n + t] = acc * (2.0 * PI / n as f64);
        }
    }
    for m in -lm..=lm {
        for t in l..n {
            g[idx(m) * n + t] = g[idx(m) * n + (n - 1 - t)] * sign(m + s);
        }
    }

    // F_{mm′}.
    let mut f = vec![Complex64::new(0.0, 0.0); side * side];
    for m in -lm..=lm {
        for mp in -lm..=lm {
            let mut acc = Complex64::new(0.0, 0.0);
            for t in 0..n {
                acc += g[idx(m) * n + t] * Complex64::from_polar(1.0, -(mp as f64) * theta(l, t));
            }
            f[idx(m) * side + idx(mp)] = acc / (2.0 * PI * n as f64);
        }
    }

    // G_{mm′} = 2π Σ_{m″} F_{mm″} w(m″ − m′).
    let mut gmm = vec![Complex64::new(0.0, 0.0); side * side];
    for m in -lm..=lm {
        for mp in -lm..=lm {
            let mut acc = Complex64::new(0.0, 0.0);
            for mpp in -lm..=lm {
                acc += f[idx(m) * side + idx(mpp)] * sine_weight(mpp - mp);
            }
            gmm[idx(m) * side + idx(mp)] = acc * (2.0 * PI);
        }
    }

    let mut out = HarmonicCoeffs::zeros(l, s)?;
    for ell in s.unsigned_abs() as usize..l {
        let e = ell as i32;
        let norm = ((2 * ell + 1) as f64 / (4.0 * PI)).sqrt();
        let delta_s: Vec<f64> = (-e..=e)
            .map(|mp| jacobi_value(ell, mp, -s, PI / 2.0))
            .collect::<Result<_>>()?;
        for m in -e..=e {
            let mut acc = Complex64::new(0.0, 0.0);
            for mp in -e..=e {
                let d = jacobi_value(ell, mp, m, PI / 2.0)? * delta_s[(mp + e) as usize];
                acc += gmm[idx(m) * side + idx(mp)] * d;
            }
            let phase = Complex64::new(0.0, 1.0).powi(m + s) * sign(s);
            out.set(ell, m, acc * phase * norm);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_order_values() {
        let y = naive_basis_value(0, 0, 0, 1.0, 2.0).unwrap();
        assert!((y.re - 0.282_094_791_773_878_1).abs() < 1e-15 && y.im == 0.0);
        for th in [0.1, 1.0, 2.5] {
            let y = naive_basis_value(1, 0, 0, th, 0.7).unwrap();
            assert!((y.re - (3.0 / (4.0 * PI)).sqrt() * th.cos()).abs() < 1e-15);
        }
        assert!(naive_basis_value(1, 0, 2, 0.3, 0.0).is_err());
        assert!(naive_basis_value(65, 0, 0, 0.3, 0.0).is_err());
    }

    #[test]
    fn conjugate_symmetry() {
        let (th, ph) = (0.83, 2.1);
        for ell in 0..8usize {
            let e = ell as i32;
            for s in -e.min(3)..=e.min(3) {
                for m in -e..=e {
                    let a = naive_basis_value(ell, m, s, th, ph).unwrap().conj();
                    let b = naive_basis_value(ell, -m, -s, th, ph).unwrap() * sign(s + m);
                    assert!((a - b).norm() < 1e-13);
                }
            }
        }
    }

    #[test]
    fn monopole_and_caps() {
        let f = naive_inverse(&HarmonicCoeffs::unit(3, 0, 0, 0).unwrap()).unwrap();
        assert!(f
            .samples()
            .iter()
            .all(|z| (z.re - 0.5 / PI.sqrt()).abs() < 1e-15));
        assert!(naive_inverse(&HarmonicCoeffs::zeros(33, 0).unwrap()).is_err());
        let zero = MwSignal::zeros(4, 1).unwrap();
        assert!(naive_forward(&zero)
            .unwrap()
            .values()
            .iter()
            .all(|z| z.norm() == 0.0));
    }
}
