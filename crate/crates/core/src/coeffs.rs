//! Harmonic coefficients and sampled signals.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Flat index ℓ(ℓ+1)+m of coefficient (ℓ, m).
#[inline]
pub fn flat_index(ell: usize, m: i32) -> usize {
    debug_assert!(m.unsigned_abs() as usize <= ell);
    ((ell * (ell + 1)) as isize + m as isize) as usize
}

pub(crate) fn check_spin(band_limit: usize, spin: i32) -> Result<()> {
    if band_limit == 0 {
        return Err(Error::InvalidBandLimit);
    }
    if spin.unsigned_abs() as usize >= band_limit {
        return Err(Error::InvalidSpin { spin, band_limit });
    }
    Ok(())
}

/// Spin-s harmonic coefficients ₛf_{ℓm} for 0 ≤ ℓ < L, |m| ≤ ℓ.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicCoeffs {
    band_limit: usize,
    spin: i32,
    values: Vec<Complex64>,
}

impl HarmonicCoeffs {
    pub fn zeros(band_limit: usize, spin: i32) -> Result<Self> {
        check_spin(band_limit, spin)?;
        Ok(Self {
            band_limit,
            spin,
            values: vec![Complex64::new(0.0, 0.0); band_limit * band_limit],
        })
    }

    /// Wrap `values` (length L², flat-indexed). Entries with ℓ < |s| must be zero.
    pub fn from_values(band_limit: usize, spin: i32, values: Vec<Complex64>) -> Result<Self> {
        check_spin(band_limit, spin)?;
        if values.len() != band_limit * band_limit {
            return Err(Error::DimensionMismatch {
                expected: band_limit * band_limit,
                found: values.len(),
            });
        }
        let c = Self {
            band_limit,
            spin,
            values,
        };
        c.check_below_spin()?;
        Ok(c)
    }

    /// Unit vector e_{ℓm}.
    pub fn unit(band_limit: usize, spin: i32, ell: usize, m: i32) -> Result<Self> {
        let mut c = Self::zeros(band_limit, spin)?;
        if ell >= band_limit || m.unsigned_abs() as usize > ell {
            return Err(Error::IndexOutOfRange {
                index: ell,
                max: band_limit - 1,
            });
        }
        if ell < spin.unsigned_abs() as usize {
            return Err(Error::NonzeroBelowSpin { ell, m, spin });
        }
        c.values[flat_index(ell, m)] = Complex64::new(1.0, 0.0);
        Ok(c)
    }

    pub fn band_limit(&self) -> usize {
        self.band_limit
    }

    pub fn spin(&self) -> i32 {
        self.spin
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [Complex64] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    #[inline]
    pub fn get(&self, ell: usize, m: i32) -> Complex64 {
        self.values[flat_index(ell, m)]
    }

    #[inline]
    pub fn set(&mut self, ell: usize, m: i32, v: Complex64) {
        self.values[flat_index(ell, m)] = v;
    }

    pub(crate) fn check_below_spin(&self) -> Result<()> {
        let smax = self.spin.unsigned_abs() as usize;
        for ell in 0..smax.min(self.band_limit) {
            let l = ell as i32;
            for m in -l..=l {
                if self.get(ell, m) != Complex64::new(0.0, 0.0) {
                    return Err(Error::NonzeroBelowSpin {
                        ell,
                        m,
                        spin: self.spin,
                    });
                }
            }
        }
        Ok(())
    }

    /// max_{ℓm} |a_{ℓm} − b_{ℓm}|.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.values.len(), other.values.len());
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest deviation from f*_{ℓm} = (−1)^m f_{ℓ,−m}.
    pub fn reality_deviation(&self) -> f64 {
        let mut worst = 0.0f64;
        for ell in 0..self.band_limit {
            let l = ell as i32;
            for m in 0..=l {
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                let d = (self.get(ell, m).conj() - sign * self.get(ell, -m)).norm();
                worst = worst.max(d);
            }
        }
        worst
    }
}

/// Complex samples on an L × (2L−1) ring grid, θ outer, φ inner.
///
/// Shared by the equiangular and Gauss-Legendre samplings, which differ only
/// in their θ nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct RingSamples {
    band_limit: usize,
    spin: i32,
    samples: Vec<Complex64>,
}

impl RingSamples {
    pub fn zeros(band_limit: usize, spin: i32) -> Result<Self> {
        check_spin(band_limit, spin)?;
        Ok(Self {
            band_limit,
            spin,
            samples: vec![Complex64::new(0.0, 0.0); band_limit * (2 * band_limit - 1)],
        })
    }

    pub fn from_samples(band_limit: usize, spin: i32, samples: Vec<Complex64>) -> Result<Self> {
        check_spin(band_limit, spin)?;
        let expected = band_limit * (2 * band_limit - 1);
        if samples.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: samples.len(),
            });
        }
        Ok(Self {
            band_limit,
            spin,
            samples,
        })
    }

    pub fn band_limit(&self) -> usize {
        self.band_limit
    }

    pub fn spin(&self) -> i32 {
        self.spin
    }

    pub fn n_theta(&self) -> usize {
        self.band_limit
    }

    pub fn n_phi(&self) -> usize {
        2 * self.band_limit - 1
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn samples_mut(&mut self) -> &mut [Complex64] {
        &mut self.samples
    }

    pub fn into_samples(self) -> Vec<Complex64> {
        self.samples
    }

    #[inline]
    pub fn get(&self, t: usize, p: usize) -> Complex64 {
        self.samples[t * self.n_phi() + p]
    }

    pub fn ring(&self, t: usize) -> &[Complex64] {
        let w = self.n_phi();
        &self.samples[t * w..(t + 1) * w]
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.samples.len(), other.samples.len());
        self.samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Samples on the equiangular grid θ_t = π(2t+1)/(2L−1), φ_p = 2πp/(2L−1).
pub type MwSignal = RingSamples;

/// Real samples of a spin-0 signal on the equiangular grid.
#[derive(Debug, Clone, PartialEq)]
pub struct RealMwSignal {
    band_limit: usize,
    samples: Vec<f64>,
}

impl RealMwSignal {
    pub fn from_samples(band_limit: usize, samples: Vec<f64>) -> Result<Self> {
        if band_limit == 0 {
            return Err(Error::InvalidBandLimit);
        }
        let expected = band_limit * (2 * band_limit - 1);
        if samples.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: samples.len(),
            });
        }
        Ok(Self {
            band_limit,
            samples,
        })
    }

    /// Real part of a complex signal; fails unless the spin is 0 and every
    /// imaginary part is exactly zero.
    pub fn from_complex(signal: &MwSignal) -> Result<Self> {
        if signal.spin() != 0 {
            return Err(Error::UnsupportedSpin(signal.spin()));
        }
        let worst = signal
            .samples()
            .iter()
            .map(|z| z.im.abs())
            .fold(0.0, f64::max);
        if worst != 0.0 {
            return Err(Error::SymmetryViolation { deviation: worst });
        }
        Self::from_samples(
            signal.band_limit(),
            signal.samples().iter().map(|z| z.re).collect(),
        )
    }

    pub fn to_complex(&self) -> MwSignal {
        MwSignal::from_samples(
            self.band_limit,
            0,
            self.samples
                .iter()
                .map(|&x| Complex64::new(x, 0.0))
                .collect(),
        )
        .expect("shape already validated")
    }

    pub fn band_limit(&self) -> usize {
        self.band_limit
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    #[inline]
    pub fn get(&self, t: usize, p: usize) -> f64 {
        self.samples[t * (2 * self.band_limit - 1) + p]
    }
}
