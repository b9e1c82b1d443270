//! Forward and inverse spin spherical harmonic transforms on the equiangular
//! grid.
//!
//! The forward transform runs
//! [`phi_fft`](MwTransform::phi_fft) → [`periodic_extend`] →
//! [`theta_fft`](MwTransform::theta_fft) →
//! [`weighted_convolution`](MwTransform::weighted_convolution) →
//! [`assemble_flm`](MwTransform::assemble_flm); the inverse runs
//! [`compute_fmm`](MwTransform::compute_fmm) →
//! [`theta_ifft`](MwTransform::theta_ifft) →
//! [`phi_ifft`](MwTransform::phi_ifft).
//!
//! FFTs are unnormalised with e^{−i·} in the forward direction; every 1/N and
//! 2π factor is applied explicitly. The extended θ samples sit half a sample
//! off the DFT grid, θ_t = 2πt/N + π/N, so each θ-direction FFT carries a
//! phase e^{∓im′π/N}.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use realfft::{ComplexToReal, RealFftPlanner, RealToComplex};
use rustfft::{Fft, FftPlanner};

use crate::coeffs::{check_spin, HarmonicCoeffs, MwSignal, RealMwSignal};
use crate::error::{Error, Result};
use crate::quadrature::weight_w;
use crate::wigner::{HalfPiPlanes, WignerMethod};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Tolerance on the reality condition accepted by [`MwTransform::inverse_real`],
/// relative to max(1, max |f_ℓm|).
pub const REALITY_TOLERANCE: f64 = 1e-12;

#[inline]
fn parity(k: i64) -> f64 {
    if k.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// i^k.
#[inline]
fn i_pow(k: i64) -> Complex64 {
    match k.rem_euclid(4) {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

#[inline]
fn bin(k: i32, n: usize) -> usize {
    k.rem_euclid(n as i32) as usize
}

/// Per-ring Fourier coefficients G_m(θ_t), stored m-major so that each θ
/// series is contiguous.
///
/// `n_theta` is L for rings on [0, π] and 2L−1 after periodic extension.
#[derive(Debug, Clone, PartialEq)]
pub struct RingCoeffs {
    band_limit: usize,
    spin: i32,
    n_theta: usize,
    values: Vec<Complex64>,
}

impl RingCoeffs {
    pub fn zeros(band_limit: usize, spin: i32, n_theta: usize) -> Result<Self> {
        check_spin(band_limit, spin)?;
        Ok(Self {
            band_limit,
            spin,
            n_theta,
            values: vec![ZERO; (2 * band_limit - 1) * n_theta],
        })
    }

    pub fn band_limit(&self) -> usize {
        self.band_limit
    }

    pub fn spin(&self) -> i32 {
        self.spin
    }

    pub fn n_theta(&self) -> usize {
        self.n_theta
    }

    /// θ series of order m.
    pub fn series(&self, m: i32) -> &[Complex64] {
        let row = (m + self.band_limit as i32 - 1) as usize;
        &self.values[row * self.n_theta..(row + 1) * self.n_theta]
    }

    fn series_mut(&mut self, m: i32) -> &mut [Complex64] {
        let row = (m + self.band_limit as i32 - 1) as usize;
        &mut self.values[row * self.n_theta..(row + 1) * self.n_theta]
    }

    #[inline]
    pub fn get(&self, m: i32, t: usize) -> Complex64 {
        self.series(m)[t]
    }

    pub fn set(&mut self, m: i32, t: usize, v: Complex64) {
        self.series_mut(m)[t] = v;
    }
}

/// Complex plane indexed by m, m′ ∈ [−(L−1), L−1], m-major.
///
/// Holds F_{mm′} (Fourier coefficients of the extended signal) or G_{mm′}
/// (after the weighted convolution).
#[derive(Debug, Clone, PartialEq)]
pub struct FourierPlane {
    band_limit: usize,
    spin: i32,
    values: Vec<Complex64>,
}

impl FourierPlane {
    pub fn zeros(band_limit: usize, spin: i32) -> Result<Self> {
        check_spin(band_limit, spin)?;
        let side = 2 * band_limit - 1;
        Ok(Self {
            band_limit,
            spin,
            values: vec![ZERO; side * side],
        })
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

    /// Row m, columns m′ = −(L−1)..=L−1.
    pub fn row(&self, m: i32) -> &[Complex64] {
        let side = 2 * self.band_limit - 1;
        let r = (m + self.band_limit as i32 - 1) as usize;
        &self.values[r * side..(r + 1) * side]
    }

    fn row_mut(&mut self, m: i32) -> &mut [Complex64] {
        let side = 2 * self.band_limit - 1;
        let r = (m + self.band_limit as i32 - 1) as usize;
        &mut self.values[r * side..(r + 1) * side]
    }

    #[inline]
    pub fn get(&self, m: i32, mp: i32) -> Complex64 {
        self.row(m)[(mp + self.band_limit as i32 - 1) as usize]
    }

    #[inline]
    pub fn set(&mut self, m: i32, mp: i32, v: Complex64) {
        let off = self.band_limit as i32 - 1;
        self.row_mut(m)[(mp + off) as usize] = v;
    }

    /// max |F_{m,−m′} − (−1)^{m+s} F_{mm′}|.
    pub fn symmetry_deviation(&self) -> f64 {
        let lm = self.band_limit as i32 - 1;
        let mut worst = 0.0f64;
        for m in -lm..=lm {
            let sign = parity((m + self.spin) as i64);
            for mp in 1..=lm {
                let d = (self.get(m, -mp) - sign * self.get(m, mp)).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.values.len(), other.values.len());
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// G̃_m(θ_t) on t ∈ 0..2L−1: G_m(θ_t) for t < L, (−1)^{m+s} G_m(θ_{2L−2−t})
/// beyond.
pub fn periodic_extend(rings: &RingCoeffs) -> Result<RingCoeffs> {
    let l = rings.band_limit;
    if rings.n_theta != l {
        return Err(Error::DimensionMismatch {
            expected: l,
            found: rings.n_theta,
        });
    }
    let n = 2 * l - 1;
    let mut out = RingCoeffs::zeros(l, rings.spin, n)?;
    let lm = l as i32 - 1;
    for m in -lm..=lm {
        let sign = parity((m + rings.spin) as i64);
        let src = rings.series(m);
        let dst = out.series_mut(m);
        dst[..l].copy_from_slice(src);
        for t in l..n {
            dst[t] = sign * src[n - 1 - t];
        }
    }
    Ok(out)
}

/// FFT plans, convolution kernel and normalisation tables for one band-limit.
///
/// Reusable across spins and calls; holds no per-call mutable state.
#[derive(Clone)]
pub struct MwTransform {
    band_limit: usize,
    method: WignerMethod,
    fft_n: Arc<dyn Fft<f64>>,
    ifft_n: Arc<dyn Fft<f64>>,
    fft_p: Arc<dyn Fft<f64>>,
    ifft_p: Arc<dyn Fft<f64>>,
    r2c: Arc<dyn RealToComplex<f64>>,
    c2r: Arc<dyn ComplexToReal<f64>>,
    /// b(x_j) = Σ_{|k|≤2L−2} w(−k) e^{ikx_j} on the padded grid x_j = 2πj/P.
    kernel: Vec<Complex64>,
    /// √((2ℓ+1)/4π).
    norms: Vec<f64>,
    /// e^{−im′π/N}, indexed m′ + L − 1.
    theta_phase: Vec<Complex64>,
}

impl std::fmt::Debug for MwTransform {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MwTransform")
            .field("band_limit", &self.band_limit)
            .field("method", &self.method)
            .finish()
    }
}

impl MwTransform {
    pub fn new(band_limit: usize) -> Result<Self> {
        Self::with_method(band_limit, WignerMethod::default())
    }

    pub fn with_method(band_limit: usize, method: WignerMethod) -> Result<Self> {
        if band_limit == 0 {
            return Err(Error::InvalidBandLimit);
        }
        // Fail early rather than part way through a transform.
        HalfPiPlanes::new(band_limit, method)?;
        let n = 2 * band_limit - 1;
        let p = 4 * band_limit - 3;
        let mut planner = FftPlanner::new();
        let mut real_planner = RealFftPlanner::new();
        let ifft_p = planner.plan_fft_inverse(p);

        let wmax = 2 * band_limit as i32 - 2;
        let mut kernel = vec![ZERO; p];
        for k in -wmax..=wmax {
            kernel[bin(k, p)] = weight_w(-k as i64);
        }
        ifft_p.process(&mut kernel);

        let lm = band_limit as i32 - 1;
        Ok(Self {
            band_limit,
            method,
            fft_n: planner.plan_fft_forward(n),
            ifft_n: planner.plan_fft_inverse(n),
            fft_p: planner.plan_fft_forward(p),
            ifft_p,
            r2c: real_planner.plan_fft_forward(n),
            c2r: real_planner.plan_fft_inverse(n),
            kernel,
            norms: (0..band_limit)
                .map(|l| ((2 * l + 1) as f64 / (4.0 * PI)).sqrt())
                .collect(),
            theta_phase: (-lm..=lm)
                .map(|mp| Complex64::from_polar(1.0, -(mp as f64) * PI / n as f64))
                .collect(),
        })
    }

    pub fn band_limit(&self) -> usize {
        self.band_limit
    }

    pub fn method(&self) -> WignerMethod {
        self.method
    }

    fn n(&self) -> usize {
        2 * self.band_limit - 1
    }

    fn check_band_limit(&self, found: usize) -> Result<()> {
        if found != self.band_limit {
            return Err(Error::DimensionMismatch {
                expected: self.band_limit,
                found,
            });
        }
        Ok(())
    }

    /// G_m(θ_t) = (2π/N) Σ_p f(θ_t, φ_p) e^{−imφ_p}.
    pub fn phi_fft(&self, signal: &MwSignal) -> Result<RingCoeffs> {
        self.check_band_limit(signal.band_limit())?;
        let l = self.band_limit;
        let n = self.n();
        let mut buf = signal.samples().to_vec();
        self.fft_n.process(&mut buf);
        let scale = 2.0 * PI / n as f64;
        let mut out = RingCoeffs::zeros(l, signal.spin(), l)?;
        let lm = l as i32 - 1;
        for m in -lm..=lm {
            let k = bin(m, n);
            let dst = out.series_mut(m);
            for (t, d) in dst.iter_mut().enumerate() {
                *d = buf[t * n + k] * scale;
            }
        }
        Ok(out)
    }

    /// [`phi_fft`](Self::phi_fft) for real spin-0 input; only m ≥ 0 is filled.
    fn phi_fft_real(&self, signal: &RealMwSignal) -> Result<RingCoeffs> {
        self.check_band_limit(signal.band_limit())?;
        let l = self.band_limit;
        let n = self.n();
        let scale = 2.0 * PI / n as f64;
        let mut out = RingCoeffs::zeros(l, 0, l)?;
        let mut input = self.r2c.make_input_vec();
        let mut spectrum = self.r2c.make_output_vec();
        let mut scratch = self.r2c.make_scratch_vec();
        for t in 0..l {
            input.copy_from_slice(&signal.samples()[t * n..(t + 1) * n]);
            self.r2c
                .process_with_scratch(&mut input, &mut spectrum, &mut scratch)
                .expect("buffer lengths come from the plan");
            for (m, v) in spectrum.iter().enumerate() {
                out.set(m as i32, t, v * scale);
            }
        }
        Ok(out)
    }

    /// F_{mm′} = (1/(2πN)) Σ_t G̃_m(θ_t) e^{−im′θ_t} over the extended rings.
    pub fn theta_fft(&self, extended: &RingCoeffs) -> Result<FourierPlane> {
        self.theta_fft_rows(extended, -(self.band_limit as i32 - 1))
    }

    fn theta_fft_rows(&self, extended: &RingCoeffs, m_min: i32) -> Result<FourierPlane> {
        self.check_band_limit(extended.band_limit)?;
        let n = self.n();
        if extended.n_theta != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: extended.n_theta,
            });
        }
        let lm = self.band_limit as i32 - 1;
        let scale = 1.0 / (2.0 * PI * n as f64);
        let mut plane = FourierPlane::zeros(self.band_limit, extended.spin)?;
        let mut buf = vec![ZERO; n];
        let mut scratch = vec![ZERO; self.fft_n.get_inplace_scratch_len()];
        for m in m_min..=lm {
            buf.copy_from_slice(extended.series(m));
            self.fft_n.process_with_scratch(&mut buf, &mut scratch);
            let row = plane.row_mut(m);
            for mp in -lm..=lm {
                let idx = (mp + lm) as usize;
                row[idx] = buf[bin(mp, n)] * self.theta_phase[idx] * scale;
            }
        }
        Ok(plane)
    }

    /// G_{mm′} = 2π Σ_{m″} F_{mm″} w(m″ − m′) for |m′| ≤ L−1, evaluated as a
    /// product on the zero-padded grid of size 4L−3.
    pub fn weighted_convolution(&self, fmm: &FourierPlane) -> Result<FourierPlane> {
        self.weighted_convolution_rows(fmm, -(self.band_limit as i32 - 1))
    }

    fn weighted_convolution_rows(&self, fmm: &FourierPlane, m_min: i32) -> Result<FourierPlane> {
        self.check_band_limit(fmm.band_limit)?;
        let p = self.kernel.len();
        let lm = self.band_limit as i32 - 1;
        let scale = 2.0 * PI / p as f64;
        let mut out = FourierPlane::zeros(self.band_limit, fmm.spin)?;
        let mut buf = vec![ZERO; p];
        let mut scratch = vec![
            ZERO;
            self.fft_p
                .get_inplace_scratch_len()
                .max(self.ifft_p.get_inplace_scratch_len())
        ];
        for m in m_min..=lm {
            buf.fill(ZERO);
            for (j, v) in fmm.row(m).iter().enumerate() {
                buf[bin(j as i32 - lm, p)] = *v;
            }
            self.ifft_p.process_with_scratch(&mut buf, &mut scratch);
            for (a, b) in buf.iter_mut().zip(&self.kernel) {
                *a *= b;
            }
            self.fft_p.process_with_scratch(&mut buf, &mut scratch);
            let row = out.row_mut(m);
            for (j, r) in row.iter_mut().enumerate() {
                *r = buf[bin(j as i32 - lm, p)] * scale;
            }
        }
        Ok(out)
    }

    /// f_{ℓm} = (−1)^s i^{m+s} √((2ℓ+1)/4π) Σ_{m′} Δ^ℓ_{m′m} Δ^ℓ_{m′,−s} G_{mm′}.
    pub fn assemble_flm(&self, gmm: &FourierPlane) -> Result<HarmonicCoeffs> {
        self.assemble(gmm, false)
    }

    fn assemble(&self, gmm: &FourierPlane, nonneg_only: bool) -> Result<HarmonicCoeffs> {
        self.check_band_limit(gmm.band_limit)?;
        let l = self.band_limit;
        let s = gmm.spin;
        check_spin(l, s)?;

        // The m′ < 0 half folds onto m′ > 0 through
        // Δ_{−m′,m} Δ_{−m′,−s} = (−1)^{m+s} Δ_{m′m} Δ_{m′,−s}.
        // Stored transposed: pos[m′][m] for m ≥ 0, neg[m′][k] for m = −k.
        let mut pos = vec![ZERO; l * l];
        let mut neg = vec![ZERO; l * l];
        let lm = l as i32 - 1;
        for m in -lm..=lm {
            if nonneg_only && m < 0 {
                continue;
            }
            let sign = parity((m + s) as i64);
            let (dst, col) = if m >= 0 {
                (&mut pos, m as usize)
            } else {
                (&mut neg, m.unsigned_abs() as usize)
            };
            dst[col] = gmm.get(m, 0);
            for mp in 1..=lm {
                dst[mp as usize * l + col] = gmm.get(m, mp) + sign * gmm.get(m, -mp);
            }
        }

        let mut out = HarmonicCoeffs::zeros(l, s)?;
        let mut planes = HalfPiPlanes::new(l, self.method)?;
        let smin = s.unsigned_abs() as usize;
        let mut acc_pos = vec![ZERO; l];
        let mut acc_neg = vec![ZERO; l];
        for ell in 0..l {
            let plane = planes.next_plane().expect("one plane per degree");
            if ell < smin {
                continue;
            }
            acc_pos[..=ell].fill(ZERO);
            acc_neg[..=ell].fill(ZERO);
            for mp in 0..=ell {
                let delta = plane.row(mp);
                let ds = plane.get(mp as i32, -s);
                let h = &pos[mp * l..mp * l + ell + 1];
                for ((a, &d), &g) in acc_pos[..=ell].iter_mut().zip(delta).zip(h) {
                    *a += g * (d * ds);
                }
                if !nonneg_only {
                    let sg = parity((ell + mp) as i64) * ds;
                    let h = &neg[mp * l..mp * l + ell + 1];
                    for ((a, &d), &g) in acc_neg[1..=ell].iter_mut().zip(&delta[1..]).zip(&h[1..]) {
                        *a += g * (d * sg);
                    }
                }
            }
            let e = ell as i32;
            let spin_sign = parity(s as i64);
            for m in 0..=e {
                let ph = i_pow((m + s) as i64) * (spin_sign * self.norms[ell]);
                out.set(ell, m, ph * acc_pos[m as usize]);
                if m > 0 {
                    if nonneg_only {
                        let v = out.get(ell, m).conj() * parity(m as i64);
                        out.set(ell, -m, v);
                    } else {
                        let ph = i_pow((s - m) as i64) * (spin_sign * self.norms[ell]);
                        out.set(ell, -m, ph * acc_neg[m as usize]);
                    }
                }
            }
        }
        Ok(out)
    }

    /// F_{mm′} = (−1)^s i^{−(m+s)} Σ_ℓ √((2ℓ+1)/4π) Δ^ℓ_{m′m} Δ^ℓ_{m′,−s} f_{ℓm},
    /// computed for m′ ≥ 0 and mirrored to m′ < 0.
    pub fn compute_fmm(&self, coeffs: &HarmonicCoeffs) -> Result<FourierPlane> {
        self.fmm(coeffs, false)
    }

    fn fmm(&self, coeffs: &HarmonicCoeffs, nonneg_only: bool) -> Result<FourierPlane> {
        self.check_band_limit(coeffs.band_limit())?;
        let l = self.band_limit;
        let s = coeffs.spin();
        let smin = s.unsigned_abs() as usize;
        let mut pos = vec![ZERO; l * l];
        let mut neg = vec![ZERO; l * l];
        let mut g_pos = vec![ZERO; l];
        let mut g_neg = vec![ZERO; l];
        let mut planes = HalfPiPlanes::new(l, self.method)?;
        for ell in 0..l {
            let plane = planes.next_plane().expect("one plane per degree");
            if ell < smin {
                continue;
            }
            let c = self.norms[ell];
            for m in 0..=ell {
                g_pos[m] = coeffs.get(ell, m as i32) * c;
                g_neg[m] = coeffs.get(ell, -(m as i32)) * c;
            }
            for mp in 0..=ell {
                let delta = plane.row(mp);
                let ds = plane.get(mp as i32, -s);
                let row = &mut pos[mp * l..mp * l + ell + 1];
                for ((a, &d), &g) in row.iter_mut().zip(delta).zip(&g_pos[..=ell]) {
                    *a += g * (d * ds);
                }
                if !nonneg_only {
                    let sg = parity((ell + mp) as i64) * ds;
                    let row = &mut neg[mp * l + 1..mp * l + ell + 1];
                    for ((a, &d), &g) in row.iter_mut().zip(&delta[1..]).zip(&g_neg[1..=ell]) {
                        *a += g * (d * sg);
                    }
                }
            }
        }

        let mut plane = FourierPlane::zeros(l, s)?;
        let lm = l as i32 - 1;
        let spin_sign = parity(s as i64);
        let m_min = if nonneg_only { 0 } else { -lm };
        for m in m_min..=lm {
            let ph = i_pow(-(m + s) as i64) * spin_sign;
            let mirror = parity((m + s) as i64);
            let (src, col) = if m >= 0 {
                (&pos, m as usize)
            } else {
                (&neg, m.unsigned_abs() as usize)
            };
            for mp in 0..=lm {
                let v = ph * src[mp as usize * l + col];
                plane.set(m, mp, v);
                if mp > 0 {
                    plane.set(m, -mp, mirror * v);
                }
            }
        }
        Ok(plane)
    }

    /// F_m(θ_t) = Σ_{m′} F_{mm′} e^{im′θ_t} for t ∈ 0..L. The extended samples
    /// t ≥ L fall out of the FFT and are dropped.
    pub fn theta_ifft(&self, fmm: &FourierPlane) -> Result<RingCoeffs> {
        self.theta_ifft_rows(fmm, -(self.band_limit as i32 - 1))
    }

    fn theta_ifft_rows(&self, fmm: &FourierPlane, m_min: i32) -> Result<RingCoeffs> {
        self.check_band_limit(fmm.band_limit)?;
        let l = self.band_limit;
        let n = self.n();
        let lm = l as i32 - 1;
        let mut out = RingCoeffs::zeros(l, fmm.spin, l)?;
        let mut buf = vec![ZERO; n];
        let mut scratch = vec![ZERO; self.ifft_n.get_inplace_scratch_len()];
        for m in m_min..=lm {
            for (j, v) in fmm.row(m).iter().enumerate() {
                buf[bin(j as i32 - lm, n)] = v * self.theta_phase[j].conj();
            }
            self.ifft_n.process_with_scratch(&mut buf, &mut scratch);
            out.series_mut(m).copy_from_slice(&buf[..l]);
        }
        Ok(out)
    }

    /// f(θ_t, φ_p) = Σ_m F_m(θ_t) e^{imφ_p}.
    pub fn phi_ifft(&self, rings: &RingCoeffs) -> Result<MwSignal> {
        self.check_band_limit(rings.band_limit)?;
        let l = self.band_limit;
        let n = self.n();
        if rings.n_theta != l {
            return Err(Error::DimensionMismatch {
                expected: l,
                found: rings.n_theta,
            });
        }
        let mut samples = vec![ZERO; l * n];
        let lm = l as i32 - 1;
        for m in -lm..=lm {
            let k = bin(m, n);
            for (t, v) in rings.series(m).iter().enumerate() {
                samples[t * n + k] = *v;
            }
        }
        self.ifft_n.process(&mut samples);
        MwSignal::from_samples(l, rings.spin, samples)
    }

    fn phi_ifft_real(&self, rings: &RingCoeffs) -> Result<RealMwSignal> {
        let l = self.band_limit;
        let n = self.n();
        let mut samples = vec![0.0; l * n];
        let mut spectrum = self.c2r.make_input_vec();
        let mut scratch = self.c2r.make_scratch_vec();
        for t in 0..l {
            for (m, v) in spectrum.iter_mut().enumerate() {
                *v = rings.get(m as i32, t);
            }
            spectrum[0].im = 0.0;
            self.c2r
                .process_with_scratch(
                    &mut spectrum,
                    &mut samples[t * n..(t + 1) * n],
                    &mut scratch,
                )
                .expect("buffer lengths come from the plan");
        }
        RealMwSignal::from_samples(l, samples)
    }

    /// Spherical harmonic coefficients of a band-limited signal.
    pub fn forward(&self, signal: &MwSignal) -> Result<HarmonicCoeffs> {
        check_spin(signal.band_limit(), signal.spin())?;
        let rings = self.phi_fft(signal)?;
        let extended = periodic_extend(&rings)?;
        let fmm = self.theta_fft(&extended)?;
        let gmm = self.weighted_convolution(&fmm)?;
        self.assemble(&gmm, false)
    }

    /// Samples of the signal with the given coefficients. Fails if any
    /// coefficient with ℓ < |s| is nonzero.
    pub fn inverse(&self, coeffs: &HarmonicCoeffs) -> Result<MwSignal> {
        coeffs.check_below_spin()?;
        let fmm = self.fmm(coeffs, false)?;
        let rings = self.theta_ifft(&fmm)?;
        self.phi_ifft(&rings)
    }

    /// Samples on the L × L quadrature grid (θ_t, φ′_p = 2πp/L), ring-major,
    /// as consumed by [`integrate`](crate::quadrature::integrate). Orders m
    /// and m ± L coincide on that φ grid and are summed into one DFT bin.
    pub fn inverse_quadrature_grid(&self, coeffs: &HarmonicCoeffs) -> Result<Vec<Complex64>> {
        coeffs.check_below_spin()?;
        let l = self.band_limit;
        let rings = self.theta_ifft(&self.fmm(coeffs, false)?)?;
        let lm = l as i32 - 1;
        let mut samples = vec![ZERO; l * l];
        for m in -lm..=lm {
            let k = bin(m, l);
            for (t, v) in rings.series(m).iter().enumerate() {
                samples[t * l + k] += *v;
            }
        }
        FftPlanner::new().plan_fft_inverse(l).process(&mut samples);
        Ok(samples)
    }

    /// Forward transform of a real spin-0 signal, computing m ≥ 0 only and
    /// filling m < 0 from f*_{ℓm} = (−1)^m f_{ℓ,−m}.
    pub fn forward_real(&self, signal: &RealMwSignal) -> Result<HarmonicCoeffs> {
        let rings = self.phi_fft_real(signal)?;
        let extended = periodic_extend(&rings)?;
        let fmm = self.theta_fft_rows(&extended, 0)?;
        let gmm = self.weighted_convolution_rows(&fmm, 0)?;
        self.assemble(&gmm, true)
    }

    /// Inverse transform to real samples. Requires spin 0 and coefficients
    /// satisfying the reality condition to [`REALITY_TOLERANCE`].
    pub fn inverse_real(&self, coeffs: &HarmonicCoeffs) -> Result<RealMwSignal> {
        if coeffs.spin() != 0 {
            return Err(Error::UnsupportedSpin(coeffs.spin()));
        }
        let scale = coeffs.values().iter().map(|z| z.norm()).fold(1.0, f64::max);
        let deviation = coeffs.reality_deviation();
        if deviation > REALITY_TOLERANCE * scale {
            return Err(Error::SymmetryViolation { deviation });
        }
        let fmm = self.fmm(coeffs, true)?;
        let rings = self.theta_ifft_rows(&fmm, 0)?;
        self.phi_ifft_real(&rings)
    }
}

/// One-shot [`MwTransform::forward`].
pub fn forward(signal: &MwSignal) -> Result<HarmonicCoeffs> {
    MwTransform::new(signal.band_limit())?.forward(signal)
}

/// One-shot [`MwTransform::inverse`].
pub fn inverse(coeffs: &HarmonicCoeffs) -> Result<MwSignal> {
    MwTransform::new(coeffs.band_limit())?.inverse(coeffs)
}

/// One-shot [`MwTransform::forward_real`].
pub fn forward_real(signal: &RealMwSignal) -> Result<HarmonicCoeffs> {
    MwTransform::new(signal.band_limit())?.forward_real(signal)
}

/// One-shot [`MwTransform::inverse_real`].
pub fn inverse_real(coeffs: &HarmonicCoeffs) -> Result<RealMwSignal> {
    MwTransform::new(coeffs.band_limit())?.inverse_real(coeffs)
}
