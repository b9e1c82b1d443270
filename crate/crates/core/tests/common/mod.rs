#![allow(dead_code)]

use mwsht::HarmonicCoeffs;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Coefficients with re/im uniform in [−1, 1) for ℓ ≥ |s|.
pub fn random_coeffs(band_limit: usize, spin: i32, seed: u64) -> HarmonicCoeffs {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = HarmonicCoeffs::zeros(band_limit, spin).unwrap();
    for ell in spin.unsigned_abs() as usize..band_limit {
        let e = ell as i32;
        for m in -e..=e {
            let v = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            c.set(ell, m, v);
        }
    }
    c
}

/// Random coefficients of a real spin-0 signal.
pub fn random_real_coeffs(band_limit: usize, seed: u64) -> HarmonicCoeffs {
    let mut c = random_coeffs(band_limit, 0, seed);
    for ell in 0..band_limit {
        c.set(ell, 0, Complex64::new(c.get(ell, 0).re, 0.0));
        for m in 1..=ell as i32 {
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            let v = c.get(ell, m).conj() * sign;
            c.set(ell, -m, v);
        }
    }
    c
}
