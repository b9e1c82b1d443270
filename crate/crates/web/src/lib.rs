//! WebAssembly bindings behind `www/index.html`.
//!
//! Each export takes plain numbers and returns a flat `Float64Array` so the
//! page needs no glue beyond the generated module.

use mwsht::grid::extended_theta;
use mwsht::quadrature::QuadWeights;
use mwsht::{HarmonicCoeffs, MwTransform};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wasm_bindgen::prelude::*;

fn js_err(e: mwsht::Error) -> JsError {
    JsError::new(&e.to_string())
}

/// Real and imaginary parts of ₛY_ℓm on the equiangular grid for band-limit
/// L, as `[re…, im…]`, each L × (2L−1) and θ-major.
#[wasm_bindgen]
pub fn harmonic_map(band_limit: usize, ell: usize, m: i32, spin: i32) -> Result<Vec<f64>, JsError> {
    let coeffs = HarmonicCoeffs::unit(band_limit, spin, ell, m).map_err(js_err)?;
    let signal = MwTransform::new(band_limit)
        .and_then(|t| t.inverse(&coeffs))
        .map_err(js_err)?;
    let samples = signal.samples();
    Ok(samples
        .iter()
        .map(|z| z.re)
        .chain(samples.iter().map(|z| z.im))
        .collect())
}

/// `[θ…, v…, q…]`: the 2L−1 extended colatitudes, the ring weights v on them
/// and the L quadrature weights q.
#[wasm_bindgen]
pub fn weight_profile(band_limit: usize, spin: i32) -> Result<Vec<f64>, JsError> {
    let w = QuadWeights::new(band_limit, spin).map_err(js_err)?;
    let mut out = Vec::with_capacity(5 * band_limit);
    for t in 0..2 * band_limit - 1 {
        out.push(extended_theta(band_limit, t).map_err(js_err)?);
    }
    out.extend(w.v().iter().map(|z| z.re));
    out.extend(w.q().iter().map(|z| z.re));
    Ok(out)
}

/// Maximum absolute coefficient error after inverse then forward transforms
/// of random coefficients with parts uniform on [−1, 1].
#[wasm_bindgen]
pub fn round_trip_error(band_limit: usize, spin: i32, seed: u32) -> Result<f64, JsError> {
    let mut coeffs = HarmonicCoeffs::zeros(band_limit, spin).map_err(js_err)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed as u64);
    for ell in spin.unsigned_abs() as usize..band_limit {
        let e = ell as i32;
        for m in -e..=e {
            let v = Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0));
            coeffs.set(ell, m, v);
        }
    }
    let t = MwTransform::new(band_limit).map_err(js_err)?;
    let back = t
        .inverse(&coeffs)
        .and_then(|f| t.forward(&f))
        .map_err(js_err)?;
    Ok(back.max_abs_diff(&coeffs))
}
