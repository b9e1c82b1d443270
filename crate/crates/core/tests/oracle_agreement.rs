mod common;

use common::random_coeffs;
use mwsht::oracle::{naive_forward, naive_inverse};
use mwsht::{HarmonicCoeffs, MwTransform};
use num_complex::Complex64;

#[test]
fn fast_and_naive_agree_in_both_directions() {
    for l in [2usize, 4, 8, 16] {
        let t = MwTransform::new(l).unwrap();
        for s in [0i32, 1, 2] {
            if s.unsigned_abs() as usize >= l {
                continue;
            }
            let c = random_coeffs(l, s, 100 + l as u64 + s as u64);
            let fast = t.inverse(&c).unwrap();
            let slow = naive_inverse(&c).unwrap();
            assert!(fast.max_abs_diff(&slow) < 1e-12, "inverse L={l} s={s}");

            let a = t.forward(&slow).unwrap();
            let b = naive_forward(&slow).unwrap();
            assert!(a.max_abs_diff(&b) < 1e-12, "forward L={l} s={s}");
            assert!(b.max_abs_diff(&c) < 1e-12, "naive round trip L={l} s={s}");
        }
    }
}

#[test]
fn naive_inverse_is_linear() {
    let (l, s) = (6, 1);
    let x = random_coeffs(l, s, 1);
    let y = random_coeffs(l, s, 2);
    let (a, b) = (Complex64::new(0.3, -1.2), Complex64::new(-2.0, 0.5));
    let combo: Vec<Complex64> = x
        .values()
        .iter()
        .zip(y.values())
        .map(|(u, v)| a * u + b * v)
        .collect();
    let combo = HarmonicCoeffs::from_values(l, s, combo).unwrap();
    let fx = naive_inverse(&x).unwrap();
    let fy = naive_inverse(&y).unwrap();
    let fc = naive_inverse(&combo).unwrap();
    for ((z, u), v) in fc.samples().iter().zip(fx.samples()).zip(fy.samples()) {
        assert!((z - (a * u + b * v)).norm() < 1e-13);
    }
}

#[test]
fn spin_two_delta_survives_round_trip() {
    let t = MwTransform::new(8).unwrap();
    let e = HarmonicCoeffs::unit(8, 2, 2, -1).unwrap();
    let back = t.forward(&t.inverse(&e).unwrap()).unwrap();
    assert!(back.max_abs_diff(&e) < 1e-11);
}
