mod common;

use common::random_coeffs;
use mwsht::{GlGrid, GlTransform, MwTransform};

#[test]
fn monomials_integrate_exactly() {
    for l in 1..=32usize {
        let g = GlGrid::new(l).unwrap();
        for k in 0..2 * l {
            let expect = if k % 2 == 0 {
                2.0 / (k + 1) as f64
            } else {
                0.0
            };
            let got = g.integrate(|x| x.powi(k as i32));
            assert!((got - expect).abs() < 1e-13, "L={l} k={k}");
        }
    }
}

#[test]
fn round_trip_across_spins() {
    for l in [2usize, 7, 16, 64] {
        let t = GlTransform::new(l).unwrap();
        for s in [0i32, 2, -3, 10] {
            if s.unsigned_abs() as usize >= l {
                continue;
            }
            let c = random_coeffs(l, s, 9 + l as u64);
            let back = t.forward(&t.inverse(&c).unwrap()).unwrap();
            assert!(back.max_abs_diff(&c) < 1e-10, "L={l} s={s}");
        }
    }
}

#[test]
fn cross_sampling_agreement() {
    let l = 32;
    let mw = MwTransform::new(l).unwrap();
    let gl = GlTransform::new(l).unwrap();
    for s in [0i32, 1, 2] {
        let c = random_coeffs(l, s, 77);
        let a = mw.forward(&mw.inverse(&c).unwrap()).unwrap();
        let b = gl.forward(&gl.inverse(&c).unwrap()).unwrap();
        assert!(a.max_abs_diff(&b) < 1e-10);
    }
}
