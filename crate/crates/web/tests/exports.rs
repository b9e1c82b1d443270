use std::f64::consts::PI;

use mwsht_web::{harmonic_map, round_trip_error, weight_profile};

#[test]
fn monopole_map_is_flat() {
    let l = 4;
    let map = harmonic_map(l, 0, 0, 0).unwrap();
    assert_eq!(map.len(), 2 * l * (2 * l - 1));
    let (re, im) = map.split_at(l * (2 * l - 1));
    assert!(re.iter().all(|v| (v - 0.5 / PI.sqrt()).abs() < 1e-14));
    assert!(im.iter().all(|v| v.abs() < 1e-14));
}

#[test]
fn dipole_map_follows_cos_theta() {
    let l = 6;
    let n = 2 * l - 1;
    let map = harmonic_map(l, 1, 0, 0).unwrap();
    for t in 0..l {
        let theta = PI * (2 * t + 1) as f64 / n as f64;
        let expect = (3.0 / (4.0 * PI)).sqrt() * theta.cos();
        assert!((map[t * n] - expect).abs() < 1e-13);
    }
}

#[test]
fn weight_profile_layout() {
    let l = 5;
    let p = weight_profile(l, 0).unwrap();
    assert_eq!(p.len(), 2 * (2 * l - 1) + l);
    let q = &p[2 * (2 * l - 1)..];
    assert!((q.iter().sum::<f64>() * l as f64 - 4.0 * PI).abs() < 1e-12);
}

#[test]
fn round_trip_is_accurate() {
    assert!(round_trip_error(32, 2, 1).unwrap() < 1e-12);
    assert_eq!(
        round_trip_error(16, 0, 3).unwrap(),
        round_trip_error(16, 0, 3).unwrap()
    );
}
