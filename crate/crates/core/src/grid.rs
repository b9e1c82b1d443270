//! Equiangular sample grid and sample-count formulas.

use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// θ_t = π(2t+1)/(2L−1), t ∈ 0..L; φ_p = 2πp/(2L−1), p ∈ 0..2L−1.
///
/// The last ring θ_{L−1} = π is stored for every φ_p even though those
/// samples coincide on the sphere.
#[derive(Debug, Clone, PartialEq)]
pub struct MwGrid {
    band_limit: usize,
    thetas: Vec<f64>,
    phis: Vec<f64>,
}

impl MwGrid {
    pub fn new(band_limit: usize) -> Result<Self> {
        if band_limit == 0 {
            return Err(Error::InvalidBandLimit);
        }
        let n = (2 * band_limit - 1) as f64;
        let thetas = (0..band_limit)
            .map(|t| {
                if t + 1 == band_limit {
                    PI
                } else {
                    PI * (2 * t + 1) as f64 / n
                }
            })
            .collect();
        let phis = (0..2 * band_limit - 1)
            .map(|p| 2.0 * PI * p as f64 / n)
            .collect();
        Ok(Self {
            band_limit,
            thetas,
            phis,
        })
    }

    pub fn band_limit(&self) -> usize {
        self.band_limit
    }

    pub fn thetas(&self) -> &[f64] {
        &self.thetas
    }

    pub fn phis(&self) -> &[f64] {
        &self.phis
    }

    /// Number of stored grid entries, L(2L−1).
    pub fn len(&self) -> usize {
        self.thetas.len() * self.phis.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of distinct points on the sphere, (L−1)(2L−1)+1.
    pub fn distinct_points(&self) -> usize {
        mw_sample_count(self.band_limit)
    }

    /// θ on the periodically extended index range t ∈ 0..=2L−2.
    pub fn extended_theta(&self, t: usize) -> Result<f64> {
        extended_theta(self.band_limit, t)
    }

    /// (θ, φ) pairs, ring-major.
    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.thetas
            .iter()
            .flat_map(move |&th| self.phis.iter().map(move |&ph| (th, ph)))
    }
}

/// θ_t = π(2t+1)/(2L−1) for t ∈ 0..=2L−2, so that 2π − θ_t = θ_{2L−2−t}.
pub fn extended_theta(band_limit: usize, t: usize) -> Result<f64> {
    if band_limit == 0 {
        return Err(Error::InvalidBandLimit);
    }
    let max = 2 * band_limit - 2;
    if t > max {
        return Err(Error::IndexOutOfRange { index: t, max });
    }
    if t + 1 == band_limit {
        return Ok(PI);
    }
    Ok(PI * (2 * t + 1) as f64 / (2 * band_limit - 1) as f64)
}

/// Reflection t ↦ 2L−2−t of the extended θ index.
pub fn reflect_index(band_limit: usize, t: usize) -> usize {
    2 * band_limit - 2 - t
}

pub fn mw_sample_count(band_limit: usize) -> usize {
    (band_limit - 1) * (2 * band_limit - 1) + 1
}

pub fn gl_sample_count(band_limit: usize) -> usize {
    band_limit * (2 * band_limit - 1)
}

pub fn dh_sample_count(band_limit: usize) -> usize {
    2 * band_limit * (2 * band_limit - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleCounts {
    pub n_mw: usize,
    pub n_gl: usize,
    pub n_dh: usize,
}

pub fn sample_counts(band_limit: usize) -> Result<SampleCounts> {
    if band_limit == 0 {
        return Err(Error::InvalidBandLimit);
    }
    Ok(SampleCounts {
        n_mw: mw_sample_count(band_limit),
        n_gl: gl_sample_count(band_limit),
        n_dh: dh_sample_count(band_limit),
    })
}

/// Format a float with 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    format!("{:.16e}", x)
}

/// `theta,phi` CSV of the grid points in ring-major order.
pub fn points_csv<I: IntoIterator<Item = (f64, f64)>>(points: I) -> String {
    let mut out = String::from("theta,phi\n");
    for (th, ph) in points {
        let _ = writeln!(out, "{},{}", fmt_f64(th), fmt_f64(ph));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grids() {
        let g = MwGrid::new(4).unwrap();
        let expect = [PI / 7.0, 3.0 * PI / 7.0, 5.0 * PI / 7.0, PI];
        for (a, b) in g.thetas().iter().zip(expect) {
            assert!((a - b).abs() < 1e-15);
        }
        assert!((g.thetas()[0] - 0.448799).abs() < 1e-6);
        assert_eq!(g.phis().len(), 7);
        assert!((g.phis()[6] - 12.0 * PI / 7.0).abs() < 1e-15);
        assert_eq!(g.thetas()[3], PI);

        let g1 = MwGrid::new(1).unwrap();
        assert_eq!(g1.thetas(), &[PI]);
        assert_eq!(g1.phis(), &[0.0]);
        assert_eq!(g1.distinct_points(), 1);
        assert!(matches!(MwGrid::new(0), Err(Error::InvalidBandLimit)));
    }

    #[test]
    fn extended_indices() {
        assert!((extended_theta(4, 6).unwrap() - 13.0 * PI / 7.0).abs() < 1e-15);
        assert_eq!(extended_theta(4, 3).unwrap(), PI);
        assert_eq!(reflect_index(4, 3), 3);
        let sum = extended_theta(4, 0).unwrap() + extended_theta(4, 6).unwrap();
        assert!((sum - 2.0 * PI).abs() < 1e-15);
        assert!(matches!(
            extended_theta(4, 7),
            Err(Error::IndexOutOfRange { index: 7, max: 6 })
        ));
        for l in 1..40 {
            for t in 0..=2 * l - 2 {
                let r = reflect_index(l, t);
                assert_eq!(reflect_index(l, r), t);
                let a = extended_theta(l, t).unwrap();
                let b = extended_theta(l, r).unwrap();
                assert!((2.0 * PI - a - b).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn counts() {
        let c = sample_counts(16).unwrap();
        assert_eq!((c.n_mw, c.n_gl, c.n_dh), (466, 496, 992));
        assert_eq!(sample_counts(2).unwrap().n_mw, 4);
        let c = sample_counts(1024).unwrap();
        assert_eq!(c.n_gl - c.n_mw, 2046);
        for l in 1..=128 {
            let c = sample_counts(l).unwrap();
            assert!(c.n_mw >= l * l);
            assert!(c.n_mw <= c.n_gl && c.n_gl < c.n_dh);
            if l > 1 {
                assert!(c.n_mw < c.n_gl);
            }
            assert_eq!(c.n_gl - c.n_mw, 2 * (l - 1));
        }
    }

    #[test]
    fn grid_csv_shape() {
        let g = MwGrid::new(12).unwrap();
        let csv = points_csv(g.points());
        assert_eq!(csv.lines().count(), 1 + 276);
        assert_eq!(csv.lines().next(), Some("theta,phi"));
    }
}
