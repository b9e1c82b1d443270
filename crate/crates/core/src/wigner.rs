//! Wigner d-functions d^ℓ_{mn}(β).
//!
//! Three recursions are provided alongside a closed-form reference:
//!
//! * [`plane_risbo`] builds the whole (m, n) plane for degree ℓ from the plane
//!   at ℓ − 1 through two half-integer steps. Works for any β.
//! * [`plane_trapani`] builds the plane at β = π/2 from one column of the
//!   previous plane plus a three-term recursion in n.
//! * [`row_three_term`] walks a single (m, n) entry up in ℓ, O(1) per degree.
//! * [`plane_jacobi`] evaluates the Jacobi-polynomial closed form directly and
//!   serves as the reference for the other three.
//!
//! The transforms only need the π/2 plane Δ^ℓ. [`HalfPiPlanes`] iterates those
//! degree by degree, storing only the m ≥ 0, n ≥ 0 quarter ([`QuarterPlane`]);
//! the remaining entries follow from the symmetries of Δ.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::error::{Error, Result};

/// Largest degree accepted by the closed-form reference.
pub const JACOBI_MAX_DEGREE: usize = 64;

#[inline]
fn parity(k: i64) -> f64 {
    if k.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Recursion used to generate Wigner planes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WignerMethod {
    /// Half-integer recursion of Risbo; stable to very high degree.
    #[default]
    Risbo,
    /// Trapani & Navaza recursion, restricted to β = π/2.
    TrapaniNavaza,
    /// Closed-form Jacobi evaluation. Reference only, ℓ ≤ [`JACOBI_MAX_DEGREE`].
    Jacobi,
}

/// Dense (2ℓ+1)×(2ℓ+1) plane of d^ℓ_{mn}(β), row index m, column index n,
/// both offset by ℓ.
#[derive(Debug, Clone, PartialEq)]
pub struct WignerPlane {
    ell: usize,
    beta: f64,
    values: Vec<f64>,
}

impl WignerPlane {
    fn zeros(ell: usize, beta: f64) -> Self {
        let side = 2 * ell + 1;
        Self {
            ell,
            beta,
            values: vec![0.0; side * side],
        }
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn side(&self) -> usize {
        2 * self.ell + 1
    }

    /// Row-major values, `values()[(m + ℓ) * side + (n + ℓ)]`.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// d^ℓ_{mn}(β). Panics if |m| or |n| exceeds ℓ.
    #[inline]
    pub fn get(&self, m: i32, n: i32) -> f64 {
        let l = self.ell as i32;
        assert!(
            m.abs() <= l && n.abs() <= l,
            "order ({m}, {n}) outside degree {l}"
        );
        self.values[((m + l) as usize) * self.side() + (n + l) as usize]
    }

    #[inline]
    fn set(&mut self, m: i32, n: i32, v: f64) {
        let l = self.ell as i32;
        let side = self.side();
        self.values[((m + l) as usize) * side + (n + l) as usize] = v;
    }

    /// Row m of the plane, n = −ℓ..=ℓ.
    pub fn row(&self, m: i32) -> &[f64] {
        let l = self.ell as i32;
        let side = self.side();
        let start = ((m + l) as usize) * side;
        &self.values[start..start + side]
    }

    /// Expand a π/2 quarter plane to the full plane.
    pub fn from_quarter(quarter: &QuarterPlane) -> Self {
        let l = quarter.ell as i32;
        let mut plane = Self::zeros(quarter.ell, std::f64::consts::FRAC_PI_2);
        for m in -l..=l {
            for n in -l..=l {
                plane.set(m, n, quarter.get(m, n));
            }
        }
        plane
    }
}

/// Risbo recursion: d^ℓ(β) from d^{ℓ−1}(β).
///
/// `prev` must be the plane for degree ℓ − 1 at the same β, or `None` when
/// ℓ = 0.
pub fn plane_risbo(ell: usize, beta: f64, prev: Option<&WignerPlane>) -> Result<WignerPlane> {
    if ell == 0 {
        return match prev {
            None => {
                let mut plane = WignerPlane::zeros(0, beta);
                plane.values[0] = 1.0;
                Ok(plane)
            }
            Some(p) => Err(Error::DegreeMismatch {
                expected: 0,
                found: p.ell + 1,
            }),
        };
    }
    let prev = match prev {
        Some(p) if p.ell + 1 == ell => p,
        Some(p) => {
            return Err(Error::DegreeMismatch {
                expected: ell - 1,
                found: p.ell,
            })
        }
        None => {
            return Err(Error::DegreeMismatch {
                expected: ell - 1,
                found: 0,
            })
        }
    };
    let p = (0.5 * beta).cos();
    let q = (0.5 * beta).sin();
    let half = risbo_half_step(&prev.values, 2 * ell - 1, p, q);
    let values = risbo_half_step(&half, 2 * ell, p, q);
    Ok(WignerPlane { ell, beta, values })
}

/// One half-integer Risbo step. `src` is the (J)×(J) plane of doubled degree
/// J − 1; returns the (J+1)×(J+1) plane of doubled degree J.
fn risbo_half_step(src: &[f64], dj: usize, p: f64, q: f64) -> Vec<f64> {
    let n_src = dj;
    let n_dst = dj + 1;
    debug_assert_eq!(src.len(), n_src * n_src);
    let inv = 1.0 / dj as f64;
    let sq: Vec<f64> = (0..=dj).map(|k| (k as f64).sqrt()).collect();
    let at = |i: usize, k: usize| src[i * n_src + k];
    let mut dst = vec![0.0; n_dst * n_dst];
    for i in 0..n_dst {
        for k in 0..n_dst {
            let mut acc = 0.0;
            if i < n_src && k < n_src {
                acc += sq[dj - i] * sq[dj - k] * p * at(i, k);
            }
            if i > 0 && k < n_src {
                acc -= sq[i] * sq[dj - k] * q * at(i - 1, k);
            }
            if i < n_src && k > 0 {
                acc += sq[dj - i] * sq[k] * q * at(i, k - 1);
            }
            if i > 0 && k > 0 {
                acc += sq[i] * sq[k] * p * at(i - 1, k - 1);
            }
            dst[i * n_dst + k] = acc * inv;
        }
    }
    dst
}

/// Trapani & Navaza recursion for Δ^ℓ = d^ℓ(π/2).
pub fn plane_trapani(ell: usize, prev: Option<&WignerPlane>) -> Result<WignerPlane> {
    let quarter = match (ell, prev) {
        (0, None) => QuarterPlane::unit(),
        (0, Some(p)) => {
            return Err(Error::DegreeMismatch {
                expected: 0,
                found: p.ell + 1,
            })
        }
        (_, Some(p)) if p.ell + 1 == ell => {
            let l = p.ell as i32;
            let last_col: Vec<f64> = (0..=l).map(|m| p.get(m, l)).collect();
            let mut out = QuarterPlane::zeros(ell);
            trapani_step(&last_col, &mut out);
            out
        }
        (_, Some(p)) => {
            return Err(Error::DegreeMismatch {
                expected: ell - 1,
                found: p.ell,
            })
        }
        (_, None) => {
            return Err(Error::DegreeMismatch {
                expected: ell - 1,
                found: 0,
            })
        }
    };
    Ok(WignerPlane::from_quarter(&quarter))
}

/// Fill `out` (degree ℓ ≥ 1) from column n = ℓ − 1 of Δ^{ℓ−1}, rows m = 0..ℓ−1.
fn trapani_step(prev_last_col: &[f64], out: &mut QuarterPlane) {
    let ell = out.ell;
    let lf = ell as f64;
    let w = ell + 1;
    debug_assert_eq!(prev_last_col.len(), ell);

    // Edge column n = ℓ.
    out.values[ell] = ((2.0 * lf - 1.0) / (2.0 * lf)).sqrt() * prev_last_col[0];
    for m in 1..=ell {
        let mf = m as f64;
        let ratio = (lf * (2.0 * lf - 1.0) / (2.0 * (lf + mf) * (lf + mf - 1.0))).sqrt();
        out.values[m * w + ell] = ratio * prev_last_col[m - 1];
    }

    // Downward in n for the eighth n ≥ m.
    for m in 0..=ell {
        let row = &mut out.values[m * w..(m + 1) * w];
        let two_m = 2.0 * m as f64;
        let mut upper2 = 0.0; // Δ_{m, n+2}
        let mut upper1 = row[ell]; // Δ_{m, n+1}
        for n in (m..ell).rev() {
            let nf = n as f64;
            let a = ((lf + nf + 1.0) * (lf - nf)).sqrt();
            let b = ((lf - nf - 1.0) * (lf + nf + 2.0)).sqrt();
            let v = (-two_m * upper1 - b * upper2) / a;
            row[n] = v;
            upper2 = upper1;
            upper1 = v;
        }
    }

    // Transpose symmetry for n < m.
    for m in 1..=ell {
        for n in 0..m {
            out.values[m * w + n] = parity(m as i64 - n as i64) * out.values[n * w + m];
        }
    }
}

/// d^ℓ_{mn}(β) from the Jacobi-polynomial closed form.
pub fn jacobi_value(ell: usize, m: i32, n: i32, beta: f64) -> Result<f64> {
    if ell > JACOBI_MAX_DEGREE {
        return Err(Error::UnsupportedDegree {
            ell,
            max: JACOBI_MAX_DEGREE,
        });
    }
    let l = ell as i32;
    assert!(
        m.abs() <= l && n.abs() <= l,
        "order ({m}, {n}) outside degree {l}"
    );
    let (mm, nn, sign) = canonical_orders(m, n);
    Ok(sign * jacobi_canonical(ell, mm, nn, beta))
}

/// Map (m, n) onto (m', n') with n' ≥ |m'| using d_{mn} = (−1)^{m−n} d_{−m,−n}
/// and d_{mn} = (−1)^{m−n} d_{nm}. Returns (m', n', sign).
fn canonical_orders(m: i32, n: i32) -> (i32, i32, f64) {
    let s = parity((m - n) as i64);
    if n >= m.abs() {
        (m, n, 1.0)
    } else if -n >= m.abs() {
        (-m, -n, s)
    } else if m >= n.abs() {
        (n, m, s)
    } else {
        // -m >= |n|
        (-n, -m, 1.0)
    }
}

/// Closed form for n ≥ |m|, where every half-angle exponent is non-negative.
fn jacobi_canonical(ell: usize, m: i32, n: i32, beta: f64) -> f64 {
    debug_assert!(n >= m.abs());
    let l = ell as i64;
    let (m, n) = (m as i64, n as i64);
    // sqrt((ℓ+n)!(ℓ−n)! / ((ℓ+m)!(ℓ−m)!)) as an interleaved product.
    let mut ratio = 1.0f64;
    for t in 1..=(n - m) {
        ratio *= (l + m + t) as f64 / (l - n + t) as f64;
    }
    let prefactor = ratio.sqrt();
    let s = (0.5 * beta).sin();
    let c = (0.5 * beta).cos();
    let a = (n - m) as i32;
    let b = (n + m) as i32;
    prefactor
        * s.powi(a)
        * c.powi(b)
        * jacobi_poly((l - n) as usize, a as f64, b as f64, beta.cos())
}

/// Jacobi polynomial P_k^{(a,b)}(x) by the three-term recurrence in degree.
fn jacobi_poly(k: usize, a: f64, b: f64, x: f64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    let mut p0 = 1.0;
    let mut p1 = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
    for deg in 2..=k {
        let d = deg as f64;
        let ab = 2.0 * d + a + b;
        let c1 = 2.0 * d * (d + a + b) * (ab - 2.0);
        let c2 = (ab - 1.0) * (ab * (ab - 2.0) * x + a * a - b * b);
        let c3 = 2.0 * (d + a - 1.0) * (d + b - 1.0) * ab;
        let p2 = (c2 * p1 - c3 * p0) / c1;
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// Reference plane from the closed form, ℓ ≤ [`JACOBI_MAX_DEGREE`].
pub fn plane_jacobi(ell: usize, beta: f64) -> Result<WignerPlane> {
    if ell > JACOBI_MAX_DEGREE {
        return Err(Error::UnsupportedDegree {
            ell,
            max: JACOBI_MAX_DEGREE,
        });
    }
    let l = ell as i32;
    let mut plane = WignerPlane::zeros(ell, beta);
    for m in -l..=l {
        for n in -l..=l {
            let (mm, nn, sign) = canonical_orders(m, n);
            plane.set(m, n, sign * jacobi_canonical(ell, mm, nn, beta));
        }
    }
    Ok(plane)
}

/// ln k! for k = 0..=n.
fn ln_factorials(n: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(n + 1);
    let mut acc = 0.0f64;
    out.push(0.0);
    for k in 1..=n {
        acc += (k as f64).ln();
        out.push(acc);
    }
    out
}

/// Pointwise three-term recursion in ℓ for a fixed (m, n, β).
///
/// Returns d^ℓ_{mn}(β) for ℓ = max(|m|, |n|) .. `ell_max` − 1 (empty when the
/// starting degree is not below `ell_max`). β must lie strictly inside (0, π).
pub fn row_three_term(ell_max: usize, m: i32, n: i32, beta: f64) -> Vec<f64> {
    let start = m.unsigned_abs().max(n.unsigned_abs()) as usize;
    if start >= ell_max {
        return Vec::new();
    }
    let lnf = ln_factorials(2 * start);
    let mut out = Vec::with_capacity(ell_max - start);
    out.push(edge_value(start, m, n, beta, &lnf));
    let cb = beta.cos();
    let (mf, nf) = (m as f64, n as f64);
    let mut prev = 0.0;
    for ell in start..ell_max - 1 {
        let lf = ell as f64;
        let l1 = lf + 1.0;
        let cur = *out.last().unwrap();
        let denom = ((l1 * l1 - mf * mf) * (l1 * l1 - nf * nf)).sqrt();
        let coupling = if ell == 0 { 0.0 } else { mf * nf / (lf * l1) };
        let mut next = l1 * (2.0 * lf + 1.0) / denom * (cb - coupling) * cur;
        if ell > start {
            let back = l1 * ((lf * lf - mf * mf) * (lf * lf - nf * nf)).sqrt() / (lf * denom);
            next -= back * prev;
        }
        prev = cur;
        out.push(next);
    }
    out
}

/// d^ℓ_{mn}(β) for ℓ = max(|m|, |n|), where the Jacobi factor is 1.
fn edge_value(ell: usize, m: i32, n: i32, beta: f64, lnf: &[f64]) -> f64 {
    let (mm, nn, sign) = canonical_orders(m, n);
    debug_assert_eq!(nn as usize, ell);
    let l = ell as i32;
    let ln_binom = lnf[2 * ell] - lnf[(l + mm) as usize] - lnf[(l - mm) as usize];
    let a = l - mm;
    let b = l + mm;
    let s = (0.5 * beta).sin();
    let c = (0.5 * beta).cos();
    let ln_mag = 0.5 * ln_binom + a as f64 * s.ln() + b as f64 * c.ln();
    sign * ln_mag.exp()
}

/// Δ^ℓ restricted to m ≥ 0, n ≥ 0, row-major with side ℓ + 1.
///
/// Other entries follow from Δ_{−m,n} = (−1)^{ℓ−n} Δ_{mn} and
/// Δ_{m,−n} = (−1)^{ℓ+m} Δ_{mn}.
#[derive(Debug, Clone, PartialEq)]
pub struct QuarterPlane {
    ell: usize,
    values: Vec<f64>,
}

impl QuarterPlane {
    fn zeros(ell: usize) -> Self {
        Self {
            ell,
            values: vec![0.0; (ell + 1) * (ell + 1)],
        }
    }

    fn unit() -> Self {
        Self {
            ell: 0,
            values: vec![1.0],
        }
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Δ^ℓ_{mn} for m ≥ 0, n = 0..=ℓ.
    #[inline]
    pub fn row(&self, m: usize) -> &[f64] {
        let w = self.ell + 1;
        &self.values[m * w..(m + 1) * w]
    }

    /// Δ^ℓ_{mn} for any |m|, |n| ≤ ℓ.
    #[inline]
    pub fn get(&self, m: i32, n: i32) -> f64 {
        let l = self.ell as i64;
        let w = self.ell + 1;
        let mut sign = 1.0;
        if m < 0 {
            sign *= parity(l - n as i64);
        }
        if n < 0 {
            sign *= parity(l + m.unsigned_abs() as i64);
        }
        sign * self.values[m.unsigned_abs() as usize * w + n.unsigned_abs() as usize]
    }

    fn from_plane(plane: &WignerPlane) -> Self {
        let l = plane.ell as i32;
        let mut out = Self::zeros(plane.ell);
        let w = plane.ell + 1;
        for m in 0..=l {
            for n in 0..=l {
                out.values[m as usize * w + n as usize] = plane.get(m, n);
            }
        }
        out
    }
}

/// Iterator-like generator of the π/2 planes Δ^0, Δ^1, …, Δ^{L−1}.
///
/// Each plane is produced from the previous one and then overwritten, so
/// memory stays O(L²).
#[derive(Debug)]
pub struct HalfPiPlanes {
    method: WignerMethod,
    band_limit: usize,
    next_ell: usize,
    current: QuarterPlane,
    half: Vec<f64>,
    sum: Vec<f64>,
    diff: Vec<f64>,
    rev: Vec<f64>,
    sq: Vec<f64>,
}

impl HalfPiPlanes {
    pub fn new(band_limit: usize, method: WignerMethod) -> Result<Self> {
        if method == WignerMethod::Jacobi && band_limit > JACOBI_MAX_DEGREE + 1 {
            return Err(Error::UnsupportedDegree {
                ell: band_limit - 1,
                max: JACOBI_MAX_DEGREE,
            });
        }
        Ok(Self {
            method,
            band_limit,
            next_ell: 0,
            current: QuarterPlane::unit(),
            half: Vec::new(),
            sum: Vec::new(),
            diff: Vec::new(),
            rev: Vec::new(),
            sq: (0..=2 * band_limit + 2)
                .map(|k| (k as f64).sqrt())
                .collect(),
        })
    }

    pub fn method(&self) -> WignerMethod {
        self.method
    }

    /// Advance to the next degree and return its plane, or `None` once all
    /// degrees below the band-limit have been produced.
    pub fn next_plane(&mut self) -> Option<&QuarterPlane> {
        let ell = self.next_ell;
        if ell >= self.band_limit {
            return None;
        }
        if ell > 0 {
            match self.method {
                WignerMethod::Risbo => self.risbo_advance(),
                WignerMethod::TrapaniNavaza => {
                    let prev = &self.current;
                    let w = prev.ell + 1;
                    let col: Vec<f64> = (0..w).map(|m| prev.values[m * w + prev.ell]).collect();
                    let mut out = QuarterPlane::zeros(ell);
                    trapani_step(&col, &mut out);
                    self.current = out;
                }
                WignerMethod::Jacobi => {
                    let plane = plane_jacobi(ell, std::f64::consts::FRAC_PI_2)
                        .expect("degree checked at construction");
                    self.current = QuarterPlane::from_plane(&plane);
                }
            }
        }
        self.next_ell += 1;
        Some(&self.current)
    }

    /// Two half-integer Risbo steps at β = π/2, computed on the quarter only.
    ///
    /// Each step mixes two adjacent source rows into a sum and a difference
    /// row, then combines neighbouring columns of those with per-column
    /// square-root factors.
    fn risbo_advance(&mut self) {
        let ell = self.current.ell + 1;
        let sq = &self.sq;
        let c = FRAC_1_SQRT_2;
        let (sum, diff) = (&mut self.sum, &mut self.diff);
        sum.resize(ell + 2, 0.0);
        diff.resize(ell + 2, 0.0);

        // Integer ℓ−1 (side ℓ) → half-integer ℓ−½ (side ℓ). Row a ↔ m = a + ½,
        // column b ↔ n = b + ½.
        let src = &self.current.values;
        let sw = ell;
        let dj = 2 * ell - 1;
        let scale = c / dj as f64;
        // Every entry below is overwritten.
        self.half.resize(ell * ell, 0.0);
        // rev[b] = √(ℓ−b), so the descending column factors read forwards.
        self.rev.clear();
        self.rev.extend((0..=ell).map(|b| sq[ell - b]));
        let rev = &self.rev;
        let hi = &sq[ell..2 * ell];
        for a in 0..ell {
            let i = a + ell;
            let ci_lo = sq[dj - i] * scale;
            let ci_hi = sq[i] * scale;
            let row_a = &src[a * sw..(a + 1) * sw];
            // ci_lo vanishes on the last row, so any in-range row will do.
            let row_a1 = if a + 1 < ell {
                &src[(a + 1) * sw..(a + 2) * sw]
            } else {
                row_a
            };
            for (((u, d), &x1), &x0) in sum[..ell]
                .iter_mut()
                .zip(&mut diff[..ell])
                .zip(row_a1)
                .zip(row_a)
            {
                *u = ci_lo * x1 + ci_hi * x0;
                *d = ci_lo * x1 - ci_hi * x0;
            }
            diff[ell] = 0.0;
            let dst = &mut self.half[a * ell..(a + 1) * ell];
            for ((v, (&l, &d)), (&h, &u)) in dst
                .iter_mut()
                .zip(rev[1..].iter().zip(&diff[1..=ell]))
                .zip(hi.iter().zip(&sum[..ell]))
            {
                *v = l * d + h * u;
            }
        }

        // Half-integer ℓ−½ (side ℓ) → integer ℓ (side ℓ+1). Row a ↔ m = a.
        let dj = 2 * ell;
        let scale = c / dj as f64;
        let w = ell + 1;
        let mut out = std::mem::replace(&mut self.current, QuarterPlane::unit());
        out.ell = ell;
        out.values.resize(w * w, 0.0);
        let half = &self.half;
        let hw = ell;
        let zeros = vec![0.0; hw];
        for a in 0..w {
            let i = a + ell;
            let ci_lo = sq[dj - i] * scale;
            let ci_hi = sq[i] * scale;
            // Row a − ½ at a = 0 is the m = −½ halo: (−1)^{j−n} times row ½,
            // with j − n = ℓ − 1 − b.
            let r0 = if a < hw {
                &half[a * hw..(a + 1) * hw]
            } else {
                &zeros[..]
            };
            let (rm, halo_row) = if a >= 1 {
                (&half[(a - 1) * hw..a * hw], false)
            } else {
                (&half[..hw], true)
            };
            let rm_sign = |b: usize| {
                if halo_row {
                    parity(ell as i64 - 1 - b as i64)
                } else {
                    1.0
                }
            };
            if halo_row {
                for (b, ((u, d), (&x0, &xm))) in sum[..hw]
                    .iter_mut()
                    .zip(&mut diff[..hw])
                    .zip(r0.iter().zip(rm))
                    .enumerate()
                {
                    let xm = rm_sign(b) * xm;
                    *u = ci_lo * x0 + ci_hi * xm;
                    *d = ci_lo * x0 - ci_hi * xm;
                }
            } else {
                for ((u, d), (&x0, &xm)) in sum[..hw]
                    .iter_mut()
                    .zip(&mut diff[..hw])
                    .zip(r0.iter().zip(rm))
                {
                    *u = ci_lo * x0 + ci_hi * xm;
                    *d = ci_lo * x0 - ci_hi * xm;
                }
            }
            // Column −½ halo: (−1)^{j+m} times column ½, j + m = ℓ + a. At the
            // corner (−½, −½) the row and column signs are both (−1)^ℓ.
            let s0 = parity((ell + a) as i64);
            let sm = if halo_row {
                1.0
            } else {
                parity((ell + a) as i64 - 1)
            };
            let x0 = if a < hw { half[a * hw] } else { 0.0 };
            let xm = if a >= 1 { half[(a - 1) * hw] } else { half[0] };
            let u_halo = ci_lo * s0 * x0 + ci_hi * sm * xm;

            let dst = &mut out.values[a * w..(a + 1) * w];
            dst[0] = sq[ell] * diff[0] + sq[ell] * u_halo;
            for ((v, (&l, &d)), (&h, &u)) in dst[1..hw]
                .iter_mut()
                .zip(rev[1..hw].iter().zip(&diff[1..hw]))
                .zip(sq[ell + 1..ell + hw].iter().zip(&sum[..hw - 1]))
            {
                *v = l * d + h * u;
            }
            dst[hw] = sq[2 * ell] * sum[hw - 1];
        }
        self.current = out;
    }
}
