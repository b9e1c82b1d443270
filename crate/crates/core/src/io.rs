//! Binary coefficient (`SSHC`) and signal (`SSHS`) files.
//!
//! ```text
//! SSHC: b"SSHC" | version u8 = 1 | L u32 | spin i32 | L² × (re f64, im f64)
//! SSHS: b"SSHS" | version u8 = 1 | grid u8 | L u32 | spin i32 | L(2L−1) × (re f64, im f64)
//! ```
//!
//! All integers and floats are little-endian. Coefficients are in flat-index
//! order ℓ(ℓ+1)+m; samples are θ-major. The SSHS grid byte is 0 for the
//! equiangular grid and 1 for Gauss-Legendre.

use std::io::{Read, Write};

use num_complex::Complex64;

use crate::coeffs::{HarmonicCoeffs, RingSamples};
use crate::error::{Error, Result};

pub const COEFF_MAGIC: &[u8; 4] = b"SSHC";
pub const SIGNAL_MAGIC: &[u8; 4] = b"SSHS";
pub const FORMAT_VERSION: u8 = 1;

/// Sampling of the rings stored in an `SSHS` file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridKind {
    Mw,
    Gl,
}

impl GridKind {
    fn to_byte(self) -> u8 {
        match self {
            GridKind::Mw => 0,
            GridKind::Gl => 1,
        }
    }

    fn from_byte(b: u8) -> Result<Self> {
        match b {
            0 => Ok(GridKind::Mw),
            1 => Ok(GridKind::Gl),
            other => Err(Error::Format(format!("unknown grid kind {other}"))),
        }
    }
}

fn write_values<W: Write>(w: &mut W, values: &[Complex64]) -> Result<()> {
    let mut buf = Vec::with_capacity(values.len() * 16);
    for z in values {
        buf.extend_from_slice(&z.re.to_le_bytes());
        buf.extend_from_slice(&z.im.to_le_bytes());
    }
    w.write_all(&buf)?;
    Ok(())
}

fn read_values<R: Read>(r: &mut R, count: usize) -> Result<Vec<Complex64>> {
    let mut buf = vec![0u8; count * 16];
    r.read_exact(&mut buf)?;
    Ok(buf
        .chunks_exact(16)
        .map(|c| {
            let re = f64::from_le_bytes(c[..8].try_into().expect("8 bytes"));
            let im = f64::from_le_bytes(c[8..].try_into().expect("8 bytes"));
            Complex64::new(re, im)
        })
        .collect())
}

fn read_array<R: Read, const N: usize>(r: &mut R) -> Result<[u8; N]> {
    let mut b = [0u8; N];
    r.read_exact(&mut b)?;
    Ok(b)
}

fn read_preamble<R: Read>(r: &mut R, magic: &[u8; 4]) -> Result<()> {
    let found: [u8; 4] = read_array(r)?;
    if &found != magic {
        return Err(Error::Format(format!(
            "expected magic {:?}, found {:?}",
            String::from_utf8_lossy(magic),
            String::from_utf8_lossy(&found)
        )));
    }
    let [version] = read_array(r)?;
    if version != FORMAT_VERSION {
        return Err(Error::Format(format!("unsupported version {version}")));
    }
    Ok(())
}

fn read_shape<R: Read>(r: &mut R) -> Result<(usize, i32)> {
    let l = u32::from_le_bytes(read_array(r)?) as usize;
    let spin = i32::from_le_bytes(read_array(r)?);
    Ok((l, spin))
}

fn write_shape<W: Write>(w: &mut W, band_limit: usize, spin: i32) -> Result<()> {
    let l = u32::try_from(band_limit)
        .map_err(|_| Error::Format(format!("band-limit {band_limit} does not fit in u32")))?;
    w.write_all(&l.to_le_bytes())?;
    w.write_all(&spin.to_le_bytes())?;
    Ok(())
}

pub fn write_coeffs<W: Write>(w: &mut W, coeffs: &HarmonicCoeffs) -> Result<()> {
    w.write_all(COEFF_MAGIC)?;
    w.write_all(&[FORMAT_VERSION])?;
    write_shape(w, coeffs.band_limit(), coeffs.spin())?;
    write_values(w, coeffs.values())
}

pub fn read_coeffs<R: Read>(r: &mut R) -> Result<HarmonicCoeffs> {
    read_preamble(r, COEFF_MAGIC)?;
    let (l, spin) = read_shape(r)?;
    let values = read_values(r, l * l)?;
    HarmonicCoeffs::from_values(l, spin, values)
}

pub fn write_signal<W: Write>(w: &mut W, signal: &RingSamples, grid: GridKind) -> Result<()> {
    w.write_all(SIGNAL_MAGIC)?;
    w.write_all(&[FORMAT_VERSION, grid.to_byte()])?;
    write_shape(w, signal.band_limit(), signal.spin())?;
    write_values(w, signal.samples())
}

pub fn read_signal<R: Read>(r: &mut R) -> Result<(GridKind, RingSamples)> {
    read_preamble(r, SIGNAL_MAGIC)?;
    let [grid] = read_array(r)?;
    let grid = GridKind::from_byte(grid)?;
    let (l, spin) = read_shape(r)?;
    if l == 0 {
        return Err(Error::InvalidBandLimit);
    }
    let values = read_values(r, l * (2 * l - 1))?;
    Ok((grid, RingSamples::from_samples(l, spin, values)?))
}
