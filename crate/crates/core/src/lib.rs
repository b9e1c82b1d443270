//! Exact spin spherical harmonic transforms on an equiangular sampling of the
//! sphere.
//!
//! A signal band-limited at L is sampled on L colatitude rings
//! θ_t = π(2t+1)/(2L−1) by 2L−1 longitudes. The transforms extend the signal
//! in θ onto the torus, where FFTs apply, and evaluate the remaining
//! Wigner-d sums in O(L³) time with no precomputation.
//!
//! ```
//! use mwsht::{HarmonicCoeffs, MwTransform};
//! use num_complex::Complex64;
//!
//! let transform = MwTransform::new(8)?;
//! let mut coeffs = HarmonicCoeffs::zeros(8, 2)?;
//! coeffs.set(3, -1, Complex64::new(1.0, 0.5));
//! let signal = transform.inverse(&coeffs)?;
//! let back = transform.forward(&signal)?;
//! assert!(back.max_abs_diff(&coeffs) < 1e-12);
//! # Ok::<(), mwsht::Error>(())
//! ```

pub mod coeffs;
pub mod error;
pub mod gl;
pub mod grid;
pub mod io;
pub mod oracle;
pub mod quadrature;
pub mod transform;
pub mod wigner;

pub use coeffs::{HarmonicCoeffs, MwSignal, RealMwSignal, RingSamples};
pub use error::{Error, Result};
pub use gl::{GlGrid, GlSignal, GlTransform};
pub use grid::MwGrid;
pub use io::GridKind;
pub use quadrature::QuadWeights;
pub use transform::{FourierPlane, MwTransform, RingCoeffs};
pub use wigner::WignerMethod;
