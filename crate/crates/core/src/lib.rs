//! XFT: a Hermite-quadrature discretization of the fractional Fourier
//! transform.
//!
//! The continuous transform at parameter `z` (`|z| <= 1`, `z != +-1`),
//!
//! ```text
//! F_z[g](t) = sqrt(2/(1-z^2)) * int exp(-((1+z^2)(t^2+s^2) - 4 t s z) / (2(1-z^2))) g(s) ds,
//! ```
//!
//! is discretized on the zeros of the Hermite polynomial `H_N`. Two routes are
//! provided:
//!
//! * [`kernel`]: dense `N x N` oracles, the exact eigenvector kernel and its
//!   Gaussian large-`N` limit.
//! * [`transform`]: the O(N log N) chirp-FFT-chirp evaluation on the uniform
//!   asymptotic grid, including the standard Fourier case `z = i` and its
//!   closed-form inverse.
//!
//! [`signals`] holds closed-form test pairs and [`metrics`] the error and
//! leakage measures used to judge the transforms.

pub mod dft;
pub mod error;
pub mod hermite;
pub mod kernel;
pub mod metrics;
pub mod params;
pub mod signal;
pub mod signals;
pub mod transform;

pub use error::{Result, XftError};
pub use hermite::{
    asymptotic_grid, exact_hermite_zeros, orthonormal_basis, scaled_hermite_sequence, EigenBasis,
    Grid, HermiteSequence, DENSE_ORACLE_LIMIT,
};
pub use kernel::{apply_kernel, asymptotic_kernel, exact_kernel, KernelKind, KernelMatrix};
pub use metrics::{leakage_mean, max_norm_error, peak_frequency, ErrorReport};
pub use params::{make_params, TransformParams};
pub use signal::ComplexSignal;
pub use signals::{
    harmonic_pulses, reference_transform, resolve_convention, sample, sample_at, Convention,
    SignalKind, SignalSpec,
};
pub use transform::{frft_dense_check, frft_forward, xft_forward, xft_inverse, SpectrumResult};

pub use num_complex::Complex64;
