use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Result, XftError};

/// Slack on `|z| <= 1` so that `exp(i phi)` computed in floating point passes.
pub const DISK_TOLERANCE: f64 = 1e-12;

/// Minimum `|1 - z^2|`; the prefactor and `mu` diverge as `z -> +-1`.
pub const SINGULARITY_THRESHOLD: f64 = 1e-6;

/// Below this `|z|` the fast-path scaling `a` is treated as absent.
pub const SCALING_THRESHOLD: f64 = 1e-6;

/// A validated transform parameter `z` with its derived quantities
///
/// ```text
/// mu = (1 + z^2) / (2 (1 - z^2))
/// nu = 2 z / (1 - z^2)
/// a  = 2i (1 - z^2) / (pi z)
/// prefactor = sqrt(2 / (1 - z^2))   (principal branch)
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformParams {
    pub z: Complex64,
    pub mu: Complex64,
    pub nu: Complex64,
    pub a: Option<Complex64>,
    pub prefactor: Complex64,
}

impl TransformParams {
    /// `z = r exp(i phi)`.
    pub fn from_polar(r: f64, phi: f64) -> Result<Self> {
        make_params(Complex64::from_polar(r, phi))
    }

    /// Parameters of the ordinary Fourier transform, `z = i`.
    pub fn fourier() -> Self {
        make_params(Complex64::i()).expect("z = i is always valid")
    }

    pub fn scaling(&self) -> Result<Complex64> {
        self.a.ok_or(XftError::AbsentScaling)
    }

    pub fn is_on_boundary(&self) -> bool {
        (self.z.norm() - 1.0).abs() <= DISK_TOLERANCE
    }
}

pub fn make_params(z: Complex64) -> Result<TransformParams> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(XftError::InvalidParameter(format!("z = {z} is not finite")));
    }
    let modulus = z.norm();
    if modulus > 1.0 + DISK_TOLERANCE {
        return Err(XftError::OutOfDisk { modulus });
    }
    let one = Complex64::new(1.0, 0.0);
    let z2 = z * z;
    let denom = one - z2;
    let distance = denom.norm();
    if distance < SINGULARITY_THRESHOLD {
        return Err(XftError::SingularParameter { distance });
    }
    let mu = (one + z2) / (2.0 * denom);
    let nu = 2.0 * z / denom;
    let a = (modulus >= SCALING_THRESHOLD).then(|| 2.0 * Complex64::i() * denom / (PI * z));
    let prefactor = (2.0 / denom).sqrt();
    Ok(TransformParams {
        z,
        mu,
        nu,
        a,
        prefactor,
    })
}
