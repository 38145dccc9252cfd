//! Built-in test signals with closed-form (fractional) Fourier transforms.
//!
//! | name           | g(t)                         | closed form available at |
//! |----------------|------------------------------|--------------------------|
//! | `chirp_cos`    | `cos(t^2)`                   | `z = i`                  |
//! | `cauchy_exp`   | `e^{-t/2} / (b - e^{-t})`    | `z = i`                  |
//! | `harmonic`     | `cos(2 pi m k / N)` or `cos(omega t)` | discrete pulses  |
//! | `gauss_beta`   | `exp(-t^2/2 + beta t)`       | `|z| = 1`                |
//! | `constant_one` | `1`                          | `|z| = 1`                |
//! | `rect`         | unit-width indicator         | `z = i`                  |
//!
//! Two normalizations are in circulation for the fractional transform. The
//! quadrature here approximates the transform whose `z = i` case is the
//! plain integral `int exp(i w t) g(t) dt` ([`Convention::Paper`]); the unitary
//! form ([`Convention::Namias`]) is smaller by `sqrt(2 pi)`.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Result, XftError};
use crate::hermite::Grid;
use crate::kernel::{apply_kernel, exact_kernel};
use crate::signal::ComplexSignal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SignalKind {
    ChirpCos,
    CauchyExp,
    Harmonic,
    GaussBeta,
    ConstantOne,
    Rect,
}

impl SignalKind {
    pub const ALL: [SignalKind; 6] = [
        SignalKind::ChirpCos,
        SignalKind::CauchyExp,
        SignalKind::Harmonic,
        SignalKind::GaussBeta,
        SignalKind::ConstantOne,
        SignalKind::Rect,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SignalKind::ChirpCos => "chirp_cos",
            SignalKind::CauchyExp => "cauchy_exp",
            SignalKind::Harmonic => "harmonic",
            SignalKind::GaussBeta => "gauss_beta",
            SignalKind::ConstantOne => "constant_one",
            SignalKind::Rect => "rect",
        }
    }

    fn allowed_params(self) -> &'static [&'static str] {
        match self {
            SignalKind::CauchyExp => &["b"],
            SignalKind::Harmonic => &["m", "omega"],
            SignalKind::GaussBeta => &["beta"],
            _ => &[],
        }
    }
}

impl fmt::Display for SignalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SignalKind {
    type Err = XftError;

    fn from_str(s: &str) -> Result<Self> {
        SignalKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| XftError::UnknownSignal(s.to_string()))
    }
}

/// Which normalization a reference value is expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    /// Same normalization as the quadrature; `z = i` is the plain Fourier integral.
    Paper,
    /// Unitary normalization, `1/sqrt(2 pi)` times `Paper`.
    Namias,
}

impl Convention {
    pub fn name(self) -> &'static str {
        match self {
            Convention::Paper => "paper",
            Convention::Namias => "namias",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Convention {
    type Err = XftError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(Convention::Paper),
            "namias" => Ok(Convention::Namias),
            other => Err(XftError::InvalidParameter(format!(
                "unknown convention '{other}' (expected paper or namias)"
            ))),
        }
    }
}

/// A validated corpus entry. Defaults (`b = 1`, `beta = 0`) are filled in.
#[derive(Debug, Clone, PartialEq)]
pub struct SignalSpec {
    pub kind: SignalKind,
    pub params: BTreeMap<String, f64>,
}

impl SignalSpec {
    pub fn new(kind: SignalKind, params: BTreeMap<String, f64>) -> Result<Self> {
        let mut params = params;
        for (key, value) in &params {
            if !kind.allowed_params().contains(&key.as_str()) {
                return Err(XftError::InvalidParameter(format!(
                    "signal '{kind}' does not take parameter '{key}'"
                )));
            }
            if !value.is_finite() {
                return Err(XftError::InvalidParameter(format!(
                    "parameter '{key}' = {value} is not finite"
                )));
            }
        }
        match kind {
            SignalKind::CauchyExp => {
                let b = *params.entry("b".into()).or_insert(1.0);
                if b <= 0.0 {
                    return Err(XftError::InvalidParameter(format!(
                        "cauchy_exp needs b > 0, got {b}"
                    )));
                }
            }
            SignalKind::GaussBeta => {
                params.entry("beta".into()).or_insert(0.0);
            }
            SignalKind::Harmonic => {
                match (params.contains_key("m"), params.contains_key("omega")) {
                    (true, false) | (false, true) => {}
                    (false, false) => {
                        return Err(XftError::MissingParam {
                            signal: kind.name().into(),
                            param: "m (or omega)".into(),
                        })
                    }
                    (true, true) => {
                        return Err(XftError::InvalidParameter(
                            "harmonic takes either m or omega, not both".into(),
                        ))
                    }
                }
            }
            _ => {}
        }
        Ok(Self { kind, params })
    }

    pub fn named(name: &str, params: &[(&str, f64)]) -> Result<Self> {
        let kind = name.parse()?;
        let params = params.iter().map(|&(k, v)| (k.to_string(), v)).collect();
        Self::new(kind, params)
    }

    pub fn param(&self, key: &str) -> Option<f64> {
        self.params.get(key).copied()
    }

    fn required(&self, key: &str) -> Result<f64> {
        self.param(key).ok_or_else(|| XftError::MissingParam {
            signal: self.kind.name().into(),
            param: key.into(),
        })
    }

    /// Index-grid harmonic (`m` given) rather than a continuous cosine.
    pub fn is_index_harmonic(&self) -> bool {
        self.kind == SignalKind::Harmonic && self.params.contains_key("m")
    }
}

fn rect(t: f64) -> f64 {
    let a = t.abs();
    if a < 0.5 {
        1.0
    } else if a == 0.5 {
        0.5
    } else {
        0.0
    }
}

/// Samples `spec` at arbitrary nodes. The index-grid harmonic ignores the node
/// values and uses `k = j - (n-1)/2`.
pub fn sample_at(spec: &SignalSpec, nodes: &[f64]) -> Result<ComplexSignal> {
    let n = nodes.len();
    let center = (n as f64 - 1.0) / 2.0;
    let real: Vec<f64> = match spec.kind {
        SignalKind::ChirpCos => nodes.iter().map(|t| (t * t).cos()).collect(),
        SignalKind::CauchyExp => {
            let b = spec.required("b")?;
            nodes
                .iter()
                .map(|&t| (-t / 2.0).exp() / (b - (-t).exp()))
                .collect()
        }
        SignalKind::Harmonic => {
            if let Some(m) = spec.param("m") {
                let tau = 2.0 * PI * m / n as f64;
                (0..n).map(|j| ((j as f64 - center) * tau).cos()).collect()
            } else {
                let omega = spec.required("omega")?;
                nodes.iter().map(|t| (omega * t).cos()).collect()
            }
        }
        SignalKind::GaussBeta => {
            let beta = spec.required("beta")?;
            nodes
                .iter()
                .map(|&t| (-t * t / 2.0 + beta * t).exp())
                .collect()
        }
        SignalKind::ConstantOne => vec![1.0; n],
        SignalKind::Rect => nodes.iter().map(|&t| rect(t)).collect(),
    };
    ComplexSignal::from_real(&real)
}

pub fn sample(spec: &SignalSpec, grid: &Grid) -> Result<ComplexSignal> {
    sample_at(spec, &grid.nodes)
}

const Z_MATCH_TOLERANCE: f64 = 1e-12;

fn require_fourier(spec: &SignalSpec, z: Complex64) -> Result<()> {
    if (z - Complex64::i()).norm() > Z_MATCH_TOLERANCE {
        return Err(XftError::NoClosedForm(format!(
            "{} at z = {z} (only z = i)",
            spec.kind
        )));
    }
    Ok(())
}

fn require_boundary(spec: &SignalSpec, z: Complex64) -> Result<f64> {
    if (z.norm() - 1.0).abs() > Z_MATCH_TOLERANCE {
        return Err(XftError::NoClosedForm(format!(
            "{} at z = {z} (only |z| = 1)",
            spec.kind
        )));
    }
    Ok(z.arg())
}

/// Closed-form transform of `spec` at parameter `z`, evaluated at `omega`.
pub fn reference_transform(
    spec: &SignalSpec,
    z: Complex64,
    omega: Complex64,
    convention: Convention,
) -> Result<Complex64> {
    let i = Complex64::i();
    let root_two_pi = (2.0 * PI).sqrt();
    // (value, whether it is already in the Paper normalization)
    let (value, paper_native) = match spec.kind {
        SignalKind::ChirpCos => {
            require_fourier(spec, z)?;
            (PI.sqrt() * ((omega * omega - PI) / 4.0).cos(), true)
        }
        SignalKind::CauchyExp => {
            require_fourier(spec, z)?;
            let b = spec.required("b")?;
            let power = ((0.5 + i * omega) * b.ln()).exp();
            let angle = PI / 2.0 - i * PI * omega;
            (PI / power * (angle.cos() / angle.sin()), true)
        }
        SignalKind::Rect => {
            require_fourier(spec, z)?;
            let v = if omega.norm() < 1e-8 {
                1.0 - omega * omega / 24.0
            } else {
                2.0 * (omega / 2.0).sin() / omega
            };
            (v, true)
        }
        SignalKind::GaussBeta => {
            let phi = require_boundary(spec, z)?;
            let beta = spec.required("beta")?;
            let rot = Complex64::from_polar(1.0, phi);
            let exponent =
                -omega * omega / 2.0 - i / 2.0 * beta * beta * rot * phi.sin() + beta * omega * rot;
            (exponent.exp(), false)
        }
        SignalKind::ConstantOne => {
            let phi = require_boundary(spec, z)?;
            let cos_phi = phi.cos();
            if cos_phi.abs() < Z_MATCH_TOLERANCE {
                return Err(XftError::NoClosedForm(format!(
                    "constant_one at phi = {phi} (cos phi = 0)"
                )));
            }
            let phase = (i * (omega * omega * phi.tan() - phi) / 2.0).exp();
            (phase / Complex64::new(cos_phi, 0.0).sqrt(), false)
        }
        SignalKind::Harmonic => {
            return Err(XftError::NoClosedForm(
                "harmonic (use harmonic_pulses for the discrete identity)".into(),
            ))
        }
    };
    let paper = if paper_native {
        value
    } else {
        value * root_two_pi
    };
    Ok(match convention {
        Convention::Paper => paper,
        Convention::Namias => paper / root_two_pi,
    })
}

/// Exact fast-transform spectrum of the index-grid harmonic `cos(2 pi m k/N)`:
/// pulses of height `(pi/2) sqrt(N/2)` at symmetric indices `+m` and `-m`
/// (coinciding at `m = 0`). Needs `m` integer for odd `N`, half-integer for
/// even `N`, and `|m| <= (N-1)/2`.
pub fn harmonic_pulses(n: usize, m: f64) -> Result<ComplexSignal> {
    if n == 0 {
        return Err(XftError::InvalidSize("pulse spectrum needs n >= 1".into()));
    }
    let center = (n as f64 - 1.0) / 2.0;
    let to_index = |sym: f64| -> Option<usize> {
        let j = center + sym;
        (j.fract() == 0.0 && j >= 0.0 && j <= n as f64 - 1.0).then_some(j as usize)
    };
    let (Some(plus), Some(minus)) = (to_index(m), to_index(-m)) else {
        return Err(XftError::NoClosedForm(format!(
            "harmonic m = {m} does not sit on the N = {n} index grid"
        )));
    };
    let height = PI / 2.0 * (n as f64 / 2.0).sqrt();
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    out[plus] += height;
    out[minus] += height;
    ComplexSignal::new(out)
}

/// Outcome of checking both normalizations against the dense exact-kernel oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConventionResolution {
    pub selected: Convention,
    pub paper_error: f64,
    pub namias_error: f64,
}

const RESOLUTION_SIZE: usize = 64;
const RESOLUTION_PHI: f64 = 1.0;
const RESOLUTION_BETA: f64 = 0.5;

/// Applies the exact kernel (n = 64, z = e^{i}) to `gauss_beta` sampled at the
/// exact zeros and keeps whichever normalization of the closed form lies closer.
pub fn resolve_convention() -> Result<ConventionResolution> {
    static RESOLVED: OnceLock<ConventionResolution> = OnceLock::new();
    if let Some(r) = RESOLVED.get() {
        return Ok(*r);
    }
    let z = Complex64::from_polar(1.0, RESOLUTION_PHI);
    let kernel = exact_kernel(RESOLUTION_SIZE, z)?;
    let spec = SignalSpec::named("gauss_beta", &[("beta", RESOLUTION_BETA)])?;
    let g = sample_at(&spec, &kernel.nodes)?;
    let out = apply_kernel(&kernel, &g)?;
    let error_for = |convention| -> Result<f64> {
        let mut worst = 0.0f64;
        for (o, &t) in out.iter().zip(&kernel.nodes) {
            let r = reference_transform(&spec, z, Complex64::new(t, 0.0), convention)?;
            worst = worst.max((o - r).norm());
        }
        Ok(worst)
    };
    let paper_error = error_for(Convention::Paper)?;
    let namias_error = error_for(Convention::Namias)?;
    let selected = if paper_error <= namias_error {
        Convention::Paper
    } else {
        Convention::Namias
    };
    let resolution = ConventionResolution {
        selected,
        paper_error,
        namias_error,
    };
    Ok(*RESOLVED.get_or_init(|| resolution))
}
