use crate::error::{Result, XftError};
use crate::signal::ComplexSignal;
use crate::transform::SpectrumResult;

/// Max-norm errors of a computed vector against a reference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorReport {
    /// `max_j |computed_j - reference_j|`
    pub max_norm: f64,
    pub max_norm_real: f64,
    pub max_norm_imag: f64,
    pub n: usize,
}

pub fn max_norm_error(computed: &ComplexSignal, reference: &ComplexSignal) -> Result<ErrorReport> {
    if computed.len() != reference.len() {
        return Err(XftError::SizeMismatch {
            expected: reference.len(),
            actual: computed.len(),
        });
    }
    let mut report = ErrorReport {
        max_norm: 0.0,
        max_norm_real: 0.0,
        max_norm_imag: 0.0,
        n: computed.len(),
    };
    for (c, r) in computed.iter().zip(reference) {
        let d = c - r;
        report.max_norm = report.max_norm.max(d.norm());
        report.max_norm_real = report.max_norm_real.max(d.re.abs());
        report.max_norm_imag = report.max_norm_imag.max(d.im.abs());
    }
    Ok(report)
}

/// Indices of the two largest magnitudes; ties go to the lower index.
fn two_peaks(magnitudes: &[f64]) -> (usize, usize) {
    let mut first = 0;
    for (i, &m) in magnitudes.iter().enumerate() {
        if m > magnitudes[first] {
            first = i;
        }
    }
    let mut second = if first == 0 { 1 } else { 0 };
    for (i, &m) in magnitudes.iter().enumerate() {
        if i != first && m > magnitudes[second] {
            second = i;
        }
    }
    (first, second)
}

/// Mean off-peak magnitude: `(1/N) (sum_k |G_k| - |G_m| - |G_m'|)` where `m`,
/// `m'` are the two largest entries.
pub fn leakage_mean(spectrum: &ComplexSignal) -> Result<f64> {
    let n = spectrum.len();
    if n < 3 {
        return Err(XftError::InvalidSize(format!(
            "leakage needs at least 3 entries, got {n}"
        )));
    }
    let magnitudes: Vec<f64> = spectrum.iter().map(|g| g.norm()).collect();
    let (m, m2) = two_peaks(&magnitudes);
    let off_peak: f64 = magnitudes
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != m && k != m2)
        .map(|(_, &v)| v)
        .sum();
    Ok(off_peak / n as f64)
}

/// Relative tolerance on `Im(a t_j)` for treating abscissae as real.
const REAL_ABSCISSA_TOL: f64 = 1e-12;

/// Abscissa of the largest `|G_j|` among positive abscissae.
pub fn peak_frequency(result: &SpectrumResult) -> Result<f64> {
    if result.is_empty() {
        return Err(XftError::InvalidSize("empty spectrum".into()));
    }
    if result
        .abscissae
        .iter()
        .any(|w| w.im.abs() > REAL_ABSCISSA_TOL * w.re.abs().max(1.0))
    {
        return Err(XftError::UnsupportedInteriorZ);
    }
    let mut best: Option<(f64, f64)> = None;
    for (g, w) in result.values.iter().zip(&result.abscissae) {
        if w.re <= 0.0 {
            continue;
        }
        let mag = g.norm();
        if best.is_none_or(|(b, _)| mag > b) {
            best = Some((mag, w.re));
        }
    }
    best.map(|(_, w)| w)
        .ok_or_else(|| XftError::InvalidSize("no positive abscissae".into()))
}
