use std::io::Write;
use std::path::PathBuf;

use serde::Serialize;
use xft::{
    asymptotic_grid, frft_forward, harmonic_pulses, leakage_mean, max_norm_error, peak_frequency,
    reference_transform, sample, xft_forward, Complex64, ComplexSignal, Convention, SignalKind,
    SignalSpec, XftError,
};

use crate::input::load_signal;
use crate::CliError;

/// Where the samples come from.
#[derive(Debug, Clone)]
pub enum Source {
    Corpus(SignalSpec),
    File(PathBuf),
}

/// Reference normalization plus how it was chosen.
#[derive(Debug, Clone, PartialEq)]
pub struct ConventionChoice {
    pub convention: Convention,
    pub origin: String,
}

impl ConventionChoice {
    pub fn explicit(convention: Convention) -> Self {
        Self {
            convention,
            origin: "flag".into(),
        }
    }

    /// The normalization selected by the dense exact-kernel oracle.
    pub fn resolved() -> Result<Self, CliError> {
        let r = xft::signals::resolve_convention()?;
        Ok(Self {
            convention: r.selected,
            origin: format!(
                "dense-oracle (paper_error={:.3e}, namias_error={:.3e})",
                r.paper_error, r.namias_error
            ),
        })
    }
}

#[derive(Debug, Clone)]
pub struct Job {
    pub source: Source,
    pub n: Option<usize>,
    /// `None` is the standard transform.
    pub z: Option<Complex64>,
    pub compare: bool,
    pub convention: ConventionChoice,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub max_abs_g: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_norm: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_norm_real: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_norm_imag: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leakage_mean: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub peak_frequency: Option<f64>,
}

impl Summary {
    pub fn entries(&self) -> Vec<(&'static str, f64)> {
        let mut out = vec![("max_abs_g", self.max_abs_g)];
        let optional = [
            ("max_norm", self.max_norm),
            ("max_norm_real", self.max_norm_real),
            ("max_norm_imag", self.max_norm_imag),
            ("leakage_mean", self.leakage_mean),
            ("peak_frequency", self.peak_frequency),
        ];
        out.extend(optional.into_iter().filter_map(|(k, v)| v.map(|v| (k, v))));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Metadata {
    pub command: String,
    pub n: usize,
    pub z_re: f64,
    pub z_im: f64,
    pub source: String,
    pub convention: String,
    pub convention_origin: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TransformReport {
    pub omega_re: Vec<f64>,
    pub omega_im: Vec<f64>,
    pub g_re: Vec<f64>,
    pub g_im: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ref_re: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ref_im: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abs_err: Option<Vec<f64>>,
    pub summary: Summary,
    pub metadata: Metadata,
}

impl TransformReport {
    pub fn len(&self) -> usize {
        self.g_re.len()
    }

    pub fn is_empty(&self) -> bool {
        self.g_re.is_empty()
    }
}

fn describe(spec: &SignalSpec) -> String {
    if spec.params.is_empty() {
        return spec.kind.to_string();
    }
    let params: Vec<String> = spec
        .params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect();
    format!("{}({})", spec.kind, params.join(","))
}

fn reference(
    spec: &SignalSpec,
    result: &xft::SpectrumResult,
    convention: Convention,
) -> Result<ComplexSignal, XftError> {
    let z = result.params.z;
    if spec.is_index_harmonic() {
        if (z - Complex64::i()).norm() > 1e-12 {
            return Err(XftError::NoClosedForm(format!(
                "index-grid harmonic at z = {z}"
            )));
        }
        return harmonic_pulses(result.len(), spec.param("m").unwrap_or_default());
    }
    let values = result
        .abscissae
        .iter()
        .map(|&w| reference_transform(spec, z, w, convention))
        .collect::<Result<Vec<_>, _>>()?;
    ComplexSignal::new(values)
}

/// Samples, transforms and (optionally) compares one signal.
pub fn compute(job: &Job) -> Result<TransformReport, CliError> {
    let (g, spec) = match &job.source {
        Source::Corpus(spec) => {
            let n = job
                .n
                .ok_or_else(|| CliError::Usage("--n is required with --signal".into()))?;
            (sample(spec, &asymptotic_grid(n)?)?, Some(spec))
        }
        Source::File(path) => (load_signal(path, job.n)?, None),
    };
    let result = match job.z {
        None => xft_forward(&g)?,
        Some(z) => frft_forward(&g, z)?,
    };

    let reference = match (job.compare, spec) {
        (false, _) => None,
        (true, Some(spec)) => Some(reference(spec, &result, job.convention.convention)?),
        (true, None) => {
            return Err(CliError::Usage("--compare needs a corpus signal".into()));
        }
    };

    let mut summary = Summary {
        max_abs_g: result.values.iter().map(|v| v.norm()).fold(0.0, f64::max),
        max_norm: None,
        max_norm_real: None,
        max_norm_imag: None,
        leakage_mean: None,
        peak_frequency: None,
    };
    if let Some(r) = &reference {
        let report = max_norm_error(&result.values, r)?;
        summary.max_norm = Some(report.max_norm);
        summary.max_norm_real = Some(report.max_norm_real);
        summary.max_norm_imag = Some(report.max_norm_imag);
    }
    if spec.is_some_and(|s| s.kind == SignalKind::Harmonic) && result.len() >= 3 {
        summary.leakage_mean = Some(leakage_mean(&result.values)?);
        summary.peak_frequency = match peak_frequency(&result) {
            Ok(p) => Some(p),
            Err(XftError::UnsupportedInteriorZ) => None,
            Err(e) => return Err(e.into()),
        };
    }

    let z = result.params.z;
    let metadata = Metadata {
        command: if job.z.is_some() { "frft" } else { "fft" }.into(),
        n: result.len(),
        z_re: z.re,
        z_im: z.im,
        source: match &job.source {
            Source::Corpus(spec) => describe(spec),
            Source::File(path) => format!("file:{}", path.display()),
        },
        convention: job.convention.convention.to_string(),
        convention_origin: job.convention.origin.clone(),
    };

    let parts = |v: &[Complex64]| -> (Vec<f64>, Vec<f64>) {
        (
            v.iter().map(|c| c.re).collect(),
            v.iter().map(|c| c.im).collect(),
        )
    };
    let (omega_re, omega_im) = parts(&result.abscissae);
    let (g_re, g_im) = parts(result.values.as_slice());
    let (ref_re, ref_im, abs_err) = match &reference {
        Some(r) => {
            let (re, im) = parts(r.as_slice());
            let err = result
                .values
                .iter()
                .zip(r)
                .map(|(a, b)| (a - b).norm())
                .collect();
            (Some(re), Some(im), Some(err))
        }
        None => (None, None, None),
    };
    Ok(TransformReport {
        omega_re,
        omega_im,
        g_re,
        g_im,
        ref_re,
        ref_im,
        abs_err,
        summary,
        metadata,
    })
}

/// Seventeen significant digits: enough to round-trip every `f64`.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

fn finish<W: Write>(wtr: csv::Writer<W>) -> Result<W, CliError> {
    wtr.into_inner()
        .map_err(|e| CliError::Output(e.into_error()))
}

/// Table with header `j,omega_re,omega_im,g_re,g_im[,ref_re,ref_im,abs_err]`
/// followed by `# key=value` summary and metadata lines.
pub fn write_csv<W: Write>(report: &TransformReport, out: W) -> Result<(), CliError> {
    let mut wtr = csv_writer(out);
    let mut header = vec!["j", "omega_re", "omega_im", "g_re", "g_im"];
    if report.ref_re.is_some() {
        header.extend(["ref_re", "ref_im", "abs_err"]);
    }
    wtr.write_record(&header)?;
    for j in 0..report.len() {
        let mut row = vec![
            j.to_string(),
            fmt_f64(report.omega_re[j]),
            fmt_f64(report.omega_im[j]),
            fmt_f64(report.g_re[j]),
            fmt_f64(report.g_im[j]),
        ];
        if let (Some(re), Some(im), Some(err)) = (&report.ref_re, &report.ref_im, &report.abs_err) {
            row.extend([fmt_f64(re[j]), fmt_f64(im[j]), fmt_f64(err[j])]);
        }
        wtr.write_record(&row)?;
    }
    let mut out = finish(wtr)?;
    writeln!(out, "# summary")?;
    for (key, value) in report.summary.entries() {
        writeln!(out, "# {key}={}", fmt_f64(value))?;
    }
    let m = &report.metadata;
    writeln!(out, "# command={}", m.command)?;
    writeln!(out, "# n={}", m.n)?;
    writeln!(out, "# z_re={}", fmt_f64(m.z_re))?;
    writeln!(out, "# z_im={}", fmt_f64(m.z_im))?;
    writeln!(out, "# source={}", m.source)?;
    writeln!(out, "# convention={}", m.convention)?;
    writeln!(out, "# convention_origin={}", m.convention_origin)?;
    out.flush()?;
    Ok(())
}

pub fn write_json<W: Write, T: Serialize>(value: &T, mut out: W) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    out.flush()?;
    Ok(())
}

/// Rows of `(column, value)` pairs as CSV with the given header.
pub fn write_rows<W: Write>(header: &[&str], rows: &[Vec<String>], out: W) -> Result<(), CliError> {
    let mut wtr = csv_writer(out);
    wtr.write_record(header)?;
    for row in rows {
        wtr.write_record(row)?;
    }
    finish(wtr)?.flush()?;
    Ok(())
}
