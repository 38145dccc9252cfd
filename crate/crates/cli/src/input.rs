use std::fs::File;
use std::io::Read;
use std::path::Path;

use xft::{Complex64, ComplexSignal};

use crate::CliError;

/// Reads a signal from CSV: one column (real part) or two (re, im) per row,
/// no header, `#` comments allowed. `n`, when given, must equal the row count.
pub fn load_signal(path: &Path, n: Option<usize>) -> Result<ComplexSignal, CliError> {
    let file = File::open(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_signal(file, n)
}

pub fn parse_signal<R: Read>(reader: R, n: Option<usize>) -> Result<ComplexSignal, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(reader);
    let mut samples = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| CliError::Input {
            line: e.position().map_or(0, |p| p.line()),
            message: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line());
        let number = |i: usize| -> Result<f64, CliError> {
            let text = record[i].replace('\u{2212}', "-");
            text.parse().map_err(|_| CliError::Input {
                line,
                message: format!("malformed number '{}'", &record[i]),
            })
        };
        let value = match record.len() {
            1 => Complex64::new(number(0)?, 0.0),
            2 => Complex64::new(number(0)?, number(1)?),
            k => {
                return Err(CliError::Input {
                    line,
                    message: format!("expected 1 or 2 columns, found {k}"),
                })
            }
        };
        samples.push(value);
    }
    if let Some(n) = n {
        if samples.len() != n {
            return Err(CliError::RowCount {
                expected: n,
                actual: samples.len(),
            });
        }
    }
    if samples.is_empty() {
        return Err(CliError::Input {
            line: 0,
            message: "no samples".into(),
        });
    }
    Ok(ComplexSignal::new(samples)?)
}
