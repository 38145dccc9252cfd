use num_complex::Complex64;

use crate::error::{Result, XftError};

/// A finite, length-n vector of complex samples.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSignal {
    samples: Vec<Complex64>,
}

impl ComplexSignal {
    pub fn new(samples: Vec<Complex64>) -> Result<Self> {
        if let Some(index) = samples
            .iter()
            .position(|s| !(s.re.is_finite() && s.im.is_finite()))
        {
            return Err(XftError::NonFinite { index });
        }
        Ok(Self { samples })
    }

    pub fn from_real(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    /// Wraps samples already known to be finite (outputs of internal transforms).
    pub(crate) fn from_vec_unchecked(samples: Vec<Complex64>) -> Self {
        Self { samples }
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn into_inner(self) -> Vec<Complex64> {
        self.samples
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Complex64> {
        self.samples.iter()
    }

    pub(crate) fn require_nonempty(&self) -> Result<()> {
        if self.samples.is_empty() {
            Err(XftError::InvalidSize("empty signal".into()))
        } else {
            Ok(())
        }
    }
}

impl std::ops::Index<usize> for ComplexSignal {
    type Output = Complex64;

    fn index(&self, index: usize) -> &Complex64 {
        &self.samples[index]
    }
}

impl<'a> IntoIterator for &'a ComplexSignal {
    type Item = &'a Complex64;
    type IntoIter = std::slice::Iter<'a, Complex64>;

    fn into_iter(self) -> Self::IntoIter {
        self.samples.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_finite() {
        let err = ComplexSignal::new(vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(f64::NAN, 0.0),
        ])
        .unwrap_err();
        assert_eq!(err, XftError::NonFinite { index: 1 });
        assert!(ComplexSignal::from_real(&[0.0, f64::INFINITY]).is_err());
    }

    #[test]
    fn from_real_has_zero_imaginary_part() {
        let s = ComplexSignal::from_real(&[1.0, -2.0]).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s[1], Complex64::new(-2.0, 0.0));
    }
}
