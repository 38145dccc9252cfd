//! Dense kernel matrices used as slow oracles for the fast transforms.
//!
//! * exact: `sqrt(2 pi) U^T D(z) U` on the exact Hermite zeros, with
//!   `D(z) = diag(1, z, ..., z^{n-1})`.
//! * asymptotic: the Mehler-limit Gaussian kernel on the uniform grid,
//!   `prefactor * exp(-mu t_j^2 + nu t_j t_k - mu t_k^2) * dt`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Result, XftError};
use crate::hermite::{asymptotic_grid, orthonormal_basis, DENSE_ORACLE_LIMIT};
use crate::params::make_params;
use crate::signal::ComplexSignal;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelKind {
    Exact,
    Asymptotic,
}

#[derive(Debug, Clone, PartialEq)]
pub struct KernelMatrix {
    pub n: usize,
    pub kind: KernelKind,
    pub z: Complex64,
    /// Nodes the kernel lives on: exact zeros or the asymptotic grid.
    pub nodes: Vec<f64>,
    entries: Vec<Complex64>,
}

impl KernelMatrix {
    pub fn get(&self, j: usize, k: usize) -> Complex64 {
        self.entries[j * self.n + k]
    }

    pub fn row(&self, j: usize) -> &[Complex64] {
        &self.entries[j * self.n..(j + 1) * self.n]
    }

    /// Dense product `self * other` (entries only; kind/z describe `self`).
    pub fn matmul(&self, other: &KernelMatrix) -> Result<Vec<Complex64>> {
        if other.n != self.n {
            return Err(XftError::SizeMismatch {
                expected: self.n,
                actual: other.n,
            });
        }
        let n = self.n;
        let mut out = vec![Complex64::new(0.0, 0.0); n * n];
        out.par_chunks_mut(n).enumerate().for_each(|(j, row)| {
            for (m, &left) in self.row(j).iter().enumerate() {
                for (o, &right) in row.iter_mut().zip(other.row(m)) {
                    *o += left * right;
                }
            }
        });
        Ok(out)
    }
}

fn check_dense_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(XftError::InvalidSize("kernel needs n >= 1".into()));
    }
    if n > DENSE_ORACLE_LIMIT {
        return Err(XftError::Capability {
            n,
            limit: DENSE_ORACLE_LIMIT,
        });
    }
    Ok(())
}

fn check_disk(z: Complex64) -> Result<()> {
    let modulus = z.norm();
    if !modulus.is_finite() {
        return Err(XftError::InvalidParameter(format!("z = {z} is not finite")));
    }
    if modulus > 1.0 + crate::params::DISK_TOLERANCE {
        return Err(XftError::OutOfDisk { modulus });
    }
    Ok(())
}

pub fn exact_kernel(n: usize, z: Complex64) -> Result<KernelMatrix> {
    check_dense_size(n)?;
    check_disk(z)?;
    let basis = orthonormal_basis(n)?;

    let mut powers = Vec::with_capacity(n);
    let mut p = Complex64::new(1.0, 0.0);
    for _ in 0..n {
        powers.push(p);
        p *= z;
    }

    let scale = (2.0 * PI).sqrt();
    let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
    // Upper triangle row by row; the matrix is symmetric.
    entries.par_chunks_mut(n).enumerate().for_each(|(j, row)| {
        for (m, &power) in powers.iter().enumerate() {
            let u_row = basis.row(m);
            let left = power * u_row[j];
            for (o, &uk) in row[j..].iter_mut().zip(&u_row[j..]) {
                *o += left * uk;
            }
        }
        for o in row[j..].iter_mut() {
            *o *= scale;
        }
    });
    for j in 0..n {
        for k in 0..j {
            entries[j * n + k] = entries[k * n + j];
        }
    }

    Ok(KernelMatrix {
        n,
        kind: KernelKind::Exact,
        z,
        nodes: basis.zeros,
        entries,
    })
}

pub fn asymptotic_kernel(n: usize, z: Complex64) -> Result<KernelMatrix> {
    let params = make_params(z)?;
    let grid = asymptotic_grid(n)?;
    let t = &grid.nodes;
    let weight = params.prefactor * grid.spacing;
    let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
    entries.par_chunks_mut(n).enumerate().for_each(|(j, row)| {
        let tj = t[j];
        for (o, &tk) in row.iter_mut().zip(t) {
            *o = weight * (-params.mu * (tj * tj + tk * tk) + params.nu * (tj * tk)).exp();
        }
    });
    Ok(KernelMatrix {
        n,
        kind: KernelKind::Asymptotic,
        z,
        nodes: grid.nodes,
        entries,
    })
}

/// Quadrature sum `out[j] = sum_k K[j][k] g[k]`.
pub fn apply_kernel(kernel: &KernelMatrix, g: &ComplexSignal) -> Result<ComplexSignal> {
    if g.len() != kernel.n {
        return Err(XftError::SizeMismatch {
            expected: kernel.n,
            actual: g.len(),
        });
    }
    let g = g.as_slice();
    let out = (0..kernel.n)
        .into_par_iter()
        .map(|j| kernel.row(j).iter().zip(g).map(|(&a, &b)| a * b).sum())
        .collect();
    Ok(ComplexSignal::from_vec_unchecked(out))
}
