//! Hermite-polynomial machinery: the uniform asymptotic node grid, the exact
//! zeros of `H_n`, and the orthonormal eigenvectors of the symmetrized Jacobi
//! matrix
//!
//! ```text
//! H = tridiag(sqrt(m/2)),  m = 1..n-1
//! ```
//!
//! whose eigenvalues are the zeros of `H_n` and whose eigenvectors carry the
//! quadrature.
//!
//! All polynomial values are computed in the orthonormal scaling
//! `h_m = H_m / sqrt(2^m m! sqrt(pi))`, which keeps the factorials of the
//! raw recurrence out of every intermediate quantity.

use std::f64::consts::PI;

use crate::error::{Result, XftError};

/// Largest `n` accepted by the dense eigenvector and kernel oracles.
pub const DENSE_ORACLE_LIMIT: usize = 512;

pub const DEFAULT_ZERO_TOL: f64 = 1e-14;

const MAX_NEWTON_ITERATIONS: usize = 100;

/// The `n` asymptotic Hermite zeros `t_k = (pi/2)(2(k+1) - n - 1)/sqrt(2n)` and
/// their common spacing `pi/sqrt(2n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub n: usize,
    pub nodes: Vec<f64>,
    pub spacing: f64,
}

impl Grid {
    /// Node position relative to the grid center in units of the spacing,
    /// `j - (n-1)/2`. Integers for odd `n`, half-integers for even `n`.
    pub fn symmetric_index(&self, j: usize) -> f64 {
        j as f64 - (self.n as f64 - 1.0) / 2.0
    }
}

pub fn asymptotic_grid(n: usize) -> Result<Grid> {
    if n == 0 {
        return Err(XftError::InvalidSize("grid needs n >= 1".into()));
    }
    let spacing = PI / (2.0 * n as f64).sqrt();
    // t_k = spacing * (k - (n-1)/2); computed from the doubled integer offset so
    // that antisymmetry is exact.
    let nodes = (0..n)
        .map(|k| {
            let twice_offset = 2 * k as i64 + 1 - n as i64;
            0.5 * spacing * twice_offset as f64
        })
        .collect();
    Ok(Grid { n, nodes, spacing })
}

/// Orthonormally scaled Hermite values `h_0(t)..h_{n_max}(t)`.
///
/// The true values are `values[m] * exp(log_scale)`. `log_scale` stays 0 unless
/// the sequence would otherwise leave the f64 range.
#[derive(Debug, Clone, PartialEq)]
pub struct HermiteSequence {
    pub values: Vec<f64>,
    pub log_scale: f64,
}

impl HermiteSequence {
    pub fn last(&self) -> f64 {
        *self.values.last().expect("sequence is never empty")
    }

    /// `h_m(t)` as a plain f64 (may overflow to inf or underflow to 0).
    pub fn value(&self, m: usize) -> f64 {
        self.values[m] * self.log_scale.exp()
    }
}

const RESCALE_THRESHOLD: f64 = 1e150;

pub fn scaled_hermite_sequence(n_max: usize, t: f64) -> HermiteSequence {
    let mut values = Vec::with_capacity(n_max + 1);
    let mut log_scale = 0.0;
    let h0 = PI.powf(-0.25);
    values.push(h0);
    if n_max == 0 {
        return HermiteSequence { values, log_scale };
    }
    values.push(t * 2f64.sqrt() * h0);
    for m in 1..n_max {
        let mf = m as f64;
        let next =
            t * (2.0 / (mf + 1.0)).sqrt() * values[m] - (mf / (mf + 1.0)).sqrt() * values[m - 1];
        values.push(next);
        if next.abs() > RESCALE_THRESHOLD {
            for v in values.iter_mut() {
                *v /= RESCALE_THRESHOLD;
            }
            log_scale += RESCALE_THRESHOLD.ln();
        }
    }
    HermiteSequence { values, log_scale }
}

/// Number of eigenvalues of the Jacobi matrix strictly below `x` (Sturm count
/// from the pivots of the LDL^T factorization of `H - xI`).
fn eigenvalues_below(n: usize, x: f64) -> usize {
    let mut count = 0;
    let mut d = -x;
    if d < 0.0 {
        count += 1;
    }
    for m in 1..n {
        let off_sq = m as f64 / 2.0;
        let prev = if d == 0.0 {
            f64::EPSILON * (1.0 + x.abs())
        } else {
            d
        };
        d = -x - off_sq / prev;
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

/// Newton step `h_n / h_n'` using `h_n' = sqrt(2n) h_{n-1}`; returns the value
/// of `h_n` (in the sequence's scale) alongside.
fn newton_step(n: usize, t: f64) -> (f64, f64) {
    let seq = scaled_hermite_sequence(n, t);
    let hn = seq.values[n];
    let hn1 = seq.values[n - 1];
    let step = hn / ((2.0 * n as f64).sqrt() * hn1);
    (step, hn)
}

/// Zero number `k` (ascending) of `H_n`: Sturm bisection isolates it, then
/// bracketed Newton refines it starting from the asymptotic guess.
fn refine_zero(n: usize, k: usize, seed: f64, tol: f64) -> std::result::Result<f64, f64> {
    let bound = (2.0 * n as f64 + 1.0).sqrt() + 1.0;
    let (mut lo, mut hi) = (-bound, bound);
    // Isolate: exactly one eigenvalue in [lo, hi).
    for _ in 0..200 {
        let below_lo = eigenvalues_below(n, lo);
        let below_hi = eigenvalues_below(n, hi);
        if below_lo == k && below_hi == k + 1 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if eigenvalues_below(n, mid) <= k {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    let sign_lo = newton_step(n, lo).1.signum();
    let mut t = if seed > lo && seed < hi {
        seed
    } else {
        0.5 * (lo + hi)
    };
    let mut last_step = f64::INFINITY;
    for _ in 0..MAX_NEWTON_ITERATIONS {
        let (step, value) = newton_step(n, t);
        if value == 0.0 {
            return Ok(t);
        }
        if value.signum() == sign_lo {
            lo = t;
        } else {
            hi = t;
        }
        let mut next = t - step;
        if !(next > lo && next < hi) || !next.is_finite() {
            next = 0.5 * (lo + hi);
        }
        last_step = (next - t).abs();
        t = next;
        if last_step <= tol * t.abs().max(1.0) {
            return Ok(t);
        }
    }
    Err(last_step)
}

/// The `n` real zeros of `H_n`, ascending.
pub fn exact_hermite_zeros(n: usize, tol: f64) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(XftError::InvalidSize("H_0 has no zeros".into()));
    }
    if !(tol > 0.0 && tol < 1e-6) {
        return Err(XftError::InvalidParameter(format!(
            "zero tolerance {tol} must lie in (0, 1e-6)"
        )));
    }
    let seeds = asymptotic_grid(n)?.nodes;
    let mut zeros = vec![0.0; n];
    let mut worst = 0.0f64;
    let mut failed = false;
    // Negative half; the positive half follows by antisymmetry, the middle
    // zero of odd n is exactly 0.
    for k in 0..n / 2 {
        match refine_zero(n, k, seeds[k], tol) {
            Ok(t) => {
                zeros[k] = t;
                zeros[n - 1 - k] = -t;
            }
            Err(residual) => {
                failed = true;
                worst = worst.max(residual);
            }
        }
    }
    if failed {
        return Err(XftError::ConvergenceFailure {
            iterations: MAX_NEWTON_ITERATIONS,
            worst_residual: worst,
        });
    }
    Ok(zeros)
}

/// Exact zeros together with the orthonormal eigenvector matrix `U`
/// (k-th column = eigenvector for `zeros[k]`).
#[derive(Debug, Clone, PartialEq)]
pub struct EigenBasis {
    pub n: usize,
    pub zeros: Vec<f64>,
    /// Row-major `n x n`; `u[m * n + k]` is component `m` of eigenvector `k`.
    u: Vec<f64>,
}

impl EigenBasis {
    pub fn component(&self, m: usize, k: usize) -> f64 {
        self.u[m * self.n + k]
    }

    pub fn column(&self, k: usize) -> Vec<f64> {
        (0..self.n).map(|m| self.component(m, k)).collect()
    }

    /// Row `m` of `U`: component `m` of every eigenvector.
    pub fn row(&self, m: usize) -> &[f64] {
        &self.u[m * self.n..(m + 1) * self.n]
    }
}

pub fn orthonormal_basis(n: usize) -> Result<EigenBasis> {
    if n == 0 {
        return Err(XftError::InvalidSize("basis needs n >= 1".into()));
    }
    if n > DENSE_ORACLE_LIMIT {
        return Err(XftError::Capability {
            n,
            limit: DENSE_ORACLE_LIMIT,
        });
    }
    let zeros = exact_hermite_zeros(n, DEFAULT_ZERO_TOL)?;
    let mut u = vec![0.0; n * n];
    for (k, &t) in zeros.iter().enumerate() {
        // (u_k)_m is proportional to s_m H_{m-1}(t_k), i.e. to h_{m-1}(t_k); the
        // normalization constant only fixes length, h_0 > 0 fixes the sign.
        let seq = scaled_hermite_sequence(n - 1, t);
        let norm = seq.values.iter().map(|v| v * v).sum::<f64>().sqrt();
        for (m, v) in seq.values.iter().enumerate() {
            u[m * n + k] = v / norm;
        }
    }
    Ok(EigenBasis { n, zeros, u })
}
