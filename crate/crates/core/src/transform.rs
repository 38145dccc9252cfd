//! Fast O(N log N) transforms on the asymptotic Hermite grid.
//!
//! Both transforms share one shape, chirp -> DFT -> chirp:
//!
//! ```text
//! G = c * S1 * DFT(S2 * g),   c = prefactor * pi exp(i pi (N-1)^2 / (2N)) / sqrt(2N)
//! S_j  = exp(-i pi (N-1) j / N)
//! S1_j = exp(-mu a^2 t_j^2) S_j,   S2_j = exp(-mu t_j^2) S_j
//! ```
//!
//! At `z = i` we have `mu = 0`, `prefactor = 1`, `a = 4/pi`, so the fractional
//! transform collapses onto the standard one and `G_j ~ G((4/pi) t_j)`.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, OnceLock, RwLock};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::dft::{backward_slice, forward_slice};
use crate::error::{Result, XftError};
use crate::hermite::asymptotic_grid;
use crate::params::{make_params, TransformParams};
use crate::signal::ComplexSignal;

/// Size limit of the O(N^2) dense check.
pub const DENSE_CHECK_LIMIT: usize = 1024;

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumResult {
    pub values: ComplexSignal,
    /// Evaluation points `a * t_j`.
    pub abscissae: Vec<Complex64>,
    pub scale_a: Complex64,
    pub params: TransformParams,
}

impl SpectrumResult {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// `i^n`.
fn i_pow(n: usize) -> Complex64 {
    match n % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// `exp(i pi (N-1)^2 / (2N))`, reduced as `exp(i pi (N/2 - 1)) exp(i pi / (2N))`
/// so large `N` loses no phase accuracy.
fn global_phase(n: usize) -> Complex64 {
    -i_pow(n) * Complex64::from_polar(1.0, PI / (2.0 * n as f64))
}

/// `S_j = exp(-i pi (N-1) j / N) = (-1)^j exp(i pi j / N)`.
fn standard_chirp(n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|j| {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            Complex64::from_polar(sign, PI * j as f64 / n as f64)
        })
        .collect()
}

#[derive(Debug)]
struct Chirps {
    left: Vec<Complex64>,
    right: Vec<Complex64>,
    scale: Complex64,
}

impl Chirps {
    fn build(n: usize, params: &TransformParams, a: Complex64) -> Result<Self> {
        let grid = asymptotic_grid(n)?;
        let s = standard_chirp(n);
        let left_rate = params.mu * a * a;
        let left = grid
            .nodes
            .iter()
            .zip(&s)
            .map(|(&t, &sj)| (-left_rate * (t * t)).exp() * sj)
            .collect();
        let right = grid
            .nodes
            .iter()
            .zip(&s)
            .map(|(&t, &sj)| (-params.mu * (t * t)).exp() * sj)
            .collect();
        let scale = params.prefactor * (PI / (2.0 * n as f64).sqrt()) * global_phase(n);
        Ok(Self { left, right, scale })
    }
}

type ChirpKey = (usize, u64, u64);
type ChirpCache = RwLock<HashMap<ChirpKey, Arc<Chirps>>>;

fn cache() -> &'static ChirpCache {
    static CACHE: OnceLock<ChirpCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn chirps_for(n: usize, params: &TransformParams, a: Complex64) -> Result<Arc<Chirps>> {
    let key = (n, params.z.re.to_bits(), params.z.im.to_bits());
    if let Some(hit) = cache().read().expect("chirp cache poisoned").get(&key) {
        return Ok(Arc::clone(hit));
    }
    let built = Arc::new(Chirps::build(n, params, a)?);
    let mut map = cache().write().expect("chirp cache poisoned");
    Ok(Arc::clone(map.entry(key).or_insert(built)))
}

/// Drops all cached chirp diagonals.
pub fn clear_chirp_cache() {
    cache().write().expect("chirp cache poisoned").clear();
}

pub fn chirp_cache_len() -> usize {
    cache().read().expect("chirp cache poisoned").len()
}

fn chirp_dft_chirp(g: &[Complex64], chirps: &Chirps) -> Vec<Complex64> {
    let weighted: Vec<Complex64> = g.iter().zip(&chirps.right).map(|(x, s)| x * s).collect();
    let mut out = forward_slice(&weighted);
    for (o, s) in out.iter_mut().zip(&chirps.left) {
        *o *= chirps.scale * s;
    }
    out
}

fn spectrum(g: &ComplexSignal, params: TransformParams, a: Complex64) -> Result<SpectrumResult> {
    let n = g.len();
    let chirps = chirps_for(n, &params, a)?;
    let values = ComplexSignal::from_vec_unchecked(chirp_dft_chirp(g.as_slice(), &chirps));
    let abscissae = asymptotic_grid(n)?.nodes.iter().map(|&t| a * t).collect();
    Ok(SpectrumResult {
        values,
        abscissae,
        scale_a: a,
        params,
    })
}

/// Fast XFT of the standard Fourier transform; `values[j] ~ G((4/pi) t_j)`
/// with `G(w) = integral exp(i w t) g(t) dt`.
pub fn xft_forward(g: &ComplexSignal) -> Result<SpectrumResult> {
    g.require_nonempty()?;
    let params = TransformParams::fourier();
    let a = params.scaling()?;
    spectrum(g, params, a)
}

/// Exact inverse of the `xft_forward` matrix:
/// `(sqrt(2/N)/pi) exp(-i (2 pi/N)(j - (N-1)/2)(k - (N-1)/2))`.
pub fn xft_inverse(spectrum: &ComplexSignal) -> Result<ComplexSignal> {
    spectrum.require_nonempty()?;
    let n = spectrum.len();
    let s = standard_chirp(n);
    let weighted: Vec<Complex64> = spectrum
        .iter()
        .zip(&s)
        .map(|(x, sj)| x * sj.conj())
        .collect();
    let mut out = backward_slice(&weighted);
    let scale = (2.0 / n as f64).sqrt() / PI * global_phase(n).conj();
    for (o, sj) in out.iter_mut().zip(&s) {
        *o *= scale * sj.conj();
    }
    Ok(ComplexSignal::from_vec_unchecked(out))
}

/// Fast fractional XFT at `z`; `values[j] ~ G_z(a t_j)` with
/// `a = 2i(1 - z^2)/(pi z)`.
pub fn frft_forward(g: &ComplexSignal, z: Complex64) -> Result<SpectrumResult> {
    g.require_nonempty()?;
    let params = make_params(z)?;
    let a = params.scaling()?;
    spectrum(g, params, a)
}

/// Direct O(N^2) evaluation of the scaled kernel
/// `prefactor exp(-mu a^2 t_j^2 + a nu t_j t_k - mu t_k^2) dt` applied to `g`.
pub fn frft_dense_check(g: &ComplexSignal, z: Complex64) -> Result<ComplexSignal> {
    g.require_nonempty()?;
    let n = g.len();
    if n > DENSE_CHECK_LIMIT {
        return Err(XftError::Capability {
            n,
            limit: DENSE_CHECK_LIMIT,
        });
    }
    let params = make_params(z)?;
    let a = params.scaling()?;
    let grid = asymptotic_grid(n)?;
    let t = &grid.nodes;
    let left_rate = params.mu * a * a;
    let cross_rate = a * params.nu;
    let weight = params.prefactor * grid.spacing;
    let samples = g.as_slice();
    let out = (0..n)
        .into_par_iter()
        .map(|j| {
            let tj = t[j];
            t.iter()
                .zip(samples)
                .map(|(&tk, &gk)| {
                    let exponent =
                        -left_rate * (tj * tj) + cross_rate * (tj * tk) - params.mu * (tk * tk);
                    weight * exponent.exp() * gk
                })
                .sum()
        })
        .collect();
    Ok(ComplexSignal::from_vec_unchecked(out))
}
