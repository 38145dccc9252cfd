//! Discrete Fourier transform with a positive exponent on the forward pass:
//!
//! ```text
//! forward: out[j] = sum_k exp(+2 pi i jk/N) v[k]
//! inverse: out[j] = (1/N) sum_k exp(-2 pi i jk/N) v[k]
//! ```
//!
//! Power-of-two lengths use an iterative radix-2 transform; any other length
//! falls back to the direct O(N^2) sum.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, OnceLock, RwLock};

use num_complex::Complex64;

use crate::error::Result;
use crate::signal::ComplexSignal;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Direction {
    /// exp(+i...)
    Positive,
    /// exp(-i...)
    Negative,
}

impl Direction {
    fn sign(self) -> f64 {
        match self {
            Direction::Positive => 1.0,
            Direction::Negative => -1.0,
        }
    }
}

/// `exp(sign * 2 pi i k / n)` for `k < count`, each evaluated directly.
fn twiddles(n: usize, count: usize, dir: Direction) -> Vec<Complex64> {
    let base = dir.sign() * 2.0 * PI / n as f64;
    (0..count)
        .map(|k| {
            let (s, c) = (base * k as f64).sin_cos();
            Complex64::new(c, s)
        })
        .collect()
}

fn bit_reverse_permute(data: &mut [Complex64]) {
    let n = data.len();
    let bits = n.trailing_zeros();
    if bits == 0 {
        return;
    }
    for i in 0..n {
        let j = i.reverse_bits() >> (usize::BITS - bits);
        if j > i {
            data.swap(i, j);
        }
    }
}

/// Stages up to this length run block by block so each block stays in cache.
const BLOCK: usize = 1 << 12;

/// Positive-direction twiddles for every stage of a length-`n` transform:
/// the stage with half-length `h` reads `exp(i pi k/h)`, `k < h`, from
/// `[h - 1, 2h - 1)`.
fn stage_twiddles(n: usize) -> Arc<Vec<Complex64>> {
    type Table = RwLock<HashMap<usize, Arc<Vec<Complex64>>>>;
    static TABLES: OnceLock<Table> = OnceLock::new();
    let tables = TABLES.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(hit) = tables.read().expect("twiddle cache poisoned").get(&n) {
        return Arc::clone(hit);
    }
    let mut table = Vec::with_capacity(n.saturating_sub(1));
    let mut half = 1;
    while half < n {
        let base = PI / half as f64;
        table.extend((0..half).map(|k| {
            let (s, c) = (base * k as f64).sin_cos();
            Complex64::new(c, s)
        }));
        half <<= 1;
    }
    let table = Arc::new(table);
    let mut map = tables.write().expect("twiddle cache poisoned");
    Arc::clone(map.entry(n).or_insert(table))
}

fn butterflies(data: &mut [Complex64], half: usize, table: &[Complex64], dir: Direction) {
    let w = &table[half - 1..2 * half - 1];
    for chunk in data.chunks_exact_mut(2 * half) {
        let (lo, hi) = chunk.split_at_mut(half);
        for ((a, b), &w) in lo.iter_mut().zip(hi.iter_mut()).zip(w) {
            let w = match dir {
                Direction::Positive => w,
                Direction::Negative => w.conj(),
            };
            let t = *b * w;
            *b = *a - t;
            *a += t;
        }
    }
}

fn radix2_in_place(data: &mut [Complex64], dir: Direction) {
    let n = data.len();
    debug_assert!(n.is_power_of_two());
    bit_reverse_permute(data);
    let table = stage_twiddles(n);
    let block = n.min(BLOCK);
    for chunk in data.chunks_exact_mut(block) {
        let mut half = 1;
        while half < block {
            butterflies(chunk, half, &table, dir);
            half <<= 1;
        }
    }
    let mut half = block;
    while half < n {
        butterflies(data, half, &table, dir);
        half <<= 1;
    }
}

fn naive(input: &[Complex64], dir: Direction) -> Vec<Complex64> {
    let n = input.len();
    let table = twiddles(n, n, dir);
    (0..n)
        .map(|j| {
            input
                .iter()
                .enumerate()
                .map(|(k, &v)| table[(j * k) % n] * v)
                .sum()
        })
        .collect()
}

fn transform(input: &[Complex64], dir: Direction) -> Vec<Complex64> {
    if input.len().is_power_of_two() {
        let mut data = input.to_vec();
        radix2_in_place(&mut data, dir);
        data
    } else {
        naive(input, dir)
    }
}

/// Unnormalized forward transform of a raw slice (no emptiness check).
pub(crate) fn forward_slice(input: &[Complex64]) -> Vec<Complex64> {
    transform(input, Direction::Positive)
}

/// Unnormalized `exp(-i...)` sum of a raw slice; callers apply `1/N`.
pub(crate) fn backward_slice(input: &[Complex64]) -> Vec<Complex64> {
    transform(input, Direction::Negative)
}

pub fn dft_forward(v: &ComplexSignal) -> Result<ComplexSignal> {
    v.require_nonempty()?;
    Ok(ComplexSignal::from_vec_unchecked(forward_slice(
        v.as_slice(),
    )))
}

pub fn dft_inverse(v: &ComplexSignal) -> Result<ComplexSignal> {
    v.require_nonempty()?;
    let scale = 1.0 / v.len() as f64;
    let out = backward_slice(v.as_slice())
        .into_iter()
        .map(|x| x * scale)
        .collect();
    Ok(ComplexSignal::from_vec_unchecked(out))
}

/// Direct O(N^2) forward sum regardless of length. Exposed so the fast path
/// can be checked against it.
pub fn dft_forward_direct(v: &ComplexSignal) -> Result<ComplexSignal> {
    v.require_nonempty()?;
    Ok(ComplexSignal::from_vec_unchecked(naive(
        v.as_slice(),
        Direction::Positive,
    )))
}
