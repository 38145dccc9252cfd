//! Independent test oracles: raw recurrences, literal factorial formulas and
//! naive sums. Nothing here calls into the fast path.
#![allow(dead_code)]

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use xft::ComplexSignal;

/// Physicists' Hermite polynomials `H_0(t)..H_{n_max}(t)` straight from
/// `H_{n+1} = 2t H_n - 2n H_{n-1}`.
pub fn raw_hermite(n_max: usize, t: f64) -> Vec<f64> {
    let mut h = vec![1.0];
    if n_max >= 1 {
        h.push(2.0 * t);
    }
    for n in 1..n_max {
        h.push(2.0 * t * h[n] - 2.0 * n as f64 * h[n - 1]);
    }
    h
}

pub fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_signal(rng: &mut ChaCha8Rng, n: usize) -> ComplexSignal {
    ComplexSignal::new(
        (0..n)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect(),
    )
    .unwrap()
}

/// `sum_k exp(sign 2 pi i jk/N) v[k]` by direct summation.
pub fn naive_dft(v: &[Complex64], sign: f64) -> Vec<Complex64> {
    let n = v.len();
    (0..n)
        .map(|j| {
            v.iter()
                .enumerate()
                .map(|(k, &x)| {
                    let angle = sign * 2.0 * PI * ((j * k) % n) as f64 / n as f64;
                    Complex64::from_polar(1.0, angle) * x
                })
                .sum()
        })
        .collect()
}

/// Dense scaled Fourier matrix
/// `(pi/sqrt(2N)) exp(i a (pi^2/2N)(j-(N-1)/2)(k-(N-1)/2))`, row-major.
pub fn scaled_fourier_matrix(n: usize, a: f64) -> Vec<Complex64> {
    let nf = n as f64;
    let c = (nf - 1.0) / 2.0;
    let mut m = Vec::with_capacity(n * n);
    for j in 0..n {
        for k in 0..n {
            let phase = a * PI * PI / (2.0 * nf) * (j as f64 - c) * (k as f64 - c);
            m.push(Complex64::from_polar(PI / (2.0 * nf).sqrt(), phase));
        }
    }
    m
}

/// Dense closed-form inverse `(sqrt(2/N)/pi) exp(-i (2pi/N)(j-c)(k-c))`.
pub fn inverse_fourier_matrix(n: usize) -> Vec<Complex64> {
    let nf = n as f64;
    let c = (nf - 1.0) / 2.0;
    let mut m = Vec::with_capacity(n * n);
    for j in 0..n {
        for k in 0..n {
            let phase = -2.0 * PI / nf * (j as f64 - c) * (k as f64 - c);
            m.push(Complex64::from_polar((2.0 / nf).sqrt() / PI, phase));
        }
    }
    m
}

pub fn matvec(m: &[Complex64], v: &[Complex64]) -> Vec<Complex64> {
    let n = v.len();
    (0..n)
        .map(|j| (0..n).map(|k| m[j * n + k] * v[k]).sum())
        .collect()
}

pub fn matmul(a: &[Complex64], b: &[Complex64], n: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); n * n];
    for j in 0..n {
        for m in 0..n {
            let l = a[j * n + m];
            for k in 0..n {
                out[j * n + k] += l * b[m * n + k];
            }
        }
    }
    out
}

pub fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

pub fn max_abs(a: &[Complex64]) -> f64 {
    a.iter().map(|x| x.norm()).fold(0.0, f64::max)
}
