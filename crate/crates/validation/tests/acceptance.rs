//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Run with `cargo test -p xft-cli --test acceptance`.

use std::f64::consts::{E, PI};
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use xft::{
    apply_kernel, exact_kernel, frft_dense_check, frft_forward, xft_forward, xft_inverse,
    Complex64, ComplexSignal, KernelMatrix,
};
use xft_cli::{bench, report_from_argv, TransformReport};

struct Outcome {
    pass: bool,
    detail: String,
    notes: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self {
            pass,
            detail: detail.into(),
            notes: Vec::new(),
        }
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn random_signal(seed: u64, n: usize) -> ComplexSignal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    ComplexSignal::new(
        (0..n)
            .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect(),
    )
    .unwrap()
}

fn max_abs(v: &[Complex64]) -> f64 {
    v.iter().map(|x| x.norm()).fold(0.0, f64::max)
}

fn max_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

fn within(value: f64, target: f64, rel: f64) -> bool {
    (value - target).abs() <= rel * target.abs()
}

fn run(argv: &[&str]) -> TransformReport {
    let mut full = vec!["xft"];
    full.extend_from_slice(argv);
    report_from_argv(full).unwrap_or_else(|e| panic!("{argv:?}: {e}"))
}

fn kernel_entries(k: &KernelMatrix) -> Vec<Complex64> {
    (0..k.n).flat_map(|j| k.row(j).to_vec()).collect()
}

fn matmul(a: &[Complex64], b: &[Complex64], n: usize) -> Vec<Complex64> {
    let mut out = vec![c(0.0, 0.0); n * n];
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

fn scaled_identity(n: usize, s: f64) -> Vec<Complex64> {
    (0..n * n)
        .map(|i| c(if i / n == i % n { s } else { 0.0 }, 0.0))
        .collect()
}

fn factorization_identity() -> Outcome {
    let tol = 1e-12;
    let mut worst = 0.0f64;
    for n in [32usize, 64] {
        let nf = n as f64;
        let center = (nf - 1.0) / 2.0;
        let a = 4.0 / PI;
        for k in 0..n {
            let mut e = vec![c(0.0, 0.0); n];
            e[k] = c(1.0, 0.0);
            let col = xft_forward(&ComplexSignal::new(e).unwrap()).unwrap().values;
            for j in 0..n {
                let phase = a * PI * PI / (2.0 * nf) * (j as f64 - center) * (k as f64 - center);
                let dense = Complex64::from_polar(PI / (2.0 * nf).sqrt(), phase);
                worst = worst.max((col[j] - dense).norm());
            }
        }
    }
    Outcome::new(
        worst < tol,
        format!("max entry deviation {worst:.2e} (tol {tol:.0e}), N = 32, 64"),
    )
}

fn inverse_roundtrip() -> Outcome {
    let tol = 1e-10;
    let mut worst = 0.0f64;
    for (seed, n) in [(1u64, 256usize), (2, 1024)] {
        let g = random_signal(seed, n);
        let back = xft_inverse(&xft_forward(&g).unwrap().values).unwrap();
        worst = worst.max(max_diff(back.as_slice(), g.as_slice()) / max_abs(g.as_slice()));
    }
    Outcome::new(
        worst < tol,
        format!("relative error {worst:.2e} (tol {tol:.0e}), N = 256, 1024"),
    )
}

fn kernel_algebra() -> Outcome {
    let root = (2.0 * PI).sqrt();
    let (mut ident, mut fourth, mut comp) = (0.0f64, 0.0f64, 0.0f64);
    for n in [16usize, 64] {
        let one = kernel_entries(&exact_kernel(n, c(1.0, 0.0)).unwrap());
        ident = ident.max(max_diff(&one, &scaled_identity(n, root)));

        let f = kernel_entries(&exact_kernel(n, Complex64::i()).unwrap());
        let f2 = matmul(&f, &f, n);
        fourth = fourth.max(max_diff(
            &matmul(&f2, &f2, n),
            &scaled_identity(n, 4.0 * PI * PI),
        ));

        for (z1, z2) in [
            (Complex64::i(), Complex64::from_polar(1.0, 1.0 / 3.0)),
            (
                Complex64::from_polar(0.8, 0.4),
                Complex64::from_polar(0.6, 1.1),
            ),
        ] {
            let k1 = exact_kernel(n, z1).unwrap();
            let k2 = exact_kernel(n, z2).unwrap();
            let product = k1.matmul(&k2).unwrap();
            let target: Vec<Complex64> = kernel_entries(&exact_kernel(n, z1 * z2).unwrap())
                .into_iter()
                .map(|x| x * root)
                .collect();
            comp = comp.max(max_diff(&product, &target));
        }
    }
    Outcome::new(
        ident < 1e-10 && fourth < 1e-8 && comp < 1e-9,
        format!(
            "K(1) - sqrt(2pi) I: {ident:.2e} (tol 1e-10); K(i)^4 - (2pi)^2 I: {fourth:.2e} (tol 1e-8); \
             composition: {comp:.2e} (tol 1e-9); n = 16, 64"
        ),
    )
}

fn pulse_identity() -> Outcome {
    let cases = [
        (9usize, 1.0),
        (9, 3.0),
        (257, 1.0),
        (257, 3.0),
        (8, 1.5),
        (8, 3.5),
        (256, 1.5),
        (256, 3.5),
    ];
    let mut height_err = 0.0f64;
    let mut off_peak = 0.0f64;
    let mut ratio = 0.0;
    for (n, m) in cases {
        let spec = format!("m={m}");
        let r = run(&[
            "fft",
            "--n",
            &n.to_string(),
            "--signal",
            "harmonic",
            "--param",
            &spec,
        ]);
        let height = PI * (n as f64 / 2.0).sqrt();
        let center = (n as f64 - 1.0) / 2.0;
        let peaks = [(center + m) as usize, (center - m) as usize];
        for j in 0..n {
            let mag = r.g_re[j].hypot(r.g_im[j]);
            if peaks.contains(&j) {
                height_err = height_err.max((mag - height).abs() / height);
                ratio = mag / height;
            } else {
                off_peak = off_peak.max(mag / height);
            }
        }
    }
    let mut out = Outcome::new(
        height_err < 1e-9 && off_peak < 1e-9,
        format!(
            "pulse height relative error {height_err:.3e} (tol 1e-9), measured/required = {ratio:.6}; \
             off-pulse bins {off_peak:.2e} x height (tol 1e-9)"
        ),
    );
    if !out.pass {
        out.notes.push(
            "the discrete sum gives pulses of height (pi/2) sqrt(N/2); the required pi sqrt(N/2) is twice that".into(),
        );
    }
    out
}

fn error_norms() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    let mut check = |label: String, ok: bool| {
        pass &= ok;
        notes.push(format!("{} {label}", if ok { "ok  " } else { "FAIL" }));
    };

    for (n, target) in [("512", 2.11), ("1024", 2.08)] {
        let e = run(&["fft", "--n", n, "--signal", "chirp_cos", "--compare"])
            .summary
            .max_norm
            .unwrap();
        check(
            format!("chirp_cos, N = {n}: max-norm {e:.5} vs {target} (+-5%)"),
            within(e, target, 0.05),
        );
    }

    let cauchy = |b: f64, n: &str| {
        let param = format!("b={b}");
        run(&[
            "fft",
            "--n",
            n,
            "--signal",
            "cauchy_exp",
            "--param",
            &param,
            "--compare",
        ])
        .summary
        .max_norm
        .unwrap()
    };
    let mut located = None;
    let mut scanned = Vec::new();
    for b in [1.0, 0.5, 2.0, E] {
        let (e512, e1024) = (cauchy(b, "512"), cauchy(b, "1024"));
        scanned.push(format!("b={b:.4}: {e512:.4e}/{e1024:.4e}"));
        if within(e512, 0.4262, 0.05) && within(e1024, 0.105, 0.05) {
            located = Some((b, e512, e1024));
            break;
        }
    }
    match located {
        Some((b, e512, e1024)) => check(
            format!(
                "cauchy_exp: b = {b} reproduces {e512:.5} (0.4262) and {e1024:.5} (0.105) within 5% [scan {}]",
                scanned.join(", ")
            ),
            true,
        ),
        None => check(format!("cauchy_exp: no b in the scan reproduces the norms [{}]", scanned.join(", ")), false),
    }

    let e4 = run(&[
        "frft",
        "--n",
        "512",
        "--z-arg",
        "1.0",
        "--signal",
        "gauss_beta",
        "--param",
        "beta=2",
        "--compare",
    ])
    .summary
    .max_norm
    .unwrap();
    check(
        format!("gauss_beta, phi = 1: max-norm {e4:.2e} (tol 1e-10)"),
        e4 < 1e-10,
    );

    let r5 = run(&[
        "frft",
        "--n",
        "512",
        "--z-arg",
        "1.0",
        "--signal",
        "constant_one",
        "--compare",
    ]);
    let (re, im) = (
        r5.summary.max_norm_real.unwrap(),
        r5.summary.max_norm_imag.unwrap(),
    );
    check(
        format!("constant_one, phi = 1: real {re:.4} vs 1.3282, imaginary {im:.4} vs 1.42694 (+-5%)"),
        within(re, 1.3282, 0.05) && within(im, 1.42694, 0.05),
    );

    let failed = notes.iter().filter(|n| n.starts_with("FAIL")).count();
    Outcome {
        pass,
        detail: format!(
            "{} of {} error-norm checks reproduced",
            notes.len() - failed,
            notes.len()
        ),
        notes,
    }
}

fn leakage_and_peak() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for (n, peak, mu) in [(1024usize, 5.17072, 0.14105), (2048, 5.15625, 0.00276)] {
        let r = run(&[
            "fft",
            "--n",
            &n.to_string(),
            "--signal",
            "harmonic",
            "--param",
            "omega=5.156",
        ]);
        let half_bin = 2.0 / (2.0 * n as f64).sqrt();
        let p = r.summary.peak_frequency.unwrap();
        let l = r.summary.leakage_mean.unwrap();
        pass &= (p - peak).abs() <= half_bin && within(l, mu, 0.05);
        parts.push(format!(
            "N = {n}: peak {p:.5} vs {peak} (half bin {half_bin:.4}), mu {l:.5} vs {mu}"
        ));
    }
    Outcome::new(pass, parts.join("; "))
}

fn oracle_chain() -> Outcome {
    let g = random_signal(3, 128);
    let mut worst = 0.0f64;
    for z in [
        Complex64::i(),
        Complex64::from_polar(1.0, 0.5),
        Complex64::from_polar(0.7, 0.5),
    ] {
        let fast = frft_forward(&g, z).unwrap().values;
        let dense = frft_dense_check(&g, z).unwrap();
        worst = worst.max(max_diff(fast.as_slice(), dense.as_slice()) / max_abs(dense.as_slice()));
    }
    let standard = xft_forward(&g).unwrap().values;
    let at_i = frft_forward(&g, Complex64::i()).unwrap().values;
    let same = max_diff(standard.as_slice(), at_i.as_slice());
    Outcome::new(
        worst < 1e-9 && same < 1e-14,
        format!(
            "fast vs dense relative {worst:.2e} (tol 1e-9); frft(i) vs xft {same:.1e} (tol 1e-14)"
        ),
    )
}

fn quadrature_convergence() -> Outcome {
    let errors: Vec<f64> = [16usize, 64, 256]
        .iter()
        .map(|&n| {
            let k = exact_kernel(n, Complex64::i()).unwrap();
            let g = ComplexSignal::from_real(
                &k.nodes
                    .iter()
                    .map(|t| (-t * t / 2.0).exp())
                    .collect::<Vec<_>>(),
            )
            .unwrap();
            let out = apply_kernel(&k, &g).unwrap();
            out.iter()
                .zip(&k.nodes)
                .map(|(o, t)| (o - (2.0 * PI).sqrt() * (-t * t / 2.0).exp()).norm())
                .fold(0.0, f64::max)
        })
        .collect();
    Outcome::new(
        errors[0] > errors[1] && errors[1] > errors[2],
        format!(
            "max error {:.3e} (n=16), {:.3e} (n=64), {:.3e} (n=256)",
            errors[0], errors[1], errors[2]
        ),
    )
}

fn scaling() -> Outcome {
    let table = bench(18, 19, 5).unwrap();
    let (t18, t19) = (table.seconds[0], table.seconds[1]);
    let ratio = t19 / t18;
    Outcome::new(
        ratio < 3.0 && t19 < 5.0,
        format!(
            "T(2^18) = {t18:.4} s, T(2^19) = {t19:.4} s, ratio {ratio:.2} (tol < 3, T(2^19) < 5 s)"
        ),
    )
}

fn rect_monotonicity() -> Outcome {
    let phis = [PI / 2.0, 1.0, 0.5, 0.25];
    let peaks: Vec<f64> = phis
        .iter()
        .map(|phi| {
            let arg = phi.to_string();
            run(&["frft", "--n", "512", "--z-arg", &arg, "--signal", "rect"])
                .summary
                .max_abs_g
        })
        .collect();
    Outcome::new(
        peaks.windows(2).all(|w| w[1] > w[0]),
        format!(
            "max|G| = {:.4} (phi=pi/2), {:.4} (1), {:.4} (1/2), {:.4} (1/4)",
            peaks[0], peaks[1], peaks[2], peaks[3]
        ),
    )
}

type Check = fn() -> Outcome;

fn main() -> ExitCode {
    let criteria: [(&str, Check); 10] = [
        ("factorization identity", factorization_identity),
        ("inverse roundtrip", inverse_roundtrip),
        ("exact-kernel algebra", kernel_algebra),
        ("pulse identity", pulse_identity),
        ("published error norms", error_norms),
        ("leakage and peak location", leakage_and_peak),
        ("oracle chain", oracle_chain),
        ("quadrature convergence", quadrature_convergence),
        ("scaling", scaling),
        ("rect monotonicity", rect_monotonicity),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Outcome::new(false, format!("panicked: {msg}"))
        });
        if !outcome.pass {
            failed += 1;
        }
        let status = if outcome.pass { "PASS" } else { "FAIL" };
        println!("{status} [{:>2}] {name}: {}", i + 1, outcome.detail);
        for note in &outcome.notes {
            println!("          {note}");
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
