//! Verification suites: every certified claim the library makes, executed as
//! a pass/fail table. `verify all` runs everything; the acceptance test
//! target drives the same functions.

use crate::rng::Rng;
use num_complex::Complex64;
use oscquad_core::adversary::fooling_function;
use oscquad_core::algorithms::{
    algo_per, algo_tay_per, extremal_qmc_function, periodizer, qmc, taylor,
    integral_of_periodizer, integral_of_taylor,
};
use oscquad_core::bernoulli;
use oscquad_core::error_analysis::{
    asymptotic_qmc_constant, complexity, complexity_infty, damped_error, initial_error,
    minimal_error_bounds, modified_qmc_error, modified_qmc_error_upper, optimal_damping,
    per_error_bound, qmc_worst_case_error, representer_oracle, tay_per_error_bound, Criterion,
    Setting,
};
use oscquad_core::oracle::{
    make_polynomial, make_scaled, make_sum, make_trig, Oracle,
};
use oscquad_core::quadrature::reference_integral;
use oscquad_core::sobolev::{
    equivalence_ratio, fourier_weight, gram_bernoulli_exponential_abs, gram_bernoulli_pair,
    gram_summary, norm_hs,
};
use oscquad_core::Smoothness;
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::time::Instant;

/// One verified claim.
#[derive(Debug, Clone)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(suite: &'static str, name: impl Into<String>, passed: bool, detail: String) -> Check {
    Check {
        suite,
        name: name.into(),
        passed,
        detail,
    }
}

pub const SUITE_NAMES: &[&str] = &[
    "bernoulli",
    "qmc-exact",
    "damping",
    "periodize",
    "taylor",
    "sandwich",
    "fooling",
    "appendix",
    "asymptotic",
    "norms",
];

/// Runs one named suite; `None` for an unknown name.
pub fn run_suite(name: &str, seed: u64, tol: f64) -> Option<Vec<Check>> {
    match name {
        "bernoulli" => Some(bernoulli_suite(tol)),
        "qmc-exact" => Some({
            let mut v = c1_exact_vs_brute_force();
            v.extend(c3_qmc_theorem());
            v
        }),
        "damping" => Some(c5_damping()),
        "periodize" => Some(c6_periodization(seed, tol)),
        "taylor" => Some(c7_taylor(seed, tol)),
        "sandwich" => Some({
            let mut v = c8_algorithm_bounds(seed, tol);
            v.extend(c11_complexity_regimes());
            v
        }),
        "fooling" => Some(c9_fooling(seed, tol)),
        "appendix" => Some(c10_appendix(seed, tol)),
        "asymptotic" => Some(c4_asymptotic()),
        "norms" => Some(c2_initial_errors(tol)),
        "all" => Some(run_all(seed, tol)),
        _ => None,
    }
}

pub fn run_all(seed: u64, tol: f64) -> Vec<Check> {
    let mut out = Vec::new();
    for suite in SUITE_NAMES {
        out.extend(run_suite(suite, seed, tol).expect("known suite"));
    }
    out
}

// ---------------------------------------------------------------------------
// test corpus

/// 20 random degree-≤6 polynomials and 5 trig-plus-polynomial mixtures.
pub fn corpus(seed: u64) -> Vec<Oracle> {
    let mut rng = Rng::new(seed);
    let mut fns = Vec::with_capacity(25);
    for _ in 0..20 {
        let deg = 1 + rng.usize_below(6);
        fns.push(make_polynomial((0..=deg).map(|_| rng.complex()).collect()));
    }
    for _ in 0..5 {
        let deg = 1 + rng.usize_below(4);
        let poly = make_polynomial((0..=deg).map(|_| rng.complex()).collect());
        let trig = make_trig(
            (0..3)
                .map(|_| ((rng.next_u64() % 7) as i64 - 3, rng.complex()))
                .collect(),
        );
        fns.push(make_sum(vec![poly, trig]));
    }
    fns
}

fn k_sweep() -> Vec<i64> {
    (-8..=8).collect()
}

// ---------------------------------------------------------------------------
// bernoulli module invariants

fn bernoulli_suite(tol: f64) -> Vec<Check> {
    let mut out = Vec::new();

    let mut jump_ok = true;
    let mut mean_ok = true;
    for m in 0..=30usize {
        let jump = bernoulli::eval(m, 1.0).unwrap() - bernoulli::eval(m, 0.0).unwrap();
        let expect = if m == 1 { 1.0 } else { 0.0 };
        jump_ok &= (jump - expect).abs() < 1e-12;
    }
    for m in 1..=bernoulli::MAX_DEGREE {
        let c = bernoulli::coefficients(m).unwrap();
        let mean: f64 = c.iter().enumerate().map(|(j, &cj)| cj / (j + 1) as f64).sum();
        mean_ok &= mean.abs() < 1e-14;
    }
    out.push(check(
        "bernoulli",
        "boundary jumps and zero means",
        jump_ok && mean_ok,
        String::new(),
    ));

    let mut zero_ok = true;
    for m in 1..=15usize {
        zero_ok &= bernoulli::eval(2 * m + 1, 0.0).unwrap().abs() < 1e-12;
        let even = bernoulli::eval(2 * m, 0.0).unwrap();
        let sign = if m % 2 == 0 { -1.0 } else { 1.0 };
        let zeta = oscquad_core::zeta::zeta_even(2 * m).unwrap();
        zero_ok &= (even - sign * 2.0 * zeta / (2.0 * PI).powi(2 * m as i32)).abs() < 1e-12;
    }
    out.push(check(
        "bernoulli",
        "values at zero against zeta identities",
        zero_ok,
        String::new(),
    ));

    let mut quad_max: f64 = 0.0;
    for k in -5i64..=5 {
        if k == 0 {
            continue;
        }
        for m in 1..=8usize {
            let closed = bernoulli::osc_integral_bernoulli(k, m);
            let f = oscquad_core::oracle::make_bernoulli(m).unwrap();
            let quad = reference_integral(&f, k, tol.min(1e-13)).unwrap().value;
            quad_max = quad_max.max((closed - quad).norm());
        }
    }
    out.push(check(
        "bernoulli",
        "oscillatory integrals vs quadrature",
        quad_max < 1e-11,
        format!("max gap {quad_max:.2e}"),
    ));

    let b = bernoulli::fourier_partial(2, 0.0, 100_000).unwrap();
    let fourier_ok = (b.re - 1.0 / 12.0).abs() < 1e-6
        && bernoulli::fourier_partial(1, 0.5, 10_000).unwrap().norm() < 1e-4;
    out.push(check(
        "bernoulli",
        "fourier partial sums converge",
        fourier_ok,
        String::new(),
    ));
    out
}

// ---------------------------------------------------------------------------
// criterion 1: exact series vs brute force

pub fn c1_grid() -> Vec<(usize, i64, u32)> {
    let mut grid = Vec::new();
    for s in [1u32, 2] {
        for k in [0i64, 1, -1, 3, -3] {
            for n in 1..=8usize {
                grid.push((n, k, s));
            }
        }
    }
    grid
}

pub fn c1_exact_vs_brute_force() -> Vec<Check> {
    let start = Instant::now();
    let mut worst_a = (0.0f64, (0, 0i64, 0u32));
    let mut worst_b = (0.0f64, (0, 0i64, 0u32));
    let mut fail_a = 0usize;
    let mut fail_b = 0usize;
    let grid = c1_grid();
    for &(n, k, s) in &grid {
        let exact = qmc_worst_case_error(n as u64, k, s).value;

        // (a) achieved error on the extremal function, J = 10^4
        let f = extremal_qmc_function(n, k, s, 10_000);
        let oracle = make_trig(f.coeffs.clone());
        let run = qmc(&oracle, n, k).unwrap();
        let achieved = run.value.norm(); // I_k(f*) = 0 by construction
        let gap_a = (achieved - exact).abs();
        if gap_a > worst_a.0 {
            worst_a = (gap_a, (n, k, s));
        }
        if gap_a > 1e-6 {
            fail_a += 1;
        }

        // (b) closed-form maximization over the truncated Fourier ball
        // |h-k| ≤ 50n: the dual-norm sum over aliased frequencies
        let mut dual_sq = 0.0;
        for j in 1..=50i64 {
            dual_sq += 1.0 / fourier_weight(k + j * n as i64, s);
            dual_sq += 1.0 / fourier_weight(k - j * n as i64, s);
        }
        let dual = dual_sq.sqrt();
        let gap_b = (dual - exact).abs();
        if gap_b > worst_b.0 {
            worst_b = (gap_b, (n, k, s));
        }
        if gap_b > 1e-6 {
            fail_b += 1;
        }
    }
    let elapsed = start.elapsed();
    vec![
        check(
            "qmc-exact",
            "series vs extremal-function brute force (J=1e4, tol 1e-6)",
            fail_a == 0,
            format!(
                "{fail_a}/{} points above 1e-6; worst gap {:.2e} at {:?}",
                grid.len(),
                worst_a.0,
                worst_a.1
            ),
        ),
        check(
            "qmc-exact",
            "series vs truncated dual-norm brute force (|h-k|<=50n, tol 1e-6)",
            fail_b == 0,
            format!(
                "{fail_b}/{} points above 1e-6; worst gap {:.2e} at {:?}",
                grid.len(),
                worst_b.0,
                worst_b.1
            ),
        ),
        check(
            "qmc-exact",
            "brute-force comparison runtime <= 30 s",
            elapsed.as_secs_f64() <= 30.0,
            format!("{:.2} s", elapsed.as_secs_f64()),
        ),
    ]
}

/// The same two brute-force routes with truncations chosen from the analytic
/// tail bound instead of the pinned ones; demonstrates the series formula is
/// correct to well below 1e-6 everywhere on the grid.
pub fn c1_tail_aware() -> Check {
    let mut worst: f64 = 0.0;
    for &(n, k, s) in &c1_grid() {
        let exact = qmc_worst_case_error(n as u64, k, s).value;
        let j_max = if s == 1 { 1_000_000 } else { 10_000 };
        let mut dual_sq = 0.0;
        for j in 1..=j_max as i64 {
            dual_sq += 1.0 / fourier_weight(k + j * n as i64, s);
            dual_sq += 1.0 / fourier_weight(k - j * n as i64, s);
        }
        worst = worst.max((dual_sq.sqrt() - exact).abs());
    }
    check(
        "qmc-exact",
        "series vs brute force at tail-bound-chosen truncation",
        worst < 1e-6,
        format!("worst gap {worst:.2e}"),
    )
}

// ---------------------------------------------------------------------------
// criterion 2: initial errors

pub fn c2_initial_errors(tol: f64) -> Vec<Check> {
    let mut out = Vec::new();
    let mut worst: f64 = 0.0;
    for periodic in [true, false] {
        for k in [-5i64, -4, -3, -2, -1, 1, 2, 3, 4, 5] {
            for s in 1..=3u32 {
                let closed = initial_error(k, Smoothness::Finite(s), periodic).value;
                let h = representer_oracle(k, Smoothness::Finite(s), periodic).unwrap();
                let numeric = norm_hs(&h, Smoothness::Finite(s), tol.min(1e-14)).unwrap();
                worst = worst.max((closed - numeric).abs());
            }
        }
    }
    out.push(check(
        "norms",
        "initial error: closed form vs representer norm (1e-8)",
        worst < 1e-8,
        format!("worst gap {worst:.2e}"),
    ));

    let mut beta_ok = true;
    let mut detail = String::new();
    for k in 1..=10_000i64 {
        let b1 = initial_error(k, Smoothness::Finite(1), false).beta.unwrap();
        if (b1 - 2.0f64.sqrt()).abs() > 1e-12 {
            beta_ok = false;
            let _ = write!(detail, "beta(k={k},s=1)={b1}; ");
            break;
        }
    }
    for s in 2..=6u32 {
        for k in 1..=10_000i64 {
            let b = initial_error(k, Smoothness::Finite(s), false).beta.unwrap();
            if !(1.0..=1.02566).contains(&b) {
                beta_ok = false;
                let _ = write!(detail, "beta(k={k},s={s})={b}; ");
                break;
            }
        }
    }
    for k in 1..=10_000i64 {
        let b = initial_error(k, Smoothness::Infinite, false).beta.unwrap();
        if !(1.0..=1.013).contains(&b) {
            beta_ok = false;
            let _ = write!(detail, "beta(k={k},s=inf)={b}; ");
            break;
        }
    }
    out.push(check(
        "norms",
        "beta bounds on the |k| <= 1e4 sweep",
        beta_ok,
        detail,
    ));
    out
}

// ---------------------------------------------------------------------------
// criterion 3: the equispaced-rule theorem

pub fn c3_qmc_theorem() -> Vec<Check> {
    let start = Instant::now();
    let mut ii_ok = true;
    let mut iii_ok = true;
    let mut iv_ok = true;
    let mut b33_ok = true;
    for s in [1u32, 2] {
        for k_abs in [1u64, 3] {
            let k = k_abs as i64;
            let initial = initial_error(k, Smoothness::Finite(s), true).value;
            for n in 1..=k_abs {
                ii_ok &= qmc_worst_case_error(n, k, s).value > initial;
            }
            let e_at_k = qmc_worst_case_error(k_abs, k, s).value;
            b33_ok &= e_at_k * e_at_k > 1.0 + (4.0 * PI * k as f64).powi(-2 * s as i32);
        }
        for k in [0i64, 1, -1, 3, -3] {
            let k_abs = k.unsigned_abs();
            for n in (k_abs + 1)..=200 {
                let e = qmc_worst_case_error(n, k, s).value;
                let bound =
                    2.0 / (2.0 * PI).powi(s as i32) / ((n - k_abs) as f64).powi(s as i32);
                iii_ok &= e <= bound * (1.0 + 1e-14);
            }
            for alpha in [0.25f64, 0.5, 0.75] {
                let thresh = (1.0 + alpha) / (1.0 - alpha) * k_abs as f64;
                let n0 = thresh.floor() as u64 + 1;
                for n in n0..=200.max(n0 + 10) {
                    let e = qmc_worst_case_error(n, k, s).value;
                    let bound = 2.0 / (2.0 * PI * alpha).powi(s as i32)
                        / ((n + k_abs) as f64).powi(s as i32);
                    iv_ok &= e < bound;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    vec![
        check("qmc-exact", "error exceeds initial error for n <= |k|", ii_ok, String::new()),
        check("qmc-exact", "2/(2pi)^s (n-|k|)^-s bound for n > |k|", iii_ok, String::new()),
        check("qmc-exact", "alpha-bound for alpha in {0.25,0.5,0.75}", iv_ok, String::new()),
        check("qmc-exact", "squared error exceeds 1 + (4pi k)^-2s at n=|k|", b33_ok, String::new()),
        check(
            "qmc-exact",
            "theorem checks runtime <= 10 s",
            elapsed.as_secs_f64() <= 10.0,
            format!("{:.2} s", elapsed.as_secs_f64()),
        ),
    ]
}

// ---------------------------------------------------------------------------
// criterion 4: asymptotic constant

pub fn c4_asymptotic() -> Vec<Check> {
    let mut worst: f64 = 0.0;
    for s in 1..=3u32 {
        let limit = asymptotic_qmc_constant(s);
        for k in [0i64, 1, 7] {
            let scaled = qmc_worst_case_error(1000, k, s).value * 1000f64.powi(s as i32);
            worst = worst.max((scaled / limit - 1.0).abs());
        }
    }
    vec![check(
        "asymptotic",
        "n^s scaled error within 1% of sqrt(2 zeta(2s))/(2pi)^s at n=1000",
        worst <= 0.01,
        format!("worst relative gap {worst:.2e}"),
    )]
}

// ---------------------------------------------------------------------------
// criterion 5: optimal damping

pub fn c5_damping() -> Vec<Check> {
    let mut grid_ok = true;
    let mut beats_ok = true;
    let mut detail = String::new();
    for &(n, k, s) in &c1_grid() {
        let (a_star, best) = optimal_damping(n as u64, k, s);
        let e0 = initial_error(k, Smoothness::Finite(s), true).value;
        let eq = qmc_worst_case_error(n as u64, k, s).value;
        let mut argmin = 0.0;
        let mut min_val = f64::INFINITY;
        for i in 0..=150 {
            let a = i as f64 * 0.01;
            let v = damped_error(n as u64, k, s, a);
            if v < min_val {
                min_val = v;
                argmin = a;
            }
        }
        if (argmin - a_star).abs() > 0.01 + 1e-12 {
            grid_ok = false;
            let _ = write!(detail, "argmin {argmin} vs a*={a_star} at {:?}; ", (n, k, s));
        }
        beats_ok &= best.value < e0.min(eq);
    }
    vec![
        check(
            "damping",
            "grid argmin within one step of a*",
            grid_ok,
            detail,
        ),
        check(
            "damping",
            "damped error beats both the zero algorithm and the plain rule",
            beats_ok,
            String::new(),
        ),
    ]
}

// ---------------------------------------------------------------------------
// criterion 6: periodization

pub fn c6_periodization(seed: u64, tol: f64) -> Vec<Check> {
    let fns = corpus(seed);
    let mut residual_worst: f64 = 0.0;
    let mut bound_fail = 0usize;
    let mut bound_worst: f64 = 0.0;
    let mut total = 0usize;
    for f in &fns {
        // references I_k(f) are reused across j
        let refs: Vec<(i64, Complex64)> = k_sweep()
            .into_iter()
            .map(|k| (k, reference_integral(f, k, tol).unwrap().value))
            .collect();
        for j in 1..=4usize {
            let p = periodizer(f, j).unwrap();
            for l in 0..j {
                let r1 = f.eval(l, 1.0).unwrap() - p.eval_derivative(l, 1.0);
                let r0 = f.eval(l, 0.0).unwrap() - p.eval_derivative(l, 0.0);
                residual_worst = residual_worst.max((r1 - r0).norm());
            }
            let norm = norm_hs(f, Smoothness::Finite(j as u32), tol).unwrap();
            for &(k, ik) in &refs {
                let ip = integral_of_periodizer(&p, k);
                let err = (ik - ip).norm();
                let weight = (2.0 * PI * k.unsigned_abs() as f64)
                    .powi(j as i32)
                    .max(1.0);
                let bound = norm / weight + 1e-8;
                total += 1;
                if err > bound {
                    bound_fail += 1;
                    bound_worst = bound_worst.max(err - bound);
                }
            }
        }
    }
    vec![
        check(
            "periodize",
            "endpoint-derivative residuals < 1e-10",
            residual_worst < 1e-10,
            format!("worst {residual_worst:.2e}"),
        ),
        check(
            "periodize",
            "interpolant integral within (2pi|k|)^-j norm bound",
            bound_fail == 0,
            format!("{bound_fail}/{total} failures; worst excess {bound_worst:.2e}"),
        ),
    ]
}

// ---------------------------------------------------------------------------
// criterion 7: Taylor

pub fn c7_taylor(seed: u64, tol: f64) -> Vec<Check> {
    let fns = corpus(seed);
    let mut fail = 0usize;
    let mut total = 0usize;
    let mut worst: f64 = 0.0;
    for f in &fns {
        let refs: Vec<(i64, Complex64)> = k_sweep()
            .into_iter()
            .map(|k| (k, reference_integral(f, k, tol).unwrap().value))
            .collect();
        for n in 1..=4usize {
            let t = taylor(f, n).unwrap();
            let norm = norm_hs(f, Smoothness::Finite(n as u32), tol).unwrap();
            let mut denom = 1.0f64; // 2^{n-1} n!
            for j in 1..=n {
                denom *= j as f64 * if j == 1 { 1.0 } else { 2.0 };
            }
            for &(k, ik) in &refs {
                let it = integral_of_taylor(&t, k);
                let err = (ik - it).norm();
                let bound = norm / denom + 1e-8;
                total += 1;
                if err > bound {
                    fail += 1;
                    worst = worst.max(err - bound);
                }
            }
        }
    }
    vec![check(
        "taylor",
        "Taylor-rule error within norm/(2^{n-1} n!) bound",
        fail == 0,
        format!("{fail}/{total} failures; worst excess {worst:.2e}"),
    )]
}

// ---------------------------------------------------------------------------
// criterion 8: algorithm bounds and the sandwich

pub fn c8_algorithm_bounds(seed: u64, tol: f64) -> Vec<Check> {
    let mut out = Vec::new();

    // bound dominance on normalized inputs
    let fns = corpus(seed);
    let mut dominance_ok = true;
    let mut detail = String::new();
    for f in fns.iter().take(6) {
        for s in [1u32, 2] {
            let norm = norm_hs(f, Smoothness::Finite(s), tol).unwrap();
            let g = make_scaled(Complex64::new(1.0 / norm, 0.0), f.clone());
            for k in [1i64, 3] {
                let exact = reference_integral(&g, k, tol).unwrap().value;
                for n in [
                    2 * s as usize,
                    2 * s as usize + 1,
                    2 * s as usize + 4,
                    2 * s as usize + 12,
                ] {
                    let run = algo_per(&g, n, k, s).unwrap();
                    let err = (exact - run.value).norm();
                    let bound = per_error_bound(n as u64, k, s).unwrap();
                    if err > bound + 1e-8 {
                        dominance_ok = false;
                        let _ = write!(detail, "per n={n} k={k} s={s}: {err:.2e}>{bound:.2e}; ");
                    }
                }
            }
            for k in [0i64, 1, 3] {
                let exact = reference_integral(&g, k, tol).unwrap().value;
                for n in 1..=s as usize {
                    let run = algo_tay_per(&g, n, k, Smoothness::Finite(s)).unwrap();
                    let err = (exact - run.value).norm();
                    let bound = tay_per_error_bound(n as u64, k, Smoothness::Finite(s)).unwrap();
                    if err > bound + 1e-8 {
                        dominance_ok = false;
                        let _ = write!(detail, "tay n={n} k={k} s={s}: {err:.2e}>{bound:.2e}; ");
                    }
                }
            }
        }
    }
    out.push(check(
        "sandwich",
        "algorithm errors dominated by their certified bounds",
        dominance_ok,
        detail,
    ));

    // periodic sandwich: lower <= exact hybrid error <= upper, n up to 200
    let mut sandwich_ok = true;
    let mut sdetail = String::new();
    for s in [1u32, 2] {
        for k in [0i64, 1, -1, 3, -3] {
            for n in 1..=200u64 {
                let exact = modified_qmc_error(n, k, s).value;
                let (lo, up) = minimal_error_bounds(n, k, s, true);
                if !(lo.value <= exact + 1e-15 && exact <= up.value * (1.0 + 1e-12)) {
                    sandwich_ok = false;
                    let _ = write!(
                        sdetail,
                        "n={n} k={k} s={s}: {:.3e} <= {exact:.3e} <= {:.3e}; ",
                        lo.value, up.value
                    );
                }
            }
        }
    }
    out.push(check(
        "sandwich",
        "periodic sandwich brackets the exact hybrid error (n <= 200)",
        sandwich_ok,
        sdetail,
    ));

    // non-periodic sandwich coherence
    let mut np_ok = true;
    for s in [1u32, 2] {
        for k in [0i64, 1, 3] {
            for n in 0..=200u64 {
                let (lo, up) = minimal_error_bounds(n, k, s, false);
                np_ok &= lo.value <= up.value + 1e-15;
            }
        }
    }
    out.push(check(
        "sandwich",
        "non-periodic lower bound never exceeds the upper bound",
        np_ok,
        String::new(),
    ));

    // uniform hybrid bound really dominates the exact value
    let mut uni_ok = true;
    for s in [1u32, 2] {
        for k in [0i64, 2, 5] {
            for n in 1..=120u64 {
                uni_ok &= modified_qmc_error(n, k, s).value
                    <= modified_qmc_error_upper(n, k, s).value * (1.0 + 1e-12);
            }
        }
    }
    out.push(check(
        "sandwich",
        "uniform hybrid bound dominates the exact error",
        uni_ok,
        String::new(),
    ));
    out
}

// ---------------------------------------------------------------------------
// criterion 9: fooling-function certificates

/// The full certificate grid: `k ∈ {0,1,3,8}, s ∈ {1,2,3}`, and for each an
/// empty, an equispaced (5-point), and a seeded random (5-point) sample set.
pub fn fooling_certificates(
    seed: u64,
    tol: f64,
) -> Vec<oscquad_core::adversary::LowerBoundCertificate> {
    let mut rng = Rng::new(seed ^ 0xf001);
    let mut certs = Vec::new();
    for k in [0i64, 1, 3, 8] {
        for s in 1..=3u32 {
            let empty: Vec<f64> = Vec::new();
            let equispaced: Vec<f64> = (1..=5).map(|j| j as f64 / 6.0).collect();
            let random: Vec<f64> = (0..5).map(|_| rng.unit()).collect();
            for samples in [&empty, &equispaced, &random] {
                certs.push(fooling_function(k, s, samples, tol).expect("certificate builds"));
            }
        }
    }
    certs
}

pub fn c9_fooling(seed: u64, tol: f64) -> Vec<Check> {
    let start = Instant::now();
    let certs = fooling_certificates(seed, tol);
    let mut all_ok = true;
    let mut detail = String::new();
    for cert in &certs {
        if !cert.is_valid() {
            all_ok = false;
            let _ = write!(
                detail,
                "k={} s={} n={}: res={:.1e} norm={:.12} I={:.3e} bound={:.3e}; ",
                cert.k,
                cert.s,
                cert.n_samples,
                cert.sample_residuals,
                cert.norm_hs,
                cert.integral_abs,
                cert.bound_value
            );
        }
    }
    let elapsed = start.elapsed();
    vec![
        check(
            "fooling",
            "certificates valid on the (k, s, samples) grid",
            all_ok,
            if detail.is_empty() {
                format!("{} certificates", certs.len())
            } else {
                detail
            },
        ),
        check(
            "fooling",
            "certificate grid runtime <= 60 s",
            elapsed.as_secs_f64() <= 60.0,
            format!("{:.2} s", elapsed.as_secs_f64()),
        ),
    ]
}

// ---------------------------------------------------------------------------
// criterion 10: the Gram table and the norm equivalence

pub fn c10_appendix(seed: u64, tol: f64) -> Vec<Check> {
    let mut out = Vec::new();
    let mut table_ok = true;
    let mut detail = String::new();
    for s in 1..=10u32 {
        let g = gram_summary(s, 10_000);
        let mut e_row_max: f64 = 0.0;
        for j in 1..=s {
            let mut sum = 0.0;
            for h in 1..=10_000i64 {
                sum += 2.0 * gram_bernoulli_exponential_abs(j, h, s);
            }
            e_row_max = e_row_max.max(sum + g.tail_bound);
        }
        let mut b_row_max: f64 = 0.0;
        for j in 0..=s {
            let mut sum = 0.0;
            for m in 0..=s {
                sum += gram_bernoulli_pair(m, j, s).abs();
            }
            b_row_max = b_row_max.max(sum);
        }
        let ok = g.m_s1 <= 1.057
            && e_row_max <= 0.0855
            && b_row_max <= 1.0877
            && g.m_s <= 1.1732
            && g.m_s.sqrt() <= 13.0 / 12.0;
        if !ok {
            table_ok = false;
        }
        let _ = write!(
            detail,
            "s={s}: M_s1={:.5} e-rows={:.5} b-rows={:.5} M_s={:.5} sqrt={:.5}; ",
            g.m_s1,
            e_row_max,
            b_row_max,
            g.m_s,
            g.m_s.sqrt()
        );
    }
    out.push(check(
        "appendix",
        "Gram row sums reproduce 1.057 / 0.0855 / 1.0877 / 1.1732 / 13/12",
        table_ok,
        detail,
    ));

    let mut rng = Rng::new(seed ^ 0xa11e);
    let mut ratio_ok = true;
    let mut rdetail = String::new();
    for s in 1..=6u32 {
        for rep in 0..50 {
            let f = match rep % 3 {
                0 => {
                    let deg = 1 + rng.usize_below(6);
                    make_polynomial((0..=deg).map(|_| rng.complex()).collect())
                }
                1 => make_trig(
                    (0..4)
                        .map(|_| ((rng.next_u64() % 9) as i64 - 4, rng.complex()))
                        .collect(),
                ),
                _ => make_sum(vec![
                    make_polynomial((0..=3).map(|_| rng.complex()).collect()),
                    make_trig(vec![((rng.next_u64() % 7) as i64 - 3, rng.complex())]),
                ]),
            };
            let ratio = equivalence_ratio(&f, Smoothness::Finite(s), tol).unwrap();
            if !(ratio >= 12.0 / 13.0 - 1e-9 && ratio <= 1.0 + 1e-9) {
                ratio_ok = false;
                let _ = write!(rdetail, "s={s} rep={rep}: ratio={ratio}; ");
            }
        }
    }
    out.push(check(
        "appendix",
        "norm equivalence 12/13 <= ratio <= 1 on 300 random functions",
        ratio_ok,
        rdetail,
    ));
    out
}

// ---------------------------------------------------------------------------
// criterion 11: complexity regimes

pub fn c11_complexity_regimes() -> Vec<Check> {
    let mut out = Vec::new();

    // zero cases flip exactly at the initial-error thresholds
    let mut zero_ok = true;
    for s in [1u32, 2] {
        for k in 1..=10i64 {
            for setting in [Setting::Periodic, Setting::NonPeriodic] {
                let periodic = setting == Setting::Periodic;
                let thresh = initial_error(k, Smoothness::Finite(s), periodic).value;
                let at = complexity(thresh, k, s, Criterion::Absolute, setting).unwrap();
                let below =
                    complexity(thresh * (1.0 - 1e-12), k, s, Criterion::Absolute, setting).unwrap();
                zero_ok &= at.zero_case && at.achieved == 0;
                zero_ok &= !below.zero_case && below.achieved >= 1;
            }
        }
    }
    out.push(check(
        "sandwich",
        "absolute-criterion zero cases match the thresholds exactly",
        zero_ok,
        String::new(),
    ));

    // normalized periodic complexity grows linearly in |k|
    let mut lin_ok = true;
    let mut detail = String::new();
    let achieved_at = |k: i64| {
        complexity(0.01, k, 1, Criterion::Normalized, Setting::Periodic)
            .unwrap()
            .achieved as f64
    };
    let mut prev = achieved_at(8);
    for k in [16i64, 32, 64, 128] {
        let cur = achieved_at(k);
        let ratio = cur / prev;
        if !(1.8..=2.2).contains(&ratio) {
            lin_ok = false;
        }
        let _ = write!(detail, "ratio({k}/{}) = {ratio:.3}; ", k / 2);
        prev = cur;
    }
    out.push(check(
        "sandwich",
        "normalized periodic achieved complexity doubles with k",
        lin_ok,
        detail,
    ));

    // non-periodic normalized complexity is capped by 2s for large |k|
    let mut cap_ok = true;
    for k in [100i64, 1_000, 10_000, 100_000] {
        let c = complexity(0.01, k, 2, Criterion::Normalized, Setting::NonPeriodic).unwrap();
        cap_ok &= c.achieved <= 4;
    }
    out.push(check(
        "sandwich",
        "non-periodic normalized achieved stays <= 2s at large k",
        cap_ok,
        String::new(),
    ));

    // s = infinity achieved budgets match direct bound evaluation
    let inf0 = complexity_infty(1e-6, 0, Criterion::Absolute).unwrap();
    let infk = complexity_infty(1e-6, 100, Criterion::Absolute).unwrap();
    let mut inf_ok = inf0.achieved == 8 && infk.achieved == 5;
    for &eps in &[1e-3f64, 1e-4, 1e-6, 1e-9, 1e-12] {
        for &k in &[0i64, 1, 10, 100] {
            let c = complexity_infty(eps, k, Criterion::Absolute).unwrap();
            inf_ok &= c.upper >= c.achieved;
            }
    }
    out.push(check(
        "sandwich",
        "infinite-smoothness achieved budgets match the factorial/power bounds",
        inf_ok,
        format!("achieved(1e-6,k=0)={} achieved(1e-6,k=100)={}", inf0.achieved, infk.achieved),
    ));

    // monotone in eps
    let mut mono_ok = true;
    for setting in [Setting::Periodic, Setting::NonPeriodic] {
        for crit in [Criterion::Absolute, Criterion::Normalized] {
            let mut prev = u64::MAX;
            for &eps in &[1e-4f64, 1e-3, 1e-2, 0.1, 0.5] {
                let c = complexity(eps, 3, 2, crit, setting).unwrap();
                mono_ok &= c.achieved <= prev;
                prev = c.achieved;
            }
        }
    }
    out.push(check(
        "sandwich",
        "complexity is nonincreasing in eps",
        mono_ok,
        String::new(),
    ));
    out
}
