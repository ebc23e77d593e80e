//! Certified error values and bounds: initial errors, the exact worst-case
//! error series of the equispaced rule, optimal damping, minimal-error
//! sandwich bounds, and information-complexity calculators.
//!
//! Values reported with [`ErrorKind::Exact`] carry a rigorous bound on their
//! truncation error (`tail_bound ≤ 1e-13·value`); upper/lower bounds are the
//! closed forms of the worst-case analysis with the lower-bound constant
//! `c_s` taken from the constructive adversary, not an existential one.

use crate::adversary::lower_bound_constant_closed;
use crate::bernoulli::two_pi_i_pow;
use crate::error::{Error, Result};
use crate::oracle::{make_bernoulli, make_exponential, make_scaled, make_sum, Oracle};
use crate::real;
use crate::zeta::zeta_even;
use crate::Smoothness;
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;

pub use crate::zeta::{hurwitz_zeta, zeta};

/// How a reported error value is to be read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Exact,
    UpperBound,
    LowerBound,
}

/// A certified error value with truncation diagnostics.
#[derive(Clone, Debug)]
pub struct ErrorReport {
    pub value: f64,
    pub kind: ErrorKind,
    pub truncation_terms: usize,
    /// Rigorous bound on the truncation error of `value` (0 for closed forms).
    pub tail_bound: f64,
    pub provenance: &'static str,
}

impl ErrorReport {
    fn closed(value: f64, kind: ErrorKind, provenance: &'static str) -> Self {
        ErrorReport {
            value,
            kind,
            truncation_terms: 0,
            tail_bound: 0.0,
            provenance,
        }
    }
}

/// Norm of the integration functional (worst-case error of the zero
/// algorithm), with the non-periodic excess factor `β` when defined.
#[derive(Clone, Copy, Debug)]
pub struct InitialError {
    pub value: f64,
    /// `value·2π|k|`, defined for the non-periodic setting with `k ≠ 0`.
    pub beta: Option<f64>,
}

/// Absolute (`error ≤ ε`) or normalized (`error ≤ ε · initial`) criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Criterion {
    Absolute,
    Normalized,
}

/// Periodic subspace or the full space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Setting {
    Periodic,
    NonPeriodic,
}

/// Information-complexity bracket for one `(ε, k, s)`.
#[derive(Clone, Copy, Debug)]
pub struct ComplexityBounds {
    pub lower: u64,
    pub upper: u64,
    /// Smallest `n` whose certified algorithm bound meets the target.
    pub achieved: u64,
    pub zero_case: bool,
}

/// Initial error `‖I_k‖` on the chosen space.
///
/// Periodic: `(2π|k|)^{-s}` (`0` at `s = ∞`, `k ≠ 0`, where the space is the
/// constants). Non-periodic: `β_{k,s}/(2π|k|)` with `β_{k,1} = √2`,
/// `β_{k,s} ∈ [1, 1.02566]` for finite `s > 1`, `β_{k,∞} ∈ [1, 1.013]`.
/// Always `1` at `k = 0`.
pub fn initial_error(k: i64, s: Smoothness, periodic: bool) -> InitialError {
    if k == 0 {
        return InitialError {
            value: 1.0,
            beta: None,
        };
    }
    let two_pi_k = 2.0 * PI * k.unsigned_abs() as f64;
    if periodic {
        let value = match s {
            Smoothness::Finite(s) => real::powi(two_pi_k, -(s as i32)),
            Smoothness::Infinite => 0.0,
        };
        return InitialError { value, beta: None };
    }
    let q = two_pi_k * two_pi_k;
    let norm_sq = match s {
        Smoothness::Finite(s) => {
            let mut acc = 2.0 * real::powi(q, -(s as i32));
            for l in 1..s {
                acc += real::powi(q, -(l as i32));
            }
            acc
        }
        Smoothness::Infinite => 1.0 / (q - 1.0),
    };
    let value = real::sqrt(norm_sq);
    InitialError {
        value,
        beta: Some(value * two_pi_k),
    }
}

/// Riesz representer of `I_k` as an oracle (for numeric cross-checks of the
/// initial error). At `s = ∞` the Bernoulli expansion is truncated at the
/// table limit; the dropped coefficients are below `(2π)^{-60}`.
pub fn representer_oracle(k: i64, s: Smoothness, periodic: bool) -> Result<Oracle> {
    if k == 0 {
        return Ok(Oracle::constant(1.0));
    }
    let two_pi_k = 2.0 * PI * k.unsigned_abs() as f64;
    let s_terms = match s {
        Smoothness::Finite(s) => s as usize,
        Smoothness::Infinite => crate::bernoulli::MAX_DEGREE,
    };
    let exp_scale = match s {
        Smoothness::Finite(s) => real::powi(two_pi_k, -2 * s as i32),
        Smoothness::Infinite => 0.0,
    };
    let mut parts = Vec::new();
    if exp_scale != 0.0 {
        parts.push(make_scaled(
            Complex64::new(exp_scale, 0.0),
            make_exponential(k),
        ));
    }
    if periodic {
        return Ok(make_sum(parts));
    }
    for l in 1..=s_terms {
        // -(-1)^l (2πik)^{-l}
        let sign = if l % 2 == 0 { -1.0 } else { 1.0 };
        let coeff = two_pi_i_pow(k, l).inv() * sign;
        parts.push(make_scaled(coeff, make_bernoulli(l)?));
    }
    Ok(make_sum(parts))
}

/// One aliasing term pair `1/max{1,(2π(jn+k))^{2s}} + 1/max{1,(2π(jn-k))^{2s}}`.
fn alias_pair(j: u64, n: u64, k_abs: u64, s: u32) -> f64 {
    // index arithmetic in i128: the binary searches reach n ~ 2^60
    let plus = j as i128 * n as i128 + k_abs as i128;
    let minus = j as i128 * n as i128 - k_abs as i128;
    let mut t = if plus == 0 {
        1.0
    } else {
        real::powi(2.0 * PI * plus as f64, -2 * s as i32).min(1.0)
    };
    t += if minus == 0 {
        1.0
    } else {
        real::powi(2.0 * PI * minus.unsigned_abs() as f64, -2 * s as i32).min(1.0)
    };
    t
}

/// Integral tail `∫_y^∞ (2π(xn - c))^{-2s} dx` with `yn - c > 0` (and the
/// `+c` twin), used for the midpoint-corrected remainder.
fn tail_integral(y: f64, n: f64, c: f64, s: u32) -> f64 {
    let p = 2 * s as i32 - 1;
    real::powi(2.0 * PI, -2 * (s as i32)) * real::powi(y * n - c, -p) / (p as f64 * n)
}

/// Squared worst-case error of the equispaced rule, as
/// `(partial sum, midpoint tail correction, rigorous error of the correction,
/// terms used)`.
fn qmc_error_sq(n: u64, k_abs: u64, s: u32) -> (f64, f64, f64, usize) {
    let nf = n as f64;
    let kf = k_abs as f64;
    // explicit head: everything before the integrand is smooth and decreasing
    let j_head = (k_abs / n + 2).max(8);
    let mut partial = 0.0;
    let mut j = 1u64;
    while j <= j_head {
        partial += alias_pair(j, n, k_abs, s);
        j += 1;
    }
    loop {
        let y = (j - 1) as f64 + 0.5; // tail covers j' ≥ j, midpoint at j-1/2 boundary
        let tail = tail_integral(y, nf, -kf, s) + tail_integral(y, nf, kf, s);
        // midpoint-rule error: (1/24)(|g''|(y) + ∫_y^∞ |g''|)
        let g2 = |c: f64| {
            let base = 2.0 * PI * (y * nf - c);
            (2 * s) as f64
                * (2 * s + 1) as f64
                * (2.0 * PI * nf)
                * (2.0 * PI * nf)
                * real::powf(base, -2.0 * s as f64 - 2.0)
        };
        let g2int = |c: f64| {
            let base = 2.0 * PI * (y * nf - c);
            (2 * s) as f64 * (2.0 * PI * nf) * real::powf(base, -2.0 * s as f64 - 1.0)
        };
        let err = (g2(kf) + g2(-kf) + g2int(kf) + g2int(-kf)) / 24.0;
        let total = partial + tail;
        if err <= 1e-15 * total || j as usize > 2_000_000 {
            return (partial, tail, err, j as usize);
        }
        // extend the explicit head geometrically
        let target = (j * 2).max(j + 16);
        while j <= target {
            partial += alias_pair(j, n, k_abs, s);
            j += 1;
        }
    }
}

/// Exact worst-case error of the equispaced rule `A_n^QMC`:
/// `(Σ_{j≥1} [1/max{1,(2π(jn+k))^{2s}} + 1/max{1,(2π(jn-k))^{2s}}])^{1/2}`.
pub fn qmc_worst_case_error(n: u64, k: i64, s: u32) -> ErrorReport {
    assert!(n >= 1, "the rule needs at least one node");
    let (partial, tail, err_sq, terms) = qmc_error_sq(n, k.unsigned_abs(), s);
    let total = partial + tail;
    let value = real::sqrt(total);
    ErrorReport {
        value,
        kind: ErrorKind::Exact,
        truncation_terms: terms,
        tail_bound: if value > 0.0 { err_sq / (2.0 * value) } else { 0.0 },
        provenance: "equispaced-rule exact aliasing series",
    }
}

/// Hurwitz-zeta backend for the same series, valid for `n > |k|`:
/// `(2πn)^{-2s} [ζ(2s, 1+k/n) + ζ(2s, 1-k/n)]`.
pub fn qmc_worst_case_error_hurwitz(n: u64, k: i64, s: u32) -> Result<f64> {
    let k_abs = k.unsigned_abs();
    if n <= k_abs {
        return Err(Error::Domain("hurwitz backend requires n > |k|"));
    }
    let kappa = k_abs as f64 / n as f64;
    let a = hurwitz_zeta(2.0 * s as f64, 1.0 + kappa)?;
    let b = hurwitz_zeta(2.0 * s as f64, 1.0 - kappa)?;
    Ok(real::sqrt(
        real::powi(2.0 * PI * n as f64, -2 * (s as i32)) * (a + b),
    ))
}

/// Decides `ẽ(A_n^QMC) ≤ target` with two-sided integral brackets, cheap
/// enough for complexity scans.
pub fn qmc_error_le(n: u64, k: i64, s: u32, target: f64) -> bool {
    if target <= 0.0 {
        return false;
    }
    let k_abs = k.unsigned_abs();
    let t_sq = target * target;
    let nf = n as f64;
    let kf = k_abs as f64;
    let mut partial = 0.0;
    let mut j = 1u64;
    let j_min_smooth = k_abs / n + 2;
    loop {
        partial += alias_pair(j, n, k_abs, s);
        if partial > t_sq {
            return false;
        }
        if j >= j_min_smooth {
            // decreasing integrand: Σ_{j'>j} ∈ [∫_{j+1}, ∫_j]
            let upper = tail_integral(j as f64, nf, -kf, s) + tail_integral(j as f64, nf, kf, s);
            if partial + upper <= t_sq {
                return true;
            }
            let lower =
                tail_integral((j + 1) as f64, nf, -kf, s) + tail_integral((j + 1) as f64, nf, kf, s);
            if partial + lower > t_sq {
                return false;
            }
        }
        j += 1;
        if j > 4_000_000 {
            // bracket failed to resolve; fall back to the corrected estimate
            let (p, tail, _, _) = qmc_error_sq(n, k_abs, s);
            return p + tail <= t_sq;
        }
    }
}

/// Worst-case error of the damped rule `a·A_n^QMC` in closed form:
/// `((1-a)²·e₀² + a²·e_QMC²)^{1/2}`.
pub fn damped_error(n: u64, k: i64, s: u32, a: f64) -> f64 {
    let e0 = initial_error(k, Smoothness::Finite(s), true).value;
    let eq = qmc_worst_case_error(n, k, s).value;
    real::sqrt((1.0 - a) * (1.0 - a) * e0 * e0 + a * a * eq * eq)
}

/// Optimal damping factor `a* = e₀²/(e₀² + e_QMC²)` and the resulting error
/// `e₀·e_QMC/sqrt(e₀² + e_QMC²)`; always `a* < 1` and the error beats both
/// the zero algorithm and the undamped rule.
pub fn optimal_damping(n: u64, k: i64, s: u32) -> (f64, ErrorReport) {
    let e0 = initial_error(k, Smoothness::Finite(s), true).value;
    let eq = qmc_worst_case_error(n, k, s);
    let denom = e0 * e0 + eq.value * eq.value;
    let a_star = e0 * e0 / denom;
    let err = e0 * eq.value / real::sqrt(denom);
    (
        a_star,
        ErrorReport {
            value: err,
            kind: ErrorKind::Exact,
            truncation_terms: eq.truncation_terms,
            tail_bound: eq.tail_bound,
            provenance: "optimally damped equispaced rule",
        },
    )
}

/// Exact worst-case error of the zero/QMC hybrid `A*_n` (zero algorithm below
/// the `2|k|` threshold, equispaced rule above).
pub fn modified_qmc_error(n: u64, k: i64, s: u32) -> ErrorReport {
    let k_abs = k.unsigned_abs();
    if n == 0 || n < 2 * k_abs {
        ErrorReport::closed(
            initial_error(k, Smoothness::Finite(s), true).value,
            ErrorKind::Exact,
            "hybrid rule, zero branch",
        )
    } else {
        let mut r = qmc_worst_case_error(n, k, s);
        r.provenance = "hybrid rule, equispaced branch";
        r
    }
}

/// Uniform bound `ẽ(A*_n) ≤ (3/(2π))^s · 2/(n+|k|)^s` (`n ≥ 1`).
pub fn modified_qmc_error_upper(n: u64, k: i64, s: u32) -> ErrorReport {
    let m = n + k.unsigned_abs();
    let value = if m == 0 {
        1.0
    } else {
        real::powi(3.0 / (2.0 * PI), s as i32) * 2.0 / real::powi(m as f64, s as i32)
    };
    ErrorReport::closed(value, ErrorKind::UpperBound, "uniform hybrid bound")
}

/// Periodization-rule bound: `(2π|k|)^{-n/2}` for even `n ∈ [2, 2s]`,
/// `(3/(2π))^s·2/(n-2s+1+|k|)^s` for `n > 2s`; requires `k ≠ 0`.
pub fn per_error_bound(n: u64, k: i64, s: u32) -> Result<f64> {
    if k == 0 {
        return Err(Error::ZeroWaveNumber);
    }
    let k_abs = k.unsigned_abs();
    let two_s = 2 * s as u64;
    if n > two_s {
        Ok(real::powi(3.0 / (2.0 * PI), s as i32) * 2.0
            / real::powi((n - two_s + 1 + k_abs) as f64, s as i32))
    } else if n >= 2 && n % 2 == 0 {
        Ok(real::powi(2.0 * PI * k_abs as f64, -((n / 2) as i32)))
    } else {
        Err(Error::InvalidBudget {
            n: n as usize,
            reason: "periodization rule is defined for even n in [2,2s] and n > 2s",
        })
    }
}

/// Taylor/periodization-rule bound: `1/(2^{n-1}·n!)` for `n ∈ [1,s]`, the
/// periodization bound for `n ≥ 2s`; the gap `(s, 2s)` is undefined at
/// finite `s`. At `s = ∞` the smaller of the factorial and (even-`n`,
/// `k ≠ 0`) power branches.
pub fn tay_per_error_bound(n: u64, k: i64, s: Smoothness) -> Result<f64> {
    let factorial_bound = |n: u64| {
        let mut denom = 1.0_f64; // 2^{n-1}·n!
        for j in 1..=n {
            denom *= j as f64 * if j == 1 { 1.0 } else { 2.0 };
        }
        1.0 / denom
    };
    match s {
        Smoothness::Finite(s) => {
            if n >= 1 && n <= s as u64 {
                Ok(factorial_bound(n))
            } else if n >= 2 * s as u64 {
                per_error_bound(n, k, s).or_else(|_| {
                    // k = 0 with n ≥ 2s: only the hybrid-after-periodization
                    // form remains
                    Ok(real::powi(3.0 / (2.0 * PI), s as i32) * 2.0
                        / real::powi((n - 2 * s as u64 + 1) as f64, s as i32))
                })
            } else {
                Err(Error::UndefinedBudget { n: n as usize, s })
            }
        }
        Smoothness::Infinite => {
            if n == 0 {
                return Err(Error::InvalidBudget {
                    n: 0,
                    reason: "need at least one evaluation",
                });
            }
            let mut best = factorial_bound(n);
            if k != 0 && n >= 2 {
                let half = (n / 2) as i32;
                best = best.min(real::powi(2.0 * PI * k.unsigned_abs() as f64, -half));
            }
            Ok(best)
        }
    }
}

/// Best certified bound reachable with a budget of at most `n` evaluations in
/// the non-periodic setting (monotone in `n`; finite for every `n ≥ 0`).
pub fn nonperiodic_best_bound(n: u64, k: i64, s: u32) -> f64 {
    let mut best = initial_error(k, Smoothness::Finite(s), false).value;
    if n >= 1 {
        let m = n.min(s as u64);
        if m >= 1 {
            if let Ok(b) = tay_per_error_bound(m, k, Smoothness::Finite(s)) {
                best = best.min(b);
            }
        }
    }
    if k != 0 && n >= 2 {
        let j = (n / 2).min(s as u64);
        if j >= 1 {
            best = best.min(real::powi(2.0 * PI * k.unsigned_abs() as f64, -(j as i32)));
        }
    }
    if n >= 2 * s as u64 {
        if let Ok(b) = per_error_bound(n, k, s) {
            best = best.min(b);
        } else {
            best = best.min(
                real::powi(3.0 / (2.0 * PI), s as i32)
                    / real::powi((n - 2 * s as u64 + 1) as f64, s as i32)
                    * 2.0,
            );
        }
    }
    best
}

/// Best certified bound of the periodization family with budget at most `n`
/// (finite for every `n`, falling back to the zero algorithm; the initial
/// error for `k = 0`, where the family is not defined).
pub fn per_bound_with_budget(n: u64, k: i64, s: u32) -> f64 {
    let mut best = initial_error(k, Smoothness::Finite(s), false).value;
    if k != 0 {
        if n >= 2 {
            let j = (n / 2).min(s as u64) as i32;
            best = best.min(real::powi(2.0 * PI * k.unsigned_abs() as f64, -j));
        }
        if n > 2 * s as u64 {
            if let Ok(b) = per_error_bound(n, k, s) {
                best = best.min(b);
            }
        }
    }
    best
}

/// Best certified bound of the Taylor/periodization family with budget at
/// most `n`.
pub fn tay_per_bound_with_budget(n: u64, k: i64, s: u32) -> f64 {
    let mut best = initial_error(k, Smoothness::Finite(s), false).value;
    let m = n.min(s as u64);
    if m >= 1 {
        if let Ok(b) = tay_per_error_bound(m, k, Smoothness::Finite(s)) {
            best = best.min(b);
        }
    }
    if n >= 2 * s as u64 {
        best = best.min(per_bound_with_budget(n, k, s));
        best = best.min(
            real::powi(3.0 / (2.0 * PI), s as i32) * 2.0
                / real::powi((n - 2 * s as u64 + 1 + k.unsigned_abs()) as f64, s as i32),
        );
    }
    best
}

/// Sandwich `(lower, upper)` on the `n`-th minimal worst-case error.
///
/// The lower bound `c_s/(n+|k|)^s` uses the constructive adversary constant;
/// the upper bound is the hybrid rule (periodic) or the periodization rule
/// for `n ≥ 2s` with the small-budget branches below.
pub fn minimal_error_bounds(n: u64, k: i64, s: u32, periodic: bool) -> (ErrorReport, ErrorReport) {
    let (_, c_s) = lower_bound_constant_closed(s);
    let m = (n + k.unsigned_abs()).max(1);
    let lower = ErrorReport::closed(
        c_s / real::powi(m as f64, s as i32),
        ErrorKind::LowerBound,
        "fooling-function lower bound",
    );
    let upper = if periodic {
        if n == 0 {
            ErrorReport::closed(
                initial_error(k, Smoothness::Finite(s), true).value,
                ErrorKind::UpperBound,
                "zero algorithm",
            )
        } else {
            modified_qmc_error_upper(n, k, s)
        }
    } else if n >= 2 * s as u64 {
        ErrorReport::closed(
            real::powi(3.0 / (2.0 * PI), s as i32) * 2.0
                / real::powi((n + k.unsigned_abs() - 2 * s as u64 + 1) as f64, s as i32),
            ErrorKind::UpperBound,
            "periodize-then-hybrid bound",
        )
    } else {
        // small budgets: the Taylor/power branches, or the zero algorithm
        let mut best = initial_error(k, Smoothness::Finite(s), false).value;
        if n >= 1 {
            if let Ok(b) = tay_per_error_bound(n.min(s as u64), k, Smoothness::Finite(s)) {
                best = best.min(b);
            }
        }
        if k != 0 && n >= 2 {
            best = best.min(real::powi(
                2.0 * PI * k.unsigned_abs() as f64,
                -((n / 2) as i32),
            ));
        }
        ErrorReport::closed(best, ErrorKind::UpperBound, "small-budget branch bounds")
    };
    (lower, upper)
}

/// `lim n^s ẽ(A_n^QMC) = sqrt(2ζ(2s))/(2π)^s`.
pub fn asymptotic_qmc_constant(s: u32) -> f64 {
    real::sqrt(2.0 * zeta_even(2 * s as usize).expect("2s in table range"))
        * real::powi(2.0 * PI, -(s as i32))
}

fn ceil_guarded(x: f64) -> u64 {
    real::ceil(x - 1e-12).max(0.0) as u64
}

/// Information complexity for finite `s`: closed-form lower/upper estimates plus
/// the smallest budget whose certified algorithm bound meets the target.
pub fn complexity(
    eps: f64,
    k: i64,
    s: u32,
    criterion: Criterion,
    setting: Setting,
) -> Result<ComplexityBounds> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::Domain("eps must lie in (0,1)"));
    }
    let periodic = setting == Setting::Periodic;
    let k_abs = k.unsigned_abs();
    let initial = initial_error(k, Smoothness::Finite(s), periodic).value;
    let (_, c_s) = lower_bound_constant_closed(s);
    let sf = s as f64;

    // absolute criterion met by the zero algorithm
    if criterion == Criterion::Absolute && eps >= initial {
        return Ok(ComplexityBounds {
            lower: 0,
            upper: 0,
            achieved: 0,
            zero_case: true,
        });
    }

    let three_over_2pi = 3.0 / (2.0 * PI);
    let normalized = criterion == Criterion::Normalized && k != 0;
    let (lower_f, upper): (f64, u64) = if periodic {
        if !normalized {
            let lo = real::powf(c_s / eps, 1.0 / sf) - k_abs as f64;
            let up = ceil_guarded(three_over_2pi * real::powf(real::sqrt(2.0) / eps, 1.0 / sf))
                .saturating_sub(k_abs);
            (lo, up)
        } else {
            let lo = k_abs as f64 * (2.0 * PI * real::powf(c_s / eps, 1.0 / sf) - 1.0);
            let up = k_abs
                * ceil_guarded(3.0 * real::powf(real::sqrt(2.0) / eps, 1.0 / sf) - 1.0);
            (lo, up)
        }
    } else if !normalized {
        let lo = real::powf(c_s / eps, 1.0 / sf) - k_abs as f64;
        let base = ceil_guarded(three_over_2pi * real::powf(2.0 / eps, 1.0 / sf));
        let up = if k == 0 {
            base + 2 * s as u64 - 1
        } else {
            2 * s as u64 + base.saturating_sub(1 + k_abs)
        };
        (lo, up)
    } else {
        let lo = real::powf(c_s * real::sqrt(2.0) * PI * k_abs as f64 / eps, 1.0 / sf)
            - k_abs as f64;
        let up = 2 * s as u64
            + ceil_guarded(three_over_2pi * real::powf(4.0 * PI * k_abs as f64 / eps, 1.0 / sf))
                .saturating_sub(1 + k_abs);
        (lo, up)
    };
    let mut lower = ceil_guarded(lower_f);
    if criterion == Criterion::Normalized {
        lower = lower.max(1);
    }

    let target = match criterion {
        Criterion::Absolute => eps,
        Criterion::Normalized => eps * initial,
    };
    let achieved = if periodic {
        achieved_periodic(k, s, target, upper)
    } else {
        achieved_nonperiodic(k, s, target, upper)
    };

    Ok(ComplexityBounds {
        lower,
        upper,
        achieved,
        zero_case: false,
    })
}

/// Smallest `n ≥ lo` with `le(n)`, for a predicate that is monotone in `n`
/// (false below the boundary, true above). Exponential then binary search.
fn monotone_first<F: Fn(u64) -> bool>(lo: u64, le: F) -> u64 {
    let mut hi = lo.max(1);
    while !le(hi) {
        hi = hi.saturating_mul(2).max(hi + 1);
        if hi > (1 << 60) {
            return hi; // unreachable for any meaningful target
        }
    }
    let mut lo_open = lo; // no information below lo
    let mut hi_closed = hi;
    while lo_open < hi_closed {
        let mid = lo_open + (hi_closed - lo_open) / 2;
        if le(mid) {
            hi_closed = mid;
        } else {
            lo_open = mid + 1;
        }
    }
    hi_closed
}

fn achieved_periodic(k: i64, s: u32, target: f64, _upper_hint: u64) -> u64 {
    let initial = initial_error(k, Smoothness::Finite(s), true).value;
    if initial <= target {
        return 0;
    }
    // the zero branch keeps the initial error; beyond the threshold the
    // hybrid error is strictly decreasing in n, so the boundary is exact
    let start = (2 * k.unsigned_abs()).max(1);
    monotone_first(start, |n| qmc_error_le(n, k, s, target))
}

fn achieved_nonperiodic(k: i64, s: u32, target: f64, _upper_hint: u64) -> u64 {
    if nonperiodic_best_bound(0, k, s) <= target {
        return 0;
    }
    monotone_first(1, |n| nonperiodic_best_bound(n, k, s) <= target)
}

/// Information complexity at `s = ∞` (upper bound and achieved budget; no
/// non-trivial lower bound is available).
pub fn complexity_infty(eps: f64, k: i64, criterion: Criterion) -> Result<ComplexityBounds> {
    let e_to_minus_e = real::exp(-core::f64::consts::E);
    if !(eps > 0.0 && eps < e_to_minus_e) {
        return Err(Error::Domain("eps must lie in (0, e^{-e})"));
    }
    let k_abs = k.unsigned_abs();
    let initial = initial_error(k, Smoothness::Infinite, false).value;
    if criterion == Criterion::Absolute && eps >= initial {
        return Ok(ComplexityBounds {
            lower: 0,
            upper: 0,
            achieved: 0,
            zero_case: true,
        });
    }
    let l = real::ln(1.0 / eps);
    let ll = real::ln(l);
    let upper = if k == 0 {
        ceil_guarded(2.0 * l / ll)
    } else {
        let lk = real::ln(2.0 * PI * k_abs as f64);
        match criterion {
            Criterion::Absolute => ceil_guarded(2.0 * (l / ll).min(l / lk)),
            Criterion::Normalized => {
                let shifted = l + lk;
                ceil_guarded(2.0 * (shifted / real::ln(shifted)).min(l / lk + 1.0))
            }
        }
    };
    let target = match criterion {
        Criterion::Absolute => eps,
        Criterion::Normalized => eps * initial,
    };
    let mut achieved = 0;
    let mut factorial_denom = 1.0; // 2^{n-1} n!
    for n in 1..=500u64 {
        factorial_denom *= n as f64 * if n == 1 { 1.0 } else { 2.0 };
        let mut b = 1.0 / factorial_denom;
        if k != 0 {
            b = b.min(real::powf(2.0 * PI * k_abs as f64, -(n as f64) / 2.0));
        }
        if b <= target {
            achieved = n;
            break;
        }
    }
    Ok(ComplexityBounds {
        lower: 0,
        upper,
        achieved,
        zero_case: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn initial_errors_match_closed_forms() {
        let p = initial_error(1, Smoothness::Finite(1), true);
        assert!((p.value - 1.0 / (2.0 * PI)).abs() < 1e-15);
        assert!(p.beta.is_none());

        let np = initial_error(1, Smoothness::Finite(1), false);
        assert!((np.value - real::sqrt(2.0) / (2.0 * PI)).abs() < 1e-15);
        assert!((np.beta.unwrap() - real::sqrt(2.0)).abs() < 1e-13);

        assert_eq!(initial_error(0, Smoothness::Finite(3), true).value, 1.0);
        assert_eq!(initial_error(0, Smoothness::Infinite, false).value, 1.0);
        assert_eq!(initial_error(5, Smoothness::Infinite, true).value, 0.0);

        // β closed form for s > 1: sqrt((q^s + q - 2)/(q^s - q^{s-1}))
        for s in 2..=5u32 {
            for k in [1i64, 2, 7, 100] {
                let q = (2.0 * PI * k as f64).powi(2);
                let closed =
                    ((q.powi(s as i32) + q - 2.0) / (q.powi(s as i32) - q.powi(s as i32 - 1)))
                        .sqrt();
                let beta = initial_error(k, Smoothness::Finite(s), false).beta.unwrap();
                assert!((beta - closed).abs() < 1e-16 * closed * 100.0, "s={s} k={k}");
                assert!((1.0..=1.02566).contains(&beta));
            }
        }
        // β at s = ∞
        let b_inf = initial_error(1, Smoothness::Infinite, false).beta.unwrap();
        let q = (2.0 * PI).powi(2);
        assert!((b_inf - (q / (q - 1.0)).sqrt()).abs() < 1e-15);
        assert!(b_inf <= 1.013);
    }

    #[test]
    fn qmc_error_examples() {
        let e = qmc_worst_case_error(1, 0, 1);
        assert!((e.value - 1.0 / 12.0f64.sqrt()).abs() < 1e-13, "{}", e.value);
        assert!(e.tail_bound <= 1e-13 * e.value);

        let e11 = qmc_worst_case_error(1, 1, 1);
        let expect = (1.0 + (2.0 * zeta(2.0).unwrap() - 1.0) / (4.0 * PI * PI)).sqrt();
        assert!((e11.value - expect).abs() < 1e-12, "{} vs {expect}", e11.value);
        assert!((e11.value - 1.0285928).abs() < 1e-6);

        // n = |k| blowup
        for s in 1..=3u32 {
            for k in [1i64, 3, 8] {
                let e = qmc_worst_case_error(k as u64, k, s);
                let rhs = 1.0 + (4.0 * PI * k as f64).powi(-2 * s as i32);
                assert!(e.value * e.value > rhs, "k={k} s={s}");
            }
        }
    }

    #[test]
    fn qmc_error_closed_form_pins() {
        // n=2, k=1, s=1: the aliased frequencies are the odd integers, so
        // e² = (2π)^{-2}(2·Σ_{odd m} m^{-2} - 1) = (π²/4 - 1)/(4π²)
        let e = qmc_worst_case_error(2, 1, 1).value;
        let pin = ((PI * PI / 4.0 - 1.0) / (4.0 * PI * PI)).sqrt();
        assert!((e - pin).abs() < 1e-14, "{e} vs {pin}");

        // n=2, k=0, s=1: e² = 2ζ(2)/(4π)² = 1/48
        let e = qmc_worst_case_error(2, 0, 1).value;
        assert!((e - (1.0f64 / 48.0).sqrt()).abs() < 1e-14);

        // n=1, k=0, s=2: e² = 2ζ(4)/(2π)⁴ = 1/720
        let e = qmc_worst_case_error(1, 0, 2).value;
        assert!((e - (1.0f64 / 720.0).sqrt()).abs() < 1e-14);
    }

    #[test]
    fn qmc_error_symmetric_in_k() {
        for s in 1..=2u32 {
            for n in [1u64, 3, 7] {
                for k in [0i64, 2, 5] {
                    let a = qmc_worst_case_error(n, k, s).value;
                    let b = qmc_worst_case_error(n, -k, s).value;
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn hurwitz_backend_agrees() {
        for s in 1..=3u32 {
            for (n, k) in [(2u64, 1i64), (5, 1), (10, 3), (100, 7), (3, 0)] {
                let series = qmc_worst_case_error(n, k, s).value;
                let hz = qmc_worst_case_error_hurwitz(n, k, s).unwrap();
                assert!(
                    (series - hz).abs() < 1e-12 * series.max(1e-30),
                    "n={n} k={k} s={s}: {series} vs {hz}"
                );
            }
        }
        assert!(qmc_worst_case_error_hurwitz(3, 5, 1).is_err());
    }

    #[test]
    fn qmc_error_le_is_consistent() {
        for s in 1..=2u32 {
            for n in [1u64, 4, 17, 120] {
                for k in [0i64, 1, 5] {
                    let v = qmc_worst_case_error(n, k, s).value;
                    assert!(qmc_error_le(n, k, s, v * (1.0 + 1e-9)));
                    assert!(!qmc_error_le(n, k, s, v * (1.0 - 1e-9)));
                }
            }
        }
    }

    #[test]
    fn damping_example() {
        let (a_star, err) = optimal_damping(1, 1, 1);
        assert!((a_star - 0.0233818).abs() < 1e-6, "{a_star}");
        assert!((err.value - 0.1572825).abs() < 1e-6, "{}", err.value);
        // reduces to closed form at the endpoints
        assert!((damped_error(1, 1, 1, 0.0) - 1.0 / (2.0 * PI)).abs() < 1e-14);
        let eq = qmc_worst_case_error(1, 1, 1).value;
        assert!((damped_error(1, 1, 1, 1.0) - eq).abs() < 1e-14);
        // a* ≤ (2π|k|)^{-2s} at n = |k|
        for k in [1i64, 2, 5] {
            let (a, _) = optimal_damping(k as u64, k, 1);
            assert!(a <= (2.0 * PI * k as f64).powi(-2));
        }
    }

    #[test]
    fn hybrid_rule_branches() {
        let z = modified_qmc_error(3, 2, 1);
        assert!((z.value - 1.0 / (4.0 * PI)).abs() < 1e-15);
        let q = modified_qmc_error(4, 2, 1);
        assert!(q.value <= 2.0 / (2.0 * PI) / 2.0 + 1e-12);
        // estanstar dominates the exact value
        for n in 1..=60u64 {
            for k in [0i64, 1, 2, 5] {
                for s in 1..=2u32 {
                    let e = modified_qmc_error(n, k, s).value;
                    let u = modified_qmc_error_upper(n, k, s).value;
                    assert!(e <= u + 1e-12, "n={n} k={k} s={s}: {e} vs {u}");
                }
            }
        }
        assert!(modified_qmc_error_upper(1, 0, 1).value >= 0.95);
    }

    #[test]
    fn sandwich_brackets_exact_hybrid() {
        let (lo, up) = minimal_error_bounds(10, 0, 1, true);
        assert!((lo.value - 0.01187 / 10.0).abs() < 1e-4 * lo.value * 10.0);
        assert!((up.value - 0.0954930).abs() < 1e-6);
        let exact = modified_qmc_error(10, 0, 1).value;
        assert!(lo.value <= exact && exact <= up.value);
        // non-periodic upper at n = 2s
        let (_, up2) = minimal_error_bounds(4, 5, 2, false);
        assert!((up2.value - (3.0 / (2.0 * PI)).powi(2) * 2.0 / 36.0).abs() < 1e-12);
        // lower ≤ upper everywhere sampled
        for n in 0..=50u64 {
            for k in [0i64, 1, 3, 8] {
                for s in 1..=3u32 {
                    for periodic in [true, false] {
                        let (l, u) = minimal_error_bounds(n, k, s, periodic);
                        assert!(l.value <= u.value + 1e-15, "n={n} k={k} s={s}");
                    }
                }
            }
        }
    }

    #[test]
    fn asymptotic_constant_values() {
        assert!((asymptotic_qmc_constant(1) - 1.0 / 12.0f64.sqrt()).abs() < 1e-15);
        let c2 = (2.0 * PI.powi(4) / 90.0).sqrt() / (4.0 * PI * PI);
        assert!((asymptotic_qmc_constant(2) - c2).abs() < 1e-15);
        // the series really approaches it: n^s·ẽ at n = 4000
        for s in 1..=2u32 {
            let scaled = qmc_worst_case_error(4000, 0, s).value * 4000.0f64.powi(s as i32);
            let limit = asymptotic_qmc_constant(s);
            assert!((scaled / limit - 1.0).abs() < 1e-3, "s={s}");
        }
    }

    #[test]
    fn per_and_tayper_bounds() {
        assert!((per_error_bound(4, 1, 2).unwrap() - (2.0 * PI).powi(-2)).abs() < 1e-18);
        assert!(per_error_bound(3, 1, 2).is_err());
        assert!(per_error_bound(2, 0, 2).is_err());
        assert!((tay_per_error_bound(1, 0, Smoothness::Finite(3)).unwrap() - 1.0).abs() < 1e-15);
        assert!(
            (tay_per_error_bound(3, 0, Smoothness::Finite(3)).unwrap() - 1.0 / (4.0 * 6.0)).abs()
                < 1e-15
        );
        assert!(matches!(
            tay_per_error_bound(4, 0, Smoothness::Finite(3)),
            Err(Error::UndefinedBudget { .. })
        ));
        // s = ∞ takes the smaller branch
        let b = tay_per_error_bound(4, 100, Smoothness::Infinite).unwrap();
        let fac: f64 = 1.0 / (8.0 * 24.0);
        let pow = (2.0 * PI * 100.0).powi(-2);
        assert!((b - fac.min(pow)).abs() < 1e-18);
    }

    #[test]
    fn complexity_zero_cases_and_examples() {
        // eps above the initial error: solved by the zero algorithm
        let z = complexity(0.1, 2, 1, Criterion::Absolute, Setting::Periodic).unwrap();
        assert!(z.zero_case && z.achieved == 0 && z.lower == 0 && z.upper == 0);

        // periodic normalized upper: |k|·⌈3(√2/eps)^{1/s} - 1⌉
        let c = complexity(0.1, 1, 1, Criterion::Normalized, Setting::Periodic).unwrap();
        assert_eq!(c.upper, 42);
        assert!(c.lower <= c.achieved);
        assert!(!c.zero_case);

        // large-k non-periodic normalized complexity stays at 2s
        for k in [100i64, 10_000, 100_000] {
            let c = complexity(0.01, k, 2, Criterion::Normalized, Setting::NonPeriodic).unwrap();
            assert!(c.achieved <= 4, "k={k}: {}", c.achieved);
        }

        assert!(complexity(1.0, 1, 1, Criterion::Absolute, Setting::Periodic).is_err());
        assert!(complexity(0.0, 1, 1, Criterion::Absolute, Setting::Periodic).is_err());
    }

    #[test]
    fn damping_factor_approaches_one() {
        // a* → 1 as n grows at fixed k
        let (a_small, _) = optimal_damping(1, 1, 1);
        let (a_mid, _) = optimal_damping(100, 1, 1);
        let (a_big, _) = optimal_damping(10_000, 1, 1);
        assert!(a_small < a_mid && a_mid < a_big);
        assert!(a_big > 0.999, "{a_big}");
        assert!(a_big < 1.0);
    }

    #[test]
    fn achieved_dominates_lower_bound() {
        for setting in [Setting::Periodic, Setting::NonPeriodic] {
            for crit in [Criterion::Absolute, Criterion::Normalized] {
                for &eps in &[1e-4f64, 1e-2, 0.3] {
                    for &k in &[0i64, 1, 5, 40] {
                        for s in 1..=3u32 {
                            let c = complexity(eps, k, s, crit, setting).unwrap();
                            assert!(
                                c.lower <= c.achieved,
                                "eps={eps} k={k} s={s} {crit:?} {setting:?}: {} > {}",
                                c.lower,
                                c.achieved
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn complexity_infty_examples() {
        let c0 = complexity_infty(1e-6, 0, Criterion::Absolute).unwrap();
        assert_eq!(c0.achieved, 8);
        let ck = complexity_infty(1e-6, 100, Criterion::Absolute).unwrap();
        assert_eq!(ck.achieved, 5);
        assert!(ck.upper >= ck.achieved);
        assert!(complexity_infty(0.1, 0, Criterion::Absolute).is_err());
        // upper dominates achieved across a grid
        for &eps in &[1e-3, 1e-5, 1e-8, 1e-12] {
            for &k in &[0i64, 1, 10, 1000] {
                for crit in [Criterion::Absolute, Criterion::Normalized] {
                    let c = complexity_infty(eps, k, crit).unwrap();
                    assert!(
                        c.upper >= c.achieved,
                        "eps={eps} k={k} {crit:?}: {} < {}",
                        c.upper,
                        c.achieved
                    );
                }
            }
        }
    }

    #[test]
    fn representer_norm_is_initial_error() {
        use crate::sobolev::norm_hs;
        for periodic in [true, false] {
            for k in [1i64, -2, 3] {
                for s in 1..=2u32 {
                    let h = representer_oracle(k, Smoothness::Finite(s), periodic).unwrap();
                    let n = norm_hs(&h, Smoothness::Finite(s), 1e-14).unwrap();
                    let e = initial_error(k, Smoothness::Finite(s), periodic).value;
                    assert!(
                        (n - e).abs() < 1e-8,
                        "periodic={periodic} k={k} s={s}: {n} vs {e}"
                    );
                }
            }
        }
    }
}
