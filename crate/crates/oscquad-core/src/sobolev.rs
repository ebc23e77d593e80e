//! Sobolev inner products, norms, reproducing kernels, and the Gram-sum
//! computation behind the 12/13 norm equivalence.
//!
//! Two inner products are in play on `H^s`:
//!
//! * the working one, `⟨f,g⟩_s = Σ_{l<s} ⟨f^(l),1⟩₀ conj(⟨g^(l),1⟩₀) + ⟨f^(s),g^(s)⟩₀`,
//!   in which `{B*_0,…,B*_s} ∪ {e_h/(2π|h|)^s}` is orthonormal, and
//! * the standard one, `⟨f,g⟩_{s,*} = Σ_{l≤s} ⟨f^(l),g^(l)⟩₀`.
//!
//! The norms they induce satisfy `(12/13)‖f‖_* ≤ ‖f‖ ≤ ‖f‖_*` uniformly in
//! `s`; [`gram_summary`] reproduces the row-sum bounds (`M_{s,1} ≤ 1.057`,
//! `M_s ≤ 1.1732`, `√M_s ≤ 13/12`) that prove it.

use crate::bernoulli;
use crate::error::{Error, Result};
use crate::oracle::{make_periodic_bernoulli, make_sum, Oracle, TrigPolynomial};
use crate::quadrature::{integral_of_derivative, l2_pairing, numeric_l2_norm};
use crate::real;
use crate::zeta::zeta_even;
use crate::Smoothness;
use alloc::vec;
use core::f64::consts::PI;
use num_complex::Complex64;

/// Fourier weight `a_h = max{1, (2πh)^{2s}}`; `a_h = a_{-h}`, `a_0 = 1`.
pub fn fourier_weight(h: i64, s: u32) -> f64 {
    if h == 0 {
        1.0
    } else {
        real::powi(2.0 * PI * h.unsigned_abs() as f64, 2 * s as i32).max(1.0)
    }
}

/// `⟨f,g⟩_s` for finite `s`, each pairing by the reference integrator.
pub fn inner_product_hs(f: &Oracle, g: &Oracle, s: u32, tol: f64) -> Result<Complex64> {
    let s = s as usize;
    let mut acc = Complex64::new(0.0, 0.0);
    for l in 0..s {
        let mf = integral_of_derivative(f, l, 0.0, 1.0, tol)?;
        let mg = integral_of_derivative(g, l, 0.0, 1.0, tol)?;
        acc += mf * mg.conj();
    }
    acc += l2_pairing(f, s, g, s, 0.0, 1.0, tol)?;
    Ok(acc)
}

/// Norm squared pieces shared by the finite-`s` and `s=∞` paths.
const INF_TERM_CAP: usize = 200;
const INF_TAIL_REL: f64 = 1e-14;

fn truncated_sum<T: Fn(usize) -> Result<f64>>(term: T) -> Result<f64> {
    let mut acc = 0.0_f64;
    let mut quiet = 0usize;
    for l in 0..INF_TERM_CAP {
        let t = term(l)?;
        if t > 1e280 {
            // heading for overflow: the input is not a member of the space
            return Err(Error::DivergentSum);
        }
        acc += t;
        if t <= INF_TAIL_REL * acc.max(f64::MIN_POSITIVE) {
            quiet += 1;
            if quiet >= 3 {
                return Ok(acc);
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::DivergentSum)
}

/// `‖f‖_{H^s}` for finite `s` or `s = ∞` (then `Σ_l |⟨f^(l),1⟩₀|²`, truncated
/// at relative tail 1e-14 with a 200-term cap).
pub fn norm_hs(f: &Oracle, s: Smoothness, tol: f64) -> Result<f64> {
    match s {
        Smoothness::Finite(s) => {
            let s = s as usize;
            let mut acc = 0.0;
            for l in 0..s {
                acc += integral_of_derivative(f, l, 0.0, 1.0, tol)?.norm_sqr();
            }
            let d = numeric_l2_norm(f, s, tol)?;
            Ok(real::sqrt(acc + d * d))
        }
        Smoothness::Infinite => {
            let total = truncated_sum(|l| {
                Ok(integral_of_derivative(f, l, 0.0, 1.0, tol)?.norm_sqr())
            })?;
            Ok(real::sqrt(total))
        }
    }
}

/// `‖f‖_{H^s_*}` from the standard inner product (`Σ_{l≤s} ‖f^(l)‖²` or its
/// `s = ∞` truncation).
pub fn norm_hs_star(f: &Oracle, s: Smoothness, tol: f64) -> Result<f64> {
    match s {
        Smoothness::Finite(s) => {
            let mut acc = 0.0;
            for l in 0..=(s as usize) {
                let d = numeric_l2_norm(f, l, tol)?;
                acc += d * d;
            }
            Ok(real::sqrt(acc))
        }
        Smoothness::Infinite => {
            let total = truncated_sum(|l| {
                let d = numeric_l2_norm(f, l, tol)?;
                Ok(d * d)
            })?;
            Ok(real::sqrt(total))
        }
    }
}

/// `‖f‖_{H^s} / ‖f‖_{H^s_*}`; lies in `[12/13, 1]` for every `f`.
pub fn equivalence_ratio(f: &Oracle, s: Smoothness, tol: f64) -> Result<f64> {
    Ok(norm_hs(f, s, tol)? / norm_hs_star(f, s, tol)?)
}

/// Exact periodic norm `(Σ_h |f̂_h|² a_h)^{1/2}` over the finite support.
pub fn periodic_norm_from_coeffs(c: &TrigPolynomial, s: u32) -> f64 {
    let mut acc = 0.0;
    for &(h, v) in &c.coeffs {
        acc += v.norm_sqr() * fourier_weight(h, s);
    }
    real::sqrt(acc)
}

/// Reproducing kernel of `H̃^s`:
/// `K̃_s(x,t) = 1 + (-1)^{s-1} B*_{2s}({x-t})`.
pub fn kernel_periodic(s: u32, x: f64, t: f64) -> Result<f64> {
    let b = bernoulli::eval(2 * s as usize, real::fract_unit(x - t))?;
    let sign = if s % 2 == 1 { 1.0 } else { -1.0 };
    Ok(1.0 + sign * b)
}

/// `K̃_s(·, t)` as an oracle, for reproducing-property checks.
pub fn kernel_periodic_oracle(s: u32, t: f64) -> Result<Oracle> {
    let sign = if s % 2 == 1 { 1.0 } else { -1.0 };
    Ok(make_sum(vec![
        Oracle::constant(1.0),
        crate::oracle::make_scaled(
            Complex64::new(sign, 0.0),
            make_periodic_bernoulli(2 * s as usize, t)?,
        ),
    ]))
}

/// Reproducing kernel of the full space `H^s`: the periodic kernel plus the
/// Bernoulli block, `K_s(·,t) = K̃_s(·,t) + Σ_{j=1}^s B*_j(t)·B*_j`.
pub fn kernel_full_oracle(s: u32, t: f64) -> Result<Oracle> {
    let mut parts = alloc::vec![kernel_periodic_oracle(s, t)?];
    for j in 1..=s as usize {
        parts.push(crate::oracle::make_scaled(
            Complex64::new(bernoulli::eval(j, t)?, 0.0),
            crate::oracle::make_bernoulli(j)?,
        ));
    }
    Ok(make_sum(parts))
}

/// Partial sum of the `H^∞` kernel `K_∞(x,t) = Σ_j B*_j(x) B*_j(t)`;
/// terms decay geometrically.
pub fn kernel_hinfty(x: f64, t: f64, j_max: usize) -> Result<f64> {
    let mut acc = 0.0;
    for j in 0..=j_max {
        acc += bernoulli::eval(j, x)? * bernoulli::eval(j, t)?;
    }
    Ok(acc)
}

/// Norm bound of the embedding `H̃^s → C([0,1])`:
/// `sqrt(1 + 2ζ(2s)/(2π)^{2s})`.
pub fn embedding_norm_bound(s: u32) -> f64 {
    let z = zeta_even(2 * s as usize).expect("2s is a positive even integer in range");
    real::sqrt(1.0 + 2.0 * z / real::powi(2.0 * PI, 2 * s as i32))
}

/// Row-sum maxima of the mixed Gram matrix of the `⟨·,·⟩_s`-orthonormal basis
/// under `⟨·,·⟩_{s,*}`.
#[derive(Clone, Copy, Debug)]
pub struct GramSummary {
    /// Max row sum over the exponential rows.
    pub m_s1: f64,
    /// Max row sum over the Bernoulli rows (tail included).
    pub m_s2: f64,
    /// `max(m_s1, m_s2) ≥ 1`; `‖f‖_* ≤ sqrt(M_s)·‖f‖`.
    pub m_s: f64,
    pub truncation_h: u64,
    /// Analytic bound on the dropped `|h| > H` part, included in `m_s2`.
    pub tail_bound: f64,
}

/// `⟨e*_h, e*_h⟩_{s,*} = Σ_{m=0}^s (2π|h|)^{-2m}`.
pub fn gram_exponential_diag(h: i64, s: u32) -> f64 {
    debug_assert!(h != 0);
    let w = real::powi(2.0 * PI * h.unsigned_abs() as f64, -2);
    let mut acc = 0.0;
    let mut p = 1.0;
    for _ in 0..=s {
        acc += p;
        p *= w;
    }
    acc
}

/// `|⟨B*_j, e*_h⟩_{s,*}| = (2π|h|)^{-(s+j)} Σ_{l=0}^{j-1} (2π|h|)^{2l}`
/// (`0` for `j = 0`).
pub fn gram_bernoulli_exponential_abs(j: u32, h: i64, s: u32) -> f64 {
    debug_assert!(h != 0);
    if j == 0 {
        return 0.0;
    }
    let w = 2.0 * PI * h.unsigned_abs() as f64;
    let mut acc = 0.0;
    for l in 0..j {
        acc += real::powi(w, 2 * l as i32 - (s + j) as i32);
    }
    acc
}

/// `⟨B*_m, B*_j⟩_{s,*}` via zeta at even integers and the parity rule.
pub fn gram_bernoulli_pair(m: u32, j: u32, s: u32) -> f64 {
    debug_assert!(m <= s && j <= s);
    if m == j {
        // ‖B*_m‖²_{s,*} = 1 + 2 Σ_{l=1}^m ζ(2l)/(2π)^{2l}
        let mut acc = 1.0;
        for l in 1..=m as usize {
            acc += 2.0 * zeta_even(2 * l).expect("range") / real::powi(2.0 * PI, 2 * l as i32);
        }
        return acc;
    }
    let hi = m.max(j);
    let lo = m.min(j);
    if lo == 0 {
        return 0.0; // ⟨B*_m, B*_0⟩_{s,*} = δ_{m0}
    }
    let gap = (hi - lo) as usize;
    if gap % 2 == 1 {
        return 0.0;
    }
    let sign = if (gap / 2) % 2 == 0 { 1.0 } else { -1.0 };
    let mut acc = 0.0;
    for l in 1..=lo as usize {
        let arg = gap + 2 * l;
        acc += zeta_even(arg).expect("range") / real::powi(2.0 * PI, arg as i32);
    }
    2.0 * sign * acc
}

/// Evaluates the appendix row sums with `|h| ≤ h_max` plus an analytic tail.
pub fn gram_summary(s: u32, h_max: u64) -> GramSummary {
    // exponential rows: diagonal + Bernoulli couplings, maximized over h
    let mut m_s1 = 0.0_f64;
    for h in 1..=h_max as i64 {
        let mut row = gram_exponential_diag(h, s);
        for j in 0..=s {
            row += gram_bernoulli_exponential_abs(j, h, s);
        }
        if row > m_s1 {
            m_s1 = row;
        }
        // rows decay in |h|; once clearly below the max, stop scanning
        if h > 8 && row < 0.5 * m_s1 {
            break;
        }
    }

    // Bernoulli rows: h-sum (±h) truncated at h_max, analytic tail added
    let mut m_s2 = 0.0_f64;
    let mut tail_at_max = 0.0_f64;
    let kappa = 4.0 * PI * PI / (4.0 * PI * PI - 1.0);
    for j in 0..=s {
        let mut row = 0.0;
        if j > 0 {
            for h in 1..=h_max as i64 {
                row += 2.0 * gram_bernoulli_exponential_abs(j, h, s);
            }
            // |⟨B*_j, e*_h⟩| ≤ κ (2π|h|)^{-p}, p = s-j+2 ≥ 2; integral comparison
            let p = (s - j + 2) as f64;
            let tail = 2.0 * kappa * real::powf(2.0 * PI, -p) * real::powf(h_max as f64, 1.0 - p)
                / (p - 1.0);
            row += tail;
            if row > m_s2 {
                tail_at_max = tail;
            }
        }
        for m in 0..=s {
            row += real::abs(gram_bernoulli_pair(m, j, s));
        }
        if row > m_s2 {
            m_s2 = row;
        }
    }

    GramSummary {
        m_s1,
        m_s2,
        m_s: m_s1.max(m_s2),
        truncation_h: h_max,
        tail_bound: tail_at_max,
    }
}
