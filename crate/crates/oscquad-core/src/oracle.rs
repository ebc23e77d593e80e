//! Integrand model: closed families of functions on `[0,1]` with exact
//! derivatives of every order the analysis needs.
//!
//! Derivatives are analytic per family, never finite-differenced, so tests of
//! order-`s` smoothness do not inject truncation noise. All oracles are
//! immutable after construction and safe to share between threads.

use crate::bernoulli;
use crate::error::{Error, Result};
use crate::real;
use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt::Write as _;
use num_complex::Complex64;

/// `e^{iθ}`.
pub(crate) fn cis(theta: f64) -> Complex64 {
    Complex64::new(real::cos(theta), real::sin(theta))
}

/// A finite Fourier-coefficient mapping `h ↦ f̂_h`; the exact carrier for
/// periodic analysis.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct TrigPolynomial {
    /// `(h, f̂_h)` pairs with distinct `h`.
    pub coeffs: Vec<(i64, Complex64)>,
}

impl TrigPolynomial {
    pub fn new(coeffs: Vec<(i64, Complex64)>) -> Self {
        let mut merged: Vec<(i64, Complex64)> = Vec::with_capacity(coeffs.len());
        for (h, c) in coeffs {
            match merged.iter_mut().find(|(g, _)| *g == h) {
                Some((_, acc)) => *acc += c,
                None => merged.push((h, c)),
            }
        }
        merged.sort_by_key(|&(h, _)| h);
        TrigPolynomial { coeffs: merged }
    }

    /// Coefficient at frequency `h` (zero when absent).
    pub fn coeff(&self, h: i64) -> Complex64 {
        self.coeffs
            .iter()
            .find(|&&(g, _)| g == h)
            .map_or(Complex64::new(0.0, 0.0), |&(_, c)| c)
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        self.coeffs
            .iter()
            .map(|&(h, c)| c * cis(2.0 * PI * h as f64 * x))
            .sum()
    }
}

/// Compactly supported cosine-power bump
/// `x ↦ sign·scale·(cos²(π(x-center)/(2·half_width)))^exponent`
/// on `[center-half_width, center+half_width]`, zero elsewhere.
///
/// The finite cosine expansion of `cos^{2s}` makes every derivative exact;
/// the piecewise extension is `C^{2s-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bump {
    pub center: f64,
    pub half_width: f64,
    pub exponent: u32,
    pub sign: f64,
    pub scale: f64,
    /// `cos^{2s}(u) = cos_coeffs[0] + Σ_m cos_coeffs[m]·cos(2mu)`
    cos_coeffs: Vec<f64>,
}

impl Bump {
    pub(crate) fn raw(center: f64, half_width: f64, exponent: u32, sign: f64, scale: f64) -> Self {
        let s = exponent as usize;
        // binomial row 2s over 4^s
        let mut coeffs = Vec::with_capacity(s + 1);
        let mut binom = 1.0_f64; // C(2s, s-m) starting at m = 0
        for i in 0..s {
            binom = binom * (2 * s - i) as f64 / (i + 1) as f64;
        }
        // binom now C(2s, s); walk m = 0..=s via C(2s, s-m-1) = C(2s,s-m)·(s-m)/(s+m+1)
        let four_pow = real::powi(4.0, exponent as i32);
        coeffs.push(binom / four_pow);
        let mut c = binom;
        for m in 0..s {
            c = c * (s - m) as f64 / (s + m + 1) as f64;
            coeffs.push(2.0 * c / four_pow);
        }
        Bump {
            center,
            half_width,
            exponent,
            sign,
            scale,
            cos_coeffs: coeffs,
        }
    }

    pub(crate) fn cos_coefficients(&self) -> &[f64] {
        &self.cos_coeffs
    }

    fn eval(&self, order: usize, x: f64) -> Complex64 {
        let u = x - self.center;
        if real::abs(u) >= self.half_width {
            return Complex64::new(0.0, 0.0);
        }
        // base angular frequency of the m-th harmonic is m·π/half_width
        let omega = PI / self.half_width;
        let mut acc = 0.0;
        if order == 0 {
            acc += self.cos_coeffs[0];
        }
        let phase = order as f64 * PI / 2.0;
        for (m, &cm) in self.cos_coeffs.iter().enumerate().skip(1) {
            let w = m as f64 * omega;
            acc += cm * real::powi(w, order as i32) * real::cos(w * u + phase);
        }
        Complex64::new(self.sign * self.scale * acc, 0.0)
    }
}

/// The integrand abstraction: evaluates `f^(order)(x)` exactly for each
/// built-in family.
#[derive(Clone, Debug, PartialEq)]
pub enum Oracle {
    /// `e_h(x) = e^{2πihx}`
    Exponential { h: i64 },
    /// Normalized Bernoulli polynomial `B*_m`
    Bernoulli { m: usize },
    /// Periodized `B*_m({x - shift})` with `{·}` the fractional part
    PeriodicBernoulli { m: usize, shift: f64 },
    /// `(x - 1/2)^l / l!`
    CenteredMonomial { l: usize },
    /// `Σ_j c_j x^j`
    Polynomial { coeffs: Vec<Complex64> },
    Trig(TrigPolynomial),
    Bump(Bump),
    Sum(Vec<Oracle>),
    Scaled { factor: Complex64, inner: Box<Oracle> },
}

pub fn make_exponential(h: i64) -> Oracle {
    Oracle::Exponential { h }
}

pub fn make_bernoulli(m: usize) -> Result<Oracle> {
    bernoulli::coefficients(m)?;
    Ok(Oracle::Bernoulli { m })
}

pub fn make_periodic_bernoulli(m: usize, shift: f64) -> Result<Oracle> {
    bernoulli::coefficients(m)?;
    Ok(Oracle::PeriodicBernoulli { m, shift })
}

pub fn make_centered_monomial(l: usize) -> Oracle {
    Oracle::CenteredMonomial { l }
}

pub fn make_polynomial(coeffs: Vec<Complex64>) -> Oracle {
    Oracle::Polynomial { coeffs }
}

pub fn make_trig(coeffs: Vec<(i64, Complex64)>) -> Oracle {
    Oracle::Trig(TrigPolynomial::new(coeffs))
}

/// Bump with support `[center-half_width, center+half_width] ⊆ [0,1]`,
/// peak value `sign·scale`, vanishing at the support edge with all
/// derivatives up to order `2·exponent - 1`.
pub fn make_smooth_bump(
    center: f64,
    half_width: f64,
    exponent: u32,
    sign: f64,
    scale: f64,
) -> Result<Oracle> {
    if !(half_width > 0.0) || exponent < 1 {
        return Err(Error::SupportOutOfRange);
    }
    if center - half_width < -1e-15 || center + half_width > 1.0 + 1e-15 {
        return Err(Error::SupportOutOfRange);
    }
    Ok(Oracle::Bump(Bump::raw(center, half_width, exponent, sign, scale)))
}

pub fn make_sum(parts: Vec<Oracle>) -> Oracle {
    Oracle::Sum(parts)
}

pub fn make_scaled(factor: Complex64, inner: Oracle) -> Oracle {
    Oracle::Scaled {
        factor,
        inner: Box::new(inner),
    }
}

impl Oracle {
    /// Constant function.
    pub fn constant(c: f64) -> Oracle {
        Oracle::Polynomial {
            coeffs: alloc::vec![Complex64::new(c, 0.0)],
        }
    }

    /// `f^(order)(x)`.
    pub fn eval(&self, order: usize, x: f64) -> Result<Complex64> {
        if let Some(max) = self.max_order() {
            if order > max {
                return Err(Error::UnsupportedDerivative { order, max });
            }
        }
        Ok(self.eval_unchecked(order, x))
    }

    fn eval_unchecked(&self, order: usize, x: f64) -> Complex64 {
        match self {
            Oracle::Exponential { h } => {
                if *h == 0 {
                    if order == 0 {
                        Complex64::new(1.0, 0.0)
                    } else {
                        Complex64::new(0.0, 0.0)
                    }
                } else {
                    bernoulli::two_pi_i_pow(*h, order) * cis(2.0 * PI * *h as f64 * x)
                }
            }
            Oracle::Bernoulli { m } => {
                if order > *m {
                    Complex64::new(0.0, 0.0)
                } else {
                    Complex64::new(bernoulli::eval(m - order, x).expect("degree checked"), 0.0)
                }
            }
            Oracle::PeriodicBernoulli { m, shift } => {
                if order > *m {
                    Complex64::new(0.0, 0.0)
                } else {
                    let u = real::fract_unit(x - shift);
                    Complex64::new(bernoulli::eval(m - order, u).expect("degree checked"), 0.0)
                }
            }
            Oracle::CenteredMonomial { l } => {
                if order > *l {
                    Complex64::new(0.0, 0.0)
                } else {
                    let d = l - order;
                    let mut fact = 1.0;
                    for j in 2..=d {
                        fact *= j as f64;
                    }
                    Complex64::new(real::powi(x - 0.5, d as i32) / fact, 0.0)
                }
            }
            Oracle::Polynomial { coeffs } => {
                let d = coeffs.len();
                if order >= d {
                    return Complex64::new(0.0, 0.0);
                }
                let mut acc = Complex64::new(0.0, 0.0);
                for j in (order..d).rev() {
                    let mut fall = 1.0;
                    for i in 0..order {
                        fall *= (j - i) as f64;
                    }
                    acc = acc * x + coeffs[j] * fall;
                }
                acc
            }
            Oracle::Trig(t) => t
                .coeffs
                .iter()
                .map(|&(h, c)| {
                    if h == 0 {
                        if order == 0 {
                            c
                        } else {
                            Complex64::new(0.0, 0.0)
                        }
                    } else {
                        c * bernoulli::two_pi_i_pow(h, order) * cis(2.0 * PI * h as f64 * x)
                    }
                })
                .sum(),
            Oracle::Bump(b) => b.eval(order, x),
            Oracle::Sum(parts) => parts.iter().map(|p| p.eval_unchecked(order, x)).sum(),
            Oracle::Scaled { factor, inner } => *factor * inner.eval_unchecked(order, x),
        }
    }

    /// Highest supported derivative order; `None` means unbounded.
    pub fn max_order(&self) -> Option<usize> {
        match self {
            Oracle::Bump(b) => Some(2 * b.exponent as usize - 1),
            Oracle::PeriodicBernoulli { m, .. } => Some(*m),
            Oracle::Sum(parts) => parts.iter().filter_map(|p| p.max_order()).min(),
            Oracle::Scaled { inner, .. } => inner.max_order(),
            _ => None,
        }
    }

    /// Whether the oracle is known a priori to lie in the periodic subspace
    /// `H̃^s` (all derivative jumps through order `s-1` vanish).
    pub fn periodic_in(&self, s: u32) -> bool {
        match self {
            Oracle::Exponential { .. } | Oracle::Trig(_) => true,
            Oracle::Bernoulli { m } => *m == 0,
            Oracle::PeriodicBernoulli { m, .. } => (s as usize) < *m,
            Oracle::CenteredMonomial { l } => *l == 0,
            Oracle::Polynomial { coeffs } => coeffs.len() <= 1,
            Oracle::Bump(b) => s <= 2 * b.exponent,
            Oracle::Sum(parts) => parts.iter().all(|p| p.periodic_in(s)),
            Oracle::Scaled { inner, .. } => inner.periodic_in(s),
        }
    }

    /// Interior points of `(a, b)` where the piecewise definition changes;
    /// the integrator splits panels there.
    pub fn breakpoints_in(&self, a: f64, b: f64, out: &mut Vec<f64>) {
        match self {
            Oracle::Bump(bp) => {
                for x in [bp.center - bp.half_width, bp.center + bp.half_width] {
                    if x > a && x < b {
                        out.push(x);
                    }
                }
            }
            Oracle::PeriodicBernoulli { shift, .. } => {
                // x = shift + integer inside (a, b)
                let mut n = real::floor(a - shift);
                loop {
                    let x = shift + n;
                    if x >= b {
                        break;
                    }
                    if x > a {
                        out.push(x);
                    }
                    n += 1.0;
                }
            }
            Oracle::Sum(parts) => {
                for p in parts {
                    p.breakpoints_in(a, b, out);
                }
            }
            Oracle::Scaled { inner, .. } => inner.breakpoints_in(a, b, out),
            _ => {}
        }
    }

    /// Stable spec string; the CLI parser round-trips through this.
    pub fn label(&self) -> String {
        let mut s = String::new();
        self.write_label(&mut s);
        s
    }

    fn write_label(&self, out: &mut String) {
        match self {
            Oracle::Exponential { h } => {
                let _ = write!(out, "exp:h={h}");
            }
            Oracle::Bernoulli { m } => {
                let _ = write!(out, "bernoulli:m={m}");
            }
            Oracle::PeriodicBernoulli { m, shift } => {
                let _ = write!(out, "pber:m={m},t={shift}");
            }
            Oracle::CenteredMonomial { l } => {
                let _ = write!(out, "mono:l={l}");
            }
            Oracle::Polynomial { coeffs } => {
                let _ = write!(out, "poly:");
                for (i, c) in coeffs.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    write_complex(out, *c);
                }
            }
            Oracle::Trig(t) => {
                let _ = write!(out, "trig:");
                for (i, (h, c)) in t.coeffs.iter().enumerate() {
                    if i > 0 {
                        out.push(';');
                    }
                    let _ = write!(out, "{h}=");
                    write_complex(out, *c);
                }
            }
            Oracle::Bump(b) => {
                let _ = write!(
                    out,
                    "bump:{},{},{},{},{}",
                    b.center, b.half_width, b.exponent, b.sign, b.scale
                );
            }
            Oracle::Sum(parts) => {
                out.push_str("sum:(");
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        out.push('|');
                    }
                    p.write_label(out);
                }
                out.push(')');
            }
            Oracle::Scaled { factor, inner } => {
                out.push_str("scaled:");
                write_complex(out, *factor);
                out.push_str(":(");
                inner.write_label(out);
                out.push(')');
            }
        }
    }
}

fn write_complex(out: &mut String, c: Complex64) {
    if c.im == 0.0 {
        let _ = write!(out, "{}", c.re);
    } else if c.im < 0.0 {
        let _ = write!(out, "{}-{}i", c.re, -c.im);
    } else {
        let _ = write!(out, "{}+{}i", c.re, c.im);
    }
}
