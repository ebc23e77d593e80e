//! Reference integrator: panel-adaptive Gauss–Legendre quadrature.
//!
//! This is the truth oracle the rest of the crate is tested against, so it is
//! deliberately independent of the oscillatory algorithms: fixed-order
//! Gauss–Legendre panels (order 15), bisected adaptively, with panels never
//! wider than `1/(4·max(1,|k|))` so the oscillation is always resolved, and
//! panel edges seeded at the integrand's breakpoints.
//!
//! Nodes and weights are generated by Newton iteration on the Legendre
//! polynomial rather than from a hardcoded table.

use crate::error::{Error, Result};
use crate::oracle::{cis, Oracle};
use crate::real;
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;

/// Outcome of an adaptive integration.
#[derive(Clone, Copy, Debug)]
pub struct QuadratureResult {
    pub value: Complex64,
    /// Conservative bound on the absolute error (sum of accepted panel
    /// refinement differences).
    pub abs_error_estimate: f64,
    /// Number of bisections performed.
    pub subdivisions: usize,
}

#[derive(Clone, Debug)]
pub struct QuadratureOptions {
    /// Absolute tolerance on the whole integral.
    pub abs_tol: f64,
    /// Relative tolerance against the integrand's L1-like magnitude.
    pub rel_tol: f64,
    /// Hard cap on panel width (resolves oscillation).
    pub max_panel_width: f64,
    /// Bisection budget; exceeding it reports `ToleranceNotMet`.
    pub max_subdivisions: usize,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        QuadratureOptions {
            abs_tol: crate::DEFAULT_TOL,
            rel_tol: 1e-13,
            max_panel_width: f64::INFINITY,
            max_subdivisions: 1 << 20,
        }
    }
}

const GL_ORDER: usize = 15;

/// Gauss–Legendre rule on `[-1,1]`, generated at construction.
struct GaussRule {
    nodes: [f64; GL_ORDER],
    weights: [f64; GL_ORDER],
}

impl GaussRule {
    fn new() -> Self {
        let n = GL_ORDER;
        let mut nodes = [0.0; GL_ORDER];
        let mut weights = [0.0; GL_ORDER];
        for i in 0..n {
            // Chebyshev-like initial guess, then Newton on P_n
            let mut x = real::cos(PI * (i as f64 + 0.75) / (n as f64 + 0.5));
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_pair(n, x);
                dp = d;
                let step = p / d;
                x -= step;
                if real::abs(step) < 1e-16 {
                    let (p2, d2) = legendre_pair(n, x);
                    dp = d2;
                    x -= p2 / d2;
                    break;
                }
            }
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        GaussRule { nodes, weights }
    }

    /// Panel value plus the magnitude proxy `Σ w_i |f(x_i)|` (the rounding
    /// noise of a cancelling oscillatory sum scales with the latter).
    fn apply<F: Fn(f64) -> Complex64>(&self, f: &F, a: f64, b: f64) -> (Complex64, f64) {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let mut acc = Complex64::new(0.0, 0.0);
        let mut abs = 0.0;
        for i in 0..GL_ORDER {
            let v = f(mid + half * self.nodes[i]) * self.weights[i];
            acc += v;
            abs += v.norm();
        }
        (acc * half, abs * half.abs())
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0_f64;
    let mut p1 = x;
    for j in 2..=n {
        let jf = j as f64;
        let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Adaptive Gauss–Legendre integration of `f` over `[a, b]`.
///
/// `breakpoints` lists known kinks/jumps; panel edges are placed there first.
pub fn integrate<F: Fn(f64) -> Complex64>(
    f: F,
    a: f64,
    b: f64,
    breakpoints: &[f64],
    opts: &QuadratureOptions,
) -> Result<QuadratureResult> {
    debug_assert!(b > a);
    let rule = GaussRule::new();
    let total_width = b - a;

    // initial panel edges: breakpoints, then uniform refinement to meet the cap
    let mut edges: Vec<f64> = Vec::new();
    edges.push(a);
    let mut sorted: Vec<f64> = breakpoints
        .iter()
        .copied()
        .filter(|&x| x > a && x < b)
        .collect();
    sorted.sort_by(|p, q| p.partial_cmp(q).expect("finite breakpoints"));
    for x in sorted {
        if x - edges[edges.len() - 1] > 1e-15 * total_width {
            edges.push(x);
        }
    }
    edges.push(b);

    let mut panels: Vec<(f64, f64, Complex64)> = Vec::new();
    let mut scale = 0.0_f64; // L1-like magnitude for the relative tolerance
    for w in edges.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let pieces = if opts.max_panel_width.is_finite() {
            let need = (hi - lo) / opts.max_panel_width;
            (real::ceil(need) as usize).max(1)
        } else {
            1
        };
        for i in 0..pieces {
            let pa = lo + (hi - lo) * i as f64 / pieces as f64;
            let pb = lo + (hi - lo) * (i + 1) as f64 / pieces as f64;
            let (v, vabs) = rule.apply(&f, pa, pb);
            scale += vabs;
            panels.push((pa, pb, v));
        }
    }

    let tol = opts.abs_tol.max(opts.rel_tol * scale);
    let width_floor = total_width * 1e-15;

    let mut value = Complex64::new(0.0, 0.0);
    let mut err = 0.0_f64;
    let mut subdivisions = 0usize;

    while let Some((pa, pb, pv)) = panels.pop() {
        let mid = 0.5 * (pa + pb);
        let (lv, labs) = rule.apply(&f, pa, mid);
        let (rv, rabs) = rule.apply(&f, mid, pb);
        let diff = (pv - (lv + rv)).norm();
        subdivisions += 1;
        let width = pb - pa;
        let local_tol = tol * (width / total_width);
        let noise = 100.0 * f64::EPSILON * (labs + rabs);
        if diff <= local_tol.max(noise) || width <= width_floor {
            value += lv + rv;
            err += diff;
        } else {
            if subdivisions >= opts.max_subdivisions {
                // drain what is left at face value and report failure
                let mut left_err = diff;
                for &(_, _, v) in &panels {
                    left_err += v.norm();
                }
                return Err(Error::ToleranceNotMet {
                    achieved: err + left_err,
                    requested: tol,
                });
            }
            panels.push((pa, mid, lv));
            panels.push((mid, pb, rv));
        }
    }

    Ok(QuadratureResult {
        value,
        abs_error_estimate: err,
        subdivisions,
    })
}

/// Truth oracle for `I_k(f) = ∫₀¹ f(x) e^{-2πikx} dx`.
///
/// Panels never exceed `1/(4·max(1,|k|))` in width.
pub fn reference_integral(f: &Oracle, k: i64, tol: f64) -> Result<QuadratureResult> {
    let mut bp = Vec::new();
    f.breakpoints_in(0.0, 1.0, &mut bp);
    let opts = QuadratureOptions {
        abs_tol: tol,
        max_panel_width: 1.0 / (4.0 * (k.unsigned_abs().max(1)) as f64),
        ..QuadratureOptions::default()
    };
    let kk = k as f64;
    integrate(
        |x| f.eval(0, x).expect("order 0 always supported") * cis(-2.0 * PI * kk * x),
        0.0,
        1.0,
        &bp,
        &opts,
    )
}

/// `‖f^(order)‖_{L2[0,1]}` by the same adaptive scheme applied to `|f^(order)|²`.
pub fn numeric_l2_norm(f: &Oracle, order: usize, tol: f64) -> Result<f64> {
    numeric_l2_norm_on(f, order, 0.0, 1.0, tol)
}

pub(crate) fn numeric_l2_norm_on(
    f: &Oracle,
    order: usize,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<f64> {
    if let Some(max) = f.max_order() {
        if order > max {
            return Err(Error::UnsupportedDerivative { order, max });
        }
    }
    let mut bp = Vec::new();
    f.breakpoints_in(a, b, &mut bp);
    let opts = QuadratureOptions {
        abs_tol: tol,
        ..QuadratureOptions::default()
    };
    let r = integrate(
        |x| {
            let v = f.eval(order, x).expect("order validated");
            Complex64::new(v.norm_sqr(), 0.0)
        },
        a,
        b,
        &bp,
        &opts,
    )?;
    Ok(real::sqrt(r.value.re.max(0.0)))
}

/// `∫_a^b f^(order)(x) dx` with breakpoint seeding; shared plumbing for the
/// Sobolev inner products.
pub(crate) fn integral_of_derivative(
    f: &Oracle,
    order: usize,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<Complex64> {
    if let Some(max) = f.max_order() {
        if order > max {
            return Err(Error::UnsupportedDerivative { order, max });
        }
    }
    let mut bp = Vec::new();
    f.breakpoints_in(a, b, &mut bp);
    let opts = QuadratureOptions {
        abs_tol: tol,
        ..QuadratureOptions::default()
    };
    Ok(integrate(
        |x| f.eval(order, x).expect("order validated"),
        a,
        b,
        &bp,
        &opts,
    )?
    .value)
}

/// `∫_a^b f^(df)(x) · conj(g^(dg)(x)) dx`.
pub(crate) fn l2_pairing(
    f: &Oracle,
    df: usize,
    g: &Oracle,
    dg: usize,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<Complex64> {
    for (o, d) in [(f, df), (g, dg)] {
        if let Some(max) = o.max_order() {
            if d > max {
                return Err(Error::UnsupportedDerivative { order: d, max });
            }
        }
    }
    let mut bp = Vec::new();
    f.breakpoints_in(a, b, &mut bp);
    g.breakpoints_in(a, b, &mut bp);
    let opts = QuadratureOptions {
        abs_tol: tol,
        ..QuadratureOptions::default()
    };
    Ok(integrate(
        |x| {
            f.eval(df, x).expect("order validated") * g.eval(dg, x).expect("order validated").conj()
        },
        a,
        b,
        &bp,
        &opts,
    )?
    .value)
}
