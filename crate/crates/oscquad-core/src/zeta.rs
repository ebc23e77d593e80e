//! Riemann and Hurwitz zeta by Euler–Maclaurin summation.
//!
//! `zeta_even` goes through the Bernoulli identity
//! `ζ(2m) = (-1)^{m+1} B*_{2m}(0) (2π)^{2m} / 2` and is exact to the table;
//! the general evaluator targets 1e-14 relative accuracy for `x > 1`.

use crate::bernoulli;
use crate::error::{Error, Result};
use crate::real;

/// Riemann zeta `ζ(x)` for `x > 1`.
pub fn zeta(x: f64) -> Result<f64> {
    if !(x > 1.0) {
        return Err(Error::Domain("zeta requires x > 1"));
    }
    hurwitz_zeta(x, 1.0)
}

/// `ζ(2m)` at a positive even integer, via the Bernoulli table.
pub fn zeta_even(two_m: usize) -> Result<f64> {
    bernoulli::zeta_even_from_table(two_m)
}

/// Hurwitz zeta `ζ(x, q) = Σ_{j≥0} (q+j)^{-x}` for `x > 1`, `q > 0`.
pub fn hurwitz_zeta(x: f64, q: f64) -> Result<f64> {
    if !(x > 1.0) || !(q > 0.0) {
        return Err(Error::Domain("hurwitz_zeta requires x > 1 and q > 0"));
    }
    // direct head
    let n = 16usize;
    let mut acc = 0.0_f64;
    for j in 0..n {
        acc += real::powf(q + j as f64, -x);
    }
    let t = q + n as f64;
    // integral tail and boundary term
    acc += real::powf(t, 1.0 - x) / (x - 1.0);
    acc += 0.5 * real::powf(t, -x);
    // Euler–Maclaurin correction: Σ_r B_{2r}/(2r)! · (x)(x+1)···(x+2r-2) · t^{-x-2r+1}
    let mut rising = x; // product up to x+2r-2
    let mut tp = real::powf(t, -x - 1.0);
    let mut prev = f64::INFINITY;
    for r in 1..=20usize {
        let term = bernoulli::eval(2 * r, 0.0).expect("table degree") * rising * tp;
        // asymptotic series: stop when terms stop shrinking
        if real::abs(term) >= prev {
            break;
        }
        acc += term;
        prev = real::abs(term);
        if prev < 1e-18 * real::abs(acc) {
            break;
        }
        rising *= (x + (2 * r - 1) as f64) * (x + 2.0 * r as f64);
        tp /= t * t;
    }
    Ok(acc)
}
