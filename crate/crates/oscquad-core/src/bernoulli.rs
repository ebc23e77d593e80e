//! Normalized Bernoulli polynomials `B*_m = B_m/m!` and exact oscillatory
//! integrals of the basis functions.
//!
//! `B*_m` is pinned down by `B*_0 ≡ 1`, `[B*_m]' = B*_{m-1}` and
//! `∫₀¹ B*_m = 0` for `m ≥ 1`; the monomial coefficients follow from that
//! recurrence and are generated once at compile time up to degree
//! [`MAX_DEGREE`]. Coefficient magnitudes shrink like `(2π)^{-m}`, so the
//! table is exact to machine precision over the degrees the algorithms use.
//!
//! The closed forms
//!
//! * `I_k(e_h) = δ_{hk}` for `e_h(x) = e^{2πihx}`,
//! * `I_k(B*_m) = -(2πik)^{-m}` for `k ≠ 0`, `0` for `k = 0`,
//! * `I_k((x-1/2)^l / l!)` by parity (`k = 0`) or the finite integration-by-parts
//!   sum (`k ≠ 0`),
//!
//! are the exact carriers every quadrature rule in this crate reduces to.

use crate::error::{Error, Result};
use crate::real;
use num_complex::Complex64;

/// Highest Bernoulli degree kept in the table.
pub const MAX_DEGREE: usize = 60;

const N: usize = MAX_DEGREE + 1;

/// `COEFFS[m][j]` is the coefficient of `x^j` in `B*_m(x)`.
static COEFFS: [[f64; N]; N] = build_table();

const fn build_table() -> [[f64; N]; N] {
    let mut c = [[0.0_f64; N]; N];
    c[0][0] = 1.0;
    let mut m = 1;
    while m < N {
        // antiderivative of B*_{m-1}
        let mut j = 1;
        while j <= m {
            c[m][j] = c[m - 1][j - 1] / j as f64;
            j += 1;
        }
        // constant term forcing zero mean
        let mut mean = 0.0;
        let mut j = 1;
        while j <= m {
            mean += c[m][j] / (j + 1) as f64;
            j += 1;
        }
        c[m][0] = -mean;
        m += 1;
    }
    c
}

/// Monomial coefficients of `B*_m` (length `m+1`).
pub fn coefficients(m: usize) -> Result<&'static [f64]> {
    if m > MAX_DEGREE {
        return Err(Error::DegreeOverflow {
            degree: m,
            max: MAX_DEGREE,
        });
    }
    Ok(&COEFFS[m][..=m])
}

/// `B*_m(x)` by Horner evaluation of the exact coefficient table.
pub fn eval(m: usize, x: f64) -> Result<f64> {
    let c = coefficients(m)?;
    let mut acc = 0.0;
    for &cj in c.iter().rev() {
        acc = acc * x + cj;
    }
    Ok(acc)
}

/// Partial sum of the Fourier expansion of `B*_m`, `m ≥ 1`:
/// `-(2πi)^{-m} Σ_{0<|l|≤H} e^{2πilx}/l^m`.
///
/// Converges to [`eval`] as `H → ∞` for `m ≥ 2`, pointwise a.e. for `m = 1`.
pub fn fourier_partial(m: usize, x: f64, h_max: usize) -> Result<Complex64> {
    if m == 0 || h_max == 0 {
        return Err(Error::Domain("fourier_partial requires m >= 1 and H >= 1"));
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for l in 1..=h_max {
        let theta = 2.0 * core::f64::consts::PI * l as f64 * x;
        let e = Complex64::new(real::cos(theta), real::sin(theta));
        let lp = real::powi(l as f64, m as i32);
        // l and -l together; (-1)^m handles the sign of the negative index
        let neg = e.conj() * if m % 2 == 0 { 1.0 } else { -1.0 };
        sum += (e + neg) / lp;
    }
    Ok(-sum / two_pi_i_pow(1, m))
}

/// `(2πik)^m` for `k ≠ 0`, exact unit rotation times a real magnitude.
pub fn two_pi_i_pow(k: i64, m: usize) -> Complex64 {
    debug_assert!(k != 0);
    let mag = real::powi(2.0 * core::f64::consts::PI * k.unsigned_abs() as f64, m as i32);
    // i^m cycles with period 4; negative k conjugates the unit
    let unit = match m % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    };
    let unit = if k < 0 { unit.conj() } else { unit };
    unit * mag
}

/// `I_k(e_h) = ∫₀¹ e^{2πihx} e^{-2πikx} dx`: `1` if `h = k`, else `0`.
pub fn osc_integral_exponential(k: i64, h: i64) -> Complex64 {
    if h == k {
        Complex64::new(1.0, 0.0)
    } else {
        Complex64::new(0.0, 0.0)
    }
}

/// `I_k(B*_m)`: zero mean for `k = 0`, otherwise `-(2πik)^{-m}`.
///
/// For `m = 0` this is `I_k(1) = δ_{k0}`.
pub fn osc_integral_bernoulli(k: i64, m: usize) -> Complex64 {
    if k == 0 {
        if m == 0 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    } else if m == 0 {
        Complex64::new(0.0, 0.0)
    } else {
        -two_pi_i_pow(k, m).inv()
    }
}

/// `(1/l!) ∫₀¹ e^{-2πikx} (x-1/2)^l dx`.
///
/// For `k = 0` only even `l` survive: `(1+(-1)^l) / (2^{l+1} (l+1)!)`.
/// For `k ≠ 0` the finite sum `(2πik)^{-l-1} Σ_{m=0}^{l} i^m (kπ)^m ((-1)^m - 1)/m!`.
pub fn osc_integral_centered_monomial(k: i64, l: usize) -> Complex64 {
    if k == 0 {
        if l % 2 == 1 {
            return Complex64::new(0.0, 0.0);
        }
        let mut denom = 1.0_f64; // 2^{l+1} (l+1)!
        for j in 1..=(l + 1) {
            denom *= 2.0 * j as f64;
        }
        // (1+(-1)^l) = 2 for the surviving even l
        return Complex64::new(2.0 / denom, 0.0);
    }
    let kpi = k as f64 * core::f64::consts::PI;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut fact = 1.0_f64;
    let mut kpi_pow = 1.0_f64;
    for m in 0..=l {
        if m > 0 {
            fact *= m as f64;
            kpi_pow *= kpi;
        }
        if m % 2 == 1 {
            // ((-1)^m - 1) = -2 for odd m, 0 for even m
            let unit = match m % 4 {
                1 => Complex64::new(0.0, 1.0),
                _ => Complex64::new(0.0, -1.0),
            };
            sum += unit * (kpi_pow * (-2.0) / fact);
        }
    }
    two_pi_i_pow(k, l + 1).inv() * sum
}

/// `ζ(2m)` from the identity `B*_{2m}(0) = 2(-1)^{m+1} ζ(2m)/(2π)^{2m}`.
pub fn zeta_even_from_table(two_m: usize) -> Result<f64> {
    if two_m == 0 || two_m % 2 != 0 {
        return Err(Error::Domain("zeta_even needs a positive even argument"));
    }
    let m = two_m / 2;
    let b = eval(two_m, 0.0)?;
    let sign = if m % 2 == 0 { -1.0 } else { 1.0 };
    Ok(sign * b * real::powi(2.0 * core::f64::consts::PI, two_m as i32) / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    #[test]
    fn low_degree_values() {
        assert_eq!(eval(0, 0.7).unwrap(), 1.0);
        assert_eq!(eval(1, 0.25).unwrap(), -0.25);
        assert!((eval(2, 0.0).unwrap() - 1.0 / 12.0).abs() < 1e-16);
        assert!((eval(2, 0.5).unwrap() + 1.0 / 24.0).abs() < 1e-16);
    }

    #[test]
    fn degree_overflow_rejected() {
        assert!(matches!(
            eval(MAX_DEGREE + 1, 0.0),
            Err(Error::DegreeOverflow { .. })
        ));
        assert!(eval(MAX_DEGREE, 0.3).is_ok());
    }

    #[test]
    fn derivative_chain_on_coefficients() {
        // [B*_m]^(l) = B*_{m-l}, exact at the coefficient level
        for m in 1..=30usize {
            for l in 0..=m {
                let cm = coefficients(m).unwrap();
                let target = coefficients(m - l).unwrap();
                for (j, &t) in target.iter().enumerate() {
                    // d^l/dx^l x^{j+l} = (j+l)!/j! x^j
                    let mut fall = 1.0;
                    for i in 1..=l {
                        fall *= (j + i) as f64;
                    }
                    let got = cm[j + l] * fall;
                    assert!(
                        (got - t).abs() <= 1e-12 * t.abs().max(1e-300),
                        "m={m} l={l} j={j}: {got} vs {t}"
                    );
                }
            }
        }
    }

    #[test]
    fn boundary_jump() {
        for m in 0..=30usize {
            let jump = eval(m, 1.0).unwrap() - eval(m, 0.0).unwrap();
            let expect = if m == 1 { 1.0 } else { 0.0 };
            assert!((jump - expect).abs() < 1e-12, "m={m}: {jump}");
        }
    }

    #[test]
    fn zero_mean_exact_polynomial_integration() {
        for m in 1..=MAX_DEGREE {
            let c = coefficients(m).unwrap();
            let mean: f64 = c.iter().enumerate().map(|(j, &cj)| cj / (j + 1) as f64).sum();
            assert!(mean.abs() < 1e-14, "m={m}: {mean}");
        }
    }

    #[test]
    fn values_at_zero() {
        // odd degrees vanish, even degrees give zeta(2m)
        for m in 1..=15usize {
            assert!(eval(2 * m + 1, 0.0).unwrap().abs() < 1e-12);
            let b = eval(2 * m, 0.0).unwrap();
            let sign = if m % 2 == 0 { -1.0 } else { 1.0 };
            let zeta = sign * b * (2.0 * PI).powi(2 * m as i32) / 2.0;
            // crude direct-sum check of zeta(2m) with a midpoint integral tail
            let mut direct = 0.0;
            for j in 1..=4000u64 {
                direct += (j as f64).powi(-(2 * m as i32));
            }
            direct += 4000.5f64.powi(1 - 2 * m as i32) / (2.0 * m as f64 - 1.0);
            assert!(
                (zeta - direct).abs() < 1e-9,
                "m={m}: {zeta} vs {direct}"
            );
        }
    }

    #[test]
    fn fourier_partial_converges() {
        let b = fourier_partial(2, 0.0, 100_000).unwrap();
        assert!((b.re - 1.0 / 12.0).abs() < 1e-6, "{}", b.re);
        assert!(b.im.abs() < 1e-12);

        let b1 = fourier_partial(1, 0.5, 10_000).unwrap();
        assert!(b1.norm() < 1e-4);

        let b3 = fourier_partial(3, 0.3, 1_000).unwrap();
        assert!((b3.re - eval(3, 0.3).unwrap()).abs() < 1e-7);
        assert!(b3.im.abs() < 1e-10);
    }

    #[test]
    fn exponential_orthonormality() {
        assert_eq!(osc_integral_exponential(3, 3), Complex64::new(1.0, 0.0));
        assert_eq!(osc_integral_exponential(3, 5), Complex64::new(0.0, 0.0));
        assert_eq!(osc_integral_exponential(0, 0), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn bernoulli_integral_closed_form() {
        assert_eq!(osc_integral_bernoulli(0, 4), Complex64::new(0.0, 0.0));
        let i11 = osc_integral_bernoulli(1, 1);
        assert!((i11 - Complex64::new(0.0, 1.0 / (2.0 * PI))).norm() < 1e-16);
        let i12 = osc_integral_bernoulli(1, 2);
        assert!((i12 - Complex64::new(1.0 / (4.0 * PI * PI), 0.0)).norm() < 1e-16);
        // conjugate symmetry in k
        let a = osc_integral_bernoulli(-3, 5);
        let b = osc_integral_bernoulli(3, 5);
        assert!((a - b.conj()).norm() < 1e-18);
    }

    #[test]
    fn centered_monomial_k0() {
        assert_eq!(osc_integral_centered_monomial(0, 0), Complex64::new(1.0, 0.0));
        assert_eq!(osc_integral_centered_monomial(0, 1), Complex64::new(0.0, 0.0));
        // l=2: (1/2!)∫ (x-1/2)^2 = 1/24
        let v = osc_integral_centered_monomial(0, 2);
        assert!((v.re - 1.0 / 24.0).abs() < 1e-17);
    }

    #[test]
    fn two_pi_i_pow_matches_naive() {
        for &k in &[-3i64, -1, 1, 2, 5] {
            let base = Complex64::new(0.0, 2.0 * PI * k as f64);
            let mut naive = Complex64::new(1.0, 0.0);
            for m in 0..9 {
                let fast = two_pi_i_pow(k, m);
                assert!(
                    (fast - naive).norm() <= 1e-12 * naive.norm(),
                    "k={k} m={m}"
                );
                naive *= base;
            }
        }
    }
}
