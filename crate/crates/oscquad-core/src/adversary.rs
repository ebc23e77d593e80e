//! Constructive lower-bound machinery: cosine bands, sample-point refinement,
//! scaled bumps, and the fooling-function certificate.
//!
//! Given any `n` sample points (and derivative orders up to `s-1`), the
//! construction produces a unit-norm function `f` that vanishes with all its
//! derivatives through order `s-1` at every sample point, yet has
//! `|I_k(f)| ≥ c_s/(n+|k|)^s`. Since `±f` are indistinguishable from the
//! samples, no algorithm using that information can beat `|I_k(f)|`; the
//! certificate carries all quantities needed to check this numerically.

use crate::error::Result;
use crate::oracle::{make_scaled, make_sum, Bump, Oracle};
use crate::quadrature::{integral_of_derivative, numeric_l2_norm_on, reference_integral};
use crate::real;
use crate::sobolev::norm_hs;
use crate::Smoothness;
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;

/// Ordered disjoint subintervals of `[0,1]`.
#[derive(Clone, Debug)]
pub struct BandPartition {
    pub k: i64,
    pub intervals: Vec<(f64, f64)>,
}

impl BandPartition {
    pub fn total_length(&self) -> f64 {
        self.intervals.iter().map(|&(a, b)| b - a).sum()
    }
}

/// Maximal subintervals of `[0,1]` where `|cos(2πkx)| ≥ 1/√2`.
///
/// For `k = 0` the single interval `[0,1]`; for `k ≠ 0` there are `2|k|+1`
/// of them with lengths `1/(8|k|), 1/(4|k|), …, 1/(4|k|), 1/(8|k|)` and total
/// length `1/2`.
pub fn cosine_bands(k: i64) -> BandPartition {
    if k == 0 {
        return BandPartition {
            k,
            intervals: alloc::vec![(0.0, 1.0)],
        };
    }
    let kk = k.unsigned_abs() as f64;
    let quarter = 1.0 / (8.0 * kk);
    let mut intervals = Vec::with_capacity(2 * k.unsigned_abs() as usize + 1);
    for m in 0..=(2 * k.unsigned_abs()) {
        let center = m as f64 / (2.0 * kk);
        let a = (center - quarter).max(0.0);
        let b = (center + quarter).min(1.0);
        intervals.push((a, b));
    }
    BandPartition { k, intervals }
}

/// Splits bands at interior sample points; duplicates and boundary hits are
/// deduplicated, zero-length pieces dropped. Total length is preserved.
pub fn refine_with_samples(bands: &BandPartition, points: &[f64]) -> BandPartition {
    let mut pts: Vec<f64> = points.to_vec();
    pts.sort_by(|a, b| a.partial_cmp(b).expect("finite sample points"));
    pts.dedup_by(|a, b| (*a - *b).abs() < 1e-15);
    let mut intervals = Vec::with_capacity(bands.intervals.len() + pts.len());
    for &(a, b) in &bands.intervals {
        let mut lo = a;
        for &x in pts.iter().filter(|&&x| x > a && x < b) {
            if x - lo > 1e-14 {
                intervals.push((lo, x));
                lo = x;
            }
        }
        if b - lo > 1e-14 {
            intervals.push((lo, b));
        }
    }
    BandPartition {
        k: bands.k,
        intervals,
    }
}

fn raw_profile(s: u32) -> Oracle {
    // cos^{2s}(πx/2) supported on [-1,1]
    Oracle::Bump(Bump::raw(0.0, 1.0, s, 1.0, 1.0))
}

/// `d_s` with `‖d_s·(cos²(πx/2))^s‖_{H^s([-1,1])} = 1`, the norm on `[-1,1]`
/// taken with mean-value terms for orders below `s` and the L2 norm of the
/// order-`s` derivative. Computed by quadrature.
pub fn bump_normalizer(s: u32, tol: f64) -> Result<f64> {
    let phi = raw_profile(s);
    let mut sq = 0.0;
    for l in 0..s as usize {
        sq += integral_of_derivative(&phi, l, -1.0, 1.0, tol)?.norm_sqr();
    }
    let d = numeric_l2_norm_on(&phi, s as usize, -1.0, 1.0, tol)?;
    sq += d * d;
    Ok(1.0 / real::sqrt(sq))
}

/// Closed form of [`bump_normalizer`] through the finite cosine expansion of
/// `cos^{2s}`: only the mean term and the order-`s` L2 term survive, and the
/// harmonics are orthonormal over `[-1,1]`.
pub fn bump_normalizer_closed(s: u32) -> f64 {
    let cos_coeffs = Bump::raw(0.0, 1.0, s, 1.0, 1.0).cos_coefficients().to_vec();
    let mut sq = 4.0 * cos_coeffs[0] * cos_coeffs[0]; // (∫Φ)² = (2c₀)²
    for (m, &cm) in cos_coeffs.iter().enumerate().skip(1) {
        sq += cm * cm * real::powi(m as f64 * PI, 2 * s as i32);
    }
    1.0 / real::sqrt(sq)
}

/// `(c̃_s, c_s)` by quadrature:
/// `c̃_s = d_s/2^{s+3/2} · ∫_{-1}^{1} (cos²(πt/2))^s dt`, `c_s = c̃_s/(2·4^s)`.
pub fn lower_bound_constant(s: u32, tol: f64) -> Result<(f64, f64)> {
    let d = bump_normalizer(s, tol)?;
    let mass = integral_of_derivative(&raw_profile(s), 0, -1.0, 1.0, tol)?.re;
    let c_tilde = d * mass / real::powf(2.0, s as f64 + 1.5);
    Ok((c_tilde, c_tilde / (2.0 * real::powi(4.0, s as i32))))
}

/// Closed form of [`lower_bound_constant`] (`∫ Φ = 2c₀`).
pub fn lower_bound_constant_closed(s: u32) -> (f64, f64) {
    let d = bump_normalizer_closed(s);
    let mass = 2.0 * Bump::raw(0.0, 1.0, s, 1.0, 1.0).cos_coefficients()[0];
    let c_tilde = d * mass / real::powf(2.0, s as f64 + 1.5);
    (c_tilde, c_tilde / (2.0 * real::powi(4.0, s as i32)))
}

/// A checkable witness of the lower bound: a unit-norm function vanishing at
/// the samples with large `|I_k|`.
#[derive(Clone, Debug)]
pub struct LowerBoundCertificate {
    /// The fooling function, normalized to unit `H^s` norm.
    pub f: Oracle,
    /// Recomputed `H^s` norm of the stored `f`.
    pub norm_hs: f64,
    /// `|Re I_k(f)|` of the stored `f`.
    pub integral_abs: f64,
    /// `max_{j, l<s} |f^(l)(x_j)|`.
    pub sample_residuals: f64,
    /// `c_s / max(1, n+|k|)^s`.
    pub bound_value: f64,
    /// Factor applied to the raw bump sum to reach unit norm.
    pub rescale: f64,
    pub k: i64,
    pub s: u32,
    pub n_samples: usize,
}

impl LowerBoundCertificate {
    /// All three certificate inequalities at the stated slacks.
    pub fn is_valid(&self) -> bool {
        self.sample_residuals < 1e-12
            && self.norm_hs <= 1.0 + 1e-9
            && self.integral_abs >= self.bound_value - 1e-9
    }
}

/// Builds the fooling function for wave number `k`, smoothness `s`, and the
/// sample points an adversary was shown.
///
/// On each refined band of length `1/n_i` with midpoint `y_i` the bump
/// `sgn(cos(2πk y_i))/(2n_i)^s · Φ(2n_i(x-y_i))` is placed; the sum is then
/// normalized to unit `H^s` norm (scaling preserves the vanishing samples and
/// only strengthens the witness).
pub fn fooling_function(
    k: i64,
    s: u32,
    samples: &[f64],
    tol: f64,
) -> Result<LowerBoundCertificate> {
    let d_s = bump_normalizer(s, tol)?;
    let bands = refine_with_samples(&cosine_bands(k), samples);
    let mut bumps = Vec::with_capacity(bands.intervals.len());
    for &(a, b) in &bands.intervals {
        let half = 0.5 * (b - a);
        let y = 0.5 * (a + b);
        let c = real::cos(2.0 * PI * k as f64 * y);
        let sgn = if c >= 0.0 { 1.0 } else { -1.0 };
        // (2n_i)^{-s} = half^s
        let scale = d_s * real::powf(half, s as f64);
        bumps.push(Oracle::Bump(Bump::raw(y, half, s, sgn, scale)));
    }
    let raw = make_sum(bumps);
    let raw_norm = norm_hs(&raw, Smoothness::Finite(s), tol)?;
    let rescale = 1.0 / raw_norm;
    let f = make_scaled(Complex64::new(rescale, 0.0), raw);

    let norm_post = norm_hs(&f, Smoothness::Finite(s), tol)?;
    let integral = reference_integral(&f, k, tol)?;
    let mut residual = 0.0_f64;
    for &x in samples {
        for l in 0..s as usize {
            residual = residual.max(f.eval(l, x)?.norm());
        }
    }

    let (_, c_s) = lower_bound_constant(s, tol)?;
    let denom = real::powi((samples.len() as i64 + k.unsigned_abs() as i64).max(1) as f64, s as i32);

    Ok(LowerBoundCertificate {
        f,
        norm_hs: norm_post,
        integral_abs: real::abs(integral.value.re),
        sample_residuals: residual,
        bound_value: c_s / denom,
        rescale,
        k,
        s,
        n_samples: samples.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-12;

    #[test]
    fn band_shapes() {
        let b0 = cosine_bands(0);
        assert_eq!(b0.intervals, alloc::vec![(0.0, 1.0)]);

        let b1 = cosine_bands(1);
        assert_eq!(b1.intervals.len(), 3);
        let expect = [(0.0, 0.125), (0.375, 0.625), (0.875, 1.0)];
        for (got, want) in b1.intervals.iter().zip(expect.iter()) {
            assert!((got.0 - want.0).abs() < 1e-15 && (got.1 - want.1).abs() < 1e-15);
        }

        for k in 1..=20i64 {
            let b = cosine_bands(k);
            assert_eq!(b.intervals.len(), 2 * k as usize + 1);
            assert!((b.total_length() - 0.5).abs() < 1e-12, "k={k}");
            // every band really satisfies |cos(2πkx)| ≥ 1/√2 at midpoint
            for &(a, b_) in &b.intervals {
                let y = 0.5 * (a + b_);
                assert!((2.0 * PI * k as f64 * y).cos().abs() >= 1.0 / 2.0f64.sqrt() - 1e-12);
            }
        }
    }

    #[test]
    fn refinement_splits_and_preserves_length() {
        let b1 = cosine_bands(1);
        let r = refine_with_samples(&b1, &[0.5]);
        assert_eq!(r.intervals.len(), 4);
        assert!((r.total_length() - 0.5).abs() < 1e-14);
        assert!(r.intervals.contains(&(0.375, 0.5)));
        assert!(r.intervals.contains(&(0.5, 0.625)));

        // points outside all bands change nothing
        let r2 = refine_with_samples(&b1, &[0.2, 0.8]);
        assert_eq!(r2.intervals.len(), 3);

        // k=0 split into thirds
        let r3 = refine_with_samples(&cosine_bands(0), &[1.0 / 3.0, 2.0 / 3.0]);
        assert_eq!(r3.intervals.len(), 3);
        for &(a, b) in &r3.intervals {
            assert!((b - a - 1.0 / 3.0).abs() < 1e-14);
        }

        // duplicates and band-boundary points are dropped
        let r4 = refine_with_samples(&b1, &[0.5, 0.5, 0.375]);
        assert_eq!(r4.intervals.len(), 4);
    }

    #[test]
    fn normalizer_matches_closed_form() {
        for s in 1..=5u32 {
            let q = bump_normalizer(s, TOL).unwrap();
            let c = bump_normalizer_closed(s);
            assert!((q - c).abs() < 1e-11 * c, "s={s}: {q} vs {c}");
        }
        // s=1: d₁ = 1/sqrt(1 + π²/4)
        let d1 = bump_normalizer_closed(1);
        assert!((d1 - 1.0 / (1.0 + PI * PI / 4.0).sqrt()).abs() < 1e-14);
    }

    #[test]
    fn normalization_round_trip() {
        // the scaled profile really has unit norm on [-1,1]
        use crate::quadrature::{integral_of_derivative, numeric_l2_norm_on};
        for s in 1..=4u32 {
            let d = bump_normalizer(s, TOL).unwrap();
            let phi = Oracle::Bump(Bump::raw(0.0, 1.0, s, 1.0, d));
            let mut sq = 0.0;
            for l in 0..s as usize {
                sq += integral_of_derivative(&phi, l, -1.0, 1.0, TOL).unwrap().norm_sqr();
            }
            let l2 = numeric_l2_norm_on(&phi, s as usize, -1.0, 1.0, TOL).unwrap();
            sq += l2 * l2;
            assert!((sq.sqrt() - 1.0).abs() < 1e-10, "s={s}: {}", sq.sqrt());
        }
    }

    #[test]
    fn lower_bound_constants() {
        let (ct, c) = lower_bound_constant(1, TOL).unwrap();
        let d1 = bump_normalizer_closed(1);
        // ∫cos² over [-1,1] = 1
        assert!((ct - d1 / 2.0f64.powf(2.5)).abs() < 1e-12, "{ct}");
        assert!((c - ct / 8.0).abs() < 1e-15);
        assert!((c - 0.01187).abs() < 5e-5, "{c}");

        // monotone decreasing in s
        let mut prev = f64::INFINITY;
        for s in 1..=8u32 {
            let (_, cs) = lower_bound_constant_closed(s);
            assert!(cs < prev, "s={s}");
            prev = cs;
        }

        // quadrature and closed form agree
        for s in 1..=4u32 {
            let (qa, qb) = lower_bound_constant(s, TOL).unwrap();
            let (ca, cb) = lower_bound_constant_closed(s);
            assert!((qa - ca).abs() < 1e-11 * ca);
            assert!((qb - cb).abs() < 1e-11 * cb);
        }
    }

    #[test]
    fn worst_split_at_equal_lengths() {
        // min Σ n_i^{-s-1} over Σ n_i^{-1} = 1/2 with m parts is (1/2^{s+1}) m^{-s}
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for s in 1..=3i32 {
            for m in [1usize, 3, 7] {
                let optimal = 0.5f64.powi(s + 1) / (m as f64).powi(s);
                for _ in 0..50 {
                    // random feasible lengths summing to 1/2
                    let mut lens: Vec<f64> = (0..m).map(|_| next() + 0.05).collect();
                    let total: f64 = lens.iter().sum();
                    for l in &mut lens {
                        *l *= 0.5 / total;
                    }
                    let val: f64 = lens.iter().map(|&l| l.powi(s + 1)).sum();
                    assert!(val >= optimal - 1e-12, "s={s} m={m}: {val} < {optimal}");
                }
            }
        }
    }

    #[test]
    fn fooling_certificate_no_samples_k0() {
        let cert = fooling_function(0, 1, &[], TOL).unwrap();
        // raw integral before normalization is d₁/4
        let d1 = bump_normalizer_closed(1);
        let raw_integral = cert.integral_abs / cert.rescale;
        assert!((raw_integral - d1 / 4.0).abs() < 1e-10, "{raw_integral}");
        assert!(cert.is_valid());
        assert_eq!(cert.sample_residuals, 0.0);
    }

    #[test]
    fn fooling_certificate_k1_band_arithmetic() {
        let cert = fooling_function(1, 1, &[], TOL).unwrap();
        // Σ n_i^{-s-1} over lengths {1/8, 1/4, 1/8} is 3/32; the raw integral
        // dominates c̃₁·3/32
        let (ct, _) = lower_bound_constant_closed(1);
        let raw_integral = cert.integral_abs / cert.rescale;
        assert!(raw_integral >= ct * 3.0 / 32.0 - 1e-12, "{raw_integral}");
        assert!(cert.is_valid());
    }

    #[test]
    fn fooling_residuals_vanish_at_samples() {
        let samples = [0.1, 0.375, 0.5, 0.9];
        let cert = fooling_function(1, 2, &samples, TOL).unwrap();
        assert!(cert.sample_residuals < 1e-12);
        assert!(cert.norm_hs <= 1.0 + 1e-9);
        assert!(cert.is_valid());
    }
}
