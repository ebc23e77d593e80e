//! Algorithms against their certified bounds and against the truth oracle:
//! norm contraction under periodization, bound dominance on normalized
//! inputs, the extremal function attaining the exact series, budget honesty.

mod common;

use common::{random_mixture, random_polynomial, Rng};
use num_complex::Complex64;
use oscquad_core::algorithms::{
    algo_per, algo_tay_per, extremal_qmc_function, modified_qmc, periodizer, qmc,
};
use oscquad_core::error_analysis::{
    modified_qmc_error, per_error_bound, qmc_worst_case_error, tay_per_error_bound,
};
use oscquad_core::oracle::{make_scaled, make_sum, make_trig, Oracle};
use oscquad_core::quadrature::reference_integral;
use oscquad_core::sobolev::{fourier_weight, norm_hs, periodic_norm_from_coeffs};
use oscquad_core::Smoothness;

const TOL: f64 = 1e-12;

fn normalized(f: &Oracle, s: u32) -> Oracle {
    let n = norm_hs(f, Smoothness::Finite(s), TOL).unwrap();
    make_scaled(Complex64::new(1.0 / n, 0.0), f.clone())
}

#[test]
fn periodization_contracts_the_norm() {
    let mut rng = Rng::new(11);
    for rep in 0..8 {
        let f = if rep % 2 == 0 {
            random_polynomial(&mut rng, 6)
        } else {
            random_mixture(&mut rng)
        };
        for j in 1..=3u32 {
            let p = periodizer(&f, j as usize).unwrap();
            let remainder = make_sum(vec![
                f.clone(),
                make_scaled(Complex64::new(-1.0, 0.0), p.to_oracle()),
            ]);
            let contracted = norm_hs(&remainder, Smoothness::Finite(j), TOL).unwrap();
            let original = norm_hs(&f, Smoothness::Finite(j), TOL).unwrap();
            assert!(
                contracted <= original + 1e-8,
                "rep={rep} j={j}: {contracted} vs {original}"
            );
        }
    }
}

#[test]
fn per_rule_error_dominated_by_bound() {
    let mut rng = Rng::new(19);
    for rep in 0..6 {
        let raw = random_polynomial(&mut rng, 5);
        for s in 1..=2u32 {
            let f = normalized(&raw, s);
            for k in [1i64, 3, -5] {
                for n in [2 * s as usize, 2 * s as usize + 3, 2 * s as usize + 8] {
                    let run = algo_per(&f, n, k, s).unwrap();
                    let exact = reference_integral(&f, k, TOL).unwrap().value;
                    let err = (exact - run.value).norm();
                    let bound = per_error_bound(n as u64, k, s).unwrap();
                    assert!(
                        err <= bound + 1e-8,
                        "rep={rep} s={s} k={k} n={n}: {err} vs {bound}"
                    );
                }
            }
        }
    }
}

#[test]
fn tay_per_error_dominated_by_bound() {
    let mut rng = Rng::new(23);
    for _ in 0..6 {
        let raw = random_polynomial(&mut rng, 5);
        for s in 2..=3u32 {
            let f = normalized(&raw, s);
            for k in [0i64, 1, 4] {
                for n in 1..=s as usize {
                    let run = algo_tay_per(&f, n, k, Smoothness::Finite(s)).unwrap();
                    let exact = reference_integral(&f, k, TOL).unwrap().value;
                    let err = (exact - run.value).norm();
                    let bound = tay_per_error_bound(n as u64, k, Smoothness::Finite(s)).unwrap();
                    assert!(err <= bound + 1e-8, "s={s} k={k} n={n}: {err} vs {bound}");
                }
            }
        }
    }
}

#[test]
fn extremal_function_attains_the_series() {
    // matched truncation: the achieved error equals the truncated dual norm
    // to near machine precision for every (n,k,s)
    for s in 1..=2u32 {
        for (n, k) in [(1usize, 0i64), (3, 1), (5, -3), (8, 3)] {
            let j_max = 2_000;
            let f = extremal_qmc_function(n, k, s, j_max);
            assert!((periodic_norm_from_coeffs(&f, s) - 1.0).abs() < 1e-12);
            let oracle = make_trig(f.coeffs.clone());
            let run = qmc(&oracle, n, k).unwrap();
            // I_k(f) = f̂_k = 0 by construction
            let achieved = run.value.norm();
            let truncated: f64 = (1..=j_max as i64)
                .flat_map(|j| [k + j * n as i64, k - j * n as i64])
                .map(|h| 1.0 / fourier_weight(h, s))
                .sum::<f64>()
                .sqrt();
            assert!(
                (achieved - truncated).abs() < 1e-10,
                "n={n} k={k} s={s}: {achieved} vs {truncated}"
            );
        }
    }

    // s = 2 tails are negligible already at J = 10^4: the achieved error
    // matches the exact series to 1e-8
    for (n, k) in [(3usize, 1i64), (6, 3)] {
        let f = extremal_qmc_function(n, k, 2, 10_000);
        let oracle = make_trig(f.coeffs.clone());
        let run = qmc(&oracle, n, k).unwrap();
        let exact = qmc_worst_case_error(n as u64, k, 2).value;
        assert!(
            (run.value.norm() - exact).abs() < 1e-8,
            "n={n} k={k}: {} vs {exact}",
            run.value.norm()
        );
    }
}

#[test]
fn hybrid_rule_exactness_tracks_its_reported_error() {
    // on the extremal input the hybrid branch achieves its reported error
    let (n, k, s) = (6usize, 2i64, 1u32);
    let f = extremal_qmc_function(n, k, s, 40_000);
    let oracle = make_trig(f.coeffs.clone());
    let run = modified_qmc(&oracle, n, k).unwrap();
    let reported = modified_qmc_error(n as u64, k, s).value;
    assert!((run.value.norm() - reported).abs() < 2e-6);
}

#[test]
fn budget_honesty_across_algorithms() {
    let mut rng = Rng::new(5);
    let f = random_polynomial(&mut rng, 6);
    for s in 1..=3u32 {
        for n in 1..=(2 * s as usize + 6) {
            for k in [0i64, 2, -7] {
                if let Ok(run) = qmc(&f, n, k) {
                    assert!(run.log.len() <= n);
                    assert_eq!(run.log.max_order(), Some(0));
                }
                if k != 0 {
                    if let Ok(run) = algo_per(&f, n, k, s) {
                        assert!(run.log.len() <= n, "per n={n} k={k} s={s}");
                        assert!(run.log.max_order().unwrap() < s as usize);
                    }
                }
                if let Ok(run) = algo_tay_per(&f, n, k, Smoothness::Finite(s)) {
                    assert!(run.log.len() <= n, "tayper n={n} k={k} s={s}");
                    assert!(run.log.max_order().unwrap() < s as usize);
                }
            }
        }
    }
}
